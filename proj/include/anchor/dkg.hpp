#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "anchor/point.hpp"
#include "anchor/rng.hpp"
#include "anchor/scalar.hpp"

namespace anchor {

// Joint-Feldman distributed key generation. Every participant deals a Feldman
// sharing of a fresh secret; bad or missing shares are surfaced through a
// complaint round, answered by revealing the disputed share on the broadcast
// channel; the surviving contributions sum into the group key. The qualified
// set is a pure function of broadcast data, so every observer derives the same
// result without trusting anyone's private view.

enum class Verdict : uint8_t {
    NoComplaint = 0,
    BadShare = 1,      // share received but fails the commitment check
    MissingShare = 2,  // dealer never delivered a share (or any commitments)
};

struct DealerOutput {
    uint32_t dealer = 0;                  // index in [1, n]
    std::vector<Scalar> coefficients;     // a_0..a_{t-1}; a_0 is the contributed secret
    std::vector<GroupPoint> commitments;  // A_k = a_k * G
    std::vector<Scalar> shares;           // shares[j-1] = f(j) for recipient j in [1, n]
};

// Sample a degree-(t-1) polynomial with nonzero constant term and evaluate it
// at 1..n. Throws std::invalid_argument unless 1 <= t <= n.
DealerOutput deal(uint32_t t, uint32_t n, uint32_t dealer_index, SeededRng& rng);

// share * G == sum_k i^k * A_k. Throws std::invalid_argument on an empty
// commitment list; callers enforcing a session threshold check length == t.
bool verify_share(uint32_t dealer, uint32_t recipient, const Scalar& share,
                  const std::vector<GroupPoint>& commitments);

struct DkgResult {
    GroupPoint group_pubkey;  // Y = sum of qualified A_j0
    Scalar my_share;          // s_i = sum of qualified shares to me (zero for observers)
    std::map<uint32_t, std::vector<GroupPoint>> verification_commitments;  // qualified dealers
    std::set<uint32_t> qualified;                                          // S0

    // Y_i = sum_{j in S0} sum_k i^k A_jk; the public key a participant's
    // partial signatures verify against.
    GroupPoint verification_share(uint32_t index) const;
};

class DkgUnrecoverable : public std::runtime_error {
public:
    explicit DkgUnrecoverable(const std::string& what) : std::runtime_error(what) {}
};

enum class DkgPhase { Dealing, Complaining, Answering, Done };

// State shared by members and observers: everything that arrived on the
// broadcast channel, and the cheater bookkeeping derived from it.
class DkgSession {
public:
    // my_index in [1, n] for members; 0 for a pure observer.
    DkgSession(uint32_t n, uint32_t t, uint32_t my_index);

    uint32_t n() const { return n_; }
    uint32_t t() const { return t_; }
    uint32_t my_index() const { return my_index_; }
    DkgPhase phase() const { return phase_; }

    // Dealing phase inputs.
    void receive_commitments(uint32_t dealer, std::vector<GroupPoint> commitments);
    void receive_share(uint32_t dealer, const Scalar& share);  // members only

    // Close the dealing phase (all messages in or timeout fired) and produce
    // this member's verdict vector, one entry per dealer. Observers receive an
    // all-NoComplaint vector and only advance the phase.
    std::vector<Verdict> file_complaints();

    void receive_complaint_vector(uint32_t sender, const std::vector<Verdict>& verdicts);

    // Close the complaint phase. Returns the (complainer -> revealed share)
    // answers this dealer must broadcast; empty when nobody complained about us.
    std::vector<std::pair<uint32_t, Scalar>> answer_complaints(const DealerOutput& my_deal);
    std::vector<std::pair<uint32_t, Scalar>> close_complaint_phase();  // observer variant

    void receive_answer(uint32_t dealer, uint32_t complainer, const Scalar& share);

    // Close the answer phase and extract the result. Unanswered complaints
    // condemn their dealer. Throws DkgUnrecoverable when |S0| < t.
    DkgResult finalize();

    const std::set<uint32_t>& misbehaving() const { return misbehaving_; }
    std::set<uint32_t> qualified() const;
    bool has_commitments(uint32_t dealer) const { return commitments_.count(dealer) != 0; }

private:
    struct Complaint {
        uint32_t dealer;
        uint32_t complainer;
        bool answered = false;
        bool answer_valid = false;
    };

    Complaint* find_complaint(uint32_t dealer, uint32_t complainer);
    void note_complaint(uint32_t dealer, uint32_t complainer);

    uint32_t n_;
    uint32_t t_;
    uint32_t my_index_;
    DkgPhase phase_ = DkgPhase::Dealing;

    std::map<uint32_t, std::vector<GroupPoint>> commitments_;
    std::map<uint32_t, Scalar> shares_;  // shares dealt to me (members only)
    std::set<uint32_t> misbehaving_;
    std::vector<Complaint> complaints_;
    std::set<uint32_t> structurally_bad_;  // wrong-shaped commitments; no rehabilitation
};

}  // namespace anchor
