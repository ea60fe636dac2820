#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "anchor/point.hpp"
#include "anchor/rng.hpp"
#include "anchor/scalar.hpp"
#include "anchor/schnorr.hpp"

namespace anchor {

// FROST two-round threshold signing over shares from the DKG: a preprocessing
// round publishes one-time nonce commitments, the signing round binds them to
// the message and produces verifiable partial signatures. Misbehaving signers
// are named with proof material so the round can restart without them.

struct NoncePair {
    Scalar d;
    Scalar e;
    GroupPoint D;
    GroupPoint E;
    bool used = false;
};

struct CommitmentEntry {
    uint32_t index = 0;
    GroupPoint D;
    GroupPoint E;
};

// Public half of a preprocessing batch.
struct CommitmentList {
    uint32_t owner = 0;
    std::vector<std::pair<GroupPoint, GroupPoint>> entries;
    size_t cursor = 0;  // next unused position; only advances
};

// Secret half, retained by the signer.
struct SignerNonces {
    uint32_t owner = 0;
    std::vector<NoncePair> pairs;

    CommitmentList public_list() const;
};

// Generate pi single-use nonce pairs. The caller passes an rng already forked
// per participant so equal seeds do not collide across signers.
SignerNonces preprocess(uint32_t pi, uint32_t owner, SeededRng& rng);

// Deterministic signer selection: rank members by
// hash(BEACON-SELECT, index || beacon) ascending and take `count`.
std::set<uint32_t> select_signers(const std::set<uint32_t>& members, const Scalar& beacon,
                                  size_t count);

// rho_l = H1(l, m, B) over the canonical encoding of B (ascending index order).
Scalar binding_value(uint32_t signer, std::span<const uint8_t> m,
                     const std::vector<CommitmentEntry>& B);

// lambda_i = prod_{j in S, j != i} j * (j - i)^-1  (interpolation at zero).
Scalar lagrange_coefficient(const std::set<uint32_t>& signers, uint32_t i);

struct PartialProof {
    uint32_t index = 0;
    bool missing = false;
    GroupPoint lhs;  // z_i * G
    GroupPoint rhs;  // R_i + c * lambda_i * Y_i
};

struct SigningAbort {
    std::set<uint32_t> cheaters;
    std::vector<PartialProof> proofs;
};

using SigningOutcome = std::variant<SchnorrSignature, SigningAbort>;

class SigningSession {
public:
    // B must cover exactly `signers`; entries are canonicalized to ascending
    // index order. The challenge hashes the tweaked output key, the partials
    // verify against shares of the untweaked group key.
    SigningSession(Bytes message, std::set<uint32_t> signers, std::vector<CommitmentEntry> B,
                   GroupPoint group_key, GroupPoint tweaked_key);

    const Bytes& message() const { return message_; }
    const std::set<uint32_t>& signers() const { return signers_; }
    const std::vector<CommitmentEntry>& commitments() const { return B_; }
    const GroupPoint& group_commitment() const { return R_; }  // R = sum(D_l + rho_l E_l)
    const Scalar& challenge() const { return c_; }             // c = H2(m || R || Q)
    Scalar rho(uint32_t index) const;
    GroupPoint commitment_share(uint32_t index) const;  // R_i = D_i + rho_i E_i
    Scalar lagrange(uint32_t index) const;

    // z_i = d + e*rho_i + lambda_i * s_i * c. Consumes the nonce pair: the pair
    // is marked used and its secrets wiped before the partial is returned;
    // reuse raises std::logic_error.
    Scalar partial_sign(uint32_t my_index, NoncePair& nonces, const Scalar& share);

    // z_i * G == R_i + c * lambda_i * Y_i.
    bool verify_partial(uint32_t index, const Scalar& z, const GroupPoint& verification_share) const;

    void add_partial(uint32_t index, const Scalar& z, const GroupPoint& verification_share);

    // Abort is an outcome, not a fault: missing or invalid partials name their
    // signer and carry the proof material.
    SigningOutcome aggregate() const;

    const std::set<uint32_t>& cheaters() const { return cheaters_; }

private:
    Bytes message_;
    std::set<uint32_t> signers_;
    std::vector<CommitmentEntry> B_;
    GroupPoint group_key_;
    GroupPoint tweaked_key_;
    GroupPoint R_;
    Scalar c_;
    std::map<uint32_t, Scalar> rho_;
    std::map<uint32_t, Scalar> lambda_;
    std::map<uint32_t, Scalar> partials_;
    std::set<uint32_t> cheaters_;
    std::vector<PartialProof> proofs_;
};

// Restart bookkeeping: drop the named cheaters from the signer set and top it
// back up with the lowest-indexed members not yet tried and not excluded.
// Returns nullopt when the pool cannot refill the set (liveness exhausted).
std::optional<std::set<uint32_t>> next_signer_set(const std::set<uint32_t>& members,
                                                  const std::set<uint32_t>& current,
                                                  const std::set<uint32_t>& cheaters,
                                                  const std::set<uint32_t>& excluded);

}  // namespace anchor
