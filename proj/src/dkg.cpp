#include "anchor/dkg.hpp"

#include <algorithm>

namespace anchor {

DealerOutput deal(uint32_t t, uint32_t n, uint32_t dealer_index, SeededRng& rng) {
    if (t == 0 || t > n) throw std::invalid_argument("deal: need 1 <= t <= n");
    if (dealer_index == 0 || dealer_index > n) throw std::invalid_argument("deal: dealer index out of range");
    DealerOutput out;
    out.dealer = dealer_index;
    out.coefficients.reserve(t);
    for (uint32_t k = 0; k < t; ++k) out.coefficients.push_back(rng.scalar_nonzero());
    out.commitments.reserve(t);
    for (const Scalar& a : out.coefficients) out.commitments.push_back(GroupPoint::mul_generator(a));
    out.shares.reserve(n);
    for (uint32_t j = 1; j <= n; ++j) {
        // Horner evaluation of f(j)
        Scalar acc = out.coefficients.back();
        Scalar x(j);
        for (size_t k = out.coefficients.size() - 1; k-- > 0;) acc = acc * x + out.coefficients[k];
        out.shares.push_back(acc);
    }
    return out;
}

bool verify_share(uint32_t /*dealer*/, uint32_t recipient, const Scalar& share,
                  const std::vector<GroupPoint>& commitments) {
    if (commitments.empty()) throw std::invalid_argument("verify_share: empty commitment list");
    if (recipient == 0) throw std::invalid_argument("verify_share: recipient index out of range");
    Scalar x(recipient);
    GroupPoint rhs = commitments.back();
    for (size_t k = commitments.size() - 1; k-- > 0;) rhs = rhs.mul(x) + commitments[k];
    return GroupPoint::mul_generator(share) == rhs;
}

GroupPoint DkgResult::verification_share(uint32_t index) const {
    GroupPoint acc;
    Scalar x(index);
    for (const auto& [dealer, commits] : verification_commitments) {
        GroupPoint part = commits.back();
        for (size_t k = commits.size() - 1; k-- > 0;) part = part.mul(x) + commits[k];
        acc = acc + part;
    }
    return acc;
}

DkgSession::DkgSession(uint32_t n, uint32_t t, uint32_t my_index) : n_(n), t_(t), my_index_(my_index) {
    if (t == 0 || t > n) throw std::invalid_argument("DkgSession: need 1 <= t <= n");
    if (my_index > n) throw std::invalid_argument("DkgSession: index out of range");
}

void DkgSession::receive_commitments(uint32_t dealer, std::vector<GroupPoint> commitments) {
    if (phase_ != DkgPhase::Dealing) return;
    if (dealer == 0 || dealer > n_) return;
    if (commitments_.count(dealer)) return;  // first broadcast wins; the channel is ordered
    if (commitments.size() != t_) {
        structurally_bad_.insert(dealer);
        misbehaving_.insert(dealer);
        return;
    }
    commitments_.emplace(dealer, std::move(commitments));
}

void DkgSession::receive_share(uint32_t dealer, const Scalar& share) {
    if (phase_ != DkgPhase::Dealing) return;
    if (dealer == 0 || dealer > n_ || my_index_ == 0) return;
    shares_.emplace(dealer, share);
}

std::vector<Verdict> DkgSession::file_complaints() {
    if (phase_ != DkgPhase::Dealing) throw std::logic_error("file_complaints: wrong phase");
    phase_ = DkgPhase::Complaining;
    std::vector<Verdict> verdicts(n_, Verdict::NoComplaint);
    for (uint32_t j = 1; j <= n_; ++j) {
        if (j == my_index_) continue;
        auto ci = commitments_.find(j);
        if (ci == commitments_.end()) {
            // silent or malformed dealer: goes straight into the misbehaving set
            verdicts[j - 1] = Verdict::MissingShare;
            misbehaving_.insert(j);
            continue;
        }
        if (my_index_ == 0) continue;  // observers cannot judge private shares
        auto si = shares_.find(j);
        if (si == shares_.end()) {
            verdicts[j - 1] = Verdict::MissingShare;
        } else if (!verify_share(j, my_index_, si->second, ci->second)) {
            verdicts[j - 1] = Verdict::BadShare;
        }
    }
    return verdicts;
}

void DkgSession::note_complaint(uint32_t dealer, uint32_t complainer) {
    if (find_complaint(dealer, complainer)) return;
    complaints_.push_back(Complaint{dealer, complainer});
    misbehaving_.insert(dealer);
}

DkgSession::Complaint* DkgSession::find_complaint(uint32_t dealer, uint32_t complainer) {
    for (auto& c : complaints_)
        if (c.dealer == dealer && c.complainer == complainer) return &c;
    return nullptr;
}

void DkgSession::receive_complaint_vector(uint32_t sender, const std::vector<Verdict>& verdicts) {
    if (phase_ != DkgPhase::Complaining) return;
    if (sender == 0 || sender > n_ || verdicts.size() != n_) return;
    for (uint32_t j = 1; j <= n_; ++j) {
        if (verdicts[j - 1] == Verdict::NoComplaint || j == sender) continue;
        note_complaint(j, sender);
    }
}

std::vector<std::pair<uint32_t, Scalar>> DkgSession::answer_complaints(const DealerOutput& my_deal) {
    if (phase_ != DkgPhase::Complaining) throw std::logic_error("answer_complaints: wrong phase");
    phase_ = DkgPhase::Answering;
    std::vector<std::pair<uint32_t, Scalar>> answers;
    if (my_deal.dealer != my_index_) throw std::invalid_argument("answer_complaints: not my deal");
    for (const auto& c : complaints_) {
        if (c.dealer != my_index_) continue;
        if (c.complainer == 0 || c.complainer > my_deal.shares.size()) continue;
        answers.emplace_back(c.complainer, my_deal.shares[c.complainer - 1]);
    }
    return answers;
}

std::vector<std::pair<uint32_t, Scalar>> DkgSession::close_complaint_phase() {
    if (phase_ != DkgPhase::Complaining) throw std::logic_error("close_complaint_phase: wrong phase");
    phase_ = DkgPhase::Answering;
    return {};
}

void DkgSession::receive_answer(uint32_t dealer, uint32_t complainer, const Scalar& share) {
    if (phase_ != DkgPhase::Answering) return;
    Complaint* c = find_complaint(dealer, complainer);
    if (!c || c->answered) return;
    c->answered = true;
    auto ci = commitments_.find(dealer);
    if (ci == commitments_.end() || structurally_bad_.count(dealer)) return;  // nothing to verify against
    c->answer_valid = verify_share(dealer, complainer, share, ci->second);
    if (c->answer_valid && complainer == my_index_) {
        // the revealed share is the complainer's true share; adopt it
        shares_[dealer] = share;
    }
}

std::set<uint32_t> DkgSession::qualified() const {
    std::set<uint32_t> s;
    for (uint32_t j = 1; j <= n_; ++j)
        if (!misbehaving_.count(j)) s.insert(j);
    return s;
}

DkgResult DkgSession::finalize() {
    if (phase_ == DkgPhase::Done) throw std::logic_error("finalize: already done");
    phase_ = DkgPhase::Done;

    // A dealer stays misbehaving unless every complaint against it was answered
    // with a share that passes its own commitments.
    for (uint32_t j = 1; j <= n_; ++j) {
        if (structurally_bad_.count(j) || !commitments_.count(j)) continue;
        bool any_complaint = false;
        bool all_good = true;
        for (const auto& c : complaints_) {
            if (c.dealer != j) continue;
            any_complaint = true;
            if (!c.answered || !c.answer_valid) all_good = false;
        }
        if (any_complaint && all_good) misbehaving_.erase(j);
    }

    std::set<uint32_t> s0 = qualified();
    if (s0.size() < t_) throw DkgUnrecoverable("dkg: fewer than t qualified dealers");

    DkgResult result;
    result.qualified = s0;
    for (uint32_t j : s0) {
        auto ci = commitments_.find(j);
        if (ci == commitments_.end()) throw DkgUnrecoverable("dkg: qualified dealer without commitments");
        result.group_pubkey = result.group_pubkey + ci->second.front();
        result.verification_commitments.emplace(j, ci->second);
    }
    if (my_index_ != 0) {
        Scalar sum;
        for (uint32_t j : s0) {
            auto si = shares_.find(j);
            if (si == shares_.end()) throw DkgUnrecoverable("dkg: missing share from qualified dealer");
            sum = sum + si->second;
        }
        result.my_share = sum;
    }
    return result;
}

}  // namespace anchor
