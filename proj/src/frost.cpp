#include "anchor/frost.hpp"

#include <algorithm>
#include <stdexcept>

#include "anchor/hash.hpp"

namespace anchor {

CommitmentList SignerNonces::public_list() const {
    CommitmentList list;
    list.owner = owner;
    list.entries.reserve(pairs.size());
    for (const auto& p : pairs) list.entries.emplace_back(p.D, p.E);
    return list;
}

SignerNonces preprocess(uint32_t pi, uint32_t owner, SeededRng& rng) {
    if (pi == 0) throw std::invalid_argument("preprocess: pi must be >= 1");
    SignerNonces out;
    out.owner = owner;
    out.pairs.reserve(pi);
    for (uint32_t j = 0; j < pi; ++j) {
        NoncePair p;
        p.d = rng.scalar_nonzero();
        p.e = rng.scalar_nonzero();
        p.D = GroupPoint::mul_generator(p.d);
        p.E = GroupPoint::mul_generator(p.e);
        out.pairs.push_back(std::move(p));
    }
    return out;
}

std::set<uint32_t> select_signers(const std::set<uint32_t>& members, const Scalar& beacon,
                                  size_t count) {
    if (count > members.size()) throw std::invalid_argument("select_signers: count exceeds members");
    std::vector<std::pair<Scalar, uint32_t>> ranked;
    ranked.reserve(members.size());
    for (uint32_t id : members) {
        ByteWriter w;
        w.u32(id);
        auto bb = beacon.to_bytes();
        w.raw(std::span<const uint8_t>(bb.data(), bb.size()));
        ranked.emplace_back(hash_to_scalar(DomainTag::BeaconSelect, w.bytes()), id);
    }
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    std::set<uint32_t> out;
    for (size_t i = 0; i < count; ++i) out.insert(ranked[i].second);
    return out;
}

namespace {

void append_commitment_list(ByteWriter& w, const std::vector<CommitmentEntry>& B) {
    w.u32(static_cast<uint32_t>(B.size()));
    for (const auto& entry : B) {
        w.u32(entry.index);
        auto db = entry.D.to_bytes();
        w.raw(std::span<const uint8_t>(db.data(), db.size()));
        auto eb = entry.E.to_bytes();
        w.raw(std::span<const uint8_t>(eb.data(), eb.size()));
    }
}

}  // namespace

Scalar binding_value(uint32_t signer, std::span<const uint8_t> m,
                     const std::vector<CommitmentEntry>& B) {
    ByteWriter w;
    w.u32(signer);
    w.var_bytes(m);
    append_commitment_list(w, B);
    return hash_to_scalar(DomainTag::Binding, w.bytes());
}

Scalar lagrange_coefficient(const std::set<uint32_t>& signers, uint32_t i) {
    if (!signers.count(i)) throw std::invalid_argument("lagrange_coefficient: i not in set");
    for (uint32_t j : signers)
        if (j == 0) throw std::invalid_argument("lagrange_coefficient: zero index");
    Scalar num(1);
    Scalar den(1);
    for (uint32_t j : signers) {
        if (j == i) continue;
        num = num * Scalar(j);
        den = den * (Scalar(j) - Scalar(i));
    }
    return num * den.inverse();
}

SigningSession::SigningSession(Bytes message, std::set<uint32_t> signers,
                               std::vector<CommitmentEntry> B, GroupPoint group_key,
                               GroupPoint tweaked_key)
    : message_(std::move(message)),
      signers_(std::move(signers)),
      B_(std::move(B)),
      group_key_(std::move(group_key)),
      tweaked_key_(std::move(tweaked_key)) {
    if (signers_.empty()) throw std::invalid_argument("SigningSession: empty signer set");
    std::sort(B_.begin(), B_.end(),
              [](const CommitmentEntry& a, const CommitmentEntry& b) { return a.index < b.index; });
    if (B_.size() != signers_.size()) throw std::invalid_argument("SigningSession: B does not cover S");
    {
        auto it = signers_.begin();
        for (const auto& entry : B_) {
            if (entry.index != *it) throw std::invalid_argument("SigningSession: B does not cover S");
            ++it;
        }
    }
    for (const auto& entry : B_) {
        rho_.emplace(entry.index, binding_value(entry.index, message_, B_));
        lambda_.emplace(entry.index, lagrange_coefficient(signers_, entry.index));
    }
    for (const auto& entry : B_) R_ = R_ + entry.D + entry.E.mul(rho_.at(entry.index));
    c_ = signature_challenge(DomainTag::Challenge, message_, R_, tweaked_key_);
}

Scalar SigningSession::rho(uint32_t index) const {
    auto it = rho_.find(index);
    if (it == rho_.end()) throw std::invalid_argument("rho: index not in signer set");
    return it->second;
}

Scalar SigningSession::lagrange(uint32_t index) const {
    auto it = lambda_.find(index);
    if (it == lambda_.end()) throw std::invalid_argument("lagrange: index not in signer set");
    return it->second;
}

GroupPoint SigningSession::commitment_share(uint32_t index) const {
    for (const auto& entry : B_) {
        if (entry.index == index) return entry.D + entry.E.mul(rho_.at(index));
    }
    throw std::invalid_argument("commitment_share: index not in signer set");
}

Scalar SigningSession::partial_sign(uint32_t my_index, NoncePair& nonces, const Scalar& share) {
    if (!signers_.count(my_index)) throw std::invalid_argument("partial_sign: not a selected signer");
    if (nonces.used) throw std::logic_error("partial_sign: nonce pair already consumed");
    for (const auto& entry : B_) {
        if (entry.index == my_index && (entry.D != nonces.D || entry.E != nonces.E))
            throw std::invalid_argument("partial_sign: nonce pair does not match B");
    }
    Scalar z = nonces.d + nonces.e * rho_.at(my_index) + lambda_.at(my_index) * share * c_;
    // consume before the partial leaves: mark used and wipe the secret halves
    nonces.used = true;
    nonces.d = Scalar();
    nonces.e = Scalar();
    return z;
}

bool SigningSession::verify_partial(uint32_t index, const Scalar& z,
                                    const GroupPoint& verification_share) const {
    if (!signers_.count(index)) return false;
    GroupPoint lhs = GroupPoint::mul_generator(z);
    GroupPoint rhs = commitment_share(index) + verification_share.mul(c_ * lambda_.at(index));
    return lhs == rhs;
}

void SigningSession::add_partial(uint32_t index, const Scalar& z,
                                 const GroupPoint& verification_share) {
    if (!signers_.count(index)) return;
    if (partials_.count(index) || cheaters_.count(index)) return;
    GroupPoint lhs = GroupPoint::mul_generator(z);
    GroupPoint rhs = commitment_share(index) + verification_share.mul(c_ * lambda_.at(index));
    if (lhs == rhs) {
        partials_.emplace(index, z);
    } else {
        cheaters_.insert(index);
        proofs_.push_back(PartialProof{index, false, lhs, rhs});
    }
}

SigningOutcome SigningSession::aggregate() const {
    std::set<uint32_t> cheaters = cheaters_;
    std::vector<PartialProof> proofs = proofs_;
    for (uint32_t i : signers_) {
        if (!partials_.count(i) && !cheaters.count(i)) {
            cheaters.insert(i);
            proofs.push_back(PartialProof{i, true, GroupPoint(), GroupPoint()});
        }
    }
    if (!cheaters.empty()) return SigningAbort{std::move(cheaters), std::move(proofs)};
    Scalar z;
    for (const auto& [index, zi] : partials_) z = z + zi;
    return SchnorrSignature{z, R_};
}

std::optional<std::set<uint32_t>> next_signer_set(const std::set<uint32_t>& members,
                                                  const std::set<uint32_t>& current,
                                                  const std::set<uint32_t>& cheaters,
                                                  const std::set<uint32_t>& excluded) {
    std::set<uint32_t> next;
    for (uint32_t i : current)
        if (!cheaters.count(i)) next.insert(i);
    size_t want = current.size();
    for (uint32_t i : members) {
        if (next.size() >= want) break;
        if (next.count(i) || current.count(i) || cheaters.count(i) || excluded.count(i)) continue;
        next.insert(i);
    }
    if (next.size() < want) return std::nullopt;
    return next;
}

}  // namespace anchor
