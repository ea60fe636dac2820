#include "anchor/schnorr.hpp"

#include <stdexcept>

namespace anchor {

Scalar signature_challenge(DomainTag tag, std::span<const uint8_t> m, const GroupPoint& R,
                           const GroupPoint& key) {
    ByteWriter w;
    w.raw(m);
    auto rb = R.to_bytes();
    w.raw(std::span<const uint8_t>(rb.data(), rb.size()));
    auto kb = key.to_bytes();
    w.raw(std::span<const uint8_t>(kb.data(), kb.size()));
    return hash_to_scalar(tag, w.bytes());
}

SchnorrSignature schnorr_sign(const Scalar& sk, const GroupPoint& pubkey,
                              std::span<const uint8_t> m, const Scalar& k) {
    if (sk.is_zero()) throw std::invalid_argument("schnorr_sign: zero secret key");
    if (k.is_zero()) throw std::invalid_argument("schnorr_sign: zero nonce");
    GroupPoint R = GroupPoint::mul_generator(k);
    Scalar c = signature_challenge(DomainTag::Sig, m, R, pubkey);
    return SchnorrSignature{k + c * sk, R};
}

bool verify_with_challenge(const GroupPoint& key, const Scalar& c, const SchnorrSignature& sig) {
    if (key.is_identity() || sig.R.is_identity()) return false;
    return GroupPoint::mul_generator(sig.z) == sig.R + key.mul(c);
}

bool schnorr_verify(const GroupPoint& pubkey, std::span<const uint8_t> m,
                    const SchnorrSignature& sig) {
    if (pubkey.is_identity() || sig.R.is_identity()) return false;
    Scalar c = signature_challenge(DomainTag::Sig, m, sig.R, pubkey);
    return verify_with_challenge(pubkey, c, sig);
}

}  // namespace anchor
