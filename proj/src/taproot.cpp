#include "anchor/taproot.hpp"

#include <stdexcept>

#include "anchor/hash.hpp"

namespace anchor {

Scalar tap_tweak(const GroupPoint& pk, std::span<const uint8_t> commitment) {
    ByteWriter w;
    auto pb = pk.to_bytes();
    w.raw(std::span<const uint8_t>(pb.data(), pb.size()));
    w.raw(commitment);
    return hash_to_scalar(DomainTag::TapTweak, w.bytes());
}

TaprootKey tweak_pubkey(const GroupPoint& pk, std::span<const uint8_t> commitment) {
    if (pk.is_identity()) throw std::invalid_argument("tweak_pubkey: identity internal key");
    TaprootKey key;
    key.internal_key = pk;
    key.commitment.assign(commitment.begin(), commitment.end());
    key.tweak = tap_tweak(pk, commitment);
    key.output_key = pk + GroupPoint::mul_generator(key.tweak);
    return key;
}

SchnorrSignature tweak_signature(const SchnorrSignature& sig, std::span<const uint8_t> m,
                                 const TaprootKey& key) {
    Scalar c = signature_challenge(DomainTag::Challenge, m, sig.R, key.output_key);
    return SchnorrSignature{sig.z + c * key.tweak, sig.R};
}

bool verify_key_path(const GroupPoint& output_key, std::span<const uint8_t> m,
                     const SchnorrSignature& sig) {
    if (output_key.is_identity() || sig.R.is_identity()) return false;
    Scalar c = signature_challenge(DomainTag::Challenge, m, sig.R, output_key);
    return verify_with_challenge(output_key, c, sig);
}

SchnorrSignature key_path_sign(const Scalar& secret, std::span<const uint8_t> m,
                               const Scalar& nonce) {
    if (secret.is_zero()) throw std::invalid_argument("key_path_sign: zero secret");
    if (nonce.is_zero()) throw std::invalid_argument("key_path_sign: zero nonce");
    GroupPoint R = GroupPoint::mul_generator(nonce);
    GroupPoint Q = GroupPoint::mul_generator(secret);
    Scalar c = signature_challenge(DomainTag::Challenge, m, R, Q);
    return SchnorrSignature{nonce + c * secret, R};
}

}  // namespace anchor
