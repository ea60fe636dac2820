#pragma once

#include "anchor/point.hpp"
#include "anchor/scalar.hpp"
#include "anchor/schnorr.hpp"

namespace anchor {

// Output-key tweaking: Q = pk + H_TapTweak(pk || commitment) * G. The ledger
// only ever sees Q; anyone holding (pk, commitment) can rebuild and check it.
struct TaprootKey {
    GroupPoint internal_key;  // pk
    Bytes commitment;         // 32-byte checkpoint hash; empty for the plain variant
    Scalar tweak;             // H_TapTweak(pk || commitment)
    GroupPoint output_key;    // Q
};

Scalar tap_tweak(const GroupPoint& pk, std::span<const uint8_t> commitment);

TaprootKey tweak_pubkey(const GroupPoint& pk, std::span<const uint8_t> commitment);
inline TaprootKey tweak_pubkey(const GroupPoint& pk, const Hash32& commitment) {
    return tweak_pubkey(pk, std::span<const uint8_t>(commitment.data(), commitment.size()));
}
// Commitment-free variant: the tweak hashes the internal key alone.
inline TaprootKey tweak_pubkey(const GroupPoint& pk) {
    return tweak_pubkey(pk, std::span<const uint8_t>{});
}

// Additive correction: a signature (z, R) satisfying
//   z*G == R + H2(m||R||Q) * pk
// (a threshold signature whose challenge already binds Q) becomes
//   z' = z + H2(m||R||Q) * tweak,  with  z'*G == R + H2(m||R||Q) * Q.
SchnorrSignature tweak_signature(const SchnorrSignature& sig, std::span<const uint8_t> m,
                                 const TaprootKey& key);

// The ledger's spend check: z*G == R + H2(m||R||Q) * Q. Total; malformed false.
bool verify_key_path(const GroupPoint& output_key, std::span<const uint8_t> m,
                     const SchnorrSignature& sig);

// Single-party spend of an output key Q = secret*G (wallet keys, refunds).
SchnorrSignature key_path_sign(const Scalar& secret, std::span<const uint8_t> m, const Scalar& nonce);

inline bool verify_key_path(const GroupPoint& output_key, const Bytes& m,
                            const SchnorrSignature& sig) {
    return verify_key_path(output_key, std::span<const uint8_t>(m), sig);
}
inline SchnorrSignature key_path_sign(const Scalar& secret, const Bytes& m, const Scalar& nonce) {
    return key_path_sign(secret, std::span<const uint8_t>(m), nonce);
}

}  // namespace anchor
