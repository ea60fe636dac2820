#pragma once

#include <optional>

#include "anchor/hash.hpp"
#include "anchor/point.hpp"
#include "anchor/scalar.hpp"

namespace anchor {

struct SchnorrSignature {
    Scalar z;
    GroupPoint R;

    bool operator==(const SchnorrSignature& o) const { return z == o.z && R == o.R; }
};

// Challenge c = H_tag(m || R || key). `key` is whatever public key the
// verification equation multiplies by c; the threshold path hashes the tweaked
// output key while checking against the aggregated key, so the two are
// parameters rather than one.
Scalar signature_challenge(DomainTag tag, std::span<const uint8_t> m, const GroupPoint& R,
                           const GroupPoint& key);

// z = k + c*sk with R = k*G. Throws std::invalid_argument on sk == 0 or k == 0.
SchnorrSignature schnorr_sign(const Scalar& sk, const GroupPoint& pubkey,
                              std::span<const uint8_t> m, const Scalar& k);

// true iff z*G == R + H(m||R||Y)*Y. Total: malformed inputs yield false.
bool schnorr_verify(const GroupPoint& pubkey, std::span<const uint8_t> m,
                    const SchnorrSignature& sig);

// Core equation z*G == R + c*key, shared by every verification path.
bool verify_with_challenge(const GroupPoint& key, const Scalar& c, const SchnorrSignature& sig);

inline SchnorrSignature schnorr_sign(const Scalar& sk, const GroupPoint& pubkey, const Bytes& m,
                                     const Scalar& k) {
    return schnorr_sign(sk, pubkey, std::span<const uint8_t>(m), k);
}
inline bool schnorr_verify(const GroupPoint& pubkey, const Bytes& m, const SchnorrSignature& sig) {
    return schnorr_verify(pubkey, std::span<const uint8_t>(m), sig);
}

}  // namespace anchor
