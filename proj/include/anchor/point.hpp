#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "anchor/bytes.hpp"
#include "anchor/scalar.hpp"

namespace anchor {

// Element of the prime-order group generated by G (secp256k1; cofactor 1, so
// subgroup membership is exactly the on-curve check). Wire form is the 33-byte
// compressed encoding (0x02/0x03 parity prefix + big-endian x); the identity
// has no wire form and serialize() rejects it.
class GroupPoint {
public:
    GroupPoint() : infinity_(true) {}  // identity

    static GroupPoint generator();
    static GroupPoint identity() { return GroupPoint(); }

    // Fixed-base multiple of the generator (windowed precomputation).
    static GroupPoint mul_generator(const Scalar& k);

    static std::optional<GroupPoint> from_bytes(std::span<const uint8_t> data);
    std::array<uint8_t, 33> to_bytes() const;  // throws std::domain_error on identity
    std::string to_hex() const;

    GroupPoint operator+(const GroupPoint& o) const;
    GroupPoint operator-() const;
    GroupPoint operator-(const GroupPoint& o) const { return *this + (-o); }
    GroupPoint mul(const Scalar& k) const;

    bool operator==(const GroupPoint& o) const;
    bool operator!=(const GroupPoint& o) const { return !(*this == o); }

    bool is_identity() const { return infinity_; }

    // Exposed for test oracles; (x, y) affine coordinates.
    const mpz_class& x() const { return x_; }
    const mpz_class& y() const { return y_; }

    static const mpz_class& field_prime();

private:
    friend class Jacobian;
    GroupPoint(mpz_class x, mpz_class y) : x_(std::move(x)), y_(std::move(y)), infinity_(false) {}

    mpz_class x_;
    mpz_class y_;
    bool infinity_;
};

}  // namespace anchor
