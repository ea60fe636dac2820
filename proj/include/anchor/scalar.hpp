#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "anchor/bytes.hpp"

namespace anchor {

// Field element mod q, where q is the prime order of the group generated by G.
// Always stored reduced into [0, q). Wire form is 32 bytes big-endian,
// canonical: decoding rejects any value >= q.
class Scalar {
public:
    Scalar() : v_(0) {}
    explicit Scalar(uint64_t v);
    static Scalar from_mpz(const mpz_class& v);

    static const mpz_class& order();

    static std::optional<Scalar> from_bytes(std::span<const uint8_t> data);
    std::array<uint8_t, 32> to_bytes() const;
    std::string to_hex() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;  // throws std::domain_error on zero
    Scalar pow(uint64_t e) const;

    bool operator==(const Scalar& o) const { return v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return v_ != o.v_; }
    bool operator<(const Scalar& o) const { return v_ < o.v_; }

    bool is_zero() const { return v_ == 0; }
    const mpz_class& mpz() const { return v_; }

private:
    mpz_class v_;
};

}  // namespace anchor
