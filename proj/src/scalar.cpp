#include "anchor/scalar.hpp"

#include <stdexcept>

namespace anchor {

namespace {

const mpz_class& group_order() {
    static const mpz_class q("FFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFEBAAEDCE6AF48A03BBFD25E8CD0364141", 16);
    return q;
}

}  // namespace

const mpz_class& Scalar::order() { return group_order(); }

Scalar::Scalar(uint64_t v) : v_(0) {
    mpz_import(v_.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    v_ %= group_order();
}

Scalar Scalar::from_mpz(const mpz_class& v) {
    Scalar s;
    mpz_mod(s.v_.get_mpz_t(), v.get_mpz_t(), group_order().get_mpz_t());
    return s;
}

std::optional<Scalar> Scalar::from_bytes(std::span<const uint8_t> data) {
    if (data.size() != 32) return std::nullopt;
    mpz_class v;
    mpz_import(v.get_mpz_t(), 32, 1, 1, 0, 0, data.data());
    if (v >= group_order()) return std::nullopt;
    Scalar s;
    s.v_ = std::move(v);
    return s;
}

std::array<uint8_t, 32> Scalar::to_bytes() const {
    std::array<uint8_t, 32> out{};
    size_t count = 0;
    // mpz_export writes only significant bytes; right-align into the buffer.
    size_t bytes = (mpz_sizeinbase(v_.get_mpz_t(), 2) + 7) / 8;
    if (v_ == 0) return out;
    mpz_export(out.data() + (32 - bytes), &count, 1, 1, 0, 0, v_.get_mpz_t());
    return out;
}

std::string Scalar::to_hex() const {
    auto b = to_bytes();
    return anchor::to_hex(std::span<const uint8_t>(b.data(), b.size()));
}

Scalar Scalar::operator+(const Scalar& o) const { return from_mpz(v_ + o.v_); }
Scalar Scalar::operator-(const Scalar& o) const { return from_mpz(v_ - o.v_); }
Scalar Scalar::operator*(const Scalar& o) const { return from_mpz(v_ * o.v_); }
Scalar Scalar::operator-() const { return from_mpz(-v_); }

Scalar Scalar::inverse() const {
    if (v_ == 0) throw std::domain_error("Scalar::inverse: zero has no inverse");
    Scalar s;
    mpz_invert(s.v_.get_mpz_t(), v_.get_mpz_t(), group_order().get_mpz_t());
    return s;
}

Scalar Scalar::pow(uint64_t e) const {
    Scalar s;
    mpz_class exp;
    mpz_import(exp.get_mpz_t(), 1, 1, sizeof(e), 0, 0, &e);
    mpz_powm(s.v_.get_mpz_t(), v_.get_mpz_t(), exp.get_mpz_t(), group_order().get_mpz_t());
    return s;
}

}  // namespace anchor
