#include "anchor/point.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace anchor {

namespace {

// secp256k1: y^2 = x^3 + 7 over F_p, prime order q (= Scalar::order()), cofactor 1.
const mpz_class& prime() {
    static const mpz_class p("FFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFEFFFFFC2F", 16);
    return p;
}

const mpz_class& gen_x() {
    static const mpz_class x("79BE667EF9DCBBAC55A06295CE870B07029BFCDB2DCE28D959F2815B16F81798", 16);
    return x;
}

const mpz_class& gen_y() {
    static const mpz_class y("483ADA7726A3C4655DA4FBFC0E1108A8FD17B448A68554199C47D08FFB10D4B8", 16);
    return y;
}

mpz_class fmod_p(const mpz_class& v) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), prime().get_mpz_t());
    return r;
}

mpz_class finv(const mpz_class& v) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), prime().get_mpz_t()) == 0)
        throw std::domain_error("field inverse of zero");
    return r;
}

bool on_curve(const mpz_class& x, const mpz_class& y) {
    return fmod_p(y * y - (x * x * x + 7)) == 0;
}

// p = 3 mod 4, so sqrt(a) = a^((p+1)/4) when a is a quadratic residue.
std::optional<mpz_class> fsqrt(const mpz_class& a) {
    static const mpz_class e = (prime() + 1) / 4;
    mpz_class r;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), prime().get_mpz_t());
    if (fmod_p(r * r - a) != 0) return std::nullopt;
    return r;
}

}  // namespace

// Jacobian coordinates (X, Y, Z) with x = X/Z^2, y = Y/Z^3; used internally
// for inversion-free scalar multiplication.
class Jacobian {
public:
    Jacobian() : x_(1), y_(1), z_(0) {}  // identity
    explicit Jacobian(const GroupPoint& p) {
        if (p.is_identity()) {
            x_ = 1; y_ = 1; z_ = 0;
        } else {
            x_ = p.x_; y_ = p.y_; z_ = 1;
        }
    }

    bool is_identity() const { return z_ == 0; }

    Jacobian dbl() const {
        if (is_identity() || y_ == 0) return Jacobian();
        mpz_class ysq = fmod_p(y_ * y_);
        mpz_class s = fmod_p(4 * x_ * ysq);
        mpz_class m = fmod_p(3 * x_ * x_);  // a = 0
        Jacobian r;
        r.x_ = fmod_p(m * m - 2 * s);
        r.y_ = fmod_p(m * (s - r.x_) - 8 * ysq * ysq);
        r.z_ = fmod_p(2 * y_ * z_);
        return r;
    }

    Jacobian add(const Jacobian& o) const {
        if (is_identity()) return o;
        if (o.is_identity()) return *this;
        mpz_class z1z1 = fmod_p(z_ * z_);
        mpz_class z2z2 = fmod_p(o.z_ * o.z_);
        mpz_class u1 = fmod_p(x_ * z2z2);
        mpz_class u2 = fmod_p(o.x_ * z1z1);
        mpz_class s1 = fmod_p(y_ * o.z_ * z2z2);
        mpz_class s2 = fmod_p(o.y_ * z_ * z1z1);
        if (u1 == u2) {
            if (s1 != s2) return Jacobian();  // P + (-P)
            return dbl();
        }
        mpz_class h = fmod_p(u2 - u1);
        mpz_class i = fmod_p(4 * h * h);
        mpz_class j = fmod_p(h * i);
        mpz_class rr = fmod_p(2 * (s2 - s1));
        mpz_class v = fmod_p(u1 * i);
        Jacobian r;
        r.x_ = fmod_p(rr * rr - j - 2 * v);
        r.y_ = fmod_p(rr * (v - r.x_) - 2 * s1 * j);
        r.z_ = fmod_p(2 * h * z_ * o.z_);
        return r;
    }

    GroupPoint to_affine() const {
        if (is_identity()) return GroupPoint::identity();
        mpz_class zi = finv(z_);
        mpz_class zi2 = fmod_p(zi * zi);
        return GroupPoint(fmod_p(x_ * zi2), fmod_p(y_ * zi2 * zi));
    }

private:
    mpz_class x_, y_, z_;
};

const mpz_class& GroupPoint::field_prime() { return prime(); }

GroupPoint GroupPoint::generator() { return GroupPoint(gen_x(), gen_y()); }

GroupPoint GroupPoint::operator+(const GroupPoint& o) const {
    if (infinity_) return o;
    if (o.infinity_) return *this;
    if (x_ == o.x_) {
        if (fmod_p(y_ + o.y_) == 0) return identity();
        // doubling
        mpz_class lam = fmod_p(3 * x_ * x_ * finv(fmod_p(2 * y_)));
        mpz_class x3 = fmod_p(lam * lam - 2 * x_);
        mpz_class y3 = fmod_p(lam * (x_ - x3) - y_);
        return GroupPoint(x3, y3);
    }
    mpz_class lam = fmod_p((o.y_ - y_) * finv(fmod_p(o.x_ - x_)));
    mpz_class x3 = fmod_p(lam * lam - x_ - o.x_);
    mpz_class y3 = fmod_p(lam * (x_ - x3) - y_);
    return GroupPoint(x3, y3);
}

GroupPoint GroupPoint::operator-() const {
    if (infinity_) return *this;
    return GroupPoint(x_, fmod_p(-y_));
}

GroupPoint GroupPoint::mul(const Scalar& k) const {
    if (infinity_ || k.is_zero()) return identity();
    Jacobian acc;
    Jacobian base(*this);
    const mpz_class& e = k.mpz();
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        acc = acc.dbl();
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = acc.add(base);
    }
    return acc.to_affine();
}

namespace {

// 4-bit windowed table for the generator: table[w][d] = d * 16^w * G.
const std::vector<std::vector<Jacobian>>& generator_table() {
    static std::vector<std::vector<Jacobian>> table;
    static std::once_flag once;
    std::call_once(once, [] {
        table.resize(64);
        Jacobian window_base(GroupPoint::generator());
        for (size_t w = 0; w < 64; ++w) {
            table[w].resize(16);
            table[w][0] = Jacobian();
            for (size_t d = 1; d < 16; ++d) table[w][d] = table[w][d - 1].add(window_base);
            // 16^(w+1) * G = 16 * (16^w * G): four doublings of the previous base.
            window_base = table[w][1];
            for (int i = 0; i < 4; ++i) window_base = window_base.dbl();
        }
    });
    return table;
}

}  // namespace

GroupPoint GroupPoint::mul_generator(const Scalar& k) {
    if (k.is_zero()) return identity();
    const auto& table = generator_table();
    const mpz_class& e = k.mpz();
    Jacobian acc;
    for (size_t w = 0; w < 64; ++w) {
        unsigned d = 0;
        for (int b = 3; b >= 0; --b) d = (d << 1) | mpz_tstbit(e.get_mpz_t(), 4 * w + b);
        if (d != 0) acc = acc.add(table[w][d]);
    }
    return acc.to_affine();
}

bool GroupPoint::operator==(const GroupPoint& o) const {
    if (infinity_ || o.infinity_) return infinity_ == o.infinity_;
    return x_ == o.x_ && y_ == o.y_;
}

std::optional<GroupPoint> GroupPoint::from_bytes(std::span<const uint8_t> data) {
    if (data.size() != 33) return std::nullopt;
    uint8_t prefix = data[0];
    if (prefix != 0x02 && prefix != 0x03) return std::nullopt;
    mpz_class x;
    mpz_import(x.get_mpz_t(), 32, 1, 1, 0, 0, data.data() + 1);
    if (x >= prime()) return std::nullopt;
    auto y = fsqrt(fmod_p(x * x * x + 7));
    if (!y) return std::nullopt;
    bool want_odd = (prefix == 0x03);
    mpz_class yy = *y;
    if (mpz_odd_p(yy.get_mpz_t()) != (want_odd ? 1 : 0)) yy = fmod_p(-yy);
    GroupPoint p(x, yy);
    if (!on_curve(p.x_, p.y_)) return std::nullopt;
    return p;
}

std::array<uint8_t, 33> GroupPoint::to_bytes() const {
    if (infinity_) throw std::domain_error("GroupPoint::to_bytes: identity has no encoding");
    std::array<uint8_t, 33> out{};
    out[0] = mpz_odd_p(y_.get_mpz_t()) ? 0x03 : 0x02;
    size_t bytes = (mpz_sizeinbase(x_.get_mpz_t(), 2) + 7) / 8;
    size_t count = 0;
    if (x_ != 0) mpz_export(out.data() + 1 + (32 - bytes), &count, 1, 1, 0, 0, x_.get_mpz_t());
    return out;
}

std::string GroupPoint::to_hex() const {
    auto b = to_bytes();
    return anchor::to_hex(std::span<const uint8_t>(b.data(), b.size()));
}

}  // namespace anchor
