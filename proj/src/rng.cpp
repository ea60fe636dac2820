#include "anchor/rng.hpp"

#include "anchor/hash.hpp"

namespace anchor {

namespace {

Bytes seed_state(uint64_t seed, const std::string& context) {
    ByteWriter w;
    w.u64(seed);
    w.var_bytes(Bytes(context.begin(), context.end()));
    return sha512(w.bytes());
}

}  // namespace

SeededRng::SeededRng(uint64_t seed) : state_(seed_state(seed, "")) {}

SeededRng::SeededRng(uint64_t seed, const std::string& context) : state_(seed_state(seed, context)) {}

SeededRng SeededRng::fork(const std::string& context) const {
    ByteWriter w;
    w.var_bytes(state_);
    w.var_bytes(Bytes(context.begin(), context.end()));
    return SeededRng(sha512(w.bytes()));
}

SeededRng SeededRng::fork(uint64_t index) const {
    ByteWriter w;
    w.var_bytes(state_);
    w.u64(index);
    return SeededRng(sha512(w.bytes()));
}

Bytes SeededRng::block() {
    ByteWriter w;
    w.raw(state_);
    w.u64(counter_++);
    return sha512(w.bytes());
}

Bytes SeededRng::bytes(size_t n) {
    Bytes out;
    out.reserve(n);
    while (out.size() < n) {
        Bytes b = block();
        size_t take = std::min(n - out.size(), b.size());
        out.insert(out.end(), b.begin(), b.begin() + take);
    }
    return out;
}

uint64_t SeededRng::next_u64() {
    Bytes b = block();
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | b[i];
    return v;
}

uint64_t SeededRng::below(uint64_t bound) {
    if (bound == 0) return 0;
    // rejection sampling to stay unbiased
    uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
    for (;;) {
        uint64_t v = next_u64();
        if (v < limit) return v % bound;
    }
}

Scalar SeededRng::scalar_nonzero() {
    for (;;) {
        Bytes b = block();  // 64 bytes; wide reduction keeps the bias negligible
        mpz_class v;
        mpz_import(v.get_mpz_t(), b.size(), 1, 1, 0, 0, b.data());
        Scalar s = Scalar::from_mpz(v);
        if (!s.is_zero()) return s;
    }
}

}  // namespace anchor
