#pragma once

#include <cstdint>
#include <string>

#include "anchor/bytes.hpp"
#include "anchor/scalar.hpp"

namespace anchor {

// Deterministic hash-counter generator. All protocol randomness flows through
// one of these so runs replay bit-exactly from a seed; "production" sampling
// is the same construction seeded from entropy by the caller.
class SeededRng {
public:
    explicit SeededRng(uint64_t seed);
    SeededRng(uint64_t seed, const std::string& context);

    // Derive an independent stream, e.g. one per participant index.
    SeededRng fork(const std::string& context) const;
    SeededRng fork(uint64_t index) const;

    Bytes bytes(size_t n);
    uint64_t next_u64();
    uint64_t below(uint64_t bound);       // uniform in [0, bound)
    Scalar scalar_nonzero();              // uniform in [1, q)

private:
    explicit SeededRng(Bytes state) : state_(std::move(state)) {}
    Bytes block();

    Bytes state_;
    uint64_t counter_ = 0;
};

}  // namespace anchor
