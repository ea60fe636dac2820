#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace anchor {

using Bytes = std::vector<uint8_t>;
using Hash32 = std::array<uint8_t, 32>;

std::string to_hex(std::span<const uint8_t> data);
Bytes from_hex(const std::string& hex);

inline std::string to_hex(const Hash32& h) { return to_hex(std::span<const uint8_t>(h.data(), h.size())); }

inline Hash32 hash32_from_hex(const std::string& hex) {
    Bytes b = from_hex(hex);
    if (b.size() != 32) throw std::invalid_argument("hash32_from_hex: need 32 bytes");
    Hash32 h{};
    std::memcpy(h.data(), b.data(), 32);
    return h;
}

// Canonical message serialization: fixed-width big-endian integers,
// byte strings length-prefixed with u32.
class ByteWriter {
public:
    void u8(uint8_t v) { buf_.push_back(v); }
    void u32(uint32_t v) {
        for (int i = 3; i >= 0; --i) buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
    }
    void u64(uint64_t v) {
        for (int i = 7; i >= 0; --i) buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
    }
    void raw(std::span<const uint8_t> data) { buf_.insert(buf_.end(), data.begin(), data.end()); }
    void raw(const Bytes& data) { raw(std::span<const uint8_t>(data)); }
    void fixed32(const Hash32& h) { raw(std::span<const uint8_t>(h.data(), h.size())); }
    void var_bytes(std::span<const uint8_t> data) {
        u32(static_cast<uint32_t>(data.size()));
        raw(data);
    }
    void var_bytes(const Bytes& data) { var_bytes(std::span<const uint8_t>(data)); }

    const Bytes& bytes() const { return buf_; }
    Bytes take() { return std::move(buf_); }

private:
    Bytes buf_;
};

class ByteReader {
public:
    explicit ByteReader(std::span<const uint8_t> data) : data_(data) {}
    explicit ByteReader(const Bytes& data) : data_(data) {}

    uint8_t u8() { return take(1)[0]; }
    uint32_t u32() {
        auto s = take(4);
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v = (v << 8) | s[i];
        return v;
    }
    uint64_t u64() {
        auto s = take(8);
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v = (v << 8) | s[i];
        return v;
    }
    Bytes raw(size_t n) {
        auto s = take(n);
        return Bytes(s.begin(), s.end());
    }
    Hash32 fixed32() {
        auto s = take(32);
        Hash32 h{};
        std::memcpy(h.data(), s.data(), 32);
        return h;
    }
    Bytes var_bytes() {
        uint32_t n = u32();
        return raw(n);
    }
    bool done() const { return pos_ == data_.size(); }
    size_t remaining() const { return data_.size() - pos_; }

private:
    std::span<const uint8_t> take(size_t n) {
        if (pos_ + n > data_.size()) throw std::out_of_range("ByteReader: truncated input");
        auto s = data_.subspan(pos_, n);
        pos_ += n;
        return s;
    }
    std::span<const uint8_t> data_;
    size_t pos_ = 0;
};

}  // namespace anchor
