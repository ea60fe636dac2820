#include "anchor/hash.hpp"

#include <openssl/evp.h>

#include <cstring>
#include <stdexcept>

namespace anchor {

const char* tag_name(DomainTag tag) {
    switch (tag) {
        case DomainTag::Sig: return "SIG";
        case DomainTag::Binding: return "BINDING";
        case DomainTag::Challenge: return "CHALLENGE";
        case DomainTag::TapTweak: return "TAPTWEAK";
        case DomainTag::Beacon: return "BEACON";
        case DomainTag::BeaconSelect: return "BEACON-SELECT";
        case DomainTag::Cid: return "CID";
        case DomainTag::CommitPk: return "COMMIT-PK";
        case DomainTag::Block: return "BLOCK";
        case DomainTag::TxId: return "TXID";
        case DomainTag::ChainSeed: return "CHAIN-SEED";
    }
    throw std::logic_error("unknown domain tag");
}

namespace {

Bytes evp_digest(const EVP_MD* md, std::span<const uint8_t> prefix, std::span<const uint8_t> data) {
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (!ctx) throw std::runtime_error("EVP_MD_CTX_new failed");
    Bytes out(EVP_MD_size(md));
    unsigned int len = 0;
    if (EVP_DigestInit_ex(ctx, md, nullptr) != 1 ||
        (!prefix.empty() && EVP_DigestUpdate(ctx, prefix.data(), prefix.size()) != 1) ||
        (!data.empty() && EVP_DigestUpdate(ctx, data.data(), data.size()) != 1) ||
        EVP_DigestFinal_ex(ctx, out.data(), &len) != 1) {
        EVP_MD_CTX_free(ctx);
        throw std::runtime_error("EVP digest failed");
    }
    EVP_MD_CTX_free(ctx);
    out.resize(len);
    return out;
}

Bytes tag_prefix(DomainTag tag) {
    const char* name = tag_name(tag);
    Bytes prefix(name, name + std::strlen(name));
    prefix.push_back(0x00);
    return prefix;
}

}  // namespace

Bytes sha512(std::span<const uint8_t> data) {
    return evp_digest(EVP_sha512(), {}, data);
}

Scalar hash_to_scalar(DomainTag tag, std::span<const uint8_t> data) {
    Bytes digest = evp_digest(EVP_sha512(), tag_prefix(tag), data);
    mpz_class v;
    mpz_import(v.get_mpz_t(), digest.size(), 1, 1, 0, 0, digest.data());
    Scalar s = Scalar::from_mpz(v);
    while (s.is_zero()) {  // probability ~2^-256; keeps the function total on [1, q)
        digest = evp_digest(EVP_sha512(), {}, digest);
        mpz_import(v.get_mpz_t(), digest.size(), 1, 1, 0, 0, digest.data());
        s = Scalar::from_mpz(v);
    }
    return s;
}

Hash32 digest32(DomainTag tag, std::span<const uint8_t> data) {
    Bytes digest = evp_digest(EVP_sha256(), tag_prefix(tag), data);
    Hash32 out{};
    std::memcpy(out.data(), digest.data(), 32);
    return out;
}

}  // namespace anchor
