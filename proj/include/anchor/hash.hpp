#pragma once

#include <span>
#include <string>

#include "anchor/bytes.hpp"
#include "anchor/scalar.hpp"

namespace anchor {

// Domain separation tags. Each tag makes hash_to_scalar / digest32 an
// independent function; the ASCII tag name plus a NUL byte prefixes the input.
enum class DomainTag {
    Sig,           // single-party signature challenge H(m||R||Y)
    Binding,       // per-signer binding value H1(l, m, B)
    Challenge,     // threshold/key-path challenge H2(m||R||Q)
    TapTweak,      // output-key tweak H_TapTweak(pk||commitment)
    Beacon,        // per-height chain randomness
    BeaconSelect,  // signer-selection ranking hash
    Cid,           // content identifiers in the content-addressable store
    CommitPk,      // ledger-pubkey commitments during funding
    Block,         // block hashes
    TxId,          // ledger transaction digests
    ChainSeed,     // derives the chain seed from the scenario seed
};

const char* tag_name(DomainTag tag);

// SHA-512(tag || 0x00 || data) reduced mod q; output uniform-looking in [1, q).
Scalar hash_to_scalar(DomainTag tag, std::span<const uint8_t> data);
inline Scalar hash_to_scalar(DomainTag tag, const Bytes& data) {
    return hash_to_scalar(tag, std::span<const uint8_t>(data));
}

// SHA-256(tag || 0x00 || data): 32-byte digests for ids, block hashes, cids.
Hash32 digest32(DomainTag tag, std::span<const uint8_t> data);
inline Hash32 digest32(DomainTag tag, const Bytes& data) {
    return digest32(tag, std::span<const uint8_t>(data));
}

Bytes sha512(std::span<const uint8_t> data);

}  // namespace anchor
