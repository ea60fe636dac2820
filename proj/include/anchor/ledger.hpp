#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "anchor/point.hpp"
#include "anchor/schnorr.hpp"

namespace anchor {

// Deterministic UTXO ledger standing in for a proof-of-work chain: blocks with
// heights, key-path spend validation, unspendable data outputs, absolute-height
// refund timelocks, and the spend-graph queries the offline verifier walks.
// No reorgs: a confirmed transaction's position never changes.

struct OutPoint {
    Hash32 txid{};
    uint32_t vout = 0;

    auto operator<=>(const OutPoint&) const = default;
};

struct RefundClause {
    GroupPoint key;           // the funder's own key
    uint64_t release_height;  // spendable via this key at height >= release
};

struct TxOutput {
    enum class Kind : uint8_t { Key = 0, OpReturn = 1 };

    Kind kind = Kind::Key;
    uint64_t amount = 0;  // always 0 for OpReturn
    GroupPoint dest;      // Kind::Key only
    std::optional<RefundClause> refund;
    Bytes op_return;  // Kind::OpReturn only, at most 80 bytes

    static TxOutput to_key(uint64_t amount, GroupPoint dest,
                           std::optional<RefundClause> refund = std::nullopt);
    static TxOutput data(Bytes payload);
};

struct LedgerTx {
    std::vector<OutPoint> inputs;
    std::vector<TxOutput> outputs;
    std::vector<SchnorrSignature> witnesses;  // one per input; empty on mints

    Bytes canonical_body() const;  // witness-free; both the id preimage and the signing message
    Hash32 id() const;
    bool is_mint() const;  // single all-zero-txid input

    std::optional<size_t> key_output_index() const;     // first spendable output
    std::optional<Bytes> op_return_payload() const;     // first data output
};

struct Utxo {
    OutPoint outpoint;
    uint64_t amount = 0;
    GroupPoint owner;
    std::optional<RefundClause> refund;
};

enum class RejectReason : uint8_t {
    None = 0,
    Malformed,
    BadSignature,
    DoubleSpend,
    Overspend,
    PrematureTimelock,
};

const char* reject_reason_name(RejectReason r);

struct SubmitOutcome {
    bool accepted = false;
    bool duplicate = false;  // byte-identical tx already known; treated as one
    RejectReason reason = RejectReason::None;
};

class SimLedger {
public:
    SimLedger() = default;

    // Coin creation for scenario setup; mints enter the pending pool like any tx.
    Hash32 mint(const GroupPoint& dest, uint64_t amount);

    SubmitOutcome submit(const LedgerTx& tx);
    uint64_t mine_block();  // confirms pending txs in submission order; returns new height

    uint64_t height() const { return height_; }

    std::optional<LedgerTx> find_spending_tx(const OutPoint& outpoint) const;
    // Confirmed txs paying at least one key output to `dest`, in confirmation
    // order, optionally restricted to confirmation height < before_height.
    std::vector<LedgerTx> outputs_to(const GroupPoint& dest,
                                     std::optional<uint64_t> before_height = std::nullopt) const;

    std::optional<LedgerTx> get_tx(const Hash32& txid) const;
    std::optional<uint64_t> tx_height(const Hash32& txid) const;
    bool is_confirmed(const Hash32& txid) const { return tx_height(txid).has_value(); }
    bool is_final(const Hash32& txid, uint64_t settlement_k) const;

    std::optional<Utxo> utxo(const OutPoint& outpoint) const;  // unspent only
    // Every key output ever created, spent or not (the verifier and the reward
    // audit need owners of spent outputs).
    std::optional<Utxo> output_record(const OutPoint& outpoint) const;

    uint64_t total_minted() const { return minted_; }
    uint64_t total_fees() const { return fees_; }
    uint64_t utxo_value() const;

    const std::vector<std::vector<LedgerTx>>& blocks() const { return blocks_; }
    size_t pending_count() const { return pending_.size(); }

private:
    RejectReason validate(const LedgerTx& tx) const;

    uint64_t height_ = 0;  // blocks_.size(); block heights start at 1
    std::vector<std::vector<LedgerTx>> blocks_;
    std::vector<LedgerTx> pending_;
    std::map<OutPoint, Utxo> utxo_set_;
    std::map<OutPoint, Utxo> all_outputs_;
    std::map<OutPoint, Hash32> spender_index_;
    std::map<Hash32, uint64_t> tx_heights_;
    std::map<Hash32, LedgerTx> tx_index_;
    std::map<OutPoint, Hash32> pending_reservations_;
    uint64_t minted_ = 0;
    uint64_t fees_ = 0;
    uint64_t mint_counter_ = 0;
};

}  // namespace anchor
