#include "anchor/ledger.hpp"

#include <algorithm>
#include <stdexcept>

#include "anchor/hash.hpp"
#include "anchor/taproot.hpp"

namespace anchor {

namespace {
constexpr size_t kMaxOpReturn = 80;
}

TxOutput TxOutput::to_key(uint64_t amount, GroupPoint dest, std::optional<RefundClause> refund) {
    TxOutput out;
    out.kind = Kind::Key;
    out.amount = amount;
    out.dest = std::move(dest);
    out.refund = std::move(refund);
    return out;
}

TxOutput TxOutput::data(Bytes payload) {
    TxOutput out;
    out.kind = Kind::OpReturn;
    out.amount = 0;
    out.op_return = std::move(payload);
    return out;
}

Bytes LedgerTx::canonical_body() const {
    ByteWriter w;
    w.u32(static_cast<uint32_t>(inputs.size()));
    for (const auto& in : inputs) {
        w.fixed32(in.txid);
        w.u32(in.vout);
    }
    w.u32(static_cast<uint32_t>(outputs.size()));
    for (const auto& out : outputs) {
        w.u8(static_cast<uint8_t>(out.kind));
        w.u64(out.amount);
        if (out.kind == TxOutput::Kind::Key) {
            auto db = out.dest.to_bytes();
            w.raw(std::span<const uint8_t>(db.data(), db.size()));
            w.u8(out.refund ? 1 : 0);
            if (out.refund) {
                auto kb = out.refund->key.to_bytes();
                w.raw(std::span<const uint8_t>(kb.data(), kb.size()));
                w.u64(out.refund->release_height);
            }
        } else {
            w.var_bytes(out.op_return);
        }
    }
    return w.take();
}

Hash32 LedgerTx::id() const { return digest32(DomainTag::TxId, canonical_body()); }

bool LedgerTx::is_mint() const {
    return inputs.size() == 1 && inputs[0].txid == Hash32{} && witnesses.empty();
}

std::optional<size_t> LedgerTx::key_output_index() const {
    for (size_t i = 0; i < outputs.size(); ++i)
        if (outputs[i].kind == TxOutput::Kind::Key) return i;
    return std::nullopt;
}

std::optional<Bytes> LedgerTx::op_return_payload() const {
    for (const auto& out : outputs)
        if (out.kind == TxOutput::Kind::OpReturn) return out.op_return;
    return std::nullopt;
}

const char* reject_reason_name(RejectReason r) {
    switch (r) {
        case RejectReason::None: return "none";
        case RejectReason::Malformed: return "malformed";
        case RejectReason::BadSignature: return "bad-signature";
        case RejectReason::DoubleSpend: return "double-spend";
        case RejectReason::Overspend: return "overspend";
        case RejectReason::PrematureTimelock: return "premature-timelock";
    }
    return "unknown";
}

Hash32 SimLedger::mint(const GroupPoint& dest, uint64_t amount) {
    LedgerTx tx;
    // unique counter in the placeholder input keeps mint ids distinct
    tx.inputs.push_back(OutPoint{Hash32{}, static_cast<uint32_t>(mint_counter_++)});
    tx.outputs.push_back(TxOutput::to_key(amount, dest));
    pending_.push_back(tx);
    return tx.id();
}

RejectReason SimLedger::validate(const LedgerTx& tx) const {
    if (tx.inputs.empty() || tx.outputs.empty()) return RejectReason::Malformed;
    if (tx.witnesses.size() != tx.inputs.size()) return RejectReason::Malformed;
    for (const auto& out : tx.outputs) {
        if (out.kind == TxOutput::Kind::OpReturn) {
            if (out.amount != 0 || out.op_return.size() > kMaxOpReturn) return RejectReason::Malformed;
        } else if (out.dest.is_identity()) {
            return RejectReason::Malformed;
        }
    }
    for (size_t i = 0; i < tx.inputs.size(); ++i)
        for (size_t j = i + 1; j < tx.inputs.size(); ++j)
            if (tx.inputs[i] == tx.inputs[j]) return RejectReason::DoubleSpend;

    uint64_t in_total = 0;
    const Bytes body = tx.canonical_body();
    for (size_t i = 0; i < tx.inputs.size(); ++i) {
        const OutPoint& op = tx.inputs[i];
        if (op.txid == Hash32{}) return RejectReason::Malformed;  // mint inputs are internal
        auto it = utxo_set_.find(op);
        if (it == utxo_set_.end()) return RejectReason::DoubleSpend;
        if (pending_reservations_.count(op)) return RejectReason::DoubleSpend;
        const Utxo& prev = it->second;
        in_total += prev.amount;
        const SchnorrSignature& sig = tx.witnesses[i];
        if (verify_key_path(prev.owner, body, sig)) continue;
        if (prev.refund && verify_key_path(prev.refund->key, body, sig)) {
            // earliest possible confirmation is the next block
            if (height_ + 1 < prev.refund->release_height) return RejectReason::PrematureTimelock;
            continue;
        }
        return RejectReason::BadSignature;
    }
    uint64_t out_total = 0;
    for (const auto& out : tx.outputs) out_total += out.amount;
    if (out_total > in_total) return RejectReason::Overspend;
    return RejectReason::None;
}

SubmitOutcome SimLedger::submit(const LedgerTx& tx) {
    Hash32 id = tx.id();
    if (tx_heights_.count(id)) return SubmitOutcome{false, false, RejectReason::DoubleSpend};
    for (const auto& p : pending_)
        if (p.id() == id) return SubmitOutcome{true, true, RejectReason::None};
    RejectReason reason = validate(tx);
    if (reason != RejectReason::None) return SubmitOutcome{false, false, reason};
    for (const auto& in : tx.inputs) pending_reservations_.emplace(in, id);
    pending_.push_back(tx);
    return SubmitOutcome{true, false, RejectReason::None};
}

uint64_t SimLedger::mine_block() {
    std::vector<LedgerTx> block = std::move(pending_);
    pending_.clear();
    pending_reservations_.clear();
    height_ += 1;
    for (const auto& tx : block) {
        Hash32 id = tx.id();
        uint64_t in_total = 0;
        if (!tx.is_mint()) {
            for (const auto& in : tx.inputs) {
                in_total += utxo_set_.at(in).amount;
                spender_index_.emplace(in, id);
                utxo_set_.erase(in);
            }
        }
        uint64_t out_total = 0;
        for (uint32_t v = 0; v < tx.outputs.size(); ++v) {
            const TxOutput& out = tx.outputs[v];
            out_total += out.amount;
            if (out.kind != TxOutput::Kind::Key) continue;
            Utxo u{OutPoint{id, v}, out.amount, out.dest, out.refund};
            utxo_set_.emplace(u.outpoint, u);
            all_outputs_.emplace(u.outpoint, u);
        }
        if (!tx.is_mint()) fees_ += in_total - out_total;
        tx_heights_.emplace(id, height_);
        tx_index_.emplace(id, tx);
    }
    blocks_.push_back(std::move(block));
    return height_;
}

std::optional<LedgerTx> SimLedger::find_spending_tx(const OutPoint& outpoint) const {
    auto it = spender_index_.find(outpoint);
    if (it == spender_index_.end()) return std::nullopt;
    return tx_index_.at(it->second);
}

std::vector<LedgerTx> SimLedger::outputs_to(const GroupPoint& dest,
                                            std::optional<uint64_t> before_height) const {
    std::vector<LedgerTx> out;
    for (size_t b = 0; b < blocks_.size(); ++b) {
        uint64_t h = b + 1;
        if (before_height && h >= *before_height) break;
        for (const auto& tx : blocks_[b]) {
            for (const auto& o : tx.outputs) {
                if (o.kind == TxOutput::Kind::Key && o.dest == dest) {
                    out.push_back(tx);
                    break;
                }
            }
        }
    }
    return out;
}

std::optional<LedgerTx> SimLedger::get_tx(const Hash32& txid) const {
    auto it = tx_index_.find(txid);
    if (it == tx_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<uint64_t> SimLedger::tx_height(const Hash32& txid) const {
    auto it = tx_heights_.find(txid);
    if (it == tx_heights_.end()) return std::nullopt;
    return it->second;
}

bool SimLedger::is_final(const Hash32& txid, uint64_t settlement_k) const {
    auto h = tx_height(txid);
    return h && height_ >= *h + settlement_k;
}

std::optional<Utxo> SimLedger::utxo(const OutPoint& outpoint) const {
    auto it = utxo_set_.find(outpoint);
    if (it == utxo_set_.end()) return std::nullopt;
    return it->second;
}

std::optional<Utxo> SimLedger::output_record(const OutPoint& outpoint) const {
    auto it = all_outputs_.find(outpoint);
    if (it == all_outputs_.end()) return std::nullopt;
    return it->second;
}

uint64_t SimLedger::utxo_value() const {
    uint64_t total = 0;
    for (const auto& [op, u] : utxo_set_) total += u.amount;
    return total;
}

}  // namespace anchor
