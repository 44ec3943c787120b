#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>

#include "fdsim/flow_key.hpp"
#include "fdsim/types.hpp"

namespace fdsim {

// The flow-director "traffic flow -> core" map: a single entry per flow,
// written only from the transmit side. Receive lookups are exact-match on
// the receive-direction 5-tuple.
class FdTable {
 public:
  explicit FdTable(std::uint32_t sample_rate = 20) : sample_rate_(sample_rate) {}

  std::optional<CoreId> lookup(const FlowKey& rx_flow) const {
    auto it = entries_.find(rx_flow);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  // Counts one outgoing packet for the flow; on every sample_rate-th TX
  // packet, writes (insert or overwrite) the entry under the reversed
  // header, i.e. the receive-direction key. Returns whether the entry
  // was written.
  bool update_from_tx(const FlowKey& tx_header, CoreId core) {
    FlowKey rx_key = tx_header.reversed();
    std::uint64_t count = ++tx_counts_[rx_key];
    if (count % sample_rate_ != 0) return false;
    entries_[rx_key] = core;
    return true;
  }

  // Bootstrap entry for an established connection (the connection-setup
  // transmit happens before the run); does not advance the TX counter.
  void install(const FlowKey& rx_flow, CoreId core) { entries_[rx_flow] = core; }

  std::uint32_t sample_rate() const { return sample_rate_; }
  std::size_t size() const { return entries_.size(); }
  std::uint64_t tx_count(const FlowKey& rx_flow) const {
    auto it = tx_counts_.find(rx_flow);
    return it == tx_counts_.end() ? 0 : it->second;
  }

 private:
  std::uint32_t sample_rate_;
  std::unordered_map<FlowKey, CoreId, FlowKeyHash> entries_;
  std::unordered_map<FlowKey, std::uint64_t, FlowKeyHash> tx_counts_;
};

}  // namespace fdsim
