#pragma once

#include <cstdint>
#include <vector>

#include "fdsim/toeplitz.hpp"
#include "fdsim/types.hpp"

namespace fdsim {

// RSS indirection: hash key plus a power-of-two table mapping hash slots
// to receive queues. The fallback steering path when no flow-director
// entry exists.
struct RssIndirection {
  std::vector<std::uint8_t> hash_key;
  std::vector<QueueId> table;

  // Table of `len` slots cycling through the queues, the conventional
  // even-spread layout.
  static RssIndirection make(std::size_t len, std::uint32_t num_queues,
                             std::vector<std::uint8_t> key = {
                                 kRssVerificationKey.begin(),
                                 kRssVerificationKey.end()}) {
    RssIndirection ind;
    ind.hash_key = std::move(key);
    ind.table.resize(len);
    for (std::size_t i = 0; i < len; ++i) {
      ind.table[i] = static_cast<QueueId>(i % num_queues);
    }
    return ind;
  }

  QueueId select(std::uint32_t hash) const {
    return table[hash & (table.size() - 1)];
  }
};

}  // namespace fdsim
