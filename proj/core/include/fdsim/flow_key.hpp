#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>

namespace fdsim {

// Receive-direction 5-tuple identifying a flow.
struct FlowKey {
  std::uint32_t src_addr = 0;
  std::uint32_t dst_addr = 0;
  std::uint8_t protocol = 0;
  std::uint16_t src_port = 0;
  std::uint16_t dst_port = 0;

  // Opposite direction of the same conversation: addresses and ports
  // swapped, protocol unchanged. reversed(reversed(k)) == k.
  FlowKey reversed() const {
    return FlowKey{dst_addr, src_addr, protocol, dst_port, src_port};
  }

  auto operator<=>(const FlowKey&) const = default;
};

constexpr std::uint32_t ipv4(std::uint8_t a, std::uint8_t b, std::uint8_t c, std::uint8_t d) {
  return (std::uint32_t(a) << 24) | (std::uint32_t(b) << 16) |
         (std::uint32_t(c) << 8) | std::uint32_t(d);
}

inline std::string format_ipv4(std::uint32_t addr) {
  return std::to_string(addr >> 24) + "." + std::to_string((addr >> 16) & 0xff) + "." +
         std::to_string((addr >> 8) & 0xff) + "." + std::to_string(addr & 0xff);
}

// Hash-input serialization: src_addr, dst_addr, src_port, dst_port,
// big-endian, 12 bytes. The protocol byte is not part of this block; the
// 5-tuple hash folds it in separately.
inline std::array<std::uint8_t, 12> serialize_hash_input(const FlowKey& k) {
  return {
      std::uint8_t(k.src_addr >> 24), std::uint8_t(k.src_addr >> 16),
      std::uint8_t(k.src_addr >> 8),  std::uint8_t(k.src_addr),
      std::uint8_t(k.dst_addr >> 24), std::uint8_t(k.dst_addr >> 16),
      std::uint8_t(k.dst_addr >> 8),  std::uint8_t(k.dst_addr),
      std::uint8_t(k.src_port >> 8),  std::uint8_t(k.src_port),
      std::uint8_t(k.dst_port >> 8),  std::uint8_t(k.dst_port),
  };
}

struct FlowKeyHash {
  std::size_t operator()(const FlowKey& k) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](std::uint64_t v) {
      h ^= v;
      h *= 0x100000001b3ull;
    };
    mix(k.src_addr);
    mix(k.dst_addr);
    mix(k.protocol);
    mix((std::uint64_t(k.src_port) << 16) | k.dst_port);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace fdsim
