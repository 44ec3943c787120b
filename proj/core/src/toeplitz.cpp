#include "fdsim/toeplitz.hpp"

#include <string>

#include "fdsim/errors.hpp"

namespace fdsim {

const std::array<std::uint8_t, 40> kRssVerificationKey = {
    0x6d, 0x5a, 0x56, 0xda, 0x25, 0x5b, 0x0e, 0xc2, 0x41, 0x67,
    0x25, 0x3d, 0x43, 0xa3, 0x8f, 0xb0, 0xd0, 0xca, 0x2b, 0xcb,
    0xae, 0x7b, 0x30, 0xb4, 0x77, 0xcb, 0x2d, 0xa3, 0x80, 0x30,
    0xf2, 0x0c, 0x6a, 0x42, 0xb7, 0x3b, 0xbe, 0xac, 0x01, 0xfa,
};

std::uint32_t toeplitz_hash(std::span<const std::uint8_t> input,
                            std::span<const std::uint8_t> key) {
  if (key.size() < input.size() + kToeplitzWindowBytes) {
    throw KeyTooShort("toeplitz key of " + std::to_string(key.size()) +
                      " bytes too short for " + std::to_string(input.size()) +
                      "-byte input (need input + 4)");
  }

  // 32-bit window over the key, advanced one bit per input bit.
  std::uint32_t window = (std::uint32_t(key[0]) << 24) | (std::uint32_t(key[1]) << 16) |
                         (std::uint32_t(key[2]) << 8) | std::uint32_t(key[3]);
  std::uint32_t hash = 0;
  std::size_t next_key_bit = 32;

  for (std::uint8_t byte : input) {
    for (int bit = 7; bit >= 0; --bit) {
      if ((byte >> bit) & 1) hash ^= window;
      window <<= 1;
      if ((key[next_key_bit / 8] >> (7 - next_key_bit % 8)) & 1) window |= 1;
      ++next_key_bit;
    }
  }
  return hash;
}

std::uint32_t hash_5tuple(const FlowKey& flow, std::span<const std::uint8_t> key) {
  auto input = serialize_hash_input(flow);
  return toeplitz_hash(input, key) ^ flow.protocol;
}

}  // namespace fdsim
