#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "fdsim/flow_key.hpp"

namespace fdsim {

// The hash consumes a 32-bit key window per input bit, so the key must
// extend 4 bytes past the input.
inline constexpr std::size_t kToeplitzWindowBytes = 4;

// Verification key from the published RSS test suite; also the default
// steering key when a scenario does not supply one.
extern const std::array<std::uint8_t, 40> kRssVerificationKey;

// Toeplitz sliding-window hash: for each set bit of the input, XOR in the
// 32-bit window of the key starting at that bit position.
// Throws KeyTooShort if key.size() < input.size() + 4.
std::uint32_t toeplitz_hash(std::span<const std::uint8_t> input,
                            std::span<const std::uint8_t> key);

// Flow hash used for queue selection: Toeplitz over the serialized
// addresses and ports (12 bytes, big-endian), with the protocol byte
// XOR-folded into the result.
std::uint32_t hash_5tuple(const FlowKey& flow, std::span<const std::uint8_t> key);

}  // namespace fdsim
