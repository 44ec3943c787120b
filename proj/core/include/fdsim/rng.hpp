#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>

namespace fdsim {

// One deterministic random stream. Draws depend only on the stream's seed
// and the call index; distribution code is written out explicitly so the
// sequence is identical across standard library implementations.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1), 53 random bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Exponential with the given mean (mean > 0).
  double exponential(double mean);

  // Uniform integer in [0, bound); bound >= 1.
  std::uint32_t pick(std::uint32_t bound);

 private:
  std::mt19937_64 gen_;
};

// Registry of named streams, all derived from one master seed. Each label
// gets an independent generator, so adding draws in one subsystem does not
// shift the sequences seen by another.
class RngSet {
 public:
  explicit RngSet(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  RngStream& stream(std::string_view label);

  // Seed derivation for a labeled stream: splitmix64(master ^ fnv1a(label)).
  static std::uint64_t derive_seed(std::uint64_t master, std::string_view label);

 private:
  std::uint64_t seed_;
  std::map<std::string, RngStream, std::less<>> streams_;
};

}  // namespace fdsim
