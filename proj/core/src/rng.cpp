#include "fdsim/rng.hpp"

#include <cmath>

namespace fdsim {

namespace {

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

double RngStream::exponential(double mean) {
  // Inverse transform on an open-interval uniform: the +0.5 offset keeps
  // the draw strictly inside (0,1), so the gap is always positive.
  double u = (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  return -std::log(u) * mean;
}

std::uint32_t RngStream::pick(std::uint32_t bound) {
  // Multiply-shift range reduction; unbiased enough for model decisions
  // and exactly reproducible.
  return static_cast<std::uint32_t>(
      (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
}

std::uint64_t RngSet::derive_seed(std::uint64_t master, std::string_view label) {
  return splitmix64(master ^ fnv1a64(label));
}

RngStream& RngSet::stream(std::string_view label) {
  auto it = streams_.find(label);
  if (it == streams_.end()) {
    it = streams_.emplace(std::string(label), RngStream(derive_seed(seed_, label)))
             .first;
  }
  return it->second;
}

}  // namespace fdsim
