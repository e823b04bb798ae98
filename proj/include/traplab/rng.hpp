// Counter-based randomness: every random quantity in the project is a pure
// function of a 64-bit key and a 64-bit counter, so any stream can be
// replayed from any index and parallel workers never share state.
#pragma once

#include <cmath>
#include <cstdint>

namespace traplab {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

// Word `ctr` of the SplitMix64 stream keyed by `key`.
constexpr std::uint64_t hash2(std::uint64_t key, std::uint64_t ctr) {
  return mix64(key + (ctr + 1) * kGolden);
}

// Seed for (master, purpose, index); used for per-trial noise/environment
// streams so that results are independent of worker count and scheduling.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t purpose,
                                    std::uint64_t index) {
  return hash2(hash2(master, purpose), index);
}

// Uniform on the open interval (0,1); never returns 0 or 1 exactly, so
// -log(u) is finite and positive.
inline double u01_open(std::uint64_t h) {
  return (static_cast<double>(h >> 11) + 0.5) * 0x1.0p-53;
}

inline double exp1_from(std::uint64_t h) { return -std::log(u01_open(h)); }

// Sequential stream over the keyed counter hash.
class RngStream {
 public:
  explicit RngStream(std::uint64_t key) : key_(key) {}

  std::uint64_t next_u64() { return hash2(key_, ctr_++); }
  double u01() { return u01_open(next_u64()); }
  double exponential() { return -std::log(u01()); }

 private:
  std::uint64_t key_;
  std::uint64_t ctr_ = 0;
};

// Stream purposes (salts) used by derive_seed across the project.
namespace purpose {
inline constexpr std::uint64_t kEnvironment = 0x656e76697230ull;  // per-trial env seeds
inline constexpr std::uint64_t kNoise = 0x6e6f697365ull;          // per-trial walk noise
inline constexpr std::uint64_t kSampler = 0x73616d706cull;        // stable-law streams
inline constexpr std::uint64_t kWindow = 0x77696e646full;         // trap-window depths
}  // namespace purpose

}  // namespace traplab
