#ifndef FQRANK_RANDOM_STREAM_H_
#define FQRANK_RANDOM_STREAM_H_

#include <cstdint>
#include <random>

namespace fqrank {

// Seed used when none is given on the command line or in FQRANK_SEED.
inline constexpr std::uint64_t kDefaultSeed = 0x243F6A8885A308D3ull;

// Deterministic 64-bit generator (mt19937_64 keyed by a SplitMix64 mix of the
// seed and a stream id). Identical (seed, stream id) pairs give identical
// output on every platform. Not cryptographic.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  std::uint64_t next() { return engine_(); }
  // Uniform on [0, bound), bound >= 1, without modulo bias.
  std::uint64_t uniform(std::uint64_t bound);

  // Independent child stream; depends only on (seed, stream id, index).
  RandomStream substream(std::uint64_t index) const;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace fqrank

#endif  // FQRANK_RANDOM_STREAM_H_
