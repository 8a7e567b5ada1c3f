#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <limits>

namespace tsallis {

// xoshiro256** seeded through SplitMix64.
//
// Streams are counter-derived: Rng::substream(seed, {a, b, ...}) hashes the
// master seed together with a path of counters, so a replication's stream
// depends only on its coordinates and never on how work was scheduled.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);

  static Rng substream(std::uint64_t master,
                       std::initializer_list<std::uint64_t> path);

  // Key of the substream for a given path (the value Rng::substream seeds
  // with). Reports record it so a cell can be traced back to its stream.
  static std::uint64_t derive(std::uint64_t master,
                              std::initializer_list<std::uint64_t> path);

  result_type operator()() { return next(); }
  result_type next();

  // Uniform on the open interval (0, 1); never returns 0 or 1.
  double uniform();

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

 private:
  std::array<std::uint64_t, 4> s_{};
};

// SplitMix64 finalizer, exposed for hashing keys.
std::uint64_t mix64(std::uint64_t x);

}  // namespace tsallis
