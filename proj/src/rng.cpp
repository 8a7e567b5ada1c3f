#include "tsallis/rng.hpp"

namespace tsallis {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

Rng::Rng(std::uint64_t seed) {
  std::uint64_t state = seed;
  for (auto& word : s_) {
    state += kGolden;
    word = mix64(state);
  }
}

std::uint64_t Rng::derive(std::uint64_t master,
                          std::initializer_list<std::uint64_t> path) {
  std::uint64_t key = mix64(master + kGolden);
  std::uint64_t depth = 0;
  for (std::uint64_t c : path) {
    ++depth;
    key = mix64(key ^ mix64(c + depth * kGolden));
  }
  return key;
}

Rng Rng::substream(std::uint64_t master,
                   std::initializer_list<std::uint64_t> path) {
  return Rng(derive(master, path));
}

Rng::result_type Rng::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() {
  // 53 random bits placed at the centre of their bin.
  return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace tsallis
