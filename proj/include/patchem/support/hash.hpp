//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PATCHEM_SUPPORT_HASH_HPP_
#define PATCHEM_SUPPORT_HASH_HPP_

#include <cstdint>
#include <initializer_list>

namespace patchem {

// splitmix64 finalizer. The fingerprint and RNG-derivation contracts only
// require a fixed, documented 64-bit mixing function; this is the one.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Order-sensitive combination of a word sequence, seeded at a fixed value.
// Tuples are encoded by feeding their fields in declaration order.
class HashStream {
 public:
  constexpr HashStream() = default;

  constexpr HashStream &feed(std::uint64_t word) {
    state_ = mix64(state_ ^ word);
    return *this;
  }

  constexpr std::uint64_t digest() const { return state_; }

 private:
  std::uint64_t state_ = 0x5bd1e995'9e3779b9ULL;
};

constexpr std::uint64_t hash_words(std::initializer_list<std::uint64_t> ws) {
  HashStream h;
  for (std::uint64_t w : ws) {
    h.feed(w);
  }
  return h.digest();
}

// Stable per-unit seed derivation (per tree, per iteration, ...) so results
// do not depend on scheduling.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t unit) {
  return hash_words({master, unit});
}

}  // namespace patchem

#endif  // PATCHEM_SUPPORT_HASH_HPP_
