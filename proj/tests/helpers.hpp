#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "twist/automorphism.hpp"
#include "twist/oracle.hpp"
#include "twist/word.hpp"

namespace twist_test {

inline twist::Word W(const char* text, int rank) { return twist::parse_word(text, rank); }

inline twist::Automorphism swap_ab() {
  return twist::Automorphism::from_images({W("b", 2), W("a", 2)});
}

inline twist::VirtuallyInnerCert swap_cert() { return {2, twist::Word(2)}; }

// phi: a -> ab, b -> b; not virtually inner.
inline twist::Automorphism shear() {
  return twist::Automorphism::from_images({W("ab", 2), W("b", 2)});
}

inline std::vector<twist::Word> sorted_words(std::vector<twist::Word> ws) {
  std::sort(ws.begin(), ws.end(), [](const twist::Word& a, const twist::Word& b) {
    return twist::word_less(a, b);
  });
  return ws;
}

// Fixture sampler shared by the randomized suites: small ranks, orders
// achievable at those ranks, short conjugators.
inline twist::Fixture sample_fixture(std::mt19937_64& rng, int max_rank = 3, int max_wlen = 3) {
  const int rank = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_rank - 1));
  static const int orders[] = {1, 1, 2, 2, 3, 4};
  int order = orders[rng() % 6];
  if (order > rank && order % 2 != 0) order = 2;
  const int wl = static_cast<int>(rng() % static_cast<std::uint64_t>(max_wlen + 1));
  return twist::random_fixture(rank, order, wl, rng());
}

}  // namespace twist_test
