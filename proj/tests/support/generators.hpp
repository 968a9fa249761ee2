#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "seifsec/seifert.hpp"

namespace gen {

using seifsec::ExceptionalPair;
using seifsec::Int;
using seifsec::MoveSpec;
using seifsec::SeifertData;

class Source {
 public:
  explicit Source(std::uint64_t seed) : rng_(seed) {}

  Int uniform(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }
  std::mt19937_64& engine() { return rng_; }

  ExceptionalPair pair(Int alpha_max, Int beta_max) {
    for (;;) {
      const Int a = uniform(1, alpha_max);
      const Int b = uniform(-beta_max, beta_max);
      if (std::gcd(a, b) == 1) return {a, b};
    }
  }

  SeifertData seifert(Int genus_max, std::size_t n_max, Int alpha_max, Int beta_max) {
    const Int g = uniform(0, genus_max);
    const auto n = static_cast<std::size_t>(uniform(0, static_cast<Int>(n_max)));
    std::vector<ExceptionalPair> pairs;
    for (std::size_t i = 0; i < n; ++i) pairs.push_back(pair(alpha_max, beta_max));
    return SeifertData(g, pairs);
  }

  /// Twist vector of length n with zero sum and entries bounded by k_max.
  std::vector<Int> balanced_twist(std::size_t n, Int k_max) {
    std::vector<Int> k(n, 0);
    if (n < 2) return k;
    for (int step = 0; step < 3; ++step) {
      const auto i = static_cast<std::size_t>(uniform(0, static_cast<Int>(n) - 1));
      const auto j = static_cast<std::size_t>(uniform(0, static_cast<Int>(n) - 1));
      const Int t = uniform(-k_max, k_max);
      k[i] += t;
      k[j] -= t;
    }
    return k;
  }

  /// A move that applies to m.
  MoveSpec move(const SeifertData& m) {
    const auto n = m.size();
    std::vector<std::size_t> trivial;
    for (std::size_t i = 0; i < n; ++i) {
      if (m.pairs()[i].is_trivial()) trivial.push_back(i);
    }
    switch (uniform(0, 3)) {
      case 0: {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::shuffle(order.begin(), order.end(), rng_);
        return seifsec::moves::Permute{order};
      }
      case 1:
        return seifsec::moves::InsertTrivial{};
      case 2:
        if (!trivial.empty()) {
          return seifsec::moves::DeleteTrivial{trivial[static_cast<std::size_t>(uniform(0, static_cast<Int>(trivial.size()) - 1))]};
        }
        return seifsec::moves::InsertTrivial{};
      default:
        return seifsec::moves::Twist{balanced_twist(n, 3)};
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gen
