#pragma once

// Exhaustive search for identities
//   sum_{k in K} sum_{j<p} a_{n+j+k} = N * a_{n+l}   (all n >= 0)
// on the m-step sequence F^(m).

#include "fibconv/kernel_check.hpp"

#include <json.hpp>

#include <optional>
#include <vector>

namespace fibconv {

struct PatternSolution {
  int m = 0;
  std::vector<int> K;  // sorted, K[0] = 0
  int p = 0;
  Rational N;
  long l = 0;
  bool integer_n() const { return is_integer(N); }
  friend bool operator==(const PatternSolution&, const PatternSolution&) = default;
};

struct SearchOptions {
  int m = 2;
  int p_max = 10;
  int k_card_max = 3;
  int k_span_max = 6;
  std::optional<long> l_max;  // default max(K) + p + m
};

// Candidates in ascending (p, K, l) order; translates of K are never produced.
std::vector<PatternSolution> search(const SearchOptions& opts);

// sum_{k in K} sum_{j<p} x^{k+j} as shift -> multiplicity.
ShiftCombo window_combination(const std::vector<int>& K, int p);

nlohmann::ordered_json to_json(const PatternSolution& s);

}  // namespace fibconv
