#pragma once

// Integer linear-recurrence sequences under the one-sided convention:
// a_n = 0 for n < 0, a_n = seeds[n] for 0 <= n < seeds.size(), and
// a_n = sum_j coeffs[j-1] * a_{n-j} beyond that.

#include "fibconv/rational.hpp"

#include <deque>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace fibconv {

struct RecurrenceSpec {
  std::string name;
  std::vector<BigInt> coeffs;  // c_1 .. c_order
  std::vector<BigInt> seeds;   // a_0 .. a_{L-1}, L >= order

  int order() const { return static_cast<int>(coeffs.size()); }
  int seed_count() const { return static_cast<int>(seeds.size()); }

  // Throws InvalidParameter if the invariants do not hold.
  void validate() const;

  friend bool operator==(const RecurrenceSpec&, const RecurrenceSpec&) = default;
};

// Fibonacci m-step numbers F^(m). m = 1 keeps two seeds (0, 1) because its
// recurrence only starts at n = 2.
RecurrenceSpec make_mstep(int m);

// Canonical name of F^(m): F1, F, T, Q, P, hexanacci, heptanacci, octanacci,
// and F(m) beyond that.
std::string mstep_name(int m);

// F, T, Q, P, hexanacci, heptanacci, octanacci, F1, jacobsthal, pell, pow2.
const std::map<std::string, RecurrenceSpec>& registry();

// Resolves registry names, short aliases (s, S, O, J, Pell, F2 ...) and the
// generic form "F(<m>)". Throws UnknownSequence.
RecurrenceSpec lookup_sequence(const std::string& name);

// If `spec` is an m-step sequence, its m; otherwise 0.
int mstep_order(const RecurrenceSpec& spec);

// Memoizing evaluator for one sequence. Not thread-safe; create one per task.
class SequenceHandle {
 public:
  explicit SequenceHandle(RecurrenceSpec spec);

  const RecurrenceSpec& spec() const { return spec_; }
  const std::string& name() const { return spec_.name; }

  // Total over all integers; extends the cache iteratively. The returned
  // reference stays valid for the handle's lifetime.
  const BigInt& term(long n);
  BigInt operator()(long n) { return term(n); }

  // Terms a_0 .. a_{count-1}.
  std::vector<BigInt> terms(long count);

 private:
  void extend_to(long n);

  RecurrenceSpec spec_;
  std::deque<BigInt> cache_;  // deque: references stay valid while growing
  BigInt zero_{0};
};

// Free-function form of SequenceHandle::term.
inline const BigInt& term(SequenceHandle& h, long n) { return h.term(n); }

}  // namespace fibconv
