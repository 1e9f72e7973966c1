#include "fibconv/kernel_check.hpp"

#include <algorithm>

namespace fibconv {

long recurrence_threshold(const RecurrenceSpec& seq, const ShiftCombo& combo) {
  if (combo.empty()) return 0;
  // a_k follows the recurrence for k >= seed_count; need n + min_shift there.
  return std::max(0L, static_cast<long>(seq.seed_count()) - combo.begin()->first);
}

bool kernel_check(const RecurrenceSpec& seq, const ShiftCombo& combo,
                  const Corrections& corrections, long n0) {
  SequenceHandle h(seq);
  auto value = [&](long n) {
    Rational v(0);
    for (const auto& [shift, c] : combo) v += c * Rational(h.term(n + shift));
    if (auto it = corrections.find(n); it != corrections.end()) v += it->second;
    return v;
  };
  long start = std::max(n0, recurrence_threshold(seq, combo));
  if (!corrections.empty()) start = std::max(start, corrections.rbegin()->first + 1);
  for (long n = n0; n < start; ++n)
    if (value(n) != 0) return false;
  for (long n = start; n < start + seq.order(); ++n)
    if (value(n) != 0) return false;
  return true;
}

}  // namespace fibconv
