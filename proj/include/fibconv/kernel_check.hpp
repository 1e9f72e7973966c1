#pragma once

// Decides whether sum_s coeff_s * a_{n+s} + correction(n) vanishes for every
// n >= n0, where a is an order-m linear recurrence.
//
// A finite combination of shifts satisfies the same recurrence once every
// shifted index is past the seeds, so beyond the transient window and the
// correction support it is identically zero iff it vanishes at m consecutive
// indices. Earlier indices are checked directly.

#include "fibconv/sequences.hpp"

#include <map>

namespace fibconv {

using ShiftCombo = std::map<long, Rational>;       // shift -> coefficient
using Corrections = std::map<long, Rational>;      // n -> value

bool kernel_check(const RecurrenceSpec& seq, const ShiftCombo& combo,
                  const Corrections& corrections = {}, long n0 = 0);

// First index from which `combo` on `seq` obeys the recurrence of `seq`.
long recurrence_threshold(const RecurrenceSpec& seq, const ShiftCombo& combo);

}  // namespace fibconv
