#pragma once

#include "fibconv/ratfun.hpp"
#include "fibconv/sequences.hpp"

namespace fibconv {

// Ordinary generating function sum_n a_n x^n of a recurrence: denominator
// 1 - sum_j c_j x^j, numerator from the seeds.
RatFun gf_of(const RecurrenceSpec& spec);

Poly recurrence_denominator(const RecurrenceSpec& spec);

// Generating function of n -> a_{n+shift} under the one-sided convention.
RatFun shifted_gf(const RatFun& gf, int shift);

}  // namespace fibconv
