#pragma once

// Brute-force convolution ground truth. Deliberately naive and independent
// of the generating-function machinery.

#include "fibconv/sequences.hpp"

#include <vector>

namespace fibconv {

// sum_{j=0}^{n} a_j b_{n-j}; zero for n < 0.
BigInt conv2(SequenceHandle& a, SequenceHandle& b, long n);

// Sum over all nonnegative tuples (k_1..k_l) with k_1 + ... + k_l = n of
// prod_i factors[i]_{k_i}, by iterated two-term convolution.
BigInt conv_multi(std::vector<SequenceHandle>& factors, long n);

// Values of conv_multi for n = 0 .. count-1, sharing the work.
std::vector<BigInt> conv_multi_prefix(std::vector<SequenceHandle>& factors, long count);

// Same quantity by explicit enumeration of the simplex K(l, b), l = factors.size().
// Exponential in l; meant for b up to a few dozen.
BigInt multi_index_sum_direct(std::vector<SequenceHandle>& factors, long b);

}  // namespace fibconv
