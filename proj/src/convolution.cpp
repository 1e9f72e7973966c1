#include "fibconv/convolution.hpp"

#include "fibconv/error.hpp"

namespace fibconv {

BigInt conv2(SequenceHandle& a, SequenceHandle& b, long n) {
  BigInt acc(0);
  for (long j = 0; j <= n; ++j) acc += a.term(j) * b.term(n - j);
  return acc;
}

std::vector<BigInt> conv_multi_prefix(std::vector<SequenceHandle>& factors, long count) {
  if (factors.empty()) throw InvalidParameter("conv_multi: empty factor list");
  if (count <= 0) return {};
  std::vector<BigInt> acc = factors.front().terms(count);
  for (std::size_t f = 1; f < factors.size(); ++f) {
    const std::vector<BigInt> next = factors[f].terms(count);
    std::vector<BigInt> out(static_cast<std::size_t>(count));
    for (long n = 0; n < count; ++n)
      for (long j = 0; j <= n; ++j) out[static_cast<std::size_t>(n)] += acc[static_cast<std::size_t>(j)] * next[static_cast<std::size_t>(n - j)];
    acc = std::move(out);
  }
  return acc;
}

BigInt conv_multi(std::vector<SequenceHandle>& factors, long n) {
  if (factors.empty()) throw InvalidParameter("conv_multi: empty factor list");
  if (n < 0) return BigInt(0);
  return conv_multi_prefix(factors, n + 1).back();
}

namespace {

void enumerate(std::vector<SequenceHandle>& factors, std::size_t i, long remaining,
               const BigInt& partial, BigInt& acc) {
  if (i + 1 == factors.size()) {
    acc += partial * factors[i].term(remaining);
    return;
  }
  for (long k = 0; k <= remaining; ++k) {
    const BigInt& t = factors[i].term(k);
    if (t == 0) continue;
    enumerate(factors, i + 1, remaining - k, partial * t, acc);
  }
}

}  // namespace

BigInt multi_index_sum_direct(std::vector<SequenceHandle>& factors, long b) {
  if (factors.empty()) throw InvalidParameter("multi_index_sum_direct: empty factor list");
  BigInt acc(0);
  if (b < 0) return acc;
  enumerate(factors, 0, b, BigInt(1), acc);
  return acc;
}

}  // namespace fibconv
