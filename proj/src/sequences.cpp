#include "fibconv/sequences.hpp"

#include "fibconv/error.hpp"

#include <cctype>

namespace fibconv {

void RecurrenceSpec::validate() const {
  if (coeffs.empty()) throw InvalidParameter("sequence '" + name + "': order must be >= 1");
  if (seeds.size() < coeffs.size())
    throw InvalidParameter("sequence '" + name + "': fewer seeds than the order");
}

std::string mstep_name(int m) {
  switch (m) {
    case 1: return "F1";
    case 2: return "F";
    case 3: return "T";
    case 4: return "Q";
    case 5: return "P";
    case 6: return "hexanacci";
    case 7: return "heptanacci";
    case 8: return "octanacci";
    default: return "F(" + std::to_string(m) + ")";
  }
}

RecurrenceSpec make_mstep(int m) {
  if (m < 1) throw InvalidParameter("m-step order must be >= 1, got " + std::to_string(m));
  RecurrenceSpec spec;
  spec.name = mstep_name(m);
  spec.coeffs.assign(static_cast<std::size_t>(m), BigInt(1));
  if (m == 1) {
    spec.seeds = {BigInt(0), BigInt(1)};
    return spec;
  }
  spec.seeds.reserve(static_cast<std::size_t>(m));
  spec.seeds.emplace_back(0);
  spec.seeds.emplace_back(1);
  BigInt v(1);
  for (int k = 2; k < m; ++k) {
    spec.seeds.push_back(v);
    v *= 2;
  }
  return spec;
}

const std::map<std::string, RecurrenceSpec>& registry() {
  static const std::map<std::string, RecurrenceSpec> reg = [] {
    std::map<std::string, RecurrenceSpec> r;
    for (int m = 1; m <= 8; ++m) {
      auto s = make_mstep(m);
      r.emplace(s.name, s);
    }
    r.emplace("jacobsthal", RecurrenceSpec{"jacobsthal", {1, 2}, {0, 1}});
    r.emplace("pell", RecurrenceSpec{"pell", {2, 1}, {0, 1}});
    r.emplace("pow2", RecurrenceSpec{"pow2", {2}, {1}});
    return r;
  }();
  return reg;
}

namespace {

const std::map<std::string, std::string>& aliases() {
  static const std::map<std::string, std::string> a = {
      {"F2", "F"},          {"F3", "T"},           {"F4", "Q"},
      {"F5", "P"},          {"F6", "hexanacci"},   {"F7", "heptanacci"},
      {"F8", "octanacci"},  {"s", "hexanacci"},    {"S", "heptanacci"},
      {"O", "octanacci"},   {"J", "jacobsthal"},   {"Pell", "pell"},
      {"2", "pow2"},
  };
  return a;
}

}  // namespace

RecurrenceSpec lookup_sequence(const std::string& name) {
  const auto& reg = registry();
  if (auto it = reg.find(name); it != reg.end()) return it->second;
  if (auto it = aliases().find(name); it != aliases().end()) return reg.at(it->second);
  // F(<m>)
  if (name.size() >= 4 && name.front() == 'F' && name[1] == '(' && name.back() == ')') {
    const std::string digits = name.substr(2, name.size() - 3);
    bool ok = !digits.empty() && digits.size() < 6;
    for (char c : digits) ok = ok && std::isdigit(static_cast<unsigned char>(c));
    if (ok) {
      const int m = std::stoi(digits);
      if (m >= 1) return make_mstep(m);
    }
  }
  throw UnknownSequence(name);
}

int mstep_order(const RecurrenceSpec& spec) {
  const int m = spec.order();
  return spec == make_mstep(m) ? m : 0;
}

SequenceHandle::SequenceHandle(RecurrenceSpec spec) : spec_(std::move(spec)) {
  spec_.validate();
  cache_.assign(spec_.seeds.begin(), spec_.seeds.end());
}

void SequenceHandle::extend_to(long n) {
  const long order = spec_.order();
  for (long k = static_cast<long>(cache_.size()); k <= n; ++k) {
    BigInt v(0);
    for (long j = 1; j <= order && j <= k; ++j)
      v += spec_.coeffs[static_cast<std::size_t>(j - 1)] * cache_[static_cast<std::size_t>(k - j)];
    cache_.push_back(std::move(v));
  }
}

const BigInt& SequenceHandle::term(long n) {
  if (n < 0) return zero_;
  if (n >= static_cast<long>(cache_.size())) extend_to(n);
  return cache_[static_cast<std::size_t>(n)];
}

std::vector<BigInt> SequenceHandle::terms(long count) {
  std::vector<BigInt> out;
  if (count <= 0) return out;
  term(count - 1);
  out.assign(cache_.begin(), cache_.begin() + count);
  return out;
}

}  // namespace fibconv
