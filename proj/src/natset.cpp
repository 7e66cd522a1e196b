#include "seqtop/natset.hpp"

#include <numeric>

#include "seqtop/errors.hpp"

namespace seqtop {

namespace {

constexpr std::uint32_t kMaxPeriod = 1u << 20;

NatSet canonicalize(NatSet s) {
  // Shrink the period to the smallest divisor consistent with the cycle.
  for (std::uint32_t d = 1; d < s.K; ++d) {
    if (s.K % d != 0) continue;
    bool ok = true;
    for (std::uint32_t i = 0; i < s.K && ok; ++i) ok = s.cycle[i] == s.cycle[i % d];
    if (ok) {
      s.cycle.resize(d);
      s.K = d;
      break;
    }
  }
  while (s.T > 0 && s.head[s.T - 1] == s.cycle[(s.T - 1) % s.K]) {
    s.head.pop_back();
    --s.T;
  }
  return s;
}

template <class F>
NatSet combine(const NatSet& a, const NatSet& b, F&& f) {
  NatSet r;
  r.T = std::max(a.T, b.T);
  r.K = nat_lcm(a.K, b.K);
  r.head.resize(r.T);
  for (std::uint32_t v = 0; v < r.T; ++v) r.head[v] = f(a.member(v), b.member(v)) ? 1 : 0;
  r.cycle.resize(r.K);
  for (std::uint32_t i = 0; i < r.K; ++i) {
    std::uint64_t v = r.T + i;
    // Pick the representative of residue (v % K) at or beyond the threshold;
    // absolute phase makes any such representative equivalent.
    r.cycle[v % r.K] = f(a.member(v), b.member(v)) ? 1 : 0;
  }
  return canonicalize(std::move(r));
}

}  // namespace

NatSet NatSet::empty_set() { return NatSet{0, 1, {}, {0}}; }
NatSet NatSet::all() { return NatSet{0, 1, {}, {1}}; }

NatSet NatSet::singleton(std::uint32_t v) {
  NatSet r{v + 1, 1, std::vector<std::uint8_t>(v + 1, 0), {0}};
  r.head[v] = 1;
  return r;
}

NatSet NatSet::from_threshold(std::uint32_t c) {
  NatSet r{c, 1, std::vector<std::uint8_t>(c, 0), {1}};
  return canonicalize(std::move(r));
}

NatSet NatSet::finite(const std::vector<std::uint32_t>& values) {
  NatSet r = empty_set();
  for (auto v : values) r = nat_union(r, singleton(v));
  return r;
}

NatSet NatSet::from_samples(std::uint32_t threshold, std::uint32_t period,
                            const std::vector<std::uint8_t>& sample) {
  if (period == 0 || sample.size() < threshold + period)
    throw PreconditionError("sample prefix shorter than threshold plus period");
  NatSet r;
  r.T = threshold;
  r.K = period;
  r.head.assign(sample.begin(), sample.begin() + threshold);
  r.cycle.assign(period, 0);
  for (std::uint32_t i = 0; i < period; ++i) {
    std::uint64_t v = threshold + i;
    r.cycle[v % period] = sample[static_cast<size_t>(v)];
  }
  return canonicalize(std::move(r));
}

NatSet nat_union(const NatSet& a, const NatSet& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}
NatSet nat_intersect(const NatSet& a, const NatSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}
NatSet nat_complement(const NatSet& a) {
  return combine(a, a, [](bool x, bool) { return !x; });
}
NatSet nat_diff(const NatSet& a, const NatSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && !y; });
}

bool nat_subset(const NatSet& a, const NatSet& b) { return nat_empty(nat_diff(a, b)); }

bool nat_empty(const NatSet& a) {
  for (auto h : a.head)
    if (h) return false;
  for (auto c : a.cycle)
    if (c) return false;
  return true;
}

bool nat_all(const NatSet& a) {
  for (auto h : a.head)
    if (!h) return false;
  for (auto c : a.cycle)
    if (!c) return false;
  return true;
}

bool nat_finite(const NatSet& a) {
  for (auto c : a.cycle)
    if (c) return false;
  return true;
}

bool nat_cofinite(const NatSet& a) {
  for (auto c : a.cycle)
    if (!c) return false;
  return true;
}

bool nat_infinite(const NatSet& a) { return !nat_finite(a); }

std::uint64_t nat_min(const NatSet& a) {
  for (std::uint32_t v = 0; v < a.T; ++v)
    if (a.head[v]) return v;
  for (std::uint32_t i = 0; i < a.K; ++i) {
    std::uint64_t v = a.T + i;
    if (a.cycle[v % a.K]) return v;
  }
  throw PreconditionError("smallest member of an empty index set");
}

std::vector<std::uint64_t> nat_members_up_to(const NatSet& a, std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t v = 0; v <= bound; ++v)
    if (a.member(v)) out.push_back(v);
  return out;
}

NatSet nat_residue_class(const NatSet& a, std::uint32_t period, std::uint32_t residue) {
  if (period == 0) throw PreconditionError("residue class with zero period");
  NatSet cls;
  cls.T = 0;
  cls.K = period;
  cls.cycle.assign(period, 0);
  cls.cycle[residue % period] = 1;
  return nat_intersect(a, cls);
}

std::uint32_t nat_lcm(std::uint32_t a, std::uint32_t b) {
  std::uint64_t l = std::lcm<std::uint64_t>(a, b);
  if (l > kMaxPeriod) throw CapacityError("index-set period exceeds supported bound");
  return static_cast<std::uint32_t>(l);
}

std::string nat_describe(const NatSet& a) {
  if (nat_empty(a)) return "{}";
  std::string s = "{";
  bool first = true;
  for (std::uint32_t v = 0; v < a.T; ++v)
    if (a.head[v]) {
      if (!first) s += ",";
      s += std::to_string(v);
      first = false;
    }
  for (std::uint32_t i = 0; i < a.K; ++i) {
    std::uint64_t v = a.T + i;
    if (a.cycle[v % a.K]) {
      if (!first) s += ",";
      s += std::to_string(v) + "+" + std::to_string(a.K) + "k";
      first = false;
    }
  }
  return s + "}";
}

}  // namespace seqtop
