#include "steenrod/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <stdexcept>

#include "steenrod/hopf.hpp"
#include "steenrod/milnor.hpp"

namespace steenrod::kernels {

std::vector<Index> build_table_serial(const FiniteGroupTable& g) {
  const std::size_t n = g.size();
  std::vector<Index> t(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = g.compute_product(static_cast<Index>(a), static_cast<Index>(b));
  }
  return t;
}

std::vector<Index> build_table_parallel(const FiniteGroupTable& g) {
  const auto n = static_cast<long long>(g.size());
  std::vector<Index> t(static_cast<std::size_t>(n * n));
#pragma omp parallel for schedule(dynamic, 1)
  for (long long a = 0; a < n; ++a) {
    for (long long b = 0; b < n; ++b) {
      t[static_cast<std::size_t>(a * n + b)] = g.compute_product(static_cast<Index>(a), static_cast<Index>(b));
    }
  }
  return t;
}

namespace {

std::vector<Index> collect(const std::vector<char>& mark) {
  std::vector<Index> out;
  for (std::size_t i = 0; i < mark.size(); ++i) {
    if (mark[i]) out.push_back(static_cast<Index>(i));
  }
  return out;
}

}  // namespace

std::vector<Index> commutator_set_serial(const FiniteGroupTable& g, const std::vector<Index>& lhs,
                                         const std::vector<Index>& rhs) {
  std::vector<char> mark(g.size(), 0);
  for (auto a : lhs) {
    for (auto b : rhs) mark[g.commutator(a, b)] = 1;
  }
  return collect(mark);
}

std::vector<Index> commutator_set_parallel(const FiniteGroupTable& g, const std::vector<Index>& lhs,
                                           const std::vector<Index>& rhs) {
  std::vector<char> mark(g.size(), 0);
  const auto na = static_cast<long long>(lhs.size());
#pragma omp parallel
  {
    std::vector<char> local(g.size(), 0);
#pragma omp for schedule(dynamic, 4) nowait
    for (long long i = 0; i < na; ++i) {
      for (auto b : rhs) local[g.commutator(lhs[static_cast<std::size_t>(i)], b)] = 1;
    }
#pragma omp critical
    for (std::size_t i = 0; i < local.size(); ++i) mark[i] |= local[i];
  }
  return collect(mark);
}

namespace {

constexpr int kMaxSweepIndex = 8;

struct SweepPlan {
  unsigned p;
  int k;
  int m;
  std::uint64_t bound;       // exclusive bound on every r_n
  std::uint64_t threshold;   // p^{k+1}
  std::uint64_t r_count;     // bound^m
  std::uint32_t e_count;     // 2^{m+1} for odd p, 1 for p = 2
  std::array<std::uint64_t, kMaxSweepIndex + 1> cap_r{};  // cap of xi_n / zeta_n in A/J, 0 = none
  std::uint32_t e_kill = 0;  // bit n set when tau_n is killed in A/J
};

SweepPlan plan(unsigned p, int k, int m) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic is not prime");
  if (k < 0) throw std::invalid_argument("negative level");
  if (m < 1 || m > kMaxSweepIndex) throw std::invalid_argument("sweep index out of range");
  SweepPlan s{p, k, m, milnor_threshold(p, k + 1), milnor_threshold(p, k), 1, 1, {}, 0};
  for (int i = 0; i < m; ++i) {
    s.r_count *= s.bound;
    if (s.r_count > (std::uint64_t{1} << 40)) throw std::length_error("sweep too large");
  }
  if (p != 2) s.e_count = 1u << (m + 1);
  // The oracle: caps of the quotient presentation A/J<k>.
  const auto q = HopfAlgebra::mod_J(p, k, m, 0);
  const auto& alg = *q.algebra();
  const GeneratorKind poly = p == 2 ? GeneratorKind::kZeta : GeneratorKind::kXi;
  for (int n = 1; n <= m; ++n) s.cap_r[static_cast<std::size_t>(n)] = alg.generator(*q.find(poly, n)).cap;
  if (p != 2) {
    for (int n = 0; n <= m; ++n) {
      if (alg.generator(*q.find(GeneratorKind::kTau, n)).cap == 1) s.e_kill |= 1u << n;
    }
  }
  return s;
}

void decode_r(const SweepPlan& s, std::uint64_t code, std::uint32_t* r) {
  for (int i = 0; i < s.m; ++i) {
    r[i] = static_cast<std::uint32_t>(code % s.bound);
    code /= s.bound;
  }
}

// Checks every E against one R; returns (violations, mismatches). The
// membership tests read only e_0 from E, so they are evaluated once per
// value of e_0.
inline std::pair<std::uint64_t, std::uint64_t> check_r(const SweepPlan& s, const std::uint32_t* r) {
  bool j[2], span[2];
  for (int e0 = 0; e0 < 2; ++e0) {
    j[e0] = in_J_raw(r, s.m, e0 != 0, s.k, s.p, s.threshold);
    span[e0] = in_span_raw(r, s.m, e0 != 0, s.k, s.p, s.threshold);
  }
  bool r_vanishes = false;
  for (int n = 1; n <= s.m; ++n) {
    const auto cap = s.cap_r[static_cast<std::size_t>(n)];
    if (cap != kNoCap && r[n - 1] >= cap) r_vanishes = true;
  }
  std::uint64_t bad = 0, mismatch = 0;
  for (std::uint32_t e = 0; e < s.e_count; ++e) {
    const int e0 = static_cast<int>(e & 1u);
    const bool vanishes = r_vanishes || (e & s.e_kill) != 0;
    bad += (j[e0] == span[e0]);
    mismatch += (j[e0] != vanishes);
  }
  return {bad, mismatch};
}

std::string describe_failure(const SweepPlan& s, std::uint64_t code) {
  std::array<std::uint32_t, kMaxSweepIndex> r{};
  decode_r(s, code, r.data());
  std::string out = "p=" + std::to_string(s.p) + " k=" + std::to_string(s.k) + " R=(";
  for (int i = 0; i < s.m; ++i) out += (i ? "," : "") + std::to_string(r[static_cast<std::size_t>(i)]);
  return out + ")";
}

}  // namespace

SweepResult complementarity_sweep_serial(unsigned p, int k, int max_index) {
  const SweepPlan s = plan(p, k, max_index);
  SweepResult res;
  std::array<std::uint32_t, kMaxSweepIndex> r{};
  for (std::uint64_t code = 0; code < s.r_count; ++code) {
    decode_r(s, code, r.data());
    const auto [bad, mismatch] = check_r(s, r.data());
    if ((bad || mismatch) && res.first_failure.empty()) res.first_failure = describe_failure(s, code);
    res.violations += bad;
    res.oracle_mismatches += mismatch;
  }
  res.checked = s.r_count * s.e_count;
  return res;
}

SweepResult complementarity_sweep_parallel(unsigned p, int k, int max_index) {
  const SweepPlan s = plan(p, k, max_index);
  const auto total = static_cast<long long>(s.r_count);
  std::uint64_t bad = 0, mismatch = 0;
  long long first = total;
#pragma omp parallel
  {
    std::array<std::uint32_t, kMaxSweepIndex> r{};
    long long local_first = total;
#pragma omp for reduction(+ : bad, mismatch) schedule(static)
    for (long long code = 0; code < total; ++code) {
      decode_r(s, static_cast<std::uint64_t>(code), r.data());
      const auto [b, mm] = check_r(s, r.data());
      if ((b || mm) && code < local_first) local_first = code;
      bad += b;
      mismatch += mm;
    }
#pragma omp critical
    first = std::min(first, local_first);
  }
  SweepResult res;
  res.checked = s.r_count * s.e_count;
  res.violations = bad;
  res.oracle_mismatches = mismatch;
  if (first < total) res.first_failure = describe_failure(s, static_cast<std::uint64_t>(first));
  return res;
}

}  // namespace steenrod::kernels
