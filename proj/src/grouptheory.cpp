#include "steenrod/grouptheory.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "steenrod/kernels.hpp"

namespace steenrod {

std::size_t group_limit_from_env() {
  const char* v = std::getenv("STEENROD_LIMIT");
  if (!v || !*v) return kDefaultGroupLimit;
  char* end = nullptr;
  const unsigned long long x = std::strtoull(v, &end, 10);
  if (*end != '\0' || x == 0) throw std::invalid_argument(std::string("STEENROD_LIMIT must be a positive integer, got '") + v + "'");
  return static_cast<std::size_t>(x);
}

std::string describe(const Presentation& a) {
  std::ostringstream os;
  os << "F_" << a.prime() << '[';
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& g = a.generator(i);
    if (i) os << ',';
    os << g.name << ':' << g.degree;
    if (g.cap != kNoCap) os << '/' << g.cap;
  }
  os << ']';
  return os.str();
}

namespace {

constexpr std::uint64_t kComponentLimit = 10'000'000;

bool contains_eps(const Presentation& a, const Monomial& m) {
  const auto e = a.epsilon_index();
  return e && m.exps[*e] != 0;
}

std::uint64_t encode(const std::vector<Coeff>& coords, unsigned p) {
  std::uint64_t code = 0;
  for (std::size_t j = coords.size(); j-- > 0;) code = code * p + coords[j];
  return code;
}

std::vector<Coeff> decode(std::uint64_t code, std::size_t dim, unsigned p) {
  std::vector<Coeff> c(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    c[j] = static_cast<Coeff>(code % p);
    code /= p;
  }
  return c;
}

}  // namespace

FiniteGroupTable::Index FiniteGroupTable::product(Index a, Index b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  return compute_product(a, b);
}

FiniteGroupTable::Index FiniteGroupTable::compute_product(Index a, Index b) const {
  const auto idx = index_of(compose(elements_.at(a), elements_.at(b)));
  if (!idx) throw std::logic_error("enumerated group is not closed under composition");
  return *idx;
}

FiniteGroupTable::Index FiniteGroupTable::commutator(Index a, Index b) const {
  return product(product(inverse(a), inverse(b)), product(a, b));
}

std::optional<FiniteGroupTable::Index> FiniteGroupTable::index_of(const GroupElement& g) const {
  if (g.truncation() != n_ || !g.flavor().is_base()) return std::nullopt;
  if (g.algebra_ptr() != coeffs_ && !(*g.algebra_ptr() == *coeffs_)) return std::nullopt;
  std::size_t code = 0;
  std::size_t scale = 1;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const auto& comp = components_[i];
    Element v = i == 0 ? g.coeff(0) - Element::one(coeffs_) : g.coeff(static_cast<int>(i));
    const auto coords = coordinates(v, comp.basis);
    if (!(from_coordinates(coeffs_, comp.basis, coords) == v)) return std::nullopt;
    const auto it = comp.position.find(encode(coords, p_));
    if (it == comp.position.end()) return std::nullopt;
    code += it->second * scale;
    scale *= radix_[i];
  }
  return static_cast<Index>(code);
}

FiniteGroupTable enumerate_group(const PresentationPtr& A, int n, const EnumerateOptions& opts) {
  if (n < 0) throw std::invalid_argument("negative n");
  const unsigned p = A->prime();
  if (opts.ev_only && p == 2) throw std::invalid_argument("the even subgroup needs an odd prime");

  FiniteGroupTable g;
  g.p_ = p;
  g.n_ = n;
  g.ev_only_ = opts.ev_only;
  g.coeffs_ = (p == 2 || opts.ev_only || A->epsilon_index()) ? A : adjoin_epsilon(A);
  const auto& C = *g.coeffs_;

  // Choices for each coefficient, as coordinate vectors over a basis.
  std::vector<std::vector<std::vector<Coeff>>> choices(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const Degree d = i == 0 ? 0 : coefficient_degree(p, Flavor::base(), i);
    std::vector<Monomial> all;
    try {
      all = component_basis(C, d);
    } catch (const std::domain_error& e) {
      throw std::domain_error("component of degree " + std::to_string(d) + " is not finite: " + e.what());
    }
    FiniteGroupTable::Component comp;
    for (auto& m : all) {
      const bool eps = contains_eps(C, m);
      if (i == 0 && !eps) continue;
      if (opts.ev_only && eps) continue;
      comp.basis.push_back(std::move(m));
    }
    std::uint64_t total = 1;
    for (std::size_t j = 0; j < comp.basis.size(); ++j) {
      total *= p;
      if (total > kComponentLimit) {
        throw std::length_error("component of degree " + std::to_string(d) + " has more than " +
                                std::to_string(kComponentLimit) + " elements");
      }
    }
    auto& list = choices[static_cast<std::size_t>(i)];
    for (std::uint64_t code = 0; code < total; ++code) {
      auto coords = decode(code, comp.basis.size(), p);
      if (i >= 1) {
        const Element v = from_coordinates(g.coeffs_, comp.basis, coords);
        if (!frobenius(v, static_cast<unsigned>(n - i + 1)).is_zero()) continue;
      }
      comp.position.emplace(code, static_cast<FiniteGroupTable::Index>(list.size()));
      list.push_back(std::move(coords));
    }
    g.radix_.push_back(list.size());
    g.components_.push_back(std::move(comp));
  }

  std::size_t order = 1;
  for (auto r : g.radix_) {
    if (r != 0 && order > opts.limit / r) {
      throw std::length_error("group order exceeds the enumeration limit " + std::to_string(opts.limit));
    }
    order *= r;
  }
  if (order > opts.limit) throw std::length_error("group order exceeds the enumeration limit " + std::to_string(opts.limit));

  g.elements_.reserve(order);
  for (std::size_t idx = 0; idx < order; ++idx) {
    std::size_t rest = idx;
    std::vector<Element> coeffs;
    for (int i = 0; i <= n; ++i) {
      const auto r = g.radix_[static_cast<std::size_t>(i)];
      const auto& comp = g.components_[static_cast<std::size_t>(i)];
      Element v = from_coordinates(g.coeffs_, comp.basis, choices[static_cast<std::size_t>(i)][rest % r]);
      rest /= r;
      if (i == 0) v += Element::one(g.coeffs_);
      coeffs.push_back(std::move(v));
    }
    g.elements_.emplace_back(std::move(coeffs), Flavor::base());
  }
  g.identity_ = 0;

  g.inverses_.resize(order);
  for (std::size_t a = 0; a < order; ++a) {
    const auto inv = g.index_of(invert(g.elements_[a]));
    if (!inv) throw std::logic_error("enumerated group is not closed under inversion");
    g.inverses_[a] = *inv;
  }
  if (order <= kTableLimit) {
    g.table_ = opts.parallel ? kernels::build_table_parallel(g) : kernels::build_table_serial(g);
  }
  return g;
}

bool is_latin_square(const FiniteGroupTable& g) {
  const std::size_t n = g.size();
  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      const auto c = g.product(static_cast<FiniteGroupTable::Index>(a), static_cast<FiniteGroupTable::Index>(b));
      if (seen[c]) return false;
      seen[c] = 1;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t a = 0; a < n; ++a) {
      const auto c = g.product(static_cast<FiniteGroupTable::Index>(a), static_cast<FiniteGroupTable::Index>(b));
      if (seen[c]) return false;
      seen[c] = 1;
    }
  }
  return true;
}

Subgroup whole_group(const FiniteGroupTable& g) {
  Subgroup all(g.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<FiniteGroupTable::Index>(i);
  return all;
}

Subgroup generated_subgroup(const FiniteGroupTable& g, const std::vector<FiniteGroupTable::Index>& gens) {
  std::vector<char> in(g.size(), 0);
  std::deque<FiniteGroupTable::Index> queue{g.identity()};
  in[g.identity()] = 1;
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (auto s : gens) {
      const auto y = g.product(x, s);
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  }
  Subgroup out;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i]) out.push_back(static_cast<FiniteGroupTable::Index>(i));
  }
  return out;
}

Subgroup commutator_subgroup(const FiniteGroupTable& g, const Subgroup& lhs, const Subgroup& rhs, bool parallel) {
  const auto gens = parallel ? kernels::commutator_set_parallel(g, lhs, rhs) : kernels::commutator_set_serial(g, lhs, rhs);
  return generated_subgroup(g, gens);
}

bool is_subset(const Subgroup& a, const Subgroup& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

std::vector<std::size_t> SeriesReport::orders() const {
  std::vector<std::size_t> out;
  for (const auto& s : chain) out.push_back(s.size());
  return out;
}

namespace {

enum class SeriesKind { kLower, kDerived };

// Term i+1 must have twice its filtration level >= max(slope*i + offset, 1).
SeriesReport run_series(const FiniteGroupTable& g, SeriesKind kind, int slope, int offset, std::string name,
                        int bound, const std::string& algebra_name) {
  SeriesReport r;
  r.series = std::move(name);
  r.p = g.prime();
  r.n = g.n();
  r.algebra = algebra_name.empty() ? describe(*g.coefficient_algebra()) : algebra_name;
  r.order = g.size();
  r.bound = bound;
  const Subgroup all = whole_group(g);
  r.chain.push_back(all);
  if (all.size() == 1) r.length = 0;
  for (int i = 0; !r.length; ++i) {
    const Subgroup& cur = r.chain.back();
    Subgroup next = commutator_subgroup(g, cur, kind == SeriesKind::kLower ? all : cur);
    const int want = std::max(slope * i + offset, 1);
    for (auto x : next) {
      const auto lvl = filtration_level(g.element(x));
      if (!lvl.at_least_twice(want)) {
        r.filtration_ok = false;
        if (r.counterexamples.size() < 8) {
          r.counterexamples.push_back("term " + std::to_string(i + 1) + " contains " + g.element(x).to_string() +
                                      " at level " + lvl.to_string());
        }
      }
    }
    const bool stable = next == cur;
    r.chain.push_back(std::move(next));
    if (r.chain.back().size() == 1) r.length = i + 1;
    if (stable) break;
  }
  r.ok = r.length.has_value() && *r.length <= r.bound && r.filtration_ok;
  return r;
}

}  // namespace

SeriesReport lower_central_series(const FiniteGroupTable& g, const std::string& algebra_name) {
  if (g.ev_only()) return run_series(g, SeriesKind::kLower, 2, 2, "ev_lower_central", g.n(), algebra_name);
  return run_series(g, SeriesKind::kLower, 2, 1, "lower_central", g.n() + 1, algebra_name);
}

SeriesReport derived_series(const FiniteGroupTable& g, const std::string& algebra_name) {
  return run_series(g, SeriesKind::kDerived, 4, 0, "derived", (g.n() + 1) / 2 + 1, algebra_name);
}

SeriesReport ev_subgroup_series(const PresentationPtr& A, int n, const EnumerateOptions& opts,
                                const std::string& algebra_name) {
  EnumerateOptions o = opts;
  o.ev_only = true;
  return lower_central_series(enumerate_group(A, n, o), algebra_name);
}

std::vector<GroupCase> standard_cases(unsigned p) {
  std::vector<GroupCase> out;
  if (p == 2) {
    out.push_back({"F_2[z1]/(z1^2)", make_algebra(2, {{"z1", 1, 2}}), 1});
    out.push_back({"A(1)", steenrod_quotient(2, 1), 1});
    out.push_back({"A(2)", steenrod_quotient(2, 2), 2});
    out.push_back({"A(3)", steenrod_quotient(2, 3), 3});
    return out;
  }
  const auto P = std::to_string(p);
  out.push_back({"F_" + P + "[x1]/(x1^" + P + ")", make_algebra(p, {{"x1", static_cast<int>(2 * (p - 1)), p}}), 1});
  out.push_back({"A(1)", steenrod_quotient(p, 1), 1});
  if (p == 3) out.push_back({"A_ev(2)", steenrod_quotient_ev(3, 2), 2});
  return out;
}

}  // namespace steenrod
