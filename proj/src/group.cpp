#include "steenrod/group.hpp"

#include <sstream>
#include <stdexcept>

#include "steenrod/partitions.hpp"

namespace steenrod {

std::string Flavor::to_string() const { return level == 0 ? "base" : "level" + std::to_string(level); }

Flavor Flavor::parse(const std::string& s) {
  if (s == "base") return base();
  if (s.rfind("level", 0) == 0 && s.size() > 5) {
    const int j = std::stoi(s.substr(5));
    if (j >= 1) return at_level(j);
  }
  throw std::invalid_argument("unknown flavor '" + s + "'");
}

Degree coefficient_degree(unsigned p, Flavor flavor, int i) {
  Degree pj = 1;
  for (int s = 0; s < flavor.level; ++s) pj *= p;
  Degree pij = pj;
  for (int s = 0; s < i; ++s) pij *= p;
  return p == 2 ? pij - pj : 2 * (pij - pj);
}

namespace {

bool is_one(const Element& x) { return x == Element::one(x.algebra_ptr()); }

// Checks a_0 for the flavor: exactly 1, or 1 + (degree-0 element of (eps)).
void check_leading(const Element& a0, unsigned p, Flavor flavor) {
  const bool eps_allowed = p != 2 && flavor.level <= 1;
  if (!eps_allowed) {
    if (!is_one(a0)) throw std::invalid_argument("leading coefficient must be 1 for this flavor");
    return;
  }
  const Element rest = a0 - Element::one(a0.algebra_ptr());
  if (!in_eps_ideal(rest)) throw std::invalid_argument("leading coefficient minus 1 must lie in (eps)");
  if (!rest.is_zero() && rest.degree() != std::optional<Degree>(0)) {
    throw std::invalid_argument("leading coefficient must have degree 0");
  }
}

}  // namespace

GroupElement::GroupElement(std::vector<Element> coeffs, Flavor flavor, NoCheck)
    : coeffs_(std::move(coeffs)), flavor_(flavor) {}

GroupElement GroupElement::unchecked(std::vector<Element> coeffs, Flavor flavor) {
  return GroupElement(std::move(coeffs), flavor, NoCheck{});
}

GroupElement::GroupElement(std::vector<Element> coeffs, Flavor flavor)
    : coeffs_(std::move(coeffs)), flavor_(flavor) {
  if (coeffs_.empty()) throw std::invalid_argument("group element needs at least the leading coefficient");
  if (flavor_.level < 0) throw std::invalid_argument("negative flavor level");
  for (const auto& c : coeffs_) require_same_algebra(coeffs_.front(), c);
  const unsigned p = prime();
  check_leading(coeffs_.front(), p, flavor_);
  for (int i = 1; i <= truncation(); ++i) {
    const auto& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const Degree want = coefficient_degree(p, flavor_, i);
    if (c.degree() != std::optional<Degree>(want)) {
      throw std::invalid_argument("coefficient " + std::to_string(i) + " must be homogeneous of degree " +
                                  std::to_string(want) + ", got " + c.to_string());
    }
    if (flavor_.level >= 1 && !eps_free(c)) {
      throw std::invalid_argument("coefficient " + std::to_string(i) + " of a level group must be eps-free");
    }
  }
}

GroupElement GroupElement::identity(const PresentationPtr& algebra, int k, Flavor flavor) {
  if (k < 0) throw std::invalid_argument("negative truncation");
  std::vector<Element> c(static_cast<std::size_t>(k) + 1, Element::zero(algebra));
  c[0] = Element::one(algebra);
  return GroupElement(std::move(c), flavor, NoCheck{});
}

bool GroupElement::is_identity() const {
  if (!is_one(coeffs_.front())) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return false;
  }
  return true;
}

bool GroupElement::operator==(const GroupElement& other) const {
  return flavor_ == other.flavor_ && coeffs_ == other.coeffs_;
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  const unsigned p = prime();
  bool first = true;
  std::uint64_t pw = 1;
  for (std::size_t i = 0; i < coeffs_.size(); ++i, pw *= p) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << coeffs_[i].to_string() << ")X";
    if (pw != 1) os << '^' << pw;
  }
  if (first) os << '0';
  return os.str();
}

void require_compatible(const GroupElement& a, const GroupElement& b) {
  if (a.flavor() != b.flavor()) throw std::invalid_argument("group elements have different flavors");
  if (a.truncation() != b.truncation()) throw std::invalid_argument("group elements have different truncations");
  require_same_algebra(a.coeff(0), b.coeff(0));
}

namespace {

Element level_drop(const Element& x, Flavor f, int i) { return (f.level >= 1 && i >= 1) ? eps_reduce(x) : x; }

}  // namespace

GroupElement compose(const GroupElement& a, const GroupElement& b) {
  require_compatible(a, b);
  const int k = a.truncation();
  const Flavor f = a.flavor();
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) {
    Element acc = Element::zero(a.algebra_ptr());
    for (int j = 0; j <= i; ++j) {
      const auto& bj = b.coeff(j);
      if (bj.is_zero()) continue;
      acc += frobenius(a.coeff(i - j), static_cast<unsigned>(j)) * bj;
    }
    out.push_back(level_drop(acc, f, i));
  }
  return GroupElement::unchecked(std::move(out), f);
}

GroupElement group_power(const GroupElement& a, unsigned m) {
  GroupElement r = GroupElement::identity(a.algebra_ptr(), a.truncation(), a.flavor());
  for (unsigned s = 0; s < m; ++s) r = compose(r, a);
  return r;
}

GroupElement invert_recursive(const GroupElement& a) {
  const int k = a.truncation();
  const Flavor f = a.flavor();
  const auto& alg = a.algebra_ptr();
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(k) + 1);
  out.push_back(Element::scalar(alg, 2) - a.coeff(0));
  for (int i = 1; i <= k; ++i) {
    Element acc = Element::zero(alg);
    for (int j = 0; j < i; ++j) acc += frobenius(a.coeff(i - j), static_cast<unsigned>(j)) * out[static_cast<std::size_t>(j)];
    out.push_back(level_drop(-acc, f, i));
  }
  return GroupElement::unchecked(std::move(out), f);
}

GroupElement invert_closed(const GroupElement& a) {
  const int k = a.truncation();
  const Flavor f = a.flavor();
  const auto& alg = a.algebra_ptr();
  const Element inv0 = Element::scalar(alg, 2) - a.coeff(0);
  std::vector<Element> out{inv0};
  for (int i = 1; i <= k; ++i) {
    Element acc = Element::zero(alg);
    for (const auto& nu : enumerate_compositions(i)) {
      Element prod = Element::one(alg);
      for (int j = 1; j <= nu.length() && !prod.is_zero(); ++j) {
        prod = prod * frobenius(a.coeff(nu.part(j)), static_cast<unsigned>(nu.offset(j)));
      }
      acc += (nu.length() % 2 == 0) ? prod : -prod;
    }
    out.push_back(level_drop(inv0 * acc, f, i));
  }
  return GroupElement::unchecked(std::move(out), f);
}

GroupElement invert_split(const GroupElement& a) {
  if (a.prime() == 2) throw std::invalid_argument("the eps-split inverse needs an odd prime");
  if (!a.flavor().is_base()) throw std::invalid_argument("the eps-split inverse is defined on the base group");
  const int k = a.truncation();
  const auto& alg = a.algebra_ptr();
  const auto eps_idx = alg->epsilon_index();
  const Element eps = eps_idx ? Element::generator(alg, *eps_idx) : Element::zero(alg);

  std::vector<Element> even, odd;
  for (const auto& c : a.coeffs()) {
    even.push_back(eps_reduce(c));
    odd.push_back(eps_coefficient(c));
  }
  const Element unit = Element::one(alg) - odd[0] * eps;
  std::vector<Element> out{unit};
  for (int i = 1; i <= k; ++i) {
    Element acc = Element::zero(alg);
    for (const auto& nu : enumerate_compositions(i)) {
      Element tail = Element::one(alg);
      for (int j = 2; j <= nu.length(); ++j) {
        tail = tail * frobenius(even[static_cast<std::size_t>(nu.part(j))], static_cast<unsigned>(nu.offset(j)));
      }
      const auto lead = static_cast<std::size_t>(nu.part(1));
      const Element term = even[lead] * tail + (odd[lead] * tail) * eps;
      acc += (nu.length() % 2 == 0) ? term : -term;
    }
    out.push_back(unit * acc);
  }
  return GroupElement::unchecked(std::move(out), a.flavor());
}

GroupElement commutator(const GroupElement& a, const GroupElement& b) {
  return compose(compose(invert(a), invert(b)), compose(a, b));
}

LeadingCoefficients commutator_leading(const GroupElement& a, const GroupElement& b, CommutatorCase c,
                                       int depth) {
  require_compatible(a, b);
  if (!a.flavor().is_base()) throw std::invalid_argument("commutator formulas are stated for the base group");
  if (depth < 0) throw std::invalid_argument("negative vanishing depth");
  if (a.truncation() < depth + 2) throw std::invalid_argument("truncation too small for the predicted coefficients");
  for (int i = 1; i <= depth; ++i) {
    if (!a.coeff(i).is_zero()) throw std::invalid_argument("left element violates the vanishing hypothesis");
  }
  switch (c) {
    case CommutatorCase::kBothGeneric:
      if (depth != 0) throw std::invalid_argument("case 1 requires vanishing depth 0");
      break;
    case CommutatorCase::kLeftDeep:
      if (depth < 1) throw std::invalid_argument("case 2 requires vanishing depth >= 1");
      break;
    case CommutatorCase::kBothDeep:
      if (depth < 1) throw std::invalid_argument("case 3 requires vanishing depth >= 1");
      if (!b.coeff(1).is_zero()) throw std::invalid_argument("case 3 requires the right element's first coefficient to vanish");
      break;
  }

  const auto& alg = a.algebra_ptr();
  const Element one = Element::one(alg);
  const Element& a0 = a.coeff(0);
  const Element& b0 = b.coeff(0);
  const Element b0m1 = b0 - one;
  const Element one_m_a0 = one - a0;

  if (c == CommutatorCase::kBothGeneric) {
    const Element& a1 = a.coeff(1);
    const Element& a2 = a.coeff(2);
    const Element& b1 = b.coeff(1);
    const Element& b2 = b.coeff(2);
    const Element a1p = frobenius(a1, 1);
    const Element b1p = frobenius(b1, 1);
    Element first = a1 * b0m1 + one_m_a0 * b1;
    Element second = (a2 - a1p * a1) * b0m1 + one_m_a0 * (b2 - b1p * b1) + a0 * a1p * b1 - a1 * b0 * b1p;
    return {1, std::move(first), std::move(second)};
  }

  const GroupElement bbar = invert(b);
  const Element& ak1 = a.coeff(depth + 1);
  const Element& ak2 = a.coeff(depth + 2);
  Element first = ak1 * b0m1 - one_m_a0 * b0 * bbar.coeff(depth + 1);
  Element second = ak2 * b0m1 - one_m_a0 * b0 * bbar.coeff(depth + 2);
  if (c == CommutatorCase::kLeftDeep) {
    const Element& b1 = b.coeff(1);
    second += a0 * frobenius(ak1, 1) * b1 - ak1 * b0 * frobenius(b1, static_cast<unsigned>(depth + 1));
  }
  return {depth + 1, std::move(first), std::move(second)};
}

GroupElement project(const GroupElement& a, int k) {
  if (k < 0 || k > a.truncation()) throw std::invalid_argument("projection level out of range");
  std::vector<Element> c(a.coeffs().begin(), a.coeffs().begin() + k + 1);
  return GroupElement::unchecked(std::move(c), a.flavor());
}

GroupElement half_quotient(const GroupElement& a) {
  if (a.truncation() < 1) throw std::invalid_argument("half quotient needs truncation >= 1");
  auto c = a.coeffs();
  c.back() = eps_reduce(c.back());
  return GroupElement::unchecked(std::move(c), a.flavor());
}

bool in_half_stage(const GroupElement& a) { return a.truncation() >= 1 && eps_free(a.coeffs().back()); }

GroupElement star_product(const GroupElement& a, const GroupElement& b) {
  if (!in_half_stage(a) || !in_half_stage(b)) throw std::invalid_argument("star product needs eps-free top coefficients");
  return half_quotient(compose(a, b));
}

GroupElement star_inverse(const GroupElement& a) {
  if (!in_half_stage(a)) throw std::invalid_argument("star inverse needs an eps-free top coefficient");
  return half_quotient(invert(a));
}

bool FiltrationLevel::at_least_twice(int t) const {
  switch (kind_) {
    case Kind::kTop:
      return true;
    case Kind::kBottom:
      return t < 0;
    case Kind::kFinite:
      return twice_ >= t;
  }
  return false;
}

std::string FiltrationLevel::to_string() const {
  switch (kind_) {
    case Kind::kTop:
      return "top";
    case Kind::kBottom:
      return "bottom";
    case Kind::kFinite:
      return twice_ % 2 == 0 ? std::to_string(twice_ / 2) : std::to_string(twice_ / 2) + ".5";
  }
  return {};
}

FiltrationLevel filtration_level(const GroupElement& a) {
  if (!a.flavor().is_base()) throw std::invalid_argument("filtration is defined on the base group");
  if (!is_one(a.coeff(0))) return FiltrationLevel::bottom();
  for (int m = 1; m <= a.truncation(); ++m) {
    const auto& c = a.coeff(m);
    if (c.is_zero()) continue;
    return FiltrationLevel::twice(in_eps_ideal(c) ? 2 * m - 1 : 2 * (m - 1));
  }
  return FiltrationLevel::top();
}

bool in_Gpn(const GroupElement& a, int n) {
  if (!a.flavor().is_base()) throw std::invalid_argument("G_{p,n} membership is defined on the base group");
  if (n < 0) throw std::invalid_argument("negative n");
  for (int i = 1; i <= a.truncation(); ++i) {
    const auto& c = a.coeff(i);
    if (i > n) {
      if (!c.is_zero()) return false;
    } else if (!frobenius(c, static_cast<unsigned>(n - i + 1)).is_zero()) {
      return false;
    }
  }
  return true;
}

GroupElement pi_ev(const GroupElement& a) {
  if (a.prime() == 2) throw std::invalid_argument("pi_ev needs an odd prime");
  if (!a.flavor().is_base()) throw std::invalid_argument("pi_ev is defined on the base group");
  std::vector<Element> c;
  for (const auto& x : a.coeffs()) c.push_back(eps_reduce(x));
  return GroupElement::unchecked(std::move(c), a.flavor());
}

bool in_G_od(const GroupElement& a) {
  if (!in_eps_ideal(a.coeff(0) - Element::one(a.algebra_ptr()))) return false;
  for (int i = 1; i <= a.truncation(); ++i) {
    if (!in_eps_ideal(a.coeff(i))) return false;
  }
  return true;
}

bool in_G_ev(const GroupElement& a) {
  for (const auto& c : a.coeffs()) {
    if (!eps_free(c)) return false;
  }
  return is_one(a.coeff(0));
}

GroupElement rho(const GroupElement& a) {
  const Flavor f = a.flavor();
  std::vector<Element> c;
  c.reserve(a.coeffs().size());
  c.push_back(f.is_base() ? a.coeff(0) : Element::one(a.algebra_ptr()));
  for (int i = 1; i <= a.truncation(); ++i) c.push_back(eps_reduce(frobenius(a.coeff(i), 1)));
  return GroupElement::unchecked(std::move(c), Flavor::at_level(f.level + 1));
}

bool in_abelian_kernel(const GroupElement& a) { return rho(a).is_identity(); }

GroupElement map_coefficients(const AlgebraMap& f, const GroupElement& a) {
  std::vector<Element> c;
  for (const auto& x : a.coeffs()) c.push_back(f(x));
  return GroupElement(std::move(c), a.flavor());
}

}  // namespace steenrod
