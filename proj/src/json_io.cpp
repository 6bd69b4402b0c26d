#include "steenrod/json_io.hpp"

#include <stdexcept>

namespace steenrod {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json to_json(const Presentation& a) {
  Json gens = Json::array();
  for (const auto& g : a.generators()) {
    Json e{{"name", g.name}, {"degree", g.degree}};
    e["cap"] = g.cap == kNoCap ? Json(nullptr) : Json(g.cap);
    gens.push_back(std::move(e));
  }
  return Json{{"p", a.prime()}, {"generators", std::move(gens)}};
}

PresentationPtr presentation_from_json(const Json& j) {
  try {
    const auto p = field(j, "p").get<unsigned>();
    std::vector<Generator> gens;
    for (const auto& g : field(j, "generators")) {
      Generator out{field(g, "name").get<std::string>(), field(g, "degree").get<int>(), kNoCap};
      if (g.contains("cap") && !g.at("cap").is_null()) {
        const auto cap = g.at("cap").get<long long>();
        if (cap < 1) throw std::invalid_argument("caps must be positive");
        out.cap = static_cast<std::uint32_t>(cap);
      }
      gens.push_back(std::move(out));
    }
    return make_algebra(p, std::move(gens));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed presentation: ") + e.what());
  }
}

Json to_json(const Element& x) {
  Json out = Json::array();
  for (const auto& t : x.terms()) out.push_back(Json{{"coeff", t.coeff}, {"exponents", t.mono.exps}});
  return out;
}

Element element_from_json(const Json& j, const PresentationPtr& a) {
  if (!j.is_array()) throw std::invalid_argument("element must be a list of terms");
  try {
    std::vector<Term> terms;
    for (const auto& t : j) {
      const auto exps = field(t, "exponents").get<std::vector<std::uint32_t>>();
      if (exps.size() != a->size()) throw std::invalid_argument("exponent vector has the wrong length");
      for (std::size_t i = 0; i < exps.size(); ++i) {
        if (a->sign_relevant(i) && exps[i] > 1) throw std::invalid_argument("odd generator with exponent above 1");
      }
      const auto c = field(t, "coeff").get<long long>();
      const long long p = a->prime();
      terms.push_back({Monomial{exps}, static_cast<Coeff>(((c % p) + p) % p)});
    }
    return Element::from_terms(a, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed element: ") + e.what());
  }
}

Json to_json(const GroupElement& g) {
  Json coeffs = Json::array();
  for (const auto& c : g.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"p", g.prime()},
              {"k", g.truncation()},
              {"flavor", g.flavor().to_string()},
              {"algebra", to_json(g.coeff(0).algebra())},
              {"coeffs", std::move(coeffs)}};
}

GroupElement group_element_from_json(const Json& j) {
  try {
    const auto a = presentation_from_json(field(j, "algebra"));
    const auto p = field(j, "p").get<unsigned>();
    if (p != a->prime()) throw std::invalid_argument("prime does not match the algebra");
    const auto flavor = j.contains("flavor") ? Flavor::parse(j.at("flavor").get<std::string>()) : Flavor::base();
    std::vector<Element> coeffs;
    for (const auto& c : field(j, "coeffs")) coeffs.push_back(element_from_json(c, a));
    if (j.contains("k") && field(j, "k").get<int>() + 1 != static_cast<int>(coeffs.size())) {
      throw std::invalid_argument("k does not match the number of coefficients");
    }
    return GroupElement(std::move(coeffs), flavor);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed group element: ") + e.what());
  }
}

Json to_json(const Composition& c) { return Json(c.parts()); }

Json to_json(const Tensor& t) {
  Json out = Json::array();
  for (const auto& [key, c] : t.terms()) {
    Json legs = Json::array();
    for (const auto& m : key) legs.push_back(m.exps);
    out.push_back(Json{{"coeff", c}, {"legs", std::move(legs)}});
  }
  return out;
}

Json to_json(const CheckReport& r) {
  return Json{{"check", r.check},
              {"preset", r.preset},
              {"degree_bound", r.degree_bound},
              {"ok", r.ok},
              {"counterexamples", r.counterexamples}};
}

Json to_json(const SeriesReport& r, bool with_members) {
  Json out{{"series", r.series}, {"p", r.p}, {"n", r.n}, {"algebra", r.algebra}, {"order", r.order}};
  out["orders"] = r.orders();
  if (with_members) {
    Json chain = Json::array();
    for (const auto& s : r.chain) chain.push_back(s);
    out["chain"] = std::move(chain);
  }
  out["length"] = r.length ? Json(*r.length) : Json(nullptr);
  out["bound"] = r.bound;
  out["filtration_ok"] = r.filtration_ok;
  out["ok"] = r.ok;
  out["counterexamples"] = r.counterexamples;
  return out;
}

Json to_json(const kernels::SweepResult& r) {
  return Json{{"checked", r.checked},
              {"violations", r.violations},
              {"oracle_mismatches", r.oracle_mismatches},
              {"first_failure", r.first_failure},
              {"ok", r.ok()}};
}

Json to_json(const FiltrationLevel& l) {
  switch (l.kind()) {
    case FiltrationLevel::Kind::kBottom:
      return "bottom";
    case FiltrationLevel::Kind::kTop:
      return "top";
    case FiltrationLevel::Kind::kFinite:
      return l.value();
  }
  return nullptr;
}

}  // namespace steenrod
