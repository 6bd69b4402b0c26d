#include "steenrod/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "steenrod/group.hpp"
#include "steenrod/grouptheory.hpp"
#include "steenrod/hopf.hpp"
#include "steenrod/json_io.hpp"
#include "steenrod/kernels.hpp"
#include "steenrod/milnor.hpp"
#include "steenrod/partitions.hpp"
#include "steenrod/verify.hpp"

namespace steenrod::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  unsigned p = 2;
  int k = 4;
  int n = 2;
  int N = 4;
  long long D = 0;
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  std::string preset;
  std::string in;
  std::string out;
  std::string format = "csv";
  std::string method = "recursive";
  std::string series = "lower_central";
  std::string check = "all";
  std::string E;
  std::string R;
  std::vector<std::string> only;
  int partitions_n = 0;
  bool serial = false;
};

Json read_json(const std::string& path) {
  if (path.empty()) throw UsageError("--in is required");
  std::ifstream f;
  std::istream* is = &std::cin;
  if (path != "-") {
    f.open(path);
    if (!f) throw UsageError("cannot open '" + path + "'");
    is = &f;
  }
  try {
    return Json::parse(*is);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

std::pair<GroupElement, GroupElement> read_pair(const Json& j) {
  if (j.is_array() && j.size() == 2) return {group_element_from_json(j[0]), group_element_from_json(j[1])};
  if (j.is_object() && j.contains("a") && j.contains("b")) {
    return {group_element_from_json(j.at("a")), group_element_from_json(j.at("b"))};
  }
  throw std::invalid_argument("expected a pair of group elements: [a, b] or {\"a\": a, \"b\": b}");
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw UsageError("cannot write '" + cfg.out + "'");
  f << text;
}

void emit(const RunConfig& cfg, const Json& j, std::ostream& out) { emit(cfg, j.dump(2) + "\n", out); }

std::vector<std::uint32_t> parse_list(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::string t = s;
  t.erase(std::remove_if(t.begin(), t.end(), [](char ch) { return ch == '(' || ch == ')' || ch == ' '; }), t.end());
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (!std::all_of(item.begin(), item.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
      throw UsageError("malformed sequence '" + s + "'");
    }
    out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  }
  return out;
}

PresentationPtr preset_algebra(const RunConfig& cfg) {
  const std::string& name = cfg.preset;
  if (name == "A2n" || name == "A(n)" || name == "A") return steenrod_quotient(cfg.p, cfg.n);
  if (name == "A_ev(n)" || name == "A_ev") return steenrod_quotient_ev(cfg.p, cfg.n);
  auto numbered = [&](const std::string& head) -> std::optional<int> {
    if (name.rfind(head + "(", 0) != 0 || name.back() != ')') return std::nullopt;
    const auto arg = name.substr(head.size() + 1, name.size() - head.size() - 2);
    if (arg.empty() || !std::all_of(arg.begin(), arg.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
      return std::nullopt;
    }
    return std::stoi(arg);
  };
  if (const auto m = numbered("A_ev")) return steenrod_quotient_ev(cfg.p, *m);
  if (const auto m = numbered("A")) return steenrod_quotient(cfg.p, *m);
  return HopfAlgebra::from_name(name, cfg.p, cfg.N, cfg.D, cfg.n, cfg.k).algebra();
}

HopfAlgebra hopf_preset(const RunConfig& cfg) {
  const std::string name = cfg.preset.empty() ? "A_dual" : cfg.preset;
  return HopfAlgebra::from_name(name, cfg.p, cfg.N, cfg.D, cfg.n, cfg.k);
}

Degree hopf_degree(const RunConfig& cfg, const HopfAlgebra& h) {
  if (cfg.D > 0) return cfg.D;
  if (h.degree_bound() > 0) return h.degree_bound();
  Degree top = 0;
  for (const auto& g : h.algebra()->generators()) top = std::max<Degree>(top, g.degree);
  return top;
}

int cmd_group(const std::string& verb, const RunConfig& cfg, std::ostream& out) {
  const Json j = read_json(cfg.in);
  if (verb == "compose" || verb == "commutator") {
    const auto [a, b] = read_pair(j);
    emit(cfg, to_json(verb == "compose" ? compose(a, b) : commutator(a, b)), out);
    return kExitOk;
  }
  const GroupElement a = group_element_from_json(j);
  if (verb == "invert") {
    GroupElement r = a;
    if (cfg.method == "recursive") {
      r = invert_recursive(a);
    } else if (cfg.method == "closed") {
      r = invert_closed(a);
    } else if (cfg.method == "split") {
      r = invert_split(a);
    } else {
      throw UsageError("unknown --method '" + cfg.method + "' (recursive, closed, split)");
    }
    emit(cfg, to_json(r), out);
  } else if (verb == "filtration") {
    const auto l = filtration_level(a);
    Json r{{"level", to_json(l)}, {"text", l.to_string()}};
    r["in_Gpn"] = in_Gpn(a, a.truncation());
    emit(cfg, r, out);
  } else if (verb == "rho") {
    emit(cfg, to_json(rho(a)), out);
  }
  return kExitOk;
}

int cmd_partitions(const RunConfig& cfg, std::ostream& out) {
  Json r = Json::array();
  for (const auto& c : enumerate_compositions(cfg.partitions_n)) r.push_back(to_json(c));
  emit(cfg, r, out);
  return kExitOk;
}

EnumerateOptions enum_options(const RunConfig& cfg) {
  EnumerateOptions o;
  o.limit = group_limit_from_env();
  o.parallel = !cfg.serial;
  return o;
}

int cmd_lcs(const RunConfig& cfg, std::ostream& out) {
  PresentationPtr A;
  std::string name;
  if (!cfg.in.empty()) {
    A = presentation_from_json(read_json(cfg.in));
    name = describe(*A);
  } else {
    if (cfg.preset.empty()) throw UsageError("lcs needs --preset or --in");
    A = preset_algebra(cfg);
    name = cfg.preset;
  }
  SeriesReport r;
  if (cfg.series == "lower_central") {
    r = lower_central_series(enumerate_group(A, cfg.n, enum_options(cfg)), name);
  } else if (cfg.series == "derived") {
    r = derived_series(enumerate_group(A, cfg.n, enum_options(cfg)), name);
  } else if (cfg.series == "ev") {
    r = ev_subgroup_series(A, cfg.n, enum_options(cfg), name);
  } else {
    throw UsageError("unknown --series '" + cfg.series + "' (lower_central, derived, ev)");
  }
  Json j = to_json(r, true);
  j["seed"] = cfg.seed;
  emit(cfg, j, out);
  return r.ok ? kExitOk : kExitFailure;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, bool p_given) {
  struct Row {
    unsigned p;
    int n;
    std::string algebra;
    std::string series;
    std::size_t order;
    std::optional<int> length;
    int bound;
    bool ok;
  };
  std::vector<Row> rows;
  std::vector<unsigned> primes = p_given ? std::vector<unsigned>{cfg.p} : std::vector<unsigned>{2, 3, 5};
  for (unsigned p : primes) {
    for (const auto& c : standard_cases(p)) {
      const auto g = enumerate_group(c.algebra, c.n, enum_options(cfg));
      const auto r = lower_central_series(g, c.name);
      rows.push_back({p, c.n, c.name, r.series, r.order, r.length, r.bound, r.ok});
      if (p != 2) {
        const auto e = ev_subgroup_series(c.algebra, c.n, enum_options(cfg), c.name + " (ev)");
        rows.push_back({p, c.n, e.algebra, e.series, e.order, e.length, e.bound, e.ok});
      }
    }
  }
  const bool all_ok = std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.ok; });
  if (cfg.format == "csv") {
    std::ostringstream os;
    os << "p,n,algebra,|G|,class,bound,ok\n";
    for (const auto& r : rows) {
      os << r.p << ',' << r.n << ",\"" << r.algebra << "\"," << r.order << ','
         << (r.length ? std::to_string(*r.length) : "") << ',' << r.bound << ',' << (r.ok ? "true" : "false") << '\n';
    }
    emit(cfg, os.str(), out);
  } else if (cfg.format == "json") {
    Json rs = Json::array();
    for (const auto& r : rows) {
      rs.push_back(Json{{"p", r.p},
                        {"n", r.n},
                        {"algebra", r.algebra},
                        {"series", r.series},
                        {"order", r.order},
                        {"class", r.length ? Json(*r.length) : Json(nullptr)},
                        {"bound", r.bound},
                        {"ok", r.ok}});
    }
    emit(cfg, Json{{"seed", cfg.seed}, {"ok", all_ok}, {"rows", std::move(rs)}}, out);
  } else {
    throw UsageError("unknown --format '" + cfg.format + "' (json, csv)");
  }
  return all_ok ? kExitOk : kExitFailure;
}

int cmd_hopf(const RunConfig& cfg, std::ostream& out) {
  const HopfAlgebra h = hopf_preset(cfg);
  const Degree d = hopf_degree(cfg, h);
  std::vector<CheckReport> reports;
  const std::string& c = cfg.check;
  auto want = [&](const std::string& name) { return c == "all" || c == name; };
  bool known = c == "all";
  if (want("coassociativity")) reports.push_back(coassociativity_check(h, d)), known = true;
  if (want("counit")) reports.push_back(counit_check(h, d)), known = true;
  if (want("antipode")) reports.push_back(antipode_check(h, d)), known = true;
  if (want("antipode_recursion")) reports.push_back(antipode_recursion_check(h)), known = true;
  if (c == "primitivity") reports.push_back(primitivity_check(h)), known = true;
  if (c == "monogenic") reports.push_back(monogenic_check(h)), known = true;
  if (c == "cocommutativity") reports.push_back(cocommutativity_check(h, d)), known = true;
  if (c == "defect") {
    Json defects = Json::array();
    for (const auto& [name, t] : cocommutativity_defect(h, d)) {
      defects.push_back(Json{{"generator", name}, {"defect", to_json(t)}, {"text", t.to_string()}});
    }
    emit(cfg, Json{{"preset", h.name()}, {"degree_bound", d}, {"seed", cfg.seed}, {"defects", std::move(defects)}}, out);
    return kExitOk;
  }
  if (!known) {
    throw UsageError("unknown hopf check '" + c +
                     "' (all, coassociativity, counit, antipode, antipode_recursion, primitivity, monogenic, "
                     "cocommutativity, defect)");
  }
  bool ok = true;
  Json rs = Json::array();
  for (const auto& r : reports) {
    ok = ok && r.ok;
    Json j = to_json(r);
    j["seed"] = cfg.seed;
    rs.push_back(std::move(j));
  }
  emit(cfg, reports.size() == 1 ? rs[0] : Json{{"preset", h.name()}, {"seed", cfg.seed}, {"ok", ok}, {"reports", rs}}, out);
  return ok ? kExitOk : kExitFailure;
}

int cmd_milnor(const std::string& verb, const RunConfig& cfg, std::ostream& out) {
  if (verb == "sweep") {
    const auto r = cfg.serial ? kernels::complementarity_sweep_serial(cfg.p, cfg.k, cfg.N)
                              : kernels::complementarity_sweep_parallel(cfg.p, cfg.k, cfg.N);
    Json j = to_json(r);
    j["p"] = cfg.p;
    j["k"] = cfg.k;
    j["max_index"] = cfg.N;
    j["seed"] = cfg.seed;
    emit(cfg, j, out);
    return r.ok() ? kExitOk : kExitFailure;
  }
  const SeqB E(parse_list(cfg.E));
  const Seq R(parse_list(cfg.R));
  if (cfg.p == 2 && !E.is_zero()) throw UsageError("p = 2 has no exterior part");
  const DualSymbol sym = dual(cfg.p, E, R);
  Json j{{"p", cfg.p}, {"k", cfg.k}, {"E", E.to_string()}, {"R", R.to_string()}, {"dual", sym.to_string()}};
  if (verb == "in-j") {
    j["in_J"] = in_J_basis(E, R, cfg.k, cfg.p);
  } else if (verb == "in-span") {
    j["in_span"] = in_dual_span(sym, cfg.k);
  } else {
    throw UsageError("unknown milnor verb '" + verb + "' (in-j, in-span, sweep)");
  }
  emit(cfg, j, out);
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  VerifyConfig v;
  v.p = cfg.p;
  v.k = cfg.k;
  v.seed = cfg.seed;
  v.samples = cfg.samples;
  v.parallel = !cfg.serial;
  v.only = cfg.only;
  const auto report = run_verify(v);
  emit(cfg, to_json(report), out);
  return report.ok() ? kExitOk : kExitFailure;
}

void add_prime(CLI::App* sc, RunConfig& cfg) {
  sc->add_option("--p", cfg.p, "prime")->check(CLI::Validator(
      [](std::string& s) -> std::string {
        try {
          return is_prime(static_cast<unsigned>(std::stoul(s))) ? "" : "p must be prime";
        } catch (const std::exception&) {
          return "p must be prime";
        }
      },
      "PRIME"));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact computations in the mod-p Steenrod group and the dual Steenrod algebra", "steenrod"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto io = [&](CLI::App* sc) {
    sc->add_option("--in", cfg.in, "input JSON file ('-' for stdin)");
    sc->add_option("--out", cfg.out, "output file (default stdout)");
  };

  std::vector<CLI::App*> group_cmds;
  for (const char* verb : {"compose", "commutator", "invert", "filtration", "rho"}) {
    auto* sc = app.add_subcommand(verb, std::string("group operation: ") + verb);
    io(sc);
    if (std::string(verb) == "invert") sc->add_option("--method", cfg.method, "recursive, closed or split");
    group_cmds.push_back(sc);
  }

  auto* parts = app.add_subcommand("partitions", "ordered partitions of n as JSON");
  parts->add_option("n", cfg.partitions_n, "positive integer")->required()->check(CLI::Range(1, kMaxCompositionSize));
  parts->add_option("--out", cfg.out, "output file");

  auto* lcs = app.add_subcommand("lcs", "enumerate G_{p,n}(A) and compute a series");
  add_prime(lcs, cfg);
  lcs->add_option("--n", cfg.n, "truncation n")->check(CLI::NonNegativeNumber);
  lcs->add_option("--N", cfg.N, "generator bound")->check(CLI::PositiveNumber);
  lcs->add_option("--k", cfg.k, "level for A_angle / A_mod presets")->check(CLI::NonNegativeNumber);
  lcs->add_option("--preset", cfg.preset, "A2n, A(n), A_ev(n), A_mod_I(k), ...");
  lcs->add_option("--series", cfg.series, "lower_central, derived or ev");
  lcs->add_option("--seed", cfg.seed, "recorded in the report");
  lcs->add_flag("--serial", cfg.serial, "use the serial kernels");
  io(lcs);

  auto* sweep = app.add_subcommand("sweep", "lower central series over the standard grid");
  add_prime(sweep, cfg);
  sweep->add_option("--format", cfg.format, "csv or json");
  sweep->add_option("--seed", cfg.seed, "recorded in the report");
  sweep->add_option("--out", cfg.out, "output file");
  sweep->add_flag("--serial", cfg.serial, "use the serial kernels");

  auto* hopf = app.add_subcommand("hopf", "Hopf algebra checks on a preset");
  hopf->add_option("check", cfg.check, "all, coassociativity, counit, antipode, antipode_recursion, primitivity, "
                                       "monogenic, cocommutativity, defect");
  add_prime(hopf, cfg);
  hopf->add_option("--preset", cfg.preset, "A_dual, A_dual(p,N,D), A(n), A_ev(n), A_angle(k), A_mod_I(k), A_mod_J(k)");
  hopf->add_option("--N", cfg.N, "generator bound")->check(CLI::NonNegativeNumber);
  hopf->add_option("--D", cfg.D, "degree bound (0: largest generator degree)")->check(CLI::NonNegativeNumber);
  hopf->add_option("--n", cfg.n, "n for A(n)")->check(CLI::NonNegativeNumber);
  hopf->add_option("--k", cfg.k, "k for A_angle / A_mod presets")->check(CLI::NonNegativeNumber);
  hopf->add_option("--seed", cfg.seed, "recorded in the report");
  hopf->add_option("--out", cfg.out, "output file");

  auto* milnor = app.add_subcommand("milnor", "Milnor basis membership and the complementarity sweep");
  std::string milnor_verb;
  milnor->add_option("verb", milnor_verb, "in-j, in-span or sweep")->required();
  add_prime(milnor, cfg);
  milnor->add_option("--k", cfg.k, "level")->check(CLI::NonNegativeNumber);
  milnor->add_option("--E", cfg.E, "exterior sequence e_0,e_1,...");
  milnor->add_option("--R", cfg.R, "exponent sequence r_1,r_2,...");
  milnor->add_option("--N", cfg.N, "largest index for the sweep")->check(CLI::Range(1, 8));
  milnor->add_option("--seed", cfg.seed, "recorded in the report");
  milnor->add_option("--out", cfg.out, "output file");
  milnor->add_flag("--serial", cfg.serial, "use the serial kernel");

  auto* verify = app.add_subcommand("verify", "run the property suites");
  add_prime(verify, cfg);
  verify->add_option("--k", cfg.k, "truncation")->check(CLI::Range(1, 8));
  verify->add_option("--seed", cfg.seed, "RNG seed");
  verify->add_option("--samples", cfg.samples, "samples per property")->check(CLI::PositiveNumber);
  verify->add_option("--only", cfg.only, "restrict to the named suites");
  verify->add_option("--out", cfg.out, "output file");
  verify->add_flag("--serial", cfg.serial, "run suites one at a time");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    for (auto* sc : app.get_subcommands()) err << sc->help();
    if (app.get_subcommands().empty()) err << app.help();
    return kExitUsage;
  }

  try {
    for (auto* sc : group_cmds) {
      if (sc->parsed()) return cmd_group(sc->get_name(), cfg, out);
    }
    if (parts->parsed()) return cmd_partitions(cfg, out);
    if (lcs->parsed()) return cmd_lcs(cfg, out);
    if (sweep->parsed()) return cmd_sweep(cfg, out, sweep->count("--p") > 0);
    if (hopf->parsed()) return cmd_hopf(cfg, out);
    if (milnor->parsed()) return cmd_milnor(milnor_verb, cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace steenrod::cli
