#include "ceuler/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "CLI11.hpp"

#include "ceuler/complex.hpp"
#include "ceuler/eulerian.hpp"
#include "ceuler/structures.hpp"

namespace ceuler::cli {

namespace {

constexpr int kMaxN = 30;
constexpr int kMaxAlpha = 1000;

IntRange parse_range(const std::string& text, const char* flag, int max_value) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw UsageError(std::string(flag) + ": not an integer range: '" + text + "'");
    return v;
  };
  IntRange r;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = to_int(text);
  } else {
    r.lo = to_int(text.substr(0, dots));
    r.hi = to_int(text.substr(dots + 2));
  }
  if (r.lo < 1 || r.hi < r.lo || r.hi > max_value)
    throw UsageError(std::string(flag) + ": range '" + text + "' must satisfy 1 <= lo <= hi <= " +
                     std::to_string(max_value));
  return r;
}

struct CommandDefaults {
  IntRange n;
  IntRange alpha;
  Format format;
};

CommandDefaults defaults_for(Command c) {
  switch (c) {
    case Command::Table: return {{2, 6}, {2, 2}, Format::Csv};
    case Command::Verify: return {{1, 6}, {1, 3}, Format::Json};
    case Command::Enumerate: return {{3, 3}, {2, 2}, Format::Jsonl};
    case Command::Complex: return {{3, 3}, {2, 2}, Format::Jsonl};
    case Command::Roots: return {{2, 6}, {1, 3}, Format::Jsonl};
    case Command::Recurrence: return {{2, 8}, {1, 3}, Format::Jsonl};
  }
  return {{1, 1}, {1, 1}, Format::Json};
}

const std::map<std::string, Format> kFormats{
    {"csv", Format::Csv}, {"json", Format::Json}, {"jsonl", Format::Jsonl}, {"latex", Format::Latex}};
const std::map<std::string, Route> kRoutes{{"closed", Route::ClosedForm},
                                           {"descents", Route::Descents},
                                           {"complex", Route::Complex},
                                           {"gamma", Route::Gamma}};
const std::map<std::string, EnumerateKind> kKinds{{"partitions", EnumerateKind::Partitions},
                                                  {"permutations", EnumerateKind::Permutations}};

std::string route_name(Route r) {
  for (const auto& [name, value] : kRoutes)
    if (value == r) return name;
  return "?";
}

// ---------------------------------------------------------------------------

ColoredEulerianPolynomial compute_route(Route route, int n, int alpha, const RunConfig& cfg) {
  switch (route) {
    case Route::ClosedForm: return colored_eulerian_closed_form(n, alpha);
    case Route::Descents:
      return colored_eulerian_descents(n, alpha, cfg.parallelism, cfg.budget.value_or(kDefaultEnumerationBudget));
    case Route::Complex: return colored_eulerian_from_complex(n, alpha);
    case Route::Gamma: return colored_eulerian_gamma(n, alpha);
  }
  throw std::logic_error("unknown route");
}

Json coefficients_json(const ColoredEulerianPolynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) arr.push_back(int_to_json(c));
  return arr;
}

template <class F>
void for_grid(const RunConfig& cfg, F&& f) {
  for (int n = cfg.n.lo; n <= cfg.n.hi; ++n)
    for (int a = cfg.alpha.lo; a <= cfg.alpha.hi; ++a) f(n, a);
}

void emit_documents(std::ostream& out, Format format, const std::vector<Json>& docs) {
  if (format == Format::Json) {
    Json arr = Json::array();
    for (const auto& d : docs) arr.push_back(d);
    out << arr.dump(2) << '\n';
  } else {
    for (const auto& d : docs) out << d.dump() << '\n';
  }
}

int run_table(const RunConfig& cfg, std::ostream& out) {
  std::vector<Json> docs;
  if (cfg.format == Format::Csv) out << "n,alpha,k,coefficient\n";
  int last_alpha = 0;
  for (int a = cfg.alpha.lo; a <= cfg.alpha.hi; ++a) {
    for (int n = cfg.n.lo; n <= cfg.n.hi; ++n) {
      const auto poly = compute_route(cfg.route, n, a, cfg);
      switch (cfg.format) {
        case Format::Csv: {
          const auto c = poly.coefficients();
          for (std::size_t k = 0; k < c.size(); ++k) out << n << ',' << a << ',' << k << ',' << c[k].get_str() << '\n';
          break;
        }
        case Format::Latex:
          if (a != last_alpha) out << "% alpha = " << a << ", route = " << route_name(cfg.route) << '\n';
          last_alpha = a;
          out << n << " & $" << poly.poly.to_string('t') << "$\\\\\n";
          break;
        case Format::Json:
        case Format::Jsonl:
          docs.push_back(Json{{"n", n},
                              {"alpha", a},
                              {"route", route_name(cfg.route)},
                              {"coefficients", coefficients_json(poly)},
                              {"poly", polynomial_to_json(poly.poly)}});
          break;
      }
    }
  }
  if (cfg.format == Format::Json || cfg.format == Format::Jsonl) emit_documents(out, cfg.format, docs);
  return kExitOk;
}

int run_enumerate(const RunConfig& cfg, std::ostream& out) {
  const std::uint64_t budget = cfg.budget.value_or(kDefaultEnumerationBudget);
  // refuse before emitting anything
  for_grid(cfg, [&](int n, int a) {
    const Int count = cfg.kind == EnumerateKind::Partitions ? count_Q(n, a) : count_colored_permutations(n, a);
    if (count > Int(static_cast<unsigned long>(budget)))
      throw BudgetExceeded("enumerate: " + count.get_str() + " objects for n=" + std::to_string(n) +
                           ", alpha=" + std::to_string(a) + " exceed the budget of " + std::to_string(budget));
  });
  const bool array = cfg.format == Format::Json;
  bool first = true;
  if (array) out << "[\n";
  auto line = [&](const Json& j) {
    if (array && !first) out << ",\n";
    out << j.dump();
    if (!array) out << '\n';
    first = false;
  };
  for_grid(cfg, [&](int n, int a) {
    if (cfg.kind == EnumerateKind::Partitions)
      for_each_Q(n, a, [&](const ColoredOrderedSetPartition& t) { line(partition_to_json(t)); });
    else
      for_each_colored_permutation(n, a, [&](const ColoredPermutation& t) { line(colored_permutation_to_json(t)); });
  });
  if (array) out << "\n]\n";
  return kExitOk;
}

std::string geometry_twin_path(const std::string& path) {
  const auto dot = path.rfind('.');
  if (dot != std::string::npos && path.substr(dot) == ".off") return path.substr(0, dot) + ".json";
  return path + ".json";
}

int run_complex(const RunConfig& cfg, std::ostream& out) {
  if (cfg.export_geometry && (cfg.n.lo != cfg.n.hi || cfg.alpha.lo != cfg.alpha.hi))
    throw UsageError("--export-geometry needs a single n and a single alpha");
  std::vector<Json> docs;
  for_grid(cfg, [&](int n, int a) {
    const auto complex = build_complex(n, a, cfg.budget.value_or(kDefaultFaceBudget));
    Json f = Json::array();
    for (const auto& v : complex.f_dim) f.push_back(int_to_json(v));
    std::map<int, std::size_t> by_dim;
    for (const auto& c : complex.components) ++by_dim[c.dimension];
    Json dims = Json::object();
    for (const auto& [d, count] : by_dim) dims[std::to_string(d)] = count;
    docs.push_back(Json{{"n", n},
                        {"alpha", a},
                        {"f_dim", f},
                        {"components", complex.components.size()},
                        {"components_by_dimension", dims},
                        {"euler_char", int_to_json(complex.alternating_sum())}});
    if (cfg.export_geometry) {
      std::ofstream off(*cfg.export_geometry);
      if (!off) throw std::runtime_error("cannot write " + *cfg.export_geometry);
      write_off(off, complex, cfg.precision);
      std::ofstream twin(geometry_twin_path(*cfg.export_geometry));
      if (!twin) throw std::runtime_error("cannot write " + geometry_twin_path(*cfg.export_geometry));
      write_geometry_json(twin, complex);
    }
  });
  emit_documents(out, cfg.format, docs);
  return kExitOk;
}

int run_roots(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n.lo < 2) throw UsageError("roots: --n must start at 2 or above");
  std::vector<Json> docs;
  if (cfg.format == Format::Csv) out << "n,alpha,squarefree,distinct_real_roots,degree,all_real\n";
  for_grid(cfg, [&](int n, int a) {
    const auto r = real_rootedness_report(n, a);
    if (cfg.format == Format::Csv)
      out << n << ',' << a << ',' << r.squarefree << ',' << r.distinct_real_roots << ',' << r.degree << ','
          << r.all_real() << '\n';
    else
      docs.push_back(Json{{"n", n},
                          {"alpha", a},
                          {"squarefree", r.squarefree},
                          {"distinct_real_roots", r.distinct_real_roots},
                          {"degree", r.degree},
                          {"all_real", r.all_real()}});
  });
  if (cfg.format != Format::Csv) emit_documents(out, cfg.format, docs);
  return kExitOk;
}

Json recurrence_json(const RecurrenceReport& r) {
  Json table = Json::array();
  for (const auto& row : r.table) {
    Json jr = Json::array();
    for (const auto& v : row) jr.push_back(int_to_json(v));
    table.push_back(jr);
  }
  Json disc = Json::array();
  for (const auto& d : r.discrepancies)
    disc.push_back(Json{{"n", d.n},
                        {"k", d.k},
                        {"recurrence", int_to_json(d.one_step)},
                        {"oracle", int_to_json(d.oracle)},
                        {"propagated", int_to_json(d.propagated)}});
  return Json{{"alpha", r.alpha},
              {"bracket", r.bracket == RecurrenceBracket::Printed ? "printed" : "amended"},
              {"n_min", r.n_min},
              {"n_max", r.n_max},
              {"consistent", r.consistent()},
              {"one_step_consistent", r.one_step_consistent()},
              {"discrepancies", disc},
              {"table", table}};
}

int run_recurrence(const RunConfig& cfg, std::ostream& out) {
  const int n_min = std::max(2, cfg.n.lo);
  if (cfg.n.hi < 2) throw UsageError("recurrence: --n must reach 2 or above");
  std::vector<Json> docs;
  const auto bracket = cfg.amended ? RecurrenceBracket::Amended : RecurrenceBracket::Printed;
  for (int a = cfg.alpha.lo; a <= cfg.alpha.hi; ++a)
    docs.push_back(recurrence_json(colored_eulerian_recurrence(n_min, cfg.n.hi, a, bracket)));
  emit_documents(out, cfg.format, docs);
  return kExitOk;
}

std::string str(const Int& v) { return v.get_str(); }

Json ints_json(const std::vector<Int>& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(int_to_json(x));
  return arr;
}

// ---------------------------------------------------------------------------
// Verification suite

using Task = std::function<void(VerificationReport&)>;

void add_n_checks(std::vector<Task>& tasks, int n) {
  const Json p{{"n", n}};
  tasks.push_back([=](VerificationReport& r) {
    const bool ok = verify_colored_fubini_identity(n);
    r.add("colored_fubini_identity", p, ok,
          ok ? Json(nullptr)
             : Json{{"lhs", polynomial_to_json(colored_fubini_lhs(n))}, {"rhs", polynomial_to_json(colored_fubini_rhs(n))}});
  });
  tasks.push_back([=](VerificationReport& r) {
    const bool ok = verify_fubini_half(n);
    r.add("fubini_half", p, ok, ok ? Json(nullptr) : Json{{"fubini", str(fubini(n))}});
  });
  tasks.push_back([=](VerificationReport& r) { r.add("euler_char_Pn", p, verify_euler_char_of_Pn(n)); });
  tasks.push_back([=](VerificationReport& r) {
    const auto c = classical_eulerian(n).poly;
    bool ok = c.coeff(0) == 0 && c.degree() == static_cast<std::size_t>(n);
    for (int k = 1; k <= n; ++k) ok = ok && c.coeff(static_cast<std::size_t>(k)) == c.coeff(static_cast<std::size_t>(n + 1 - k));
    ok = ok && c(1) == Rational(factorial(static_cast<unsigned>(n)));
    r.add("classical_eulerian_shape", p, ok, ok ? Json(nullptr) : polynomial_to_json(c));
  });
}

void add_pair_checks(std::vector<Task>& tasks, int n, int a, const RunConfig& cfg) {
  const Json p{{"alpha", a}, {"n", n}};
  const std::uint64_t budget = cfg.budget.value_or(kDefaultEnumerationBudget);

  tasks.push_back([=](VerificationReport& r) {
    const auto closed = colored_eulerian_closed_form(n, a);
    std::vector<std::pair<std::string, ColoredEulerianPolynomial>> routes{
        {"complex", colored_eulerian_from_complex(n, a)}, {"gamma", colored_eulerian_gamma(n, a)}};
    if (count_colored_permutations(n, a) <= Int(static_cast<unsigned long>(budget)))
      routes.emplace_back("descents", colored_eulerian_descents(n, a, 1, budget));
    bool ok = true;
    Json witness{{"closed", coefficients_json(closed)}};
    Json used = Json::array({"closed"});
    for (const auto& [name, poly] : routes) {
      used.push_back(name);
      witness[name] = coefficients_json(poly);
      ok = ok && poly == closed;
    }
    Json params = p;
    params["routes"] = used;
    r.add("routes_agree", params, ok, ok ? Json(nullptr) : witness);
  });
  tasks.push_back([=](VerificationReport& r) {
    const auto closed = colored_eulerian_closed_form(n, a).coefficients();
    bool ok = true;
    for (int m = 0; m < n; ++m) ok = ok && descent_class_count(n, m, a) == closed[static_cast<std::size_t>(m)];
    r.add("descent_class_formula", p, ok, ok ? Json(nullptr) : ints_json(closed));
  });
  tasks.push_back([=](VerificationReport& r) { r.add("coefficient_sum", p, coefficient_sum_check(n, a)); });
  if (n >= 3) tasks.push_back([=](VerificationReport& r) { r.add("log_concave", p, log_concavity_check(n, a)); });
  if (n >= 2) {
    tasks.push_back([=](VerificationReport& r) {
      const auto rr = real_rootedness_report(n, a);
      r.add("real_rooted", p, rr.all_real(),
            rr.all_real() ? Json(nullptr)
                          : Json{{"squarefree", rr.squarefree}, {"distinct_real_roots", rr.distinct_real_roots}});
    });
    tasks.push_back([=](VerificationReport& r) {
      const auto poly = colored_eulerian_closed_form(n, a).poly;
      // constant term 1 against a top coefficient that grows with alpha
      const bool palindromic = poly == poly_reverse(poly, static_cast<std::size_t>(n - 1));
      r.add("palindromic_iff_alpha_1", p, palindromic == (a == 1));
    });
    tasks.push_back([=](VerificationReport& r) {
      const auto rep = colored_eulerian_recurrence(n, n, a, RecurrenceBracket::Amended);
      r.add("recurrence_amended", p, rep.consistent(), rep.consistent() ? Json(nullptr) : Json(rep.discrepancies.size()));
    });
    if (a <= 2)
      tasks.push_back([=](VerificationReport& r) {
        const auto rep = colored_eulerian_recurrence(n, n, a, RecurrenceBracket::Printed);
        r.add("recurrence_printed", p, rep.consistent(),
              rep.consistent() ? Json(nullptr) : Json(rep.discrepancies.size()));
      });
  }
  if (count_Q(n, a) <= Int(static_cast<unsigned long>(std::min<std::uint64_t>(budget, 20'000'000)))) {
    tasks.push_back([=](VerificationReport& r) {
      std::uint64_t streamed = 0;
      for_each_Q(n, a, [&](const ColoredOrderedSetPartition&) { ++streamed; });
      const Int formula = count_Q(n, a);
      const Rational egf = egf_colored_fubini(a, static_cast<std::size_t>(n))[static_cast<std::size_t>(n)] *
                           Rational(factorial(static_cast<unsigned>(n)));
      const bool ok = Int(static_cast<unsigned long>(streamed)) == formula && egf == Rational(formula);
      r.add("q_count", p, ok,
            ok ? Json(nullptr)
               : Json{{"streamed", streamed}, {"formula", str(formula)}, {"egf", rational_to_json(egf)}});
    });
  }
  if (n <= 6) {
    tasks.push_back([=](VerificationReport& r) {
      std::map<std::vector<int>, Int> fibers, alt_fibers;
      std::set<std::string> keys;
      bool distinct = true;
      for_each_Q(n, a, [&](const ColoredOrderedSetPartition& t) {
        const auto w = forget_map(t);
        const std::vector<int> word(w.word().begin(), w.word().end());
        fibers[word] += 1;
        if (is_alternating(t)) alt_fibers[word] += 1;
        distinct = keys.insert(t.key()).second && distinct;
      });
      bool ok = distinct;
      bool alt_ok = true;
      Int covered = 0;
      for_each_permutation(n, [&](std::span<const int> w) {
        const std::vector<int> word(w.begin(), w.end());
        const Permutation pi(word);
        ok = ok && fibers[word] == fiber_size(pi, a);
        covered += fibers[word];
        alt_ok = alt_ok && alt_fibers[word] == alternating_fiber_size(pi, a);
      });
      ok = ok && covered == count_Q(n, a);
      r.add("fiber_partition", p, ok);
      r.add("alternating_fibers", p, alt_ok);
    });
  }
  tasks.push_back([=](VerificationReport& r) { r.add("f_scaling", p, verify_f_scaling(n, a)); });
  tasks.push_back([=](VerificationReport& r) {
    const auto chi = euler_characteristic(n, a);
    Json w{{"alternating_sum", str(chi.alternating_sum)}, {"components", str(chi.component_count)}};
    if (chi.eulerian_formula) w["eulerian_formula"] = rational_to_json(*chi.eulerian_formula);
    r.add("euler_characteristic", p, chi.consistent(), chi.consistent() ? Json(nullptr) : w);
  });
  if (a >= 2)
    tasks.push_back([=](VerificationReport& r) {
      r.add("components_equal_faces", p, verify_components_equal_faces(n, a));
    });
  if (n <= kMaxComplexN && count_Q(n, a) <= Int(static_cast<unsigned long>(kDefaultFaceBudget))) {
    tasks.push_back([=](VerificationReport& r) {
      const auto complex = build_complex(n, a);
      const Int uf = count_components_by_union_find(n, a);
      const Int formula = count_components(n, a);
      bool ok = uf == formula && Int(static_cast<unsigned long>(complex.components.size())) == formula &&
                complex.f_dim == f_vector(n, a);
      for (const auto& c : complex.components) ok = ok && c.f_dim == product_f_vector(type_of(c.facet));
      r.add("complex_structure", p, ok,
            ok ? Json(nullptr)
               : Json{{"union_find", str(uf)}, {"formula", str(formula)}, {"f_dim", ints_json(complex.f_dim)}});
    });
  }
  if (n <= 5 && a <= 3)
    tasks.push_back([=](VerificationReport& r) { r.add("face_lattice", p, verify_face_lattice(n, a)); });
}

}  // namespace

// ---------------------------------------------------------------------------

ParseResult parse_args(const std::vector<std::string>& argv) {
  CLI::App app{"Colored Eulerian polynomials and colored permutohedra, in exact arithmetic", "ceuler"};
  app.require_subcommand(1);
  app.allow_extras(false);

  struct Raw {
    std::string n, alpha, format, output, route = "closed", kind = "partitions", geometry;
    unsigned jobs = 1;
    std::uint64_t budget = 0;
    int precision = 6;
    bool amended = false;
  } raw;

  const std::vector<std::pair<Command, std::string>> commands{
      {Command::Table, "table"},         {Command::Verify, "verify"}, {Command::Enumerate, "enumerate"},
      {Command::Complex, "complex"},     {Command::Roots, "roots"},   {Command::Recurrence, "recurrence"}};
  const std::map<std::string, std::string> descriptions{
      {"table", "Colored Eulerian polynomials A_n^alpha(t) (CSV n,alpha,k,coefficient; JSON; LaTeX)"},
      {"verify", "Run the identity suite; exit 1 on any failure"},
      {"enumerate", "Stream Q_n^alpha elements or colored permutations as JSON lines"},
      {"complex", "Census of the colored permutohedron; optional OFF/JSON geometry export"},
      {"roots", "Squarefree flag and Sturm real-root count of A_n^alpha"},
      {"recurrence", "Audit the three-term recurrence against the closed form"}};

  std::map<std::string, CLI::App*> subs;
  for (const auto& [cmd, name] : commands) {
    CLI::App* sub = app.add_subcommand(name, descriptions.at(name));
    sub->add_option("--n", raw.n, "n or lo..hi");
    sub->add_option("--alpha", raw.alpha, "alpha or lo..hi");
    sub->add_option("--format", raw.format, "csv | json | jsonl | latex");
    sub->add_option("--output,-o", raw.output, "write to PATH instead of standard output");
    sub->add_option("--jobs,-j", raw.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--budget", raw.budget, "maximum enumerated objects")->check(CLI::PositiveNumber);
    if (name == "table") sub->add_option("--route", raw.route, "closed | descents | complex | gamma");
    if (name == "enumerate") sub->add_option("--kind", raw.kind, "partitions | permutations");
    if (name == "complex") {
      sub->add_option("--export-geometry", raw.geometry, "write OFF to PATH and exact JSON next to it");
      sub->add_option("--precision", raw.precision, "fractional digits in OFF coordinates")
          ->check(CLI::Range(0, 50));
    }
    if (name == "recurrence") sub->add_flag("--amended", raw.amended, "use (alpha-1) in place of (alpha-1)(alpha-1)!");
    subs[name] = sub;
  }

  if (!argv.empty() && !argv.front().starts_with('-') && !subs.contains(argv.front()))
    throw UsageError("unknown command '" + argv.front() + "'");
  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    for (const auto& [name, sub] : subs)
      if (sub->parsed()) return {std::nullopt, sub->help()};
    return {std::nullopt, app.help()};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  RunConfig cfg;
  for (const auto& [cmd, name] : commands)
    if (subs[name]->parsed()) cfg.command = cmd;
  const auto defaults = defaults_for(cfg.command);
  cfg.n = raw.n.empty() ? defaults.n : parse_range(raw.n, "--n", kMaxN);
  cfg.alpha = raw.alpha.empty() ? defaults.alpha : parse_range(raw.alpha, "--alpha", kMaxAlpha);
  if (raw.format.empty()) {
    cfg.format = defaults.format;
  } else {
    const auto it = kFormats.find(raw.format);
    if (it == kFormats.end()) throw UsageError("--format: unknown format '" + raw.format + "'");
    cfg.format = it->second;
  }
  const auto route = kRoutes.find(raw.route);
  if (route == kRoutes.end()) throw UsageError("--route: unknown route '" + raw.route + "'");
  cfg.route = route->second;
  const auto kind = kKinds.find(raw.kind);
  if (kind == kKinds.end()) throw UsageError("--kind: unknown kind '" + raw.kind + "'");
  cfg.kind = kind->second;
  if (!raw.output.empty()) cfg.output = raw.output;
  if (!raw.geometry.empty()) cfg.export_geometry = raw.geometry;
  cfg.parallelism = raw.jobs;
  if (raw.budget != 0) cfg.budget = raw.budget;
  cfg.precision = raw.precision;
  cfg.amended = raw.amended;

  const bool latex_ok = cfg.command == Command::Table;
  const bool csv_ok = cfg.command == Command::Table || cfg.command == Command::Roots;
  if ((cfg.format == Format::Latex && !latex_ok) || (cfg.format == Format::Csv && !csv_ok))
    throw UsageError("--format: '" + raw.format + "' is not available for this command");
  return {cfg, {}};
}

void VerificationReport::add(std::string name, Json params, bool passed, Json witness) {
  records_.push_back({std::move(name), std::move(params), passed, passed ? Json(nullptr) : std::move(witness)});
}

bool VerificationReport::passed() const {
  return std::all_of(records_.begin(), records_.end(), [](const CheckRecord& r) { return r.passed; });
}

std::vector<CheckRecord> VerificationReport::sorted() const {
  std::vector<CheckRecord> out = records_;
  std::stable_sort(out.begin(), out.end(), [](const CheckRecord& a, const CheckRecord& b) {
    if (a.name != b.name) return a.name < b.name;
    return a.params.dump() < b.params.dump();
  });
  return out;
}

Json VerificationReport::to_json() const {
  Json checks = Json::array();
  for (const auto& r : sorted()) {
    Json rec{{"check", r.name}, {"params", r.params}, {"status", r.passed ? "pass" : "fail"}};
    if (!r.passed) rec["witness"] = r.witness;
    checks.push_back(rec);
  }
  return Json{{"checks", checks}, {"passed", passed()}};
}

VerificationReport run_verification(const RunConfig& cfg) {
  std::vector<Task> tasks;
  for (int n = cfg.n.lo; n <= cfg.n.hi; ++n) add_n_checks(tasks, n);
  for_grid(cfg, [&](int n, int a) { add_pair_checks(tasks, n, a, cfg); });

  std::vector<VerificationReport> partial(tasks.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        tasks[i](partial[i]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const unsigned workers = std::max(1u, cfg.parallelism);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  VerificationReport merged;
  for (const auto& part : partial)
    for (const auto& rec : part.sorted()) merged.add(rec.name, rec.params, rec.passed, rec.witness);
  return merged;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (config.output) {
    file.open(*config.output);
    if (!file) {
      err << "error: cannot open " << *config.output << " for writing\n";
      return kExitUsage;
    }
    sink = &file;
  }
  try {
    switch (config.command) {
      case Command::Table: return run_table(config, *sink);
      case Command::Enumerate: return run_enumerate(config, *sink);
      case Command::Complex: return run_complex(config, *sink);
      case Command::Roots: return run_roots(config, *sink);
      case Command::Recurrence: return run_recurrence(config, *sink);
      case Command::Verify: {
        const auto report = run_verification(config);
        const Json j = report.to_json();
        if (config.format == Format::Jsonl) {
          for (const auto& c : j["checks"]) *sink << c.dump() << '\n';
        } else {
          *sink << j.dump(2) << '\n';
        }
        if (!report.passed()) {
          err << "verification failed\n";
          return kExitVerificationFailed;
        }
        return kExitOk;
      }
    }
  } catch (const BudgetExceeded& e) {
    err << "refused: " << e.what() << '\n';
    return kExitBudget;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int main_entry(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  ParseResult parsed;
  try {
    parsed = parse_args(argv);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nRun with --help for the command grammar.\n";
    return kExitUsage;
  }
  if (!parsed.config) {
    out << parsed.help;
    return kExitOk;
  }
  return run(*parsed.config, out, err);
}

}  // namespace ceuler::cli
