// finring: command-line front end for the finite ring library.
//
// Exit status: 0 pass, 2 verification failure, 3 input error, 4 bound exceeded.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "finring/finring.hpp"

namespace {

using namespace finring;

constexpr int kExitPass = 0;
constexpr int kExitVerification = 2;
constexpr int kExitInput = 3;
constexpr int kExitBound = 4;

int exit_code_for(Errc e) {
  switch (e) {
    case Errc::VerificationFailed: return kExitVerification;
    case Errc::ScanBoundExceeded: return kExitBound;
    default: return kExitInput;
  }
}

struct Options {
  std::uint64_t oracle_bound = kDefaultOracleBound;
  bool json = false;
  std::string out;
};

std::uint64_t default_oracle_bound() {
  if (const char* env = std::getenv("FINRING_ORACLE_BOUND")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw Error(Errc::BadParameters, std::string("FINRING_ORACLE_BOUND is not a positive integer: ") + env);
  }
  return kDefaultOracleBound;
}

/// A path to a ring file, or a preset expression.
FiniteRing resolve_ring(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return load_ring_file(arg);
  return parse_preset(arg, load_ring_file);
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out);
  if (!f) throw Error(Errc::IoError, "cannot write " + opt.out);
  f << text;
  if (!f) throw Error(Errc::IoError, "write failed for " + opt.out);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string as_text(const Json& j) {
  std::ostringstream s;
  for (const auto& [k, v] : j.items()) s << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  return s.str();
}

// ---------------------------------------------------------------------------

int cmd_make(const Options& opt, const std::vector<std::string>& args) {
  std::string expr = args.front();
  if (args.size() > 1) {
    expr += "(";
    for (std::size_t i = 1; i < args.size(); ++i) expr += (i > 1 ? "," : "") + args[i];
    expr += ")";
  }
  const FiniteRing r = parse_preset(expr, load_ring_file);
  const std::string ring_json = dump(ring_to_json(r));
  if (opt.out.empty()) {
    std::cout << ring_json;
    std::cerr << r.label() << " order " << r.order() << "\n";
  } else {
    emit(opt, ring_json);
    std::cout << r.label() << " order " << r.order() << "\n";
  }
  return kExitPass;
}

int cmd_info(const Options& opt, const std::string& arg) {
  const FiniteRing r = resolve_ring(arg);
  Json j;
  j["label"] = r.label();
  j["order"] = r.order();
  j["char"] = characteristic(r);
  const LocalityResult loc = is_local(r);
  j["local"] = loc.local;
  if (loc.local) {
    const LocalRing lr(r);
    const LocalData& ld = lr.data();
    const CharModule v = characteristic_module(lr);
    j["p"] = ld.p;
    j["N"] = ld.N;
    j["q"] = ld.q;
    j["n"] = ld.n;
    j["nilpotency"] = ld.nilpotency_index;
    j["rho"] = v.rho;
    const Coord same = count_maximal_subrings_same_residue(lr);
    const Coord total = count_maximal_subrings_all(lr);
    if (total != same + static_cast<Coord>(arith::omega(ld.n)))
      throw Error(Errc::VerificationFailed, "maximal subring counts are inconsistent");
    j["count_same_residue"] = same;
    j["count_total"] = total;
  } else {
    j["factors"] = local_decompose(r).factors.size();
  }
  emit(opt, opt.json ? dump(j) : as_text(j));
  return kExitPass;
}

Json subring_json(const FiniteRing& r, const Subring& s, const LocalRing* lr, bool is_maximal) {
  Json j;
  j["basis"] = to_json(s.group);
  j["order"] = s.order();
  j["index"] = r.order() / s.order();
  if (lr) {
    j["residue_field_size"] = residue_size(*lr, s);
    j["kind"] = std::string(kind_name(classify(*lr, s)));
  } else {
    j["residue_field_size"] = nullptr;
    j["kind"] = std::string(kind_name(SubringKind::Other));
  }
  j["is_maximal"] = is_maximal;
  return j;
}

std::string subrings_text(const Json& list) {
  std::ostringstream s;
  for (const Json& e : list) {
    s << "order " << e["order"] << " index " << e["index"] << " kind " << e["kind"].get<std::string>()
      << (e["is_maximal"].get<bool>() ? " maximal" : "") << " basis";
    for (const Json& b : e["basis"]) s << " " << b.dump();
    s << "\n";
  }
  return s.str();
}

int cmd_subrings(const Options& opt, const std::string& arg, bool all, bool oracle) {
  const FiniteRing r = resolve_ring(arg);
  const LocalityResult loc = is_local(r);
  std::optional<LocalRing> lr;
  if (loc.local) lr.emplace(r);
  const LocalRing* lrp = lr ? &*lr : nullptr;

  std::vector<Subring> census;
  std::vector<std::size_t> census_max;
  if (all || oracle) {
    census = enumerate_all_subrings(r, opt.oracle_bound);
    census_max = maximal_among(census, [&](const Subring& s) { return s.order() != r.order(); });
  }
  auto census_is_max = [&](std::size_t i) {
    return std::find(census_max.begin(), census_max.end(), i) != census_max.end();
  };

  // Formula-driven maximal subrings (local rings only).
  std::vector<Subring> formula;
  if (lr) {
    for (ClassifiedSubring& c : maximal_subrings_all(*lr)) formula.push_back(std::move(c.ring));
  } else if (!all && !oracle) {
    throw Error(Errc::NotLocal, "maximal subrings by formula need a local ring; use --oracle");
  }

  Json list = Json::array();
  if (all) {
    for (std::size_t i = 0; i < census.size(); ++i) list.push_back(subring_json(r, census[i], lrp, census_is_max(i)));
  } else if (lr) {
    for (const Subring& s : formula) list.push_back(subring_json(r, s, lrp, true));
  } else {
    for (std::size_t i : census_max) list.push_back(subring_json(r, census[i], lrp, true));
  }

  // Cross-check: formula maximal subrings against the census.
  std::vector<std::string> diff;
  if (oracle && lr) {
    std::set<AdditiveSubgroup> from_formula, from_census;
    for (const Subring& s : formula) from_formula.insert(s.group);
    for (std::size_t i : census_max) from_census.insert(census[i].group);
    for (const auto& g : from_formula)
      if (!from_census.count(g)) diff.push_back("formula only: " + to_json(g).dump());
    for (const auto& g : from_census)
      if (!from_formula.count(g)) diff.push_back("census only: " + to_json(g).dump());
  }

  if (opt.json) {
    emit(opt, dump(list));
  } else {
    std::string text = subrings_text(list);
    text += std::to_string(list.size()) + " subring" + (list.size() == 1 ? "" : "s") + "\n";
    emit(opt, text);
  }
  for (const std::string& d : diff) std::cerr << d << "\n";
  if (!diff.empty()) {
    std::cerr << "VerificationFailed: formula and census disagree\n";
    return kExitVerification;
  }
  return kExitPass;
}

Json report_json(const AuditReport& rep) {
  Json j;
  j["label"] = rep.label;
  j["order"] = rep.order;
  j["local"] = rep.local;
  j["passed"] = rep.passed();
  Json clauses = Json::array();
  for (const AuditClause& c : rep.clauses) {
    Json cj = {{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}};
    if (!c.passed) cj["witness"] = c.witness;
    clauses.push_back(std::move(cj));
  }
  j["clauses"] = std::move(clauses);
  return j;
}

std::string report_text(const std::string& title, const AuditReport& rep) {
  std::ostringstream s;
  s << (rep.passed() ? "PASS " : "FAIL ") << title << " (order " << rep.order << ", " << rep.clauses.size()
    << " clauses)\n";
  for (const AuditClause& c : rep.clauses)
    if (!c.passed) s << "  FAIL " << c.name << ": " << c.witness << "\n";
  return s.str();
}

struct EntryOutcome {
  std::string title;
  std::optional<AuditReport> report;
  std::optional<Error> error;
};

int cmd_audit(const Options& opt, const std::string& arg, bool catalog) {
  std::vector<EntryOutcome> outcomes;
  if (catalog) {
    const auto& entries = builtin_catalog();
    std::vector<std::future<EntryOutcome>> jobs;
    for (const CatalogEntry& e : entries)
      jobs.push_back(std::async(std::launch::async, [&e, bound = opt.oracle_bound] {
        EntryOutcome o{e.expr, std::nullopt, std::nullopt};
        try {
          o.report = audit_catalog_entry(e, bound);
        } catch (const Error& err) {
          o.error = err;
        }
        return o;
      }));
    for (auto& j : jobs) outcomes.push_back(j.get());
  } else {
    const FiniteRing r = resolve_ring(arg);
    EntryOutcome o{r.label().empty() ? arg : r.label(), std::nullopt, std::nullopt};
    try {
      o.report = audit_ring(r, opt.oracle_bound);
    } catch (const Error& err) {
      if (err.code() != Errc::ScanBoundExceeded) throw;
      o.error = err;
    }
    outcomes.push_back(std::move(o));
  }

  int code = kExitPass;
  bool bound_hit = false;
  Json all = Json::array();
  std::string text;
  for (const EntryOutcome& o : outcomes) {
    if (o.report) {
      if (!o.report->passed()) code = kExitVerification;
      Json j = report_json(*o.report);
      j["entry"] = o.title;
      all.push_back(std::move(j));
      text += report_text(o.title, *o.report);
    } else {
      const int c = exit_code_for(o.error->code());
      if (c == kExitBound)
        bound_hit = true;
      else
        code = kExitVerification;
      all.push_back({{"entry", o.title}, {"passed", false}, {"error", o.error->what()}});
      text += (c == kExitBound ? "SKIP " : "FAIL ") + o.title + ": " + o.error->what() + "\n";
    }
  }
  if (code == kExitPass && bound_hit) code = kExitBound;
  emit(opt, opt.json ? dump(catalog ? all : all.front()) : text);
  return code;
}

int cmd_decompose(const Options& opt, const std::string& arg) {
  const FiniteRing r = resolve_ring(arg);
  Json factors = Json::array();
  for (const LocalFactor& f : local_decompose(r).factors)
    factors.push_back({{"atom", to_json(f.atom)}, {"order", f.ring().order()}, {"ring", ring_to_json(f.ring())}});
  Json j = {{"label", r.label()}, {"order", r.order()}, {"factors", factors}};
  if (opt.json) {
    emit(opt, dump(j));
  } else {
    std::ostringstream s;
    s << r.label() << " order " << r.order() << ": " << factors.size() << " local factor"
      << (factors.size() == 1 ? "" : "s") << "\n";
    for (const Json& f : factors) s << "  atom " << f["atom"].dump() << " order " << f["order"] << "\n";
    emit(opt, s.str());
  }
  return kExitPass;
}

int cmd_localdata(const Options& opt, const std::string& arg) {
  const LocalRing lr(resolve_ring(arg));
  const LocalData& ld = lr.data();
  Json j = {{"p", ld.p},
            {"N", ld.N},
            {"n", ld.n},
            {"q", ld.q},
            {"nilpotency_index", ld.nilpotency_index},
            {"unit_group_order", ld.unit_group_order},
            {"rho", characteristic_module(lr).rho}};
  emit(opt, opt.json ? dump(j) : as_text(j));
  return kExitPass;
}

int cmd_teichmuller(const Options& opt, const std::string& arg) {
  const LocalRing lr(resolve_ring(arg));
  const TeichmullerData& t = lr.teichmuller();
  Json tbar = Json::array();
  for (const Element& e : t.tbar) tbar.push_back(to_json(e));
  Json j = {{"q", lr.data().q}, {"alpha", t.alpha}, {"generator", to_json(t.generator)}, {"tbar", tbar}};
  if (opt.json) {
    emit(opt, dump(j));
  } else {
    std::string s;
    for (const Element& e : t.tbar) s += to_string(e) + "\n";
    emit(opt, s);
  }
  return kExitPass;
}

int cmd_chain(const Options& opt, const std::string& arg) {
  const LocalRing lr(resolve_ring(arg));
  const ChainDesc chain = maximal_chain(lr);
  Json rings = Json::array();
  for (const Subring& s : chain.rings) rings.push_back({{"order", s.order()}, {"basis", to_json(s.group)}});
  Json j = {{"length", chain.indices.size()}, {"indices", chain.indices}, {"rings", rings}};
  if (opt.json) {
    emit(opt, dump(j));
  } else {
    std::ostringstream s;
    s << "length " << chain.indices.size() << "\n";
    for (std::size_t k = 0; k < chain.rings.size(); ++k) {
      s << "R_" << k << " order " << chain.rings[k].order();
      if (k > 0) s << " index " << chain.indices[k - 1];
      s << "\n";
    }
    emit(opt, s.str());
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finring: finite commutative rings, their local structure and maximal subrings"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  std::optional<std::uint64_t> bound_flag;
  app.add_option("--oracle-bound", bound_flag, "Largest ring size for exhaustive scans (default 4096)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", opt.json, "Machine-readable output");
  app.add_option("--out", opt.out, "Write output to this path");

  std::vector<std::string> make_args;
  auto* make = app.add_subcommand("make", "Build a preset ring and write its JSON description");
  make->add_option("preset", make_args, "Preset expression, or a preset name followed by its parameters")
      ->required();

  std::string ring_arg;
  auto add_ring = [&](CLI::App* sub) { sub->add_option("ring", ring_arg, "Ring file or preset expression")->required(); };

  auto* info = app.add_subcommand("info", "Summary invariants and maximal subring counts");
  add_ring(info);

  bool maximal = false, all = false, oracle = false;
  auto* subrings = app.add_subcommand("subrings", "List maximal subrings or all subrings");
  add_ring(subrings);
  auto* fmax = subrings->add_flag("--maximal", maximal, "Maximal subrings from the hyperplane formula (default)");
  subrings->add_flag("--all", all, "Every subring, from the exhaustive census")->excludes(fmax);
  subrings->add_flag("--oracle", oracle, "Cross-check against the exhaustive census");

  bool catalog = false;
  auto* audit = app.add_subcommand("audit", "Check every structural statement over the subring census");
  audit->add_option("ring", ring_arg, "Ring file or preset expression");
  audit->add_flag("--catalog", catalog, "Audit every built-in catalog entry");

  auto* decompose = app.add_subcommand("decompose", "Split into local factors");
  add_ring(decompose);
  auto* localdata = app.add_subcommand("localdata", "Invariants of a local ring");
  add_ring(localdata);
  auto* teich = app.add_subcommand("teichmuller", "The Teichmuller set, lexicographically");
  add_ring(teich);
  auto* chain = app.add_subcommand("chain", "A maximal chain down to the coefficient ring");
  add_ring(chain);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    opt.oracle_bound = bound_flag ? *bound_flag : default_oracle_bound();
    if (*make) return cmd_make(opt, make_args);
    if (*info) return cmd_info(opt, ring_arg);
    if (*subrings) return cmd_subrings(opt, ring_arg, all, oracle);
    if (*audit) {
      if (catalog == !ring_arg.empty()) throw Error(Errc::BadParameters, "audit needs a ring or --catalog, not both");
      return cmd_audit(opt, ring_arg, catalog);
    }
    if (*decompose) return cmd_decompose(opt, ring_arg);
    if (*localdata) return cmd_localdata(opt, ring_arg);
    if (*teich) return cmd_teichmuller(opt, ring_arg);
    if (*chain) return cmd_chain(opt, ring_arg);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kExitInput;
}
