// Command-line front end: compute invariants for a supplied graph, generate
// the built-in families, run named verification suites, and emit extremal
// tables. Exit codes: 0 pass/success, 1 property or certificate violated,
// 2 inconclusive (budget or cap hit), 3 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "fmplab/budget.hpp"
#include "fmplab/errors.hpp"
#include "fmplab/extremal.hpp"
#include "fmplab/families.hpp"
#include "fmplab/fractional.hpp"
#include "fmplab/graph.hpp"
#include "fmplab/graph6.hpp"
#include "fmplab/hamiltonian.hpp"
#include "fmplab/matching.hpp"
#include "fmplab/preclusion.hpp"
#include "fmplab/serialize.hpp"
#include "fmplab/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolated = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;

struct InputFlags {
  std::string graph6_text;
  std::string edges_path;
  std::string family_name;
  std::vector<long long> family_params;
};

void add_input_flags(CLI::App* cmd, InputFlags& in) {
  cmd->add_option("--graph6", in.graph6_text, "graph in graph6 encoding");
  cmd->add_option("--edges", in.edges_path,
                  "file with an edge list: 'n m' header then 'u v' lines");
  cmd->add_option("--family", in.family_name, "built-in family name");
  cmd->add_option("--params", in.family_params, "family parameters")
      ->expected(-1);
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

fmplab::Graph load_graph(const InputFlags& in) {
  int sources = static_cast<int>(!in.graph6_text.empty()) +
                static_cast<int>(!in.edges_path.empty()) +
                static_cast<int>(!in.family_name.empty());
  if (sources != 1)
    throw std::invalid_argument(
        "exactly one of --graph6, --edges, --family is required");
  if (!in.graph6_text.empty()) return fmplab::from_graph6(in.graph6_text);
  if (!in.edges_path.empty()) return fmplab::from_edge_list(slurp(in.edges_path));
  return fmplab::build_family({in.family_name, in.family_params});
}

fmplab::Deadline deadline_from(double budget_seconds) {
  return budget_seconds > 0 ? fmplab::Deadline::after_seconds(budget_seconds)
                            : fmplab::Deadline::unlimited();
}

std::string fmt_set(const fmplab::VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (int v = 0; v < fmplab::kMaxVertices; ++v)
    if (s.contains(v)) {
      if (!first) out += ",";
      out += std::to_string(v);
      first = false;
    }
  return out + "}";
}

std::string fmt_edges(const std::vector<fmplab::Edge>& edges) {
  std::string out;
  for (const auto& e : edges) {
    if (!out.empty()) out += " ";
    out += "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
  }
  return out.empty() ? "-" : out;
}

// Parses "5" or "5..9" into an inclusive range.
std::pair<int, int> parse_range(const std::string& text) {
  auto one = [](const std::string& part) {
    std::size_t used = 0;
    int v = std::stoi(part, &used);
    if (used != part.size()) throw std::invalid_argument("bad range: " + part);
    return v;
  };
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int v = one(text);
    return {v, v};
  }
  int lo = one(text.substr(0, dots));
  int hi = one(text.substr(dots + 2));
  if (hi < lo) throw std::invalid_argument("bad range: " + text);
  return {lo, hi};
}

void emit(const fmplab::ordered_json& j) { std::cout << j.dump(2) << "\n"; }

// --- compute -----------------------------------------------------------------

int check_certificate(const fmplab::Graph& g, const std::string& metric,
                      const std::string& path, int max_order) {
  fmplab::ordered_json j;
  try {
    j = fmplab::ordered_json::parse(slurp(path));
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "certificate file is not JSON: " << e.what() << "\n";
    return kExitUsage;
  }

  std::optional<std::string> err;
  try {
    if (metric == "fpm") {
      fmplab::FpmResult r = fmplab::parse_fpm_json(j);
      err = fmplab::check_fpm_result(g, r);
    } else if (metric == "fmp") {
      auto [value, witness] = fmplab::parse_fmp_json(j);
      fmplab::PreclusionResult actual = fmplab::fmp(g, {max_order});
      if (actual.value != value)
        err = "claimed fmp " + std::to_string(value) + " but recomputed " +
              std::to_string(actual.value);
      else if (value > 0 && !witness)
        err = "positive fmp requires a witness";
      else if (witness)
        err = fmplab::check_fmp_witness(g, *witness, value);
    } else if (metric == "mp") {
      if (!j.contains("mp") || !j["mp"].is_number_integer()) {
        err = "missing integer field 'mp'";
      } else {
        int actual = fmplab::mp(g);
        if (actual != j["mp"].get<int>())
          err = "claimed mp " + j["mp"].dump() + " but recomputed " +
                std::to_string(actual);
      }
    } else if (metric == "mu_f") {
      fmplab::Rational actual = fmplab::fractional_matching_number(g);
      if (!j.contains("mu_f") || !j["mu_f"].contains("num") ||
          !j["mu_f"].contains("den"))
        err = "missing field 'mu_f' with num/den";
      else if (j["mu_f"]["num"].get<long long>() != actual.num ||
               j["mu_f"]["den"].get<long long>() != actual.den)
        err = "claimed mu_f differs from recomputed " +
              std::to_string(actual.num) + "/" + std::to_string(actual.den);
    } else if (metric == "hamiltonian") {
      bool claimed = j.value("hamiltonian", false);
      if (claimed != fmplab::is_hamiltonian(g)) {
        err = "claimed hamiltonicity differs from recomputed";
      } else if (claimed) {
        if (!j.contains("cycle")) {
          err = "positive claim requires a cycle";
        } else {
          std::vector<int> cyc = j["cycle"].get<std::vector<int>>();
          std::uint64_t seen = 0;
          bool ok = static_cast<int>(cyc.size()) == g.order() && g.order() >= 3;
          for (std::size_t i = 0; ok && i < cyc.size(); ++i) {
            int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
            ok = u >= 0 && u < g.order() && !(seen >> u & 1) && g.adjacent(u, v);
            seen |= 1ull << u;
          }
          if (!ok) err = "cycle is not a spanning cycle of the graph";
        }
      }
    }
  } catch (const fmplab::ParseError& e) {
    err = std::string("malformed certificate: ") + e.what();
  }

  if (err) {
    std::cout << "check: FAIL " << *err << "\n";
    return kExitViolated;
  }
  std::cout << "check: OK\n";
  return kExitPass;
}

int run_compute(const InputFlags& in, const std::string& metric,
                const std::string& format, const std::string& check_path,
                int max_order) {
  fmplab::Graph g = load_graph(in);
  if (!check_path.empty()) return check_certificate(g, metric, check_path, max_order);

  fmplab::ordered_json j;
  std::string text;
  if (metric == "fmp") {
    fmplab::PreclusionResult r = fmplab::fmp(g, {max_order});
    j = fmplab::json_fmp(r);
    text = "fmp = " + std::to_string(r.value) + "\nmethod = " + r.method + "\n";
    if (r.witness)
      text += "S = " + fmt_set(r.witness->s) + "\nI = " + fmt_set(r.witness->i) +
              "\ndeleted = " + fmt_edges(r.witness->t.edges()) + "\n";
  } else if (metric == "mp") {
    int v = fmplab::mp(g);
    j["mp"] = v;
    text = "mp = " + std::to_string(v) + "\n";
  } else if (metric == "mu_f") {
    fmplab::Rational q = fmplab::fractional_matching_number(g);
    j["mu_f"] = fmplab::json_rational(q);
    text = "mu_f = " + std::to_string(q.num) + "/" + std::to_string(q.den) + "\n";
  } else if (metric == "fpm") {
    fmplab::FpmResult r =
        fmplab::has_fpm_certified(g, g.order() <= fmplab::kPartitionCap);
    j = fmplab::json_fpm(r);
    text = std::string("fpm = ") + (r.has ? "true" : "false") + "\n";
    if (r.witness) text += "witness_S = " + fmt_set(r.witness->s) + "\n";
  } else {  // hamiltonian
    auto cyc = fmplab::hamiltonian_cycle(g);
    j["hamiltonian"] = cyc.has_value();
    text = std::string("hamiltonian = ") + (cyc ? "true" : "false") + "\n";
    if (cyc) {
      j["cycle"] = *cyc;
      text += "cycle =";
      for (int v : *cyc) text += " " + std::to_string(v);
      text += "\n";
    }
  }

  if (format == "json") {
    emit(j);
  } else if (format == "csv") {
    std::cout << "metric,value\n"
              << metric << "," << j.begin().value().dump() << "\n";
  } else {
    std::cout << text;
  }
  return kExitPass;
}

// --- gen ---------------------------------------------------------------------

int run_gen(const InputFlags& in, const std::string& format, bool list) {
  if (list) {
    for (const auto& [name, desc] : fmplab::family_catalog())
      std::cout << name << " — " << desc << "\n";
    return kExitPass;
  }
  if (in.family_name.empty())
    throw std::invalid_argument("gen requires --family (or --list)");
  fmplab::Graph g = fmplab::build_family({in.family_name, in.family_params});
  std::string g6 = fmplab::to_graph6(g);

  if (format == "json") {
    fmplab::ordered_json j;
    j["family"] = in.family_name;
    j["params"] = in.family_params;
    j["n"] = g.order();
    j["m"] = g.edge_count();
    j["graph6"] = g6;
    j["edges"] = fmplab::json_edge_list(g.edges());
    emit(j);
  } else if (format == "csv") {
    std::cout << "family,n,m,graph6\n"
              << in.family_name << "," << g.order() << "," << g.edge_count()
              << "," << g6 << "\n";
  } else {
    std::cout << g6 << "\n";
  }
  return kExitPass;
}

// --- verify ------------------------------------------------------------------

int run_verify(const std::string& suite, const std::string& format,
               double budget_seconds, int workers, bool long_run,
               std::uint64_t seed) {
  fmplab::SuiteOptions opt;
  opt.seed = seed;
  opt.long_run = long_run;
  opt.sweep.deadline = deadline_from(budget_seconds);
  opt.sweep.workers = workers;
  fmplab::SuiteReport rep = fmplab::run_suite(suite, opt);

  if (format == "json") {
    fmplab::ordered_json j;
    j["id"] = rep.id;
    j["outcome"] = rep.outcome();
    j["instances"] = fmplab::ordered_json::array();
    for (const auto& inst : rep.instances) {
      fmplab::ordered_json ji;
      ji["label"] = inst.label;
      ji["status"] =
          inst.pass ? "pass" : (inst.undecided ? "undecided" : "fail");
      ji["details"] = inst.details;
      j["instances"].push_back(ji);
    }
    emit(j);
  } else if (format == "csv") {
    std::cout << "suite,label,status,details\n";
    for (const auto& inst : rep.instances)
      std::cout << rep.id << "," << inst.label << ","
                << (inst.pass ? "pass" : (inst.undecided ? "undecided" : "fail"))
                << "," << inst.details << "\n";
  } else {
    for (const auto& inst : rep.instances)
      std::cout << "  ["
                << (inst.pass ? "PASS" : (inst.undecided ? "UNDECIDED" : "FAIL"))
                << "] " << inst.label
                << (inst.details.empty() ? "" : "  " + inst.details) << "\n";
    std::cout << "suite " << rep.id << ": " << rep.outcome() << "\n";
  }

  std::string out = rep.outcome();
  return out == "pass" ? kExitPass
                       : (out == "fail" ? kExitViolated : kExitInconclusive);
}

// --- table -------------------------------------------------------------------

fmplab::ExtremalRecord construction_record(int n, int k) {
  fmplab::SWitness w = fmplab::s_witness(n, k);
  fmplab::ExtremalRecord rec;
  rec.quantity = "s";
  rec.n = n;
  rec.k = k;
  rec.lower = (n * k + 1) / 2;  // value k forces min degree k, so >= nk/2 edges
  rec.upper = static_cast<int>(w.edge_formula);
  rec.witness_graph6 = fmplab::to_graph6(w.graph);
  rec.strategy = "construction";
  rec.status = "construction-only";
  rec.note = "case " + w.strategy;
  return rec;
}

fmplab::ExtremalRecord s_record_for(int n, int k, const fmplab::SweepOptions& sw) {
  if (n <= 9) return fmplab::s_exact(n, k, {sw, {}});
  if (k >= 6 && k <= n - 1) return construction_record(n, k);
  throw fmplab::ResourceLimitError(
      "s(" + std::to_string(n) + "," + std::to_string(k) +
      "): outside the exact-search range (n <= 9) and the construction range "
      "(k >= 6)");
}

int run_table(const std::string& quantity, const std::string& n_range,
              const std::string& k_range, const std::string& format,
              double budget_seconds, int workers) {
  fmplab::SweepOptions sw;
  sw.deadline = deadline_from(budget_seconds);
  sw.workers = workers;
  auto [n_lo, n_hi] = parse_range(n_range);
  auto [k_lo, k_hi] = parse_range(k_range);

  std::vector<fmplab::ExtremalRecord> rows;
  bool violated = false;
  for (int n = n_lo; n <= n_hi; ++n) {
    for (int k = k_lo; k <= k_hi; ++k) {
      fmplab::ExtremalRecord rec;
      try {
        if (quantity == "s") {
          rec = s_record_for(n, k, sw);
        } else if (quantity == "f") {
          fmplab::FVerifyReport fr = fmplab::f_verify(n, k, sw);
          rec = fr.record;
          if (fr.complete && !(fr.upper_ok && fr.witness_ok)) violated = true;
        } else if (quantity == "g") {
          rec = fmplab::g_from_s(s_record_for(n, k + 1, sw));
        } else {  // construction
          rec = construction_record(n, k);
        }
      } catch (const fmplab::ResourceLimitError& e) {
        rec.quantity = quantity == "construction" ? "s" : quantity;
        rec.n = n;
        rec.k = k;
        rec.strategy = quantity == "f" ? "complement" : "exhaustive";
        rec.status = "inconclusive";
        rec.note = e.what();
      } catch (const std::invalid_argument& e) {
        rec.quantity = quantity == "construction" ? "s" : quantity;
        rec.n = n;
        rec.k = k;
        rec.strategy = "derived";
        rec.status = "inconclusive";
        rec.note = e.what();
      }
      rows.push_back(std::move(rec));
    }
  }

  if (format == "json") {
    fmplab::ordered_json arr = fmplab::ordered_json::array();
    for (const auto& r : rows) arr.push_back(fmplab::json_extremal(r));
    emit(arr);
  } else if (format == "text") {
    for (const auto& r : rows) {
      std::cout << r.quantity << "(" << r.n << "," << r.k << "): ";
      if (r.value)
        std::cout << *r.value;
      else
        std::cout << "[" << (r.lower ? std::to_string(*r.lower) : "?") << ", "
                  << (r.upper ? std::to_string(*r.upper) : "?") << "]";
      std::cout << " status=" << r.status << "\n";
    }
  } else {
    std::cout << fmplab::csv_extremal_header() << "\n";
    for (const auto& r : rows) std::cout << fmplab::csv_extremal_row(r) << "\n";
  }

  bool inconclusive = false;
  for (const auto& r : rows) inconclusive |= r.status == "inconclusive";
  if (violated) return kExitViolated;
  return inconclusive ? kExitInconclusive : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fractional matching preclusion laboratory"};
  app.require_subcommand(1);

  double budget_seconds = 0.0;
  int workers = 1;

  InputFlags compute_in;
  std::string metric, compute_format = "json", check_path;
  int max_order = 20;
  auto* compute = app.add_subcommand(
      "compute", "compute an invariant of a single graph");
  add_input_flags(compute, compute_in);
  compute->add_option("metric", metric, "what to compute")
      ->required()
      ->check(CLI::IsMember({"fmp", "mp", "mu_f", "fpm", "hamiltonian"}));
  compute->add_option("--format", compute_format)
      ->check(CLI::IsMember({"json", "csv", "text"}));
  compute->add_option("--check", check_path,
                      "revalidate a previously emitted JSON report against "
                      "the graph instead of recomputing");
  compute->add_option("--max-order", max_order,
                      "largest order accepted by the exact fmp search");
  compute->add_option("--budget-seconds", budget_seconds)
      ->envname("FMPLAB_BUDGET_SECONDS");
  compute->add_option("--workers", workers)->check(CLI::PositiveNumber);

  InputFlags gen_in;
  std::string gen_format = "text";
  bool gen_list = false;
  auto* gen = app.add_subcommand("gen", "generate a built-in family member");
  add_input_flags(gen, gen_in);
  gen->add_option("--format", gen_format)
      ->check(CLI::IsMember({"json", "csv", "text"}));
  gen->add_flag("--list", gen_list, "list the family catalog");

  std::string suite, verify_format = "text";
  bool long_run = false;
  std::uint64_t seed = fmplab::kDefaultSeed;
  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("suite", suite, "suite id")
      ->required()
      ->check(CLI::IsMember(fmplab::suite_ids()));
  verify->add_option("--format", verify_format)
      ->check(CLI::IsMember({"json", "csv", "text"}));
  verify->add_flag("--long-run", long_run, "enable the hours-scale searches");
  verify->add_option("--seed", seed, "seed for the randomized suites");
  verify->add_option("--budget-seconds", budget_seconds)
      ->envname("FMPLAB_BUDGET_SECONDS");
  verify->add_option("--workers", workers)->check(CLI::PositiveNumber);

  std::string quantity, n_range, k_range, table_format = "csv";
  auto* table = app.add_subcommand("table", "emit extremal-quantity tables");
  table->add_option("--quantity", quantity)
      ->required()
      ->check(CLI::IsMember({"s", "f", "g", "construction"}));
  table->add_option("--n", n_range, "order or order range, e.g. 7 or 5..9")
      ->required();
  table->add_option("--k", k_range, "value or value range")->required();
  table->add_option("--format", table_format)
      ->check(CLI::IsMember({"json", "csv", "text"}));
  table->add_option("--budget-seconds", budget_seconds)
      ->envname("FMPLAB_BUDGET_SECONDS");
  table->add_option("--workers", workers)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      app.exit(e);
      return kExitPass;
    }
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (compute->parsed())
      return run_compute(compute_in, metric, compute_format, check_path,
                         max_order);
    if (gen->parsed()) return run_gen(gen_in, gen_format, gen_list);
    if (verify->parsed())
      return run_verify(suite, verify_format, budget_seconds, workers, long_run,
                        seed);
    return run_table(quantity, n_range, k_range, table_format, budget_seconds,
                     workers);
  } catch (const fmplab::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fmplab::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
}
