#include "bizon/app/graph_io.hpp"
#include "bizon/app/record.hpp"
#include "bizon/app/suites.hpp"
#include "bizon/canonical.hpp"
#include "bizon/counting.hpp"
#include "bizon/delcon.hpp"
#include "bizon/errors.hpp"
#include "bizon/parking.hpp"
#include "bizon/polytope.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace bizon;

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kBelowMinimum = 3, kBudget = 4 };

struct GraphSource {
  std::string file;
  std::string family;

  void attach(CLI::App* cmd) {
    auto* g = cmd->add_option("--graph", file, "Graph file ('p n m' header, 'e u v' lines, 1-indexed)");
    auto* f = cmd->add_option("--family", family, "Named family NAME:N (complete, loops, cycle, path, petersen)");
    g->excludes(f);
    f->excludes(g);
  }
  MultiGraph load() const {
    if (!file.empty()) return app::read_graph_file(file);
    if (!family.empty()) return app::parse_family_spec(family);
    throw app::ParseError("one of --graph or --family is required");
  }
  std::string label() const { return file.empty() ? family : file; }
};

unsigned resolve_threads(unsigned requested) {
  if (requested) return requested;
  if (const char* env = std::getenv("BIZON_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw app::ParseError(std::string("BIZON_THREADS must be a positive integer, got '") + env + "'");
  }
  return 0;
}

std::string format_vector(const ExponentVector& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

template <typename Range>
void print_vectors(const Range& vs, bool json) {
  if (json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& v : vs) j.push_back(v);
    std::cout << j.dump() << '\n';
  } else {
    for (const auto& v : vs) std::cout << format_vector(v) << '\n';
  }
}

struct HilbertCmd {
  GraphSource source;
  int r = 1;
  std::string method = "auto";
  bool json = false;
  bool no_cross_check = false;
  unsigned threads = 0;
  double budget = 1e9;

  int run() const {
    const MultiGraph g = source.load();
    DirectOptions direct{resolve_threads(threads), budget};
    const auto start = std::chrono::steady_clock::now();
    app::ResultRecord rec{source.label(), r, method, {}, 0.0};
    const bool delcon_ok = r == 0 || r == 1;
    if (method == "delcon" && !delcon_ok) throw InvalidArgument("--method delcon requires r = 0 or r = 1");

    if (method == "direct") {
      rec.hilbert = hilbert_direct(g, r, direct);
    } else if (method == "delcon") {
      check_r(g, r);
      rec.hilbert = hilbert_delcon(g, r);
    } else if (!delcon_ok || g.num_vertices() > kCanonicalMaxVertices) {
      rec.method = "direct";
      rec.hilbert = hilbert_direct(g, r, direct);
    } else {
      check_r(g, r);
      rec.method = "delcon";
      rec.hilbert = hilbert_delcon(g, r);
      if (!no_cross_check && basis_size_bound(g, r) <= budget) {
        const auto other = hilbert_direct(g, r, direct);
        if (other != rec.hilbert) {
          std::cerr << "error: methods disagree: delcon " << rec.hilbert.to_string() << " vs direct "
                    << other.to_string() << '\n';
          return kFailure;
        }
      }
    }
    rec.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (json ? app::to_json(rec) : app::to_text(rec)) << '\n';
    return kOk;
  }
};

struct ParkingCmd {
  GraphSource source;
  std::string action;
  bool json = false;

  int run() const {
    const MultiGraph g = source.load();
    if (action == "list") {
      print_vectors(enumerate_weak_parking(g), json);
    } else if (action == "count") {
      const auto n = enumerate_weak_parking(g).size();
      std::cout << (json ? nlohmann::json{{"count", n}}.dump() : std::to_string(n)) << '\n';
    } else if (action == "maximal") {
      print_vectors(maximal_weak_parking(g), json);
    } else {
      const bool ok = cone_equivalence_check(g);
      std::cout << (json ? nlohmann::json{{"cone_equivalent", ok}}.dump() : ok ? "true" : "false") << '\n';
      return ok ? kOk : kFailure;
    }
    return kOk;
  }
};

struct PolytopeCmd {
  GraphSource source;
  std::string action;
  bool json = false;

  int run() const {
    const MultiGraph g = source.load();
    if (action == "vertices") {
      print_vectors(all_vertices(g), json);
    } else if (action == "count") {
      const auto b = vertex_count_bounds(g);
      if (json)
        std::cout << nlohmann::json{{"count", b.count}, {"bound", b.bound}, {"tight", b.tight}}.dump() << '\n';
      else
        std::cout << "count " << b.count << "; bound " << b.bound << "; tight " << (b.tight ? "yes" : "no") << '\n';
    } else {
      const auto c = verify_vertex_characterizations(g);
      if (json)
        std::cout << nlohmann::json{{"unique_orientation", c.unique_orientation}, {"midpoint", c.midpoint}, {"ok", c.ok()}}
                         .dump()
                  << '\n';
      else
        std::cout << "unique-orientation " << (c.unique_orientation ? "true" : "false") << "; midpoint "
                  << (c.midpoint ? "true" : "false") << '\n'
                  << (c.ok() ? "true" : "false") << '\n';
      return c.ok() ? kOk : kFailure;
    }
    return kOk;
  }
};

struct VerifyCmd {
  std::string suite = "all";
  int max_n = 7;
  std::uint64_t seed = app::kDefaultCorpusSeed;
  unsigned threads = 0;

  int run() const {
    app::SuiteOptions opts{max_n, seed, resolve_threads(threads)};
    std::cout << "corpus seed: " << seed << '\n';
    const auto report = app::run_suite(suite, opts);
    app::print_report(std::cout, report);
    return report.passed() ? kOk : kFailure;
  }
};

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert functions of bizonotopal algebras of multigraphs"};
  app.require_subcommand(1);

  HilbertCmd hilbert;
  auto* h = app.add_subcommand("hilbert", "Hilbert function of B^(r)_G");
  hilbert.source.attach(h);
  h->add_option("--r", hilbert.r, "Parameter r (1 external, 0 central, -1 internal)")->required();
  h->add_option("--method", hilbert.method, "direct, delcon or auto")
      ->check(CLI::IsMember({"direct", "delcon", "auto"}));
  h->add_flag("--json", hilbert.json, "Machine-readable output");
  h->add_flag("--no-cross-check", hilbert.no_cross_check, "In auto mode, skip the direct recount");
  h->add_option("--threads", hilbert.threads, "Worker threads (0: BIZON_THREADS or all cores)");
  h->add_option("--budget", hilbert.budget, "Largest allowed box size for direct enumeration");

  ParkingCmd parking;
  auto* p = app.add_subcommand("parking", "Weak parking functions");
  parking.source.attach(p);
  p->add_option("action", parking.action, "list, count, maximal or cone-check")
      ->required()
      ->check(CLI::IsMember({"list", "count", "maximal", "cone-check"}));
  p->add_flag("--json", parking.json, "Machine-readable output");

  PolytopeCmd polytope;
  auto* q = app.add_subcommand("polytope", "Score-vector polytope");
  polytope.source.attach(q);
  q->add_option("action", polytope.action, "vertices, count or verify")
      ->required()
      ->check(CLI::IsMember({"vertices", "count", "verify"}));
  q->add_flag("--json", polytope.json, "Machine-readable output");

  VerifyCmd verify;
  auto* v = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string> suites = app::suite_names();
  suites.push_back("all");
  v->add_option("--suite", verify.suite, "Suite name")->check(CLI::IsMember(suites));
  v->add_option("--max-n", verify.max_n, "Largest complete graph in table checks")->check(CLI::Range(2, 9));
  v->add_option("--seed", verify.seed, "Seed of the random corpus");
  v->add_option("--threads", verify.threads, "Worker threads (0: BIZON_THREADS or all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*h) return hilbert.run();
    if (*p) return parking.run();
    if (*q) return polytope.run();
    return verify.run();
  } catch (const app::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const RBelowMinimum& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBelowMinimum;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: budget exceeded: " << e.what() << '\n';
    return kBudget;
  }
}
