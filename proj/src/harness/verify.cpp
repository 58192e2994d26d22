#include "p3/harness/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "p3/closure.hpp"
#include "p3/generators.hpp"
#include "p3/graph_io.hpp"
#include "p3/harness/verdict_json.hpp"
#include "p3/solvers/caterpillar.hpp"
#include "p3/solvers/closed_forms.hpp"
#include "p3/solvers/cograph.hpp"
#include "p3/solvers/paths.hpp"
#include "p3/solvers/tree.hpp"

namespace p3 {
namespace {

using Check = std::function<std::optional<Mismatch>()>;

// Solver verdict against the engine: same winner, same Grundy value when
// the solver reports one, and a witness that really moves to a zero position.
std::optional<Mismatch> compare(const std::string& instance, const Graph& g, Variant v, const Verdict& solver,
                                const EngineOptions& options) {
  Engine engine(g, v, options);
  const Verdict oracle = engine.decide();
  bool ok = solver.winner == oracle.winner && (!solver.grundy || solver.grundy == oracle.grundy);
  if (ok && solver.witness) {
    const VertexSet start = g.empty_set();
    ok = legal_moves(g, start, v).contains(*solver.witness) &&
         engine.grundy(extend_hull(g, start, *solver.witness)) == 0;
  }
  if (ok) return std::nullopt;
  return Mismatch{instance, describe(solver), describe(oracle)};
}

std::optional<Mismatch> compare_grundy(const std::string& instance, const Graph& g, Variant v, Grundy solver,
                                       const EngineOptions& options) {
  Engine engine(g, v, options);
  const Grundy oracle = engine.grundy(g.empty_set());
  if (solver == oracle) return std::nullopt;
  return Mismatch{instance, "g=" + std::to_string(solver), "g=" + std::to_string(oracle)};
}

std::string named(const char* prefix, std::size_t n) { return prefix + std::to_string(n); }

std::vector<Check> build_checks(std::string_view family, const VerifyOptions& o) {
  std::vector<Check> checks;
  const auto& eo = o.engine;
  const std::size_t max_n = o.max_n;
  if (family == "path-free") {
    auto table = std::make_shared<FreePathTable>(max_n);
    for (std::size_t n = 1; n <= max_n; ++n)
      checks.push_back([=] { return compare_grundy(named("P_", n), make_path(n), Variant::kFree, table->value(n, {}), eo); });
  } else if (family == "path-connected") {
    for (std::size_t n = 1; n <= max_n; ++n)
      checks.push_back([=] {
        return compare_grundy(named("P_", n), make_path(n), Variant::kConnected, connected_path_grundy(n), eo);
      });
  } else if (family == "cycle-free") {
    for (std::size_t n = 3; n <= max_n; ++n)
      checks.push_back([=] { return compare(named("C_", n), make_cycle(n), Variant::kFree, free_cycle_winner(n), eo); });
  } else if (family == "cycle-connected") {
    for (std::size_t n = 3; n <= max_n; ++n)
      checks.push_back([=] {
        return compare_grundy(named("C_", n), make_cycle(n), Variant::kConnected, connected_cycle_grundy(n), eo);
      });
  } else if (family == "ladder") {
    for (std::size_t n = 1; n <= max_n; ++n)
      checks.push_back([=] {
        return compare(named("L_", n), make_ladder(n), Variant::kConnected, ladder_connected_winner(n), eo);
      });
  } else if (family == "star") {
    for (std::size_t t = 0; t <= max_n; ++t)
      checks.push_back([=] { return compare(named("K_1,", t), make_star(t), Variant::kFree, star_free_winner(t), eo); });
  } else if (family == "clique") {
    for (std::size_t n = 1; n <= max_n; ++n)
      checks.push_back([=] { return compare(named("K_", n), make_clique(n), Variant::kFree, clique_free_winner(n), eo); });
  } else if (family == "tree") {
    std::vector<Graph> trees;
    for (std::size_t n = 1; n <= std::min<std::size_t>(max_n, 10); ++n)
      for (auto& t : all_unlabeled_trees(n)) trees.push_back(std::move(t));
    Rng rng(o.seed);
    for (std::size_t i = 0; i < o.count; ++i)
      trees.push_back(random_tree(static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(max_n))), rng));
    for (auto& t : trees)
      checks.push_back([=] { return compare(emit_graph(t), t, Variant::kConnected, tree_connected_winner(t), eo); });
  } else if (family == "caterpillar") {
    Rng rng(o.seed);
    for (std::size_t i = 0; i < o.count; ++i) {
      auto spec = random_caterpillar_spec(max_n, rng);
      checks.push_back([=] {
        return compare(emit_caterpillar(spec), make_caterpillar(spec), Variant::kConnected,
                       caterpillar_connected_winner(spec), eo);
      });
    }
  } else if (family == "cograph") {
    Rng rng(o.seed);
    for (std::size_t i = 0; i < o.count; ++i) {
      auto cotree = random_cotree(static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(max_n))), rng);
      checks.push_back([=] {
        return compare(emit_cotree(cotree), make_cograph(cotree), Variant::kFree, cograph_free_winner(cotree), eo);
      });
    }
  } else if (family == "chordal-lemma") {
    if (max_n < 3) throw std::invalid_argument("chordal-lemma needs max_n >= 3");
    Rng rng(o.seed);
    for (std::size_t i = 0; i < o.count; ++i) {
      auto g = random_biconnected_chordal(static_cast<std::size_t>(rng.between(3, static_cast<std::int64_t>(max_n))), rng);
      checks.push_back([g]() -> std::optional<Mismatch> {
        for (Vertex x = 0; x < g.vertex_count(); ++x) {
          const VertexSet near = ball2(g, VertexSet(g.vertex_count(), {x}));
          for (Vertex y = x + 1; y < g.vertex_count(); ++y) {
            if (!near.contains(y)) continue;
            const VertexSet h = hull(g, VertexSet(g.vertex_count(), {x, y}));
            if (h.size() != g.vertex_count()) {
              std::ostringstream pair;
              pair << emit_graph(g) << " pair (" << x << "," << y << ")";
              return Mismatch{pair.str(), "hull size " + std::to_string(h.size()),
                              "expected " + std::to_string(g.vertex_count())};
            }
          }
        }
        return std::nullopt;
      });
    }
  } else {
    throw std::invalid_argument("unknown family '" + std::string(family) + "'");
  }
  return checks;
}

}  // namespace

const std::vector<std::string>& verify_families() {
  static const std::vector<std::string> families{"path-free", "path-connected", "cycle-free", "cycle-connected",
                                                 "ladder",    "tree",           "caterpillar", "cograph",
                                                 "star",      "clique",         "chordal-lemma"};
  return families;
}

VerifyReport verify_family(std::string_view family, const VerifyOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  if (options.max_n == 0) throw std::invalid_argument("max_n must be positive");
  const auto checks = build_checks(family, options);
  std::vector<std::optional<Mismatch>> results(checks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < std::max(1u, options.jobs); ++t) {
      workers.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < checks.size();) {
          try {
            results[i] = checks[i]();
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next.store(checks.size());
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
  VerifyReport report;
  report.family = std::string(family);
  report.instances = checks.size();
  for (auto& r : results)
    if (r) report.mismatches.push_back(std::move(*r));
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

nlohmann::ordered_json VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["family"] = family;
  j["instances"] = instances;
  j["status"] = pass() ? "PASS" : "FAIL";
  j["mismatches"] = nlohmann::ordered_json::array();
  for (const auto& m : mismatches)
    j["mismatches"].push_back({{"instance", m.instance}, {"solver", m.solver}, {"oracle", m.oracle}});
  return j;
}

std::string VerifyReport::table() const {
  std::ostringstream os;
  os << "family      " << family << "\n"
     << "instances   " << instances << "\n"
     << "mismatches  " << mismatches.size() << "\n";
  for (const auto& m : mismatches) os << "  " << m.instance << "  solver: " << m.solver << "  oracle: " << m.oracle << "\n";
  os.setf(std::ios::fixed);
  os.precision(3);
  os << "elapsed     " << elapsed_seconds << " s\n"
     << "status      " << (pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace p3
