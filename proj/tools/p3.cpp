// Command-line front end: solve, verify, play, gen.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "p3/generators.hpp"
#include "p3/graph_io.hpp"
#include "p3/grundy.hpp"
#include "p3/harness/cache.hpp"
#include "p3/harness/play.hpp"
#include "p3/harness/verdict_json.hpp"
#include "p3/harness/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

p3::Variant parse_variant(const std::string& s) {
  return s == "connected" ? p3::Variant::kConnected : p3::Variant::kFree;
}

// --budget wins over P3_BUDGET, which wins over the built-in default.
std::size_t resolve_budget(std::optional<std::size_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("P3_BUDGET")) {
    try {
      std::size_t pos = 0;
      const auto v = std::stoull(env, &pos);
      if (pos != std::string(env).size() || v == 0) throw std::invalid_argument(env);
      return v;
    } catch (const std::exception&) {
      throw UsageError(std::string("P3_BUDGET must be a positive integer, got '") + env + "'");
    }
  }
  return p3::kDefaultBudget;
}

std::vector<std::size_t> parse_csv(const std::string& csv) {
  std::vector<std::size_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &pos);
    } catch (const std::exception&) {
      throw UsageError("--feet entries must be nonnegative integers, got '" + item + "'");
    }
    if (pos != item.size() || item.front() == '-') throw UsageError("--feet entries must be nonnegative integers");
    out.push_back(v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"P3-game solver suite"};
  app.require_subcommand(1);

  std::string graph_file;
  std::string variant = "free";
  std::string mode = "winner";
  std::optional<std::size_t> budget;
  std::string cache_dir;
  unsigned threads = 1;
  auto* solve = app.add_subcommand("solve", "Decide the game on a graph file");
  solve->add_option("--graph", graph_file, "Graph JSON file")->required();
  solve->add_option("--variant", variant)->check(CLI::IsMember({"free", "connected"}));
  solve->add_option("--mode", mode)->check(CLI::IsMember({"winner", "grundy"}));
  solve->add_option("--budget", budget, "Maximum memoized positions");
  solve->add_option("--cache", cache_dir, "Directory of the verdict cache");
  solve->add_option("--threads", threads, "Worker threads for the root children")->check(CLI::Range(1u, 256u));

  std::string family;
  std::size_t max_n = 10;
  std::uint64_t seed = 1;
  std::size_t count = 200;
  unsigned jobs = 1;
  bool json_out = false;
  auto* verify = app.add_subcommand("verify", "Check a class solver against the exhaustive engine");
  verify->add_option("--family", family)->required();
  verify->add_option("--max-n", max_n)->required();
  verify->add_option("--seed", seed);
  verify->add_option("--count", count, "Instances for the randomized families");
  verify->add_option("--jobs", jobs)->check(CLI::Range(1u, 256u));
  verify->add_option("--budget", budget);
  verify->add_flag("--json", json_out, "Print the report as JSON on stdout");

  std::string human = "first";
  auto* play = app.add_subcommand("play", "Play against the engine");
  play->add_option("--graph", graph_file)->required();
  play->add_option("--variant", variant)->check(CLI::IsMember({"free", "connected"}));
  play->add_option("--human", human)->check(CLI::IsMember({"first", "second"}));
  play->add_option("--budget", budget);

  std::string gen_family;
  std::optional<std::size_t> gen_n;
  std::optional<std::string> feet;
  std::string cotree_file;
  std::string output;
  auto* gen = app.add_subcommand("gen", "Write a generated graph as JSON");
  gen->add_option("--family", gen_family, "path|cycle|star|clique|ladder|caterpillar|cograph|tree|chordal")->required();
  gen->add_option("--n", gen_n);
  gen->add_option("--feet", feet, "Caterpillar foot counts, comma separated");
  gen->add_option("--cotree", cotree_file, "Cotree JSON file");
  gen->add_option("--seed", seed);
  gen->add_option("-o,--output", output)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) {
      const p3::Graph g = p3::parse_graph(read_file(graph_file));
      if (g.vertex_count() == 0) throw UsageError("graph has no vertices");
      p3::EngineOptions options;
      options.budget = resolve_budget(budget);
      options.threads = threads;
      const p3::Variant v = parse_variant(variant);
      p3::Verdict verdict;
      nlohmann::ordered_json moves = nlohmann::ordered_json::array();
      if (mode == "grundy") {
        p3::Engine engine(g, v, options);
        verdict = engine.decide();
        for (auto [x, value] : engine.child_values(g.empty_set()))
          moves.push_back({{"vertex", x}, {"grundy", value}});
        if (!cache_dir.empty()) p3::ResultCache(cache_dir).store(p3::graph_hash(g), v, verdict);
      } else if (!cache_dir.empty()) {
        p3::ResultCache cache(cache_dir);
        p3::CachedDecideStats stats;
        verdict = p3::cached_decide(cache, g, v, options, stats);
      } else {
        verdict = p3::decide(g, v, options);
      }
      auto out = p3::verdict_to_json(verdict);
      if (mode == "grundy") out["moves"] = moves;
      std::cout << out.dump() << "\n";
      return kExitOk;
    }
    if (verify->parsed()) {
      p3::VerifyOptions options;
      options.max_n = max_n;
      options.seed = seed;
      options.count = count;
      options.jobs = jobs;
      options.engine.budget = resolve_budget(budget);
      const auto& known = p3::verify_families();
      if (std::find(known.begin(), known.end(), family) == known.end()) throw UsageError("unknown family '" + family + "'");
      const auto report = p3::verify_family(family, options);
      std::cerr << report.table();
      if (json_out) std::cout << report.to_json().dump() << "\n";
      return report.pass() ? kExitOk : kExitMismatch;
    }
    if (play->parsed()) {
      const p3::Graph g = p3::parse_graph(read_file(graph_file));
      p3::PlayOptions options;
      options.variant = parse_variant(variant);
      options.human_first = human == "first";
      options.engine.budget = resolve_budget(budget);
      return p3::play_session(g, options, std::cin, std::cout);
    }
    if (gen->parsed()) {
      p3::Rng rng(seed);
      auto need_n = [&]() -> std::size_t {
        if (!gen_n) throw UsageError("--n is required for family " + gen_family);
        return *gen_n;
      };
      p3::Graph g;
      if (gen_family == "path") {
        g = p3::make_path(need_n());
      } else if (gen_family == "cycle") {
        g = p3::make_cycle(need_n());
      } else if (gen_family == "star") {
        g = p3::make_star(need_n());
      } else if (gen_family == "clique") {
        g = p3::make_clique(need_n());
      } else if (gen_family == "ladder") {
        g = p3::make_ladder(need_n());
      } else if (gen_family == "tree") {
        g = p3::random_tree(need_n(), rng);
      } else if (gen_family == "chordal") {
        g = p3::random_biconnected_chordal(need_n(), rng);
      } else if (gen_family == "caterpillar") {
        p3::CaterpillarSpec spec;
        if (feet) {
          spec.feet = parse_csv(*feet);
          spec.backbone = gen_n.value_or(spec.feet.size());
        } else {
          spec = p3::random_caterpillar_spec(need_n(), rng);
        }
        g = p3::make_caterpillar(spec);
      } else if (gen_family == "cograph") {
        g = cotree_file.empty() ? p3::make_cograph(p3::random_cotree(need_n(), rng))
                                : p3::make_cograph(p3::parse_cotree(read_file(cotree_file)));
      } else {
        throw UsageError("unknown generator family '" + gen_family + "'");
      }
      std::ofstream out(output, std::ios::binary);
      out << p3::emit_graph(g) << "\n";
      if (!out) throw UsageError("cannot write " + output);
      return kExitOk;
    }
  } catch (const p3::ResourceLimitError& e) {
    std::cerr << "p3: resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const p3::GraphError& e) {
    std::cerr << "p3: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "p3: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "p3: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "p3: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
