#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "p3/grundy.hpp"

namespace p3 {

struct Mismatch {
  std::string instance;
  std::string solver;
  std::string oracle;
};

struct VerifyReport {
  std::string family;
  std::size_t instances = 0;
  std::vector<Mismatch> mismatches;
  double elapsed_seconds = 0;

  bool pass() const { return mismatches.empty(); }
  // Elapsed time is left out so identical runs emit identical JSON.
  nlohmann::ordered_json to_json() const;
  std::string table() const;
};

struct VerifyOptions {
  std::size_t max_n = 10;
  std::uint64_t seed = 1;
  // Sample size for the randomized families (tree adds it to the exhaustive sweep).
  std::size_t count = 200;
  unsigned jobs = 1;
  EngineOptions engine;
};

const std::vector<std::string>& verify_families();

// Runs one family's solver against the exhaustive engine. Instances are
// evaluated on `jobs` threads; mismatches are reported in instance order.
// Throws std::invalid_argument for an unknown family or unusable max_n.
VerifyReport verify_family(std::string_view family, const VerifyOptions& options);

}  // namespace p3
