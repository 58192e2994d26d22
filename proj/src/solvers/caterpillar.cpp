#include "p3/solvers/caterpillar.hpp"

#include <algorithm>
#include <stdexcept>

namespace p3 {
namespace {

Grundy parity(std::size_t pendant_edges) { return static_cast<Grundy>(pendant_edges & 1u); }

}  // namespace

CaterpillarSolver::CaterpillarSolver(CaterpillarSpec spec) : spec_(std::move(spec)) {
  if (auto err = spec_.validate(); !err.empty()) throw std::invalid_argument(err);
  const std::size_t n = spec_.backbone;
  foot_start_.resize(n + 1);
  foot_start_[0] = static_cast<Vertex>(n);
  for (std::size_t i = 0; i < n; ++i) foot_start_[i + 1] = foot_start_[i] + static_cast<Vertex>(spec_.feet[i]);
  // right_[i]: from labeled i the next move labels i+1, a foot of i+1 (absorbing
  // i+1), or i+2 (absorbing i+1). left_ mirrors it.
  const auto& h = spec_.feet;
  right_.assign(n, 0);
  for (std::size_t i = n - 1; i-- > 0;) {
    std::vector<Grundy> options{right_[i + 1] ^ parity(h[i + 1])};
    if (h[i + 1] > 0) options.push_back(right_[i + 1] ^ parity(h[i + 1] - 1));
    if (i + 2 < n) options.push_back(right_[i + 2] ^ parity(h[i + 1]) ^ parity(h[i + 2]));
    right_[i] = mex(options);
  }
  left_.assign(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<Grundy> options{left_[i - 1] ^ parity(h[i - 1])};
    if (h[i - 1] > 0) options.push_back(left_[i - 1] ^ parity(h[i - 1] - 1));
    if (i >= 2) options.push_back(left_[i - 2] ^ parity(h[i - 1]) ^ parity(h[i - 2]));
    left_[i] = mex(options);
  }
}

std::optional<std::size_t> CaterpillarSolver::foot_owner(Vertex x) const {
  if (x < spec_.backbone) return std::nullopt;
  if (x >= foot_start_.back()) throw std::out_of_range("vertex outside the caterpillar");
  auto it = std::upper_bound(foot_start_.begin(), foot_start_.end(), x);
  return static_cast<std::size_t>(it - foot_start_.begin()) - 1;
}

Grundy CaterpillarSolver::right(std::size_t i) { return right_.at(i); }

Grundy CaterpillarSolver::left(std::size_t i) { return left_.at(i); }

Grundy CaterpillarSolver::interval_value(std::size_t a, std::size_t b, std::size_t labeled_feet) {
  std::size_t feet = 0;
  for (std::size_t i = a; i <= b; ++i) feet += spec_.feet[i];
  if (labeled_feet > feet) throw std::invalid_argument("more labeled feet than the interval carries");
  return left(a) ^ right(b) ^ parity(feet - labeled_feet);
}

Grundy CaterpillarSolver::after_first_move(Vertex x) {
  const std::size_t n = spec_.backbone;
  const auto& h = spec_.feet;
  std::vector<Grundy> openings;
  if (auto owner = foot_owner(x)) {
    const std::size_t i = *owner;
    // Foot then its backbone vertex.
    openings.push_back(interval_value(i, i, 1));
    // Two feet of the same backbone vertex.
    if (h[i] >= 2) openings.push_back(interval_value(i, i, 2));
    // Foot at i, then the backbone neighbor i-1 or i+1.
    if (i > 0) openings.push_back(interval_value(i - 1, i, 1));
    if (i + 1 < n) openings.push_back(interval_value(i, i + 1, 1));
  } else {
    const std::size_t i = x;
    // Backbone vertex, then one of its feet.
    if (h[i] >= 1) openings.push_back(interval_value(i, i, 1));
    // Adjacent backbone vertices.
    if (i > 0) openings.push_back(interval_value(i - 1, i, 0));
    if (i + 1 < n) openings.push_back(interval_value(i, i + 1, 0));
    // Backbone vertex, then a foot of a backbone neighbor.
    if (i > 0 && h[i - 1] >= 1) openings.push_back(interval_value(i - 1, i, 1));
    if (i + 1 < n && h[i + 1] >= 1) openings.push_back(interval_value(i, i + 1, 1));
    // Backbone vertices at distance two; the one between them is absorbed.
    if (i >= 2) openings.push_back(interval_value(i - 2, i, 0));
    if (i + 2 < n) openings.push_back(interval_value(i, i + 2, 0));
  }
  return mex(openings);
}

Grundy CaterpillarSolver::start_value() {
  std::vector<Grundy> options;
  for (Vertex x = 0; x < spec_.vertex_count(); ++x) options.push_back(after_first_move(x));
  return mex(options);
}

Verdict CaterpillarSolver::verdict() {
  Verdict v;
  std::vector<Grundy> options;
  for (Vertex x = 0; x < spec_.vertex_count(); ++x) {
    options.push_back(after_first_move(x));
    if (options.back() == 0 && !v.witness) v.witness = x;
  }
  v.grundy = mex(options);
  v.winner = *v.grundy != 0 ? Winner::kFirst : Winner::kSecond;
  if (v.winner == Winner::kSecond) v.witness.reset();
  return v;
}

Verdict caterpillar_connected_winner(const CaterpillarSpec& spec) { return CaterpillarSolver(spec).verdict(); }

}  // namespace p3
