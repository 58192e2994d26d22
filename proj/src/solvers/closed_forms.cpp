#include "p3/solvers/closed_forms.hpp"

#include <stdexcept>

namespace p3 {

Verdict ladder_connected_winner(std::size_t n) {
  if (n == 0) throw std::invalid_argument("ladder needs at least one rung");
  if (n % 6 == 0) return Verdict{Winner::kFirst, std::nullopt, Vertex{0}};
  return Verdict{Winner::kSecond, std::nullopt, std::nullopt};
}

Verdict star_free_winner(std::size_t leaves) {
  if (leaves % 2 == 0) return Verdict{Winner::kFirst, std::nullopt, Vertex{0}};
  return Verdict{Winner::kSecond, std::nullopt, std::nullopt};
}

Verdict clique_free_winner(std::size_t n) {
  if (n == 0) throw std::invalid_argument("clique needs at least one vertex");
  if (n == 1) return Verdict{Winner::kFirst, Grundy{1}, Vertex{0}};
  return Verdict{Winner::kSecond, Grundy{0}, std::nullopt};
}

}  // namespace p3
