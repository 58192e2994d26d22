#pragma once

#include <cstddef>

#include "p3/grundy.hpp"

namespace p3 {

// Connected game on the ladder P_2 x P_n: first player wins iff n ≡ 0 (mod 6).
// Formula only; the Grundy value is not reported. The witness is the corner 0.
Verdict ladder_connected_winner(std::size_t n);

// Free game on K_{1,t}: first player wins iff t is even, by taking the center.
Verdict star_free_winner(std::size_t leaves);

// Free game on K_n: any two labels close the clique, so the second player wins for n >= 2.
Verdict clique_free_winner(std::size_t n);

}  // namespace p3
