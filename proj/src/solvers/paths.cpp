#include "p3/solvers/paths.hpp"

#include <stdexcept>

namespace p3 {

void FreePathTable::extend(std::size_t max_length) {
  for (std::size_t k = rows_.size(); k <= max_length; ++k) {
    std::array<Grundy, 4> row{};
    rows_.push_back(row);
    for (const auto& b : kAllBorders) rows_[k][b.index()] = compute(k, b);
  }
}

Grundy FreePathTable::value(std::size_t k, PathBorder border) const {
  if (k > max_length()) throw std::out_of_range("free path table was not built to this length");
  return rows_[k][border.index()];
}

Grundy FreePathTable::compute(std::size_t k, PathBorder border) const {
  if (k == 1 && border.left && border.right) return 0;
  std::vector<Grundy> options;
  for (std::size_t j = 1; j <= k; ++j) {
    // Left remainder: positions 1..j-1, absorbed entirely when it is a single
    // vertex between the left border and j.
    Grundy left = 0;
    if (j > 1 && !(border.left && j == 2)) left = rows_[j - 1][PathBorder{border.left, true}.index()];
    Grundy right = 0;
    if (j < k && !(border.right && j + 1 == k)) right = rows_[k - j][PathBorder{true, border.right}.index()];
    options.push_back(left ^ right);
  }
  return mex(options);
}

FreePathTable free_path_grundy_table(std::size_t n_max) {
  if (n_max == 0) throw std::invalid_argument("free path table needs n_max >= 1");
  return FreePathTable(n_max);
}

Verdict free_cycle_winner(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  if (n % 2 == 0 || n == 3) return Verdict{Winner::kSecond, 0, std::nullopt};
  const FreePathTable table(n - 1);
  const Grundy after_first = table.value(n - 1, PathBorder{true, true});
  if (after_first == 0) return Verdict{Winner::kFirst, 1, Vertex{0}};
  return Verdict{Winner::kSecond, 0, std::nullopt};
}

Grundy connected_path_f(std::size_t n) {
  if (n == 0) throw std::invalid_argument("path needs at least one vertex");
  std::vector<Grundy> f{0, 0, 1};
  for (std::size_t k = 3; k <= n; ++k) {
    const std::array<Grundy, 2> children{f[k - 1], f[k - 2]};
    f.push_back(mex(children));
  }
  return f[n];
}

Grundy connected_path_f_closed_form(std::size_t n) {
  if (n == 0) throw std::invalid_argument("path needs at least one vertex");
  switch (n % 3) {
    case 1: return 0;
    case 2: return 1;
    default: return 2;
  }
}

Grundy connected_path_grundy(std::size_t n) {
  if (n == 0) throw std::invalid_argument("path needs at least one vertex");
  std::vector<Grundy> f(n + 1, 0);
  for (std::size_t k = 1; k <= n; ++k) {
    if (k <= 2) {
      f[k] = static_cast<Grundy>(k - 1);
    } else {
      const std::array<Grundy, 2> children{f[k - 1], f[k - 2]};
      f[k] = mex(children);
    }
  }
  // An endpoint opening leaves f(n); opening at interior vertex i splits the
  // path into pieces of i+1 and n-i vertices sharing the labeled vertex.
  std::vector<Grundy> options{f[n]};
  for (std::size_t i = 1; i + 1 < n; ++i) options.push_back(f[n - i] ^ f[i + 1]);
  return mex(options);
}

Grundy connected_path_grundy_closed_form(std::size_t n) {
  if (n == 0) throw std::invalid_argument("path needs at least one vertex");
  if (n == 2) return 0;
  return n % 3 == 2 ? 2 : 1;
}

Grundy cycle_arc_value(std::size_t n, std::size_t k) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  if (k == 0 || k > n) throw std::invalid_argument("arc length must be in [1, n]");
  if (k == n) return 0;
  if (k == n - 1) throw std::invalid_argument("an arc missing exactly one vertex is not a playground");
  switch ((n - k) % 3) {
    case 1: return 0;
    case 2: return 1;
    default: return 2;
  }
}

Grundy connected_cycle_grundy(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  const std::array<Grundy, 1> children{cycle_arc_value(n, 1)};
  return mex(children);
}

}  // namespace p3
