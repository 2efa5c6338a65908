#pragma once

#include <numeric>
#include <optional>
#include <vector>

#include "rootgate/errors.hpp"

namespace rootgate {

// Exact rational number on long long parts; always normalized with den > 0.
// All arithmetic in this library happens on tiny values (root coordinates and
// their eliminations), so no overflow protection beyond 64 bits is needed.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n) {}  // NOLINT: implicit by design
  Rat(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw Error("Rat: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  bool zero() const { return num == 0; }
  bool integer() const { return den == 1; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num * b.num, a.den * b.den); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.zero()) throw Error("Rat: division by zero");
    return Rat(a.num * b.den, a.den * b.num);
  }
  friend bool operator==(const Rat& a, const Rat& b) = default;
};

// Solves sum_j x_j * columns[j] = target exactly over the rationals
// (Gauss-Jordan elimination). Returns nullopt when target lies outside the
// column span; free variables of a rank-deficient column set are fixed at 0.
inline std::optional<std::vector<Rat>> solve_in_span(
    const std::vector<std::vector<int>>& columns, const std::vector<int>& target) {
  const std::size_t k = columns.size();
  const std::size_t d = target.size();
  std::vector<std::vector<Rat>> m(d, std::vector<Rat>(k + 1));
  for (std::size_t j = 0; j < k; ++j) {
    if (columns[j].size() != d) throw Error("solve_in_span: dimension mismatch");
    for (std::size_t i = 0; i < d; ++i) m[i][j] = Rat(columns[j][i]);
  }
  for (std::size_t i = 0; i < d; ++i) m[i][k] = Rat(target[i]);

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < k && row < d; ++col) {
    std::size_t p = row;
    while (p < d && m[p][col].zero()) ++p;
    if (p == d) continue;
    std::swap(m[row], m[p]);
    for (std::size_t r = 0; r < d; ++r) {
      if (r == row || m[r][col].zero()) continue;
      Rat f = m[r][col] / m[row][col];
      for (std::size_t c = col; c <= k; ++c) m[r][c] = m[r][c] - f * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < d; ++r)
    if (!m[r][k].zero()) return std::nullopt;  // inconsistent: target outside span

  std::vector<Rat> x(k, Rat(0));
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = m[r][k] / m[r][pivot_col[r]];
  return x;
}

// Convenience wrapper: is target in the rational span of the given columns?
inline bool in_span(const std::vector<std::vector<int>>& columns, const std::vector<int>& target) {
  return solve_in_span(columns, target).has_value();
}

}  // namespace rootgate
