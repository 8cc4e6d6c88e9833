#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

namespace schubert {

// Exact determinant over any commutative ring, by Laplace expansion with
// memoization on column masks (fine for the small matrices that occur here).
// The empty determinant is `one`.
template <class T>
T determinant(const std::vector<std::vector<T>>& m, const T& one) {
  std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: not square");
  if (n == 0) return one;
  if (n > 20) throw std::invalid_argument("determinant: matrix too large");
  std::vector<std::optional<T>> memo(std::size_t{1} << n);
  // minor(mask): determinant of rows (n - popcount(mask))..n-1 on the
  // columns in mask.
  auto minor = [&](auto&& self, unsigned mask) -> const T& {
    if (!memo[mask]) {
      std::size_t row = n - static_cast<std::size_t>(__builtin_popcount(mask));
      if (mask == 0) {
        memo[mask] = one;
      } else {
        std::optional<T> acc;
        int pos = 0;
        for (std::size_t col = 0; col < n; ++col) {
          if (!(mask & (1u << col))) continue;
          T part = m[row][col] * self(self, mask & ~(1u << col));
          if (pos % 2 == 1) part = -part;
          acc = acc ? std::optional<T>(*acc + part) : std::optional<T>(part);
          ++pos;
        }
        memo[mask] = std::move(*acc);
      }
    }
    return *memo[mask];
  };
  return minor(minor, static_cast<unsigned>((std::size_t{1} << n) - 1));
}

}
