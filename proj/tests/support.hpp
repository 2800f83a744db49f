#pragma once

// Shared fixtures for the unit tests.

#include <algorithm>
#include <random>
#include <vector>

#include "zomat/equivalence.hpp"
#include "zomat/matrix.hpp"
#include "zomat/verify.hpp"

namespace zomat::testing {

inline BitMatrix M(const char* text) { return BitMatrix::parse(text); }

inline BitMatrix random_matrix(std::mt19937_64& rng, std::size_t b) {
  std::uniform_int_distribution<std::uint64_t> pick(
      1, (std::uint64_t{1} << (b * b)) - 1);
  return matrix_from_index(b, pick(rng));
}

inline Permutation random_permutation(std::mt19937_64& rng, std::size_t b) {
  std::vector<int> images(b);
  for (std::size_t i = 0; i < b; ++i) images[i] = static_cast<int>(i + 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

// Plain triple loop over entries, independent of the library's multiply.
inline std::vector<std::vector<Natural>> naive_power(const BitMatrix& m,
                                                     unsigned n) {
  const std::size_t b = m.side();
  std::vector<std::vector<Natural>> acc(b, std::vector<Natural>(b));
  for (std::size_t i = 0; i < b; ++i) acc[i][i] = 1;
  for (unsigned step = 0; step < n; ++step) {
    std::vector<std::vector<Natural>> next(b, std::vector<Natural>(b));
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t k = 0; k < b; ++k)
        if (acc[i][k] != 0)
          for (std::size_t j = 0; j < b; ++j)
            if (m.at(k + 1, j + 1)) next[i][j] += acc[i][k];
    acc = std::move(next);
  }
  return acc;
}

inline Natural naive_norm(const BitMatrix& m, unsigned n) {
  Natural s = 0;
  for (const auto& row : naive_power(m, n))
    for (const auto& x : row) s += x;
  return s;
}

}  // namespace zomat::testing
