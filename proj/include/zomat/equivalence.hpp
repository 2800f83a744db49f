#pragma once

// Permutation similarity: M ~ N iff N = P^T M P for a permutation matrix P,
// i.e. a simultaneous relabelling of rows and columns.

#include <array>
#include <optional>
#include <vector>

#include "zomat/matrix.hpp"

namespace zomat {

/// A bijection on {1, ..., b}, stored as its 1-based image list.
class Permutation {
 public:
  /// Throws std::invalid_argument unless `images` is a bijection on 1..size.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(std::size_t size);
  /// The transposition swapping i and j (1-based).
  static Permutation transposition(std::size_t size, int i, int j);

  std::size_t size() const { return images_.size(); }
  /// sigma(i), 1-based.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// (sigma o tau)(x) = sigma(tau(x)).
Permutation compose(const Permutation& sigma, const Permutation& tau);

/// N with N_lk = M_{sigma(l) sigma(k)}. Satisfies
/// apply(apply(m, sigma), tau) == apply(m, compose(sigma, tau)).
BitMatrix apply_permutation(const BitMatrix& m, const Permutation& sigma);

inline constexpr std::size_t kDefaultCanonicalLimit = 8;

struct CanonicalForm {
  /// Row-major lexicographically least matrix in the class.
  BitMatrix matrix;
  /// apply_permutation(input, witness) == matrix.
  Permutation witness;
};

CanonicalForm canonical_form(const BitMatrix& m,
                             std::size_t limit = kDefaultCanonicalLimit);

bool are_equivalent(const BitMatrix& a, const BitMatrix& b,
                    std::size_t limit = kDefaultCanonicalLimit);

/// sigma with apply_permutation(a, sigma) == b, if one exists.
std::optional<Permutation> equivalence_witness(
    const BitMatrix& a, const BitMatrix& b,
    std::size_t limit = kDefaultCanonicalLimit);

/// Exactly one 1 in every row and every column.
bool is_permutation_matrix(const BitMatrix& m);

/// The three matrices [[1,0],[1,L_{b-1}]], [[I_2,0],[1,L_{b-2}]] and
/// [[J_2,0],[1,L_{b-2}]], in that order.
std::array<BitMatrix, 3> extremal_sup_forms(std::size_t b);

/// For an acyclic digraph, a relabelling sigma (reverse topological order)
/// making apply_permutation(m, sigma) strictly lower triangular.
std::optional<Permutation> is_strictly_lower_triangularizable(
    const BitMatrix& m);

/// All b! permutations of {1..b} in lexicographic order of image lists.
std::vector<Permutation> all_permutations(std::size_t b);

}  // namespace zomat
