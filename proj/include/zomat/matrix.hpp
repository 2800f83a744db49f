#pragma once

// Exact {0,1}-matrix and nonnegative integer matrix arithmetic.
//
// Indices at every public boundary are 1-based, matching the alphabet
// A = {1, ..., b}. Row masks are the one internal exception and are
// documented as 0-based where they appear.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zomat/errors.hpp"

namespace zomat {

using Natural = boost::multiprecision::cpp_int;

inline constexpr std::size_t kMaxSide = 32;

/// A square {0,1}-matrix of side at most kMaxSide.
///
/// Members of the matrix family proper (side >= 2, at least one 1) are built
/// by parse() and the row-vector constructor, which both reject anything
/// else. from_masks() only checks the shape; it exists for the 0x0 and 1x1
/// blocks used when assembling block matrices, and for the enumerator.
class BitMatrix {
 public:
  using Row = std::uint32_t;

  BitMatrix() = default;

  /// Checked constructor: square, side >= 2, entries in {0,1}, nonzero.
  explicit BitMatrix(const std::vector<std::vector<int>>& rows);

  /// Shape-checked only. Bit j of masks[i] is entry (i+1, j+1).
  static BitMatrix from_masks(std::size_t side, std::span<const Row> masks);

  /// Parses "110;010;001" (or newline separated rows). Checked like the
  /// row-vector constructor; throws ParseError.
  static BitMatrix parse(std::string_view text);

  std::size_t side() const { return side_; }

  /// Entry M_ij, 1-based.
  bool at(std::size_t i, std::size_t j) const;

  /// 0-based row/column bitmasks.
  Row row_mask(std::size_t i0) const { return rows_[i0]; }
  Row col_mask(std::size_t j0) const;

  std::size_t count_ones() const;
  bool is_zero() const { return count_ones() == 0; }

  /// True for members of the family: side >= 2 and nonzero.
  bool is_member() const { return side_ >= 2 && !is_zero(); }

  /// Rows as '0'/'1' strings joined by `separator`.
  std::string to_text(char separator = ';') const;

  BitMatrix transpose() const;

  auto operator<=>(const BitMatrix&) const = default;

 private:
  std::size_t side_ = 0;
  std::array<Row, kMaxSide> rows_{};
};

/// Square matrix of arbitrary-precision nonnegative integers.
class NatMatrix {
 public:
  NatMatrix() = default;

  /// Zero matrix.
  explicit NatMatrix(std::size_t side);

  /// Embeds a {0,1}-matrix.
  explicit NatMatrix(const BitMatrix& m);

  /// Row-major entries; size must be side*side and entries nonnegative.
  NatMatrix(std::size_t side, std::vector<Natural> entries);

  static NatMatrix identity(std::size_t side);

  std::size_t side() const { return side_; }

  /// Entry (i, j), 1-based.
  const Natural& at(std::size_t i, std::size_t j) const;

  std::span<const Natural> entries() const { return entries_; }

  bool is_zero() const;

  bool operator==(const NatMatrix&) const = default;

 private:
  std::size_t side_ = 0;
  std::vector<Natural> entries_;
};

/// Sum of all entries.
Natural norm(const NatMatrix& m);
Natural norm(const BitMatrix& m);

NatMatrix multiply(const NatMatrix& a, const NatMatrix& b);

/// a * m without multiplications; the hot path for iterated powers.
NatMatrix multiply(const NatMatrix& a, const BitMatrix& m);

/// M^n for n >= 1. Iterated products up to n = 8, repeated squaring above.
NatMatrix power(const BitMatrix& m, unsigned n);
NatMatrix power(const NatMatrix& m, unsigned n);

// Both strategies are exposed so they can be tested against each other.
NatMatrix power_iterated(const BitMatrix& m, unsigned n);
NatMatrix power_by_squaring(const BitMatrix& m, unsigned n);

/// [||M^1||, ..., ||M^horizon||].
std::vector<Natural> norm_sequence(const BitMatrix& m, unsigned horizon);

/// L_k: ones strictly below the diagonal. make_L(1) is the 1x1 zero block.
BitMatrix make_L(std::size_t k);
/// T_k: ones on and below the diagonal.
BitMatrix make_T(std::size_t k);
BitMatrix make_I(std::size_t k);
/// J_k (k >= 2): the single k-cycle 1 -> 2 -> ... -> k -> 1.
BitMatrix make_J(std::size_t k);
/// All-ones matrix.
BitMatrix make_full(std::size_t k);
/// The 0x0 block; block_compose(u, empty_block()) == u.
BitMatrix empty_block();

/// [[U, 0], [1, lower]] of side s + k.
BitMatrix block_compose(const BitMatrix& upper, const BitMatrix& lower);

struct P1Result {
  bool holds = false;
  /// Smallest index i with a nonzero column and a zero row.
  std::optional<int> witness;

  explicit operator bool() const { return holds; }
};

/// Every index whose column is nonzero has a nonzero row.
P1Result satisfies_P1(const BitMatrix& m);

/// Binomial coefficient C(k, m); zero when m > k.
Natural binomial(unsigned k, unsigned m);

/// 2^e as a Natural.
Natural pow2(unsigned e);

}  // namespace zomat
