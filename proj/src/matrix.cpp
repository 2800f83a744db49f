#include "zomat/matrix.hpp"

#include <bit>
#include <stdexcept>

namespace zomat {

namespace {

void check_side(std::size_t side) {
  if (side > kMaxSide) {
    throw std::out_of_range("matrix side " + std::to_string(side) +
                            " exceeds the supported maximum of " +
                            std::to_string(kMaxSide));
  }
}

void check_member(const BitMatrix& m) {
  if (m.side() < 2) throw ParseError("matrix side must be at least 2");
  if (m.is_zero()) throw ParseError("the zero matrix is not admitted");
}

BitMatrix::Row low_bits(std::size_t k) {
  return k >= 32 ? ~BitMatrix::Row{0} : (BitMatrix::Row{1} << k) - 1;
}

}  // namespace

BitMatrix::BitMatrix(const std::vector<std::vector<int>>& rows) {
  check_side(rows.size());
  side_ = rows.size();
  for (std::size_t i = 0; i < side_; ++i) {
    if (rows[i].size() != side_) throw ParseError("matrix must be square");
    for (std::size_t j = 0; j < side_; ++j) {
      const int v = rows[i][j];
      if (v != 0 && v != 1) throw ParseError("entries must be 0 or 1");
      if (v) rows_[i] |= Row{1} << j;
    }
  }
  check_member(*this);
}

BitMatrix BitMatrix::from_masks(std::size_t side, std::span<const Row> masks) {
  check_side(side);
  if (masks.size() != side) {
    throw std::invalid_argument("expected one mask per row");
  }
  BitMatrix m;
  m.side_ = side;
  for (std::size_t i = 0; i < side; ++i) {
    if (masks[i] & ~low_bits(side)) {
      throw std::invalid_argument("row mask has bits outside the matrix");
    }
    m.rows_[i] = masks[i];
  }
  return m;
}

BitMatrix BitMatrix::parse(std::string_view text) {
  std::vector<std::string_view> rows;
  std::size_t start = 0;
  for (std::size_t pos = 0; pos <= text.size(); ++pos) {
    if (pos == text.size() || text[pos] == ';' || text[pos] == '\n') {
      std::string_view row = text.substr(start, pos - start);
      if (!row.empty() && row.back() == '\r') row.remove_suffix(1);
      rows.push_back(row);
      start = pos + 1;
    }
  }
  // Tolerate a trailing newline at the end of a file.
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  if (rows.empty()) throw ParseError("empty matrix text");

  const std::size_t side = rows.size();
  if (side > kMaxSide) {
    throw ParseError("matrix side exceeds " + std::to_string(kMaxSide));
  }
  std::vector<Row> masks(side, 0);
  for (std::size_t i = 0; i < side; ++i) {
    if (rows[i].size() != side) {
      throw ParseError("row " + std::to_string(i + 1) + " has length " +
                       std::to_string(rows[i].size()) + ", expected " +
                       std::to_string(side) + " (matrix must be square)");
    }
    for (std::size_t j = 0; j < side; ++j) {
      const char c = rows[i][j];
      if (c == '1') {
        masks[i] |= Row{1} << j;
      } else if (c != '0') {
        throw ParseError("invalid character '" + std::string(1, c) +
                         "' in row " + std::to_string(i + 1));
      }
    }
  }
  BitMatrix m = from_masks(side, masks);
  check_member(m);
  return m;
}

bool BitMatrix::at(std::size_t i, std::size_t j) const {
  if (i < 1 || i > side_ || j < 1 || j > side_) {
    throw std::out_of_range("matrix index out of range");
  }
  return (rows_[i - 1] >> (j - 1)) & 1U;
}

BitMatrix::Row BitMatrix::col_mask(std::size_t j0) const {
  Row c = 0;
  for (std::size_t i = 0; i < side_; ++i) {
    c |= ((rows_[i] >> j0) & 1U) << i;
  }
  return c;
}

std::size_t BitMatrix::count_ones() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < side_; ++i) n += std::popcount(rows_[i]);
  return n;
}

std::string BitMatrix::to_text(char separator) const {
  std::string s;
  s.reserve(side_ * (side_ + 1));
  for (std::size_t i = 0; i < side_; ++i) {
    if (i) s.push_back(separator);
    for (std::size_t j = 0; j < side_; ++j) {
      s.push_back(((rows_[i] >> j) & 1U) ? '1' : '0');
    }
  }
  return s;
}

BitMatrix BitMatrix::transpose() const {
  std::array<Row, kMaxSide> cols{};
  for (std::size_t j = 0; j < side_; ++j) cols[j] = col_mask(j);
  return from_masks(side_, std::span<const Row>(cols.data(), side_));
}

NatMatrix::NatMatrix(std::size_t side) : side_(side), entries_(side * side) {}

NatMatrix::NatMatrix(const BitMatrix& m)
    : side_(m.side()), entries_(m.side() * m.side()) {
  for (std::size_t i = 0; i < side_; ++i) {
    const auto row = m.row_mask(i);
    for (std::size_t j = 0; j < side_; ++j) {
      if ((row >> j) & 1U) entries_[i * side_ + j] = 1;
    }
  }
}

NatMatrix::NatMatrix(std::size_t side, std::vector<Natural> entries)
    : side_(side), entries_(std::move(entries)) {
  if (entries_.size() != side_ * side_) {
    throw std::invalid_argument("entry count does not match side");
  }
  for (const auto& e : entries_) {
    if (e < 0) throw std::invalid_argument("entries must be nonnegative");
  }
}

NatMatrix NatMatrix::identity(std::size_t side) {
  NatMatrix m(side);
  for (std::size_t i = 0; i < side; ++i) m.entries_[i * side + i] = 1;
  return m;
}

const Natural& NatMatrix::at(std::size_t i, std::size_t j) const {
  if (i < 1 || i > side_ || j < 1 || j > side_) {
    throw std::out_of_range("matrix index out of range");
  }
  return entries_[(i - 1) * side_ + (j - 1)];
}

bool NatMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

Natural norm(const NatMatrix& m) {
  Natural s = 0;
  for (const auto& e : m.entries()) s += e;
  return s;
}

Natural norm(const BitMatrix& m) { return Natural(m.count_ones()); }

NatMatrix multiply(const NatMatrix& a, const NatMatrix& b) {
  if (a.side() != b.side()) {
    throw std::invalid_argument("matrix sides differ: " +
                                std::to_string(a.side()) + " vs " +
                                std::to_string(b.side()));
  }
  const std::size_t n = a.side();
  const auto ea = a.entries();
  const auto eb = b.entries();
  std::vector<Natural> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Natural& aik = ea[i * n + k];
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Natural& bkj = eb[k * n + j];
        if (!bkj.is_zero()) out[i * n + j] += aik * bkj;
      }
    }
  }
  return NatMatrix(n, std::move(out));
}

NatMatrix multiply(const NatMatrix& a, const BitMatrix& m) {
  if (a.side() != m.side()) {
    throw std::invalid_argument("matrix sides differ: " +
                                std::to_string(a.side()) + " vs " +
                                std::to_string(m.side()));
  }
  const std::size_t n = a.side();
  const auto ea = a.entries();
  std::vector<Natural> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Natural& aik = ea[i * n + k];
      if (aik.is_zero()) continue;
      for (auto row = m.row_mask(k); row; row &= row - 1) {
        out[i * n + std::countr_zero(row)] += aik;
      }
    }
  }
  return NatMatrix(n, std::move(out));
}

NatMatrix power_iterated(const BitMatrix& m, unsigned n) {
  if (n == 0) throw std::invalid_argument("power exponent must be >= 1");
  NatMatrix acc(m);
  for (unsigned k = 1; k < n; ++k) acc = multiply(acc, m);
  return acc;
}

NatMatrix power(const NatMatrix& m, unsigned n) {
  if (n == 0) throw std::invalid_argument("power exponent must be >= 1");
  std::optional<NatMatrix> acc;
  NatMatrix base = m;
  for (;;) {
    if (n & 1U) acc = acc ? multiply(*acc, base) : base;
    n >>= 1;
    if (n == 0) break;
    base = multiply(base, base);
  }
  return *acc;
}

NatMatrix power_by_squaring(const BitMatrix& m, unsigned n) {
  if (n == 0) throw std::invalid_argument("power exponent must be >= 1");
  return power(NatMatrix(m), n);
}

NatMatrix power(const BitMatrix& m, unsigned n) {
  return n <= 8 ? power_iterated(m, n) : power_by_squaring(m, n);
}

std::vector<Natural> norm_sequence(const BitMatrix& m, unsigned horizon) {
  if (horizon == 0) throw std::invalid_argument("horizon must be >= 1");
  std::vector<Natural> out;
  out.reserve(horizon);
  NatMatrix acc(m);
  out.push_back(norm(acc));
  for (unsigned n = 2; n <= horizon; ++n) {
    acc = multiply(acc, m);
    out.push_back(norm(acc));
  }
  return out;
}

namespace {

template <typename Pred>
BitMatrix pattern(std::size_t k, Pred pred) {
  check_side(k);
  std::vector<BitMatrix::Row> masks(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (pred(i, j)) masks[i] |= BitMatrix::Row{1} << j;
    }
  }
  return BitMatrix::from_masks(k, masks);
}

void require_positive(std::size_t k, const char* name) {
  if (k < 1) throw std::out_of_range(std::string(name) + " requires k >= 1");
}

}  // namespace

BitMatrix make_L(std::size_t k) {
  require_positive(k, "make_L");
  return pattern(k, [](auto i, auto j) { return i > j; });
}

BitMatrix make_T(std::size_t k) {
  require_positive(k, "make_T");
  return pattern(k, [](auto i, auto j) { return i >= j; });
}

BitMatrix make_I(std::size_t k) {
  require_positive(k, "make_I");
  return pattern(k, [](auto i, auto j) { return i == j; });
}

BitMatrix make_J(std::size_t k) {
  if (k < 2) throw std::out_of_range("make_J requires k >= 2");
  return pattern(k, [k](auto i, auto j) { return j == (i + 1) % k; });
}

BitMatrix make_full(std::size_t k) {
  require_positive(k, "make_full");
  return pattern(k, [](auto, auto) { return true; });
}

BitMatrix empty_block() { return BitMatrix::from_masks(0, {}); }

BitMatrix block_compose(const BitMatrix& upper, const BitMatrix& lower) {
  const std::size_t s = upper.side();
  const std::size_t k = lower.side();
  if (s < 1) throw std::invalid_argument("upper block must be nonempty");
  check_side(s + k);
  std::vector<BitMatrix::Row> masks(s + k, 0);
  for (std::size_t i = 0; i < s; ++i) masks[i] = upper.row_mask(i);
  const BitMatrix::Row ones = low_bits(s);
  for (std::size_t i = 0; i < k; ++i) {
    masks[s + i] = ones | (lower.row_mask(i) << s);
  }
  return BitMatrix::from_masks(s + k, masks);
}

P1Result satisfies_P1(const BitMatrix& m) {
  BitMatrix::Row entered = 0;
  for (std::size_t i = 0; i < m.side(); ++i) entered |= m.row_mask(i);
  for (std::size_t i = 0; i < m.side(); ++i) {
    if (((entered >> i) & 1U) && m.row_mask(i) == 0) {
      return {false, static_cast<int>(i + 1)};
    }
  }
  return {true, std::nullopt};
}

Natural binomial(unsigned k, unsigned m) {
  if (m > k) return 0;
  if (m > k - m) m = k - m;
  Natural c = 1;
  // Each prefix product is itself a binomial coefficient, so the division is
  // exact at every step.
  for (unsigned t = 1; t <= m; ++t) {
    c *= k - m + t;
    c /= t;
  }
  return c;
}

Natural pow2(unsigned e) {
  Natural p = 1;
  p <<= e;
  return p;
}

}  // namespace zomat
