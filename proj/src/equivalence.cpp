#include "zomat/equivalence.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace zomat {

using Row = BitMatrix::Row;

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || static_cast<std::size_t>(v) > images_.size() ||
        seen[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("image list is not a bijection on 1.." +
                                  std::to_string(images_.size()));
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(std::size_t size) {
  std::vector<int> images(size);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(std::size_t size, int i, int j) {
  auto images = identity(size).images_;
  if (i < 1 || j < 1 || static_cast<std::size_t>(i) > size ||
      static_cast<std::size_t>(j) > size) {
    throw std::out_of_range("transposition index out of range");
  }
  std::swap(images[static_cast<std::size_t>(i - 1)],
            images[static_cast<std::size_t>(j - 1)]);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i + 1);
  }
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size()) {
    throw std::invalid_argument("permutation sizes differ");
  }
  std::vector<int> images(tau.size());
  for (std::size_t x = 1; x <= tau.size(); ++x) {
    images[x - 1] = sigma(tau(static_cast<int>(x)));
  }
  return Permutation(std::move(images));
}

BitMatrix apply_permutation(const BitMatrix& m, const Permutation& sigma) {
  const std::size_t b = m.side();
  if (sigma.size() != b) {
    throw std::invalid_argument("permutation size " +
                                std::to_string(sigma.size()) +
                                " does not match matrix side " +
                                std::to_string(b));
  }
  std::vector<Row> masks(b, 0);
  for (std::size_t l = 0; l < b; ++l) {
    const Row src = m.row_mask(static_cast<std::size_t>(sigma(int(l + 1)) - 1));
    for (std::size_t k = 0; k < b; ++k) {
      if ((src >> (sigma(int(k + 1)) - 1)) & 1U) masks[l] |= Row{1} << k;
    }
  }
  return BitMatrix::from_masks(b, masks);
}

namespace {

// Ordered branch-and-bound over partial vertex orderings. Rows of the
// relabelled matrix are encoded with column 1 as the most significant bit so
// that integer comparison of the row sequence is row-major lexicographic
// comparison of the matrix.
class Canonicalizer {
 public:
  explicit Canonicalizer(const BitMatrix& m) : m_(m), b_(m.side()) {}

  CanonicalForm run() {
    std::array<int, kMaxSide> order{};
    std::array<Row, kMaxSide> prefix{};
    search(0, 0, order, prefix);

    std::vector<int> images(b_);
    for (std::size_t l = 0; l < b_; ++l) images[l] = best_order_[l] + 1;
    Permutation witness(std::move(images));
    return {apply_permutation(m_, witness), std::move(witness)};
  }

 private:
  bool edge(int from, int to) const {
    return (m_.row_mask(static_cast<std::size_t>(from)) >> to) & 1U;
  }

  // Lower bound for row l once p positions are fixed: the known prefix,
  // then every remaining one pushed to the least significant end.
  Row lower_bound(std::size_t p, Row prefix, Row used, int vertex) const {
    const std::size_t rest = b_ - p;
    const int ones = std::popcount(m_.row_mask(static_cast<std::size_t>(vertex)) & ~used);
    return (rest >= 32 ? 0 : prefix << rest) | ((Row{1} << ones) - 1);
  }

  // True when every completion of the partial ordering is no better than
  // the incumbent.
  bool pruned(std::size_t p, const std::array<int, kMaxSide>& order,
              const std::array<Row, kMaxSide>& prefix, Row used) const {
    if (!have_best_) return false;
    for (std::size_t l = 0; l < p; ++l) {
      const Row lb = lower_bound(p, prefix[l], used, order[l]);
      if (lb > best_rows_[l]) return true;
      if (lb < best_rows_[l]) return false;
    }
    return p == b_;  // equal complete matrix; keep the first one found
  }

  void search(std::size_t p, Row used, std::array<int, kMaxSide>& order,
              std::array<Row, kMaxSide>& prefix) {
    if (p == b_) {
      if (!have_best_ || std::lexicographical_compare(
                             prefix.begin(), prefix.begin() + b_,
                             best_rows_.begin(), best_rows_.begin() + b_)) {
        best_rows_ = prefix;
        best_order_ = order;
        have_best_ = true;
      }
      return;
    }
    for (std::size_t v = 0; v < b_; ++v) {
      if (used & (Row{1} << v)) continue;
      const int vi = static_cast<int>(v);
      std::array<Row, kMaxSide> next = prefix;
      Row own = 0;
      for (std::size_t l = 0; l < p; ++l) {
        next[l] = (next[l] << 1) | Row(edge(order[l], vi));
        own = (own << 1) | Row(edge(vi, order[l]));
      }
      next[p] = (own << 1) | Row(edge(vi, vi));
      order[p] = vi;
      const Row now_used = used | (Row{1} << v);
      if (pruned(p + 1, order, next, now_used)) continue;
      search(p + 1, now_used, order, next);
    }
  }

  const BitMatrix& m_;
  std::size_t b_;
  bool have_best_ = false;
  std::array<Row, kMaxSide> best_rows_{};
  std::array<int, kMaxSide> best_order_{};
};

void check_limit(const BitMatrix& m, std::size_t limit) {
  if (m.side() > limit) {
    throw std::out_of_range("canonical form limited to side <= " +
                            std::to_string(limit) + ", got " +
                            std::to_string(m.side()));
  }
}

}  // namespace

CanonicalForm canonical_form(const BitMatrix& m, std::size_t limit) {
  check_limit(m, limit);
  return Canonicalizer(m).run();
}

bool are_equivalent(const BitMatrix& a, const BitMatrix& b, std::size_t limit) {
  return equivalence_witness(a, b, limit).has_value();
}

std::optional<Permutation> equivalence_witness(const BitMatrix& a,
                                               const BitMatrix& b,
                                               std::size_t limit) {
  if (a.side() != b.side()) {
    throw std::invalid_argument("matrix sides differ");
  }
  if (a.count_ones() != b.count_ones()) {
    check_limit(a, limit);
    return std::nullopt;
  }
  const auto ca = canonical_form(a, limit);
  const auto cb = canonical_form(b, limit);
  if (ca.matrix != cb.matrix) return std::nullopt;
  // apply(a, wa) == apply(b, wb)  =>  apply(a, wa o wb^-1) == b
  return compose(ca.witness, cb.witness.inverse());
}

bool is_permutation_matrix(const BitMatrix& m) {
  Row cols = 0;
  for (std::size_t i = 0; i < m.side(); ++i) {
    const Row r = m.row_mask(i);
    if (std::popcount(r) != 1 || (cols & r)) return false;
    cols |= r;
  }
  return m.side() > 0;
}

std::array<BitMatrix, 3> extremal_sup_forms(std::size_t b) {
  if (b < 2) throw std::out_of_range("extremal forms require b >= 2");
  const BitMatrix lower2 = b == 2 ? empty_block() : make_L(b - 2);
  return {block_compose(make_I(1), make_L(b - 1)),
          block_compose(make_I(2), lower2),
          block_compose(make_J(2), lower2)};
}

std::optional<Permutation> is_strictly_lower_triangularizable(
    const BitMatrix& m) {
  const std::size_t b = m.side();
  std::vector<int> images;
  images.reserve(b);
  Row placed = 0;
  // Repeatedly place the smallest vertex whose out-edges all point at
  // already placed vertices; edges then only go to earlier positions.
  while (images.size() < b) {
    bool progressed = false;
    for (std::size_t v = 0; v < b; ++v) {
      if (placed & (Row{1} << v)) continue;
      if ((m.row_mask(v) & ~placed) == 0) {
        placed |= Row{1} << v;
        images.push_back(static_cast<int>(v + 1));
        progressed = true;
        break;
      }
    }
    if (!progressed) return std::nullopt;
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(std::size_t b) {
  std::vector<int> images(b);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace zomat
