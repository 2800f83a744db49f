#include <doctest.h>

#include <map>

#include "support.hpp"
#include "zomat/digraph.hpp"
#include "zomat/words.hpp"

using namespace zomat;
using zomat::testing::M;
using zomat::testing::random_matrix;
using zomat::testing::random_permutation;

namespace {

// Minimum over every relabelling, compared as row-major text.
BitMatrix brute_canonical(const BitMatrix& m) {
  std::optional<BitMatrix> best;
  std::string best_key;
  for (const auto& sigma : all_permutations(m.side())) {
    const BitMatrix n = apply_permutation(m, sigma);
    const std::string key = n.to_text();
    if (!best || key < best_key) {
      best = n;
      best_key = key;
    }
  }
  return *best;
}

}  // namespace

TEST_CASE("permutation basics") {
  const Permutation p({2, 3, 1});
  CHECK(p(1) == 2);
  CHECK(compose(p, p.inverse()) == Permutation::identity(3));
  CHECK(Permutation::transposition(3, 1, 3).images() ==
        std::vector<int>{3, 2, 1});
  CHECK_THROWS(Permutation({1, 1, 2}));
  CHECK_THROWS(Permutation({0, 1}));
  CHECK(all_permutations(4).size() == 24);
}

TEST_CASE("apply_permutation examples") {
  CHECK(apply_permutation(make_J(2), Permutation::transposition(2, 1, 2)) ==
        make_J(2));
  const BitMatrix m = M("110;011;101");
  CHECK(apply_permutation(m, Permutation::identity(3)) == m);
  CHECK(apply_permutation(make_L(3), Permutation({3, 2, 1})) ==
        M("011;001;000"));
}

TEST_CASE("canonical_form examples") {
  const auto i2 = canonical_form(make_I(2));
  const auto j2 = canonical_form(make_J(2));
  CHECK(i2.matrix == make_I(2));
  CHECK(j2.matrix == make_J(2));
  CHECK(i2.matrix != j2.matrix);
  CHECK(canonical_form(M("01;10")).matrix == M("01;10"));
  CHECK_THROWS_AS(canonical_form(make_I(9)), std::out_of_range);
  CHECK(canonical_form(make_I(9), 9).matrix == make_I(9));
}

TEST_CASE("canonical form witness reproduces the form") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 300; ++t) {
    const BitMatrix m = random_matrix(rng, 2 + t % 6);
    const auto c = canonical_form(m);
    CHECK(apply_permutation(m, c.witness) == c.matrix);
  }
}

TEST_CASE("canonical form equals the brute-force minimum") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 400; ++t) {
    const BitMatrix m = random_matrix(rng, 2 + t % 5);
    CHECK(canonical_form(m).matrix == brute_canonical(m));
  }
  enumerate_matrices(3, Filter::all_nonzero, [](const BitMatrix& m) {
    CHECK(canonical_form(m).matrix == brute_canonical(m));
  });
}

TEST_CASE("canonicalisation is a class function, b <= 6") {
  std::mt19937_64 rng(29);
  for (std::size_t b = 2; b <= 6; ++b) {
    for (int t = 0; t < 100; ++t) {
      const BitMatrix m = random_matrix(rng, b);
      const BitMatrix n = apply_permutation(m, random_permutation(rng, b));
      CHECK(canonical_form(n).matrix == canonical_form(m).matrix);
    }
  }
}

TEST_CASE("are_equivalent examples") {
  CHECK_FALSE(are_equivalent(make_I(2), make_J(2)));
  CHECK(are_equivalent(M("10;10"), M("01;01")));
  const auto w = equivalence_witness(M("10;10"), M("01;01"));
  REQUIRE(w);
  CHECK(*w == Permutation::transposition(2, 1, 2));
  CHECK(apply_permutation(M("10;10"), *w) == M("01;01"));
  CHECK_THROWS_AS(are_equivalent(make_I(2), make_I(3)), std::invalid_argument);

  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    const std::size_t b = 2 + t % 6;
    const BitMatrix m = random_matrix(rng, b);
    const Permutation sigma = random_permutation(rng, b);
    const BitMatrix n = apply_permutation(m, sigma);
    CHECK(are_equivalent(m, n));
    const auto wit = equivalence_witness(m, n);
    REQUIRE(wit);
    CHECK(apply_permutation(m, *wit) == n);
  }
}

TEST_CASE("equivalent matrices share norm sequences, b <= 6") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 300; ++t) {
    const std::size_t b = 2 + t % 5;
    const BitMatrix m = random_matrix(rng, b);
    const BitMatrix n = apply_permutation(m, random_permutation(rng, b));
    CHECK(norm_sequence(m, 10) == norm_sequence(n, 10));
  }
}

TEST_CASE("equivalent matrices have equally many cycle vertices, b <= 4") {
  for (std::size_t b = 2; b <= 4; ++b) {
    std::map<BitMatrix, std::size_t> size_of_class;
    std::size_t mismatches = 0;
    enumerate_matrices(b, Filter::all_nonzero, [&](const BitMatrix& m) {
      const std::size_t d = cycle_structure(m).d_set().size();
      const auto [it, fresh] =
          size_of_class.emplace(canonical_form(m).matrix, d);
      if (!fresh && it->second != d) ++mismatches;
    });
    CHECK(mismatches == 0);
  }
}

TEST_CASE("word sets are conjugated by the relabelling") {
  std::mt19937_64 rng(41);
  auto check = [](const BitMatrix& m, const Permutation& sigma) {
    // N_{lk} = M_{sigma(l) sigma(k)}, so sigma maps A_N onto A_M letterwise.
    const BitMatrix n = apply_permutation(m, sigma);
    bool ok = true;
    for (unsigned len = 1; len <= 6; ++len) {
      std::vector<Word> image;
      for (auto w : admissible_words(n, len)) {
        for (auto& x : w.letters) x = sigma(x);
        image.push_back(std::move(w));
      }
      std::sort(image.begin(), image.end());
      ok = ok && image == admissible_words(m, len);
    }
    return ok;
  };
  std::size_t failures = 0;
  for (std::size_t b = 2; b <= 3; ++b) {
    enumerate_matrices(b, Filter::all_nonzero, [&](const BitMatrix& m) {
      if (!check(m, random_permutation(rng, b))) ++failures;
    });
  }
  for (int t = 0; t < 500; ++t) {
    if (!check(random_matrix(rng, 4), random_permutation(rng, 4))) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("is_permutation_matrix examples") {
  CHECK(is_permutation_matrix(make_I(3)));
  CHECK(is_permutation_matrix(make_J(4)));
  CHECK_FALSE(is_permutation_matrix(make_T(2)));
}

TEST_CASE("extremal_sup_forms") {
  const auto two = extremal_sup_forms(2);
  CHECK(two[0] == M("10;10"));
  CHECK(two[1] == make_I(2));
  CHECK(two[2] == make_J(2));
  CHECK(extremal_sup_forms(3)[0] == M("100;100;110"));
  for (std::size_t b = 2; b <= 8; ++b) {
    const auto f = extremal_sup_forms(b);
    for (const auto& x : f) CHECK(x.side() == b);
    CHECK_FALSE(are_equivalent(f[0], f[1]));
    CHECK_FALSE(are_equivalent(f[0], f[2]));
    CHECK_FALSE(are_equivalent(f[1], f[2]));
  }
}

TEST_CASE("strict lower triangularisation") {
  const auto l4 = is_strictly_lower_triangularizable(make_L(4));
  REQUIRE(l4);
  CHECK(apply_permutation(make_L(4), *l4) == make_L(4));

  const auto e = is_strictly_lower_triangularizable(M("01;00"));
  REQUIRE(e);
  CHECK(*e == Permutation::transposition(2, 1, 2));
  CHECK(apply_permutation(M("01;00"), *e) == M("00;10"));

  CHECK_FALSE(is_strictly_lower_triangularizable(make_J(2)));
}
