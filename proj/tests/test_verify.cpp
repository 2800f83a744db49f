#include <doctest.h>

#include "support.hpp"
#include "zomat/json.hpp"

using namespace zomat;

namespace {

// P1 straight from the definition on the text form.
bool p1_by_text(const BitMatrix& m) {
  const std::size_t b = m.side();
  for (std::size_t i = 1; i <= b; ++i) {
    bool column = false, row = false;
    for (std::size_t k = 1; k <= b; ++k) {
      column = column || m.at(k, i);
      row = row || m.at(i, k);
    }
    if (column && !row) return false;
  }
  return true;
}

std::string without_elapsed(VerificationReport r) {
  r.elapsed = std::chrono::milliseconds{0};
  return to_json(r).dump();
}

// Swaps the bounded and polynomial verdicts.
GrowthClass corrupted(const BitMatrix& m) {
  const GrowthClass g = classify(m);
  if (g.growth() == Growth::bounded) {
    return {PolynomialCertificate{1, 1, InfiniteWord({}, {1}),
                                  InfiniteWord({}, {1})}};
  }
  if (g.growth() == Growth::polynomial) {
    return {BoundedCertificate{Natural(1), 1}};
  }
  return g;
}

}  // namespace

TEST_CASE("enumeration counts") {
  CHECK(count_matrices(2, Filter::all_nonzero) == 15);
  CHECK(count_matrices(3, Filter::all_nonzero) == 511);
  CHECK(collect_matrices(2, Filter::all_nonzero).size() == 15);
  for (std::size_t b = 2; b <= 4; ++b) {
    std::uint64_t direct = 0;
    const std::uint64_t end = std::uint64_t{1} << (b * b);
    for (std::uint64_t idx = 1; idx < end; ++idx) {
      std::vector<std::vector<int>> rows(b, std::vector<int>(b));
      for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = 0; j < b; ++j)
          rows[i][j] = static_cast<int>((idx >> (i * b + j)) & 1U);
      const BitMatrix m(rows);
      CHECK(m == matrix_from_index(b, idx));
      if (p1_by_text(m)) ++direct;
    }
    CHECK(count_matrices(b, Filter::p1) == direct);
  }
  CHECK_THROWS_AS(count_matrices(5, Filter::p1), std::out_of_range);
  CHECK_THROWS_AS(count_matrices(1, Filter::p1), std::out_of_range);
}

TEST_CASE("enumeration visits each matrix once in index order") {
  const auto all = collect_matrices(3, Filter::all_nonzero);
  for (std::size_t k = 0; k < all.size(); ++k)
    CHECK(all[k] == matrix_from_index(3, k + 1));
  const auto p1p2 = collect_matrices(3, Filter::p1_p2);
  for (const auto& m : p1p2) CHECK((satisfies_P1(m).holds && satisfies_P2(m)));
}

TEST_CASE("filters") {
  CHECK(parse_filter("all") == Filter::all_nonzero);
  CHECK(parse_filter("p1") == Filter::p1);
  CHECK(parse_filter("p1p2") == Filter::p1_p2);
  CHECK_THROWS_AS(parse_filter("p3"), std::invalid_argument);
  for (Filter f : {Filter::all_nonzero, Filter::p1, Filter::p1_p2})
    CHECK(parse_filter(to_string(f)) == f);
}

TEST_CASE("trichotomy sweeps at b = 2 and 3") {
  for (std::size_t b = 2; b <= 3; ++b) {
    const auto r = verify_trichotomy(b, 12);
    CHECK(r.population == count_matrices(b, Filter::p1));
    CHECK(r.passes == r.population);
    CHECK(r.ok());
  }
}

TEST_CASE("a corrupted classifier is caught") {
  const auto r = verify_trichotomy(3, 12, {1, false}, corrupted);
  CHECK_FALSE(r.ok());
  CHECK(r.passes + r.counterexamples.size() == r.population);
  CHECK(r.counterexamples.size() > 10);
  CHECK(r.counterexamples.front().detail.find("class") != std::string::npos);
}

TEST_CASE("extremal sweeps at b = 2 and 3") {
  for (std::size_t b = 2; b <= 3; ++b) {
    const auto s = verify_sup_extremal(b);
    CHECK(s.ok());
    CHECK(s.population == count_matrices(b, Filter::p1) + 1);
    CHECK(verify_census_extremal(b).ok());
    CHECK(verify_binomial_extremal(b, 12).ok());
    CHECK(verify_stabilization(b).ok());
    CHECK(verify_nilpotency_lemma(b).ok());
    CHECK(verify_p2_oracle(b).ok());
  }
}

TEST_CASE("serial and parallel sweeps agree") {
  const auto serial = verify_trichotomy(3, 12, {1, false});
  const auto parallel = verify_trichotomy(3, 12, {4, false});
  CHECK(serial.population == parallel.population);
  CHECK(serial.passes == parallel.passes);
  CHECK(without_elapsed(serial) == without_elapsed(parallel));

  const auto bad1 = verify_trichotomy(3, 12, {1, false}, corrupted);
  const auto bad7 = verify_trichotomy(3, 12, {7, false}, corrupted);
  CHECK(without_elapsed(bad1) == without_elapsed(bad7));

  CHECK(count_matrices(4, Filter::p1, {1, false}) ==
        count_matrices(4, Filter::p1, {5, false}));
}

TEST_CASE("reports are reproducible") {
  CHECK(without_elapsed(verify_identities()) ==
        without_elapsed(verify_identities()));
  CHECK(without_elapsed(verify_word_norm_bridge_random(30)) ==
        without_elapsed(verify_word_norm_bridge_random(30)));
  const Json j = to_json(verify_tb_binomial(3, 4));
  CHECK(j["claim_id"] == "tb_binomial");
  CHECK(j["population"] == "8");
  CHECK(j["passes"] == "8");
  CHECK(j["counterexamples"].empty());
  CHECK(j["parameters"]["max_b"] == "3");
  CHECK(j["elapsed_ms"].is_string());
}

TEST_CASE("binomial and identity checks") {
  const auto t = verify_tb_binomial(8, 20);
  CHECK(t.ok());
  CHECK(t.population == 7 * 20);
  CHECK(binomial(28, 21) == 1184040);
  CHECK(norm(power(make_T(8), 20)) == 1184040);

  // Spot values of the identity families.
  CHECK(binomial(3, 1) + binomial(3, 2) == binomial(4, 2));
  CHECK(binomial(4, 2) == 6);
  CHECK(Natural(2) * binomial(2, 1) + binomial(2, 2) == 5);
  CHECK(Natural(5) < binomial(4, 2));
  CHECK(4 + norm(make_L(3)) + norm(power(make_L(3), 2)) == 8);

  const auto r = verify_identities();
  CHECK(r.ok());
  CHECK(r.population > 1000);
}

TEST_CASE("word-norm bridge spot values") {
  CHECK(norm(power(make_T(2), 3)) == 5);
  CHECK(admissible_words(make_T(2), 4).size() == 5);
  CHECK(norm(power(make_J(3), 4)) == 3);
  CHECK(admissible_words(make_J(3), 5).size() == 3);
  CHECK(norm(power(make_L(3), 3)) == 0);
  CHECK(admissible_words(make_L(3), 4).empty());
  CHECK(verify_word_norm_bridge(2, 6).ok());
  CHECK(verify_word_norm_bridge_random().ok());
}

TEST_CASE("run_claim dispatch") {
  for (const auto& id : claim_ids()) {
    const auto r = run_claim(id, 2, 6);
    CHECK(r.claim_id == id);
    CHECK(r.ok());
  }
  CHECK_THROWS_AS(run_claim("nope", 2), std::invalid_argument);
}
