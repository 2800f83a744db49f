#include "zomat/verify.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "zomat/digraph.hpp"
#include "zomat/equivalence.hpp"
#include "zomat/words.hpp"

namespace zomat {

namespace {

using Row = BitMatrix::Row;
using Clock = std::chrono::steady_clock;
using Check = std::function<std::optional<std::string>(const BitMatrix&)>;

struct Failure {
  std::uint64_t index = 0;
  Counterexample example;
};

struct Tally {
  std::uint64_t population = 0;
  std::uint64_t passes = 0;
  std::vector<Failure> failures;
};

void check_sweep_size(std::size_t b, bool allow_b5) {
  if (b < 2 || b > 5) {
    throw std::out_of_range("exhaustive sweeps support 2 <= b <= 5, got " +
                            std::to_string(b));
  }
  if (b == 5 && !allow_b5) {
    throw std::out_of_range("b = 5 sweeps must be enabled explicitly");
  }
}

bool passes_filter(const BitMatrix& m, Filter filter) {
  switch (filter) {
    case Filter::all_nonzero: return true;
    case Filter::p1: return satisfies_P1(m).holds;
    case Filter::p1_p2: return satisfies_P1(m).holds && satisfies_P2(m);
  }
  return false;
}

unsigned worker_count(const SweepOptions& options) {
  if (options.workers) return options.workers;
  return std::max(1U, std::thread::hardware_concurrency());
}

void run_range(std::size_t b, Filter filter, const Check& check,
               std::uint64_t begin, std::uint64_t end, Tally& tally) {
  for (std::uint64_t index = begin; index < end; ++index) {
    const BitMatrix m = matrix_from_index(b, index);
    if (!passes_filter(m, filter)) continue;
    ++tally.population;
    std::optional<std::string> failure;
    try {
      failure = check(m);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (failure) {
      tally.failures.push_back({index, {m.to_text(), std::move(*failure)}});
    } else {
      ++tally.passes;
    }
  }
}

// Contiguous shards of the index space, merged in shard order so the result
// is independent of the number of workers.
Tally sweep(std::size_t b, Filter filter, const Check& check,
            const SweepOptions& options) {
  check_sweep_size(b, options.allow_b5);
  const std::uint64_t end = std::uint64_t{1} << (b * b);
  const std::uint64_t span = end - 1;
  const std::uint64_t workers =
      std::min<std::uint64_t>(worker_count(options), span);
  const std::uint64_t chunk = (span + workers - 1) / workers;

  std::vector<Tally> parts(workers);
  auto shard = [&](std::uint64_t w) {
    const std::uint64_t lo = 1 + w * chunk;
    const std::uint64_t hi = std::min(end, lo + chunk);
    if (lo < hi) run_range(b, filter, check, lo, hi, parts[w]);
  };
  if (workers == 1) {
    shard(0);
  } else {
    std::vector<std::thread> threads;
    for (std::uint64_t w = 0; w < workers; ++w) threads.emplace_back(shard, w);
    for (auto& t : threads) t.join();
  }

  Tally total;
  for (auto& part : parts) {
    total.population += part.population;
    total.passes += part.passes;
    for (auto& f : part.failures) total.failures.push_back(std::move(f));
  }
  return total;
}

VerificationReport make_report(
    std::string claim_id,
    std::vector<std::pair<std::string, std::string>> parameters,
    Tally tally, Clock::time_point start) {
  VerificationReport r;
  r.claim_id = std::move(claim_id);
  r.population = tally.population;
  r.passes = tally.passes;
  for (auto& f : tally.failures) r.counterexamples.push_back(std::move(f.example));
  r.parameters = std::move(parameters);
  r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      Clock::now() - start);
  return r;
}

// Records one non-matrix check (identities, global class checks).
void record(Tally& tally, bool ok, std::string matrix, std::string detail) {
  ++tally.population;
  if (ok) {
    ++tally.passes;
  } else {
    tally.failures.push_back({0, {std::move(matrix), std::move(detail)}});
  }
}

std::string str(const Natural& x) { return x.str(); }

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) s += ", ";
    s += parts[k];
  }
  return s;
}

Row cycle_mask_by_diagonals(const BitMatrix& m) {
  Row d = 0;
  NatMatrix acc(m);
  for (std::size_t k = 1; k <= m.side(); ++k) {
    if (k > 1) acc = multiply(acc, m);
    for (std::size_t i = 1; i <= m.side(); ++i) {
      if (acc.at(i, i) >= 1) d |= Row{1} << (i - 1);
    }
  }
  return d;
}

std::vector<std::pair<std::string, std::string>> size_params(
    std::size_t b, Filter filter) {
  return {{"b", std::to_string(b)}, {"filter", to_string(filter)}};
}

}  // namespace

const char* to_string(Filter f) {
  switch (f) {
    case Filter::all_nonzero: return "all";
    case Filter::p1: return "p1";
    case Filter::p1_p2: return "p1p2";
  }
  return "?";
}

Filter parse_filter(const std::string& text) {
  if (text == "all" || text == "all-nonzero") return Filter::all_nonzero;
  if (text == "p1" || text == "P1") return Filter::p1;
  if (text == "p1p2" || text == "p1-p2" || text == "P1P2") return Filter::p1_p2;
  throw std::invalid_argument("unknown filter '" + text +
                              "' (expected all, p1 or p1p2)");
}

BitMatrix matrix_from_index(std::size_t b, std::uint64_t index) {
  std::array<Row, kMaxSide> masks{};
  const Row row_bits = (Row{1} << b) - 1;
  for (std::size_t i = 0; i < b; ++i) {
    masks[i] = static_cast<Row>(index >> (i * b)) & row_bits;
  }
  return BitMatrix::from_masks(b, std::span<const Row>(masks.data(), b));
}

void enumerate_matrices(std::size_t b, Filter filter,
                        const std::function<void(const BitMatrix&)>& visit,
                        bool allow_b5) {
  check_sweep_size(b, allow_b5);
  const std::uint64_t end = std::uint64_t{1} << (b * b);
  for (std::uint64_t index = 1; index < end; ++index) {
    const BitMatrix m = matrix_from_index(b, index);
    if (passes_filter(m, filter)) visit(m);
  }
}

std::vector<BitMatrix> collect_matrices(std::size_t b, Filter filter) {
  std::vector<BitMatrix> out;
  enumerate_matrices(b, filter, [&](const BitMatrix& m) { out.push_back(m); });
  return out;
}

std::uint64_t count_matrices(std::size_t b, Filter filter,
                             const SweepOptions& options) {
  return sweep(b, filter, [](const BitMatrix&) { return std::nullopt; },
               options)
      .population;
}

VerificationReport verify_trichotomy(std::size_t b, unsigned horizon,
                                     const SweepOptions& options,
                                     const Classifier& classifier) {
  const auto start = Clock::now();
  const unsigned bounded_horizon = static_cast<unsigned>(2 * b + 4);
  const unsigned span = std::max(horizon, bounded_horizon);
  const Natural cap = pow2(static_cast<unsigned>(b - 1));
  const auto p2_bound = static_cast<unsigned>(2 * b * b);

  const Check check = [&](const BitMatrix& m) -> std::optional<std::string> {
    const GrowthClass g = classifier(m);
    const auto norms = norm_sequence(m, span);
    const bool p2 = p2_power_oracle(m, p2_bound);
    const CensusKind census = infinite_word_census(m).kind;
    std::vector<std::string> issues;

    switch (g.growth()) {
      case Growth::exponential: {
        const auto& cert = std::get<ExponentialCertificate>(g.certificate);
        if (p2) issues.push_back("classified exponential but P2 holds");
        if (census != CensusKind::positive_dimension) {
          issues.push_back(std::string("census is ") + to_string(census));
        }
        if (cert.exponent < 1 || cert.vertex < 1 ||
            static_cast<std::size_t>(cert.vertex) > b) {
          issues.push_back("malformed exponential certificate");
          break;
        }
        const NatMatrix mk = power(m, cert.exponent);
        const auto v = static_cast<std::size_t>(cert.vertex);
        if (mk.at(v, v) < 2 || mk.at(v, v) != cert.diagonal) {
          issues.push_back("certificate diagonal (M^" +
                           std::to_string(cert.exponent) + ")_" +
                           std::to_string(v) + " is " + str(mk.at(v, v)));
          break;
        }
        NatMatrix acc = mk;
        for (unsigned n = 1; n <= horizon; ++n) {
          if (n > 1) acc = multiply(acc, mk);
          if (norm(acc) < pow2(n)) {
            issues.push_back("||M^" + std::to_string(cert.exponent * n) +
                             "|| = " + str(norm(acc)) + " < 2^" +
                             std::to_string(n));
            break;
          }
        }
        break;
      }
      case Growth::polynomial: {
        const auto& cert = std::get<PolynomialCertificate>(g.certificate);
        if (!p2) issues.push_back("classified polynomial but P2 fails");
        if (census != CensusKind::countably_infinite) {
          issues.push_back(std::string("census is ") + to_string(census));
        }
        for (unsigned n = 1; n <= horizon; ++n) {
          const Natural& x = norms[n - 1];
          const Natural upper = binomial(n + static_cast<unsigned>(b), n + 1);
          if (x < n + 2 || x > upper) {
            issues.push_back("||M^" + std::to_string(n) + "|| = " + str(x) +
                             " outside [" + std::to_string(n + 2) + ", " +
                             str(upper) + "]");
            break;
          }
        }
        const Row d = cycle_vertex_mask(m);
        const bool head_ok = cert.head >= 1 &&
                             static_cast<std::size_t>(cert.head) <= b &&
                             (d >> (cert.head - 1)) & 1U;
        if (!head_ok || cert.first == cert.second ||
            cert.first.letter_at(1) != cert.head ||
            cert.second.letter_at(1) != cert.head ||
            !cert.first.is_admissible_for(m) ||
            !cert.second.is_admissible_for(m)) {
          issues.push_back("invalid polynomial certificate");
        }
        break;
      }
      case Growth::bounded: {
        const auto& cert = std::get<BoundedCertificate>(g.certificate);
        if (!p2) issues.push_back("classified bounded but P2 fails");
        if (census != CensusKind::finite) {
          issues.push_back(std::string("census is ") + to_string(census));
        }
        for (unsigned n = 1; n <= bounded_horizon; ++n) {
          if (norms[n - 1] > cap) {
            issues.push_back("||M^" + std::to_string(n) + "|| = " +
                             str(norms[n - 1]) + " > 2^" +
                             std::to_string(b - 1));
            break;
          }
        }
        if (cert.stabilized_norm > cap) {
          issues.push_back("stabilised norm " + str(cert.stabilized_norm) +
                           " exceeds 2^" + std::to_string(b - 1));
        }
        break;
      }
    }
    if (issues.empty()) return std::nullopt;
    return std::string("class ") + to_string(g.growth()) + ": " + join(issues);
  };

  auto params = size_params(b, Filter::p1);
  params.emplace_back("horizon", std::to_string(horizon));
  params.emplace_back("bounded_horizon", std::to_string(bounded_horizon));
  params.emplace_back("p2_oracle_max_k", std::to_string(p2_bound));
  return make_report("trichotomy", std::move(params),
                     sweep(b, Filter::p1, check, options), start);
}

VerificationReport verify_sup_extremal(std::size_t b,
                                       const SweepOptions& options) {
  const auto start = Clock::now();
  const Natural target = pow2(static_cast<unsigned>(b - 1));
  const unsigned direct_horizon = static_cast<unsigned>(2 * b + 4);

  std::mutex mutex;
  std::set<BitMatrix> attaining_classes;

  const Check check = [&](const BitMatrix& m) -> std::optional<std::string> {
    const bool extremal = is_sup_extremal(m);
    if (growth_of(m) != Growth::bounded) {
      if (extremal) return "extremal form outside the bounded class";
      return std::nullopt;
    }
    const Natural sup = sup_norm(m);
    const auto norms = norm_sequence(m, direct_horizon);
    const Natural direct = *std::max_element(norms.begin(), norms.end());
    std::vector<std::string> issues;
    if (direct != sup) {
      issues.push_back("sup_norm " + str(sup) + " but max over n <= " +
                       std::to_string(direct_horizon) + " is " + str(direct));
    }
    if ((sup == target) != extremal) {
      issues.push_back("sup = " + str(sup) + ", is_sup_extremal = " +
                       (extremal ? "true" : "false"));
    }
    if (sup == target) {
      const auto form = canonical_form(m).matrix;
      std::lock_guard lock(mutex);
      attaining_classes.insert(form);
    }
    if (issues.empty()) return std::nullopt;
    return join(issues);
  };

  Tally tally = sweep(b, Filter::p1, check, options);

  std::set<BitMatrix> expected;
  for (const auto& f : extremal_sup_forms(b)) {
    expected.insert(canonical_form(f).matrix);
  }
  std::vector<std::string> found;
  for (const auto& c : attaining_classes) found.push_back(c.to_text());
  record(tally, expected.size() == 3 && attaining_classes == expected, "*",
         "sup-attaining classes {" + join(found) +
             "} must be exactly the three extremal classes");

  auto params = size_params(b, Filter::p1);
  params.emplace_back("direct_horizon", std::to_string(direct_horizon));
  params.emplace_back("global_checks", "1");
  params.emplace_back("attaining_classes",
                      std::to_string(attaining_classes.size()));
  return make_report("sup_extremal", std::move(params), std::move(tally),
                     start);
}

VerificationReport verify_census_extremal(std::size_t b,
                                          const SweepOptions& options) {
  const auto start = Clock::now();
  const std::size_t target = std::size_t{1} << (b - 1);

  const Check check = [&](const BitMatrix& m) -> std::optional<std::string> {
    const Census census = infinite_word_census(m);
    const Growth growth = growth_of(m);
    const bool extremal = is_sup_extremal(m);
    std::vector<std::string> issues;

    const CensusKind expected_kind =
        growth == Growth::exponential  ? CensusKind::positive_dimension
        : growth == Growth::polynomial ? CensusKind::countably_infinite
                                       : CensusKind::finite;
    if (census.kind != expected_kind) {
      issues.push_back(std::string("census ") + to_string(census.kind) +
                       " but class " + to_string(growth));
    }
    if (census.kind == CensusKind::finite) {
      const std::size_t count = census.words.size();
      if (count > target) {
        issues.push_back("census size " + std::to_string(count) +
                         " exceeds 2^" + std::to_string(b - 1));
      }
      if ((count == target) != extremal) {
        issues.push_back("census size " + std::to_string(count) +
                         ", is_sup_extremal = " + (extremal ? "true" : "false"));
      }
      if (growth == Growth::bounded && Natural(count) != sup_norm(m)) {
        issues.push_back("census size " + std::to_string(count) +
                         " differs from stabilised norm " + str(sup_norm(m)));
      }
      for (std::size_t k = 0; k < census.words.size(); ++k) {
        if (!census.words[k].is_admissible_for(m) ||
            (k && !(census.words[k - 1] < census.words[k]))) {
          issues.push_back("census word " + census.words[k].to_string(b) +
                           " inadmissible or out of order");
          break;
        }
      }
    } else if (extremal) {
      issues.push_back("extremal form with infinite word space");
    }
    if (issues.empty()) return std::nullopt;
    return join(issues);
  };

  return make_report("census_extremal", size_params(b, Filter::p1),
                     sweep(b, Filter::p1, check, options), start);
}

VerificationReport verify_binomial_extremal(std::size_t b, unsigned horizon,
                                            const SweepOptions& options) {
  const auto start = Clock::now();
  std::vector<Natural> bounds;
  for (unsigned n = 1; n <= horizon; ++n) {
    bounds.push_back(binomial(n + static_cast<unsigned>(b), n + 1));
  }

  const Check check = [&](const BitMatrix& m) -> std::optional<std::string> {
    const auto norms = norm_sequence(m, horizon);
    const bool p2 = satisfies_P2(m);
    bool equal_throughout = true;
    std::vector<std::string> issues;
    for (unsigned n = 1; n <= horizon; ++n) {
      if (norms[n - 1] != bounds[n - 1]) equal_throughout = false;
      if (p2 && norms[n - 1] > bounds[n - 1] && issues.empty()) {
        issues.push_back("||M^" + std::to_string(n) + "|| = " +
                         str(norms[n - 1]) + " > C(" +
                         std::to_string(n + b) + "," + std::to_string(n + 1) +
                         ") = " + str(bounds[n - 1]));
      }
    }
    const bool extremal = is_binomial_extremal(m);
    if (equal_throughout != extremal) {
      issues.push_back(std::string("equality for all n <= horizon is ") +
                       (equal_throughout ? "true" : "false") +
                       ", is_binomial_extremal = " +
                       (extremal ? "true" : "false"));
    }
    if (issues.empty()) return std::nullopt;
    return join(issues);
  };

  auto params = size_params(b, Filter::p1);
  params.emplace_back("horizon", std::to_string(horizon));
  params.emplace_back("upper_bound_population", "p1p2");
  return make_report("binomial_extremal", std::move(params),
                     sweep(b, Filter::p1, check, options), start);
}

VerificationReport verify_tb_binomial(std::size_t max_b, unsigned max_n) {
  const auto start = Clock::now();
  Tally tally;
  for (std::size_t b = 2; b <= max_b; ++b) {
    const BitMatrix t = make_T(b);
    const auto norms = norm_sequence(t, max_n);
    for (unsigned n = 1; n <= max_n; ++n) {
      const Natural expected = binomial(n + static_cast<unsigned>(b), n + 1);
      record(tally, norms[n - 1] == expected, t.to_text(),
             "n=" + std::to_string(n) + ": ||T_b^n|| = " + str(norms[n - 1]) +
                 ", C(n+b,n+1) = " + str(expected));
    }
  }
  return make_report("tb_binomial",
                     {{"max_b", std::to_string(max_b)},
                      {"max_n", std::to_string(max_n)}},
                     std::move(tally), start);
}

VerificationReport verify_identities(const IdentityBounds& bounds) {
  const auto start = Clock::now();
  Tally tally;

  // C(1+b,1) + C(1+b,2) + C(2+b,3) + ... + C(n-1+b,n) = C(n+b,n)
  for (unsigned b = 1; b <= bounds.max_b; ++b) {
    for (unsigned n = 1; n <= bounds.max_n; ++n) {
      Natural sum = binomial(1 + b, 1);
      for (unsigned j = 2; j <= n; ++j) sum += binomial(j - 1 + b, j);
      const Natural rhs = binomial(n + b, n);
      record(tally, sum == rhs, "-",
             "telescoping b=" + std::to_string(b) + " n=" + std::to_string(n) +
                 ": " + str(sum) + " vs " + str(rhs));
    }
  }

  // k C(n+b-k, n) + C(n+b-k, n+1) <= C(n+b, n+1), equality iff k = 1
  for (unsigned b = 2; b <= bounds.max_b; ++b) {
    for (unsigned k = 1; k < b; ++k) {
      for (unsigned n = 1; n <= bounds.max_n; ++n) {
        const Natural lhs =
            Natural(k) * binomial(n + b - k, n) + binomial(n + b - k, n + 1);
        const Natural rhs = binomial(n + b, n + 1);
        const bool ok = lhs <= rhs && ((lhs == rhs) == (k == 1));
        record(tally, ok, "-",
               "k-inequality k=" + std::to_string(k) + " b=" +
                   std::to_string(b) + " n=" + std::to_string(n) + ": " +
                   str(lhs) + " vs " + str(rhs));
      }
    }
  }

  // b + ||L_{b-1}|| + ... + ||L_{b-1}^{b-2}|| = 2^{b-1}
  for (unsigned b = 2; b <= bounds.strict_lower_max_b; ++b) {
    Natural sum = b;
    const BitMatrix l = make_L(b - 1);
    for (unsigned i = 1; i + 2 <= b; ++i) sum += norm(power(l, i));
    record(tally, sum == pow2(b - 1), l.to_text(),
           "strict-lower sum b=" + std::to_string(b) + ": " + str(sum));
  }

  // ||[[U,0],[1,L_{b-s}]]^n|| = s 2^{b-s} for b - s <= n
  for (unsigned s = 1; s <= bounds.max_s; ++s) {
    for (const auto& sigma : all_permutations(s)) {
      std::vector<Row> masks(s, 0);
      for (unsigned i = 0; i < s; ++i) {
        masks[i] = Row{1} << (sigma(static_cast<int>(i + 1)) - 1);
      }
      const BitMatrix u = BitMatrix::from_masks(s, masks);
      for (unsigned tail = 0; tail <= bounds.max_tail; ++tail) {
        const BitMatrix block =
            block_compose(u, tail == 0 ? empty_block() : make_L(tail));
        const auto norms = norm_sequence(block, bounds.block_max_n);
        const Natural expected = Natural(s) * pow2(tail);
        for (unsigned n = std::max(tail, 1U); n <= bounds.block_max_n; ++n) {
          record(tally, norms[n - 1] == expected, block.to_text(),
                 "orthogonal block n=" + std::to_string(n) + ": " +
                     str(norms[n - 1]) + " vs " + str(expected));
        }
      }
    }
  }

  // ||VU|| = ||V|| for nonnegative V and permutation U
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(0, 99);
  for (unsigned s = 1; s <= bounds.max_s; ++s) {
    for (const auto& sigma : all_permutations(s)) {
      std::vector<Row> masks(s, 0);
      for (unsigned i = 0; i < s; ++i) {
        masks[i] = Row{1} << (sigma(static_cast<int>(i + 1)) - 1);
      }
      const BitMatrix u = BitMatrix::from_masks(s, masks);
      for (unsigned t = 0; t < bounds.right_multiply_trials; ++t) {
        std::vector<Natural> entries(s * s);
        for (auto& e : entries) e = entry(rng);
        const NatMatrix v(s, std::move(entries));
        const Natural lhs = norm(multiply(v, u));
        record(tally, lhs == norm(v), u.to_text(),
               "right multiplication: " + str(lhs) + " vs " + str(norm(v)));
      }
    }
  }

  return make_report(
      "identities",
      {{"max_b", std::to_string(bounds.max_b)},
       {"max_n", std::to_string(bounds.max_n)},
       {"strict_lower_max_b", std::to_string(bounds.strict_lower_max_b)},
       {"max_s", std::to_string(bounds.max_s)},
       {"max_tail", std::to_string(bounds.max_tail)},
       {"block_max_n", std::to_string(bounds.block_max_n)},
       {"right_multiply_trials", std::to_string(bounds.right_multiply_trials)},
       {"seed", "7"}},
      std::move(tally), start);
}

namespace {

std::optional<std::string> bridge_check(const BitMatrix& m, unsigned max_n) {
  const std::size_t b = m.side();
  NatMatrix p(m);
  for (unsigned n = 1; n <= max_n; ++n) {
    if (n > 1) p = multiply(p, m);
    const auto words = admissible_words(m, n + 1);
    std::vector<std::uint64_t> tally(b * b, 0);
    for (const auto& w : words) {
      ++tally[static_cast<std::size_t>(w.letters.front() - 1) * b +
              static_cast<std::size_t>(w.letters.back() - 1)];
    }
    if (Natural(words.size()) != norm(p)) {
      return "n=" + std::to_string(n) + ": ||M^n|| = " + str(norm(p)) +
             " but #A^{n+1} = " + std::to_string(words.size());
    }
    for (std::size_t i = 1; i <= b; ++i) {
      for (std::size_t j = 1; j <= b; ++j) {
        const Natural& entry = p.at(i, j);
        const auto between = admissible_words_between(
            m, n + 1, static_cast<int>(i), static_cast<int>(j));
        if (Natural(tally[(i - 1) * b + (j - 1)]) != entry ||
            Natural(between.size()) != entry) {
          return "n=" + std::to_string(n) + " (" + std::to_string(i) + "," +
                 std::to_string(j) + "): entry " + str(entry) +
                 ", head/tail tally " +
                 std::to_string(tally[(i - 1) * b + (j - 1)]) +
                 ", A^{n+1}(i,j) size " + std::to_string(between.size());
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

VerificationReport verify_word_norm_bridge(std::size_t b, unsigned max_n,
                                           const SweepOptions& options) {
  const auto start = Clock::now();
  auto params = size_params(b, Filter::all_nonzero);
  params.emplace_back("max_n", std::to_string(max_n));
  return make_report(
      "word_norm_bridge", std::move(params),
      sweep(b, Filter::all_nonzero,
            [max_n](const BitMatrix& m) { return bridge_check(m, max_n); },
            options),
      start);
}

VerificationReport verify_word_norm_bridge_random(std::size_t count,
                                                  std::size_t max_b,
                                                  unsigned max_n,
                                                  std::uint64_t seed) {
  const auto start = Clock::now();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> side(2, max_b);
  Tally tally;
  for (std::size_t t = 0; t < count; ++t) {
    const std::size_t b = side(rng);
    std::uniform_int_distribution<std::uint64_t> pick(
        1, (std::uint64_t{1} << (b * b)) - 1);
    const BitMatrix m = matrix_from_index(b, pick(rng));
    std::optional<std::string> failure;
    try {
      failure = bridge_check(m, max_n);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    record(tally, !failure, m.to_text(), failure.value_or(""));
  }
  return make_report("word_norm_bridge_random",
                     {{"count", std::to_string(count)},
                      {"max_b", std::to_string(max_b)},
                      {"max_n", std::to_string(max_n)},
                      {"seed", std::to_string(seed)}},
                     std::move(tally), start);
}

VerificationReport verify_nilpotency_lemma(std::size_t b,
                                           const SweepOptions& options) {
  const auto start = Clock::now();
  const Check check = [](const BitMatrix& m) -> std::optional<std::string> {
    const bool no_cycles = cycle_structure(m).d_set().empty();
    const bool nilpotent = power(m, static_cast<unsigned>(m.side())).is_zero();
    const auto sigma = is_strictly_lower_triangularizable(m);
    bool triangular = sigma.has_value();
    if (sigma) {
      const BitMatrix n = apply_permutation(m, *sigma);
      for (std::size_t i = 1; i <= n.side(); ++i) {
        for (std::size_t j = i; j <= n.side(); ++j) {
          if (n.at(i, j)) {
            return "witness permutation yields " + n.to_text() +
                   ", not strictly lower triangular";
          }
        }
      }
    }
    if (no_cycles == nilpotent && nilpotent == triangular) return std::nullopt;
    return std::string("D_M empty: ") + (no_cycles ? "true" : "false") +
           ", M^b = 0: " + (nilpotent ? "true" : "false") +
           ", triangularisable: " + (triangular ? "true" : "false");
  };
  return make_report("nilpotency", size_params(b, Filter::all_nonzero),
                     sweep(b, Filter::all_nonzero, check, options), start);
}

VerificationReport verify_p2_oracle(std::size_t b,
                                    const SweepOptions& options) {
  const auto start = Clock::now();
  const auto max_k = static_cast<unsigned>(2 * b * b);
  const Check check = [max_k](const BitMatrix& m) -> std::optional<std::string> {
    const bool structural = satisfies_P2(m);
    const bool oracle = p2_power_oracle(m, max_k);
    if (structural != oracle) {
      return std::string("structural P2 ") + (structural ? "true" : "false") +
             ", power oracle " + (oracle ? "true" : "false");
    }
    const Row d = to_mask(cycle_structure(m).d_set());
    const Row by_powers = cycle_mask_by_diagonals(m);
    if (d != by_powers) {
      return "D_M structural " + std::to_string(d) + " vs diagonal oracle " +
             std::to_string(by_powers);
    }
    return std::nullopt;
  };
  auto params = size_params(b, Filter::all_nonzero);
  params.emplace_back("max_k", std::to_string(max_k));
  return make_report("p2_oracle", std::move(params),
                     sweep(b, Filter::all_nonzero, check, options), start);
}

VerificationReport verify_stabilization(std::size_t b,
                                        const SweepOptions& options) {
  const auto start = Clock::now();
  constexpr unsigned kSearch = 12;
  const auto extra = static_cast<unsigned>(b + 4);
  const Check check = [&](const BitMatrix& m) -> std::optional<std::string> {
    const auto norms = norm_sequence(m, kSearch + 1 + extra);
    for (unsigned n = 1; n <= kSearch; ++n) {
      if (norms[n] != norms[n - 1]) continue;
      for (unsigned k = n + 1; k <= n + extra; ++k) {
        if (norms[k - 1] != norms[n - 1]) {
          return "||M^" + std::to_string(n) + "|| = ||M^" +
                 std::to_string(n + 1) + "|| = " + str(norms[n - 1]) +
                 " but ||M^" + std::to_string(k) + "|| = " + str(norms[k - 1]);
        }
      }
      break;
    }
    return std::nullopt;
  };
  auto params = size_params(b, Filter::p1);
  params.emplace_back("search_horizon", std::to_string(kSearch));
  params.emplace_back("constancy_span", "b+4");
  return make_report("stabilization", std::move(params),
                     sweep(b, Filter::p1, check, options), start);
}

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids{
      "trichotomy",       "sup_extremal",     "census_extremal",
      "binomial_extremal", "tb_binomial",     "identities",
      "word_norm_bridge", "nilpotency",       "p2_oracle",
      "stabilization"};
  return ids;
}

VerificationReport run_claim(const std::string& claim_id, std::size_t b,
                             unsigned horizon, const SweepOptions& options) {
  if (claim_id == "trichotomy") return verify_trichotomy(b, horizon, options);
  if (claim_id == "sup_extremal") return verify_sup_extremal(b, options);
  if (claim_id == "census_extremal") return verify_census_extremal(b, options);
  if (claim_id == "binomial_extremal") {
    return verify_binomial_extremal(b, horizon, options);
  }
  if (claim_id == "tb_binomial") return verify_tb_binomial();
  if (claim_id == "identities") return verify_identities();
  if (claim_id == "word_norm_bridge") {
    return verify_word_norm_bridge(b, std::min(horizon, 6U), options);
  }
  if (claim_id == "nilpotency") return verify_nilpotency_lemma(b, options);
  if (claim_id == "p2_oracle") return verify_p2_oracle(b, options);
  if (claim_id == "stabilization") return verify_stabilization(b, options);
  throw std::invalid_argument("unknown claim '" + claim_id + "'");
}

}  // namespace zomat
