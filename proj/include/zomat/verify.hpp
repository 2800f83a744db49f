#pragma once

// Exhaustive small-b re-verification of the growth classification, the
// extremal characterisations and the identities behind them. Every sweep
// produces a report whose counterexample list must be empty.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zomat/classify.hpp"
#include "zomat/matrix.hpp"

namespace zomat {

enum class Filter { all_nonzero, p1, p1_p2 };

const char* to_string(Filter f);
/// "all", "p1" or "p1p2" (also accepts the to_string spellings).
Filter parse_filter(const std::string& text);

struct SweepOptions {
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
  /// b = 5 (about 3.4e7 matrices) must be requested explicitly.
  bool allow_b5 = false;
};

/// Bit i*b + j of the index is entry (i+1, j+1). Index 0 is the zero
/// matrix and is never produced by the enumerator.
BitMatrix matrix_from_index(std::size_t b, std::uint64_t index);

/// Every nonzero b x b matrix passing the filter, each once, in index order.
void enumerate_matrices(std::size_t b, Filter filter,
                        const std::function<void(const BitMatrix&)>& visit,
                        bool allow_b5 = false);

std::vector<BitMatrix> collect_matrices(std::size_t b, Filter filter);

std::uint64_t count_matrices(std::size_t b, Filter filter,
                             const SweepOptions& options = {});

struct Counterexample {
  std::string matrix;
  std::string detail;

  bool operator==(const Counterexample&) const = default;
};

struct VerificationReport {
  std::string claim_id;
  std::uint64_t population = 0;
  std::uint64_t passes = 0;
  std::vector<Counterexample> counterexamples;
  /// Horizons and sizes used, in insertion order.
  std::vector<std::pair<std::string, std::string>> parameters;
  std::chrono::milliseconds elapsed{0};

  bool ok() const { return counterexamples.empty(); }
};

using Classifier = std::function<GrowthClass(const BitMatrix&)>;

/// Growth-class bound sets for every P1 matrix, plus agreement of the class
/// with the P2 power oracle and with the infinite-word census.
VerificationReport verify_trichotomy(std::size_t b, unsigned horizon = 12,
                                     const SweepOptions& options = {},
                                     const Classifier& classifier = classify);

/// sup ||M^n|| = 2^{b-1} iff M is equivalent to an extremal form, and the
/// attaining matrices form exactly three classes.
VerificationReport verify_sup_extremal(std::size_t b,
                                       const SweepOptions& options = {});

/// #A^N_M = 2^{b-1} iff M is equivalent to an extremal form; the census
/// agrees with the stabilised norm and stays within 2^{b-1}.
VerificationReport verify_census_extremal(std::size_t b,
                                          const SweepOptions& options = {});

/// ||M^n|| <= C(n+b, n+1) under P1 and P2, with equality for all
/// n <= horizon exactly on the class of T_b.
VerificationReport verify_binomial_extremal(std::size_t b,
                                            unsigned horizon = 12,
                                            const SweepOptions& options = {});

/// ||T_b^n|| = C(n+b, n+1) for 2 <= b <= max_b, 1 <= n <= max_n.
VerificationReport verify_tb_binomial(std::size_t max_b = 8,
                                      unsigned max_n = 20);

struct IdentityBounds {
  /// Telescoping sum and the k-inequality: 1 <= k < b <= max_b, n <= max_n.
  unsigned max_b = 10;
  unsigned max_n = 10;
  /// b + sum_i ||L_{b-1}^i|| = 2^{b-1} for 2 <= b <= strict_lower_max_b.
  unsigned strict_lower_max_b = 12;
  /// ||[[U,0],[1,L_{b-s}]]^n|| = s 2^{b-s}: permutation U with s <= max_s,
  /// b - s <= max_tail, b - s <= n <= block_max_n.
  unsigned max_s = 4;
  unsigned max_tail = 4;
  unsigned block_max_n = 16;
  /// Random nonnegative V per permutation U for ||VU|| = ||V||.
  unsigned right_multiply_trials = 8;
};

VerificationReport verify_identities(const IdentityBounds& bounds = {});

/// (M^n)_ij = #A^{n+1}_M(i,j) and ||M^n|| = #A^{n+1}_M for every nonzero
/// matrix at size b and 1 <= n <= max_n.
VerificationReport verify_word_norm_bridge(std::size_t b, unsigned max_n = 6,
                                           const SweepOptions& options = {});

/// The same bridge on `count` random nonzero matrices with 2 <= b <= max_b.
VerificationReport verify_word_norm_bridge_random(std::size_t count = 200,
                                                  std::size_t max_b = 5,
                                                  unsigned max_n = 6,
                                                  std::uint64_t seed = 20240601);

/// D_M empty <=> M^b = 0 <=> equivalent to a strictly lower triangular
/// matrix, with the triangularising permutation checked by application.
VerificationReport verify_nilpotency_lemma(std::size_t b,
                                           const SweepOptions& options = {});

/// Structural P2 agrees with (M^k)_ii <= 1 for k <= 2b^2, and D_M agrees
/// with the diagonal-of-powers definition for k <= b.
VerificationReport verify_p2_oracle(std::size_t b,
                                    const SweepOptions& options = {});

/// Under P1, ||M^{n+1}|| = ||M^n|| at the first such n <= 12 implies
/// constancy through n + b + 4.
VerificationReport verify_stabilization(std::size_t b,
                                        const SweepOptions& options = {});

/// Claim identifiers accepted by run_claim.
const std::vector<std::string>& claim_ids();

/// Dispatch by identifier. `b` is the matrix size for sweeps (ignored by
/// tb_binomial and identities); `horizon` is the norm horizon where one
/// applies.
VerificationReport run_claim(const std::string& claim_id, std::size_t b,
                             unsigned horizon = 12,
                             const SweepOptions& options = {});

}  // namespace zomat
