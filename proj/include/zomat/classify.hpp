#pragma once

// Growth classification of ||M^n|| for matrices satisfying P1, extremal
// detection, spectral radius and the dimension of A^N_M.

#include <optional>
#include <variant>
#include <vector>

#include "zomat/equivalence.hpp"
#include "zomat/matrix.hpp"
#include "zomat/words.hpp"

namespace zomat {

using Integer = boost::multiprecision::cpp_int;

enum class Growth { exponential, polynomial, bounded };

/// "exponential", "polynomial" or "bounded".
const char* to_string(Growth g);

/// (M^k)_ii >= 2, hence ||M^{kn}|| >= 2^n.
struct ExponentialCertificate {
  int vertex = 0;
  unsigned exponent = 0;
  Natural diagonal;
};

/// Two distinct infinite words with the same head i in D_M. They first
/// differ right after `branch_vertex`, a vertex reachable from i with
/// out-degree >= 2.
struct PolynomialCertificate {
  int head = 0;
  int branch_vertex = 0;
  InfiniteWord first;
  InfiniteWord second;
};

struct BoundedCertificate {
  Natural stabilized_norm;
  std::size_t census_size = 0;
};

struct GrowthClass {
  std::variant<ExponentialCertificate, PolynomialCertificate,
               BoundedCertificate>
      certificate;

  Growth growth() const { return static_cast<Growth>(certificate.index()); }
};

/// The trichotomy, decided from digraph structure alone:
/// exponential iff P2 fails; otherwise bounded iff every vertex reachable
/// from a cycle vertex has out-degree exactly 1; otherwise polynomial.
/// Throws PreconditionError (with witness) unless m satisfies P1.
GrowthClass classify(const BitMatrix& m);

/// The structural decision only, without building certificates.
Growth growth_of(const BitMatrix& m);

/// sup_n ||M^n|| for the bounded class: norms are computed until two
/// consecutive values coincide, after which the sequence is constant.
Natural sup_norm(const BitMatrix& m);

/// m ~ one of extremal_sup_forms(b).
bool is_sup_extremal(const BitMatrix& m,
                     std::size_t limit = kDefaultCanonicalLimit);

/// m ~ T_b.
bool is_binomial_extremal(const BitMatrix& m,
                          std::size_t limit = kDefaultCanonicalLimit);

/// det(xI - M) as integer coefficients c_0, ..., c_b (c_b = 1), via the
/// Faddeev-LeVerrier recurrence in exact arithmetic.
std::vector<Integer> characteristic_polynomial(const BitMatrix& m);

enum class RadiusMethod { exact_char_poly, norm_ratio };

const char* to_string(RadiusMethod method);

struct SpectralRadiusResult {
  double value = 0.0;
  RadiusMethod method = RadiusMethod::exact_char_poly;
  /// |rho - value| <= error_bound; zero when rho is an integer, which is
  /// then detected and returned exactly.
  double error_bound = 0.0;
};

/// Largest real root of the characteristic polynomial, isolated with a
/// Sturm sequence of its square-free part and bisected in exact rational
/// arithmetic to within `tolerance`.
SpectralRadiusResult spectral_radius(const BitMatrix& m,
                                     double tolerance = 1e-12);

/// (||M^{2n}|| / ||M^n||)^{1/n}. Heuristic; error_bound is the change from
/// the estimate at n/2.
SpectralRadiusResult norm_ratio_estimate(const BitMatrix& m, unsigned n);

struct DimensionResult {
  double value = 0.0;
  double error_bound = 0.0;
  SpectralRadiusResult radius;
  /// A^N_M is empty (the digraph is acyclic); value is reported as 0.
  bool empty_word_space = false;
};

/// log(rho) / log(b), or 0 when rho <= 1.
DimensionResult dimension(const BitMatrix& m);

/// Natural logarithm of a positive big integer.
double log_of(const Natural& x);

}  // namespace zomat
