#include "zomat/classify.hpp"

#include <bit>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

#include "zomat/digraph.hpp"

namespace zomat {

namespace {

using Row = BitMatrix::Row;

void require_P1(const BitMatrix& m) {
  const auto p1 = satisfies_P1(m);
  if (!p1) {
    throw PreconditionError("matrix violates P1 at index " +
                                std::to_string(*p1.witness),
                            p1.witness);
  }
}

// Smallest cycle vertex i together with the smallest vertex reachable from
// i whose out-degree is not 1, if any.
std::optional<std::pair<int, int>> reachable_branching(
    const BitMatrix& m, const std::vector<Row>& reach) {
  for (std::size_t i = 0; i < m.side(); ++i) {
    if (!(reach[i] & (Row{1} << i))) continue;
    for (Row rest = reach[i]; rest; rest &= rest - 1) {
      const std::size_t v = std::countr_zero(rest);
      if (std::popcount(m.row_mask(v)) != 1) {
        return std::pair{static_cast<int>(i + 1), static_cast<int>(v + 1)};
      }
    }
  }
  return std::nullopt;
}

ExponentialCertificate exponential_certificate(const BitMatrix& m) {
  const auto b = static_cast<unsigned>(m.side());
  // A complex component holds a vertex on two distinct closed walks of
  // lengths p, q <= b, so (M^{pq})_ii >= 2 with pq <= b^2.
  NatMatrix acc(m);
  for (unsigned k = 1; k <= b * b; ++k) {
    if (k > 1) acc = multiply(acc, m);
    for (std::size_t i = 1; i <= m.side(); ++i) {
      if (acc.at(i, i) >= 2) {
        return {static_cast<int>(i), k, acc.at(i, i)};
      }
    }
  }
  throw std::logic_error("no diagonal entry >= 2 found for a P2 violation");
}

// Shortest path from `from` to `to` (both 1-based); [from] when equal.
std::vector<int> shortest_path(const BitMatrix& m, int from, int to) {
  const std::size_t b = m.side();
  std::vector<int> parent(b, -1);
  std::deque<std::size_t> queue{static_cast<std::size_t>(from - 1)};
  parent[static_cast<std::size_t>(from - 1)] = from - 1;
  while (!queue.empty() && parent[static_cast<std::size_t>(to - 1)] < 0) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (Row next = m.row_mask(v); next; next &= next - 1) {
      const std::size_t u = std::countr_zero(next);
      if (parent[u] < 0) {
        parent[u] = static_cast<int>(v);
        queue.push_back(u);
      }
    }
  }
  std::vector<int> path{to};
  for (int v = to - 1; v != from - 1; v = parent[static_cast<std::size_t>(v)]) {
    path.push_back(parent[static_cast<std::size_t>(v)] + 1);
  }
  return {path.rbegin(), path.rend()};
}

// Follows smallest out-edges from the end of `walk` until a vertex repeats,
// closing the word into prefix . (loop)^inf.
InfiniteWord close_greedily(const BitMatrix& m, std::vector<int> walk) {
  std::vector<int> first_seen(m.side(), -1);
  for (std::size_t k = 0; k < walk.size(); ++k) {
    auto& slot = first_seen[static_cast<std::size_t>(walk[k] - 1)];
    if (slot < 0) slot = static_cast<int>(k);
  }
  for (;;) {
    const Row next = m.row_mask(static_cast<std::size_t>(walk.back() - 1));
    if (!next) throw std::logic_error("walk reached a vertex without exits");
    const int u = std::countr_zero(next) + 1;
    const int seen = first_seen[static_cast<std::size_t>(u - 1)];
    if (seen >= 0) {
      return InfiniteWord({walk.begin(), walk.begin() + seen},
                          {walk.begin() + seen, walk.end()});
    }
    first_seen[static_cast<std::size_t>(u - 1)] = static_cast<int>(walk.size());
    walk.push_back(u);
  }
}

PolynomialCertificate polynomial_certificate(const BitMatrix& m, int head,
                                             int branch) {
  const auto path = shortest_path(m, head, branch);
  Row next = m.row_mask(static_cast<std::size_t>(branch - 1));
  const int u1 = std::countr_zero(next) + 1;
  next &= next - 1;
  const int u2 = std::countr_zero(next) + 1;

  auto walk1 = path;
  walk1.push_back(u1);
  auto walk2 = path;
  walk2.push_back(u2);
  return {head, branch, close_greedily(m, std::move(walk1)),
          close_greedily(m, std::move(walk2))};
}

// ---- exact polynomial arithmetic over Q, coefficients low to high ----

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Rational(k));
  trim(d);
  return d;
}

// Remainder of a / b (b nonzero).
Poly remainder(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= factor * b[k];
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly quotient(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  Poly q(a.size() - b.size() + 1);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = factor;
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= factor * b[k];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return q;
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Rational evaluate(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int sign_changes(const std::vector<Poly>& sturm, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& p : sturm) {
    const Rational v = evaluate(p, x);
    const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace

const char* to_string(Growth g) {
  switch (g) {
    case Growth::exponential: return "exponential";
    case Growth::polynomial: return "polynomial";
    case Growth::bounded: return "bounded";
  }
  return "?";
}

const char* to_string(RadiusMethod method) {
  return method == RadiusMethod::exact_char_poly ? "exact-char-poly"
                                                 : "norm-ratio";
}

Growth growth_of(const BitMatrix& m) {
  require_P1(m);
  if (!satisfies_P2(m)) return Growth::exponential;
  return reachable_branching(m, reachability(m)) ? Growth::polynomial
                                                 : Growth::bounded;
}

GrowthClass classify(const BitMatrix& m) {
  require_P1(m);
  if (!satisfies_P2(m)) return {exponential_certificate(m)};
  if (const auto branching = reachable_branching(m, reachability(m))) {
    return {polynomial_certificate(m, branching->first, branching->second)};
  }
  return {BoundedCertificate{sup_norm(m), count_infinite(m)}};
}

Natural sup_norm(const BitMatrix& m) {
  if (growth_of(m) != Growth::bounded) {
    throw PreconditionError("sup_norm requires the bounded class");
  }
  NatMatrix acc(m);
  Natural previous = norm(acc);
  // Stabilisation happens within b steps in practice; the cap only guards
  // against a broken invariant.
  const std::size_t cap = m.side() * m.side() + 8;
  for (std::size_t n = 2; n <= cap; ++n) {
    acc = multiply(acc, m);
    Natural current = norm(acc);
    if (current == previous) return current;
    previous = std::move(current);
  }
  throw std::logic_error("norm sequence did not stabilise for " +
                         m.to_text());
}

bool is_sup_extremal(const BitMatrix& m, std::size_t limit) {
  require_P1(m);
  const auto form = canonical_form(m, limit).matrix;
  for (const auto& target : extremal_sup_forms(m.side())) {
    if (form.count_ones() == target.count_ones() &&
        canonical_form(target, limit).matrix == form) {
      return true;
    }
  }
  return false;
}

bool is_binomial_extremal(const BitMatrix& m, std::size_t limit) {
  require_P1(m);
  const auto target = make_T(m.side());
  if (m.count_ones() != target.count_ones()) return false;
  return canonical_form(m, limit).matrix == canonical_form(target, limit).matrix;
}

std::vector<Integer> characteristic_polynomial(const BitMatrix& m) {
  const std::size_t n = m.side();
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  std::vector<Integer> mk(n * n);  // M_0 = 0
  auto times_m = [&](const std::vector<Integer>& x) {
    std::vector<Integer> out(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (Row row = m.row_mask(i); row; row &= row - 1) {
        const std::size_t k = std::countr_zero(row);
        for (std::size_t j = 0; j < n; ++j) out[i * n + j] += x[k * n + j];
      }
    }
    return out;
  };
  for (std::size_t k = 1; k <= n; ++k) {
    mk = times_m(mk);
    for (std::size_t i = 0; i < n; ++i) mk[i * n + i] += c[n - k + 1];
    const auto amk = times_m(mk);
    Integer trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += amk[i * n + i];
    c[n - k] = -trace / Integer(k);
  }
  return c;
}

SpectralRadiusResult spectral_radius(const BitMatrix& m, double tolerance) {
  const auto coeffs = characteristic_polynomial(m);
  Poly p(coeffs.begin(), coeffs.end());
  trim(p);
  // Square-free part: same distinct roots, all simple.
  const Poly q = quotient(p, gcd(p, derivative(p)));

  std::vector<Poly> sturm{q, derivative(q)};
  while (!sturm.back().empty()) {
    Poly r = remainder(sturm[sturm.size() - 2], sturm.back());
    for (auto& x : r) x = -x;
    if (r.empty()) break;
    sturm.push_back(std::move(r));
  }
  if (sturm.back().empty()) sturm.pop_back();

  // All eigenvalues satisfy |lambda| <= rho <= b, and rho itself is a real
  // root >= 0, so rho is the largest real root and lies in (-1, b].
  const Rational hi_bound(static_cast<long long>(m.side()));
  const int v_top = sign_changes(sturm, hi_bound);
  auto root_above = [&](const Rational& x) {
    return sign_changes(sturm, x) - v_top >= 1;
  };

  Rational lo(-1);
  Rational hi = hi_bound;
  const Rational tol(tolerance);
  while ((hi - lo) / 2 > tol) {
    const Rational mid = (lo + hi) / 2;
    if (root_above(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const Rational mid = (lo + hi) / 2;

  // rho is an algebraic integer; if it is rational it is an integer.
  const Rational shifted = mid + Rational(1, 2);
  Integer nearest = numerator(shifted) / denominator(shifted);
  if (shifted < 0 && Rational(nearest) != shifted) --nearest;
  const Rational candidate(nearest);
  if (candidate > lo && candidate <= hi && evaluate(q, candidate) == 0 &&
      !root_above(candidate)) {
    return {to_double(candidate), RadiusMethod::exact_char_poly, 0.0};
  }
  const double value = to_double(mid);
  const double bound = to_double((hi - lo) / 2) +
                       std::abs(value) * std::numeric_limits<double>::epsilon();
  return {value, RadiusMethod::exact_char_poly, bound};
}

double log_of(const Natural& x) {
  if (x <= 0) return -std::numeric_limits<double>::infinity();
  const auto bits = boost::multiprecision::msb(x);
  if (bits < 1000) return std::log(x.convert_to<double>());
  const auto shift = bits - 60;
  return std::log(Natural(x >> shift).convert_to<double>()) +
         static_cast<double>(shift) * std::log(2.0);
}

SpectralRadiusResult norm_ratio_estimate(const BitMatrix& m, unsigned n) {
  if (n == 0) throw std::invalid_argument("norm ratio needs n >= 1");
  auto estimate = [&](unsigned k) {
    const Natural low = norm(power(m, k));
    const Natural high = norm(power(m, 2 * k));
    if (low.is_zero() || high.is_zero()) return 0.0;
    return std::exp((log_of(high) - log_of(low)) / k);
  };
  const double value = estimate(n);
  const double coarse = estimate(n > 1 ? n / 2 : 1);
  return {value, RadiusMethod::norm_ratio, std::abs(value - coarse)};
}

DimensionResult dimension(const BitMatrix& m) {
  DimensionResult out;
  out.radius = spectral_radius(m);
  out.empty_word_space = cycle_vertex_mask(m) == 0;
  const double rho = out.radius.value;
  const double err = out.radius.error_bound;
  if (rho + err <= 1.0 || out.empty_word_space) return out;
  const double log_b = std::log(static_cast<double>(m.side()));
  if (err == 0.0 && rho == static_cast<double>(m.side())) {
    out.value = 1.0;
    return out;
  }
  out.value = std::log(rho) / log_b;
  out.error_bound = err / ((rho - err) * log_b) +
                    std::abs(out.value) * std::numeric_limits<double>::epsilon();
  return out;
}

}  // namespace zomat
