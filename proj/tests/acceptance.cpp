// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "zomat/classify.hpp"
#include "zomat/verify.hpp"

using namespace zomat;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

void absorb(Outcome& o, const VerificationReport& r) {
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += r.claim_id;
  for (const auto& [k, v] : r.parameters) {
    if (k == "b") o.detail += " b=" + v;
  }
  o.detail += " " + std::to_string(r.passes) + "/" +
              std::to_string(r.population);
  if (!r.ok()) {
    o.ok = false;
    o.detail += " FIRST COUNTEREXAMPLE " + r.counterexamples.front().matrix +
                ": " + r.counterexamples.front().detail;
  }
}

int failures = 0;

void criterion(const char* id, const char* title, double limit_seconds,
               const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_seconds > 0 && seconds > limit_seconds) {
    o.ok = false;
    o.detail += "; exceeded " + std::to_string(limit_seconds) + " s";
  }
  if (!o.ok) ++failures;
  std::printf("%s %-5s %-40s %8.3f s  %s\n", o.ok ? "PASS" : "FAIL", id, title,
              seconds, o.detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  criterion("AC1", "growth trichotomy, b = 2..4", 10.0, [] {
    Outcome o;
    for (std::size_t b = 2; b <= 4; ++b) absorb(o, verify_trichotomy(b, 12));
    return o;
  });

  criterion("AC2", "bounded supremum extremal classes", 30.0, [] {
    Outcome o;
    for (std::size_t b = 2; b <= 4; ++b) absorb(o, verify_sup_extremal(b));
    return o;
  });

  criterion("AC3", "binomial extremal class of T_b", 30.0, [] {
    Outcome o;
    for (std::size_t b = 2; b <= 4; ++b)
      absorb(o, verify_binomial_extremal(b, 12));
    return o;
  });

  criterion("AC4", "||T_b^n|| = C(n+b, n+1), b <= 8, n <= 20", 1.0, [] {
    Outcome o;
    absorb(o, verify_tb_binomial(8, 20));
    const Natural independent = binomial(28, 21);
    const Natural direct = norm(power(make_T(8), 20));
    if (independent != 1184040 || direct != independent) {
      o.ok = false;
      o.detail += "; C(28,21) = " + independent.str() + ", ||T_8^20|| = " +
                  direct.str();
    }
    return o;
  });

  criterion("AC5", "word-norm bridge", 60.0, [] {
    Outcome o;
    for (std::size_t b = 2; b <= 3; ++b)
      absorb(o, verify_word_norm_bridge(b, 6));
    absorb(o, verify_word_norm_bridge_random(200, 5, 6));
    return o;
  });

  criterion("AC6", "infinite word count 2^{b-1} iff extremal", 0.0, [] {
    Outcome o;
    for (std::size_t b = 2; b <= 4; ++b) absorb(o, verify_census_extremal(b));
    return o;
  });

  criterion("AC7", "binomial and block identities", 0.0, [] {
    Outcome o;
    absorb(o, verify_identities());
    return o;
  });

  criterion("AC8", "structural P2 vs power oracle, b <= 4", 0.0, [] {
    Outcome o;
    for (std::size_t b = 2; b <= 4; ++b) absorb(o, verify_p2_oracle(b));
    return o;
  });

  criterion("AC9", "nilpotency three ways, b <= 4", 0.0, [] {
    Outcome o;
    for (std::size_t b = 2; b <= 4; ++b) absorb(o, verify_nilpotency_lemma(b));
    return o;
  });

  criterion("AC10", "dimension spot checks", 0.0, [] {
    Outcome o;
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double expected = std::log(phi) / std::log(2.0);
    const auto g = dimension(BitMatrix::parse("11;10"));
    const double gap = std::abs(g.value - expected);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "golden mean %.15f (|diff| %.2e, rho via %s, bound %.1e)",
                  g.value, gap, to_string(g.radius.method),
                  g.radius.error_bound);
    o.detail = buf;
    if (gap > 1e-9 || g.radius.method != RadiusMethod::exact_char_poly ||
        g.radius.error_bound > 1e-12) {
      o.ok = false;
    }
    for (std::size_t b = 2; b <= 8; ++b) {
      const double t = dimension(make_T(b)).value;
      const double full = dimension(make_full(b)).value;
      if (t != 0.0 || full != 1.0) {
        o.ok = false;
        o.detail += "; b=" + std::to_string(b) + " T_b " + std::to_string(t) +
                    " all-ones " + std::to_string(full);
      }
    }
    o.detail += "; T_b = 0 and all-ones = 1 for b = 2..8";
    return o;
  });

  criterion("AC11", "stabilisation of norm sequences, b <= 4", 0.0, [] {
    Outcome o;
    for (std::size_t b = 2; b <= 4; ++b) absorb(o, verify_stabilization(b));
    return o;
  });

  std::printf("%d criteria failed\n", failures);
  return failures;
}
