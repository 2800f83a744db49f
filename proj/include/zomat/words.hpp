#pragma once

// M-admissible words: finite sets A^n_M, A^n_M(i, j), the b-adic word
// metric, and the structure of the infinite word space A^N_M.

#include <compare>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zomat/digraph.hpp"
#include "zomat/matrix.hpp"

namespace zomat {

using Rational = boost::multiprecision::cpp_rational;

/// A finite word over {1, ..., b}.
struct Word {
  std::vector<int> letters;

  std::size_t size() const { return letters.size(); }
  auto operator<=>(const Word&) const = default;
};

/// "3211" when alphabet <= 9, "3,2,1,1" otherwise.
std::string to_string(const Word& w, std::size_t alphabet);

/// An ultimately periodic infinite word preperiod . period^inf, kept in
/// canonical form: primitive period and shortest preperiod. Two descriptors
/// compare equal iff they denote the same infinite word.
class InfiniteWord {
 public:
  InfiniteWord(std::vector<int> preperiod, std::vector<int> period);

  const std::vector<int>& preperiod() const { return preperiod_; }
  const std::vector<int>& period() const { return period_; }

  /// Letter at 1-based position k.
  int letter_at(std::size_t k) const;

  /// First n letters.
  Word prefix(std::size_t n) const;

  /// Every consecutive pair is an edge of m.
  bool is_admissible_for(const BitMatrix& m) const;

  /// "32(1)^inf"; comma-separated letters when alphabet > 9.
  std::string to_string(std::size_t alphabet) const;

  auto operator<=>(const InfiniteWord&) const = default;

 private:
  std::vector<int> preperiod_;
  std::vector<int> period_;
};

inline constexpr std::size_t kDefaultWordCap = 1'000'000;

/// #A^n_M without materialising the words: b for n = 1, ||M^{n-1}||
/// otherwise.
Natural count_admissible_words(const BitMatrix& m, unsigned n);

/// A^n_M in lexicographic order. A^1_M is all b single letters. Throws
/// CapExceeded (carrying the exact count) when #A^n_M > cap.
std::vector<Word> admissible_words(const BitMatrix& m, unsigned n,
                                   std::size_t cap = kDefaultWordCap);

/// A^n_M(i, j): admissible words of length n >= 2 with head i and tail j.
std::vector<Word> admissible_words_between(const BitMatrix& m, unsigned n,
                                           int head, int tail,
                                           std::size_t cap = kDefaultWordCap);

/// d(u, v) = b^{-k} with k the first disagreement, 0 when equal. Finite
/// words that agree on the shorter length but differ in length are
/// rejected, as are letters outside 1..alphabet.
Rational metric_distance(const Word& u, const Word& v, std::size_t alphabet);
Rational metric_distance(const InfiniteWord& u, const InfiniteWord& v,
                         std::size_t alphabet);

/// The unique periodic admissible word of head i. Requires P2 and i in D_M.
InfiniteWord periodic_word(const BitMatrix& m, int i);

enum class CensusKind { finite, countably_infinite, positive_dimension };

const char* to_string(CensusKind kind);

struct Census {
  CensusKind kind = CensusKind::finite;
  /// The complete word list, sorted; only populated when finite.
  std::vector<InfiniteWord> words;
};

/// Structure of A^N_M for a matrix satisfying P1.
Census infinite_word_census(const BitMatrix& m);

/// #A^N_M; requires the finite case.
std::size_t count_infinite(const BitMatrix& m);

}  // namespace zomat
