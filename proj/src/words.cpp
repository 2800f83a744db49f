#include "zomat/words.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace zomat {

namespace {

using Row = BitMatrix::Row;

std::string join_letters(const std::vector<int>& letters,
                         std::size_t alphabet) {
  std::string s;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (alphabet > 9 && k) s.push_back(',');
    s += std::to_string(letters[k]);
  }
  return s;
}

void check_vertex(const BitMatrix& m, int i) {
  if (i < 1 || static_cast<std::size_t>(i) > m.side()) {
    throw std::out_of_range("vertex " + std::to_string(i) + " outside 1.." +
                            std::to_string(m.side()));
  }
}

void check_cap(const Natural& count, std::size_t cap) {
  if (count > cap) {
    throw CapExceeded("word count " + count.str() + " exceeds cap " +
                          std::to_string(cap),
                      count.str());
  }
}

void check_alphabet(const std::vector<int>& letters, std::size_t alphabet) {
  for (int c : letters) {
    if (c < 1 || static_cast<std::size_t>(c) > alphabet) {
      throw std::invalid_argument("alphabet mismatch: letter " +
                                  std::to_string(c) + " outside 1.." +
                                  std::to_string(alphabet));
    }
  }
}

Rational inverse_power(std::size_t alphabet, std::size_t k) {
  Natural den = 1;
  for (std::size_t t = 0; t < k; ++t) den *= alphabet;
  return Rational(Natural(1), den);
}

// Depth-first extension of `word` to `length` letters, in lexicographic
// order. `allowed[r]` restricts the vertex placed when r letters remain.
void extend(const BitMatrix& m, std::vector<int>& word, std::size_t length,
            const std::vector<Row>* allowed, std::vector<Word>& out) {
  if (word.size() == length) {
    out.push_back(Word{word});
    return;
  }
  Row next = m.row_mask(static_cast<std::size_t>(word.back() - 1));
  if (allowed) next &= (*allowed)[length - word.size() - 1];
  for (; next; next &= next - 1) {
    word.push_back(std::countr_zero(next) + 1);
    extend(m, word, length, allowed, out);
    word.pop_back();
  }
}

}  // namespace

std::string to_string(const Word& w, std::size_t alphabet) {
  return join_letters(w.letters, alphabet);
}

InfiniteWord::InfiniteWord(std::vector<int> preperiod, std::vector<int> period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw std::invalid_argument("period must be nonempty");
  // Primitive root of the period.
  const std::size_t p = period_.size();
  for (std::size_t d = 1; d < p; ++d) {
    if (p % d) continue;
    bool root = true;
    for (std::size_t k = d; k < p && root; ++k) root = period_[k] == period_[k - d];
    if (root) {
      period_.resize(d);
      break;
    }
  }
  // Shortest preperiod: absorb matching trailing letters into the period.
  while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
    preperiod_.pop_back();
  }
}

int InfiniteWord::letter_at(std::size_t k) const {
  if (k < 1) throw std::out_of_range("word positions start at 1");
  if (k <= preperiod_.size()) return preperiod_[k - 1];
  return period_[(k - 1 - preperiod_.size()) % period_.size()];
}

Word InfiniteWord::prefix(std::size_t n) const {
  Word w;
  w.letters.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) w.letters.push_back(letter_at(k));
  return w;
}

bool InfiniteWord::is_admissible_for(const BitMatrix& m) const {
  const std::size_t span = preperiod_.size() + period_.size() + 1;
  for (std::size_t k = 1; k < span; ++k) {
    const int a = letter_at(k);
    const int c = letter_at(k + 1);
    if (a < 1 || c < 1 || static_cast<std::size_t>(a) > m.side() ||
        static_cast<std::size_t>(c) > m.side()) {
      return false;
    }
    if (!m.at(static_cast<std::size_t>(a), static_cast<std::size_t>(c))) {
      return false;
    }
  }
  return true;
}

std::string InfiniteWord::to_string(std::size_t alphabet) const {
  return join_letters(preperiod_, alphabet) + "(" +
         join_letters(period_, alphabet) + ")^inf";
}

Natural count_admissible_words(const BitMatrix& m, unsigned n) {
  if (n == 0) throw std::invalid_argument("word length must be >= 1");
  if (n == 1) return Natural(m.side());
  return norm(power(m, n - 1));
}

std::vector<Word> admissible_words(const BitMatrix& m, unsigned n,
                                   std::size_t cap) {
  check_cap(count_admissible_words(m, n), cap);
  std::vector<Word> out;
  std::vector<int> word;
  word.reserve(n);
  for (std::size_t i = 1; i <= m.side(); ++i) {
    word.assign(1, static_cast<int>(i));
    extend(m, word, n, nullptr, out);
  }
  return out;
}

std::vector<Word> admissible_words_between(const BitMatrix& m, unsigned n,
                                           int head, int tail,
                                           std::size_t cap) {
  if (n < 2) throw std::invalid_argument("A^n_M(i,j) requires n >= 2");
  check_vertex(m, head);
  check_vertex(m, tail);
  check_cap(power(m, n - 1).at(static_cast<std::size_t>(head),
                               static_cast<std::size_t>(tail)),
            cap);

  // allowed[r]: vertices with a walk of exactly r steps to the tail.
  std::vector<Row> allowed(n);
  allowed[0] = Row{1} << (tail - 1);
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t v = 0; v < m.side(); ++v) {
      if (m.row_mask(v) & allowed[r - 1]) allowed[r] |= Row{1} << v;
    }
  }
  std::vector<Word> out;
  if (!(allowed[n - 1] & (Row{1} << (head - 1)))) return out;
  std::vector<int> word{head};
  extend(m, word, n, &allowed, out);
  return out;
}

Rational metric_distance(const Word& u, const Word& v, std::size_t alphabet) {
  check_alphabet(u.letters, alphabet);
  check_alphabet(v.letters, alphabet);
  const std::size_t common = std::min(u.size(), v.size());
  for (std::size_t k = 0; k < common; ++k) {
    if (u.letters[k] != v.letters[k]) return inverse_power(alphabet, k + 1);
  }
  if (u.size() != v.size()) {
    throw std::invalid_argument(
        "finite words agree on their common prefix but differ in length");
  }
  return Rational(0);
}

Rational metric_distance(const InfiniteWord& u, const InfiniteWord& v,
                         std::size_t alphabet) {
  check_alphabet(u.preperiod(), alphabet);
  check_alphabet(u.period(), alphabet);
  check_alphabet(v.preperiod(), alphabet);
  check_alphabet(v.period(), alphabet);
  // Past both preperiods the pair of letters repeats with period
  // lcm(|p_u|, |p_v|), so agreement up to there means equality.
  const std::size_t horizon =
      std::max(u.preperiod().size(), v.preperiod().size()) +
      std::lcm(u.period().size(), v.period().size());
  for (std::size_t k = 1; k <= horizon; ++k) {
    if (u.letter_at(k) != v.letter_at(k)) return inverse_power(alphabet, k);
  }
  return Rational(0);
}

InfiniteWord periodic_word(const BitMatrix& m, int i) {
  check_vertex(m, i);
  const auto cs = cycle_structure(m);
  if (!cs.has_cycles()) {
    throw PreconditionError("matrix violates P2; periodic words of a head "
                            "are not unique");
  }
  return InfiniteWord({}, cs.cycle(i).word);
}

const char* to_string(CensusKind kind) {
  switch (kind) {
    case CensusKind::finite: return "finite";
    case CensusKind::countably_infinite: return "countably-infinite";
    case CensusKind::positive_dimension: return "positive-dimension";
  }
  return "?";
}

namespace {

// Paths through vertices off the cycles, stopping at the first cycle vertex
// entered; the off-cycle subgraph is acyclic so this terminates.
void collect_tails(const BitMatrix& m, Row d, const CycleStructure& cs,
                   std::vector<int>& path, std::vector<InfiniteWord>& out) {
  for (Row next = m.row_mask(static_cast<std::size_t>(path.back() - 1)); next;
       next &= next - 1) {
    const int u = std::countr_zero(next) + 1;
    if (d & (Row{1} << (u - 1))) {
      out.emplace_back(path, cs.cycle(u).word);
    } else {
      path.push_back(u);
      collect_tails(m, d, cs, path, out);
      path.pop_back();
    }
  }
}

}  // namespace

Census infinite_word_census(const BitMatrix& m) {
  const auto p1 = satisfies_P1(m);
  if (!p1) {
    throw PreconditionError("matrix violates P1 at index " +
                                std::to_string(*p1.witness),
                            p1.witness);
  }
  const auto cs = cycle_structure(m);
  if (!cs.has_cycles()) return {CensusKind::positive_dimension, {}};

  // A cycle vertex with a second out-edge yields w^k u for every k.
  const Row d = to_mask(cs.d_set());
  for (int i : cs.d_set()) {
    if (out_degree(m, i) != 1) return {CensusKind::countably_infinite, {}};
  }

  Census census{CensusKind::finite, {}};
  for (int s = 1; static_cast<std::size_t>(s) <= m.side(); ++s) {
    if (d & (Row{1} << (s - 1))) {
      census.words.emplace_back(std::vector<int>{}, cs.cycle(s).word);
    } else {
      std::vector<int> path{s};
      collect_tails(m, d, cs, path, census.words);
    }
  }
  std::sort(census.words.begin(), census.words.end());
  return census;
}

std::size_t count_infinite(const BitMatrix& m) {
  const auto census = infinite_word_census(m);
  if (census.kind != CensusKind::finite) {
    throw PreconditionError(std::string("A^N_M is not finite (") +
                            to_string(census.kind) + ")");
  }
  return census.words.size();
}

}  // namespace zomat
