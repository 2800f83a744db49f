#include "zomat/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "zomat/errors.hpp"
#include "zomat/json.hpp"

namespace zomat::cli {

namespace {

struct Options {
  std::vector<std::string> matrices;
  std::vector<std::string> files;
  std::string format = "text";
  unsigned n = 12;
  unsigned length = 12;
  unsigned horizon = 12;
  std::size_t cap = kDefaultWordCap;
  int head = 0;
  int tail = 0;
  std::size_t b = 3;
  std::string claim;
  std::string filter = "p1";
  unsigned workers = 0;
  bool allow_b5 = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

std::vector<BitMatrix> load_matrices(const Options& o) {
  std::vector<BitMatrix> out;
  for (const auto& m : o.matrices) out.push_back(BitMatrix::parse(m));
  for (const auto& f : o.files) out.push_back(BitMatrix::parse(read_file(f)));
  return out;
}

BitMatrix single_matrix(const Options& o) {
  auto ms = load_matrices(o);
  if (ms.size() != 1) {
    throw UsageError("expected exactly one matrix, got " +
                     std::to_string(ms.size()));
  }
  return ms.front();
}

bool json_mode(const Options& o) { return o.format == "json"; }

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

// "key: value" lines; nested objects join keys with '.', arrays of scalars
// are space separated.
void write_flat(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      write_flat(v, prefix.empty() ? k : prefix + "." + k, out);
    }
    return;
  }
  if (j.is_array() &&
      std::all_of(j.begin(), j.end(), [](const Json& x) {
        return !x.is_object() && !x.is_array();
      })) {
    out << prefix << ":";
    for (const auto& x : j) out << ' ' << scalar_text(x);
    out << '\n';
    return;
  }
  if (j.is_array()) {
    for (std::size_t k = 0; k < j.size(); ++k) {
      write_flat(j[k], prefix + "." + std::to_string(k + 1), out);
    }
    return;
  }
  out << prefix << ": " << scalar_text(j) << '\n';
}

void emit(const Options& o, const Json& j, std::ostream& out) {
  if (json_mode(o)) {
    out << j.dump(2) << '\n';
  } else {
    write_flat(j, "", out);
  }
}

int do_classify(const Options& o, std::ostream& out) {
  const BitMatrix m = single_matrix(o);
  emit(o, to_json(classify(m), m), out);
  return kSuccess;
}

int do_norms(const Options& o, std::ostream& out) {
  const BitMatrix m = single_matrix(o);
  const auto norms = norm_sequence(m, o.n);
  if (json_mode(o)) {
    Json j = Json::array();
    for (const auto& x : norms) j.push_back(x.str());
    out << Json{{"n", std::to_string(o.n)}, {"norms", j}}.dump(2) << '\n';
  } else {
    for (std::size_t k = 0; k < norms.size(); ++k) {
      out << (k ? " " : "") << norms[k];
    }
    out << '\n';
  }
  return kSuccess;
}

int do_words(const Options& o, std::ostream& out) {
  const BitMatrix m = single_matrix(o);
  std::vector<Word> words;
  if (o.head && o.tail) {
    words = admissible_words_between(m, o.length, o.head, o.tail, o.cap);
  } else {
    words = admissible_words(m, o.length, o.cap);
    std::erase_if(words, [&](const Word& w) {
      return (o.head && w.letters.front() != o.head) ||
             (o.tail && w.letters.back() != o.tail);
    });
  }
  if (json_mode(o)) {
    Json list = Json::array();
    for (const auto& w : words) list.push_back(to_string(w, m.side()));
    out << Json{{"length", std::to_string(o.length)},
                {"count", std::to_string(words.size())},
                {"words", list}}
               .dump(2)
        << '\n';
  } else {
    for (const auto& w : words) out << to_string(w, m.side()) << '\n';
  }
  return kSuccess;
}

int do_infinite(const Options& o, std::ostream& out) {
  const BitMatrix m = single_matrix(o);
  const Census census = infinite_word_census(m);
  if (json_mode(o)) {
    out << to_json(census, m.side()).dump(2) << '\n';
    return kSuccess;
  }
  out << "kind: " << to_string(census.kind) << '\n';
  if (census.kind == CensusKind::finite) {
    out << "count: " << census.words.size() << '\n';
    for (const auto& w : census.words) out << w.to_string(m.side()) << '\n';
  }
  return kSuccess;
}

int do_canonical(const Options& o, std::ostream& out) {
  const BitMatrix m = single_matrix(o);
  emit(o, to_json(canonical_form(m)), out);
  return kSuccess;
}

int do_equiv(const Options& o, std::ostream& out) {
  const auto ms = load_matrices(o);
  if (ms.size() != 2) {
    throw UsageError("equiv expects two matrices, got " +
                     std::to_string(ms.size()));
  }
  const auto witness = equivalence_witness(ms[0], ms[1]);
  Json j;
  j["equivalent"] = witness.has_value();
  j["witness"] = witness ? to_json(*witness) : Json(nullptr);
  emit(o, j, out);
  return kSuccess;
}

int do_dim(const Options& o, std::ostream& out) {
  const BitMatrix m = single_matrix(o);
  emit(o, to_json(dimension(m)), out);
  return kSuccess;
}

int do_structure(const Options& o, std::ostream& out) {
  const BitMatrix m = single_matrix(o);
  emit(o, to_json(cycle_structure(m)), out);
  return kSuccess;
}

void write_report_text(const VerificationReport& r, std::ostream& out) {
  out << r.claim_id << ": " << (r.ok() ? "ok" : "COUNTEREXAMPLES")
      << " population " << r.population << ", passes " << r.passes
      << ", counterexamples " << r.counterexamples.size() << ", elapsed "
      << r.elapsed.count() << " ms\n";
  for (const auto& [k, v] : r.parameters) out << "  " << k << " = " << v << '\n';
  for (const auto& c : r.counterexamples) {
    out << "  " << c.matrix << ": " << c.detail << '\n';
  }
}

int do_verify(const Options& o, std::ostream& out) {
  const SweepOptions sweep{o.workers, o.allow_b5};
  std::vector<std::string> claims;
  if (o.claim.empty() || o.claim == "all") {
    claims = claim_ids();
  } else {
    claims.push_back(o.claim);
  }
  std::vector<VerificationReport> reports;
  for (const auto& id : claims) {
    reports.push_back(run_claim(id, o.b, o.horizon, sweep));
  }
  if (json_mode(o)) {
    if (reports.size() == 1) {
      out << to_json(reports.front()).dump(2) << '\n';
    } else {
      Json all = Json::array();
      for (const auto& r : reports) all.push_back(to_json(r));
      out << all.dump(2) << '\n';
    }
  } else {
    for (const auto& r : reports) write_report_text(r, out);
  }
  const bool ok = std::all_of(reports.begin(), reports.end(),
                              [](const auto& r) { return r.ok(); });
  return ok ? kSuccess : kCounterexample;
}

int do_gen(const Options& o, std::ostream& out) {
  enumerate_matrices(
      o.b, parse_filter(o.filter),
      [&](const BitMatrix& m) { out << m.to_text() << '\n'; }, o.allow_b5);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Growth analysis of powers of 0-1 matrices", "zomat"};
  app.require_subcommand(1);
  Options o;

  auto format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto matrix_input = [&](CLI::App* sub, bool pair) {
    auto* m = sub->add_option("matrix", o.matrices,
                              "Matrix rows separated by ';', e.g. 110;010;001");
    auto* f = sub->add_option("--file", o.files,
                              "File with one matrix row per line");
    if (!pair) {
      m->expected(0, 1);
      f->expected(0, 1);
    }
  };

  int (*handler)(const Options&, std::ostream&) = nullptr;
  auto command = [&](const char* name, const char* help,
                     int (*fn)(const Options&, std::ostream&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->callback([&handler, fn] { handler = fn; });
    format(sub);
    return sub;
  };

  auto* classify_cmd =
      command("classify", "Growth class with certificate", do_classify);
  matrix_input(classify_cmd, false);

  auto* norms_cmd = command("norms", "||M^n|| for n = 1..N", do_norms);
  matrix_input(norms_cmd, false);
  norms_cmd->add_option("--n,--horizon", o.n, "Number of powers")
      ->check(CLI::Range(1U, 100000U));

  auto* words_cmd = command("words", "Admissible words of a length", do_words);
  matrix_input(words_cmd, false);
  words_cmd->add_option("--length,--n", o.length, "Word length")
      ->check(CLI::Range(1U, 100000U));
  words_cmd->add_option("--cap", o.cap, "Maximum number of words");
  words_cmd->add_option("--head", o.head, "First letter")
      ->check(CLI::Range(1, static_cast<int>(kMaxSide)));
  words_cmd->add_option("--tail", o.tail, "Last letter")
      ->check(CLI::Range(1, static_cast<int>(kMaxSide)));

  auto* infinite_cmd =
      command("infinite", "Census of infinite admissible words", do_infinite);
  matrix_input(infinite_cmd, false);

  auto* canonical_cmd =
      command("canonical", "Canonical representative under relabelling",
              do_canonical);
  matrix_input(canonical_cmd, false);

  auto* equiv_cmd =
      command("equiv", "Permutation equivalence of two matrices", do_equiv);
  matrix_input(equiv_cmd, true);

  auto* dim_cmd = command("dim", "Dimension of the infinite word space", do_dim);
  matrix_input(dim_cmd, false);

  auto* structure_cmd = command(
      "structure", "Components, cycle vertices and cycles", do_structure);
  matrix_input(structure_cmd, false);

  auto* verify_cmd =
      command("verify", "Exhaustive re-verification sweeps", do_verify);
  verify_cmd->add_option("--claim", o.claim, "Claim identifier or 'all'");
  verify_cmd->add_option("--b", o.b, "Matrix size")->check(CLI::Range(2, 5));
  verify_cmd->add_option("--horizon,--n", o.horizon, "Norm horizon")
      ->check(CLI::Range(1U, 64U));
  verify_cmd->add_option("--workers", o.workers, "Worker threads (0 = auto)");
  verify_cmd->add_flag("--allow-b5", o.allow_b5, "Permit b = 5 sweeps");

  auto* gen_cmd = command("gen", "Enumerate matrices, one per line", do_gen);
  gen_cmd->add_option("--b", o.b, "Matrix size")->check(CLI::Range(2, 5));
  gen_cmd->add_option("--filter", o.filter, "all, p1 or p1p2")
      ->check(CLI::IsMember({"all", "p1", "p1p2"}));
  gen_cmd->add_flag("--allow-b5", o.allow_b5, "Permit b = 5");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    return handler(o, out);
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what();
    if (e.witness()) err << " (witness: " << *e.witness() << ")";
    err << '\n';
    return kPreconditionViolated;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << " (count: " << e.count() << ")\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace zomat::cli
