#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "zomat/cli.hpp"
#include "zomat/json.hpp"

using namespace zomat;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// Values of "key: value" lines (whole lines when there is no key).
std::string text_values(const std::string& text) {
  std::istringstream lines(text);
  std::string line, out;
  while (std::getline(lines, line)) {
    const auto colon = line.find(": ");
    out += (colon == std::string::npos ? line : line.substr(colon + 2)) + "\n";
  }
  return out;
}

// Every number appearing in the text, in order.
std::vector<std::string> numbers(const std::string& text) {
  static const std::regex number(R"(-?\d+(\.\d+)?(e-?\d+)?)");
  std::vector<std::string> out;
  for (std::sregex_iterator it(text.begin(), text.end(), number), end;
       it != end; ++it)
    out.push_back(it->str());
  return out;
}

std::vector<std::string> json_numbers(const Json& j) {
  std::vector<std::string> out;
  if (j.is_object() || j.is_array()) {
    for (const auto& x : j) {
      auto inner = json_numbers(x);
      out.insert(out.end(), inner.begin(), inner.end());
    }
  } else if (j.is_string()) {
    out = numbers(j.get<std::string>());
  } else if (j.is_number()) {
    out = numbers(j.dump());
  }
  return out;
}

}  // namespace

TEST_CASE("classify json") {
  const auto r = run({"classify", "10;11", "--format", "json"});
  CHECK(r.code == cli::kSuccess);
  const Json j = Json::parse(r.out);
  CHECK(j["class"] == "polynomial");
  CHECK(j["sup_norm"].is_null());
  CHECK(j["dimension"] == 0.0);
  CHECK(j["certificate"]["head"].is_string());
}

TEST_CASE("classify bounded includes sup_norm") {
  const Json j = Json::parse(run({"classify", "01;10", "--format", "json"}).out);
  CHECK(j["class"] == "bounded");
  CHECK(j["sup_norm"] == "2");
}

TEST_CASE("norms text") {
  const auto r = run({"norms", "01;10", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "2 2 2 2\n");
  CHECK(run({"norms", "10;11", "--n", "4"}).out == "3 4 5 6\n");
  const Json j =
      Json::parse(run({"norms", "11;11", "--n", "70", "--format", "json"}).out);
  CHECK(j["norms"][69] == "2361183241434822606848");
}

TEST_CASE("verify exit codes") {
  const auto ok = run({"verify", "--claim", "sup_extremal", "--b", "3",
                       "--format", "json"});
  CHECK(ok.code == cli::kSuccess);
  const Json j = Json::parse(ok.out);
  CHECK(j["claim_id"] == "sup_extremal");
  CHECK(j["counterexamples"].empty());
  CHECK(j["population"] == j["passes"]);

  const auto text = run({"verify", "--claim", "trichotomy", "--b", "2"});
  CHECK(text.code == 0);
  CHECK(text.out.rfind("trichotomy: ok", 0) == 0);

  CHECK(run({"verify", "--claim", "bogus", "--b", "2"}).code ==
        cli::kUsageError);
  CHECK(run({"verify", "--claim", "nilpotency", "--b", "5"}).code ==
        cli::kUsageError);
}

TEST_CASE("precondition violations print the witness") {
  const auto r = run({"classify", "01;00"});
  CHECK(r.code == cli::kPreconditionViolated);
  CHECK(r.out.empty());
  CHECK(r.err.find("witness: 2") != std::string::npos);
  CHECK(run({"infinite", "01;00"}).code == cli::kPreconditionViolated);
}

TEST_CASE("usage and parse errors") {
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"classify", "12;01"}).code == cli::kUsageError);
  CHECK(run({"classify", "00;00"}).code == cli::kUsageError);
  CHECK(run({"classify"}).code == cli::kUsageError);
  CHECK(run({"frobnicate"}).code == cli::kUsageError);
  CHECK(run({"norms", "10;11", "--format", "xml"}).code == cli::kUsageError);
  CHECK(run({"equiv", "10;11"}).code == cli::kUsageError);
  const auto capped = run({"words", "11;11", "--length", "12", "--cap", "10"});
  CHECK(capped.code == cli::kUsageError);
  CHECK(capped.err.find("4096") != std::string::npos);
  CHECK(run({"--help"}).code == cli::kSuccess);
}

TEST_CASE("words with head and tail") {
  CHECK(run({"words", "10;11", "--length", "2"}).out == "11\n21\n22\n");
  CHECK(run({"words", "01;10", "--length", "3", "--head", "1", "--tail", "1"})
            .out == "121\n");
  CHECK(run({"words", "10;11", "--length", "3", "--head", "2"}).out ==
        "211\n221\n222\n");
  const Json j = Json::parse(
      run({"words", "100;110;111", "--length", "3", "--format", "json"}).out);
  CHECK(j["count"] == "10");
}

TEST_CASE("infinite census output") {
  const auto r = run({"infinite", "100;100;110"});
  CHECK(r.out ==
        "kind: finite\ncount: 4\n(1)^inf\n2(1)^inf\n3(1)^inf\n32(1)^inf\n");
  const Json j = Json::parse(run({"infinite", "10;11", "--format", "json"}).out);
  CHECK(j["kind"] == "countably-infinite");
  CHECK(j["count"].is_null());
}

TEST_CASE("canonical json round trip is idempotent") {
  for (const char* text : {"110;010;001", "0110;0011;1000;0101", "01;10"}) {
    const Json first =
        Json::parse(run({"canonical", text, "--format", "json"}).out);
    const std::string again = matrix_from_json(first).to_text();
    const Json second =
        Json::parse(run({"canonical", again, "--format", "json"}).out);
    CHECK(second["matrix"] == first["matrix"]);
    CHECK(second["witness"].size() == first["witness"].size());
  }
}

TEST_CASE("equiv") {
  const Json yes =
      Json::parse(run({"equiv", "10;10", "01;01", "--format", "json"}).out);
  CHECK(yes["equivalent"] == true);
  CHECK(yes["witness"] == Json::array({"2", "1"}));
  const auto no = run({"equiv", "10;01", "01;10"});
  CHECK(no.code == 0);
  CHECK(no.out == "equivalent: false\nwitness: -\n");
}

TEST_CASE("dim") {
  const Json j = Json::parse(run({"dim", "11;10", "--format", "json"}).out);
  CHECK(std::abs(j["dimension"].get<double>() - 0.6942419136306174) < 1e-9);
  CHECK(j["spectral_radius"]["method"] == "exact-char-poly");
  CHECK(j["error_bound"].get<double>() < 1e-9);
}

TEST_CASE("text and json report the same numbers") {
  const std::vector<std::vector<std::string>> commands{
      {"classify", "10;11"},       {"classify", "11;11"},
      {"classify", "100;100;110"}, {"dim", "11;10"},
      {"canonical", "0110;0011;1000;0101"},
      {"equiv", "10;10", "01;01"}, {"structure", "100;110;011"}};
  for (auto args : commands) {
    const auto text = run(args);
    args.push_back("--format");
    args.push_back("json");
    const auto json = run(args);
    REQUIRE(text.code == 0);
    REQUIRE(json.code == 0);
    CHECK(numbers(text_values(text.out)) == json_numbers(Json::parse(json.out)));
  }
  const auto text = run({"norms", "111;011;001", "--n", "9"});
  const auto json = run({"norms", "111;011;001", "--n", "9", "--format", "json"});
  CHECK(numbers(text.out) == json_numbers(Json::parse(json.out)["norms"]));
}

TEST_CASE("matrix files") {
  const std::string path = "zomat_cli_test_matrix.txt";
  {
    std::ofstream f(path);
    f << "100\n100\n110\n";
  }
  CHECK(run({"norms", "--file", path, "--n", "3"}).out == "4 4 4\n");
  CHECK(run({"equiv", "--file", path, "--file", path}).out.rfind(
            "equivalent: true", 0) == 0);
  std::remove(path.c_str());
  CHECK(run({"norms", "--file", "missing-file.txt"}).code == cli::kUsageError);
}

TEST_CASE("gen streams the enumeration") {
  const auto all = run({"gen", "--b", "2", "--filter", "all"});
  CHECK(std::count(all.out.begin(), all.out.end(), '\n') == 15);
  const auto p1 = run({"gen", "--b", "3", "--filter", "p1"});
  std::istringstream lines(p1.out);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    CHECK(satisfies_P1(BitMatrix::parse(line)).holds);
    ++count;
  }
  CHECK(count == count_matrices(3, Filter::p1));
}
