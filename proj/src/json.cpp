#include "zomat/json.hpp"

#include <stdexcept>

namespace zomat {

namespace {

Json string_array(const std::vector<int>& xs) {
  Json out = Json::array();
  for (int x : xs) out.push_back(std::to_string(x));
  return out;
}

}  // namespace

std::string format_double(double x) { return Json(x).dump(); }

Json to_json(const BitMatrix& m) { return m.to_text(); }

Json to_json(const NatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 1; i <= m.side(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 1; j <= m.side(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Permutation& p) { return string_array(p.images()); }

Json to_json(const CycleStructure& s) {
  Json out;
  out["d"] = string_array(s.d_set());
  Json comps = Json::array();
  for (const auto& c : s.components()) {
    comps.push_back({{"vertices", string_array(c.vertices)},
                     {"kind", to_string(c.kind)}});
  }
  out["components"] = std::move(comps);
  if (s.has_cycles()) {
    Json cycles = Json::object();
    for (const auto& [i, c] : s.cycles()) {
      cycles[std::to_string(i)] = {{"vertices", string_array(c.vertices)},
                                   {"word", string_array(c.word)}};
    }
    out["cycles"] = std::move(cycles);
    out["d0"] = string_array(s.d0_set());
    out["d00"] = string_array(s.d00_set());
  }
  return out;
}

Json to_json(const InfiniteWord& w, std::size_t alphabet) {
  return {{"text", w.to_string(alphabet)},
          {"preperiod", string_array(w.preperiod())},
          {"period", string_array(w.period())}};
}

Json to_json(const Census& c, std::size_t alphabet) {
  Json out;
  out["kind"] = to_string(c.kind);
  if (c.kind == CensusKind::finite) {
    out["count"] = std::to_string(c.words.size());
    Json words = Json::array();
    for (const auto& w : c.words) words.push_back(to_json(w, alphabet));
    out["words"] = std::move(words);
  } else {
    out["count"] = nullptr;
  }
  return out;
}

Json to_json(const CanonicalForm& c) {
  return {{"matrix", to_json(c.matrix)}, {"witness", to_json(c.witness)}};
}

Json to_json(const SpectralRadiusResult& r) {
  return {{"value", r.value},
          {"method", to_string(r.method)},
          {"error_bound", r.error_bound}};
}

Json to_json(const DimensionResult& d) {
  return {{"dimension", d.value},
          {"error_bound", d.error_bound},
          {"spectral_radius", to_json(d.radius)},
          {"empty_word_space", d.empty_word_space}};
}

Json to_json(const GrowthClass& g, const BitMatrix& m) {
  Json out;
  out["class"] = to_string(g.growth());
  Json cert;
  const std::size_t b = m.side();
  if (const auto* e = std::get_if<ExponentialCertificate>(&g.certificate)) {
    cert = {{"vertex", std::to_string(e->vertex)},
            {"exponent", std::to_string(e->exponent)},
            {"diagonal", e->diagonal.str()}};
  } else if (const auto* p = std::get_if<PolynomialCertificate>(&g.certificate)) {
    cert = {{"head", std::to_string(p->head)},
            {"branch_vertex", std::to_string(p->branch_vertex)},
            {"first", to_json(p->first, b)},
            {"second", to_json(p->second, b)}};
  } else {
    const auto& c = std::get<BoundedCertificate>(g.certificate);
    cert = {{"stabilized_norm", c.stabilized_norm.str()},
            {"census_size", std::to_string(c.census_size)}};
  }
  out["certificate"] = std::move(cert);
  if (g.growth() == Growth::bounded) {
    out["sup_norm"] = std::get<BoundedCertificate>(g.certificate)
                          .stabilized_norm.str();
  } else {
    out["sup_norm"] = nullptr;
  }
  out["dimension"] = dimension(m).value;
  return out;
}

Json to_json(const VerificationReport& r) {
  Json out;
  out["claim_id"] = r.claim_id;
  out["population"] = std::to_string(r.population);
  out["passes"] = std::to_string(r.passes);
  Json examples = Json::array();
  for (const auto& c : r.counterexamples) {
    examples.push_back({{"matrix", c.matrix}, {"detail", c.detail}});
  }
  out["counterexamples"] = std::move(examples);
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  out["parameters"] = std::move(params);
  out["elapsed_ms"] = std::to_string(r.elapsed.count());
  return out;
}

BitMatrix matrix_from_json(const Json& j) {
  if (j.is_string()) return BitMatrix::parse(j.get<std::string>());
  if (j.is_object() && j.contains("matrix") && j["matrix"].is_string()) {
    return BitMatrix::parse(j["matrix"].get<std::string>());
  }
  throw std::invalid_argument("expected a matrix string or an object with a "
                              "\"matrix\" member");
}

}  // namespace zomat
