#pragma once

// JSON views of the analysis results. Integers are rendered as decimal
// strings throughout; doubles as JSON numbers.

#include <json.hpp>

#include "zomat/classify.hpp"
#include "zomat/digraph.hpp"
#include "zomat/equivalence.hpp"
#include "zomat/verify.hpp"
#include "zomat/words.hpp"

namespace zomat {

using Json = nlohmann::ordered_json;

Json to_json(const BitMatrix& m);
Json to_json(const NatMatrix& m);
Json to_json(const Permutation& p);
Json to_json(const CycleStructure& s);
Json to_json(const InfiniteWord& w, std::size_t alphabet);
Json to_json(const Census& c, std::size_t alphabet);
Json to_json(const CanonicalForm& c);
Json to_json(const SpectralRadiusResult& r);
Json to_json(const DimensionResult& d);
Json to_json(const VerificationReport& r);

/// {"class", "certificate", "sup_norm" (bounded class only, else null),
/// "dimension"}.
Json to_json(const GrowthClass& g, const BitMatrix& m);

/// Shortest round-trip spelling of a double, shared by text and JSON output.
std::string format_double(double x);

/// Reads the "matrix" member written by to_json(CanonicalForm) or a bare
/// matrix string.
BitMatrix matrix_from_json(const Json& j);

}  // namespace zomat
