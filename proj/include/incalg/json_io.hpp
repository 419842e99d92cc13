#ifndef INCALG_JSON_IO_HPP
#define INCALG_JSON_IO_HPP

#include <string>
#include <string_view>

#include "incalg/involutions.hpp"
#include "json.hpp"

namespace incalg::io {

using nlohmann::json;

/// JSON {"elements": [...], "covers": [["a","b"], ...]} or one relation
/// "a<b" per line; a line with a single label adds an isolated element.
Poset parse_poset(std::string_view text);
json poset_json(const Poset& p);

Scalar parse_scalar(const Field& k, const json& j);

/// {"entries": {"x,y": "s"}} or the bare entry map; omitted pairs are 0.
IncFn incfn_from_json(const ContextPtr& ctx, const json& j);
json incfn_json(const IncFn& f);
/// {"x,y": "s"} over every comparable pair.
json cochain_json(const IncFn& f);

DElem delem_from_json(const ContextPtr& ctx, const json& j);
json delem_json(const DElem& a);

/// {"x": "y", ...} or the inline form "x:y,y:x". The kind is inferred.
PosetMap map_from_json(const Poset& p, const json& j);
PosetMap parse_map(const Poset& p, std::string_view text);
json map_json(const Poset& p, const PosetMap& m);

Matrix matrix_from_json(const Field& k, const json& j);
json matrix_json(const Matrix& m);

/// {"theta", "lambda", "k"} or a raw map {"blocks": {"a","b","c","d"}} /
/// {"matrix": rows}, the latter passed through recognize.
InvolutionSpec spec_from_json(const ContextPtr& ctx, const json& j);
json spec_json(const InvolutionSpec& s);

json morphism_json(const FiaMorphism& m);
json witness_json(const DWitness& w);
json verdict_json(const Verdict& v);
json hypotheses_json(const HypothesisReport& r);
json classification_json(const Poset& p, const Classification& c);
json poset_info_json(const Poset& p);

}  // namespace incalg::io

#endif
