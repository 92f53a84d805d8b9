#pragma once

#include <json.hpp>

#include "liecert/reversor.hpp"

namespace liecert {

using Json = nlohmann::ordered_json;

/// Vectors serialize as arrays of "p/q" strings, "q" omitted when 1.
Json vec_json(const Vec& v);
Vec vec_from_json(const ModelPtr& m, const Json& j);

Json root_json(const Root& r);

/// {type, rank, model, roots, highest_root, simple_roots, chamber}
Json root_system_json(const RootSystem& rs);

/// {type, rank, invariant_factors, representatives: [{coset, lambda,
///  max_pairing, maximizing_root, min_norm_lambda}]}
Json pi1_json(const RootSystem& rs, const Pi1Table& t, bool include_reps);

/// [[root coords], ...] in application order.
Json word_json(const WeylWord& w);
WeylWord word_from_json(const ModelPtr& m, const Json& j);

/// Witness / decomposition envelope: {kind, lambda, word, pairing, details}.
Json envelope_json(const std::string& kind, const Vec& lambda,
                   const std::optional<WeylWord>& word, const Rat& pairing, Json details);

Json decomposition_json(const RootSystem& rs, const OrthogonalDecomposition& d);
Json witness_json(const Witness& w);
Json reversor_json(const RootSystem& rs, const Vec& lam, const WeylWord& w);
Json analysis_json(const RootSystem& rs, const Vec& lam, const AnalysisResult& res);

}  // namespace liecert
