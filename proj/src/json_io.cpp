#include "liecert/json_io.hpp"

namespace liecert {

Json vec_json(const Vec& v) {
  Json a = Json::array();
  for (const Rat& x : v.c) a.push_back(rat_str(x));
  return a;
}

Vec vec_from_json(const ModelPtr& m, const Json& j) {
  std::vector<Rat> c;
  for (const auto& s : j) c.push_back(parse_rat(s.get<std::string>()));
  return Vec(m, std::move(c));
}

Json root_json(const Root& r) {
  Json j;
  j["vector"] = vec_json(r.vector);
  j["norm_sq"] = rat_str(r.norm_sq);
  return j;
}

Json root_system_json(const RootSystem& rs) {
  Json j;
  j["type"] = rs.type().name();
  j["rank"] = rs.rank();
  j["model"] = rs.model()->tag();
  j["root_count"] = rs.roots().size();
  Json roots = Json::array();
  for (const Root& r : rs.roots()) roots.push_back(vec_json(r.vector));
  j["roots"] = std::move(roots);
  j["highest_root"] = vec_json(rs.highest_root().vector);
  Json simples = Json::array();
  for (const Root& r : rs.simple_roots()) simples.push_back(vec_json(r.vector));
  j["simple_roots"] = std::move(simples);
  Json chamber = Json::array();
  for (const Vec& nu : rs.chamber_normals()) chamber.push_back(vec_json(nu));
  j["chamber"] = std::move(chamber);
  return j;
}

Json pi1_json(const RootSystem& rs, const Pi1Table& t, bool include_reps) {
  Json j;
  j["type"] = rs.type().name();
  j["rank"] = rs.rank();
  Json f = Json::array();
  for (const Int& x : t.group.invariant_factors) f.push_back(x.get_str());
  j["invariant_factors"] = std::move(f);
  if (include_reps) {
    Json reps = Json::array();
    for (const TransversalEntry& e : t.reps) {
      Json r;
      Json coset = Json::array();
      for (const Int& d : e.coset) coset.push_back(d.get_str());
      r["coset"] = std::move(coset);
      r["lambda"] = vec_json(e.lambda);
      r["max_pairing"] = rat_str(e.max_pairing);
      r["maximizing_root"] = vec_json(e.maximizing_root);
      r["min_norm_lambda"] = vec_json(e.small_norm_witness);
      reps.push_back(std::move(r));
    }
    j["representatives"] = std::move(reps);
  }
  return j;
}

Json word_json(const WeylWord& w) {
  Json a = Json::array();
  for (const Vec& l : w.letters) a.push_back(vec_json(l));
  return a;
}

WeylWord word_from_json(const ModelPtr& m, const Json& j) {
  WeylWord w = WeylWord::identity(m);
  for (const auto& l : j) w.push_reflection(vec_from_json(m, l));
  return w;
}

Json envelope_json(const std::string& kind, const Vec& lambda,
                   const std::optional<WeylWord>& word, const Rat& pairing, Json details) {
  Json j;
  j["kind"] = kind;
  j["lambda"] = vec_json(lambda);
  j["word"] = word ? word_json(*word) : Json(nullptr);
  j["pairing"] = rat_str(pairing);
  j["details"] = std::move(details);
  return j;
}

Json decomposition_json(const RootSystem& rs, const OrthogonalDecomposition& d) {
  Json details;
  Json terms = Json::array();
  WeylWord w = WeylWord::identity(rs.model());
  for (const OrthTerm& t : d.terms) {
    Json tj;
    tj["coeff"] = rat_str(t.coeff);
    tj["root"] = vec_json(t.root.vector);
    terms.push_back(std::move(tj));
    w.push_reflection(t.root.vector);
  }
  details["terms"] = std::move(terms);
  return envelope_json("OrthogonalDecomposition", d.lambda, w,
                       pair(d.lambda, rs.highest_root().vector), std::move(details));
}

Json witness_json(const Witness& w) {
  Json details;
  details["message"] = w.details;
  if (w.offender) details["offender"] = vec_json(*w.offender);
  return envelope_json(witness_kind_name(w.kind), w.lambda, w.word, w.pairing,
                       std::move(details));
}

Json reversor_json(const RootSystem& rs, const Vec& lam, const WeylWord& w) {
  Json details;
  details["length"] = w.length();
  return envelope_json("Reversor", lam, w, pair(rs.dominant_rep(lam).first, rs.highest_root().vector),
                       std::move(details));
}

Json analysis_json(const RootSystem& rs, const Vec& lam, const AnalysisResult& res) {
  if (std::holds_alternative<WeylWord>(res))
    return reversor_json(rs, lam, std::get<WeylWord>(res));
  return witness_json(std::get<Witness>(res));
}

}  // namespace liecert
