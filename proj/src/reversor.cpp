#include "liecert/reversor.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace liecert {

void OrthogonalDecomposition::verify(const RootSystem& rs) const {
  if (terms.empty()) throw Error(ErrorCode::Internal, "empty decomposition");
  Vec sum = Vec::zero(lambda.model);
  for (size_t i = 0; i < terms.size(); ++i) {
    const OrthTerm& t = terms[i];
    if (!rs.is_root(t.root.vector))
      throw Error(ErrorCode::Internal, "decomposition term is not a root");
    if (pair(lambda, t.root.vector) != 2)
      throw Error(ErrorCode::Internal, "decomposition term does not pair to 2");
    if (t.coeff * t.root.norm_sq != 2)
      throw Error(ErrorCode::Internal, "decomposition coefficient violates a_i (eta_i, eta_i) = 2");
    for (size_t j = i + 1; j < terms.size(); ++j)
      if (pair(t.root.vector, terms[j].root.vector) != 0)
        throw Error(ErrorCode::Internal, "decomposition roots not orthogonal");
    sum = sum + t.root.vector * t.coeff;
  }
  if (!(sum == lambda)) throw Error(ErrorCode::Internal, "decomposition does not sum to lambda");
}

OrthogonalDecomposition decompose_orthogonal(const RootSystem& rs, const Vec& lam) {
  if (lam.is_zero()) throw Error(ErrorCode::ZeroCocharacter, "lambda = 0");
  if (!rs.lattices().coroot.contains(lam))
    throw Error(ErrorCode::PreconditionViolated, "lambda not in the coroot lattice");
  if (!rs.is_dominant(lam))
    throw Error(ErrorCode::PreconditionViolated, "lambda not dominant");
  Rat dp = pair(lam, rs.highest_root().vector);
  if (dp > 2)
    throw Error(ErrorCode::PairingTooLarge, "(lambda, delta) = " + rat_str(dp) + " exceeds 2");

  std::vector<const Root*> cands;
  for (const Root& r : rs.roots())
    if (pair(r.vector, lam) == 2) cands.push_back(&r);

  std::vector<const Root*> chosen;
  std::function<bool(size_t, const Vec&)> dfs = [&](size_t start, const Vec& residual) -> bool {
    if (residual.is_zero()) return true;
    for (size_t i = start; i < cands.size(); ++i) {
      const Root* r = cands[i];
      bool orth = true;
      for (const Root* c : chosen)
        if (pair(c->vector, r->vector) != 0) {
          orth = false;
          break;
        }
      if (!orth) continue;
      chosen.push_back(r);
      if (dfs(i + 1, residual - rs.coroot(*r))) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!dfs(0, lam))
    throw Error(ErrorCode::DecompositionNotFound,
                "no orthogonal decomposition for (" + coord_str(lam) + ")");

  OrthogonalDecomposition d;
  d.lambda = lam;
  for (const Root* r : chosen) d.terms.push_back({Rat(2) / r->norm_sq, *r});
  d.verify(rs);
  return d;
}

RootSubset RootSubset::of(const RootSystem& rs, std::vector<Vec> vecs) {
  for (const Vec& v : vecs)
    if (!rs.is_root(v)) throw Error(ErrorCode::NotARoot, "subset member (" + coord_str(v) + ")");
  std::sort(vecs.begin(), vecs.end(), VecLess{});
  vecs.erase(std::unique(vecs.begin(), vecs.end()), vecs.end());
  RootSubset s;
  s.members = std::move(vecs);
  return s;
}

bool RootSubset::contains(const Vec& v) const {
  return std::binary_search(members.begin(), members.end(), v, VecLess{});
}

RootSubset additive_closure(const RootSystem& rs, const RootSubset& seed) {
  std::set<Vec, VecLess> s(seed.members.begin(), seed.members.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Vec> cur(s.begin(), s.end());
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i; j < cur.size(); ++j) {
        Vec sum = cur[i] + cur[j];
        if (!rs.is_root(sum)) continue;
        if (s.insert(sum).second) grew = true;
      }
  }
  RootSubset out;
  out.members.assign(s.begin(), s.end());
  return out;
}

RootSubset closure_from_seed(const RootSystem& rs) {
  const Vec& delta = rs.highest_root().vector;
  std::vector<Vec> seed;
  for (const Root& r : rs.roots())
    if (rs.is_root(delta + r.vector) || rs.is_root(delta - r.vector)) seed.push_back(r.vector);
  RootSubset s;
  s.members = std::move(seed);  // already sorted (roots order) and unique
  return additive_closure(rs, s);
}

bool verify_claim_b(const RootSystem& rs) {
  if (rs.rank() < 2)
    throw Error(ErrorCode::Inapplicable,
                "rank 1: the seed {eta : delta +- eta is a root} is empty");
  return closure_from_seed(rs).size() == rs.roots().size();
}

ClaimCResult claim_c_check(const RootSystem& rs, const Vec& lam) {
  if (rs.minus_id_in_weyl())
    throw Error(ErrorCode::Inapplicable, "-id lies in the Weyl group of " + rs.type().name());
  if (lam.is_zero() || !rs.lattices().coroot.contains(lam))
    throw Error(ErrorCode::Inapplicable, "lambda must be a nonzero coroot-lattice vector");
  if (!rs.is_dominant(lam)) throw Error(ErrorCode::Inapplicable, "lambda must be dominant");
  if (pair(lam, rs.highest_root().vector) <= 2)
    throw Error(ErrorCode::Inapplicable, "(lambda, delta) <= 2");

  ClaimCResult out;
  bool first = true;
  for (size_t i = 0; i < rs.fundamental_weights().size(); ++i) {
    const Vec& w = rs.fundamental_weights()[i];
    ClaimCResult::Entry e;
    e.weight = w;
    e.pairing = pair(w, lam);
    const auto& [dual, sigma0] = rs.dual_weight_dominations()[i];
    e.dual_weight = dual;
    e.dual_pairing = pair(dual, lam);
    if (e.pairing >= e.dual_pairing) {
      e.sigma = WeylWord::identity(rs.model());  // w is already dominant
      e.achieved = e.pairing;
    } else {
      // sigma0(-w) = w^*, so sigma0(w) pairs to -<w^*, lambda>.
      e.sigma = sigma0;
      e.achieved = -e.dual_pairing;
    }
    Rat effective = e.pairing >= e.dual_pairing ? e.pairing : e.dual_pairing;
    if (first || effective < out.min_pairing) out.min_pairing = effective;
    first = false;
    out.entries.push_back(std::move(e));
  }
  return out;
}

ClaimDResult verify_claim_d(const RootSystem& rs) {
  ClaimDResult out;
  for (const Root& r : rs.roots())
    if (rs.is_dominant(r.vector)) out.dominant_roots.push_back(r.vector);
  out.only_delta =
      out.dominant_roots.size() == 1 && out.dominant_roots[0] == rs.highest_root().vector;
  return out;
}

WeylWord build_reversor(const RootSystem& rs, const Vec& lam) {
  if (lam.is_zero()) throw Error(ErrorCode::ZeroCocharacter, "lambda = 0");
  auto [lam_dom, u] = rs.dominant_rep(lam);

  if (pair(lam_dom, rs.highest_root().vector) <= 2 && rs.lattices().coroot.contains(lam_dom)) {
    OrthogonalDecomposition dec = decompose_orthogonal(rs, lam_dom);
    // Conjugating each commuting reflection back: u^{-1} w_eta u = w_{u^{-1} eta}.
    WeylWord uinv = u.inverse();
    WeylWord w = WeylWord::identity(rs.model());
    for (const OrthTerm& t : dec.terms) {
      Vec r = uinv.apply(t.root.vector);
      if (!rs.is_root(r)) throw Error(ErrorCode::Internal, "conjugated root left Delta");
      w.push_reflection(r);
    }
    if (!(w.apply(lam) == -lam)) throw Error(ErrorCode::Internal, "reversor check failed");
    return w;
  }

  auto [neg_dom, v] = rs.dominant_rep(-lam);
  if (neg_dom == lam_dom) {
    WeylWord w = compose(u, v.inverse());
    if (!(w.apply(lam) == -lam)) throw Error(ErrorCode::Internal, "reversor check failed");
    return w;
  }
  throw Error(ErrorCode::NoReversor,
              "-lambda is not in the Weyl orbit of lambda: dominant representatives (" +
                  coord_str(lam_dom) + ") vs (" + coord_str(neg_dom) + ")");
}

const char* witness_kind_name(Witness::Kind k) {
  switch (k) {
    case Witness::Kind::NotSemifree: return "NotSemifree";
    case Witness::Kind::IsotropyViolation: return "IsotropyViolation";
    case Witness::Kind::Fullness: return "Fullness";
    case Witness::Kind::ClaimCViolator: return "ClaimCViolator";
  }
  return "Unknown";
}

bool Witness::reverify(const RootSystem& rs) const {
  switch (kind) {
    case Kind::NotSemifree:
      return offender && pair(*offender, lambda) == pairing && abs(pairing) > 1;
    case Kind::IsotropyViolation: {
      if (!offender || !word) return false;
      if (!(word->apply(*offender) == rs.highest_root().vector)) return false;
      Vec dom = rs.dominant_rep(lambda).first;
      return pairing == pair(rs.highest_root().vector, dom) && pairing > 2;
    }
    case Kind::Fullness: {
      Vec dom = rs.dominant_rep(lambda).first;
      return pairing == pair(rs.highest_root().vector, dom) && pairing > 2;
    }
    case Kind::ClaimCViolator:
      return offender && pair(*offender, lambda) == pairing && pairing <= 1;
  }
  return false;
}

AnalysisResult semifree_rep_analysis(const RootSystem& rs, const Vec& lam,
                                     const WeightMultiset& wts) {
  if (lam.is_zero()) throw Error(ErrorCode::ZeroCocharacter, "lambda = 0");
  if (wts.entries.empty())
    throw Error(ErrorCode::EmptyRepresentation, "weight multiset is empty");
  const Lattice& weight_lat = rs.lattices().weight;
  for (const auto& [w, mult] : wts.entries) {
    if (mult <= 0) throw Error(ErrorCode::PreconditionViolated, "nonpositive multiplicity");
    if (!weight_lat.contains(w))
      throw Error(ErrorCode::PreconditionViolated,
                  "weight (" + coord_str(w) + ") outside the weight lattice");
  }

  const Vec* max_w = nullptr;
  const Vec* min_w = nullptr;
  Rat max_v, min_v;
  for (const auto& [w, mult] : wts.entries) {
    Rat p = pair(w, lam);
    if (!max_w || p > max_v || (p == max_v && lex_less(w, *max_w))) {
      max_w = &w;
      max_v = p;
    }
    if (!min_w || p < min_v || (p == min_v && lex_less(w, *min_w))) {
      min_w = &w;
      min_v = p;
    }
  }
  if (max_v > 1 || min_v < -1) {
    bool use_max = abs(max_v) >= abs(min_v);
    Witness w{Witness::Kind::NotSemifree, lam, use_max ? *max_w : *min_w, std::nullopt,
              use_max ? max_v : min_v,
              "representation weight pairs beyond 1 against lambda"};
    return w;
  }
  return build_reversor(rs, lam);
}

AnalysisResult subalgebra_analysis(const RootSystem& rs, const Vec& lam, const RootSubset& sub) {
  if (lam.is_zero()) throw Error(ErrorCode::ZeroCocharacter, "lambda = 0");
  if (!rs.lattices().coroot.contains(lam))
    throw Error(ErrorCode::PreconditionViolated, "lambda not in the coroot lattice");
  for (size_t i = 0; i < sub.members.size(); ++i)
    for (size_t j = i; j < sub.members.size(); ++j) {
      Vec s = sub.members[i] + sub.members[j];
      if (rs.is_root(s) && !sub.contains(s))
        throw Error(ErrorCode::PreconditionViolated,
                    "not additively closed: missing (" + coord_str(s) + ")");
    }
  for (const Root& r : rs.roots()) {
    Rat p = pair(r.vector, lam);
    if (abs(p) > 1 && !sub.contains(r.vector))
      throw Error(ErrorCode::PreconditionViolated, "missing root (" + coord_str(r.vector) +
                                                       ") with pairing " + rat_str(p));
  }

  auto [lam_dom, u] = rs.dominant_rep(lam);
  const Vec& delta = rs.highest_root().vector;
  Rat dp = pair(lam_dom, delta);
  if (dp <= 2) {
    OrthogonalDecomposition dec = decompose_orthogonal(rs, lam_dom);
    WeylWord uinv = u.inverse();
    WeylWord w = WeylWord::identity(rs.model());
    for (const OrthTerm& t : dec.terms) {
      Vec r = uinv.apply(t.root.vector);
      // pairs to 2 with lambda, hence lies in the subalgebra root set
      if (!sub.contains(r))
        throw Error(ErrorCode::Internal, "decomposition root escaped the subalgebra set");
      w.push_reflection(r);
    }
    if (!(w.apply(lam) == -lam)) throw Error(ErrorCode::Internal, "reversor check failed");
    return w;
  }

  // (lambda_dom, delta) > 2: transporting the set to the dominant frame and
  // adding +-delta and the forced halves of every splitting of delta closes
  // to all of Delta, so no proper additively closed set qualifies.
  std::vector<Vec> seed;
  for (const Vec& v : sub.members) {
    Vec t = u.apply(v);
    if (!rs.is_root(t)) throw Error(ErrorCode::Internal, "transported root left Delta");
    seed.push_back(t);
  }
  seed.push_back(delta);
  seed.push_back(-delta);
  size_t forced = 0;
  for (const Root& r : rs.roots()) {
    if (!rs.is_root(delta - r.vector)) continue;  // eta + eta' = delta splittings
    if (abs(pair(r.vector, lam_dom)) > 1) {
      seed.push_back(r.vector);
      seed.push_back(-r.vector);
      ++forced;
    }
  }
  RootSubset closure = additive_closure(rs, RootSubset::of(rs, std::move(seed)));
  if (closure.size() != rs.roots().size())
    throw Error(ErrorCode::Internal, "forced closure did not reach all roots");
  Witness w{Witness::Kind::Fullness, lam, delta, std::nullopt, dp,
            "closure of the set with +-delta and " + std::to_string(forced) +
                " forced splitting halves is all of Delta"};
  return w;
}

AnalysisResult twofold_analysis(const RootSystem& rs, const Vec& lam, const RootSubset& lh) {
  if (lam.is_zero()) throw Error(ErrorCode::ZeroCocharacter, "lambda = 0");
  if (lh.size() == rs.roots().size())
    throw Error(ErrorCode::NotProper, "L_H is all of Delta");
  if (!rs.lattices().cochar.contains(lam))
    throw Error(ErrorCode::PreconditionViolated, "lambda not in the cocharacter lattice");

  auto [lam_dom, u] = rs.dominant_rep(lam);
  const Vec& delta = rs.highest_root().vector;
  Rat dp = pair(lam_dom, delta);
  if (dp <= 2 && rs.lattices().coroot.contains(lam_dom)) return build_reversor(rs, lam);
  if (rs.dominant_rep(-lam).first == lam_dom) return build_reversor(rs, lam);

  if (dp > 2) {
    // No orbit reversor, so -id is not in W and delta is the unique dominant
    // root: some root outside L_H is Weyl-conjugate to delta, giving a fixed
    // point whose weight pairs beyond 2.
    const Vec* eta = nullptr;
    for (const Root& r : rs.roots())
      if (!lh.contains(r.vector)) {
        eta = &r.vector;
        break;
      }
    auto [dom, sigma] = rs.dominant_rep(*eta);
    if (!(dom == delta))
      throw Error(ErrorCode::Internal, "dominant representative of a root is not delta");
    Witness w{Witness::Kind::IsotropyViolation, lam, *eta, sigma, dp,
              "sigma carries a root outside L_H onto delta while (delta, lambda_dom) > 2"};
    return w;
  }
  throw Error(ErrorCode::NoReversor,
              "lambda is outside the coroot lattice with (lambda_dom, delta) <= 2 and -lambda "
              "is not in its Weyl orbit");
}

}  // namespace liecert
