#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "liecert/cochar.hpp"

namespace liecert {

/// lambda = sum a_i eta_i with pairwise orthogonal roots eta_i and
/// <lambda, eta_i> = a_i <eta_i, eta_i> = 2 (so a_i eta_i is the coroot).
struct OrthTerm {
  Rat coeff;
  Root root;
};
struct OrthogonalDecomposition {
  Vec lambda;
  std::vector<OrthTerm> terms;
  /// Rechecks every defining identity; throws Internal on any violation.
  void verify(const RootSystem& rs) const;
};

/// Backtracking over the roots pairing exactly 2 with lambda, chosen pairwise
/// orthogonal in lexicographic order; the first complete solution wins.
/// Requires lambda dominant, nonzero, in the coroot lattice, <lambda,delta> <= 2.
OrthogonalDecomposition decompose_orthogonal(const RootSystem& rs, const Vec& lam);

/// A subset of the roots, stored sorted.
struct RootSubset {
  std::vector<Vec> members;

  /// Validates membership in Delta and sorts. Throws NotARoot.
  static RootSubset of(const RootSystem& rs, std::vector<Vec> vecs);
  bool contains(const Vec& v) const;
  size_t size() const { return members.size(); }
};

/// Least superset closed under addition of pairs whose sum is again a root.
RootSubset additive_closure(const RootSystem& rs, const RootSubset& seed);

/// Closure of the seed {eta : delta + eta or delta - eta is a root}.
RootSubset closure_from_seed(const RootSystem& rs);

/// closure_from_seed covers all roots. Throws Inapplicable for rank 1, where
/// the seed is empty.
bool verify_claim_b(const RootSystem& rs);

/// Finite reduction of the universally quantified claim: for dominant lambda,
/// max over the orbit of |<sigma alpha, lambda>| equals
/// max(<alpha_dom, lambda>, <(-alpha)_dom, lambda>), and every nonzero
/// dominant weight coefficient-dominates a fundamental weight, so the claim
/// holds for every nonzero weight iff every fundamental weight clears 1 on
/// one of its two orbit sides.
struct ClaimCResult {
  Rat min_pairing;  // min over i of max(<w_i, lambda>, <w_i^*, lambda>)
  struct Entry {
    Vec weight;        // fundamental weight w_i
    Rat pairing;       // <w_i, lambda>
    Vec dual_weight;   // w_i^* = dominant_rep(-w_i)
    Rat dual_pairing;  // <w_i^*, lambda>
    WeylWord sigma;    // witness: |<sigma(w_i), lambda>| = max of the two
    Rat achieved;      // <sigma(w_i), lambda> (signed)
  };
  std::vector<Entry> entries;
  bool holds() const { return min_pairing > 1; }
};
/// Requires lambda in the coroot lattice, dominant, <lambda,delta> > 2, and
/// -id not in W; throws Inapplicable otherwise.
ClaimCResult claim_c_check(const RootSystem& rs, const Vec& lam);

struct ClaimDResult {
  bool only_delta;
  std::vector<Vec> dominant_roots;  // lexicographic order
};
ClaimDResult verify_claim_d(const RootSystem& rs);

/// Word w with w(lambda) = -lambda. Path 1: conjugated product of the
/// commuting reflections of the orthogonal decomposition (when the dominant
/// representative lies in the coroot lattice with highest pairing <= 2).
/// Path 2: composite of the two domination words (whenever -lambda lies in the
/// orbit, in particular whenever -id is in W). Throws NoReversor with the
/// orbit obstruction otherwise, ZeroCocharacter for lambda = 0.
WeylWord build_reversor(const RootSystem& rs, const Vec& lam);

struct Witness {
  enum class Kind { NotSemifree, IsotropyViolation, Fullness, ClaimCViolator };
  Kind kind;
  Vec lambda;
  std::optional<Vec> offender;   // offending weight or root
  std::optional<WeylWord> word;  // sigma, where one takes part
  Rat pairing;
  std::string details;

  /// Recomputes the recorded pairing (and word action) exactly.
  bool reverify(const RootSystem& rs) const;
};
const char* witness_kind_name(Witness::Kind k);

struct WeightMultiset {
  std::vector<std::pair<Vec, long>> entries;  // (weight, multiplicity)
};

using AnalysisResult = std::variant<WeylWord, Witness>;

/// Weights of a nontrivial representation: a NotSemifree witness when some
/// weight pairs beyond 1 in absolute value, else a reversor word.
AnalysisResult semifree_rep_analysis(const RootSystem& rs, const Vec& lam,
                                     const WeightMultiset& wts);

/// L = roots of a subalgebra containing the circle: requires L additively
/// closed and containing every root pairing beyond 1. Returns a reversor
/// whose reflection roots lie in L when <lambda_dom, delta> <= 2, else a
/// Fullness witness (the forced closure is all of Delta, so L was not proper).
AnalysisResult subalgebra_analysis(const RootSystem& rs, const Vec& lam, const RootSubset& L);

/// L_H = roots of a proper subgroup containing the maximal torus. Returns a
/// reversor when one exists, else an IsotropyViolation witness carrying a
/// Weyl translate of a root outside L_H onto delta with pairing > 2.
AnalysisResult twofold_analysis(const RootSystem& rs, const Vec& lam, const RootSubset& lh);

}  // namespace liecert
