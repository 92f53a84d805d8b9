#pragma once

#include <utility>
#include <vector>

#include "liecert/lattice.hpp"

namespace liecert {

struct Root {
  Vec vector;
  Rat norm_sq;
};

/// Word in root reflections together with its exact linear action.
/// Letters are listed in application order (letters[0] acts first), so the
/// induced matrix is the product refl(letters[m-1]) * ... * refl(letters[0]).
struct WeylWord {
  ModelPtr model;
  std::vector<Vec> letters;

  static WeylWord identity(const ModelPtr& m);
  /// Applies the reflection in `root` after the current word.
  void push_reflection(const Vec& root);
  Vec apply(const Vec& v) const;
  /// The composed product of the letters' reflections.
  RatMatrix matrix() const;
  WeylWord inverse() const;
  int length() const { return static_cast<int>(letters.size()); }
};

/// first, then second.
WeylWord compose(const WeylWord& first, const WeylWord& second);

/// Reflection w_eta as an exact matrix on ambient coordinates.
RatMatrix reflection_matrix(const ModelPtr& m, const Vec& eta);

/// The four lattices attached to a root system: the Z-span of the roots, the
/// coroot lattice, its dual the weight lattice, and the cocharacter lattice
/// dual to the root lattice.
struct LatticeFamily {
  Lattice root_lattice;
  Lattice coroot;
  Lattice cochar;
  Lattice weight;
};

class RootSystem {
public:
  /// Constructs the root system in the explicit per-type coordinates, checks
  /// the structural invariants (root count, chamber/simple-root cone
  /// equality, highest-root maximality), and builds the lattice family.
  static RootSystem build(SimpleType t);

  const SimpleType& type() const { return type_; }
  const ModelPtr& model() const { return model_; }
  int rank() const { return model_->dim(); }

  const std::vector<Root>& roots() const { return roots_; }
  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  const std::vector<Root>& simple_roots() const { return simple_roots_; }
  const Root& highest_root() const { return highest_root_; }
  const std::vector<Vec>& chamber_normals() const { return chamber_normals_; }
  /// Dual basis to the simple coroots, aligned with simple_roots().
  const std::vector<Vec>& fundamental_weights() const { return fundamental_weights_; }
  /// Half-sum of the positive roots (strictly dominant).
  const Vec& rho() const { return rho_; }
  /// Strictly dominant vector with pairwise-distinct fundamental-weight
  /// coefficients (fixed by no nontrivial chamber-preserving isometry).
  const Vec& regular_vector() const { return regular_vector_; }
  const LatticeFamily& lattices() const { return lattices_; }
  /// For each fundamental weight w_i: (dominant_rep(-w_i), the word sending
  /// -w_i there), aligned with fundamental_weights().
  const std::vector<std::pair<Vec, WeylWord>>& dual_weight_dominations() const {
    return dual_weight_dominations_;
  }

  bool is_root(const Vec& v) const;
  /// Index into roots(), or -1.
  int root_index(const Vec& v) const;
  const Root& root_at(const Vec& v) const;  // throws NotARoot

  Vec coroot(const Root& r) const { return r.vector * (Rat(2) / r.norm_sq); }

  bool is_dominant(const Vec& v) const;

  /// w_eta(v) = v - (2<eta,v>/<eta,eta>) eta. Throws NotARoot when eta is not
  /// a root.
  Vec reflect(const Vec& eta, const Vec& v) const;

  /// Unique dominant element of the Weyl orbit, with a word sending v to it.
  std::pair<Vec, WeylWord> dominant_rep(const Vec& v) const;

  /// Closure of {v} under the simple reflections, sorted lexicographically.
  /// Throws OrbitCapExceeded past `cap` elements.
  std::vector<Vec> weyl_orbit(const Vec& v, size_t cap = 10'000'000) const;

  bool minus_id_in_weyl() const { return minus_id_; }

  /// Closed-form |Delta| for the type.
  size_t expected_root_count() const;

private:
  RootSystem() = default;
  Vec reflect_nocheck(const Root& eta, const Vec& v) const;

  SimpleType type_{};
  ModelPtr model_;
  std::vector<Root> roots_;
  std::vector<Root> positive_roots_;
  std::vector<Root> simple_roots_;
  std::vector<Vec> chamber_normals_;
  std::vector<Vec> fundamental_weights_;
  Root highest_root_;
  Vec rho_;
  Vec regular_vector_;
  bool minus_id_ = false;
  LatticeFamily lattices_;
  std::vector<std::pair<Vec, WeylWord>> dual_weight_dominations_;
};

}  // namespace liecert
