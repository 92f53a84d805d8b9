#pragma once

#include <optional>
#include <vector>

#include "liecert/cartan_model.hpp"
#include "liecert/matrix.hpp"

namespace liecert {

/// Full-rank-in-its-span lattice over a Cartan model, stored canonically:
/// the basis is the Hermite normal form of the scaled integer lattice divided
/// back by the scale, so equal lattices have identical stored bases.
class Lattice {
public:
  /// Integer span of the generators. Throws EmptyGenerators on an empty list,
  /// Internal when a generator does not lie in the model.
  static Lattice from_generators(const std::vector<Vec>& gens);

  const ModelPtr& model() const { return model_; }
  const std::vector<Vec>& basis() const { return basis_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  /// Smallest positive integer clearing all denominators of the lattice.
  const Int& scale() const { return scale_; }

  /// Rational coordinates of v in the basis, or nullopt when v is outside
  /// the span.
  std::optional<std::vector<Rat>> coords_in_span(const Vec& v) const;

  /// Exact membership. Throws NotInSpan when v is outside the span.
  bool contains(const Vec& v) const;

  /// {v in span : <v, w> integral for all w in the lattice}, using the model
  /// form. Throws DegenerateForm when the form is degenerate on the span.
  Lattice dual() const;

  bool subset_of(const Lattice& o) const;

  /// Canonical-basis equality.
  bool operator==(const Lattice& o) const;

  Lattice() = default;

private:
  ModelPtr model_;
  std::vector<Vec> basis_;
  Int scale_ = 1;
};

/// sup/sub for sub a finite-index sublattice of sup. Invariant factors are the
/// SNF diagonal entries > 1; coset representatives are enumerated by digit
/// expansion in the SNF-adapted basis and reduced into sub's fundamental
/// parallelepiped.
struct FiniteAbelianGroup {
  std::vector<Int> invariant_factors;  // each >= 2, each divides the next
  std::vector<Vec> generators;         // one coset generator per invariant factor
  std::vector<Vec> coset_reps;         // all cosets, zero vector first

  Lattice sub;
  Lattice sup;
  std::vector<Int> all_factors;   // full SNF diagonal (including 1s)
  std::vector<Vec> adapted_sup_basis;  // rows s_i with sub spanned by d_i * s_i

  Int order() const;
  /// Digits of v's coset, one per invariant factor. Throws NotInSpan / NotSublattice
  /// when v is not in sup.
  std::vector<Int> coset_digits(const Vec& v) const;
  /// Reduce v into sub's fundamental parallelepiped (v minus floors).
  Vec reduce_mod_sub(const Vec& v) const;
};

/// Throws NotSublattice when sub is not a finite-index sublattice of sup.
FiniteAbelianGroup finite_quotient(const Lattice& sub, const Lattice& sup);

/// {v in the model space : f(v) in Z for every functional f}, where each
/// functional is given by its ambient coefficient row (evaluated by the plain
/// coordinate dot product, not the model form). The functionals must pin the
/// model space down to a lattice.
Lattice preimage_lattice(const ModelPtr& model, const std::vector<std::vector<Rat>>& functionals);

}  // namespace liecert
