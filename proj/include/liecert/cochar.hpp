#pragma once

#include <string>

#include "liecert/root_system.hpp"

namespace liecert {

const LatticeFamily& lattice_family(const RootSystem& rs);

/// Maximum of |<eta, lam>| over the roots, with the lexicographically first
/// root attaining the max of the signed pairing (the two maxima agree since
/// Delta = -Delta).
struct PairingCert {
  Rat max_abs;
  Vec maximizer;
};
PairingCert max_abs_root_pairing(const RootSystem& rs, const Vec& lam);

/// |<eta, lam>| <= 1 for every root eta.
bool is_semifree(const RootSystem& rs, const Vec& lam);

/// The per-type representative lists of the fundamental-group cosets,
/// rank-parametric, embedded as data.
std::vector<Vec> classical_pi1_representatives(const RootSystem& rs);

struct TransversalEntry {
  std::vector<Int> coset;  // digits in the quotient group
  Vec lambda;
  Rat max_pairing;
  Vec maximizing_root;
  bool listed_rep = true;   // false when the bounded fallback search replaced it
  Vec small_norm_witness;  // minimum norm over lambda + (coroot basis box +-1)
  Rat small_norm;
};

struct Pi1Table {
  FiniteAbelianGroup group;
  std::vector<Vec> classical_reps;
  std::vector<TransversalEntry> reps;
};

/// Quotient cochar/coroot plus the classical representative list, verified to be a
/// transversal (pairwise non-congruent, one per coset).
Pi1Table fundamental_group(const RootSystem& rs);

/// fundamental_group plus a semifree certificate per coset; when a listed
/// representative is not semifree a bounded coset search substitutes one, and
/// TransversalIncomplete is thrown when none exists within the search box.
Pi1Table semifree_transversal(const RootSystem& rs);

/// Compares the computed lattice family against the classical closed-form
/// membership descriptions, materialized independently from the case texts'
/// integrality functionals. Failures are report entries, not exceptions.
struct LatticeFormReport {
  struct Entry {
    std::string name;
    bool pass;
    std::string detail;
  };
  std::vector<Entry> entries;
  bool all_pass() const;
};
LatticeFormReport verify_lattice_forms(const RootSystem& rs);

}  // namespace liecert
