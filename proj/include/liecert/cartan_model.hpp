#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "liecert/rational.hpp"

namespace liecert {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
  Family family;
  int rank;

  // Throws UnsupportedRank when the rank is outside the family's range
  // (A: >=1, B: >=2, C: >=3, D: >=4, E: 6..8, F: 4, G: 2).
  void validate() const;

  // "D5" etc. Throws UsageError on malformed input, UnsupportedRank on range.
  static SimpleType parse(const std::string& s);

  std::string name() const;

  auto operator<=>(const SimpleType&) const = default;
};

/// Coordinate model of ft = ft*. Plain Euclidean coordinates for B/C/D/F,
/// a sum-zero hyperplane for A/E7/E8/G2, and for E6 the structured pair
/// (n, xi) stored as 7 coordinates with form <(n,xi),(m,zeta)> = nm/2 + xi.zeta
/// (the epsilon axis carries weight 1/2, so sqrt(3) never appears).
class CartanModel {
public:
  CartanModel(std::string tag, int ambient_dim, int sum_zero_from, std::vector<Rat> form_diag);

  static std::shared_ptr<const CartanModel> for_type(SimpleType t);

  const std::string& tag() const { return tag_; }
  int ambient_dim() const { return ambient_dim_; }
  // Dimension of the modeled space (= rank of the type).
  int dim() const { return sum_zero_from_ >= 0 ? ambient_dim_ - 1 : ambient_dim_; }
  bool sum_zero() const { return sum_zero_from_ >= 0; }
  int sum_zero_from() const { return sum_zero_from_; }
  bool has_epsilon_axis() const { return sum_zero_from_ == 1; }
  const Rat& form_entry(int i) const { return form_diag_[i]; }

  bool admits(const std::vector<Rat>& coords) const;
  bool compatible(const CartanModel& o) const;

private:
  std::string tag_;
  int ambient_dim_;
  int sum_zero_from_;  // -1: unconstrained; k >= 0: coords [k..) sum to zero
  std::vector<Rat> form_diag_;
};

using ModelPtr = std::shared_ptr<const CartanModel>;

/// Element of a model (a point of ft = ft*), always validated on construction.
struct Vec {
  ModelPtr model;
  std::vector<Rat> c;

  Vec() = default;
  Vec(ModelPtr m, std::vector<Rat> coords);

  static Vec zero(const ModelPtr& m);

  bool is_zero() const;
  int size() const { return static_cast<int>(c.size()); }

  Vec operator+(const Vec& o) const;
  Vec operator-(const Vec& o) const;
  Vec operator-() const;
  Vec operator*(const Rat& s) const;

  bool operator==(const Vec& o) const { return c == o.c; }
  bool operator!=(const Vec& o) const { return c != o.c; }
};

/// Lexicographic order on coordinates; ties broken nowhere (total on equal models).
bool lex_less(const Vec& a, const Vec& b);
struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const { return lex_less(a, b); }
};

/// The model's bilinear form.
Rat pair(const Vec& a, const Vec& b);

Rat norm_sq(const Vec& a);

/// "1,0,-1" (or "n;x1,...,x6" for the structured E6 model).
std::string coord_str(const Vec& v);

/// Basis of the modeled subspace, as rows. For sum-zero models these are
/// consecutive differences; for E6 the epsilon axis plus differences.
std::vector<Vec> space_basis(const ModelPtr& m);

}  // namespace liecert
