#include "liecert/lattice.hpp"

#include <algorithm>

namespace liecert {

Lattice Lattice::from_generators(const std::vector<Vec>& gens) {
  if (gens.empty()) throw Error(ErrorCode::EmptyGenerators, "no generators given");
  const ModelPtr& model = gens.front().model;
  for (const Vec& g : gens)
    if (!g.model || !g.model->compatible(*model))
      throw Error(ErrorCode::Internal, "generators from incompatible models");

  Int scale = 1;
  for (const Vec& g : gens)
    for (const Rat& x : g.c) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den().get_mpz_t());

  int k = model->ambient_dim();
  IntMatrix m(static_cast<int>(gens.size()), k);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < k; ++j) {
      Rat scaled = gens[static_cast<size_t>(i)].c[j] * Rat(scale);
      if (!is_integer(scaled)) throw Error(ErrorCode::Internal, "scale failed to clear denominators");
      m.at(i, j) = scaled.get_num();
    }

  IntMatrix h = hnf(m).h;
  Lattice out;
  out.model_ = model;
  // The intrinsic scale of the lattice equals the lcm of the denominators of
  // any generating set, so dividing the HNF rows back by it is canonical.
  out.scale_ = scale;
  for (int i = 0; i < h.rows; ++i) {
    bool zero = true;
    for (int j = 0; j < k; ++j)
      if (h.at(i, j) != 0) { zero = false; break; }
    if (zero) continue;
    std::vector<Rat> row(k);
    for (int j = 0; j < k; ++j) row[j] = make_rat(h.at(i, j), scale);
    out.basis_.push_back(Vec(model, std::move(row)));
  }
  // Re-derive the stored scale from the reduced basis (equal by intrinsicness;
  // asserting keeps the canonical-form invariant honest).
  Int check = 1;
  for (const Vec& b : out.basis_)
    for (const Rat& x : b.c) mpz_lcm(check.get_mpz_t(), check.get_mpz_t(), x.get_den().get_mpz_t());
  if (!out.basis_.empty() && check != scale)
    throw Error(ErrorCode::Internal, "canonical scale mismatch");
  if (out.basis_.empty()) out.scale_ = 1;
  return out;
}

std::optional<std::vector<Rat>> Lattice::coords_in_span(const Vec& v) const {
  if (!v.model || !v.model->compatible(*model_))
    throw Error(ErrorCode::Internal, "vector from incompatible model");
  int k = model_->ambient_dim();
  int r = rank();
  // Solve B^T x = v for x (B rows are the basis).
  RatMatrix bt(k, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < k; ++j) bt.at(j, i) = basis_[static_cast<size_t>(i)].c[j];
  return solve_linear(bt, v.c);
}

bool Lattice::contains(const Vec& v) const {
  auto x = coords_in_span(v);
  if (!x) throw Error(ErrorCode::NotInSpan, "vector outside the lattice span");
  for (const Rat& xi : *x)
    if (!is_integer(xi)) return false;
  return true;
}

Lattice Lattice::dual() const {
  int r = rank();
  if (r == 0) return *this;  // dual of {0} within its span is {0}
  RatMatrix gram(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) gram.at(i, j) = pair(basis_[i], basis_[j]);
  auto inv = gram.inverse();
  if (!inv) throw Error(ErrorCode::DegenerateForm, "form degenerate on the lattice span");
  // Rows of gram^{-1} * B are the dual basis within span(B).
  std::vector<Vec> dual_rows;
  int k = model_->ambient_dim();
  for (int i = 0; i < r; ++i) {
    std::vector<Rat> row(k, Rat(0));
    for (int j = 0; j < r; ++j) {
      const Rat& f = inv->at(i, j);
      if (f == 0) continue;
      for (int t = 0; t < k; ++t) row[t] += f * basis_[j].c[t];
    }
    dual_rows.push_back(Vec(model_, std::move(row)));
  }
  return from_generators(dual_rows);
}

bool Lattice::subset_of(const Lattice& o) const {
  for (const Vec& b : basis_) {
    auto x = o.coords_in_span(b);
    if (!x) return false;
    for (const Rat& xi : *x)
      if (!is_integer(xi)) return false;
  }
  return true;
}

bool Lattice::operator==(const Lattice& o) const {
  return model_->compatible(*o.model_) && basis_.size() == o.basis_.size() &&
         std::equal(basis_.begin(), basis_.end(), o.basis_.begin(),
                    [](const Vec& a, const Vec& b) { return a.c == b.c; });
}

Int FiniteAbelianGroup::order() const {
  Int n = 1;
  for (const Int& f : invariant_factors) n *= f;
  return n;
}

std::vector<Int> FiniteAbelianGroup::coset_digits(const Vec& v) const {
  auto x = sup.coords_in_span(v);
  if (!x) throw Error(ErrorCode::NotInSpan, "vector outside the span");
  // Coordinates in the adapted basis: v = sum x_i b_i = sum y_i s_i with
  // s rows related to b rows by the unimodular change recorded below; we
  // solve against the adapted rows directly.
  int r = static_cast<int>(adapted_sup_basis.size());
  int k = sup.model()->ambient_dim();
  RatMatrix st(k, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < k; ++j) st.at(j, i) = adapted_sup_basis[static_cast<size_t>(i)].c[j];
  auto y = solve_linear(st, v.c);
  if (!y) throw Error(ErrorCode::NotInSpan, "vector outside the span");
  std::vector<Int> digits;
  for (int i = 0; i < r; ++i) {
    if (!is_integer((*y)[i]))
      throw Error(ErrorCode::NotSublattice, "vector not in the superlattice");
    if (all_factors[static_cast<size_t>(i)] > 1) {
      Int d;
      mpz_fdiv_r(d.get_mpz_t(), (*y)[i].get_num().get_mpz_t(),
                 all_factors[static_cast<size_t>(i)].get_mpz_t());
      digits.push_back(d);
    }
  }
  return digits;
}

Vec FiniteAbelianGroup::reduce_mod_sub(const Vec& v) const {
  auto x = sub.coords_in_span(v);
  if (!x) throw Error(ErrorCode::NotInSpan, "vector outside the span");
  Vec out = v;
  for (size_t i = 0; i < x->size(); ++i) {
    Int f = floor_rat((*x)[i]);
    if (f != 0) out = out - sub.basis()[i] * Rat(f);
  }
  return out;
}

FiniteAbelianGroup finite_quotient(const Lattice& sub, const Lattice& sup) {
  if (sub.rank() != sup.rank())
    throw Error(ErrorCode::NotSublattice, "sublattice does not span the superlattice's space");
  int r = sub.rank();
  IntMatrix m(r, r);
  for (int i = 0; i < r; ++i) {
    auto x = sup.coords_in_span(sub.basis()[i]);
    if (!x) throw Error(ErrorCode::NotSublattice, "sublattice basis outside the span");
    for (int j = 0; j < r; ++j) {
      if (!is_integer((*x)[j]))
        throw Error(ErrorCode::NotSublattice, "sublattice not contained in the superlattice");
      m.at(i, j) = (*x)[j].get_num();
    }
  }
  SnfResult sn = snf(m);

  FiniteAbelianGroup g;
  g.sub = sub;
  g.sup = sup;
  for (int i = 0; i < r; ++i) {
    g.all_factors.push_back(sn.s.at(i, i));
    if (sn.s.at(i, i) == 0)
      throw Error(ErrorCode::NotSublattice, "quotient is infinite");
  }

  // sub = U*M*V-adapted: with S'' = V^{-1} * (sup basis), sub is spanned by
  // d_i * S''_i, so the S'' rows generate the cyclic summands.
  RatMatrix vr = RatMatrix::from_int(sn.v);
  auto vinv = vr.inverse();
  if (!vinv) throw Error(ErrorCode::Internal, "unimodular matrix not invertible");
  int k = sup.model()->ambient_dim();
  for (int i = 0; i < r; ++i) {
    std::vector<Rat> row(k, Rat(0));
    for (int j = 0; j < r; ++j) {
      const Rat& f = vinv->at(i, j);
      if (f == 0) continue;
      if (!is_integer(f)) throw Error(ErrorCode::Internal, "V^{-1} not integral");
      for (int t = 0; t < k; ++t) row[t] += f * sup.basis()[j].c[t];
    }
    g.adapted_sup_basis.push_back(Vec(sup.model(), std::move(row)));
  }

  std::vector<int> live;  // positions with factor > 1
  for (int i = 0; i < r; ++i)
    if (g.all_factors[static_cast<size_t>(i)] > 1) {
      live.push_back(i);
      g.invariant_factors.push_back(g.all_factors[static_cast<size_t>(i)]);
      g.generators.push_back(g.adapted_sup_basis[static_cast<size_t>(i)]);
    }

  // Digit odometer, last factor fastest; zero vector first.
  std::vector<Int> digits(live.size(), Int(0));
  while (true) {
    Vec rep = Vec::zero(sup.model());
    for (size_t i = 0; i < live.size(); ++i)
      if (digits[i] != 0) rep = rep + g.adapted_sup_basis[static_cast<size_t>(live[i])] * Rat(digits[i]);
    g.coset_reps.push_back(g.reduce_mod_sub(rep));
    int pos = static_cast<int>(live.size()) - 1;
    while (pos >= 0) {
      digits[static_cast<size_t>(pos)] += 1;
      if (digits[static_cast<size_t>(pos)] < g.invariant_factors[static_cast<size_t>(pos)]) break;
      digits[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return g;
}

Lattice preimage_lattice(const ModelPtr& model, const std::vector<std::vector<Rat>>& functionals) {
  std::vector<Vec> p = space_basis(model);
  int r = static_cast<int>(p.size());
  int mrows = static_cast<int>(functionals.size());
  if (mrows == 0) throw Error(ErrorCode::EmptyGenerators, "no functionals given");

  // Q = F * P^T: functional j evaluated on basis vector i.
  auto aux = std::make_shared<CartanModel>("aux R^" + std::to_string(r), r, -1,
                                           std::vector<Rat>(static_cast<size_t>(r), Rat(1)));
  std::vector<Vec> qrows;
  for (int j = 0; j < mrows; ++j) {
    if (static_cast<int>(functionals[static_cast<size_t>(j)].size()) != model->ambient_dim())
      throw Error(ErrorCode::Internal, "functional has wrong arity");
    std::vector<Rat> q(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) {
      Rat acc = 0;
      for (int t = 0; t < model->ambient_dim(); ++t)
        acc += functionals[static_cast<size_t>(j)][static_cast<size_t>(t)] * p[static_cast<size_t>(i)].c[static_cast<size_t>(t)];
      q[static_cast<size_t>(i)] = acc;
    }
    qrows.push_back(Vec(aux, std::move(q)));
  }
  Lattice lq = Lattice::from_generators(qrows);
  if (lq.rank() != r)
    throw Error(ErrorCode::DegenerateForm,
                "functionals do not pin the space down to a lattice");
  Lattice x = lq.dual();  // {x : q.x integral for all q}

  std::vector<Vec> gens;
  for (const Vec& xb : x.basis()) {
    std::vector<Rat> v(static_cast<size_t>(model->ambient_dim()), Rat(0));
    for (int i = 0; i < r; ++i) {
      const Rat& f = xb.c[static_cast<size_t>(i)];
      if (f == 0) continue;
      for (int t = 0; t < model->ambient_dim(); ++t)
        v[static_cast<size_t>(t)] += f * p[static_cast<size_t>(i)].c[static_cast<size_t>(t)];
    }
    gens.push_back(Vec(model, std::move(v)));
  }
  return Lattice::from_generators(gens);
}

}  // namespace liecert
