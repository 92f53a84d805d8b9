#include "liecert/root_system.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace liecert {

WeylWord WeylWord::identity(const ModelPtr& m) {
  WeylWord w;
  w.model = m;
  return w;
}

RatMatrix reflection_matrix(const ModelPtr& m, const Vec& eta) {
  int k = m->ambient_dim();
  Rat n2 = norm_sq(eta);
  RatMatrix r = RatMatrix::identity(k);
  // R_ij = delta_ij - (2/<eta,eta>) eta_i g_j eta_j
  for (int i = 0; i < k; ++i) {
    if (eta.c[static_cast<size_t>(i)] == 0) continue;
    Rat f = Rat(2) / n2 * eta.c[static_cast<size_t>(i)];
    for (int j = 0; j < k; ++j)
      r.at(i, j) -= f * m->form_entry(j) * eta.c[static_cast<size_t>(j)];
  }
  return r;
}

void WeylWord::push_reflection(const Vec& root) { letters.push_back(root); }

Vec WeylWord::apply(const Vec& v) const {
  Vec cur = v;
  for (const Vec& l : letters) {
    Rat f = Rat(2) * pair(l, cur) / norm_sq(l);
    cur = cur - l * f;
  }
  return cur;
}

RatMatrix WeylWord::matrix() const {
  RatMatrix m = RatMatrix::identity(model->ambient_dim());
  for (const Vec& l : letters) m = reflection_matrix(model, l) * m;
  return m;
}

WeylWord WeylWord::inverse() const {
  WeylWord w = WeylWord::identity(model);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.push_reflection(*it);
  return w;
}

WeylWord compose(const WeylWord& first, const WeylWord& second) {
  WeylWord w;
  w.model = first.model;
  w.letters = first.letters;
  w.letters.insert(w.letters.end(), second.letters.begin(), second.letters.end());
  return w;
}

namespace {

std::vector<Rat> zero_coords(int n) { return std::vector<Rat>(static_cast<size_t>(n), Rat(0)); }

// Subsets of {from..to-1} of the given size, in lexicographic order.
std::vector<std::vector<int>> subsets(int from, int to, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < to; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(from);
  return out;
}

std::vector<Vec> generate_roots(SimpleType t, const ModelPtr& m) {
  std::vector<Vec> out;
  int k = m->ambient_dim();
  auto mk = [&](std::vector<Rat> c) { out.push_back(Vec(m, std::move(c))); };

  switch (t.family) {
    case Family::A: {
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          if (i == j) continue;
          auto c = zero_coords(k);
          c[static_cast<size_t>(i)] = 1;
          c[static_cast<size_t>(j)] = -1;
          mk(std::move(c));
        }
      break;
    }
    case Family::B:
    case Family::C:
    case Family::D:
    case Family::F: {
      int n = t.rank;
      bool shorts = (t.family == Family::B || t.family == Family::F);
      bool longs = (t.family == Family::C);
      if (shorts || longs)
        for (int i = 0; i < n; ++i)
          for (int s : {1, -1}) {
            auto c = zero_coords(n);
            c[static_cast<size_t>(i)] = Rat(longs ? 2 * s : s);
            mk(std::move(c));
          }
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1}) {
              auto c = zero_coords(n);
              c[static_cast<size_t>(i)] = si;
              c[static_cast<size_t>(j)] = sj;
              mk(std::move(c));
            }
      if (t.family == Family::F)
        for (int mask = 0; mask < 16; ++mask) {
          auto c = zero_coords(4);
          for (int i = 0; i < 4; ++i)
            c[static_cast<size_t>(i)] = make_rat((mask >> i) & 1 ? 1 : -1, 2);
          mk(std::move(c));
        }
      break;
    }
    case Family::E: {
      if (t.rank == 6) {
        // (n, xi) coordinates; coordinate 0 is the epsilon axis.
        {
          auto c = zero_coords(7);
          c[0] = 2;
          mk(std::move(c));
          c = zero_coords(7);
          c[0] = -2;
          mk(std::move(c));
        }
        for (int i = 1; i <= 6; ++i)
          for (int j = 1; j <= 6; ++j) {
            if (i == j) continue;
            auto c = zero_coords(7);
            c[static_cast<size_t>(i)] = 1;
            c[static_cast<size_t>(j)] = -1;
            mk(std::move(c));
          }
        for (const auto& s3 : subsets(1, 7, 3))
          for (int s : {1, -1}) {
            auto c = zero_coords(7);
            c[0] = s;
            for (int i = 1; i <= 6; ++i)
              c[static_cast<size_t>(i)] = make_rat(
                  std::find(s3.begin(), s3.end(), i) != s3.end() ? 1 : -1, 2);
            mk(std::move(c));
          }
      } else {
        // epsilon_i - epsilon_j = e_i - e_j, and subset sums of epsilons.
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            auto c = zero_coords(k);
            c[static_cast<size_t>(i)] = 1;
            c[static_cast<size_t>(j)] = -1;
            mk(std::move(c));
          }
        if (t.rank == 7) {
          for (const auto& s4 : subsets(0, 8, 4)) {
            auto c = zero_coords(8);
            for (int i = 0; i < 8; ++i)
              c[static_cast<size_t>(i)] = make_rat(
                  std::find(s4.begin(), s4.end(), i) != s4.end() ? 1 : -1, 2);
            mk(std::move(c));
          }
        } else {
          for (const auto& s3 : subsets(0, 9, 3))
            for (int s : {1, -1}) {
              auto c = zero_coords(9);
              for (int i = 0; i < 9; ++i) {
                bool in = std::find(s3.begin(), s3.end(), i) != s3.end();
                c[static_cast<size_t>(i)] = make_rat(s * (in ? 2 : -1), 3);
              }
              mk(std::move(c));
            }
        }
      }
      break;
    }
    case Family::G: {
      for (int i = 0; i < 3; ++i)
        for (int s : {1, -1}) {
          auto c = zero_coords(3);
          for (int j = 0; j < 3; ++j) c[static_cast<size_t>(j)] = make_rat(s * (i == j ? 2 : -1), 3);
          mk(std::move(c));
        }
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          if (i == j) continue;
          auto c = zero_coords(3);
          c[static_cast<size_t>(i)] = 1;
          c[static_cast<size_t>(j)] = -1;
          mk(std::move(c));
        }
      break;
    }
  }
  return out;
}

std::vector<Vec> chamber_for(SimpleType t, const ModelPtr& m) {
  std::vector<Vec> out;
  int k = m->ambient_dim();
  auto unit = [&](int i) {
    auto c = zero_coords(k);
    c[static_cast<size_t>(i)] = 1;
    return c;
  };
  auto diff = [&](int i, int j) {
    auto c = zero_coords(k);
    c[static_cast<size_t>(i)] = 1;
    c[static_cast<size_t>(j)] = -1;
    return Vec(m, std::move(c));
  };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < k; ++i) out.push_back(diff(i, i + 1));
      break;
    case Family::B:
    case Family::C:
      for (int i = 0; i + 1 < k; ++i) out.push_back(diff(i, i + 1));
      out.push_back(Vec(m, unit(k - 1)));
      break;
    case Family::D: {
      for (int i = 0; i + 1 < k; ++i) out.push_back(diff(i, i + 1));
      auto c = zero_coords(k);
      c[static_cast<size_t>(k - 2)] = 1;
      c[static_cast<size_t>(k - 1)] = 1;
      out.push_back(Vec(m, std::move(c)));
      break;
    }
    case Family::E: {
      if (t.rank == 6) {
        for (int i = 2; i <= 5; ++i) out.push_back(diff(i, i + 1));
        auto c = zero_coords(7);
        c[0] = -1;
        for (int i = 1; i <= 6; ++i)
          c[static_cast<size_t>(i)] = make_rat(i == 1 || i == 5 || i == 6 ? 1 : -1, 2);
        out.push_back(Vec(m, std::move(c)));
        c = zero_coords(7);
        c[0] = 2;
        out.push_back(Vec(m, std::move(c)));
      } else if (t.rank == 7) {
        for (int i = 1; i + 1 < 8; ++i) out.push_back(diff(i, i + 1));
        auto c = zero_coords(8);
        for (int i = 0; i < 8; ++i)
          c[static_cast<size_t>(i)] = make_rat(i == 0 || i >= 5 ? 1 : -1, 2);
        out.push_back(Vec(m, std::move(c)));
      } else {
        for (int i = 1; i + 1 < 9; ++i) out.push_back(diff(i, i + 1));
        auto c = zero_coords(9);
        for (int i = 0; i < 9; ++i)
          c[static_cast<size_t>(i)] = make_rat(i >= 1 && i <= 3 ? -2 : 1, 3);
        out.push_back(Vec(m, std::move(c)));
      }
      break;
    }
    case Family::F:
      out.push_back(diff(1, 2));
      out.push_back(diff(2, 3));
      out.push_back(Vec(m, unit(3)));
      {
        auto c = zero_coords(4);
        c[0] = 1;
        c[1] = -1;
        c[2] = -1;
        c[3] = -1;
        out.push_back(Vec(m, std::move(c)));
      }
      break;
    case Family::G: {
      auto c = zero_coords(3);
      c[0] = make_rat(1, 3);
      c[1] = make_rat(-2, 3);
      c[2] = make_rat(1, 3);
      out.push_back(Vec(m, std::move(c)));
      out.push_back(diff(1, 2));
      break;
    }
  }
  return out;
}

Vec highest_root_for(SimpleType t, const ModelPtr& m) {
  int k = m->ambient_dim();
  auto c = zero_coords(k);
  switch (t.family) {
    case Family::A:
      c[0] = 1;
      c[static_cast<size_t>(k - 1)] = -1;
      break;
    case Family::B:
    case Family::D:
    case Family::F:
      c[0] = 1;
      c[1] = 1;
      break;
    case Family::C:
      c[0] = 2;
      break;
    case Family::E:
      if (t.rank == 6) {
        c[1] = 1;
        c[6] = -1;
      } else {
        c[0] = 1;
        c[static_cast<size_t>(k - 1)] = -1;
      }
      break;
    case Family::G:
      c[0] = 1;
      c[2] = -1;
      break;
  }
  return Vec(m, std::move(c));
}

}  // namespace

size_t RootSystem::expected_root_count() const {
  size_t n = static_cast<size_t>(type_.rank);
  switch (type_.family) {
    case Family::A: return n * (n + 1);
    case Family::B:
    case Family::C: return 2 * n * n;
    case Family::D: return 2 * n * (n - 1);
    case Family::E: return n == 6 ? 72 : (n == 7 ? 126 : 240);
    case Family::F: return 48;
    case Family::G: return 12;
  }
  return 0;
}

bool RootSystem::is_root(const Vec& v) const { return root_index(v) >= 0; }

int RootSystem::root_index(const Vec& v) const {
  auto it = std::lower_bound(roots_.begin(), roots_.end(), v,
                             [](const Root& r, const Vec& x) { return lex_less(r.vector, x); });
  if (it == roots_.end() || !(it->vector == v)) return -1;
  return static_cast<int>(it - roots_.begin());
}

const Root& RootSystem::root_at(const Vec& v) const {
  int i = root_index(v);
  if (i < 0) throw Error(ErrorCode::NotARoot, "not a root: (" + coord_str(v) + ")");
  return roots_[static_cast<size_t>(i)];
}

bool RootSystem::is_dominant(const Vec& v) const {
  for (const Vec& nu : chamber_normals_)
    if (pair(nu, v) < 0) return false;
  return true;
}

Vec RootSystem::reflect_nocheck(const Root& eta, const Vec& v) const {
  Rat f = Rat(2) * pair(eta.vector, v) / eta.norm_sq;
  return v - eta.vector * f;
}

Vec RootSystem::reflect(const Vec& eta, const Vec& v) const {
  return reflect_nocheck(root_at(eta), v);
}

std::pair<Vec, WeylWord> RootSystem::dominant_rep(const Vec& v) const {
  Vec cur = v;
  WeylWord w = WeylWord::identity(model_);
  // Each step strictly increases the pairing with sum(fundamental weights),
  // and the orbit is finite, so this terminates.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Root& a : simple_roots_) {
      if (pair(cur, a.vector) < 0) {
        cur = reflect_nocheck(a, cur);
        w.push_reflection(a.vector);
        changed = true;
        break;
      }
    }
  }
  return {cur, w};
}

std::vector<Vec> RootSystem::weyl_orbit(const Vec& v, size_t cap) const {
  std::set<Vec, VecLess> seen;
  std::vector<Vec> frontier{v};
  seen.insert(v);
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const Vec& x : frontier)
      for (const Root& a : simple_roots_) {
        Vec y = reflect_nocheck(a, x);
        if (seen.insert(y).second) {
          if (seen.size() > cap)
            throw Error(ErrorCode::OrbitCapExceeded,
                        "orbit exceeds cap of " + std::to_string(cap));
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  return std::vector<Vec>(seen.begin(), seen.end());
}

RootSystem RootSystem::build(SimpleType t) {
  t.validate();
  RootSystem rs;
  rs.type_ = t;
  rs.model_ = CartanModel::for_type(t);

  std::vector<Vec> vecs = generate_roots(t, rs.model_);
  std::sort(vecs.begin(), vecs.end(), VecLess{});
  for (size_t i = 0; i + 1 < vecs.size(); ++i)
    if (vecs[i] == vecs[i + 1]) throw Error(ErrorCode::Internal, "duplicate root generated");
  for (const Vec& v : vecs) rs.roots_.push_back(Root{v, norm_sq(v)});
  if (rs.roots_.size() != rs.expected_root_count())
    throw Error(ErrorCode::Internal, "root count mismatch for " + t.name());

  rs.chamber_normals_ = chamber_for(t, rs.model_);
  if (static_cast<int>(rs.chamber_normals_.size()) != rs.rank())
    throw Error(ErrorCode::Internal, "chamber inequality count mismatch");

  // A root is positive iff it is nonnegative on the chamber, i.e. lies in the
  // simplicial cone spanned by the chamber normals. Exactly one of each pair
  // +-eta must qualify.
  {
    int r = rs.rank();
    int k = rs.model_->ambient_dim();
    RatMatrix normal_cols(k, r);
    for (int j = 0; j < r; ++j)
      for (int i = 0; i < k; ++i)
        normal_cols.at(i, j) = rs.chamber_normals_[static_cast<size_t>(j)].c[static_cast<size_t>(i)];
    auto chamber_nonneg = [&](const Vec& v) {
      auto y = solve_linear(normal_cols, v.c);
      if (!y) return false;
      for (const Rat& yi : *y)
        if (yi < 0) return false;
      return true;
    };
    for (const Root& root : rs.roots_) {
      bool plus = chamber_nonneg(root.vector);
      bool minus = chamber_nonneg(-root.vector);
      if (plus == minus)
        throw Error(ErrorCode::Internal, "chamber does not split the roots for " + t.name());
      if (plus) rs.positive_roots_.push_back(root);
    }
    if (rs.positive_roots_.size() * 2 != rs.roots_.size())
      throw Error(ErrorCode::Internal, "positivity does not split the roots in half");
  }

  // Simple roots: positive roots that are not the sum of two positive roots.
  std::vector<Vec> pos_vecs;
  for (const Root& r : rs.positive_roots_) pos_vecs.push_back(r.vector);
  auto is_positive = [&](const Vec& v) {
    return std::binary_search(pos_vecs.begin(), pos_vecs.end(), v, VecLess{});
  };
  for (const Root& r : rs.positive_roots_) {
    bool decomposable = false;
    for (const Root& a : rs.positive_roots_) {
      if (!lex_less(a.vector, r.vector)) continue;  // a + b = r needs both below r
      Vec b = r.vector - a.vector;
      if (is_positive(b)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) rs.simple_roots_.push_back(r);
  }
  if (static_cast<int>(rs.simple_roots_.size()) != rs.rank())
    throw Error(ErrorCode::Internal, "simple root count mismatch for " + t.name());

  // Fundamental weights: dual basis to the simple coroots within the model
  // space (Gram-inverse of the coroots applied to the coroot rows).
  {
    int r = rs.rank();
    std::vector<Vec> coroots;
    for (const Root& a : rs.simple_roots_) coroots.push_back(rs.coroot(a));
    RatMatrix gram(r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) gram.at(i, j) = pair(coroots[static_cast<size_t>(i)], coroots[static_cast<size_t>(j)]);
    auto inv = gram.inverse();
    if (!inv) throw Error(ErrorCode::Internal, "degenerate simple-coroot Gram matrix");
    int k = rs.model_->ambient_dim();
    for (int i = 0; i < r; ++i) {
      std::vector<Rat> row(static_cast<size_t>(k), Rat(0));
      for (int j = 0; j < r; ++j) {
        const Rat& f = inv->at(i, j);
        if (f == 0) continue;
        for (int tt = 0; tt < k; ++tt) row[static_cast<size_t>(tt)] += f * coroots[static_cast<size_t>(j)].c[static_cast<size_t>(tt)];
      }
      rs.fundamental_weights_.push_back(Vec(rs.model_, std::move(row)));
    }
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        Rat p = pair(rs.fundamental_weights_[static_cast<size_t>(i)], coroots[static_cast<size_t>(j)]);
        if (p != Rat(i == j ? 1 : 0))
          throw Error(ErrorCode::Internal, "fundamental weight duality failed");
      }
  }

  // The chamber normals and the derived simple roots must generate the same
  // cone; this pins the chamber list as exactly the dominant cone.
  {
    int r = rs.rank();
    int k = rs.model_->ambient_dim();
    auto in_nonneg_span = [&](const std::vector<Root>& gens, const Vec& target) {
      RatMatrix a(k, r);
      for (int j = 0; j < r; ++j)
        for (int i = 0; i < k; ++i) a.at(i, j) = gens[static_cast<size_t>(j)].vector.c[static_cast<size_t>(i)];
      auto x = solve_linear(a, target.c);
      if (!x) return false;
      for (const Rat& xi : *x)
        if (xi < 0) return false;
      return true;
    };
    for (const Vec& nu : rs.chamber_normals_)
      if (!in_nonneg_span(rs.simple_roots_, nu))
        throw Error(ErrorCode::Internal,
                    "chamber normal outside the simple-root cone for " + t.name());
    auto in_nonneg_normal_span = [&](const Vec& target) {
      RatMatrix a(k, r);
      for (int j = 0; j < r; ++j)
        for (int i = 0; i < k; ++i) a.at(i, j) = rs.chamber_normals_[static_cast<size_t>(j)].c[static_cast<size_t>(i)];
      auto x = solve_linear(a, target.c);
      if (!x) return false;
      for (const Rat& xi : *x)
        if (xi < 0) return false;
      return true;
    };
    for (const Root& a : rs.simple_roots_)
      if (!in_nonneg_normal_span(a.vector))
        throw Error(ErrorCode::Internal,
                    "simple root outside the chamber-normal cone for " + t.name());
  }

  // Highest root: the classical per-type vector, verified dominant and maximal
  // against every root in the dominance order.
  {
    Vec delta = highest_root_for(t, rs.model_);
    rs.highest_root_ = rs.root_at(delta);
    if (!rs.is_dominant(delta)) throw Error(ErrorCode::Internal, "highest root not dominant");
    for (const Root& r : rs.roots_) {
      Vec d = delta - r.vector;
      for (const Vec& w : rs.fundamental_weights_)
        if (pair(d, w) < 0)
          throw Error(ErrorCode::Internal, "highest root not maximal for " + t.name());
    }
  }

  // rho and the asymmetric regular vector.
  {
    Vec acc = Vec::zero(rs.model_);
    for (const Root& r : rs.positive_roots_) acc = acc + r.vector;
    rs.rho_ = acc * make_rat(1, 2);
    for (const Root& a : rs.simple_roots_)
      if (pair(rs.rho_, a.vector) <= 0)
        throw Error(ErrorCode::Internal, "rho not strictly dominant");
    Vec reg = Vec::zero(rs.model_);
    for (size_t i = 0; i < rs.fundamental_weights_.size(); ++i)
      reg = reg + rs.fundamental_weights_[i] * Rat(static_cast<long>(i + 1));
    rs.regular_vector_ = reg;
    for (const Root& a : rs.simple_roots_)
      if (pair(reg, a.vector) <= 0)
        throw Error(ErrorCode::Internal, "regular vector not strictly dominant");
  }

  // -id lies in W iff the orbit of the asymmetric regular vector meets its
  // negative (no nontrivial chamber-preserving isometry fixes it).
  rs.minus_id_ = rs.dominant_rep(-rs.regular_vector_).first == rs.regular_vector_;

  for (const Vec& w : rs.fundamental_weights_)
    rs.dual_weight_dominations_.push_back(rs.dominant_rep(-w));

  // Lattice family.
  {
    std::vector<Vec> root_vecs, coroot_vecs;
    for (const Root& r : rs.roots_) {
      root_vecs.push_back(r.vector);
      coroot_vecs.push_back(rs.coroot(r));
    }
    rs.lattices_.root_lattice = Lattice::from_generators(root_vecs);
    rs.lattices_.coroot = Lattice::from_generators(coroot_vecs);
    rs.lattices_.cochar = rs.lattices_.root_lattice.dual();
    rs.lattices_.weight = rs.lattices_.coroot.dual();
    if (!rs.lattices_.coroot.subset_of(rs.lattices_.cochar))
      throw Error(ErrorCode::Internal, "coroot lattice not inside the cocharacter lattice");
  }

  return rs;
}

}  // namespace liecert
