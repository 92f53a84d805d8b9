#include "liecert/cochar.hpp"

#include <algorithm>

namespace liecert {

const LatticeFamily& lattice_family(const RootSystem& rs) { return rs.lattices(); }

PairingCert max_abs_root_pairing(const RootSystem& rs, const Vec& lam) {
  const Root* best = nullptr;
  Rat best_val;
  for (const Root& r : rs.roots()) {
    Rat p = pair(r.vector, lam);
    if (!best || p > best_val) {
      best = &r;
      best_val = p;
    }
  }
  if (best_val < 0) throw Error(ErrorCode::Internal, "signed maximum negative over a symmetric set");
  return {best_val, best->vector};
}

bool is_semifree(const RootSystem& rs, const Vec& lam) {
  return max_abs_root_pairing(rs, lam).max_abs <= 1;
}

std::vector<Vec> classical_pi1_representatives(const RootSystem& rs) {
  const ModelPtr& m = rs.model();
  int k = m->ambient_dim();
  int n = rs.type().rank;
  auto mkvec = [&](const std::vector<Rat>& c) { return Vec(m, c); };
  std::vector<Vec> out;
  switch (rs.type().family) {
    case Family::A: {
      // sum of the first j epsilons, j = 0..n
      for (int j = 0; j <= n; ++j) {
        std::vector<Rat> c(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i)
          c[static_cast<size_t>(i)] = Rat(i < j ? 1 : 0) - make_rat(j, k);
        out.push_back(mkvec(c));
      }
      break;
    }
    case Family::B: {
      out.push_back(Vec::zero(m));
      std::vector<Rat> c(static_cast<size_t>(k), Rat(0));
      c[0] = 1;
      out.push_back(mkvec(c));
      break;
    }
    case Family::C: {
      out.push_back(Vec::zero(m));
      out.push_back(mkvec(std::vector<Rat>(static_cast<size_t>(k), make_rat(1, 2))));
      break;
    }
    case Family::D: {
      out.push_back(Vec::zero(m));
      std::vector<Rat> e1(static_cast<size_t>(k), Rat(0));
      e1[0] = 1;
      out.push_back(mkvec(e1));
      std::vector<Rat> half(static_cast<size_t>(k), make_rat(1, 2));
      out.push_back(mkvec(half));
      half[static_cast<size_t>(k - 1)] = make_rat(-1, 2);
      out.push_back(mkvec(half));
      break;
    }
    case Family::E: {
      out.push_back(Vec::zero(m));
      if (n == 6) {
        std::vector<Rat> c(7, Rat(0));
        for (int i = 1; i <= 6; ++i) c[static_cast<size_t>(i)] = make_rat(i <= 2 ? 2 : -1, 3);
        out.push_back(mkvec(c));
        for (Rat& x : c) x = -x;
        out.push_back(mkvec(c));
      } else if (n == 7) {
        std::vector<Rat> c(8);
        for (int i = 0; i < 8; ++i) c[static_cast<size_t>(i)] = make_rat(i < 2 ? 3 : -1, 4);
        out.push_back(mkvec(c));
      }
      break;
    }
    case Family::F:
    case Family::G:
      out.push_back(Vec::zero(m));
      break;
  }
  return out;
}

namespace {

Pi1Table build_table(const RootSystem& rs, bool certify_semifree) {
  const LatticeFamily& fam = rs.lattices();
  Pi1Table t;
  t.group = finite_quotient(fam.coroot, fam.cochar);
  t.classical_reps = classical_pi1_representatives(rs);

  if (Int(static_cast<long>(t.classical_reps.size())) != t.group.order())
    throw Error(ErrorCode::Internal, "representative list size differs from the quotient order");
  for (size_t i = 0; i < t.classical_reps.size(); ++i) {
    if (!fam.cochar.contains(t.classical_reps[i]))
      throw Error(ErrorCode::Internal, "representative outside the cocharacter lattice");
    for (size_t j = i + 1; j < t.classical_reps.size(); ++j)
      if (fam.coroot.contains(t.classical_reps[i] - t.classical_reps[j]))
        throw Error(ErrorCode::Internal, "representatives congruent mod the coroot lattice");
  }

  for (const Vec& rep : t.classical_reps) {
    TransversalEntry e;
    e.coset = t.group.coset_digits(rep);
    e.lambda = rep;
    PairingCert cert = max_abs_root_pairing(rs, rep);
    e.max_pairing = cert.max_abs;
    e.maximizing_root = cert.maximizer;
    if (certify_semifree && e.max_pairing > 1) {
      // The listed representative failed; search the coset within a +-2 box
      // of coroot-basis coefficients for a semifree substitute.
      bool found = false;
      const auto& basis = fam.coroot.basis();
      std::vector<int> digits(basis.size(), -2);
      while (true) {
        Vec cand = rep;
        for (size_t i = 0; i < basis.size(); ++i)
          if (digits[i] != 0) cand = cand + basis[i] * Rat(digits[i]);
        PairingCert c2 = max_abs_root_pairing(rs, cand);
        if (c2.max_abs <= 1) {
          e.lambda = cand;
          e.max_pairing = c2.max_abs;
          e.maximizing_root = c2.maximizer;
          e.listed_rep = false;
          found = true;
          break;
        }
        size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] > 2) digits[pos++] = -2;
        if (pos == digits.size()) break;
      }
      if (!found)
        throw Error(ErrorCode::TransversalIncomplete,
                    "no semifree representative in the search box for coset of (" +
                        coord_str(rep) + ")");
    }
    // Small-norm witness: minimum of <v,v> over lambda + (+-1 coroot box),
    // lexicographic tie-break.
    {
      const auto& basis = fam.coroot.basis();
      Vec best = e.lambda;
      Rat best_norm = norm_sq(best);
      std::vector<int> digits(basis.size(), -1);
      while (true) {
        Vec cand = e.lambda;
        for (size_t i = 0; i < basis.size(); ++i)
          if (digits[i] != 0) cand = cand + basis[i] * Rat(digits[i]);
        Rat nn = norm_sq(cand);
        if (nn < best_norm || (nn == best_norm && lex_less(cand, best))) {
          best = cand;
          best_norm = nn;
        }
        size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] > 1) digits[pos++] = -1;
        if (pos == digits.size()) break;
      }
      e.small_norm_witness = best;
      e.small_norm = best_norm;
    }
    t.reps.push_back(std::move(e));
  }
  return t;
}

}  // namespace

Pi1Table fundamental_group(const RootSystem& rs) { return build_table(rs, false); }

Pi1Table semifree_transversal(const RootSystem& rs) { return build_table(rs, true); }

namespace {

using Functionals = std::vector<std::vector<Rat>>;

std::vector<Rat> unit_row(int k, int i, const Rat& scale = Rat(1)) {
  std::vector<Rat> r(static_cast<size_t>(k), Rat(0));
  r[static_cast<size_t>(i)] = scale;
  return r;
}

std::vector<Rat> diff_row(int k, int i, int j) {
  std::vector<Rat> r(static_cast<size_t>(k), Rat(0));
  r[static_cast<size_t>(i)] = 1;
  r[static_cast<size_t>(j)] = -1;
  return r;
}

std::vector<Rat> sum_row(int k, int i, int j) {
  std::vector<Rat> r(static_cast<size_t>(k), Rat(0));
  r[static_cast<size_t>(i)] = 1;
  r[static_cast<size_t>(j)] = 1;
  return r;
}

std::vector<Rat> const_row(int k, const Rat& v) {
  return std::vector<Rat>(static_cast<size_t>(k), v);
}

// lambda_i - lambda_j integral, all pairs i < j
Functionals all_diffs(int k) {
  Functionals f;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) f.push_back(diff_row(k, i, j));
  return f;
}

// lambda_i +- lambda_j integral, all pairs i < j
Functionals all_diffs_sums(int k) {
  Functionals f = all_diffs(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) f.push_back(sum_row(k, i, j));
  return f;
}

// all coordinates integral
Functionals all_units(int k) {
  Functionals f;
  for (int i = 0; i < k; ++i) f.push_back(unit_row(k, i));
  return f;
}

// coordinates integral with even sum
Functionals units_even_sum(int k) {
  Functionals f = all_units(k);
  f.push_back(const_row(k, make_rat(1, 2)));
  return f;
}

}  // namespace

bool LatticeFormReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return e.pass; });
}

LatticeFormReport verify_lattice_forms(const RootSystem& rs) {
  const LatticeFamily& fam = rs.lattices();
  const ModelPtr& m = rs.model();
  int k = m->ambient_dim();
  int n = rs.type().rank;
  LatticeFormReport rep;

  auto compare = [&](const std::string& name, const Functionals& funcs, const Lattice& computed) {
    Lattice closed_form = preimage_lattice(m, funcs);
    LatticeFormReport::Entry e;
    e.name = name;
    e.pass = closed_form == computed;
    if (!e.pass) {
      e.detail = "computed basis != closed-form basis (";
      for (const Vec& b : computed.basis()) e.detail += "(" + coord_str(b) + ")";
      e.detail += " vs ";
      for (const Vec& b : closed_form.basis()) e.detail += "(" + coord_str(b) + ")";
      e.detail += ")";
    }
    rep.entries.push_back(std::move(e));
  };

  switch (rs.type().family) {
    case Family::A:
      compare("cochar: lambda_i - lambda_j integral", all_diffs(k), fam.cochar);
      compare("coroot: integer coordinates", all_units(k), fam.coroot);
      compare("weight: alpha_i - alpha_j integral", all_diffs(k), fam.weight);
      break;
    case Family::B:
      compare("cochar: integer coordinates", all_units(k), fam.cochar);
      compare("coroot: integer coordinates with even sum", units_even_sum(k), fam.coroot);
      break;
    case Family::C:
      compare("cochar: lambda_i +- lambda_j integral", all_diffs_sums(k), fam.cochar);
      compare("coroot: integer coordinates", all_units(k), fam.coroot);
      break;
    case Family::D:
      compare("cochar: lambda_i +- lambda_j integral", all_diffs_sums(k), fam.cochar);
      compare("coroot: integer coordinates with even sum", units_even_sum(k), fam.coroot);
      compare("weight: alpha_i +- alpha_j integral", all_diffs_sums(k), fam.weight);
      break;
    case Family::E: {
      if (n == 6) {
        Functionals cochar_f, coroot_f;
        cochar_f.push_back(unit_row(7, 0));  // n integral
        coroot_f.push_back(unit_row(7, 0));
        for (int i = 1; i <= 6; ++i) {
          std::vector<Rat> f(7, Rat(0));
          f[0] = make_rat(1, 2);
          f[static_cast<size_t>(i)] = 3;  // n/2 + 3 xi_i
          cochar_f.push_back(f);
          f[static_cast<size_t>(i)] = 1;  // n/2 + xi_i
          coroot_f.push_back(f);
        }
        for (int i = 1; i <= 6; ++i)
          for (int j = i + 1; j <= 6; ++j) cochar_f.push_back(diff_row(7, i, j));
        compare("cochar: n, n/2 + 3 xi_i, xi_i - xi_j integral", cochar_f, fam.cochar);
        compare("coroot: n, n/2 + xi_i integral", coroot_f, fam.coroot);
      } else if (n == 7) {
        Functionals cochar_f = all_diffs(8);
        for (int i = 0; i < 8; ++i) cochar_f.push_back(unit_row(8, i, Rat(4)));
        compare("cochar: 4 lambda_i and lambda_i - lambda_j integral", cochar_f, fam.cochar);
        compare("coroot: lambda_i +- lambda_j integral", all_diffs_sums(8), fam.coroot);
      } else {
        Functionals coroot_f = all_diffs(9);
        for (int i = 0; i < 9; ++i) coroot_f.push_back(unit_row(9, i, Rat(3)));
        compare("coroot: 3 xi_i and xi_i - xi_j integral", coroot_f, fam.coroot);
      }
      break;
    }
    case Family::F:
      compare("coroot: integer coordinates with even sum", units_even_sum(4), fam.coroot);
      break;
    case Family::G:
      compare("coroot: integer coordinates", all_units(3), fam.coroot);
      break;
  }

  if (rs.type().family == Family::F || rs.type().family == Family::G ||
      (rs.type().family == Family::E && n == 8)) {
    LatticeFormReport::Entry e;
    e.name = "simply connected: cochar equals coroot";
    e.pass = fam.cochar == fam.coroot;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace liecert
