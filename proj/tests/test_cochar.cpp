#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liecert/cochar.hpp"
#include "test_util.hpp"

using namespace liecert;
using namespace testutil;

namespace {

RootSystem rs_of(Family f, int rank) { return RootSystem::build({f, rank}); }

std::vector<SimpleType> in_scope_types() {
  std::vector<SimpleType> out;
  for (int n = 1; n <= 8; ++n) out.push_back({Family::A, n});
  for (int n = 2; n <= 8; ++n) out.push_back({Family::B, n});
  for (int n = 3; n <= 8; ++n) out.push_back({Family::C, n});
  for (int n = 4; n <= 9; ++n) out.push_back({Family::D, n});
  out.push_back({Family::E, 6});
  out.push_back({Family::E, 7});
  out.push_back({Family::E, 8});
  out.push_back({Family::F, 4});
  out.push_back({Family::G, 2});
  return out;
}

}  // namespace

TEST_CASE("lattice_family frozen examples") {
  {
    RootSystem b2 = rs_of(Family::B, 2);
    const auto& fam = lattice_family(b2);
    Lattice z2 = Lattice::from_generators({vec(b2.model(), {1, 0}), vec(b2.model(), {0, 1})});
    CHECK(fam.root_lattice == z2);  // self-dual: cochar = dual(root lattice) = Z^2
    CHECK(fam.cochar == z2);
    Lattice even = Lattice::from_generators({vec(b2.model(), {1, 1}), vec(b2.model(), {0, 2})});
    CHECK(fam.coroot == even);
    CHECK(fam.cochar.scale() == 1);
  }
  {
    RootSystem c3 = rs_of(Family::C, 3);
    CHECK(lattice_family(c3).cochar.scale() == 2);  // half-integer vectors appear
  }
  {
    RootSystem c3 = rs_of(Family::C, 3);
    Lattice z3 = Lattice::from_generators(
        {vec(c3.model(), {1, 0, 0}), vec(c3.model(), {0, 1, 0}), vec(c3.model(), {0, 0, 1})});
    CHECK(lattice_family(c3).coroot == z3);
  }
  {
    RootSystem e7 = rs_of(Family::E, 7);
    std::vector<std::vector<Rat>> funcs;
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j) {
        std::vector<Rat> d(8, Rat(0)), s(8, Rat(0));
        d[static_cast<size_t>(i)] = 1;
        d[static_cast<size_t>(j)] = -1;
        s[static_cast<size_t>(i)] = 1;
        s[static_cast<size_t>(j)] = 1;
        funcs.push_back(d);
        funcs.push_back(s);
      }
    CHECK(lattice_family(e7).coroot == preimage_lattice(e7.model(), funcs));
  }
}

TEST_CASE("verify_lattice_forms passes for all in-scope types") {
  for (SimpleType t : in_scope_types()) {
    RootSystem rs = RootSystem::build(t);
    LatticeFormReport rep = verify_lattice_forms(rs);
    CHECK(!rep.entries.empty());
    for (const auto& e : rep.entries) {
      INFO(t.name(), " ", e.name, " ", e.detail);
      CHECK(e.pass);
    }
  }
}

TEST_CASE("grid-level membership agreement with the closed forms") {
  // Second, grid-level validation on small types: enumerate a coordinate box
  // and compare closed-form membership predicates against lattice membership.
  SUBCASE("C3 cochar on the half-integer grid") {
    RootSystem c3 = rs_of(Family::C, 3);
    const Lattice& cochar = lattice_family(c3).cochar;
    for (int a = -4; a <= 4; ++a)
      for (int b = -4; b <= 4; ++b)
        for (int c = -4; c <= 4; ++c) {
          Vec v = vecq(c3.model(), {rat_str(make_rat(a, 2)), rat_str(make_rat(b, 2)),
                                    rat_str(make_rat(c, 2))});
          bool pred = true;
          for (int i = 0; i < 3 && pred; ++i)
            for (int j = i + 1; j < 3 && pred; ++j)
              pred = is_integer(v.c[static_cast<size_t>(i)] + v.c[static_cast<size_t>(j)]) &&
                     is_integer(v.c[static_cast<size_t>(i)] - v.c[static_cast<size_t>(j)]);
          CHECK(pred == cochar.contains(v));
        }
  }
  SUBCASE("B2 coroot on the integer grid") {
    RootSystem b2 = rs_of(Family::B, 2);
    const Lattice& coroot = lattice_family(b2).coroot;
    for (int a = -3; a <= 3; ++a)
      for (int b = -3; b <= 3; ++b) {
        Vec v = vec(b2.model(), {a, b});
        bool pred = (a + b) % 2 == 0;
        CHECK(pred == coroot.contains(v));
      }
  }
  SUBCASE("A2 cochar on the third-integer sum-zero grid") {
    RootSystem a2 = rs_of(Family::A, 2);
    const Lattice& cochar = lattice_family(a2).cochar;
    for (int a = -6; a <= 6; ++a)
      for (int b = -6; b <= 6; ++b) {
        int c = -a - b;
        if (c < -6 || c > 6) continue;
        Vec v = vecq(a2.model(),
                     {rat_str(make_rat(a, 3)), rat_str(make_rat(b, 3)), rat_str(make_rat(c, 3))});
        bool pred = is_integer(v.c[0] - v.c[1]) && is_integer(v.c[1] - v.c[2]) &&
                    is_integer(v.c[0] - v.c[2]);
        CHECK(pred == cochar.contains(v));
      }
  }
  SUBCASE("G2 coroot on the integer sum-zero grid") {
    RootSystem g2 = rs_of(Family::G, 2);
    const Lattice& coroot = lattice_family(g2).coroot;
    for (int a = -3; a <= 3; ++a)
      for (int b = -3; b <= 3; ++b) {
        int c = -a - b;
        if (c < -3 || c > 3) continue;
        Vec v = vec(g2.model(), {a, b, c});
        CHECK(coroot.contains(v));  // every integer sum-zero vector
      }
  }
}

TEST_CASE("fundamental_group invariant factors match the per-type table") {
  for (SimpleType t : in_scope_types()) {
    RootSystem rs = RootSystem::build(t);
    Pi1Table table = fundamental_group(rs);
    std::vector<Int> expect;
    switch (t.family) {
      case Family::A: expect = {Int(t.rank + 1)}; break;
      case Family::B:
      case Family::C: expect = {Int(2)}; break;
      case Family::D:
        expect = t.rank % 2 == 0 ? std::vector<Int>{Int(2), Int(2)} : std::vector<Int>{Int(4)};
        break;
      case Family::E:
        if (t.rank == 6) expect = {Int(3)};
        else if (t.rank == 7) expect = {Int(2)};
        break;
      case Family::F:
      case Family::G: break;
    }
    INFO(t.name());
    CHECK(table.group.invariant_factors == expect);
    CHECK(Int(static_cast<long>(table.classical_reps.size())) == table.group.order());
  }
}

TEST_CASE("classical representative lists are literal") {
  {
    RootSystem a3 = rs_of(Family::A, 3);
    Pi1Table t = fundamental_group(a3);
    REQUIRE(t.classical_reps.size() == 4);
    CHECK(t.classical_reps[0].is_zero());
    CHECK(t.classical_reps[1] == vecq(a3.model(), {"3/4", "-1/4", "-1/4", "-1/4"}));
    CHECK(t.classical_reps[2] == vecq(a3.model(), {"1/2", "1/2", "-1/2", "-1/2"}));
    CHECK(t.classical_reps[3] == vecq(a3.model(), {"1/4", "1/4", "1/4", "-3/4"}));
  }
  {
    RootSystem d4 = rs_of(Family::D, 4);
    Pi1Table t = fundamental_group(d4);
    REQUIRE(t.classical_reps.size() == 4);
    CHECK(t.classical_reps[0].is_zero());
    CHECK(t.classical_reps[1] == vec(d4.model(), {1, 0, 0, 0}));
    CHECK(t.classical_reps[2] == vecq(d4.model(), {"1/2", "1/2", "1/2", "1/2"}));
    CHECK(t.classical_reps[3] == vecq(d4.model(), {"1/2", "1/2", "1/2", "-1/2"}));
  }
  {
    RootSystem f4 = rs_of(Family::F, 4);
    Pi1Table t = fundamental_group(f4);
    REQUIRE(t.classical_reps.size() == 1);
    CHECK(t.classical_reps[0].is_zero());
  }
  {
    RootSystem e6 = rs_of(Family::E, 6);
    Pi1Table t = fundamental_group(e6);
    REQUIRE(t.classical_reps.size() == 3);
    CHECK(t.classical_reps[0].is_zero());
    Vec eps12 = vecq(e6.model(), {"0", "2/3", "2/3", "-1/3", "-1/3", "-1/3", "-1/3"});
    CHECK(t.classical_reps[1] == eps12);
    CHECK(t.classical_reps[2] == -eps12);
  }
  {
    RootSystem e7 = rs_of(Family::E, 7);
    Pi1Table t = fundamental_group(e7);
    REQUIRE(t.classical_reps.size() == 2);
    CHECK(t.classical_reps[1] ==
          vecq(e7.model(), {"3/4", "3/4", "-1/4", "-1/4", "-1/4", "-1/4", "-1/4", "-1/4"}));
  }
}

TEST_CASE("max_abs_root_pairing frozen examples") {
  {
    RootSystem a2 = rs_of(Family::A, 2);
    Vec eps1 = vecq(a2.model(), {"2/3", "-1/3", "-1/3"});
    PairingCert c = max_abs_root_pairing(a2, eps1);
    CHECK(c.max_abs == 1);
    CHECK(c.maximizer == vec(a2.model(), {1, -1, 0}));
  }
  {
    RootSystem e7 = rs_of(Family::E, 7);
    Vec v = vecq(e7.model(), {"3/4", "3/4", "-1/4", "-1/4", "-1/4", "-1/4", "-1/4", "-1/4"});
    CHECK(max_abs_root_pairing(e7, v).max_abs == 1);
  }
  {
    RootSystem b2 = rs_of(Family::B, 2);
    PairingCert c = max_abs_root_pairing(b2, Vec::zero(b2.model()));
    CHECK(c.max_abs == 0);
  }
}

TEST_CASE("for dominant lambda the max pairing is the highest-root pairing") {
  std::mt19937_64 rng(60601);
  for (SimpleType t : {SimpleType{Family::A, 4}, {Family::B, 4}, {Family::C, 4}, {Family::D, 5},
                       {Family::E, 6}, {Family::F, 4}, {Family::G, 2}}) {
    RootSystem rs = RootSystem::build(t);
    for (int iter = 0; iter < 25; ++iter) {
      Vec lam = rs.dominant_rep(random_model_vec(rng, rs.model())).first;
      PairingCert c = max_abs_root_pairing(rs, lam);
      CHECK(c.max_abs == pair(rs.highest_root().vector, lam));
    }
  }
}

TEST_CASE("is_semifree frozen examples") {
  RootSystem c3 = rs_of(Family::C, 3);
  CHECK(is_semifree(c3, vecq(c3.model(), {"1/2", "1/2", "1/2"})));
  RootSystem a2 = rs_of(Family::A, 2);
  CHECK_FALSE(is_semifree(a2, vec(a2.model(), {1, 1, -2})));
  PairingCert c = max_abs_root_pairing(a2, vec(a2.model(), {1, 1, -2}));
  CHECK(c.max_abs == 3);
  // The maximum is tied between e2-e3 and e1-e3; the lexicographically first
  // signed maximizer wins, and e1-e3 attains the same value.
  CHECK(c.maximizer == vec(a2.model(), {0, 1, -1}));
  CHECK(pair(vec(a2.model(), {1, 0, -1}), vec(a2.model(), {1, 1, -2})) == 3);
  CHECK(is_semifree(a2, Vec::zero(a2.model())));
}

TEST_CASE("semifree transversal certifies every coset") {
  for (SimpleType t : in_scope_types()) {
    RootSystem rs = RootSystem::build(t);
    Pi1Table table = semifree_transversal(rs);
    CHECK(Int(static_cast<long>(table.reps.size())) == table.group.order());
    std::set<std::vector<Int>> coset_ids;
    for (const TransversalEntry& e : table.reps) {
      INFO(t.name(), " coset of (", coord_str(e.lambda), ")");
      CHECK(e.listed_rep);  // the listed representative always works
      CHECK(e.max_pairing <= 1);
      // certificate re-verifies by independent enumeration
      Rat best = 0;
      for (const Root& r : rs.roots()) {
        Rat p = abs(pair(r.vector, e.lambda));
        if (p > best) best = p;
      }
      CHECK(best == e.max_pairing);
      CHECK(abs(pair(e.maximizing_root, e.lambda)) == e.max_pairing);
      coset_ids.insert(e.coset);
      // small-norm witness stays in the same coset and is no worse
      CHECK(rs.lattices().coroot.contains(e.small_norm_witness - e.lambda));
      CHECK(e.small_norm <= norm_sq(e.lambda));
      CHECK(e.small_norm == norm_sq(e.small_norm_witness));
    }
    CHECK(Int(static_cast<long>(coset_ids.size())) == table.group.order());
  }
}

TEST_CASE("nontrivial cosets achieve pairing exactly one") {
  for (SimpleType t : in_scope_types()) {
    RootSystem rs = RootSystem::build(t);
    Pi1Table table = semifree_transversal(rs);
    for (const TransversalEntry& e : table.reps) {
      bool trivial = true;
      for (const Int& d : e.coset) trivial = trivial && d == 0;
      INFO(t.name());
      CHECK(e.max_pairing == (trivial ? 0 : 1));
    }
  }
}

TEST_CASE("A2 coset one is represented by epsilon_1 with pairing one") {
  RootSystem a2 = rs_of(Family::A, 2);
  Pi1Table t = semifree_transversal(a2);
  REQUIRE(t.reps.size() == 3);
  CHECK(t.reps[1].lambda == vecq(a2.model(), {"2/3", "-1/3", "-1/3"}));
  CHECK(t.reps[1].max_pairing == 1);
}
