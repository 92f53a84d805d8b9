#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liecert/reversor.hpp"
#include "test_util.hpp"

using namespace liecert;
using namespace testutil;

namespace {

RootSystem rs_of(Family f, int rank) { return RootSystem::build({f, rank}); }

RootSubset all_roots(const RootSystem& rs) {
  std::vector<Vec> v;
  for (const Root& r : rs.roots()) v.push_back(r.vector);
  return RootSubset::of(rs, std::move(v));
}

}  // namespace

TEST_CASE("decompose_orthogonal frozen examples") {
  SUBCASE("A2: lambda is itself a root") {
    RootSystem a2 = rs_of(Family::A, 2);
    auto d = decompose_orthogonal(a2, vec(a2.model(), {1, 0, -1}));
    REQUIRE(d.terms.size() == 1);
    CHECK(d.terms[0].coeff == 1);
    CHECK(d.terms[0].root.vector == vec(a2.model(), {1, 0, -1}));
  }
  SUBCASE("C3: half the sum of the long roots") {
    RootSystem c3 = rs_of(Family::C, 3);
    auto d = decompose_orthogonal(c3, vec(c3.model(), {1, 1, 1}));
    REQUIRE(d.terms.size() == 3);
    std::set<Vec, VecLess> roots;
    for (const auto& t : d.terms) {
      CHECK(t.coeff == make_rat(1, 2));
      roots.insert(t.root.vector);
    }
    CHECK(roots.count(vec(c3.model(), {2, 0, 0})) == 1);
    CHECK(roots.count(vec(c3.model(), {0, 2, 0})) == 1);
    CHECK(roots.count(vec(c3.model(), {0, 0, 2})) == 1);
  }
  SUBCASE("E6: the structured lambda with n = 1 decomposes into two roots") {
    RootSystem e6 = rs_of(Family::E, 6);
    Vec lam = vecq(e6.model(), {"1", "3/2", "1/2", "-1/2", "-1/2", "-1/2", "-1/2"});
    auto d = decompose_orthogonal(e6, lam);
    CHECK(d.terms.size() == 2);
    d.verify(e6);
    // The exhibited pair (eps1 - eps6) + (eps + eps1 + eps2 + eps6) is an
    // equally valid decomposition of the same lambda.
    OrthogonalDecomposition exhibited;
    exhibited.lambda = lam;
    exhibited.terms.push_back(
        {Rat(1), e6.root_at(vecq(e6.model(), {"0", "1", "0", "0", "0", "0", "-1"}))});
    exhibited.terms.push_back(
        {Rat(1), e6.root_at(vecq(e6.model(), {"1", "1/2", "1/2", "-1/2", "-1/2", "-1/2", "1/2"}))});
    exhibited.verify(e6);
  }
  SUBCASE("errors") {
    RootSystem a2 = rs_of(Family::A, 2);
    try {
      decompose_orthogonal(a2, vec(a2.model(), {1, 1, -2}));
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::PairingTooLarge);
    }
    try {
      decompose_orthogonal(a2, Vec::zero(a2.model()));
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ZeroCocharacter);
    }
  }
}

TEST_CASE("closure_from_seed frozen examples") {
  SUBCASE("A2: the seed omits only +-delta and one step fills them in") {
    RootSystem a2 = rs_of(Family::A, 2);
    const Vec& delta = a2.highest_root().vector;
    std::vector<Vec> seed;
    for (const Root& r : a2.roots())
      if (a2.is_root(delta + r.vector) || a2.is_root(delta - r.vector)) seed.push_back(r.vector);
    CHECK(seed.size() == 4);
    auto closure = closure_from_seed(a2);
    CHECK(closure.size() == 6);
  }
  SUBCASE("G2 closes to all twelve roots") {
    RootSystem g2 = rs_of(Family::G, 2);
    auto closure = closure_from_seed(g2);
    CHECK(closure.size() == 12);
    // closed under addition and contains its own seed by construction
    for (const Vec& a : closure.members)
      for (const Vec& b : closure.members) {
        Vec s = a + b;
        if (g2.is_root(s)) CHECK(closure.contains(s));
      }
  }
  SUBCASE("A1 seed is vacuous") {
    RootSystem a1 = rs_of(Family::A, 1);
    CHECK(closure_from_seed(a1).size() == 0);
  }
}

TEST_CASE("additive_closure is monotone and idempotent") {
  RootSystem d4 = rs_of(Family::D, 4);
  RootSubset seed = RootSubset::of(
      d4, {vec(d4.model(), {1, -1, 0, 0}), vec(d4.model(), {0, 1, -1, 0}),
           vec(d4.model(), {0, 0, 1, -1})});
  RootSubset closed = additive_closure(d4, seed);
  for (const Vec& v : seed.members) CHECK(closed.contains(v));
  RootSubset twice = additive_closure(d4, closed);
  CHECK(twice.members == closed.members);
}

TEST_CASE("verify_claim_b") {
  CHECK(verify_claim_b(rs_of(Family::A, 2)));
  CHECK(verify_claim_b(rs_of(Family::F, 4)));
  CHECK(verify_claim_b(rs_of(Family::E, 8)));
  try {
    verify_claim_b(rs_of(Family::A, 1));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Inapplicable);
  }
}

TEST_CASE("claim_c_check frozen examples") {
  SUBCASE("A2 at lambda = (2,0,-2)") {
    RootSystem a2 = rs_of(Family::A, 2);
    auto r = claim_c_check(a2, vec(a2.model(), {2, 0, -2}));
    CHECK(r.min_pairing == 2);
    CHECK(r.holds());
    REQUIRE(r.entries.size() == 2);
    for (const auto& e : r.entries) {
      CHECK(e.pairing == 2);
      CHECK(e.sigma.length() == 0);
      CHECK(pair(e.sigma.apply(e.weight), vec(a2.model(), {2, 0, -2})) == e.pairing);
    }
  }
  SUBCASE("D5 at lambda = (2,1,1,0,0)") {
    RootSystem d5 = rs_of(Family::D, 5);
    auto r = claim_c_check(d5, vec(d5.model(), {2, 1, 1, 0, 0}));
    CHECK(r.holds());
    CHECK(r.min_pairing == 2);
  }
  SUBCASE("A2 at lambda = (1,1,-2): the claim needs the reversed orbit side") {
    // One fundamental weight pairs to exactly 1, so a one-sided minimum test
    // would reject this lambda; the claim holds because the dual side clears 1.
    RootSystem a2 = rs_of(Family::A, 2);
    Vec lam = vec(a2.model(), {1, 1, -2});
    auto r = claim_c_check(a2, lam);
    CHECK(r.holds());
    CHECK(r.min_pairing == 2);
    bool saw_small_plus_side = false;
    for (const auto& e : r.entries) {
      if (e.pairing == 1) {
        saw_small_plus_side = true;
        CHECK(e.dual_pairing == 2);
        CHECK(e.achieved == -2);
        CHECK(pair(e.sigma.apply(e.weight), lam) == e.achieved);
      }
    }
    CHECK(saw_small_plus_side);
    // Brute force: every nonzero weight in the orbit closure clears 1.
    for (const Vec& w : a2.fundamental_weights()) {
      Rat best = 0;
      for (const Vec& u : a2.weyl_orbit(w)) {
        Rat p = abs(pair(u, lam));
        if (p > best) best = p;
      }
      CHECK(best > 1);
    }
  }
  SUBCASE("E6 at twice the tripled nontrivial coset representative") {
    RootSystem e6 = rs_of(Family::E, 6);
    // 6 (eps_1 + eps_2) lies in the coroot lattice (tripling clears the
    // cocharacter class, doubling pushes the highest pairing to 6).
    Vec lam = vecq(e6.model(), {"0", "4", "4", "-2", "-2", "-2", "-2"});
    REQUIRE(e6.lattices().coroot.contains(lam));
    REQUIRE(pair(lam, e6.highest_root().vector) == 6);
    auto r = claim_c_check(e6, lam);
    CHECK(r.holds());
  }
  SUBCASE("inapplicable cases") {
    RootSystem b2 = rs_of(Family::B, 2);
    CHECK_THROWS_AS(claim_c_check(b2, vec(b2.model(), {3, 1})), Error);
    RootSystem a2 = rs_of(Family::A, 2);
    CHECK_THROWS_AS(claim_c_check(a2, vec(a2.model(), {1, 0, -1})), Error);
    CHECK_THROWS_AS(claim_c_check(a2, vec(a2.model(), {-2, 0, 2})), Error);
  }
}

TEST_CASE("verify_claim_d frozen examples") {
  {
    RootSystem a2 = rs_of(Family::A, 2);
    auto r = verify_claim_d(a2);
    CHECK(r.only_delta);
    REQUIRE(r.dominant_roots.size() == 1);
    CHECK(r.dominant_roots[0] == a2.highest_root().vector);
  }
  {
    RootSystem b2 = rs_of(Family::B, 2);
    auto r = verify_claim_d(b2);
    CHECK_FALSE(r.only_delta);
    REQUIRE(r.dominant_roots.size() == 2);
    CHECK(r.dominant_roots[0] == vec(b2.model(), {1, 0}));
    CHECK(r.dominant_roots[1] == vec(b2.model(), {1, 1}));
  }
  {
    RootSystem e6 = rs_of(Family::E, 6);
    auto r = verify_claim_d(e6);
    CHECK(r.only_delta);
  }
}

TEST_CASE("build_reversor frozen examples") {
  SUBCASE("A1 is a single reflection") {
    RootSystem a1 = rs_of(Family::A, 1);
    WeylWord w = build_reversor(a1, vec(a1.model(), {1, -1}));
    REQUIRE(w.length() == 1);
    CHECK(w.letters[0] == vec(a1.model(), {1, -1}));
  }
  SUBCASE("B2 at (3,1) reverses through the orbit path") {
    RootSystem b2 = rs_of(Family::B, 2);
    Vec lam = vec(b2.model(), {3, 1});
    WeylWord w = build_reversor(b2, lam);
    CHECK(w.apply(lam) == -lam);
  }
  SUBCASE("A2 at (1,1,-2) has no reversor") {
    RootSystem a2 = rs_of(Family::A, 2);
    try {
      build_reversor(a2, vec(a2.model(), {1, 1, -2}));
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NoReversor);
      CHECK(std::string(e.what()).find("(2,-1,-1)") != std::string::npos);
    }
  }
  SUBCASE("zero is rejected") {
    RootSystem a2 = rs_of(Family::A, 2);
    CHECK_THROWS_AS(build_reversor(a2, Vec::zero(a2.model())), Error);
  }
}

TEST_CASE("reversors on random cocharacters when -id is present") {
  std::mt19937_64 rng(777);
  for (SimpleType t : {SimpleType{Family::B, 3}, {Family::C, 3}, {Family::D, 4}, {Family::F, 4},
                       {Family::G, 2}, {Family::E, 7}}) {
    RootSystem rs = RootSystem::build(t);
    const Lattice& cochar = rs.lattices().cochar;
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int iter = 0; iter < 10; ++iter) {
      Vec lam = Vec::zero(rs.model());
      for (const Vec& b : cochar.basis()) lam = lam + b * Rat(coeff(rng));
      if (lam.is_zero()) continue;
      WeylWord w = build_reversor(rs, lam);
      CHECK(w.apply(lam) == -lam);
      for (const Vec& l : w.letters) CHECK(rs.is_root(l));
    }
  }
}

TEST_CASE("semifree_rep_analysis frozen examples") {
  RootSystem a2 = rs_of(Family::A, 2);
  auto eps = [&](int i) {
    std::vector<Rat> c(3, make_rat(-1, 3));
    c[static_cast<size_t>(i)] += 1;
    return Vec(a2.model(), c);
  };
  SUBCASE("defining-representation weights are semifree for (1,0,-1)") {
    WeightMultiset wts{{{eps(0), 1}, {eps(1), 1}, {eps(2), 1}}};
    auto res = semifree_rep_analysis(a2, vec(a2.model(), {1, 0, -1}), wts);
    REQUIRE(std::holds_alternative<WeylWord>(res));
    const WeylWord& w = std::get<WeylWord>(res);
    REQUIRE(w.length() == 1);
    CHECK(w.letters[0] == vec(a2.model(), {1, 0, -1}));
  }
  SUBCASE("adjoint weights are not semifree for (1,1,-2)") {
    WeightMultiset wts;
    for (const Root& r : a2.roots()) wts.entries.push_back({r.vector, 1});
    auto res = semifree_rep_analysis(a2, vec(a2.model(), {1, 1, -2}), wts);
    REQUIRE(std::holds_alternative<Witness>(res));
    const Witness& w = std::get<Witness>(res);
    CHECK(w.kind == Witness::Kind::NotSemifree);
    CHECK(abs(w.pairing) == 3);
    // tie between e2-e3 and e1-e3; the lexicographically first maximizer is
    // recorded, and the other tied root attains the same value
    CHECK(pair(vec(a2.model(), {1, 0, -1}), vec(a2.model(), {1, 1, -2})) == 3);
    CHECK(w.reverify(a2));
  }
  SUBCASE("A1 with weights +-eps") {
    RootSystem a1 = rs_of(Family::A, 1);
    Vec e1 = vecq(a1.model(), {"1/2", "-1/2"});
    WeightMultiset wts{{{e1, 1}, {-e1, 1}}};
    auto res = semifree_rep_analysis(a1, vec(a1.model(), {1, -1}), wts);
    REQUIRE(std::holds_alternative<WeylWord>(res));
    CHECK(std::get<WeylWord>(res).length() == 1);
  }
  SUBCASE("errors") {
    WeightMultiset empty;
    CHECK_THROWS_AS(semifree_rep_analysis(a2, vec(a2.model(), {1, 0, -1}), empty), Error);
    WeightMultiset one{{{eps(0), 1}}};
    CHECK_THROWS_AS(semifree_rep_analysis(a2, Vec::zero(a2.model()), one), Error);
  }
}

TEST_CASE("subalgebra_analysis frozen examples") {
  RootSystem a2 = rs_of(Family::A, 2);
  RootSubset pm_delta =
      RootSubset::of(a2, {vec(a2.model(), {1, 0, -1}), vec(a2.model(), {-1, 0, 1})});
  SUBCASE("reversor with reflection roots inside the set") {
    auto res = subalgebra_analysis(a2, vec(a2.model(), {1, 0, -1}), pm_delta);
    REQUIRE(std::holds_alternative<WeylWord>(res));
    const WeylWord& w = std::get<WeylWord>(res);
    REQUIRE(w.length() == 1);
    CHECK(pm_delta.contains(w.letters[0]));
  }
  SUBCASE("missing high-pairing root is a precondition violation") {
    try {
      subalgebra_analysis(a2, vec(a2.model(), {1, 1, -2}), pm_delta);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::PreconditionViolated);
      // lex-first of the missing pair +-(e2-e3)
      CHECK(std::string(e.what()).find("(0,-1,1)") != std::string::npos);
    }
  }
  SUBCASE("full root set with a large pairing yields Fullness") {
    auto res = subalgebra_analysis(a2, vec(a2.model(), {1, 1, -2}), all_roots(a2));
    REQUIRE(std::holds_alternative<Witness>(res));
    const Witness& w = std::get<Witness>(res);
    CHECK(w.kind == Witness::Kind::Fullness);
    CHECK(w.pairing == 3);
    CHECK(w.reverify(a2));
  }
  SUBCASE("non-dominant lambda is dominated internally") {
    auto res = subalgebra_analysis(a2, vec(a2.model(), {-2, 1, 1}), all_roots(a2));
    REQUIRE(std::holds_alternative<Witness>(res));
    CHECK(std::get<Witness>(res).pairing == 3);
  }
}

TEST_CASE("twofold_analysis frozen examples") {
  RootSystem a2 = rs_of(Family::A, 2);
  RootSubset lh = RootSubset::of(a2, {vec(a2.model(), {0, 1, -1}), vec(a2.model(), {0, -1, 1})});
  SUBCASE("small pairing gives the decomposition reversor") {
    auto res = twofold_analysis(a2, vec(a2.model(), {1, 0, -1}), lh);
    REQUIRE(std::holds_alternative<WeylWord>(res));
    Vec lam = vec(a2.model(), {1, 0, -1});
    CHECK(std::get<WeylWord>(res).apply(lam) == -lam);
  }
  SUBCASE("large pairing without -id yields an isotropy violation") {
    Vec lam = vec(a2.model(), {2, 1, -3});
    auto res = twofold_analysis(a2, lam, lh);
    REQUIRE(std::holds_alternative<Witness>(res));
    const Witness& w = std::get<Witness>(res);
    CHECK(w.kind == Witness::Kind::IsotropyViolation);
    CHECK(w.pairing == 5);
    REQUIRE(w.word.has_value());
    REQUIRE(w.offender.has_value());
    CHECK(w.word->apply(*w.offender) == a2.highest_root().vector);
    CHECK(w.reverify(a2));
  }
  SUBCASE("types with -id always reverse") {
    RootSystem b2 = rs_of(Family::B, 2);
    RootSubset proper = RootSubset::of(b2, {vec(b2.model(), {0, 1}), vec(b2.model(), {0, -1})});
    for (std::vector<long> coords : {std::vector<long>{1, 0}, {2, 1}, {3, 1}, {-1, 4}}) {
      Vec lam = vec(b2.model(), coords);
      auto res = twofold_analysis(b2, lam, proper);
      REQUIRE(std::holds_alternative<WeylWord>(res));
      CHECK(std::get<WeylWord>(res).apply(lam) == -lam);
    }
  }
  SUBCASE("L_H = Delta is rejected") {
    try {
      twofold_analysis(a2, vec(a2.model(), {1, 0, -1}), all_roots(a2));
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotProper);
    }
  }
  SUBCASE("cocharacters outside the coroot lattice can be irreversible") {
    // order-3 circle in the adjoint group: no reversor and no violation
    Vec eps1 = vecq(a2.model(), {"2/3", "-1/3", "-1/3"});
    try {
      twofold_analysis(a2, eps1, lh);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NoReversor);
    }
  }
}

TEST_CASE("witness reverification is exact") {
  RootSystem a2 = rs_of(Family::A, 2);
  Witness w{Witness::Kind::NotSemifree, vec(a2.model(), {1, 1, -2}),
            vec(a2.model(), {1, 0, -1}), std::nullopt, Rat(3), ""};
  CHECK(w.reverify(a2));
  w.pairing = 4;  // tampered pairing fails to re-verify
  CHECK_FALSE(w.reverify(a2));
}
