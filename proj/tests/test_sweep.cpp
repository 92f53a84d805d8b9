#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liecert/sweep.hpp"
#include "test_util.hpp"

using namespace liecert;
using namespace testutil;

TEST_CASE("enumerate_dominant frozen examples") {
  {
    RootSystem a2 = RootSystem::build({Family::A, 2});
    auto pts = enumerate_dominant(a2, a2.lattices().coroot, Int(2));
    REQUIRE(pts.size() == 2);
    CHECK(pts[0] == vec(a2.model(), {0, 0, 0}));
    CHECK(pts[1] == vec(a2.model(), {1, 0, -1}));
  }
  {
    RootSystem b2 = RootSystem::build({Family::B, 2});
    auto pts = enumerate_dominant(b2, b2.lattices().coroot, Int(2));
    REQUIRE(pts.size() == 3);
    CHECK(pts[0] == vec(b2.model(), {0, 0}));
    CHECK(pts[1] == vec(b2.model(), {1, 1}));
    CHECK(pts[2] == vec(b2.model(), {2, 0}));
  }
  {
    RootSystem a1 = RootSystem::build({Family::A, 1});
    auto pts = enumerate_dominant(a1, a1.lattices().coroot, Int(0));
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].is_zero());
  }
}

TEST_CASE("enumerate_dominant agrees with a naive box-scan oracle") {
  // Oracle: scan all integer combinations of the lattice basis in a generous
  // coefficient box and filter.
  auto oracle = [](const RootSystem& rs, const Lattice& lat, int bound) {
    const auto& basis = lat.basis();
    int r = lat.rank();
    int radius = 3 * bound + 3;
    std::vector<Vec> out;
    std::vector<int> c(static_cast<size_t>(r), -radius);
    while (true) {
      Vec v = Vec::zero(rs.model());
      for (int i = 0; i < r; ++i)
        if (c[static_cast<size_t>(i)] != 0) v = v + basis[static_cast<size_t>(i)] * Rat(c[static_cast<size_t>(i)]);
      if (rs.is_dominant(v) && pair(v, rs.highest_root().vector) <= bound) out.push_back(v);
      int pos = 0;
      while (pos < r && ++c[static_cast<size_t>(pos)] > radius) c[static_cast<size_t>(pos++)] = -radius;
      if (pos == r) break;
    }
    std::sort(out.begin(), out.end(), VecLess{});
    return out;
  };
  for (SimpleType t : {SimpleType{Family::A, 2}, {Family::A, 3}, {Family::B, 2}, {Family::B, 3},
                       {Family::C, 3}, {Family::D, 4}, {Family::G, 2}, {Family::F, 4}}) {
    RootSystem rs = RootSystem::build(t);
    int bound = (t.family == Family::D || t.family == Family::F) ? 2 : 3;
    auto fast = enumerate_dominant(rs, rs.lattices().coroot, Int(bound));
    auto slow = oracle(rs, rs.lattices().coroot, bound);
    INFO(t.name());
    REQUIRE(fast.size() == slow.size());
    for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == slow[i]);
    // also over the cocharacter lattice (denominators appear)
    auto fast2 = enumerate_dominant(rs, rs.lattices().cochar, Int(2));
    auto slow2 = oracle(rs, rs.lattices().cochar, 2);
    REQUIRE(fast2.size() == slow2.size());
    for (size_t i = 0; i < fast2.size(); ++i) CHECK(fast2[i] == slow2[i]);
  }
}

TEST_CASE("empty and restricted suites") {
  SweepConfig cfg;
  cfg.types = {};
  Report rep = run_verification_suite(cfg);
  CHECK(rep.cases.empty());
  CHECK(render_report(rep, "text") == "0 pass / 0 fail / 0 inapplicable\n");

  SweepConfig only_d;
  only_d.types = {SimpleType{Family::B, 2}, SimpleType{Family::A, 2}};
  only_d.claims = {"d"};
  Report rep2 = run_verification_suite(only_d);
  REQUIRE(rep2.cases.size() == 2);
  for (const CaseRow& row : rep2.cases) CHECK(row.claim == "d");
  // deterministic ordering: A2 before B2
  CHECK(rep2.cases[0].system.family == Family::A);
  CHECK(rep2.cases[1].system.family == Family::B);
  CHECK(rep2.fail == 0);
}

TEST_CASE("report rendering") {
  SweepConfig cfg;
  cfg.types = {SimpleType{Family::A, 1}};
  Report rep = run_verification_suite(cfg);
  CHECK(rep.fail == 0);
  std::string text = render_report(rep, "text");
  CHECK(text.find("pass  A1/") != std::string::npos);
  CHECK(text.find(" fail / ") != std::string::npos);

  std::string json_text = render_report(rep, "json");
  Json j = Json::parse(json_text);
  CHECK(j.at("version") == 1);
  CHECK(j.at("cases").is_array());
  CHECK(!j.at("cases").empty());
  const auto& c0 = j.at("cases").at(0);
  CHECK(c0.contains("id"));
  CHECK(c0.contains("system"));
  CHECK(c0.contains("claim"));
  CHECK(c0.contains("status"));
  CHECK(c0.contains("witness"));
  CHECK(c0.contains("elapsed_ms"));
  CHECK(j.at("summary").at("pass").get<int>() == rep.pass);
  CHECK(j.at("summary").at("fail").get<int>() == 0);

  CHECK_THROWS_AS(render_report(rep, "xml"), Error);
}

TEST_CASE("row order is independent of execution parallelism") {
  SweepConfig cfg;
  cfg.types = {SimpleType{Family::A, 3}, {Family::B, 3}, {Family::C, 3}, {Family::G, 2}};
  cfg.pairing_bound = 4;
  cfg.threads = 1;
  Report serial = run_verification_suite(cfg);
  cfg.threads = 4;
  Report parallel = run_verification_suite(cfg);
  for (Report* r : {&serial, &parallel})
    for (CaseRow& row : r->cases) row.elapsed_ms = 0;
  CHECK(render_report(serial, "json") == render_report(parallel, "json"));
}

TEST_CASE("pass certificates re-verify standalone") {
  SweepConfig cfg;
  cfg.types = {SimpleType{Family::A, 2}, {Family::B, 2}, {Family::D, 5}, {Family::G, 2}};
  cfg.pairing_bound = 5;
  Report rep = run_verification_suite(cfg);
  CHECK(rep.fail == 0);
  int checked = 0;
  for (const CaseRow& row : rep.cases) {
    if (row.status != CaseStatus::Pass) continue;
    INFO(row.id);
    CHECK(reverify_case(row));
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("tampered certificates fail re-verification") {
  SweepConfig cfg;
  cfg.types = {SimpleType{Family::A, 2}};
  cfg.claims = {"a"};
  Report rep = run_verification_suite(cfg);
  bool found = false;
  for (CaseRow row : rep.cases) {
    if (row.status != CaseStatus::Pass || !row.payload.contains("lambda")) continue;
    row.payload["lambda"][0] = "7";
    CHECK_FALSE(reverify_case(row));
    found = true;
    break;
  }
  CHECK(found);
}
