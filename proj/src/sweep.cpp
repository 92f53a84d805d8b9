#include "liecert/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

namespace liecert {

std::vector<SimpleType> SweepConfig::default_types() {
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

const std::set<std::string>& SweepConfig::all_claims() {
  static const std::set<std::string> c{"a", "b", "c", "d", "pi1", "lattices", "transversal",
                                       "reversor"};
  return c;
}

const char* case_status_name(CaseStatus s) {
  switch (s) {
    case CaseStatus::Pass: return "pass";
    case CaseStatus::Fail: return "fail";
    case CaseStatus::Inapplicable: return "inapplicable";
  }
  return "unknown";
}

void Report::recount() {
  pass = fail = inapplicable = 0;
  for (const CaseRow& c : cases) {
    if (c.status == CaseStatus::Pass) ++pass;
    else if (c.status == CaseStatus::Fail) ++fail;
    else ++inapplicable;
  }
}

std::vector<Vec> enumerate_dominant(const RootSystem& rs, const Lattice& lat, const Int& bound) {
  if (bound < 0) throw Error(ErrorCode::PreconditionViolated, "bound must be >= 0");
  int r = rs.rank();
  if (lat.rank() != r)
    throw Error(ErrorCode::Internal, "enumeration lattice does not span the model space");
  Rat b(bound);

  // Work in fundamental-weight coordinates x_i = <lambda, alpha_i^vee>:
  // dominance becomes x >= 0 and the delta-pairing the positive-weighted
  // budget sum x_i w_i <= bound with w_i = <w_i, delta> > 0, so the slice is
  // a simplex and the staircase enumeration can prune on the budget at every
  // level. This keeps the visited-node count proportional to the answer.
  std::vector<Vec> simple_coroots;
  for (const Root& a : rs.simple_roots()) simple_coroots.push_back(rs.coroot(a));
  std::vector<Rat> w(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) {
    w[static_cast<size_t>(i)] = pair(rs.fundamental_weights()[static_cast<size_t>(i)],
                                     rs.highest_root().vector);
    if (w[static_cast<size_t>(i)] <= 0)
      throw Error(ErrorCode::Internal, "fundamental weight pairs nonpositively with delta");
  }

  auto aux = std::make_shared<CartanModel>("aux R^" + std::to_string(r), r, -1,
                                           std::vector<Rat>(static_cast<size_t>(r), Rat(1)));
  std::vector<Vec> images;
  for (const Vec& bv : lat.basis()) {
    std::vector<Rat> x(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) x[static_cast<size_t>(i)] = pair(bv, simple_coroots[static_cast<size_t>(i)]);
    images.push_back(Vec(aux, std::move(x)));
  }
  Lattice image_lat = Lattice::from_generators(images);
  if (image_lat.rank() != r)
    throw Error(ErrorCode::Internal, "fundamental-weight coordinate map degenerated");

  const auto& basis = image_lat.basis();
  std::vector<int> pivot(static_cast<size_t>(r), -1);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (basis[static_cast<size_t>(i)].c[static_cast<size_t>(j)] != 0) {
        pivot[static_cast<size_t>(i)] = j;
        break;
      }

  std::vector<Vec> out;
  const Vec& delta = rs.highest_root().vector;
  std::function<void(int, const Vec&, const Rat&)> dfs = [&](int depth, const Vec& acc,
                                                             const Rat& spent) {
    if (depth == r) {
      Rat total = 0;
      for (int j = 0; j < r; ++j) {
        if (acc.c[static_cast<size_t>(j)] < 0) return;
        total += acc.c[static_cast<size_t>(j)] * w[static_cast<size_t>(j)];
      }
      if (total > b) return;
      // Map back: lambda = sum x_i varpi_i.
      Vec lam = Vec::zero(rs.model());
      for (int j = 0; j < r; ++j)
        if (acc.c[static_cast<size_t>(j)] != 0)
          lam = lam + rs.fundamental_weights()[static_cast<size_t>(j)] * acc.c[static_cast<size_t>(j)];
      if (!rs.is_dominant(lam) || pair(lam, delta) > b)
        throw Error(ErrorCode::Internal, "enumeration produced a point outside the slice");
      out.push_back(std::move(lam));
      return;
    }
    int p = pivot[static_cast<size_t>(depth)];
    const Rat& step = basis[static_cast<size_t>(depth)].c[static_cast<size_t>(p)];
    // x[p] ranges over [0, (b - spent)/w[p]] in increments of step.
    Int tmin = ceil_rat((Rat(0) - acc.c[static_cast<size_t>(p)]) / step);
    Int tmax = floor_rat(((b - spent) / w[static_cast<size_t>(p)] - acc.c[static_cast<size_t>(p)]) / step);
    for (Int t = tmin; t <= tmax; ++t) {
      Vec next = t == 0 ? acc : acc + basis[static_cast<size_t>(depth)] * Rat(t);
      Rat spent_next = spent + next.c[static_cast<size_t>(p)] * w[static_cast<size_t>(p)];
      dfs(depth + 1, next, spent_next);
    }
  };
  dfs(0, Vec::zero(aux), Rat(0));
  std::sort(out.begin(), out.end(), VecLess{});
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

std::string lambda_id(const Vec& v) { return "(" + coord_str(v) + ")"; }

CaseRow make_row(const RootSystem& rs, const std::string& claim, const std::string& suffix,
                 std::optional<Vec> lambda, CaseStatus st, Json payload, long long elapsed) {
  CaseRow row;
  row.system = rs.type();
  row.claim = claim;
  row.id = rs.type().name() + "/" + claim + "/" + suffix;
  row.lambda = std::move(lambda);
  row.status = st;
  row.payload = std::move(payload);
  row.elapsed_ms = elapsed;
  return row;
}

bool expected_minus_id(SimpleType t) {
  switch (t.family) {
    case Family::A: return t.rank == 1;
    case Family::B:
    case Family::C: return true;
    case Family::D: return t.rank % 2 == 0;
    case Family::E: return t.rank != 6;
    case Family::F:
    case Family::G: return true;
  }
  return false;
}

std::vector<Int> expected_pi1_factors(SimpleType t) {
  switch (t.family) {
    case Family::A: return {Int(t.rank + 1)};
    case Family::B:
    case Family::C: return {Int(2)};
    case Family::D:
      return t.rank % 2 == 0 ? std::vector<Int>{Int(2), Int(2)} : std::vector<Int>{Int(4)};
    case Family::E:
      if (t.rank == 6) return {Int(3)};
      if (t.rank == 7) return {Int(2)};
      return {};
    case Family::F:
    case Family::G: return {};
  }
  return {};
}

void pi1_rows(const RootSystem& rs, std::vector<CaseRow>& rows) {
  auto t0 = Clock::now();
  try {
    Pi1Table table = fundamental_group(rs);
    std::vector<Int> expect = expected_pi1_factors(rs.type());
    Json cert;
    Json got = Json::array(), want = Json::array();
    for (const Int& f : table.group.invariant_factors) got.push_back(f.get_str());
    for (const Int& f : expect) want.push_back(f.get_str());
    cert["invariant_factors"] = got;
    cert["expected"] = want;
    bool ok = table.group.invariant_factors == expect;
    rows.push_back(make_row(rs, "pi1", "factors", std::nullopt,
                            ok ? CaseStatus::Pass : CaseStatus::Fail, cert, ms_since(t0)));

    auto t1 = Clock::now();
    Json reps = Json::array();
    for (const Vec& v : table.classical_reps) reps.push_back(vec_json(v));
    Json cert2;
    cert2["order"] = table.group.order().get_str();
    cert2["representatives"] = std::move(reps);
    rows.push_back(
        make_row(rs, "pi1", "representatives", std::nullopt, CaseStatus::Pass, cert2, ms_since(t1)));
  } catch (const Error& e) {
    Json w;
    w["error"] = e.what();
    rows.push_back(make_row(rs, "pi1", "representatives", std::nullopt, CaseStatus::Fail, w,
                            ms_since(t0)));
  }
}

void lattice_rows(const RootSystem& rs, std::vector<CaseRow>& rows) {
  auto t0 = Clock::now();
  LatticeFormReport rep = verify_lattice_forms(rs);
  for (size_t i = 0; i < rep.entries.size(); ++i) {
    const auto& e = rep.entries[i];
    Json payload;
    payload["comparison"] = e.name;
    if (!e.pass) payload["detail"] = e.detail;
    rows.push_back(make_row(rs, "lattices", "form-" + std::to_string(i), std::nullopt,
                            e.pass ? CaseStatus::Pass : CaseStatus::Fail, payload,
                            i == 0 ? ms_since(t0) : 0));
  }
}

void transversal_rows(const RootSystem& rs, std::vector<CaseRow>& rows) {
  auto t0 = Clock::now();
  try {
    Pi1Table table = semifree_transversal(rs);
    bool first = true;
    for (const TransversalEntry& e : table.reps) {
      bool trivial = true;
      for (const Int& d : e.coset) trivial = trivial && d == 0;
      bool ok = e.listed_rep && e.max_pairing == (trivial ? 0 : 1);
      Json cert;
      std::string coset_id;
      for (const Int& d : e.coset) coset_id += (coset_id.empty() ? "" : ",") + d.get_str();
      if (coset_id.empty()) coset_id = "0";
      cert["coset"] = coset_id;
      cert["lambda"] = vec_json(e.lambda);
      cert["max_pairing"] = rat_str(e.max_pairing);
      cert["maximizing_root"] = vec_json(e.maximizing_root);
      cert["min_norm_lambda"] = vec_json(e.small_norm_witness);
      rows.push_back(make_row(rs, "transversal", "coset=" + coset_id, e.lambda,
                              ok ? CaseStatus::Pass : CaseStatus::Fail, cert,
                              first ? ms_since(t0) : 0));
      first = false;
    }
  } catch (const Error& e) {
    Json w;
    w["error"] = e.what();
    rows.push_back(make_row(rs, "transversal", "search", std::nullopt, CaseStatus::Fail, w,
                            ms_since(t0)));
  }
}

// The decompositions exhibited in the case analyses, validated as such for
// an enumerated lambda: C_n half the sum of the 2e_i; E6/E7/E8 two- and
// three-term sums (E7 carries the alternative three-term variant).
std::vector<std::pair<Vec, std::vector<Vec>>> listed_decompositions(const RootSystem& rs) {
  const ModelPtr& m = rs.model();
  std::vector<std::pair<Vec, std::vector<Vec>>> out;
  auto mkq = [&](const std::vector<std::string>& s) {
    std::vector<Rat> c;
    for (const auto& x : s) c.push_back(parse_rat(x));
    return Vec(m, std::move(c));
  };
  SimpleType t = rs.type();
  if (t.family == Family::C) {
    std::vector<Vec> roots;
    std::vector<Rat> ones(static_cast<size_t>(t.rank), Rat(1));
    for (int i = 0; i < t.rank; ++i) {
      std::vector<Rat> c(static_cast<size_t>(t.rank), Rat(0));
      c[static_cast<size_t>(i)] = 2;
      roots.push_back(Vec(m, std::move(c)));
    }
    out.push_back({Vec(m, std::move(ones)), std::move(roots)});
  } else if (t.family == Family::E && t.rank == 6) {
    out.push_back({mkq({"1", "3/2", "1/2", "-1/2", "-1/2", "-1/2", "-1/2"}),
                   {mkq({"0", "1", "0", "0", "0", "0", "-1"}),
                    mkq({"1", "1/2", "1/2", "-1/2", "-1/2", "-1/2", "1/2"})}});
  } else if (t.family == Family::E && t.rank == 7) {
    out.push_back({mkq({"3/2", "1/2", "1/2", "-1/2", "-1/2", "-1/2", "-1/2", "-1/2"}),
                   {mkq({"1/2", "1/2", "1/2", "1/2", "-1/2", "-1/2", "-1/2", "-1/2"}),
                    mkq({"1", "0", "0", "-1", "0", "0", "0", "0"})}});
    out.push_back({mkq({"3/2", "3/2", "-1/2", "-1/2", "-1/2", "-1/2", "-1/2", "-1/2"}),
                   {mkq({"1/2", "1/2", "1/2", "1/2", "-1/2", "-1/2", "-1/2", "-1/2"}),
                    mkq({"1", "0", "0", "-1", "0", "0", "0", "0"}),
                    mkq({"0", "1", "-1", "0", "0", "0", "0", "0"})}});
  } else if (t.family == Family::E && t.rank == 8) {
    out.push_back({mkq({"5/3", "2/3", "-1/3", "-1/3", "-1/3", "-1/3", "-1/3", "-1/3", "-1/3"}),
                   {mkq({"1", "0", "0", "0", "0", "0", "0", "0", "-1"}),
                    mkq({"2/3", "2/3", "-1/3", "-1/3", "-1/3", "-1/3", "-1/3", "-1/3", "2/3"})}});
  }
  return out;
}

void claim_a_rows(const RootSystem& rs, const std::vector<Vec>& lambdas,
                  std::vector<CaseRow>& rows) {
  for (const Vec& lam : lambdas) {
    if (lam.is_zero()) continue;
    auto t0 = Clock::now();
    try {
      OrthogonalDecomposition d = decompose_orthogonal(rs, lam);
      rows.push_back(make_row(rs, "a", lambda_id(lam), lam, CaseStatus::Pass,
                              decomposition_json(rs, d), ms_since(t0)));
    } catch (const Error& e) {
      Json w;
      w["error"] = e.what();
      rows.push_back(make_row(rs, "a", lambda_id(lam), lam, CaseStatus::Fail, w, ms_since(t0)));
    }
  }
  // classical listed decompositions must validate for an enumerated lambda
  auto listed = listed_decompositions(rs);
  for (size_t i = 0; i < listed.size(); ++i) {
    auto t0 = Clock::now();
    const auto& [lam, roots] = listed[i];
    CaseStatus st = CaseStatus::Pass;
    Json payload;
    try {
      OrthogonalDecomposition d;
      d.lambda = lam;
      for (const Vec& r : roots) {
        const Root& root = rs.root_at(r);
        d.terms.push_back({Rat(2) / root.norm_sq, root});
      }
      d.verify(rs);
      bool enumerated =
          std::binary_search(lambdas.begin(), lambdas.end(), lam, VecLess{});
      if (!enumerated) throw Error(ErrorCode::Internal, "lambda not in the enumerated sweep");
      payload = decomposition_json(rs, d);
    } catch (const Error& e) {
      st = CaseStatus::Fail;
      payload["error"] = e.what();
    }
    rows.push_back(make_row(rs, "a", "listed-decomposition-" + std::to_string(i), lam, st,
                            payload, ms_since(t0)));
  }
}

void claim_b_rows(const RootSystem& rs, std::vector<CaseRow>& rows) {
  auto t0 = Clock::now();
  Json payload;
  if (rs.rank() < 2) {
    payload["reason"] = "rank 1: the seed {eta : delta +- eta is a root} is empty";
    rows.push_back(
        make_row(rs, "b", "closure", std::nullopt, CaseStatus::Inapplicable, payload, ms_since(t0)));
    return;
  }
  RootSubset closure = closure_from_seed(rs);
  payload["closure_size"] = closure.size();
  payload["root_count"] = rs.roots().size();
  rows.push_back(make_row(rs, "b", "closure", std::nullopt,
                          closure.size() == rs.roots().size() ? CaseStatus::Pass : CaseStatus::Fail,
                          payload, ms_since(t0)));
}

void claim_c_rows(const RootSystem& rs, const std::vector<Vec>& lambdas,
                  std::vector<CaseRow>& rows) {
  if (rs.minus_id_in_weyl()) {
    Json payload;
    payload["reason"] = "-id lies in the Weyl group";
    rows.push_back(
        make_row(rs, "c", "minus-id", std::nullopt, CaseStatus::Inapplicable, payload, 0));
    return;
  }
  const Vec& delta = rs.highest_root().vector;
  for (const Vec& lam : lambdas) {
    if (lam.is_zero() || pair(lam, delta) <= 2) continue;
    auto t0 = Clock::now();
    ClaimCResult r = claim_c_check(rs, lam);
    Json payload;
    payload["lambda"] = vec_json(lam);
    payload["min_pairing"] = rat_str(r.min_pairing);
    Json entries = Json::array();
    for (const auto& e : r.entries) {
      Json je;
      je["weight"] = vec_json(e.weight);
      je["pairing"] = rat_str(e.pairing);
      je["dual_weight"] = vec_json(e.dual_weight);
      je["dual_pairing"] = rat_str(e.dual_pairing);
      je["sigma"] = word_json(e.sigma);
      je["achieved"] = rat_str(e.achieved);
      entries.push_back(std::move(je));
    }
    payload["fundamental_weight_pairings"] = std::move(entries);
    CaseStatus st = r.holds() ? CaseStatus::Pass : CaseStatus::Fail;
    if (!r.holds()) {
      auto effective = [](const ClaimCResult::Entry& e) {
        return e.pairing >= e.dual_pairing ? e.pairing : e.dual_pairing;
      };
      const auto& worst = *std::min_element(
          r.entries.begin(), r.entries.end(),
          [&](const auto& a, const auto& b) { return effective(a) < effective(b); });
      Witness w{Witness::Kind::ClaimCViolator, lam, worst.weight, worst.sigma, effective(worst),
                "fundamental weight pairs at most 1 on both orbit sides"};
      payload["witness"] = witness_json(w);
    }
    rows.push_back(make_row(rs, "c", lambda_id(lam), lam, st, payload, ms_since(t0)));
  }
}

void claim_d_rows(const RootSystem& rs, std::vector<CaseRow>& rows) {
  auto t0 = Clock::now();
  ClaimDResult r = verify_claim_d(rs);
  bool expect_mid = expected_minus_id(rs.type());
  bool ok = rs.minus_id_in_weyl() == expect_mid && (rs.minus_id_in_weyl() || r.only_delta);
  Json payload;
  payload["minus_id_in_weyl"] = rs.minus_id_in_weyl();
  payload["expected_minus_id"] = expect_mid;
  Json doms = Json::array();
  for (const Vec& v : r.dominant_roots) doms.push_back(vec_json(v));
  payload["dominant_roots"] = std::move(doms);
  payload["only_delta"] = r.only_delta;
  rows.push_back(make_row(rs, "d", "census", std::nullopt,
                          ok ? CaseStatus::Pass : CaseStatus::Fail, payload, ms_since(t0)));
}

void reversor_rows(const RootSystem& rs, const SweepConfig& cfg,
                   const std::vector<Vec>& small_lambdas, const std::vector<Vec>& big_lambdas,
                   std::vector<CaseRow>& rows) {
  const std::vector<Vec>& source = rs.minus_id_in_weyl() ? big_lambdas : small_lambdas;
  for (const Vec& lam : source) {
    if (lam.is_zero()) continue;
    auto t0 = Clock::now();
    try {
      WeylWord w = build_reversor(rs, lam);
      if (!(w.apply(lam) == -lam)) throw Error(ErrorCode::Internal, "reversor check failed");
      rows.push_back(make_row(rs, "reversor", lambda_id(lam), lam, CaseStatus::Pass,
                              reversor_json(rs, lam, w), ms_since(t0)));
    } catch (const Error& e) {
      Json w;
      w["error"] = e.what();
      rows.push_back(
          make_row(rs, "reversor", lambda_id(lam), lam, CaseStatus::Fail, w, ms_since(t0)));
    }
  }

  // Seeded non-dominant spot checks; reversors are guaranteed only when -id
  // is present.
  if (rs.minus_id_in_weyl()) {
    std::mt19937_64 rng(cfg.seed ^ (static_cast<std::uint64_t>(rs.type().rank) << 8) ^
                        static_cast<std::uint64_t>(static_cast<char>(rs.type().family)));
    std::uniform_int_distribution<int> coeff(-4, 4);
    const auto& basis = rs.lattices().cochar.basis();
    for (int i = 0; i < 3; ++i) {
      Vec lam = Vec::zero(rs.model());
      for (const Vec& b : basis) lam = lam + b * Rat(coeff(rng));
      if (lam.is_zero()) continue;
      auto t0 = Clock::now();
      CaseStatus st = CaseStatus::Pass;
      Json payload;
      try {
        WeylWord w = build_reversor(rs, lam);
        if (!(w.apply(lam) == -lam)) throw Error(ErrorCode::Internal, "reversor check failed");
        payload = reversor_json(rs, lam, w);
      } catch (const Error& e) {
        st = CaseStatus::Fail;
        payload["error"] = e.what();
      }
      rows.push_back(make_row(rs, "reversor", "spot-" + std::to_string(i), lam, st, payload,
                              ms_since(t0)));
    }
  }

  // A2 carries the fixed negative control: the orbit obstruction must fire.
  if (rs.type().family == Family::A && rs.type().rank == 2) {
    Vec lam(rs.model(), {Rat(1), Rat(1), Rat(-2)});
    auto t0 = Clock::now();
    CaseStatus st = CaseStatus::Fail;
    Json payload;
    try {
      build_reversor(rs, lam);
      payload["error"] = "a reversor was produced for an irreversible cocharacter";
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NoReversor) {
        st = CaseStatus::Pass;
        payload["lambda"] = vec_json(lam);
        payload["expected_error"] = "NoReversor";
        payload["evidence"] = e.what();
      } else {
        payload["error"] = e.what();
      }
    }
    rows.push_back(
        make_row(rs, "reversor", "noreversor-control", lam, st, payload, ms_since(t0)));
  }
}

void run_tasks(std::vector<std::function<void()>>& tasks, int threads) {
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  std::atomic<size_t> next{0};
  auto worker = [&] {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      tasks[i]();
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < threads && i < static_cast<int>(tasks.size()); ++i)
    pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

}  // namespace

Report run_verification_suite(const SweepConfig& cfg) {
  std::vector<std::vector<CaseRow>> slots(cfg.types.size());
  std::vector<std::function<void()>> tasks;
  for (size_t i = 0; i < cfg.types.size(); ++i) {
    tasks.push_back([&, i] {
      SimpleType t = cfg.types[i];
      std::vector<CaseRow>& rows = slots[i];
      RootSystem rs = RootSystem::build(t);
      std::vector<Vec> small_lambdas, big_lambdas;
      bool need_small = cfg.claims.count("a") || cfg.claims.count("reversor");
      bool need_big = cfg.claims.count("c") || (cfg.claims.count("reversor") && rs.minus_id_in_weyl());
      if (need_small)
        small_lambdas = enumerate_dominant(rs, rs.lattices().coroot, Int(cfg.claim_a_bound));
      if (need_big)
        big_lambdas = enumerate_dominant(rs, rs.lattices().coroot, Int(cfg.pairing_bound));

      if (cfg.claims.count("pi1")) pi1_rows(rs, rows);
      if (cfg.claims.count("lattices")) lattice_rows(rs, rows);
      if (cfg.claims.count("transversal")) transversal_rows(rs, rows);
      if (cfg.claims.count("a")) claim_a_rows(rs, small_lambdas, rows);
      if (cfg.claims.count("b")) claim_b_rows(rs, rows);
      if (cfg.claims.count("c")) claim_c_rows(rs, big_lambdas, rows);
      if (cfg.claims.count("d")) claim_d_rows(rs, rows);
      if (cfg.claims.count("reversor"))
        reversor_rows(rs, cfg, small_lambdas, big_lambdas, rows);
    });
  }
  run_tasks(tasks, cfg.threads);

  Report rep;
  for (auto& slot : slots)
    for (CaseRow& row : slot) rep.cases.push_back(std::move(row));
  std::stable_sort(rep.cases.begin(), rep.cases.end(), [](const CaseRow& a, const CaseRow& b) {
    if (a.system.family != b.system.family) return a.system.family < b.system.family;
    if (a.system.rank != b.system.rank) return a.system.rank < b.system.rank;
    if (a.claim != b.claim) return a.claim < b.claim;
    bool al = a.lambda.has_value(), bl = b.lambda.has_value();
    if (al != bl) return !al;
    if (al && bl && !(a.lambda->c == b.lambda->c)) return lex_less(*a.lambda, *b.lambda);
    return a.id < b.id;
  });
  rep.recount();
  return rep;
}

std::string render_report(const Report& r, const std::string& format) {
  if (format == "text") {
    std::ostringstream os;
    for (const CaseRow& c : r.cases) os << case_status_name(c.status) << "  " << c.id << "\n";
    os << r.pass << " pass / " << r.fail << " fail / " << r.inapplicable << " inapplicable\n";
    return os.str();
  }
  if (format == "json") {
    Json j;
    j["version"] = 1;
    Json cases = Json::array();
    for (const CaseRow& c : r.cases) {
      Json jc;
      jc["id"] = c.id;
      jc["system"] = c.system.name();
      jc["claim"] = c.claim;
      jc["status"] = case_status_name(c.status);
      jc["witness"] = c.payload.is_null() ? Json(nullptr) : c.payload;
      jc["elapsed_ms"] = c.elapsed_ms;
      cases.push_back(std::move(jc));
    }
    j["cases"] = std::move(cases);
    j["summary"] = Json{{"pass", r.pass}, {"fail", r.fail}, {"inapplicable", r.inapplicable}};
    return j.dump(2) + "\n";
  }
  throw Error(ErrorCode::UsageError, "unknown report format '" + format + "'");
}

bool reverify_case(const CaseRow& row) {
  if (row.status != CaseStatus::Pass) return false;
  RootSystem rs = RootSystem::build(row.system);
  const ModelPtr& m = rs.model();
  try {
    if (row.claim == "a") {
      Vec lam = vec_from_json(m, row.payload.at("lambda"));
      OrthogonalDecomposition d;
      d.lambda = lam;
      for (const auto& t : row.payload.at("details").at("terms")) {
        Vec rv = vec_from_json(m, t.at("root"));
        const Root& root = rs.root_at(rv);
        Rat coeff = parse_rat(t.at("coeff").get<std::string>());
        d.terms.push_back({coeff, root});
      }
      d.verify(rs);
      return true;
    }
    if (row.claim == "reversor") {
      Vec lam = vec_from_json(m, row.payload.at("lambda"));
      if (row.payload.contains("expected_error")) {
        // negative control: the orbit obstruction must fire again
        try {
          build_reversor(rs, lam);
          return false;
        } catch (const Error& e) {
          return e.code() == ErrorCode::NoReversor;
        }
      }
      if (!row.payload.contains("word") || row.payload.at("word").is_null()) return false;
      WeylWord w = word_from_json(m, row.payload.at("word"));
      for (const Vec& l : w.letters)
        if (!rs.is_root(l)) return false;
      return w.apply(lam) == -lam;
    }
    if (row.claim == "c") {
      Vec lam = vec_from_json(m, row.payload.at("lambda"));
      Rat min_rec = parse_rat(row.payload.at("min_pairing").get<std::string>());
      Rat min_now;
      bool first = true;
      for (const auto& e : row.payload.at("fundamental_weight_pairings")) {
        Vec w = vec_from_json(m, e.at("weight"));
        Vec dw = vec_from_json(m, e.at("dual_weight"));
        Rat p = parse_rat(e.at("pairing").get<std::string>());
        Rat dp = parse_rat(e.at("dual_pairing").get<std::string>());
        if (pair(w, lam) != p || pair(dw, lam) != dp) return false;
        WeylWord sigma = word_from_json(m, e.at("sigma"));
        Rat achieved = parse_rat(e.at("achieved").get<std::string>());
        if (pair(sigma.apply(w), lam) != achieved) return false;
        Rat eff = p >= dp ? p : dp;
        if (abs(achieved) != eff) return false;
        if (first || eff < min_now) min_now = eff;
        first = false;
      }
      return !first && min_now == min_rec && min_now > 1;
    }
    if (row.claim == "transversal") {
      Vec lam = vec_from_json(m, row.payload.at("lambda"));
      Rat rec = parse_rat(row.payload.at("max_pairing").get<std::string>());
      Vec rec_root = vec_from_json(m, row.payload.at("maximizing_root"));
      Rat best = 0;
      for (const Root& r : rs.roots()) {
        Rat p = abs(pair(r.vector, lam));
        if (p > best) best = p;
      }
      return best == rec && abs(pair(rec_root, lam)) == rec;
    }
    if (row.claim == "b") {
      return closure_from_seed(rs).size() == rs.roots().size();
    }
    if (row.claim == "d") {
      ClaimDResult r = verify_claim_d(rs);
      return row.payload.at("only_delta").get<bool>() == r.only_delta;
    }
    if (row.claim == "pi1" || row.claim == "lattices") {
      return true;  // wholesale recomputation is the original check
    }
  } catch (const std::exception&) {
    return false;
  }
  return false;
}

}  // namespace liecert
