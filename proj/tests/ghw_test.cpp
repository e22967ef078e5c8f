#include <doctest.h>

#include <algorithm>
#include <span>

#include "cyclocode/closedform.hpp"
#include "cyclocode/ghw.hpp"

using namespace cyclo;

namespace {

struct Instance {
  FieldCtx ctx;
  CodeSpec spec;
  GhwEngine engine;

  explicit Instance(RawSpec raw, Budgets budgets = {})
      : ctx(FieldCtx::build(raw.p, raw.e, raw.m, budgets)),
        spec(make_spec(raw)),
        engine(ctx, spec, budgets) {}
};

std::vector<int64_t> weights(const std::vector<GhwResult>& h) {
  std::vector<int64_t> out;
  for (const auto& res : h) out.push_back(res.d_r);
  return out;
}

constexpr GhwMethod kMethods[] = {GhwMethod::direct, GhwMethod::dual_sweep, GhwMethod::gauss_sum,
                                  GhwMethod::period_sum};

// Exhaustive oracle for d_r: enumerate r-subspaces of the message space and
// take the largest number of coordinates annihilated by the whole subspace,
// using only codeword() from the code module.
int64_t brute_ghw(const LinearCode& code, int r) {
  const FieldCtx& ctx = code.ctx();
  SubspaceEnumerator en(ctx.m(), r, ctx.q());
  Subspace s;
  int64_t best = -1;
  while (en.next(s)) {
    std::vector<bool> zero(size_t(code.length()), true);
    for (int i = 0; i < s.r; ++i) {
      Fe b = ctx.uncoords(std::span<const uint16_t>(s.rows.data() + size_t(i) * s.m, size_t(s.m)));
      std::vector<uint16_t> cw = code.codeword(b);
      for (size_t j = 0; j < cw.size(); ++j)
        if (cw[j] != 0) zero[j] = false;
    }
    int64_t cnt = std::count(zero.begin(), zero.end(), true);
    best = std::max(best, cnt);
  }
  return code.length() - best;
}

}  // namespace

TEST_CASE("flagship hierarchy by all four methods") {
  Instance inst({2, 1, 6, 3, {0}});
  const std::vector<int64_t> expected{8, 12, 14, 18, 20, 21};
  for (GhwMethod method : kMethods) {
    CAPTURE(to_string(method));
    auto h = inst.engine.hierarchy(method);
    CHECK(weights(h) == expected);
    for (const auto& res : h) {
      CHECK(res.d_r == inst.spec.n - res.n_r);
      CHECK(inst.engine.evaluate_witness(res) == res.witness_value);
      int dim = method == GhwMethod::dual_sweep ? inst.spec.m - res.r : res.r;
      CHECK(res.witness.r == dim);
    }
  }
}

TEST_CASE("hierarchies across small specs agree with the exhaustive oracle") {
  const RawSpec raws[] = {
      {2, 1, 4, 3, {0}},    {2, 1, 4, 3, {0, 1}},  {2, 1, 4, 3, {0, 1, 2}},
      {3, 1, 2, 2, {0}},    {3, 1, 2, 2, {0, 1}},  {2, 2, 3, 3, {0, 2}},
      {3, 1, 4, 5, {1, 3}}, {2, 1, 6, 7, {0, 3}},
  };
  for (const RawSpec& raw : raws) {
    Instance inst(raw);
    CAPTURE(raw.p); CAPTURE(raw.e); CAPTURE(raw.m); CAPTURE(raw.h);
    for (int r = 1; r <= inst.spec.m; ++r) {
      int64_t oracle = brute_ghw(inst.engine.code(), r);
      for (GhwMethod method : kMethods) {
        GhwResult res = inst.engine.compute(r, method);
        CAPTURE(to_string(method)); CAPTURE(r);
        CHECK(res.d_r == oracle);
      }
    }
  }
}

TEST_CASE("pinned hierarchies") {
  CHECK(weights(Instance({2, 1, 4, 3, {0}}).engine.hierarchy(GhwMethod::direct)) ==
        std::vector<int64_t>{2, 3, 4, 5});
  CHECK(weights(Instance({2, 1, 4, 3, {0, 1, 2}}).engine.hierarchy(GhwMethod::dual_sweep)) ==
        std::vector<int64_t>{8, 12, 14, 15});
  CHECK(weights(Instance({3, 1, 2, 2, {0}}).engine.hierarchy(GhwMethod::period_sum)) ==
        std::vector<int64_t>{1, 2});
  CHECK(weights(Instance({2, 1, 6, 3, {0, 1}}).engine.hierarchy(GhwMethod::gauss_sum)) ==
        std::vector<int64_t>{20, 30, 35, 39, 41, 42});
}

TEST_CASE("first support weight equals the minimum nonzero codeword weight") {
  const RawSpec raws[] = {
      {2, 1, 6, 3, {0}}, {2, 1, 4, 3, {0, 2}}, {3, 1, 4, 8, {1, 5}}, {2, 2, 3, 3, {0}},
  };
  for (const RawSpec& raw : raws) {
    Instance inst(raw);
    CAPTURE(raw.p); CAPTURE(raw.e); CAPTURE(raw.m); CAPTURE(raw.h);
    WeightDistribution wd = weight_distribution(inst.engine.code());
    int64_t min_w = 0;
    for (const auto& [w, cnt] : wd.counts)
      if (w > 0) {
        min_w = w;
        break;
      }
    CHECK(inst.engine.compute(1, GhwMethod::direct).d_r == min_w);
    CHECK(inst.engine.compute(1, GhwMethod::gauss_sum).d_r == min_w);
  }
}

TEST_CASE("top support weight is the full length and witnesses have the right shape") {
  Instance inst({3, 1, 4, 4, {1, 2}});
  for (GhwMethod method : kMethods) {
    GhwResult res = inst.engine.compute(inst.spec.m, method);
    CAPTURE(to_string(method));
    CHECK(res.d_r == inst.spec.n);
    CHECK(res.n_r == 0);
  }
}

TEST_CASE("direct-method count equals the membership count in the trace dual") {
  // The annihilator count of a message subspace H equals the number of
  // defining elements lying in the dual of H under the trace pairing,
  // exhaustively over every subspace of every dimension.
  Instance inst({2, 1, 4, 3, {0, 1}});
  const auto& elems = inst.engine.defining().elements;
  for (int r = 1; r <= inst.spec.m; ++r) {
    SubspaceEnumerator en(inst.spec.m, r, inst.spec.q);
    Subspace s;
    while (en.next(s)) {
      int64_t direct = 0;
      for (Fe d : elems) {
        bool annihilated = true;
        for (int i = 0; i < s.r && annihilated; ++i) {
          Fe b = inst.ctx.uncoords(
              std::span<const uint16_t>(s.rows.data() + size_t(i) * s.m, size_t(s.m)));
          annihilated = inst.ctx.trace_to_q(inst.ctx.mul(b, d)) == 0;
        }
        direct += annihilated;
      }
      CHECK(direct == intersect_count(trace_dual(s, inst.ctx), inst.ctx, elems));
    }
  }
}

TEST_CASE("results are identical across thread counts") {
  Budgets four;
  four.threads = 4;
  Instance seq({2, 1, 6, 3, {0, 2}});
  Instance par({2, 1, 6, 3, {0, 2}}, four);
  for (GhwMethod method : kMethods) {
    for (int r : {2, 3, 5}) {
      GhwResult a = seq.engine.compute(r, method);
      GhwResult b = par.engine.compute(r, method);
      CAPTURE(to_string(method)); CAPTURE(r);
      CHECK(a.d_r == b.d_r);
      CHECK(a.n_r == b.n_r);
      CHECK(a.witness == b.witness);
    }
  }
}

TEST_CASE("ties resolve to the earliest enumerated subspace") {
  Instance inst({2, 1, 4, 3, {0}});
  GhwResult res = inst.engine.compute(1, GhwMethod::dual_sweep);
  // Scan by hand for the first optimum in enumeration order.
  SubspaceEnumerator en(inst.spec.m, inst.spec.m - 1, inst.spec.q);
  Subspace s, first;
  int64_t best = -1;
  while (en.next(s)) {
    int64_t v = intersect_count(s, inst.ctx, inst.engine.defining().elements);
    if (v > best) {
      best = v;
      first = s;
    }
  }
  CHECK(res.witness == first);
  CHECK(res.n_r == best);
}

TEST_CASE("rank-deficient codes are rejected by the direct method") {
  FieldCtx ctx = FieldCtx::build(2, 1, 4);
  // theta^5 generates the cubic subgroup, so all three elements lie in the
  // F_4 subfield and span only a 2-dimensional F_2-subspace.
  LinearCode code(ctx, {ctx.one(), ctx.theta_pow(5), ctx.theta_pow(10)});
  REQUIRE(code.rank() == 2);
  try {
    ghw_direct_code(code, 1);
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.code() == errc::rank_deficient);
    CHECK(err.category() == error_category::validation);
  }
}

TEST_CASE("full-rank codes work through ghw_direct_code") {
  FieldCtx ctx = FieldCtx::build(2, 1, 4);
  CodeSpec spec = make_spec({2, 1, 4, 3, {0}});
  GhwEngine engine(ctx, spec, {});
  GhwResult via_free = ghw_direct_code(engine.code(), 2);
  CHECK(via_free.d_r == 3);
}

TEST_CASE("out-of-range r and tiny budgets are rejected") {
  Instance inst({2, 1, 4, 3, {0}});
  CHECK_THROWS_AS(inst.engine.compute(0, GhwMethod::direct), Error);
  CHECK_THROWS_AS(inst.engine.compute(5, GhwMethod::gauss_sum), Error);
  Budgets tiny;
  tiny.subspace_budget = 3;
  Instance starved({2, 1, 4, 3, {0}}, tiny);
  try {
    starved.engine.compute(2, GhwMethod::direct);
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.code() == errc::budget_exceeded);
    CHECK(err.category() == error_category::budget);
  }
}

TEST_CASE("visited counts match the subspace census") {
  Instance inst({2, 1, 6, 3, {0}});
  GhwResult res = inst.engine.compute(3, GhwMethod::period_sum);
  CHECK(res.visited == gaussian_binomial(6, 3, 2));
  GhwResult dual = inst.engine.compute(2, GhwMethod::dual_sweep);
  CHECK(dual.visited == gaussian_binomial(6, 4, 2));
}
