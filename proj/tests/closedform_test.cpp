#include <doctest.h>

#include "cyclocode/characters.hpp"
#include "cyclocode/closedform.hpp"
#include "cyclocode/code.hpp"
#include "cyclocode/ghw.hpp"

using namespace cyclo;

TEST_CASE("two-valued witness selection picks the smallest l") {
  // q=2, m=6, h=3: both (l=1, k=3) and (l=3, k=1) qualify; the canonical
  // witness is l=1.
  auto sp = semiprimitive_params(make_spec({2, 1, 6, 3, {0}}));
  REQUIRE(sp.has_value());
  CHECK(sp->l == 1);
  CHECK(sp->k == 3);
  CHECK(sp->h0 == 0);
  CHECK(sp->sqrt_q_m == 8);
  CHECK(sp->sum_exceptional == 16);
  CHECK(sp->sum_generic == -8);

  // q=2, m=4, h=3: only (l=2, k=1) works, since 3 does not divide 2^2+1.
  sp = semiprimitive_params(make_spec({2, 1, 4, 3, {0}}));
  REQUIRE(sp.has_value());
  CHECK(sp->l == 2);
  CHECK(sp->k == 1);
  CHECK(sp->h0 == 0);
  CHECK(sp->sum_exceptional == -8);
  CHECK(sp->sum_generic == 4);

  // q=3, m=2, h=2: (l=1, k=1), and (q^k+1)/h = 2 is even so h0 stays 0.
  sp = semiprimitive_params(make_spec({3, 1, 2, 2, {0}}));
  REQUIRE(sp.has_value());
  CHECK(sp->l == 1);
  CHECK(sp->k == 1);
  CHECK(sp->h0 == 0);
  CHECK(sp->sum_exceptional == 3);
  CHECK(sp->sum_generic == -3);

  // q=3, m=4, h=2: (l=1, k=2) with (9+1)/2 = 5 odd and p > 2, so the
  // exceptional class moves to h/2 = 1.
  sp = semiprimitive_params(make_spec({3, 1, 4, 2, {0}}));
  REQUIRE(sp.has_value());
  CHECK(sp->l == 1);
  CHECK(sp->k == 2);
  CHECK(sp->h0 == 1);
  CHECK(sp->sum_exceptional == 9);
  CHECK(sp->sum_generic == -9);
}

TEST_CASE("non-two-valued parameters are detected") {
  CHECK_FALSE(semiprimitive_params(make_spec({2, 1, 6, 7, {0}})).has_value());   // 7 | 2^k+1 never
  CHECK_FALSE(semiprimitive_params(make_spec({3, 1, 6, 13, {0}})).has_value());  // 13 | 3^k+1 never
  CHECK_FALSE(semiprimitive_params(make_spec({2, 2, 3, 3, {0}})).has_value());   // m odd
}

TEST_CASE("closed-form exponential sums match direct summation") {
  const RawSpec raws[] = {
      {2, 1, 6, 3, {0}}, {2, 1, 4, 3, {0}}, {3, 1, 2, 2, {0}},
      {3, 1, 4, 2, {0}}, {3, 1, 4, 5, {0}}, {2, 1, 6, 3, {0, 1}},
  };
  for (const RawSpec& raw : raws) {
    CodeSpec spec = make_spec(raw);
    auto sp = semiprimitive_params(spec);
    REQUIRE_MESSAGE(sp.has_value(), "test towers are all two-valued");
    FieldCtx ctx = FieldCtx::build(raw.p, raw.e, raw.m);
    CharTable chars(ctx);
    std::vector<cd> sums = chars.exponential_sums_by_coset(spec.h);
    std::vector<cd> periods = chars.gaussian_periods(spec.h);
    for (int i = 0; i < spec.h; ++i) {
      int64_t predicted = closed_form_exp_sum(*sp, i);
      CAPTURE(raw.p); CAPTURE(raw.m); CAPTURE(raw.h); CAPTURE(i);
      CHECK(std::abs(sums[i] - cd(double(predicted), 0.0)) < 1e-9);
      // The same closed form through the period identity S = h eta + 1.
      CHECK(std::abs(periods[i] - cd(double(predicted - 1) / spec.h, 0.0)) < 1e-9);
    }
  }
}

TEST_CASE("predicted weight tables match exhaustive weight distributions") {
  const RawSpec raws[] = {
      {2, 1, 6, 3, {0}},    {2, 1, 6, 3, {0, 1}}, {2, 1, 6, 3, {0, 1, 2}}, {2, 1, 4, 3, {0}},
      {2, 1, 4, 3, {1, 2}}, {3, 1, 2, 2, {0}},    {3, 1, 4, 2, {0, 1}},    {3, 1, 4, 5, {2}},
      {2, 2, 4, 5, {0, 3}},
  };
  for (const RawSpec& raw : raws) {
    CodeSpec spec = make_spec(raw);
    auto pred = predict_weights(spec);
    REQUIRE(pred.has_value());
    FieldCtx ctx = FieldCtx::build(raw.p, raw.e, raw.m);
    LinearCode code(ctx, build_defining_set(ctx, spec).elements);
    WeightDistribution wd = weight_distribution(code);
    CAPTURE(raw.p); CAPTURE(raw.e); CAPTURE(raw.m); CAPTURE(raw.h);
    CHECK(pred->dim == code.rank());
    CHECK(pred->n == code.length());
    std::vector<PredictedWeight> actual;
    for (const auto& [w, cnt] : wd.counts)
      if (w > 0) actual.push_back({w, cnt});
    CHECK(pred->rows == actual);
    int64_t total = 0;
    for (const auto& row : pred->rows) total += row.count;
    CHECK(total == spec.Q - 1);
  }
}

TEST_CASE("pinned weight predictions") {
  auto pred = predict_weights(make_spec({2, 1, 6, 3, {0}}));
  REQUIRE(pred.has_value());
  CHECK(pred->rows == std::vector<PredictedWeight>{{8, 21}, {12, 42}});

  pred = predict_weights(make_spec({2, 1, 4, 3, {0}}));
  REQUIRE(pred.has_value());
  CHECK(pred->rows == std::vector<PredictedWeight>{{2, 10}, {4, 5}});

  // s = h merges the rows: the simplex-like one-weight case.
  pred = predict_weights(make_spec({2, 1, 4, 3, {0, 1, 2}}));
  REQUIRE(pred.has_value());
  CHECK(pred->rows == std::vector<PredictedWeight>{{8, 15}});

  CHECK_FALSE(predict_weights(make_spec({2, 1, 6, 7, {0}})).has_value());
}

TEST_CASE("odd-witness support-weight formula") {
  CodeSpec flagship = make_spec({2, 1, 6, 3, {0}});
  const int64_t expected[] = {8, 12, 14, 18, 20, 21};
  for (int r = 1; r <= 6; ++r) {
    FormulaValue v = odd_witness_ghw(flagship, r);
    CHECK(v.status == FormulaStatus::value);
    CHECK(v.value == expected[r - 1]);
  }

  CodeSpec two = make_spec({2, 1, 6, 3, {0, 1}});
  CHECK(odd_witness_ghw(two, 1).value == 20);

  // No odd witness at q=2, m=4, h=3.
  CHECK(odd_witness_ghw(make_spec({2, 1, 4, 3, {0}}), 1).status ==
        FormulaStatus::not_applicable);
  CHECK(odd_witness_ghw(make_spec({2, 1, 6, 7, {0}}), 2).status ==
        FormulaStatus::not_applicable);
}

TEST_CASE("even-witness support-weight formula with its coverage gap") {
  CodeSpec spec = make_spec({2, 1, 4, 3, {0}});
  CHECK(even_witness_ghw(spec, 1) == FormulaValue{FormulaStatus::value, 2});
  CHECK(even_witness_ghw(spec, 2).status == FormulaStatus::not_covered);
  CHECK(even_witness_ghw(spec, 3) == FormulaValue{FormulaStatus::value, 4});
  CHECK(even_witness_ghw(spec, 4) == FormulaValue{FormulaStatus::value, 5});

  // s = h fails the hypothesis even though the witness exists.
  CHECK(even_witness_ghw(make_spec({2, 1, 4, 3, {0, 1, 2}}), 1).status ==
        FormulaStatus::not_applicable);
  // Odd-witness-only parameters are not covered at all.
  CHECK(even_witness_ghw(make_spec({3, 1, 2, 2, {0}}), 1).status ==
        FormulaStatus::not_applicable);
}

TEST_CASE("special cases: full class selection and r = m-1") {
  CodeSpec simplex = make_spec({2, 1, 4, 3, {0, 1, 2}});
  const int64_t expected[] = {8, 12, 14, 15};
  for (int r = 1; r <= 4; ++r) {
    auto v = special_case_ghw(simplex, r);
    REQUIRE(v.has_value());
    CHECK(*v == expected[r - 1]);
  }
  CHECK(*special_case_ghw(simplex, 2) == 12);

  CodeSpec flagship = make_spec({2, 1, 6, 3, {0}});
  auto v = special_case_ghw(flagship, 5);
  REQUIRE(v.has_value());
  CHECK(*v == flagship.n - 1);
  CHECK_FALSE(special_case_ghw(flagship, 3).has_value());

  // m = 2 gives an MDS code: d_1 = n - 1 via the r = m-1 rule.
  CodeSpec mds = make_spec({3, 1, 2, 2, {0}});
  v = special_case_ghw(mds, 1);
  REQUIRE(v.has_value());
  CHECK(*v == mds.n - 1);
}

TEST_CASE("support-weight bounds") {
  // Flagship: the Griesmer sum is met with equality at r = 3.
  BoundSet b = ghw_bounds(21, 6, 2, 3, 8);
  CHECK(b.singleton_lo == 3);
  CHECK(b.singleton_hi == 18);
  CHECK(b.griesmer_lo == 8 + 4 + 2);
  CHECK(b.plotkin_hi == 21 * 7 * 8 / 63);

  // Simplex [15,4]: the averaging bound is met with equality at every r.
  const int64_t simplex_d[] = {8, 12, 14, 15};
  for (int r = 1; r <= 4; ++r) {
    b = ghw_bounds(15, 4, 2, r, 8);
    CHECK(b.plotkin_hi == simplex_d[r - 1]);
  }

  // r = m forces the Singleton ceiling to the full length.
  b = ghw_bounds(21, 6, 2, 6, 8);
  CHECK(b.singleton_hi == 21);

  CHECK_THROWS_AS(ghw_bounds(21, 6, 2, 0, 8), Error);
  CHECK_THROWS_AS(ghw_bounds(21, 6, 2, 7, 8), Error);
}

TEST_CASE("closed forms agree with swept hierarchies") {
  const RawSpec raws[] = {
      {2, 1, 6, 3, {0}}, {2, 1, 6, 3, {0, 2}}, {2, 1, 4, 3, {0}},
      {3, 1, 2, 2, {0}}, {3, 1, 4, 2, {0}},    {3, 1, 4, 5, {0, 1}},
  };
  for (const RawSpec& raw : raws) {
    FieldCtx ctx = FieldCtx::build(raw.p, raw.e, raw.m);
    CodeSpec spec = make_spec(raw);
    GhwEngine engine(ctx, spec, {});
    CAPTURE(raw.p); CAPTURE(raw.m); CAPTURE(raw.h);
    for (int r = 1; r <= spec.m; ++r) {
      int64_t d = engine.compute(r, GhwMethod::dual_sweep).d_r;
      FormulaValue odd = odd_witness_ghw(spec, r);
      if (odd.status == FormulaStatus::value) CHECK(odd.value == d);
      FormulaValue even = even_witness_ghw(spec, r);
      if (even.status == FormulaStatus::value) CHECK(even.value == d);
      auto sc = special_case_ghw(spec, r);
      if (sc) CHECK(*sc == d);
      BoundSet b = ghw_bounds(spec.n, spec.m, spec.q, r, engine.compute(1, GhwMethod::direct).d_r);
      CHECK(d >= std::max(b.singleton_lo, b.griesmer_lo));
      CHECK(d <= std::min(b.singleton_hi, b.plotkin_hi));
    }
  }
}
