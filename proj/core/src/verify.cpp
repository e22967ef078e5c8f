#include "cyclocode/verify.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "cyclocode/characters.hpp"
#include "cyclocode/code.hpp"
#include "cyclocode/errors.hpp"

namespace cyclo {

namespace {

bool admissible_h(int64_t q, int64_t Q, int64_t h) {
  if (h < 2) return false;
  if ((h - 1) * (h - 1) >= Q) return false;
  return (Q - 1) % (h * (q - 1)) == 0;
}

int64_t parse_int(const std::string& tok, int lineno, const char* what) {
  int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    fail(errc::grid_parse_error, "line " + std::to_string(lineno) + ": '" + tok +
                                     "' is not an integer " + what);
  return value;
}

int64_t snap_real(double v, double tol, const char* what) {
  double r = std::nearbyint(v);
  if (std::abs(v - r) > tol * std::max(1.0, std::abs(v)))
    fail(errc::consistency_failure,
         std::string(what) + " = " + std::to_string(v) + " is not numerically integral");
  return int64_t(r);
}

int64_t exact_div(int64_t num, int64_t den, const char* what) {
  if (den == 0 || num % den != 0)
    fail(errc::consistency_failure, std::string(what) + ": " + std::to_string(num) +
                                        " is not divisible by " + std::to_string(den));
  return num / den;
}

// Per-subspace census for one (field, h) pair.  For every subspace H the four
// column groups hold, per class c mod h:
//   a: defining-block positions theta^y (y < M, y = c mod h) with
//      Tr(beta theta^y) = 0 for every basis element beta of H,
//   b: nonzero elements of H that are defining-block positions in class c,
//   P: period-weighted count sum_i |H* in class i| eta_(i+c), snapped,
//   R: Gauss-weighted transform sum_l G_l w_h^(-lc) sum_i |H* in class i|
//      w_h^(-li), snapped.
// A spec with offsets t then reads its four sweep objectives for a subspace as
// plain sums of column entries over t, which is what makes batching pay off.
struct SubspaceCensus {
  std::vector<std::vector<int32_t>> rows;  // [dim] -> count x 4h, layout [a|b|P|R]
  std::vector<int64_t> count;              // [dim]
  bool duality_checked = false;
  bool duality_ok = true;
};

struct ClassData {
  int h = 0;
  int64_t M = 0, n0 = 0;
  std::vector<double> eta;     // gaussian periods, real by -1 being an h-th power
  std::vector<cd> coset_sums;  // S(theta^i)
  bool period_identity_ok = true;
  std::vector<cd> gauss_w;  // [lambda] -> G(psi_(lambda N / h)), index 0 unused
  std::vector<cd> root_h;   // [j] -> exp(-2 pi i j / h)
  std::vector<int32_t> za;  // N x h: za[u*h+c] = zero-trace block positions
  SubspaceCensus census;
};

ClassData build_class_data(const FieldCtx& ctx, const CharTable& chars, int h,
                           const Budgets& budgets) {
  ClassData data;
  const int64_t N = ctx.order();
  const int m = ctx.m();
  const int64_t q = ctx.q();
  data.h = h;
  data.M = N / (q - 1);
  data.n0 = data.M / h;

  const double tol = budgets.tolerance;
  auto periods = chars.gaussian_periods(h);
  data.eta.resize(size_t(h));
  for (int i = 0; i < h; ++i) {
    if (std::abs(periods[size_t(i)].imag()) >
        tol * std::max(1.0, std::abs(periods[size_t(i)].real())))
      fail(errc::consistency_failure, "gaussian period has a nonreal value");
    data.eta[size_t(i)] = periods[size_t(i)].real();
  }

  data.coset_sums = chars.exponential_sums_by_coset(h);
  for (int i = 0; i < h; ++i) {
    double lhs = data.coset_sums[size_t(i)].real();
    if (std::abs(lhs - (h * data.eta[size_t(i)] + 1.0)) > tol * std::max(1.0, std::abs(lhs)) ||
        std::abs(data.coset_sums[size_t(i)].imag()) > tol * std::max(1.0, std::abs(lhs)))
      data.period_identity_ok = false;
  }

  data.gauss_w.resize(size_t(h));
  for (int lam = 1; lam < h; ++lam) data.gauss_w[size_t(lam)] = chars.gauss_sum(lam * (N / h));
  data.root_h.resize(size_t(h));
  for (int j = 0; j < h; ++j) {
    double angle = -2.0 * std::acos(-1.0) * double(j) / double(h);
    data.root_h[size_t(j)] = cd(std::cos(angle), std::sin(angle));
  }

  const auto& trq = ctx.trace_to_q_table();
  data.za.assign(size_t(N) * size_t(h), 0);
  for (int64_t u = 0; u < N; ++u) {
    int32_t* row = data.za.data() + size_t(u) * size_t(h);
    for (int64_t y = 0; y < data.M; ++y) {
      int64_t pos = u + y;
      if (pos >= N) pos -= N;
      if (trq[size_t(pos) + 1] == 0) ++row[y % h];
    }
  }

  auto& cs = data.census;
  cs.rows.resize(size_t(m) + 1);
  cs.count.resize(size_t(m) + 1);
  std::vector<Fe> basis;
  std::vector<int64_t> prof(static_cast<size_t>(h));
  std::vector<cd> dft(static_cast<size_t>(h));
  for (int dim = 0; dim <= m; ++dim) {
    cs.count[size_t(dim)] = int64_t(gaussian_binomial(m, dim, q));
    cs.rows[size_t(dim)].assign(size_t(cs.count[size_t(dim)]) * 4 * size_t(h), 0);
    SubspaceEnumerator en(m, dim, q);
    Subspace s;
    for (int64_t i = 0; i < cs.count[size_t(dim)]; ++i) {
      en.next(s);
      int32_t* row = cs.rows[size_t(dim)].data() + size_t(i) * 4 * size_t(h);
      int32_t* acol = row;
      int32_t* bcol = row + h;
      int32_t* pcol = row + 2 * h;
      int32_t* rcol = row + 3 * h;

      std::fill(prof.begin(), prof.end(), 0);
      for (const Fe& x : materialize(s, ctx, budgets)) {
        if (x.is_zero()) continue;
        int c = int(x.v % h);
        ++prof[size_t(c)];
        if (x.v < data.M) ++bcol[c];
      }

      if (dim == 0) {
        for (int c = 0; c < h; ++c) acol[c] = int32_t(data.n0);
      } else {
        basis.clear();
        for (int b = 0; b < dim; ++b)
          basis.push_back(
              ctx.uncoords(std::span<const uint16_t>(s.rows.data() + size_t(b) * m, size_t(m))));
        for (int64_t y = 0; y < data.M; ++y) {
          bool zero = true;
          for (const Fe& b : basis) {
            int64_t pos = b.v + y;
            if (pos >= N) pos -= N;
            if (trq[size_t(pos) + 1] != 0) {
              zero = false;
              break;
            }
          }
          if (zero) ++acol[y % h];
        }
      }

      for (int c = 0; c < h; ++c) {
        double v = 0;
        for (int k = 0; k < h; ++k) v += double(prof[size_t(k)]) * data.eta[size_t((k + c) % h)];
        pcol[c] = int32_t(snap_real(v, tol, "period census entry"));
      }

      for (int lam = 1; lam < h; ++lam) {
        cd acc = 0;
        for (int k = 0; k < h; ++k)
          if (prof[size_t(k)]) acc += double(prof[size_t(k)]) * data.root_h[size_t((lam * k) % h)];
        dft[size_t(lam)] = acc;
      }
      for (int c = 0; c < h; ++c) {
        cd acc = 0;
        for (int lam = 1; lam < h; ++lam)
          acc += data.gauss_w[size_t(lam)] * data.root_h[size_t((lam * c) % h)] * dft[size_t(lam)];
        if (std::abs(acc.imag()) > tol * std::max(1.0, std::abs(acc.real())))
          fail(errc::consistency_failure, "gauss census entry has a nonreal value");
        rcol[c] = int32_t(snap_real(acc.real(), tol, "gauss census entry"));
      }
    }
  }

  if (m <= 4) {
    cs.duality_checked = true;
    std::vector<int64_t> bdual(static_cast<size_t>(h));
    for (int dim = 0; dim <= m; ++dim) {
      SubspaceEnumerator en(m, dim, q);
      Subspace s;
      for (int64_t i = 0; i < cs.count[size_t(dim)]; ++i) {
        en.next(s);
        Subspace dual = trace_dual(s, ctx);
        std::fill(bdual.begin(), bdual.end(), 0);
        for (const Fe& x : materialize(dual, ctx, budgets))
          if (!x.is_zero() && x.v < data.M) ++bdual[size_t(x.v % h)];
        const int32_t* acol = cs.rows[size_t(dim)].data() + size_t(i) * 4 * size_t(h);
        for (int c = 0; c < h; ++c)
          if (acol[c] != bdual[size_t(c)]) cs.duality_ok = false;
      }
    }
  }

  return data;
}

VerificationRecord invalid_record(const RawSpec& raw, std::vector<SpecViolation> violations) {
  VerificationRecord rec;
  rec.raw = raw;
  rec.valid = false;
  rec.violations = std::move(violations);
  return rec;
}

VerificationRecord evaluate_spec(const FieldCtx& ctx, const CharTable& chars,
                                 const ClassData& cdat, const CodeSpec& spec,
                                 const Budgets& budgets) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationRecord rec;
  rec.raw = RawSpec{spec.p, spec.e, spec.m, spec.h, spec.t};
  rec.valid = true;
  rec.spec = spec;

  const int64_t N = ctx.order();
  const int64_t q = spec.q, Q = spec.Q, n = spec.n;
  const int m = spec.m, h = spec.h;
  const int s = int(spec.s);
  const double tol = budgets.tolerance;

  DefiningSet dset = build_defining_set(ctx, spec);
  LinearCode code(ctx, dset.elements);
  rec.rank = code.rank();
  rec.rank_ok = rec.rank == m;
  rec.dual_distance_ok = dual_distance_at_least_3(code).at_least_3();

  // Weight distribution through the zero-trace table, cross-checked against
  // the exponential-sum route for every message and against plain codeword
  // enumeration on a sample.
  auto& wr = rec.weights;
  std::map<int64_t, int64_t> counts;
  counts[0] = 1;
  wr.via_sums_ok = true;
  std::vector<int64_t> wt(static_cast<size_t>(N));
  for (int64_t u = 0; u < N; ++u) {
    int64_t zeros = 0;
    const int32_t* row = cdat.za.data() + size_t(u) * h;
    for (int j = 0; j < s; ++j) zeros += row[spec.t[j]];
    int64_t w = n - zeros;
    wt[size_t(u)] = w;
    ++counts[w];
    if (codeword_weight_via_sums(chars, spec, cdat.coset_sums, Fe{int32_t(u)}) != w)
      wr.via_sums_ok = false;
  }
  wr.sample_direct_ok = true;
  {
    int64_t picks[] = {0, 1, N / 2, N - 1, N / 3, (2 * N) / 3, N / 5, N / 7};
    for (int64_t u : picks) {
      u = ((u % N) + N) % N;
      if (code.codeword_weight(ctx.theta_pow(u)) != wt[size_t(u)]) wr.sample_direct_ok = false;
    }
  }
  wr.counts.assign(counts.begin(), counts.end());
  int64_t total = 0, moment = 0;
  for (auto [w, c] : counts) {
    total += c;
    moment += w * c;
  }
  wr.total_ok = total == Q;
  wr.power_moment_ok = moment == n * (q - 1) * (Q / q);
  wr.distinct_nonzero = int(counts.size()) - (counts.count(0) ? 1 : 0);
  wr.prediction = predict_weights(spec);
  if (wr.prediction) {
    std::vector<PredictedWeight> observed;
    for (auto [w, c] : counts)
      if (w != 0) observed.push_back({w, c});
    wr.prediction_match = counts.at(0) == 1 && observed == wr.prediction->rows &&
                          wr.prediction->n == n && wr.prediction->dim == m;
  }
  wr.ok = wr.total_ok && wr.power_moment_ok && wr.via_sums_ok && wr.sample_direct_ok &&
          (!wr.prediction || wr.prediction_match);

  rec.eta = cdat.eta;
  rec.period_identity_ok = cdat.period_identity_ok;
  rec.semiprimitive = semiprimitive_params(spec);
  if (rec.semiprimitive) {
    for (int i = 0; i < h; ++i) {
      double want = double(closed_form_exp_sum(*rec.semiprimitive, i));
      if (std::abs(cdat.coset_sums[i].real() - want) > tol * std::max(1.0, std::abs(want)) ||
          std::abs(cdat.coset_sums[i].imag()) > tol * std::max(1.0, std::abs(want)))
        rec.exp_sum_closed_form_ok = false;
    }
  }
  rec.two_weight_match =
      ((rec.semiprimitive.has_value() && s < h) == (wr.distinct_nonzero == 2));

  // Support weights for every rank, all four methods, from the shared census.
  const auto& cs = cdat.census;
  rec.per_r.resize(size_t(m));
  int64_t d1 = 0;
  for (int r = 1; r <= m; ++r) {
    RankReport& rr = rec.per_r[size_t(r - 1)];
    rr.r = r;

    int64_t best_a = -1, best_p = 0, best_g = 0;
    int64_t ia = 0, ip = 0, ig = 0;
    {
      const int32_t* base = cs.rows[size_t(r)].data();
      const int64_t cnt = cs.count[size_t(r)];
      bool first = true;
      for (int64_t i = 0; i < cnt; ++i) {
        const int32_t* row = base + size_t(i) * 4 * h;
        int64_t va = 0, vp = 0, vg = 0;
        for (int j = 0; j < s; ++j) {
          int t = spec.t[j];
          va += row[t];
          vp += row[2 * h + t];
          vg += row[3 * h + t];
        }
        if (first || va > best_a) best_a = va, ia = i;
        if (first || vp > best_p) best_p = vp, ip = i;
        if (first || vg > best_g) best_g = vg, ig = i;
        first = false;
      }
    }
    int64_t best_b = -1, ib = 0;
    {
      const int32_t* base = cs.rows[size_t(m - r)].data();
      const int64_t cnt = cs.count[size_t(m - r)];
      for (int64_t i = 0; i < cnt; ++i) {
        const int32_t* row = base + size_t(i) * 4 * h + h;
        int64_t vb = 0;
        for (int j = 0; j < s; ++j) vb += row[spec.t[j]];
        if (vb > best_b) best_b = vb, ib = i;
      }
    }

    const int64_t qr = checked_pow(q, r, Q);
    rr.direct = {n - best_a, best_a, u128(ia), false};
    rr.dual = {n - best_b, best_b, u128(ib), false};
    int64_t n_gauss =
        exact_div(s * (Q - qr) + best_g, h * qr * (q - 1), "gauss support-weight numerator");
    rr.gauss = {n - n_gauss, best_g, u128(ig), false};
    int64_t n_period =
        exact_div(s * spec.n0 * (q - 1) + best_p, qr * (q - 1), "period support-weight numerator");
    rr.period = {n - n_period, best_p, u128(ip), false};

    rr.methods_agree = rr.direct.d == rr.dual.d && rr.direct.d == rr.gauss.d &&
                       rr.direct.d == rr.period.d;
    rr.d_r = rr.direct.d;
    rr.n_r = best_a;
    if (r == 1) d1 = rr.d_r;

    rr.odd_form = odd_witness_ghw(spec, r);
    rr.even_form = even_witness_ghw(spec, r);
    rr.special_form = special_case_ghw(spec, r);
    rr.closed_forms_ok = true;
    if (rr.odd_form.status == FormulaStatus::value && rr.odd_form.value != rr.d_r)
      rr.closed_forms_ok = false;
    if (rr.even_form.status == FormulaStatus::value && rr.even_form.value != rr.d_r)
      rr.closed_forms_ok = false;
    if (rr.special_form && *rr.special_form != rr.d_r) rr.closed_forms_ok = false;

    rr.bounds = ghw_bounds(n, m, q, r, d1);
    rr.bounds_ok = rr.d_r >= std::max(rr.bounds.singleton_lo, rr.bounds.griesmer_lo) &&
                   rr.d_r <= std::min(rr.bounds.singleton_hi, rr.bounds.plotkin_hi);

    // Re-evaluate each winning subspace through the plain one-subspace paths.
    {
      Subspace sd = subspace_at(m, r, q, u128(ia));
      const auto& trq = ctx.trace_to_q_table();
      std::vector<Fe> basis;
      for (int b = 0; b < r; ++b)
        basis.push_back(
            ctx.uncoords(std::span<const uint16_t>(sd.rows.data() + size_t(b) * m, size_t(m))));
      int64_t cnt = 0;
      for (const Fe& d : dset.elements) {
        bool zero = true;
        for (const Fe& b : basis) {
          int64_t e = int64_t(b.v) + d.v;
          if (e >= N) e -= N;
          if (trq[size_t(e) + 1] != 0) {
            zero = false;
            break;
          }
        }
        if (zero) ++cnt;
      }
      rr.direct.witness_ok = cnt == best_a;
    }
    {
      rr.witness = subspace_at(m, m - r, q, u128(ib));
      rr.dual.witness_ok = intersect_count(rr.witness, ctx, dset.elements) == best_b;
    }
    {
      Subspace sp = subspace_at(m, r, q, u128(ip));
      auto prof = coset_profile(sp, ctx, h, budgets);
      double v = 0;
      for (int j = 0; j < s; ++j)
        for (int k = 0; k < h; ++k) v += double(prof[size_t(k)]) * cdat.eta[(k + spec.t[j]) % h];
      rr.period.witness_ok = snap_real(v, tol, "period witness value") == best_p;
    }
    {
      Subspace sg = subspace_at(m, r, q, u128(ig));
      auto prof = coset_profile(sg, ctx, h, budgets);
      cd acc = 0;
      for (int lam = 1; lam < h; ++lam) {
        cd dft = 0;
        for (int k = 0; k < h; ++k)
          if (prof[size_t(k)]) dft += double(prof[size_t(k)]) * cdat.root_h[(lam * k) % h];
        cd tfac = 0;
        for (int j = 0; j < s; ++j) tfac += cdat.root_h[(lam * spec.t[j]) % h];
        acc += cdat.gauss_w[lam] * tfac * dft;
      }
      rr.gauss.witness_ok = snap_real(acc.real(), tol, "gauss witness value") == best_g;
    }

    rr.ok = rr.methods_agree && rr.closed_forms_ok && rr.bounds_ok && rr.direct.witness_ok &&
            rr.dual.witness_ok && rr.gauss.witness_ok && rr.period.witness_ok;
  }

  rec.monotone_ok = true;
  for (int r = 2; r <= m; ++r)
    if (rec.per_r[size_t(r - 1)].d_r <= rec.per_r[size_t(r - 2)].d_r) rec.monotone_ok = false;

  rec.duality_checked = cs.duality_checked;
  rec.duality_ok = cs.duality_ok;

  rec.ok = rec.rank_ok && rec.dual_distance_ok && wr.ok && rec.period_identity_ok &&
           rec.exp_sum_closed_form_ok && rec.monotone_ok && rec.duality_ok;
  for (const auto& rr : rec.per_r) rec.ok = rec.ok && rr.ok;

  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

}  // namespace

std::vector<RawSpec> default_grid() {
  std::vector<RawSpec> grid;
  for (int64_t p : {int64_t{2}, int64_t{3}}) {
    for (int m : {2, 4, 6}) {
      const int64_t q = p;
      int64_t Q = 1;
      for (int i = 0; i < m; ++i) Q *= q;
      for (int h = 2; int64_t(h - 1) * (h - 1) < Q; ++h) {
        if (!admissible_h(q, Q, h)) continue;
        for (int s = 1; s <= std::min(3, h); ++s) {
          std::vector<int> comb(static_cast<size_t>(s));
          for (int i = 0; i < s; ++i) comb[size_t(i)] = i;
          while (true) {
            grid.push_back(RawSpec{p, 1, m, h, comb});
            int i = s - 1;
            while (i >= 0 && comb[size_t(i)] == h - s + i) --i;
            if (i < 0) break;
            ++comb[size_t(i)];
            for (int j = i + 1; j < s; ++j) comb[size_t(j)] = comb[size_t(j - 1)] + 1;
          }
        }
      }
    }
  }
  return grid;
}

std::vector<RawSpec> parse_grid_text(const std::string& text) {
  std::vector<RawSpec> grid;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() != 5)
      fail(errc::grid_parse_error, "line " + std::to_string(lineno) + ": expected 5 fields "
                                       "(p e m h t1,t2,...), got " +
                                       std::to_string(tokens.size()));
    RawSpec raw;
    raw.p = parse_int(tokens[0], lineno, "for p");
    raw.e = int(parse_int(tokens[1], lineno, "for e"));
    raw.m = int(parse_int(tokens[2], lineno, "for m"));
    raw.h = int(parse_int(tokens[3], lineno, "for h"));
    std::string rest = tokens[4];
    size_t start = 0;
    while (true) {
      size_t comma = rest.find(',', start);
      std::string piece = rest.substr(start, comma == std::string::npos ? comma : comma - start);
      if (piece.empty())
        fail(errc::grid_parse_error, "line " + std::to_string(lineno) + ": empty entry in the "
                                         "class offset list '" +
                                         tokens[4] + "'");
      raw.t.push_back(int(parse_int(piece, lineno, "in the class offset list")));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    grid.push_back(std::move(raw));
  }
  return grid;
}

std::vector<RawSpec> parse_grid_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io_error, "cannot open grid file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) fail(errc::io_error, "cannot read grid file '" + path + "'");
  return parse_grid_text(buf.str());
}

GridRunner::GridRunner(const Budgets& budgets) : budgets_(budgets) {}

std::vector<VerificationRecord> GridRunner::run(const std::vector<RawSpec>& grid,
                                                GridSummary* summary) const {
  std::vector<VerificationRecord> out(grid.size());

  std::map<std::tuple<int64_t, int, int>, std::map<int, std::vector<size_t>>> fields;
  for (size_t i = 0; i < grid.size(); ++i) {
    auto violations = validate_spec(grid[i]);
    if (!violations.empty()) {
      out[i] = invalid_record(grid[i], std::move(violations));
      continue;
    }
    fields[{grid[i].p, grid[i].e, grid[i].m}][grid[i].h].push_back(i);
  }

  for (const auto& [key, by_h] : fields) {
    const auto& [p, e, m] = key;
    try {
      FieldCtx ctx = FieldCtx::build(p, e, m, budgets_);
      CharTable chars(ctx, CharSumCfg{budgets_.tolerance});
      for (const auto& [h, members] : by_h) {
        std::string group_error;
        std::optional<ClassData> cdat;
        try {
          cdat.emplace(build_class_data(ctx, chars, h, budgets_));
        } catch (const std::exception& e) {
          group_error = e.what();
        }
        for (size_t idx : members) {
          VerificationRecord& rec = out[idx];
          rec.raw = grid[idx];
          rec.valid = true;
          if (!group_error.empty()) {
            rec.error = group_error;
            continue;
          }
          try {
            CodeSpec spec = make_spec(grid[idx]);
            rec = evaluate_spec(ctx, chars, *cdat, spec, budgets_);
          } catch (const std::exception& e) {
            rec = VerificationRecord{};
            rec.raw = grid[idx];
            rec.valid = true;
            rec.error = e.what();
          }
        }
      }
    } catch (const std::exception& e) {
      for (const auto& [h, members] : by_h)
        for (size_t idx : members)
          if (out[idx].error.empty() && !out[idx].valid) {
            out[idx].raw = grid[idx];
            out[idx].valid = true;
            out[idx].error = e.what();
          }
    }
  }

  if (summary) {
    *summary = GridSummary{};
    summary->total = int64_t(out.size());
    for (const auto& rec : out) {
      if (!rec.valid)
        ++summary->invalid;
      else if (rec.ok)
        ++summary->passed;
      else
        ++summary->mismatched;
    }
  }
  return out;
}

}  // namespace cyclo
