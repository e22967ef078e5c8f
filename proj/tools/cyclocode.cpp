#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclocode/characters.hpp"
#include "cyclocode/closedform.hpp"
#include "cyclocode/code.hpp"
#include "cyclocode/cyclotomy.hpp"
#include "cyclocode/field.hpp"
#include "cyclocode/ghw.hpp"
#include "cyclocode/report.hpp"
#include "cyclocode/verify.hpp"

using namespace cyclo;
using ojson = nlohmann::ordered_json;

namespace {

struct Options {
  int64_t p = 0;
  int e = 1;
  int m = 0;
  int h = 0;
  std::string t;
  std::string r;
  std::string method = "all";
  std::string format = "text";
  int threads = 1;
  std::string grid;
  std::string out;
  Budgets budgets;
};

int exit_code_for(const Error& e) {
  switch (e.category()) {
    case error_category::validation: return 2;
    case error_category::budget: return 3;
    case error_category::internal: return 4;
  }
  return 4;
}

std::vector<int> parse_t_list(const std::string& text) {
  std::vector<int> t;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string piece =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      size_t used = 0;
      t.push_back(std::stoi(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      fail(errc::spec_invalid, "--t entry '" + piece + "' is not an integer");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return t;
}

std::pair<int, int> parse_r_range(const std::string& text, int m) {
  if (text.empty()) return {1, m};
  size_t dots = text.find("..");
  auto one = [&](const std::string& piece) {
    try {
      size_t used = 0;
      int v = std::stoi(piece, &used);
      if (used != piece.size()) throw std::invalid_argument(piece);
      return v;
    } catch (const std::exception&) {
      fail(errc::spec_invalid, "--r expects R or R1..R2, got '" + text + "'");
    }
  };
  if (dots == std::string::npos) {
    int v = one(text);
    return {v, v};
  }
  int lo = one(text.substr(0, dots));
  int hi = one(text.substr(dots + 2));
  if (lo > hi) fail(errc::spec_invalid, "--r range is empty: '" + text + "'");
  return {lo, hi};
}

std::vector<GhwMethod> parse_methods(const std::string& name) {
  if (name == "all")
    return {GhwMethod::direct, GhwMethod::dual_sweep, GhwMethod::gauss_sum,
            GhwMethod::period_sum};
  if (name == "direct") return {GhwMethod::direct};
  if (name == "thm1") return {GhwMethod::dual_sweep};
  if (name == "gauss") return {GhwMethod::gauss_sum};
  if (name == "period") return {GhwMethod::period_sum};
  fail(errc::spec_invalid,
       "--method must be one of direct, thm1, gauss, period, all; got '" + name + "'");
}

void check_format(const std::string& format) {
  if (format != "text" && format != "json" && format != "csv")
    fail(errc::spec_invalid, "--format must be text, json, or csv; got '" + format + "'");
}

void write_output(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) fail(errc::io_error, "cannot open output file '" + opt.out + "'");
  f << text;
  if (!f) fail(errc::io_error, "cannot write output file '" + opt.out + "'");
}

RawSpec raw_from(const Options& opt) {
  RawSpec raw;
  raw.p = opt.p;
  raw.e = opt.e;
  raw.m = opt.m;
  raw.h = opt.h;
  raw.t = parse_t_list(opt.t);
  return raw;
}

std::string witness_text(const Subspace& s) {
  std::string out;
  for (int i = 0; i < s.r; ++i) {
    if (i) out += '|';
    for (int c = 0; c < s.m; ++c) {
      if (c) out += '.';
      out += std::to_string(s.rows[size_t(i) * s.m + size_t(c)]);
    }
  }
  return out.empty() ? "-" : out;
}

ojson spec_json(const CodeSpec& spec) {
  ojson j;
  j["p"] = spec.p;
  j["e"] = spec.e;
  j["m"] = spec.m;
  j["h"] = spec.h;
  j["t"] = spec.t;
  j["q"] = spec.q;
  j["Q"] = spec.Q;
  j["s"] = spec.s;
  j["n0"] = spec.n0;
  j["n"] = spec.n;
  return j;
}

ojson semiprimitive_json(const std::optional<SemiPrimitiveParams>& sp) {
  if (!sp) return nullptr;
  ojson j;
  j["l"] = sp->l;
  j["k"] = sp->k;
  j["h0"] = sp->h0;
  j["sqrt_Q"] = sp->sqrt_q_m;
  j["S_exceptional"] = sp->sum_exceptional;
  j["S_generic"] = sp->sum_generic;
  return j;
}

int cmd_info(const Options& opt) {
  RawSpec raw = raw_from(opt);
  auto violations = validate_spec(raw);
  if (!violations.empty()) {
    if (opt.format == "json") {
      ojson j;
      j["valid"] = false;
      ojson v = ojson::array();
      for (auto viol : violations) v.push_back(to_string(viol));
      j["violations"] = v;
      write_output(opt, j.dump() + "\n");
    } else {
      std::ostringstream out;
      out << "invalid spec:\n";
      for (auto viol : violations) out << "  " << to_string(viol) << "\n";
      write_output(opt, out.str());
    }
    return 2;
  }

  CodeSpec spec = make_spec(raw);
  auto sp = semiprimitive_params(spec);
  if (opt.format == "json") {
    ojson j;
    j["valid"] = true;
    j["spec"] = spec_json(spec);
    j["class_size"] = (spec.Q - 1) / spec.h;
    j["s_equals_h"] = spec.s == spec.h;
    j["semiprimitive"] = semiprimitive_json(sp);
    write_output(opt, j.dump() + "\n");
    return 0;
  }
  std::ostringstream out;
  if (opt.format == "csv") {
    out << "key,value\n";
    out << "p," << spec.p << "\ne," << spec.e << "\nm," << spec.m << "\nh," << spec.h << "\n";
    out << "t,\"" << opt.t << "\"\n";
    out << "q," << spec.q << "\nQ," << spec.Q << "\ns," << spec.s << "\nn0," << spec.n0 << "\nn,"
        << spec.n << "\n";
    out << "class_size," << (spec.Q - 1) / spec.h << "\n";
    out << "s_equals_h," << (spec.s == spec.h ? "true" : "false") << "\n";
    if (sp) {
      out << "semiprimitive_l," << sp->l << "\nsemiprimitive_k," << sp->k << "\nh0," << sp->h0
          << "\nsqrt_Q," << sp->sqrt_q_m << "\nS_exceptional," << sp->sum_exceptional
          << "\nS_generic," << sp->sum_generic << "\n";
    } else {
      out << "semiprimitive,none\n";
    }
  } else {
    out << "tower: F_" << spec.p << " <= F_" << spec.q << " <= F_" << spec.Q << " (e=" << spec.e
        << ", m=" << spec.m << ")\n";
    out << "classes: h=" << spec.h << " of size " << (spec.Q - 1) / spec.h << "\n";
    out << "selected: s=" << spec.s << " (t=" << opt.t << ")";
    if (spec.s == spec.h) out << "  [s = h: every class selected, one-weight cover]";
    out << "\n";
    out << "n0: " << spec.n0 << "\n";
    out << "n: " << spec.n << "\n";
    if (sp)
      out << "semiprimitive: k=" << sp->k << " l=" << sp->l << " h0=" << sp->h0
          << " sqrt_Q=" << sp->sqrt_q_m << " S_exceptional=" << sp->sum_exceptional
          << " S_generic=" << sp->sum_generic << "\n";
    else
      out << "semiprimitive: none\n";
  }
  write_output(opt, out.str());
  return 0;
}

int cmd_wdist(const Options& opt) {
  CodeSpec spec = make_spec(raw_from(opt));
  FieldCtx ctx = FieldCtx::build(spec.p, spec.e, spec.m, opt.budgets);
  DefiningSet dset = build_defining_set(ctx, spec);
  LinearCode code(ctx, dset.elements);
  WeightDistribution wd = weight_distribution(code, opt.budgets);
  auto prediction = predict_weights(spec);
  bool match = false;
  if (prediction) {
    std::vector<PredictedWeight> observed;
    for (auto [w, c] : wd.counts)
      if (w != 0) observed.push_back({w, c});
    match = wd.counts.count(0) == 1 && wd.counts.at(0) == 1 && observed == prediction->rows;
  }
  bool dual3 = dual_distance_at_least_3(code).at_least_3();

  if (opt.format == "json") {
    ojson j;
    j["spec"] = spec_json(spec);
    j["rank"] = wd.rank;
    ojson rows = ojson::array();
    for (auto [w, c] : wd.counts) rows.push_back(ojson::array({w, c}));
    j["weights"] = rows;
    if (prediction) {
      ojson p;
      ojson prows = ojson::array();
      for (const auto& row : prediction->rows) prows.push_back(ojson::array({row.w, row.count}));
      p["rows"] = prows;
      p["match"] = match;
      j["prediction"] = p;
    } else {
      j["prediction"] = nullptr;
    }
    j["dual_distance_ge_3"] = dual3;
    write_output(opt, j.dump() + "\n");
    return 0;
  }
  std::ostringstream out;
  if (opt.format == "csv") {
    out << "weight,count\n";
    for (auto [w, c] : wd.counts) out << w << ',' << c << "\n";
  } else {
    out << "[" << spec.n << ", " << wd.rank << "] code over F_" << spec.q << "\n";
    out << "weight  count\n";
    for (auto [w, c] : wd.counts) out << w << "\t" << c << "\n";
    if (prediction)
      out << "two-weight prediction: match=" << (match ? "true" : "false") << "\n";
    else
      out << "two-weight prediction: not applicable\n";
    out << "dual_distance_ge_3: " << (dual3 ? "true" : "false") << "\n";
  }
  write_output(opt, out.str());
  return 0;
}

int cmd_ghw(const Options& opt) {
  CodeSpec spec = make_spec(raw_from(opt));
  auto [rlo, rhi] = parse_r_range(opt.r, spec.m);
  auto methods = parse_methods(opt.method);
  FieldCtx ctx = FieldCtx::build(spec.p, spec.e, spec.m, opt.budgets);
  GhwEngine engine(ctx, spec, opt.budgets);

  bool all = methods.size() == 4;
  bool agree_all = true;
  ojson rows = ojson::array();
  std::ostringstream text;
  std::ostringstream csv;
  if (all)
    csv << "r,d_direct,d_thm1,d_gauss,d_period,agree\n";
  else
    csv << "r,method,d_r,n_r,witness,visited,seconds\n";

  for (int r = rlo; r <= rhi; ++r) {
    if (all) {
      std::vector<GhwResult> res;
      for (GhwMethod method : methods) res.push_back(engine.compute(r, method));
      bool agree = true;
      for (const auto& v : res) agree = agree && v.d_r == res[0].d_r;
      agree_all = agree_all && agree;
      ojson j;
      j["r"] = r;
      j["d_r"] = res[0].d_r;
      ojson per;
      for (const auto& v : res) per[to_string(v.method)] = v.d_r;
      j["methods"] = per;
      j["agree"] = agree;
      rows.push_back(j);
      text << "r=" << r << " d_r=" << res[0].d_r << " (";
      for (size_t i = 0; i < res.size(); ++i)
        text << (i ? " " : "") << to_string(res[i].method) << "=" << res[i].d_r;
      text << ") agree=" << (agree ? "true" : "false") << "\n";
      csv << r << ',' << res[0].d_r << ',' << res[1].d_r << ',' << res[2].d_r << ','
          << res[3].d_r << ',' << (agree ? "true" : "false") << "\n";
    } else {
      GhwResult res = engine.compute(r, methods[0]);
      ojson j;
      j["r"] = r;
      j["method"] = to_string(res.method);
      j["d_r"] = res.d_r;
      j["n_r"] = res.n_r;
      ojson wit = ojson::array();
      for (int i = 0; i < res.witness.r; ++i) {
        std::string row;
        for (int c = 0; c < res.witness.m; ++c) {
          if (c) row += '.';
          row += std::to_string(res.witness.rows[size_t(i) * res.witness.m + size_t(c)]);
        }
        wit.push_back(row);
      }
      j["witness"] = wit;
      j["visited"] = u128_str(res.visited);
      j["seconds"] = res.seconds;
      rows.push_back(j);
      text << "r=" << r << " method=" << to_string(res.method) << " d_r=" << res.d_r
           << " n_r=" << res.n_r << " witness=" << witness_text(res.witness) << "\n";
      csv << r << ',' << to_string(res.method) << ',' << res.d_r << ',' << res.n_r << ",\""
          << witness_text(res.witness) << "\"," << u128_str(res.visited) << ',' << res.seconds
          << "\n";
    }
  }

  if (opt.format == "json") {
    ojson j;
    j["spec"] = spec_json(spec);
    j["ranks"] = rows;
    if (all) j["agree"] = agree_all;
    write_output(opt, j.dump() + "\n");
  } else if (opt.format == "csv") {
    write_output(opt, csv.str());
  } else {
    write_output(opt, text.str());
  }
  if (all && !agree_all) {
    std::cerr << "method disagreement detected\n";
    return 4;
  }
  return 0;
}

int cmd_periods(const Options& opt) {
  CodeSpec spec = make_spec(raw_from(opt));
  FieldCtx ctx = FieldCtx::build(spec.p, spec.e, spec.m, opt.budgets);
  CharTable chars(ctx, CharSumCfg{opt.budgets.tolerance});
  auto periods = chars.gaussian_periods(spec.h);
  auto sums = chars.exponential_sums_by_coset(spec.h);
  auto sp = semiprimitive_params(spec);

  double max_residual = 0;
  std::vector<double> residuals(size_t(spec.h));
  for (int i = 0; i < spec.h; ++i) {
    cd want = cd(double(spec.h)) * periods[size_t(i)] + cd(1.0);
    residuals[size_t(i)] = std::abs(sums[size_t(i)] - want);
    max_residual = std::max(max_residual, residuals[size_t(i)]);
  }

  if (opt.format == "json") {
    ojson j;
    j["spec"] = spec_json(spec);
    ojson eta = ojson::array(), S = ojson::array(), res = ojson::array();
    for (int i = 0; i < spec.h; ++i) {
      eta.push_back(periods[size_t(i)].real());
      S.push_back(ojson::array({sums[size_t(i)].real(), sums[size_t(i)].imag()}));
      res.push_back(residuals[size_t(i)]);
    }
    j["eta"] = eta;
    j["S"] = S;
    j["identity_residuals"] = res;
    j["max_residual"] = max_residual;
    j["semiprimitive"] = semiprimitive_json(sp);
    if (sp) {
      ojson cf = ojson::array();
      for (int i = 0; i < spec.h; ++i) cf.push_back(closed_form_exp_sum(*sp, i));
      j["S_closed_form"] = cf;
    } else {
      j["S_closed_form"] = nullptr;
    }
    write_output(opt, j.dump() + "\n");
    return 0;
  }
  std::ostringstream out;
  out.precision(15);
  if (opt.format == "csv") {
    out << "i,eta,S_re,S_im,identity_residual" << (sp ? ",S_closed_form" : "") << "\n";
    for (int i = 0; i < spec.h; ++i) {
      out << i << ',' << periods[size_t(i)].real() << ',' << sums[size_t(i)].real() << ','
          << sums[size_t(i)].imag() << ',' << residuals[size_t(i)];
      if (sp) out << ',' << closed_form_exp_sum(*sp, i);
      out << "\n";
    }
  } else {
    for (int i = 0; i < spec.h; ++i) {
      out << "i=" << i << " eta=" << periods[size_t(i)].real() << " S=" << sums[size_t(i)].real();
      if (std::abs(sums[size_t(i)].imag()) > 1e-12) out << "+" << sums[size_t(i)].imag() << "i";
      out << " residual=" << residuals[size_t(i)];
      if (sp) out << " closed_form=" << closed_form_exp_sum(*sp, i);
      out << "\n";
    }
    out << "identity max residual: " << max_residual << "\n";
    if (sp)
      out << "semiprimitive: k=" << sp->k << " l=" << sp->l << " h0=" << sp->h0 << "\n";
    else
      out << "semiprimitive: none\n";
  }
  write_output(opt, out.str());
  return 0;
}

int cmd_bounds(const Options& opt) {
  CodeSpec spec = make_spec(raw_from(opt));
  auto [rlo, rhi] = parse_r_range(opt.r, spec.m);
  FieldCtx ctx = FieldCtx::build(spec.p, spec.e, spec.m, opt.budgets);
  GhwEngine engine(ctx, spec, opt.budgets);
  int64_t d1 = engine.compute(1, GhwMethod::dual_sweep).d_r;

  static const char* note =
      "bounds: singleton_lo=r, singleton_hi=n-m+r, "
      "griesmer_lo=sum_{i<r} ceil(d1/q^i), plotkin_hi=floor(n(q^r-1)q^(m-r)/(q^m-1))";

  ojson rows = ojson::array();
  std::ostringstream text, csv;
  csv << "r,d_r,singleton_lo,griesmer_lo,singleton_hi,plotkin_hi,within\n";
  for (int r = rlo; r <= rhi; ++r) {
    int64_t dr = engine.compute(r, GhwMethod::dual_sweep).d_r;
    BoundSet b = ghw_bounds(spec.n, spec.m, spec.q, r, d1);
    bool within = dr >= std::max(b.singleton_lo, b.griesmer_lo) &&
                  dr <= std::min(b.singleton_hi, b.plotkin_hi);
    ojson j;
    j["r"] = r;
    j["d_r"] = dr;
    j["singleton_lo"] = b.singleton_lo;
    j["griesmer_lo"] = b.griesmer_lo;
    j["singleton_hi"] = b.singleton_hi;
    j["plotkin_hi"] = b.plotkin_hi;
    j["within"] = within;
    rows.push_back(j);
    text << "r=" << r << " d_r=" << dr << " singleton=[" << b.singleton_lo << ", "
         << b.singleton_hi << "] griesmer_lo=" << b.griesmer_lo << " plotkin_hi=" << b.plotkin_hi
         << " within=" << (within ? "true" : "false") << "\n";
    csv << r << ',' << dr << ',' << b.singleton_lo << ',' << b.griesmer_lo << ','
        << b.singleton_hi << ',' << b.plotkin_hi << ',' << (within ? "true" : "false") << "\n";
  }

  if (opt.format == "json") {
    ojson j;
    j["spec"] = spec_json(spec);
    j["ranks"] = rows;
    j["note"] = note;
    write_output(opt, j.dump() + "\n");
  } else if (opt.format == "csv") {
    write_output(opt, csv.str());
  } else {
    text << note << "\n";
    write_output(opt, text.str());
  }
  return 0;
}

int cmd_verify_grid(const Options& opt) {
  std::vector<RawSpec> grid = opt.grid.empty() ? default_grid() : parse_grid_file(opt.grid);
  GridSummary summary;
  GridRunner runner(opt.budgets);
  auto recs = runner.run(grid, &summary);

  if (opt.format == "json") {
    write_output(opt, records_to_jsonl(recs, summary));
  } else if (opt.format == "csv") {
    write_output(opt, records_to_csv(recs));
    std::cerr << summary_line(summary) << "\n";
  } else {
    std::ostringstream out;
    for (const auto& rec : recs) {
      out << "p=" << rec.raw.p << " e=" << rec.raw.e << " m=" << rec.raw.m << " h=" << rec.raw.h
          << " t=";
      for (size_t i = 0; i < rec.raw.t.size(); ++i) out << (i ? "," : "") << rec.raw.t[i];
      if (!rec.valid) {
        out << " INVALID (";
        for (size_t i = 0; i < rec.violations.size(); ++i)
          out << (i ? ";" : "") << to_string(rec.violations[i]);
        out << ")";
      } else if (!rec.error.empty()) {
        out << " ERROR (" << rec.error << ")";
      } else if (!rec.ok) {
        out << " MISMATCH";
      } else {
        out << " ok";
      }
      out << "\n";
    }
    out << summary_line(summary) << "\n";
    write_output(opt, out.str());
  }

  if (summary.mismatched > 0) return 4;
  if (summary.invalid > 0) return 2;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact weight distributions and weight hierarchies of cyclotomic trace codes"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print this help message and exit");
  Options opt;

  auto add_spec_flags = [&](CLI::App* cmd) {
    cmd->set_help_flag("--help", "print this help message and exit");
    cmd->add_option("--p", opt.p, "characteristic of the prime field")->required();
    cmd->add_option("--e", opt.e, "extension degree of F_q over F_p")->capture_default_str();
    cmd->add_option("--m", opt.m, "extension degree of F_Q over F_q")->required();
    cmd->add_option("--h", opt.h, "number of cyclotomic classes")->required();
    cmd->add_option("--t", opt.t, "comma-separated class offsets, e.g. 0,1,2")->required();
  };
  auto add_common_flags = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "output format: text, json, or csv")
        ->capture_default_str();
    cmd->add_option("--out", opt.out, "write output to this file instead of stdout");
    cmd->add_option("--threads", opt.threads, "worker threads for subspace sweeps")
        ->capture_default_str();
    cmd->add_option("--subspace-budget", opt.budgets.subspace_budget,
                    "largest subspace sweep allowed");
    cmd->add_option("--field-cap", opt.budgets.field_cap, "largest field size Q allowed");
    cmd->add_option("--enum-budget", opt.budgets.enum_budget,
                    "largest per-pass element enumeration allowed");
    cmd->add_option("--tolerance", opt.budgets.tolerance,
                    "relative tolerance for snapping character sums to integers");
  };

  CLI::App* info = app.add_subcommand("info", "derived parameters of a spec");
  add_spec_flags(info);
  add_common_flags(info);

  CLI::App* wdist = app.add_subcommand("wdist", "exhaustive weight distribution");
  add_spec_flags(wdist);
  add_common_flags(wdist);

  CLI::App* ghw = app.add_subcommand("ghw", "generalized Hamming weights");
  add_spec_flags(ghw);
  add_common_flags(ghw);
  ghw->add_option("--r", opt.r, "rank or rank range, e.g. 3 or 1..6");
  ghw->add_option("--method", opt.method, "direct, thm1, gauss, period, or all")
      ->capture_default_str();

  CLI::App* periods = app.add_subcommand("periods", "gaussian periods and exponential sums");
  add_spec_flags(periods);
  add_common_flags(periods);

  CLI::App* bounds = app.add_subcommand("bounds", "support-weight bounds per rank");
  add_spec_flags(bounds);
  add_common_flags(bounds);
  bounds->add_option("--r", opt.r, "rank or rank range, e.g. 3 or 1..6");

  CLI::App* verify = app.add_subcommand("verify-grid", "cross-check battery over a spec grid");
  verify->set_help_flag("--help", "print this help message and exit");
  add_common_flags(verify);
  verify->add_option("--grid", opt.grid, "grid file (one 'p e m h t1,t2,...' spec per line); "
                                         "the built-in grid when omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  opt.budgets.threads = opt.threads;
  try {
    check_format(opt.format);
    if (info->parsed()) return cmd_info(opt);
    if (wdist->parsed()) return cmd_wdist(opt);
    if (ghw->parsed()) return cmd_ghw(opt);
    if (periods->parsed()) return cmd_periods(opt);
    if (bounds->parsed()) return cmd_bounds(opt);
    if (verify->parsed()) return cmd_verify_grid(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
