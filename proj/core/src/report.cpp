#include "cyclocode/report.hpp"

#include <sstream>

#include <json.hpp>

namespace cyclo {

namespace {

using ojson = nlohmann::ordered_json;

std::string witness_row(const Subspace& s, int row) {
  std::string out;
  for (int c = 0; c < s.m; ++c) {
    if (c) out += '.';
    out += std::to_string(s.rows[size_t(row) * s.m + size_t(c)]);
  }
  return out;
}

ojson witness_json(const Subspace& s) {
  ojson rows = ojson::array();
  for (int i = 0; i < s.r; ++i) rows.push_back(witness_row(s, i));
  return rows;
}

ojson formula_json(const FormulaValue& f) {
  ojson out;
  out["status"] = to_string(f.status);
  if (f.status == FormulaStatus::value)
    out["value"] = f.value;
  else
    out["value"] = nullptr;
  return out;
}

ojson spec_json(const RawSpec& raw) {
  ojson spec;
  spec["p"] = raw.p;
  spec["e"] = raw.e;
  spec["m"] = raw.m;
  spec["h"] = raw.h;
  spec["t"] = raw.t;
  return spec;
}

ojson record_json(const VerificationRecord& rec) {
  ojson j;
  j["spec"] = spec_json(rec.raw);
  j["valid"] = rec.valid;
  ojson viols = ojson::array();
  for (auto v : rec.violations) viols.push_back(to_string(v));
  j["violations"] = viols;
  j["error"] = rec.error;
  j["ok"] = rec.ok;
  if (!rec.valid || !rec.error.empty() || !rec.spec) return j;

  const CodeSpec& spec = *rec.spec;
  j["q"] = spec.q;
  j["Q"] = spec.Q;
  j["s"] = spec.s;
  j["n0"] = spec.n0;
  j["n"] = spec.n;
  j["rank"] = rec.rank;
  j["rank_ok"] = rec.rank_ok;
  j["dual_distance_ge_3"] = rec.dual_distance_ok;

  ojson weights = ojson::array();
  for (auto [w, c] : rec.weights.counts) weights.push_back(ojson::array({w, c}));
  j["weights"] = weights;
  {
    ojson wc;
    wc["total"] = rec.weights.total_ok;
    wc["power_moment"] = rec.weights.power_moment_ok;
    wc["via_sums"] = rec.weights.via_sums_ok;
    wc["sample_direct"] = rec.weights.sample_direct_ok;
    wc["distinct_nonzero"] = rec.weights.distinct_nonzero;
    j["weight_checks"] = wc;
  }
  if (rec.weights.prediction) {
    ojson rows = ojson::array();
    for (const auto& row : rec.weights.prediction->rows)
      rows.push_back(ojson::array({row.w, row.count}));
    ojson pred;
    pred["rows"] = rows;
    pred["match"] = rec.weights.prediction_match;
    j["prediction"] = pred;
  } else {
    j["prediction"] = nullptr;
  }

  if (rec.semiprimitive) {
    const auto& sp = *rec.semiprimitive;
    ojson spj;
    spj["l"] = sp.l;
    spj["k"] = sp.k;
    spj["h0"] = sp.h0;
    spj["sqrt_Q"] = sp.sqrt_q_m;
    spj["S_exceptional"] = sp.sum_exceptional;
    spj["S_generic"] = sp.sum_generic;
    j["semiprimitive"] = spj;
  } else {
    j["semiprimitive"] = nullptr;
  }
  j["eta"] = rec.eta;
  j["period_identity_ok"] = rec.period_identity_ok;
  j["exp_sum_closed_form_ok"] = rec.exp_sum_closed_form_ok;
  j["two_weight_match"] = rec.two_weight_match;

  ojson ranks = ojson::array();
  for (const auto& rr : rec.per_r) {
    ojson r;
    r["r"] = rr.r;
    r["d_r"] = rr.d_r;
    r["n_r"] = rr.n_r;
    {
      ojson methods;
      methods["direct"] = rr.direct.d;
      methods["thm1"] = rr.dual.d;
      methods["gauss"] = rr.gauss.d;
      methods["period"] = rr.period.d;
      methods["agree"] = rr.methods_agree;
      r["methods"] = methods;
    }
    {
      ojson cf;
      cf["odd_witness"] = formula_json(rr.odd_form);
      cf["even_witness"] = formula_json(rr.even_form);
      cf["special"] = rr.special_form ? ojson(*rr.special_form) : ojson(nullptr);
      cf["ok"] = rr.closed_forms_ok;
      r["closed_forms"] = cf;
    }
    {
      ojson b;
      b["singleton_lo"] = rr.bounds.singleton_lo;
      b["griesmer_lo"] = rr.bounds.griesmer_lo;
      b["singleton_hi"] = rr.bounds.singleton_hi;
      b["plotkin_hi"] = rr.bounds.plotkin_hi;
      b["ok"] = rr.bounds_ok;
      r["bounds"] = b;
    }
    r["witness"] = witness_json(rr.witness);
    {
      ojson wk;
      wk["direct"] = rr.direct.witness_ok;
      wk["thm1"] = rr.dual.witness_ok;
      wk["gauss"] = rr.gauss.witness_ok;
      wk["period"] = rr.period.witness_ok;
      r["witness_ok"] = wk;
    }
    r["ok"] = rr.ok;
    ranks.push_back(r);
  }
  j["ranks"] = ranks;
  j["monotone_ok"] = rec.monotone_ok;
  {
    ojson dual;
    dual["checked"] = rec.duality_checked;
    dual["ok"] = rec.duality_ok;
    j["duality"] = dual;
  }
  j["seconds"] = rec.seconds;
  return j;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string formula_csv(const FormulaValue& f) {
  if (f.status == FormulaStatus::value) return std::to_string(f.value);
  if (f.status == FormulaStatus::not_covered) return "nc";
  return "na";
}

const char* b2s(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string record_to_json(const VerificationRecord& rec) { return record_json(rec).dump(); }

std::string records_to_jsonl(const std::vector<VerificationRecord>& recs,
                             const GridSummary& summary) {
  std::string out;
  for (const auto& rec : recs) {
    out += record_to_json(rec);
    out += '\n';
  }
  ojson s;
  s["summary"]["total"] = summary.total;
  s["summary"]["passed"] = summary.passed;
  s["summary"]["mismatched"] = summary.mismatched;
  s["summary"]["invalid"] = summary.invalid;
  out += s.dump();
  out += '\n';
  return out;
}

std::string reserialize_json(const std::string& line) { return ojson::parse(line).dump(); }

std::string records_to_csv(const std::vector<VerificationRecord>& recs) {
  std::ostringstream out;
  out << "p,e,m,h,t,valid,violations,error,q,Q,s,n0,n,rank,dual_ge_3,weights,prediction_match,"
         "two_weight_match,period_identity_ok,exp_sum_ok,duality_checked,duality_ok,monotone_ok,"
         "spec_ok,r,d_r,n_r,d_direct,d_thm1,d_gauss,d_period,methods_agree,odd_form,even_form,"
         "special_form,closed_forms_ok,singleton_lo,griesmer_lo,singleton_hi,plotkin_hi,"
         "bounds_ok,witness,witness_ok,row_ok\n";
  for (const auto& rec : recs) {
    std::string tcol;
    for (size_t i = 0; i < rec.raw.t.size(); ++i) {
      if (i) tcol += ',';
      tcol += std::to_string(rec.raw.t[i]);
    }
    std::string viols;
    for (size_t i = 0; i < rec.violations.size(); ++i) {
      if (i) viols += ';';
      viols += to_string(rec.violations[i]);
    }
    std::ostringstream head;
    head << rec.raw.p << ',' << rec.raw.e << ',' << rec.raw.m << ',' << rec.raw.h << ','
         << csv_quote(tcol) << ',' << b2s(rec.valid) << ',' << csv_quote(viols) << ','
         << csv_quote(rec.error);

    if (!rec.valid || !rec.error.empty() || !rec.spec) {
      out << head.str();
      // q..spec_ok (16 columns) and the per-rank block (20 columns) stay empty
      for (int i = 0; i < 36; ++i) out << ',';
      out << '\n';
      continue;
    }

    const CodeSpec& spec = *rec.spec;
    std::string wcol;
    {
      bool first = true;
      for (auto [w, c] : rec.weights.counts) {
        if (!first) wcol += ' ';
        first = false;
        wcol += std::to_string(w) + ':' + std::to_string(c);
      }
    }
    head << ',' << spec.q << ',' << spec.Q << ',' << spec.s << ',' << spec.n0 << ',' << spec.n
         << ',' << rec.rank << ',' << b2s(rec.dual_distance_ok) << ',' << csv_quote(wcol) << ','
         << (rec.weights.prediction ? b2s(rec.weights.prediction_match) : "na") << ','
         << b2s(rec.two_weight_match) << ',' << b2s(rec.period_identity_ok) << ','
         << b2s(rec.exp_sum_closed_form_ok) << ',' << b2s(rec.duality_checked) << ','
         << b2s(rec.duality_ok) << ',' << b2s(rec.monotone_ok) << ',' << b2s(rec.ok);

    for (const auto& rr : rec.per_r) {
      std::string wit;
      for (int i = 0; i < rr.witness.r; ++i) {
        if (i) wit += '|';
        wit += witness_row(rr.witness, i);
      }
      bool wok = rr.direct.witness_ok && rr.dual.witness_ok && rr.gauss.witness_ok &&
                 rr.period.witness_ok;
      out << head.str() << ',' << rr.r << ',' << rr.d_r << ',' << rr.n_r << ',' << rr.direct.d
          << ',' << rr.dual.d << ',' << rr.gauss.d << ',' << rr.period.d << ','
          << b2s(rr.methods_agree) << ',' << formula_csv(rr.odd_form) << ','
          << formula_csv(rr.even_form) << ','
          << (rr.special_form ? std::to_string(*rr.special_form) : "na") << ','
          << b2s(rr.closed_forms_ok) << ',' << rr.bounds.singleton_lo << ','
          << rr.bounds.griesmer_lo << ',' << rr.bounds.singleton_hi << ','
          << rr.bounds.plotkin_hi << ',' << b2s(rr.bounds_ok) << ',' << csv_quote(wit) << ','
          << b2s(wok) << ',' << b2s(rr.ok) << '\n';
    }
  }
  return out.str();
}

std::string summary_line(const GridSummary& summary) {
  std::ostringstream out;
  out << "grid: total=" << summary.total << " passed=" << summary.passed
      << " mismatched=" << summary.mismatched << " invalid=" << summary.invalid;
  return out.str();
}

}  // namespace cyclo
