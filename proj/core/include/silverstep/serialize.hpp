// JSON and CSV serialization. Reports use ordered JSON objects with every
// extended-precision number rendered as a decimal string (shortest exact
// round-trip form), so emitted artifacts are byte-identical across runs with
// the same configuration and mantissa width, and certificates survive a
// parse/serialize cycle losslessly. Traces stream as CSV.
#pragma once

#include <cstdint>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "silverstep/certificate.hpp"
#include "silverstep/gd.hpp"
#include "silverstep/real.hpp"
#include "silverstep/sequence.hpp"
#include "silverstep/verify.hpp"

namespace silverstep {

using json = nlohmann::ordered_json;

namespace detail {
// Shortest round-trip decimal for doubles (trace summaries, fit results).
inline std::string double_str(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Exact radical expressions for the small patterns, mirrored symbolically.
// Beyond k = 3 the middle entries stop having compact closed forms, so the
// dump carries decimals only.
inline std::vector<std::string> pattern_closed_forms(int k) {
  static const std::string kAlpha[] = {
      "3/2", "1+sqrt(2)", "-1/2-sqrt(2)+3*sqrt(5)/2+sqrt(10)"};
  static const std::string kMu[] = {"2", "5", "7+4*sqrt(2)",
                                    "1+(3+2*sqrt(2))*(3+sqrt(5))"};
  static const std::string kBeta[] = {"sqrt(2)", "2"};
  // pi^j is the interior of the previous palindrome: pi^0 = [], pi^1 =
  // [beta_0], pi^2 = [beta_0, beta_1, beta_0].
  auto pi = [&](int j) {
    std::vector<std::string> v;
    if (j >= 1) v.push_back(kBeta[0]);
    if (j >= 2) {
      v.push_back(kBeta[1]);
      v.push_back(kBeta[0]);
    }
    return v;
  };
  std::vector<std::string> left;
  for (int j = 0; j < k; ++j) {
    left.push_back(kAlpha[j]);
    for (auto& s : pi(j)) left.push_back(std::move(s));
  }
  std::vector<std::string> out = left;
  out.push_back(kMu[k]);
  out.insert(out.end(), left.rbegin(), left.rend());
  return out;
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Patterns and schedules

template <class Real>
json pattern_to_json(const StepPattern<Real>& p) {
  json steps = json::array();
  for (const Real& h : p.steps) steps.push_back(format_decimal(h));
  json out{{"k", p.k},
           {"length", p.length()},
           {"sum", format_decimal(p.sum)},
           {"average", format_decimal(p.average())},
           {"steps", std::move(steps)}};
  if (p.k <= 3) out["closed_form"] = detail::pattern_closed_forms(p.k);
  return out;
}

template <class Real>
StepPattern<Real> pattern_from_json(const json& j) {
  StepPattern<Real> p;
  p.k = j.at("k").get<int>();
  p.sum = parse_decimal<Real>(j.at("sum").get<std::string>());
  for (const auto& s : j.at("steps")) p.steps.push_back(parse_decimal<Real>(s.get<std::string>()));
  if (p.length() != j.at("length").get<std::int64_t>())
    throw std::invalid_argument("pattern_from_json: length mismatch");
  return p;
}

template <class Real>
json schedule_to_json(const Schedule<Real>& s) {
  json stages = json::array();
  for (const auto& st : s.stages)
    stages.push_back(json{{"k", st.k},
                          {"length", st.pattern.length()},
                          {"repetitions", st.reps},
                          {"start", st.start},
                          {"delta_entry", format_decimal(st.delta_entry)},
                          {"delta_next", format_decimal(st.delta_next)},
                          {"pattern_sum", format_decimal(st.pattern.sum)}});
  return json{{"eta", format_decimal(s.eta)},
              {"delta_source",
               s.delta_source == DeltaSource::kConservative ? "conservative" : "override"},
              {"total_steps", s.total_steps()},
              {"stages", std::move(stages)}};
}

// ---------------------------------------------------------------------------
// Certificates and multipliers

template <class Real>
json certificate_to_json(const Certificate<Real>& cert) {
  json entries = json::array();
  for (const auto& [key, value] : cert.entries)
    entries.push_back(json{{"row", key.first}, {"col", key.second},
                           {"value", format_decimal(value)}});
  json cases = json::array();
  for (std::int64_t r = 0; r <= cert.t; ++r)
    cases.push_back(json{{"row", r}, {"case", row_case_name(cert.row_case_of(r))}});
  return json{{"k", cert.k},
              {"t", cert.t},
              {"nonzeros", entries.size()},
              {"row_cases", std::move(cases)},
              {"entries", std::move(entries)}};
}

template <class Real>
Certificate<Real> certificate_from_json(const json& j) {
  Certificate<Real> cert;
  cert.k = j.at("k").get<int>();
  cert.t = j.at("t").get<std::int64_t>();
  cert.row_case.assign(static_cast<std::size_t>(cert.t) + 2, RowCase::kZeroRow);
  for (const auto& c : j.at("row_cases")) {
    const std::int64_t row = c.at("row").get<std::int64_t>();
    cert.row_case.at(Certificate<Real>::slot(row)) =
        row_case_from_name(c.at("case").get<std::string>());
  }
  for (const auto& e : j.at("entries"))
    cert.entries[{e.at("row").get<std::int64_t>(), e.at("col").get<std::int64_t>()}] =
        parse_decimal<Real>(e.at("value").get<std::string>());
  if (cert.entries.size() != j.at("nonzeros").get<std::size_t>())
    throw std::invalid_argument("certificate_from_json: nonzero count mismatch");
  return cert;
}

template <class Real>
json gamma_to_json(const GammaMultiplier<Real>& g) {
  json star = json::array(), super = json::array();
  for (const Real& v : g.star_row) star.push_back(format_decimal(v));
  for (const Real& v : g.superdiag) super.push_back(format_decimal(v));
  return json{{"H", format_decimal(g.H)}, {"star_row", std::move(star)},
              {"superdiag", std::move(super)}};
}

// ---------------------------------------------------------------------------
// Verification reports

template <class Real>
json verification_report_to_json(const VerificationReport<Real>& r) {
  json j{{"k", r.k},
         {"pass", r.pass()},
         {"rowcol_ok", r.rowcol_ok},
         {"rowcol_max_residual", format_decimal(r.rowcol_max_residual)},
         {"rank_one_ok", r.rank_one_ok},
         {"rank_one_max_dev", format_decimal(r.rank_one_max_dev)},
         {"m_lambda_zero_ok", r.m_lambda_zero_ok},
         {"nonneg_ok", r.nonneg_ok},
         {"second_eig", format_decimal(r.second_eig)},
         {"second_eig_bound", format_decimal(r.second_eig_bound)},
         {"superdiag_min", format_decimal(r.superdiag_min)},
         {"superdiag_bound", format_decimal(r.superdiag_bound)},
         {"delta_quant", format_decimal(r.delta_quant)}};
  if (r.delta_bisected) j["delta_bisected"] = format_decimal(*r.delta_bisected);
  return j;
}

template <class Real>
json membership_report_to_json(const MembershipReport<Real>& r) {
  return json{{"delta", format_decimal(r.delta)},
              {"pass", r.pass()},
              {"tolerance", format_decimal(r.tolerance)},
              {"lambda_linear_ok", r.lambda_linear_ok},
              {"lambda_linear_residual", format_decimal(r.lambda_linear_residual)},
              {"gamma_linear_ok", r.gamma_linear_ok},
              {"gamma_linear_residual", format_decimal(r.gamma_linear_residual)},
              {"m_lambda_ok", r.m_lambda_ok},
              {"m_lambda_max", format_decimal(r.m_lambda_max)},
              {"lambda_nonneg_ok", r.lambda_nonneg_ok},
              {"lambda_min_entry", format_decimal(r.lambda_min_entry)},
              {"shifted_nonneg_ok", r.shifted_nonneg_ok},
              {"shifted_min_entry", format_decimal(r.shifted_min_entry)},
              {"base_psd_ok", r.base_psd_ok},
              {"base_min_eig", format_decimal(r.base_min_eig)},
              {"shifted_psd_ok", r.shifted_psd_ok},
              {"shifted_min_eig", format_decimal(r.shifted_min_eig)}};
}

template <class Real>
json feasibility_to_json(const FeasibilityBounds<Real>& b) {
  return json{{"product", format_decimal(b.product)},
              {"product_margin", format_decimal(b.product_margin)},
              {"product_ok", b.product_ok},
              {"product_boundary", b.product_boundary},
              {"sum_min_margin", format_decimal(b.sum_min_margin)},
              {"sum_argmin", b.sum_argmin},
              {"sum_violations", b.sum_violations},
              {"sum_ok", b.sum_ok},
              {"sum_boundary", b.sum_boundary},
              {"pair_min_margin", format_decimal(b.pair_min_margin)},
              {"pair_argmin", b.pair_argmin},
              {"pair_violations", b.pair_violations},
              {"pair_ok", b.pair_ok},
              {"pair_boundary", b.pair_boundary},
              {"all_strict", b.all_strict()}};
}

// ---------------------------------------------------------------------------
// GD artifacts

inline json adversary_report_to_json(const AdversaryReport& r) {
  const auto inst = [](const AdversaryInstance& a) {
    return json{{"rule", a.rule},
                {"index", a.index},
                {"x0", detail::double_str(a.x0)},
                {"gap_start", detail::double_str(a.gap_start)},
                {"gap_end", detail::double_str(a.gap_end)},
                {"final_x", detail::double_str(a.trace.last_iterate.at(0))},
                {"descended", a.descended}};
  };
  return json{{"bounds", feasibility_to_json(r.bounds)},
              {"instances", json::array({inst(r.product), inst(r.sum), inst(r.pair)})},
              {"all_descended", r.all_descended()}};
}

inline json contraction_report_to_json(const ContractionReport& r) {
  return json{{"kappa", detail::double_str(r.kappa)},
              {"mu", detail::double_str(r.mu)},
              {"L", detail::double_str(r.L)},
              {"k_selected", r.k_selected},
              {"delta_k", detail::double_str(r.delta_k)},
              {"applications", r.applications},
              {"iterations", r.iterations},
              {"per_app_worst", detail::double_str(r.per_app_worst)},
              {"per_app_bound", detail::double_str(r.per_app_bound)},
              {"per_app_ok", r.per_app_ok},
              {"amortized", detail::double_str(r.amortized)},
              {"amortized_bound", detail::double_str(r.amortized_bound)},
              {"amortized_ok", r.amortized_ok}};
}

inline json rate_fit_to_json(const RateFit& f) {
  return json{{"slope", detail::double_str(f.slope)},
              {"log_coefficient", detail::double_str(f.log_coefficient)},
              {"points", f.points}};
}

inline json trace_summary_to_json(const GdTrace& t) {
  return json{{"iterations", t.iters.empty() ? 0 : t.iters.back()},
              {"last_gap", detail::double_str(t.last_gap)},
              {"best_gap", detail::double_str(t.best_gap)},
              {"pattern_applications", t.pattern_boundaries.size()},
              {"stages_completed", t.stage_boundaries.size()}};
}

// ---------------------------------------------------------------------------
// Trace CSV

inline constexpr const char* kTraceCsvHeader = "iter,gap,min_gap,stage_k,pattern_boundary";

inline void write_trace_row(std::ostream& os, const TraceRow& row) {
  os << row.iter << ',' << detail::double_str(row.gap) << ','
     << detail::double_str(row.min_gap) << ',' << row.stage_k << ','
     << (row.pattern_boundary ? 1 : 0) << '\n';
}

// Streaming sink writing one CSV row per iteration (header included).
inline TraceSink make_csv_sink(std::ostream& os) {
  os << kTraceCsvHeader << '\n';
  return [&os](const TraceRow& row) { write_trace_row(os, row); };
}

}  // namespace silverstep
