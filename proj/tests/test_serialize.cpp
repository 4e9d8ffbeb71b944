// Serialization: decimal strings must round-trip extended-precision values
// losslessly, structured dumps must carry the fields downstream tooling keys
// on, and trace CSV must follow the pinned row format.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

#include "silverstep/certificate.hpp"
#include "silverstep/gd.hpp"
#include "silverstep/real.hpp"
#include "silverstep/sequence.hpp"
#include "silverstep/serialize.hpp"
#include "silverstep/verify.hpp"

using Real = silverstep::Real128;
using silverstep::Sequences;

TEST_CASE("decimal strings round-trip extended-precision values bit for bit") {
  const Real values[] = {silverstep::sqrt2<Real>(), Real(1) / 3,
                         silverstep::silver_pow<Real>(-40), Real("2.5e-300"), Real(0)};
  for (const Real& v : values) {
    const Real back = silverstep::parse_decimal<Real>(silverstep::format_decimal(v));
    CHECK(back == v);
  }
}

TEST_CASE("patterns round-trip losslessly and small dumps carry closed forms") {
  Sequences<Real> seq;
  for (int k = 0; k <= 5; ++k) {
    CAPTURE(k);
    const auto p = seq.building_block(k);
    const auto j = silverstep::pattern_to_json(p);
    CHECK(j.at("k").get<int>() == k);
    CHECK(j.at("length").get<std::int64_t>() == p.length());
    const auto back = silverstep::pattern_from_json<Real>(j);
    REQUIRE(back.steps.size() == p.steps.size());
    for (std::size_t i = 0; i < p.steps.size(); ++i) CHECK(back.steps[i] == p.steps[i]);
    CHECK(back.sum == p.sum);

    if (k <= 3) {
      REQUIRE(j.contains("closed_form"));
      CHECK(j.at("closed_form").size() == p.steps.size());
    } else {
      CHECK(!j.contains("closed_form"));
    }
  }
  const auto j3 = silverstep::pattern_to_json(seq.building_block(3));
  CHECK(j3.at("closed_form").at(0).get<std::string>() == "3/2");
  CHECK(j3.at("closed_form").at(3).get<std::string>() ==
        "-1/2-sqrt(2)+3*sqrt(5)/2+sqrt(10)");
  CHECK(j3.at("closed_form").at(7).get<std::string>() == "1+(3+2*sqrt(2))*(3+sqrt(5))");
  CHECK(j3.at("closed_form").at(14).get<std::string>() == "3/2");

  auto bad = silverstep::pattern_to_json(seq.building_block(1));
  bad["length"] = 5;
  CHECK_THROWS_AS(silverstep::pattern_from_json<Real>(bad), std::invalid_argument);
}

TEST_CASE("certificates round-trip with sparsity intact") {
  Sequences<Real> seq;
  for (int k : {1, 2, 3}) {
    CAPTURE(k);
    const auto cert = silverstep::lambda_cert(seq, k);
    const auto j = silverstep::certificate_to_json(cert);
    CHECK(j.at("nonzeros").get<std::size_t>() == cert.entries.size());
    const auto back = silverstep::certificate_from_json<Real>(j);
    CHECK(silverstep::certificate_max_mismatch(back, cert) == 0);
    CHECK(back.row_case == cert.row_case);
  }
  auto j = silverstep::certificate_to_json(silverstep::lambda_cert(seq, 1));
  j["nonzeros"] = 99;
  CHECK_THROWS_AS(silverstep::certificate_from_json<Real>(j), std::invalid_argument);
}

TEST_CASE("schedule dumps expose stages, thresholds, and provenance") {
  Sequences<Real> seq;
  const std::vector<Real> overrides = {Real(1) / 2, Real(1) / 2, Real(1) / 4, Real(1) / 8};
  const auto sched = silverstep::build_schedule(seq, Real(1) / 2, 2, std::optional{overrides});
  const auto j = silverstep::schedule_to_json(sched);
  CHECK(j.at("delta_source").get<std::string>() == "override");
  CHECK(j.at("total_steps").get<std::uint64_t>() == sched.total_steps());
  REQUIRE(j.at("stages").size() == 3);
  CHECK(j.at("stages").at(1).at("repetitions").get<std::uint64_t>() == 1);
  CHECK(j.at("stages").at(2).at("start").get<std::uint64_t>() == 5);

  const auto cons = silverstep::build_schedule(seq, Real(1) / 2, 1);
  CHECK(silverstep::schedule_to_json(cons).at("delta_source").get<std::string>() ==
        "conservative");
}

TEST_CASE("verification report dumps gate the bisected field on its presence") {
  Sequences<Real> seq;
  const auto plain = silverstep::verify_certificate(seq, 1);
  const auto j = silverstep::verification_report_to_json(plain);
  CHECK(j.at("pass").get<bool>());
  CHECK(!j.contains("delta_bisected"));

  const auto bisected = silverstep::verify_certificate(seq, 1, 12);
  const auto jb = silverstep::verification_report_to_json(bisected);
  CHECK(jb.contains("delta_bisected"));
}

TEST_CASE("gamma, feasibility, and gd reports serialize their key fields") {
  Sequences<Real> seq;
  const auto pattern = seq.building_block(1);
  const auto gamma = silverstep::gamma_from_phi(pattern.sum, silverstep::phi(seq, 1));
  const auto jg = silverstep::gamma_to_json(gamma);
  CHECK(jg.at("star_row").size() == 4);
  CHECK(jg.at("superdiag").size() == 3);

  const auto bounds = silverstep::pattern_feasibility_bounds<Real>(
      {Real(3) / 2, Real(5), Real(3) / 2});
  const auto jf = silverstep::feasibility_to_json(bounds);
  CHECK(!jf.at("all_strict").get<bool>());

  const auto adv = silverstep::adversary_suite({1.35, 4.5, 1.35});
  const auto ja = silverstep::adversary_report_to_json(adv);
  CHECK(ja.at("all_descended").get<bool>());
  REQUIRE(ja.at("instances").size() == 3);
  CHECK(ja.at("instances").at(0).at("rule").get<std::string>() == "product");

  const auto fitj = silverstep::rate_fit_to_json(silverstep::RateFit{-1.25, 0.5, 4});
  CHECK(fitj.at("slope").get<std::string>() == "-1.25");
}

TEST_CASE("trace CSV uses the pinned header and one row per iteration") {
  const silverstep::Quad1D f;
  std::ostringstream os;
  silverstep::RunOptions opt;
  opt.record_all = false;
  opt.sink = silverstep::make_csv_sink(os);
  silverstep::run(f, silverstep::Vector{1.0}, silverstep::single_pattern_plan({1.5, 5.0, 1.5}),
                  opt);

  std::istringstream is(os.str());
  std::string line;
  REQUIRE(std::getline(is, line));
  CHECK(line == silverstep::kTraceCsvHeader);
  REQUIRE(std::getline(is, line));
  CHECK(line == "0,0.5,0.5,0,0");
  REQUIRE(std::getline(is, line));
  CHECK(line == "1,0.125,0.125,0,0");
  REQUIRE(std::getline(is, line));
  CHECK(line == "2,2,0.125,0,0");
  REQUIRE(std::getline(is, line));
  CHECK(line == "3,0.5,0.125,0,1");
  CHECK(!std::getline(is, line));
}

TEST_CASE("trace summaries compress a run to its headline numbers") {
  const silverstep::Quad1D f;
  const auto trace =
      silverstep::run(f, silverstep::Vector{1.0}, silverstep::single_pattern_plan({1.0}));
  const auto j = silverstep::trace_summary_to_json(trace);
  CHECK(j.at("iterations").get<std::uint64_t>() == 1);
  CHECK(j.at("last_gap").get<std::string>() == "0");
  CHECK(j.at("pattern_applications").get<std::size_t>() == 1);
  CHECK(j.at("stages_completed").get<std::size_t>() == 1);
}
