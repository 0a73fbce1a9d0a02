#include <gtest/gtest.h>

#include "hadamard_cli/commands.hpp"

using namespace hadamard;
using namespace hadamard::cli;

namespace {

JobResult run_job(const std::string& sub, const std::string& payload, std::uint64_t seed = kDefaultSeed) {
  JobSpec job;
  job.subcommand = sub;
  job.payload = json::parse(payload);
  job.seed = seed;
  return run(job);
}

const char* kTwoLines = R"({"l": [[2,3,5,7],[11,13,17,19]], "m": [[23,29,31,37],[41,43,47,53]]})";

}  // namespace

TEST(Codec, RationalStrings) {
  EXPECT_EQ(to_json(make_rational(-6, 4)), "-3/2");
  EXPECT_EQ(to_json(Rational(7)), "7");
  EXPECT_EQ(rational_from_json(json("-10/4"), "/x"), make_rational(-5, 2));
  EXPECT_THROW(rational_from_json(json("10/-4"), "/x"), ValidationError);
  EXPECT_EQ(rational_from_json(json(3), "/x"), 3);
  try {
    rational_from_json(json(0.5), "/a/1");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.pointer(), "/a/1");
  }
  EXPECT_THROW(rational_from_json(json("1/0"), "/x"), ValidationError);
}

TEST(Codec, SpaceAndFormRoundTrip) {
  LinSpace s(QMatrix{{1, make_rational(1, 2), 0}, {0, 3, -1}});
  EXPECT_EQ(space_from_json(to_json(s), ""), s);
  SparsePoly f(3);
  f.add_term({2, 0, 1}, make_rational(-7, 3));
  f.add_term({0, 1, 0}, 5);
  EXPECT_EQ(form_from_json(to_json(f), 3, ""), f);
  EXPECT_THROW(space_from_json(json::parse(R"([[1,2],[2,4]])"), "/l"), ValidationError);
  EXPECT_THROW(space_from_json(json::parse(R"([[1,2],[2]])"), "/l"), ValidationError);
  EXPECT_THROW(form_from_json(json::parse(R"([[[1,0],"1"]])"), 3, "/f"), ValidationError);
}

TEST(Codec, SamplerKinds) {
  EXPECT_EQ(sampler_from_json(json::parse(R"({"segre": [1, 2]})"), "").ambient_dim(), 5u);
  auto p = sampler_from_json(json::parse(R"({"power": {"of": {"linear": [[1,2,3],[0,1,1]]}, "r": 3}})"), "");
  EXPECT_EQ(p.ambient_dim(), 2u);
  try {
    sampler_from_json(json::parse(R"({"product": [{"linear": [[1,2]]}, {"segre": [1, 1]}]})"), "/s");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.pointer(), "/s/product/1");
  }
}

TEST(Run, DegreeOfTwoLines) {
  JobResult r = run_job("degree", R"({"plain": [[1,1],[1,1]], "n": 3})");
  EXPECT_EQ(r.exit_code, kOk);
  EXPECT_EQ(r.document["dim"], 2);
  EXPECT_EQ(r.document["degree"], "2");
  EXPECT_FALSE(r.document.contains("transcript"));
}

TEST(Run, DegreeTranscriptAgreesWithFormula) {
  JobSpec job{"degree", json::parse(R"({"plain": [[1,1]], "reciprocal": [[1,1]], "n": 3})")};
  job.transcript = true;
  JobResult r = run(job);
  ASSERT_EQ(r.exit_code, kOk);
  EXPECT_EQ(r.document["degree"], "2");
  EXPECT_EQ(r.document["transcript"]["fan_degree"], "2");
  EXPECT_FALSE(r.document["transcript"]["pairs"].empty());
}

TEST(Run, ValidationErrorsCarryPointer) {
  JobResult r = run_job("degree", R"({"plain": [[1,1],[1,"x"]], "n": 3})");
  EXPECT_EQ(r.exit_code, kValidation);
  EXPECT_EQ(r.document["error"]["pointer"], "/plain/1/1");
  r = run_job("degree", R"({"plain": [[1,1]]})");
  EXPECT_EQ(r.exit_code, kValidation);
  EXPECT_EQ(r.document["error"]["pointer"], "/n");
  r = run_job("bracket", R"({"mode": "quartic"})");
  EXPECT_EQ(r.document["error"]["pointer"], "/mode");
  EXPECT_EQ(run_job("nonsense", "{}").exit_code, kValidation);
  EXPECT_EQ(run_job("degree", "[1, 2]").exit_code, kValidation);
}

TEST(Run, PreconditionFailuresNameHypothesis) {
  JobResult r = run_job("star-config", R"({"line": [[1,0,1,1],[0,1,1,1]], "points": [[1,1,2,2]], "r": 1})");
  EXPECT_EQ(r.exit_code, kPrecondition);
  EXPECT_NE(r.document["error"]["message"].get<std::string>().find("[23]"), std::string::npos);
  r = run_job("degree", R"({"plain": [[3,1]], "reciprocal": [[2,1]], "n": 4})");
  EXPECT_EQ(r.exit_code, kPrecondition);
}

TEST(Run, BudgetExhaustion) {
  JobResult r = run_job("line-power", R"({"line": [[1,0,1,1,0],[0,1,1,1,1]], "r": 3, "budget": 1})");
  EXPECT_EQ(r.exit_code, kBudget);
  EXPECT_EQ(r.document["error"]["kind"], "budget");
}

TEST(Run, LinePowerGenericAndDegenerate) {
  JobResult g = run_job("line-power", R"({"line": [[1,1,1,1],[1,2,3,4]], "r": 2})");
  ASSERT_EQ(g.exit_code, kOk);
  EXPECT_TRUE(g.document["generic"]);
  EXPECT_EQ(g.document["dim"], 2);
  EXPECT_EQ(g.document["equations"].size(), 1u);
  // the single equation is the hyperplane L^{*2} in P^3, up to scale
  SparsePoly eq = form_from_json(g.document["equations"][0], 4, "");
  SparsePoly hyper = form_from_json(g.document["hyperplane"], 4, "");
  EXPECT_TRUE(proportionality(eq, hyper).has_value());

  JobResult d = run_job("line-power", R"({"line": [[1,0,1,1],[0,1,1,1]], "r": 2})");
  ASSERT_EQ(d.exit_code, kOk);
  EXPECT_FALSE(d.document["generic"]);
  EXPECT_EQ(d.document["vanishing_bracket"], json::array({2, 3}));
  EXPECT_EQ(d.document["dim"], 2);
}

TEST(Run, StarConfigCountsPoints) {
  JobResult r = run_job("star-config", R"({"line": [[1,1,1,1,1],[1,2,3,4,5]],
      "points": [[2,3,4,5,6],[3,5,7,9,11],[4,7,10,13,16],[5,9,13,17,21]], "r": 2})");
  ASSERT_EQ(r.exit_code, kOk);
  EXPECT_EQ(r.document["point_count"], 6);
  EXPECT_TRUE(r.document["verified"]);
  EXPECT_TRUE(r.document["general_position"]);
}

TEST(Run, SpanDimMatchesFormula) {
  JobResult r = run_job("span-dim", R"({"spaces": [{"space": [[1,2,3,4,5,6,7],[1,-1,2,5,7,3,-2]], "multiplicity": 2},
      {"space": [[3,1,4,1,5,9,2],[2,7,1,8,2,8,1]]}], "identifiability_trials": 30})");
  ASSERT_EQ(r.exit_code, kOk);
  EXPECT_EQ(r.document["dim"], 5);
  EXPECT_EQ(r.document["formula"], 5);
  EXPECT_TRUE(r.document["identifiability"]["ok"]);
}

TEST(Run, InterpolatedFormPassesBracketVerify) {
  JobResult h = run_job("interp", R"({"sampler": {"product": [{"linear": [[2,3,5,7],[11,13,17,19]]},
      {"linear": [[23,29,31,37],[41,43,47,53]]}]}, "max_degree": 3})");
  ASSERT_EQ(h.exit_code, kOk);
  EXPECT_EQ(h.document["degree"], 2);
  JobResult q = run_job("bracket", std::string(R"({"mode": "quadric", )") + std::string(kTwoLines).substr(1));
  ASSERT_EQ(q.exit_code, kOk);
  auto ratio = proportionality(form_from_json(h.document["form"], 4, ""), form_from_json(q.document["form"], 4, ""));
  ASSERT_TRUE(ratio.has_value());
  EXPECT_NE(*ratio, 0);

  // the emitted form feeds straight back in as verify input
  json verify = {{"mode", "verify"},
                 {"form", q.document["form"]},
                 {"sampler", json::parse(R"({"product": [{"linear": [[2,3,5,7],[11,13,17,19]]},
                     {"linear": [[23,29,31,37],[41,43,47,53]]}]})")}};
  JobResult v = run(JobSpec{"bracket", verify});
  ASSERT_EQ(v.exit_code, kOk);
  EXPECT_TRUE(v.document["verified"]);

  JobSpec sym{"bracket",
              {{"mode", "verify"},
               {"form", q.document["form"]},
               {"product", json::parse(R"([[[2,3,5,7],[11,13,17,19]], [[23,29,31,37],[41,43,47,53]]])")}}};
  sym.symbolic = true;
  JobResult s = run(sym);
  ASSERT_EQ(s.exit_code, kOk);
  EXPECT_TRUE(s.document["verified"]);
}

TEST(Run, BracketNotationOnRequest) {
  JobSpec job{"bracket", json::parse(std::string(R"({"mode": "quadric", )") + std::string(kTwoLines).substr(1))};
  EXPECT_FALSE(run(job).document.contains("notation"));
  job.notation = true;
  std::string text = run(job).document["notation"];
  EXPECT_NE(text.find("[12][13][23]{12}{13}{23}*x0^2"), std::string::npos);
}

TEST(Run, DimEstimateSeesDefect) {
  JobResult r = run_job("dim-estimate", R"({"x": {"segre": [2, 3]},
      "y": {"linear": [[1,0,0,-1,0,0,0,0,-1,0,0,1],[0,1,0,-1,0,0,0,0,0,-1,0,1],[0,0,1,-1,0,0,0,0,0,0,-1,1],
                       [0,0,0,0,1,0,0,-1,-1,0,0,1],[0,0,0,0,0,1,0,-1,0,-1,0,1],[0,0,0,0,0,0,1,-1,0,0,-1,1]]},
      "expected": {"dim_x": 5, "dim_y": 5, "dim_h": 0, "dim_g": 11}})");
  ASSERT_EQ(r.exit_code, kOk);
  EXPECT_EQ(r.document["terracini_dim"], 9);
  EXPECT_EQ(r.document["expected_dimension"], 10);
  EXPECT_TRUE(r.document["defective"]);
}

TEST(Run, IdenticalJobsGiveIdenticalBytes) {
  const std::vector<std::pair<std::string, std::string>> jobs = {
      {"line-power", R"({"line": [[1,0,1,1],[0,1,1,1]], "r": 2})"},
      {"span-dim", R"({"spaces": [{"space": [[1,2,3,4],[0,1,5,2]], "multiplicity": 2}], "identifiability_trials": 20})"},
      {"interp", R"({"sampler": {"reciprocal": [[1,2,3,4],[0,1,5,2],[3,0,1,1]]}, "max_degree": 4})"},
      {"degree", R"({"plain": [[2,1]], "reciprocal": [[1,1]], "n": 4})"},
  };
  for (const auto& [sub, payload] : jobs) {
    JobSpec job{sub, json::parse(payload)};
    job.transcript = true;
    job.seed = 99;
    EXPECT_EQ(run(job).document.dump(), run(job).document.dump()) << sub;
  }
}

TEST(Run, PaperSuitePasses) {
  JobResult r = run(JobSpec{"paper-suite"});
  EXPECT_EQ(r.exit_code, kOk) << r.document.dump(2);
  EXPECT_TRUE(r.document["all_passed"]);
  EXPECT_EQ(r.document["passed"], r.document["total"]);
}
