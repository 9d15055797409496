#include "algebroid/suite.hpp"
#include "helpers.hpp"

using namespace testing;

TEST_CASE("identity names are frozen") {
  CHECK(identity_names() == std::vector<std::string>{"half-pi-pi", "twisted-half-pi-pi", "sharp-compat",
                                                     "ls-obstruction", "cocyc", "twisted-sharp", "psi-intertwine",
                                                     "poissonize-scaling", "kvize-scaling", "dtheta-closed-form",
                                                     "pack-H-equivalence"});
  CHECK_THROWS_AS(verify_identity("no-such-identity", SuiteOptions{}), std::invalid_argument);
}

TEST_CASE("identities are deterministic in the seed") {
  SuiteOptions a;
  a.seed = 3;
  a.exec = Exec::Serial;
  SuiteOptions b = a;
  b.exec = Exec::Parallel;
  const CheckResult r1 = verify_identity("cocyc", a), r2 = verify_identity("cocyc", b);
  CHECK(r1.passed);
  CHECK(r1.instances >= 60);
  CHECK(r1.lines == r2.lines);
  CHECK(verify_identity("half-pi-pi", a).instances >= 40);
}

TEST_CASE("fixtures reproduce their verdicts") {
  const std::vector<CheckResult> all = run_fixtures(Exec::Serial);
  REQUIRE(all.size() == fixture_names().size());
  for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i].name == "fixture/" + fixture_names()[i]);
  CHECK(run_fixture("contact").lines == all[2].lines);
  CHECK_THROWS_AS(run_fixture("nope"), std::invalid_argument);
  for (const CheckResult& c : all) {
    CAPTURE(c.name);
    CAPTURE(c.lines.size() ? c.lines.front() : std::string());
    CHECK(c.passed);
  }
}

TEST_CASE("report rendering") {
  ReportDocument doc;
  doc.input_digest = sha256_hex("abc");
  CHECK(doc.input_digest == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CheckResult ok;
  ok.name = "ok";
  ok.instances = 2;
  CheckResult bad;
  bad.name = "bad";
  DefectReport rep;
  DefectTensor t;
  t.add({0, 1}, X() + Scalar(1));
  rep.add("family", t);
  bad.require_vanishing(rep, fixtures::chart(1));
  doc.checks = {ok, bad};
  CHECK_FALSE(doc.passed());
  const std::string text = render_text(doc);
  CHECK(text.find("check ok: pass (2 instances)") != std::string::npos);
  CHECK(text.find("  family[0,1] = x + 1") != std::string::npos);
  CHECK(render_json(doc).find("\"verdict\": \"fail\"") != std::string::npos);
}
