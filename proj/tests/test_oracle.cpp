#include <catch2/catch_amalgamated.hpp>

#include <chrono>
#include <cstdlib>
#include <string>

#include "predred/oracle.hpp"
#include "support/fixtures.hpp"

using namespace predred;
using testsupport::make_problem;
using testsupport::mini_parser;

TEST_CASE("signature model file parses", "[oracle]") {
  const SignatureModel m = SignatureModel::parse(
      "# comment\nmain = void, String, args\n\nequals=boolean,obj\n", "demo");
  CHECK(m.model_id == "demo");
  REQUIRE(m.signatures.size() == 2);
  CHECK(m.signatures[0].first == "main");
  CHECK(m.signatures[0].second == std::set<std::string>{"void", "String", "args"});
  CHECK(m.signatures[1].second == std::set<std::string>{"boolean", "obj"});
}

TEST_CASE("signature model rejects malformed files", "[oracle]") {
  CHECK_THROWS_AS(SignatureModel::parse("main\n", "m"), ModelError);
  CHECK_THROWS_AS(SignatureModel::parse("main =\n", "m"), ModelError);
  CHECK_THROWS_AS(SignatureModel::parse("= a\n", "m"), ModelError);
  CHECK_THROWS_AS(SignatureModel::parse("a = x\na = y\n", "m"), ModelError);
  CHECK_THROWS_AS(SignatureModel::parse("unknown = x\n", "m"), ModelError);
}

TEST_CASE("bundled model loads with its file stem as id", "[oracle]") {
  const SignatureModel& m = testsupport::bundled_model();
  CHECK(m.model_id == "minijava");
  CHECK(m.signatures.size() == 10);
  CHECK(m.fallback_label == "unknown");
}

TEST_CASE("predict matches on required token sets", "[oracle]") {
  const SignatureModel m =
      SignatureModel::parse("main = void,String,args\n", "m");
  CHECK(predict(m, "void f ( String args ) { }") == "main");
  CHECK(predict(m, "int x ;") == "unknown");
  CHECK(predict(m, "") == "unknown");
}

TEST_CASE("predict prefers the largest signature, then the smallest label",
          "[oracle]") {
  const SignatureModel m = SignatureModel::parse(
      "equals = boolean,Object\nmain = void,String,args\n", "m");
  CHECK(predict(m, "boolean Object void String args") == "main");
  CHECK(predict(m, "boolean Object int") == "equals");

  const SignatureModel tie =
      SignatureModel::parse("b = x,y\na = x,z\n", "m");
  CHECK(predict(tie, "x y z") == "a");
}

TEST_CASE("predict ignores token order and duplicates", "[oracle]") {
  const SignatureModel m =
      SignatureModel::parse("main = void,String,args\n", "m");
  CHECK(predict(m, "args String void") == "main");
  CHECK(predict(m, "args args String String void") == "main");
}

TEST_CASE("predict is total on unlexable text", "[oracle]") {
  const SignatureModel m =
      SignatureModel::parse("main = void,String,args\n", "m");
  CHECK(predict(m, "void String args \x01") == "main");
  CHECK(predict(m, "void \x01 String args") == "unknown");
}

TEST_CASE("session verdicts follow the baseline", "[oracle]") {
  SignatureOracle oracle =
      testsupport::make_sig_oracle("main = void,String,args\n");
  const std::string program = "void f ( String args ) { }";
  OracleSession session(oracle, mini_parser(), "main", Budgets{});

  const Verdict base = session.preserved(program);
  CHECK(base.pass());
  CHECK(base.predicted == "main");
  CHECK(base.valid_parse);
  CHECK_FALSE(base.from_cache);

  CHECK_FALSE(session.preserved("").pass());
  CHECK(session.preserved("").predicted == "unknown");
  CHECK_FALSE(session.preserved("void f ( String ) { }").pass());
  CHECK_FALSE(session.preserved("void String args").valid_parse);
  CHECK(session.preserved("void String args").pass());
}

TEST_CASE("session caches by candidate text", "[oracle]") {
  SignatureOracle oracle = testsupport::make_sig_oracle("a = x\n");
  OracleSession session(oracle, mini_parser(), "a", Budgets{});

  session.preserved("x");
  CHECK(session.queries() == 1);
  const Verdict again = session.preserved("x");
  CHECK(again.from_cache);
  CHECK(again.pass());
  CHECK(session.queries() == 1);
  CHECK(session.candidates_total() == 2);
  CHECK(session.step_log().size() == 2);
  CHECK(session.step_log()[0].candidate_hash ==
        session.step_log()[1].candidate_hash);

  session.preserved("y");
  CHECK(session.queries() == 2);
}

TEST_CASE("session refuses queries past the budget", "[oracle]") {
  SignatureOracle oracle = testsupport::make_sig_oracle("a = x\n");
  Budgets tight;
  tight.max_queries = 1;
  OracleSession session(oracle, mini_parser(), "a", tight);

  CHECK(session.preserved("x").pass());
  CHECK_FALSE(session.truncated());

  const Verdict refused = session.preserved("x y");
  CHECK(refused.budget_hit);
  CHECK_FALSE(refused.pass());
  CHECK(session.truncated());
  CHECK(session.queries() == 1);
  CHECK(session.candidates_total() == 1);  // refused probes are not candidates

  CHECK(session.preserved("x").pass());  // cached answers stay available
}

TEST_CASE("signature predicate is monotone under token supersets", "[oracle]") {
  SignatureOracle oracle = testsupport::make_sig_oracle("a = x,y\n");
  OracleSession session(oracle, mini_parser(), "a", Budgets{});
  const std::string core = "x y";
  REQUIRE(session.preserved(core).pass());
  for (const char* extra : {"z", "w q", "x x y", "0 \"s\""}) {
    const std::string bigger = core + " " + extra;
    INFO(bigger);
    CHECK(session.preserved(bigger).pass());
  }
}

TEST_CASE("external oracle follows the exit-code protocol", "[oracle]") {
  using namespace std::chrono_literals;
  SECTION("exit 0 preserves") {
    ExternalOracle oracle("true", 5000ms);
    const Prediction p = oracle.predict_label("anything");
    CHECK(p.label == kExternalPreserved);
    CHECK_FALSE(p.failure);
  }
  SECTION("exit 1 changes") {
    ExternalOracle oracle("false", 5000ms);
    const Prediction p = oracle.predict_label("anything");
    CHECK(p.label == kExternalChanged);
    CHECK_FALSE(p.failure);
    CHECK_FALSE(p.timed_out);
  }
  SECTION("candidate file is passed as the sole argument") {
    ExternalOracle oracle("grep -q args", 5000ms);
    CHECK(oracle.predict_label("String args").label == kExternalPreserved);
    CHECK(oracle.predict_label("int x").label == kExternalChanged);
  }
  SECTION("timeout is an oracle failure") {
    ExternalOracle oracle("sleep 5 #", 100ms);
    const Prediction p = oracle.predict_label("anything");
    CHECK(p.failure);
    CHECK(p.timed_out);
    CHECK(p.label == kExternalChanged);
  }
}

TEST_CASE("oracle failures are treated as Fail", "[oracle]") {
  using namespace std::chrono_literals;
  ExternalOracle oracle("sleep 5 #", 100ms);
  OracleSession session(oracle, mini_parser(), std::string(kExternalPreserved),
                        Budgets{});
  const Verdict v = session.preserved("x");
  CHECK_FALSE(v.pass());
  CHECK(v.oracle_failure);
  CHECK(v.timed_out);
}

TEST_CASE("environment variable overrides the per-query timeout", "[oracle]") {
  ::setenv("PREDRED_ORACLE_TIMEOUT_MS", "123", 1);
  CHECK(Budgets::from_env().per_query_timeout == std::chrono::milliseconds(123));
  ::unsetenv("PREDRED_ORACLE_TIMEOUT_MS");
  CHECK(Budgets::from_env().per_query_timeout ==
        std::chrono::milliseconds(10000));
}
