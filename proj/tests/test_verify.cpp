#include <doctest.h>

#include "patav/verify.hpp"

using namespace patav;

TEST_CASE("verify: registry") {
  const auto& ids = all_check_ids();
  CHECK(ids.size() == 14);
  CHECK_THROWS_AS(run_check("no_such_check", VerifyBounds{}), std::invalid_argument);
  // every suite member is a known id
  for (const auto& [name, members] : suites())
    for (const auto& m : members) CHECK(std::find(ids.begin(), ids.end(), m) != ids.end());
}

TEST_CASE("verify: capped bounds") {
  const auto b = VerifyBounds{}.capped(3);
  CHECK(b.a_n <= 3);
  CHECK(b.main_n <= 3);
  CHECK(b.kernel_order <= 3);
  CHECK(b.psi_total >= 4);  // psi needs at least total size 4
  const auto big = VerifyBounds{}.capped(100);
  CHECK(big.a_n == VerifyBounds{}.a_n);
}

TEST_CASE("verify: every check passes at small bounds") {
  const auto b = VerifyBounds{}.capped(4);
  for (const auto& id : all_check_ids()) {
    CAPTURE(id);
    for (const auto& r : run_check(id, b)) {
      CHECK(r.status == CheckStatus::Pass);
      CHECK_FALSE(r.witness.has_value());
      const auto j = to_json(r);
      CHECK_FALSE(j.contains("witness"));
      CHECK_FALSE(j.contains("seconds"));
      CHECK(j["status"] == "PASS");
    }
  }
}

TEST_CASE("verify: suite verdict ignores conjecture-grade failures") {
  CheckResult ok;
  ok.id = "a";
  CheckResult conj;
  conj.id = "c";
  conj.conjecture = true;
  conj.status = CheckStatus::Fail;
  conj.witness = Witness{"x", "n=3", "1", "2"};
  CHECK(suite_passed({ok, conj}));
  CheckResult bad = ok;
  bad.status = CheckStatus::Fail;
  CHECK_FALSE(suite_passed({ok, bad}));
  CheckResult skipped = ok;
  skipped.status = CheckStatus::Skip;
  CHECK(suite_passed({skipped}));
  const auto j = to_json(conj);
  REQUIRE(j.contains("witness"));
  CHECK(j["witness"]["index"] == "n=3");
  CHECK(j["conjecture"] == true);
}
