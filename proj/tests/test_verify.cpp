#include "doctest.h"
#include "gadc/verify.hpp"

using namespace gadc;

TEST_CASE("verification grids") {
  CHECK(verify_grid().size() == 27);
  CHECK(eps_cov_points().size() == 12);
}

TEST_CASE("verification suites pass") {
  const VerifyReport w = verify_witnesses(verify_grid());
  CHECK(w.ok());
  CHECK(w.checks.size() > 27);
  const VerifyReport s = verify_structural(verify_grid());
  CHECK(s.ok());
  for (const VerifyCheck& c : s.checks) CHECK(c.value <= 1e-10);
  int ad = 0, anti = 0, ext = 0;
  for (const VerifyCheck& c : s.checks) {
    ad += c.name == "ad_degradable";
    anti += c.name == "anti_degrading";
    ext += c.name == "extended_degradable";
  }
  CHECK(ad == 12);
  CHECK(anti == 15);
  CHECK(ext == 15);
  const VerifyReport e = verify_eps_cov(eps_cov_points());
  CHECK(e.ok());
  CHECK(e.checks.size() == 12);
}

TEST_CASE("injected fault is detected") {
  const VerifyReport r = run_verify_suite(true);
  CHECK_FALSE(r.ok());
  CHECK(r.failures() > 0);
  CHECK(run_verify_suite(false).ok());
}
