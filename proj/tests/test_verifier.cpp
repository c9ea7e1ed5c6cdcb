#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "rubikmap/builders.hpp"
#include "rubikmap/error.hpp"
#include "rubikmap/map_io.hpp"
#include "rubikmap/verifier.hpp"

using namespace rubikmap;

namespace {

BigInt factorial(unsigned n)
{
  BigInt r = 1;
  for (unsigned k = 2; k <= n; ++k)
    r *= k;
  return r;
}

BigInt power(unsigned base, unsigned exp)
{
  BigInt r = 1;
  for (unsigned k = 0; k < exp; ++k)
    r *= base;
  return r;
}

} // namespace

TEST_CASE("predicted orders")
{
  CHECK(predicted_order(platonic("cube")).str() == "43252003274489856000");
  CHECK(predicted_order(platonic("tetrahedron")) == 3732480);
  CHECK(predicted_order(platonic("dodecahedron")) ==
        power(2, 29) * factorial(30) / 2 * power(3, 19) * factorial(20) / 2);
  try {
    predicted_order(theta());
    FAIL("no exception");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::OutOfConjectureScope);
  }
}

TEST_CASE("cube report")
{
  auto r = verify(platonic("cube"));
  REQUIRE(r.orders);
  CHECK(r.orders->h1 == 2048);
  CHECK(r.orders->h2 == 239500800);
  CHECK(r.orders->h3 == 2187);
  CHECK(r.orders->vertex_image == 40320);
  CHECK(r.orders->rubik == *r.predicted);
  CHECK(r.orders->h1 * r.orders->h2 * r.orders->h3 * r.orders->vertex_image == r.orders->rubik);
  for (const auto &c : r.clause) {
    CHECK(c.holds);
    CHECK(c.bound_holds);
  }
  CHECK(r.pass);
  CHECK_FALSE(r.all_odd);
}

TEST_CASE("tetrahedron report")
{
  auto r = verify(platonic("tetrahedron"));
  REQUIRE(r.orders);
  CHECK(r.all_odd);
  CHECK(r.orders->vertex_image == 12);
  CHECK(r.orders->rubik == 3732480);
  CHECK(r.pass);
}

TEST_CASE("out of scope and budget")
{
  try {
    verify(theta());
    FAIL("no exception");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::OutOfConjectureScope);
  }

  VerifyOptions none;
  none.budget_seconds = 0.0;
  try {
    verify(prism(3), none);
    FAIL("no exception");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
  auto reports = run_suite({prism(3), platonic("cube"), theta()}, none);
  REQUIRE(reports.size() == 3);
  for (const auto &r : reports) {
    CHECK_FALSE(r.pass);
    REQUIRE(r.error_code);
    CHECK(*r.error_code == "BudgetExceeded");
  }
}

TEST_CASE("suite records errors instead of throwing")
{
  CHECK(run_suite({}).empty());
  auto reports = run_suite({theta(), prism(3)});
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].name == "theta");
  CHECK(*reports[0].error_code == "OutOfConjectureScope");
  CHECK_FALSE(reports[0].pass);
  CHECK(reports[1].pass);
}

TEST_CASE("reports are independent of the seed")
{
  std::vector<Map> maps{prism(3), prism(5), platonic("cube"), truncate(platonic("tetrahedron"))};
  VerifyOptions a, b;
  a.seed = 1;
  b.seed = 0xabcdef;
  auto ra = run_suite(maps, a), rb = run_suite(maps, b);
  for (auto *rs : {&ra, &rb})
    for (auto &r : *rs)
      r.seconds = 0;
  CHECK(reports_to_json(ra) == reports_to_json(rb));
  std::ostringstream ca, cb;
  write_csv(ca, ra);
  write_csv(cb, rb);
  CHECK(ca.str() == cb.str());
}

TEST_CASE("output formats")
{
  auto reports = run_suite({prism(3)});
  std::ostringstream csv;
  write_csv(csv, reports);
  std::string text = csv.str();
  CHECK(text.rfind("name,V,E,F,all_odd,order,h1,h2,h3,vertex_image,predicted,pass,seconds\n", 0) == 0);
  CHECK(text.find("prism3,6,9,5,false,8126654054400,256,181440,243,720,8126654054400,true,") !=
        std::string::npos);

  auto doc = report_to_json(reports[0]);
  for (const char *k : {"name", "V", "E", "F", "all_odd", "order", "h1", "h2", "h3", "vertex_image",
                        "predicted", "pass", "seconds"})
    CHECK(doc.contains(k));
  CHECK(doc["order"] == "8126654054400");
  CHECK(doc["clauses"].size() == 4);

  std::ostringstream table;
  write_table(table, reports);
  CHECK(table.str().find("8126654054400") != std::string::npos);
}

TEST_CASE("torus map")
{
  auto r = verify(hex_torus(2, 3));
  REQUIRE(r.orders);
  CHECK(r.genus == 1);
  CHECK(r.orders->rubik == *r.predicted);
}
