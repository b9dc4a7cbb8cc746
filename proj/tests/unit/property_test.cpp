#include <doctest.h>

#include "property_suites.hpp"

namespace steinberg {
namespace {

void require_clean(const testsupport::SuiteResult& result, int minimum_cases) {
  CAPTURE(result.first_failure);
  CHECK(result.failures == 0);
  CHECK(result.cases >= minimum_cases);
}

TEST_CASE("row insertion equals column insertion of the reversed word") {
  require_clean(testsupport::row_column_reversal_suite(1, 300), 300);
}

TEST_CASE("insertion of the inverse swaps the tableau pair") {
  require_clean(testsupport::rs_inverse_swap_suite(2, 300), 300);
}

TEST_CASE("rectification is independent of slide choices") {
  require_clean(testsupport::jdt_confluence_suite(3, 250), 250);
}

TEST_CASE("matrix canonicalization is stable on double cosets") {
  require_clean(testsupport::canonicalize_matrix_suite(4, 250), 250);
}

TEST_CASE("grassmann canonicalization is stable on orbit translates") {
  require_clean(testsupport::canonical_grassmann_suite(5, 200), 200);
}

TEST_CASE("both skew bridge constructions agree") {
  require_clean(testsupport::triangle_two_path_suite(6, 200), 1546 + 200);
}

TEST_CASE("squaring acts on jordan types as predicted") {
  require_clean(testsupport::square_jordan_suite(7, 250), 250);
}

}  // namespace
}  // namespace steinberg
