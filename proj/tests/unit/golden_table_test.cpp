#include <doctest.h>

#include <utility>
#include <vector>

#include "golden_table.hpp"
#include "steinberg/insertion.hpp"
#include "steinberg/steinberg_maps.hpp"

namespace steinberg {
namespace {

TEST_CASE("every rank-three map matches the frozen table") {
  const auto& expected = testsupport::golden_rows_n3();
  const auto all = enumerate_partial_permutations(3);
  REQUIRE(all.size() == expected.size());
  for (std::size_t k = 0; k < all.size(); ++k) {
    const PartialPermutation& tau = all[k];
    const testsupport::GoldenRow& row = expected[k];
    CAPTURE(k);
    REQUIRE(tau.word() == row.word);

    const Decomposition d = decompose(tau);
    const auto [p, q] = rs_pair(d.sigma);
    CHECK(p == Tableau(row.rs1));
    CHECK(q == Tableau(row.rs2));

    const Triple t = triple(tau);
    CHECK(t.t1() == Tableau(row.t1));
    CHECK(t.t2() == Tableau(row.t2));
    CHECK(t.nu() == Partition(row.nu));

    CHECK(phi(tau) ==
          std::pair<Partition, Partition>{Partition(row.phi1), Partition(row.phi2)});
    CHECK(xi_s_generic(tau) == SignedYoungDiagram::from_strings(row.xi_s));
  }
}

}  // namespace
}  // namespace steinberg
