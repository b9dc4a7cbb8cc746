#include <doctest.h>

#include "steinberg/errors.hpp"
#include "steinberg/partition.hpp"

namespace steinberg {
namespace {

TEST_CASE("partition validates its parts") {
  CHECK_NOTHROW(Partition(std::vector<int>{}));
  CHECK_NOTHROW(Partition({3, 1}));
  CHECK_NOTHROW(Partition({2, 2, 2}));
  CHECK_THROWS_AS(Partition({1, 2}), DomainError);
  CHECK_THROWS_AS(Partition({2, 0}), DomainError);
  CHECK_THROWS_AS(Partition({-1}), DomainError);
}

TEST_CASE("partition accessors") {
  Partition p({4, 2, 1});
  CHECK(p.size() == 7);
  CHECK(p.num_rows() == 3);
  CHECK(p.num_cols() == 4);
  CHECK(p.row(0) == 4);
  CHECK(p.row(2) == 1);
  CHECK(p.row(3) == 0);
  CHECK(Partition{}.empty());
  CHECK(Partition{}.num_cols() == 0);
}

TEST_CASE("conjugate transposes the diagram") {
  CHECK(Partition({4, 2, 1}).conjugate() == Partition({3, 2, 1, 1}));
  CHECK(Partition({3, 3}).conjugate() == Partition({2, 2, 2}));
  CHECK(Partition{}.conjugate() == Partition{});
  CHECK(Partition({5}).conjugate() == Partition({1, 1, 1, 1, 1}));
  CHECK(Partition({4, 2, 1}).conjugate().conjugate() == Partition({4, 2, 1}));
}

TEST_CASE("containment compares row by row") {
  CHECK(Partition({3, 2}).contains(Partition({2, 2})));
  CHECK(Partition({3, 2}).contains(Partition{}));
  CHECK_FALSE(Partition({3, 2}).contains(Partition({3, 3})));
  CHECK_FALSE(Partition({3, 2}).contains(Partition({1, 1, 1})));
}

TEST_CASE("column prefix counts") {
  Partition p({3, 2, 2, 1});
  CHECK(p.boxes_in_first_columns(0) == 0);
  CHECK(p.boxes_in_first_columns(1) == 4);
  CHECK(p.boxes_in_first_columns(2) == 7);
  CHECK(p.boxes_in_first_columns(3) == 8);
  CHECK(p.boxes_in_first_columns(9) == 8);
}

TEST_CASE("dominance order on partitions") {
  CHECK(dominance_partition(Partition({1, 1, 1}), Partition({3})));
  CHECK_FALSE(dominance_partition(Partition({3}), Partition({1, 1, 1})));
  CHECK(dominance_partition(Partition({2, 1}), Partition({2, 1})));
  CHECK(dominance_partition(Partition({2, 2}), Partition({3, 1})));
  CHECK_FALSE(dominance_partition(Partition({3, 1}), Partition({2, 2})));
}

}  // namespace
}  // namespace steinberg
