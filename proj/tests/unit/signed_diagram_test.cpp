#include <doctest.h>

#include <utility>
#include <vector>

#include "steinberg/errors.hpp"
#include "steinberg/signed_diagram.hpp"

namespace steinberg {
namespace {

SignedYoungDiagram rows(const std::vector<std::string>& strings) {
  return SignedYoungDiagram::from_strings(strings);
}

TEST_CASE("signed rows alternate from their start sign") {
  SignedRow row{4, '+'};
  CHECK(row.sign_at(0) == '+');
  CHECK(row.sign_at(1) == '-');
  CHECK(row.sign_at(3) == '-');
  CHECK(row.plus_count() == 2);
  CHECK(row.minus_count() == 2);
  CHECK(SignedRow{3, '-'}.to_string() == "-+-");
  CHECK(SignedRow{3, '-'}.plus_count() == 1);
}

TEST_CASE("diagram normalization and balance") {
  SignedYoungDiagram d({SignedRow{1, '-'}, SignedRow{2, '-'}, SignedRow{2, '+'},
                        SignedRow{1, '+'}});
  CHECK(d.to_strings() == std::vector<std::string>{"+-", "-+", "+", "-"});
  CHECK(d.n() == 3);
  CHECK(d.num_cols() == 2);
  CHECK(d.shape() == Partition({2, 2, 1, 1}));
  CHECK_THROWS_AS(rows({"+-+"}), DomainError);
  CHECK_THROWS_AS(rows({"+", "+"}), DomainError);
  CHECK(rows({}).empty());
}

TEST_CASE("column counts round trip through reconstruction") {
  SignedYoungDiagram d = rows({"+-+-", "-+-+", "+-", "+-", "-+", "-+", "+", "-"});
  auto counts = column_counts(d);
  REQUIRE(counts.size() == 4);
  CHECK(counts[0] == std::pair<int, int>{4, 4});
  CHECK(counts[1] == std::pair<int, int>{7, 7});
  CHECK(counts[2] == std::pair<int, int>{8, 8});
  CHECK(counts[3] == std::pair<int, int>{9, 9});
  CHECK(signed_from_column_counts(counts) == d);
  CHECK_THROWS_AS(signed_from_column_counts({{1, 0}, {0, 1}}), InconsistentCountsError);
}

TEST_CASE("doubling a partition alternates both starts") {
  CHECK(duplicate_signed(Partition({4, 2, 2, 1})) ==
        rows({"+-+-", "-+-+", "+-", "+-", "-+", "-+", "+", "-"}));
  CHECK(duplicate_signed(Partition({3})) == rows({"+-+", "-+-"}));
  CHECK(duplicate_signed(Partition({1})) == rows({"+", "-"}));
  CHECK_THROWS_AS(duplicate_signed(Partition{}), DomainError);
}

TEST_CASE("sign swap flips every row start") {
  SignedYoungDiagram d = rows({"+-+", "-+-", "+", "-"});
  CHECK(swapped_signs(d) == rows({"+-+", "-+-", "+", "-"}));
  CHECK(swapped_signs(rows({"+-", "+-"})) == rows({"-+", "-+"}));
  CHECK(swapped_signs(swapped_signs(d)) == d);
}

TEST_CASE("prefix partitions drop each row's last box") {
  CHECK(sign_prefix_partitions(rows({"+-+-+-", "+-+-+", "+-+-", "-+-+", "-+", "-"})) ==
        std::pair<Partition, Partition>{Partition({3, 2, 2, 1}), Partition({2, 2, 2, 1, 1})});
  CHECK(sign_prefix_partitions(rows({"+", "-"})) ==
        std::pair<Partition, Partition>{Partition{}, Partition{}});
  CHECK(sign_prefix_partitions(rows({"+-", "-+"})) ==
        std::pair<Partition, Partition>{Partition({1}), Partition({1})});
}

TEST_CASE("square-of-nilpotent shape condition") {
  CHECK(square_zero_condition(Partition({2, 2, 1})));
  CHECK_FALSE(square_zero_condition(Partition({3, 1})));
  CHECK(square_zero_condition(Partition({1})));
  CHECK(square_zero_condition(Partition{}));
  CHECK(square_zero_condition(Partition({3, 2})));
  CHECK_FALSE(square_zero_condition(Partition({3, 1, 1})));
}

TEST_CASE("jordan type of the square") {
  CHECK(square_jordan_type(Partition({4})) == Partition({2, 2}));
  CHECK(square_jordan_type(Partition({3})) == Partition({2, 1}));
  CHECK(square_jordan_type(Partition({1})) == Partition({1}));
  CHECK(square_jordan_type(Partition({5, 2})) == Partition({3, 2, 1, 1}));
}

TEST_CASE("signed dominance compares both sign counts") {
  SignedYoungDiagram top = rows({"+-+", "-+-"});
  SignedYoungDiagram bottom = rows({"-+", "-+", "+", "-"});
  CHECK(dominance_signed(bottom, top));
  CHECK_FALSE(dominance_signed(top, bottom));
  CHECK(dominance_signed(top, top));
  SignedYoungDiagram left = rows({"+-", "+-"});
  SignedYoungDiagram right = rows({"-+", "-+"});
  CHECK_FALSE(dominance_signed(left, right));
  CHECK_FALSE(dominance_signed(right, left));
}

}  // namespace
}  // namespace steinberg
