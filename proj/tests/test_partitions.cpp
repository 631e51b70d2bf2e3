#include "doctest.h"
#include "generators.hpp"
#include "sato/errors.hpp"
#include "sato/partition.hpp"

using namespace sato;

namespace {

// Column lengths counted cell by cell from the diagram.
Partition conjugate_by_cells(const Partition& p) {
  std::vector<int> cols;
  for (std::size_t i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p.part(i); ++j) {
      if (cols.size() < static_cast<std::size_t>(j)) cols.resize(j, 0);
      ++cols[j - 1];
    }
  return Partition(cols);
}

// codimension straight from the infinite sum, cut where terms vanish
long codimension_by_sum(const MayaSequence& s, std::size_t terms) {
  long total = 0;
  for (std::size_t i = 1; i <= terms; ++i) total += s.at(i) + static_cast<long>(i) - s.d();
  return total;
}

}  // namespace

TEST_CASE("partition construction and parsing") {
  CHECK(Partition::parse("2,1") == Partition{2, 1});
  CHECK(Partition::parse(" 3, 3 ,1") == Partition{3, 3, 1});
  CHECK(Partition::parse("").empty());
  CHECK(Partition{2, 1, 0, 0} == Partition{2, 1});
  CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("2,,1"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("a"), std::invalid_argument);
  CHECK_THROWS_AS(Partition({1, 2}), DomainError);
  CHECK(Partition{4, 2, 1}.str() == "(4,2,1)");
  CHECK(Partition{}.str() == "()");
  CHECK(Partition::column(3) == Partition{1, 1, 1});
  CHECK(Partition{3, 1}.contains(Partition{2, 1}));
  CHECK_FALSE(Partition{3}.contains(Partition{1, 1}));
  CHECK(Partition{2, 2}.fits_in_box(2, 2));
  CHECK_FALSE(Partition{3}.fits_in_box(2, 2));
}

TEST_CASE("conjugate examples") {
  CHECK(conjugate(Partition{2, 1}) == Partition{2, 1});
  CHECK(conjugate(Partition{3}) == Partition{1, 1, 1});
  CHECK(conjugate(Partition{4, 2, 1}) == conjugate_by_cells(Partition{4, 2, 1}));
  CHECK(conjugate(Partition{4, 2, 1}) == Partition{3, 2, 1, 1});
}

TEST_CASE("conjugate is an involution") {
  for (int t = 0; t < 300; ++t) {
    Partition p = gen::partition(30);
    CHECK(conjugate(p) == conjugate_by_cells(p));
    CHECK(conjugate(conjugate(p)) == p);
    CHECK(conjugate(p).size() == p.size());
  }
}

TEST_CASE("partition enumeration") {
  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) CHECK(partitions_of(n).size() == counts[n]);
  auto four = partitions_of(4);
  CHECK(four.front() == Partition{4});
  CHECK(four.back() == Partition{1, 1, 1, 1});
  // C(n, l) partitions fit in an l x (n-l) box
  CHECK(partitions_in_box(2, 2).size() == 6);
  CHECK(partitions_in_box(3, 3).size() == 20);
}

TEST_CASE("characteristic sequence examples") {
  CHECK(partition_from_maya(MayaSequence(0, {1})) == Partition{2});
  CHECK(codimension(MayaSequence(0, {1})) == 2);
  for (long d : {-4L, 0L, 7L}) {
    MayaSequence empty(d, {});
    CHECK(partition_from_maya(empty).empty());
    CHECK(codimension(empty) == 0);
    CHECK(maya_from_partition(Partition{}, d).head().empty());
  }
  CHECK(partition_from_maya(MayaSequence(3, {3, 2, 1})) == Partition{1, 1, 1});
  CHECK(maya_from_partition(Partition{1, 1}, 0).head() == std::vector<long>{0, -1});
  for (int r = 1; r <= 6; ++r) {
    long d = 2;
    MayaSequence s = maya_from_partition(Partition::column(r), d);
    for (int j = 1; j <= r; ++j) CHECK(s.at(j) == 1 - j + d);
    CHECK(codimension(s) == r);
  }
  // standard tail entries are trimmed
  CHECK(MayaSequence(0, {1, -2, -3}) == MayaSequence(0, {1}));
  CHECK_THROWS_AS(MayaSequence(0, {1, 1}), DomainError);
  CHECK_THROWS_AS(MayaSequence(0, {-5}), DomainError);
}

TEST_CASE("characteristic sequence round trip") {
  for (int t = 0; t < 1000; ++t) {
    Partition p = gen::partition(30);
    long d = gen::integer(-10, 10);
    MayaSequence s = maya_from_partition(p, d);
    CHECK(partition_from_maya(s) == p);
    CHECK(codimension(s) == p.size());
    CHECK(codimension_by_sum(s, p.length() + 5) == p.size());
  }
}
