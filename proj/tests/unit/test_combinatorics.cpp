#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "hyperseries/combinatorics.hpp"

using namespace hyperseries;

TEST_CASE("Stirling numbers of the second kind") {
  const StirlingTable s(12);
  CHECK(s(0, 0) == 1);
  CHECK(s(5, 0) == 0);
  CHECK(s(3, 2) == 3);
  CHECK(s(5, 2) == 15);
  CHECK(s(6, 3) == 90);
  CHECK(s(10, 5) == 42525);
  CHECK(s(4, 7) == 0);
  CHECK(s(4, -1) == 0);
  CHECK_THROWS_AS(s(13, 1), std::out_of_range);
  for (int n = 1; n <= 12; ++n) {
    for (int k = 1; k <= n; ++k) CHECK(s(n, k) == k * s(n - 1, k) + s(n - 1, k - 1));
  }
}

TEST_CASE("Stirling rows count set partitions (Bell numbers)") {
  const StirlingTable s(10);
  const long bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
  for (int n = 0; n <= 10; ++n) CHECK(s.bell(n) == bell[n]);
}

TEST_CASE("partitions in reverse-lexicographic order") {
  const auto p4 = partitions(4);
  const std::vector<std::vector<int>> expected = {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  REQUIRE(p4.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(p4[i].parts == expected[i]);
  CHECK(partitions(0).size() == 1);
  CHECK(partitions(0)[0].parts.empty());
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) {
    const auto ps = partitions(n);
    CHECK(static_cast<int>(ps.size()) == counts[n]);
    for (const auto& p : ps) CHECK(p.total() == n);
  }
  const Partition p{{3, 1, 1}};
  CHECK(p.multiplicity(1) == 2);
  CHECK(p.multiplicity(2) == 0);
}

TEST_CASE("multinomial") {
  const std::vector<int> a = {2, 1, 1};
  CHECK(multinomial(a) == 12);
  const std::vector<int> b = {};
  CHECK(multinomial(b) == 1);
  const std::vector<int> c = {5};
  CHECK(multinomial(c) == 1);
}
