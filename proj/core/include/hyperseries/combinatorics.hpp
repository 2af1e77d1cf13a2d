#pragma once

#include <span>
#include <vector>

#include "hyperseries/rational.hpp"

namespace hyperseries {

// Triangle of Stirling numbers of the second kind S(n, k), 0 <= k <= n <= n_max,
// filled by S(n, k) = k S(n-1, k) + S(n-1, k-1).
class StirlingTable {
 public:
  explicit StirlingTable(int n_max);

  int n_max() const { return n_max_; }
  // Zero for k outside [0, n]; throws std::out_of_range for n outside [0, n_max].
  const BigInt& operator()(int n, int k) const;
  // Row sum, the Bell number B(n).
  BigInt bell(int n) const;

 private:
  int n_max_;
  std::vector<std::vector<BigInt>> rows_;
  BigInt zero_;
};

// Integer partition with parts in non-increasing order.
struct Partition {
  std::vector<int> parts;

  int total() const;
  // Number of parts equal to size.
  int multiplicity(int size) const;
  friend bool operator==(const Partition&, const Partition&) = default;
};

// All partitions of n in reverse-lexicographic order: (n), (n-1, 1), (n-2, 2),
// (n-2, 1, 1), ...; partitions(0) is the single empty partition.
std::vector<Partition> partitions(int n);

// n! / prod(parts_i!) where n = sum(parts).
BigInt multinomial(std::span<const int> parts);

}  // namespace hyperseries
