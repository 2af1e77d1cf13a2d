#include "hyperseries/combinatorics.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace hyperseries {

StirlingTable::StirlingTable(int n_max) : n_max_(n_max) {
  if (n_max < 0) throw std::invalid_argument("StirlingTable: negative size");
  rows_.resize(static_cast<std::size_t>(n_max) + 1);
  rows_[0] = {BigInt(1)};
  for (int n = 1; n <= n_max; ++n) {
    auto& row = rows_[static_cast<std::size_t>(n)];
    const auto& prev = rows_[static_cast<std::size_t>(n - 1)];
    row.assign(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (int k = 1; k <= n; ++k) {
      const BigInt left = k <= n - 1 ? prev[static_cast<std::size_t>(k)] : BigInt(0);
      row[static_cast<std::size_t>(k)] = k * left + prev[static_cast<std::size_t>(k - 1)];
    }
  }
}

const BigInt& StirlingTable::operator()(int n, int k) const {
  if (n < 0 || n > n_max_) {
    throw std::out_of_range("StirlingTable: row " + std::to_string(n) + " outside [0, " +
                            std::to_string(n_max_) + "]");
  }
  if (k < 0 || k > n) return zero_;
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt StirlingTable::bell(int n) const {
  BigInt sum = 0;
  for (int k = 0; k <= n; ++k) sum += (*this)(n, k);
  return sum;
}

int Partition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Partition::multiplicity(int size) const {
  int count = 0;
  for (int p : parts) count += p == size ? 1 : 0;
  return count;
}

std::vector<Partition> partitions(int n) {
  if (n < 0) throw std::invalid_argument("partitions: negative argument");
  std::vector<Partition> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> a{n};
  while (true) {
    out.push_back({a});
    // Find the rightmost part greater than 1, decrement it and redistribute the
    // remainder greedily with parts no larger than the decremented value.
    int remainder = 0;
    while (!a.empty() && a.back() == 1) {
      remainder += 1;
      a.pop_back();
    }
    if (a.empty()) break;
    const int v = --a.back();
    remainder += 1;
    while (remainder > v) {
      a.push_back(v);
      remainder -= v;
    }
    if (remainder > 0) a.push_back(remainder);
  }
  return out;
}

BigInt multinomial(std::span<const int> parts) {
  int n = 0;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: negative part");
    n += p;
  }
  BigInt r = factorial(static_cast<unsigned>(n));
  for (int p : parts) r /= factorial(static_cast<unsigned>(p));
  return r;
}

}  // namespace hyperseries
