#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hyperseries/combinatorics.hpp"
#include "hyperseries/identities.hpp"
#include "hyperseries/series.hpp"

namespace hyperseries {

// Coefficients c_{mn} of Phi(u, v) = sum c_{mn} u^m v^n (finite support).
class PhiCoefficients {
 public:
  using Key = std::pair<int, int>;  // (m, n)

  PhiCoefficients() = default;

  Rational at(int m, int n) const;
  PhiCoefficients& set(int m, int n, const Rational& c);
  const std::map<Key, Rational>& entries() const { return entries_; }
  // Largest m + n in the support, or -1 for Phi = 0.
  int degree() const;

  // {"entries": [{"m": 1, "n": 0, "num": "1", "den": "1"}, ...]}; num and
  // den may be strings or integers.
  static PhiCoefficients from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  friend bool operator==(const PhiCoefficients&, const PhiCoefficients&) = default;

 private:
  std::map<Key, Rational> entries_;
};

// Seeded Phi with support m + n <= max_degree and c_00 = 0. Each coefficient
// is (x % 5 - 2) / (y % 3 + 1) for consecutive mt19937_64 outputs x, y, drawn
// in order of (m + n, m). Raw engine output keeps the stream identical across
// standard libraries.
PhiCoefficients random_phi(std::uint64_t seed, int max_degree = 4);

// L(t, z) = log( sum_{k=0}^{t_max} t^k/k! exp(k Phi(kz, z)) ) in a context with
// t and z. The summand k carries t^k, so stopping at k = t_max loses
// nothing; this is re-checked at runtime by confirming the k = t_max summand
// only moves the t^{t_max} coefficient. c_00 must be zero: exp(k c_00) is not
// rational, and c_00 only rescales t by e^{c_00}.
Series lhs_series(const PhiCoefficients& phi, const TruncationContext& ctx);

struct PsiFormViolation {
  int n;  // L term is t^{n+1} z^m with m < n
  int m;
  Rational coefficient;
};

struct PsiFormReport {
  // Cells (n, m) with m < n that were checked.
  int cells_checked = 0;
  int n_max = 0;
  std::optional<PsiFormViolation> violation;
  bool pass() const { return !violation; }
};

// Checks that L = t Psi(tz, z), i.e. the coefficient of t^{n+1} z^m vanishes
// whenever m < n (and L has no t^0 term).
PsiFormReport verify_psi_form(const Series& L);

// Psi(u, v) read off L: coefficient of u^a v^b is [t^{a+1} z^{a+b}] L, for
// every a + 1 <= t_max, a + b <= z_max.
std::map<std::pair<int, int>, Rational> extract_psi(const Series& L);

// Coefficients p_{m,i} of P_m(z) = sum_i p_{m,i} z^i.
struct PSeriesFamily {
  std::map<std::pair<int, int>, Rational> p;  // (m, i)
  int j_max = 0;
  Rational at(int m, int i) const;
};

// Chooses P_m so that sum_{m=1}^{j+1} C(k, m) p_{m, j-m+1} equals
// sum_{l=1}^{j+1} k^l c_{l-1, j-l+1} for every j <= j_max, using
// k^l = sum_m S(l, m) m! C(k, m).
PSeriesFamily phi_to_P(const PhiCoefficients& phi, int j_max, const StirlingTable& stirling);
PSeriesFamily phi_to_P(const PhiCoefficients& phi, int j_max);

// Applies t exp(P_1(z)) -> t and z^{m-1} P_m(z) -> u_m to C. Requires a t, z, u
// context with magnitude_max >= z_max and max edge size > z_max so that no
// term reaching z^{z_max} is truncated beforehand.
Series substitute_P(const Series& C, const PSeriesFamily& family);

// phi(u) = Phi(u, 0) written in the variable t.
Series phi_on_axis(const PhiCoefficients& phi, const TruncationContext& ctx);

struct PhiPsiPair {
  Series phi;  // in t
  Series psi;  // psi(y) in t, exact through t^order
  Series w;    // w(y) in t, exact through t^(order+1)
  Series f;    // y = f(w) = w exp(-phi(w) - w phi'(w))
  int order = 0;
};

// w from y = w exp(-phi(w) - w phi'(w)) by reversion, then
// psi(y) = (w - w^2 phi'(w)) / y. phi is re-homed into a context with
// t_max = order + 1; it must have zero constant term.
PhiPsiPair psi_from_phi(const Series& phi, int order);

struct BdbOptions {
  std::uint64_t seed = 42;
  int trials = 20;
  int substitution_trials = 5;
  int t_max = 6;
  int z_max = 6;
  int max_edge_size = 8;
  int phi_degree = 4;
};

// Random-Phi checks (vanishing, substitution equivalence, psi diagonal,
// reversion residual) followed by the hypertree dictionary checks: with
// phi(x) = sum_i u_{i+1} x^i/(i+1)!, w must equal R and y psi(y) must equal T.
std::vector<IdentityCheck> verify_bdb(const BdbOptions& options);

}  // namespace hyperseries
