#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace hyperseries {

// Largest supported edge size; u_2 ... u_kMaxEdgeSize.
inline constexpr int kMaxEdgeSize = 16;

// A variable of the alphabet {t, z, u_2, ..., u_M}.
struct Variable {
  enum class Kind : std::uint8_t { T, Z, U };
  Kind kind = Kind::T;
  int edge_size = 0;  // only meaningful for Kind::U

  static constexpr Variable t() { return {Kind::T, 0}; }
  static constexpr Variable z() { return {Kind::Z, 0}; }
  static constexpr Variable u(int i) { return {Kind::U, i}; }

  // Slot in Monomial's exponent array: t -> 0, z -> 1, u_i -> i.
  constexpr int slot() const {
    return kind == Kind::T ? 0 : (kind == Kind::Z ? 1 : edge_size);
  }
  // Contribution of one unit of this variable to the magnitude grading.
  constexpr int magnitude_weight() const { return kind == Kind::U ? edge_size - 1 : 0; }

  std::string name() const;

  friend constexpr bool operator==(const Variable&, const Variable&) = default;
};

struct VarAlphabet {
  int max_edge_size = 8;
  bool has_t = true;
  bool has_z = false;

  bool contains(const Variable& v) const;
  friend bool operator==(const VarAlphabet&, const VarAlphabet&) = default;
};

// Exponent vector over {t, z, u_2, ..., u_kMaxEdgeSize}. Ordering is
// lexicographic on (t, z, u_2, u_3, ...).
class Monomial {
 public:
  using Exponent = std::uint16_t;
  static constexpr int kSlots = kMaxEdgeSize + 1;

  Monomial() = default;

  static Monomial one() { return {}; }
  static Monomial of(const Variable& v, int degree = 1);

  int t_deg() const { return exps_[0]; }
  int z_deg() const { return exps_[1]; }
  int u_deg(int edge_size) const { return exps_[static_cast<std::size_t>(edge_size)]; }
  int degree(const Variable& v) const { return exps_[static_cast<std::size_t>(v.slot())]; }

  // Sum over i >= 2 of (i - 1) * deg(u_i).
  int magnitude() const;
  // Total number of u-factors, i.e. the edge count of the profile.
  int u_total() const;
  // Largest i with deg(u_i) > 0, or 0 for a u-free monomial.
  int max_edge() const;
  bool is_one() const { return *this == Monomial{}; }

  Monomial& set(const Variable& v, int degree);
  Monomial with(const Variable& v, int degree) const {
    Monomial m = *this;
    m.set(v, degree);
    return m;
  }

  // Componentwise sum. Throws std::overflow_error past the exponent range.
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // True when b / a is a monomial.
  bool divides(const Monomial& b) const;
  // b / a, requires divides.
  friend Monomial operator/(const Monomial& b, const Monomial& a);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  const std::array<Exponent, kSlots>& exponents() const { return exps_; }

 private:
  std::array<Exponent, kSlots> exps_{};
};

// Degree bounds under which all Series arithmetic is closed.
struct TruncationContext {
  int t_max = 0;
  int z_max = 0;
  int magnitude_max = 0;
  VarAlphabet alphabet{};

  // Validates bounds and alphabet; throws std::invalid_argument.
  TruncationContext(int t_max, int z_max, int magnitude_max, VarAlphabet alphabet);
  TruncationContext() = default;

  // Context over t and u_2..u_M (no z).
  static TruncationContext tu(int t_max, int magnitude_max, int max_edge_size);
  // Context over t and z only (u variables never appear).
  static TruncationContext tz(int t_max, int z_max);
  // Context over t, z and u_2..u_M.
  static TruncationContext tzu(int t_max, int z_max, int magnitude_max, int max_edge_size);

  bool contains(const Monomial& m) const;

  std::string describe() const;

  friend bool operator==(const TruncationContext&, const TruncationContext&) = default;
};

}  // namespace hyperseries
