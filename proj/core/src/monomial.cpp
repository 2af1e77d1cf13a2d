#include "hyperseries/monomial.hpp"

#include <limits>
#include <stdexcept>

namespace hyperseries {

std::string Variable::name() const {
  switch (kind) {
    case Kind::T: return "t";
    case Kind::Z: return "z";
    case Kind::U: return "u" + std::to_string(edge_size);
  }
  return "?";
}

bool VarAlphabet::contains(const Variable& v) const {
  switch (v.kind) {
    case Variable::Kind::T: return has_t;
    case Variable::Kind::Z: return has_z;
    case Variable::Kind::U: return v.edge_size >= 2 && v.edge_size <= max_edge_size;
  }
  return false;
}

Monomial Monomial::of(const Variable& v, int degree) {
  Monomial m;
  m.set(v, degree);
  return m;
}

int Monomial::magnitude() const {
  int total = 0;
  for (std::size_t i = 2; i < exps_.size(); ++i) total += static_cast<int>(i - 1) * exps_[i];
  return total;
}

int Monomial::u_total() const {
  int total = 0;
  for (std::size_t i = 2; i < exps_.size(); ++i) total += exps_[i];
  return total;
}

int Monomial::max_edge() const {
  for (std::size_t i = exps_.size(); i-- > 2;) {
    if (exps_[i] != 0) return static_cast<int>(i);
  }
  return 0;
}

Monomial& Monomial::set(const Variable& v, int degree) {
  const int slot = v.slot();
  if (slot < 0 || slot >= kSlots || (v.kind == Variable::Kind::U && v.edge_size < 2)) {
    throw std::invalid_argument("Monomial: unknown variable " + v.name());
  }
  if (degree < 0 || degree > std::numeric_limits<Exponent>::max()) {
    throw std::out_of_range("Monomial: exponent out of range");
  }
  exps_[static_cast<std::size_t>(slot)] = static_cast<Exponent>(degree);
  return *this;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) {
    const unsigned sum = unsigned{a.exps_[i]} + unsigned{b.exps_[i]};
    if (sum > std::numeric_limits<Monomial::Exponent>::max()) {
      throw std::overflow_error("Monomial: exponent overflow");
    }
    r.exps_[i] = static_cast<Monomial::Exponent>(sum);
  }
  return r;
}

bool Monomial::divides(const Monomial& b) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > b.exps_[i]) return false;
  }
  return true;
}

Monomial operator/(const Monomial& b, const Monomial& a) {
  if (!a.divides(b)) throw std::invalid_argument("Monomial: inexact division");
  Monomial r;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) {
    r.exps_[i] = static_cast<Monomial::Exponent>(b.exps_[i] - a.exps_[i]);
  }
  return r;
}

TruncationContext::TruncationContext(int t_max_, int z_max_, int magnitude_max_,
                                     VarAlphabet alphabet_)
    : t_max(t_max_), z_max(z_max_), magnitude_max(magnitude_max_), alphabet(alphabet_) {
  if (t_max < 0 || z_max < 0 || magnitude_max < 0) {
    throw std::invalid_argument("TruncationContext: bounds must be non-negative");
  }
  if (alphabet.max_edge_size < 2 || alphabet.max_edge_size > kMaxEdgeSize) {
    throw std::invalid_argument("TruncationContext: max edge size must lie in [2, " +
                                std::to_string(kMaxEdgeSize) + "]");
  }
  if (!alphabet.has_t) t_max = 0;
  if (!alphabet.has_z) z_max = 0;
}

TruncationContext TruncationContext::tu(int t_max, int magnitude_max, int max_edge_size) {
  return {t_max, 0, magnitude_max, VarAlphabet{max_edge_size, true, false}};
}

TruncationContext TruncationContext::tz(int t_max, int z_max) {
  return {t_max, z_max, 0, VarAlphabet{2, true, true}};
}

TruncationContext TruncationContext::tzu(int t_max, int z_max, int magnitude_max,
                                         int max_edge_size) {
  return {t_max, z_max, magnitude_max, VarAlphabet{max_edge_size, true, true}};
}

bool TruncationContext::contains(const Monomial& m) const {
  if (m.t_deg() > t_max || m.z_deg() > z_max) return false;
  const auto& e = m.exponents();
  int magnitude = 0;
  for (int i = 2; i < Monomial::kSlots; ++i) {
    if (e[static_cast<std::size_t>(i)] == 0) continue;
    if (i > alphabet.max_edge_size) return false;
    magnitude += (i - 1) * e[static_cast<std::size_t>(i)];
  }
  return magnitude <= magnitude_max;
}

std::string TruncationContext::describe() const {
  std::string s = "{t_max=" + std::to_string(t_max);
  if (alphabet.has_z) s += ", z_max=" + std::to_string(z_max);
  s += ", magnitude_max=" + std::to_string(magnitude_max) +
       ", M=" + std::to_string(alphabet.max_edge_size) + "}";
  return s;
}

}  // namespace hyperseries
