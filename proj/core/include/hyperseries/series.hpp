#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "hyperseries/monomial.hpp"
#include "hyperseries/rational.hpp"

namespace hyperseries {

class SeriesBuilder;

// Truncated multivariate formal power series with exact rational
// coefficients. Values are immutable: every operation returns a new Series
// truncated to the operands' shared context. Zero coefficients are never
// stored, so equality is structural.
class Series {
 public:
  using Terms = std::map<Monomial, Rational>;
  using const_iterator = Terms::const_iterator;

  explicit Series(TruncationContext ctx) : ctx_(std::move(ctx)) {}

  static Series zero(const TruncationContext& ctx) { return Series(ctx); }
  static Series one(const TruncationContext& ctx) { return constant(ctx, 1); }
  static Series constant(const TruncationContext& ctx, const Rational& c);
  // c * m, or zero when m lies outside the context.
  static Series monomial(const TruncationContext& ctx, const Monomial& m, const Rational& c = 1);
  // Throws std::invalid_argument when v is not in the alphabet.
  static Series variable(const TruncationContext& ctx, const Variable& v);

  const TruncationContext& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational constant_term() const;
  // Stored coefficient or zero; throws std::out_of_range if m is outside the
  // context (a truncated-away coefficient is unknown, not zero).
  Rational coeff(const Monomial& m) const;
  // Largest exponent of v among the stored terms.
  int max_degree(const Variable& v) const;

  friend bool operator==(const Series& a, const Series& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }

 private:
  friend class SeriesBuilder;
  TruncationContext ctx_;
  Terms terms_;
};

// Accumulates terms for a Series under construction; terms outside the
// context are discarded on insertion.
class SeriesBuilder {
 public:
  explicit SeriesBuilder(TruncationContext ctx) : series_(std::move(ctx)) {}
  explicit SeriesBuilder(Series start) : series_(std::move(start)) {}

  const TruncationContext& context() const { return series_.ctx_; }
  SeriesBuilder& add(const Monomial& m, const Rational& c);
  // Skips the containment check; caller guarantees m is in the context.
  SeriesBuilder& add_unchecked(const Monomial& m, const Rational& c);
  SeriesBuilder& add(const Series& s, const Rational& scale = 1);
  // Leaves the builder empty.
  Series build();

 private:
  Series series_;
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);
Series scale(const Series& a, const Rational& c);
// a * c * m, truncated.
Series mul_monomial(const Series& a, const Monomial& m, const Rational& c = 1);
Series pow(const Series& a, unsigned k);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator-(const Series& a) { return scale(a, -1); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }
inline Series operator*(const Series& a, const Rational& c) { return scale(a, c); }
inline Series operator*(const Rational& c, const Series& a) { return scale(a, c); }

// Requires a zero constant term. Every other monomial has positive total
// grading t + z + magnitude, so the exponential sum is finite under
// truncation.
Series exp(const Series& f);
// Requires constant term 1.
Series log(const Series& f);
// 1 / f for f with a nonzero constant term.
Series reciprocal(const Series& f);

// Formal partial derivative, truncated to the same context.
Series derivative(const Series& f, const Variable& v);
inline Series d_dvar(const Series& f, const Variable& v) { return derivative(f, v); }
// v * d/dv, which never leaves the context.
Series euler(const Series& f, const Variable& v);

inline Rational coeff(const Series& f, const Monomial& m) { return f.coeff(m); }
// n! [t^n] f as a t-free series in the same context.
Series egf_coefficient(const Series& f, int n);

// Replaces every occurrence of v by g (same context, zero constant term).
Series substitute(const Series& f, const Variable& v, const Series& g);
// f(g) in the variable t.
inline Series compose(const Series& f, const Series& g) {
  return substitute(f, Variable::t(), g);
}

using GradePredicate = std::function<bool(int t_deg, int magnitude)>;
Series grade_filter(const Series& f, const GradePredicate& keep);
// Terms of f that fit in ctx, re-homed into ctx.
Series truncate_to(const Series& f, const TruncationContext& ctx);

// Compositional inverse in t of f = t * h(t), h(0) having nonzero rational
// constant term. Solved by fixed-point iteration g <- t / h(g).
Series reversion(const Series& f);
// Same inverse via Lagrange inversion: [t^n] g = (1/n) [t^(n-1)] h^(-n).
Series lagrange_reversion(const Series& f);

}  // namespace hyperseries
