#include "hyperseries/series.hpp"

#include <stdexcept>
#include <string>

namespace hyperseries {

namespace {

void require_same_context(const Series& a, const Series& b, const char* op) {
  if (!(a.context() == b.context())) {
    throw std::invalid_argument(std::string(op) + ": context mismatch " + a.context().describe() +
                                " vs " + b.context().describe());
  }
}

int total_grade(const Monomial& m) { return m.t_deg() + m.z_deg() + m.magnitude(); }

int max_grade(const TruncationContext& ctx) {
  return ctx.t_max + ctx.z_max + ctx.magnitude_max;
}

struct GradedTerm {
  Monomial mono;
  int t;
  int z;
  int magnitude;
  const Rational* coeff;
};

std::vector<GradedTerm> graded_terms(const Series& s) {
  std::vector<GradedTerm> out;
  out.reserve(s.size());
  for (const auto& [m, c] : s) out.push_back({m, m.t_deg(), m.z_deg(), m.magnitude(), &c});
  return out;
}

}  // namespace

Series Series::constant(const TruncationContext& ctx, const Rational& c) {
  return monomial(ctx, Monomial::one(), c);
}

Series Series::monomial(const TruncationContext& ctx, const Monomial& m, const Rational& c) {
  return SeriesBuilder(ctx).add(m, c).build() ;
}

Series Series::variable(const TruncationContext& ctx, const Variable& v) {
  if (!ctx.alphabet.contains(v)) {
    throw std::invalid_argument("Series: variable " + v.name() + " not in alphabet");
  }
  return monomial(ctx, Monomial::of(v));
}

Rational Series::constant_term() const {
  const auto it = terms_.find(Monomial::one());
  return it == terms_.end() ? Rational{} : it->second;
}

Rational Series::coeff(const Monomial& m) const {
  if (!ctx_.contains(m)) {
    throw std::out_of_range("Series::coeff: monomial outside truncation context " +
                            ctx_.describe());
  }
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational{} : it->second;
}

int Series::max_degree(const Variable& v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree(v));
  return d;
}

SeriesBuilder& SeriesBuilder::add(const Monomial& m, const Rational& c) {
  if (!series_.ctx_.contains(m)) return *this;
  return add_unchecked(m, c);
}

SeriesBuilder& SeriesBuilder::add_unchecked(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return *this;
  auto [it, inserted] = series_.terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) series_.terms_.erase(it);
  }
  return *this;
}

SeriesBuilder& SeriesBuilder::add(const Series& s, const Rational& scale) {
  require_same_context(series_, s, "SeriesBuilder::add");
  if (scale.is_zero()) return *this;
  for (const auto& [m, c] : s) add_unchecked(m, c * scale);
  return *this;
}

Series SeriesBuilder::build() { return std::move(series_); }

Series add(const Series& a, const Series& b) {
  require_same_context(a, b, "add");
  return SeriesBuilder(a).add(b).build();
}

Series sub(const Series& a, const Series& b) {
  require_same_context(a, b, "sub");
  return SeriesBuilder(a).add(b, -1).build();
}

Series scale(const Series& a, const Rational& c) {
  SeriesBuilder out(a.context());
  if (c.is_zero()) return std::move(out).build();
  for (const auto& [m, x] : a) out.add_unchecked(m, x * c);
  return std::move(out).build();
}

Series mul(const Series& a, const Series& b) {
  require_same_context(a, b, "mul");
  const TruncationContext& ctx = a.context();
  const auto lhs = graded_terms(a);
  const auto rhs = graded_terms(b);
  std::map<Monomial, Rational> acc;
  for (const auto& x : lhs) {
    for (const auto& y : rhs) {
      // rhs is ordered by t first, so nothing later fits either.
      if (x.t + y.t > ctx.t_max) break;
      if (x.z + y.z > ctx.z_max || x.magnitude + y.magnitude > ctx.magnitude_max) continue;
      auto [it, inserted] = acc.try_emplace(x.mono * y.mono);
      it->second += *x.coeff * *y.coeff;
    }
  }
  SeriesBuilder out(ctx);
  for (const auto& [m, c] : acc) out.add_unchecked(m, c);
  return std::move(out).build();
}

Series mul_monomial(const Series& a, const Monomial& m, const Rational& c) {
  SeriesBuilder out(a.context());
  if (c.is_zero()) return std::move(out).build();
  for (const auto& [x, coeff] : a) out.add(x * m, coeff * c);
  return std::move(out).build();
}

Series pow(const Series& a, unsigned k) {
  Series result = Series::one(a.context());
  Series base = a;
  while (k != 0) {
    if (k & 1U) result = mul(result, base);
    k >>= 1U;
    if (k != 0) base = mul(base, base);
  }
  return result;
}

// Both exp and log use the grading derivation D m = (t + z + magnitude) m,
// which satisfies D(exp f) = exp(f) D f. Coefficients are then determined
// grade by grade, at the cost of one series product.
Series exp(const Series& f) {
  if (!f.constant_term().is_zero()) {
    throw std::domain_error("exp: argument must have zero constant term");
  }
  const TruncationContext& ctx = f.context();
  const int top = max_grade(ctx);
  std::vector<std::pair<Monomial, Rational>> weighted;  // (a, grade(a) * f_a)
  std::vector<int> weighted_grade;
  for (const auto& [m, c] : f) {
    const int g = total_grade(m);
    if (g == 0) throw std::domain_error("exp: argument has a zero-grade monomial");
    weighted.emplace_back(m, c * g);
    weighted_grade.push_back(g);
  }

  std::vector<std::map<Monomial, Rational>> pending(static_cast<std::size_t>(top) + 1);
  SeriesBuilder out(ctx);
  auto push = [&](const Monomial& m, int g, const Rational& e) {
    for (std::size_t i = 0; i < weighted.size(); ++i) {
      const int g2 = g + weighted_grade[i];
      if (g2 > top) continue;
      const Monomial next = m * weighted[i].first;
      if (!ctx.contains(next)) continue;
      pending[static_cast<std::size_t>(g2)][next] += weighted[i].second * e;
    }
  };

  out.add_unchecked(Monomial::one(), 1);
  push(Monomial::one(), 0, 1);
  for (int g = 1; g <= top; ++g) {
    for (const auto& [m, s] : pending[static_cast<std::size_t>(g)]) {
      if (s.is_zero()) continue;
      const Rational e = s / g;
      out.add_unchecked(m, e);
      push(m, g, e);
    }
    pending[static_cast<std::size_t>(g)].clear();
  }
  return std::move(out).build();
}

Series log(const Series& f) {
  if (f.constant_term() != Rational(1)) {
    throw std::domain_error("log: argument must have constant term 1");
  }
  const TruncationContext& ctx = f.context();
  const int top = max_grade(ctx);
  std::vector<std::pair<Monomial, Rational>> rest;  // f - 1
  std::vector<int> rest_grade;
  std::vector<std::map<Monomial, Rational>> pending(static_cast<std::size_t>(top) + 1);
  for (const auto& [m, c] : f) {
    if (m.is_one()) continue;
    const int g = total_grade(m);
    rest.emplace_back(m, c);
    rest_grade.push_back(g);
    pending[static_cast<std::size_t>(g)][m] += c * g;
  }

  SeriesBuilder out(ctx);
  for (int g = 1; g <= top; ++g) {
    for (const auto& [m, s] : pending[static_cast<std::size_t>(g)]) {
      if (s.is_zero()) continue;
      const Rational l = s / g;
      out.add_unchecked(m, l);
      const Rational weighted = l * g;
      for (std::size_t i = 0; i < rest.size(); ++i) {
        const int g2 = g + rest_grade[i];
        if (g2 > top) continue;
        const Monomial next = m * rest[i].first;
        if (!ctx.contains(next)) continue;
        pending[static_cast<std::size_t>(g2)][next] -= weighted * rest[i].second;
      }
    }
    pending[static_cast<std::size_t>(g)].clear();
  }
  return std::move(out).build();
}

Series reciprocal(const Series& f) {
  const Rational c = f.constant_term();
  if (c.is_zero()) throw std::domain_error("reciprocal: constant term is zero");
  const Rational inv = Rational(1) / c;
  return scale(exp(-log(scale(f, inv))), inv);
}

Series derivative(const Series& f, const Variable& v) {
  if (!f.context().alphabet.contains(v)) {
    throw std::invalid_argument("derivative: variable " + v.name() + " not in alphabet");
  }
  SeriesBuilder out(f.context());
  for (const auto& [m, c] : f) {
    const int d = m.degree(v);
    if (d == 0) continue;
    out.add_unchecked(m.with(v, d - 1), c * d);
  }
  return std::move(out).build();
}

Series euler(const Series& f, const Variable& v) {
  if (!f.context().alphabet.contains(v)) {
    throw std::invalid_argument("euler: variable " + v.name() + " not in alphabet");
  }
  SeriesBuilder out(f.context());
  for (const auto& [m, c] : f) {
    const int d = m.degree(v);
    if (d != 0) out.add_unchecked(m, c * d);
  }
  return std::move(out).build();
}

Series egf_coefficient(const Series& f, int n) {
  if (n < 0) throw std::invalid_argument("egf_coefficient: negative order");
  const Rational scale_by(factorial(static_cast<unsigned>(n)));
  SeriesBuilder out(f.context());
  for (const auto& [m, c] : f) {
    if (m.t_deg() == n) out.add_unchecked(m.with(Variable::t(), 0), c * scale_by);
  }
  return std::move(out).build();
}

Series substitute(const Series& f, const Variable& v, const Series& g) {
  require_same_context(f, g, "substitute");
  if (!f.context().alphabet.contains(v)) {
    throw std::invalid_argument("substitute: variable " + v.name() + " not in alphabet");
  }
  if (!g.constant_term().is_zero()) {
    throw std::domain_error("substitute: replacement must have zero constant term");
  }
  const int top = f.max_degree(v);
  std::vector<Series> powers{Series::one(f.context())};
  for (int d = 1; d <= top; ++d) powers.push_back(mul(powers.back(), g));

  SeriesBuilder out(f.context());
  for (const auto& [m, c] : f) {
    const int d = m.degree(v);
    const Monomial rest = m.with(v, 0);
    for (const auto& [pm, pc] : powers[static_cast<std::size_t>(d)]) out.add(rest * pm, c * pc);
  }
  return std::move(out).build();
}

Series grade_filter(const Series& f, const GradePredicate& keep) {
  SeriesBuilder out(f.context());
  for (const auto& [m, c] : f) {
    if (keep(m.t_deg(), m.magnitude())) out.add_unchecked(m, c);
  }
  return std::move(out).build();
}

Series truncate_to(const Series& f, const TruncationContext& ctx) {
  SeriesBuilder out(ctx);
  for (const auto& [m, c] : f) out.add(m, c);
  return std::move(out).build();
}

namespace {

// Splits f = t * h and validates h(0).
Series reversion_kernel(const Series& f) {
  const TruncationContext& ctx = f.context();
  if (!ctx.alphabet.has_t) throw std::invalid_argument("reversion: context has no t");
  SeriesBuilder h(ctx);
  for (const auto& [m, c] : f) {
    if (m.t_deg() == 0) {
      throw std::domain_error("reversion: series must vanish at t = 0");
    }
    h.add_unchecked(m.with(Variable::t(), m.t_deg() - 1), c);
  }
  Series kernel = std::move(h).build();
  if (kernel.constant_term().is_zero()) {
    throw std::domain_error("reversion: coefficient of t must be a nonzero rational");
  }
  return kernel;
}

}  // namespace

Series reversion(const Series& f) {
  const Series h = reversion_kernel(f);
  const TruncationContext& ctx = f.context();
  const Monomial t = Monomial::of(Variable::t());
  auto step = [&](const Series& g) { return mul_monomial(reciprocal(compose(h, g)), t); };

  // Each step fixes one more order in t.
  Series g = Series::zero(ctx);
  for (int i = 0; i < ctx.t_max; ++i) g = step(g);
  if (!(step(g) == g)) throw std::logic_error("reversion: fixed point did not stabilise");
  return g;
}

Series lagrange_reversion(const Series& f) {
  const Series h = reversion_kernel(f);
  const TruncationContext& ctx = f.context();
  const Rational c = h.constant_term();
  const Series log_h = log(scale(h, Rational(1) / c));
  SeriesBuilder out(ctx);
  Rational c_pow = 1;
  for (int n = 1; n <= ctx.t_max; ++n) {
    c_pow /= c;
    const Series h_neg = exp(scale(log_h, -n));
    for (const auto& [m, x] : h_neg) {
      if (m.t_deg() == n - 1) out.add(m.with(Variable::t(), n), x * c_pow / n);
    }
  }
  return std::move(out).build();
}

}  // namespace hyperseries
