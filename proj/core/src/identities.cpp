#include "hyperseries/identities.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperseries {

bool IdentityReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });
}

const IdentityCheck* IdentityReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

TruncationContext identity_context(const IdentityOptions& options, int max_edge_size) {
  const int t = options.t_max + 1;
  const int magnitude = std::max(options.magnitude_max + std::max(options.connected_j_max - 1, 1), t);
  return TruncationContext::tu(t, magnitude, std::max(max_edge_size, options.connected_j_max));
}

IdentityCheck compare_on_region(std::string name, std::string statement, const Series& lhs,
                                const Series& rhs, const ExactRegion& exact,
                                const ExactRegion& requested) {
  if (!(lhs.context() == rhs.context())) {
    throw std::invalid_argument("compare_on_region: context mismatch in " + name);
  }
  IdentityCheck check;
  check.name = std::move(name);
  check.statement = std::move(statement);
  check.compared = {std::min(exact.t_max, requested.t_max),
                    std::min(exact.magnitude_max, requested.magnitude_max)};
  check.covers_requested = exact.covers(requested);
  check.order_pass.assign(static_cast<std::size_t>(requested.t_max) + 1, true);

  auto in_region = [&](const Monomial& m) {
    return m.t_deg() <= check.compared.t_max && m.magnitude() <= check.compared.magnitude_max;
  };
  const Series diff = sub(lhs, rhs);
  for (const auto& [m, c] : diff) {
    if (!in_region(m)) continue;
    check.order_pass[static_cast<std::size_t>(m.t_deg())] = false;
    if (!check.first_mismatch) {
      const auto coeff_or_zero = [&](const Series& s) {
        const auto it = s.terms().find(m);
        return it == s.terms().end() ? Rational{} : it->second;
      };
      check.first_mismatch = Mismatch{m, coeff_or_zero(lhs), coeff_or_zero(rhs)};
    }
  }
  // Orders beyond the exact region were not verified.
  for (int t = check.compared.t_max + 1; t <= requested.t_max; ++t) {
    check.order_pass[static_cast<std::size_t>(t)] = false;
  }
  check.pass = check.covers_requested && !check.first_mismatch;
  return check;
}

namespace {

// A series together with the region where it is exact. Products keep the
// intersection (the regions are downward closed), derivatives shift the
// region down by what they consume, multiplication by t^k shifts it up.
struct Tracked {
  Series s;
  ExactRegion r;
};

int cap_sub(int bound, int amount) {
  return bound >= kUnboundedMagnitude ? bound : bound - amount;
}

ExactRegion meet(const ExactRegion& a, const ExactRegion& b) {
  return {std::min(a.t_max, b.t_max), std::min(a.magnitude_max, b.magnitude_max)};
}

Tracked operator*(const Tracked& a, const Tracked& b) { return {mul(a.s, b.s), meet(a.r, b.r)}; }
Tracked operator+(const Tracked& a, const Tracked& b) { return {add(a.s, b.s), meet(a.r, b.r)}; }
Tracked operator-(const Tracked& a, const Tracked& b) { return {sub(a.s, b.s), meet(a.r, b.r)}; }
Tracked operator*(const Rational& c, const Tracked& a) { return {scale(a.s, c), a.r}; }

Tracked d_t(const Tracked& a) { return {derivative(a.s, Variable::t()), {a.r.t_max - 1, a.r.magnitude_max}}; }

Tracked d_u(const Tracked& a, int j) {
  return {derivative(a.s, Variable::u(j)), {a.r.t_max, cap_sub(a.r.magnitude_max, j - 1)}};
}

// a * c * t^k, k may be negative only when every term has t_deg >= -k.
Tracked times_t(const Tracked& a, int k) {
  const int t_cap = a.s.context().t_max;
  if (k >= 0) {
    return {mul_monomial(a.s, Monomial::of(Variable::t(), k)), {std::min(a.r.t_max + k, t_cap), a.r.magnitude_max}};
  }
  SeriesBuilder out(a.s.context());
  for (const auto& [m, c] : a.s) {
    if (m.t_deg() < -k) throw std::logic_error("times_t: series not divisible by t");
    out.add_unchecked(m.with(Variable::t(), m.t_deg() + k), c);
  }
  return {std::move(out).build(), {a.r.t_max + k, a.r.magnitude_max}};
}

Tracked u_mon(const TruncationContext& ctx, int j) {
  return {Series::monomial(ctx, Monomial::of(Variable::u(j))), {ctx.t_max, kUnboundedMagnitude}};
}

Tracked exact_everywhere(Series s) {
  return {std::move(s), {kUnboundedMagnitude, kUnboundedMagnitude}};
}

Rational inv_factorial(int j) { return Rational(BigInt(1), factorial(static_cast<unsigned>(j))); }

}  // namespace

IdentityReport verify_identities(const PipelineResult& P, const IdentityOptions& options) {
  const TruncationContext& ctx = P.context;
  const int M = ctx.alphabet.max_edge_size;
  IdentityReport report;
  report.requested = {options.t_max, options.magnitude_max};
  const ExactRegion& want = report.requested;
  auto record = [&](std::string name, std::string statement, const Tracked& lhs, const Tracked& rhs) {
    report.checks.push_back(
        compare_on_region(std::move(name), std::move(statement), lhs.s, rhs.s, meet(lhs.r, rhs.r), want));
  };

  const Tracked C{P.C, {ctx.t_max, ctx.magnitude_max}};

  // Connected hypergraphs rooted at an unlabeled 2-edge.
  {
    const Tracked Ct = d_t(C);
    const Tracked rhs = Rational(1, 2) * times_t(Ct * Ct + d_t(Ct), 2);
    record("connected.u2_edge_split", "dC/du2 = t^2/2! [ (dC/dt)^2 + d2C/dt2 ]", d_u(C, 2), rhs);
  }
  // j ways to peel one vertex off a rooted j-edge.
  for (int j = 3; j <= std::min(options.connected_j_max, M); ++j) {
    const Tracked Ct = d_t(C);
    const Tracked Cprev = d_u(C, j - 1);
    const Tracked rhs = Rational(1, j) * (times_t(Ct * Cprev, 1) + times_t(d_t(Cprev), 1) -
                                          Rational(j - 1) * Cprev);
    record("connected.uj_recurrence[" + std::to_string(j) + "]",
           "dC/du_j = (1/j) [ t dC/dt dC/du_{j-1} + t d2C/dt du_{j-1} - (j-1) dC/du_{j-1} ]",
           d_u(C, j), rhs);
  }

  // Leading terms. Every term of T, R and their derivatives has magnitude at
  // most t_deg; with magnitude_max >= t_max no such term is ever truncated,
  // so exactness depends on the t-order alone.
  const int t_exact = std::min(ctx.t_max, ctx.magnitude_max + 1);
  const int leading_magnitude = ctx.magnitude_max >= ctx.t_max ? kUnboundedMagnitude : ctx.magnitude_max;
  const Tracked T{P.T, {t_exact, leading_magnitude}};
  const Tracked R{P.R, {t_exact, leading_magnitude}};
  const Tracked tTt = times_t(d_t(T), 1);
  const int j_top = std::min(M, options.t_max);

  record("hypertree.u2_square", "dT/du2 = (1/2!) (t dT/dt)^2", d_u(T, 2), Rational(1, 2) * (tTt * tTt));
  for (int j = 3; j <= j_top; ++j) {
    record("hypertree.uj_step[" + std::to_string(j) + "]", "dT/du_j = (1/j) (t dT/dt) dT/du_{j-1}",
           d_u(T, j), Rational(1, j) * (tTt * d_u(T, j - 1)));
  }
  {
    Tracked power = exact_everywhere(Series::one(ctx));
    for (int j = 1; j <= j_top; ++j) {
      power = power * tTt;
      if (j < 2) continue;
      record("hypertree.uj_power[" + std::to_string(j) + "]", "dT/du_j = (1/j!) (t dT/dt)^j", d_u(T, j),
             inv_factorial(j) * power);
    }
  }
  {
    Tracked lhs = exact_everywhere(Series::zero(ctx));
    for (int j = 2; j <= M; ++j) lhs = lhs + Rational(j - 1) * (u_mon(ctx, j) * d_u(T, j));
    // u_j d/du_j restores the magnitude the derivative consumed.
    lhs.r.magnitude_max = T.r.magnitude_max;
    record("hypertree.magnitude_euler", "sum_j (j-1) u_j dT/du_j = t dT/dt - T", lhs, tTt - T);
  }
  {
    Tracked arg = exact_everywhere(Series::zero(ctx));
    Tracked power = exact_everywhere(Series::one(ctx));
    for (int j = 1; j + 1 <= M && j <= ctx.t_max; ++j) {
      power = power * R;
      arg = arg + inv_factorial(j) * (u_mon(ctx, j + 1) * power);
    }
    const Tracked rhs{exp(arg.s), arg.r};
    record("rooted.exp_quotient", "R/t = exp( sum_j u_{j+1} R^j / j! )", times_t(R, -1), rhs);
  }
  record("rooted.fixed_point", "R = t exp( sum_j u_{j+1} R^j / j! ), iterated from R = t", R,
         exact_everywhere(solve_R_fixed_point(ctx)));
  record("hypertree.from_rooted", "T = R - sum_j (j-1) u_j R^j / j!", T, Tracked{T_from_R(P.R), R.r});
  {
    SeriesBuilder lagrange(ctx);
    for (int n = 1; n <= ctx.t_max; ++n) {
      lagrange.add(mul_monomial(lagrange_rooted_polynomial(n, ctx), Monomial::of(Variable::t(), n),
                                Rational(BigInt(1), factorial(static_cast<unsigned>(n)))));
    }
    record("rooted.lagrange", "[t^n/n!] R = sum over partitions of n-1 (Lagrange inversion)", R,
           exact_everywhere(std::move(lagrange).build()));
  }

  // u_j = 1 for all j: single-variable identities, exact to the t-order of T.
  {
    const AllOnes ones = specialize_all_ones(P);
    const ExactRegion line{T.r.t_max, kUnboundedMagnitude};
    const Tracked Tt{ones.T, line};
    const Tracked Rt{ones.R, line};
    const Tracked one = exact_everywhere(Series::one(Rt.s.context()));
    const Tracked eR{exp(Rt.s), line};
    record("all_ones.product_form", "T~ = (e^{R~} - 1)(1 - R~)", Tt, (eR - one) * (one - Rt));
    const Tracked rhs = times_t(Tracked{exp(sub(eR.s, one.s)), line}, 1);
    record("all_ones.rooted_equation", "R~ = t exp(e^{R~} - 1)", Rt, rhs);
  }
  return report;
}

}  // namespace hyperseries
