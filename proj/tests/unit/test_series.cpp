#include <doctest.h>

#include <random>
#include <stdexcept>

#include "hyperseries/series.hpp"
#include "test_support.hpp"

using namespace hyperseries;
using namespace hyperseries::testing;

namespace {

// Independent route for exp: the defining sum, accumulated until f^k
// vanishes under truncation.
Series exp_by_power_sum(const Series& f) {
  Series sum = Series::one(f.context());
  Series term = Series::one(f.context());
  for (int k = 1; !term.is_zero(); ++k) {
    term = scale(mul(term, f), Rational(BigInt(1), BigInt(k)));
    sum = add(sum, term);
  }
  return sum;
}

Series log1p_by_power_sum(const Series& g) {
  Series sum = Series::zero(g.context());
  Series power = Series::one(g.context());
  for (int k = 1;; ++k) {
    power = mul(power, g);
    if (power.is_zero()) break;
    sum = add(sum, scale(power, Rational(BigInt(k % 2 ? 1 : -1), BigInt(k))));
  }
  return sum;
}

// Seeded series with zero constant term and small rational coefficients.
Series random_series(std::mt19937_64& rng, const TruncationContext& ctx, int terms) {
  SeriesBuilder b(ctx);
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    m.set(t, static_cast<int>(rng() % (ctx.t_max + 1)));
    if (ctx.alphabet.has_z) m.set(z, static_cast<int>(rng() % (ctx.z_max + 1)));
    const int edge = 2 + static_cast<int>(rng() % (ctx.alphabet.max_edge_size - 1));
    m.set(u(edge), static_cast<int>(rng() % 2));
    if (m.is_one()) continue;
    b.add(m, Rational(BigInt(static_cast<long>(rng() % 7) - 3), BigInt(static_cast<long>(rng() % 3) + 1)));
  }
  return b.build();
}

}  // namespace

TEST_CASE("add: coefficient-wise sum") {
  const auto ctx = TruncationContext::tu(3, 3, 4);
  const Series a = poly(ctx, {{1, mono({{t, 1}})}, {1, mono({{u(2), 1}})}});
  const Series b = var(ctx, u(2));
  CHECK(a + b == poly(ctx, {{1, mono({{t, 1}})}, {2, mono({{u(2), 1}})}}));
  CHECK(a + Series::zero(ctx) == a);
  const Series c = var(ctx, u(2)) + var(ctx, u(3));
  CHECK((c + (-c)).is_zero());
  CHECK((c + (-c)).size() == 0);
}

TEST_CASE("context mismatch is rejected") {
  const Series a = Series::one(TruncationContext::tu(2, 2, 4));
  const Series b = Series::one(TruncationContext::tu(3, 2, 4));
  CHECK_THROWS_AS(add(a, b), std::invalid_argument);
  CHECK_THROWS_AS(mul(a, b), std::invalid_argument);
}

TEST_CASE("mul: Cauchy product with truncation") {
  const auto ctx2 = TruncationContext::tu(2, 2, 4);
  CHECK(var(ctx2, t) * var(ctx2, t) == Series::monomial(ctx2, mono({{t, 2}})));
  const auto ctx1 = TruncationContext::tu(1, 2, 4);
  CHECK((var(ctx1, t) * var(ctx1, t)).is_zero());
  const Series one = Series::one(ctx2);
  const Series u2 = var(ctx2, u(2));
  CHECK((one + u2) * (one - u2) == poly(ctx2, {{1, Monomial::one()}, {-1, mono({{u(2), 2}})}}));
}

TEST_CASE("exp examples") {
  const auto ctx = TruncationContext::tu(2, 2, 4);
  CHECK(exp(Series::zero(ctx)) == Series::one(ctx));
  const Series tu2 = Series::monomial(ctx, mono({{t, 1}, {u(2), 1}}));
  CHECK(exp(tu2) == poly(ctx, {{1, Monomial::one()},
                               {1, mono({{t, 1}, {u(2), 1}})},
                               {Rational(BigInt(1), BigInt(2)), mono({{t, 2}, {u(2), 2}})}}));
  CHECK_THROWS_AS(exp(Series::one(ctx)), std::domain_error);
}

TEST_CASE("log examples") {
  const auto ctx = TruncationContext::tu(2, 2, 4);
  CHECK(log(Series::one(ctx)).is_zero());
  const Series one_plus_t = Series::one(ctx) + var(ctx, t);
  CHECK(exp(log(one_plus_t)) == one_plus_t);
  // log(1 + t u2 + t^2 u2^2 / 2) = t u2 to order t^2.
  const Series arg = poly(ctx, {{1, Monomial::one()},
                                {1, mono({{t, 1}, {u(2), 1}})},
                                {Rational(BigInt(1), BigInt(2)), mono({{t, 2}, {u(2), 2}})}});
  CHECK(log(arg) == Series::monomial(ctx, mono({{t, 1}, {u(2), 1}})));
  CHECK_THROWS_AS(log(var(ctx, t)), std::domain_error);
  CHECK_THROWS_AS(log(Series::constant(ctx, 2)), std::domain_error);
}

TEST_CASE("exp and log agree with their defining power sums") {
  std::mt19937_64 rng(7);
  for (const auto& ctx : {TruncationContext::tu(4, 4, 5), TruncationContext::tzu(3, 2, 3, 4),
                          TruncationContext::tz(5, 3)}) {
    for (int trial = 0; trial < 8; ++trial) {
      const Series f = random_series(rng, ctx, 6);
      CHECK(exp(f) == exp_by_power_sum(f));
      CHECK(log(Series::one(ctx) + f) == log1p_by_power_sum(f));
    }
  }
}

TEST_CASE("exp/log round trip") {
  std::mt19937_64 rng(11);
  const auto ctx = TruncationContext::tzu(4, 3, 4, 5);
  const Series f = var(ctx, t) + Series::monomial(ctx, mono({{t, 1}, {u(2), 1}})) +
                   Series::monomial(ctx, mono({{z, 1}, {u(3), 1}}));
  CHECK(log(exp(f)) == f);
  for (int trial = 0; trial < 10; ++trial) {
    const Series g = random_series(rng, ctx, 8);
    CHECK(log(exp(g)) == g);
    CHECK(exp(log(Series::one(ctx) + g)) == Series::one(ctx) + g);
  }
}

TEST_CASE("reciprocal") {
  std::mt19937_64 rng(3);
  const auto ctx = TruncationContext::tu(4, 3, 4);
  for (int trial = 0; trial < 5; ++trial) {
    const Series f = Series::constant(ctx, Rational(BigInt(-3), BigInt(2))) + random_series(rng, ctx, 6);
    CHECK(mul(f, reciprocal(f)) == Series::one(ctx));
  }
  CHECK_THROWS_AS(reciprocal(var(ctx, t)), std::domain_error);
}

TEST_CASE("derivative examples") {
  const auto ctx = TruncationContext::tu(4, 3, 4);
  CHECK(derivative(Series::monomial(ctx, mono({{u(2), 2}})), u(2)) ==
        Series::monomial(ctx, mono({{u(2), 1}}), 2));
  CHECK(derivative(Series::monomial(ctx, mono({{t, 3}}), Rational(BigInt(1), BigInt(6))), t) ==
        Series::monomial(ctx, mono({{t, 2}}), Rational(BigInt(1), BigInt(2))));
  // The 12 u2 u3 term of [t^4/4!] T.
  const Rational c = Rational(12) / Rational(24);
  CHECK(derivative(Series::monomial(ctx, mono({{t, 4}, {u(2), 1}, {u(3), 1}}), c), u(3)) ==
        Series::monomial(ctx, mono({{t, 4}, {u(2), 1}}), c));
  CHECK_THROWS_AS(derivative(Series::one(ctx), z), std::invalid_argument);
  CHECK_THROWS_AS(derivative(Series::one(ctx), u(5)), std::invalid_argument);
}

TEST_CASE("product rule holds when computed with headroom") {
  std::mt19937_64 rng(5);
  const auto small = TruncationContext::tu(3, 3, 4);
  const auto big = TruncationContext::tu(4, 4, 4);
  for (int trial = 0; trial < 6; ++trial) {
    const Series a = random_series(rng, big, 6);
    const Series b = random_series(rng, big, 6);
    for (const auto& v : {t, u(2), u(3)}) {
      const Series lhs = derivative(mul(a, b), v);
      const Series rhs = add(mul(derivative(a, v), b), mul(a, derivative(b, v)));
      CHECK(truncate_to(lhs, small) == truncate_to(rhs, small));
    }
  }
}

TEST_CASE("coeff distinguishes zero from truncated") {
  const auto ctx = TruncationContext::tu(2, 2, 4);
  const Series f = var(ctx, t) + Series::monomial(ctx, mono({{u(2), 2}}), 3);
  CHECK(coeff(f, mono({{u(2), 2}})) == Rational(3));
  CHECK(coeff(f, mono({{u(3), 1}})) == Rational(0));
  CHECK_THROWS_AS(coeff(f, mono({{u(2), 3}})), std::out_of_range);
  CHECK_THROWS_AS(coeff(f, mono({{t, 3}})), std::out_of_range);
  CHECK_THROWS_AS(coeff(f, mono({{u(5), 1}})), std::out_of_range);
}

TEST_CASE("substitute examples") {
  const auto ctx = TruncationContext::tzu(3, 3, 3, 4);
  const Series zt = Series::monomial(ctx, mono({{z, 1}, {t, 1}}));
  CHECK(substitute(Series::monomial(ctx, mono({{u(2), 2}})), u(2), zt) ==
        Series::monomial(ctx, mono({{z, 2}, {t, 2}})));
  const Series f = var(ctx, t) + Series::monomial(ctx, mono({{u(2), 1}, {t, 1}})) + var(ctx, u(3));
  CHECK(substitute(f, u(2), Series::zero(ctx)) == var(ctx, t) + var(ctx, u(3)));
  CHECK_THROWS_AS(substitute(f, u(2), Series::one(ctx)), std::domain_error);
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937_64 rng(13);
  const auto ctx = TruncationContext::tzu(4, 4, 4, 4);
  for (int trial = 0; trial < 6; ++trial) {
    const Series a = random_series(rng, ctx, 5);
    const Series b = random_series(rng, ctx, 5);
    Series g = random_series(rng, ctx, 3);
    g = g - Series::constant(ctx, g.constant_term());
    for (const auto& v : {t, u(2)}) {
      CHECK(substitute(mul(a, b), v, g) == mul(substitute(a, v, g), substitute(b, v, g)));
    }
  }
}

TEST_CASE("grade_filter") {
  const auto ctx = TruncationContext::tu(3, 3, 4);
  const Series f = var(ctx, t) + Series::monomial(ctx, mono({{t, 2}, {u(2), 1}})) + var(ctx, u(3));
  CHECK(grade_filter(f, [](int, int) { return false; }).is_zero());
  CHECK(grade_filter(f, [](int, int) { return true; }) == f);
  CHECK(grade_filter(f, [](int td, int mag) { return mag == td - 1; }) ==
        var(ctx, t) + Series::monomial(ctx, mono({{t, 2}, {u(2), 1}})));
}

TEST_CASE("truncation coherence") {
  std::mt19937_64 rng(17);
  const auto small = TruncationContext::tu(3, 3, 4);
  const auto big = TruncationContext::tu(5, 5, 4);
  for (int trial = 0; trial < 6; ++trial) {
    const Series a = random_series(rng, big, 6);
    const Series b = random_series(rng, big, 6);
    const Series as = truncate_to(a, small);
    const Series bs = truncate_to(b, small);
    CHECK(truncate_to(mul(a, b), small) == mul(as, bs));
    CHECK(truncate_to(exp(a), small) == exp(as));
    CHECK(truncate_to(log(Series::one(big) + b), small) == log(Series::one(small) + bs));
  }
}

namespace {

// f(g(y)) = y checked term by term with plain powers of g.
bool composes_to_identity(const Series& f, const Series& g) {
  SeriesBuilder acc(f.context());
  for (const auto& [m, c] : f) acc.add(mul_monomial(pow(g, static_cast<unsigned>(m.t_deg())), m.with(t, 0), c));
  return acc.build() == Series::monomial(f.context(), mono({{t, 1}}));
}

}  // namespace

TEST_CASE("reversion") {
  const TruncationContext line(6, 0, 0, VarAlphabet{2, true, false});
  const Series y = var(line, t);
  CHECK(reversion(y) == y);

  // y - y^2 inverts to the Catalan generating function.
  const Series catalan = reversion(y - mul(y, y));
  CHECK(composes_to_identity(y - mul(y, y), catalan));
  const int expected[] = {0, 1, 1, 2, 5, 14, 42};
  for (int n = 1; n <= 6; ++n) CHECK(catalan.coeff(mono({{t, n}})) == Rational(expected[n]));
  CHECK(lagrange_reversion(y - mul(y, y)) == catalan);

  // y = w exp(-u2 w): rooted labeled trees, n^{n-1} u2^{n-1} y^n / n!.
  const auto ctx = TruncationContext::tu(6, 6, 2);
  const Series f = mul(var(ctx, t), exp(-Series::monomial(ctx, mono({{t, 1}, {u(2), 1}}))));
  const Series w = reversion(f);
  CHECK(composes_to_identity(f, w));
  CHECK(lagrange_reversion(f) == w);
  for (int n = 1; n <= 6; ++n) {
    BigInt nn;
    mpz_ui_pow_ui(nn.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n - 1));
    CHECK(w.coeff(mono({{t, n}, {u(2), n - 1}})) == Rational(nn, factorial(static_cast<unsigned>(n))));
  }
  CHECK(w.size() == 6);

  CHECK_THROWS_AS(reversion(Series::one(line) + y), std::domain_error);
  CHECK_THROWS_AS(reversion(mul(y, y)), std::domain_error);
}

TEST_CASE("reversion with a non-unit leading coefficient") {
  std::mt19937_64 rng(19);
  const auto ctx = TruncationContext::tu(5, 4, 3);
  for (int trial = 0; trial < 4; ++trial) {
    Series h = random_series(rng, ctx, 6);
    h = h - Series::constant(ctx, h.constant_term()) + Series::constant(ctx, Rational(BigInt(2), BigInt(3)));
    const Series f = mul(var(ctx, t), h);
    const Series g = reversion(f);
    CHECK(composes_to_identity(f, g));
    CHECK(lagrange_reversion(f) == g);
  }
}
