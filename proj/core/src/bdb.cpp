#include "hyperseries/bdb.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "hyperseries/hypertree.hpp"

namespace hyperseries {

Rational PhiCoefficients::at(int m, int n) const {
  const auto it = entries_.find({m, n});
  return it == entries_.end() ? Rational{} : it->second;
}

PhiCoefficients& PhiCoefficients::set(int m, int n, const Rational& c) {
  if (m < 0 || n < 0) throw std::invalid_argument("PhiCoefficients: negative index");
  if (c.is_zero()) {
    entries_.erase({m, n});
  } else {
    entries_[{m, n}] = c;
  }
  return *this;
}

int PhiCoefficients::degree() const {
  int d = -1;
  for (const auto& [key, c] : entries_) d = std::max(d, key.first + key.second);
  return d;
}

PhiCoefficients PhiCoefficients::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("entries") || !j.at("entries").is_array()) {
    throw std::invalid_argument("Phi JSON: expected {\"entries\": [...]}");
  }
  const auto text = [](const nlohmann::json& x) {
    return x.is_string() ? x.get<std::string>() : std::to_string(x.get<long long>());
  };
  PhiCoefficients phi;
  for (const auto& e : j.at("entries")) {
    const int m = e.at("m").get<int>();
    const int n = e.at("n").get<int>();
    const std::string den = e.contains("den") ? text(e.at("den")) : "1";
    const Rational c = Rational::parse(text(e.at("num")) + "/" + den);
    phi.set(m, n, phi.at(m, n) + c);
  }
  return phi;
}

nlohmann::json PhiCoefficients::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& [key, c] : entries_) {
    arr.push_back({{"m", key.first},
                   {"n", key.second},
                   {"num", c.numerator().get_str()},
                   {"den", c.denominator().get_str()}});
  }
  return {{"entries", arr}};
}

PhiCoefficients random_phi(std::uint64_t seed, int max_degree) {
  std::mt19937_64 engine(seed);
  PhiCoefficients phi;
  for (int d = 1; d <= max_degree; ++d) {
    for (int m = 0; m <= d; ++m) {
      const long num = static_cast<long>(engine() % 5) - 2;
      const long den = static_cast<long>(engine() % 3) + 1;
      phi.set(m, d - m, Rational(BigInt(num), BigInt(den)));
    }
  }
  return phi;
}

namespace {

void require_tz(const TruncationContext& ctx, const char* op) {
  if (!ctx.alphabet.has_t || !ctx.alphabet.has_z) {
    throw std::invalid_argument(std::string(op) + ": context needs both t and z");
  }
}

Series divide_by_t(const Series& s) {
  SeriesBuilder out(s.context());
  for (const auto& [m, c] : s) {
    if (m.t_deg() == 0) throw std::logic_error("divide_by_t: series not divisible by t");
    out.add_unchecked(m.with(Variable::t(), m.t_deg() - 1), c);
  }
  return std::move(out).build();
}

}  // namespace

Series lhs_series(const PhiCoefficients& phi, const TruncationContext& ctx) {
  require_tz(ctx, "lhs_series");
  if (!phi.at(0, 0).is_zero()) {
    throw std::domain_error("lhs_series: c_00 must be zero (it rescales t by e^{c_00}, which is not rational)");
  }
  SeriesBuilder sum(ctx);
  SeriesBuilder partial(ctx);  // without the k = t_max summand
  for (int k = 0; k <= ctx.t_max; ++k) {
    // k Phi(kz, z) = sum c_mn k^{m+1} z^{m+n}
    SeriesBuilder arg(ctx);
    for (const auto& [key, c] : phi.entries()) {
      BigInt power;
      mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(key.first + 1));
      arg.add(Monomial::of(Variable::z(), key.first + key.second), c * Rational(power));
    }
    const Series summand = mul_monomial(exp(std::move(arg).build()), Monomial::of(Variable::t(), k),
                                        Rational(BigInt(1), factorial(static_cast<unsigned>(k))));
    sum.add(summand);
    if (k < ctx.t_max) partial.add(summand);
  }
  Series L = log(std::move(sum).build());
  if (ctx.t_max >= 1) {
    const Series shorter = log(std::move(partial).build());
    for (const auto& [m, c] : sub(L, shorter)) {
      if (m.t_deg() != ctx.t_max) {
        throw std::logic_error("lhs_series: cutting the k-sum at t_max changed a lower t-order");
      }
    }
  }
  return L;
}

PsiFormReport verify_psi_form(const Series& L) {
  const auto& ctx = L.context();
  require_tz(ctx, "verify_psi_form");
  PsiFormReport report;
  report.n_max = ctx.t_max - 1;
  for (int n = 0; n <= report.n_max; ++n) report.cells_checked += std::min(n, ctx.z_max + 1);
  for (const auto& [m, c] : L) {
    const int n = m.t_deg() - 1;
    if (m.z_deg() < n || n < 0) {
      report.violation = PsiFormViolation{n, m.z_deg(), c};
      break;
    }
  }
  return report;
}

std::map<std::pair<int, int>, Rational> extract_psi(const Series& L) {
  std::map<std::pair<int, int>, Rational> psi;
  for (const auto& [m, c] : L) {
    const int a = m.t_deg() - 1;
    const int b = m.z_deg() - a;
    if (a < 0 || b < 0) continue;
    psi[{a, b}] = c;
  }
  return psi;
}

Rational PSeriesFamily::at(int m, int i) const {
  const auto it = p.find({m, i});
  return it == p.end() ? Rational{} : it->second;
}

PSeriesFamily phi_to_P(const PhiCoefficients& phi, int j_max, const StirlingTable& stirling) {
  if (j_max < 0) throw std::invalid_argument("phi_to_P: negative j_max");
  if (stirling.n_max() < j_max + 1) throw std::invalid_argument("phi_to_P: Stirling table too small");
  PSeriesFamily family;
  family.j_max = j_max;
  for (int j = 0; j <= j_max; ++j) {
    for (int m = 1; m <= j + 1; ++m) {
      Rational p;
      const Rational m_factorial(factorial(static_cast<unsigned>(m)));
      for (int l = m; l <= j + 1; ++l) {
        const Rational c = phi.at(l - 1, j - l + 1);
        if (c.is_zero()) continue;
        p += Rational(stirling(l, m)) * m_factorial * c;
      }
      if (!p.is_zero()) family.p[{m, j - m + 1}] = p;
    }
  }
  return family;
}

PSeriesFamily phi_to_P(const PhiCoefficients& phi, int j_max) {
  return phi_to_P(phi, j_max, StirlingTable(j_max + 1));
}

Series substitute_P(const Series& C, const PSeriesFamily& family) {
  const auto& ctx = C.context();
  require_tz(ctx, "substitute_P");
  if (ctx.magnitude_max < ctx.z_max || ctx.alphabet.max_edge_size <= ctx.z_max) {
    throw std::invalid_argument("substitute_P: need magnitude_max >= z_max and max edge size > z_max in " +
                                ctx.describe());
  }
  auto P_times_z = [&](int m, int shift) {
    SeriesBuilder out(ctx);
    for (const auto& [key, c] : family.p) {
      if (key.first == m) out.add(Monomial::of(Variable::z(), key.second + shift), c);
    }
    return std::move(out).build();
  };
  Series s = C;
  for (int m = 2; m <= ctx.alphabet.max_edge_size; ++m) s = substitute(s, Variable::u(m), P_times_z(m, m - 1));
  const Series t_image = mul_monomial(exp(P_times_z(1, 0)), Monomial::of(Variable::t()));
  return substitute(s, Variable::t(), t_image);
}

Series phi_on_axis(const PhiCoefficients& phi, const TruncationContext& ctx) {
  SeriesBuilder out(ctx);
  for (const auto& [key, c] : phi.entries()) {
    if (key.second == 0) out.add(Monomial::of(Variable::t(), key.first), c);
  }
  return std::move(out).build();
}

PhiPsiPair psi_from_phi(const Series& phi_in, int order) {
  if (order < 0) throw std::invalid_argument("psi_from_phi: negative order");
  const auto& base = phi_in.context();
  const TruncationContext ctx(order + 1, base.z_max, base.magnitude_max, base.alphabet);
  Series phi = truncate_to(phi_in, ctx);
  if (!phi.constant_term().is_zero()) {
    throw std::domain_error("psi_from_phi: phi must have zero constant term");
  }
  const Series exponent = -(phi + euler(phi, Variable::t()));
  Series f = mul_monomial(exp(exponent), Monomial::of(Variable::t()));
  Series w = reversion(f);
  const Series phi_prime_at_w = compose(derivative(phi, Variable::t()), w);
  Series psi = divide_by_t(w - mul(mul(w, w), phi_prime_at_w));
  return {std::move(phi), std::move(psi), std::move(w), std::move(f), order};
}

std::vector<IdentityCheck> verify_bdb(const BdbOptions& o) {
  if (o.t_max < 1) throw std::invalid_argument("verify_bdb: t_max must be at least 1");
  std::vector<IdentityCheck> checks;
  const auto tz = TruncationContext::tz(o.t_max, o.z_max);
  const TruncationContext line(o.t_max, 0, 0, VarAlphabet{2, true, false});
  const int order = o.t_max - 1;
  const ExactRegion everywhere{kUnboundedMagnitude, kUnboundedMagnitude};

  std::optional<TruncationContext> tzu;
  std::optional<Series> C;

  for (int trial = 0; trial < o.trials; ++trial) {
    const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(trial);
    const std::string tag = "[seed=" + std::to_string(seed) + "]";
    const PhiCoefficients phi = random_phi(seed, o.phi_degree);
    const Series L = lhs_series(phi, tz);

    {
      const PsiFormReport form = verify_psi_form(L);
      IdentityCheck check;
      check.name = "bdb.vanishing" + tag;
      check.statement = "[t^{n+1} z^m] L = 0 for m < n (" + std::to_string(form.cells_checked) + " cells)";
      check.compared = {o.t_max, 0};
      check.covers_requested = true;
      check.order_pass.assign(static_cast<std::size_t>(o.t_max) + 1, true);
      if (form.violation) {
        const auto& v = *form.violation;
        check.first_mismatch =
            Mismatch{Monomial::of(Variable::t(), v.n + 1).with(Variable::z(), v.m), v.coefficient, 0};
        check.order_pass[static_cast<std::size_t>(v.n + 1)] = false;
      }
      check.pass = form.pass();
      checks.push_back(std::move(check));
    }

    {
      const PhiPsiPair pair = psi_from_phi(phi_on_axis(phi, line), order);
      SeriesBuilder diagonal(pair.psi.context());
      for (int n = 0; n <= std::min(order, o.z_max); ++n) {
        diagonal.add(Monomial::of(Variable::t(), n),
                     L.coeff(Monomial::of(Variable::t(), n + 1).with(Variable::z(), n)));
      }
      checks.push_back(compare_on_region("bdb.psi_diagonal" + tag, "[y^n] psi = [t^{n+1} z^n] L", pair.psi,
                                         std::move(diagonal).build(), {std::min(order, o.z_max), kUnboundedMagnitude},
                                         {order, 0}));
      checks.push_back(compare_on_region("bdb.reversion_residual" + tag, "f(w(y)) = y", compose(pair.f, pair.w),
                                         Series::monomial(pair.w.context(), Monomial::of(Variable::t())),
                                         everywhere, {order + 1, 0}));
    }

    if (trial < o.substitution_trials) {
      if (!tzu) {
        tzu = TruncationContext::tzu(o.t_max, o.z_max, std::max(o.z_max, o.t_max - 1),
                                     std::max(o.max_edge_size, o.z_max + 1));
        C = compute_C(*tzu);
      }
      const Series substituted = substitute_P(*C, phi_to_P(phi, o.z_max));
      checks.push_back(compare_on_region("bdb.substitution" + tag,
                                         "C with t e^{P_1} -> t, z^{m-1} P_m -> u_m equals L", substituted,
                                         lhs_series(phi, *tzu), everywhere, {o.t_max, 0}));
    }
  }

  {
    const auto ctx = TruncationContext::tu(o.t_max, o.t_max, o.max_edge_size);
    SeriesBuilder phi(ctx);
    for (int i = 1; i + 1 <= o.max_edge_size; ++i) {
      phi.add(Monomial::of(Variable::t(), i).with(Variable::u(i + 1), 1),
              Rational(BigInt(1), factorial(static_cast<unsigned>(i + 1))));
    }
    const PhiPsiPair pair = psi_from_phi(std::move(phi).build(), order);
    const Series R = solve_R_fixed_point(ctx);
    checks.push_back(compare_on_region("bdb.hypertree_dictionary.w", "w(t) = R", pair.w, R, everywhere,
                                       {o.t_max, o.t_max}));
    checks.push_back(compare_on_region("bdb.hypertree_dictionary.y_psi", "y psi(y) at y = t equals T",
                                       mul_monomial(pair.psi, Monomial::of(Variable::t())), T_from_R(R),
                                       {order + 1, kUnboundedMagnitude}, {o.t_max, o.t_max}));
  }
  return checks;
}

}  // namespace hyperseries
