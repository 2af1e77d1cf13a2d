#include "hyperseries/hypertree.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "hyperseries/series_io.hpp"

namespace hyperseries {

namespace {

const Monomial kT = Monomial::of(Variable::t());

void require_t(const TruncationContext& ctx, const char* op) {
  if (!ctx.alphabet.has_t) throw std::invalid_argument(std::string(op) + ": context has no t");
}

Series u_var(const TruncationContext& ctx, int i) { return Series::monomial(ctx, Monomial::of(Variable::u(i))); }

}  // namespace

Series compute_C(const TruncationContext& ctx, int K) {
  require_t(ctx, "compute_C");
  if (K < ctx.t_max) {
    throw std::invalid_argument("compute_C: K = " + std::to_string(K) + " is below t_max = " +
                                std::to_string(ctx.t_max));
  }
  const int M = ctx.alphabet.max_edge_size;
  SeriesBuilder sum(ctx);
  // Summands with k > t_max vanish under truncation.
  for (int k = 0; k <= ctx.t_max; ++k) {
    SeriesBuilder arg(ctx);
    for (int i = 2; i <= M; ++i) arg.add(Monomial::of(Variable::u(i)), Rational(binomial(k, i)));
    const Series labeled = exp(std::move(arg).build());
    sum.add(mul_monomial(labeled, Monomial::of(Variable::t(), k),
                         Rational(BigInt(1), factorial(static_cast<unsigned>(k)))));
  }
  return log(std::move(sum).build());
}

Series compute_C(const TruncationContext& ctx) { return compute_C(ctx, ctx.t_max); }

Series compute_T(const Series& C) {
  const auto& ctx = C.context();
  if (ctx.magnitude_max < ctx.t_max - 1) {
    throw std::invalid_argument("compute_T: magnitude_max must be at least t_max - 1 in " + ctx.describe());
  }
  return grade_filter(C, [](int t_deg, int magnitude) { return magnitude == t_deg - 1; });
}

Series compute_R(const Series& T) { return euler(T, Variable::t()); }

PipelineResult run_pipeline(const TruncationContext& ctx) {
  Series C = compute_C(ctx);
  Series T = compute_T(C);
  Series R = compute_R(T);
  return {std::move(C), std::move(T), std::move(R), ctx};
}

namespace {

// t exp( sum_{j=1}^{M-1} u_{j+1} R^j / j! )
Series rooted_step(const Series& R) {
  const auto& ctx = R.context();
  SeriesBuilder arg(ctx);
  Series power = Series::one(ctx);
  for (int j = 1; j + 1 <= ctx.alphabet.max_edge_size && j <= ctx.t_max; ++j) {
    power = mul(power, R);
    arg.add(mul(u_var(ctx, j + 1), power), Rational(BigInt(1), factorial(static_cast<unsigned>(j))));
  }
  return mul_monomial(exp(std::move(arg).build()), kT);
}

}  // namespace

Series solve_R_fixed_point(const TruncationContext& ctx) {
  require_t(ctx, "solve_R_fixed_point");
  Series R = Series::monomial(ctx, kT);
  for (int i = 0; i < ctx.t_max; ++i) R = rooted_step(R);
  if (!(rooted_step(R) == R)) {
    throw std::runtime_error("solve_R_fixed_point: no fixed point after " + std::to_string(ctx.t_max) +
                             " iterations");
  }
  return R;
}

Series T_from_R(const Series& R) {
  const auto& ctx = R.context();
  SeriesBuilder T(R);
  Series power = R;
  for (int j = 2; j <= ctx.alphabet.max_edge_size && j <= ctx.t_max; ++j) {
    power = mul(power, R);
    T.add(mul(u_var(ctx, j), power), -Rational(BigInt(j - 1), factorial(static_cast<unsigned>(j))));
  }
  return std::move(T).build();
}

Series lagrange_rooted_polynomial(int n, const TruncationContext& ctx) {
  if (n < 1) throw std::invalid_argument("lagrange_rooted_polynomial: n must be at least 1");
  SeriesBuilder out(ctx);
  for (const auto& lambda : partitions(n - 1)) {
    BigInt coeff = multinomial(lambda.parts);
    Monomial m;
    bool representable = true;
    BigInt denom = 1;
    for (int size = 1; size <= n - 1; ++size) {
      const int a = lambda.multiplicity(size);
      if (a == 0) continue;
      if (size + 1 > kMaxEdgeSize) {
        representable = false;
        break;
      }
      m.set(Variable::u(size + 1), a);
      BigInt np;
      mpz_ui_pow_ui(np.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(a));
      coeff *= np;
      denom *= factorial(static_cast<unsigned>(a));
    }
    if (representable) out.add(m, Rational(coeff, denom));
  }
  return std::move(out).build();
}

HypertreeCount count_by_profile(int n, const EdgeProfile& profile) {
  if (n < 1) throw std::invalid_argument("count_by_profile: n must be at least 1");
  if (profile.magnitude() != n - 1) return {};
  std::vector<int> parts;
  BigInt denom = 1;
  int edges = 0;
  for (int size = kMaxEdgeSize; size >= 2; --size) {
    const int a = profile.count(size);
    for (int j = 0; j < a; ++j) parts.push_back(size - 1);
    denom *= factorial(static_cast<unsigned>(a));
    edges += a;
  }
  BigInt np;
  mpz_ui_pow_ui(np.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(edges));
  const BigInt rooted = Rational(multinomial(parts) * np, denom).to_integer();
  if (rooted % n != 0) {
    throw std::logic_error("count_by_profile: rooted count " + rooted.get_str() + " not divisible by n");
  }
  return {rooted, BigInt(rooted / n)};
}

BigInt rooted_count_by_edges(int n, int k, const StirlingTable& stirling) {
  if (n < 1 || k < 0 || k > n - 1) return 0;
  BigInt np;
  mpz_ui_pow_ui(np.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return np * stirling(n - 1, k);
}

BigInt rooted_count_by_edges(int n, int k) {
  if (n < 1) return 0;
  return rooted_count_by_edges(n, k, StirlingTable(n - 1));
}

BigInt total_rooted(int n) {
  if (n < 1) return 0;
  const StirlingTable s(n - 1);
  BigInt total = 0;
  for (int k = 0; k <= n - 1; ++k) total += rooted_count_by_edges(n, k, s);
  return total;
}

AllOnes specialize_all_ones(const PipelineResult& P) {
  const auto& ctx = P.context;
  if (ctx.magnitude_max < ctx.t_max - 1) {
    throw std::invalid_argument("specialize_all_ones: magnitude_max must be at least t_max - 1");
  }
  const TruncationContext line(ctx.t_max, 0, 0, VarAlphabet{2, true, false});
  auto collapse = [&](const Series& s) {
    SeriesBuilder out(line);
    for (const auto& [m, c] : s) out.add(Monomial::of(Variable::t(), m.t_deg()), c);
    return std::move(out).build();
  };
  return {collapse(P.T), collapse(P.R)};
}

std::vector<TableRow> hypertree_table(int max_n, int max_edge_size) {
  if (max_n < 1) throw std::invalid_argument("hypertree_table: max_n must be at least 1");
  if (max_n > kMaxEdgeSize) {
    throw std::invalid_argument("hypertree_table: max_n exceeds " + std::to_string(kMaxEdgeSize));
  }
  const auto ctx = TruncationContext::tu(max_n, max_n - 1, std::max(max_edge_size, std::max(max_n, 2)));
  const Series T = compute_T(compute_C(ctx));
  std::vector<TableRow> rows;
  for (int n = 1; n <= max_n; ++n) {
    Series poly = egf_coefficient(T, n);
    std::string text = format_u_polynomial(poly);
    rows.push_back({n, std::move(poly), std::move(text)});
  }
  return rows;
}

std::string format_u_polynomial(const Series& polynomial) {
  struct Entry {
    int edges;
    std::vector<int> sizes;  // descending
    Monomial m;
    Rational c;
  };
  std::vector<Entry> entries;
  for (const auto& [m, c] : polynomial) {
    if (m.t_deg() != 0 || m.z_deg() != 0) {
      throw std::invalid_argument("format_u_polynomial: polynomial must be free of t and z");
    }
    Entry e{m.u_total(), {}, m, c};
    for (int i = kMaxEdgeSize; i >= 2; --i) {
      for (int j = 0; j < m.u_deg(i); ++j) e.sizes.push_back(i);
    }
    entries.push_back(std::move(e));
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.edges != b.edges) return a.edges < b.edges;
    return a.sizes > b.sizes;
  });
  if (entries.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const auto& e = entries[k];
    Rational c = e.c;
    if (k == 0) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (c.sign() < 0) c = -c;
    std::string factors;
    for (int i = 2; i <= kMaxEdgeSize; ++i) {
      const int d = e.m.u_deg(i);
      if (d == 0) continue;
      factors += "u" + std::to_string(i);
      if (d > 1) factors += "^" + std::to_string(d);
    }
    if (factors.empty()) {
      out += c.to_short_string();
    } else {
      if (c != Rational(1)) out += c.to_short_string();
      out += factors;
    }
  }
  return out;
}

Series parse_u_polynomial(std::string_view text, const TruncationContext& ctx) {
  const auto fail = [&](const std::string& why) {
    throw std::invalid_argument("parse_u_polynomial: " + why + " in \"" + std::string(text) + "\"");
  };
  std::size_t pos = 0;
  const auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  const auto digits = [&]() -> std::string {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return std::string(text.substr(start, pos - start));
  };

  SeriesBuilder out(ctx);
  skip_space();
  if (text.substr(pos) == "0") return out.build();
  bool first = true;
  while (true) {
    skip_space();
    if (pos == text.size()) {
      if (first) fail("empty polynomial");
      break;
    }
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_space();
    } else if (!first) {
      fail("expected + or -");
    }
    first = false;

    Rational c = 1;
    bool has_coefficient = false;
    if (const std::string num = digits(); !num.empty()) {
      has_coefficient = true;
      std::string den = "1";
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = digits();
        if (den.empty()) fail("missing denominator");
      }
      c = Rational::parse(num + "/" + den);
    }
    Monomial m;
    bool has_factor = false;
    while (pos < text.size() && text[pos] == 'u') {
      ++pos;
      if (pos < text.size() && text[pos] == '_') ++pos;
      const std::string index = digits();
      if (index.empty()) fail("missing variable index");
      const int i = std::stoi(index);
      if (i < 2 || i > ctx.alphabet.max_edge_size) fail("no variable u" + index);
      int d = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        const std::string e = digits();
        if (e.empty()) fail("missing exponent");
        d = std::stoi(e);
      }
      m.set(Variable::u(i), m.u_deg(i) + d);
      has_factor = true;
    }
    if (!has_coefficient && !has_factor) fail("empty term");
    if (!ctx.contains(m)) fail("term " + monomial_to_string(m) + " outside " + ctx.describe());
    out.add(m, sign < 0 ? -c : c);
  }
  return out.build();
}

}  // namespace hyperseries
