#include "hyperseries/series_io.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace hyperseries {

namespace {

std::vector<Variable> alphabet_variables(const VarAlphabet& a) {
  std::vector<Variable> vars;
  if (a.has_t) vars.push_back(Variable::t());
  if (a.has_z) vars.push_back(Variable::z());
  for (int i = 2; i <= a.max_edge_size; ++i) vars.push_back(Variable::u(i));
  return vars;
}

Variable parse_variable(std::string_view name) {
  if (name == "t") return Variable::t();
  if (name == "z") return Variable::z();
  if (name.size() >= 2 && name[0] == 'u') {
    int i = 0;
    for (char ch : name.substr(1)) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
      i = i * 10 + (ch - '0');
      if (i > kMaxEdgeSize) break;
    }
    if (i >= 2 && i <= kMaxEdgeSize) return Variable::u(i);
  }
  throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

int parse_exponent(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("missing exponent");
  int e = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("malformed exponent '" + std::string(text) + "'");
    e = e * 10 + (ch - '0');
    if (e > 65535) throw std::invalid_argument("exponent too large");
  }
  return e;
}

}  // namespace

std::string to_text(const Series& s) {
  const auto vars = alphabet_variables(s.context().alphabet);
  std::ostringstream os;
  for (const auto& [m, c] : s) {
    os << c.to_string() << " *";
    for (const auto& v : vars) os << ' ' << v.name() << '^' << m.degree(v);
    os << '\n';
  }
  return os.str();
}

Series series_from_text(std::string_view text, const TruncationContext& ctx) {
  SeriesBuilder out(ctx);
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      std::istringstream tokens(line);
      std::string coeff_text, star;
      tokens >> coeff_text >> star;
      if (star != "*") throw std::invalid_argument("expected '*' after coefficient");
      const Rational c = Rational::parse(coeff_text);
      Monomial m;
      std::string factor;
      while (tokens >> factor) {
        const auto caret = factor.find('^');
        if (caret == std::string::npos) throw std::invalid_argument("expected name^exponent");
        const Variable v = parse_variable(std::string_view(factor).substr(0, caret));
        if (!ctx.alphabet.contains(v)) throw std::invalid_argument(v.name() + " not in alphabet");
        m.set(v, parse_exponent(std::string_view(factor).substr(caret + 1)));
      }
      if (!ctx.contains(m)) throw std::invalid_argument("monomial outside truncation context");
      out.add_unchecked(m, c);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("series text line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return std::move(out).build();
}

nlohmann::json to_json(const Series& s) {
  const int top = s.context().alphabet.max_edge_size;
  auto arr = nlohmann::json::array();
  for (const auto& [m, c] : s) {
    auto exps = nlohmann::json::array();
    for (int i = 0; i <= top; ++i) exps.push_back(m.exponents()[static_cast<std::size_t>(i)]);
    arr.push_back({{"exps", exps},
                   {"num", c.numerator().get_str()},
                   {"den", c.denominator().get_str()}});
  }
  return arr;
}

Series series_from_json(const nlohmann::json& j, const TruncationContext& ctx) {
  if (!j.is_array()) throw std::invalid_argument("series JSON: expected an array");
  const int top = ctx.alphabet.max_edge_size;
  SeriesBuilder out(ctx);
  for (const auto& term : j) {
    const auto& exps = term.at("exps");
    if (!exps.is_array() || static_cast<int>(exps.size()) != top + 1) {
      throw std::invalid_argument("series JSON: exps must have " + std::to_string(top + 1) + " entries");
    }
    Monomial m;
    for (int i = 0; i <= top; ++i) {
      const int e = exps.at(static_cast<std::size_t>(i)).get<int>();
      const Variable v = i == 0 ? Variable::t() : (i == 1 ? Variable::z() : Variable::u(i));
      if (e != 0 && !ctx.alphabet.contains(v)) {
        throw std::invalid_argument("series JSON: " + v.name() + " not in alphabet");
      }
      m.set(v, e);
    }
    if (!ctx.contains(m)) throw std::invalid_argument("series JSON: monomial outside context");
    const auto text = [](const nlohmann::json& x) {
      return x.is_string() ? x.get<std::string>() : std::to_string(x.get<long long>());
    };
    const Rational c = Rational::parse(text(term.at("num")) + "/" + text(term.at("den")));
    out.add_unchecked(m, c);
  }
  return std::move(out).build();
}

std::string monomial_to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  auto emit = [&](const std::string& name, int d) {
    if (d == 0) return;
    if (!s.empty()) s += ' ';
    s += name;
    if (d != 1) s += "^" + std::to_string(d);
  };
  emit("t", m.t_deg());
  emit("z", m.z_deg());
  for (int i = 2; i <= kMaxEdgeSize; ++i) emit("u" + std::to_string(i), m.u_deg(i));
  return s;
}

}  // namespace hyperseries
