#include "hyperseries/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "hyperseries/bdb.hpp"
#include "hyperseries/hypertree.hpp"
#include "hyperseries/identities.hpp"
#include "hyperseries/oracle.hpp"
#include "hyperseries/series_io.hpp"

namespace hyperseries::cli {

namespace {

using nlohmann::json;

struct Output {
  bool json = false;
  std::string path;
};

void add_output_options(CLI::App* cmd, Output& o) {
  cmd->add_flag("--json", o.json, "Emit JSON instead of text");
  cmd->add_option("--output,-o", o.path, "Write to this file instead of stdout");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json context_json(const TruncationContext& ctx) {
  return {{"t_max", ctx.t_max},
          {"z_max", ctx.z_max},
          {"magnitude_max", ctx.magnitude_max},
          {"max_edge_size", ctx.alphabet.max_edge_size},
          {"has_t", ctx.alphabet.has_t},
          {"has_z", ctx.alphabet.has_z}};
}

json rational_json(const Rational& r) {
  return {{"num", r.numerator().get_str()}, {"den", r.denominator().get_str()}};
}

std::string profile_text(const EdgeProfile& p) { return p.empty() ? "none" : p.to_string(); }

// ---- count ---------------------------------------------------------------

struct CountArgs {
  int n = 0;
  std::optional<std::string> profile;
  std::optional<int> edges;
  Output out;
};

int cmd_count(const CountArgs& a, std::ostream& os) {
  json j{{"n", a.n}};
  BigInt rooted, unrooted;
  if (a.profile) {
    const EdgeProfile p = EdgeProfile::parse(*a.profile);
    const HypertreeCount c = count_by_profile(a.n, p);
    rooted = c.rooted;
    unrooted = c.unrooted;
    j["profile"] = p.to_string();
  } else {
    rooted = rooted_count_by_edges(a.n, *a.edges);
    if (rooted % a.n != 0) throw std::logic_error("count: rooted count not divisible by n");
    unrooted = rooted / a.n;
    j["k"] = *a.edges;
  }
  j["rooted"] = rooted.get_str();
  j["unrooted"] = unrooted.get_str();
  if (a.out.json) {
    os << j.dump(2) << '\n';
  } else {
    os << "n=" << a.n;
    if (a.profile) {
      os << " profile=" << profile_text(EdgeProfile::parse(*a.profile));
    } else {
      os << " k=" << *a.edges;
    }
    os << " rooted=" << rooted.get_str() << " unrooted=" << unrooted.get_str() << '\n';
  }
  return kSuccess;
}

// ---- table ---------------------------------------------------------------

struct TableArgs {
  int max_n = 6;
  int max_edge = 8;
  Output out;
};

int cmd_table(const TableArgs& a, std::ostream& os) {
  const auto rows = hypertree_table(a.max_n, a.max_edge);
  if (!a.out.json) {
    for (const auto& r : rows) {
      os << "[t^" << r.n << "/" << r.n << "!]T = " << r.text << '\n';
    }
    return kSuccess;
  }
  json out{{"max_n", a.max_n}, {"rows", json::array()}};
  if (!rows.empty()) out["context"] = context_json(rows.front().polynomial.context());
  for (const auto& r : rows) {
    json terms = json::array();
    for (const auto& [m, c] : r.polynomial) {
      terms.push_back({{"profile", EdgeProfile::from_monomial(m).to_string()}, {"coefficient", c.to_short_string()}});
    }
    out["rows"].push_back({{"n", r.n}, {"text", r.text}, {"terms", terms}, {"series", to_json(r.polynomial)}});
  }
  os << out.dump(2) << '\n';
  return kSuccess;
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
  int t_max = 6;
  std::optional<int> magnitude_max;
  int z_max = 6;
  int max_edge = 8;
  int connected_j_max = 5;
  std::uint64_t seed = 42;
  int trials = 20;
  int substitution_trials = 5;
  bool inject_fault = false;
  Output out;
};

json check_json(const IdentityCheck& c) {
  json j{{"name", c.name},
         {"statement", c.statement},
         {"pass", c.pass},
         {"compared", {{"t_max", c.compared.t_max}, {"magnitude_max", c.compared.magnitude_max}}},
         {"covers_requested", c.covers_requested},
         {"order_pass", c.order_pass}};
  if (c.first_mismatch) {
    j["first_mismatch"] = {{"monomial", monomial_to_string(c.first_mismatch->monomial)},
                           {"lhs", c.first_mismatch->lhs.to_string()},
                           {"rhs", c.first_mismatch->rhs.to_string()}};
  }
  return j;
}

void print_check(std::ostream& os, const IdentityCheck& c) {
  os << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.statement << '\n';
  if (c.pass) return;
  if (c.first_mismatch) {
    os << "     first mismatch at " << monomial_to_string(c.first_mismatch->monomial)
       << ": lhs=" << c.first_mismatch->lhs.to_string() << " rhs=" << c.first_mismatch->rhs.to_string() << '\n';
  }
  if (!c.covers_requested) {
    os << "     exact only through t^" << c.compared.t_max << ", magnitude " << c.compared.magnitude_max << '\n';
  }
}

int cmd_verify(const VerifyArgs& a, std::ostream& os) {
  IdentityOptions io;
  io.t_max = a.t_max;
  io.magnitude_max = a.magnitude_max.value_or(a.t_max);
  io.connected_j_max = a.connected_j_max;
  PipelineResult P = run_pipeline(identity_context(io, a.max_edge));
  if (a.inject_fault) {
    // Negate the single-vertex coefficient of T.
    const Monomial m = Monomial::of(Variable::t());
    SeriesBuilder b(P.T);
    b.add(m, -2 * P.T.coeff(m));
    P.T = b.build();
  }
  const IdentityReport report = verify_identities(P, io);
  std::vector<IdentityCheck> checks = report.checks;

  BdbOptions bo;
  bo.seed = a.seed;
  bo.trials = a.trials;
  bo.substitution_trials = a.substitution_trials;
  bo.t_max = a.t_max;
  bo.z_max = a.z_max;
  bo.max_edge_size = a.max_edge;
  for (auto& c : verify_bdb(bo)) checks.push_back(std::move(c));

  std::size_t passed = 0;
  for (const auto& c : checks) passed += c.pass ? 1 : 0;
  const bool ok = passed == checks.size();

  if (a.out.json) {
    json out{{"pass", ok},
             {"requested", {{"t_max", io.t_max}, {"magnitude_max", io.magnitude_max}, {"z_max", a.z_max}}},
             {"context", context_json(P.context)},
             {"seed", a.seed},
             {"trials", a.trials},
             {"checks", json::array()}};
    for (const auto& c : checks) out["checks"].push_back(check_json(c));
    os << out.dump(2) << '\n';
  } else {
    for (const auto& c : checks) print_check(os, c);
    os << passed << "/" << checks.size() << " checks passed\n";
  }
  return ok ? kSuccess : kVerificationFailed;
}

// ---- oracle --------------------------------------------------------------

struct OracleArgs {
  std::optional<int> n;
  std::optional<std::string> profile;
  std::optional<int> magnitude_max;
  std::optional<int> max_edge;
  std::optional<std::string> hypergraph;
  int n_max = 6;
  std::uint64_t budget = 10'000'000;
  Output out;
};

int cmd_oracle(const OracleArgs& a, std::ostream& os) {
  OracleLimits limits;
  limits.n_max = a.n_max;
  limits.budget = a.budget;

  if (a.hypergraph) {
    const Hypergraph h = parse_hypergraph(read_file(*a.hypergraph));
    const EdgeProfile w = weight(h);
    const bool connected = is_connected(h);
    const bool tree = is_hypertree(h);
    if (a.out.json) {
      os << json{{"n", h.vertex_count()},
                 {"edges", h.edge_lists()},
                 {"weight", w.to_string()},
                 {"magnitude", edge_magnitude(h)},
                 {"connected", connected},
                 {"hypertree", tree}}
                .dump(2)
         << '\n';
    } else {
      os << "n=" << h.vertex_count() << " edges=" << h.edges().size() << " weight=" << profile_text(w)
         << " magnitude=" << edge_magnitude(h) << " connected=" << (connected ? "true" : "false")
         << " hypertree=" << (tree ? "true" : "false") << '\n';
    }
    return kSuccess;
  }

  if (!a.n) throw CLI::RequiredError("--n or --hypergraph");
  const int n = *a.n;
  CountTable rows;
  if (a.profile) {
    const EdgeProfile p = EdgeProfile::parse(*a.profile);
    rows[{n, p}] = count_profile(n, p, limits);
  } else {
    rows = count_table(n, a.magnitude_max.value_or(n - 1), a.max_edge.value_or(n), limits);
  }
  if (a.out.json) {
    json out{{"n", n}, {"rows", json::array()}};
    for (const auto& [key, c] : rows) {
      out["rows"].push_back({{"n", key.first},
                             {"profile", key.second.to_string()},
                             {"magnitude", key.second.magnitude()},
                             {"all", c.all.get_str()},
                             {"connected", c.connected.get_str()},
                             {"hypertree", c.hypertree.get_str()}});
    }
    os << out.dump(2) << '\n';
  } else {
    for (const auto& [key, c] : rows) {
      os << "n=" << key.first << " profile=" << profile_text(key.second) << " all=" << c.all.get_str()
         << " connected=" << c.connected.get_str() << " hypertree=" << c.hypertree.get_str() << '\n';
    }
  }
  return kSuccess;
}

// ---- psi -----------------------------------------------------------------

struct PsiArgs {
  std::string phi_path;
  int t_max = 6;
  int z_max = 6;
  std::optional<int> order;
  Output out;
};

int cmd_psi(const PsiArgs& a, std::ostream& os) {
  const PhiCoefficients phi = PhiCoefficients::from_json(json::parse(read_file(a.phi_path)));
  const int order = a.order.value_or(a.t_max - 1);
  if (order < 0) throw std::invalid_argument("psi: --order must be non-negative");
  const Series L = lhs_series(phi, TruncationContext::tz(a.t_max, a.z_max));
  const PsiFormReport form = verify_psi_form(L);
  const auto psi = extract_psi(L);
  const TruncationContext line(order + 1, 0, 0, VarAlphabet{2, true, false});
  const PhiPsiPair pair = psi_from_phi(phi_on_axis(phi, line), order);

  const int diagonal_n = std::min({order, a.z_max, a.t_max - 1});
  std::optional<int> diagonal_mismatch;
  for (int n = 0; n <= diagonal_n; ++n) {
    const Monomial yn = Monomial::of(Variable::t(), n);
    const Monomial cell = Monomial::of(Variable::t(), n + 1).with(Variable::z(), n);
    if (!(pair.psi.coeff(yn) == L.coeff(cell))) {
      diagonal_mismatch = n;
      break;
    }
  }
  const bool ok = form.pass() && !diagonal_mismatch;

  if (a.out.json) {
    json out{{"pass", ok}, {"t_max", a.t_max}, {"z_max", a.z_max}, {"order", order}};
    out["phi"] = phi.to_json()["entries"];
    json psi_j = json::array();
    for (const auto& [ab, c] : psi) {
      json e = rational_json(c);
      e["a"] = ab.first;
      e["b"] = ab.second;
      psi_j.push_back(e);
    }
    out["psi"] = psi_j;
    json axis = json::array();
    for (const auto& [m, c] : pair.psi) {
      json e = rational_json(c);
      e["n"] = m.t_deg();
      axis.push_back(e);
    }
    out["psi_axis"] = axis;
    json vanishing{{"pass", form.pass()}, {"cells_checked", form.cells_checked}, {"n_max", form.n_max}};
    if (form.violation) {
      vanishing["violation"] = {{"n", form.violation->n},
                                {"m", form.violation->m},
                                {"coefficient", form.violation->coefficient.to_string()}};
    }
    out["vanishing"] = vanishing;
    json diag{{"pass", !diagonal_mismatch}, {"n_max", diagonal_n}};
    if (diagonal_mismatch) diag["first_mismatch_n"] = *diagonal_mismatch;
    out["diagonal"] = diag;
    os << out.dump(2) << '\n';
  } else {
    os << "Psi(u, v) coefficients:\n";
    for (const auto& [ab, c] : psi) {
      os << "  u^" << ab.first << " v^" << ab.second << ": " << c.to_short_string() << '\n';
    }
    os << "psi(y) = Psi(y, 0) by reversion:\n";
    for (const auto& [m, c] : pair.psi) os << "  y^" << m.t_deg() << ": " << c.to_short_string() << '\n';
    os << (form.pass() ? "PASS" : "FAIL") << " vanishing below the diagonal (" << form.cells_checked
       << " cells, n <= " << form.n_max << ")\n";
    if (form.violation) {
      os << "     [t^" << form.violation->n + 1 << " z^" << form.violation->m
         << "] L = " << form.violation->coefficient.to_string() << '\n';
    }
    os << (diagonal_mismatch ? "FAIL" : "PASS") << " psi(y) matches the leading diagonal through y^" << diagonal_n
       << '\n';
  }
  return ok ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact generating functions for hypergraphs and hypertrees", "hyperseries"};
  app.require_subcommand(1);

  std::function<int(std::ostream&)> action;
  const Output* output = nullptr;

  CountArgs count;
  auto* c = app.add_subcommand("count", "Rooted and unrooted hypertree counts");
  c->add_option("--n", count.n, "Number of vertices")->required()->check(CLI::Range(1, kMaxEdgeSize));
  auto* profile = c->add_option("--profile", count.profile, "Edge profile, e.g. u2=2,u3=1");
  auto* edges = c->add_option("--edges,-k", count.edges, "Number of edges")->check(CLI::NonNegativeNumber);
  profile->excludes(edges);
  add_output_options(c, count.out);
  c->callback([&] {
    if (!count.profile && !count.edges) throw CLI::RequiredError("--profile or --edges");
    action = [&](std::ostream& os) { return cmd_count(count, os); };
    output = &count.out;
  });

  TableArgs table;
  auto* t = app.add_subcommand("table", "Hypertree polynomials [t^n/n!]T");
  t->add_option("--max-n", table.max_n, "Largest n")->check(CLI::Range(1, kMaxEdgeSize));
  t->add_option("--max-edge,-M", table.max_edge, "Largest edge size")->check(CLI::Range(2, kMaxEdgeSize));
  add_output_options(t, table.out);
  t->callback([&] {
    action = [&](std::ostream& os) { return cmd_table(table, os); };
    output = &table.out;
  });

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check every generating-function identity");
  v->add_option("--t-max", verify.t_max, "Largest t-order")->check(CLI::Range(1, 12));
  v->add_option("--mag-max", verify.magnitude_max, "Largest magnitude (default: t-max)")
      ->check(CLI::Range(1, kMaxEdgeSize * 2));
  v->add_option("--z-max", verify.z_max, "Largest z-order for the Phi checks")->check(CLI::Range(0, 12));
  v->add_option("--max-edge,-M", verify.max_edge, "Largest edge size")->check(CLI::Range(2, kMaxEdgeSize));
  v->add_option("--j-max", verify.connected_j_max, "Largest j in the connected u_j recurrence")
      ->check(CLI::Range(2, kMaxEdgeSize));
  v->add_option("--seed", verify.seed, "First random Phi seed");
  v->add_option("--trials", verify.trials, "Number of random Phi")->check(CLI::NonNegativeNumber);
  v->add_option("--substitution-trials", verify.substitution_trials,
                "How many of the random Phi also get the substitution check")
      ->check(CLI::NonNegativeNumber);
  v->add_flag("--inject-fault", verify.inject_fault)->group("");
  add_output_options(v, verify.out);
  v->callback([&] {
    action = [&](std::ostream& os) { return cmd_verify(verify, os); };
    output = &verify.out;
  });

  OracleArgs oracle;
  auto* o = app.add_subcommand("oracle", "Brute-force hypergraph counts");
  o->add_option("--n", oracle.n, "Number of vertices")->check(CLI::PositiveNumber);
  o->add_option("--profile", oracle.profile, "Single edge profile, e.g. u2=2");
  o->add_option("--mag-max", oracle.magnitude_max, "Largest magnitude when listing profiles (default n-1)")
      ->check(CLI::NonNegativeNumber);
  o->add_option("--max-edge,-M", oracle.max_edge, "Largest edge size when listing profiles (default n)")
      ->check(CLI::Range(2, kMaxEdgeSize));
  o->add_option("--hypergraph", oracle.hypergraph, "Classify the hypergraph in this file");
  o->add_option("--n-max", oracle.n_max, "Largest n the oracle accepts")->check(CLI::Range(1, kMaxVertices));
  o->add_option("--budget", oracle.budget, "Largest number of hypergraphs to generate");
  add_output_options(o, oracle.out);
  o->callback([&] {
    action = [&](std::ostream& os) { return cmd_oracle(oracle, os); };
    output = &oracle.out;
  });

  PsiArgs psi;
  auto* p = app.add_subcommand("psi", "Psi from Phi coefficients");
  p->add_option("--phi", psi.phi_path, "JSON file {\"entries\": [{m, n, num, den}]}")->required();
  p->add_option("--t-max", psi.t_max, "Largest t-order")->check(CLI::Range(1, 12));
  p->add_option("--z-max", psi.z_max, "Largest z-order")->check(CLI::Range(0, 12));
  p->add_option("--order", psi.order, "Order of psi(y) (default t-max - 1)");
  add_output_options(p, psi.out);
  p->callback([&] {
    action = [&](std::ostream& os) { return cmd_psi(psi, os); };
    output = &psi.out;
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    std::ostringstream buffer;
    const int code = action(buffer);
    if (output->path.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(output->path);
      if (!file) throw std::invalid_argument("cannot write " + output->path);
      file << buffer.str();
    }
    return code;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace hyperseries::cli
