// hopfcalc: command-line front end for the hopfcore library.
//
// Exit codes: 0 success / property holds, 1 property fails, 2 input error.

#include "hopf/invariants.hpp"
#include "hopf/io.hpp"
#include "hopf/structure.hpp"
#include "hopf/twist.hpp"
#include "hopf/zoo.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

using nlohmann::json;
using namespace hopf;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "text";
  std::string expect_name;
  bool json() const { return format == "json"; }
};

Globals g_opts;

HopfAlgebra load_checked(const std::string& path) {
  HopfAlgebra h = load_algebra(path);
  if (!g_opts.expect_name.empty() && h.name() != g_opts.expect_name)
    throw InputError("algebra " + path + " is named \"" + h.name() + "\", expected \"" + g_opts.expect_name + "\"");
  return h;
}

TwistData load_twist_for(const HopfAlgebra& h, const std::string& path) {
  TwistData t = load_twist(path);
  if (t.dim != h.dim())
    throw InputError("twist dim " + std::to_string(t.dim) + " does not match algebra dim " + std::to_string(h.dim()));
  if (h.conductor() % t.conductor != 0)
    throw InputError("twist conductor " + std::to_string(t.conductor) + " does not divide algebra conductor " +
                     std::to_string(h.conductor()));
  for (auto& c : t.f) c = c.lifted(h.conductor());
  if (t.f_inv)
    for (auto& c : *t.f_inv) c = c.lifted(h.conductor());
  return t;
}

json vec_json(const Vec& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(c.to_string());
  return out;
}

std::string vec_text(const HopfAlgebra& h, const Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    const std::string label = h.labels().empty() ? "b" + std::to_string(i) : h.labels()[i];
    s += "(" + v[i].to_string() + ")*" + label;
  }
  return s.empty() ? "0" : s;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void write_or_print(const std::string& path, const std::string& contents) {
  if (path.empty() || path == "-")
    std::cout << contents;
  else
    write_file(path, contents);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// ---- verify

int cmd_verify(const std::string& path) {
  const HopfAlgebra h = load_checked(path);
  const auto rep = verify_hopf(h);
  if (g_opts.json()) {
    json checks = json::array();
    for (const auto& c : rep.checks) {
      json e{{"name", c.name}, {"passed", c.passed}};
      if (c.witness) e["witness"] = *c.witness;
      checks.push_back(e);
    }
    emit({{"name", h.name()}, {"dim", h.dim()}, {"passed", rep.all_passed()}, {"checks", checks}});
  } else {
    std::cout << h.name() << " (dim " << h.dim() << ")\n";
    for (const auto& c : rep.checks) {
      std::cout << "  " << std::left << std::setw(22) << c.name << (c.passed ? "pass" : "FAIL");
      if (c.witness) std::cout << "  at (" << (*c.witness)[0] << ", " << (*c.witness)[1] << ", " << (*c.witness)[2] << ")";
      std::cout << "\n";
    }
  }
  return rep.all_passed() ? 0 : 1;
}

// ---- invariants / compare

// Tr(S^{2m}) = 0 whenever ord(S^2) does not divide m, over the computed range
bool even_traces_vanish(const InvariantTable& t) {
  for (const auto& [n, v] : t.trace_powers)
    if (n % 2 == 0 && (n / 2) % static_cast<long>(t.ord_s2) != 0 && !v.is_zero()) return false;
  return true;
}

json table_json(const InvariantTable& t) {
  json traces = json::object(), kmn = json::object();
  for (const auto& [n, v] : t.trace_powers) traces[std::to_string(n)] = v.to_string();
  for (const auto& [n, v] : t.kmn) kmn[std::to_string(n)] = v.to_string();
  return {{"dim", t.dim},         {"ord_s", t.ord_s},           {"ord_s2", t.ord_s2}, {"semisimple", t.semisimple},
          {"chevalley", t.chevalley}, {"trace_powers", traces}, {"kmn", kmn},
          {"even_traces_vanish", even_traces_vanish(t)}};
}

void print_table(const std::string& name, const InvariantTable& t) {
  std::cout << name << ": dim " << t.dim << ", ord(S) " << t.ord_s << ", ord(S^2) " << t.ord_s2
            << ", semisimple " << yes_no(t.semisimple) << ", chevalley " << yes_no(t.chevalley) << "\n";
  std::cout << "  n     Tr(S^n)\n";
  for (const auto& [n, v] : t.trace_powers) std::cout << "  " << std::left << std::setw(6) << n << v << "\n";
  std::cout << "  n     nu_n\n";
  for (const auto& [n, v] : t.kmn) std::cout << "  " << std::left << std::setw(6) << n << v << "\n";
  std::cout << "  Tr(S^2m) = 0 when ord(S^2) does not divide m: " << yes_no(even_traces_vanish(t)) << "\n";
}

struct TableRange {
  std::optional<long> trace_min, trace_max;
  unsigned kmn_max = 12;
};

InvariantTable compute_table(const HopfAlgebra& h, const TableRange& r) {
  if (r.trace_min.has_value() != r.trace_max.has_value())
    throw InputError("--trace-min and --trace-max must be given together");
  if (r.trace_min && *r.trace_min > *r.trace_max) throw InputError("--trace-min exceeds --trace-max");
  return r.trace_min ? invariant_table(h, *r.trace_min, *r.trace_max, r.kmn_max) : invariant_table(h, 1, 0, r.kmn_max);
}

int cmd_invariants(const std::string& path, const TableRange& r) {
  const HopfAlgebra h = load_checked(path);
  const auto t = compute_table(h, r);
  if (g_opts.json()) {
    json j = table_json(t);
    j["name"] = h.name();
    emit(j);
  } else {
    print_table(h.name(), t);
  }
  return 0;
}

json diff_json(const std::vector<TableDifference>& diff) {
  json out = json::array();
  for (const auto& d : diff) out.push_back({{"quantity", d.quantity}, {"n", d.n}, {"a", d.a}, {"b", d.b}});
  return out;
}

void print_diff(const std::vector<TableDifference>& diff) {
  if (diff.empty()) {
    std::cout << "tables agree\n";
    return;
  }
  std::cout << "differences:\n";
  for (const auto& d : diff) std::cout << "  " << d.quantity << "[" << d.n << "]: " << d.a << " vs " << d.b << "\n";
}

int cmd_compare(const std::string& pa, const std::string& pb, const TableRange& r) {
  const HopfAlgebra a = load_checked(pa);
  const HopfAlgebra b = load_checked(pb);
  InvariantTable ta = compute_table(a, r);
  // same range on both sides, taken from the first table
  TableRange rb = r;
  if (!rb.trace_min) {
    rb.trace_min = ta.trace_powers.begin()->first;
    rb.trace_max = ta.trace_powers.rbegin()->first;
  }
  InvariantTable tb = compute_table(b, rb);
  const auto diff = diff_tables(ta, tb);
  if (g_opts.json()) {
    emit({{"a", table_json(ta)}, {"b", table_json(tb)}, {"agree", diff.empty()}, {"diff", diff_json(diff)}});
  } else {
    print_table(a.name(), ta);
    print_table(b.name(), tb);
    print_diff(diff);
  }
  return diff.empty() ? 0 : 1;
}

// ---- radical

int cmd_radical(const std::string& path, const std::string& emit_quotient) {
  const HopfAlgebra h = load_checked(path);
  const auto chev = is_chevalley(h);
  const auto& rad = chev.radical;
  if (g_opts.json()) {
    json basis = json::array();
    for (const auto& v : rad.radical_basis) basis.push_back(vec_json(v));
    json j{{"name", h.name()},
           {"radical_dim", rad.radical_basis.size()},
           {"radical_basis", basis},
           {"chevalley", chev.chevalley},
           {"complement", rad.complement}};
    if (!chev.failure.empty()) j["failure"] = chev.failure;
    if (rad.quotient) j["quotient_dim"] = rad.quotient->dim();
    emit(j);
  } else {
    std::cout << h.name() << ": dim J = " << rad.radical_basis.size() << "\n";
    for (const auto& v : rad.radical_basis) std::cout << "  " << vec_text(h, v) << "\n";
    std::cout << "chevalley: " << yes_no(chev.chevalley);
    if (!chev.failure.empty()) std::cout << " (fails: " << chev.failure << ")";
    std::cout << "\n";
    if (rad.quotient) std::cout << "quotient dim " << rad.quotient->dim() << "\n";
  }
  if (!emit_quotient.empty()) {
    if (!rad.quotient) {
      std::cerr << "radical is not a Hopf ideal; no quotient to emit\n";
      return 1;
    }
    save_algebra(emit_quotient, *rad.quotient);
  }
  return 0;
}

// ---- integrals

Mat random_matrix(std::size_t d, int conductor, std::mt19937_64& rng) {
  Mat m(d, d, conductor);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = CycNum(static_cast<long>(rng() % 11) - 5, conductor);
  return m;
}

int cmd_integrals(const std::string& path, unsigned trials, std::uint64_t seed) {
  const HopfAlgebra h = load_checked(path);
  const auto ip = integrals(h);
  std::mt19937_64 rng(seed);
  unsigned passed = 0;
  for (unsigned t = 0; t < trials; ++t) {
    const Mat m = random_matrix(h.dim(), h.conductor(), rng);
    if (radford_trace(h, ip, m) == m.trace()) ++passed;
  }
  const bool identity = integral_identity_check(h, ip.left_integral);
  const bool ok = passed == trials && identity;
  if (g_opts.json()) {
    emit({{"name", h.name()},
          {"left_integral", vec_json(ip.left_integral)},
          {"right_cointegral", vec_json(ip.right_cointegral)},
          {"radford_trials", trials},
          {"radford_passed", passed},
          {"integral_identity", identity},
          {"passed", ok}});
  } else {
    std::cout << "left integral:    " << vec_text(h, ip.left_integral) << "\n";
    std::cout << "right cointegral: ";
    for (std::size_t i = 0; i < h.dim(); ++i) std::cout << (i ? ", " : "") << ip.right_cointegral[i];
    std::cout << "\nRadford trace formula: " << passed << "/" << trials << " random matrices\n";
    std::cout << "integral identity: " << (identity ? "holds" : "FAILS") << "\n";
  }
  return ok ? 0 : 1;
}

// ---- twists

int cmd_twist_check(const std::string& apath, const std::string& tpath) {
  const HopfAlgebra h = load_checked(apath);
  const TwistData td = load_twist_for(h, tpath);
  const auto rep = check_twist(h, td.f, td.f_inv);
  const auto failure = rep.first_failure();
  const bool ok = !failure && rep.twist.has_value();
  if (g_opts.json()) {
    json j{{"invertible", rep.invertible},
           {"inverse_matches", rep.inverse_matches},
           {"counit_left", rep.counit_left},
           {"counit_right", rep.counit_right},
           {"cocycle", rep.cocycle},
           {"beta_routes_agree", rep.beta_routes_agree},
           {"valid", ok}};
    if (failure) j["failure"] = to_string(*failure);
    if (rep.twist) {
      j["beta"] = vec_json(rep.twist->beta);
      j["gamma"] = vec_json(rep.twist->gamma);
    }
    emit(j);
  } else {
    std::cout << "invertible:        " << yes_no(rep.invertible) << "\n";
    if (td.f_inv) std::cout << "F_inv matches:     " << yes_no(rep.inverse_matches) << "\n";
    std::cout << "counit (left):     " << yes_no(rep.counit_left) << "\n";
    std::cout << "counit (right):    " << yes_no(rep.counit_right) << "\n";
    std::cout << "2-cocycle:         " << yes_no(rep.cocycle) << "\n";
    std::cout << "beta routes agree: " << yes_no(rep.beta_routes_agree) << "\n";
    if (rep.twist) {
      std::cout << "beta  = " << vec_text(h, rep.twist->beta) << "\n";
      std::cout << "gamma = " << vec_text(h, rep.twist->gamma) << "\n";
    }
    if (failure) std::cout << "first failure: " << to_string(*failure) << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_twist_apply(const std::string& apath, const std::string& tpath, const std::string& out) {
  const HopfAlgebra h = load_checked(apath);
  const TwistData td = load_twist_for(h, tpath);
  Twist t;
  try {
    t = validate_twist(h, td.f, td.f_inv);
  } catch (const TwistError& e) {
    std::cerr << "invalid twist: " << e.what() << "\n";
    return 1;
  }
  const auto pair = twist_hopf(h, t);
  write_or_print(out, algebra_to_json(pair.twisted));
  return 0;
}

int cmd_twist_report(const std::string& apath, const std::string& tpath, std::uint64_t seed) {
  const HopfAlgebra h = load_checked(apath);
  const TwistData td = load_twist_for(h, tpath);
  Twist t;
  try {
    t = validate_twist(h, td.f, td.f_inv);
  } catch (const TwistError& e) {
    std::cerr << "invalid twist: " << e.what() << "\n";
    return 1;
  }
  const auto pair = twist_hopf(h, t);
  const auto chev = is_chevalley(h);
  const auto inv = invariance_report(h, t);
  const auto beta = beta_fixed_check(h, t, chev);
  const unsigned long n = inv.base.ord_s2;
  const Vec gamma_n = gamma_power(h, t, static_cast<unsigned>(n));
  const bool grouplike = grouplike_check(pair.twisted, gamma_n);
  const bool dgamma = gamma_coproduct_check(h, t);
  const auto reg = regular_object_test(h, t, seed);
  const bool unity = gamma_unity_check(h, t, n).holds;

  // The gauge-invariance statements only apply to Chevalley algebras.
  bool ok = beta.holds() && grouplike && dgamma && reg.sigma_power_identity;
  if (chev.chevalley) ok = ok && inv.diff.empty() && reg.witness.has_value() && unity;

  if (g_opts.json()) {
    json j{{"base", h.name()},
           {"chevalley", chev.chevalley},
           {"semisimple", beta.semisimple},
           {"diff", diff_json(inv.diff)},
           {"antipode_fixes_beta", beta.antipode_fixes_beta},
           {"beta_mod_radical", beta.beta_mod_radical},
           {"beta_check", beta.holds()},
           {"gamma_power_grouplike", grouplike},
           {"gamma_coproduct", dgamma},
           {"regular_object", to_string(reg.status)},
           {"regular_object_trials", reg.trials},
           {"fixed_space_dim", reg.fixed_space_dim},
           {"sigma_power_identity", reg.sigma_power_identity},
           {"gamma_unity", unity},
           {"passed", ok}};
    if (reg.witness) j["witness"] = vec_json(*reg.witness);
    emit(j);
  } else {
    std::cout << h.name() << " twisted by F (chevalley " << yes_no(chev.chevalley) << ")\n";
    print_diff(inv.diff);
    std::cout << "S(beta) = beta:            " << yes_no(beta.antipode_fixes_beta) << "\n";
    std::cout << "S(beta) - beta in J:       " << yes_no(beta.beta_mod_radical) << "\n";
    std::cout << "gamma^(" << n << ") grouplike in H^F: " << yes_no(grouplike) << "\n";
    std::cout << "Delta(gamma) identity:     " << yes_no(dgamma) << "\n";
    std::cout << "regular object:            " << to_string(reg.status) << " (" << reg.trials << " trials, fixed space dim "
              << reg.fixed_space_dim << ")\n";
    if (reg.witness) std::cout << "  witness t = " << vec_text(h, *reg.witness) << "\n";
    std::cout << "sigma^N = r(gamma^(N))^-1: " << yes_no(reg.sigma_power_identity) << "\n";
    std::cout << "gamma^(" << n << ") = 1:             " << yes_no(unity) << "\n";
  }
  return ok ? 0 : 1;
}

// ---- zoo

struct GroupSource {
  std::string cayley;
  std::size_t cyclic = 0;
  std::size_t symmetric = 0;
  int conductor = 0;

  GroupPresentation build() const {
    const int given = (cayley.empty() ? 0 : 1) + (cyclic ? 1 : 0) + (symmetric ? 1 : 0);
    if (given != 1) throw InputError("exactly one of --cayley, --cyclic, --symmetric is required");
    if (!cayley.empty()) return group_from_json(read_file(cayley));
    if (cyclic) return GroupPresentation::cyclic(cyclic);
    return GroupPresentation::symmetric(symmetric);
  }
};

void add_group_options(CLI::App* sub, GroupSource& src) {
  sub->add_option("--cayley", src.cayley, "JSON file with a Cayley table");
  sub->add_option("--cyclic", src.cyclic, "cyclic group of this order");
  sub->add_option("--symmetric", src.symmetric, "symmetric group S_n");
  sub->add_option("--conductor", src.conductor, "cyclotomic conductor (default: group exponent)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with finite-dimensional Hopf algebras over cyclotomic fields"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", g_opts.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--expect-name", g_opts.expect_name, "fail unless loaded algebras carry this name");

  std::function<int()> action;

  std::string alg, alg2, twist_path, out;
  TableRange range;
  auto add_range = [&](CLI::App* sub) {
    sub->add_option("--trace-min", range.trace_min);
    sub->add_option("--trace-max", range.trace_max);
    sub->add_option("--kmn-max", range.kmn_max)->check(CLI::Range(0u, 64u));
  };

  auto* verify = app.add_subcommand("verify", "check the Hopf algebra axioms");
  verify->add_option("algebra", alg)->required();
  verify->callback([&] { action = [&] { return cmd_verify(alg); }; });

  auto* invariants = app.add_subcommand("invariants", "traces of antipode powers and KMN indicators");
  invariants->add_option("algebra", alg)->required();
  add_range(invariants);
  invariants->callback([&] { action = [&] { return cmd_invariants(alg, range); }; });

  auto* compare = app.add_subcommand("compare", "compare the invariant tables of two algebras");
  compare->add_option("a", alg)->required();
  compare->add_option("b", alg2)->required();
  add_range(compare);
  compare->callback([&] { action = [&] { return cmd_compare(alg, alg2, range); }; });

  std::string emit_quotient;
  auto* radical = app.add_subcommand("radical", "Jacobson radical and Chevalley property");
  radical->add_option("algebra", alg)->required();
  radical->add_option("--emit-quotient", emit_quotient, "write H/J here when J is a Hopf ideal");
  radical->callback([&] { action = [&] { return cmd_radical(alg, emit_quotient); }; });

  unsigned trials = 100;
  std::uint64_t seed = 0;
  auto* integrals_cmd = app.add_subcommand("integrals", "integral, cointegral and the Radford trace formula");
  integrals_cmd->add_option("algebra", alg)->required();
  integrals_cmd->add_option("--trials", trials);
  integrals_cmd->add_option("--seed", seed);
  integrals_cmd->callback([&] { action = [&] { return cmd_integrals(alg, trials, seed); }; });

  auto* twist = app.add_subcommand("twist", "Drinfeld twists");
  twist->require_subcommand(1);
  auto* tcheck = twist->add_subcommand("check", "validate a twist");
  tcheck->add_option("algebra", alg)->required();
  tcheck->add_option("twist", twist_path)->required();
  tcheck->callback([&] { action = [&] { return cmd_twist_check(alg, twist_path); }; });
  auto* tapply = twist->add_subcommand("apply", "write the twisted algebra");
  tapply->add_option("algebra", alg)->required();
  tapply->add_option("twist", twist_path)->required();
  tapply->add_option("-o,--output", out);
  tapply->callback([&] { action = [&] { return cmd_twist_apply(alg, twist_path, out); }; });
  auto* treport = twist->add_subcommand("report", "gauge invariance and gamma checks");
  treport->add_option("algebra", alg)->required();
  treport->add_option("twist", twist_path)->required();
  treport->add_option("--seed", seed);
  treport->callback([&] { action = [&] { return cmd_twist_report(alg, twist_path, seed); }; });

  auto* zoo = app.add_subcommand("zoo", "construct standard examples");
  zoo->require_subcommand(1);
  zoo->add_option("-o,--output", out, "output file (default stdout)");
  zoo->fallthrough();

  GroupSource group_src;
  auto* zgroup = zoo->add_subcommand("group", "group algebra kG");
  add_group_options(zgroup, group_src);
  zgroup->callback([&] {
    action = [&] {
      write_or_print(out, algebra_to_json(group_algebra(group_src.build(), group_src.conductor)));
      return 0;
    };
  });
  auto* zdual = zoo->add_subcommand("dual-group", "function algebra k^G");
  add_group_options(zdual, group_src);
  zdual->callback([&] {
    action = [&] {
      write_or_print(out, algebra_to_json(dual_group_algebra(group_src.build(), group_src.conductor)));
      return 0;
    };
  });

  auto* zsweedler = zoo->add_subcommand("sweedler", "Sweedler's 4-dimensional algebra");
  zsweedler->callback([&] {
    action = [&] {
      write_or_print(out, algebra_to_json(sweedler()));
      return 0;
    };
  });

  unsigned taft_n = 3, taft_d = 2;
  long zeta_exp = 1;
  auto* ztaft = zoo->add_subcommand("taft", "Taft algebra of dimension n^2");
  ztaft->add_option("--n", taft_n)->check(CLI::Range(2u, 12u));
  ztaft->add_option("--zeta-exp", zeta_exp);
  ztaft->callback([&] {
    action = [&] {
      write_or_print(out, algebra_to_json(taft(taft_n, zeta_exp)));
      return 0;
    };
  });
  auto* zgtaft = zoo->add_subcommand("generalized-taft", "generalized Taft algebra H_{n,d}");
  zgtaft->add_option("--n", taft_n)->check(CLI::Range(1u, 12u));
  zgtaft->add_option("--d", taft_d)->check(CLI::Range(2u, 12u));
  zgtaft->add_option("--zeta-exp", zeta_exp);
  zgtaft->callback([&] {
    action = [&] {
      write_or_print(out, algebra_to_json(generalized_taft(taft_n, taft_d, zeta_exp)));
      return 0;
    };
  });

  unsigned piv_n = 1;
  auto* zpiv = zoo->add_subcommand("pivotalize", "smash product with Z/N acting by S^2");
  zpiv->add_option("algebra", alg)->required();
  zpiv->add_option("--n", piv_n)->required()->check(CLI::Range(1u, 64u));
  zpiv->callback([&] {
    action = [&] {
      write_or_print(out, algebra_to_json(pivotalization(load_checked(alg), piv_n)));
      return 0;
    };
  });

  std::size_t gen = 0;
  unsigned order = 0;
  long c = 1;
  auto* zbichar = zoo->add_subcommand("bichar-twist", "bicharacter twist on a cyclic grouplike subgroup");
  zbichar->add_option("algebra", alg)->required();
  zbichar->add_option("--gen", gen, "basis index of the grouplike generator")->required();
  zbichar->add_option("--order", order)->required()->check(CLI::Range(1u, 1000u));
  zbichar->add_option("--c", c);
  zbichar->callback([&] {
    action = [&] {
      const HopfAlgebra h = load_checked(alg);
      if (gen >= h.dim()) throw InputError("--gen is out of range");
      TwistData t;
      t.conductor = h.conductor();
      t.dim = h.dim();
      t.f = bicharacter_twist(h, h.basis(gen), order, c);
      write_or_print(out, twist_to_json(t));
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
