#pragma once

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "cobweb/cobweb.hpp"
#include "cobweb/json_io.hpp"

namespace cobweb::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Exit status, standard output payload (JSON, CSV or DOT), and diagnostics.
struct CommandResult {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

namespace detail {

inline std::string dump(const nlohmann::ordered_json& j) { return j.dump() + "\n"; }

struct Options {
  std::string spec;
  std::string format = "json";
  std::uint64_t upto = 0, n = 0, k = 0, rows = 0, levels = 0, from_level = 0, to_level = 0, root_level = 0,
                m = 0, cap = kDefaultCopyCap, samples = 0, seed = 0, order = kDefaultSeriesOrder, q = 0;
  bool admissible = false, gcd_morphic = false, oracle = false;
  std::string mode = "product", op, a, b;
};

inline CommandResult payload(const nlohmann::ordered_json& j, bool ok = true) {
  return CommandResult{ok ? kOk : kCheckFailed, dump(j), {}};
}

inline std::string levels_help() { return "highest level L to build (levels 0..L)"; }

}  // namespace detail

/// Runs one command line (program name excluded). Deterministic for identical
/// arguments.
inline CommandResult run(const std::vector<std::string>& args) {
  detail::Options o;
  CLI::App app{"Cobweb posets, F-nomials, incidence matrices and prefab enumerators (exact arithmetic)", "cobweb"};
  app.require_subcommand(1);

  auto* seq = app.add_subcommand("seq", "F-sequence checks");
  seq->require_subcommand(1);
  auto* seq_check = seq->add_subcommand("check", "Admissibility / GCD-morphism evidence up to a bound");
  seq_check->add_option("--spec", o.spec, "sequence spec")->required();
  seq_check->add_option("--upto", o.upto, "bound N")->required();
  seq_check->add_flag("--admissible", o.admissible, "check F-nomial integrality (default when no flag given)");
  seq_check->add_flag("--gcd-morphic", o.gcd_morphic, "check gcd(F_n,F_m) = F_gcd(n,m)");

  auto* fnom = app.add_subcommand("fnomial", "F-nomial coefficient (n over k)_F");
  fnom->require_subcommand(0, 1);
  fnom->add_option("--spec", o.spec, "sequence spec");
  auto* fnom_n = fnom->add_option("--n", o.n, "n");
  auto* fnom_k = fnom->add_option("--k", o.k, "k");
  auto* tri = fnom->add_subcommand("triangle", "F-nomial triangle rows 0..R-1");
  tri->add_option("--spec", o.spec, "sequence spec")->required();
  tri->add_option("--rows", o.rows, "row count R")->required();
  tri->add_option("--format", o.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

  auto* poset = app.add_subcommand("poset", "Cobweb poset construction and checks");
  poset->require_subcommand(1);
  auto add_spec_levels = [&](CLI::App* sub) {
    sub->add_option("--spec", o.spec, "sequence spec")->required();
    sub->add_option("--levels", o.levels, detail::levels_help())->required();
  };
  auto* p_build = poset->add_subcommand("build", "JSON dump of level sizes");
  add_spec_levels(p_build);
  auto* p_dot = poset->add_subcommand("dot", "Hasse digraph in DOT");
  add_spec_levels(p_dot);
  auto* p_chains = poset->add_subcommand("chains", "Maximal chains from <1,K> to level N");
  add_spec_levels(p_chains);
  p_chains->add_option("--from-level", o.from_level, "K")->required();
  p_chains->add_option("--to-level", o.to_level, "N")->required();
  p_chains->add_option("--mode", o.mode, "enumerate|product|matrix")
      ->check(CLI::IsMember({"enumerate", "product", "matrix"}));
  auto* p_pack = poset->add_subcommand("pack", "Exact max-disjoint packing of P_m copies at <1,K>");
  p_pack->add_option("--spec", o.spec, "sequence spec")->required();
  p_pack->add_option("--root-level", o.root_level, "K")->required();
  p_pack->add_option("--m", o.m, "copy height m")->required();
  p_pack->add_option("--cap", o.cap, "refuse instances with more copies than this");
  auto* p_zeta = poset->add_subcommand("zeta", "Zeta matrix");
  add_spec_levels(p_zeta);
  p_zeta->add_option("--format", o.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  auto* p_mobius = poset->add_subcommand("mobius", "Mobius matrix");
  add_spec_levels(p_mobius);
  p_mobius->add_option("--format", o.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  auto* p_dim2 = poset->add_subcommand("dim2", "Dimension-2 realizer and its verification");
  add_spec_levels(p_dim2);

  auto* prefab = app.add_subcommand("prefab", "Prefab algebras");
  prefab->require_subcommand(1);
  auto* compose = prefab->add_subcommand("compose", "Compose two prefabiants");
  compose->add_option("--op", o.op, "odot|circ")->required()->check(CLI::IsMember({"odot", "circ"}));
  compose->add_option("--a", o.a, "i or k,n")->required();
  compose->add_option("--b", o.b, "i or k,n")->required();
  compose->add_option("--spec", o.spec, "sequence spec")->required();
  auto* laws = prefab->add_subcommand("laws", "Sampled algebra-law check");
  laws->add_option("--spec", o.spec, "sequence spec")->required();
  laws->add_option("--samples", o.samples, "sample count")->required();
  laws->add_option("--seed", o.seed, "seed")->required();

  auto* series = app.add_subcommand("series", "Exact formal power series");
  series->require_subcommand(1);
  auto* s_expf = series->add_subcommand("expf", "exp_F(x)");
  auto* s_enum = series->add_subcommand("enumerator", "exp(exp_F(x) - 1)");
  for (auto* sub : {s_expf, s_enum}) {
    sub->add_option("--spec", o.spec, "sequence spec")->required();
    sub->add_option("--order", o.order, "truncation order D");
  }
  auto* s_bell = series->add_subcommand("bell", "F-Bell number n_F! [x^n] exp(exp_F(x) - 1)");
  s_bell->add_option("--spec", o.spec, "sequence spec")->required();
  s_bell->add_option("--n", o.n, "n")->required();
  s_bell->add_flag("--oracle", o.oracle, "compare with partition enumeration");
  auto* s_qbell = series->add_subcommand("qbell", "q-Bell number over GF(q)");
  s_qbell->add_option("--q", o.q, "prime q")->required();
  s_qbell->add_option("--n", o.n, "dimension n")->required();
  s_qbell->add_flag("--oracle", o.oracle, "compare with subspace-decomposition enumeration");

  CommandResult result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream out, err;
    app.exit(e, err, err);  // help goes to stderr; stdout stays payload-only
    return CommandResult{kOk, {}, err.str()};
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    app.exit(e, err, err);
    err << app.help();
    return CommandResult{kUsage, {}, err.str()};
  }

  try {
    if (seq_check->parsed()) {
      const auto F = parse_sequence(o.spec);
      if (!o.admissible && !o.gcd_morphic) o.admissible = true;
      nlohmann::ordered_json j{{"spec", o.spec}, {"upto", o.upto}};
      bool ok = true;
      if (o.admissible) {
        const auto r = is_cobweb_admissible_prefix(F, o.upto);
        j["admissible"] = json::admissibility(r);
        ok = ok && r.admissible();
      }
      if (o.gcd_morphic) {
        const auto r = is_gcd_morphic_prefix(F, o.upto);
        j["gcd_morphic"] = json::gcd_morphism(r);
        ok = ok && r.morphic();
      }
      return detail::payload(j, ok);
    }
    if (tri->parsed()) {
      const auto t = f_nomial_triangle(parse_sequence(o.spec), o.rows);
      if (o.format == "csv") return CommandResult{kOk, triangle_to_csv(t), {}};
      return detail::payload(json::triangle(t));
    }
    if (fnom->parsed()) {
      if (o.spec.empty() || fnom_n->count() == 0 || fnom_k->count() == 0) {
        return CommandResult{kUsage, {}, "fnomial needs --spec, --n and --k\n" + fnom->help()};
      }
      return detail::payload(json::fnomial_value(f_nomial(parse_sequence(o.spec), o.n, o.k)));
    }
    if (p_build->parsed()) return detail::payload(json::poset(build_poset(parse_sequence(o.spec), o.levels)));
    if (p_dot->parsed()) return CommandResult{kOk, export_dot(build_poset(parse_sequence(o.spec), o.levels)), {}};
    if (p_chains->parsed()) {
      const auto P = build_poset(parse_sequence(o.spec), o.levels);
      const Vertex from{1, o.from_level};
      if (o.from_level > o.to_level || o.to_level > P.top_level()) {
        throw DomainError("need from-level <= to-level <= levels");
      }
      BigInt count;
      if (o.mode == "matrix") {
        const auto row = maximal_chain_row(P, from);
        for (std::uint64_t j = 0; j < P.level_size(o.to_level); ++j) count += row[P.level_offset(o.to_level) + j];
      } else {
        count = count_max_chains_between(
            P, from, o.to_level, o.mode == "enumerate" ? ChainCountMode::enumerate : ChainCountMode::product);
      }
      return detail::payload({{"spec", o.spec},
                              {"from", from.label()},
                              {"to_level", o.to_level},
                              {"mode", o.mode},
                              {"count", count.str()}});
    }
    if (p_pack->parsed()) {
      const auto P = build_poset(parse_sequence(o.spec), o.root_level + o.m);
      const auto r = max_disjoint_packing(P, Vertex{1, o.root_level}, o.m, o.cap);
      return detail::payload(json::packing(r), r.tight);
    }
    if (p_zeta->parsed() || p_mobius->parsed()) {
      const auto P = build_poset(parse_sequence(o.spec), o.levels);
      auto z = zeta_matrix(P);
      const auto m = p_mobius->parsed() ? mobius_matrix(z) : std::move(z);
      if (o.format == "csv") return CommandResult{kOk, m.to_csv(), {}};
      return detail::payload(json::matrix(m));
    }
    if (p_dim2->parsed()) {
      const auto r = dim2_realizer(build_poset(parse_sequence(o.spec), o.levels));
      return detail::payload(json::dim2(r), r.verified);
    }
    if (compose->parsed()) {
      const PrefabContext ctx(parse_sequence(o.spec));
      const auto a = Prefabiant::parse(o.a);
      const auto b = Prefabiant::parse(o.b);
      const bool is_odot = o.op == "odot";
      const auto r = is_odot ? odot(a, b) : circ(a, b);
      nlohmann::ordered_json j{{"op", o.op},
                       {"a", a.str()},
                       {"b", b.str()},
                       {"result", r.str()},
                       {"weight", weight(r)},
                       {"f", f_size(ctx, r, is_odot ? Algebra::odot : Algebra::circ).str()}};
      const auto copies = r.is_identity() ? FNomialValue{} : f_nomial(ctx.F, r.top(), r.base());
      j["copies"] = copies.integral ? nlohmann::ordered_json(copies.str()) : nlohmann::ordered_json(nullptr);
      return detail::payload(j);
    }
    if (laws->parsed()) {
      const auto r = check_algebra_laws(PrefabContext(parse_sequence(o.spec)), o.samples, o.seed);
      auto j = json::laws(r);
      j["spec"] = o.spec;
      j["samples"] = o.samples;
      j["seed"] = o.seed;
      return detail::payload(j, r.ok());
    }
    if (s_expf->parsed()) return detail::payload(json::series(exp_F_series(parse_sequence(o.spec), o.order)));
    if (s_enum->parsed()) return detail::payload(json::series(prefab_enumerator(parse_sequence(o.spec), o.order)));
    if (s_bell->parsed()) {
      const auto F = parse_sequence(o.spec);
      const Rational value = bell_F(F, o.n);
      nlohmann::ordered_json j{{"spec", o.spec}, {"n", o.n}, {"value", to_fraction_string(value)}};
      if (o.oracle) {
        const Rational by_partitions = Rational(f_factorial(F, o.n)) * partition_sum_coefficient(F, o.n);
        bool match = by_partitions == value;
        j["oracle"] = {{"partition_sum", to_fraction_string(by_partitions)}};
        if (F.name() == "natural") {
          const auto sets = set_partition_count(o.n);
          j["oracle"]["set_partitions"] = std::to_string(sets);
          match = match && value == Rational(sets);
        }
        j["match"] = match;
        return detail::payload(j, match);
      }
      return detail::payload(j);
    }
    if (s_qbell->parsed()) {
      const auto formula = q_bell(o.q, o.n);
      nlohmann::ordered_json stirling = nlohmann::ordered_json::array();
      for (std::uint64_t k = 1; k <= o.n; ++k) stirling.push_back(q_stirling(o.q, o.n, k).str());
      nlohmann::ordered_json j{{"q", o.q}, {"n", o.n}, {"formula", formula.str()}, {"stirling", stirling}};
      if (o.oracle) {
        const auto oracle = decomposition_oracle(static_cast<std::uint32_t>(o.q), static_cast<std::uint32_t>(o.n));
        j["oracle"] = std::to_string(oracle);
        j["match"] = formula == oracle;
        return detail::payload(j, formula == oracle);
      }
      return detail::payload(j);
    }
  } catch (const std::exception& e) {
    return CommandResult{kUsage, {}, std::string("error: ") + e.what() + "\n"};
  }
  return CommandResult{kUsage, {}, app.help()};
}

}  // namespace cobweb::cli
