/*
   Copyright 2026 The charpcartan Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CHARPCARTAN_CLI_HPP
#define CHARPCARTAN_CLI_HPP

#include <CLI11.hpp>
#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "abstract_lie.hpp"
#include "cartier.hpp"
#include "classify.hpp"
#include "connection.hpp"
#include "counting.hpp"
#include "expr.hpp"
#include "groups.hpp"
#include "lie.hpp"
#include "selftest.hpp"

namespace charpcartan::cli {

using nlohmann::json;

/// Bad flag combinations detected after parsing; exit code 2 like CLI11's own.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::int64_t p = 0;
  std::int64_t level = 1;
  std::int64_t genus = 2;
  std::int64_t bound = 0;
  std::int64_t truncate = 0;
  std::string vars;
  std::string form;
  std::string conn;
  std::string group;
  std::string field;
  std::string algebra;
  std::string v;
  std::string u;
  std::string formula;
  std::vector<std::string> omegas;
  std::vector<std::string> chis;
  double tolerance = kDefaultIntegralityTolerance;
  std::optional<std::uint64_t> seed;
  bool pretty = false;
};

namespace detail {

inline json grid(const PolyMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json grid(const std::vector<DiffForm>& flat, std::size_t n) {
  json rows = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(to_string(flat[i * n + j]));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json element(const PolyMatrix& m) { return grid(m); }

inline json element(const std::vector<Poly>& v) {
  json out = json::array();
  for (const auto& f : v) out.push_back(to_string(f));
  return out;
}

inline PolyRing ring_of(const Options& o) { return PolyRing(Prime(o.p), parse_vars(o.vars)); }

inline Derivation parse_field(const std::string& src, const PolyRing& ring) {
  std::vector<Poly> coeffs;
  std::size_t pos = 0;
  while (pos <= src.size()) {
    std::size_t end = src.find(',', pos);
    if (end == std::string::npos) end = src.size();
    coeffs.push_back(parse_poly(src.substr(pos, end - pos), ring));
    pos = end + 1;
  }
  if (coeffs.size() != ring.nvars()) {
    throw InvalidArgument("--D needs one coefficient per variable (" + std::to_string(ring.nvars()) + ")");
  }
  return Derivation(ring, std::move(coeffs));
}

/// The connection named by --group or written with --conn.
inline ConnMatrix connection_of(const Options& o) {
  if (!o.group.empty() && !o.conn.empty()) throw UsageError("give either --group or --conn, not both");
  if (!o.group.empty()) return ConnMatrix::from_lie_form(maurer_cartan(parse_group(o.group), Prime(o.p)));
  if (o.conn.empty()) throw UsageError("one of --group or --conn is required");
  PolyRing ring = ring_of(o);
  return ConnMatrix::from_forms(ring, parse_form_matrix(o.conn, ring));
}

inline json cmd_cartier(const Options& o) {
  PolyRing ring = ring_of(o);
  DiffForm w = parse_form(o.form, ring, 1);
  DiffForm c = cartier(w).value;
  return {{"form", to_string(c)}, {"fixed_point", c == w}};
}

inline json cmd_curvature(const Options& o) {
  ConnMatrix conn = connection_of(o);
  auto w = conn.to_lie_form();
  Curvature2Form psi = curvature_form(w);
  Curvature2Form op = curvature_operator(conn);
  return {{"flat", psi.is_zero()},
          {"components", grid(psi.components, conn.rank())},
          {"operator_agrees", psi == op}};
}

inline json cmd_pcurvature(const Options& o) {
  ConnMatrix conn = connection_of(o);
  const PolyRing& ring = conn.ring();
  auto w = conn.to_lie_form();
  auto pc = p_curvature_form(w);
  json values = json::object();
  bool agrees = true;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    values[ring.var(i).name] = grid(pc.values[i]);
    agrees = agrees && pc.values[i] == p_curvature_operator(conn, Derivation::coordinate(ring, i));
  }
  json out{{"values", values},
           {"p_flat", pc.is_zero()},
           {"formal", pc.formal},
           {"operator_agrees", agrees}};
  if (!o.field.empty()) out["at_D"] = grid(p_curvature_operator(conn, parse_field(o.field, ring)));
  return out;
}

inline json cmd_mc_check(const Options& o) {
  if (o.group.empty()) throw UsageError("--group is required");
  const Group g = parse_group(o.group);
  const Prime p(o.p);
  auto w = maurer_cartan(g, p);
  auto report = mc_pullback_report(g, p);
  const bool flat = curvature_form(w).is_zero();
  const bool p_flat = p_curvature_form(w).is_zero();
  return {{"group", group_name(g)},
          {"form", grid(w.components(), w.algebra().rank())},
          {"flat", flat},
          {"p_flat", p_flat},
          {"multiplication", report.multiplication},
          {"inverse", report.inverse},
          {"holds", flat && p_flat && report.holds()}};
}

template <class A>
json jacobson_payload(const A& alg, const typename A::Element& v, const typename A::Element& u, bool l1123) {
  if (l1123) {
    auto neg_v = alg.sub(alg.zero(), v);
    auto lhs = jacobson_correction(alg, v, alg.sub(u, v));
    auto rhs = alg.sub(alg.zero(), jacobson_correction(alg, neg_v, u));
    return {{"holds", alg.equal(lhs, rhs)}, {"lhs", element(lhs)}, {"rhs", element(rhs)}};
  }
  json s = json::array();
  for (const auto& e : jacobson_coefficients(alg, v, u)) s.push_back(element(e));
  auto lhs = alg.p_power(alg.add(v, u));
  auto rhs = alg.add(alg.add(alg.p_power(v), alg.p_power(u)), jacobson_correction(alg, v, u));
  return {{"holds", alg.equal(lhs, rhs)}, {"s", s}, {"lhs", element(lhs)}, {"rhs", element(rhs)}};
}

inline std::vector<Poly> parse_coords(const std::string& src, const PolyRing& ring) {
  std::vector<Poly> out;
  std::size_t pos = 0;
  while (pos <= src.size()) {
    std::size_t end = src.find(',', pos);
    if (end == std::string::npos) end = src.size();
    out.push_back(parse_poly(src.substr(pos, end - pos), ring));
    pos = end + 1;
  }
  return out;
}

inline json cmd_jacobson(const Options& o, bool l1123) {
  if (o.v.empty() || o.u.empty()) throw UsageError("--v and --u are required");
  const Prime prime(o.p);
  PolyRing ring = o.vars.empty() ? PolyRing(prime) : PolyRing(prime, parse_vars(o.vars));
  if (!o.algebra.empty()) {
    AbstractLieAlgebra base = o.algebra == "sl2"    ? AbstractLieAlgebra::sl2(prime)
                              : o.algebra == "aff1" ? AbstractLieAlgebra::aff1(prime)
                                                    : AbstractLieAlgebra::load(o.algebra);
    if (!(base.prime() == prime)) throw AlgebraMismatch("algebra is defined over a different prime than --p");
    AbstractLieAlgebra alg = base.with_ring(ring);
    auto v = alg.from_coords(parse_coords(o.v, ring));
    auto u = alg.from_coords(parse_coords(o.u, ring));
    json out = jacobson_payload(alg, v, u, l1123);
    out["algebra"] = alg.names();
    return out;
  }
  PolyMatrix v = parse_poly_matrix(o.v, ring);
  PolyMatrix u = parse_poly_matrix(o.u, ring);
  MatrixLieAlgebra alg(ring, v.rows());
  json out = jacobson_payload(alg, v, u, l1123);
  out["algebra"] = "gl_" + std::to_string(v.rows());
  return out;
}

inline json cmd_classify_gm(const Options& o) {
  const Prime prime(o.p);
  auto items = enumerate_Bm(prime, o.level);
  json ms = json::array();
  for (const auto& it : items) ms.push_back(it.m);
  json out{{"p", o.p}, {"N", o.level}, {"count", items.size()}, {"items", ms}};
  if (o.truncate > 0) {
    std::map<std::int64_t, std::vector<std::int64_t>> by_m;
    for (const auto& it : items) by_m[truncate_Bm(it, o.truncate).m].push_back(it.m);
    json f = json::object();
    for (const auto& [m, fiber] : by_m) f[std::to_string(m)] = fiber;
    out["truncate"] = o.truncate;
    out["fibers"] = f;
  }
  return out;
}

inline json cmd_classify_ga(const Options& o) {
  const Prime prime(o.p);
  if (o.bound < 1) throw InvalidArgument("degree bound --D must be >= 1");
  auto items = enumerate_Ba(prime, o.level, o.bound);
  PolyRing ring(prime, {{"T", false}});
  json list = json::array();
  for (const auto& it : items) {
    json extra = json::object();
    for (const auto& [i, a] : it.extra) extra[std::to_string(i)] = a;
    Poly u = ba_polynomial(it);
    list.push_back({{"a", it.a}, {"extra", extra}, {"u", to_string(u)}});
  }
  return {{"p", o.p},
          {"N", o.level},
          {"D", o.bound},
          {"count", items.size()},
          {"count_closed_form", ba_count_closed(prime, o.level, o.bound)},
          {"items", list}};
}

inline json cmd_check_tuple(const Options& o) {
  PolyRing ring = ring_of(o);
  StructureTuple t{ring, {}, {}};
  for (const auto& s : o.omegas) t.omegas.push_back(parse_form(s, ring, 1));
  for (const auto& s : o.chis) t.chis.push_back(parse_form(s, ring, 1));
  TupleReport r = check_structure_tuple(t);
  return {{"ok", r.ok}, {"failures", r.failures}, {"determinant", to_string(r.determinant)}};
}

inline json cmd_count(const Options& o) {
  const Prime prime(o.p);
  CountResult r;
  if (o.formula == "dormant") {
    r = dormant_count(prime, o.genus, o.level, o.tolerance);
  } else if (o.formula == "elliptic") {
    r = elliptic_affine_count(prime, o.level);
  } else {
    r = bm_count_closed(prime, o.level);
  }
  return {{"formula", o.formula}, {"value", r.value}, {"residual", r.residual}, {"method", r.method}};
}

inline std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("CHARPCARTAN_SEED")) {
    try {
      std::size_t used = 0;
      const std::string s(env);
      const auto v = std::stoull(s, &used);
      if (used == s.size() && !s.empty() && s[0] != '-') return v;
    } catch (const std::exception&) {
    }
    throw UsageError("CHARPCARTAN_SEED is not a non-negative integer");
  }
  return 42;
}

/// Compact, sorted-key serialization; invalid UTF-8 echoed from the input is
/// replaced rather than rejected.
inline std::string serialize(const json& j, int indent = -1) {
  return j.dump(indent, ' ', false, json::error_handler_t::replace);
}

inline json error_payload(const std::string& kind, const std::string& message) {
  return {{"ok", false}, {"error", {{"kind", kind}, {"message", message}}}};
}

inline bool is_parse_error(const std::string& kind) {
  return kind == "SyntaxError" || kind == "UndeclaredVariable" || kind == "NegativeExponentOnPolynomialVariable";
}

}  // namespace detail

/// Runs one command line (without the program name). Writes exactly one JSON
/// document to `out`; `--pretty` adds a human rendering on `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace detail;
  Options o;
  CLI::App app{"Symbolic computation for positive-characteristic differential geometry", "charpcartan"};
  app.require_subcommand(1, 1);

  auto prime_opt = [&](CLI::App* s) { s->add_option("--p", o.p, "odd prime")->required(); };
  auto pretty_opt = [&](CLI::App* s) { s->add_flag("--pretty", o.pretty, "also print a human rendering to stderr"); };
  auto conn_opts = [&](CLI::App* s) {
    prime_opt(s);
    s->add_option("--vars", o.vars, "variables, e.g. \"x:laurent,y\"");
    s->add_option("--conn", o.conn, "matrix of 1-forms, rows split by ';', entries by ','");
    s->add_option("--group", o.group, "gm, ga or aff1 (Maurer-Cartan form)");
    pretty_opt(s);
  };

  auto* c_cartier = app.add_subcommand("cartier", "Cartier operator of a closed 1-form");
  prime_opt(c_cartier);
  c_cartier->add_option("--vars", o.vars)->required();
  c_cartier->add_option("--form", o.form)->required();
  pretty_opt(c_cartier);

  auto* c_curv = app.add_subcommand("curvature", "curvature dw + 1/2 [w, w]");
  conn_opts(c_curv);

  auto* c_pcurv = app.add_subcommand("pcurvature", "p-curvature on the coordinate fields");
  conn_opts(c_pcurv);
  c_pcurv->add_option("--D", o.field, "vector field as comma-separated coefficients");

  auto* c_mc = app.add_subcommand("mc-check", "Maurer-Cartan flatness and pullback identities");
  prime_opt(c_mc);
  c_mc->add_option("--group", o.group)->required();
  pretty_opt(c_mc);

  auto jac_opts = [&](CLI::App* s) {
    prime_opt(s);
    s->add_option("--vars", o.vars, "coefficient ring variables (default: constants)");
    s->add_option("--algebra", o.algebra, "sl2, aff1 or a JSON structure-constant file (default: gl_n)");
    s->add_option("--v", o.v, "matrix grid, or coordinates for --algebra")->required();
    s->add_option("--u", o.u, "matrix grid, or coordinates for --algebra")->required();
    pretty_opt(s);
  };
  auto* c_jac = app.add_subcommand("jacobson-check", "(v+u)^[p] = v^[p] + u^[p] + sum s_i(v,u)/i");
  jac_opts(c_jac);
  auto* c_l1123 = app.add_subcommand("l1123-check", "sum s_i(v,u-v)/i = -sum s_i(-v,u)/i");
  jac_opts(c_l1123);

  auto* c_gm = app.add_subcommand("classify-gm", "enumerate B_m at level N");
  prime_opt(c_gm);
  c_gm->add_option("--N", o.level)->required();
  c_gm->add_option("--truncate", o.truncate, "also list truncation fibers to this level");
  pretty_opt(c_gm);

  auto* c_ga = app.add_subcommand("classify-ga", "enumerate B_a at level N up to degree D");
  prime_opt(c_ga);
  c_ga->add_option("--N", o.level)->required();
  c_ga->add_option("--D", o.bound, "degree bound")->required();
  pretty_opt(c_ga);

  auto* c_tuple = app.add_subcommand("check-tuple", "check a tuple of C-fixed and C-kernel forms");
  prime_opt(c_tuple);
  c_tuple->add_option("--vars", o.vars)->required();
  c_tuple->add_option("--omega", o.omegas, "C-fixed slot (repeatable)");
  c_tuple->add_option("--chi", o.chis, "C-kernel slot (repeatable)");
  pretty_opt(c_tuple);

  auto* c_count = app.add_subcommand("count", "counting formulas");
  c_count->add_option("--formula", o.formula)->required()->check(CLI::IsMember({"dormant", "elliptic", "bm"}));
  prime_opt(c_count);
  c_count->add_option("--N", o.level)->required();
  c_count->add_option("--g", o.genus, "genus (dormant only)");
  c_count->add_option("--tolerance", o.tolerance, "integrality tolerance on the residual");
  pretty_opt(c_count);

  auto* c_self = app.add_subcommand("selftest", "run the randomized property suites");
  c_self->add_option("--seed", o.seed, "seed (fallback: CHARPCARTAN_SEED, then 42)");
  pretty_opt(c_self);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << "charpcartan\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    out << serialize(error_payload("UsageError", e.what())) << "\n";
    return 2;
  }

  json result;
  try {
    CLI::App* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();
    if (name == "cartier") {
      result = cmd_cartier(o);
    } else if (name == "curvature") {
      result = cmd_curvature(o);
    } else if (name == "pcurvature") {
      result = cmd_pcurvature(o);
    } else if (name == "mc-check") {
      result = cmd_mc_check(o);
    } else if (name == "jacobson-check") {
      result = cmd_jacobson(o, false);
    } else if (name == "l1123-check") {
      result = cmd_jacobson(o, true);
    } else if (name == "classify-gm") {
      result = cmd_classify_gm(o);
    } else if (name == "classify-ga") {
      result = cmd_classify_ga(o);
    } else if (name == "check-tuple") {
      result = cmd_check_tuple(o);
    } else if (name == "count") {
      result = cmd_count(o);
    } else {
      const std::uint64_t seed = resolve_seed(o);
      auto results = run_selftest(seed);
      json list = json::array();
      std::string failed;
      for (const auto& r : results) {
        list.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        if (!r.passed) failed += (failed.empty() ? "" : ", ") + std::to_string(r.id);
        if (o.pretty) {
          err << (r.passed ? "PASS " : "FAIL ") << r.id << "  " << r.name << "  (" << std::fixed
              << std::setprecision(3) << r.seconds << " s)  " << r.detail << "\n";
        }
      }
      if (!failed.empty()) throw Error("SelftestFailure", "criteria failed: " + failed);
      result = {{"seed", seed}, {"criteria", list}, {"passed", true}};
    }
  } catch (const UsageError& e) {
    out << serialize(error_payload("UsageError", e.what())) << "\n";
    return 2;
  } catch (const Error& e) {
    out << serialize(error_payload(e.kind(), e.what())) << "\n";
    return is_parse_error(e.kind()) ? 2 : 1;
  } catch (const std::exception& e) {
    out << serialize(error_payload("InternalError", e.what())) << "\n";
    return 1;
  } catch (...) {
    out << serialize(error_payload("InternalError", "unknown exception")) << "\n";
    return 1;
  }
  out << serialize(json{{"ok", true}, {"result", result}}) << "\n";
  if (o.pretty && app.get_subcommands().front()->get_name() != "selftest") err << serialize(result, 2) << "\n";
  return 0;
}

}  // namespace charpcartan::cli

#endif  // CHARPCARTAN_CLI_HPP
