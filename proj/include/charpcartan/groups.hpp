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

#ifndef CHARPCARTAN_GROUPS_HPP
#define CHARPCARTAN_GROUPS_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "connection.hpp"
#include "forms.hpp"
#include "matrix.hpp"

namespace charpcartan {

enum class Group { Gm, Ga, Aff1 };

inline std::string group_name(Group g) {
  switch (g) {
    case Group::Gm:
      return "gm";
    case Group::Ga:
      return "ga";
    case Group::Aff1:
      return "aff1";
  }
  return "?";
}

inline Group parse_group(const std::string& s) {
  if (s == "gm") return Group::Gm;
  if (s == "ga") return Group::Ga;
  if (s == "aff1") return Group::Aff1;
  throw InvalidArgument("unknown group '" + s + "' (expected gm, ga or aff1)");
}

/// Matrix realization of a model group on its coordinate ring, with the
/// inverse written in closed form. `positions[i]` is the matrix entry that
/// equals coordinate i.
struct GroupModel {
  Group group;
  PolyRing ring;
  PolyMatrix g;
  PolyMatrix g_inv;
  std::vector<std::pair<std::size_t, std::size_t>> positions;
};

namespace detail {

inline std::vector<Variable> group_vars(Group group, const std::string& suffix) {
  switch (group) {
    case Group::Gm:
      return {{"x" + suffix, true}};
    case Group::Ga:
      return {{"y" + suffix, false}};
    case Group::Aff1:
      return {{"x" + suffix, true}, {"y" + suffix, false}};
  }
  return {};
}

// g and g^{-1} for the group whose coordinates are `coords` (in `ring`).
inline std::pair<PolyMatrix, PolyMatrix> group_matrices(Group group, const PolyRing& ring,
                                                        const std::vector<Poly>& coords) {
  Poly one = Poly::constant(ring, 1);
  Poly zero(ring);
  switch (group) {
    case Group::Gm:
      return {PolyMatrix::from_rows(ring, {{coords[0]}}), PolyMatrix::from_rows(ring, {{coords[0].inverse_unit()}})};
    case Group::Ga:
      return {PolyMatrix::from_rows(ring, {{one, coords[0]}, {zero, one}}),
              PolyMatrix::from_rows(ring, {{one, -coords[0]}, {zero, one}})};
    case Group::Aff1: {
      Poly xi = coords[0].inverse_unit();
      return {PolyMatrix::from_rows(ring, {{coords[0], coords[1]}, {zero, one}}),
              PolyMatrix::from_rows(ring, {{xi, -(xi * coords[1])}, {zero, one}})};
    }
  }
  throw InvalidArgument("unknown group");
}

inline std::vector<std::pair<std::size_t, std::size_t>> group_positions(Group group) {
  switch (group) {
    case Group::Gm:
      return {{0, 0}};
    case Group::Ga:
      return {{0, 1}};
    case Group::Aff1:
      return {{0, 0}, {0, 1}};
  }
  return {};
}

}  // namespace detail

/// G_m = [[x]] on F_p[x^{+-1}], G_a = [[1, y], [0, 1]] on F_p[y],
/// Aff_1 = [[x, y], [0, 1]] on F_p[x^{+-1}, y].
inline GroupModel group_model(Group group, const Prime& prime) {
  PolyRing ring(prime, detail::group_vars(group, ""));
  std::vector<Poly> coords;
  for (std::size_t i = 0; i < ring.nvars(); ++i) coords.push_back(Poly::variable(ring, i));
  auto [g, gi] = detail::group_matrices(group, ring, coords);
  return {group, ring, std::move(g), std::move(gi), detail::group_positions(group)};
}

/// An n x n matrix of 1-forms, row-major.
using FormMatrix = std::vector<DiffForm>;

inline FormMatrix differential(const PolyMatrix& m) {
  FormMatrix out;
  for (const auto& f : m.entries()) out.push_back(differential(f));
  return out;
}

/// M * W for a function matrix M and a form matrix W (both n x n).
inline FormMatrix multiply(const PolyMatrix& m, const FormMatrix& w) {
  const std::size_t n = m.rows();
  FormMatrix out(n * n, DiffForm(m.ring(), 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (m(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] = out[i * n + j] + m(i, k) * w[k * n + j];
    }
  }
  return out;
}

/// W * M
inline FormMatrix multiply(const FormMatrix& w, const PolyMatrix& m) {
  const std::size_t n = m.rows();
  FormMatrix out(n * n, DiffForm(m.ring(), 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!m(k, j).is_zero()) out[i * n + j] = out[i * n + j] + m(k, j) * w[i * n + k];
      }
    }
  }
  return out;
}

/// Maurer-Cartan form g^{-1} dg as a gl_n-valued 1-form.
inline LieValuedForm<MatrixLieAlgebra> maurer_cartan(const GroupModel& model) {
  FormMatrix w = multiply(model.g_inv, differential(model.g));
  return LieValuedForm<MatrixLieAlgebra>(MatrixLieAlgebra(model.ring, model.g.rows()), std::move(w));
}

inline LieValuedForm<MatrixLieAlgebra> maurer_cartan(Group group, const Prime& prime) {
  return maurer_cartan(group_model(group, prime));
}

/// Pullback of a 1-form along the ring map x_i -> images[i].
inline DiffForm pullback(const DiffForm& w, const std::vector<Poly>& images, const PolyRing& target) {
  if (w.degree() != 1) throw DegreeError("pullback implemented for 1-forms");
  DiffForm out(target, 1);
  for (const auto& [idx, f] : w.terms()) {
    out = out + f.substitute(images, target) * differential(images.at(idx[0]));
  }
  return out;
}

inline FormMatrix pullback(const FormMatrix& w, const std::vector<Poly>& images, const PolyRing& target) {
  FormMatrix out;
  for (const auto& x : w) out.push_back(pullback(x, images, target));
  return out;
}

struct PullbackReport {
  bool multiplication = false;  // mu*(w) = Ad(g2)^{-1}(pr1* w) + pr2* w
  bool inverse = false;         // iota*(w) = -Ad(g)(w)
  bool holds() const { return multiplication && inverse; }
};

/// Verifies the multiplication and inversion pullback identities for the
/// Maurer-Cartan form symbolically on G x G (coordinates suffixed 1 and 2).
inline PullbackReport mc_pullback_report(Group group, const Prime& prime) {
  GroupModel model = group_model(group, prime);
  FormMatrix w = maurer_cartan(model).components();

  auto vars = detail::group_vars(group, "1");
  for (auto& v : detail::group_vars(group, "2")) vars.push_back(v);
  PolyRing dbl(prime, vars);
  const std::size_t m = model.ring.nvars();
  std::vector<Poly> c1;
  std::vector<Poly> c2;
  for (std::size_t i = 0; i < m; ++i) {
    c1.push_back(Poly::variable(dbl, i));
    c2.push_back(Poly::variable(dbl, m + i));
  }
  auto [g1, g1_inv] = detail::group_matrices(group, dbl, c1);
  auto [g2, g2_inv] = detail::group_matrices(group, dbl, c2);

  PullbackReport report;

  PolyMatrix prod = g1 * g2;
  std::vector<Poly> mu;
  for (auto [r, c] : model.positions) mu.push_back(prod(r, c));
  FormMatrix lhs = pullback(w, mu, dbl);
  FormMatrix w1 = pullback(w, c1, dbl);
  FormMatrix w2 = pullback(w, c2, dbl);
  FormMatrix rhs = multiply(multiply(g2_inv, w1), g2);
  for (std::size_t k = 0; k < rhs.size(); ++k) rhs[k] = rhs[k] + w2[k];
  report.multiplication = lhs == rhs;

  std::vector<Poly> iota;
  for (auto [r, c] : model.positions) iota.push_back(model.g_inv(r, c));
  FormMatrix ilhs = pullback(w, iota, model.ring);
  FormMatrix irhs = multiply(multiply(model.g, w), model.g_inv);
  for (auto& x : irhs) x = -x;
  report.inverse = ilhs == irhs;
  return report;
}

inline bool mc_pullback_check(Group group, const Prime& prime) { return mc_pullback_report(group, prime).holds(); }

}  // namespace charpcartan

#endif  // CHARPCARTAN_GROUPS_HPP
