#pragma once

// Concrete finite-dimensional instances: trivial Hopf algebra, group
// algebras, function algebras with translation action, Sweedler's H4 acting
// on k[y]/(y²).

#include "hopfalg/actions.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace hopfalg {

class NotAGroup : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using CayleyTable = std::vector<std::vector<std::size_t>>;

namespace catalog {

/// Index of the identity element; throws NotAGroup unless the table is a
/// group table and inverses[g] is the inverse of g.
inline std::size_t validate_group(const CayleyTable& t, const std::vector<std::size_t>& inverses) {
  std::size_t n = t.size();
  if (n == 0) throw NotAGroup("empty table");
  for (const auto& row : t) {
    if (row.size() != n) throw NotAGroup("table is not square");
    for (auto x : row)
      if (x >= n) throw NotAGroup("entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) throw NotAGroup("not associative");
  std::size_t e = n;
  for (std::size_t cand = 0; cand < n && e == n; ++cand) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = t[cand][x] == x && t[x][cand] == x;
    if (ok) e = cand;
  }
  if (e == n) throw NotAGroup("no identity element");
  if (inverses.size() != n) throw NotAGroup("inverse list has wrong length");
  for (std::size_t g = 0; g < n; ++g)
    if (inverses[g] >= n || t[g][inverses[g]] != e || t[inverses[g]][g] != e) throw NotAGroup("bad inverse");
  return e;
}

inline std::vector<std::size_t> inverses_of(const CayleyTable& t) {
  std::size_t n = t.size();
  std::size_t e = 0;
  for (std::size_t c = 0; c < n; ++c)
    if (t[c][0] == 0 && t[0][c] == 0) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) ok = t[c][x] == x;
      if (ok) e = c;
    }
  std::vector<std::size_t> inv(n, n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (t[g][h] == e) inv[g] = h;
  return inv;
}

inline CayleyTable cyclic_table(std::size_t n) {
  CayleyTable t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

/// Permutations of {0,1,2} in lexicographic order; index 0 is the identity.
inline std::vector<std::array<std::size_t, 3>> s3_elements() {
  std::vector<std::array<std::size_t, 3>> out;
  std::array<std::size_t, 3> p{0, 1, 2};
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// (στ)(x) = σ(τ(x))
inline CayleyTable s3_table() {
  auto el = s3_elements();
  CayleyTable t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<std::size_t, 3> c{};
      for (std::size_t x = 0; x < 3; ++x) c[x] = el[a][el[b][x]];
      t[a][b] = std::size_t(std::find(el.begin(), el.end(), c) - el.begin());
    }
  return t;
}

/// Sign of each S3 element as an index into C2 (0 = even, 1 = odd).
inline std::vector<std::size_t> s3_sign() {
  std::vector<std::size_t> out;
  for (const auto& p : s3_elements()) {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) inversions += p[i] > p[j];
    out.push_back(inversions % 2);
  }
  return out;
}

}  // namespace catalog

/// The one-dimensional Hopf algebra k.
inline HopfAlgebra trivial_hopf(FieldSpec f = FieldSpec::rationals()) {
  Tensor3 m(1, 1, 1), c(1, 1, 1);
  m.set(0, 0, 0, 1);
  c.set(0, 0, 0, 1);
  auto alg = StructureAlgebra::make(f, {"1"}, m, Vec::basis(1, 0));
  return HopfAlgebra::make(std::move(alg), c, Vec::basis(1, 0), Matrix::identity(1));
}

/// k with the trivial action of k.
inline LeftModuleAlgebra trivial_module_algebra(FieldSpec f = FieldSpec::rationals()) {
  HopfAlgebra k = trivial_hopf(f);
  Tensor3 act(1, 1, 1);
  act.set(0, 0, 0, f.one());
  StructureAlgebra a = k.algebra;
  return {std::move(k), std::move(a), std::move(act)};
}

/// kG with Δg = g⊗g, ε(g) = 1, S(g) = g⁻¹.
inline HopfAlgebra group_algebra(const CayleyTable& cayley, const std::vector<std::size_t>& inverses,
                                 FieldSpec f = FieldSpec::rationals(), const std::string& prefix = "g") {
  std::size_t e = catalog::validate_group(cayley, inverses);
  std::size_t n = cayley.size();
  Tensor3 m(n, n, n), c(n, n, n);
  Matrix s(n, n);
  Vec counit(n), unit = Vec::basis(n, e);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) m.set(g, h, cayley[g][h], 1);
    c.set(g, g, g, 1);
    counit.set(g, 1);
    s.set(inverses[g], g, 1);
  }
  std::vector<std::string> labels;
  for (std::size_t g = 0; g < n; ++g) labels.push_back(g == e ? "1" : prefix + std::to_string(g));
  auto alg = StructureAlgebra::make(f, std::move(labels), std::move(m), unit);
  return HopfAlgebra::make(std::move(alg), std::move(c), std::move(counit), std::move(s));
}

inline HopfAlgebra group_algebra(const CayleyTable& cayley, FieldSpec f = FieldSpec::rationals()) {
  return group_algebra(cayley, catalog::inverses_of(cayley), f);
}

/// k^G (pointwise product, unit Σδ_x) with the action of kH through a
/// homomorphism φ: H → G, h·δ_x = δ_{φ(h)x}.
inline LeftModuleAlgebra function_algebra_via(const CayleyTable& acting, const CayleyTable& target,
                                              const std::vector<std::size_t>& hom,
                                              FieldSpec f = FieldSpec::rationals()) {
  HopfAlgebra kh = group_algebra(acting, f);
  std::size_t n = target.size();
  catalog::validate_group(target, catalog::inverses_of(target));
  if (hom.size() != acting.size()) throw NotAGroup("homomorphism has wrong length");
  for (std::size_t a = 0; a < acting.size(); ++a)
    for (std::size_t b = 0; b < acting.size(); ++b)
      if (hom[acting[a][b]] != target[hom[a]][hom[b]]) throw NotAGroup("map is not a homomorphism");
  Tensor3 m(n, n, n);
  Vec unit(n);
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n; ++x) {
    m.set(x, x, x, 1);
    unit.set(x, 1);
    labels.push_back("e" + std::to_string(x));
  }
  auto alg = StructureAlgebra::make(f, std::move(labels), std::move(m), std::move(unit));
  Tensor3 act(acting.size(), n, n);
  for (std::size_t h = 0; h < acting.size(); ++h)
    for (std::size_t x = 0; x < n; ++x) act.set(h, x, target[hom[h]][x], f.one());
  return {std::move(kh), std::move(alg), std::move(act)};
}

/// k^G with kG acting by translation g·δ_x = δ_{gx}.
inline LeftModuleAlgebra function_algebra_with_translation(const CayleyTable& cayley,
                                                           FieldSpec f = FieldSpec::rationals()) {
  std::vector<std::size_t> id(cayley.size());
  std::iota(id.begin(), id.end(), 0);
  return function_algebra_via(cayley, cayley, id, f);
}

/// Sweedler's 4-dimensional Hopf algebra, basis {1, g, x, gx}:
/// g² = 1, x² = 0, xg = −gx, Δg = g⊗g, Δx = x⊗1 + g⊗x, S(g) = g, S(x) = −gx.
inline HopfAlgebra sweedler_h4(FieldSpec f = FieldSpec::rationals()) {
  // basis element g^a x^b has index a + 2b
  auto idx = [](int a, int b) { return std::size_t(a + 2 * b); };
  Tensor3 m(4, 4, 4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          // (g^a x^b)(g^c x^d) = (-1)^{bc} g^{a+c} x^{b+d}
          if (b + d >= 2) continue;
          m.set(idx(a, b), idx(c, d), idx((a + c) % 2, b + d), (b * c) % 2 ? -1 : 1);
        }
  Tensor3 c(4, 4, 4);
  c.set(0, 0, 0, 1);  // Δ1 = 1⊗1
  c.set(1, 1, 1, 1);  // Δg = g⊗g
  c.set(2, 2, 0, 1);  // Δx = x⊗1 + g⊗x
  c.set(2, 1, 2, 1);
  c.set(3, 3, 1, 1);  // Δ(gx) = gx⊗g + 1⊗gx
  c.set(3, 0, 3, 1);
  Vec counit(4);
  counit.set(0, 1);
  counit.set(1, 1);
  Matrix s(4, 4);
  s.set(0, 0, 1);
  s.set(1, 1, 1);
  s.set(3, 2, -1);  // S(x) = -gx
  s.set(2, 3, 1);   // S(gx) = x
  auto alg = StructureAlgebra::make(f, {"1", "g", "x", "gx"}, std::move(m), Vec::basis(4, 0));
  return HopfAlgebra::make(std::move(alg), std::move(c), std::move(counit), std::move(s));
}

/// k[y]/(y²) with g·y = −y, x·y = 1, x·1 = 0 (and gx·y = 1).
inline LeftModuleAlgebra sweedler_module_algebra(FieldSpec f = FieldSpec::rationals()) {
  HopfAlgebra h = sweedler_h4(f);
  Tensor3 m(2, 2, 2);
  m.set(0, 0, 0, 1);
  m.set(0, 1, 1, 1);
  m.set(1, 0, 1, 1);
  auto alg = StructureAlgebra::make(f, {"1", "y"}, std::move(m), Vec::basis(2, 0));
  Tensor3 act(4, 2, 2);
  act.set(0, 0, 0, 1);   // 1·1 = 1
  act.set(0, 1, 1, 1);   // 1·y = y
  act.set(1, 0, 0, 1);   // g·1 = 1
  act.set(1, 1, 1, -1);  // g·y = -y
  act.set(2, 1, 0, 1);   // x·y = 1
  act.set(3, 1, 0, 1);   // gx·y = g·1 = 1
  return {std::move(h), std::move(alg), embed(f, act)};
}

struct Instance {
  std::string name;
  std::string description;
  LeftModuleAlgebra module;
};

inline std::vector<Instance> all_instances(FieldSpec f = FieldSpec::rationals()) {
  std::vector<Instance> out;
  out.push_back({"k", "k acting trivially on k", trivial_module_algebra(f)});
  out.push_back({"c2", "kC2 acting on k^C2 by translation", function_algebra_with_translation(catalog::cyclic_table(2), f)});
  out.push_back({"s3", "kS3 acting on k^S3 by translation", function_algebra_with_translation(catalog::s3_table(), f)});
  out.push_back({"s3-sign", "kS3 acting on k^C2 through the sign character",
                 function_algebra_via(catalog::s3_table(), catalog::cyclic_table(2), catalog::s3_sign(), f)});
  out.push_back({"h4", "Sweedler's H4 acting on k[y]/(y^2)", sweedler_module_algebra(f)});
  return out;
}

inline LeftModuleAlgebra instance_by_name(const std::string& name, FieldSpec f = FieldSpec::rationals()) {
  for (auto& inst : all_instances(f))
    if (inst.name == name) return std::move(inst.module);
  throw std::invalid_argument("unknown catalog instance '" + name + "'");
}

}  // namespace hopfalg
