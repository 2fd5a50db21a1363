#pragma once

// Module algebras and bimodule algebras over a Hopf algebra, stored as
// explicit action tensors, plus the derived actions: a·h = S(h)·a on A^op,
// the enveloping bimodule algebra A ⊗ A^op, and the regular actions of H on H*.

#include "hopfalg/algebra.hpp"

namespace hopfalg {

/// act[h][a] = coordinates of e_h · e_a.
struct LeftModuleAlgebra {
  HopfAlgebra hopf;
  StructureAlgebra alg;
  Tensor3 act;

  Vec apply(const Vec& h, const Vec& a) const { return act.contract(h, a); }
  Vec apply(std::size_t h, const Vec& a) const { return act.contract(hopf.basis(h), a); }
  const Vec& apply(std::size_t h, std::size_t a) const { return act.slice(h, a); }
};

/// act[a][h] = coordinates of e_a · e_h.
struct RightModuleAlgebra {
  HopfAlgebra hopf;
  StructureAlgebra alg;
  Tensor3 act;

  Vec apply(const Vec& a, const Vec& h) const { return act.contract(a, h); }
  const Vec& apply(std::size_t a, std::size_t h) const { return act.slice(a, h); }
};

struct BimoduleAlgebra {
  HopfAlgebra hopf;
  StructureAlgebra alg;
  Tensor3 left_act;   // [h][φ]
  Tensor3 right_act;  // [φ][h]

  LeftModuleAlgebra left() const { return {hopf, alg, left_act}; }
  RightModuleAlgebra right() const { return {hopf, alg, right_act}; }
};

inline const char* kRightModuleConvention =
    "right module algebra: (a·h)·h' = a·(hh'), a·1 = a, (ab)·h = (a·h1)(b·h2), 1·h = eps(h)1";
inline const char* kLeftModuleConvention =
    "left module algebra: (hh')·a = h·(h'·a), 1·a = a, h·(ab) = (h1·a)(h2·b), h·1 = eps(h)1";

inline CheckReport check_left_module_algebra(const LeftModuleAlgebra& m) {
  CheckReport rep;
  rep.claim = "module-algebra";
  rep.header = kLeftModuleConvention;
  const auto& H = m.hopf;
  const auto& A = m.alg;
  std::size_t nh = H.dim(), na = A.dim;
  if (m.act.dim0() != nh || m.act.dim1() != na || m.act.dim2() != na) {
    rep.run("shape", [](Clause& cl) { cl.fail_without_witness("action tensor has wrong dimensions"); });
    return rep;
  }
  rep.run("action_associative", [&](Clause& cl) {
    for (std::size_t h = 0; h < nh; ++h)
      for (std::size_t k = 0; k < nh; ++k)
        for (std::size_t a = 0; a < na; ++a)
          cl.expect(m.act.contract(H.algebra.product(h, k), A.basis(a)) == m.apply(h, m.apply(k, a)),
                    {std::int64_t(h), std::int64_t(k), std::int64_t(a)});
  });
  rep.run("action_unital", [&](Clause& cl) {
    for (std::size_t a = 0; a < na; ++a)
      cl.expect(m.apply(H.algebra.unit, A.basis(a)) == A.basis(a), {std::int64_t(a)});
  });
  Sweedler sw(H, 2);
  rep.run("measuring", [&](Clause& cl) {
    Accumulator acc(na);
    for (std::size_t h = 0; h < nh; ++h)
      for (std::size_t a = 0; a < na; ++a)
        for (std::size_t b = 0; b < na; ++b) {
          for (const auto& t : sw.of(h))
            A.mult.contract_into(m.apply(t.leg[0], a), m.apply(t.leg[1], b), acc, t.coeff);
          cl.expect(m.apply(h, A.product(a, b)) == acc.take(), {std::int64_t(h), std::int64_t(a), std::int64_t(b)});
        }
  });
  rep.run("unit_preserved", [&](Clause& cl) {
    for (std::size_t h = 0; h < nh; ++h)
      cl.expect(m.apply(h, A.unit) == A.unit.scaled(H.eps(h)), {std::int64_t(h)});
  });
  return rep;
}

inline CheckReport check_right_module_algebra(const RightModuleAlgebra& m) {
  CheckReport rep;
  rep.claim = "right-module-algebra";
  rep.header = kRightModuleConvention;
  const auto& H = m.hopf;
  const auto& A = m.alg;
  std::size_t nh = H.dim(), na = A.dim;
  if (m.act.dim0() != na || m.act.dim1() != nh || m.act.dim2() != na) {
    rep.run("shape", [](Clause& cl) { cl.fail_without_witness("action tensor has wrong dimensions"); });
    return rep;
  }
  rep.run("action_associative", [&](Clause& cl) {
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t h = 0; h < nh; ++h)
        for (std::size_t k = 0; k < nh; ++k)
          cl.expect(m.apply(m.apply(a, h), H.basis(k)) == m.apply(A.basis(a), H.algebra.product(h, k)),
                    {std::int64_t(a), std::int64_t(h), std::int64_t(k)});
  });
  rep.run("action_unital", [&](Clause& cl) {
    for (std::size_t a = 0; a < na; ++a)
      cl.expect(m.apply(A.basis(a), H.algebra.unit) == A.basis(a), {std::int64_t(a)});
  });
  Sweedler sw(H, 2);
  rep.run("measuring", [&](Clause& cl) {
    Accumulator acc(na);
    for (std::size_t h = 0; h < nh; ++h)
      for (std::size_t a = 0; a < na; ++a)
        for (std::size_t b = 0; b < na; ++b) {
          for (const auto& t : sw.of(h))
            A.mult.contract_into(m.apply(a, t.leg[0]), m.apply(b, t.leg[1]), acc, t.coeff);
          cl.expect(m.apply(A.product(a, b), H.basis(h)) == acc.take(),
                    {std::int64_t(a), std::int64_t(b), std::int64_t(h)});
        }
  });
  rep.run("unit_preserved", [&](Clause& cl) {
    for (std::size_t h = 0; h < nh; ++h)
      cl.expect(m.apply(A.unit, H.basis(h)) == A.unit.scaled(H.eps(h)), {std::int64_t(h)});
  });
  return rep;
}

inline CheckReport check_bimodule_algebra(const BimoduleAlgebra& b) {
  CheckReport rep;
  rep.claim = "bimodule-algebra";
  rep.absorb(check_left_module_algebra(b.left()), "left");
  rep.absorb(check_right_module_algebra(b.right()), "right");
  if (!rep.find("left.shape") && !rep.find("right.shape")) {
    rep.run("actions_commute", [&](Clause& cl) {
      std::size_t nh = b.hopf.dim(), na = b.alg.dim;
      for (std::size_t h = 0; h < nh; ++h)
        for (std::size_t p = 0; p < na; ++p)
          for (std::size_t k = 0; k < nh; ++k) {
            Vec lhs = b.right_act.contract(b.left_act.slice(h, p), b.hopf.basis(k));
            Vec rhs = b.left_act.contract(b.hopf.basis(h), b.right_act.slice(p, k));
            cl.expect(lhs == rhs, {std::int64_t(h), std::int64_t(p), std::int64_t(k)});
          }
    });
  }
  return rep;
}

/// A^op as a right H-module algebra via a·h = S(h)·a.
inline RightModuleAlgebra right_action_from_left(const LeftModuleAlgebra& m) {
  std::size_t nh = m.hopf.dim(), na = m.alg.dim;
  Tensor3 act(na, nh, na);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t h = 0; h < nh; ++h) act.set_slice(a, h, m.act.contract(m.hopf.S(h), m.alg.basis(a)));
  return {m.hopf, opposite(m.alg), std::move(act)};
}

/// A ⊗ A^op with h·(a⊗b)·h' = (h·a) ⊗ (S(h')·b).
inline BimoduleAlgebra enveloping_bimodule_algebra(const LeftModuleAlgebra& m) {
  RightModuleAlgebra r = right_action_from_left(m);
  std::size_t nh = m.hopf.dim(), na = m.alg.dim, ne = na * na;
  Tensor3 left(nh, ne, ne), right(ne, nh, ne);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < na; ++b) {
      std::size_t ab = a * na + b;
      for (std::size_t h = 0; h < nh; ++h) {
        left.set_slice(h, ab, kron(m.apply(h, a), m.alg.basis(b)));
        right.set_slice(ab, h, kron(m.alg.basis(a), r.apply(b, h)));
      }
    }
  return {m.hopf, tensor_algebra(m.alg, r.alg), std::move(left), std::move(right)};
}

/// The regular actions on H* (dual basis δ_c):
///   (h ⇀ f)(x) = f(x h),  (f ↼ h)(x) = f(h x).
/// harpoon_l is indexed [h][f], harpoon_r [f][h].
inline std::pair<Tensor3, Tensor3> regular_actions(const HopfAlgebra& h) {
  std::size_t n = h.dim();
  Tensor3 l(n, n, n), r(n, n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (const auto& [c, v] : h.algebra.product(x, y)) {
        l.set(y, c, x, v);  // (e_y ⇀ δ_c)(e_x) = δ_c(e_x e_y)
        r.set(c, x, y, v);  // (δ_c ↼ e_x)(e_y) = δ_c(e_x e_y)
      }
  return {std::move(l), std::move(r)};
}

/// H* as a left H ⊗ H^op-module algebra: (h ⊗ h')·f = h ⇀ f ↼ h'.
inline LeftModuleAlgebra hstar_module_algebra(const HopfAlgebra& h) {
  std::size_t n = h.dim();
  auto [hl, hr] = regular_actions(h);
  HopfAlgebra acting = tensor_hopf(h, opposite_hopf(h));
  Tensor3 act(n * n, n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t f = 0; f < n; ++f)
        act.set_slice(x * n + y, f, hl.contract(h.basis(x), hr.slice(f, y)));
  return {std::move(acting), dual_hopf(h).algebra, std::move(act)};
}

}  // namespace hopfalg
