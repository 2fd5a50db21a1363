#pragma once

// The four product algebras built on tensor products with a Hopf algebra,
// materialized as structure constants, and the explicit isomorphisms
// between them.
//
// Basis orders (row-major):
//   L-R-smash 𝒜 ♮ H and diagonal crossed 𝒜 ⋈ H:  (φ, h)
//   Kadison (A ⊗ A^op) ⋄ H:                         (a, b, h)
//   Connes–Moscovici A ⊙ H ⊙ A:                    (a, h, b)
// With 𝒜 = A ⊗ A^op the (φ, h) order coincides with (a, b, h).

#include "hopfalg/actions.hpp"

#include <map>
#include <tuple>

namespace hopfalg {

enum class ProductKind { LRSmash, DiagonalCrossed, KadisonDiamond, CMOdot };

inline const char* product_kind_name(ProductKind k) {
  switch (k) {
    case ProductKind::LRSmash: return "lr-smash";
    case ProductKind::DiagonalCrossed: return "diagonal";
    case ProductKind::KadisonDiamond: return "diamond";
    case ProductKind::CMOdot: return "odot";
  }
  return "?";
}

struct ProductAlgebra {
  StructureAlgebra underlying;
  ProductKind kind;
  std::size_t factor_dim = 0;  // dim 𝒜 (or dim A for ⋄ and ⊙)
  std::size_t hopf_dim = 0;
};

namespace detail {

inline std::vector<std::string> product_labels(const std::vector<std::vector<std::string>>& factors) {
  std::vector<std::string> out{""};
  for (const auto& f : factors) {
    std::vector<std::string> next;
    for (const auto& prefix : out)
      for (const auto& l : f) next.push_back(prefix.empty() ? l : prefix + "⊗" + l);
    out = std::move(next);
  }
  return out;
}

inline StructureAlgebra assemble(const FieldSpec& field, std::vector<std::string> labels, Tensor3 mult, Vec unit) {
  std::size_t n = labels.size();
  return {field, n, std::move(labels), std::move(mult), std::move(unit)};
}

/// Adds c · (x ⊗ y) into acc, where y lives in a space of dimension dy.
inline void add_kron(Accumulator& acc, const Scalar& c, const Vec& x, const Vec& y) {
  for (const auto& [i, a] : x) {
    Scalar ca = c * a;
    for (const auto& [j, b] : y) acc.add(i * y.dim() + j, ca * b);
  }
}

inline void add_kron3(Accumulator& acc, const Scalar& c, const Vec& x, const Vec& y, const Vec& z) {
  std::size_t dy = y.dim(), dz = z.dim();
  for (const auto& [i, a] : x) {
    Scalar ca = c * a;
    for (const auto& [j, b] : y) {
      Scalar cab = ca * b;
      for (const auto& [k, e] : z) acc.add((i * dy + j) * dz + k, cab * e);
    }
  }
}

}  // namespace detail

/// (φ♮h)(φ'♮h') = (φ·h'₂)(h₁·φ') ♮ h₂h'₁
inline ProductAlgebra lr_smash(const BimoduleAlgebra& b) {
  const auto& H = b.hopf;
  const auto& P = b.alg;
  std::size_t n = P.dim, d = H.dim(), N = n * d;
  Sweedler sw(H, 2);
  Tensor3 mult(N, N, N);
  Accumulator acc(N), inner(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t j = 0; j < d; ++j) {
          for (const auto& t : sw.of(i))
            for (const auto& u : sw.of(j)) {
              P.mult.contract_into(b.right_act.slice(p, u.leg[1]), b.left_act.slice(t.leg[0], q), inner);
              detail::add_kron(acc, t.coeff * u.coeff, inner.take(), H.algebra.product(t.leg[1], u.leg[0]));
            }
          mult.set_slice(p * d + i, q * d + j, acc.take());
        }
  auto labels = detail::product_labels({P.basis_labels, H.algebra.basis_labels});
  return {detail::assemble(P.field, std::move(labels), std::move(mult), kron(P.unit, H.algebra.unit)),
          ProductKind::LRSmash, n, d};
}

/// (φ⋈h)(φ'⋈h') = φ(h₁·φ'·S⁻¹(h₃)) ⋈ h₂h'
inline ProductAlgebra diagonal_crossed(const BimoduleAlgebra& b) {
  const auto& H = b.hopf;
  const auto& P = b.alg;
  std::size_t n = P.dim, d = H.dim(), N = n * d;
  Sweedler sw(H, 3);
  std::vector<Vec> s_inv(d);
  for (std::size_t k = 0; k < d; ++k) s_inv[k] = H.S_inv(k);
  // h₁·φ'·S⁻¹(h₃), keyed by (h₁, φ', h₃)
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Vec> conj;
  auto conjugate = [&](std::size_t h1, std::size_t q, std::size_t h3) -> const Vec& {
    auto key = std::make_tuple(h1, q, h3);
    auto it = conj.find(key);
    if (it == conj.end()) it = conj.emplace(key, b.right_act.contract(b.left_act.slice(h1, q), s_inv[h3])).first;
    return it->second;
  };
  Tensor3 mult(N, N, N);
  Accumulator acc(N), inner(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t j = 0; j < d; ++j) {
          for (const auto& t : sw.of(i)) {
            for (const auto& [y, c] : conjugate(t.leg[0], q, t.leg[2])) inner.axpy(c, P.product(p, y));
            detail::add_kron(acc, t.coeff, inner.take(), H.algebra.product(t.leg[1], j));
          }
          mult.set_slice(p * d + i, q * d + j, acc.take());
        }
  auto labels = detail::product_labels({P.basis_labels, H.algebra.basis_labels});
  return {detail::assemble(P.field, std::move(labels), std::move(mult), kron(P.unit, H.algebra.unit)),
          ProductKind::DiagonalCrossed, n, d};
}

/// (a⊗b⊗h)(a'⊗b'⊗h') = a(h₁·a') ⊗ b'(S(h'₂)·b) ⊗ h₂h'₁, the second factor
/// multiplied in A (not A^op).
inline ProductAlgebra kadison_diamond(const LeftModuleAlgebra& m) {
  const auto& H = m.hopf;
  const auto& A = m.alg;
  std::size_t n = A.dim, d = H.dim(), N = n * n * d;
  Sweedler sw(H, 2);
  // S(e_k)·e_b
  std::vector<Vec> s_act(d * n);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t b = 0; b < n; ++b) s_act[k * n + b] = m.apply(H.S(k), A.basis(b));
  Tensor3 mult(N, N, N);
  Accumulator acc(N), first(n), second(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t h = 0; h < d; ++h)
        for (std::size_t a2 = 0; a2 < n; ++a2)
          for (std::size_t b2 = 0; b2 < n; ++b2)
            for (std::size_t h2 = 0; h2 < d; ++h2) {
              for (const auto& t : sw.of(h)) {
                for (const auto& [y, c] : m.apply(t.leg[0], a2)) first.axpy(c, A.product(a, y));
                Vec fa = first.take();
                if (fa.is_zero()) continue;
                for (const auto& u : sw.of(h2)) {
                  for (const auto& [y, c] : s_act[u.leg[1] * n + b]) second.axpy(c, A.product(b2, y));
                  detail::add_kron3(acc, t.coeff * u.coeff, fa, second.take(), H.algebra.product(t.leg[1], u.leg[0]));
                }
              }
              mult.set_slice((a * n + b) * d + h, (a2 * n + b2) * d + h2, acc.take());
            }
  auto labels = detail::product_labels({A.basis_labels, A.basis_labels, H.algebra.basis_labels});
  Vec unit = kron(kron(A.unit, A.unit), H.algebra.unit);
  return {detail::assemble(A.field, std::move(labels), std::move(mult), std::move(unit)),
          ProductKind::KadisonDiamond, n, d};
}

/// (a⊗h⊗b)(a'⊗h'⊗b') = a(h₁·a') ⊗ h₂h' ⊗ (h₃·b')b
inline ProductAlgebra cm_odot(const LeftModuleAlgebra& m) {
  const auto& H = m.hopf;
  const auto& A = m.alg;
  std::size_t n = A.dim, d = H.dim(), N = n * d * n;
  Sweedler sw(H, 3);
  Tensor3 mult(N, N, N);
  Accumulator acc(N), first(n), third(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t h = 0; h < d; ++h)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t a2 = 0; a2 < n; ++a2)
          for (std::size_t h2 = 0; h2 < d; ++h2)
            for (std::size_t b2 = 0; b2 < n; ++b2) {
              for (const auto& t : sw.of(h)) {
                for (const auto& [y, c] : m.apply(t.leg[0], a2)) first.axpy(c, A.product(a, y));
                Vec fa = first.take();
                if (fa.is_zero()) continue;
                for (const auto& [y, c] : m.apply(t.leg[2], b2)) third.axpy(c, A.product(y, b));
                detail::add_kron3(acc, t.coeff, fa, H.algebra.product(t.leg[1], h2), third.take());
              }
              mult.set_slice((a * d + h) * n + b, (a2 * d + h2) * n + b2, acc.take());
            }
  auto labels = detail::product_labels({A.basis_labels, H.algebra.basis_labels, A.basis_labels});
  Vec unit = kron(kron(A.unit, H.algebra.unit), A.unit);
  return {detail::assemble(A.field, std::move(labels), std::move(mult), std::move(unit)), ProductKind::CMOdot, n,
          d};
}

/// ν(φ⋈h) = φ·h₂ ♮ h₁, as a matrix 𝒜⋈H → 𝒜♮H.
inline Matrix iso_nu(const BimoduleAlgebra& b) {
  std::size_t n = b.alg.dim, d = b.hopf.dim();
  Sweedler sw(b.hopf, 2);
  Matrix out(n * d, n * d);
  Accumulator acc(n * d);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t i = 0; i < d; ++i) {
      for (const auto& t : sw.of(i))
        detail::add_kron(acc, t.coeff, b.right_act.slice(p, t.leg[1]), b.hopf.basis(t.leg[0]));
      out.set_column(p * d + i, acc.take());
    }
  return out;
}

/// ν⁻¹(φ♮h) = φ·S⁻¹(h₂) ⋈ h₁
inline Matrix iso_nu_inv(const BimoduleAlgebra& b) {
  std::size_t n = b.alg.dim, d = b.hopf.dim();
  Sweedler sw(b.hopf, 2);
  Matrix out(n * d, n * d);
  Accumulator acc(n * d);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t i = 0; i < d; ++i) {
      for (const auto& t : sw.of(i))
        detail::add_kron(acc, t.coeff, b.right_act.contract(b.alg.basis(p), b.hopf.S_inv(t.leg[1])),
                         b.hopf.basis(t.leg[0]));
      out.set_column(p * d + i, acc.take());
    }
  return out;
}

/// a⊗h⊗b ↦ (a⊗b)⋈h: A⊙H⊙A → (A⊗A^op)⋈H, a pure basis permutation.
inline Matrix iso_cm_to_diagonal(const LeftModuleAlgebra& m) {
  std::size_t n = m.alg.dim, d = m.hopf.dim(), N = n * n * d;
  Scalar one = m.alg.field.one();
  Matrix out(N, N);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t h = 0; h < d; ++h)
      for (std::size_t b = 0; b < n; ++b) out.set((a * n + b) * d + h, (a * d + h) * n + b, one);
  return out;
}

/// a⊗b⊗h ↦ a⊗h₁⊗h₂·b: (A⊗A^op)⋄H → A⊙H⊙A.
inline Matrix iso_diamond_to_odot(const LeftModuleAlgebra& m) {
  std::size_t n = m.alg.dim, d = m.hopf.dim(), N = n * n * d;
  Sweedler sw(m.hopf, 2);
  Matrix out(N, N);
  Accumulator acc(N);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t h = 0; h < d; ++h) {
        for (const auto& t : sw.of(h))
          detail::add_kron3(acc, t.coeff, m.alg.basis(a), m.hopf.basis(t.leg[0]), m.apply(t.leg[1], b));
        out.set_column((a * n + b) * d + h, acc.take());
      }
  return out;
}

/// a⊗h⊗b ↦ a⊗S(h₂)·b⊗h₁: A⊙H⊙A → (A⊗A^op)⋄H.
inline Matrix iso_odot_to_diamond(const LeftModuleAlgebra& m) {
  std::size_t n = m.alg.dim, d = m.hopf.dim(), N = n * n * d;
  Sweedler sw(m.hopf, 2);
  Matrix out(N, N);
  Accumulator acc(N);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t h = 0; h < d; ++h)
      for (std::size_t b = 0; b < n; ++b) {
        for (const auto& t : sw.of(h))
          detail::add_kron3(acc, t.coeff, m.alg.basis(a), m.apply(m.hopf.S(t.leg[1]), m.alg.basis(b)),
                            m.hopf.basis(t.leg[0]));
        out.set_column((a * d + h) * n + b, acc.take());
      }
  return out;
}

/// f(xy) = f(x)f(y) on basis pairs and f(1) = 1; with require_iso, also
/// that f is invertible.
inline CheckReport check_algebra_map(const Matrix& f, const StructureAlgebra& src, const StructureAlgebra& dst,
                                     bool require_iso = false) {
  CheckReport rep;
  rep.claim = require_iso ? "algebra-isomorphism" : "algebra-map";
  if (f.cols() != src.dim || f.rows() != dst.dim) {
    rep.run("shape", [&](Clause& cl) {
      cl.fail({std::int64_t(f.rows()), std::int64_t(f.cols()), std::int64_t(dst.dim), std::int64_t(src.dim)});
    });
    return rep;
  }
  std::vector<Vec> img = f.columns();
  rep.run("multiplicative", [&](Clause& cl) {
    Accumulator acc(dst.dim);
    for (std::size_t i = 0; i < src.dim; ++i)
      for (std::size_t j = 0; j < src.dim; ++j) {
        dst.mult.contract_into(img[i], img[j], acc);
        cl.expect(f.apply(src.product(i, j)) == acc.take(), {std::int64_t(i), std::int64_t(j)});
      }
  });
  rep.run("unital", [&](Clause& cl) { cl.expect(f.apply(src.unit) == dst.unit, {}); });
  if (require_iso) {
    rep.run("invertible", [&](Clause& cl) {
      if (f.rows() != f.cols()) {
        cl.fail_without_witness("not square");
        return;
      }
      try {
        (void)matrix_inverse(f);
      } catch (const SingularMatrix&) {
        cl.fail({std::int64_t(rank(f.columns(), f.rows()))});
      }
    });
  }
  return rep;
}

/// Literal equality of the structure constants of (A⊗A^op)⋄H and
/// (A⊗A^op)♮H under the identity basis identification.
inline CheckReport check_prop22_equality(const LeftModuleAlgebra& m) {
  CheckReport rep;
  rep.claim = "prop22";
  ProductAlgebra diamond = kadison_diamond(m);
  ProductAlgebra smash = lr_smash(enveloping_bimodule_algebra(m));
  const auto& x = diamond.underlying;
  const auto& y = smash.underlying;
  rep.run("structure_constants_equal", [&](Clause& cl) {
    if (x.dim != y.dim) {
      cl.fail({std::int64_t(x.dim), std::int64_t(y.dim)});
      return;
    }
    for (std::size_t i = 0; i < x.dim; ++i)
      for (std::size_t j = 0; j < x.dim; ++j) {
        if (x.product(i, j) == y.product(i, j)) continue;
        for (const auto& [k, v] : x.product(i, j) - y.product(i, j)) {
          (void)v;
          cl.fail({std::int64_t(i), std::int64_t(j), std::int64_t(k)});
        }
      }
  });
  rep.run("units_equal", [&](Clause& cl) { cl.expect(x.unit == y.unit, {}); });
  return rep;
}

/// ν and ν⁻¹ are mutually inverse algebra isomorphisms 𝒜⋈H ⇄ 𝒜♮H.
inline CheckReport verify_nu_isomorphism(const BimoduleAlgebra& b) {
  CheckReport rep;
  rep.claim = "prop21";
  StructureAlgebra smash = lr_smash(b).underlying, diag = diagonal_crossed(b).underlying;
  rep.add(check_algebra(smash).summarize("lr_smash_algebra"));
  rep.add(check_algebra(diag).summarize("diagonal_algebra"));
  Matrix nu = iso_nu(b), nu_inv = iso_nu_inv(b);
  rep.absorb(check_algebra_map(nu, diag, smash, true), "nu");
  rep.absorb(check_algebra_map(nu_inv, smash, diag, true), "nu_inv");
  rep.run("mutually_inverse", [&](Clause& cl) {
    cl.expect((nu * nu_inv).is_identity(), {0});
    cl.expect((nu_inv * nu).is_identity(), {1});
  });
  return rep;
}

/// A⊙H⊙A → (A⊗A^op)⋈H, a⊗h⊗b ↦ (a⊗b)⋈h, is an algebra isomorphism.
inline CheckReport verify_cm_diagonal_isomorphism(const LeftModuleAlgebra& m) {
  CheckReport rep;
  rep.claim = "prop23";
  StructureAlgebra odot = cm_odot(m).underlying;
  StructureAlgebra diag = diagonal_crossed(enveloping_bimodule_algebra(m)).underlying;
  rep.add(check_algebra(odot).summarize("odot_algebra"));
  rep.add(check_algebra(diag).summarize("diagonal_algebra"));
  rep.absorb(check_algebra_map(iso_cm_to_diagonal(m), odot, diag, true), "iso");
  return rep;
}

/// The explicit pair ⋄ ⇄ ⊙: both algebra isomorphisms, mutually inverse,
/// and the forward map equals the composite ⋄ = ♮ → ⋈ → ⊙ through ν⁻¹ and
/// the inverse of the ⊙ → ⋈ permutation.
inline CheckReport verify_diamond_odot_isomorphism(const LeftModuleAlgebra& m) {
  CheckReport rep;
  rep.claim = "cor24";
  StructureAlgebra diamond = kadison_diamond(m).underlying, odot = cm_odot(m).underlying;
  rep.add(check_algebra(diamond).summarize("diamond_algebra"));
  rep.add(check_algebra(odot).summarize("odot_algebra"));
  Matrix fwd = iso_diamond_to_odot(m), bwd = iso_odot_to_diamond(m);
  rep.absorb(check_algebra_map(fwd, diamond, odot, true), "forward");
  rep.absorb(check_algebra_map(bwd, odot, diamond, true), "backward");
  rep.run("mutually_inverse", [&](Clause& cl) {
    cl.expect((fwd * bwd).is_identity(), {0});
    cl.expect((bwd * fwd).is_identity(), {1});
  });
  rep.run("composite_diagram", [&](Clause& cl) {
    Matrix composite = matrix_inverse(iso_cm_to_diagonal(m)) * iso_nu_inv(enveloping_bimodule_algebra(m));
    for (std::size_t c = 0; c < fwd.cols(); ++c)
      cl.expect(composite.column(c) == fwd.column(c), {std::int64_t(c)});
  });
  return rep;
}

}  // namespace hopfalg
