#include "generators.hpp"

#include <gtest/gtest.h>

using namespace hopfalg;

namespace {

using Dense = std::vector<Scalar>;

// Dense helpers that read only the raw structure tensors, for oracles.
Dense dense_mult(const StructureAlgebra& a, const Dense& x, const Dense& y) {
  Dense out(a.dim, a.field.zero());
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      if (x[i].is_zero() || y[j].is_zero()) continue;
      for (std::size_t k = 0; k < a.dim; ++k) out[k] += x[i] * y[j] * a.mult.at(i, j, k);
    }
  return out;
}

Dense dense_act(const LeftModuleAlgebra& m, const Dense& h, const Dense& a) {
  std::size_t n = m.alg.dim;
  Dense out(n, m.alg.field.zero());
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[k] += h[i] * a[j] * m.act.at(i, j, k);
  return out;
}

Dense unit_vec(std::size_t n, std::size_t i, const FieldSpec& f) {
  Dense d(n, f.zero());
  d[i] = f.one();
  return d;
}

Dense dense_S(const HopfAlgebra& h, std::size_t i) {
  Dense d(h.dim(), h.field().zero());
  for (std::size_t k = 0; k < h.dim(); ++k) d[k] = h.antipode.at(k, i);
  return d;
}

/// ⋄ product of basis elements expanded straight from the comultiplication
/// tensor: a(h₁·a') ⊗ b'(S(h'₂)·b) ⊗ h₂h'₁.
Dense oracle_diamond(const LeftModuleAlgebra& m, std::size_t a, std::size_t b, std::size_t h, std::size_t a2,
                     std::size_t b2, std::size_t h2) {
  const auto& A = m.alg;
  const auto& H = m.hopf;
  const FieldSpec& f = A.field;
  std::size_t n = A.dim, d = H.dim();
  Dense out(n * n * d, f.zero());
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) {
      Scalar c = H.coalgebra.comult.at(h, p, q);
      if (c.is_zero()) continue;
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t s = 0; s < d; ++s) {
          Scalar c2 = H.coalgebra.comult.at(h2, r, s);
          if (c2.is_zero()) continue;
          Dense first = dense_mult(A, unit_vec(n, a, f), dense_act(m, unit_vec(d, p, f), unit_vec(n, a2, f)));
          Dense second = dense_mult(A, unit_vec(n, b2, f), dense_act(m, dense_S(H, s), unit_vec(n, b, f)));
          Dense third = dense_mult(H.algebra, unit_vec(d, q, f), unit_vec(d, r, f));
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
              for (std::size_t k = 0; k < d; ++k) out[(i * n + j) * d + k] += c * c2 * first[i] * second[j] * third[k];
        }
    }
  return out;
}

/// ♮ product on A ⊗ A^op, from its own formula: (φ·h'₂)(h₁·φ') ♮ h₂h'₁ with
/// (a⊗b)·k = a ⊗ S(k)·b, k·(a⊗b) = k·a ⊗ b, multiplied in A ⊗ A^op.
Dense oracle_smash(const LeftModuleAlgebra& m, std::size_t a, std::size_t b, std::size_t h, std::size_t a2,
                   std::size_t b2, std::size_t h2) {
  const auto& A = m.alg;
  const auto& H = m.hopf;
  const FieldSpec& f = A.field;
  std::size_t n = A.dim, d = H.dim();
  StructureAlgebra aop = opposite(A);
  Dense out(n * n * d, f.zero());
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) {
      Scalar c = H.coalgebra.comult.at(h, p, q);
      if (c.is_zero()) continue;
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t s = 0; s < d; ++s) {
          Scalar c2 = H.coalgebra.comult.at(h2, r, s);
          if (c2.is_zero()) continue;
          // φ·h'₂ = a ⊗ S(h'₂)·b ; h₁·φ' = h₁·a' ⊗ b'
          Dense left1 = unit_vec(n, a, f), left2 = dense_act(m, dense_S(H, s), unit_vec(n, b, f));
          Dense right1 = dense_act(m, unit_vec(d, p, f), unit_vec(n, a2, f)), right2 = unit_vec(n, b2, f);
          Dense first = dense_mult(A, left1, right1);
          Dense second = dense_mult(aop, left2, right2);
          Dense third = dense_mult(H.algebra, unit_vec(d, q, f), unit_vec(d, r, f));
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
              for (std::size_t k = 0; k < d; ++k) out[(i * n + j) * d + k] += c * c2 * first[i] * second[j] * third[k];
        }
    }
  return out;
}

Vec as_vec(const Dense& d) { return Vec::from_dense(d); }

const std::vector<std::string> kPairs = {"c2", "h4"};

}  // namespace

TEST(Prop22, OraclesAgreeWithEachOtherAndWithLibrary) {
  for (const auto& f : gen::fields())
    for (const auto& name : kPairs) {
      LeftModuleAlgebra m = instance_by_name(name, f);
      StructureAlgebra diamond = kadison_diamond(m).underlying;
      StructureAlgebra smash = lr_smash(enveloping_bimodule_algebra(m)).underlying;
      std::size_t n = m.alg.dim, d = m.hopf.dim();
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t h = 0; h < d; ++h)
            for (std::size_t a2 = 0; a2 < n; ++a2)
              for (std::size_t b2 = 0; b2 < n; ++b2)
                for (std::size_t h2 = 0; h2 < d; ++h2) {
                  Vec od = as_vec(oracle_diamond(m, a, b, h, a2, b2, h2));
                  Vec os = as_vec(oracle_smash(m, a, b, h, a2, b2, h2));
                  std::size_t i = (a * n + b) * d + h, j = (a2 * n + b2) * d + h2;
                  ASSERT_EQ(od, os) << name;
                  ASSERT_EQ(diamond.product(i, j), od) << name;
                  ASSERT_EQ(smash.product(i, j), os) << name;
                }
      EXPECT_TRUE(check_prop22_equality(m).all_pass());
    }
}

TEST(Diamond, HandExpansionOnC2) {
  LeftModuleAlgebra m = instance_by_name("c2");
  StructureAlgebra t = kadison_diamond(m).underlying;
  // index (a, b, h) -> (a*2 + b)*2 + h; g = 1
  // (e0⊗e0⊗g)(e1⊗e0⊗1) = e0(g·e1) ⊗ e0(1·e0) ⊗ g = e0⊗e0⊗g
  EXPECT_EQ(t.product(1, 4), t.basis(1));
  // (e0⊗e0⊗g)(e0⊗e0⊗g) = e0(g·e0) ⊗ e0(g·e0) ⊗ 1 = 0
  EXPECT_TRUE(t.product(1, 1).is_zero());
}

TEST(Products, GrouplikeFormulas) {
  // For group algebras every basis element is grouplike; check ⋈ and ⊙ against
  // φ(g·φ'·g⁻¹) ⋈ gg' and a(g·a') ⊗ gg' ⊗ (g·b')b.
  for (const auto& name : {"c2", "s3-sign"}) {
    LeftModuleAlgebra m = instance_by_name(name);
    const auto& A = m.alg;
    const auto& H = m.hopf;
    std::size_t n = A.dim, d = H.dim();
    BimoduleAlgebra env = enveloping_bimodule_algebra(m);
    StructureAlgebra diag = diagonal_crossed(env).underlying, odot = cm_odot(m).underlying;
    for (std::size_t p = 0; p < n * n; ++p)
      for (std::size_t g = 0; g < d; ++g)
        for (std::size_t q = 0; q < n * n; ++q)
          for (std::size_t g2 = 0; g2 < d; ++g2) {
            Vec conj = env.right_act.contract(env.left_act.slice(g, q), H.S(g));
            Vec expect = kron(env.alg.multiply(env.alg.basis(p), conj), H.algebra.product(g, g2));
            EXPECT_EQ(diag.product(p * d + g, q * d + g2), expect);
          }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t g = 0; g < d; ++g)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t a2 = 0; a2 < n; ++a2)
            for (std::size_t g2 = 0; g2 < d; ++g2)
              for (std::size_t b2 = 0; b2 < n; ++b2) {
                Vec expect = kron(kron(A.multiply(A.basis(a), m.apply(g, a2)), H.algebra.product(g, g2)),
                                  A.multiply(m.apply(g, b2), A.basis(b)));
                EXPECT_EQ(odot.product((a * d + g) * n + b, (a2 * d + g2) * n + b2), expect);
              }
  }
}

TEST(Products, TrivialHopfDegenerates) {
  LeftModuleAlgebra m = instance_by_name("c2");
  LeftModuleAlgebra k{trivial_hopf(), m.alg, Tensor3(1, 2, 2)};
  k.act.set(0, 0, 0, Scalar(1));
  k.act.set(0, 1, 1, Scalar(1));
  StructureAlgebra env = tensor_algebra(m.alg, opposite(m.alg));
  EXPECT_EQ(kadison_diamond(k).underlying.mult, env.mult);
  EXPECT_EQ(lr_smash(enveloping_bimodule_algebra(k)).underlying.mult, env.mult);
  EXPECT_EQ(diagonal_crossed(enveloping_bimodule_algebra(k)).underlying.mult, env.mult);
  EXPECT_TRUE(iso_nu(enveloping_bimodule_algebra(k)).is_identity());
}

TEST(Products, AllProductsAreAssociativeUnital) {
  for (const auto& f : gen::fields())
    for (const auto& inst : all_instances(f)) {
      if (inst.name == "s3") continue;  // dim 216 products: covered by the acceptance run
      const auto& m = inst.module;
      BimoduleAlgebra env = enveloping_bimodule_algebra(m);
      for (const auto& p : {lr_smash(env), diagonal_crossed(env), kadison_diamond(m), cm_odot(m)}) {
        EXPECT_EQ(p.underlying.dim, m.alg.dim * m.alg.dim * m.hopf.dim());
        EXPECT_TRUE(check_algebra(p.underlying).all_pass()) << inst.name << " " << product_kind_name(p.kind);
      }
    }
}

TEST(Isomorphisms, ExplicitValues) {
  LeftModuleAlgebra m = instance_by_name("c2");
  // e0⊗e1⊗g ↦ e0⊗g⊗g·e1 = e0⊗g⊗e0; source (0*2+1)*2+1, target (0*2+1)*2+0
  Matrix phi = iso_diamond_to_odot(m);
  EXPECT_EQ(phi.column(3), Vec::basis(8, 2));
  // a⊗1⊗1 ↦ (a⊗1)⋈1
  Matrix p23 = iso_cm_to_diagonal(m);
  EXPECT_EQ(p23.apply(kron(kron(m.alg.basis(1), m.hopf.algebra.unit), m.alg.unit)),
            kron(kron(m.alg.basis(1), m.alg.unit), m.hopf.algebra.unit));
  // ν(φ⋈g) = φ·g ♮ g
  BimoduleAlgebra env = enveloping_bimodule_algebra(m);
  Matrix nu = iso_nu(env);
  for (std::size_t p = 0; p < 4; ++p) EXPECT_EQ(nu.column(p * 2 + 1), kron(env.right_act.slice(p, 1), m.hopf.basis(1)));
}

TEST(Isomorphisms, VerifiersPassOnCatalogPairs) {
  for (const auto& f : gen::fields())
    for (const auto& name : kPairs) {
      LeftModuleAlgebra m = instance_by_name(name, f);
      EXPECT_TRUE(verify_nu_isomorphism(enveloping_bimodule_algebra(m)).all_pass()) << name;
      EXPECT_TRUE(verify_cm_diagonal_isomorphism(m).all_pass()) << name;
      CheckReport cor = verify_diamond_odot_isomorphism(m);
      EXPECT_TRUE(cor.all_pass()) << name;
      EXPECT_EQ(cor.status_of("composite_diagram"), Status::Pass);
    }
}

TEST(IsomorphismsNegative, CorruptedNuFailsWithWitnessPair) {
  LeftModuleAlgebra m = instance_by_name("h4");
  BimoduleAlgebra env = enveloping_bimodule_algebra(m);
  Matrix nu = iso_nu(env);
  nu.set(0, 5, nu.at(0, 5) + Scalar(1));
  CheckReport rep = check_algebra_map(nu, diagonal_crossed(env).underlying, lr_smash(env).underlying);
  EXPECT_EQ(rep.status_of("multiplicative"), Status::Fail);
  EXPECT_EQ(rep.find("multiplicative")->witnesses.front().size(), 2u);
  EXPECT_TRUE(check_algebra_map(Matrix::identity(16), kadison_diamond(m).underlying, kadison_diamond(m).underlying, true)
                  .all_pass());
}

TEST(IsomorphismsProperty, NuIsMultiplicativeOnRandomElements) {
  gen::Rng rng(13);
  for (const auto& f : gen::fields()) {
    LeftModuleAlgebra m = instance_by_name("h4", f);
    BimoduleAlgebra env = enveloping_bimodule_algebra(m);
    StructureAlgebra diag = diagonal_crossed(env).underlying, smash = lr_smash(env).underlying;
    Matrix nu = iso_nu(env), nu_inv = iso_nu_inv(env);
    for (int it = 0; it < 50; ++it) {
      Vec x = rng.vec(f, 16), y = rng.vec(f, 16);
      EXPECT_EQ(nu.apply(diag.multiply(x, y)), smash.multiply(nu.apply(x), nu.apply(y)));
      EXPECT_EQ(nu_inv.apply(nu.apply(x)), x);
    }
  }
}
