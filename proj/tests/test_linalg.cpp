#include "generators.hpp"

#include <gtest/gtest.h>

using namespace hopfalg;

namespace {

Vec v(std::initializer_list<int> xs) {
  std::vector<Scalar> s;
  for (int x : xs) s.emplace_back(x);
  return Vec::from_dense(s);
}

// Naive dense Gaussian elimination over BigRational, used as a rank oracle.
std::size_t oracle_rank(const std::vector<Vec>& rows, std::size_t ncols) {
  std::vector<std::vector<BigRational>> m;
  for (const auto& r : rows) {
    std::vector<BigRational> d(ncols);
    for (const auto& [i, x] : r) d[i] = x.to_big();
    m.push_back(d);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      BigRational k = m[r][c] / m[rank][c];
      for (std::size_t j = 0; j < ncols; ++j) m[r][j] -= k * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST(Vec, SparseOperations) {
  Vec a = v({1, 0, 2}), b = v({-1, 3, 0});
  EXPECT_EQ(a.nnz(), 2u);
  EXPECT_EQ(a + b, v({0, 3, 2}));
  EXPECT_EQ((a + b).nnz(), 2u);
  EXPECT_EQ(a - a, Vec(3));
  EXPECT_EQ(a.scaled(Scalar(0)), Vec(3));
  EXPECT_EQ(a.at(2), Scalar(2));
  a.set(2, Scalar(0));
  EXPECT_EQ(a.nnz(), 1u);
  EXPECT_THROW(a.set(3, Scalar(1)), DimensionError);
  EXPECT_THROW((void)(a + Vec(2)), DimensionError);
}

TEST(Vec, KronFlattening) {
  // (x ⊗ y)[i * dim(y) + j] = x[i] y[j]
  Vec k = kron(v({1, 2}), v({0, 3, 5}));
  EXPECT_EQ(k, v({0, 3, 5, 0, 6, 10}));
}

TEST(Matrix, ActsOnColumns) {
  Matrix m = Matrix::from_table({{Scalar(1), Scalar(2)}, {Scalar(3), Scalar(4)}});
  EXPECT_EQ(m.column(0), v({1, 3}));
  EXPECT_EQ(m.apply(v({1, 1})), v({3, 7}));
  EXPECT_EQ((m * m).column(1), v({10, 22}));
  EXPECT_EQ(m.transpose().column(0), v({1, 2}));
  EXPECT_TRUE(Matrix::identity(3).is_identity());
  EXPECT_FALSE(m.is_identity());
}

TEST(MatrixProperty, DenseAndSparseStorageAgree) {
  gen::Rng rng(3);
  for (int it = 0; it < 40; ++it) {
    std::size_t r = std::size_t(rng.integer(1, 9)), k = std::size_t(rng.integer(1, 9)), c = std::size_t(rng.integer(1, 9));
    Matrix a = rng.matrix(FieldSpec::rationals(), r, k), b = rng.matrix(FieldSpec::rationals(), k, c);
    Matrix as(r, k, Matrix::Storage::Sparse), bs(k, c, Matrix::Storage::Sparse);
    for (std::size_t j = 0; j < k; ++j) as.set_column(j, a.column(j));
    for (std::size_t j = 0; j < c; ++j) bs.set_column(j, b.column(j));
    Matrix p = a * b, ps = as * bs;
    for (std::size_t j = 0; j < c; ++j) EXPECT_EQ(p.column(j), ps.column(j));
    Vec x = rng.vec(FieldSpec::rationals(), k);
    EXPECT_EQ(a.apply(x), as.apply(x));
  }
}

TEST(Rref, KnownExample) {
  Rref r = rref({v({1, 2, 3}), v({2, 4, 6}), v({1, 0, 1})}, 3);
  ASSERT_EQ(r.rank(), 2u);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.rows[0], v({1, 0, 1}));
  EXPECT_EQ(r.rows[1], v({0, 1, 1}));
}

TEST(RrefProperty, RankMatchesOracleAndIsCanonical) {
  gen::Rng rng(17);
  for (int it = 0; it < 60; ++it) {
    std::size_t rows = std::size_t(rng.integer(1, 10)), cols = std::size_t(rng.integer(1, 10));
    std::vector<Vec> in;
    for (std::size_t i = 0; i < rows; ++i) in.push_back(rng.vec(FieldSpec::rationals(), cols, 0.6));
    // duplicate combinations to force dependencies
    if (rows > 2) in.push_back(in[0] + in[1].scaled(Scalar::rational(-2, 3)));
    Rref r = rref(in, cols);
    EXPECT_EQ(r.rank(), oracle_rank(in, cols));
    std::vector<Vec> shuffled = in;
    std::shuffle(shuffled.begin(), shuffled.end(), rng.engine());
    Rref r2 = rref(shuffled, cols);
    EXPECT_EQ(r.pivots, r2.pivots);
    for (std::size_t i = 0; i < r.rank(); ++i) EXPECT_EQ(r.rows[i], r2.rows[i]);
  }
}

TEST(KernelProperty, KernelIsAnnihilatedAndComplementary) {
  gen::Rng rng(23);
  for (const auto& f : gen::fields())
    for (int it = 0; it < 40; ++it) {
      std::size_t rows = std::size_t(rng.integer(1, 8)), cols = std::size_t(rng.integer(1, 8));
      Matrix m = rng.matrix(f, rows, cols, 0.6);
      KernelResult k = rref_kernel(m);
      EXPECT_EQ(k.rank + k.kernel_basis.size(), cols);
      for (const auto& z : k.kernel_basis) EXPECT_TRUE(m.apply(z).is_zero());
      EXPECT_EQ(rank(k.kernel_basis, cols), k.kernel_basis.size());
    }
}

TEST(MatrixInverse, InvertsAndDetectsSingular) {
  gen::Rng rng(29);
  for (const auto& f : gen::fields())
    for (int it = 0; it < 30; ++it) {
      std::size_t n = std::size_t(rng.integer(1, 8));
      Matrix m = rng.invertible(f, n);
      Matrix inv = matrix_inverse(m);
      EXPECT_TRUE((m * inv).is_identity());
      EXPECT_TRUE((inv * m).is_identity());
    }
  Matrix s = Matrix::from_table({{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}});
  EXPECT_THROW(matrix_inverse(s), SingularMatrix);
  EXPECT_EQ(matrix_inverse(Matrix(0, 0)).rows(), 0u);
}

TEST(Quotient, ProjectionKillsRelations) {
  QuotientSpace q = build_quotient(3, {v({1, -1, 0})});
  EXPECT_EQ(q.quot_dim(), 2u);
  EXPECT_TRUE(q.project(v({1, -1, 0})).is_zero());
  EXPECT_EQ(q.project(v({1, 0, 0})), q.project(v({0, 1, 0})));
  EXPECT_TRUE((q.proj * q.section).is_identity());
}

TEST(QuotientProperty, RandomRelations) {
  gen::Rng rng(31);
  for (int it = 0; it < 30; ++it) {
    std::size_t n = std::size_t(rng.integer(1, 10)), k = std::size_t(rng.integer(0, 6));
    std::vector<Vec> rel;
    for (std::size_t i = 0; i < k; ++i) rel.push_back(rng.vec(FieldSpec::rationals(), n, 0.5));
    QuotientSpace q = build_quotient(n, rel);
    EXPECT_EQ(q.quot_dim(), n - oracle_rank(rel, n));
    for (const auto& r : rel) EXPECT_TRUE(q.project(r).is_zero());
    EXPECT_TRUE((q.proj * q.section).is_identity());
  }
}

TEST(TensorOfMaps, MatchesKronOnBasis) {
  Matrix f = Matrix::from_table({{Scalar(1), Scalar(2)}, {Scalar(0), Scalar(1)}});
  Matrix g = Matrix::from_table({{Scalar(3)}, {Scalar(-1)}});
  Matrix fg = tensor_of_maps(f, g);
  EXPECT_EQ(fg.rows(), 4u);
  EXPECT_EQ(fg.cols(), 2u);
  EXPECT_EQ(fg.column(1), kron(f.column(1), g.column(0)));
}

TEST(Tensor3, ContractBilinear) {
  Tensor3 t(2, 2, 2);
  t.set(0, 1, 1, Scalar(2));
  t.set(1, 1, 0, Scalar(-1));
  EXPECT_EQ(t.contract(v({1, 1}), v({0, 1})), v({-1, 2}));
  EXPECT_EQ(t.nnz(), 2u);
}
