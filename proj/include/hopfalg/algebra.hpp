#pragma once

// Finite-dimensional algebras, coalgebras and Hopf algebras given by
// structure constants, with brute-force axiom checkers.

#include "hopfalg/linalg.hpp"
#include "hopfalg/report.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace hopfalg {

inline Vec embed(const FieldSpec& f, const Vec& v) {
  if (!f.is_prime_field()) return v;
  std::vector<Vec::Entry> out;
  for (const auto& [i, x] : v) {
    Scalar y = f.embed(x);
    if (!y.is_zero()) out.emplace_back(i, y);
  }
  return Vec::from_sorted(v.dim(), std::move(out));
}

inline Tensor3 embed(const FieldSpec& f, const Tensor3& t) {
  if (!f.is_prime_field()) return t;
  Tensor3 out(t.dim0(), t.dim1(), t.dim2());
  for (std::size_t i = 0; i < t.dim0(); ++i)
    for (std::size_t j = 0; j < t.dim1(); ++j) out.set_slice(i, j, embed(f, t.slice(i, j)));
  return out;
}

inline Matrix embed(const FieldSpec& f, const Matrix& m) {
  if (!f.is_prime_field()) return m;
  Matrix out(m.rows(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) out.set_column(j, embed(f, m.column(j)));
  return out;
}

/// Unital associative algebra: mult[i][j] is the coordinate vector of e_i e_j.
struct StructureAlgebra {
  FieldSpec field;
  std::size_t dim = 0;
  std::vector<std::string> basis_labels;
  Tensor3 mult;
  Vec unit;

  static StructureAlgebra make(FieldSpec field, std::vector<std::string> labels, Tensor3 mult, Vec unit) {
    std::size_t n = labels.size();
    if (mult.dim0() != n || mult.dim1() != n || mult.dim2() != n || unit.dim() != n)
      throw DimensionError("algebra structure constants do not match the basis size");
    return {field, n, std::move(labels), embed(field, mult), embed(field, unit)};
  }

  Vec basis(std::size_t i) const { return Vec::basis(dim, i, field.one()); }
  const Vec& product(std::size_t i, std::size_t j) const { return mult.slice(i, j); }
  Vec multiply(const Vec& x, const Vec& y) const { return mult.contract(x, y); }

  /// Matrix of y ↦ x y.
  Matrix left_mult(const Vec& x) const {
    Matrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) m.set_column(j, multiply(x, basis(j)));
    return m;
  }
  /// Matrix of y ↦ y x.
  Matrix right_mult(const Vec& x) const {
    Matrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) m.set_column(j, multiply(basis(j), x));
    return m;
  }

  friend bool operator==(const StructureAlgebra& a, const StructureAlgebra& b) {
    return a.field == b.field && a.dim == b.dim && a.mult == b.mult && a.unit == b.unit;
  }
};

/// comult[i][j][k] = coefficient of e_j ⊗ e_k in Δ(e_i).
struct Coalgebra {
  std::size_t dim = 0;
  Tensor3 comult;
  Vec counit;

  /// Δ(e_i) flattened into dim² coordinates.
  Vec coproduct(std::size_t i) const {
    std::vector<Vec::Entry> out;
    for (std::size_t j = 0; j < dim; ++j)
      for (const auto& [k, c] : comult.slice(i, j)) out.emplace_back(j * dim + k, c);
    return Vec::from_sorted(dim * dim, std::move(out));
  }

  Matrix comult_map() const {
    Matrix m(dim * dim, dim);
    for (std::size_t i = 0; i < dim; ++i) m.set_column(i, coproduct(i));
    return m;
  }

  Scalar counit_of(const Vec& x) const {
    Scalar s(0);
    for (const auto& [i, c] : x) s += c * counit.at(i);
    return s;
  }

  friend bool operator==(const Coalgebra&, const Coalgebra&) = default;
};

struct HopfAlgebra {
  StructureAlgebra algebra;
  Coalgebra coalgebra;
  Matrix antipode;
  Matrix antipode_inv;

  /// Embeds all data into the algebra's field; computes S⁻¹ when not given
  /// and validates it otherwise. Throws SingularMatrix for a non-bijective S.
  static HopfAlgebra make(StructureAlgebra algebra, Tensor3 comult, Vec counit, Matrix antipode,
                          const Matrix* antipode_inv = nullptr) {
    const FieldSpec& f = algebra.field;
    std::size_t n = algebra.dim;
    if (comult.dim0() != n || comult.dim1() != n || comult.dim2() != n || counit.dim() != n ||
        antipode.rows() != n || antipode.cols() != n)
      throw DimensionError("Hopf structure constants do not match the basis size");
    Matrix s = embed(f, antipode);
    Matrix s_inv;
    if (antipode_inv) {
      s_inv = embed(f, *antipode_inv);
      if (!(s * s_inv).is_identity() || !(s_inv * s).is_identity())
        throw SingularMatrix("stored antipode inverse does not invert the antipode");
    } else {
      s_inv = matrix_inverse(s);
    }
    return {std::move(algebra), Coalgebra{n, embed(f, comult), embed(f, counit)}, std::move(s), std::move(s_inv)};
  }

  std::size_t dim() const { return algebra.dim; }
  const FieldSpec& field() const { return algebra.field; }
  Vec basis(std::size_t i) const { return algebra.basis(i); }
  Vec S(const Vec& x) const { return antipode.apply(x); }
  Vec S_inv(const Vec& x) const { return antipode_inv.apply(x); }
  Vec S(std::size_t i) const { return antipode.column(i); }
  Vec S_inv(std::size_t i) const { return antipode_inv.column(i); }
  Scalar eps(std::size_t i) const { return coalgebra.counit.at(i); }
  Scalar eps(const Vec& x) const { return coalgebra.counit_of(x); }

  friend bool operator==(const HopfAlgebra& a, const HopfAlgebra& b) {
    return a.algebra == b.algebra && a.coalgebra == b.coalgebra && a.antipode == b.antipode &&
           a.antipode_inv == b.antipode_inv;
  }
};

enum class Slot { Last, First };

/// Δ^(n): H → H^{⊗n}. n = 1 is the identity; each step applies Δ to the
/// last (or first) tensor slot.
inline Matrix iterated_coproduct(const HopfAlgebra& h, std::size_t n, Slot slot = Slot::Last) {
  if (n == 0) throw std::invalid_argument("iterated_coproduct: n must be >= 1");
  std::size_t d = h.dim();
  Matrix cur = Matrix::identity(d, h.field().one());
  std::vector<Vec> delta(d);
  for (std::size_t i = 0; i < d; ++i) delta[i] = h.coalgebra.coproduct(i);
  std::size_t width = d;  // d^k
  for (std::size_t k = 1; k < n; ++k) {
    Matrix next(width * d, d);
    Accumulator acc(width * d);
    for (std::size_t col = 0; col < d; ++col) {
      for (const auto& [idx, c] : cur.column(col)) {
        if (slot == Slot::Last) {
          std::size_t prefix = idx / d, last = idx % d;
          for (const auto& [jk, x] : delta[last]) acc.add(prefix * d * d + jk, c * x);
        } else {
          std::size_t first = idx / (width / d), rest = idx % (width / d);
          for (const auto& [jk, x] : delta[first]) acc.add(jk * (width / d) + rest, c * x);
        }
      }
      next.set_column(col, acc.take());
    }
    cur = std::move(next);
    width *= d;
  }
  return cur;
}

/// Sweedler expansion of basis elements: Δ^(n)(e_i) = Σ c · e_{i1} ⊗ … ⊗ e_{in}.
class Sweedler {
 public:
  static constexpr std::size_t kMaxLegs = 4;
  struct Term {
    std::array<std::size_t, kMaxLegs> leg{};
    Scalar coeff;
  };

  Sweedler(const HopfAlgebra& h, std::size_t n) : terms_(h.dim()) {
    if (n == 0 || n > kMaxLegs) throw std::invalid_argument("Sweedler: unsupported number of legs");
    std::size_t d = h.dim();
    Matrix delta = iterated_coproduct(h, n);
    for (std::size_t i = 0; i < d; ++i) {
      for (const auto& [idx, c] : delta.column(i)) {
        Term t;
        std::size_t rest = idx;
        for (std::size_t k = n; k-- > 0;) {
          t.leg[k] = rest % d;
          rest /= d;
        }
        t.coeff = c;
        terms_[i].push_back(std::move(t));
      }
    }
  }

  const std::vector<Term>& of(std::size_t i) const { return terms_.at(i); }

 private:
  std::vector<std::vector<Term>> terms_;
};

inline CheckReport check_algebra(const StructureAlgebra& a, const std::string& prefix = "") {
  CheckReport rep;
  rep.claim = "algebra";
  std::size_t n = a.dim;
  rep.run(prefix + "associativity", [&](Clause& cl) {
    Accumulator lhs(n), rhs(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vec& ij = a.product(i, j);
        for (std::size_t k = 0; k < n; ++k) {
          for (const auto& [m, c] : ij) lhs.axpy(c, a.product(m, k));
          for (const auto& [m, c] : a.product(j, k)) rhs.axpy(c, a.product(i, m));
          Vec l = lhs.take(), r = rhs.take();
          if (l == r) continue;
          for (const auto& [out, x] : l - r) {
            (void)x;
            cl.fail({std::int64_t(i), std::int64_t(j), std::int64_t(k), std::int64_t(out)});
          }
        }
      }
  });
  rep.run(prefix + "unit", [&](Clause& cl) {
    if (a.unit.dim() != n) {
      cl.fail_without_witness("unit has wrong length");
      return;
    }
    for (std::size_t i = 0; i < n; ++i) {
      Vec e = a.basis(i);
      cl.expect(a.multiply(a.unit, e) == e, {std::int64_t(i), 0});
      cl.expect(a.multiply(e, a.unit) == e, {std::int64_t(i), 1});
    }
  });
  return rep;
}

inline StructureAlgebra opposite(const StructureAlgebra& a) {
  StructureAlgebra op = a;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) op.mult.set_slice(i, j, a.product(j, i));
  for (auto& l : op.basis_labels) l += "'";
  return op;
}

inline StructureAlgebra tensor_algebra(const StructureAlgebra& a, const StructureAlgebra& b) {
  if (!(a.field == b.field)) throw FieldError("tensor_algebra: field mismatch");
  std::size_t n = a.dim * b.dim;
  std::vector<std::string> labels;
  for (const auto& x : a.basis_labels)
    for (const auto& y : b.basis_labels) labels.push_back(x + "⊗" + y);
  Tensor3 mult(n, n, n);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k)
        for (std::size_t l = 0; l < b.dim; ++l)
          mult.set_slice(i * b.dim + j, k * b.dim + l, kron(a.product(i, k), b.product(j, l)));
  return {a.field, n, std::move(labels), std::move(mult), kron(a.unit, b.unit)};
}

inline Coalgebra tensor_coalgebra(const Coalgebra& a, const Coalgebra& b) {
  std::size_t n = a.dim * b.dim;
  Tensor3 comult(n, n, n);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j)
      for (std::size_t i1 = 0; i1 < a.dim; ++i1)
        for (const auto& [i2, x] : a.comult.slice(i, i1))
          for (std::size_t j1 = 0; j1 < b.dim; ++j1)
            for (const auto& [j2, y] : b.comult.slice(j, j1)) {
              std::size_t src = i * b.dim + j, l = i1 * b.dim + j1, r = i2 * b.dim + j2;
              comult.set(src, l, r, comult.at(src, l, r) + x * y);
            }
  return {n, std::move(comult), kron(a.counit, b.counit)};
}

/// H ⊗ K with componentwise structure; antipode S_H ⊗ S_K.
inline HopfAlgebra tensor_hopf(const HopfAlgebra& h, const HopfAlgebra& k) {
  return {tensor_algebra(h.algebra, k.algebra), tensor_coalgebra(h.coalgebra, k.coalgebra),
          tensor_of_maps(h.antipode, k.antipode), tensor_of_maps(h.antipode_inv, k.antipode_inv)};
}

/// H^op: opposite multiplication, same coalgebra, antipode S⁻¹.
inline HopfAlgebra opposite_hopf(const HopfAlgebra& h) {
  return {opposite(h.algebra), h.coalgebra, h.antipode_inv, h.antipode};
}

/// Linear dual H*: product = transpose of Δ, coproduct = transpose of the
/// product, antipode = transpose of S. Basis is the dual basis δ_i.
inline HopfAlgebra dual_hopf(const HopfAlgebra& h) {
  std::size_t n = h.dim();
  Tensor3 mult(n, n, n), comult(n, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a) {
      for (const auto& [b, c] : h.coalgebra.comult.slice(i, a)) mult.set(a, b, i, c);
      for (const auto& [b, c] : h.algebra.product(i, a)) comult.set(b, i, a, c);
    }
  std::vector<std::string> labels;
  for (const auto& l : h.algebra.basis_labels) labels.push_back("δ" + l);
  StructureAlgebra alg{h.field(), n, std::move(labels), std::move(mult), h.coalgebra.counit};
  return {std::move(alg), Coalgebra{n, std::move(comult), h.algebra.unit}, h.antipode.transpose(),
          h.antipode_inv.transpose()};
}

inline bool is_involutive(const HopfAlgebra& h) { return (h.antipode * h.antipode).is_identity(); }

/// Componentwise product in H ⊗ H of flattened vectors.
inline Vec tensor_square_product(const StructureAlgebra& a, const Vec& x, const Vec& y) {
  std::size_t n = a.dim;
  Accumulator acc(n * n);
  for (const auto& [p, c] : x)
    for (const auto& [q, e] : y) {
      const Vec& l = a.product(p / n, q / n);
      const Vec& r = a.product(p % n, q % n);
      Scalar ce = c * e;
      for (const auto& [u, lu] : l)
        for (const auto& [v, rv] : r) acc.add(u * n + v, ce * lu * rv);
    }
  return acc.take();
}

inline CheckReport check_coalgebra(const Coalgebra& c, const std::string& prefix = "") {
  CheckReport rep;
  rep.claim = "coalgebra";
  std::size_t n = c.dim;
  rep.run(prefix + "coassociativity", [&](Clause& cl) {
    Accumulator left(n * n * n), right(n * n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& [k, x] : c.comult.slice(i, j)) {
          // (Δ ⊗ id): expand j; (id ⊗ Δ): expand k
          for (std::size_t a = 0; a < n; ++a)
            for (const auto& [b, y] : c.comult.slice(j, a)) left.add((a * n + b) * n + k, x * y);
          for (std::size_t a = 0; a < n; ++a)
            for (const auto& [b, y] : c.comult.slice(k, a)) right.add((j * n + a) * n + b, x * y);
        }
      Vec l = left.take(), r = right.take();
      if (l == r) continue;
      for (const auto& [idx, v] : l - r) {
        (void)v;
        cl.fail({std::int64_t(i), std::int64_t(idx / (n * n)), std::int64_t(idx / n % n), std::int64_t(idx % n)});
      }
    }
  });
  rep.run(prefix + "counit", [&](Clause& cl) {
    for (std::size_t i = 0; i < n; ++i) {
      Accumulator l(n), r(n);
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& [k, x] : c.comult.slice(i, j)) {
          l.add(k, x * c.counit.at(j));
          r.add(j, x * c.counit.at(k));
        }
      Vec e = Vec::basis(n, i);
      cl.expect(l.take() == e, {std::int64_t(i), 0});
      cl.expect(r.take() == e, {std::int64_t(i), 1});
    }
  });
  return rep;
}

inline CheckReport check_hopf(const HopfAlgebra& h) {
  CheckReport rep;
  rep.claim = "hopf";
  const auto& a = h.algebra;
  std::size_t n = h.dim();
  rep.absorb(check_algebra(a), "algebra");
  rep.absorb(check_coalgebra(h.coalgebra), "coalgebra");
  std::vector<Vec> delta(n);
  for (std::size_t i = 0; i < n; ++i) delta[i] = h.coalgebra.coproduct(i);
  Matrix dmap = h.coalgebra.comult_map();
  rep.run("comult_multiplicative", [&](Clause& cl) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        cl.expect(dmap.apply(a.product(i, j)) == tensor_square_product(a, delta[i], delta[j]),
                  {std::int64_t(i), std::int64_t(j)});
  });
  rep.run("comult_unital", [&](Clause& cl) { cl.expect(dmap.apply(a.unit) == kron(a.unit, a.unit), {}); });
  rep.run("counit_multiplicative", [&](Clause& cl) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        cl.expect(h.eps(a.product(i, j)) == h.eps(i) * h.eps(j), {std::int64_t(i), std::int64_t(j)});
  });
  rep.run("counit_unital", [&](Clause& cl) { cl.expect(h.eps(a.unit) == Scalar(1), {}); });
  auto antipode_side = [&](Clause& cl, bool left) {
    for (std::size_t i = 0; i < n; ++i) {
      Accumulator acc(n);
      for (const auto& [jk, c] : delta[i]) {
        std::size_t j = jk / n, k = jk % n;
        Vec x = left ? a.multiply(h.S(j), a.basis(k)) : a.multiply(a.basis(j), h.S(k));
        acc.axpy(c, x);
      }
      cl.expect(acc.take() == a.unit.scaled(h.eps(i)), {std::int64_t(i)});
    }
  };
  rep.run("antipode_left", [&](Clause& cl) { antipode_side(cl, true); });
  rep.run("antipode_right", [&](Clause& cl) { antipode_side(cl, false); });
  rep.run("antipode_inverse", [&](Clause& cl) {
    if (h.antipode_inv.rows() != n || h.antipode_inv.cols() != n) {
      cl.fail_without_witness("stored antipode inverse has wrong shape");
      return;
    }
    Matrix p = h.antipode * h.antipode_inv, q = h.antipode_inv * h.antipode;
    for (std::size_t j = 0; j < n; ++j) {
      cl.expect(p.column(j) == Vec::basis(n, j), {std::int64_t(j), 0});
      cl.expect(q.column(j) == Vec::basis(n, j), {std::int64_t(j), 1});
    }
  });
  return rep;
}

}  // namespace hopfalg
