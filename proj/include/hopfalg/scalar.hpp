#pragma once

// Exact field elements: arbitrary-precision rationals (with an int64 fast
// path) and residues modulo a prime. No floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hopfalg {

using BigRational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

class FieldError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

using i128 = __int128;
using u128 = unsigned __int128;

inline u128 abs128(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

inline u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline bool fits_i64(i128 v) {
  return v >= i128(INT64_MIN) + 1 && v <= i128(INT64_MAX);
}

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  // extended Euclid; a is assumed reduced and nonzero
  i128 t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    i128 q = r / new_r;
    i128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw FieldError("element not invertible modulo " + std::to_string(p));
  if (t < 0) t += p;
  return static_cast<std::int64_t>(t);
}

inline std::int64_t reduce_mod(const BigInt& v, std::int64_t p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return r.convert_to<std::int64_t>();
}

}  // namespace detail

/// An element of Q or F_p. Rationals are kept in lowest terms with positive
/// denominator; small values live in two int64 words, larger ones spill to a
/// shared immutable BigRational. A residue carries its modulus, and an
/// unbound rational mixed with a residue is mapped into F_p.
class Scalar {
 public:
  Scalar() = default;
  Scalar(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Scalar(int n) : num_(n) {}           // NOLINT(google-explicit-constructor)

  static Scalar rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw FieldError("zero denominator");
    return from_i128(num, den);
  }

  static Scalar rational(const BigRational& q) {
    Scalar s;
    s.assign_big(q);
    return s;
  }

  static Scalar residue(std::int64_t value, std::int64_t p) {
    Scalar s;
    s.mod_ = p;
    s.num_ = value % p;
    if (s.num_ < 0) s.num_ += p;
    s.den_ = 1;
    return s;
  }

  bool is_residue() const { return mod_ != 0; }
  std::int64_t modulus() const { return mod_; }

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }

  /// Map into F_p (identity if already a residue mod p).
  Scalar to_residue(std::int64_t p) const {
    if (mod_ == p) return *this;
    if (mod_ != 0) throw FieldError("mixing residues of different moduli");
    std::int64_t n, d;
    if (big_) {
      n = detail::reduce_mod(boost::multiprecision::numerator(*big_), p);
      d = detail::reduce_mod(boost::multiprecision::denominator(*big_), p);
    } else {
      n = num_ % p;
      if (n < 0) n += p;
      d = den_ % p;
    }
    if (d == 0) throw FieldError("denominator divisible by " + std::to_string(p));
    return residue(static_cast<std::int64_t>(detail::i128(n) * detail::mod_inverse(d, p) % p), p);
  }

  BigRational to_big() const {
    if (mod_ != 0) throw FieldError("residue has no rational value");
    if (big_) return *big_;
    return BigRational(BigInt(num_), BigInt(den_));
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.mod_ | b.mod_) {
      std::int64_t p = common_mod(a, b);
      Scalar x = a.to_residue(p), y = b.to_residue(p);
      std::int64_t v = x.num_ + y.num_;
      if (v >= p) v -= p;
      return raw_residue(v, p);
    }
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) {
        std::int64_t r;
        if (!__builtin_add_overflow(a.num_, b.num_, &r) && r != INT64_MIN) return Scalar(r);
      }
      using detail::i128;
      i128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
      i128 d = i128(a.den_) * b.den_;
      return from_i128(n, d);
    }
    Scalar s;
    s.assign_big(a.to_big() + b.to_big());
    return s;
  }

  friend Scalar operator-(const Scalar& a) {
    if (a.mod_) return raw_residue(a.num_ == 0 ? 0 : a.mod_ - a.num_, a.mod_);
    if (a.big_) {
      Scalar s;
      s.assign_big(-*a.big_);
      return s;
    }
    Scalar s = a;
    s.num_ = -a.num_;  // num_ != INT64_MIN by construction
    return s;
  }

  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.mod_ | b.mod_) {
      std::int64_t p = common_mod(a, b);
      Scalar x = a.to_residue(p), y = b.to_residue(p);
      return raw_residue(static_cast<std::int64_t>(detail::i128(x.num_) * y.num_ % p), p);
    }
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) {
        std::int64_t r;
        if (!__builtin_mul_overflow(a.num_, b.num_, &r) && r != INT64_MIN) return Scalar(r);
      }
      using detail::i128;
      return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    Scalar s;
    s.assign_big(a.to_big() * b.to_big());
    return s;
  }

  Scalar inverse() const {
    if (is_zero()) throw FieldError("division by zero");
    if (mod_) return raw_residue(detail::mod_inverse(num_, mod_), mod_);
    if (big_) {
      Scalar s;
      s.assign_big(BigRational(1) / *big_);
      return s;
    }
    return from_i128(den_, num_);
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.mod_ | b.mod_) {
      std::int64_t p = common_mod(a, b);
      return a.to_residue(p).num_ == b.to_residue(p).num_;
    }
    if (a.big_ || b.big_) return a.to_big() == b.to_big();
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// "p/q" or integer for rationals; plain residue for F_p.
  std::string str() const {
    if (mod_) return std::to_string(num_);
    if (big_) {
      std::string n = boost::multiprecision::numerator(*big_).str();
      BigInt d = boost::multiprecision::denominator(*big_);
      return d == 1 ? n : n + "/" + d.str();
    }
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  static std::int64_t common_mod(const Scalar& a, const Scalar& b) {
    if (a.mod_ && b.mod_ && a.mod_ != b.mod_) throw FieldError("mixing residues of different moduli");
    return a.mod_ ? a.mod_ : b.mod_;
  }

  static Scalar raw_residue(std::int64_t v, std::int64_t p) {
    Scalar s;
    s.num_ = v;
    s.mod_ = p;
    return s;
  }

  static Scalar from_i128(detail::i128 n, detail::i128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) return Scalar(0);
    auto g = detail::gcd128(detail::abs128(n), detail::u128(d));
    n /= detail::i128(g);
    d /= detail::i128(g);
    if (detail::fits_i64(n) && detail::fits_i64(d)) {
      Scalar s;
      s.num_ = static_cast<std::int64_t>(n);
      s.den_ = static_cast<std::int64_t>(d);
      return s;
    }
    Scalar s;
    s.assign_big(BigRational(to_bigint(n), to_bigint(d)));
    return s;
  }

  static BigInt to_bigint(detail::i128 v) {
    bool neg = v < 0;
    detail::u128 m = detail::abs128(v);
    BigInt r = BigInt(static_cast<std::uint64_t>(m >> 64)) << 64;
    r += BigInt(static_cast<std::uint64_t>(m));
    return neg ? BigInt(-r) : r;
  }

  void assign_big(const BigRational& q) {
    const BigInt& n = boost::multiprecision::numerator(q);
    const BigInt& d = boost::multiprecision::denominator(q);
    static const BigInt lo = BigInt(INT64_MIN) + 1, hi = BigInt(INT64_MAX);
    mod_ = 0;
    if (n >= lo && n <= hi && d <= hi) {
      num_ = n.convert_to<std::int64_t>();
      den_ = d.convert_to<std::int64_t>();
      big_.reset();
    } else {
      num_ = 0;
      den_ = 1;
      big_ = std::make_shared<const BigRational>(q);
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::int64_t mod_ = 0;
  std::shared_ptr<const BigRational> big_;
};

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// The ground field: Q or F_p.
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };
  Kind kind = Kind::Rationals;
  std::int64_t p = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::int64_t p) {
    if (!is_prime(p)) throw FieldError("not a prime: " + std::to_string(p));
    // residues are multiplied in 128-bit, so any int64 prime works
    return {Kind::PrimeField, p};
  }

  bool is_prime_field() const { return kind == Kind::PrimeField; }

  Scalar embed(const Scalar& s) const { return is_prime_field() ? s.to_residue(p) : s; }
  Scalar zero() const { return embed(Scalar(0)); }
  Scalar one() const { return embed(Scalar(1)); }

  /// Parses "7", "-3/4" (rationals) or a residue; rationals are mapped into
  /// F_p when this is a prime field.
  Scalar parse(std::string_view text) const {
    std::string t(text);
    auto slash = t.find('/');
    try {
      Scalar v;
      if (slash == std::string::npos) {
        v = Scalar::rational(BigRational(BigInt(t)));
      } else {
        BigInt n(t.substr(0, slash)), d(t.substr(slash + 1));
        if (d == 0) throw FieldError("zero denominator in '" + t + "'");
        v = Scalar::rational(BigRational(n, d));
      }
      return embed(v);
    } catch (const FieldError&) {
      throw;
    } catch (const std::exception&) {
      throw FieldError("malformed scalar '" + t + "'");
    }
  }

  std::string name() const { return is_prime_field() ? "fp:" + std::to_string(p) : "q"; }

  /// "q" or "fp:<p>".
  static FieldSpec from_name(std::string_view name) {
    if (name == "q" || name == "Q") return rationals();
    if (name.substr(0, 3) == "fp:") {
      std::int64_t p = 0;
      try {
        p = std::stoll(std::string(name.substr(3)));
      } catch (const std::exception&) {
        throw FieldError("malformed field '" + std::string(name) + "'");
      }
      return prime(p);
    }
    throw FieldError("unknown field '" + std::string(name) + "'");
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

}  // namespace hopfalg
