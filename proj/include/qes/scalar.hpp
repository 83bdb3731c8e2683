#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <map>
#include <ostream>
#include <string>

#include "qes/errors.hpp"

namespace qes {

// Exact rational backed by GMP; always canonical (gcd 1, positive denominator).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}  // NOLINT: implicit by design
  Rational(long n) : v_(n) {}  // NOLINT
  Rational(long long n) : v_(std::to_string(n)) {}  // NOLINT
  Rational(long num, long den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  static Rational parse(const std::string& text);

  const mpq_class& raw() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  long to_long() const;  // requires is_integer()
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

Rational pow(const Rational& base, int e);
Rational abs(const Rational& r);

// Laurent polynomial in s with rational coefficients; q = s^2.
class QLaurent {
 public:
  using Terms = std::map<int, Rational>;

  QLaurent() = default;
  QLaurent(int c) : QLaurent(Rational(c)) {}  // NOLINT
  QLaurent(const Rational& c);  // NOLINT
  static QLaurent monomial(const Rational& c, int k);
  static QLaurent parse(const std::string& text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  Rational constant() const;
  Rational coeff(int k) const;
  int min_exp() const;
  int max_exp() const;
  std::string str() const;

  QLaurent operator-() const;
  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  QLaurent& operator*=(const QLaurent& o);
  // Exact division; only monomial or constant divisors are supported.
  QLaurent& operator/=(const QLaurent& o);

  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  friend QLaurent operator/(QLaurent a, const QLaurent& b) { return a /= b; }
  friend bool operator==(const QLaurent& a, const QLaurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const QLaurent& a, const QLaurent& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const QLaurent& p) { return os << p.str(); }

 private:
  void add_term(int k, const Rational& c);
  Terms terms_;
};

QLaurent qint(int n);    // [n]_q = 1 + q + ... + q^(n-1)
QLaurent s_pow(int k);   // s^k
QLaurent q_pow(int k);   // q^k = s^(2k)
Rational eval_at(const QLaurent& p, const Rational& s0);
// Substitution s -> 1 (the classical limit).
inline Rational classical(const QLaurent& p) { return eval_at(p, Rational(1)); }

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const QLaurent& p) { return p.is_zero(); }
inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(const QLaurent& p) { return p.str(); }

// Ring tag used in JSON output.
template <class S> constexpr const char* ring_name();
template <> constexpr const char* ring_name<Rational>() { return "rational"; }
template <> constexpr const char* ring_name<QLaurent>() { return "laurent_s"; }

// Lift a Laurent coefficient into the scalar ring S (evaluating at s0 when S is Rational).
template <class S> S lift(const QLaurent& c, const Rational& s0);
template <> inline Rational lift<Rational>(const QLaurent& c, const Rational& s0) { return eval_at(c, s0); }
template <> inline QLaurent lift<QLaurent>(const QLaurent& c, const Rational&) { return c; }

}  // namespace qes

namespace Eigen {

template <> struct NumTraits<qes::Rational> : GenericNumTraits<qes::Rational> {
  using Real = qes::Rational;
  using NonInteger = qes::Rational;
  using Nested = qes::Rational;
  using Literal = qes::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <> struct NumTraits<qes::QLaurent> : GenericNumTraits<qes::QLaurent> {
  using Real = qes::QLaurent;
  using NonInteger = qes::QLaurent;
  using Nested = qes::QLaurent;
  using Literal = qes::QLaurent;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 32
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
