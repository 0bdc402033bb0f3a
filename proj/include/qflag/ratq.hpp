#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qflag {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dense integer polynomial in q, coefficients low to high, no trailing zeros.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<mpz_class> c);
  static Poly constant(const mpz_class &c);
  static Poly monomial(const mpz_class &c, std::size_t deg);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<mpz_class> &coeffs() const { return c_; }
  const mpz_class &lead() const { return c_.back(); }
  mpz_class content() const;
  std::size_t low_order() const;  // multiplicity of q as a factor

  Poly operator+(const Poly &o) const;
  Poly operator-(const Poly &o) const;
  Poly operator*(const Poly &o) const;
  Poly operator-() const;
  Poly scaled(const mpz_class &s) const;
  Poly divexact_scalar(const mpz_class &s) const;
  Poly shifted(long k) const;  // multiply by q^k, k >= -low_order()
  bool operator==(const Poly &o) const { return c_ == o.c_; }
  bool operator!=(const Poly &o) const { return !(*this == o); }

  // Exact division; throws if the remainder is nonzero.
  Poly divexact(const Poly &d) const;
  // Division over Q; returns false if not divisible over Z after scaling.
  bool divides_into(const Poly &num, Poly &quot) const;
  mpq_class eval(const mpq_class &x) const;

  static Poly gcd(const Poly &a, const Poly &b);

private:
  void trim();
  std::vector<mpz_class> c_;
};

// Element of Q(q) in canonical form q^e * N / D, with N(0) != 0, D(0) != 0,
// gcd(N, D) = 1, lead(D) > 0 and coprime joint content.
class RatQ {
public:
  RatQ() : den_(Poly::constant(1)) {}
  RatQ(long v);  // NOLINT(google-explicit-constructor)
  RatQ(const mpz_class &v);
  RatQ(const mpq_class &v);
  static RatQ q_pow(long e);
  static RatQ from_polys(const Poly &num, const Poly &den);
  static RatQ nu();       // q - q^-1
  static RatQ qint2();    // q + q^-1

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;

  // Integer polynomials with value numerator / denominator.
  Poly numerator() const;
  Poly denominator() const;
  long q_shift() const { return shift_; }
  const Poly &core_num() const { return num_; }
  const Poly &core_den() const { return den_; }

  RatQ operator+(const RatQ &o) const;
  RatQ operator-(const RatQ &o) const;
  RatQ operator*(const RatQ &o) const;
  RatQ operator/(const RatQ &o) const;
  RatQ operator-() const;
  RatQ &operator+=(const RatQ &o) { return *this = *this + o; }
  RatQ &operator-=(const RatQ &o) { return *this = *this - o; }
  RatQ &operator*=(const RatQ &o) { return *this = *this * o; }
  RatQ &operator/=(const RatQ &o) { return *this = *this / o; }
  RatQ inverse() const;
  RatQ pow(long k) const;

  bool operator==(const RatQ &o) const {
    return shift_ == o.shift_ && num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatQ &o) const { return !(*this == o); }
  // Arbitrary total order, used only for deterministic containers.
  bool operator<(const RatQ &o) const;

  mpq_class eval(const mpq_class &x) const;
  std::string str() const;

  static RatQ parse(std::string_view s);

private:
  RatQ(long shift, Poly num, Poly den, bool canonical);
  void canonicalize();

  long shift_ = 0;
  Poly num_;
  Poly den_;
};

std::string render_laurent(const Poly &p, long shift);
// One summand "c*body" of a rendered sum, with its joining sign.
std::string render_term(const RatQ &c, const std::string &body, bool first);

}  // namespace qflag
