#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "adeq/error.hpp"

namespace adeq {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline BigInt rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

// n/d with any sign of d (d != 0); result canonical.
Rat make_rat(const BigInt& n, const BigInt& d);

inline int sign_of(const BigInt& z) { return z.sign(); }
inline int sign_of(const Rat& q) { return q.sign(); }

// floor(sqrt(z)) for z >= 0.
BigInt isqrt_floor(const BigInt& z);
// If z is a perfect square, store the nonnegative root and return true.
bool perfect_square(const BigInt& z, BigInt* root);
// Exact square root of a nonnegative rational if it is rational.
bool rat_sqrt_exact(const Rat& q, Rat* root);

// v_p(q) for q != 0; fails on q == 0.
long rat_valuation(const Rat& q, long p);

std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

// Closed rational interval [lo, hi], lo <= hi.
struct Interval {
  Rat lo;
  Rat hi;
  Interval() = default;
  Interval(Rat l, Rat h);
  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
};

// Univariate polynomial over BigInt, coefficients lowest degree first.
// Trailing zero coefficients are trimmed; no other normalization is applied
// on construction, so arithmetic results keep their content.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly zero() { return IntPoly(); }
  static IntPoly constant(const BigInt& c);
  static IntPoly x();

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const BigInt& coeff(size_t i) const;
  const std::vector<BigInt>& coeffs() const { return c_; }
  const BigInt& leading() const;

  Rat eval(const Rat& x) const;
  BigInt eval_int(const BigInt& x) const;
  int sign_at(const Rat& x) const;

  IntPoly operator-() const;
  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly scaled(const BigInt& k) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  // P(Q(x)).
  IntPoly compose(const IntPoly& inner) const;
  // x^deg * P(1/x).
  IntPoly reversed() const;

  BigInt content() const;           // gcd of coefficients, >= 0; 0 for zero poly
  IntPoly primitive_part() const;   // content removed, sign of leading kept
  IntPoly canonical() const;        // primitive with positive leading coefficient

  // Exact division; fails if remainder is nonzero.
  IntPoly divexact(const IntPoly& d) const;
  bool divides(const IntPoly& d) const;

  std::string to_string() const;  // "[c0,c1,...]"

 private:
  std::vector<BigInt> c_;
  void trim();
};

IntPoly poly_from_string(const std::string& s);

Rat poly_eval(const IntPoly& p, const Rat& x);
IntPoly poly_derivative(const IntPoly& p);

// Primitive gcd over Q with positive leading coefficient; fails if both zero.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// P / gcd(P, P'), primitive with positive leading coefficient.
IntPoly squarefree_part(const IntPoly& p);

// Number of real roots of squarefree P in (I.lo, I.hi); endpoints must not be
// roots.
long sturm_count(const IntPoly& p, const Interval& iv);

// 1 + max_{i<n} |a_i| / |a_n|; all real roots lie in [-B, B].
Rat cauchy_root_bound(const IntPoly& p);

// Disjoint isolating intervals with dyadic endpoints for all real roots of p,
// sorted in increasing order; endpoints are not roots.
std::vector<Interval> isolate_real_roots(const IntPoly& p);

// Shrink an isolating interval of squarefree p by sign-preserving bisection
// until its width is <= width.
Interval refine_interval(const IntPoly& p, const Interval& iv, const Rat& width);

// Univariate polynomial over Rat. Support type for residue arithmetic and the
// rational substitutions used by the real-number constructions.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);
  explicit RatPoly(const IntPoly& p);
  static RatPoly constant(const Rat& c);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& coeff(size_t i) const;
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat eval(const Rat& x) const;

  RatPoly operator-() const;
  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly scaled(const Rat& k) const;
  bool operator==(const RatPoly& o) const { return c_ == o.c_; }

  // Remainder of this modulo m (deg m >= 1).
  RatPoly mod(const RatPoly& m) const;
  // Quotient and remainder.
  void divmod(const RatPoly& d, RatPoly* q, RatPoly* r) const;

  // Smallest positive k with k*this integral, and the integral polynomial.
  IntPoly cleared(BigInt* denom = nullptr) const;

  std::string to_string() const;

 private:
  std::vector<Rat> c_;
  void trim();
};

}  // namespace adeq
