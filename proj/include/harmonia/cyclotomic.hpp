#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "harmonia/rational.hpp"

namespace harmonia {

namespace detail {
struct ConductorData;
}

/// Canonical conductor of Q(zeta_n): conductors congruent to 2 mod 4 are
/// folded to n/2, which generates the same field.
int canonical_conductor(int n);

/// Euler's totient.
int euler_phi(int n);

/// Integer coefficients of the n-th cyclotomic polynomial, constant term
/// first.
const std::vector<long>& cyclotomic_polynomial(int n);

/// Exact element of the cyclotomic field Q(zeta_N).
///
/// Stored over the power basis 1, zeta, ..., zeta^(phi(N)-1) as integer
/// numerators sharing one positive denominator, reduced modulo the N-th
/// cyclotomic polynomial. The representation is canonical for a fixed
/// conductor, so equality within one conductor is structural. Values with
/// different conductors are compared and combined inside Q(zeta_lcm).
/// Rationals live at conductor 1.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long value);  // NOLINT: implicit integer embedding is intended
  Cyclotomic(const Rational& value);  // NOLINT
  Cyclotomic(const Integer& value);  // NOLINT

  /// sum_j coeffs[j] * zeta_N^j; any length is accepted and reduced.
  Cyclotomic(int conductor, std::span<const Rational> coeffs);

  static Cyclotomic zeta(int n, long power = 1);

  int conductor() const { return conductor_; }
  int degree() const { return static_cast<int>(num_.size()); }

  /// Coefficient of zeta^j in the canonical power basis representation.
  Rational coeff(int j) const;
  std::vector<Rational> coeffs() const;
  const Integer& denominator() const { return den_; }
  const std::vector<Integer>& numerators() const { return num_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Only valid when is_rational().
  Rational to_rational() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator/=(const Cyclotomic& rhs);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// this += a * b without an intermediate temporary per call site.
  void add_product(const Cyclotomic& a, const Cyclotomic& b);

  /// Throws std::domain_error for zero.
  Cyclotomic inverse() const;
  Cyclotomic conj() const;
  Cyclotomic pow(long e) const;

  /// Same value represented at a multiple of the current conductor.
  Cyclotomic embed(int conductor) const;
  /// Same value at the smallest conductor whose field contains it.
  Cyclotomic shrink() const;
  /// True when the value lies in Q(zeta_conductor).
  bool lies_in(int conductor) const;

  std::complex<double> to_complex() const;

  /// Multiplicative order if this is a root of unity, else 0.
  long root_order() const;

  std::size_t hash() const;
  std::string to_string() const;

 private:
  Cyclotomic(int conductor, std::vector<Integer> num, Integer den);
  void normalize();
  void assign_from_dense(int conductor, std::vector<Integer> dense, Integer den);

  int conductor_ = 1;
  const detail::ConductorData* data_ = nullptr;
  std::vector<Integer> num_;
  Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x);

/// zeta_N^r in canonical form.
inline Cyclotomic root_of_unity(long r, int n) { return Cyclotomic::zeta(n, r); }

inline Cyclotomic imaginary_unit() { return Cyclotomic::zeta(4, 1); }

int lcm_conductor(int a, int b);

}  // namespace harmonia

template <>
struct std::hash<harmonia::Cyclotomic> {
  std::size_t operator()(const harmonia::Cyclotomic& x) const { return x.hash(); }
};
