#pragma once

#include <array>
#include <compare>
#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "harmonia/cyclotomic.hpp"
#include "harmonia/su2.hpp"

namespace harmonia {

enum class Var { Alpha = 0, AlphaBar = 1, Beta = 2, BetaBar = 3 };

/// alpha^a conj(alpha)^b beta^c conj(beta)^d, ordered lexicographically on
/// (a, b, c, d).
struct Monomial {
  std::array<int, 4> e{0, 0, 0, 0};

  Monomial() = default;
  Monomial(int a, int b, int c, int d) : e{a, b, c, d} {}

  int operator[](Var v) const { return e[static_cast<std::size_t>(v)]; }
  int& operator[](Var v) { return e[static_cast<std::size_t>(v)]; }

  int degree() const { return e[0] + e[1] + e[2] + e[3]; }
  int twist() const { return (e[0] + e[2]) - (e[1] + e[3]); }
  int holomorphic_degree() const { return e[0] + e[2]; }
  int antiholomorphic_degree() const { return e[1] + e[3]; }
  Monomial conj() const { return {e[1], e[0], e[3], e[2]}; }

  friend Monomial operator*(const Monomial& x, const Monomial& y) {
    return {x.e[0] + y.e[0], x.e[1] + y.e[1], x.e[2] + y.e[2], x.e[3] + y.e[3]};
  }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  std::string to_string() const;
};

/// Projective point [p/q] of CP^1.
struct ProjectivePoint {
  Cyclotomic p;
  Cyclotomic q;
};

/// Sparse polynomial in alpha, conj(alpha), beta, conj(beta) with cyclotomic
/// coefficients. Terms are kept in descending monomial order, so the first
/// term is the leading one; zero coefficients are never stored.
class HPoly {
 public:
  using TermMap = std::map<Monomial, Cyclotomic, std::greater<>>;

  HPoly() = default;
  HPoly(const Cyclotomic& c);  // NOLINT: constants
  HPoly(long c) : HPoly(Cyclotomic(c)) {}  // NOLINT

  static HPoly monomial(const Monomial& m, const Cyclotomic& c = Cyclotomic(1));
  static HPoly variable(Var v);
  static HPoly from_terms(std::vector<std::pair<Monomial, Cyclotomic>> terms);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Cyclotomic coeff(const Monomial& m) const;
  const std::pair<const Monomial, Cyclotomic>& leading() const;

  /// Adds c * m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Cyclotomic& c);

  bool is_homogeneous() const;
  /// Common degree, if homogeneous and nonzero.
  std::optional<int> degree() const;
  /// Common twist, if all terms share one.
  std::optional<int> twist() const;
  /// Only alpha and beta occur.
  bool is_holomorphic() const;
  bool has_rational_coefficients() const;
  /// lcm of the coefficient conductors.
  int conductor() const;

  HPoly operator-() const;
  HPoly& operator+=(const HPoly& rhs);
  HPoly& operator-=(const HPoly& rhs);
  HPoly& operator*=(const HPoly& rhs) { return *this = *this * rhs; }
  HPoly& operator*=(const Cyclotomic& c);
  friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
  friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
  friend HPoly operator*(const HPoly& a, const HPoly& b);
  friend HPoly operator*(HPoly a, const Cyclotomic& c) { return a *= c; }
  friend HPoly operator*(const Cyclotomic& c, HPoly a) { return a *= c; }
  friend bool operator==(const HPoly& a, const HPoly& b);

  HPoly pow(int e) const;

  std::string to_string() const;

 private:
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const HPoly& f);

/// prod_i (q_i alpha - p_i beta).
HPoly from_roots(std::span<const ProjectivePoint> roots);

HPoly partial_derivative(const HPoly& f, Var v);

/// 4 (d^2/dalpha dconj(alpha) + d^2/dbeta dconj(beta)).
HPoly laplacian_r4(const HPoly& f);

enum class TwistDirection { Minus, Plus };

/// Minus: -conj(beta) df/dalpha + conj(alpha) df/dbeta.
/// Plus:  -beta df/dconj(alpha) + alpha df/dconj(beta).
HPoly twist_apply(const HPoly& f, TwistDirection direction);

/// Row a holds the coefficients, indexed by a', of alpha^a' beta^(h-a') in
/// (conj(z) alpha + conj(w) beta)^a (-w alpha + z beta)^(h-a): the action of
/// gamma^-1 on the degree-h polynomials in alpha, beta. The action on the
/// conjugate variables is the entrywise conjugate.
using CycMatrix = std::vector<std::vector<Cyclotomic>>;
CycMatrix substitution_matrix(const SU2Element& gamma, int h);

/// [R_gamma f](alpha, beta) = f(gamma^-1 (alpha, beta)).
HPoly group_act(const SU2Element& gamma, const HPoly& f);

/// Acts on the alpha, beta factors only (the holomorphic half of group_act).
HPoly group_act_holomorphic(const SU2Element& gamma, const HPoly& f);
/// Acts on the conjugate factors only.
HPoly group_act_antiholomorphic(const SU2Element& gamma, const HPoly& f);

HPoly conjugate_poly(const HPoly& f);

struct DegreeTwist {
  int degree = 0;               // maximal degree when not homogeneous
  std::optional<int> twist;     // empty when terms have mixed twist
  bool homogeneous = true;
};

/// Throws std::invalid_argument for the zero polynomial.
DegreeTwist degree_twist(const HPoly& f);

std::complex<double> evaluate(const HPoly& f, std::complex<double> alpha,
                              std::complex<double> beta);

/// Exact value at (alpha, beta) = (p, q), conjugate variables taking conj(p), conj(q).
Cyclotomic evaluate_exact(const HPoly& f, const Cyclotomic& p, const Cyclotomic& q);

/// sum over terms of (a+b+c+d) * term.
HPoly euler_operator(const HPoly& f);

/// Divides by the rational content and fixes the sign so the leading term's
/// first nonzero rational component is positive. Throws for zero.
HPoly primitive_normalize(const HPoly& f);

/// Divides by the leading coefficient. Throws for zero.
HPoly normalize_leading(const HPoly& f);

/// Coefficients shrunk to their minimal cyclotomic field, then embedded into
/// a common one.
HPoly shrink_coefficients(const HPoly& f);
HPoly embed_coefficients(const HPoly& f, int conductor);

}  // namespace harmonia
