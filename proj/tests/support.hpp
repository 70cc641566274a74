#pragma once

#include <complex>
#include <initializer_list>
#include <random>
#include <tuple>

#include "harmonia/poly.hpp"

namespace harmonia::testing {

// sum of c * alpha^a * beta^b
inline HPoly ab(std::initializer_list<std::tuple<long, int, int>> terms) {
  HPoly f;
  for (auto [c, a, b] : terms) f.add_term(Monomial(a, 0, b, 0), Cyclotomic(c));
  return f;
}

inline HPoly mono(int a, int b, int c, int d, const Cyclotomic& coeff = Cyclotomic(1)) {
  return HPoly::monomial(Monomial(a, b, c, d), coeff);
}

inline const HPoly A = HPoly::variable(Var::Alpha);
inline const HPoly Ab = HPoly::variable(Var::AlphaBar);
inline const HPoly B = HPoly::variable(Var::Beta);
inline const HPoly Bb = HPoly::variable(Var::BetaBar);

inline bool proportional(const HPoly& f, const HPoly& g) {
  return primitive_normalize(f) == primitive_normalize(g);
}

inline Cyclotomic random_cyclotomic(std::mt19937_64& rng, int conductor, int range = 5) {
  std::uniform_int_distribution<long> num(-range, range), den(1, 4);
  std::vector<Rational> c(static_cast<std::size_t>(euler_phi(conductor)));
  for (auto& x : c) x = make_rational(num(rng), den(rng));
  return Cyclotomic(conductor, c);
}

// Random polynomial in all four variables with total degree <= max_degree.
inline HPoly random_poly(std::mt19937_64& rng, int conductor, int terms, int max_degree) {
  std::uniform_int_distribution<int> e(0, max_degree);
  HPoly f;
  for (int t = 0; t < terms; ++t) {
    int a = e(rng), b = e(rng) % (max_degree - a + 1);
    int c = e(rng) % (max_degree - a - b + 1);
    int d = e(rng) % (max_degree - a - b - c + 1);
    f.add_term(Monomial(a, b, c, d), random_cyclotomic(rng, conductor, 3));
  }
  return f;
}

// Random homogeneous polynomial in alpha, beta only.
inline HPoly random_holomorphic(std::mt19937_64& rng, int conductor, int degree) {
  HPoly f;
  for (int a = 0; a <= degree; ++a) f.add_term(Monomial(a, 0, degree - a, 0), random_cyclotomic(rng, conductor, 3));
  return f;
}

inline std::pair<std::complex<double>, std::complex<double>> random_unit_point(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  double x[4];
  double r = 0;
  for (double& v : x) {
    v = n(rng);
    r += v * v;
  }
  r = std::sqrt(r);
  return {{x[0] / r, x[1] / r}, {x[2] / r, x[3] / r}};
}

}  // namespace harmonia::testing
