#include "harmonia/cyclotomic.hpp"

#include "harmonia/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace harmonia {

namespace detail {

struct ConductorData {
  int n = 1;
  int phi = 1;
  std::vector<long> poly;  // cyclotomic polynomial, monic, constant term first
  // power_table[e] = zeta^e reduced to the power basis, for 0 <= e < n
  std::vector<std::vector<long>> power_table;
};

}  // namespace detail

namespace {

using detail::ConductorData;

std::vector<long> poly_exact_div(std::vector<long> num, const std::vector<long>& den) {
  // den is monic
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {0};
  std::vector<long> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const long c = num[i];
    if (c == 0) continue;
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

std::vector<long> compute_cyclotomic_polynomial(int n,
                                                const std::map<int, std::vector<long>>& known);

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<int, std::vector<long>>& poly_cache() {
  static std::map<int, std::vector<long>> cache;
  return cache;
}

std::vector<long> cyclotomic_poly_locked(int n) {
  auto& cache = poly_cache();
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  for (int d = 1; d < n; ++d)
    if (n % d == 0 && !cache.count(d)) cache[d] = cyclotomic_poly_locked(d);
  auto p = compute_cyclotomic_polynomial(n, cache);
  cache[n] = p;
  return p;
}

std::vector<long> compute_cyclotomic_polynomial(int n,
                                                const std::map<int, std::vector<long>>& known) {
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = poly_exact_div(p, known.at(d));
  return p;
}

const ConductorData* conductor_data(int n) {
  static std::map<int, std::unique_ptr<ConductorData>> registry;
  std::lock_guard lock(registry_mutex());
  if (auto it = registry.find(n); it != registry.end()) return it->second.get();

  auto data = std::make_unique<ConductorData>();
  data->n = n;
  data->poly = cyclotomic_poly_locked(n);
  data->phi = static_cast<int>(data->poly.size()) - 1;
  const int phi = data->phi;
  data->power_table.resize(static_cast<std::size_t>(n));
  std::vector<long> cur(static_cast<std::size_t>(phi), 0);
  cur[0] = 1;
  for (int e = 0; e < n; ++e) {
    data->power_table[static_cast<std::size_t>(e)] = cur;
    // multiply by x and reduce
    std::vector<long> next(static_cast<std::size_t>(phi), 0);
    const long top = cur[static_cast<std::size_t>(phi - 1)];
    for (int j = phi - 1; j > 0; --j) next[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)];
    next[0] = 0;
    if (top != 0)
      for (int j = 0; j < phi; ++j) next[static_cast<std::size_t>(j)] -= top * data->poly[static_cast<std::size_t>(j)];
    cur = std::move(next);
  }
  auto* raw = data.get();
  registry.emplace(n, std::move(data));
  return raw;
}

const ConductorData* rational_data() {
  static const ConductorData* d = conductor_data(1);
  return d;
}

void addmul_long(Integer& acc, const Integer& x, long c) {
  if (c > 0)
    mpz_addmul_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(c));
  else if (c < 0)
    mpz_submul_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(-c));
}

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Solves sum_j y_j * basis[j] = target over Q, basis vectors of equal length.
std::optional<std::vector<Rational>> solve_rational(const std::vector<std::vector<Rational>>& basis,
                                                   const std::vector<Rational>& target) {
  const std::size_t rows = target.size();
  const std::size_t cols = basis.size();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = basis[c][r];
    m[r][cols] = target[r];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][c];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = c; k <= cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (m[r][cols] != 0) return std::nullopt;
  std::vector<Rational> y(cols, 0);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) y[pivot_col[i]] = m[i][cols];
  return y;
}

}  // namespace

int canonical_conductor(int n) {
  if (n < 1) throw std::invalid_argument("conductor must be positive");
  return (n % 4 == 2) ? n / 2 : n;
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<long>& cyclotomic_polynomial(int n) { return conductor_data(n)->poly; }

int lcm_conductor(int a, int b) { return canonical_conductor(std::lcm(a, b)); }

Cyclotomic::Cyclotomic() : data_(rational_data()), num_{0}, den_(1) {}

Cyclotomic::Cyclotomic(long value) : data_(rational_data()), num_{Integer(value)}, den_(1) {}

Cyclotomic::Cyclotomic(const Integer& value) : data_(rational_data()), num_{value}, den_(1) {}

Cyclotomic::Cyclotomic(const Rational& value)
    : data_(rational_data()), num_{value.get_num()}, den_(value.get_den()) {
  normalize();
}

Cyclotomic::Cyclotomic(int conductor, std::vector<Integer> num, Integer den)
    : conductor_(conductor), data_(conductor_data(conductor)), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

Cyclotomic::Cyclotomic(int conductor, std::span<const Rational> coeffs) {
  if (conductor < 1) throw std::invalid_argument("conductor must be positive");
  Integer den = 1;
  for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> scaled(coeffs.size());
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    scaled[j] = coeffs[j].get_num() * (den / coeffs[j].get_den());

  const int canon = canonical_conductor(conductor);
  if (canon == conductor) {
    assign_from_dense(conductor, std::move(scaled), std::move(den));
    return;
  }
  // zeta_{2M} = -zeta_M^((M+1)/2) for odd M
  const int m = canon;
  std::vector<Integer> dense(static_cast<std::size_t>(m), 0);
  for (std::size_t j = 0; j < scaled.size(); ++j) {
    const long jj = static_cast<long>(j) % conductor;
    const long e = (jj * ((m + 1) / 2)) % m;
    if (jj % 2 == 0)
      dense[static_cast<std::size_t>(e)] += scaled[j];
    else
      dense[static_cast<std::size_t>(e)] -= scaled[j];
  }
  assign_from_dense(m, std::move(dense), std::move(den));
}

void Cyclotomic::assign_from_dense(int conductor, std::vector<Integer> dense, Integer den) {
  conductor_ = conductor;
  data_ = conductor_data(conductor);
  const int phi = data_->phi;
  num_.assign(static_cast<std::size_t>(phi), 0);
  for (std::size_t j = 0; j < dense.size(); ++j) {
    if (dense[j] == 0) continue;
    const auto& row = data_->power_table[j % static_cast<std::size_t>(conductor)];
    for (int k = 0; k < phi; ++k) addmul_long(num_[static_cast<std::size_t>(k)], dense[j], row[static_cast<std::size_t>(k)]);
  }
  den_ = std::move(den);
  normalize();
}

Cyclotomic Cyclotomic::zeta(int n, long power) {
  if (n < 1) throw std::invalid_argument("root_of_unity: conductor must be positive");
  long e = power % n;
  if (e < 0) e += n;
  std::vector<Rational> coeffs(static_cast<std::size_t>(e) + 1, 0);
  coeffs[static_cast<std::size_t>(e)] = 1;
  return Cyclotomic(n, coeffs);
}

void Cyclotomic::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& v : num_) v = -v;
  }
  bool all_zero = true;
  Integer g = den_;
  for (const auto& v : num_) {
    if (v == 0) continue;
    all_zero = false;
    if (g != 1) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (all_zero) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    for (auto& v : num_)
      if (v != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational Cyclotomic::coeff(int j) const {
  if (j < 0 || j >= degree()) return 0;
  return make_rational(num_[static_cast<std::size_t>(j)], den_);
}

std::vector<Rational> Cyclotomic::coeffs() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (int j = 0; j < degree(); ++j) out.push_back(coeff(j));
  return out;
}

bool Cyclotomic::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const Integer& v) { return v == 0; });
}

bool Cyclotomic::is_rational() const {
  return std::all_of(num_.begin() + 1, num_.end(), [](const Integer& v) { return v == 0; });
}

bool Cyclotomic::is_one() const { return is_rational() && num_[0] == 1 && den_ == 1; }

Rational Cyclotomic::to_rational() const {
  if (!is_rational()) throw std::logic_error("cyclotomic value is not rational: " + to_string());
  return make_rational(num_[0], den_);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& v : r.num_) v = -v;
  return r;
}

Cyclotomic Cyclotomic::embed(int conductor) const {
  const int target = canonical_conductor(conductor);
  if (target == conductor_) return *this;
  if (target % conductor_ != 0)
    throw ConfigurationError("cannot embed conductor " + std::to_string(conductor_) + " into " +
                             std::to_string(target));
  const int step = target / conductor_;
  std::vector<Integer> dense(static_cast<std::size_t>(target), 0);
  for (std::size_t j = 0; j < num_.size(); ++j) dense[j * static_cast<std::size_t>(step)] = num_[j];
  Cyclotomic r;
  r.assign_from_dense(target, std::move(dense), den_);
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (rhs.conductor_ != conductor_) {
    const int l = lcm_conductor(conductor_, rhs.conductor_);
    if (l != conductor_) *this = embed(l);
    if (l != rhs.conductor_) return *this += rhs.embed(l);
  }
  if (den_ == rhs.den_) {
    for (std::size_t j = 0; j < num_.size(); ++j) num_[j] += rhs.num_[j];
  } else {
    Integer g;
    mpz_gcd(g.get_mpz_t(), den_.get_mpz_t(), rhs.den_.get_mpz_t());
    const Integer lhs_scale = rhs.den_ / g;
    const Integer rhs_scale = den_ / g;
    for (std::size_t j = 0; j < num_.size(); ++j) {
      num_[j] *= lhs_scale;
      num_[j] += rhs.num_[j] * rhs_scale;
    }
    den_ *= lhs_scale;
  }
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == 1 || b.conductor_ == 1) {
    const Cyclotomic& scalar = a.conductor_ == 1 ? a : b;
    const Cyclotomic& other = a.conductor_ == 1 ? b : a;
    if (scalar.num_[0] == 0) return Cyclotomic();
    std::vector<Integer> num(other.num_.size());
    for (std::size_t j = 0; j < num.size(); ++j) num[j] = other.num_[j] * scalar.num_[0];
    return Cyclotomic(other.conductor_, std::move(num), other.den_ * scalar.den_);
  }
  if (a.conductor_ != b.conductor_) {
    const int l = lcm_conductor(a.conductor_, b.conductor_);
    return a.embed(l) * b.embed(l);
  }
  const int phi = a.degree();
  std::vector<Integer> conv(static_cast<std::size_t>(2 * phi - 1), 0);
  for (int i = 0; i < phi; ++i) {
    const auto& ai = a.num_[static_cast<std::size_t>(i)];
    if (ai == 0) continue;
    for (int j = 0; j < phi; ++j) {
      const auto& bj = b.num_[static_cast<std::size_t>(j)];
      if (bj == 0) continue;
      mpz_addmul(conv[static_cast<std::size_t>(i + j)].get_mpz_t(), ai.get_mpz_t(), bj.get_mpz_t());
    }
  }
  const auto& table = a.data_->power_table;
  std::vector<Integer> num(conv.begin(), conv.begin() + phi);
  for (int e = phi; e < 2 * phi - 1; ++e) {
    const auto& c = conv[static_cast<std::size_t>(e)];
    if (c == 0) continue;
    const auto& row = table[static_cast<std::size_t>(e % a.conductor_)];
    for (int k = 0; k < phi; ++k) addmul_long(num[static_cast<std::size_t>(k)], c, row[static_cast<std::size_t>(k)]);
  }
  return Cyclotomic(a.conductor_, std::move(num), a.den_ * b.den_);
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) { return *this = *this * rhs.inverse(); }

void Cyclotomic::add_product(const Cyclotomic& a, const Cyclotomic& b) { *this += a * b; }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.den_ == b.den_ && a.num_ == b.num_;
  const int l = lcm_conductor(a.conductor_, b.conductor_);
  return a.embed(l) == b.embed(l);
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
  if (conductor_ == 1) return Cyclotomic(make_rational(den_, num_[0]));
  // Extended Euclid over Q[x]: find s with s * a == 1 mod Phi_N.
  RatPoly r0(data_->poly.begin(), data_->poly.end());
  RatPoly r1(num_.begin(), num_.end());
  trim(r1);
  RatPoly s0{0};
  RatPoly s1{1};
  while (!(r1.size() == 1 && r1[0] != 0) && !r1.empty()) {
    // q = r0 / r1, r = r0 mod r1
    RatPoly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
    RatPoly r = r0;
    const Rational lead_inv = 1 / r1.back();
    while (r.size() >= r1.size() && !r.empty()) {
      const std::size_t shift = r.size() - r1.size();
      const Rational c = r.back() * lead_inv;
      q[shift] = c;
      for (std::size_t j = 0; j < r1.size(); ++j) r[shift + j] -= c * r1[j];
      trim(r);
    }
    RatPoly s2(std::max(s0.size(), q.size() + s1.size() - 1), 0);
    for (std::size_t j = 0; j < s0.size(); ++j) s2[j] += s0[j];
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant c with s1 * a == c
  const Rational c = r1[0];
  std::vector<Rational> coeffs(s1.size());
  for (std::size_t j = 0; j < s1.size(); ++j) coeffs[j] = s1[j] / c * den_;
  return Cyclotomic(conductor_, coeffs);
}

Cyclotomic Cyclotomic::conj() const {
  if (conductor_ == 1) return *this;
  const int n = conductor_;
  std::vector<Integer> dense(static_cast<std::size_t>(n), 0);
  for (std::size_t j = 0; j < num_.size(); ++j)
    dense[(static_cast<std::size_t>(n) - j) % static_cast<std::size_t>(n)] = num_[j];
  Cyclotomic r;
  r.assign_from_dense(n, std::move(dense), den_);
  return r;
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic result(1);
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool Cyclotomic::lies_in(int conductor) const {
  const int m = canonical_conductor(conductor);
  if (m % conductor_ == 0) return true;
  const int l = lcm_conductor(conductor_, m);
  const Cyclotomic x = embed(l);
  const int phi_m = euler_phi(m);
  std::vector<std::vector<Rational>> basis;
  for (int j = 0; j < phi_m; ++j) basis.push_back(Cyclotomic::zeta(m, j).embed(l).coeffs());
  return solve_rational(basis, x.coeffs()).has_value();
}

Cyclotomic Cyclotomic::shrink() const {
  if (is_rational()) return Cyclotomic(to_rational());
  for (int m = 2; m < conductor_; ++m) {
    if (conductor_ % m != 0 || canonical_conductor(m) != m) continue;
    std::vector<std::vector<Rational>> basis;
    const int phi_m = euler_phi(m);
    for (int j = 0; j < phi_m; ++j) basis.push_back(Cyclotomic::zeta(m, j).embed(conductor_).coeffs());
    if (auto y = solve_rational(basis, coeffs())) return Cyclotomic(m, *y);
  }
  return *this;
}

std::complex<double> Cyclotomic::to_complex() const {
  long double re = 0;
  long double im = 0;
  const long double two_pi = 2 * std::numbers::pi_v<long double>;
  for (std::size_t j = 0; j < num_.size(); ++j) {
    if (num_[j] == 0) continue;
    const long double c = static_cast<long double>(make_rational(num_[j], den_).get_d());
    const long double angle = two_pi * static_cast<long double>(j) / static_cast<long double>(conductor_);
    re += c * std::cos(angle);
    im += c * std::sin(angle);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

long Cyclotomic::root_order() const {
  if (is_zero()) return 0;
  const long bound = (conductor_ % 2 == 0) ? conductor_ : 2L * conductor_;
  for (long d = 1; d <= bound; ++d)
    if (bound % d == 0 && pow(d).is_one()) return d;
  return 0;
}

std::size_t Cyclotomic::hash() const {
  const Cyclotomic m = shrink();
  if (m.conductor_ != conductor_) return m.hash();
  std::size_t h = static_cast<std::size_t>(conductor_) * 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](const Integer& v) {
    const std::size_t limb = mpz_size(v.get_mpz_t()) ? mpz_getlimbn(v.get_mpz_t(), 0) : 0;
    const std::size_t s = static_cast<std::size_t>(mpz_sgn(v.get_mpz_t()) + 1);
    h ^= (limb + s * 0x51ed27ULL) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  mix(den_);
  for (const auto& v : num_) mix(v);
  return h;
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return to_rational().get_str();
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j < degree(); ++j) {
    const Rational c = coeff(j);
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Rational a = abs(c);
    if (j == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << "z" << conductor_;
    if (j > 1) os << "^" << j;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << x.to_string(); }

}  // namespace harmonia
