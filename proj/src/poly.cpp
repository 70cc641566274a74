#include "harmonia/poly.hpp"

#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace harmonia {

std::string Monomial::to_string() const {
  static const char* names[4] = {"a", "A", "b", "B"};
  std::string out;
  for (int v = 0; v < 4; ++v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[v];
    if (e[v] > 1) out += "^" + std::to_string(e[v]);
  }
  return out.empty() ? "1" : out;
}

HPoly::HPoly(const Cyclotomic& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

HPoly HPoly::monomial(const Monomial& m, const Cyclotomic& c) {
  HPoly f;
  if (!c.is_zero()) f.terms_.emplace(m, c);
  return f;
}

HPoly HPoly::variable(Var v) {
  Monomial m;
  m[v] = 1;
  return monomial(m);
}

HPoly HPoly::from_terms(std::vector<std::pair<Monomial, Cyclotomic>> terms) {
  HPoly f;
  for (auto& [m, c] : terms) f.add_term(m, c);
  return f;
}

Cyclotomic HPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Cyclotomic(0) : it->second;
}

const std::pair<const Monomial, Cyclotomic>& HPoly::leading() const {
  if (terms_.empty()) throw std::invalid_argument("zero polynomial has no leading term");
  return *terms_.begin();
}

void HPoly::add_term(const Monomial& m, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool HPoly::is_homogeneous() const { return terms_.empty() || degree().has_value(); }

std::optional<int> HPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  int k = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != k) return std::nullopt;
  return k;
}

std::optional<int> HPoly::twist() const {
  if (terms_.empty()) return std::nullopt;
  int t = terms_.begin()->first.twist();
  for (const auto& [m, c] : terms_)
    if (m.twist() != t) return std::nullopt;
  return t;
}

bool HPoly::is_holomorphic() const {
  for (const auto& [m, c] : terms_)
    if (m.antiholomorphic_degree() != 0) return false;
  return true;
}

bool HPoly::has_rational_coefficients() const {
  for (const auto& [m, c] : terms_)
    if (!c.is_rational()) return false;
  return true;
}

int HPoly::conductor() const {
  int n = 1;
  for (const auto& [m, c] : terms_) n = lcm_conductor(n, c.conductor());
  return n;
}

HPoly HPoly::operator-() const {
  HPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

HPoly& HPoly::operator+=(const HPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

HPoly& HPoly::operator-=(const HPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

HPoly& HPoly::operator*=(const Cyclotomic& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

HPoly operator*(const HPoly& a, const HPoly& b) {
  HPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

bool operator==(const HPoly& a, const HPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  return true;
}

HPoly HPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  HPoly result(1);
  HPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string HPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool unit_monomial = m.degree() == 0;
    if (c.is_rational()) {
      Rational q = c.to_rational();
      if (q < 0) {
        os << (first ? "-" : " - ");
        q = -q;
      } else if (!first) {
        os << " + ";
      }
      if (q != 1 || unit_monomial) {
        os << q.get_str();
        if (!unit_monomial) os << "*";
      }
    } else {
      if (!first) os << " + ";
      os << "(" << c << ")";
      if (!unit_monomial) os << "*";
    }
    if (!unit_monomial) os << m.to_string();
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const HPoly& f) { return os << f.to_string(); }

HPoly from_roots(std::span<const ProjectivePoint> roots) {
  HPoly f(1);
  for (const auto& r : roots) {
    if (r.p.is_zero() && r.q.is_zero()) throw std::invalid_argument("root (0,0)");
    HPoly factor = HPoly::monomial({1, 0, 0, 0}, r.q) + HPoly::monomial({0, 0, 1, 0}, -r.p);
    f *= factor;
  }
  return f;
}

HPoly partial_derivative(const HPoly& f, Var v) {
  HPoly r;
  for (const auto& [m, c] : f.terms()) {
    int e = m[v];
    if (e == 0) continue;
    Monomial n = m;
    n[v] = e - 1;
    r.add_term(n, c * Cyclotomic(static_cast<long>(e)));
  }
  return r;
}

HPoly laplacian_r4(const HPoly& f) {
  HPoly r;
  for (const auto& [m, c] : f.terms()) {
    const auto& e = m.e;
    if (e[0] > 0 && e[1] > 0)
      r.add_term({e[0] - 1, e[1] - 1, e[2], e[3]}, c * Cyclotomic(4L * e[0] * e[1]));
    if (e[2] > 0 && e[3] > 0)
      r.add_term({e[0], e[1], e[2] - 1, e[3] - 1}, c * Cyclotomic(4L * e[2] * e[3]));
  }
  return r;
}

HPoly twist_apply(const HPoly& f, TwistDirection direction) {
  HPoly r;
  for (const auto& [m, c] : f.terms()) {
    const auto& e = m.e;
    if (direction == TwistDirection::Minus) {
      if (e[0] > 0) r.add_term({e[0] - 1, e[1], e[2], e[3] + 1}, c * Cyclotomic(-long{e[0]}));
      if (e[2] > 0) r.add_term({e[0], e[1] + 1, e[2] - 1, e[3]}, c * Cyclotomic(long{e[2]}));
    } else {
      if (e[1] > 0) r.add_term({e[0], e[1] - 1, e[2] + 1, e[3]}, c * Cyclotomic(-long{e[1]}));
      if (e[3] > 0) r.add_term({e[0] + 1, e[1], e[2], e[3] - 1}, c * Cyclotomic(long{e[3]}));
    }
  }
  return r;
}

namespace {

using Univariate = std::vector<Cyclotomic>;  // index = power of alpha

Univariate multiply(const Univariate& x, const Univariate& y) {
  Univariate r(x.size() + y.size() - 1, Cyclotomic(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!y[j].is_zero()) r[i + j] += x[i] * y[j];
  }
  return r;
}

std::vector<Univariate> powers(const Univariate& linear, int h) {
  std::vector<Univariate> p;
  p.push_back({Cyclotomic(1)});
  for (int i = 1; i <= h; ++i) p.push_back(multiply(p.back(), linear));
  return p;
}

CycMatrix conj_matrix(CycMatrix m) {
  for (auto& row : m)
    for (auto& x : row) x = x.conj();
  return m;
}

// Terms grouped by (holomorphic degree, antiholomorphic degree).
struct Block {
  int h = 0;
  int j = 0;
  std::vector<Cyclotomic> c;  // c[a * (j+1) + b]: coefficient of alpha^a abar^b beta^(h-a) bbar^(j-b)
};

std::map<std::pair<int, int>, Block> split_blocks(const HPoly& f) {
  std::map<std::pair<int, int>, Block> blocks;
  for (const auto& [m, c] : f.terms()) {
    int h = m.holomorphic_degree(), j = m.antiholomorphic_degree();
    auto [it, inserted] = blocks.try_emplace({h, j});
    Block& b = it->second;
    if (inserted) {
      b.h = h;
      b.j = j;
      b.c.assign(static_cast<std::size_t>((h + 1) * (j + 1)), Cyclotomic(0));
    }
    b.c[static_cast<std::size_t>(m.e[0] * (j + 1) + m.e[1])] = c;
  }
  return blocks;
}

void emit_block(HPoly& out, const Block& b) {
  for (int a = 0; a <= b.h; ++a)
    for (int bb = 0; bb <= b.j; ++bb) {
      const auto& c = b.c[static_cast<std::size_t>(a * (b.j + 1) + bb)];
      if (!c.is_zero()) out.add_term({a, bb, b.h - a, b.j - bb}, c);
    }
}

Block apply_left(const Block& in, const CycMatrix& hm) {
  Block out{in.h, in.j, std::vector<Cyclotomic>(in.c.size(), Cyclotomic(0))};
  const int w = in.j + 1;
  for (int a = 0; a <= in.h; ++a)
    for (int b = 0; b < w; ++b) {
      const auto& c = in.c[static_cast<std::size_t>(a * w + b)];
      if (c.is_zero()) continue;
      const auto& row = hm[static_cast<std::size_t>(a)];
      for (int a2 = 0; a2 <= in.h; ++a2)
        if (!row[static_cast<std::size_t>(a2)].is_zero())
          out.c[static_cast<std::size_t>(a2 * w + b)] += c * row[static_cast<std::size_t>(a2)];
    }
  return out;
}

Block apply_right(const Block& in, const CycMatrix& am) {
  Block out{in.h, in.j, std::vector<Cyclotomic>(in.c.size(), Cyclotomic(0))};
  const int w = in.j + 1;
  for (int a = 0; a <= in.h; ++a)
    for (int b = 0; b < w; ++b) {
      const auto& c = in.c[static_cast<std::size_t>(a * w + b)];
      if (c.is_zero()) continue;
      const auto& row = am[static_cast<std::size_t>(b)];
      for (int b2 = 0; b2 < w; ++b2)
        if (!row[static_cast<std::size_t>(b2)].is_zero())
          out.c[static_cast<std::size_t>(a * w + b2)] += c * row[static_cast<std::size_t>(b2)];
    }
  return out;
}

// x^n for a unit-modulus x, negative n taken as conj(x)^-n.
class UnitPowers {
 public:
  explicit UnitPowers(Cyclotomic x) : x_(std::move(x)) {}
  const Cyclotomic& operator()(int n) {
    auto it = cache_.find(n);
    if (it == cache_.end())
      it = cache_.emplace(n, n >= 0 ? x_.pow(n) : x_.conj().pow(-n)).first;
    return it->second;
  }

 private:
  Cyclotomic x_;
  std::map<int, Cyclotomic> cache_;
};

// Monomials map to multiples of monomials under diagonal and antidiagonal
// elements.
HPoly act_monomial(const SU2Element& gamma, const HPoly& f, bool holo, bool anti) {
  HPoly out;
  if (gamma.is_diagonal()) {
    UnitPowers zp(gamma.z);
    for (const auto& [m, c] : f.terms()) {
      int n = (holo ? m.e[2] - m.e[0] : 0) + (anti ? m.e[1] - m.e[3] : 0);
      out.add_term(m, n == 0 ? c : c * zp(n));
    }
    return out;
  }
  UnitPowers wp(gamma.w);
  for (const auto& [m, c] : f.terms()) {
    auto [a, b, cc, d] = m.e;
    int n = 0, sign = 1;
    Monomial r = m;
    if (holo) {
      n += cc - a;
      if (cc % 2) sign = -sign;
      r.e[0] = cc;
      r.e[2] = a;
    }
    if (anti) {
      n += b - d;
      if (d % 2) sign = -sign;
      r.e[1] = d;
      r.e[3] = b;
    }
    Cyclotomic v = n == 0 ? c : c * wp(n);
    out.add_term(r, sign < 0 ? -v : v);
  }
  return out;
}

HPoly act(const SU2Element& gamma, const HPoly& f, bool holo, bool anti) {
  if (gamma.is_diagonal() || gamma.is_antidiagonal()) return act_monomial(gamma, f, holo, anti);
  HPoly out;
  std::map<int, CycMatrix> hcache, acache;
  auto hmat = [&](int h) -> const CycMatrix& {
    auto it = hcache.find(h);
    if (it == hcache.end()) it = hcache.emplace(h, substitution_matrix(gamma, h)).first;
    return it->second;
  };
  auto amat = [&](int j) -> const CycMatrix& {
    auto it = acache.find(j);
    if (it == acache.end()) it = acache.emplace(j, conj_matrix(hmat(j))).first;
    return it->second;
  };
  for (auto& [key, block] : split_blocks(f)) {
    Block b = std::move(block);
    if (holo) b = apply_left(b, hmat(b.h));
    if (anti) b = apply_right(b, amat(b.j));
    emit_block(out, b);
  }
  return out;
}

}  // namespace

CycMatrix substitution_matrix(const SU2Element& gamma, int h) {
  // gamma^-1 = (conj z, -w): alpha -> conj(z) alpha + conj(w) beta, beta -> -w alpha + z beta
  Univariate p = {gamma.w.conj(), gamma.z.conj()};
  Univariate q = {gamma.z, -gamma.w};
  auto pp = powers(p, h);
  auto qp = powers(q, h);
  CycMatrix m;
  m.reserve(static_cast<std::size_t>(h + 1));
  for (int a = 0; a <= h; ++a) m.push_back(multiply(pp[static_cast<std::size_t>(a)], qp[static_cast<std::size_t>(h - a)]));
  return m;
}

HPoly group_act(const SU2Element& gamma, const HPoly& f) { return act(gamma, f, true, true); }

HPoly group_act_holomorphic(const SU2Element& gamma, const HPoly& f) {
  return act(gamma, f, true, false);
}

HPoly group_act_antiholomorphic(const SU2Element& gamma, const HPoly& f) {
  return act(gamma, f, false, true);
}

HPoly conjugate_poly(const HPoly& f) {
  HPoly r;
  for (const auto& [m, c] : f.terms()) r.add_term(m.conj(), c.conj());
  return r;
}

DegreeTwist degree_twist(const HPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("degree_twist of the zero polynomial");
  DegreeTwist dt;
  dt.twist = f.twist();
  auto k = f.degree();
  dt.homogeneous = k.has_value();
  if (k) {
    dt.degree = *k;
  } else {
    for (const auto& [m, c] : f.terms()) dt.degree = std::max(dt.degree, m.degree());
  }
  return dt;
}

std::complex<double> evaluate(const HPoly& f, std::complex<double> alpha,
                              std::complex<double> beta) {
  const std::complex<double> vals[4] = {alpha, std::conj(alpha), beta, std::conj(beta)};
  std::vector<std::complex<double>> pw[4];
  int maxe[4] = {0, 0, 0, 0};
  for (const auto& [m, c] : f.terms())
    for (int v = 0; v < 4; ++v) maxe[v] = std::max(maxe[v], m.e[v]);
  for (int v = 0; v < 4; ++v) {
    pw[v].resize(static_cast<std::size_t>(maxe[v] + 1));
    pw[v][0] = 1.0;
    for (int i = 1; i <= maxe[v]; ++i) pw[v][i] = pw[v][i - 1] * vals[v];
  }
  std::complex<double> sum = 0.0;
  for (const auto& [m, c] : f.terms()) {
    std::complex<double> t = c.to_complex();
    for (int v = 0; v < 4; ++v) t *= pw[v][static_cast<std::size_t>(m.e[v])];
    sum += t;
  }
  return sum;
}

Cyclotomic evaluate_exact(const HPoly& f, const Cyclotomic& p, const Cyclotomic& q) {
  const Cyclotomic vals[4] = {p, p.conj(), q, q.conj()};
  std::vector<Cyclotomic> pw[4];
  int maxe[4] = {0, 0, 0, 0};
  for (const auto& [m, c] : f.terms())
    for (int v = 0; v < 4; ++v) maxe[v] = std::max(maxe[v], m.e[v]);
  for (int v = 0; v < 4; ++v) {
    pw[v].push_back(Cyclotomic(1));
    for (int i = 1; i <= maxe[v]; ++i) pw[v].push_back(pw[v].back() * vals[v]);
  }
  Cyclotomic sum(0);
  for (const auto& [m, c] : f.terms()) {
    Cyclotomic t = c;
    for (int v = 0; v < 4; ++v)
      if (m.e[v] > 0) t *= pw[v][static_cast<std::size_t>(m.e[v])];
    sum += t;
  }
  return sum;
}

HPoly euler_operator(const HPoly& f) {
  HPoly r;
  for (const auto& [m, c] : f.terms()) r.add_term(m, c * Cyclotomic(long{m.degree()}));
  return r;
}

HPoly shrink_coefficients(const HPoly& f) {
  std::vector<std::pair<Monomial, Cyclotomic>> shrunk;
  int n = 1;
  for (const auto& [m, c] : f.terms()) {
    shrunk.emplace_back(m, c.shrink());
    n = lcm_conductor(n, shrunk.back().second.conductor());
  }
  for (auto& [m, c] : shrunk) c = c.embed(n);
  return HPoly::from_terms(std::move(shrunk));
}

HPoly embed_coefficients(const HPoly& f, int conductor) {
  HPoly r;
  for (const auto& [m, c] : f.terms()) r.add_term(m, c.embed(conductor));
  return r;
}

HPoly primitive_normalize(const HPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("primitive_normalize of the zero polynomial");
  HPoly g;
  if (f.has_rational_coefficients()) {
    for (const auto& [m, c] : f.terms()) g.add_term(m, Cyclotomic(c.to_rational()));
  } else {
    g = shrink_coefficients(f);
  }
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : g.terms()) {
    for (const auto& v : c.numerators())
      if (v != 0) mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
  }
  int sign = 1;
  for (const auto& v : g.leading().second.numerators())
    if (v != 0) {
      sign = v < 0 ? -1 : 1;
      break;
    }
  Rational scale = make_rational(den_lcm, num_gcd);
  if (sign < 0) scale = -scale;
  if (scale == 1) return g;
  return g * Cyclotomic(scale);
}

HPoly normalize_leading(const HPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("normalize_leading of the zero polynomial");
  return f * f.leading().second.inverse();
}

}  // namespace harmonia
