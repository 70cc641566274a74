#include "harmonia/verify.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "harmonia/errors.hpp"

namespace harmonia {

namespace {

// Square matrix with entries in Q(zeta_N), stored as integer coordinates
// over the power basis with one common denominator.
struct IntMatrix {
  int n = 0;
  int phi = 1;
  std::vector<Integer> v;  // (row * n + col) * phi + component
  Integer den = 1;

  const Integer* at(int r, int c) const {
    return &v[static_cast<std::size_t>((r * n + c) * phi)];
  }
};

// Integer coordinate vectors over the power basis of Q(zeta_N).
class IntField {
 public:
  explicit IntField(int conductor) : conductor_(canonical_conductor(conductor)), phi_(euler_phi(conductor_)) {
    for (int m = phi_; m <= 2 * phi_ - 2; ++m) red_.push_back(Cyclotomic::zeta(conductor_, m).numerators());
  }

  int conductor() const { return conductor_; }
  int phi() const { return phi_; }
  int wide() const { return 2 * phi_ - 1; }

  // wide += x * y, unreduced.
  void mul_acc_wide(Integer* wide, const Integer* x, const Integer* y) const {
    for (int e = 0; e < phi_; ++e) {
      if (x[e] == 0) continue;
      for (int f = 0; f < phi_; ++f)
        if (y[f] != 0) mpz_addmul(wide[e + f].get_mpz_t(), x[e].get_mpz_t(), y[f].get_mpz_t());
    }
  }

  // Folds slots phi .. 2 phi - 2 back into the first phi.
  void reduce(Integer* wide) const {
    for (int m = 2 * phi_ - 2; m >= phi_; --m) {
      if (wide[m] == 0) continue;
      const auto& row = red_[static_cast<std::size_t>(m - phi_)];
      for (int e = 0; e < phi_; ++e)
        if (row[static_cast<std::size_t>(e)] != 0)
          mpz_addmul(wide[e].get_mpz_t(), wide[m].get_mpz_t(), row[static_cast<std::size_t>(e)].get_mpz_t());
      wide[m] = 0;
    }
  }

 private:
  int conductor_;
  int phi_;
  std::vector<std::vector<Integer>> red_;
};

// Matrices M_h with row a = P^a Q^(h-a) for linear forms P, Q in two
// variables, coefficients indexed by the power of the first variable.
// Built degree by degree: row 0 of M_h is Q times row 0 of M_(h-1), row a
// is P times row a-1.
class Tower {
 public:
  // p0 + p1 x and q0 + q1 x.
  Tower(const IntField& field, const Cyclotomic& p0, const Cyclotomic& p1, const Cyclotomic& q0,
        const Cyclotomic& q1)
      : field_(&field) {
    const Cyclotomic in[4] = {p0.embed(field.conductor()), p1.embed(field.conductor()),
                              q0.embed(field.conductor()), q1.embed(field.conductor())};
    for (const auto& c : in) mpz_lcm(scale_.get_mpz_t(), scale_.get_mpz_t(), c.denominator().get_mpz_t());
    for (int i = 0; i < 4; ++i) {
      std::vector<Integer> v(static_cast<std::size_t>(field.phi()), Integer(0));
      const auto& nums = in[i].numerators();
      Integer f = scale_ / in[i].denominator();
      for (std::size_t e = 0; e < nums.size(); ++e) v[e] = nums[e] * f;
      forms_[i] = std::move(v);
    }
    IntMatrix m0;
    m0.n = 1;
    m0.phi = field.phi();
    m0.v.assign(static_cast<std::size_t>(field.phi()), Integer(0));
    m0.v[0] = 1;
    mats_.push_back(std::move(m0));
  }

  const IntMatrix& at(int h) {
    while (static_cast<int>(mats_.size()) <= h) extend();
    return mats_[static_cast<std::size_t>(h)];
  }

 private:
  void extend() {
    const IntMatrix& prev = mats_.back();
    const int phi = field_->phi();
    const int n = prev.n + 1;
    IntMatrix next;
    next.n = n;
    next.phi = phi;
    next.den = prev.den * scale_;
    next.v.assign(static_cast<std::size_t>(n * n * phi), Integer(0));
    std::vector<Integer> wide(static_cast<std::size_t>(field_->wide()));
    for (int a = 0; a < n; ++a) {
      const int src = a == 0 ? 0 : a - 1;
      const std::vector<Integer>& l0 = a == 0 ? forms_[2] : forms_[0];
      const std::vector<Integer>& l1 = a == 0 ? forms_[3] : forms_[1];
      for (int i = 0; i < n; ++i) {
        for (auto& x : wide) x = 0;
        if (i < prev.n) field_->mul_acc_wide(wide.data(), l0.data(), prev.at(src, i));
        if (i > 0) field_->mul_acc_wide(wide.data(), l1.data(), prev.at(src, i - 1));
        field_->reduce(wide.data());
        Integer* out = &next.v[static_cast<std::size_t>((a * n + i) * phi)];
        for (int e = 0; e < phi; ++e) out[e] = wide[static_cast<std::size_t>(e)];
      }
    }
    mats_.push_back(std::move(next));
  }

  const IntField* field_;
  Integer scale_ = 1;
  std::vector<Integer> forms_[4];
  std::vector<IntMatrix> mats_;
};

// Integer substitution tables of one element, built lazily per degree.
class ElementTables {
 public:
  ElementTables(const SU2Element& g, const IntField& field)
      : holo_(field, g.w.conj(), g.z.conj(), g.z, -g.w),
        anti_(field, g.w, g.z, g.z.conj(), -g.w.conj()),
        anti_inv_(field, -g.w, g.z.conj(), g.z, g.w.conj()) {}

  // Holomorphic action of gamma in degree h.
  const IntMatrix& holo(int h) { return holo_.at(h); }
  // Antiholomorphic action of gamma in degree j.
  const IntMatrix& anti(int j) { return anti_.at(j); }
  // Antiholomorphic action of gamma^-1 in degree j.
  const IntMatrix& anti_inverse(int j) { return anti_inv_.at(j); }

 private:
  Tower holo_, anti_, anti_inv_;
};

// A rational polynomial restricted to one bidegree (h, j), scaled to
// integers: c[a * (j+1) + b] multiplies alpha^a abar^b beta^(h-a) bbar^(j-b).
struct IntBlock {
  int h = 0;
  int j = 0;
  std::vector<Integer> c;
  std::vector<int> rows;  // distinct a with a nonzero entry
  std::vector<int> cols;  // distinct b with a nonzero entry
};

// Splits f (rational coefficients) into integer blocks sharing denominator `den`.
std::map<std::pair<int, int>, IntBlock> integer_blocks(const HPoly& f, Integer& den) {
  den = 1;
  for (const auto& [m, c] : f.terms())
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
  std::map<std::pair<int, int>, IntBlock> blocks;
  for (const auto& [m, c] : f.terms()) {
    int h = m.holomorphic_degree(), j = m.antiholomorphic_degree();
    auto [it, inserted] = blocks.try_emplace({h, j});
    IntBlock& b = it->second;
    if (inserted) {
      b.h = h;
      b.j = j;
      b.c.assign(static_cast<std::size_t>((h + 1) * (j + 1)), Integer(0));
    }
    b.c[static_cast<std::size_t>(m.e[0] * (j + 1) + m.e[1])] = c.numerators()[0] * (den / c.denominator());
  }
  for (auto& [key, b] : blocks) {
    std::vector<bool> r(static_cast<std::size_t>(b.h + 1)), s(static_cast<std::size_t>(b.j + 1));
    for (int a = 0; a <= b.h; ++a)
      for (int bb = 0; bb <= b.j; ++bb)
        if (b.c[static_cast<std::size_t>(a * (b.j + 1) + bb)] != 0) r[a] = s[bb] = true;
    for (int a = 0; a <= b.h; ++a)
      if (r[a]) b.rows.push_back(a);
    for (int bb = 0; bb <= b.j; ++bb)
      if (s[bb]) b.cols.push_back(bb);
  }
  return blocks;
}

// R_gamma f == f for rational f, tested as H_gamma f == A_{gamma^-1} f so
// that both sides are linear in f with no field multiplication.
bool split_invariant(const HPoly& f, ElementTables& t) {
  Integer den;
  auto blocks = integer_blocks(f, den);
  for (const auto& [key, b] : blocks) {
    const IntMatrix& hm = t.holo(b.h);
    const IntMatrix& am = t.anti_inverse(b.j);
    const int phi = hm.phi;
    const int w = b.j + 1;
    const std::size_t size = static_cast<std::size_t>((b.h + 1) * w * phi);
    std::vector<Integer> left(size, Integer(0)), right(size, Integer(0));
    for (int a : b.rows)
      for (int bb : b.cols) {
        const Integer& c = b.c[static_cast<std::size_t>(a * w + bb)];
        if (c == 0) continue;
        for (int a2 = 0; a2 <= b.h; ++a2) {
          const Integer* x = hm.at(a, a2);
          Integer* out = &left[static_cast<std::size_t>((a2 * w + bb) * phi)];
          for (int e = 0; e < phi; ++e)
            if (x[e] != 0) mpz_addmul(out[e].get_mpz_t(), c.get_mpz_t(), x[e].get_mpz_t());
        }
        for (int b2 = 0; b2 < w; ++b2) {
          const Integer* x = am.at(bb, b2);
          Integer* out = &right[static_cast<std::size_t>((a * w + b2) * phi)];
          for (int e = 0; e < phi; ++e)
            if (x[e] != 0) mpz_addmul(out[e].get_mpz_t(), c.get_mpz_t(), x[e].get_mpz_t());
        }
      }
    for (std::size_t i = 0; i < size; ++i) {
      if (left[i] == 0 && right[i] == 0) continue;
      if (left[i] * am.den != right[i] * hm.den) return false;
    }
  }
  return true;
}

std::vector<SU2Element> scope_elements(const BinaryGroup& group, Scope scope) {
  if (scope == Scope::Full) return group.elements;
  if (group.generators.empty()) return {group.elements.front()};
  return group.generators;
}

}  // namespace

struct InvarianceChecker::Impl {
  explicit Impl(int conductor) : field(conductor) {}
  IntField field;
  std::mutex mu;
  std::vector<std::unique_ptr<ElementTables>> tables;
};

InvarianceChecker::InvarianceChecker(const BinaryGroup& group, Scope scope)
    : elements_(scope_elements(group, scope)), impl_(new Impl(group.conductor)) {
  for (const auto& g : elements_)
    impl_->tables.push_back(std::make_unique<ElementTables>(g, impl_->field));
}

InvarianceChecker::~InvarianceChecker() { delete impl_; }

bool InvarianceChecker::check(const HPoly& f, std::size_t i) const {
  const SU2Element& g = elements_.at(i);
  if (g.is_diagonal() || g.is_antidiagonal() || !f.has_rational_coefficients())
    return group_act(g, f) == f;
  std::lock_guard lock(impl_->mu);
  return split_invariant(f, *impl_->tables[i]);
}

InvarianceResult InvarianceChecker::check(const HPoly& f) const {
  InvarianceResult r;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (check(f, i)) continue;
    r.invariant = false;
    r.element = i;
    r.witness = elements_[i];
    HPoly diff = group_act(elements_[i], f) - f;
    if (!diff.is_zero()) r.monomial = diff.leading().first;
    return r;
  }
  return r;
}

InvarianceResult is_invariant(const HPoly& f, const BinaryGroup& group, Scope scope) {
  return InvarianceChecker(group, scope).check(f);
}

InvarianceResult is_invariant(const HPoly& f, const SU2Element& gamma) {
  InvarianceResult r;
  HPoly diff = group_act(gamma, f) - f;
  if (diff.is_zero()) return r;
  r.invariant = false;
  r.element = 0;
  r.witness = gamma;
  r.monomial = diff.leading().first;
  return r;
}

namespace {

struct Coset {
  std::vector<SU2Element> transversal;
  int diagonal_order = 1;
};

// G = T Z with Z the (cyclic) subgroup of diagonal elements.
Coset coset_decomposition(const BinaryGroup& group) {
  std::vector<SU2Element> diag;
  for (const auto& g : group.elements)
    if (g.is_diagonal()) diag.push_back(g);
  Coset c;
  c.diagonal_order = static_cast<int>(diag.size());
  std::unordered_set<SU2Element, SU2Hash> covered;
  for (const auto& g : group.elements) {
    if (covered.count(g)) continue;
    c.transversal.push_back(g);
    for (const auto& z : diag) covered.insert(g * z);
  }
  return c;
}

// Projection onto invariants via G = T Z: the diagonal subgroup Z acts by
// phases, so averaging over it is a filter, leaving the transversal T.
class ReynoldsProjector {
 public:
  explicit ReynoldsProjector(const BinaryGroup& group)
      : coset_(coset_decomposition(group)), field_(group.conductor) {
    for (const auto& t : coset_.transversal)
      if (!t.is_diagonal() && !t.is_antidiagonal())
        tables_.emplace_back(std::make_unique<ElementTables>(t, field_));
      else
        tables_.emplace_back(nullptr);
  }

  HPoly operator()(const HPoly& f);

 private:
  void add_monomial_image(std::size_t ti, const IntBlock& b, std::vector<Integer>& acc, Integer& tden);
  void add_general_image(std::size_t ti, const IntBlock& b, std::vector<Integer>& acc, Integer& tden);

  Coset coset_;
  IntField field_;
  std::vector<std::unique_ptr<ElementTables>> tables_;
};

void ReynoldsProjector::add_monomial_image(std::size_t ti, const IntBlock& b, std::vector<Integer>& acc,
                                           Integer& tden) {
  const int w = b.j + 1;
  const int wide = field_.wide();
  HPoly part;
  for (int a : b.rows)
    for (int bb : b.cols) {
      const Integer& c = b.c[static_cast<std::size_t>(a * w + bb)];
      if (c != 0) part.add_term({a, bb, b.h - a, b.j - bb}, Cyclotomic(c));
    }
  HPoly moved = embed_coefficients(group_act(coset_.transversal[ti], part), field_.conductor());
  tden = 1;
  for (const auto& [m, c] : moved.terms())
    mpz_lcm(tden.get_mpz_t(), tden.get_mpz_t(), c.denominator().get_mpz_t());
  for (const auto& [m, c] : moved.terms()) {
    Integer s = tden / c.denominator();
    const auto& nums = c.numerators();
    Integer* cell = &acc[static_cast<std::size_t>((m.e[0] * w + m.e[1]) * wide)];
    for (std::size_t e = 0; e < nums.size(); ++e) cell[e] = nums[e] * s;
  }
}

void ReynoldsProjector::add_general_image(std::size_t ti, const IntBlock& b, std::vector<Integer>& acc,
                                          Integer& tden) {
  ElementTables& tab = *tables_[ti];
  const IntMatrix& hm = tab.holo(b.h);
  const IntMatrix& am = tab.anti(b.j);
  const int phi = field_.phi();
  const int wide = field_.wide();
  const int w = b.j + 1;
  tden = hm.den * am.den;
  // Antiholomorphic substitution first; rows a are untouched.
  std::vector<Integer> mid(static_cast<std::size_t>((b.h + 1) * w * phi), Integer(0));
  for (int a : b.rows)
    for (int bb : b.cols) {
      const Integer& c = b.c[static_cast<std::size_t>(a * w + bb)];
      if (c == 0) continue;
      for (int b2 = 0; b2 < w; ++b2) {
        const Integer* x = am.at(bb, b2);
        Integer* o = &mid[static_cast<std::size_t>((a * w + b2) * phi)];
        for (int e = 0; e < phi; ++e)
          if (x[e] != 0) mpz_addmul(o[e].get_mpz_t(), c.get_mpz_t(), x[e].get_mpz_t());
      }
    }
  for (int a : b.rows)
    for (int b2 = 0; b2 < w; ++b2) {
      const Integer* y = &mid[static_cast<std::size_t>((a * w + b2) * phi)];
      bool any = false;
      for (int e = 0; e < phi && !any; ++e) any = y[e] != 0;
      if (!any) continue;
      for (int a2 = 0; a2 <= b.h; ++a2)
        field_.mul_acc_wide(&acc[static_cast<std::size_t>((a2 * w + b2) * wide)], y, hm.at(a, a2));
    }
}

HPoly ReynoldsProjector::operator()(const HPoly& f) {
  const int n = coset_.diagonal_order;
  HPoly filtered;
  for (const auto& [m, c] : f.terms()) {
    int phase = (m.e[1] + m.e[2]) - (m.e[0] + m.e[3]);
    if (((phase % n) + n) % n == 0) filtered.add_term(m, c);
  }
  if (filtered.is_zero() || coset_.transversal.size() == 1) return filtered;

  const Rational scale = make_rational(1, static_cast<long>(coset_.transversal.size()));
  if (!filtered.has_rational_coefficients()) {
    HPoly sum;
    for (const auto& t : coset_.transversal) sum += group_act(t, filtered);
    return sum * Cyclotomic(scale);
  }

  const int phi = field_.phi();
  const int wide = field_.wide();
  Integer fden;
  auto blocks = integer_blocks(filtered, fden);
  HPoly out;
  for (const auto& [key, b] : blocks) {
    const int w = b.j + 1;
    const std::size_t cells = static_cast<std::size_t>((b.h + 1) * w);
    std::vector<Integer> total(cells * static_cast<std::size_t>(phi), Integer(0));
    Integer den = 1;
    for (std::size_t ti = 0; ti < coset_.transversal.size(); ++ti) {
      std::vector<Integer> acc(cells * static_cast<std::size_t>(wide), Integer(0));
      Integer tden;
      if (tables_[ti])
        add_general_image(ti, b, acc, tden);
      else
        add_monomial_image(ti, b, acc, tden);
      // total / den += acc / tden
      Integer g;
      mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), tden.get_mpz_t());
      Integer new_den = den / g * tden;
      Integer s_total = new_den / den, s_acc = new_den / tden;
      for (std::size_t cell = 0; cell < cells; ++cell) {
        Integer* o = &acc[cell * static_cast<std::size_t>(wide)];
        field_.reduce(o);
        Integer* tt = &total[cell * static_cast<std::size_t>(phi)];
        for (int e = 0; e < phi; ++e) {
          if (s_total != 1) tt[e] *= s_total;
          if (o[e] != 0) mpz_addmul(tt[e].get_mpz_t(), o[e].get_mpz_t(), s_acc.get_mpz_t());
        }
      }
      den = new_den;
    }
    const Integer full_den = den * fden * static_cast<long>(coset_.transversal.size());
    std::vector<Rational> comps(static_cast<std::size_t>(phi));
    for (int a = 0; a <= b.h; ++a)
      for (int bb = 0; bb < w; ++bb) {
        const Integer* tt = &total[static_cast<std::size_t>((a * w + bb) * phi)];
        bool any = false;
        for (int e = 0; e < phi; ++e) {
          comps[static_cast<std::size_t>(e)] = make_rational(tt[e], full_den);
          any = any || tt[e] != 0;
        }
        if (any) out.add_term({a, bb, b.h - a, b.j - bb}, Cyclotomic(field_.conductor(), comps));
      }
  }
  return out;
}

}  // namespace

HPoly reynolds_average(const HPoly& f, const BinaryGroup& group) {
  return ReynoldsProjector(group)(f);
}

bool is_harmonic(const HPoly& f) { return laplacian_r4(f).is_zero(); }

long s3_eigen_check(const HPoly& f, int k) {
  const long expected = -static_cast<long>(k) * (k + 2);
  if (f.is_zero()) return expected;
  auto deg = f.degree();
  if (!deg || *deg != k) throw std::invalid_argument("s3_eigen_check needs a homogeneous polynomial of degree k");
  if (!is_harmonic(f)) throw std::invalid_argument("s3_eigen_check needs a harmonic polynomial");
  const HPoly r2 = HPoly::monomial({1, 1, 0, 0}) + HPoly::monomial({0, 0, 1, 1});
  const HPoly ef = euler_operator(f);
  const HPoly lhs = r2 * laplacian_r4(f) - euler_operator(ef) - ef * Cyclotomic(2);
  if (!(lhs == f * Cyclotomic(expected)))
    throw std::logic_error("S^3 eigenvalue identity failed");
  return expected;
}

namespace {

void clear_content(HPoly& f) {
  Integer g = 0, l = 1;
  for (const auto& [m, c] : f.terms()) {
    for (const auto& v : c.numerators())
      if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  }
  if (g == 0 || (g == 1 && l == 1)) return;
  f *= Cyclotomic(make_rational(l, g));
}

}  // namespace

std::size_t rank_over_field(std::span<const HPoly> fs) {
  std::vector<const HPoly*> order;
  for (const auto& f : fs)
    if (!f.is_zero()) order.push_back(&f);
  std::stable_sort(order.begin(), order.end(),
                   [](const HPoly* a, const HPoly* b) { return a->size() < b->size(); });
  std::map<Monomial, HPoly, std::greater<>> pivots;
  for (const HPoly* f : order) {
    HPoly r = *f;
    clear_content(r);
    while (!r.is_zero()) {
      auto it = pivots.find(r.leading().first);
      if (it == pivots.end()) break;
      const HPoly& p = it->second;
      Cyclotomic lp = p.leading().second, lr = r.leading().second;
      r = r * lp - p * lr;
      clear_content(r);
    }
    if (!r.is_zero()) {
      Monomial lead = r.leading().first;
      pivots.emplace(lead, std::move(r));
    }
  }
  return pivots.size();
}

Rational monomial_integral(const Monomial& m) {
  if (m.e[0] != m.e[1] || m.e[2] != m.e[3]) return 0;
  const unsigned a = static_cast<unsigned>(m.e[0]), c = static_cast<unsigned>(m.e[2]);
  return make_rational(factorial(a) * factorial(c), factorial(a + c + 1));
}

Cyclotomic inner_product(const HPoly& f, const HPoly& g) {
  // Pair terms by (a - b, c - d): only equal pairs survive integration.
  std::map<std::pair<int, int>, std::vector<const std::pair<const Monomial, Cyclotomic>*>> by_shift;
  for (const auto& t : g.terms()) by_shift[{t.first.e[0] - t.first.e[1], t.first.e[2] - t.first.e[3]}].push_back(&t);
  Cyclotomic sum(0);
  for (const auto& [m, c] : f.terms()) {
    auto it = by_shift.find({m.e[0] - m.e[1], m.e[2] - m.e[3]});
    if (it == by_shift.end()) continue;
    for (const auto* t : it->second) {
      Monomial prod = m * t->first.conj();
      Rational v = monomial_integral(prod);
      if (v != 0) sum += c * t->second.conj() * Cyclotomic(v);
    }
  }
  return sum;
}

long invariant_dimension_oracle(const Space& space, int k, int bound) {
  if (k < 0) throw std::invalid_argument("negative wavenumber");
  if (k > bound)
    throw LimitExceeded("oracle refuses k = " + std::to_string(k) + " above bound " + std::to_string(bound));
  ReynoldsProjector project(standard_group(space));
  std::vector<HPoly> projected;
  for (int a = k; a >= 0; --a)
    for (auto& s : siblings(HPoly::monomial({a, 0, k - a, 0}))) {
      HPoly p = project(s);
      if (!p.is_zero()) projected.push_back(std::move(p));
    }
  return static_cast<long>(rank_over_field(projected));
}

std::string to_string(FiberDiagnosis d) {
  switch (d) {
    case FiberDiagnosis::Compatible: return "compatible";
    case FiberDiagnosis::Obstructed: return "obstructed";
    case FiberDiagnosis::VanishesOnFiber: return "vanishes-on-fiber";
  }
  return "?";
}

FiberResult fiber_periodicity(const HPoly& f, const SU2Element& gamma, const Cyclotomic& p,
                              const Cyclotomic& q) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("fiber point (0,0)");
  auto t = f.twist();
  if (!t) throw std::invalid_argument("fiber_periodicity needs a pure-twist polynomial");
  auto [p2, q2] = gamma.apply(p, q);
  Cyclotomic lambda = p.is_zero() ? q2 / q : p2 / p;
  if (!(p2 == lambda * p) || !(q2 == lambda * q))
    throw std::invalid_argument("element does not preserve the fiber");
  FiberResult r;
  r.twist = *t;
  r.corkscrew_order = lambda.root_order();
  if (evaluate_exact(f, p, q).is_zero()) {
    r.diagnosis = FiberDiagnosis::VanishesOnFiber;
  } else {
    r.diagnosis = (*t % r.corkscrew_order == 0) ? FiberDiagnosis::Compatible : FiberDiagnosis::Obstructed;
  }
  return r;
}

bool VerificationReport::overall() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void VerificationReport::add(std::string name, bool pass, std::string witness) {
  checks.push_back({std::move(name), pass, std::move(witness)});
}

VerificationReport verify_basis(const Space& space, int k, std::span<const HPoly> basis,
                                const VerifyOptions& options) {
  VerificationReport rep;
  rep.subject = space.tag() + " k=" + std::to_string(k);
  const BinaryGroup& group = standard_group(space);
  InvarianceChecker checker(group, options.full_group ? Scope::Full : Scope::Generators);
  for (std::size_t i = 0; i < checker.elements().size(); ++i) {
    std::string witness;
    for (std::size_t j = 0; j < basis.size() && witness.empty(); ++j) {
      if (checker.check(basis[j], i)) continue;
      HPoly diff = group_act(checker.elements()[i], basis[j]) - basis[j];
      witness = "basis[" + std::to_string(j) + "] not fixed by " + checker.elements()[i].to_string() +
                "; first differing monomial " + (diff.is_zero() ? "?" : diff.leading().first.to_string());
    }
    rep.add("invariance[" + std::to_string(i) + "]", witness.empty(), witness);
  }

  std::string harm, eig;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const HPoly& f = basis[j];
    if (harm.empty()) {
      HPoly lap = laplacian_r4(f);
      if (!lap.is_zero())
        harm = "basis[" + std::to_string(j) + "] has laplacian term " + lap.leading().first.to_string();
    }
    if (eig.empty()) {
      try {
        s3_eigen_check(f, k);
      } catch (const std::exception& e) {
        eig = "basis[" + std::to_string(j) + "]: " + e.what();
      }
    }
  }
  rep.add("harmonic", harm.empty(), harm);
  rep.add("eigenvalue", eig.empty(), eig.empty() ? "" : eig);

  const long expected = dimension(space, k);
  rep.add("dimension", static_cast<long>(basis.size()) == expected,
          "basis size " + std::to_string(basis.size()) + ", closed form " + std::to_string(expected));
  const std::size_t rank = rank_over_field(basis);
  rep.add("rank", rank == basis.size(),
          "rank " + std::to_string(rank) + " of " + std::to_string(basis.size()));
  if (rep.checks.back().pass) rep.checks.back().witness.clear();
  if (rep.checks[rep.checks.size() - 2].pass) rep.checks[rep.checks.size() - 2].witness.clear();

  if (options.oracle) {
    long o = invariant_dimension_oracle(space, k);
    rep.add("oracle", o == expected,
            o == expected ? "" : "oracle " + std::to_string(o) + ", closed form " + std::to_string(expected));
  }
  if (options.orthogonality) {
    std::string w;
    for (std::size_t i = 0; i < basis.size() && w.empty(); ++i)
      for (std::size_t j = i + 1; j < basis.size() && w.empty(); ++j) {
        if (basis[i].twist() == basis[j].twist()) continue;
        if (!inner_product(basis[i], basis[j]).is_zero())
          w = "basis[" + std::to_string(i) + "] and basis[" + std::to_string(j) + "] not orthogonal";
      }
    rep.add("orthogonality", w.empty(), w);
  }
  return rep;
}

}  // namespace harmonia
