#include "harmonia/modes.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

#include "harmonia/errors.hpp"

namespace harmonia {

namespace {

ProjectivePoint projective_normalize(const Cyclotomic& p, const Cyclotomic& q) {
  if (q.is_zero()) return {Cyclotomic(1), Cyclotomic(0)};
  return {p / q, Cyclotomic(1)};
}

bool same_point(const ProjectivePoint& x, const ProjectivePoint& y) {
  return x.p == y.p && x.q == y.q;
}

struct PointHash {
  std::size_t operator()(const ProjectivePoint& x) const { return x.p.hash() * 31u ^ x.q.hash(); }
};
struct PointEq {
  bool operator()(const ProjectivePoint& x, const ProjectivePoint& y) const { return same_point(x, y); }
};
using PointSet = std::unordered_set<ProjectivePoint, PointHash, PointEq>;

std::vector<ProjectivePoint> orbit_of(const ProjectivePoint& x, const BinaryGroup& group,
                                      int conductor) {
  std::vector<ProjectivePoint> orbit;
  PointSet seen;
  for (const auto& g : group.elements) {
    auto [p, q] = g.embed(lcm_conductor(g.conductor(), conductor)).apply(x.p, x.q);
    ProjectivePoint y = projective_normalize(p, q);
    if (seen.insert(y).second) orbit.push_back(y);
  }
  return orbit;
}

NamedPoly named(std::string name, HPoly f) {
  int k = f.degree().value_or(0);
  return {std::move(name), std::move(f), k};
}

KleinCatalog build_polyhedral(const Space& space) {
  const BinaryGroup& group = standard_group(space);
  const int conductor = lcm_conductor(nominal_conductor(space), group.conductor);
  auto orbits = fixed_point_orbits(group, conductor);
  std::map<std::size_t, std::vector<HPoly>> by_size;
  for (const auto& orbit : orbits) by_size[orbit.size()].push_back(orbit_polynomial(orbit));
  auto take = [&](std::size_t size, std::size_t count) -> std::vector<HPoly>& {
    auto it = by_size.find(size);
    if (it == by_size.end() || it->second.size() != count)
      throw ConstructionError("unexpected fixed-point orbit structure for " + space.tag());
    return it->second;
  };

  KleinCatalog cat{space, {}, {}};
  switch (space.kind) {
    case Space::Kind::Icosahedral:
      cat.base = {named("I12", take(12, 1)[0]), named("I30", take(30, 1)[0]),
                  named("I20", take(20, 1)[0])};
      break;
    case Space::Kind::Octahedral: {
      HPoly o6 = take(6, 1)[0], o8 = take(8, 1)[0], o12 = take(12, 1)[0];
      cat.tentative = {named("O'6", o6), named("O'12", o12), named("O'8", o8)};
      cat.base = {named("O8", o8), named("O12", o6 * o6), named("O18", o6 * o12)};
      break;
    }
    case Space::Kind::Tetrahedral: {
      HPoly t6 = take(6, 1)[0];
      auto& fours = take(4, 2);
      const Monomial mid{2, 0, 2, 0};
      const bool first_up = fours[0].coeff(mid).to_complex().imag() > 0;
      HPoly t4a = first_up ? fours[0] : fours[1];
      HPoly t4b = first_up ? fours[1] : fours[0];
      HPoly t12 = (t4a.pow(3) + t4b.pow(3)) * Cyclotomic(make_rational(1, 2));
      cat.tentative = {named("T'4a", t4a), named("T'6", t6), named("T'4b", t4b)};
      cat.base = {named("T6", t6), named("T8", t4a * t4b), named("T12", t12)};
      break;
    }
    default:
      break;
  }
  for (auto& e : cat.base) {
    if (!e.poly.has_rational_coefficients())
      throw ConstructionError(e.name + " has non-rational coefficients");
    e.poly = primitive_normalize(e.poly);
  }
  return cat;
}

KleinCatalog build_dihedral(const Space& space) {
  const BinaryGroup& group = standard_group(space);
  const int m = space.param;
  const int conductor = lcm_conductor(nominal_conductor(space), group.conductor);
  auto poly_of = [&](const Cyclotomic& seed) {
    return orbit_polynomial(orbit_of({seed.embed(lcm_conductor(seed.conductor(), conductor)),
                                      Cyclotomic(1)},
                                     group, conductor));
  };
  HPoly dv = poly_of(Cyclotomic(1));
  HPoly de = poly_of(root_of_unity(1, 2 * m));
  HPoly df = poly_of(Cyclotomic(0));
  HPoly d4 = df * df;
  HPoly d2m, d2m2;
  if (m % 2 == 1) {
    d2m = dv * de;
    d2m2 = df * (de * de - Cyclotomic(2) * df.pow(m));
  } else {
    d2m = de * de - Cyclotomic(2) * df.pow(m);
    d2m2 = df * dv * de;
  }
  KleinCatalog cat{space, {}, {}};
  cat.tentative = {named("D'v", dv), named("D'e", de), named("D'f", df)};
  cat.base = {named("D4", d4), named("D" + std::to_string(2 * m), d2m),
              named("D" + std::to_string(2 * m + 2), d2m2)};
  return cat;
}

}  // namespace

const HPoly& KleinCatalog::operator[](const std::string& name) const {
  for (const auto& e : base)
    if (e.name == name) return e.poly;
  for (const auto& e : tentative)
    if (e.name == name) return e.poly;
  throw std::out_of_range("no polynomial named " + name + " for " + space.tag());
}

std::vector<std::vector<ProjectivePoint>> fixed_point_orbits(const BinaryGroup& group,
                                                             int conductor) {
  conductor = lcm_conductor(conductor, group.conductor);
  const SU2Element one = SU2Element::identity();
  const SU2Element minus_one = SU2Element::minus_identity();
  std::vector<ProjectivePoint> points;
  PointSet seen;
  auto add = [&](const Cyclotomic& p, const Cyclotomic& q) {
    ProjectivePoint x = projective_normalize(p, q);
    if (seen.insert(x).second) points.push_back(x);
  };
  for (const auto& g0 : group.elements) {
    if (g0 == one || g0 == minus_one) continue;
    SU2Element g = g0.embed(conductor);
    if (g.is_diagonal()) {
      add(Cyclotomic(0), Cyclotomic(1));
      add(Cyclotomic(1), Cyclotomic(0));
      continue;
    }
    const long order = g.order();
    const Cyclotomic trace = g.z + g.z.conj();
    bool found = false;
    for (long r = 1; r < order; ++r) {
      if (std::gcd(r, order) != 1) continue;
      Cyclotomic lambda = root_of_unity(r, static_cast<int>(order));
      if (!(lambda + lambda.conj() == trace)) continue;
      if (!lambda.lies_in(conductor))
        throw ConfigurationError("eigenvalue outside Q(zeta_" + std::to_string(conductor) + ")");
      add(g.w.conj(), g.z - lambda);
      found = true;
    }
    if (!found) throw ConstructionError("no eigenvalue found for " + g.to_string());
  }
  std::vector<std::vector<ProjectivePoint>> orbits;
  PointSet assigned;
  for (const auto& x : points) {
    if (assigned.count(x)) continue;
    auto orbit = orbit_of(x, group, conductor);
    for (const auto& y : orbit) assigned.insert(y);
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

HPoly orbit_polynomial(const std::vector<ProjectivePoint>& orbit) {
  HPoly f = normalize_leading(from_roots(orbit));
  HPoly r;
  for (const auto& [m, c] : f.terms())
    r.add_term(m, c.is_rational() ? Cyclotomic(c.to_rational()) : c.shrink());
  return r;
}

const KleinCatalog& klein_polynomials(const Space& space) {
  if (space.kind == Space::Kind::S3 || space.kind == Space::Kind::Lens)
    throw std::invalid_argument("no Klein polynomials for " + space.tag());
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::unique_ptr<KleinCatalog>> cache;
  auto key = std::make_tuple(static_cast<int>(space.kind), space.param, conductor_override());
  std::lock_guard lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto cat = space.kind == Space::Kind::Dihedral ? build_dihedral(space) : build_polyhedral(space);
    it = cache.emplace(key, std::make_unique<KleinCatalog>(std::move(cat))).first;
  }
  return *it->second;
}

int k_tilde(const Space& space, int k) {
  if (k < 0 || k % 2 != 0) throw std::invalid_argument("k_tilde needs even k >= 0");
  const int h = k / 2;
  switch (space.kind) {
    case Space::Kind::Icosahedral: return h / 5 + h / 3 + h / 2 - h;
    case Space::Kind::Octahedral: return h / 2 + h / 3 + h / 4 - h;
    case Space::Kind::Tetrahedral: return h / 2 + 2 * (h / 3) - h;
    default: throw std::invalid_argument("k_tilde is defined for polyhedral spaces only");
  }
}

namespace {

std::vector<HPoly> dihedral_modes(const Space& space, int k) {
  const KleinCatalog& cat = klein_polynomials(space);
  const int m = space.param;
  const HPoly& d4 = cat.base[0].poly;
  const HPoly& d2m = cat.base[1].poly;
  const HPoly& d2m2 = cat.base[2].poly;
  std::vector<HPoly> prev;
  for (int kk = k % 4; kk <= k; kk += 4) {
    std::vector<HPoly> cur;
    for (const auto& f : prev) cur.push_back(d4 * f);
    if (kk % (2 * m) == 0) cur.push_back(d2m.pow(kk / (2 * m)));
    if (kk >= 2 * m + 2 && (kk - 2) % (2 * m) == 0)
      cur.push_back(d2m.pow((kk - 2 * m - 2) / (2 * m)) * d2m2);
    prev = std::move(cur);
  }
  return prev;
}

}  // namespace

std::vector<HPoly> base_modes(const Space& space, int k) {
  if (k < 0) throw std::invalid_argument("negative wavenumber");
  std::vector<HPoly> out;
  if (space.kind == Space::Kind::S3 || space.kind == Space::Kind::Lens) {
    const int p = space.kind == Space::Kind::Lens ? space.param : 1;
    for (int a = k; a >= 0; --a)
      if ((a - (k - a)) % p == 0) out.push_back(HPoly::monomial({a, 0, k - a, 0}));
    return out;
  }
  if (k % 2 != 0) return out;
  if (space.kind == Space::Kind::Dihedral) return dihedral_modes(space, k);

  const KleinCatalog& cat = klein_polynomials(space);
  const int kt = k_tilde(space, k);
  const int h = k / 2;
  for (int i = 0; i <= kt; ++i) {
    switch (space.kind) {
      case Space::Kind::Icosahedral:
        out.push_back(cat["I12"].pow(5 * i + h % 5) * cat["I20"].pow(3 * (kt - i) + h % 3) *
                      cat["I30"].pow(h % 2));
        break;
      case Space::Kind::Octahedral:
        out.push_back(cat["O8"].pow(3 * i + h % 3) *
                      cat["O12"].pow(2 * (kt - i) + (h % 4 - h % 2) / 2) * cat["O18"].pow(h % 2));
        break;
      case Space::Kind::Tetrahedral:
        out.push_back(cat["T6"].pow(2 * i + h % 2) * cat["T8"].pow(h % 3) *
                      cat["T12"].pow(kt - i));
        break;
      default:
        break;
    }
  }
  return out;
}

namespace {

// c with a == c * b, if the two are proportional.
std::optional<Cyclotomic> ratio(const HPoly& a, const HPoly& b) {
  if (a.size() != b.size() || a.is_zero()) return std::nullopt;
  Cyclotomic c = a.leading().second / b.leading().second;
  if (a == b * c) return c;
  return std::nullopt;
}

}  // namespace

std::vector<HPoly> siblings(const HPoly& f, Normalization norm) {
  auto k = f.degree();
  auto t = f.twist();
  if (f.is_zero() || !k || !t || *t != *k)
    throw std::invalid_argument("siblings need a homogeneous polynomial of pure twist equal to its degree");
  std::vector<HPoly> out{f};
  HPoly cur = f;
  for (int j = 1; j <= *k; ++j) {
    cur = primitive_normalize(twist_apply(cur, TwistDirection::Minus));
    out.push_back(cur);
  }
  if (norm == Normalization::ConjugatePaired) {
    const int n = *k;
    for (int i = 0; 2 * i < n; ++i) {
      HPoly c = conjugate_poly(out[static_cast<std::size_t>(i)]);
      if (ratio(c, out[static_cast<std::size_t>(n - i)])) out[static_cast<std::size_t>(n - i)] = c;
    }
    if (n % 2 == 0) {
      HPoly& mid = out[static_cast<std::size_t>(n / 2)];
      if (conjugate_poly(mid) == -mid) mid = mid * imaginary_unit();
    }
  }
  return out;
}

long dimension(const Space& space, int k) {
  if (k < 0) throw std::invalid_argument("negative wavenumber");
  const long k1 = k + 1;
  auto floordiv = [](long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
  switch (space.kind) {
    case Space::Kind::S3: return k1 * k1;
    case Space::Kind::Lens: {
      const long p = space.param;
      if (p % 2 == 0) return k % 2 == 0 ? (2 * (k / p) + 1) * k1 : 0;
      if (k % 2 == 0) return (2 * (k / (2 * p)) + 1) * k1;
      return 2 * (floordiv(k - p, 2 * p) + 1) * k1;
    }
    case Space::Kind::Dihedral:
      if (k % 2 != 0) return 0;
      return (2 * ((k / 2) / 2) + (k / 2) / space.param - k / 2 + 1) * k1;
    default:
      if (k % 2 != 0) return 0;
      return (k_tilde(space, k) + 1) * k1;
  }
}

ModeBasis full_basis(const Space& space, int k, Normalization norm) {
  ModeBasis mb;
  mb.space = space;
  mb.k = k;
  mb.conductor = space.kind == Space::Kind::S3 ? 1 : standard_group(space).conductor;
  mb.base_modes = base_modes(space, k);
  for (const auto& f : mb.base_modes)
    for (auto& s : siblings(f, norm)) mb.basis.push_back(std::move(s));
  mb.dimension = static_cast<long>(mb.basis.size());
  return mb;
}

}  // namespace harmonia
