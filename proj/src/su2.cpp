#include "harmonia/su2.hpp"

#include <cstdlib>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "harmonia/errors.hpp"

namespace harmonia {

SU2Element operator*(const SU2Element& x, const SU2Element& y) {
  return {x.z * y.z - x.w.conj() * y.w, x.w * y.z + x.z.conj() * y.w};
}

std::pair<Cyclotomic, Cyclotomic> SU2Element::apply(const Cyclotomic& p,
                                                    const Cyclotomic& q) const {
  return {z * p - w.conj() * q, w * p + z.conj() * q};
}

SU2Element SU2Element::shrink() const {
  Cyclotomic zs = z.shrink();
  Cyclotomic ws = w.shrink();
  int c = lcm_conductor(zs.conductor(), ws.conductor());
  return {zs.embed(c), ws.embed(c)};
}

long SU2Element::order(long bound) const {
  SU2Element x = *this;
  for (long n = 1; n <= bound; ++n) {
    if (x == identity()) return n;
    x = x * *this;
  }
  throw LimitExceeded("element order exceeds " + std::to_string(bound));
}

std::size_t SU2Element::hash() const {
  return z.hash() * 1000003u ^ w.hash();
}

std::string SU2Element::to_string() const {
  std::ostringstream os;
  os << "[z=" << z << ", w=" << w << "]";
  return os.str();
}

std::pair<SU2Element, SU2Element> rotation_from_fixed_point(const Cyclotomic& p,
                                                            const Cyclotomic& q, int n,
                                                            int conductor) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("fixed point (0,0)");
  if (n < 1) throw std::invalid_argument("rotation order must be positive");
  Cyclotomic e = root_of_unity(1, 2 * n);
  if (conductor > 0) {
    if (!e.lies_in(conductor))
      throw ConfigurationError("zeta_" + std::to_string(2 * n) + " is not in Q(zeta_" +
                               std::to_string(conductor) + ")");
    if (!p.lies_in(conductor) || !q.lies_in(conductor))
      throw ConfigurationError("fixed point is not in Q(zeta_" + std::to_string(conductor) + ")");
  }
  Cyclotomic pp = p * p.conj();
  Cyclotomic qq = q * q.conj();
  Cyclotomic s_inv = (pp + qq).inverse();
  Cyclotomic ebar = e.conj();
  SU2Element m{(pp * e + qq * ebar) * s_inv, (p.conj() * q * (e - ebar) * s_inv)};
  if (conductor > 0) m = m.embed(lcm_conductor(m.conductor(), conductor));
  return {m, -m};
}

bool BinaryGroup::contains(const SU2Element& g) const { return index_of(g).has_value(); }

std::optional<std::size_t> BinaryGroup::index_of(const SU2Element& g) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == g) return i;
  return std::nullopt;
}

BinaryGroup generate_closure(std::vector<SU2Element> generators,
                             std::optional<std::size_t> expected_order, std::size_t bound,
                             std::string name) {
  int cond = 1;
  for (const auto& g : generators) {
    if (!g.is_unitary()) throw std::invalid_argument("generator is not in SU(2): " + g.to_string());
    cond = lcm_conductor(cond, g.conductor());
  }
  for (auto& g : generators) g = g.embed(cond);

  BinaryGroup group;
  group.name = std::move(name);
  group.conductor = cond;
  std::unordered_map<SU2Element, std::size_t, SU2Hash> seen;
  SU2Element one = SU2Element::identity().embed(cond);
  group.elements.push_back(one);
  seen.emplace(one, 0);
  for (std::size_t head = 0; head < group.elements.size(); ++head) {
    for (const auto& g : generators) {
      SU2Element y = group.elements[head] * g;
      if (seen.count(y)) continue;
      if (group.elements.size() >= bound)
        throw LimitExceeded("closure exceeds " + std::to_string(bound) + " elements");
      seen.emplace(y, group.elements.size());
      group.elements.push_back(std::move(y));
    }
  }
  if (expected_order && group.elements.size() != *expected_order)
    throw ConstructionError("closure has order " + std::to_string(group.elements.size()) +
                            ", expected " + std::to_string(*expected_order));
  group.generators = std::move(generators);
  return group;
}

int nominal_conductor(const Space& space) {
  switch (space.kind) {
    case Space::Kind::S3: return 1;
    case Space::Kind::Lens: return std::lcm(4, space.param);
    case Space::Kind::Dihedral: return std::lcm(4, 2 * space.param);
    case Space::Kind::Tetrahedral:
    case Space::Kind::Octahedral: return 24;
    case Space::Kind::Icosahedral: return 60;
  }
  return 1;
}

namespace {

void push_rotation(std::vector<SU2Element>& gens, const Cyclotomic& p, const Cyclotomic& q, int n,
                   int conductor) {
  auto [m, minus_m] = rotation_from_fixed_point(p, q, n, conductor);
  gens.push_back(m);
  gens.push_back(minus_m);
}

std::size_t expected_order(const Space& space) {
  switch (space.kind) {
    case Space::Kind::S3: return 1;
    case Space::Kind::Lens: return static_cast<std::size_t>(space.param);
    case Space::Kind::Dihedral: return 4 * static_cast<std::size_t>(space.param);
    case Space::Kind::Tetrahedral: return 24;
    case Space::Kind::Octahedral: return 48;
    case Space::Kind::Icosahedral: return 120;
  }
  return 1;
}

}  // namespace

BinaryGroup build_standard_group(const Space& space, int conductor) {
  const int nominal = nominal_conductor(space);
  const Cyclotomic zero(0), one(1);
  std::vector<SU2Element> gens;
  switch (space.kind) {
    case Space::Kind::S3:
      break;
    case Space::Kind::Lens: {
      Cyclotomic zp = root_of_unity(1, space.param).embed(nominal);
      gens.push_back({zp, zero});
      break;
    }
    case Space::Kind::Dihedral:
      push_rotation(gens, zero, one, space.param, nominal);
      push_rotation(gens, one, one, 2, nominal);
      break;
    case Space::Kind::Tetrahedral: {
      Cyclotomic sqrt3 = root_of_unity(2, 24) + root_of_unity(-2, 24);
      push_rotation(gens, zero, one, 2, nominal);
      push_rotation(gens, one, one, 2, nominal);
      push_rotation(gens, one + imaginary_unit(), one + sqrt3, 3, nominal);
      break;
    }
    case Space::Kind::Octahedral:
      push_rotation(gens, zero, one, 4, nominal);
      push_rotation(gens, one, one, 4, nominal);
      break;
    case Space::Kind::Icosahedral: {
      Cyclotomic tau = root_of_unity(1, 5) + root_of_unity(4, 5);
      push_rotation(gens, zero, one, 5, nominal);
      push_rotation(gens, tau, one, 5, nominal);
      break;
    }
  }
  int target = 1;
  for (auto& g : gens) {
    g = g.shrink();
    target = lcm_conductor(target, g.conductor());
  }
  if (conductor > 0) {
    if (conductor % target != 0 && canonical_conductor(conductor) % target != 0)
      throw ConfigurationError("group " + space.tag() + " does not fit in Q(zeta_" +
                               std::to_string(conductor) + ")");
    target = canonical_conductor(conductor);
  }
  for (auto& g : gens) g = g.embed(target);
  return generate_closure(std::move(gens), expected_order(space), kClosureBound, space.tag());
}

int conductor_override() {
  const char* env = std::getenv("HARMONIA_CONDUCTOR_OVERRIDE");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 100000)
    throw ConfigurationError(std::string("bad HARMONIA_CONDUCTOR_OVERRIDE '") + env + "'");
  return static_cast<int>(v);
}

const BinaryGroup& standard_group(const Space& space) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::unique_ptr<BinaryGroup>> cache;
  const int conductor = conductor_override();
  std::lock_guard lock(mu);
  auto key = std::make_tuple(static_cast<int>(space.kind), space.param, conductor);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<BinaryGroup>(build_standard_group(space, conductor)))
             .first;
  return *it->second;
}

}  // namespace harmonia
