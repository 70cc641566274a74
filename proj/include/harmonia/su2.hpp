#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "harmonia/cyclotomic.hpp"
#include "harmonia/space.hpp"

namespace harmonia {

/// The matrix ( z  -conj(w) ; w  conj(z) ) with z conj(z) + w conj(w) = 1.
struct SU2Element {
  Cyclotomic z{1};
  Cyclotomic w{0};

  static SU2Element identity() { return {}; }
  static SU2Element minus_identity() { return {Cyclotomic(-1), Cyclotomic(0)}; }

  SU2Element inverse() const { return {z.conj(), -w}; }
  SU2Element operator-() const { return {-z, -w}; }
  friend SU2Element operator*(const SU2Element& x, const SU2Element& y);
  friend bool operator==(const SU2Element& x, const SU2Element& y) {
    return x.z == y.z && x.w == y.w;
  }

  bool is_unitary() const { return z * z.conj() + w * w.conj() == Cyclotomic(1); }
  bool is_diagonal() const { return w.is_zero(); }
  bool is_antidiagonal() const { return z.is_zero(); }

  /// Applies the matrix to a column vector (p, q).
  std::pair<Cyclotomic, Cyclotomic> apply(const Cyclotomic& p, const Cyclotomic& q) const;

  SU2Element embed(int conductor) const { return {z.embed(conductor), w.embed(conductor)}; }
  SU2Element shrink() const;
  int conductor() const { return lcm_conductor(z.conductor(), w.conductor()); }

  /// Multiplicative order; throws LimitExceeded past `bound`.
  long order(long bound = 1000) const;

  std::size_t hash() const;
  std::string to_string() const;
};

struct SU2Hash {
  std::size_t operator()(const SU2Element& g) const { return g.hash(); }
};

/// Both lifts +-M of the order-n rotation of CP^1 fixing [p/q], where
/// M (p,q)^T = zeta_{2n} (p,q)^T. With conductor > 0 every entry is checked
/// to lie in Q(zeta_conductor) and represented there.
std::pair<SU2Element, SU2Element> rotation_from_fixed_point(const Cyclotomic& p,
                                                            const Cyclotomic& q, int n,
                                                            int conductor = 0);

struct BinaryGroup {
  std::string name;
  std::vector<SU2Element> elements;  // elements[0] is the identity
  std::vector<SU2Element> generators;
  int conductor = 1;

  std::size_t order() const { return elements.size(); }
  bool contains(const SU2Element& g) const;
  std::optional<std::size_t> index_of(const SU2Element& g) const;
};

inline constexpr std::size_t kClosureBound = 1000;

/// Breadth-first closure of the generators under right multiplication.
BinaryGroup generate_closure(std::vector<SU2Element> generators,
                             std::optional<std::size_t> expected_order = std::nullopt,
                             std::size_t bound = kClosureBound, std::string name = {});

/// Conductor the group of `space` is specified over: 60 for I*, 24 for O*
/// and T*, lcm(4, 2m) for D_m*, lcm(4, p) for L(p,1), 1 for S^3.
int nominal_conductor(const Space& space);

/// Canonical group of the space. Generators are built at the nominal
/// conductor and then stored in the smallest cyclotomic field containing
/// them, unless HARMONIA_CONDUCTOR_OVERRIDE names a conductor to embed into.
/// Results are cached.
const BinaryGroup& standard_group(const Space& space);

/// Uncached construction, honouring an explicit conductor (0 = minimal).
BinaryGroup build_standard_group(const Space& space, int conductor);

/// Value of HARMONIA_CONDUCTOR_OVERRIDE, or 0 when unset.
int conductor_override();

}  // namespace harmonia
