#pragma once

#include <string>
#include <vector>

#include "harmonia/poly.hpp"
#include "harmonia/space.hpp"
#include "harmonia/su2.hpp"

namespace harmonia {

struct NamedPoly {
  std::string name;
  HPoly poly;
  int degree = 0;
};

/// Named invariants of a polyhedral or dihedral group. `base` holds the
/// three polynomials base modes are built from; `tentative` holds the
/// vertex / edge / face polynomials they come from.
struct KleinCatalog {
  Space space;
  std::vector<NamedPoly> base;
  std::vector<NamedPoly> tentative;

  /// Looks up either list by name; throws std::out_of_range.
  const HPoly& operator[](const std::string& name) const;
};

/// Throws std::invalid_argument for S^3 and lens spaces. Cached.
const KleinCatalog& klein_polynomials(const Space& space);

/// Points of CP^1 fixed by some non-central element, split into group
/// orbits. Points are normalized to [r/1] or [1/0].
std::vector<std::vector<ProjectivePoint>> fixed_point_orbits(const BinaryGroup& group,
                                                             int conductor);

/// Orbit polynomial normalized to leading coefficient 1, coefficients in
/// their smallest cyclotomic fields.
HPoly orbit_polynomial(const std::vector<ProjectivePoint>& orbit);

/// Throws std::invalid_argument for odd or negative k and non-polyhedral spaces.
int k_tilde(const Space& space, int k);

std::vector<HPoly> base_modes(const Space& space, int k);

enum class Normalization { Primitive, ConjugatePaired };

/// [f, N(twist_- f), ..., N(twist_-^k f)]. Throws std::invalid_argument
/// unless f is homogeneous of degree k with pure twist k.
std::vector<HPoly> siblings(const HPoly& f, Normalization norm = Normalization::Primitive);

struct ModeBasis {
  Space space;
  int k = 0;
  int conductor = 1;
  std::vector<HPoly> base_modes;
  std::vector<HPoly> basis;
  long dimension = 0;
};

ModeBasis full_basis(const Space& space, int k, Normalization norm = Normalization::Primitive);

/// Closed-form dimension of the degree-k eigenspace.
long dimension(const Space& space, int k);

}  // namespace harmonia
