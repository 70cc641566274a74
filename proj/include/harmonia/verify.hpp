#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "harmonia/modes.hpp"
#include "harmonia/poly.hpp"
#include "harmonia/su2.hpp"

namespace harmonia {

enum class Scope { Generators, Full };

struct InvarianceResult {
  bool invariant = true;
  std::optional<std::size_t> element;  // index into the scope list of the failing element
  std::optional<SU2Element> witness;
  std::optional<Monomial> monomial;    // leading monomial of R_gamma f - f
  explicit operator bool() const { return invariant; }
};

/// Exact test of group_act(gamma, f) == f for all gamma in scope.
InvarianceResult is_invariant(const HPoly& f, const BinaryGroup& group, Scope scope);
InvarianceResult is_invariant(const HPoly& f, const SU2Element& gamma);

/// Reuses per-element substitution tables across many polynomials.
class InvarianceChecker {
 public:
  InvarianceChecker(const BinaryGroup& group, Scope scope);
  ~InvarianceChecker();
  InvarianceChecker(const InvarianceChecker&) = delete;
  InvarianceChecker& operator=(const InvarianceChecker&) = delete;

  const std::vector<SU2Element>& elements() const { return elements_; }
  bool check(const HPoly& f, std::size_t element_index) const;
  InvarianceResult check(const HPoly& f) const;

 private:
  struct Impl;
  std::vector<SU2Element> elements_;
  Impl* impl_;
};

/// (1/|G|) sum over G of group_act(gamma, f).
HPoly reynolds_average(const HPoly& f, const BinaryGroup& group);

bool is_harmonic(const HPoly& f);

/// Verifies r^2 lap f - E(E f) - 2 E f = -k(k+2) f symbolically and returns
/// -k(k+2). Throws std::invalid_argument for non-harmonic or inhomogeneous f.
long s3_eigen_check(const HPoly& f, int k);

/// Exact rank over the coefficient field (fraction-free elimination).
std::size_t rank_over_field(std::span<const HPoly> fs);

/// Integral of f conj(g) over S^3, in units of 2 pi^2.
Cyclotomic inner_product(const HPoly& f, const HPoly& g);

/// Integral of a single monomial over S^3 in units of 2 pi^2.
Rational monomial_integral(const Monomial& m);

inline constexpr int kOracleBound = 40;

/// Rank of the Reynolds projections of all (k+1)^2 siblings of the
/// monomials alpha^a beta^b, a+b = k. Throws LimitExceeded past `bound`.
long invariant_dimension_oracle(const Space& space, int k, int bound = kOracleBound);

enum class FiberDiagnosis { Compatible, Obstructed, VanishesOnFiber };

struct FiberResult {
  FiberDiagnosis diagnosis;
  long corkscrew_order = 1;  // order of the eigenvalue of gamma on the fiber
  int twist = 0;
};

std::string to_string(FiberDiagnosis d);

/// Throws std::invalid_argument when gamma does not map the fiber over
/// [p/q] to itself or f is not of pure twist.
FiberResult fiber_periodicity(const HPoly& f, const SU2Element& gamma, const Cyclotomic& p,
                              const Cyclotomic& q);

struct Check {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct VerificationReport {
  std::string subject;
  std::vector<Check> checks;
  bool overall() const;
  void add(std::string name, bool pass, std::string witness = {});
};

struct VerifyOptions {
  bool full_group = false;
  bool oracle = false;
  bool orthogonality = false;
};

/// Invariance (one check per element in scope), harmonicity, eigenvalue,
/// rank and optionally oracle and orthogonality checks for one basis.
VerificationReport verify_basis(const Space& space, int k, std::span<const HPoly> basis,
                                const VerifyOptions& options);

}  // namespace harmonia
