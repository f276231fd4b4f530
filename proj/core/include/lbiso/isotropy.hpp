#pragma once

#include "lbiso/opmatrix.hpp"
#include "lbiso/params.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lbiso {

/// The ten families of rotation-invariant operator blocks acting on a
/// density/momentum pair (rho, J).  Each family member carries a Laplacian
/// power k.  The "perp" and "curl" families change sign under reflections;
/// they complete the classification under pure rotations.
enum class Family {
  lap_rho,             // lap^k rho           (mass row)
  lap_div_j,           // lap^k div J         (mass row)
  lap_div_jperp,       // lap^k div Jperp     (mass row, 2D)
  grad_lap_rho,        // grad lap^k rho      (momentum rows)
  lap_j,               // lap^k J
  grad_div_lap_j,      // grad div lap^k J
  gradperp_lap_rho,    // gradperp lap^k rho  (2D)
  lap_jperp,           // lap^k Jperp         (2D)
  grad_div_lap_jperp,  // grad div lap^k Jperp (2D)
  curl_lap_j,          // curl lap^k J        (3D)
};

/// Conventional coefficient symbol for a family in dimension d, e.g. "mu"
/// for lap^k J.  The 2D and 3D conventions differ for the grad-div family.
std::string family_symbol(int d, Family f);
/// Human-readable operator text such as "grad div lap J".
std::string family_text(Family f, int k);

struct BasisElement {
  Family family;
  int k;               // Laplacian power
  std::string label;   // symbol + "_" + k, e.g. "mu_1"
  std::string text;    // display form, e.g. "lap J"
  OpMatrix op;         // (d+1) x (d+1), homogeneous of the basis order
};

/// Exact rational rotations used for invariance testing: one 3-4-5 rotation
/// in 2D, two 3-4-5 rotations about distinct axes in 3D.  The group generated
/// by each set is dense in the rotation group, so a joint fixed point of the
/// set is fixed by every rotation.
const std::vector<RMatrix>& test_rotations(int d);

/// Conjugated rotation action on operator blocks: J transforms as a vector,
/// the derivative symbol as a covector.  An operator B is invariant when
/// rotate_operator(B, R) == B for all rotations R.
OpMatrix rotate_operator(const OpMatrix& op, const RMatrix& rot);

/// Complete basis of rotation-invariant (d+1) x (d+1) operator blocks of one
/// homogeneous degree ell, 1 <= ell <= 4.  Construction verifies exact
/// invariance of every element under test_rotations(d) and linear
/// independence; either failure throws.
class IsotropicBasis {
 public:
  IsotropicBasis(int d, int ell);

  int dimension() const { return d_; }
  int order() const { return ell_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const std::vector<BasisElement>& elements() const { return elems_; }
  const BasisElement* find(Family f, int k) const;

  /// Dimension of the joint fixed space of test_rotations(d) inside the full
  /// space of degree-ell operator blocks, computed exactly.  Completeness of
  /// the family means this equals size().
  int invariant_space_dimension() const;

 private:
  int d_;
  int ell_;
  std::vector<BasisElement> elems_;
};

struct DecomposedTerm {
  Family family;
  int k;
  std::string label;
  Rational coeff;
};

/// Result of resolving an operator against an IsotropicBasis: the unique
/// coefficients of the orthogonal projection onto the invariant span plus the
/// exact remainder.  The operator is rotation-invariant iff residual == 0.
struct IsotropicDecomposition {
  int d = 0;
  int ell = 0;
  std::vector<DecomposedTerm> terms;
  OpMatrix residual;

  bool isotropic() const { return residual.is_zero(); }
  const Rational& coefficient(Family f, int k) const;  // throws when absent
  const Rational* find(Family f, int k) const;
};

/// Exact projection of op onto the basis span, coefficient by coefficient
/// over derivative monomials; the reconstruction identity
/// sum coeff * element + residual == op always holds and is re-checked on
/// every call.
IsotropicDecomposition decompose(const OpMatrix& op, const IsotropicBasis& basis);

/// Named coefficients of the truncated evolution in physical form.  Signs
/// follow the conventional displays
///   d_t rho + div J + xi lap div J + eta4 lap^2 rho = 0,
///   d_t J + c0^2 grad rho - mu lap J - zeta grad div J + chi grad lap rho
///        + mu4 lap^2 J + zeta4 grad div lap J = 0.
/// Fields are present when the corresponding order was supplied.  gamma is
/// the 2D acoustic dissipation (mu + zeta)/2; zeta_b the 3D bulk viscosity
/// 3 zeta - mu.
struct PhysicalCoefficients {
  int d = 0;
  std::optional<Rational> c0_sq;             // order 1
  std::optional<Rational> mu, zeta;          // order 2
  std::optional<Rational> gamma, zeta_b;     // derived from order 2
  std::optional<Rational> xi, chi;           // order 3
  std::optional<Rational> eta4, mu4, zeta4;  // order 4
};

/// Reads the physical coefficients off decompositions of orders 1..L
/// (decs[j-1] must have ell == j).  Every residual must vanish; a nonzero
/// residual throws an Error naming the offending order.  The time step of p
/// supplies the grading factors dt^(j-1).
PhysicalCoefficients extract_physical(const std::vector<IsotropicDecomposition>& decs,
                                      const ParamPoint& p);

}  // namespace lbiso
