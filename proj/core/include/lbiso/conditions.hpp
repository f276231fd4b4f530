#pragma once

#include "lbiso/expr.hpp"
#include "lbiso/isotropy.hpp"
#include "lbiso/params.hpp"
#include "lbiso/scheme.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lbiso {

/// One step of a condition program: parameter := expression, evaluated at the
/// point built so far.  Targets are equilibrium coefficients ("q_eq"), Henon
/// parameters ("sigma6"), or auxiliary names introduced for readability
/// ("cs2"); expressions may reference lambda, dt, free parameters and any
/// earlier target.
struct Substitution {
  std::string param;
  Expr value;
};

/// Window low < quantity < high with per-bound strictness.  Hitting a strict
/// bound exactly is a boundary case (reported, not fatal); a value outside is
/// a violation.  Non-strict bounds admit equality silently.
struct Inequality {
  Expr quantity;
  std::optional<Rational> low, high;
  bool low_strict = true;
  bool high_strict = true;
  std::string text;
};

enum class WindowStatus { ok, boundary, violated };

WindowStatus check_window(const Inequality& w, const ParamPoint& p);

/// A named family of algebraic conditions on one scheme under which the
/// equivalent equations are isotropic up to the stated order.
///
/// The program is ordered: later substitutions may reference earlier targets.
/// Free parameters are everything the caller must supply besides lambda and
/// dt.  One substitution is designated as the negative control: perturbing it
/// must destroy isotropy at exactly this set's order.
class ConditionSet {
 public:
  ConditionSet(std::string scheme, int order, std::string variant,
               std::vector<std::string> free_params, std::vector<Substitution> program,
               std::vector<Inequality> windows, std::string control_param,
               std::string control_note = {});

  const std::string& scheme() const { return scheme_; }
  int order() const { return order_; }
  /// "d2q9.order3", "d3q19.order3b", ...
  std::string name() const;
  const std::vector<std::string>& free_params() const { return free_; }
  const std::vector<Substitution>& program() const { return program_; }
  const std::vector<Inequality>& windows() const { return windows_; }

  /// Index into program() of the negative-control substitution.
  int control_index() const { return control_; }
  const std::string& control_note() const { return note_; }

 private:
  std::string scheme_;
  int order_;
  std::string variant_;
  std::vector<std::string> free_;
  std::vector<Substitution> program_;
  std::vector<Inequality> windows_;
  int control_ = 0;
  std::string note_;
};

/// All built-in condition sets, in a fixed order.
const std::vector<std::string>& condition_set_names();
/// Lookup by name; throws Error for unknown names.
const ConditionSet& condition_set(const std::string& name);

/// Completes a free-parameter assignment into a full ParamPoint by running the
/// set's program.  The free point must carry lambda, dt and exactly the set's
/// free parameters.  Window violations throw Error naming the window; boundary
/// hits are appended to *notes when given.
ParamPoint apply_conditions(const ConditionSet& cs, const ParamPoint& free,
                            std::vector<std::string>* notes = nullptr);

/// Closed-form coefficient table for a condition set, evaluated at a full
/// point.  Independent of the expansion engine; one transcription site,
/// kept in reference_formulas.cpp.
PhysicalCoefficients reference_coefficients(const ConditionSet& cs, const ParamPoint& p);
/// Convenience lookup by (scheme, order); picks variant "a" where two exist.
PhysicalCoefficients reference_coefficients(const std::string& scheme, int order,
                                            const ParamPoint& p);

/// Engine pipeline: expansion ladder plus per-order isotropic decomposition.
std::vector<IsotropicDecomposition> isotropy_ladder(const Scheme& s, const ParamPoint& p,
                                                    int levels);

struct CoefficientCheck {
  std::string name;
  Rational engine, reference;
  bool equal = false;
};

enum class RateStatus { ok, boundary, fail };

struct RateFlag {
  int moment = 0;
  std::string name;
  RateStatus status = RateStatus::ok;
  std::string detail;
};

/// Per-moment relaxation sanity: sigma_k > 0 passes, s_k = 2 (sigma_k = 0) is
/// a flagged boundary, anything else fails.
struct StabilityReport {
  std::vector<RateFlag> flags;
  bool pass = false;
  bool boundary = false;
};

StabilityReport stability_check(const Scheme& s, const ParamPoint& p);

struct SampleResult {
  ParamPoint free_point, full_point;
  /// 0 when residuals vanish through the set's order; else the first order
  /// with a nonzero anisotropic remainder.
  int first_anisotropic_order = 0;
  /// Rendering of the offending residual operator when anisotropic.
  std::string residual_text;
  PhysicalCoefficients engine_coeffs;
  std::vector<CoefficientCheck> checks;
  std::vector<std::string> boundary_notes;
  StabilityReport stability;

  bool pass() const;
};

struct VerificationReport {
  std::string set_name, scheme;
  int order = 0;
  std::vector<SampleResult> samples;
  bool control_detected = false;
  std::string control_note;

  /// All samples isotropic with every coefficient check equal, and the
  /// negative control detected.
  bool verified() const;
};

/// Deterministic admissible sample points for a condition set: documented
/// low-denominator streams per free parameter, filtered by the set's windows;
/// lambda and dt cycle through non-unit values so unit grading is exercised.
std::vector<ParamPoint> sample_points(const ConditionSet& cs, int count = 8);

/// Runs the engine at every sample, compares with reference_coefficients and
/// executes the negative control at the first sample.
VerificationReport verify_order(const Scheme& s, const ConditionSet& cs,
                                const std::vector<ParamPoint>& samples);

/// One row of the fourth-order parameter-family table: scale-free ratios of
/// the Henon parameters as functions of psi.
struct Figure1Row {
  Rational psi;
  Rational s16_over_s5;   // sigma16 / sigma5
  Rational s4_over_s5;    // sigma4 / sigma5
  Rational s10_s5_x12;    // 12 sigma10 sigma5
  Rational s26_s5;        // sigma26 sigma5
};

struct Figure1Data {
  std::vector<Figure1Row> rows;
  /// Exact root of sigma16/sigma5 in (0, 3/2) when one exists; the bracket is
  /// the enclosing grid interval.
  std::optional<Rational> s16_root;
  std::optional<std::pair<Rational, Rational>> s16_bracket;
};

/// Evaluates the d3q27 fourth-order family on a psi grid.  The family lives on
/// (0, 3/2) but any grid point away from the poles of the rational expressions
/// is evaluable; a grid point at a pole throws Error naming the point.
Figure1Data figure1_data(const std::vector<Rational>& psi_grid);

}  // namespace lbiso
