#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "selberg/rational.hpp"

namespace selberg {

using Complex = std::complex<double>;

// One Gamma(lambda*s + mu) factor of the functional equation.
struct GammaFactor {
  Rational lambda;  // > 0
  QComplex mu;

  GammaFactor(Rational l, QComplex m) : lambda(l), mu(m) {
    if (!(lambda > Rational(0))) throw std::invalid_argument("gamma factor needs lambda > 0");
  }
  double lambda_d() const { return lambda.to_double(); }
  Complex mu_d() const { return {mu.re.to_double(), mu.im.to_double()}; }
};

// A pole of F as a root with multiplicity, optionally with the principal part
// of the local Laurent expansion c_{-order}, ..., c_{-1} (needed by the
// evaluator's residue term; a bare simple pole still needs its residue).
struct PoleEntry {
  Complex at;
  int order = 1;
  std::vector<Complex> laurent;  // empty = data not supplied

  bool has_laurent() const { return static_cast<int>(laurent.size()) == order; }
  Complex residue() const { return laurent.empty() ? Complex{0.0} : laurent.back(); }
};

struct PoleSpec {
  std::vector<PoleEntry> entries;
  bool empty() const { return entries.empty(); }
};

// The (P2)/(P3) data: Phi(s) = Q^s G(s) F(s) = omega * conj(Phi(1 - conj(s))).
struct FunctionalEquation {
  double q_scale = 1.0;   // Q > 0
  Complex omega{1.0, 0.0};
  std::vector<GammaFactor> numerator;    // length r
  std::vector<GammaFactor> denominator;  // length r'
  PoleSpec poles;

  // d_F = 2(sum lambda_j - sum lambda'_j), exact.
  Rational degree_exact() const {
    Rational s(0);
    for (const auto& g : numerator) s += g.lambda;
    for (const auto& g : denominator) s -= g.lambda;
    return Rational(2) * s;
  }
  double degree() const { return degree_exact().to_double(); }
};

enum class ClassFlag { P3Prime, P3DoublePrime, P4, P4Prime };

struct EulerBounds {
  double c_bound = 0.0;  // C in |b_{p^k}| <= C p^{k theta}
  double theta = 0.0;
};

class CoefficientSource;  // coefficients.hpp

struct LFunctionSpec {
  std::string name;
  std::shared_ptr<const CoefficientSource> coefficients;
  FunctionalEquation fe;
  double abscissa = 1.0;  // nu_0 >= 1/2
  std::set<ClassFlag> flags;
};

struct Violation {
  std::string code;     // stable machine-readable id
  std::string message;  // human explanation
};

// Structural checks of the axiom data against the declared flags. Returns an
// empty list iff the spec is internally consistent; violations are data, not
// errors.
std::vector<Violation> validate(const LFunctionSpec& spec);

// Dirichlet-series multiplication: convolved coefficients, Q and omega
// multiply, gamma lists concatenate, poles merge by location (orders add,
// Laurent data is dropped for merged locations since it is not derivable from
// the factors alone).
LFunctionSpec monoid_product(const LFunctionSpec& a, const LFunctionSpec& b);

inline const char* flag_name(ClassFlag f) {
  switch (f) {
    case ClassFlag::P3Prime: return "P3'";
    case ClassFlag::P3DoublePrime: return "P3''";
    case ClassFlag::P4: return "P4";
    case ClassFlag::P4Prime: return "P4'";
  }
  return "?";
}

std::optional<ClassFlag> flag_from_name(const std::string& s);

}  // namespace selberg
