#ifndef NPINV_SUBLEVEL_HPP
#define NPINV_SUBLEVEL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "npinv/invariants.hpp"
#include "npinv/oscillatory.hpp"

namespace npinv {

struct SublevelConfig {
    int gridN = 4096;             // cells per axis of the classification grid
    std::uint64_t gridBudget = 1ull << 26; // corner evaluations before MC fallback
    std::uint64_t mcSamples = 1000000;
    std::uint64_t seed = 12345;
    int threads = 0;
};

struct SublevelEstimate {
    double epsilon = 0;
    double measure = 0;
    double standardError = 0;
    enum class Method { Grid, MonteCarlo } method = Method::Grid;
};

// |{x in [-r,r]^2 : |phi(x)| < eps}| by cell classification with a jittered
// stratified refinement pass on boundary cells; Monte-Carlo fallback when the
// grid budget is exceeded.
SublevelEstimate sublevel_measure(const BivariatePolynomial& phi, double r, double eps,
                                  const SublevelConfig& config = {});

// Least-squares growth exponent of measure(eps) ~ eps^sigma over a dyadic grid.
FitResult sublevel_fit(const BivariatePolynomial& phi, double r,
                       const std::vector<double>& epsGrid,
                       const SublevelConfig& config = {});

struct KnappBox {
    int edgeIndex = 0;       // 0 = the principal line L itself
    double epsilon = 0;
    double halfWidth1 = 0;   // eps^kappa1, or rho0 when kappa1 = 0
    double halfWidth2 = 0;   // eps^kappa2
    std::vector<JetTerm> jet;
    double supPhi = 0;
    Rational lowerBoundPcPrime; // 2 h_l + 2 (2 d + 2 for the line)
};

// Anisotropic box around the root jet on which |phi| <= C eps; requires a
// non-adapted run and an eligible edge (a_l > m, the horizontal edge, or
// edgeIndex 0 for the principal line).
KnappBox knapp_box(const InvariantReport& report, const AdaptationResult& adapted,
                   int edgeIndex, double eps, double rho0 = 0.5,
                   std::uint64_t samples = 1000000);

// All eligible Knapp boxes for one epsilon (principal line + edges with a_l > m).
std::vector<KnappBox> knapp_boxes(const InvariantReport& report,
                                  const AdaptationResult& adapted, double eps,
                                  double rho0 = 0.5, std::uint64_t samples = 1000000);

enum class IntegrabilityTrend { Convergent, Divergent, Inconclusive };

struct IntegrabilityVerdict {
    Rational p;
    bool predictedConvergent = false; // exact: 1/p < 1/h strictly
    bool boundary = false;            // p == h (divergent for polynomial input)
    IntegrabilityTrend numericTrend = IntegrabilityTrend::Inconclusive;
    double trendSlope = 0; // log2 growth rate of the shell terms
    std::vector<double> shellTerms;
};

// Iosevich-Sawyer tangent-plane integrability of |phi|^(-1/p): exact verdict
// from the 1/h threshold plus a dyadic shell-sum trend.
IntegrabilityVerdict iosevich_sawyer_check(const BivariatePolynomial& phi, double r,
                                           const Rational& p, const Rational& h,
                                           const std::vector<double>& epsGrid,
                                           const SublevelConfig& config = {});

} // namespace npinv

#endif
