#ifndef NPINV_OSCILLATORY_HPP
#define NPINV_OSCILLATORY_HPP

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "npinv/polynomial.hpp"

namespace npinv {

// Smooth radial bump: eta(x) = exp(1 - 1/(1 - |x/r|^2)) for |x| < r, else 0.
// eta(0) = 1 and eta is C-infinity with support the closed disc of radius r.
struct CutoffSpec {
    double radius = 0.5;
};

double bump(const CutoffSpec& cutoff, double x1, double x2);

struct QuadratureConfig {
    std::uint64_t nodeBudget = 1ull << 26; // total node evaluations per integral
    double oversample = 1.25;
    int threads = 0; // 0 = hardware concurrency
};

struct OscillatoryResult {
    double lambda = 0;
    std::pair<double, double> s{0, 0};
    std::complex<double> value;
    double estimatedError = 0;
};

struct FitResult {
    double slope = 0;     // exponent of lambda (or epsilon)
    double logPower = 0;  // coefficient of log log lambda
    double residual = 0;  // RMS residual of the fit
    std::vector<std::pair<double, double>> samples;
    bool wellConditioned = true;
};

// I(lambda; s) = int exp(i lambda (phi + s.x)) eta dx by panel-based tensor
// Gauss-Legendre quadrature; panels per axis are chosen so each panel holds
// at least 8 nodes per oscillation period (period bound from
// lambda * sup |grad phase| over the bump support).
OscillatoryResult oscillatory_integral(const BivariatePolynomial& phi,
                                       const CutoffSpec& cutoff, double lambda,
                                       std::pair<double, double> s,
                                       const QuadratureConfig& config = {});

// Least-squares fit of log|I| = slope*log(lambda) + logPower*log(log(lambda)) + c.
FitResult decay_fit(const BivariatePolynomial& phi, const CutoffSpec& cutoff,
                    const std::vector<double>& lambdaGrid, std::pair<double, double> s,
                    const QuadratureConfig& config = {});

// Worst case of |I(lambda; s)| over sampled linear perturbations |s| <= sRadius,
// then the same fit.
FitResult uniform_decay_probe(const BivariatePolynomial& phi, const CutoffSpec& cutoff,
                              const std::vector<double>& lambdaGrid, double sRadius,
                              int sSamples, const QuadratureConfig& config = {});

// Log-doubling statistic v(lambda^2)/v(lambda) with v = lambda^(1/h) |I(lambda;0)|;
// approaches 2^nu.
double log_doubling_ratio(const BivariatePolynomial& phi, const CutoffSpec& cutoff,
                          double lambda, double invH, const QuadratureConfig& config = {});

// One-dimensional van der Corput probe: checks the polynomial-type condition
// c1 <= sum_{j=2}^n |f^(j)| <= c2 on the support of the bump and reports
// sup over the grid of |int exp(i lambda f) g| (1+lambda)^{1/n}.
struct VdcReport {
    double c1 = 0, c2 = 0;          // observed bounds of the derivative sum
    double supRatio = 0;            // sup over the grid of |I|(1+lambda)^{1/n}
    double growthSlope = 0;         // slope of log ratio vs log lambda
    std::vector<std::pair<double, double>> samples; // (lambda, ratio)
};
VdcReport vdc_probe_1d(const std::vector<double>& fCoefficients, const CutoffSpec& g,
                       int n, const std::vector<double>& lambdaGrid,
                       const QuadratureConfig& config = {});

// Dyadic grid 2^lo, ..., 2^hi.
std::vector<double> dyadic_grid(int lo, int hi);

} // namespace npinv

#endif
