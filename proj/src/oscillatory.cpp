#include "npinv/oscillatory.hpp"

#include <algorithm>
#include <cmath>

#include "npinv/errors.hpp"
#include "npinv/parallel.hpp"

namespace npinv {

namespace {

// Gauss-Legendre order 8 on [-1, 1].
constexpr int kOrder = 8;
constexpr double kNodes[kOrder] = {
    -0.9602898564975362316835609, -0.7966664774136267395915539,
    -0.5255324099163289858177390, -0.1834346424956498049394761,
    0.1834346424956498049394761,  0.5255324099163289858177390,
    0.7966664774136267395915539,  0.9602898564975362316835609};
constexpr double kWeights[kOrder] = {
    0.1012285362903762591525314, 0.2223810344533744705443560,
    0.3137066458778872873379622, 0.3626837833783619829651504,
    0.3626837833783619829651504, 0.3137066458778872873379622,
    0.2223810344533744705443560, 0.1012285362903762591525314};

constexpr double kTwoPi = 6.283185307179586476925287;

// Terms grouped by x2-exponent for fast column evaluation.
struct CompiledPhase {
    struct Group {
        int e2;
        std::vector<std::pair<int, double>> terms; // (e1, coeff)
    };
    std::vector<Group> groups; // ascending e2
    int maxE1 = 0, maxE2 = 0;
    bool evenX1 = true, evenX2 = true;
    bool oddTotal = true; // phi(-x) = -phi(x)
};

CompiledPhase compile_phase(const BivariatePolynomial& phi) {
    CompiledPhase cp;
    for (const auto& [m, c] : phi.terms()) {
        cp.maxE1 = std::max(cp.maxE1, m.e1);
        cp.maxE2 = std::max(cp.maxE2, m.e2);
        if (m.e1 % 2) cp.evenX1 = false;
        if (m.e2 % 2) cp.evenX2 = false;
        if ((m.e1 + m.e2) % 2 == 0) cp.oddTotal = false;
        auto it = std::find_if(cp.groups.begin(), cp.groups.end(),
                               [&](const auto& g) { return g.e2 == m.e2; });
        if (it == cp.groups.end()) {
            cp.groups.push_back({m.e2, {}});
            it = cp.groups.end() - 1;
        }
        it->terms.push_back({m.e1, to_double(c)});
    }
    std::sort(cp.groups.begin(), cp.groups.end(),
              [](const auto& a, const auto& b) { return a.e2 < b.e2; });
    return cp;
}

struct Neumaier {
    double sum = 0, comp = 0;
    void add(double v) {
        double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

// Upper bound for sup over the bump support of |grad(phi + s.x)|: the
// box-sum bound, tightened by a sampled maximum when that is smaller.
double grad_bound(const BivariatePolynomial& phi, double r, std::pair<double, double> s) {
    auto d1 = partial_derivative(phi, 1, 0);
    auto d2 = partial_derivative(phi, 0, 1);
    auto box = [&](const BivariatePolynomial& p) {
        double acc = 0;
        for (const auto& [m, c] : p.terms())
            acc += std::abs(to_double(c)) * std::pow(r, m.e1 + m.e2);
        return acc;
    };
    double bound = std::hypot(box(d1) + std::abs(s.first), box(d2) + std::abs(s.second));

    double sampled = 0;
    const int n = 256;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            double x = r * (2.0 * i / n - 1.0), y = r * (2.0 * j / n - 1.0);
            if (x * x + y * y > r * r) continue;
            double gx = evaluate(d1, x, y) + s.first;
            double gy = evaluate(d2, x, y) + s.second;
            sampled = std::max(sampled, std::hypot(gx, gy));
        }
    return std::min(bound, 1.1 * sampled + 1e-12);
}

struct Axis {
    double lo, hi;
    std::size_t panels;
};

std::complex<double> integrate_grid(const CompiledPhase& cp, const CutoffSpec& cutoff,
                                    double lambda, std::pair<double, double> s,
                                    const Axis& ax1, const Axis& ax2, int threads) {
    const double w1 = (ax1.hi - ax1.lo) / static_cast<double>(ax1.panels);
    const double w2 = (ax2.hi - ax2.lo) / static_cast<double>(ax2.panels);
    const double r2 = cutoff.radius * cutoff.radius;
    const bool haveS = s.first != 0.0 || s.second != 0.0;

    // the x2 node stream is shared by every x1 node
    const std::size_t n2 = ax2.panels * kOrder;
    std::vector<double> x2v(n2), x2w(n2);
    for (std::size_t p2 = 0; p2 < ax2.panels; ++p2)
        for (int j = 0; j < kOrder; ++j) {
            std::size_t idx = p2 * kOrder + static_cast<std::size_t>(j);
            x2v[idx] = ax2.lo + w2 * (static_cast<double>(p2) + 0.5 * (kNodes[j] + 1.0));
            x2w[idx] = 0.5 * w2 * kWeights[j];
        }

    std::vector<std::complex<double>> slots(ax1.panels, std::complex<double>(0, 0));
    parallel_for(ax1.panels, threads, [&](std::size_t lo, std::size_t hi) {
        std::vector<double> pow1(static_cast<std::size_t>(cp.maxE1) + 1, 1.0);
        std::vector<double> pow2(static_cast<std::size_t>(cp.maxE2) + 1, 1.0);
        std::vector<double> colCoeff(cp.groups.size());
        for (std::size_t p1 = lo; p1 < hi; ++p1) {
            std::complex<double> panelSum(0, 0);
            for (int i = 0; i < kOrder; ++i) {
                double x1 = ax1.lo + w1 * (static_cast<double>(p1) + 0.5 * (kNodes[i] + 1.0));
                double wx = 0.5 * w1 * kWeights[i];
                for (int k = 1; k <= cp.maxE1; ++k)
                    pow1[static_cast<std::size_t>(k)] =
                        pow1[static_cast<std::size_t>(k - 1)] * x1;
                for (std::size_t g = 0; g < cp.groups.size(); ++g) {
                    Neumaier acc;
                    for (const auto& [e1, c] : cp.groups[g].terms)
                        acc.add(c * pow1[static_cast<std::size_t>(e1)]);
                    colCoeff[g] = acc.value();
                }
                double sLin1 = s.first * x1;
                double x1sq = x1 * x1;
                double reAcc = 0, imAcc = 0;
                for (std::size_t idx = 0; idx < n2; ++idx) {
                    double x2 = x2v[idx];
                    double rho2 = (x1sq + x2 * x2) / r2;
                    if (rho2 >= 1.0) continue;
                    double eta = std::exp(1.0 - 1.0 / (1.0 - rho2));
                    for (int k = 1; k <= cp.maxE2; ++k)
                        pow2[static_cast<std::size_t>(k)] =
                            pow2[static_cast<std::size_t>(k - 1)] * x2;
                    Neumaier phase;
                    for (std::size_t g = 0; g < cp.groups.size(); ++g)
                        phase.add(colCoeff[g] *
                                  pow2[static_cast<std::size_t>(cp.groups[g].e2)]);
                    if (haveS) {
                        phase.add(sLin1);
                        phase.add(s.second * x2);
                    }
                    double theta = lambda * phase.value();
                    double sn, cs;
                    __builtin_sincos(theta, &sn, &cs);
                    double wgt = x2w[idx] * eta;
                    reAcc += wgt * cs;
                    imAcc += wgt * sn;
                }
                panelSum += std::complex<double>(wx * reAcc, wx * imAcc);
            }
            slots[p1] = panelSum;
        }
    });
    return tree_reduce(std::move(slots));
}

std::complex<double> integrate_once(const CompiledPhase& cp, const CutoffSpec& cutoff,
                                    double lambda, std::pair<double, double> s,
                                    std::size_t panelsPerUnit, int threads) {
    const double r = cutoff.radius;
    bool noShift = s.first == 0.0 && s.second == 0.0;
    bool half1 = cp.evenX1 && s.first == 0.0;
    bool half2 = cp.evenX2 && s.second == 0.0;
    bool oddHalf = cp.oddTotal && noShift && !half1; // x -> -x maps halves onto each other
    double symFactor = (half1 ? 2.0 : 1.0) * (half2 ? 2.0 : 1.0);

    auto make_axis = [&](bool half) {
        Axis ax;
        ax.lo = half ? 0.0 : -r;
        ax.hi = r;
        double len = ax.hi - ax.lo;
        ax.panels = std::max<std::size_t>(
            4, static_cast<std::size_t>(std::ceil(len * static_cast<double>(panelsPerUnit))));
        return ax;
    };
    Axis ax1 = make_axis(half1 || oddHalf), ax2 = make_axis(half2);
    std::complex<double> v = integrate_grid(cp, cutoff, lambda, s, ax1, ax2, threads);
    if (oddHalf) return v + std::conj(v); // the x1 < 0 half is the conjugate image
    return v * symFactor;
}

} // namespace

double bump(const CutoffSpec& cutoff, double x1, double x2) {
    double rho2 = (x1 * x1 + x2 * x2) / (cutoff.radius * cutoff.radius);
    if (rho2 >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - rho2));
}

std::vector<double> dyadic_grid(int lo, int hi) {
    std::vector<double> g;
    for (int k = lo; k <= hi; ++k) g.push_back(std::ldexp(1.0, k));
    return g;
}

OscillatoryResult oscillatory_integral(const BivariatePolynomial& phi,
                                       const CutoffSpec& cutoff, double lambda,
                                       std::pair<double, double> s,
                                       const QuadratureConfig& config) {
    if (lambda <= 0) throw PreconditionError("lambda must be positive");
    if (cutoff.radius <= 0 || cutoff.radius > 1)
        throw PreconditionError("cutoff radius must lie in (0, 1]");

    CompiledPhase cp = compile_phase(phi);
    double mg = grad_bound(phi, cutoff.radius, s);

    // >= 8 nodes per oscillation period: node spacing <= 2 pi / (8 lambda mg)
    double density = lambda * mg * config.oversample / kTwoPi; // panels per unit length
    std::size_t panelsPerUnit =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(density)));

    bool noShift = s.first == 0.0 && s.second == 0.0;
    bool half1 = (cp.evenX1 && s.first == 0.0) || (cp.oddTotal && noShift);
    bool half2 = cp.evenX2 && s.second == 0.0;
    double len1 = (half1 ? 1.0 : 2.0) * cutoff.radius;
    double len2 = (half2 ? 1.0 : 2.0) * cutoff.radius;
    auto nodes_at = [&](std::size_t ppu) {
        double n1 = std::max(4.0, std::ceil(len1 * static_cast<double>(ppu))) * kOrder;
        double n2 = std::max(4.0, std::ceil(len2 * static_cast<double>(ppu))) * kOrder;
        return n1 * n2;
    };
    if (nodes_at(panelsPerUnit) > static_cast<double>(config.nodeBudget))
        throw BudgetError("quadrature budget exceeded: lambda too large for the configured "
                          "node budget");

    // value at the full panel count; one half-resolution level for the error
    int threads = config.threads > 0 ? config.threads : default_thread_count();
    std::size_t halfPpu = std::max<std::size_t>(1, panelsPerUnit / 2);
    std::complex<double> coarse = integrate_once(cp, cutoff, lambda, s, halfPpu, threads);
    std::complex<double> fine = integrate_once(cp, cutoff, lambda, s, panelsPerUnit, threads);

    OscillatoryResult out;
    out.lambda = lambda;
    out.s = s;
    out.value = fine;
    out.estimatedError = std::abs(fine - coarse) + 1e-16 * (1.0 + std::abs(fine));
    return out;
}

namespace {

FitResult fit_two_term_log(const std::vector<std::pair<double, double>>& samples) {
    FitResult fit;
    fit.samples = samples;
    // least squares for log|I| = a log(lambda) + b log(log(lambda)) + c
    long double M[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    long double rhs[3] = {0, 0, 0};
    for (const auto& [lambda, absI] : samples) {
        long double row[3] = {std::log((long double)lambda),
                              std::log(std::log((long double)lambda)), 1.0L};
        long double y = std::log((long double)absI);
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) M[i][j] += row[i] * row[j];
            rhs[i] += row[i] * y;
        }
    }
    auto det3 = [](long double A[3][3]) {
        return A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) -
               A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
               A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
    };
    long double D = det3(M);
    if (std::abs((double)D) < 1e-25) {
        fit.wellConditioned = false;
        return fit;
    }
    long double sol[3];
    for (int k = 0; k < 3; ++k) {
        long double Mk[3][3];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) Mk[i][j] = (j == k) ? rhs[i] : M[i][j];
        sol[k] = det3(Mk) / D;
    }
    fit.slope = static_cast<double>(sol[0]);
    fit.logPower = static_cast<double>(sol[1]);
    long double ss = 0;
    for (const auto& [lambda, absI] : samples) {
        long double pred = sol[0] * std::log((long double)lambda) +
                           sol[1] * std::log(std::log((long double)lambda)) + sol[2];
        long double res = std::log((long double)absI) - pred;
        ss += res * res;
    }
    fit.residual = static_cast<double>(std::sqrt(ss / samples.size()));
    return fit;
}

} // namespace

FitResult decay_fit(const BivariatePolynomial& phi, const CutoffSpec& cutoff,
                    const std::vector<double>& lambdaGrid, std::pair<double, double> s,
                    const QuadratureConfig& config) {
    if (lambdaGrid.size() < 4 || lambdaGrid.back() / lambdaGrid.front() < 100.0)
        throw PreconditionError("lambda grid must span at least two decades");
    std::vector<std::pair<double, double>> samples;
    bool clean = true;
    for (double lambda : lambdaGrid) {
        OscillatoryResult r = oscillatory_integral(phi, cutoff, lambda, s, config);
        double absI = std::abs(r.value);
        if (absI < 50.0 * r.estimatedError) clean = false;
        samples.push_back({lambda, absI});
    }
    FitResult fit = fit_two_term_log(samples);
    fit.wellConditioned = fit.wellConditioned && clean;
    return fit;
}

FitResult uniform_decay_probe(const BivariatePolynomial& phi, const CutoffSpec& cutoff,
                              const std::vector<double>& lambdaGrid, double sRadius,
                              int sSamples, const QuadratureConfig& config) {
    std::vector<std::pair<double, double>> sList{{0.0, 0.0}};
    if (sSamples > 1) {
        int rings = (sSamples - 2) / 8 + 1;
        int placed = 1;
        for (int ring = 1; ring <= rings && placed < sSamples; ++ring) {
            double rad = sRadius * static_cast<double>(ring) / rings;
            for (int k = 0; k < 8 && placed < sSamples; ++k, ++placed) {
                double ang = kTwoPi * k / 8.0;
                sList.push_back({rad * std::cos(ang), rad * std::sin(ang)});
            }
        }
    }
    std::vector<std::pair<double, double>> worst;
    for (double lambda : lambdaGrid) {
        double best = 0;
        for (const auto& s : sList) {
            OscillatoryResult r = oscillatory_integral(phi, cutoff, lambda, s, config);
            best = std::max(best, std::abs(r.value));
        }
        worst.push_back({lambda, best});
    }
    return fit_two_term_log(worst);
}

double log_doubling_ratio(const BivariatePolynomial& phi, const CutoffSpec& cutoff,
                          double lambda, double invH, const QuadratureConfig& config) {
    OscillatoryResult a = oscillatory_integral(phi, cutoff, lambda, {0, 0}, config);
    OscillatoryResult b = oscillatory_integral(phi, cutoff, lambda * lambda, {0, 0}, config);
    double va = std::pow(lambda, invH) * std::abs(a.value);
    double vb = std::pow(lambda * lambda, invH) * std::abs(b.value);
    return vb / va;
}

VdcReport vdc_probe_1d(const std::vector<double>& fCoefficients, const CutoffSpec& g,
                       int n, const std::vector<double>& lambdaGrid,
                       const QuadratureConfig& config) {
    if (n < 2) throw PreconditionError("polynomial type n must be >= 2");
    const double r = g.radius;

    // derivative coefficient tables f^(j), j = 1..n
    std::vector<std::vector<double>> deriv{fCoefficients};
    for (int j = 1; j <= n; ++j) {
        const auto& prev = deriv.back();
        std::vector<double> d;
        for (std::size_t k = 1; k < prev.size(); ++k)
            d.push_back(prev[k] * static_cast<double>(k));
        deriv.push_back(d);
    }
    auto horner = [](const std::vector<double>& c, double x) {
        double acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    };

    VdcReport rep;
    rep.c1 = 1e300;
    const int probes = 4096;
    for (int i = 0; i <= probes; ++i) {
        double x = r * (2.0 * i / probes - 1.0);
        double sum = 0;
        for (int j = 2; j <= n; ++j)
            sum += std::abs(horner(deriv[static_cast<std::size_t>(j)], x));
        if (sum < rep.c1) rep.c1 = sum;
        if (sum > rep.c2) rep.c2 = sum;
    }
    if (rep.c1 <= 0)
        throw PreconditionError("polynomial-type condition fails on the support: "
                                "sum of derivatives 2..n vanishes somewhere");

    double mg = 0;
    const int scan = 512;
    for (int i = 0; i <= scan; ++i) {
        double x = r * (2.0 * i / scan - 1.0);
        mg = std::max(mg, std::abs(horner(deriv[1], x)));
    }

    for (double lambda : lambdaGrid) {
        double density = lambda * mg * config.oversample / kTwoPi;
        std::size_t panels = std::max<std::size_t>(
            4, static_cast<std::size_t>(std::ceil(2.0 * r * density)));
        double w = 2.0 * r / static_cast<double>(panels);
        std::complex<double> acc(0, 0);
        for (std::size_t p = 0; p < panels; ++p) {
            for (int i = 0; i < kOrder; ++i) {
                double x = -r + w * (static_cast<double>(p) + 0.5 * (kNodes[i] + 1.0));
                double rho2 = (x * x) / (r * r);
                if (rho2 >= 1.0) continue;
                double eta = std::exp(1.0 - 1.0 / (1.0 - rho2));
                double theta = lambda * horner(fCoefficients, x);
                acc += 0.5 * w * kWeights[i] * eta *
                       std::complex<double>(std::cos(theta), std::sin(theta));
            }
        }
        double ratio = std::abs(acc) * std::pow(1.0 + lambda, 1.0 / n);
        rep.samples.push_back({lambda, ratio});
        rep.supRatio = std::max(rep.supRatio, ratio);
    }

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [lambda, ratio] : rep.samples) {
        double x = std::log(lambda), y = std::log(std::max(ratio, 1e-300));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double nN = static_cast<double>(rep.samples.size());
    rep.growthSlope = (nN * sxy - sx * sy) / (nN * sxx - sx * sx);
    return rep;
}

} // namespace npinv
