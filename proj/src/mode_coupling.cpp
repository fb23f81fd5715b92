#include "omit/mode_coupling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace omit {

CouplingState coupling_at(const PhysicalParams& params, double delta_a, double beta) {
    CouplingState s;
    s.beta = beta;
    const double theta = 2.0 * params.azimuthal_m * beta;
    const cplx phase = std::polar(1.0, -theta);
    s.j1 = params.eps1 + params.eps2 * phase;
    s.j2 = params.eps1 + params.eps2 * std::conj(phase);

    const cplx sum = params.eps1 + params.eps2;
    s.delta_eff = delta_a + sum.real();
    s.gamma_tot = params.gamma_a - sum.imag();

    const cplx root = std::sqrt(s.j1 * s.j2);
    const cplx center = cplx(params.omega_a, -params.gamma_a) + sum;
    s.omega1 = center + root;
    s.omega2 = center - root;
    // Taken from the root directly: omega1 - omega2 would cancel against omega_a.
    s.delta_omega = 2.0 * root;
    return s;
}

const char* to_string(EpBranch branch) {
    return branch == EpBranch::kJ1Vanishes ? "J1=0" : "J2=0";
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double beta) {
    double b = std::fmod(beta, kTwoPi);
    if (b < 0.0) {
        b += kTwoPi;
    }
    return b >= kTwoPi ? 0.0 : b;
}

// |j1 j2| at beta; same minimizers as |delta_omega| and smooth at the minimum.
double coupling_product(const PhysicalParams& params, double beta) {
    const CouplingState s = coupling_at(params, 0.0, beta);
    return std::abs(s.j1 * s.j2);
}

double golden_section(const PhysicalParams& params, double lo, double hi, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = coupling_product(params, c);
    double fd = coupling_product(params, d);
    for (int iter = 0; iter < 200 && (b - a) > tol; ++iter) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = coupling_product(params, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = coupling_product(params, d);
        }
    }
    // Bracket endpoints are candidates too when the minimum sits on the boundary.
    double best = 0.5 * (a + b);
    double f_best = coupling_product(params, best);
    for (double x : {lo, hi}) {
        if (const double fx = coupling_product(params, x); fx < f_best) {
            best = x;
            f_best = fx;
        }
    }
    return best;
}

} // namespace

std::vector<EpRecord> critical_angles(const PhysicalParams& params) {
    const int m = params.azimuthal_m;
    const double arg_diff = std::arg(params.eps1) - std::arg(params.eps2);

    std::vector<double> seeds;
    for (int sign : {-1, +1}) {
        for (int l = 1; l < 4 * m; l += 2) {
            seeds.push_back(wrap_angle((l * std::numbers::pi + sign * arg_diff) / (2.0 * m)));
        }
    }
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end(), [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                seeds.end());

    const double abs1 = std::abs(params.eps1);
    const double abs2 = std::abs(params.eps2);
    const bool near_ep = std::abs(abs1 - abs2) > 1e-12 * std::max({abs1, abs2, 1e-300});

    std::vector<EpRecord> records;
    const std::size_t n = seeds.size();
    for (std::size_t i = 0; i < n; ++i) {
        double prev = i == 0 ? seeds[n - 1] - kTwoPi : seeds[i - 1];
        double next = i + 1 == n ? seeds[0] + kTwoPi : seeds[i + 1];
        if (n == 1) {
            prev = seeds[0] - std::numbers::pi / m;
            next = seeds[0] + std::numbers::pi / m;
        }
        const double lo = 0.5 * (prev + seeds[i]);
        const double hi = 0.5 * (seeds[i] + next);
        const double beta_c = golden_section(params, lo, hi, 1e-12);

        const CouplingState s = coupling_at(params, 0.0, beta_c);
        EpRecord rec;
        rec.beta_c = wrap_angle(beta_c);
        rec.residual = std::abs(s.delta_omega);
        rec.near_ep = near_ep;
        if (std::abs(s.j1) <= std::abs(s.j2)) {
            rec.branch = EpBranch::kJ1Vanishes;
            rec.j_other = s.j2;
        } else {
            rec.branch = EpBranch::kJ2Vanishes;
            rec.j_other = s.j1;
        }
        records.push_back(rec);
    }

    std::sort(records.begin(), records.end(), [](const EpRecord& a, const EpRecord& b) { return a.beta_c < b.beta_c; });
    // Neighbouring brackets can converge on one shared boundary minimum.
    std::vector<EpRecord> unique;
    for (const auto& rec : records) {
        if (!unique.empty() && std::abs(rec.beta_c - unique.back().beta_c) < 1e-9) {
            if (rec.residual < unique.back().residual) {
                unique.back() = rec;
            }
            continue;
        }
        unique.push_back(rec);
    }
    if (unique.size() > 1 && unique.front().beta_c + kTwoPi - unique.back().beta_c < 1e-9) {
        unique.pop_back();
    }
    return unique;
}

std::vector<SplittingPoint> splitting_curve(const PhysicalParams& params, std::span<const double> beta_grid) {
    std::vector<SplittingPoint> out;
    out.reserve(beta_grid.size());
    for (double beta : beta_grid) {
        const CouplingState s = coupling_at(params, 0.0, beta);
        out.push_back({beta, s.delta_omega.real(), s.delta_omega.imag(), std::abs(s.j1), std::abs(s.j2)});
    }
    return out;
}

std::vector<std::pair<cplx, cplx>> trace_eigenfrequencies(const PhysicalParams& params,
                                                          std::span<const double> beta_grid) {
    std::vector<std::pair<cplx, cplx>> out;
    out.reserve(beta_grid.size());
    cplx prev_root{};
    bool first = true;
    for (double beta : beta_grid) {
        const CouplingState s = coupling_at(params, 0.0, beta);
        cplx root = 0.5 * s.delta_omega;
        if (!first && std::abs(-root - prev_root) < std::abs(root - prev_root)) {
            root = -root;
        }
        first = false;
        prev_root = root;
        const cplx center = 0.5 * (s.omega1 + s.omega2);
        out.emplace_back(center + root, center - root);
    }
    return out;
}

} // namespace omit
