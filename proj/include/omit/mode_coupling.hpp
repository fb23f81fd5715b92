#pragma once

#include "omit/types.hpp"

#include <span>
#include <utility>
#include <vector>

namespace omit {

// Quantities fixed by the scatterer angle beta.
struct CouplingState {
    double beta = 0.0;
    cplx j1{};             // CCW -> CW scattering rate
    cplx j2{};             // CW -> CCW scattering rate
    double delta_eff = 0.0; // Delta_a + Re(eps1 + eps2)
    double gamma_tot = 0.0; // gamma_a - Im(eps1 + eps2)
    cplx omega1{};
    cplx omega2{};
    cplx delta_omega{};     // omega1 - omega2 = 2 sqrt(j1 j2), principal branch
};

CouplingState coupling_at(const PhysicalParams& params, double delta_a, double beta);

enum class EpBranch { kJ1Vanishes, kJ2Vanishes };

const char* to_string(EpBranch branch);

struct EpRecord {
    double beta_c = 0.0;
    EpBranch branch = EpBranch::kJ1Vanishes;
    double residual = 0.0; // |delta_omega(beta_c)| [rad/s]
    cplx j_other{};        // the coupling rate that does not vanish
    // True when |eps1| != |eps2|: the minimum of |delta_omega| cannot reach
    // zero, so the record marks a near-EP.
    bool near_ep = false;
};

// All minima of |delta_omega| over beta in [0, 2 pi), seeded at
// l pi/(2m) -/+ (arg eps1 - arg eps2)/(2m) (l odd) and refined by
// golden-section search to 1e-12 rad. Sorted by beta.
std::vector<EpRecord> critical_angles(const PhysicalParams& params);

struct SplittingPoint {
    double beta = 0.0;
    double re_domega = 0.0;
    double im_domega = 0.0;
    double abs_j1 = 0.0;
    double abs_j2 = 0.0;
};

std::vector<SplittingPoint> splitting_curve(const PhysicalParams& params, std::span<const double> beta_grid);

// Eigenfrequency pairs along a beta grid, with the two branches paired to
// the nearest neighbour of the previous grid point instead of by the
// principal square root.
std::vector<std::pair<cplx, cplx>> trace_eigenfrequencies(const PhysicalParams& params,
                                                          std::span<const double> beta_grid);

} // namespace omit
