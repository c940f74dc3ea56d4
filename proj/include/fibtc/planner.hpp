#pragma once

// Motion planners on a single sphere S^n: an ordered list of rules, each an
// open domain in S^n x S^n with a continuous path map phi(t, u, v),
// phi(1) = u, phi(-1) = v, and a numerical verification harness.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fibtc/sphere_geometry.hpp"

namespace fibtc {

enum class Symmetry {
    Orthogonal,  // path commutes with every orthogonal map
    Unitary,     // only with maps commuting with the complex structure J
};

struct PlannerRule {
    std::string name;
    std::function<bool(const SpherePoint&, const SpherePoint&)> domain;
    std::function<SpherePoint(double, const SpherePoint&, const SpherePoint&)> path;
    /// Lipschitz bound of t -> path(t, u, v) on [-1, 1].
    double speed_bound = 0;
    Symmetry symmetry = Symmetry::Orthogonal;
};

struct Planner {
    int n = 0;
    std::vector<PlannerRule> rules;
};

/// J(x, y) = (-y, x) on R^{2m} = C^m.
SpherePoint complex_structure(const SpherePoint& u);

/// Two rules for odd n: the geodesic on non-antipodal pairs, and on
/// off-diagonal pairs the path through the section u -> Ju. Only k = 1 is
/// available.
Planner build_sphere_planner(int n, int k = 1);

/// The geodesic rule alone; it cannot reach antipodal pairs.
Planner geodesic_only_planner(int n);

struct PlannerReport {
    int n = 0;
    std::size_t rules = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    int resolution = 256;
    double endpoint_error = 0;
    double diagonal_error = 0;
    double unit_norm_error = 0;
    int cover_failures = 0;
    /// Largest step |phi(t + dt) - phi(t)| divided by that rule's bound * dt + 1e-6.
    double continuity_ratio = 0;
    int continuity_violations = 0;
    double equivariance_error = 0;

    bool passed() const;
    /// key=value lines, fixed order and precision.
    std::string serialize() const;
};

PlannerReport verify_planner(const Planner& p, int samples, std::uint64_t seed);

}  // namespace fibtc
