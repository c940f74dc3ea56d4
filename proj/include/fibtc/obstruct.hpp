#pragma once

// Cohomological shadows of the sectioning criteria: vanishing of powers of
// Euler classes, divisibility in the base, and cross-checks between
// independent ways of deciding the same question.

#include <optional>
#include <variant>
#include <vector>

#include "fibtc/bundles.hpp"

namespace fibtc {

/// Two independent computations of the same quantity disagreed.
class InternalDisagreement : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

struct NotFoundUpTo {
    int k_max = 0;

    bool operator==(const NotFoundUpTo&) const = default;
};

using MinK = std::variant<int, NotFoundUpTo>;

/// Smallest k <= k_max with e^k = 0.
MinK min_k_vanishing(const RingElement& e, int k_max);

struct VanishingSearch {
    MinK min_k;
    /// Last nonzero power e^witness_k (normal form); empty if e^0 = 0.
    std::optional<Polynomial> witness;
    int witness_k = -1;
};

VanishingSearch search_vanishing(const RingElement& e, int k_max);

/// 2(n+1)d + 2.
int default_k_max(const BundleSpec& b);

/// K = R: is w_n^k a multiple of w_{n+1} in H*(B; F2)?
bool sphere_divisibility_test(const BundleSpec& b, int k);

/// Decides e(zeta~)^k = 0 on the sphere bundle through the double cover
/// S(xi) -> P(xi), whose pullback kills exactly t * H*(P(xi)), and compares
/// with sphere_divisibility_test. Returns the common verdict; throws
/// InternalDisagreement when the two differ.
bool gysin_equivalence_check(const BundleSpec& b, int k);

/// K = R: e(zeta)^k = 0 in H*(P(xi); F2), computed in the quotient ring and
/// by long division in H*(B)[t]; throws InternalDisagreement on mismatch.
bool symm_sphere_test(const BundleSpec& b, int k);

/// Coordinates of a projective-ring element in the basis x_0 = 1,
/// x_i = t x_{i-1} + w_i (i <= n), with coefficients over the bundle ring.
std::vector<Polynomial> x_basis_coordinates(const ProjectiveRing& p, const BundleSpec& b,
                                            const RingElement& e);

/// Generic classes w_1..w_{n+1}: checks
///   e^2 = w_n x_n + w_{n+1} x_{n-1}
///   e^3 = (w_n^2 + w_{n-1} w_{n+1}) x_n + w_n w_{n+1} x_{n-1} + w_{n+1}^2 x_{n-2}
bool closed_form_check(int n);

/// e(alpha~)^k = 0 in H*(Q~(xi); coeffs).
bool proj_pair_test(const BundleSpec& b, int k, CoefficientRing coeffs);

/// e(alpha)^k = 0 in the Feder ring, checked against w_d(beta)^{k-1} = 0 in the
/// Grassmann ring. k >= 1.
bool symm_proj_test(const BundleSpec& b, int k);

struct PointSphereRow {
    int n = 0;
    /// e(zeta~) in H^n(S^n; Z) = Z, i.e. the Euler characteristic.
    Integer euler;
    int min_k = 0;
    /// The last nonzero power e^{min_k - 1}.
    Integer witness;
};

PointSphereRow point_sphere_table(int n);

}  // namespace fibtc
