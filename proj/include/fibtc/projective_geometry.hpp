#pragma once

// Lines Ku in K^m, stored by unit representatives. Comparisons never depend
// on the representative. A K-linear isometry a: L -> M is encoded by the
// single vector a(u) for the stored representative u of L.

#include <utility>

#include "fibtc/kscalar.hpp"

namespace fibtc {

class ProjPoint {
public:
    /// Requires a unit vector (within 1e-12).
    explicit ProjPoint(KVector representative);
    static ProjPoint through(const KVector& v);

    Field field() const { return field_; }
    std::size_t dim() const { return u_.size(); }
    const KVector& representative() const { return u_; }
    /// Representative whose largest-modulus entry (first on ties) is real
    /// and positive; for display only.
    KVector canonical() const;

private:
    Field field_;
    KVector u_;
};

/// min over unit z of |u - z v|.
double line_distance(const ProjPoint& a, const ProjPoint& b);
/// 1 - |<u1, u2>| < tol.
bool same_line(const ProjPoint& a, const ProjPoint& b, double tol = 1e-9);

/// Geodesic from M (t = -1) to L (t = 1); L and M must not be orthogonal.
ProjPoint proj_rho(double t, const ProjPoint& L, const ProjPoint& M);

/// (sin(pi(t+1)/4) + cos(pi(t+1)/4) a) L for orthogonal L, M and an isometry
/// a: L -> M given by a_u = a(u).
ProjPoint proj_sigma(const KVector& a_u, double t, const ProjPoint& L, const ProjPoint& M);

/// ((1 + a) L, (1 + a*) M) for orthogonal L, M and |a| <= 1.
std::pair<ProjPoint, ProjPoint> proj_pi_map(const ProjPoint& L, const ProjPoint& M,
                                            const KVector& a_u);

struct ProjPreimage {
    ProjPoint L;
    ProjPoint M;
    /// a(u) for u = L.representative(); |a| < 1.
    KVector a_u;
};

ProjPreimage proj_pi_inverse(const ProjPoint& X, const ProjPoint& Y);

}  // namespace fibtc
