#pragma once

// Great-circle geodesics on the unit sphere S(V), V = R^{n+1}, and the
// diffeomorphism between the open disc bundle of antipodal pairs and the
// complement of the diagonal in S(V) x S(V).

#include <utility>
#include <vector>

#include "fibtc/kscalar.hpp"

namespace fibtc {

inline constexpr double kGeometryTolerance = 1e-9;
inline constexpr double kScalarTolerance = 1e-12;

using RealVector = std::vector<double>;

double dot(const RealVector& a, const RealVector& b);
double norm(const RealVector& a);
double distance(const RealVector& a, const RealVector& b);
RealVector axpy(double a, const RealVector& x, const RealVector& y);  // a x + y
RealVector scale(const RealVector& x, double s);

class SpherePoint {
public:
    /// Requires |coords| = 1 within 1e-12.
    explicit SpherePoint(RealVector coords);
    /// Rescales a nonzero vector onto the sphere.
    static SpherePoint normalize(const RealVector& v);

    const RealVector& coords() const { return x_; }
    std::size_t dim() const { return x_.size(); }
    double operator[](std::size_t i) const { return x_[i]; }
    SpherePoint operator-() const;

private:
    RealVector x_;
};

double dot(const SpherePoint& a, const SpherePoint& b);
double distance(const SpherePoint& a, const SpherePoint& b);

/// Unit-speed (in t, times the angle) great-circle arc from u (t=0) to v
/// (t=1). Rejects antipodal pairs.
SpherePoint geodesic_c(double t, const SpherePoint& u, const SpherePoint& v);

/// c((1 - t)/2, u, v): runs from v at t = -1 to u at t = 1.
SpherePoint rho_sphere(double t, const SpherePoint& u, const SpherePoint& v);

/// Half great circle from -u (t = -1) through w (t = 0) to u (t = 1); w must
/// be orthogonal to u.
SpherePoint sigma_sphere(const SpherePoint& w, double t, const SpherePoint& u);

/// ((u, v), w) with v = -u, w orthogonal to u and |w| <= 1, to the pair
/// (a u + b w, a v + b w), a = (1 - |w|^2)/(1 + |w|^2), b = 2/(1 + |w|^2).
std::pair<SpherePoint, SpherePoint> pi_map(const SpherePoint& u, const SpherePoint& v,
                                           const RealVector& w);

struct PiPreimage {
    SpherePoint u;
    SpherePoint v;
    RealVector w;
};

/// The unique preimage of an off-diagonal pair under pi_map.
PiPreimage pi_inverse(const SpherePoint& x, const SpherePoint& y);

}  // namespace fibtc
