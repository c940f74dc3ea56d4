#include "fibtc/sphere_geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace fibtc {

double dot(const RealVector& a, const RealVector& b)
{
    if (a.size() != b.size())
        throw GeometryError("vectors of different dimension");
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

double norm(const RealVector& a)
{
    return std::sqrt(dot(a, a));
}

double distance(const RealVector& a, const RealVector& b)
{
    return norm(axpy(-1.0, b, a));
}

RealVector axpy(double a, const RealVector& x, const RealVector& y)
{
    if (x.size() != y.size())
        throw GeometryError("vectors of different dimension");
    RealVector out(y);
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] += a * x[i];
    return out;
}

RealVector scale(const RealVector& x, double s)
{
    RealVector out(x);
    for (auto& c : out)
        c *= s;
    return out;
}

SpherePoint::SpherePoint(RealVector coords) : x_(std::move(coords))
{
    if (x_.empty())
        throw GeometryError("sphere point needs at least one coordinate");
    if (std::abs(norm(x_) - 1.0) > kScalarTolerance)
        throw GeometryError("sphere point is not a unit vector (norm " + std::to_string(norm(x_)) +
                            ")");
}

SpherePoint SpherePoint::normalize(const RealVector& v)
{
    double n = norm(v);
    if (n == 0)
        throw GeometryError("cannot normalize the zero vector");
    RealVector x = scale(v, 1.0 / n);
    // One more pass pulls the norm to within rounding of 1.
    return SpherePoint(scale(x, 1.0 / norm(x)));
}

SpherePoint SpherePoint::operator-() const
{
    return SpherePoint(scale(x_, -1.0));
}

double dot(const SpherePoint& a, const SpherePoint& b)
{
    return dot(a.coords(), b.coords());
}

double distance(const SpherePoint& a, const SpherePoint& b)
{
    return distance(a.coords(), b.coords());
}

namespace {

void require_range(double t, double lo, double hi, const char* what)
{
    if (!(t >= lo - kScalarTolerance && t <= hi + kScalarTolerance))
        throw GeometryError(std::string(what) + ": parameter " + std::to_string(t) +
                            " out of range");
}

}  // namespace

SpherePoint geodesic_c(double t, const SpherePoint& u, const SpherePoint& v)
{
    require_range(t, 0, 1, "geodesic_c");
    const double cu = dot(u, v);
    RealVector perp = axpy(-cu, u.coords(), v.coords());
    const double s = norm(perp);
    const double theta = std::atan2(s, cu);
    if (theta >= std::numbers::pi - kGeometryTolerance)
        throw GeometryError("geodesic_c: antipodal points");
    if (s == 0)
        return u;
    RealVector out = axpy(std::sin(t * theta) / s, perp, scale(u.coords(), std::cos(t * theta)));
    return SpherePoint::normalize(out);
}

SpherePoint rho_sphere(double t, const SpherePoint& u, const SpherePoint& v)
{
    require_range(t, -1, 1, "rho_sphere");
    return geodesic_c((1 - t) / 2, u, v);
}

SpherePoint sigma_sphere(const SpherePoint& w, double t, const SpherePoint& u)
{
    require_range(t, -1, 1, "sigma_sphere");
    if (std::abs(dot(w, u)) > kGeometryTolerance)
        throw GeometryError("sigma_sphere: w is not orthogonal to u");
    if (t >= 0)
        return geodesic_c(t, w, u);
    return geodesic_c(-t, w, -u);
}

std::pair<SpherePoint, SpherePoint> pi_map(const SpherePoint& u, const SpherePoint& v,
                                           const RealVector& w)
{
    if (distance(v.coords(), scale(u.coords(), -1.0)) > kGeometryTolerance)
        throw GeometryError("pi_map: v must be -u");
    if (std::abs(dot(w, u.coords())) > kGeometryTolerance)
        throw GeometryError("pi_map: w is not orthogonal to u");
    const double w2 = dot(w, w);
    if (w2 > 1 + kScalarTolerance)
        throw GeometryError("pi_map: |w| > 1");
    const double a = (1 - w2) / (1 + w2);
    const double b = 2 / (1 + w2);
    return {SpherePoint::normalize(axpy(b, w, scale(u.coords(), a))),
            SpherePoint::normalize(axpy(b, w, scale(v.coords(), a)))};
}

PiPreimage pi_inverse(const SpherePoint& x, const SpherePoint& y)
{
    RealVector diff = axpy(-1.0, y.coords(), x.coords());
    const double gap = norm(diff);
    if (gap <= kGeometryTolerance)
        throw GeometryError("pi_inverse: points on the diagonal");
    SpherePoint u = SpherePoint::normalize(diff);
    RealVector w = scale(axpy(1.0, x.coords(), y.coords()), 1.0 / (2 + gap));
    return {u, -u, w};
}

}  // namespace fibtc
