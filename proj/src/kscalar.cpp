#include "fibtc/kscalar.hpp"

#include <cmath>

namespace fibtc {

namespace {

Field wider(Field a, Field b)
{
    return real_dimension(a) >= real_dimension(b) ? a : b;
}

}  // namespace

KScalar::KScalar(Field field, double a, double b, double c, double d)
    : field_(field), q_{a, b, c, d}
{
    const int dim = real_dimension(field);
    for (int i = dim; i < 4; ++i)
        if (q_[static_cast<std::size_t>(i)] != 0)
            throw GeometryError("scalar has components outside " + to_string(field));
}

KScalar KScalar::conj() const
{
    KScalar out = *this;
    for (std::size_t i = 1; i < 4; ++i)
        out.q_[i] = -q_[i];
    return out;
}

double KScalar::norm2() const
{
    return q_[0] * q_[0] + q_[1] * q_[1] + q_[2] * q_[2] + q_[3] * q_[3];
}

double KScalar::norm() const
{
    return std::sqrt(norm2());
}

KScalar KScalar::inverse() const
{
    double n2 = norm2();
    if (n2 == 0)
        throw GeometryError("inverse of zero scalar");
    return conj() * (1.0 / n2);
}

KScalar KScalar::operator*(const KScalar& o) const
{
    const auto& [a1, b1, c1, d1] = q_;
    const auto& [a2, b2, c2, d2] = o.q_;
    KScalar out;
    out.field_ = wider(field_, o.field_);
    out.q_ = {a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2, a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
              a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2, a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2};
    return out;
}

KScalar KScalar::operator+(const KScalar& o) const
{
    KScalar out;
    out.field_ = wider(field_, o.field_);
    for (std::size_t i = 0; i < 4; ++i)
        out.q_[i] = q_[i] + o.q_[i];
    return out;
}

KScalar KScalar::operator-(const KScalar& o) const
{
    return *this + o * -1.0;
}

KScalar KScalar::operator*(double s) const
{
    KScalar out = *this;
    for (auto& x : out.q_)
        x *= s;
    return out;
}

KScalar hermitian(const KVector& u, const KVector& v)
{
    if (u.size() != v.size())
        throw GeometryError("vectors of different dimension");
    if (u.empty())
        return KScalar();
    KScalar sum(wider(u[0].field(), v[0].field()));
    for (std::size_t i = 0; i < u.size(); ++i)
        sum = sum + u[i] * v[i].conj();
    return sum;
}

double norm(const KVector& u)
{
    double s = 0;
    for (const auto& x : u)
        s += x.norm2();
    return std::sqrt(s);
}

KVector left_mul(const KScalar& z, const KVector& u)
{
    KVector out;
    out.reserve(u.size());
    for (const auto& x : u)
        out.push_back(z * x);
    return out;
}

KVector add(const KVector& a, const KVector& b)
{
    if (a.size() != b.size())
        throw GeometryError("vectors of different dimension");
    KVector out;
    for (std::size_t i = 0; i < a.size(); ++i)
        out.push_back(a[i] + b[i]);
    return out;
}

KVector sub(const KVector& a, const KVector& b)
{
    return add(a, scale(b, -1.0));
}

KVector scale(const KVector& a, double s)
{
    KVector out;
    for (const auto& x : a)
        out.push_back(x * s);
    return out;
}

KVector normalized(const KVector& u)
{
    double n = norm(u);
    if (n == 0)
        throw GeometryError("cannot normalize the zero vector");
    return scale(u, 1.0 / n);
}

std::vector<double> to_real(const KVector& u)
{
    std::vector<double> out;
    for (const auto& x : u)
        for (int i = 0; i < real_dimension(x.field()); ++i)
            out.push_back(x[static_cast<std::size_t>(i)]);
    return out;
}

KVector from_real(Field field, const std::vector<double>& x)
{
    const std::size_t d = static_cast<std::size_t>(real_dimension(field));
    if (x.size() % d != 0)
        throw GeometryError("real dimension not divisible by that of " + to_string(field));
    KVector out;
    for (std::size_t i = 0; i < x.size(); i += d) {
        double c[4] = {0, 0, 0, 0};
        for (std::size_t j = 0; j < d; ++j)
            c[j] = x[i + j];
        out.emplace_back(field, c[0], c[1], c[2], c[3]);
    }
    return out;
}

KScalar random_unit_scalar(Field field, std::mt19937_64& rng)
{
    std::normal_distribution<double> gauss;
    for (;;) {
        double c[4] = {0, 0, 0, 0};
        for (int i = 0; i < real_dimension(field); ++i)
            c[i] = gauss(rng);
        KScalar z(field, c[0], c[1], c[2], c[3]);
        double n = z.norm();
        if (n > 1e-6)
            return z * (1.0 / n);
    }
}

KVector random_unit_vector(Field field, std::size_t dim, std::mt19937_64& rng)
{
    std::normal_distribution<double> gauss;
    for (;;) {
        std::vector<double> x(dim * static_cast<std::size_t>(real_dimension(field)));
        for (auto& c : x)
            c = gauss(rng);
        KVector v = from_real(field, x);
        if (norm(v) > 1e-6)
            return normalized(v);
    }
}

std::vector<KVector> random_unitary(Field field, std::size_t dim, std::mt19937_64& rng)
{
    std::vector<KVector> cols;
    while (cols.size() < dim) {
        KVector v = random_unit_vector(field, dim, rng);
        for (const auto& e : cols)
            v = sub(v, left_mul(hermitian(v, e), e));
        if (norm(v) > 1e-6)
            cols.push_back(normalized(v));
    }
    return cols;
}

KVector act(const std::vector<KVector>& g, const KVector& u)
{
    if (g.size() != u.size())
        throw GeometryError("matrix and vector dimensions differ");
    KVector out(u.size(), KScalar(u.empty() ? Field::R : u[0].field()));
    for (std::size_t i = 0; i < u.size(); ++i)
        out = add(out, left_mul(u[i], g[i]));
    return out;
}

}  // namespace fibtc
