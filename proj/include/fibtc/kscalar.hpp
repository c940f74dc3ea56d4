#pragma once

// Scalars in R, C or H, stored as quaternions a + b i + c j + d k with the
// components outside the field kept at zero. K-vectors are left K-modules:
// scalars multiply from the left and <u, v> = sum u_i conj(v_i).

#include <array>
#include <random>
#include <stdexcept>
#include <vector>

#include "fibtc/field.hpp"

namespace fibtc {

class GeometryError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class KScalar {
public:
    KScalar() = default;
    explicit KScalar(Field field, double a = 0, double b = 0, double c = 0, double d = 0);

    Field field() const { return field_; }
    double operator[](std::size_t i) const { return q_[i]; }
    double real() const { return q_[0]; }

    KScalar conj() const;
    double norm2() const;
    double norm() const;
    KScalar inverse() const;

    KScalar operator*(const KScalar& o) const;
    KScalar operator+(const KScalar& o) const;
    KScalar operator-(const KScalar& o) const;
    KScalar operator*(double s) const;

private:
    Field field_ = Field::R;
    std::array<double, 4> q_{0, 0, 0, 0};
};

using KVector = std::vector<KScalar>;

/// Sum of u_i conj(v_i).
KScalar hermitian(const KVector& u, const KVector& v);
double norm(const KVector& u);
KVector left_mul(const KScalar& z, const KVector& u);
KVector add(const KVector& a, const KVector& b);
KVector sub(const KVector& a, const KVector& b);
KVector scale(const KVector& a, double s);
KVector normalized(const KVector& u);

/// Underlying real coordinates, d per entry.
std::vector<double> to_real(const KVector& u);
KVector from_real(Field field, const std::vector<double>& x);

KScalar random_unit_scalar(Field field, std::mt19937_64& rng);
KVector random_unit_vector(Field field, std::size_t dim, std::mt19937_64& rng);
/// Columns of a Haar-like random K-unitary matrix (Gram-Schmidt on Gaussian
/// vectors), returned as the list of images of the standard basis.
std::vector<KVector> random_unitary(Field field, std::size_t dim, std::mt19937_64& rng);
/// g(u) = sum_i u_i g(e_i) for g given by the images of the standard basis;
/// such g commute with left scalar multiplication.
KVector act(const std::vector<KVector>& g, const KVector& u);

}  // namespace fibtc
