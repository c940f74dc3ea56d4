#pragma once

// A K-vector bundle xi of rank n+1 over B (K = R, C, H with d = dim_R K) is
// described by a presentation of H*(B) and its classes w_1..w_{n+1} (Stiefel-
// Whitney classes for R, Chern classes c_i for C, c_{2i} for H), w_i in degree
// d*i. The constructors below present the cohomology of the associated
// projective, pair and Grassmann bundles.
//
// Generator names added on top of the base:
//
//   ring          new generators             meaning
//   projective    t (deg d)                  e(eta), the Hopf line
//   q_tilde       S, T (deg d)               Hopf lines of the two factors
//   grassmann     Y (deg d), Z (deg 2d)      w_d(beta), w_2d(beta)
//   feder         Y, Z as above, X (deg 1)   X = e(lambda), Y = e(alpha) + X^d
//
// Base generators may not reuse these names.

#include <map>
#include <optional>
#include <vector>

#include "fibtc/field.hpp"
#include "fibtc/presentation.hpp"

namespace fibtc {

class BundleError : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

struct BundleSpec {
    Field field = Field::R;
    int rank = 2;
    PresentationPtr base;
    /// w_1..w_rank over the base signature, in normal form.
    std::vector<Polynomial> classes;

    int n() const { return rank - 1; }
    int d() const { return real_dimension(field); }
    /// w_0 = 1, w_i = 0 beyond the rank.
    Polynomial w(int i) const;
};

/// Validates degrees and pads missing classes with zero. The base must be a
/// completed presentation.
BundleSpec make_bundle(Field field, int rank, PresentationPtr base,
                       std::vector<Polynomial> classes);

/// H*(point) over the given coefficients.
PresentationPtr point_base(CoefficientRing ring);

struct ProjectiveRing {
    PresentationPtr ring;
    RingElement e_zeta;
    RingElement e_eta;
};

struct QTildeRing {
    PresentationPtr ring;
    RingElement e_alpha_tilde;
};

struct GrassmannRing {
    PresentationPtr ring;
    RingElement Y;
    RingElement Z;
};

struct FederRing {
    PresentationPtr ring;
    RingElement e_lambda;
    RingElement e_alpha;
    RingElement w_d_beta;
};

ProjectiveRing projective_ring(const BundleSpec& b, CoefficientRing coeffs,
                               std::string_view name = "t");
QTildeRing q_tilde_ring(const BundleSpec& b, CoefficientRing coeffs);
/// F2 only. The truncation defaults to top(B) + 2nd + d + 1.
GrassmannRing grassmann_ring(const BundleSpec& b, std::optional<int> truncation = std::nullopt);
FederRing feder_ring(const BundleSpec& b, std::optional<int> truncation = std::nullopt);

// p_0 = 1, p_1 = Y, p_{i+1} = Y p_i + Z p_{i-1}, computed over a signature
// containing Y and Z.
class PPolynomialTable {
public:
    explicit PPolynomialTable(SignaturePtr sig, std::string_view y = "Y", std::string_view z = "Z");

    const Polynomial& p(int i);
    /// p_i^xi = p_i + p_{i-1} w_1 + ... + w_i, with w[j] the j-th class (w[0] = 1).
    Polynomial p_xi(int i, const std::vector<Polynomial>& w);

private:
    SignaturePtr sig_;
    Polynomial y_;
    Polynomial z_;
    std::vector<Polynomial> memo_;
};

Polynomial p_polynomial(int i, PPolynomialTable& table);

/// Poincare polynomial coefficients dim H^0..H^top of a presentation.
std::vector<std::size_t> poincare_series(const RingPresentation& pres, int top);

}  // namespace fibtc
