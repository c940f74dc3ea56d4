#pragma once

// Presented graded rings  R[g_1..g_m] / (relations)  with canonical normal
// forms.
//
// Two normal-form strategies are supported:
//
//  * MonicTower: every relation is monic (leading coefficient +-1) in its own
//    designated generator g, and its remaining terms only involve g to a lower
//    power and generators that come before g. The relations then already form
//    a Groebner basis (pairwise coprime leading monomials) and the division
//    algorithm gives normal forms over F2 or the integers.
//
//  * GroebnerF2: arbitrary homogeneous relations over F2, completed by a
//    degree-truncated Buchberger run (see complete()).
//
// A presentation may carry a truncation degree (everything above it vanishes)
// and degree caps: a cap (prefix, max) kills every monomial whose degree in
// the first `prefix` generators exceeds `max`. Caps are how a truncated base
// ring H*(B) survives being extended by fibre generators.

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "fibtc/polynomial.hpp"

namespace fibtc {

enum class NormalFormStrategy { MonicTower, GroebnerF2 };

std::string to_string(NormalFormStrategy s);

class PresentationError : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

struct DegreeCap {
    std::size_t prefix = 0;
    int max_degree = 0;

    bool operator==(const DegreeCap&) const = default;
};

class RingPresentation {
public:
    RingPresentation(SignaturePtr sig, std::vector<Polynomial> relations,
                     NormalFormStrategy strategy, std::optional<int> truncation = std::nullopt,
                     std::vector<DegreeCap> caps = {});

    const SignaturePtr& signature() const { return sig_; }
    CoefficientRing coefficients() const { return sig_->ring(); }
    const std::vector<Polynomial>& relations() const { return relations_; }
    NormalFormStrategy strategy() const { return strategy_; }
    std::optional<int> truncation() const { return truncation_; }
    const std::vector<DegreeCap>& caps() const { return caps_; }

    bool is_complete() const { return complete_; }
    /// The reduction set used for normal forms: leading coefficient 1,
    /// interreduced for GroebnerF2. Throws if the presentation is not
    /// complete.
    const std::vector<Polynomial>& reducers() const;

    /// True when the monomial is zero because of truncation or a cap.
    bool vanishes(const Monomial& m) const;
    /// True when m is not divisible by any reducer's leading monomial and
    /// does not vanish.
    bool is_standard(const Monomial& m) const;

    /// Fully reduced representative of p. Requires is_complete().
    Polynomial reduce(const Polynomial& p) const;

private:
    friend RingPresentation complete(const RingPresentation& pres);

    void validate_tower();

    SignaturePtr sig_;
    std::vector<Polynomial> relations_;
    NormalFormStrategy strategy_;
    std::optional<int> truncation_;
    std::vector<DegreeCap> caps_;
    std::vector<Polynomial> reducers_;
    bool complete_ = false;
};

using PresentationPtr = std::shared_ptr<const RingPresentation>;

/// GroebnerF2: truncated Buchberger completion up to truncation(), followed by
/// interreduction. MonicTower presentations are returned unchanged.
RingPresentation complete(const RingPresentation& pres);

/// complete() wrapped in a shared pointer, the form RingElement expects.
PresentationPtr completed(const RingPresentation& pres);

class RingElement {
public:
    /// Reduces p modulo the presentation.
    RingElement(PresentationPtr parent, const Polynomial& p);

    static RingElement one(const PresentationPtr& parent);
    static RingElement generator(const PresentationPtr& parent, std::string_view name);

    const PresentationPtr& parent() const { return parent_; }
    const Polynomial& polynomial() const { return nf_; }
    bool is_zero() const { return nf_.is_zero(); }

    RingElement& operator+=(const RingElement& other);
    RingElement& operator-=(const RingElement& other);
    RingElement& operator*=(const RingElement& other);
    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }

    /// Power with reduction after every multiplication.
    RingElement pow(std::uint64_t k) const;

    bool operator==(const RingElement& other) const;

private:
    void require_same_parent(const RingElement& other) const;

    PresentationPtr parent_;
    Polynomial nf_;
};

RingElement normal_form(const Polynomial& p, const PresentationPtr& pres);
bool is_zero(const RingElement& e);

/// Coefficients c_0..c_max with e = sum_j c_j * g^j, each c_j free of the
/// basis generator g and in normal form. When the presentation carries a
/// truncation degree the freeness of {1, g, .., g^max} is also checked
/// degreewise; failure (or a normal form not of this shape) throws
/// PresentationError.
std::vector<Polynomial> module_coordinates(const RingElement& e, std::string_view basis_generator,
                                           int max_power);

// ---- degreewise linear algebra over the completed presentation ----

/// All monomials of graded degree `degree` in the signature.
std::vector<Monomial> monomials_of_degree(const Signature& sig, int degree);

/// Standard monomials (a basis of the quotient) in the given degree.
std::vector<Monomial> standard_monomials(const RingPresentation& pres, int degree);

std::size_t quotient_dimension(const RingPresentation& pres, int degree);

/// Highest degree with a nonzero quotient piece: the truncation when set,
/// otherwise computed when the quotient is finite; nullopt for an infinite
/// quotient.
std::optional<int> top_degree(const RingPresentation& pres);

/// Degreewise check, up to `up_to` (defaults to truncation/top degree), that
/// the ring is free over its subring without `generator` on 1, g, .., g^max.
bool verify_free_basis(const RingPresentation& pres, std::string_view generator, int max_power,
                       std::optional<int> up_to = std::nullopt);

/// Incremental row echelon form over F2 for polynomials, pivoting on leading
/// monomials.
class F2Span {
public:
    /// Adds v to the span; returns false when v was already in it.
    bool insert(const Polynomial& v);
    bool contains(const Polynomial& v) const;
    std::size_t rank() const { return rows_.size(); }

private:
    Polynomial reduce(Polynomial v) const;

    std::vector<Polynomial> rows_;
};

/// Drop a generator set down to F2: coefficients mod 2, same generators.
SignaturePtr mod2_signature(const SignaturePtr& sig);
RingPresentation reduce_mod2(const RingPresentation& pres);

}  // namespace fibtc
