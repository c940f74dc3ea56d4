#pragma once

// Shared fixtures for the unit, property and acceptance tests.

#include <random>
#include <string>
#include <vector>

#include "fibtc/bundles.hpp"
#include "fibtc/parser.hpp"
#include "fibtc/presentation.hpp"

namespace testing_support {

using namespace fibtc;

inline SignaturePtr sig(CoefficientRing ring, std::vector<Generator> gens)
{
    return make_signature(ring, std::move(gens));
}

inline Polynomial P(const std::string& text, const SignaturePtr& s)
{
    return parse(text, s);
}

/// Element of a presentation given as text in its generators.
inline RingElement E(const std::string& text, const PresentationPtr& ring)
{
    return RingElement(ring, parse(text, ring->signature()));
}

/// Trivial bundle of the given field and rank over a point.
inline BundleSpec point_bundle(Field field, int rank, CoefficientRing ring)
{
    return make_bundle(field, rank, point_base(ring), {});
}

/// F2[x]/(x^(m+1)) for a degree-d generator x.
inline PresentationPtr truncated_poly(int m, int degree = 1, CoefficientRing ring = CoefficientRing::F2)
{
    auto s = sig(ring, {{"x", degree}});
    return completed(RingPresentation(s, {Polynomial::variable(s, "x", m + 1)},
                                      NormalFormStrategy::MonicTower));
}

/// Uniformly random homogeneous polynomial of the given degree over F2.
inline Polynomial random_homogeneous(const SignaturePtr& s, int degree, std::mt19937_64& rng,
                                     double density = 0.5)
{
    Polynomial p(s);
    std::bernoulli_distribution keep(density);
    for (const Monomial& m : monomials_of_degree(*s, degree))
        if (keep(rng))
            p.add_term(m, 1);
    return p;
}

/// A random real bundle of rank n+1 (n <= max_n) over a truncated base: either
/// F2[x]/(x^m) or the polynomial ring on a:1, b:2 truncated above a random
/// degree. Classes are random homogeneous polynomials of the right degree.
inline BundleSpec random_real_bundle(std::mt19937_64& rng, int max_n = 4)
{
    std::uniform_int_distribution<int> pick_n(1, max_n);
    std::uniform_int_distribution<int> pick_kind(0, 1);
    std::uniform_int_distribution<int> pick_top(2, 7);
    const int n = pick_n(rng);
    PresentationPtr base;
    if (pick_kind(rng) == 0) {
        base = truncated_poly(pick_top(rng));
    } else {
        auto s = sig(CoefficientRing::F2, {{"a", 1}, {"b", 2}});
        base = completed(RingPresentation(s, {}, NormalFormStrategy::MonicTower, pick_top(rng)));
    }
    std::vector<Polynomial> w;
    for (int i = 1; i <= n + 1; ++i)
        w.push_back(base->reduce(random_homogeneous(base->signature(), i, rng)));
    return make_bundle(Field::R, n + 1, base, w);
}

}  // namespace testing_support
