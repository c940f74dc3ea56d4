#include "fibtc/obstruct.hpp"

#include <algorithm>

namespace fibtc {

VanishingSearch search_vanishing(const RingElement& e, int k_max)
{
    if (k_max < 0)
        throw AlgebraError("k_max must be non-negative");
    VanishingSearch out{NotFoundUpTo{k_max}, std::nullopt, -1};
    RingElement power = RingElement::one(e.parent());
    for (int k = 0; k <= k_max; ++k) {
        if (power.is_zero()) {
            out.min_k = k;
            return out;
        }
        out.witness = power.polynomial();
        out.witness_k = k;
        power *= e;
    }
    return out;
}

MinK min_k_vanishing(const RingElement& e, int k_max)
{
    return search_vanishing(e, k_max).min_k;
}

int default_k_max(const BundleSpec& b)
{
    return 2 * b.rank * b.d() + 2;
}

namespace {

void require_real(const BundleSpec& b, const char* what)
{
    if (b.field != Field::R)
        throw BundleError(std::string(what) + " is only defined for real bundles");
}

void require_k(int k)
{
    if (k < 0)
        throw AlgebraError("k must be non-negative");
}

PresentationPtr f2_base(const BundleSpec& b)
{
    if (b.base->coefficients() == CoefficientRing::F2)
        return b.base;
    return completed(reduce_mod2(*b.base));
}

// Is target in the span of { g * m : m standard of degree deg(target) - deg(g) }?
bool in_multiples(const RingPresentation& pres, const Polynomial& g, const Polynomial& target)
{
    if (target.is_zero())
        return true;
    if (g.is_zero())
        return false;
    const int qdeg = *target.degree() - *g.degree();
    if (qdeg < 0)
        return false;
    F2Span span;
    for (const auto& m : standard_monomials(pres, qdeg))
        span.insert(pres.reduce(g * Polynomial::term(pres.signature(), m)));
    return span.contains(target);
}

}  // namespace

bool sphere_divisibility_test(const BundleSpec& b, int k)
{
    require_real(b, "sphere_divisibility_test");
    require_k(k);
    PresentationPtr base = f2_base(b);
    const int n = b.n();
    Polynomial wn = lift(b.w(n), base->signature());
    Polynomial wn1 = lift(b.w(n + 1), base->signature());
    Polynomial lhs = base->reduce(pow(wn, static_cast<std::uint64_t>(k)));
    return in_multiples(*base, base->reduce(wn1), lhs);
}

bool gysin_equivalence_check(const BundleSpec& b, int k)
{
    require_real(b, "gysin_equivalence_check");
    require_k(k);
    ProjectiveRing p = projective_ring(b, CoefficientRing::F2);
    Polynomial power = p.e_zeta.pow(static_cast<std::uint64_t>(k)).polynomial();
    bool direct = in_multiples(*p.ring, p.e_eta.polynomial(), power);
    bool divisible = sphere_divisibility_test(b, k);
    if (direct != divisible)
        throw InternalDisagreement("sphere bundle k=" + std::to_string(k) + ": Euler power " +
                                   (direct ? "vanishes" : "survives") + " but divisibility says " +
                                   (divisible ? "divisible" : "not divisible"));
    return direct;
}

namespace {

using TPoly = std::vector<Polynomial>;

TPoly multiply(const TPoly& a, const TPoly& b, const RingPresentation& base)
{
    TPoly out(a.size() + b.size() - 1, Polynomial(base.signature()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    for (auto& c : out)
        c = base.reduce(c);
    return out;
}

// Remainder of a modulo the monic polynomial f (leading coefficient last).
TPoly remainder(TPoly a, const TPoly& f, const RingPresentation& base)
{
    const std::size_t deg_f = f.size() - 1;
    for (std::size_t top = a.size(); top-- > deg_f;) {
        Polynomial c = a[top];
        if (c.is_zero())
            continue;
        for (std::size_t i = 0; i <= deg_f; ++i)
            a[top - deg_f + i] = base.reduce(a[top - deg_f + i] - c * f[i]);
    }
    if (a.size() > deg_f)
        a.erase(a.begin() + static_cast<long>(deg_f), a.end());
    return a;
}

}  // namespace

bool symm_sphere_test(const BundleSpec& b, int k)
{
    require_real(b, "symm_sphere_test");
    require_k(k);
    ProjectiveRing p = projective_ring(b, CoefficientRing::F2);
    bool quotient = p.e_zeta.pow(static_cast<std::uint64_t>(k)).is_zero();

    PresentationPtr base = f2_base(b);
    const SignaturePtr& sig = base->signature();
    const int n = b.n();
    TPoly f(static_cast<std::size_t>(n) + 2, Polynomial(sig));
    TPoly x(static_cast<std::size_t>(n) + 1, Polynomial(sig));
    for (int i = 0; i <= n + 1; ++i)
        f[static_cast<std::size_t>(i)] = base->reduce(lift(b.w(n + 1 - i), sig));
    for (int i = 0; i <= n; ++i)
        x[static_cast<std::size_t>(i)] = base->reduce(lift(b.w(n - i), sig));
    TPoly power{Polynomial::one(sig)};
    for (int i = 0; i < k; ++i)
        power = multiply(power, x, *base);
    TPoly rem = remainder(power, f, *base);
    bool divided = std::all_of(rem.begin(), rem.end(), [](const Polynomial& c) { return c.is_zero(); });

    if (quotient != divided)
        throw InternalDisagreement("projective bundle k=" + std::to_string(k) +
                                   ": quotient reduction and long division disagree");
    return quotient;
}

std::vector<Polynomial> x_basis_coordinates(const ProjectiveRing& p, const BundleSpec& b,
                                            const RingElement& e)
{
    const int n = b.n();
    const SignaturePtr& sig = p.ring->signature();
    auto t_coords = module_coordinates(e, "t", n);

    // x_i = sum_{j<=i} t^j w_{i-j}; peel off the top t-coordinate repeatedly.
    std::vector<Polynomial> x_coords(static_cast<std::size_t>(n) + 1, Polynomial(sig));
    for (int i = n; i >= 0; --i) {
        Polynomial a = t_coords[static_cast<std::size_t>(i)];
        x_coords[static_cast<std::size_t>(i)] = a;
        if (a.is_zero())
            continue;
        for (int j = 0; j < i; ++j)
            t_coords[static_cast<std::size_t>(j)] =
                p.ring->reduce(t_coords[static_cast<std::size_t>(j)] -
                               a * lift(b.w(i - j), sig));
    }
    return x_coords;
}

bool closed_form_check(int n)
{
    if (n < 2 || n > 6)
        throw AlgebraError("closed_form_check needs 2 <= n <= 6");
    std::vector<Generator> gens;
    for (int i = 1; i <= n + 1; ++i)
        gens.push_back({"w" + std::to_string(i), i});
    auto sig = make_signature(CoefficientRing::F2, gens);
    auto base = completed(RingPresentation(sig, {}, NormalFormStrategy::MonicTower));
    std::vector<Polynomial> classes;
    for (const auto& g : gens)
        classes.push_back(Polynomial::variable(sig, g.name));
    BundleSpec b = make_bundle(Field::R, n + 1, base, classes);

    ProjectiveRing p = projective_ring(b, CoefficientRing::F2);
    const SignaturePtr& psig = p.ring->signature();
    auto w = [&](int i) { return lift(b.w(i), psig); };
    auto zero = Polynomial(psig);

    std::vector<Polynomial> square(static_cast<std::size_t>(n) + 1, zero);
    square[static_cast<std::size_t>(n)] = w(n);
    square[static_cast<std::size_t>(n - 1)] = w(n + 1);

    std::vector<Polynomial> cube(static_cast<std::size_t>(n) + 1, zero);
    cube[static_cast<std::size_t>(n)] = w(n) * w(n) + w(n - 1) * w(n + 1);
    cube[static_cast<std::size_t>(n - 1)] = w(n) * w(n + 1);
    cube[static_cast<std::size_t>(n - 2)] = w(n + 1) * w(n + 1);

    return x_basis_coordinates(p, b, p.e_zeta.pow(2)) == square &&
           x_basis_coordinates(p, b, p.e_zeta.pow(3)) == cube;
}

bool proj_pair_test(const BundleSpec& b, int k, CoefficientRing coeffs)
{
    require_k(k);
    QTildeRing q = q_tilde_ring(b, coeffs);
    return q.e_alpha_tilde.pow(static_cast<std::uint64_t>(k)).is_zero();
}

bool symm_proj_test(const BundleSpec& b, int k)
{
    if (k < 1)
        throw AlgebraError("symm_proj_test needs k >= 1");
    FederRing f = feder_ring(b);
    GrassmannRing g = grassmann_ring(b);
    bool direct = f.e_alpha.pow(static_cast<std::uint64_t>(k)).is_zero();
    bool reduced = g.Y.pow(static_cast<std::uint64_t>(k - 1)).is_zero();
    if (direct != reduced)
        throw InternalDisagreement("pair bundle k=" + std::to_string(k) +
                                   ": e(alpha)^k and w_d(beta)^(k-1) disagree on vanishing");
    return direct;
}

PointSphereRow point_sphere_table(int n)
{
    if (n < 1)
        throw AlgebraError("point_sphere_table needs n >= 1");
    // Over a point zeta~ is the tangent bundle of S^n; e^k lives in H^{kn}(S^n),
    // so only e^0 = 1 and e^1 = chi(S^n) can be nonzero.
    PointSphereRow row;
    row.n = n;
    row.euler = n % 2 == 0 ? 2 : 0;
    if (row.euler == 0) {
        row.min_k = 1;
        row.witness = 1;
    } else {
        row.min_k = 2;
        row.witness = row.euler;
    }
    return row;
}

}  // namespace fibtc
