#include "fibtc/bundles.hpp"

#include <algorithm>

namespace fibtc {

Polynomial BundleSpec::w(int i) const
{
    if (i == 0)
        return Polynomial::one(base->signature());
    if (i < 0 || i > static_cast<int>(classes.size()))
        return Polynomial(base->signature());
    return classes[static_cast<std::size_t>(i - 1)];
}

BundleSpec make_bundle(Field field, int rank, PresentationPtr base, std::vector<Polynomial> classes)
{
    if (rank < 2)
        throw BundleError("bundle rank must be at least 2, got " + std::to_string(rank));
    if (!base)
        throw BundleError("bundle needs a base presentation");
    if (!base->is_complete())
        throw BundleError("base presentation must be completed");
    if (classes.size() > static_cast<std::size_t>(rank))
        throw BundleError("more characteristic classes than the rank");

    const int d = real_dimension(field);
    BundleSpec b;
    b.field = field;
    b.rank = rank;
    b.base = base;
    for (std::size_t i = 0; i < static_cast<std::size_t>(rank); ++i) {
        if (i >= classes.size()) {
            b.classes.emplace_back(base->signature());
            continue;
        }
        const Polynomial& c = classes[i];
        if (!same_signature(c.signature(), base->signature()))
            throw RingMismatch("class w" + std::to_string(i + 1) + " is not over the base ring");
        Polynomial nf = base->reduce(c);
        const int want = d * static_cast<int>(i + 1);
        if (!nf.is_zero() && (!nf.is_homogeneous() || *nf.degree() != want))
            throw BundleError("class w" + std::to_string(i + 1) + " = " + render(c) +
                              " must be homogeneous of degree " + std::to_string(want));
        b.classes.push_back(std::move(nf));
    }
    return b;
}

PresentationPtr point_base(CoefficientRing ring)
{
    return completed(RingPresentation(make_signature(ring, {}), {}, NormalFormStrategy::MonicTower));
}

namespace {

PresentationPtr coerce_base(const BundleSpec& b, CoefficientRing coeffs)
{
    if (b.field == Field::R && coeffs == CoefficientRing::Integers)
        throw BundleError("integral presentations need field C or H");
    if (coeffs == b.base->coefficients())
        return b.base;
    if (coeffs == CoefficientRing::F2)
        return completed(reduce_mod2(*b.base));
    throw BundleError("an F2 base cannot be lifted to integer coefficients");
}

struct Extension {
    SignaturePtr sig;
    std::vector<Polynomial> relations;
    std::vector<DegreeCap> caps;
    std::vector<Polynomial> w;
    std::optional<int> base_top;
    NormalFormStrategy strategy;
};

Extension extend(const BundleSpec& b, const PresentationPtr& base, const std::vector<Generator>& fresh)
{
    const SignaturePtr& bsig = base->signature();
    for (const auto& g : fresh)
        if (bsig->index_of(g.name))
            throw BundleError("base generator '" + g.name + "' collides with a fibre generator name");

    std::vector<Generator> gens = bsig->generators();
    gens.insert(gens.end(), fresh.begin(), fresh.end());

    Extension ext;
    ext.sig = make_signature(bsig->ring(), gens);
    for (const auto& r : base->reducers())
        ext.relations.push_back(lift(r, ext.sig));
    ext.caps = base->caps();
    ext.base_top = top_degree(*base);
    if (base->truncation())
        ext.caps.push_back({bsig->size(), *base->truncation()});
    for (int i = 0; i <= b.rank; ++i)
        ext.w.push_back(lift(b.w(i), ext.sig));
    ext.strategy = base->strategy();
    return ext;
}

Polynomial signed_power(const SignaturePtr& sig, std::string_view name, int i)
{
    Polynomial p = Polynomial::variable(sig, name, static_cast<std::uint32_t>(i));
    return i % 2 == 0 ? p : -p;
}

// sum_{i=0}^{m} (-1)^i g^i w_{m-i}
Polynomial alternating(const Extension& ext, std::string_view g, int m)
{
    Polynomial out(ext.sig);
    for (int i = 0; i <= m; ++i)
        out += signed_power(ext.sig, g, i) * ext.w[static_cast<std::size_t>(m - i)];
    return out;
}

std::optional<int> groebner_truncation(const Extension& ext, int fibre_top)
{
    if (ext.strategy != NormalFormStrategy::GroebnerF2)
        return std::nullopt;
    if (!ext.base_top)
        throw BundleError("groebner base ring needs a known top degree");
    return *ext.base_top + fibre_top;
}

void require_free(const RingPresentation& pres, std::string_view g, int max_power, const char* what)
{
    if (!top_degree(pres))
        return;
    if (!verify_free_basis(pres, g, max_power))
        throw BundleError(std::string(what) + " ring is not free on the expected basis");
}

// Coefficients of q^k in the Gaussian binomial [m choose 2]_q.
std::vector<std::size_t> gaussian_two(int m)
{
    std::vector<std::size_t> out(static_cast<std::size_t>(std::max(1, 2 * m - 3)), 0);
    for (int a = 0; a <= m - 2; ++a)
        for (int b = a; b <= m - 2; ++b)
            ++out[static_cast<std::size_t>(a + b)];
    return out;
}

void require_poincare(const RingPresentation& pres, const RingPresentation& base, int top,
                      const std::vector<std::size_t>& fibre, int spacing, const char* what)
{
    auto base_dims = poincare_series(base, top);
    std::vector<std::size_t> expected(static_cast<std::size_t>(top) + 1, 0);
    for (std::size_t i = 0; i < base_dims.size(); ++i)
        for (std::size_t k = 0; k < fibre.size(); ++k) {
            std::size_t deg = i + k * static_cast<std::size_t>(spacing);
            if (deg <= static_cast<std::size_t>(top))
                expected[deg] += base_dims[i] * fibre[k];
        }
    if (poincare_series(pres, top) != expected)
        throw BundleError(std::string(what) + " ring has the wrong Poincare series");
}

}  // namespace

ProjectiveRing projective_ring(const BundleSpec& b, CoefficientRing coeffs, std::string_view name)
{
    PresentationPtr base = coerce_base(b, coeffs);
    const int n = b.n();
    const int d = b.d();
    Extension ext = extend(b, base, {{std::string(name), d}});

    Polynomial rel = alternating(ext, name, n + 1);
    ext.relations.push_back(rel);
    auto pres = completed(RingPresentation(ext.sig, ext.relations, ext.strategy,
                                           groebner_truncation(ext, n * d), ext.caps));
    require_free(*pres, name, n, "projective");

    return {pres, RingElement(pres, alternating(ext, name, n)),
            RingElement::generator(pres, name)};
}

QTildeRing q_tilde_ring(const BundleSpec& b, CoefficientRing coeffs)
{
    PresentationPtr base = coerce_base(b, coeffs);
    const int n = b.n();
    const int d = b.d();
    Extension ext = extend(b, base, {{"S", d}, {"T", d}});
    const SignaturePtr& sig = ext.sig;

    ext.relations.push_back(alternating(ext, "S", n + 1));

    // w_n + sum_{i=1}^n (-1)^i h_i(S,T) w_{n-i}, h_i the complete symmetric sum.
    Polynomial rel = ext.w[static_cast<std::size_t>(n)];
    for (int i = 1; i <= n; ++i) {
        Polynomial h(sig);
        for (int j = 0; j <= i; ++j)
            h += Polynomial::variable(sig, "S", static_cast<std::uint32_t>(j)) *
                 Polynomial::variable(sig, "T", static_cast<std::uint32_t>(i - j));
        if (i % 2 == 1)
            h = -h;
        rel += h * ext.w[static_cast<std::size_t>(n - i)];
    }
    ext.relations.push_back(rel);

    auto pres = completed(RingPresentation(sig, ext.relations, ext.strategy,
                                           groebner_truncation(ext, (2 * n - 1) * d), ext.caps));
    require_free(*pres, "T", n - 1, "pair");

    return {pres, RingElement(pres, Polynomial::variable(sig, "T") - Polynomial::variable(sig, "S"))};
}

namespace {

struct GrassmannData {
    PresentationPtr base;
    Extension ext;
    int truncation;
};

GrassmannData grassmann_relations(const BundleSpec& b, std::optional<int> truncation,
                                  std::vector<Generator> fresh)
{
    PresentationPtr base = coerce_base(b, CoefficientRing::F2);
    const int n = b.n();
    const int d = b.d();
    Extension ext = extend(b, base, fresh);
    if (!truncation) {
        if (!ext.base_top)
            throw BundleError("truncation degree missing: the base ring has no known top degree");
        truncation = *ext.base_top + 2 * n * d + d + 1;
    }
    if (ext.base_top && !base->truncation())
        ext.caps.push_back({base->signature()->size(), *ext.base_top});

    PPolynomialTable table(ext.sig);
    ext.relations.push_back(table.p_xi(n, ext.w));
    ext.relations.push_back(Polynomial::variable(ext.sig, "Z") * table.p_xi(n - 1, ext.w) +
                            ext.w[static_cast<std::size_t>(n + 1)]);
    return {base, std::move(ext), *truncation};
}

}  // namespace

GrassmannRing grassmann_ring(const BundleSpec& b, std::optional<int> truncation)
{
    const int d = b.d();
    auto [base, ext, top] = grassmann_relations(b, truncation, {{"Y", d}, {"Z", 2 * d}});
    auto pres = completed(
        RingPresentation(ext.sig, ext.relations, NormalFormStrategy::GroebnerF2, top, ext.caps));
    require_poincare(*pres, *base, top, gaussian_two(b.rank), d, "grassmann");
    return {pres, RingElement::generator(pres, "Y"), RingElement::generator(pres, "Z")};
}

FederRing feder_ring(const BundleSpec& b, std::optional<int> truncation)
{
    const int d = b.d();
    auto [base, ext, top] = grassmann_relations(b, truncation, {{"Y", d}, {"Z", 2 * d}, {"X", 1}});
    const SignaturePtr& sig = ext.sig;
    Polynomial x = Polynomial::variable(sig, "X");
    Polynomial y = Polynomial::variable(sig, "Y");
    Polynomial xd = Polynomial::variable(sig, "X", static_cast<std::uint32_t>(d));
    ext.relations.push_back(x * (xd + y));

    auto pres = completed(
        RingPresentation(sig, ext.relations, NormalFormStrategy::GroebnerF2, top, ext.caps));

    // Grassmann series times 1 + t + .. + t^d.
    auto g = gaussian_two(b.rank);
    std::vector<std::size_t> fibre(g.size() * static_cast<std::size_t>(d) + static_cast<std::size_t>(d), 0);
    for (std::size_t k = 0; k < g.size(); ++k)
        for (int j = 0; j <= d; ++j)
            fibre[k * static_cast<std::size_t>(d) + static_cast<std::size_t>(j)] += g[k];
    require_poincare(*pres, *base, top, fibre, 1, "feder");
    if (!verify_free_basis(*pres, "X", d))
        throw BundleError("feder ring is not free on 1, X, .., X^d");

    return {pres, RingElement(pres, x), RingElement(pres, y + xd), RingElement(pres, y)};
}

PPolynomialTable::PPolynomialTable(SignaturePtr sig, std::string_view y, std::string_view z)
    : sig_(std::move(sig)), y_(Polynomial::variable(sig_, y)), z_(Polynomial::variable(sig_, z))
{
    memo_.push_back(Polynomial::one(sig_));
    memo_.push_back(y_);
}

const Polynomial& PPolynomialTable::p(int i)
{
    if (i < 0)
        throw AlgebraError("p_i needs i >= 0");
    while (memo_.size() <= static_cast<std::size_t>(i)) {
        std::size_t k = memo_.size();
        memo_.push_back(y_ * memo_[k - 1] + z_ * memo_[k - 2]);
    }
    return memo_[static_cast<std::size_t>(i)];
}

Polynomial PPolynomialTable::p_xi(int i, const std::vector<Polynomial>& w)
{
    Polynomial out(sig_);
    for (int j = 0; j <= i; ++j) {
        if (j == 0)
            out += p(i);
        else if (static_cast<std::size_t>(j) < w.size())
            out += p(i - j) * w[static_cast<std::size_t>(j)];
    }
    return out;
}

Polynomial p_polynomial(int i, PPolynomialTable& table)
{
    return table.p(i);
}

std::vector<std::size_t> poincare_series(const RingPresentation& pres, int top)
{
    std::vector<std::size_t> out;
    for (int deg = 0; deg <= top; ++deg)
        out.push_back(quotient_dimension(pres, deg));
    return out;
}

}  // namespace fibtc
