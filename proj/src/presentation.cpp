#include "fibtc/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fibtc {

std::string to_string(NormalFormStrategy s)
{
    return s == NormalFormStrategy::MonicTower ? "tower" : "groebner";
}

// Defined in groebner.cpp.
Polynomial reduce_by(const Polynomial& p, const std::vector<Polynomial>& reducers,
                     const RingPresentation& pres);
std::vector<Polynomial> truncated_buchberger(const RingPresentation& pres);

RingPresentation::RingPresentation(SignaturePtr sig, std::vector<Polynomial> relations,
                                   NormalFormStrategy strategy, std::optional<int> truncation,
                                   std::vector<DegreeCap> caps)
    : sig_(std::move(sig)),
      strategy_(strategy),
      truncation_(truncation),
      caps_(std::move(caps))
{
    if (!sig_)
        throw PresentationError("presentation needs a signature");
    if (truncation_ && *truncation_ < 0)
        throw PresentationError("truncation degree must be non-negative");
    for (const auto& cap : caps_)
        if (cap.prefix > sig_->size())
            throw PresentationError("degree cap refers to missing generators");

    for (auto& r : relations) {
        if (!same_signature(r.signature(), sig_))
            throw RingMismatch("relation is not over the presentation's generators");
        if (r.is_zero())
            continue;
        if (!r.is_homogeneous())
            throw PresentationError("relation not homogeneous: " + render(r));
        if (*r.degree() == 0)
            throw PresentationError("relation in degree 0 would disconnect the ring: " + render(r));
        relations_.push_back(std::move(r));
    }

    if (strategy_ == NormalFormStrategy::GroebnerF2) {
        if (sig_->ring() != CoefficientRing::F2)
            throw PresentationError("GroebnerF2 strategy requires F2 coefficients");
        return;
    }
    validate_tower();
}

void RingPresentation::validate_tower()
{
    std::set<std::size_t> designated;
    reducers_.clear();
    for (const auto& r : relations_) {
        const Monomial& lead = r.leading_monomial();
        std::optional<std::size_t> g;
        for (std::size_t i = 0; i < lead.size(); ++i) {
            if (lead[i] == 0)
                continue;
            if (g)
                throw PresentationError("MonicTower relation " + render(r) +
                                        " does not lead with a pure generator power");
            g = i;
        }
        const Integer& lc = r.leading_coefficient();
        if (lc != 1 && lc != -1)
            throw PresentationError("MonicTower relation " + render(r) + " is not monic");
        if (!designated.insert(*g).second)
            throw PresentationError("two MonicTower relations share generator '" +
                                    (*sig_)[*g].name + "'");
        for (const auto& [m, c] : r.terms()) {
            if (m == lead)
                continue;
            for (std::size_t i = *g + 1; i < m.size(); ++i)
                if (m[i] != 0)
                    throw PresentationError("MonicTower relation " + render(r) +
                                            " involves a later generator than '" +
                                            (*sig_)[*g].name + "'");
        }
        reducers_.push_back(lc == 1 ? r : -r);
    }
    complete_ = true;
}

const std::vector<Polynomial>& RingPresentation::reducers() const
{
    if (!complete_)
        throw PresentationError("presentation has not been completed");
    return reducers_;
}

bool RingPresentation::vanishes(const Monomial& m) const
{
    if (truncation_ && m.degree() > *truncation_)
        return true;
    for (const auto& cap : caps_)
        if (m.prefix_degree(*sig_, cap.prefix) > cap.max_degree)
            return true;
    return false;
}

bool RingPresentation::is_standard(const Monomial& m) const
{
    if (vanishes(m))
        return false;
    for (const auto& r : reducers())
        if (r.leading_monomial().divides(m))
            return false;
    return true;
}

Polynomial RingPresentation::reduce(const Polynomial& p) const
{
    if (!same_signature(p.signature(), sig_))
        throw RingMismatch("element is not over the presentation's generators: " + render(p));
    return reduce_by(p, reducers(), *this);
}

RingPresentation complete(const RingPresentation& pres)
{
    if (pres.strategy() == NormalFormStrategy::MonicTower || pres.is_complete())
        return pres;
    if (!pres.truncation())
        throw PresentationError("GroebnerF2 completion needs a truncation degree");
    RingPresentation out = pres;
    out.reducers_ = truncated_buchberger(pres);
    out.complete_ = true;
    return out;
}

PresentationPtr completed(const RingPresentation& pres)
{
    return std::make_shared<const RingPresentation>(complete(pres));
}

// -------------------------------------------------------------- RingElement

RingElement::RingElement(PresentationPtr parent, const Polynomial& p)
    : parent_(std::move(parent)), nf_(parent_->reduce(p))
{
}

RingElement RingElement::one(const PresentationPtr& parent)
{
    return RingElement(parent, Polynomial::one(parent->signature()));
}

RingElement RingElement::generator(const PresentationPtr& parent, std::string_view name)
{
    return RingElement(parent, Polynomial::variable(parent->signature(), name));
}

void RingElement::require_same_parent(const RingElement& other) const
{
    if (parent_ != other.parent_)
        throw RingMismatch("ring elements belong to different presentations");
}

RingElement& RingElement::operator+=(const RingElement& other)
{
    require_same_parent(other);
    nf_ += other.nf_;
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& other)
{
    require_same_parent(other);
    nf_ -= other.nf_;
    return *this;
}

RingElement& RingElement::operator*=(const RingElement& other)
{
    require_same_parent(other);
    nf_ = parent_->reduce(nf_ * other.nf_);
    return *this;
}

RingElement RingElement::pow(std::uint64_t k) const
{
    RingElement result = one(parent_);
    RingElement base = *this;
    while (k > 0) {
        if (k & 1)
            result *= base;
        k >>= 1;
        if (k > 0)
            base *= base;
    }
    return result;
}

bool RingElement::operator==(const RingElement& other) const
{
    return parent_ == other.parent_ && nf_ == other.nf_;
}

RingElement normal_form(const Polynomial& p, const PresentationPtr& pres)
{
    return RingElement(pres, p);
}

bool is_zero(const RingElement& e)
{
    return e.is_zero();
}

std::vector<Polynomial> module_coordinates(const RingElement& e, std::string_view basis_generator,
                                           int max_power)
{
    const RingPresentation& pres = *e.parent();
    const SignaturePtr& sig = pres.signature();
    auto idx = sig->index_of(basis_generator);
    if (!idx)
        throw PresentationError("unknown basis generator '" + std::string(basis_generator) + "'");
    if (max_power < 0)
        throw PresentationError("max_power must be non-negative");

    std::vector<Polynomial> coords(static_cast<std::size_t>(max_power) + 1, Polynomial(sig));
    for (const auto& [m, c] : e.polynomial().terms()) {
        std::uint32_t j = m[*idx];
        if (j > static_cast<std::uint32_t>(max_power))
            throw PresentationError("element " + render(e.polynomial()) +
                                    " is not expressible in the basis 1.." +
                                    std::string(basis_generator) + "^" +
                                    std::to_string(max_power));
        coords[j].add_term(m.quotient(Monomial::variable(*sig, *idx, j)), c);
    }
    if (pres.truncation() && !verify_free_basis(pres, basis_generator, max_power))
        throw PresentationError("ring is not free on 1.." + std::string(basis_generator) + "^" +
                                std::to_string(max_power));
    return coords;
}

// ------------------------------------------------- degreewise linear algebra

namespace {

void enumerate(const Signature& sig, std::size_t index, int remaining,
               std::vector<std::uint32_t>& exps, std::vector<Monomial>& out)
{
    if (index == sig.size()) {
        if (remaining == 0)
            out.emplace_back(exps, sig);
        return;
    }
    int deg = sig.degree(index);
    for (std::uint32_t e = 0; static_cast<int>(e) * deg <= remaining; ++e) {
        exps[index] = e;
        enumerate(sig, index + 1, remaining - static_cast<int>(e) * deg, exps, out);
    }
    exps[index] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const Signature& sig, int degree)
{
    std::vector<Monomial> out;
    if (degree < 0)
        return out;
    std::vector<std::uint32_t> exps(sig.size(), 0);
    enumerate(sig, 0, degree, exps, out);
    return out;
}

std::vector<Monomial> standard_monomials(const RingPresentation& pres, int degree)
{
    std::vector<Monomial> out;
    for (auto& m : monomials_of_degree(*pres.signature(), degree))
        if (pres.is_standard(m))
            out.push_back(std::move(m));
    return out;
}

std::size_t quotient_dimension(const RingPresentation& pres, int degree)
{
    return standard_monomials(pres, degree).size();
}

std::optional<int> top_degree(const RingPresentation& pres)
{
    if (pres.truncation())
        return pres.truncation();

    const Signature& sig = *pres.signature();
    for (std::size_t i = 0; i < sig.size(); ++i) {
        bool bounded = std::any_of(pres.caps().begin(), pres.caps().end(),
                                   [i](const DegreeCap& c) { return i < c.prefix; });
        for (const auto& r : pres.reducers()) {
            const Monomial& lead = r.leading_monomial();
            if (lead[i] > 0 && lead.degree() == static_cast<int>(lead[i]) * sig.degree(i))
                bounded = true;
        }
        if (!bounded)
            return std::nullopt;
    }

    // A run of max_degree empty pieces means every higher piece is empty too.
    const int window = std::max(1, sig.max_degree());
    int top = 0;
    int empty_run = 0;
    for (int d = 0; empty_run < window; ++d) {
        if (quotient_dimension(pres, d) > 0) {
            top = d;
            empty_run = 0;
        } else {
            ++empty_run;
        }
    }
    return top;
}

bool verify_free_basis(const RingPresentation& pres, std::string_view generator, int max_power,
                       std::optional<int> up_to)
{
    const Signature& sig = *pres.signature();
    auto idx = sig.index_of(generator);
    if (!idx)
        throw PresentationError("unknown basis generator '" + std::string(generator) + "'");
    if (!up_to)
        up_to = top_degree(pres);
    if (!up_to)
        throw PresentationError("freeness check needs a finite degree bound");

    const int gdeg = sig.degree(*idx);
    std::map<int, std::size_t> sub_dims;
    auto sub_dim = [&](int d) -> std::size_t {
        if (d < 0)
            return 0;
        if (auto it = sub_dims.find(d); it != sub_dims.end())
            return it->second;
        std::size_t n = 0;
        for (const auto& m : standard_monomials(pres, d))
            if (m[*idx] == 0)
                ++n;
        return sub_dims[d] = n;
    };

    for (int d = 0; d <= *up_to; ++d) {
        auto std_monomials = standard_monomials(pres, d);
        for (const auto& m : std_monomials)
            if (m[*idx] > static_cast<std::uint32_t>(max_power))
                return false;
        std::size_t expected = 0;
        for (int j = 0; j <= max_power; ++j)
            expected += sub_dim(d - j * gdeg);
        if (std_monomials.size() != expected)
            return false;
    }
    return true;
}

Polynomial F2Span::reduce(Polynomial v) const
{
    Polynomial rem(v.signature());
    while (!v.is_zero()) {
        const Monomial lead = v.leading_monomial();
        auto row = std::find_if(rows_.begin(), rows_.end(),
                                [&](const Polynomial& r) { return r.leading_monomial() == lead; });
        if (row != rows_.end()) {
            v += *row;
        } else {
            rem.add_term(lead, 1);
            v.erase(lead);
        }
    }
    return rem;
}

bool F2Span::insert(const Polynomial& v)
{
    if (v.ring() != CoefficientRing::F2)
        throw AlgebraError("F2Span only accepts F2 polynomials");
    Polynomial r = reduce(v);
    if (r.is_zero())
        return false;
    rows_.push_back(std::move(r));
    return true;
}

bool F2Span::contains(const Polynomial& v) const
{
    if (v.ring() != CoefficientRing::F2)
        throw AlgebraError("F2Span only accepts F2 polynomials");
    return reduce(v).is_zero();
}

SignaturePtr mod2_signature(const SignaturePtr& sig)
{
    if (sig->ring() == CoefficientRing::F2)
        return sig;
    return make_signature(CoefficientRing::F2, sig->generators());
}

RingPresentation reduce_mod2(const RingPresentation& pres)
{
    if (pres.coefficients() == CoefficientRing::F2)
        return pres;
    SignaturePtr sig = mod2_signature(pres.signature());
    std::vector<Polynomial> rels;
    for (const auto& r : pres.relations())
        rels.push_back(lift(r, sig));
    return complete(RingPresentation(sig, std::move(rels), pres.strategy(), pres.truncation(),
                                     pres.caps()));
}

}  // namespace fibtc
