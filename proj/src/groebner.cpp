#include <algorithm>
#include <functional>
#include <queue>
#include <tuple>

#include "fibtc/presentation.hpp"

namespace fibtc {

namespace {

using VanishTest = std::function<bool(const Monomial&)>;

Polynomial reduce_with(const Polynomial& p, const std::vector<Polynomial>& reducers,
                       const VanishTest& vanishes)
{
    Polynomial work = p;
    Polynomial rem(p.signature());
    while (!work.is_zero()) {
        const Monomial lead = work.leading_monomial();
        const Integer c = work.leading_coefficient();
        if (vanishes(lead)) {
            work.erase(lead);
            continue;
        }
        auto r = std::find_if(reducers.begin(), reducers.end(), [&](const Polynomial& g) {
            return g.leading_monomial().divides(lead);
        });
        if (r != reducers.end()) {
            work.add_multiple(*r, -c, lead.quotient(r->leading_monomial()));
        } else {
            rem.add_term(lead, c);
            work.erase(lead);
        }
    }
    return rem;
}

// Monomials in the first `prefix` generators whose degree lies just above the
// cap; together they generate every capped monomial.
std::vector<Polynomial> cap_monomials(const RingPresentation& pres, const DegreeCap& cap)
{
    const SignaturePtr& sig = pres.signature();
    std::vector<Generator> head(sig->generators().begin(),
                                sig->generators().begin() + static_cast<long>(cap.prefix));
    std::vector<Polynomial> out;
    if (head.empty())
        return out;
    Signature sub(sig->ring(), head);
    for (int d = cap.max_degree + 1; d <= cap.max_degree + sub.max_degree(); ++d) {
        for (const auto& m : monomials_of_degree(sub, d)) {
            auto exps = m.exponents();
            exps.resize(sig->size(), 0);
            out.push_back(Polynomial::term(sig, Monomial(exps, *sig)));
        }
    }
    return out;
}

}  // namespace

Polynomial reduce_by(const Polynomial& p, const std::vector<Polynomial>& reducers,
                     const RingPresentation& pres)
{
    return reduce_with(p, reducers, [&](const Monomial& m) { return pres.vanishes(m); });
}

// Caps enter as explicit monomial relations so that their S-pairs are seen;
// during completion only the truncation degree kills terms.
std::vector<Polynomial> truncated_buchberger(const RingPresentation& pres)
{
    const int limit = *pres.truncation();
    const VanishTest too_high = [limit](const Monomial& m) { return m.degree() > limit; };
    std::vector<Polynomial> input = pres.relations();
    for (const auto& cap : pres.caps()) {
        auto extra = cap_monomials(pres, cap);
        input.insert(input.end(), extra.begin(), extra.end());
    }

    std::vector<Polynomial> basis;
    using Pair = std::tuple<int, std::size_t, std::size_t>;
    std::priority_queue<Pair, std::vector<Pair>, std::greater<>> pairs;

    auto add = [&](Polynomial g) {
        const std::size_t k = basis.size();
        for (std::size_t i = 0; i < k; ++i) {
            const Monomial& a = basis[i].leading_monomial();
            const Monomial& b = g.leading_monomial();
            if (a.coprime(b))
                continue;
            int d = Monomial::lcm(a, b, *pres.signature()).degree();
            if (d <= limit)
                pairs.emplace(d, i, k);
        }
        basis.push_back(std::move(g));
    };

    std::sort(input.begin(), input.end(), [](const Polynomial& a, const Polynomial& b) {
        return *a.degree() < *b.degree();
    });
    for (const auto& r : input) {
        Polynomial h = reduce_with(r, basis, too_high);
        if (!h.is_zero())
            add(std::move(h));
    }

    while (!pairs.empty()) {
        auto [d, i, j] = pairs.top();
        pairs.pop();
        const Monomial& a = basis[i].leading_monomial();
        const Monomial& b = basis[j].leading_monomial();
        Monomial l = Monomial::lcm(a, b, *pres.signature());
        Polynomial s(pres.signature());
        s.add_multiple(basis[i], 1, l.quotient(a));
        s.add_multiple(basis[j], 1, l.quotient(b));
        Polynomial h = reduce_with(s, basis, too_high);
        if (!h.is_zero())
            add(std::move(h));
    }

    // Minimal basis, then reduce every tail.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Monomial& lead = basis[i].leading_monomial();
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j)
                continue;
            const Monomial& other = basis[j].leading_monomial();
            if (other.divides(lead) && (!(other == lead) || j < i))
                redundant = true;
        }
        if (!redundant)
            minimal.push_back(basis[i]);
    }
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i)
                others.push_back(minimal[j]);
        reduced.push_back(reduce_with(minimal[i], others, too_high));
    }
    std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
        return MonomialOrder{}(a.leading_monomial(), b.leading_monomial());
    });
    return reduced;
}

}  // namespace fibtc
