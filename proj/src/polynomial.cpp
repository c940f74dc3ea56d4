#include "fibtc/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace fibtc {

std::string to_string(CoefficientRing ring)
{
    return ring == CoefficientRing::F2 ? "F2" : "Z";
}

namespace {

bool valid_name(std::string_view name)
{
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front())))
        return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

}  // namespace

Signature::Signature(CoefficientRing ring, std::vector<Generator> generators)
    : ring_(ring), generators_(std::move(generators))
{
    std::set<std::string> seen;
    for (const auto& g : generators_) {
        if (!valid_name(g.name))
            throw AlgebraError("invalid generator name '" + g.name + "'");
        if (!seen.insert(g.name).second)
            throw AlgebraError("duplicate generator '" + g.name + "'");
        if (g.degree <= 0)
            throw AlgebraError("generator '" + g.name + "' must have positive degree");
        if (ring_ == CoefficientRing::Integers && g.degree % 2 != 0)
            throw AlgebraError("generator '" + g.name + "' has odd degree " +
                               std::to_string(g.degree) +
                               "; integral rings must be evenly graded to stay commutative");
    }
}

std::optional<std::size_t> Signature::index_of(std::string_view name) const
{
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].name == name)
            return i;
    return std::nullopt;
}

int Signature::max_degree() const
{
    int m = 0;
    for (const auto& g : generators_)
        m = std::max(m, g.degree);
    return m;
}

SignaturePtr make_signature(CoefficientRing ring, std::vector<Generator> generators)
{
    return std::make_shared<const Signature>(ring, std::move(generators));
}

bool same_signature(const SignaturePtr& a, const SignaturePtr& b)
{
    return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<std::uint32_t> exponents, const Signature& sig)
    : exponents_(std::move(exponents))
{
    if (exponents_.size() != sig.size())
        throw AlgebraError("monomial length does not match signature");
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        degree_ += static_cast<int>(exponents_[i]) * sig.degree(i);
}

Monomial Monomial::one(std::size_t generators)
{
    Monomial m;
    m.exponents_.assign(generators, 0);
    return m;
}

Monomial Monomial::variable(const Signature& sig, std::size_t index, std::uint32_t power)
{
    Monomial m = one(sig.size());
    m.exponents_[index] = power;
    m.degree_ = static_cast<int>(power) * sig.degree(index);
    return m;
}

bool Monomial::is_one() const
{
    return std::all_of(exponents_.begin(), exponents_.end(), [](auto e) { return e == 0; });
}

int Monomial::prefix_degree(const Signature& sig, std::size_t prefix) const
{
    int d = 0;
    for (std::size_t i = 0; i < prefix && i < exponents_.size(); ++i)
        d += static_cast<int>(exponents_[i]) * sig.degree(i);
    return d;
}

bool Monomial::divides(const Monomial& other) const
{
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        if (exponents_[i] > other.exponents_[i])
            return false;
    return true;
}

bool Monomial::coprime(const Monomial& other) const
{
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        if (exponents_[i] != 0 && other.exponents_[i] != 0)
            return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial m = *this;
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        m.exponents_[i] += other.exponents_[i];
    m.degree_ += other.degree_;
    return m;
}

Monomial Monomial::quotient(const Monomial& divisor) const
{
    Monomial m = *this;
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        m.exponents_[i] -= divisor.exponents_[i];
    m.degree_ -= divisor.degree_;
    return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b, const Signature& sig)
{
    std::vector<std::uint32_t> e(a.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::max(a[i], b[i]);
    return Monomial(std::move(e), sig);
}

std::strong_ordering compare(const Monomial& a, const Monomial& b)
{
    if (auto c = a.degree() <=> b.degree(); c != 0)
        return c;
    for (std::size_t i = a.size(); i-- > 0;)
        if (auto c = a[i] <=> b[i]; c != 0)
            return c;
    return std::strong_ordering::equal;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const
{
    return compare(a, b) < 0;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(SignaturePtr sig) : sig_(std::move(sig))
{
    if (!sig_)
        throw AlgebraError("polynomial needs a signature");
}

Polynomial Polynomial::constant(SignaturePtr sig, const Integer& value)
{
    Polynomial p(std::move(sig));
    p.add_term(Monomial::one(p.sig_->size()), value);
    return p;
}

Polynomial Polynomial::variable(SignaturePtr sig, std::string_view name, std::uint32_t power)
{
    auto idx = sig->index_of(name);
    if (!idx)
        throw AlgebraError("unknown generator '" + std::string(name) + "'");
    Polynomial p(sig);
    p.add_term(Monomial::variable(*sig, *idx, power), 1);
    return p;
}

Polynomial Polynomial::term(SignaturePtr sig, const Monomial& m, const Integer& coefficient)
{
    Polynomial p(std::move(sig));
    p.add_term(m, coefficient);
    return p;
}

const Monomial& Polynomial::leading_monomial() const
{
    if (terms_.empty())
        throw AlgebraError("zero polynomial has no leading term");
    return terms_.rbegin()->first;
}

const Integer& Polynomial::leading_coefficient() const
{
    if (terms_.empty())
        throw AlgebraError("zero polynomial has no leading term");
    return terms_.rbegin()->second;
}

Integer Polynomial::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<int> Polynomial::degree() const
{
    if (terms_.empty())
        return std::nullopt;
    return terms_.rbegin()->first.degree();  // the order is graded
}

bool Polynomial::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

bool Polynomial::involves(std::size_t generator) const
{
    return degree_in(generator) > 0;
}

std::uint32_t Polynomial::degree_in(std::size_t generator) const
{
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m[generator]);
    return d;
}

Integer Polynomial::normalized(const Integer& c) const
{
    if (sig_->ring() == CoefficientRing::F2)
        return (c % 2 != 0) ? Integer(1) : Integer(0);
    return c;
}

void Polynomial::add_term(const Monomial& m, const Integer& coefficient)
{
    if (m.size() != sig_->size())
        throw AlgebraError("monomial length does not match signature");
    Integer c = normalized(coefficient);
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted)
        return;
    it->second = normalized(it->second + c);
    if (it->second == 0)
        terms_.erase(it);
}

void Polynomial::add_multiple(const Polynomial& p, const Integer& coefficient, const Monomial& m)
{
    require_compatible(p, "add_multiple");
    for (const auto& [pm, pc] : p.terms_)
        add_term(pm * m, pc * coefficient);
}

void Polynomial::require_compatible(const Polynomial& other, const char* op) const
{
    if (!same_signature(sig_, other.sig_))
        throw RingMismatch(std::string(op) + ": operands have different rings or generators");
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    require_compatible(other, "add");
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    require_compatible(other, "sub");
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other)
{
    *this = *this * other;
    return *this;
}

Polynomial Polynomial::operator-() const
{
    return scaled(-1);
}

Polynomial Polynomial::scaled(const Integer& factor) const
{
    Polynomial r(sig_);
    for (const auto& [m, c] : terms_)
        r.add_term(m, c * factor);
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    a.require_compatible(b, "mul");
    Polynomial r(a.sig_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

bool Polynomial::operator==(const Polynomial& other) const
{
    return same_signature(sig_, other.sig_) && terms_ == other.terms_;
}

Polynomial add(const Polynomial& a, const Polynomial& b)
{
    return a + b;
}

Polynomial mul(const Polynomial& a, const Polynomial& b)
{
    return a * b;
}

Polynomial pow(const Polynomial& a, std::uint64_t k)
{
    Polynomial result = Polynomial::one(a.signature());
    Polynomial base = a;
    while (k > 0) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k > 0)
            base = base * base;
    }
    return result;
}

std::string render(const Polynomial& p)
{
    if (p.is_zero())
        return "0";
    const Signature& sig = *p.signature();
    std::ostringstream out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Integer mag = c < 0 ? Integer(-c) : c;
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;

        bool wrote = false;
        if (mag != 1 || m.is_one()) {
            out << mag;
            wrote = true;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0)
                continue;
            if (wrote)
                out << '*';
            out << sig[i].name;
            if (m[i] > 1)
                out << '^' << m[i];
            wrote = true;
        }
    }
    return out.str();
}

Polynomial lift(const Polynomial& p, const SignaturePtr& target)
{
    const Signature& src = *p.signature();
    std::vector<std::optional<std::size_t>> map(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
        map[i] = target->index_of(src[i].name);
        if (map[i] && target->degree(*map[i]) != src.degree(i))
            throw RingMismatch("generator '" + src[i].name + "' changes degree under lift");
    }
    Polynomial r(target);
    for (const auto& [m, c] : p.terms()) {
        std::vector<std::uint32_t> e(target->size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0)
                continue;
            if (!map[i])
                throw RingMismatch("generator '" + src[i].name + "' missing from target ring");
            e[*map[i]] = m[i];
        }
        r.add_term(Monomial(std::move(e), *target), c);
    }
    return r;
}

Polynomial swap_generators(const Polynomial& p, std::string_view a, std::string_view b)
{
    const Signature& sig = *p.signature();
    auto ia = sig.index_of(a);
    auto ib = sig.index_of(b);
    if (!ia || !ib)
        throw AlgebraError("swap_generators: unknown generator");
    if (sig.degree(*ia) != sig.degree(*ib))
        throw AlgebraError("swap_generators: generators have different degrees");
    Polynomial r(p.signature());
    for (const auto& [m, c] : p.terms()) {
        auto e = m.exponents();
        std::swap(e[*ia], e[*ib]);
        r.add_term(Monomial(std::move(e), sig), c);
    }
    return r;
}

Polynomial substitute_zero(const Polynomial& p, std::string_view name)
{
    auto idx = p.signature()->index_of(name);
    if (!idx)
        throw AlgebraError("substitute_zero: unknown generator '" + std::string(name) + "'");
    Polynomial r(p.signature());
    for (const auto& [m, c] : p.terms())
        if (m[*idx] == 0)
            r.add_term(m, c);
    return r;
}

}  // namespace fibtc
