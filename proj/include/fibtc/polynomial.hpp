#pragma once

// Sparse multivariate graded polynomials over F2 or the integers.
//
// Every polynomial carries a shared Signature: the coefficient ring plus the
// ordered list of generators with their (positive) degrees. Two polynomials
// can only be combined when their signatures agree.
//
// All generators either sit in even degree or the coefficients are F2, so
// the graded ring is strictly commutative and no Koszul signs ever appear.
// Odd-degree generators over the integers are rejected when a Signature is
// built.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fibtc {

using Integer = boost::multiprecision::cpp_int;

enum class CoefficientRing { F2, Integers };

std::string to_string(CoefficientRing ring);

class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when two operands live over different rings or generator sets.
class RingMismatch : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

struct Generator {
    std::string name;
    int degree = 1;

    bool operator==(const Generator&) const = default;
};

class Signature {
public:
    Signature(CoefficientRing ring, std::vector<Generator> generators);

    CoefficientRing ring() const { return ring_; }
    std::size_t size() const { return generators_.size(); }
    const Generator& operator[](std::size_t i) const { return generators_[i]; }
    const std::vector<Generator>& generators() const { return generators_; }
    int degree(std::size_t i) const { return generators_[i].degree; }
    std::optional<std::size_t> index_of(std::string_view name) const;
    int max_degree() const;

    bool operator==(const Signature& other) const = default;

private:
    CoefficientRing ring_;
    std::vector<Generator> generators_;
};

using SignaturePtr = std::shared_ptr<const Signature>;

SignaturePtr make_signature(CoefficientRing ring, std::vector<Generator> generators);

/// True when both signatures describe the same ring and generators.
bool same_signature(const SignaturePtr& a, const SignaturePtr& b);

// Exponent vector indexed by generator position, with its cached graded
// degree.
class Monomial {
public:
    Monomial() = default;
    Monomial(std::vector<std::uint32_t> exponents, const Signature& sig);

    static Monomial one(std::size_t generators);
    static Monomial variable(const Signature& sig, std::size_t index, std::uint32_t power = 1);

    std::size_t size() const { return exponents_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exponents_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return exponents_; }
    int degree() const { return degree_; }
    bool is_one() const;

    /// Graded degree restricted to the first `prefix` generators.
    int prefix_degree(const Signature& sig, std::size_t prefix) const;

    bool divides(const Monomial& other) const;
    bool coprime(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    /// Requires divisor.divides(*this).
    Monomial quotient(const Monomial& divisor) const;
    static Monomial lcm(const Monomial& a, const Monomial& b, const Signature& sig);

    bool operator==(const Monomial& other) const { return exponents_ == other.exponents_; }

private:
    std::vector<std::uint32_t> exponents_;
    int degree_ = 0;
};

// Graded lexicographic order: total graded degree first, then exponents
// compared from the last generator backwards, so later generators dominate.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

std::strong_ordering compare(const Monomial& a, const Monomial& b);

class Polynomial {
public:
    using Terms = std::map<Monomial, Integer, MonomialOrder>;

    explicit Polynomial(SignaturePtr sig);

    static Polynomial constant(SignaturePtr sig, const Integer& value);
    static Polynomial one(SignaturePtr sig) { return constant(std::move(sig), 1); }
    static Polynomial variable(SignaturePtr sig, std::string_view name, std::uint32_t power = 1);
    static Polynomial term(SignaturePtr sig, const Monomial& m, const Integer& coefficient = 1);

    const SignaturePtr& signature() const { return sig_; }
    CoefficientRing ring() const { return sig_->ring(); }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Largest monomial in the graded-lex order. Requires !is_zero().
    const Monomial& leading_monomial() const;
    const Integer& leading_coefficient() const;
    Integer coefficient(const Monomial& m) const;

    /// Maximal graded degree of a term; nullopt for zero.
    std::optional<int> degree() const;
    bool is_homogeneous() const;
    bool involves(std::size_t generator) const;
    /// Largest exponent of the given generator among all terms.
    std::uint32_t degree_in(std::size_t generator) const;

    /// this += coefficient * m
    void add_term(const Monomial& m, const Integer& coefficient);
    /// this += coefficient * m * p
    void add_multiple(const Polynomial& p, const Integer& coefficient, const Monomial& m);
    void erase(const Monomial& m) { terms_.erase(m); }

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial operator-() const;
    Polynomial scaled(const Integer& factor) const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    bool operator==(const Polynomial& other) const;

private:
    void require_compatible(const Polynomial& other, const char* op) const;
    Integer normalized(const Integer& c) const;

    SignaturePtr sig_;
    Terms terms_;
};

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial mul(const Polynomial& a, const Polynomial& b);
/// Square-and-multiply; pow(a, 0) is 1.
Polynomial pow(const Polynomial& a, std::uint64_t k);

/// Text form accepted back by parse(): terms in decreasing order, `*` between
/// factors, `^` for exponents.
std::string render(const Polynomial& p);

/// Re-express p over `target`, matching generators by name. Throws when a
/// generator of p (with a nonzero exponent) is missing from target or has a
/// different degree. Integer coefficients are reduced when target is over F2.
Polynomial lift(const Polynomial& p, const SignaturePtr& target);

/// Exchange two generators of equal degree.
Polynomial swap_generators(const Polynomial& p, std::string_view a, std::string_view b);

/// Set one generator to zero.
Polynomial substitute_zero(const Polynomial& p, std::string_view name);

}  // namespace fibtc
