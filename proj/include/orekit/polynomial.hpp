#ifndef OREKIT_POLYNOMIAL_HPP
#define OREKIT_POLYNOMIAL_HPP

#include <functional>
#include <gmpxx.h>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "orekit/symbol.hpp"

namespace orekit {

class Monomial {
public:
    using Factor = std::pair<Sym, std::uint32_t>;

    Monomial() = default;
    explicit Monomial(Sym s, std::uint32_t e = 1);

    const std::vector<Factor>& factors() const { return f_; }
    bool is_one() const { return f_.empty(); }
    std::uint32_t degree(Sym s) const;
    std::uint32_t total_degree() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    // Caller guarantees divisibility.
    Monomial operator/(const Monomial& o) const;
    Monomial without(Sym s) const;

    static Monomial gcd(const Monomial& a, const Monomial& b);
    // Lexicographic comparison, smaller symbol keys weigh more.
    static int compare(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& o) const { return f_ == o.f_; }
    bool operator!=(const Monomial& o) const { return f_ != o.f_; }

private:
    friend class Polynomial;
    std::vector<Factor> f_;
};

using SymNamer = std::function<std::string(Sym)>;

// Sparse multivariate polynomial over Q, terms in decreasing lex order.
class Polynomial {
public:
    using Term = std::pair<Monomial, mpq_class>;

    Polynomial() = default;
    Polynomial(long c);
    Polynomial(const mpq_class& c);
    static Polynomial symbol(Sym s);
    static Polynomial term(Monomial m, mpq_class c);

    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_one()); }
    bool is_one() const;
    mpq_class constant_value() const;
    const Term& leading() const { return t_.front(); }
    const mpq_class& leading_coeff() const { return t_.front().second; }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial scaled(const mpq_class& c) const;
    Polynomial times(const Monomial& m, const mpq_class& c) const;
    Polynomial pow(unsigned e) const;

    bool operator==(const Polynomial& o) const { return t_ == o.t_; }
    bool operator!=(const Polynomial& o) const { return !(t_ == o.t_); }
    // Total order used for canonical sorting of containers.
    static int compare(const Polynomial& a, const Polynomial& b);

    std::set<Sym> symbols() const;
    bool has_kind(SymKind k) const;
    std::uint32_t degree(Sym s) const;
    std::uint32_t total_degree() const;

    // Coefficients with respect to s: entry d is the coefficient of s^d.
    std::vector<Polynomial> coefficients_in(Sym s) const;

    // Partial derivative by variable i; function symbols follow the chain rule.
    Polynomial derive(int i) const;
    Polynomial substitute(Sym s, const Polynomial& value) const;
    // Replace every symbol using f; symbols for which f returns nullopt stay.
    Polynomial evaluate(const std::function<std::optional<mpq_class>(Sym)>& f) const;

    Polynomial monic() const;
    // Integer coefficients with gcd 1 and positive leading coefficient.
    Polynomial primitive() const;

    std::string to_string(const SymNamer& name) const;

private:
    static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract);
    void canonicalize();
    std::vector<Term> t_;
};

// Exact quotient if b divides a.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);
// Monic gcd; gcd(0, 0) = 0. Heuristic evaluation/interpolation first,
// subresultant remainder sequences as the fallback.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
// Recursive primitive subresultant PRS only; slower, kept as a reference.
Polynomial gcd_prs(const Polynomial& a, const Polynomial& b);

}  // namespace orekit

#endif
