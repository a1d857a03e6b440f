#ifndef OREKIT_RATFUNC_HPP
#define OREKIT_RATFUNC_HPP

#include "orekit/polynomial.hpp"

namespace orekit {

// Element of the differential field Q(params)(x, function jets), kept in
// lowest terms with a monic denominator.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}
    RatFunc(const mpq_class& c) : num_(c), den_(1) {}
    RatFunc(Polynomial p) : num_(std::move(p)), den_(1) {}
    RatFunc(Polynomial num, Polynomial den);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_one(); }
    mpq_class constant_value() const { return num_.constant_value(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc inverse() const;
    RatFunc pow(int e) const;

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc derive(int i) const;
    RatFunc substitute(Sym s, const RatFunc& value) const;
    // Full evaluation; returns nullopt if the denominator vanishes.
    std::optional<mpq_class> evaluate(const std::function<std::optional<mpq_class>(Sym)>& f) const;
    RatFunc partial_evaluate(const std::function<std::optional<mpq_class>(Sym)>& f) const;
    bool has_kind(SymKind k) const { return num_.has_kind(k) || den_.has_kind(k); }

    std::string to_string(const SymNamer& name) const;

private:
    void normalize();
    Polynomial num_, den_;
};

}  // namespace orekit

#endif
