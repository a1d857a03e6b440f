#include "orekit/ratfunc.hpp"

#include <stdexcept>

namespace orekit {

RatFunc::RatFunc(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    if (den_.is_constant()) {
        if (!den_.is_one()) {
            num_ = num_.scaled(1 / den_.constant_value());
            den_ = Polynomial(1);
        }
        return;
    }
    Polynomial g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = divide_exact(num_, g).value();
        den_ = divide_exact(den_, g).value();
    }
    mpq_class lc = den_.leading_coeff();
    if (lc != 1) {
        mpq_class inv = 1 / lc;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (o.is_zero()) return *this;
    if (is_zero()) return o;
    RatFunc r;
    if (den_ == o.den_) {
        r.num_ = num_ + o.num_;
        r.den_ = den_;
        if (!den_.is_one()) r.normalize();
        else if (r.num_.is_zero()) r.den_ = Polynomial(1);
        return r;
    }
    r.num_ = num_ * o.den_ + o.num_ * den_;
    r.den_ = den_ * o.den_;
    r.normalize();
    return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return {};
    RatFunc r;
    if (den_.is_one() && o.den_.is_one()) {
        r.num_ = num_ * o.num_;
        return r;
    }
    if (o.is_constant()) {
        r.num_ = num_.scaled(o.num_.constant_value());
        r.den_ = den_;
        return r;
    }
    if (is_constant()) return o * *this;
    r.num_ = num_ * o.num_;
    r.den_ = den_ * o.den_;
    r.normalize();
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc r(1);
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
}

RatFunc RatFunc::derive(int i) const {
    if (den_.is_one()) return RatFunc(num_.derive(i));
    Polynomial dn = num_.derive(i), dd = den_.derive(i);
    if (dd.is_zero()) return RatFunc(dn, den_);
    return RatFunc(dn * den_ - num_ * dd, den_ * den_);
}

RatFunc RatFunc::substitute(Sym s, const RatFunc& value) const {
    // p(s) with s = a/b: homogenize with b^deg
    auto subst = [&](const Polynomial& p, std::uint32_t d) {
        Polynomial out;
        auto cs = p.coefficients_in(s);
        for (std::uint32_t k = 0; k < cs.size(); ++k)
            if (!cs[k].is_zero()) out += cs[k] * value.num().pow(k) * value.den().pow(d - k);
        return out;
    };
    std::uint32_t dn = num_.degree(s), dd = den_.degree(s);
    if (dn == 0 && dd == 0) return *this;
    std::uint32_t d = std::max(dn, dd);
    Polynomial n = subst(num_, d), m = subst(den_, d);
    if (m.is_zero()) throw std::domain_error("substitution makes a denominator vanish");
    return RatFunc(n, m);
}

std::optional<mpq_class> RatFunc::evaluate(const std::function<std::optional<mpq_class>(Sym)>& f) const {
    Polynomial n = num_.evaluate(f), d = den_.evaluate(f);
    if (!n.is_constant() || !d.is_constant()) throw std::invalid_argument("evaluation left free symbols");
    if (d.is_zero()) return std::nullopt;
    return n.constant_value() / d.constant_value();
}

RatFunc RatFunc::partial_evaluate(const std::function<std::optional<mpq_class>(Sym)>& f) const {
    Polynomial d = den_.evaluate(f);
    if (d.is_zero()) throw std::domain_error("evaluation makes a denominator vanish");
    return RatFunc(num_.evaluate(f), d);
}

std::string RatFunc::to_string(const SymNamer& name) const {
    std::string n = num_.to_string(name);
    if (den_.is_one()) return n;
    if (num_.terms().size() > 1) n = "(" + n + ")";
    std::string d = den_.to_string(name);
    if (den_.terms().size() > 1 || !den_.leading().first.is_one()) {
        if (den_.terms().size() > 1 || den_.leading().second != 1 ||
            den_.leading().first.factors().size() > 1 || den_.leading().first.factors()[0].second > 1)
            d = "(" + d + ")";
    }
    return n + "/" + d;
}

}  // namespace orekit
