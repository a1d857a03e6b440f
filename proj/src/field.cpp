#include "orekit/field.hpp"

#include <algorithm>
#include <cstdlib>

namespace orekit {

DiffField::DiffField(std::vector<std::string> vars, std::vector<std::string> params,
                     std::vector<std::string> functions)
    : vars_(std::move(vars)), params_(std::move(params)), functions_(std::move(functions)) {
    if (vars_.size() > static_cast<size_t>(kMaxVars))
        throw DimensionMismatch("at most " + std::to_string(kMaxVars) + " independent variables");
}

std::optional<Sym> DiffField::lookup(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return var(static_cast<int>(i));
    for (size_t i = 0; i < params_.size(); ++i)
        if (params_[i] == name) return param(static_cast<int>(i));
    for (size_t i = 0; i < functions_.size(); ++i)
        if (functions_[i] == name) return function(static_cast<int>(i));
    return std::nullopt;
}

std::string DiffField::deriv_prefix(const MultiIndex& mu) const {
    std::vector<int> idx;
    for (int i = 0; i < n(); ++i)
        for (int k = 0; k < mu[i]; ++k) idx.push_back(i + 1);
    if (idx.empty()) return "";
    std::string s = "d";
    if (n() <= 9) {
        for (int i : idx) s += std::to_string(i);
        return s;
    }
    s += "(";
    for (size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + std::to_string(idx[k]);
    return s + ")";
}

std::string DiffField::name(Sym s) const {
    unsigned i = sym::index(s);
    switch (sym::kind(s)) {
    case SymKind::variable: return i < vars_.size() ? vars_[i] : "x" + std::to_string(i + 1);
    case SymKind::param: return i < params_.size() ? params_[i] : "p" + std::to_string(i + 1);
    default: break;
    }
    std::string base = i < functions_.size() ? functions_[i] : "f" + std::to_string(i + 1);
    std::string d = deriv_prefix(sym::derivs(s));
    return d.empty() ? base : d + "(" + base + ")";
}

Budget Budget::from_env() {
    Budget b;
    if (const char* s = std::getenv("ORE_MAX_STEPS")) b.max_steps = std::atol(s);
    if (const char* s = std::getenv("ORE_MAX_ORDER")) b.max_order = std::atoi(s);
    if (const char* s = std::getenv("ORE_MAX_COEFF_DEGREE")) b.max_coeff_degree = std::atoi(s);
    return b;
}

Context::Context(FieldPtr field, PivotPolicy policy)
    : field_(std::move(field)), policy_(policy), budget_(Budget::from_env()) {}

void Context::assume_nonzero(const RatFunc& e) {
    for (const Polynomial* p : {&e.num(), &e.den()}) {
        if (p->is_constant()) continue;
        Polynomial q = p->primitive();
        if (std::find(nonzero_.begin(), nonzero_.end(), q) == nonzero_.end()) nonzero_.push_back(q);
    }
}

void Context::assume_zero(const RatFunc& e) {
    if (e.num().is_constant()) return;
    Polynomial q = e.num().primitive();
    if (std::find(vanishing_.begin(), vanishing_.end(), q) == vanishing_.end()) vanishing_.push_back(q);
}

std::optional<Polynomial> Context::essential_factor(const Polynomial& p0) const {
    if (p0.is_zero()) throw PivotNotInvertible("division by zero");
    bool funcs = p0.has_kind(SymKind::function);
    bool params = p0.has_kind(SymKind::param);
    if (!funcs && !params) return std::nullopt;
    Polynomial p = p0;
    if (!funcs) {
        // only x and parameters: the pivot vanishes identically exactly when
        // all its coefficients as a polynomial in x vanish
        Polynomial g;
        std::vector<Polynomial> parts{p};
        for (int i = 0; i < field_->n(); ++i) {
            std::vector<Polynomial> next;
            for (auto& q : parts)
                for (auto& c : q.coefficients_in(field_->var(i)))
                    if (!c.is_zero()) next.push_back(c);
            parts = std::move(next);
        }
        for (auto& c : parts) {
            g = gcd(g, c);
            if (g.is_one()) break;
        }
        p = g;
    } else {
        // strip the content that depends on x alone
        std::set<Sym> others;
        for (Sym s : p.symbols())
            if (sym::kind(s) != SymKind::variable) others.insert(s);
        std::vector<Polynomial> parts{p};
        for (Sym s : others) {
            std::vector<Polynomial> next;
            for (auto& q : parts)
                for (auto& c : q.coefficients_in(s))
                    if (!c.is_zero()) next.push_back(c);
            parts = std::move(next);
        }
        Polynomial g;
        for (auto& c : parts) {
            g = gcd(g, c);
            if (g.is_one()) break;
        }
        if (!g.is_one()) p = divide_exact(p, g).value();
    }
    for (auto& a : nonzero_) {
        while (!p.is_constant()) {
            auto q = divide_exact(p, a);
            if (!q) break;
            p = *q;
        }
    }
    if (p.is_constant()) return std::nullopt;
    return p.primitive();
}

void Context::check_pivot(const RatFunc& c, const char* where) {
    if (c.is_zero()) throw PivotNotInvertible(std::string("zero ") + where);
    auto f = essential_factor(c.num());
    if (!f) return;
    for (auto& v : vanishing_) {
        if (divide_exact(*f, v))
            throw PivotNotInvertible(where + std::string(" ") + field_->str(*f) + " vanishes by assumption");
    }
    if (policy_ == PivotPolicy::strict && !f->has_kind(SymKind::function))
        throw CaseSplitRequired(field_->str(*f));
    for (auto& p : provisos_)
        if (p.factor == *f) return;
    provisos_.push_back({*f, where});
}

}  // namespace orekit
