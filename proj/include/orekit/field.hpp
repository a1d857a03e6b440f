#ifndef OREKIT_FIELD_HPP
#define OREKIT_FIELD_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orekit/errors.hpp"
#include "orekit/ratfunc.hpp"

namespace orekit {

// Names of the independent variables, constant parameters and coefficient
// functions of the base differential field.
class DiffField {
public:
    DiffField(std::vector<std::string> vars, std::vector<std::string> params = {},
              std::vector<std::string> functions = {});

    int n() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<std::string>& params() const { return params_; }
    const std::vector<std::string>& functions() const { return functions_; }

    Sym var(int i) const { return sym::make(SymKind::variable, i); }
    Sym param(int i) const { return sym::make(SymKind::param, i); }
    Sym function(int i) const { return sym::make(SymKind::function, i); }
    std::optional<Sym> lookup(const std::string& name) const;

    std::string name(Sym s) const;
    SymNamer namer() const {
        return [this](Sym s) { return name(s); };
    }
    std::string str(const RatFunc& f) const { return f.to_string(namer()); }
    std::string str(const Polynomial& p) const { return p.to_string(namer()); }

    // "d12" style for n <= 9, "d(1,12)" otherwise; empty for the zero index.
    std::string deriv_prefix(const MultiIndex& mu) const;

private:
    std::vector<std::string> vars_, params_, functions_;
};

using FieldPtr = std::shared_ptr<const DiffField>;

enum class PivotPolicy { record, strict };

struct Budget {
    int max_order = -1;  // negative: 2q + 6 from the input order q
    long max_steps = 10000;
    // total degree of numerator plus denominator of any coefficient met
    // during a reduction; guards against expression swell
    int max_coeff_degree = 24;
    static Budget from_env();
};

struct Proviso {
    Polynomial factor;  // assumed nonzero
    std::string where;
};

// Assumptions, recorded provisos and budgets shared by the algorithms.
class Context {
public:
    explicit Context(FieldPtr field, PivotPolicy policy = PivotPolicy::record);

    const DiffField& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    PivotPolicy policy() const { return policy_; }
    void set_policy(PivotPolicy p) { policy_ = p; }
    Budget& budget() { return budget_; }
    const Budget& budget() const { return budget_; }

    void assume_nonzero(const RatFunc& e);
    void assume_zero(const RatFunc& e);
    const std::vector<Polynomial>& nonzero() const { return nonzero_; }
    const std::vector<Polynomial>& vanishing() const { return vanishing_; }

    // Called before dividing by c. Records or rejects the essential factor.
    void check_pivot(const RatFunc& c, const char* where = "pivot");
    // Factor whose vanishing would make c zero, or nullopt if c is a unit.
    std::optional<Polynomial> essential_factor(const Polynomial& p) const;

    const std::vector<Proviso>& provisos() const { return provisos_; }
    void clear_provisos() { provisos_.clear(); }

private:
    FieldPtr field_;
    PivotPolicy policy_;
    Budget budget_;
    std::vector<Polynomial> nonzero_, vanishing_;
    std::vector<Proviso> provisos_;
};

}  // namespace orekit

#endif
