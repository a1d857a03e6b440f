#ifndef OREKIT_DSL_HPP
#define OREKIT_DSL_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "orekit/term_order.hpp"

namespace orekit::dsl {

struct Span {
    int line = 1, col = 1;
    size_t offset = 0, length = 0;
};

class DslError : public Error {
public:
    DslError(const std::string& what, Span s) : Error(what), span_(s) {}
    const Span& span() const { return span_; }
    const char* kind() const noexcept override { return "DslError"; }

private:
    Span span_;
};

class ParseError : public DslError {
public:
    ParseError(const std::string& what, Span s, std::set<std::string> expected)
        : DslError(what, s), expected_(std::move(expected)) {}
    const std::set<std::string>& expected() const { return expected_; }
    const char* kind() const noexcept override { return "ParseError"; }

private:
    std::set<std::string> expected_;
};

#define OREKIT_DSL_ERROR(Name)                                                   \
    class Name : public DslError {                                               \
    public:                                                                      \
        using DslError::DslError;                                                \
        const char* kind() const noexcept override { return #Name; }             \
    };
OREKIT_DSL_ERROR(UnknownIdentifier)
OREKIT_DSL_ERROR(IndexOutOfRange)
OREKIT_DSL_ERROR(LinearityError)
OREKIT_DSL_ERROR(AffineTermError)
#undef OREKIT_DSL_ERROR

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum Kind { Num, Ident, Deriv, Neg, Add, Sub, Mul, Div, Pow } kind;
    mpq_class num;
    std::string name;
    std::vector<int> indices;  // Deriv: 1-based variable indices
    int exponent = 1;
    ExprPtr a, b;
    Span span;
};

struct Condition {
    ExprPtr lhs, rhs;
    bool nonzero = false;  // lhs != rhs
    Span span;
};

struct Equation {
    std::string label;  // from "label:" prefix
    ExprPtr lhs, rhs;
    Span span;
};

struct Document {
    std::string name;
    std::vector<std::string> vars, unknowns, params, functions;
    bool vars_declared = false, unknowns_declared = false;
    std::vector<std::pair<std::string, ExprPtr>> lets;
    std::vector<Condition> assumptions;
    std::vector<std::pair<std::string, std::vector<Condition>>> cases;
    std::vector<Equation> equations;
    std::string order = "degrevlex";
    std::vector<int> priority;  // 1-based, lowest first
    std::vector<std::string> case_names() const;
};

// Elaborated system: an operator matrix over a concrete field.
struct System {
    std::string name, case_name;
    FieldPtr field;
    OpMatrix op;
    std::vector<RatFunc> nonzero, vanishing;
    MonoOrder order = MonoOrder::degrevlex;
    std::vector<int> priority;  // 0-based, highest first; empty for default

    void apply_assumptions(Context& ctx) const;
    TermOrder term_order() const { return TermOrder(op.n, order, priority); }
};

Document parse(const std::string& text);
// case_name empty: no case applied.
System elaborate(const Document& doc, const std::string& case_name = "");
System load(const std::string& text, const std::string& case_name = "");
System load_file(const std::string& path, const std::string& case_name = "");

// Source text whose elaboration gives back the same operator matrix.
std::string render(const System& s);

// Append conditions such as "c != 0" or "c = 0" to the global assumptions.
void add_assumptions(Document& doc, const std::vector<std::string>& conditions);

// Parse a standalone coefficient expression against a field.
RatFunc parse_coefficient(const std::string& text, const DiffField& field);

}  // namespace orekit::dsl

#endif
