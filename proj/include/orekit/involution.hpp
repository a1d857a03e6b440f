#ifndef OREKIT_INVOLUTION_HPP
#define OREKIT_INVOLUTION_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orekit/term_order.hpp"

namespace orekit {

struct BasisRow {
    Row row;
    Jet lead;
    std::uint32_t mult = 0;  // bit i set: x_{i+1} multiplicative
    MultiIndex anc{};
    std::uint32_t prolonged = 0;  // nonmultiplicative variables already used
    std::shared_ptr<Prolongations> pro;

    int cls(const TermOrder& o) const { return o.cls(lead.mu); }
};

struct CompletionStep {
    int var = -1;            // 0-based variable of the prolongation, -1 for input rows
    Jet from;                // lead of the row that was prolonged or read
    bool nonzero = false;    // normal form did not vanish
    std::optional<Jet> lead; // lead of the inserted row
};

struct CompletionTrace {
    std::vector<CompletionStep> steps;
    long reductions = 0;
    long normal_forms = 0;
    int max_order = 0;
};

// Janet basis of a submodule of D^m generated by rows.
class JanetBasis {
public:
    JanetBasis(Context& ctx, TermOrder order, size_t m);

    // Involutive completion of the given rows.
    static JanetBasis complete(Context& ctx, const std::vector<Row>& rows, size_t m, const TermOrder& order);
    // Interreduction only: no prolongations by nonmultiplicative variables.
    static JanetBasis autoreduce(Context& ctx, const std::vector<Row>& rows, size_t m, const TermOrder& order);

    const std::vector<BasisRow>& rows() const { return rows_; }
    size_t size() const { return rows_.size(); }
    size_t m() const { return m_; }
    const TermOrder& order() const { return order_; }
    const CompletionTrace& trace() const { return trace_; }
    int max_order() const;

    Row normal_form(const Row& r) const;
    bool reduces_to_zero(const Row& r) const { return normal_form(r).is_zero(); }
    bool is_multiplicative(size_t row, int var) const { return rows_[row].mult >> var & 1u; }

    // Janet board: one line per row, columns from lowest to highest priority.
    std::vector<std::string> board() const;
    std::vector<int> classes() const;

    // Components carrying at least one lead.
    std::vector<bool> led_components() const;

private:
    void insert_sorted(BasisRow r);
    void recompute_multiplicative();
    const BasisRow* find_divisor(const Jet& j) const;
    Row monic(const Row& r, const char* where);

    Context* ctx_;
    TermOrder order_;
    size_t m_;
    std::vector<BasisRow> rows_;
    CompletionTrace trace_;
    mutable long reductions_ = 0;
};

// Standard jets of order exactly s, per component.
struct HilbertData {
    bool finite_type = false;
    std::optional<long> dimension;  // number of parametric jets when finite
    std::vector<long> hilbert;      // parametric jets of order s, s = 0..
};

HilbertData count_parametric(const JanetBasis& B, int upto);

// K-linear echelon form of rows (no differentiation), used for membership in
// spans of prolongations.
class KEchelon {
public:
    KEchelon(Context& ctx, const TermOrder& order) : ctx_(&ctx), order_(order) {}
    Row reduce(const Row& r) const;
    bool add(const Row& r);
    bool contains(const Row& r) const { return reduce(r).is_zero(); }
    size_t rank() const { return pivots_.size(); }

private:
    Context* ctx_;
    TermOrder order_;
    std::map<Jet, Row> pivots_;
};

struct SystemAnalysis {
    int input_order = 0;
    bool formally_integrable = false;
    bool involutive = false;
    std::vector<int> regular_priority;  // 0-based, highest first
    std::vector<Row> integrability_conditions;
};

// Formal integrability and involutivity of the system A rows = 0.
SystemAnalysis analyze_system(Context& ctx, const OpMatrix& A, MonoOrder kind = MonoOrder::degrevlex,
                              const std::vector<int>& priority = {});

int default_order_budget(int q);

}  // namespace orekit

#endif
