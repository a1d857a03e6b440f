#ifndef OREKIT_ORE_HPP
#define OREKIT_ORE_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "orekit/field.hpp"

namespace orekit {

int order(const MultiIndex& mu);
MultiIndex unit_index(int i);
MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
bool divides(const MultiIndex& a, const MultiIndex& b);  // a <= b componentwise
MultiIndex operator-(const MultiIndex& a, const MultiIndex& b);

// d^mu applied to unknown number comp.
struct Jet {
    std::uint16_t comp = 0;
    MultiIndex mu{};
    int order() const { return orekit::order(mu); }
    auto operator<=>(const Jet&) const = default;
};

// Element of the free left module D^m, written sum a * d^mu e_k with the
// coefficient on the left. Terms are kept in canonical jet order.
class Row {
public:
    using Term = std::pair<Jet, RatFunc>;

    Row() = default;
    static Row unit(std::uint16_t comp, const MultiIndex& mu = {}, RatFunc c = 1);
    static Row from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    int order() const;
    RatFunc coeff(const Jet& j) const;
    bool uses_comp(std::uint16_t k) const;

    Row operator-() const;
    Row operator+(const Row& o) const;
    Row operator-(const Row& o) const;
    Row& operator+=(const Row& o) { return *this = *this + o; }
    Row& operator-=(const Row& o) { return *this = *this - o; }
    Row scaled(const RatFunc& c) const;
    // this - c * o
    Row minus_scaled(const RatFunc& c, const Row& o) const;

    // Components shifted by offset; components outside [lo, hi) dropped.
    Row shifted(int offset) const;
    Row restricted(std::uint16_t lo, std::uint16_t hi) const;

    bool operator==(const Row& o) const { return t_ == o.t_; }
    bool operator!=(const Row& o) const { return !(t_ == o.t_); }

    Row partial_evaluate(const std::function<std::optional<mpq_class>(Sym)>& f) const;
    Row substitute(Sym s, const RatFunc& v) const;

    std::string to_string(const DiffField& f, const std::vector<std::string>& comps) const;

private:
    void canonicalize();
    std::vector<Term> t_;
};

// A scalar operator is a row with the single component 0.
using ScalarOp = Row;

Row d_times(int i, const Row& r);
Row prolong(const MultiIndex& mu, const Row& r);
Row coef_times(const RatFunc& a, const Row& r);
// P * r for a scalar operator P.
Row apply(const ScalarOp& P, const Row& r);

class Prolongations {
public:
    explicit Prolongations(Row base) { cache_.emplace(MultiIndex{}, std::move(base)); }
    const Row& get(const MultiIndex& mu);

private:
    std::map<MultiIndex, Row> cache_;
};

struct OpMatrix {
    int n = 0;
    size_t cols = 0;
    std::vector<Row> rows;
    std::vector<std::string> row_labels, col_labels;

    OpMatrix() = default;
    OpMatrix(int n_, size_t cols_, std::vector<Row> rows_ = {});

    size_t nrows() const { return rows.size(); }
    ScalarOp entry(size_t r, size_t k) const;
    int order() const;
    bool is_zero() const;
    std::vector<std::string> col_names() const;
    std::vector<std::string> row_names() const;
    std::string row_string(const DiffField& f, size_t r) const;
    bool operator==(const OpMatrix& o) const { return cols == o.cols && rows == o.rows; }

    static OpMatrix identity(int n, size_t m);
};

OpMatrix adjoint(const OpMatrix& A);
ScalarOp adjoint(const ScalarOp& P);
// Product B * A; B.cols must equal A.nrows().
OpMatrix compose(const OpMatrix& B, const OpMatrix& A);
ScalarOp op_mul(const ScalarOp& P, const ScalarOp& Q);
// Apply A to a section of m coefficient functions.
std::vector<RatFunc> apply_to_section(const OpMatrix& A, const std::vector<RatFunc>& s);

std::string default_label(const std::string& stem, size_t i);

}  // namespace orekit

#endif
