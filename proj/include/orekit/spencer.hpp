#ifndef OREKIT_SPENCER_HPP
#define OREKIT_SPENCER_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "orekit/ore.hpp"

namespace orekit::spencer {

// Dense matrix over Q.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    mpq_class& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
    const mpq_class& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

    QMatrix operator*(const QMatrix& o) const;
    bool is_zero() const;
    size_t rank() const;
    // Columns span the right kernel.
    QMatrix nullspace() const;
    // Reduced row echelon form with zero rows dropped.
    QMatrix row_basis() const;
    void append_row(const std::vector<mpq_class>& row);

private:
    size_t r_ = 0, c_ = 0;
    std::vector<mpq_class> a_;
};

long binom(int n, int k);

// Multi-indices of length n and degree q, in a fixed enumeration.
const std::vector<MultiIndex>& monomials(int n, int q);
int monomial_index(int n, const MultiIndex& mu);
// Increasing s-subsets of {0..n-1} as bitmasks.
const std::vector<unsigned>& subsets(int n, int s);

// Linear subspace g_q of S_q T* (x) E given by equations on the jet
// coordinates v^k_mu, coordinate index monomial_index(mu) * m + k.
struct SymbolSpace {
    int n = 0, m = 0, q = 0;
    QMatrix equations;  // rows over the m * C(n+q-1, q) coordinates

    size_t ambient() const { return static_cast<size_t>(m) * static_cast<size_t>(binom(n + q - 1, q)); }
    long dim() const { return static_cast<long>(ambient() - equations.rank()); }
    std::string str() const;
};

SymbolSpace full_symbol(int n, int m, int q);
SymbolSpace prolong_symbol(const SymbolSpace& g, int r);

// Symbol of an operator matrix at a point; rows of lower order enter
// through their prolongations. `at` must give a value for every symbol
// appearing in the leading coefficients.
SymbolSpace symbol_of(const OpMatrix& A, const std::function<std::optional<mpq_class>(Sym)>& at);

// g_0 ... g_top, with g_j = S_j T* (x) E below the order of the symbol.
class SymbolTower {
public:
    SymbolTower(const SymbolSpace& g, int top);

    int n() const { return n_; }
    int m() const { return m_; }
    int q() const { return q_; }
    int top() const { return static_cast<int>(basis_.size()) - 1; }
    long dim(int j) const;
    // Rank of delta: wedge^s T* (x) g_j -> wedge^{s+1} T* (x) g_{j-1}.
    long delta_rank(int s, int j) const;
    long cocycles(int s, int j) const;  // dim Z^s(g_j)
    long coboundaries(int s, int j) const;  // dim B^s(g_j)
    long cohomology(int s, int j) const;  // dim H^s(g_j)
    // Matrix of delta on wedge^s (x) g_j in ambient coordinates.
    QMatrix delta_matrix(int s, int j) const;
    const QMatrix& basis(int j) const { return basis_.at(static_cast<size_t>(j)); }

private:
    int n_, m_, q_;
    std::vector<QMatrix> basis_;  // columns span g_j inside S_j (x) E
    mutable std::vector<std::vector<long>> rank_cache_;
};

long delta_cohomology_dim(const SymbolSpace& g, int s, int r);
// True iff H^s(g_{q+r}) = 0 for 1 <= s <= k and every r >= 0; finite type
// symbols are checked up to the first vanishing prolongation, others up to
// q + n + 1.
bool acyclicity_check(const SymbolSpace& g, int k);

SymbolSpace killing_symbol(int n);
SymbolSpace conformal_symbol(int n);
SymbolSpace contact_symbol(int n);

enum class Family { killing, conformal, contact };
Family parse_family(const std::string& s);
std::string to_string(Family f);

struct SequenceTerm {
    long dim = 0;
    int degree = 0;  // symbol degree where the generators live
    bool mixed = false;  // generators in several degrees
};

struct BianchiDiagram {
    long z3_g1 = 0, h3_g1 = 0;
    long z3_hat_g1 = 0, h3_hat_g1 = 0;
    long wedge2_hat_g2 = 0;
    long delta_t_s2 = 0;  // dim delta(T* (x) S_2 T*)
    long wedge2_t = 0, wedge3 = 0;
    bool exact = false;  // rows and columns of the diagram
};

struct LanczosCheck {
    int n = 0;
    long source_dim = 0, target_dim = 0;  // wedge^3 (x) g_1 and wedge^2 (x) T*
    long delta_equations = 0, cyclic_equations = 0;
    bool identical = false;
};

struct ClassicalTable {
    Family family{};
    int n = 0;
    std::vector<long> dims;   // T, F_0, F_1, ...
    std::vector<int> orders;  // of the operators between consecutive bundles
    std::vector<std::vector<long>> h;  // h[s][j] = dim H^s(g_j)
    std::vector<long> g_dims;
    long h2_g1 = 0, h3_g1 = 0;
    std::optional<BianchiDiagram> diagram;
    std::vector<std::pair<std::string, bool>> flags;
};

ClassicalTable classical_dims(Family f, int n);

// Janet-type sequence dims from the Spencer cohomology of a symbol tower.
std::vector<SequenceTerm> sequence_from_cohomology(const SymbolTower& t);

BianchiDiagram bianchi_diagram(int n);
// n = 4 Hodge identification of delta-closed B in wedge^3 T* (x) g_1 (Killing)
// with the tensors L_{ij,k} = -L_{ji,k} satisfying the cyclic identity.
LanczosCheck lanczos_identification(int n);

// Alternating sum of 0 -> S_4 T* (x) T -> S_3 T* (x) F_0 -> T* (x) F_1 -> F_2 -> 0
// for the Killing symbol.
long killing_symbol_sequence_defect(int n);

}  // namespace orekit::spencer

#endif
