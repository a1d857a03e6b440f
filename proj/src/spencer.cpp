#include "orekit/spencer.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace orekit::spencer {

// ---- QMatrix ----

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (c_ != o.r_) throw DimensionMismatch("matrix product");
    QMatrix p(r_, o.c_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t k = 0; k < c_; ++k) {
            const mpq_class& a = (*this)(i, k);
            if (sgn(a) == 0) continue;
            for (size_t j = 0; j < o.c_; ++j)
                if (sgn(o(k, j)) != 0) p(i, j) += a * o(k, j);
        }
    return p;
}

bool QMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const mpq_class& x) { return sgn(x) == 0; });
}

// In-place reduced row echelon form; returns pivot columns.
static std::vector<size_t> rref(QMatrix& M) {
    std::vector<size_t> piv;
    size_t row = 0;
    for (size_t col = 0; col < M.cols() && row < M.rows(); ++col) {
        size_t p = row;
        while (p < M.rows() && sgn(M(p, col)) == 0) ++p;
        if (p == M.rows()) continue;
        if (p != row)
            for (size_t j = 0; j < M.cols(); ++j) std::swap(M(p, j), M(row, j));
        mpq_class inv = 1 / M(row, col);
        for (size_t j = col; j < M.cols(); ++j) M(row, j) *= inv;
        for (size_t i = 0; i < M.rows(); ++i) {
            if (i == row || sgn(M(i, col)) == 0) continue;
            mpq_class f = M(i, col);
            for (size_t j = col; j < M.cols(); ++j)
                if (sgn(M(row, j)) != 0) M(i, j) -= f * M(row, j);
        }
        piv.push_back(col);
        ++row;
    }
    return piv;
}

size_t QMatrix::rank() const {
    if (r_ == 0 || c_ == 0) return 0;
    QMatrix M = *this;
    return rref(M).size();
}

QMatrix QMatrix::row_basis() const {
    QMatrix M = *this;
    auto piv = rref(M);
    QMatrix out(piv.size(), c_);
    for (size_t i = 0; i < piv.size(); ++i)
        for (size_t j = 0; j < c_; ++j) out(i, j) = M(i, j);
    return out;
}

QMatrix QMatrix::nullspace() const {
    QMatrix M = *this;
    auto piv = rref(M);
    std::vector<bool> is_piv(c_, false);
    for (size_t p : piv) is_piv[p] = true;
    QMatrix N(c_, c_ - piv.size());
    size_t k = 0;
    for (size_t f = 0; f < c_; ++f) {
        if (is_piv[f]) continue;
        N(f, k) = 1;
        for (size_t i = 0; i < piv.size(); ++i) N(piv[i], k) = -M(i, f);
        ++k;
    }
    return N;
}

void QMatrix::append_row(const std::vector<mpq_class>& row) {
    if (r_ == 0 && c_ == 0) c_ = row.size();
    if (row.size() != c_) throw DimensionMismatch("row length");
    a_.insert(a_.end(), row.begin(), row.end());
    ++r_;
}

// ---- combinatorics ----

long binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace {

std::mutex cache_mutex;

struct MonomialTable {
    std::vector<MultiIndex> list;
    std::map<MultiIndex, int> index;
};

void enumerate(int n, int q, int var, MultiIndex& cur, std::vector<MultiIndex>& out) {
    if (var == n - 1) {
        cur[static_cast<size_t>(var)] = static_cast<std::uint8_t>(q);
        out.push_back(cur);
        cur[static_cast<size_t>(var)] = 0;
        return;
    }
    for (int e = q; e >= 0; --e) {
        cur[static_cast<size_t>(var)] = static_cast<std::uint8_t>(e);
        enumerate(n, q - e, var + 1, cur, out);
    }
    cur[static_cast<size_t>(var)] = 0;
}

const MonomialTable& table(int n, int q) {
    static std::map<std::pair<int, int>, MonomialTable> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({n, q});
    if (it != cache.end()) return it->second;
    if (n < 1 || n > kMaxVars || q < 0 || q > 15) throw ResourceLimit("symbol degree or dimension out of range");
    MonomialTable t;
    MultiIndex cur{};
    enumerate(n, q, 0, cur, t.list);
    for (size_t i = 0; i < t.list.size(); ++i) t.index[t.list[i]] = static_cast<int>(i);
    return cache.emplace(std::make_pair(n, q), std::move(t)).first->second;
}

int popcount(unsigned x) { return __builtin_popcount(x); }

}  // namespace

const std::vector<MultiIndex>& monomials(int n, int q) { return table(n, q).list; }

int monomial_index(int n, const MultiIndex& mu) {
    const auto& t = table(n, order(mu));
    auto it = t.index.find(mu);
    if (it == t.index.end()) throw DimensionMismatch("multi-index outside dimension");
    return it->second;
}

const std::vector<unsigned>& subsets(int n, int s) {
    static std::map<std::pair<int, int>, std::vector<unsigned>> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find({n, s});
    if (it != cache.end()) return it->second;
    std::vector<unsigned> v;
    for (unsigned b = 0; b < (1u << n); ++b)
        if (popcount(b) == s) v.push_back(b);
    return cache.emplace(std::make_pair(n, s), std::move(v)).first->second;
}

static size_t subset_index(int n, unsigned mask) {
    const auto& v = subsets(n, popcount(mask));
    return static_cast<size_t>(std::lower_bound(v.begin(), v.end(), mask) - v.begin());
}

// ---- symbols ----

std::string SymbolSpace::str() const {
    std::ostringstream o;
    o << "g_" << q << " in S_" << q << "T*(x)E, n=" << n << " m=" << m << " dim=" << dim();
    return o.str();
}

SymbolSpace full_symbol(int n, int m, int q) {
    SymbolSpace g;
    g.n = n;
    g.m = m;
    g.q = q;
    g.equations = QMatrix(0, g.ambient());
    return g;
}

static SymbolSpace prolong_once(const SymbolSpace& g) {
    SymbolSpace h;
    h.n = g.n;
    h.m = g.m;
    h.q = g.q + 1;
    const auto& src = monomials(g.n, g.q);
    QMatrix E(g.equations.rows() * static_cast<size_t>(g.n), h.ambient());
    size_t row = 0;
    for (size_t r = 0; r < g.equations.rows(); ++r)
        for (int i = 0; i < g.n; ++i, ++row)
            for (size_t a = 0; a < src.size(); ++a) {
                int t = monomial_index(g.n, src[a] + unit_index(i));
                for (int k = 0; k < g.m; ++k) {
                    const mpq_class& c = g.equations(r, a * static_cast<size_t>(g.m) + static_cast<size_t>(k));
                    if (sgn(c) != 0) E(row, static_cast<size_t>(t * g.m + k)) = c;
                }
            }
    h.equations = E.row_basis();
    return h;
}

SymbolSpace prolong_symbol(const SymbolSpace& g, int r) {
    SymbolSpace h = g;
    h.equations = g.equations.row_basis();
    for (int i = 0; i < r; ++i) h = prolong_once(h);
    return h;
}

SymbolSpace symbol_of(const OpMatrix& A, const std::function<std::optional<mpq_class>(Sym)>& at) {
    const int q = A.order();
    SymbolSpace g = full_symbol(A.n, static_cast<int>(A.cols), q);
    for (auto& row : A.rows) {
        if (row.is_zero()) continue;
        SymbolSpace s = full_symbol(A.n, static_cast<int>(A.cols), row.order());
        std::vector<mpq_class> e(s.ambient());
        for (auto& [jet, c] : row.terms()) {
            if (jet.order() != row.order()) continue;
            auto v = c.evaluate(at);
            if (!v) throw PivotNotInvertible("symbol coefficient not defined at the chosen point");
            e[static_cast<size_t>(monomial_index(A.n, jet.mu)) * A.cols + jet.comp] = *v;
        }
        s.equations.append_row(e);
        s = prolong_symbol(s, q - row.order());
        for (size_t r = 0; r < s.equations.rows(); ++r) {
            std::vector<mpq_class> v(g.ambient());
            for (size_t j = 0; j < v.size(); ++j) v[j] = s.equations(r, j);
            g.equations.append_row(v);
        }
    }
    g.equations = g.equations.row_basis();
    return g;
}

SymbolTower::SymbolTower(const SymbolSpace& g, int top) : n_(g.n), m_(g.m), q_(g.q) {
    SymbolSpace cur = g;
    cur.equations = g.equations.row_basis();
    for (int j = 0; j <= top; ++j) {
        size_t N = static_cast<size_t>(m_) * static_cast<size_t>(binom(n_ + j - 1, j));
        if (j < q_) {
            QMatrix I(N, N);
            for (size_t i = 0; i < N; ++i) I(i, i) = 1;
            basis_.push_back(std::move(I));
            continue;
        }
        if (j > q_) {
            if (basis_.back().cols() == 0) {
                basis_.emplace_back(N, 0);
                continue;
            }
            cur = prolong_once(cur);
        }
        basis_.push_back(cur.equations.rows() ? cur.equations.nullspace() : full_symbol(n_, m_, j).equations.nullspace());
    }
    rank_cache_.assign(static_cast<size_t>(n_) + 1, std::vector<long>(basis_.size(), -1));
}

long SymbolTower::dim(int j) const {
    if (j < 0) return 0;
    if (j > top()) {
        if (basis_.back().cols() == 0) return 0;
        throw ResourceLimit("symbol tower too short");
    }
    return static_cast<long>(basis_[static_cast<size_t>(j)].cols());
}

QMatrix SymbolTower::delta_matrix(int s, int j) const {
    const size_t Nt = j >= 1 ? static_cast<size_t>(m_) * static_cast<size_t>(binom(n_ + j - 2, j - 1)) : 0;
    const auto& src_sets = subsets(n_, s);
    const size_t tgt_sets = static_cast<size_t>(binom(n_, s + 1));
    const QMatrix& G = basis(j);
    QMatrix D(tgt_sets * Nt, src_sets.size() * G.cols());
    if (j == 0 || s >= n_ || G.cols() == 0) return D;
    const auto& mons = monomials(n_, j);
    for (size_t I = 0; I < src_sets.size(); ++I) {
        unsigned mask = src_sets[I];
        for (size_t b = 0; b < G.cols(); ++b) {
            size_t col = I * G.cols() + b;
            for (size_t a = 0; a < mons.size(); ++a)
                for (int k = 0; k < m_; ++k) {
                    const mpq_class& c = G(a * static_cast<size_t>(m_) + static_cast<size_t>(k), b);
                    if (sgn(c) == 0) continue;
                    for (int i = 0; i < n_; ++i) {
                        if ((mask >> i) & 1u || mons[a][static_cast<size_t>(i)] == 0) continue;
                        unsigned J = mask | (1u << i);
                        int pos = popcount(J & ((1u << i) - 1));
                        size_t t = static_cast<size_t>(monomial_index(n_, mons[a] - unit_index(i)));
                        size_t row = subset_index(n_, J) * Nt + t * static_cast<size_t>(m_) + static_cast<size_t>(k);
                        if (pos % 2) D(row, col) -= c;
                        else D(row, col) += c;
                    }
                }
        }
    }
    return D;
}

long SymbolTower::delta_rank(int s, int j) const {
    if (s < 0 || s >= n_ || j <= 0) return 0;
    if (j > top()) {
        if (dim(j) == 0) return 0;
    }
    long& r = rank_cache_[static_cast<size_t>(s)][static_cast<size_t>(j)];
    if (r < 0) r = static_cast<long>(delta_matrix(s, j).rank());
    return r;
}

long SymbolTower::cocycles(int s, int j) const { return binom(n_, s) * dim(j) - delta_rank(s, j); }

long SymbolTower::coboundaries(int s, int j) const {
    if (s == 0) return 0;
    if (j + 1 > top()) {
        if (dim(top()) == 0) return 0;
        throw ResourceLimit("symbol tower too short");
    }
    return delta_rank(s - 1, j + 1);
}

long SymbolTower::cohomology(int s, int j) const { return cocycles(s, j) - coboundaries(s, j); }

long delta_cohomology_dim(const SymbolSpace& g, int s, int r) {
    SymbolTower t(g, g.q + r + 1);
    return t.cohomology(s, g.q + r);
}

bool acyclicity_check(const SymbolSpace& g, int k) {
    SymbolTower t(g, g.q + g.n + 2);
    for (int j = g.q; j < t.top(); ++j) {
        if (t.dim(j) == 0) break;
        for (int s = 1; s <= std::min(k, g.n); ++s)
            if (t.cohomology(s, j) != 0) return false;
    }
    return true;
}

static size_t coord(int n, int m, int deriv, int comp) {
    return static_cast<size_t>(monomial_index(n, unit_index(deriv)) * m + comp);
}

SymbolSpace killing_symbol(int n) {
    if (n < 2 || n > kMaxVars) throw UnsupportedDimension("Killing symbol needs 2 <= n <= 12");
    SymbolSpace g = full_symbol(n, n, 1);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            std::vector<mpq_class> e(g.ambient());
            e[coord(n, n, i, j)] += 1;  // v^j_i
            e[coord(n, n, j, i)] += 1;
            g.equations.append_row(e);
        }
    return g;
}

SymbolSpace conformal_symbol(int n) {
    if (n < 3 || n > kMaxVars) throw UnsupportedDimension("conformal symbol needs 3 <= n <= 12");
    SymbolSpace g = full_symbol(n, n, 1);
    const mpq_class tr(2, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            std::vector<mpq_class> e(g.ambient());
            e[coord(n, n, i, j)] += 1;
            e[coord(n, n, j, i)] += 1;
            if (i == j)
                for (int r = 0; r < n; ++r) e[coord(n, n, r, r)] -= tr;
            g.equations.append_row(e);
        }
    return g;
}

SymbolSpace contact_symbol(int n) {
    // Medolaghi form for a 1-form density omega, taken at omega = dx^1.
    if (n != 3) throw UnsupportedDimension("contact symbol is available for n = 3 only");
    SymbolSpace g = full_symbol(n, n, 1);
    const std::vector<mpq_class> omega{1, 0, 0};
    for (int i = 0; i < n; ++i) {
        std::vector<mpq_class> e(g.ambient());
        for (int r = 0; r < n; ++r) e[coord(n, n, i, r)] += omega[static_cast<size_t>(r)];
        for (int r = 0; r < n; ++r) e[coord(n, n, r, r)] -= mpq_class(1, 2) * omega[static_cast<size_t>(i)];
        g.equations.append_row(e);
    }
    return g;
}

Family parse_family(const std::string& s) {
    if (s == "killing") return Family::killing;
    if (s == "conformal") return Family::conformal;
    if (s == "contact") return Family::contact;
    throw Error("unknown symbol family '" + s + "' (killing, conformal, contact)");
}

std::string to_string(Family f) {
    switch (f) {
        case Family::killing: return "killing";
        case Family::conformal: return "conformal";
        case Family::contact: return "contact";
    }
    return "?";
}

std::vector<SequenceTerm> sequence_from_cohomology(const SymbolTower& t) {
    std::vector<SequenceTerm> seq{{t.m(), 0, false}};
    for (int r = 0; r + 1 <= t.n(); ++r) {
        SequenceTerm f;
        bool found = false;
        for (int j = 0; j < t.top(); ++j) {
            long h = t.cohomology(r + 1, j);
            if (h == 0) continue;
            if (found) f.mixed = true;
            found = true;
            f.dim += h;
            f.degree = r + 1 + j;
        }
        seq.push_back(f);
    }
    while (seq.size() > 1 && seq.back().dim == 0) seq.pop_back();
    return seq;
}

BianchiDiagram bianchi_diagram(int n) {
    if (n < 4) throw UnsupportedDimension("diagram needs n >= 4");
    BianchiDiagram d;
    SymbolTower K(killing_symbol(n), 3), C(conformal_symbol(n), 4), S(full_symbol(n, 1, 0), 3);
    d.z3_g1 = K.cocycles(3, 1);
    d.h3_g1 = K.cohomology(3, 1);
    d.z3_hat_g1 = C.cocycles(3, 1);
    d.h3_hat_g1 = C.cohomology(3, 1);
    d.wedge2_hat_g2 = binom(n, 2) * C.dim(2);
    d.delta_t_s2 = S.delta_rank(1, 2);
    d.wedge2_t = binom(n, 2) * n;
    d.wedge3 = binom(n, 3);
    d.exact = d.z3_g1 == d.h3_g1 && d.z3_g1 + d.wedge3 == d.z3_hat_g1 && C.delta_rank(2, 2) == d.wedge2_hat_g2 &&
              d.wedge2_hat_g2 + d.h3_hat_g1 == d.z3_hat_g1 && d.delta_t_s2 + d.wedge3 == d.wedge2_t &&
              d.delta_t_s2 + d.h3_hat_g1 == d.h3_g1;
    return d;
}

static int perm_sign(std::vector<int> p) {
    int s = 1;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

LanczosCheck lanczos_identification(int n) {
    LanczosCheck c;
    c.n = n;
    const auto& pairs = subsets(n, 2);
    const auto& triples = subsets(n, 3);
    c.source_dim = static_cast<long>(triples.size() * pairs.size());
    c.target_dim = static_cast<long>(pairs.size()) * n;
    // delta on wedge^3 (x) S_1 (x) T with B_{ab} = v^a_b = -v^b_a.
    SymbolTower full(full_symbol(n, n, 1), 2);
    QMatrix D = full.delta_matrix(3, 1);
    const size_t N1 = static_cast<size_t>(n) * static_cast<size_t>(n);
    QMatrix emb(triples.size() * N1, static_cast<size_t>(c.source_dim));
    auto bits = [](unsigned mask) {
        std::vector<int> v;
        for (int i = 0; i < 32; ++i)
            if ((mask >> i) & 1u) v.push_back(i);
        return v;
    };
    for (size_t T = 0; T < triples.size(); ++T)
        for (size_t P = 0; P < pairs.size(); ++P) {
            auto ab = bits(pairs[P]);
            size_t col = T * pairs.size() + P;
            emb(T * N1 + coord(n, n, ab[1], ab[0]), col) = 1;
            emb(T * N1 + coord(n, n, ab[0], ab[1]), col) = -1;
        }
    QMatrix E1 = (n >= 4) ? D * emb : QMatrix(0, static_cast<size_t>(c.source_dim));
    c.delta_equations = static_cast<long>(E1.rank());
    // Cyclic identity on L_{pq,f}, coordinate index P * n + f.
    QMatrix E2(triples.size(), static_cast<size_t>(c.target_dim));
    auto L = [&](int p, int q, int f) -> std::pair<size_t, int> {
        int sign = p < q ? 1 : -1;
        unsigned mask = (1u << p) | (1u << q);
        return {subset_index(n, mask) * static_cast<size_t>(n) + static_cast<size_t>(f), sign};
    };
    for (size_t T = 0; T < triples.size(); ++T) {
        auto t = bits(triples[T]);
        int i = t[0], j = t[1], k = t[2];
        for (auto [idx, sg] : {L(i, j, k), L(j, k, i), L(k, i, j)}) E2(T, idx) += sg;
    }
    c.cyclic_equations = static_cast<long>(E2.rank());
    if (n != 4) return c;  // no Hodge isomorphism between the two spaces
    // Hodge duality on the form index and on the antisymmetric pair.
    QMatrix phi(static_cast<size_t>(c.target_dim), static_cast<size_t>(c.source_dim));
    const unsigned all = (1u << n) - 1;
    for (size_t T = 0; T < triples.size(); ++T)
        for (size_t P = 0; P < pairs.size(); ++P) {
            auto cde = bits(triples[T]);
            auto ab = bits(pairs[P]);
            int f = bits(all & ~triples[T])[0];
            auto pq = bits(all & ~pairs[P]);
            int sign = perm_sign({f, cde[0], cde[1], cde[2]}) * perm_sign({pq[0], pq[1], ab[0], ab[1]});
            phi(subset_index(n, all & ~pairs[P]) * static_cast<size_t>(n) + static_cast<size_t>(f),
                T * pairs.size() + P) = sign;
        }
    QMatrix E2phi = E2 * phi;
    QMatrix both = E1;
    for (size_t r = 0; r < E2phi.rows(); ++r) {
        std::vector<mpq_class> v(E2phi.cols());
        for (size_t j = 0; j < v.size(); ++j) v[j] = E2phi(r, j);
        both.append_row(v);
    }
    long r1 = c.delta_equations, r2 = static_cast<long>(E2phi.rank()), r12 = static_cast<long>(both.rank());
    c.identical = r1 == r2 && r1 == r12 && phi.rank() == static_cast<size_t>(c.source_dim);
    return c;
}

long killing_symbol_sequence_defect(int n) {
    SymbolTower t(killing_symbol(n), 3);
    long f0 = t.cohomology(1, 0), f1 = t.cohomology(2, 1), f2 = n >= 3 ? t.cohomology(3, 1) : 0;
    return n * binom(n + 3, 4) - binom(n + 2, 3) * f0 + n * f1 - f2;
}

ClassicalTable classical_dims(Family f, int n) {
    ClassicalTable tab;
    tab.family = f;
    tab.n = n;
    SymbolSpace g;
    switch (f) {
        case Family::killing: g = killing_symbol(n); break;
        case Family::conformal: g = conformal_symbol(n); break;
        case Family::contact: g = contact_symbol(n); break;
    }
    SymbolTower t(g, g.q + n + 2);
    auto seq = sequence_from_cohomology(t);
    int prev = 0;
    for (auto& s : seq) {
        tab.dims.push_back(s.dim);
        if (&s != &seq.front()) tab.orders.push_back(s.degree - prev);
        prev = s.degree;
    }
    for (int j = 0; j <= t.top(); ++j) tab.g_dims.push_back(t.dim(j));
    tab.h.assign(static_cast<size_t>(n) + 1, {});
    for (int s = 0; s <= n; ++s)
        for (int j = 0; j < t.top(); ++j) tab.h[static_cast<size_t>(s)].push_back(t.cohomology(s, j));
    tab.h2_g1 = t.cohomology(2, 1);
    tab.h3_g1 = n >= 3 ? t.cohomology(3, 1) : 0;
    bool mixed = std::any_of(seq.begin(), seq.end(), [](const SequenceTerm& s) { return s.mixed; });
    tab.flags.push_back({"single degree per bundle", !mixed});
    bool dd = true;
    for (int s = 0; s + 1 < n && dd; ++s)
        for (int j = 2; j <= std::min(t.top(), 4) && dd; ++j) {
            QMatrix A = t.delta_matrix(s, j);
            SymbolTower full(full_symbol(n, t.m(), 0), j);
            QMatrix B = full.delta_matrix(s + 1, j - 1);
            // A lands in ambient wedge^{s+1} (x) S_{j-1} (x) E, which is full's basis.
            dd = (B * A).is_zero();
        }
    tab.flags.push_back({"delta o delta = 0", dd});
    if (f == Family::killing) {
        tab.flags.push_back({"dim g1 = n(n-1)/2", t.dim(1) == n * (n - 1) / 2});
        tab.flags.push_back({"g2 = 0", t.dim(2) == 0});
        tab.flags.push_back({"H2(g1) = n^2(n^2-1)/12", tab.h2_g1 == n * n * (n * n - 1) / 12});
        tab.flags.push_back({"H3(g1) = n^2(n^2-1)(n-2)/24", tab.h3_g1 == n * n * (n * n - 1) * (n - 2) / 24});
        tab.flags.push_back({"symbol sequence S4T*(x)T -> S3T*(x)F0 -> T*(x)F1 -> F2 exact",
                             killing_symbol_sequence_defect(n) == 0});
    } else if (f == Family::conformal) {
        tab.flags.push_back({"g3 = 0", t.dim(3) == 0});
        SymbolSpace g2 = prolong_symbol(g, 1);
        tab.flags.push_back({"g2 2-acyclic", acyclicity_check(g2, 2)});
        tab.flags.push_back({"g2 3-acyclic", acyclicity_check(g2, 3)});
        tab.flags.push_back({"H3(g1) = 0", tab.h3_g1 == 0});
        if (n >= 4) tab.diagram = bianchi_diagram(n);
    } else {
        bool ok = true;
        for (size_t r = 1; r < tab.dims.size(); ++r) ok = ok && tab.dims[r] == binom(n, static_cast<int>(r) + 1);
        tab.flags.push_back({"dim F_r = n!/((r+2)!(n-r-2)!)", ok});
        tab.flags.push_back({"g1 involutive", acyclicity_check(g, n)});
    }
    return tab;
}

}  // namespace orekit::spencer
