#include "orekit/ore.hpp"

#include <algorithm>

namespace orekit {

int order(const MultiIndex& mu) {
    int s = 0;
    for (auto e : mu) s += e;
    return s;
}

MultiIndex unit_index(int i) {
    MultiIndex m{};
    m[i] = 1;
    return m;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r;
    for (int i = 0; i < kMaxVars; ++i) r[i] = static_cast<std::uint8_t>(a[i] + b[i]);
    return r;
}

MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r;
    for (int i = 0; i < kMaxVars; ++i) r[i] = static_cast<std::uint8_t>(a[i] - b[i]);
    return r;
}

bool divides(const MultiIndex& a, const MultiIndex& b) {
    for (int i = 0; i < kMaxVars; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// ---- Row ----

Row Row::unit(std::uint16_t comp, const MultiIndex& mu, RatFunc c) {
    Row r;
    if (!c.is_zero()) r.t_.emplace_back(Jet{comp, mu}, std::move(c));
    return r;
}

Row Row::from_terms(std::vector<Term> terms) {
    Row r;
    r.t_ = std::move(terms);
    r.canonicalize();
    return r;
}

void Row::canonicalize() {
    std::stable_sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> out;
    out.reserve(t_.size());
    for (auto& t : t_) {
        if (!out.empty() && out.back().first == t.first) {
            out.back().second += t.second;
            if (out.back().second.is_zero()) out.pop_back();
        } else if (!t.second.is_zero()) {
            out.push_back(std::move(t));
        }
    }
    t_ = std::move(out);
}

int Row::order() const {
    int q = -1;
    for (auto& t : t_) q = std::max(q, t.first.order());
    return q;
}

RatFunc Row::coeff(const Jet& j) const {
    auto it = std::lower_bound(t_.begin(), t_.end(), j, [](const Term& t, const Jet& k) { return t.first < k; });
    if (it != t_.end() && it->first == j) return it->second;
    return RatFunc();
}

bool Row::uses_comp(std::uint16_t k) const {
    for (auto& t : t_)
        if (t.first.comp == k) return true;
    return false;
}

Row Row::operator-() const {
    Row r = *this;
    for (auto& t : r.t_) t.second = -t.second;
    return r;
}

Row Row::operator+(const Row& o) const {
    if (o.t_.empty()) return *this;
    if (t_.empty()) return o;
    Row r;
    r.t_.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() || j < o.t_.size()) {
        if (j == o.t_.size() || (i < t_.size() && t_[i].first < o.t_[j].first)) {
            r.t_.push_back(t_[i++]);
        } else if (i == t_.size() || o.t_[j].first < t_[i].first) {
            r.t_.push_back(o.t_[j++]);
        } else {
            RatFunc s = t_[i].second + o.t_[j].second;
            if (!s.is_zero()) r.t_.emplace_back(t_[i].first, std::move(s));
            ++i, ++j;
        }
    }
    return r;
}

Row Row::operator-(const Row& o) const { return *this + (-o); }

Row Row::scaled(const RatFunc& c) const {
    if (c.is_zero()) return {};
    if (c.is_one()) return *this;
    Row r = *this;
    for (auto& t : r.t_) t.second *= c;
    return r;
}

Row Row::minus_scaled(const RatFunc& c, const Row& o) const { return *this - o.scaled(c); }

Row Row::shifted(int offset) const {
    Row r = *this;
    for (auto& t : r.t_) t.first.comp = static_cast<std::uint16_t>(t.first.comp + offset);
    return r;
}

Row Row::restricted(std::uint16_t lo, std::uint16_t hi) const {
    Row r;
    for (auto& t : t_)
        if (t.first.comp >= lo && t.first.comp < hi) r.t_.push_back(t);
    return r;
}

Row Row::partial_evaluate(const std::function<std::optional<mpq_class>(Sym)>& f) const {
    std::vector<Term> ts;
    for (auto& t : t_) ts.emplace_back(t.first, t.second.partial_evaluate(f));
    return from_terms(std::move(ts));
}

Row Row::substitute(Sym s, const RatFunc& v) const {
    std::vector<Term> ts;
    for (auto& t : t_) ts.emplace_back(t.first, t.second.substitute(s, v));
    return from_terms(std::move(ts));
}

std::string Row::to_string(const DiffField& f, const std::vector<std::string>& comps) const {
    if (t_.empty()) return "0";
    std::vector<const Term*> ts;
    for (auto& t : t_) ts.push_back(&t);
    std::stable_sort(ts.begin(), ts.end(), [](const Term* a, const Term* b) {
        if (a->first.comp != b->first.comp) return a->first.comp < b->first.comp;
        if (a->first.order() != b->first.order()) return a->first.order() > b->first.order();
        return a->first.mu > b->first.mu;
    });
    std::string out;
    for (auto* t : ts) {
        const RatFunc& c = t->second;
        std::string d = f.deriv_prefix(t->first.mu);
        std::string name = t->first.comp < comps.size() ? comps[t->first.comp] : "u" + std::to_string(t->first.comp + 1);
        std::string jet = d.empty() ? name : d + "(" + name + ")";
        bool neg = false;
        std::string cs;
        if (c.is_polynomial() && c.num().terms().size() == 1) {
            neg = sgn(c.num().leading_coeff()) < 0;
            RatFunc a = neg ? -c : c;
            if (!a.is_one()) cs = f.str(a);
        } else {
            cs = "(" + f.str(c) + ")";
        }
        if (out.empty()) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        out += cs.empty() ? jet : cs + "*" + jet;
    }
    return out;
}

// ---- operator algebra ----

Row d_times(int i, const Row& r) {
    std::vector<Row::Term> out;
    out.reserve(2 * r.size());
    for (auto& [j, a] : r.terms()) {
        Jet k = j;
        ++k.mu[i];
        out.emplace_back(k, a);
        RatFunc da = a.derive(i);
        if (!da.is_zero()) out.emplace_back(j, std::move(da));
    }
    return Row::from_terms(std::move(out));
}

Row coef_times(const RatFunc& a, const Row& r) { return r.scaled(a); }

const Row& Prolongations::get(const MultiIndex& mu) {
    auto it = cache_.find(mu);
    if (it != cache_.end()) return it->second;
    int i = 0;
    while (mu[i] == 0) ++i;
    MultiIndex parent = mu;
    --parent[i];
    Row r = d_times(i, get(parent));
    return cache_.emplace(mu, std::move(r)).first->second;
}

Row prolong(const MultiIndex& mu, const Row& r) {
    Prolongations p(r);
    return p.get(mu);
}

Row apply(const ScalarOp& P, const Row& r) {
    Prolongations pr(r);
    Row out;
    for (auto& [j, a] : P.terms()) out += pr.get(j.mu).scaled(a);
    return out;
}

ScalarOp op_mul(const ScalarOp& P, const ScalarOp& Q) { return apply(P, Q); }

ScalarOp adjoint(const ScalarOp& P) {
    Row out;
    for (auto& [j, a] : P.terms()) {
        Row t = prolong(j.mu, Row::unit(0, {}, a));
        out += (j.order() % 2) ? -t : t;
    }
    return out;
}

// ---- OpMatrix ----

std::string default_label(const std::string& stem, size_t i) { return stem + std::to_string(i + 1); }

OpMatrix::OpMatrix(int n_, size_t cols_, std::vector<Row> rows_) : n(n_), cols(cols_), rows(std::move(rows_)) {}

ScalarOp OpMatrix::entry(size_t r, size_t k) const {
    std::vector<Row::Term> ts;
    for (auto& t : rows[r].terms())
        if (t.first.comp == k) ts.emplace_back(Jet{0, t.first.mu}, t.second);
    return Row::from_terms(std::move(ts));
}

int OpMatrix::order() const {
    int q = -1;
    for (auto& r : rows) q = std::max(q, r.order());
    return q;
}

bool OpMatrix::is_zero() const {
    for (auto& r : rows)
        if (!r.is_zero()) return false;
    return true;
}

std::vector<std::string> OpMatrix::col_names() const {
    std::vector<std::string> v;
    for (size_t k = 0; k < cols; ++k) v.push_back(k < col_labels.size() ? col_labels[k] : default_label("u", k));
    return v;
}

std::vector<std::string> OpMatrix::row_names() const {
    std::vector<std::string> v;
    for (size_t k = 0; k < rows.size(); ++k)
        v.push_back(k < row_labels.size() ? row_labels[k] : default_label("E", k));
    return v;
}

std::string OpMatrix::row_string(const DiffField& f, size_t r) const { return rows[r].to_string(f, col_names()); }

OpMatrix OpMatrix::identity(int n, size_t m) {
    OpMatrix I(n, m);
    for (size_t k = 0; k < m; ++k) I.rows.push_back(Row::unit(static_cast<std::uint16_t>(k)));
    return I;
}

OpMatrix adjoint(const OpMatrix& A) {
    OpMatrix B(A.n, A.nrows());
    B.rows.resize(A.cols);
    for (size_t tau = 0; tau < A.nrows(); ++tau) {
        for (auto& [j, a] : A.rows[tau].terms()) {
            Row t = prolong(j.mu, Row::unit(static_cast<std::uint16_t>(tau), {}, a));
            B.rows[j.comp] += (j.order() % 2) ? -t : t;
        }
    }
    return B;
}

OpMatrix compose(const OpMatrix& B, const OpMatrix& A) {
    if (B.cols != A.nrows())
        throw DimensionMismatch("compose: " + std::to_string(B.cols) + " columns against " +
                                std::to_string(A.nrows()) + " rows");
    OpMatrix C(std::max(A.n, B.n), A.cols);
    C.col_labels = A.col_labels;
    C.row_labels = B.row_labels;
    std::vector<Prolongations> pr;
    pr.reserve(A.nrows());
    for (auto& r : A.rows) pr.emplace_back(r);
    for (auto& brow : B.rows) {
        Row out;
        for (auto& [j, a] : brow.terms()) out += pr[j.comp].get(j.mu).scaled(a);
        C.rows.push_back(std::move(out));
    }
    return C;
}

std::vector<RatFunc> apply_to_section(const OpMatrix& A, const std::vector<RatFunc>& s) {
    if (s.size() != A.cols) throw DimensionMismatch("section size does not match operator columns");
    std::vector<std::map<MultiIndex, RatFunc>> cache(s.size());
    auto deriv = [&](size_t k, const MultiIndex& mu) -> const RatFunc& {
        auto& c = cache[k];
        std::vector<MultiIndex> chain{mu};
        while (!c.count(chain.back())) {
            MultiIndex m = chain.back();
            if (order(m) == 0) {
                c.emplace(m, s[k]);
                break;
            }
            int i = 0;
            while (m[i] == 0) ++i;
            --m[i];
            chain.push_back(m);
        }
        for (size_t t = chain.size() - 1; t-- > 0;) {
            const MultiIndex& m = chain[t];
            if (c.count(m)) continue;
            int i = 0;
            while (m[i] == chain[t + 1][i]) ++i;
            c.emplace(m, c.at(chain[t + 1]).derive(i));
        }
        return c.at(mu);
    };
    std::vector<RatFunc> out;
    for (auto& r : A.rows) {
        RatFunc v;
        for (auto& [j, a] : r.terms()) v += a * deriv(j.comp, j.mu);
        out.push_back(v);
    }
    return out;
}

}  // namespace orekit
