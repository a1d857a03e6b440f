#include "orekit/involution.hpp"

#include <algorithm>
#include <functional>

namespace orekit {

int default_order_budget(int q) { return 2 * std::max(q, 0) + 6; }

JanetBasis::JanetBasis(Context& ctx, TermOrder order, size_t m) : ctx_(&ctx), order_(std::move(order)), m_(m) {}

int JanetBasis::max_order() const {
    int q = -1;
    for (auto& r : rows_) q = std::max(q, r.row.order());
    return q;
}

Row JanetBasis::monic(const Row& r, const char* where) {
    const RatFunc& lc = order_.leading(r).second;
    if (lc.is_one()) return r;
    ctx_->check_pivot(lc, where);
    return r.scaled(lc.inverse());
}

void JanetBasis::recompute_multiplicative() {
    const int n = order_.n();
    const auto& prio = order_.priority();
    for (auto& u : rows_) {
        std::uint32_t mask = 0;
        for (int idx = 0; idx < n; ++idx) {
            int v = prio[idx];
            int mx = 0;
            for (auto& w : rows_) {
                if (w.lead.comp != u.lead.comp) continue;
                bool same = true;
                for (int j = 0; j < idx && same; ++j) same = w.lead.mu[prio[j]] == u.lead.mu[prio[j]];
                if (same) mx = std::max(mx, int(w.lead.mu[v]));
            }
            if (u.lead.mu[v] == mx) mask |= 1u << v;
        }
        u.mult = mask;
    }
}

const BasisRow* JanetBasis::find_divisor(const Jet& j) const {
    for (auto& g : rows_) {
        if (g.lead.comp != j.comp || !divides(g.lead.mu, j.mu)) continue;
        bool ok = true;
        for (int i = 0; i < order_.n() && ok; ++i)
            if (j.mu[i] != g.lead.mu[i] && !(g.mult >> i & 1u)) ok = false;
        if (ok) return &g;
    }
    return nullptr;
}

Row JanetBasis::normal_form(const Row& r) const {
    Row h = r;
    std::vector<Row::Term> rest;
    while (!h.is_zero()) {
        Row::Term t = order_.leading(h);
        const BasisRow* g = find_divisor(t.first);
        if (g) {
            h = h.minus_scaled(t.second, g->pro->get(t.first.mu - g->lead.mu));
            ++reductions_;
            const int cap = ctx_->budget().max_coeff_degree;
            for (auto& [j, c] : h.terms())
                if (static_cast<int>(c.num().total_degree() + c.den().total_degree()) > cap)
                    throw ResourceLimit("coefficient degree exceeded " + std::to_string(cap) + " during reduction");
        } else {
            rest.push_back(t);
            h = h - Row::unit(t.first.comp, t.first.mu, t.second);
        }
    }
    return Row::from_terms(std::move(rest));
}

namespace {

struct Pending {
    Row row;
    Jet lead;
    MultiIndex anc;
    std::uint32_t prolonged = 0;
    int var = -1;
    Jet from;
};

}  // namespace

JanetBasis JanetBasis::complete(Context& ctx, const std::vector<Row>& input, size_t m, const TermOrder& order) {
    JanetBasis B(ctx, order, m);
    int q = 0;
    for (auto& r : input) q = std::max(q, r.order());
    const int max_order = ctx.budget().max_order >= 0 ? ctx.budget().max_order : default_order_budget(q);
    const long max_steps = ctx.budget().max_steps;
    const int n = order.n();

    std::vector<Pending> Q;
    for (auto& r : input) {
        if (r.is_zero()) continue;
        Jet l = order.leading(r).first;
        Q.push_back({r, l, l.mu, 0, -1, l});
    }

    auto pop_lowest = [&]() {
        size_t best = 0;
        for (size_t i = 1; i < Q.size(); ++i)
            if (order.compare(Q[i].lead, Q[best].lead) < 0) best = i;
        Pending p = std::move(Q[best]);
        Q.erase(Q.begin() + static_cast<long>(best));
        return p;
    };

    while (!Q.empty()) {
        Row h;
        Pending p;
        while (!Q.empty() && h.is_zero()) {
            p = pop_lowest();
            if (++B.trace_.normal_forms > max_steps)
                throw ResourceLimit("completion exceeded " + std::to_string(max_steps) + " steps");
            h = B.normal_form(p.row);
            B.trace_.steps.push_back({p.var, p.from, !h.is_zero(), std::nullopt});
        }
        if (!h.is_zero()) {
            h = B.monic(h, "completion pivot");
            Jet l = order.leading(h).first;
            if (l.order() > max_order)
                throw ResourceLimit("completion reached order " + std::to_string(l.order()) + " (budget " +
                                    std::to_string(max_order) + ")");
            B.trace_.steps.back().lead = l;
            B.trace_.max_order = std::max(B.trace_.max_order, l.order());
            BasisRow nr;
            nr.lead = l;
            if (l == p.lead) {
                nr.anc = p.anc;
                nr.prolonged = p.prolonged;
            } else {
                nr.anc = l.mu;
            }
            std::vector<BasisRow> keep;
            for (auto& f : B.rows_) {
                if (f.lead.comp == l.comp && f.lead.mu != l.mu && divides(l.mu, f.lead.mu))
                    Q.push_back({f.row, f.lead, f.anc, f.prolonged, -1, f.lead});
                else
                    keep.push_back(std::move(f));
            }
            B.rows_ = std::move(keep);
            nr.row = std::move(h);
            nr.pro = std::make_shared<Prolongations>(nr.row);
            B.rows_.push_back(std::move(nr));
            B.recompute_multiplicative();
        }
        for (auto& f : B.rows_) {
            std::uint32_t nonmult = ~f.mult & ((1u << n) - 1);
            for (int x = 0; x < n; ++x) {
                if (!(nonmult >> x & 1u) || (f.prolonged >> x & 1u)) continue;
                Row pr = f.pro->get(unit_index(x));
                Jet l = order.leading(pr).first;
                Q.push_back({std::move(pr), l, f.anc, 0, x, f.lead});
                f.prolonged = (f.prolonged & nonmult) | (1u << x);
            }
        }
    }

    // reduce tails, lowest leads first
    std::sort(B.rows_.begin(), B.rows_.end(),
              [&](const BasisRow& a, const BasisRow& b) { return order.compare(a.lead, b.lead) < 0; });
    for (auto& f : B.rows_) {
        RatFunc lc = order.leading(f.row).second;
        Row tail = f.row - Row::unit(f.lead.comp, f.lead.mu, lc);
        Row nt = B.normal_form(tail);
        if (nt != tail) {
            f.row = Row::unit(f.lead.comp, f.lead.mu, lc) + nt;
            f.pro = std::make_shared<Prolongations>(f.row);
        }
    }
    std::reverse(B.rows_.begin(), B.rows_.end());
    B.trace_.reductions = B.reductions_;
    return B;
}

JanetBasis JanetBasis::autoreduce(Context& ctx, const std::vector<Row>& input, size_t m, const TermOrder& order) {
    JanetBasis B(ctx, order, m);
    std::vector<Row> rows;
    for (auto& r : input)
        if (!r.is_zero()) rows.push_back(B.monic(r, "autoreduction pivot"));
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < rows.size(); ++i) {
            Row h = rows[i];
            std::vector<Row::Term> rest;
            while (!h.is_zero()) {
                Row::Term t = order.leading(h);
                size_t d = rows.size();
                for (size_t k = 0; k < rows.size(); ++k) {
                    if (k == i || rows[k].is_zero()) continue;
                    Jet lk = order.leading(rows[k]).first;
                    if (lk.comp == t.first.comp && divides(lk.mu, t.first.mu)) {
                        d = k;
                        break;
                    }
                }
                if (d < rows.size()) {
                    Jet lk = order.leading(rows[d]).first;
                    h = h.minus_scaled(t.second, prolong(t.first.mu - lk.mu, rows[d]));
                } else {
                    rest.push_back(t);
                    h = h - Row::unit(t.first.comp, t.first.mu, t.second);
                }
            }
            Row r = Row::from_terms(std::move(rest));
            if (r != rows[i]) {
                changed = true;
                rows[i] = r.is_zero() ? r : B.monic(r, "autoreduction pivot");
            }
        }
        rows.erase(std::remove_if(rows.begin(), rows.end(), [](const Row& r) { return r.is_zero(); }), rows.end());
    }
    for (auto& r : rows) {
        BasisRow br;
        br.lead = order.leading(r).first;
        br.anc = br.lead.mu;
        br.row = r;
        br.pro = std::make_shared<Prolongations>(r);
        B.rows_.push_back(std::move(br));
    }
    std::sort(B.rows_.begin(), B.rows_.end(),
              [&](const BasisRow& a, const BasisRow& b) { return order.compare(a.lead, b.lead) > 0; });
    B.recompute_multiplicative();
    return B;
}

std::vector<std::string> JanetBasis::board() const {
    std::vector<std::string> out;
    const auto& prio = order_.priority();
    for (auto& r : rows_) {
        std::string line;
        for (int k = order_.n() - 1; k >= 0; --k) {
            int v = prio[k];
            if (!line.empty()) line += " ";
            line += (r.mult >> v & 1u) ? std::to_string(v + 1) : std::string("*");
        }
        out.push_back(line);
    }
    return out;
}

std::vector<int> JanetBasis::classes() const {
    std::vector<int> c;
    for (auto& r : rows_) c.push_back(r.cls(order_));
    return c;
}

std::vector<bool> JanetBasis::led_components() const {
    std::vector<bool> led(m_, false);
    for (auto& r : rows_) led[r.lead.comp] = true;
    return led;
}

// ---- parametric jets ----

namespace {

void for_each_index(int n, int s, const std::function<void(const MultiIndex&)>& f) {
    MultiIndex mu{};
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n - 1) {
            mu[i] = static_cast<std::uint8_t>(left);
            f(mu);
            return;
        }
        for (int e = left; e >= 0; --e) {
            mu[i] = static_cast<std::uint8_t>(e);
            rec(i + 1, left - e);
        }
        mu[i] = 0;
    };
    if (n == 0) {
        if (s == 0) f(mu);
        return;
    }
    rec(0, s);
}

}  // namespace

HilbertData count_parametric(const JanetBasis& B, int upto) {
    HilbertData h;
    const int n = B.order().n();
    std::vector<std::vector<MultiIndex>> leads(B.m());
    for (auto& r : B.rows()) leads[r.lead.comp].push_back(r.lead.mu);
    auto standard = [&](size_t k, const MultiIndex& mu) {
        for (auto& l : leads[k])
            if (divides(l, mu)) return false;
        return true;
    };
    h.finite_type = true;
    for (size_t k = 0; k < B.m() && h.finite_type; ++k) {
        for (int i = 0; i < n; ++i) {
            bool pure = false;
            for (auto& l : leads[k]) {
                bool ok = true;
                for (int j = 0; j < n; ++j)
                    if (j != i && l[j]) ok = false;
                if (ok) pure = true;
            }
            if (!pure) {
                h.finite_type = false;
                break;
            }
        }
    }
    int top = upto;
    if (h.finite_type) {
        int bound = 0;
        for (auto& ls : leads)
            for (auto& l : ls) bound = std::max(bound, order(l));
        top = std::max(top, bound * std::max(n, 1));
    }
    long total = 0;
    for (int s = 0; s <= top; ++s) {
        long c = 0;
        for (size_t k = 0; k < B.m(); ++k) for_each_index(n, s, [&](const MultiIndex& mu) { c += standard(k, mu); });
        if (s <= upto) h.hilbert.push_back(c);
        total += c;
    }
    if (h.finite_type) h.dimension = total;
    return h;
}

// ---- K-linear echelon ----

Row KEchelon::reduce(const Row& r) const {
    Row h = r;
    while (true) {
        const Row::Term* best = nullptr;
        for (auto& t : h.terms())
            if (pivots_.count(t.first) && (!best || order_.compare(t.first, best->first) > 0)) best = &t;
        if (!best) return h;
        RatFunc c = best->second;
        h = h.minus_scaled(c, pivots_.at(best->first));
    }
}

bool KEchelon::add(const Row& r) {
    Row h = reduce(r);
    if (h.is_zero()) return false;
    const Jet l = order_.leading(h).first;
    const RatFunc lc = order_.leading(h).second;
    if (!lc.is_one()) {
        ctx_->check_pivot(lc, "linear pivot");
        h = h.scaled(lc.inverse());
    }
    pivots_.emplace(l, std::move(h));
    return true;
}

// ---- analysis ----

namespace {

bool formally_integrable(Context& ctx, const OpMatrix& A, const JanetBasis& B, std::vector<Row>* failures) {
    int top = B.max_order();
    KEchelon E(ctx, B.order());
    std::vector<Prolongations> pr;
    for (auto& r : A.rows) pr.emplace_back(r);
    const int n = A.n;
    bool ok = true;
    for (int s = 0; s <= top; ++s) {
        for (size_t t = 0; t < A.nrows(); ++t) {
            int d = s - A.rows[t].order();
            if (A.rows[t].is_zero() || d < 0) continue;
            for_each_index(n, d, [&](const MultiIndex& mu) { E.add(pr[t].get(mu)); });
        }
        for (auto& g : B.rows()) {
            if (g.row.order() != s) continue;
            if (!E.contains(g.row)) {
                ok = false;
                if (failures) failures->push_back(g.row);
            }
        }
    }
    return ok;
}

}  // namespace

SystemAnalysis analyze_system(Context& ctx, const OpMatrix& A, MonoOrder kind, const std::vector<int>& priority) {
    SystemAnalysis out;
    out.input_order = std::max(A.order(), 0);
    TermOrder base(A.n, kind, priority);
    JanetBasis B = JanetBasis::complete(ctx, A.rows, A.cols, base);
    out.formally_integrable = formally_integrable(ctx, A, B, &out.integrability_conditions);
    out.regular_priority = base.priority();
    if (!out.formally_integrable) return out;
    std::vector<int> p = base.priority();
    for (int shift = 0; shift < std::max(A.n, 1); ++shift) {
        std::vector<int> cand = p;
        std::rotate(cand.begin(), cand.begin() + shift, cand.end());
        if (shift == 0 ? B.max_order() <= out.input_order
                       : JanetBasis::complete(ctx, A.rows, A.cols, TermOrder(A.n, kind, cand)).max_order() <=
                             out.input_order) {
            out.involutive = true;
            out.regular_priority = cand;
            break;
        }
    }
    return out;
}

}  // namespace orekit
