#include "orekit/term_order.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace orekit {

MonoOrder parse_mono_order(const std::string& s) {
    if (s == "degrevlex" || s == "grevlex") return MonoOrder::degrevlex;
    if (s == "deglex" || s == "grlex") return MonoOrder::deglex;
    if (s == "lex") return MonoOrder::lex;
    throw std::invalid_argument("unknown term order '" + s + "'");
}

std::string to_string(MonoOrder o) {
    switch (o) {
    case MonoOrder::degrevlex: return "degrevlex";
    case MonoOrder::deglex: return "deglex";
    case MonoOrder::lex: return "lex";
    }
    return "?";
}

std::vector<int> priority_from_listing(const std::vector<int>& lowest_first) {
    std::vector<int> p;
    for (auto it = lowest_first.rbegin(); it != lowest_first.rend(); ++it) p.push_back(*it - 1);
    std::vector<int> s = p;
    std::sort(s.begin(), s.end());
    for (size_t i = 0; i < s.size(); ++i)
        if (s[i] != static_cast<int>(i)) throw std::invalid_argument("priority must be a permutation of 1..n");
    return p;
}

TermOrder::TermOrder(int n, MonoOrder kind, std::vector<int> priority)
    : n_(n), kind_(kind), prio_(std::move(priority)) {
    if (prio_.empty()) {
        prio_.resize(n);
        for (int i = 0; i < n; ++i) prio_[i] = n - 1 - i;
    }
    if (static_cast<int>(prio_.size()) != n) throw std::invalid_argument("priority length differs from n");
}

int TermOrder::compare_mono(const MultiIndex& a, const MultiIndex& b) const {
    if (kind_ != MonoOrder::lex) {
        int da = order(a), db = order(b);
        if (da != db) return da > db ? 1 : -1;
    }
    if (kind_ == MonoOrder::degrevlex) {
        for (int k = n_ - 1; k >= 0; --k) {
            int v = prio_[k];
            if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
        }
        return 0;
    }
    for (int k = 0; k < n_; ++k) {
        int v = prio_[k];
        if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
    }
    return 0;
}

int TermOrder::compare(const Jet& a, const Jet& b) const {
    int ba = block(a.comp), bb = block(b.comp);
    if (ba != bb) return ba < bb ? 1 : -1;
    int ra = rank(a.comp), rb = rank(b.comp);
    if (pot_ && ra != rb) return ra < rb ? 1 : -1;
    int c = compare_mono(a.mu, b.mu);
    if (c) return c;
    if (ra != rb) return ra < rb ? 1 : -1;
    return 0;
}

const Row::Term& TermOrder::leading(const Row& r) const {
    if (r.is_zero()) throw std::logic_error("leading term of zero row");
    const Row::Term* best = &r.terms().front();
    for (auto& t : r.terms())
        if (compare(t.first, best->first) > 0) best = &t;
    return *best;
}

int TermOrder::cls(const MultiIndex& mu) const {
    for (int k = n_ - 1; k >= 0; --k)
        if (mu[prio_[k]]) return prio_[k] + 1;
    return prio_.empty() ? 0 : prio_[0] + 1;
}

}  // namespace orekit
