#include "orekit/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "orekit/errors.hpp"

namespace orekit {

Sym sym::derived(Sym s, int i) {
    if (deriv(s, i) == 15) throw ResourceLimit("derivative order of a coefficient function exceeds 15");
    return s + (Sym(1) << kNibbleShift(i));
}

// ---- Monomial ----

Monomial::Monomial(Sym s, std::uint32_t e) {
    if (e) f_.emplace_back(s, e);
}

std::uint32_t Monomial::degree(Sym s) const {
    for (auto& [k, e] : f_)
        if (k == s) return e;
    return 0;
}

std::uint32_t Monomial::total_degree() const {
    std::uint32_t d = 0;
    for (auto& f : f_) d += f.second;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.f_.reserve(f_.size() + o.f_.size());
    size_t i = 0, j = 0;
    while (i < f_.size() && j < o.f_.size()) {
        if (f_[i].first < o.f_[j].first) r.f_.push_back(f_[i++]);
        else if (f_[i].first > o.f_[j].first) r.f_.push_back(o.f_[j++]);
        else {
            r.f_.emplace_back(f_[i].first, f_[i].second + o.f_[j].second);
            ++i, ++j;
        }
    }
    for (; i < f_.size(); ++i) r.f_.push_back(f_[i]);
    for (; j < o.f_.size(); ++j) r.f_.push_back(o.f_[j]);
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    size_t j = 0;
    for (auto& [s, e] : f_) {
        while (j < o.f_.size() && o.f_[j].first < s) ++j;
        if (j == o.f_.size() || o.f_[j].first != s || o.f_[j].second < e) return false;
    }
    return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r;
    size_t j = 0;
    for (auto& [s, e] : f_) {
        if (j < o.f_.size() && o.f_[j].first == s) {
            if (e > o.f_[j].second) r.f_.emplace_back(s, e - o.f_[j].second);
            ++j;
        } else {
            r.f_.emplace_back(s, e);
        }
    }
    return r;
}

Monomial Monomial::without(Sym s) const {
    Monomial r;
    for (auto& f : f_)
        if (f.first != s) r.f_.push_back(f);
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    size_t j = 0;
    for (auto& [s, e] : a.f_) {
        while (j < b.f_.size() && b.f_[j].first < s) ++j;
        if (j < b.f_.size() && b.f_[j].first == s) r.f_.emplace_back(s, std::min(e, b.f_[j].second));
    }
    return r;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
    size_t n = std::min(a.f_.size(), b.f_.size());
    for (size_t i = 0; i < n; ++i) {
        if (a.f_[i].first != b.f_[i].first) return a.f_[i].first < b.f_[i].first ? 1 : -1;
        if (a.f_[i].second != b.f_[i].second) return a.f_[i].second > b.f_[i].second ? 1 : -1;
    }
    if (a.f_.size() != b.f_.size()) return a.f_.size() > b.f_.size() ? 1 : -1;
    return 0;
}

// ---- Polynomial ----

Polynomial::Polynomial(long c) {
    if (c) t_.emplace_back(Monomial(), mpq_class(c));
}

Polynomial::Polynomial(const mpq_class& c) {
    if (sgn(c)) {
        t_.emplace_back(Monomial(), c);
        t_.back().second.canonicalize();
    }
}

Polynomial Polynomial::symbol(Sym s) { return term(Monomial(s), 1); }

Polynomial Polynomial::term(Monomial m, mpq_class c) {
    Polynomial p;
    if (sgn(c)) {
        c.canonicalize();
        p.t_.emplace_back(std::move(m), std::move(c));
    }
    return p;
}

bool Polynomial::is_one() const {
    return t_.size() == 1 && t_[0].first.is_one() && t_[0].second == 1;
}

mpq_class Polynomial::constant_value() const {
    if (t_.empty()) return 0;
    return t_.back().first.is_one() ? t_.back().second : mpq_class(0);
}

void Polynomial::canonicalize() {
    std::sort(t_.begin(), t_.end(),
              [](const Term& a, const Term& b) { return Monomial::compare(a.first, b.first) > 0; });
    std::vector<Term> out;
    out.reserve(t_.size());
    for (auto& t : t_) {
        if (!out.empty() && out.back().first == t.first) {
            out.back().second += t.second;
            if (sgn(out.back().second) == 0) out.pop_back();
        } else if (sgn(t.second)) {
            out.push_back(std::move(t));
        }
    }
    t_ = std::move(out);
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.t_) t.second = -t.second;
    return r;
}

Polynomial Polynomial::merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    Polynomial r;
    auto& x = a.t_;
    auto& y = b.t_;
    r.t_.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        int c = i == x.size() ? -1 : j == y.size() ? 1 : Monomial::compare(x[i].first, y[j].first);
        if (c > 0) {
            r.t_.push_back(x[i++]);
        } else if (c < 0) {
            r.t_.emplace_back(y[j].first, subtract ? mpq_class(-y[j].second) : y[j].second);
            ++j;
        } else {
            mpq_class s = subtract ? mpq_class(x[i].second - y[j].second) : mpq_class(x[i].second + y[j].second);
            if (sgn(s)) r.t_.emplace_back(x[i].first, std::move(s));
            ++i, ++j;
        }
    }
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (o.t_.empty()) return *this;
    if (t_.empty()) return o;
    return merge(*this, o, false);
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    if (o.t_.empty()) return *this;
    return merge(*this, o, true);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (t_.empty() || o.t_.empty()) return {};
    if (o.is_constant()) return scaled(o.t_[0].second);
    if (is_constant()) return o.scaled(t_[0].second);
    if (o.t_.size() == 1) return times(o.t_[0].first, o.t_[0].second);
    if (t_.size() == 1) return o.times(t_[0].first, t_[0].second);
    Polynomial r;
    r.t_.reserve(t_.size() * o.t_.size());
    for (auto& a : t_)
        for (auto& b : o.t_) r.t_.emplace_back(a.first * b.first, a.second * b.second);
    r.canonicalize();
    return r;
}

Polynomial Polynomial::scaled(const mpq_class& c) const {
    if (sgn(c) == 0) return {};
    Polynomial r = *this;
    for (auto& t : r.t_) t.second *= c;
    return r;
}

Polynomial Polynomial::times(const Monomial& m, const mpq_class& c) const {
    if (sgn(c) == 0) return {};
    Polynomial r;
    r.t_.reserve(t_.size());
    // multiplying by a monomial preserves the lex order
    for (auto& t : t_) r.t_.emplace_back(t.first * m, t.second * c);
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r(1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

int Polynomial::compare(const Polynomial& a, const Polynomial& b) {
    size_t n = std::min(a.t_.size(), b.t_.size());
    for (size_t i = 0; i < n; ++i) {
        int c = Monomial::compare(a.t_[i].first, b.t_[i].first);
        if (c) return c;
        if (a.t_[i].second != b.t_[i].second) return a.t_[i].second < b.t_[i].second ? -1 : 1;
    }
    if (a.t_.size() != b.t_.size()) return a.t_.size() < b.t_.size() ? -1 : 1;
    return 0;
}

std::set<Sym> Polynomial::symbols() const {
    std::set<Sym> s;
    for (auto& t : t_)
        for (auto& f : t.first.factors()) s.insert(f.first);
    return s;
}

bool Polynomial::has_kind(SymKind k) const {
    for (auto& t : t_)
        for (auto& f : t.first.factors())
            if (sym::kind(f.first) == k) return true;
    return false;
}

std::uint32_t Polynomial::degree(Sym s) const {
    std::uint32_t d = 0;
    for (auto& t : t_) d = std::max(d, t.first.degree(s));
    return d;
}

std::uint32_t Polynomial::total_degree() const {
    std::uint32_t d = 0;
    for (auto& t : t_) d = std::max(d, t.first.total_degree());
    return d;
}

std::vector<Polynomial> Polynomial::coefficients_in(Sym s) const {
    std::vector<Polynomial> c(degree(s) + 1);
    for (auto& t : t_) c[t.first.degree(s)].t_.emplace_back(t.first.without(s), t.second);
    for (auto& p : c) p.canonicalize();
    return c;
}

Polynomial Polynomial::derive(int i) const {
    Polynomial r;
    for (auto& [m, c] : t_) {
        for (auto& [s, e] : m.factors()) {
            SymKind k = sym::kind(s);
            if (k == SymKind::variable && sym::index(s) == static_cast<unsigned>(i)) {
                r.t_.emplace_back(m / Monomial(s), c * e);
            } else if (k == SymKind::function) {
                r.t_.emplace_back((m / Monomial(s)) * Monomial(sym::derived(s, i)), c * e);
            }
        }
    }
    r.canonicalize();
    return r;
}

Polynomial Polynomial::substitute(Sym s, const Polynomial& value) const {
    Polynomial r;
    std::vector<Polynomial> powers{Polynomial(1)};
    for (auto& [m, c] : t_) {
        std::uint32_t e = m.degree(s);
        if (e == 0) {
            r.t_.emplace_back(m, c);
            continue;
        }
        while (powers.size() <= e) powers.push_back(powers.back() * value);
        Polynomial part = powers[e].times(m.without(s), c);
        r.t_.insert(r.t_.end(), part.t_.begin(), part.t_.end());
    }
    r.canonicalize();
    return r;
}

Polynomial Polynomial::evaluate(const std::function<std::optional<mpq_class>(Sym)>& f) const {
    Polynomial r;
    for (auto& [m, c] : t_) {
        mpq_class k = c;
        Monomial rest;
        for (auto& [s, e] : m.factors()) {
            if (auto v = f(s)) {
                mpq_class p = 1;
                for (std::uint32_t i = 0; i < e; ++i) p *= *v;
                k *= p;
            } else {
                rest.f_.emplace_back(s, e);
            }
        }
        if (sgn(k)) r.t_.emplace_back(std::move(rest), std::move(k));
    }
    r.canonicalize();
    return r;
}

Polynomial Polynomial::monic() const {
    if (t_.empty() || t_[0].second == 1) return *this;
    mpq_class inv = 1 / t_[0].second;
    return scaled(inv);
}

Polynomial Polynomial::primitive() const {
    if (t_.empty()) return *this;
    mpz_class l = 1, g = 0;
    for (auto& t : t_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.second.get_den_mpz_t());
    for (auto& t : t_) {
        mpz_class num = t.second.get_num() * (l / t.second.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    mpq_class k(l, g);
    k.canonicalize();
    if (sgn(t_[0].second) < 0) k = -k;
    return scaled(k);
}

static std::string factor_string(const Monomial& m, const SymNamer& name) {
    std::string s;
    for (auto& [k, e] : m.factors()) {
        if (!s.empty()) s += "*";
        s += name(k);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::string Polynomial::to_string(const SymNamer& name) const {
    if (t_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : t_) {
        mpq_class a = abs(c);
        if (first) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        first = false;
        if (m.is_one()) {
            out += a.get_str();
        } else {
            if (a != 1) out += a.get_str() + "*";
            out += factor_string(m, name);
        }
    }
    return out;
}

// ---- division and gcd ----

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (b.is_constant()) return a.scaled(1 / b.constant_value());
    Polynomial q, r = a;
    const auto& [mb, cb] = b.leading();
    while (!r.is_zero()) {
        const auto& [m, c] = r.leading();
        if (!mb.divides(m)) return std::nullopt;
        Monomial t = m / mb;
        mpq_class k = c / cb;
        q += Polynomial::term(t, k);
        r -= b.times(t, k);
    }
    return q;
}

Polynomial gcd_prs(const Polynomial& a, const Polynomial& b);

namespace {

Sym main_symbol(const Polynomial& p) { return p.leading().first.factors().front().first; }

Polynomial content_in(const Polynomial& p, Sym v) {
    Polynomial g;
    for (auto& c : p.coefficients_in(v)) {
        if (c.is_zero()) continue;
        g = gcd_prs(g, c);
        if (g.is_one()) break;
    }
    return g;
}

Polynomial primitive_part_in(const Polynomial& p, Sym v) {
    Polynomial c = content_in(p, v);
    if (c.is_one()) return p.monic();
    return divide_exact(p, c).value().monic();
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, Sym v) {
    auto bc = b.coefficients_in(v);
    std::uint32_t db = static_cast<std::uint32_t>(bc.size() - 1);
    const Polynomial& lb = bc.back();
    Polynomial r = a;
    while (!r.is_zero()) {
        std::uint32_t dr = r.degree(v);
        if (dr < db) break;
        Polynomial lr = r.coefficients_in(v).back();
        r = lb * r - lr * b * Polynomial::term(Monomial(v, dr - db), 1);
    }
    return r;
}

}  // namespace

Polynomial gcd_prs(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Polynomial(1);
    if (a == b) return a.monic();
    if (a.terms().size() == 1 && b.terms().size() == 1)
        return Polynomial::term(Monomial::gcd(a.leading().first, b.leading().first), 1);
    Sym v = std::min(main_symbol(a), main_symbol(b));
    std::uint32_t da = a.degree(v), db = b.degree(v);
    if (da == 0) return gcd_prs(a, content_in(b, v));
    if (db == 0) return gcd_prs(content_in(a, v), b);
    Polynomial ca = content_in(a, v), cb = content_in(b, v);
    Polynomial c = gcd_prs(ca, cb);
    Polynomial p = ca.is_one() ? a : divide_exact(a, ca).value();
    Polynomial q = cb.is_one() ? b : divide_exact(b, cb).value();
    if (p.degree(v) < q.degree(v)) std::swap(p, q);
    while (true) {
        Polynomial r = pseudo_remainder(p, q, v);
        if (r.is_zero()) break;
        if (r.degree(v) == 0) {
            q = Polynomial(1);
            break;
        }
        p = std::move(q);
        q = primitive_part_in(r, v);
    }
    return (c * q.monic()).monic();
}


namespace {

// Heuristic gcd on integer polynomials: evaluate one symbol at a large
// integer, recurse, rebuild by symmetric xi-adic expansion and confirm by
// trial division.

mpz_class int_content(const Polynomial& p) {
    mpz_class g = 0;
    for (auto& t : p.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_num_mpz_t());
        if (g == 1) break;
    }
    return g;
}

mpz_class max_norm(const Polynomial& p) {
    mpz_class m = 0;
    for (auto& t : p.terms()) {
        mpz_class a = abs(t.second.get_num());
        if (a > m) m = a;
    }
    return m;
}

Polynomial eval_at(const Polynomial& p, Sym v, const mpz_class& x) {
    mpq_class xv(x);
    return p.evaluate([&](Sym s) -> std::optional<mpq_class> {
        if (s == v) return xv;
        return std::nullopt;
    });
}

Polynomial interpolate(Polynomial h, const mpz_class& x, Sym v) {
    Polynomial out;
    std::uint32_t i = 0;
    mpz_class half = x / 2;
    while (!h.is_zero()) {
        Polynomial g;
        for (auto& [m, c] : h.terms()) {
            mpz_class r;
            mpz_fdiv_r(r.get_mpz_t(), c.get_num_mpz_t(), x.get_mpz_t());
            if (r > half) r -= x;
            if (r != 0) g += Polynomial::term(m, mpq_class(r));
        }
        if (!g.is_zero()) out += g * Polynomial::term(Monomial(v, i), 1);
        h = (h - g).scaled(mpq_class(1, 1) / mpq_class(x));
        ++i;
        if (i > 4096) throw ResourceLimit("gcd interpolation runaway");
    }
    return out;
}

std::optional<Polynomial> heu_gcd(const Polynomial& f0, const Polynomial& g0, int depth) {
    if (f0.is_constant() || g0.is_constant()) {
        mpz_class a = f0.is_constant() ? abs(f0.constant_value().get_num()) : int_content(f0);
        mpz_class b = g0.is_constant() ? abs(g0.constant_value().get_num()) : int_content(g0);
        mpz_class c;
        mpz_gcd(c.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return Polynomial(mpq_class(c));
    }
    if (depth > 64) return std::nullopt;
    mpz_class cf = int_content(f0), cg = int_content(g0), ic;
    mpz_gcd(ic.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    Polynomial f = f0.scaled(mpq_class(1) / mpq_class(cf)), g = g0.scaled(mpq_class(1) / mpq_class(cg));
    Sym v = std::min(f.leading().first.is_one() ? ~Sym(0) : f.leading().first.factors().front().first,
                     g.leading().first.is_one() ? ~Sym(0) : g.leading().first.factors().front().first);
    mpz_class fn = max_norm(f), gn = max_norm(g);
    mpz_class B = 2 * std::min(fn, gn) + 29;
    mpz_class x = std::min(B, mpz_class(99 * sqrt(B)));
    mpz_class alt = 2 * std::min(fn / abs(f.leading_coeff().get_num()), gn / abs(g.leading_coeff().get_num())) + 4;
    if (alt > x) x = alt;
    for (int attempt = 0; attempt < 6; ++attempt) {
        Polynomial ff = eval_at(f, v, x), gg = eval_at(g, v, x);
        if (!ff.is_zero() && !gg.is_zero()) {
            if (auto h = heu_gcd(ff, gg, depth + 1)) {
                Polynomial H = interpolate(*h, x, v);
                if (!H.is_zero()) {
                    H = H.primitive();
                    if (divide_exact(f, H) && divide_exact(g, H)) return H.scaled(mpq_class(ic));
                }
            }
        }
        x = 73794 * x * sqrt(sqrt(x)) / 27011;
    }
    return std::nullopt;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Polynomial(1);
    if (a == b) return a.monic();
    if (a.terms().size() == 1 && b.terms().size() == 1)
        return Polynomial::term(Monomial::gcd(a.leading().first, b.leading().first), 1);
    if (auto h = heu_gcd(a.primitive(), b.primitive(), 0)) return h->monic();
    return gcd_prs(a, b);
}

}  // namespace orekit
