#include "orekit/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace orekit::dsl {

namespace {

constexpr int kMaxDepth = 200;
constexpr int kMaxExponent = 64;
constexpr int kMaxDerivOrder = 60;

const std::set<std::string> kKeywords = {"system", "vars", "unknowns", "params", "functions",
                                         "let", "assume", "order", "priority", "case"};

// ---- lexer ----

struct Token {
    enum Type { Ident, Number, Punct, End } type = End;
    std::string text;
    mpq_class value;
    Span span;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto advance = [&](size_t k) {
        for (size_t t = 0; t < k && i < s.size(); ++t, ++i) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            advance(1);
            continue;
        }
        if (c == '#' || (c == '/' && i + 1 < s.size() && s[i + 1] == '/')) {
            while (i < s.size() && s[i] != '\n') advance(1);
            continue;
        }
        Token t;
        t.span = {line, col, i, 0};
        if (std::isalpha(c) || c == '_') {
            size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            t.type = Token::Ident;
            t.text = s.substr(i, j - i);
        } else if (std::isdigit(c)) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            std::string whole = s.substr(i, j - i), frac;
            if (j + 1 < s.size() && s[j] == '.' && std::isdigit(static_cast<unsigned char>(s[j + 1]))) {
                size_t k = j + 1;
                while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
                frac = s.substr(j + 1, k - j - 1);
                j = k;
            }
            if (whole.size() + frac.size() > 200) throw ParseError("numeric literal too long", t.span, {});
            t.type = Token::Number;
            t.text = s.substr(i, j - i);
            mpz_class num(whole + frac), den = 1;
            for (size_t k = 0; k < frac.size(); ++k) den *= 10;
            t.value = mpq_class(num, den);
            t.value.canonicalize();
        } else if (c == '!' && i + 1 < s.size() && s[i + 1] == '=') {
            t.type = Token::Punct;
            t.text = "!=";
        } else if (std::string(";,:()+-*/^=").find(static_cast<char>(c)) != std::string::npos) {
            t.type = Token::Punct;
            t.text = std::string(1, static_cast<char>(c));
        } else {
            t.span.length = 1;
            throw ParseError("unexpected character '" + std::string(1, static_cast<char>(c)) + "'", t.span, {});
        }
        t.span.length = t.text.size();
        advance(t.text.size());
        out.push_back(std::move(t));
    }
    Token end;
    end.span = {line, col, s.size(), 0};
    out.push_back(end);
    return out;
}

bool is_deriv_name(const std::string& s) {
    if (s.size() < 2 || s[0] != 'd') return false;
    return std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

// ---- parser ----

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(lex(text)) {}

    Document document() {
        Document d;
        while (peek().type != Token::End) statement(d);
        return d;
    }

    ExprPtr standalone_expr() {
        ExprPtr e = expr();
        if (peek().type != Token::End) fail({"end of input"});
        return e;
    }

    Condition standalone_condition() {
        Condition c = condition();
        if (peek().type != Token::End) fail({"end of input"});
        return c;
    }

private:
    const Token& peek(size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool is(const char* p, size_t k = 0) const { return peek(k).type == Token::Punct && peek(k).text == p; }

    [[noreturn]] void fail(std::set<std::string> expected) const {
        const Token& t = peek();
        std::string got = t.type == Token::End ? "end of input" : "'" + t.text + "'";
        std::string exp;
        for (auto& e : expected) exp += (exp.empty() ? "" : ", ") + e;
        throw ParseError("line " + std::to_string(t.span.line) + ":" + std::to_string(t.span.col) + ": unexpected " +
                             got + ", expected " + exp,
                         t.span, std::move(expected));
    }

    void expect(const char* p) {
        if (!is(p)) fail({std::string("'") + p + "'"});
        next();
    }

    std::string ident() {
        if (peek().type != Token::Ident) fail({"identifier"});
        return next().text;
    }

    std::vector<std::string> ident_list() {
        std::vector<std::string> v{ident()};
        while (is(",")) {
            next();
            v.push_back(ident());
        }
        return v;
    }

    void statement(Document& d) {
        const Token& t = peek();
        if (t.type == Token::Ident && kKeywords.count(t.text) && !is(":", 1)) {
            std::string kw = next().text;
            if (kw == "system") {
                d.name = ident();
            } else if (kw == "vars") {
                d.vars = ident_list();
                d.vars_declared = true;
            } else if (kw == "unknowns") {
                d.unknowns = ident_list();
                d.unknowns_declared = true;
            } else if (kw == "params") {
                auto v = ident_list();
                d.params.insert(d.params.end(), v.begin(), v.end());
            } else if (kw == "functions") {
                auto v = ident_list();
                d.functions.insert(d.functions.end(), v.begin(), v.end());
            } else if (kw == "let") {
                std::string name = ident();
                expect("=");
                d.lets.emplace_back(name, expr());
            } else if (kw == "assume") {
                d.assumptions.push_back(condition());
            } else if (kw == "order") {
                d.order = ident();
            } else if (kw == "priority") {
                if (peek().type != Token::Number) fail({"integer"});
                while (peek().type == Token::Number) {
                    const Token& n = next();
                    if (n.value.get_den() != 1 || n.value > 64) throw ParseError("bad priority entry", n.span, {});
                    d.priority.push_back(static_cast<int>(n.value.get_num().get_si()));
                }
            } else if (kw == "case") {
                std::string name = ident();
                expect(":");
                std::vector<Condition> cs{condition()};
                while (is(",")) {
                    next();
                    cs.push_back(condition());
                }
                d.cases.emplace_back(name, std::move(cs));
            }
            expect(";");
            return;
        }
        Equation e;
        e.span = t.span;
        if (t.type == Token::Ident && is(":", 1)) {
            e.label = next().text;
            next();
        }
        e.lhs = expr();
        expect("=");
        e.rhs = expr();
        expect(";");
        d.equations.push_back(std::move(e));
    }

    Condition condition() {
        Condition c;
        c.span = peek().span;
        c.lhs = expr();
        if (is("!=")) {
            c.nonzero = true;
        } else if (!is("=")) {
            fail({"'='", "'!='"});
        }
        next();
        c.rhs = expr();
        return c;
    }

    std::shared_ptr<Expr> make(Expr::Kind k, Span s, ExprPtr a = nullptr, ExprPtr b = nullptr) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->span = s;
        e->a = std::move(a);
        e->b = std::move(b);
        return e;
    }

    struct DepthGuard {
        Parser& p;
        explicit DepthGuard(Parser& q) : p(q) {
            if (++p.depth_ > kMaxDepth) throw ParseError("expression nested too deeply", p.peek().span, {});
        }
        ~DepthGuard() { --p.depth_; }
    };

    ExprPtr expr() {
        DepthGuard g(*this);
        ExprPtr e = term();
        while (is("+") || is("-")) {
            Span s = peek().span;
            Expr::Kind k = next().text == "+" ? Expr::Add : Expr::Sub;
            e = make(k, s, e, term());
        }
        return e;
    }

    ExprPtr term() {
        ExprPtr e = unary();
        while (is("*") || is("/")) {
            Span s = peek().span;
            Expr::Kind k = next().text == "*" ? Expr::Mul : Expr::Div;
            e = make(k, s, e, unary());
        }
        return e;
    }

    ExprPtr unary() {
        if (is("-")) {
            DepthGuard g(*this);
            Span s = next().span;
            return make(Expr::Neg, s, unary());
        }
        if (is("+")) {
            DepthGuard g(*this);
            next();
            return unary();
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (!is("^")) return base;
        Span s = next().span;
        bool neg = false;
        if (is("-")) {
            next();
            neg = true;
        }
        if (peek().type != Token::Number) fail({"integer exponent"});
        const Token& n = next();
        if (n.value.get_den() != 1 || n.value > kMaxExponent)
            throw ParseError("exponent must be an integer of at most " + std::to_string(kMaxExponent), n.span, {});
        auto e = make(Expr::Pow, s, base);
        e->exponent = static_cast<int>(n.value.get_num().get_si()) * (neg ? -1 : 1);
        return e;
    }

    ExprPtr atom() {
        const Token& t = peek();
        if (t.type == Token::Number) {
            auto e = make(Expr::Num, t.span);
            e->num = t.value;
            next();
            return e;
        }
        if (is("(")) {
            next();
            ExprPtr e = expr();
            expect(")");
            return e;
        }
        if (t.type == Token::Ident) {
            if (is_deriv_name(t.text) && is("(", 1)) {
                auto e = make(Expr::Deriv, t.span);
                if (t.text.size() - 1 > static_cast<size_t>(kMaxDerivOrder))
                    throw IndexOutOfRange("derivative order too large", t.span);
                for (size_t k = 1; k < t.text.size(); ++k) e->indices.push_back(t.text[k] - '0');
                next();
                expect("(");
                e->a = expr();
                expect(")");
                return e;
            }
            if (t.text == "d" && is("(", 1)) {
                auto e = make(Expr::Deriv, t.span);
                next();
                next();
                while (true) {
                    if (peek().type != Token::Number) fail({"variable index"});
                    const Token& n = next();
                    if (n.value.get_den() != 1 || n.value > 99) throw IndexOutOfRange("bad variable index", n.span);
                    e->indices.push_back(static_cast<int>(n.value.get_num().get_si()));
                    if (e->indices.size() > static_cast<size_t>(kMaxDerivOrder))
                        throw IndexOutOfRange("derivative order too large", n.span);
                    if (is(",")) {
                        next();
                        continue;
                    }
                    break;
                }
                expect(")");
                expect("(");
                e->a = expr();
                expect(")");
                return e;
            }
            auto e = make(Expr::Ident, t.span);
            e->name = t.text;
            next();
            return e;
        }
        fail({"number", "identifier", "'('", "'-'"});
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
    int depth_ = 0;
};

void collect_idents(const ExprPtr& e, std::vector<std::string>& out) {
    if (!e) return;
    if (e->kind == Expr::Ident) {
        if (std::find(out.begin(), out.end(), e->name) == out.end()) out.push_back(e->name);
        return;
    }
    collect_idents(e->a, out);
    collect_idents(e->b, out);
}

void max_deriv_index(const ExprPtr& e, int& m) {
    if (!e) return;
    if (e->kind == Expr::Deriv)
        for (int i : e->indices) m = std::max(m, i);
    max_deriv_index(e->a, m);
    max_deriv_index(e->b, m);
}

bool is_x_var(const std::string& s) {
    return s.size() >= 2 && s.size() <= 3 && s[0] == 'x' &&
           std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
           s[1] != '0';
}

// ---- elaboration ----

struct Lin {
    RatFunc c;
    Row r;
};

class Elaborator {
public:
    Elaborator(const Document& d, FieldPtr f, std::vector<std::string> unknowns)
        : doc_(d), field_(std::move(f)), unknowns_(std::move(unknowns)) {
        for (auto& [name, e] : doc_.lets) lets_[name] = e;
    }

    void substitute(const std::string& param, RatFunc v) {
        subst_[param] = std::move(v);
        cache_.clear();
    }

    bool resolvable(const std::string& name) const {
        return lets_.count(name) || field_->lookup(name) ||
               std::find(unknowns_.begin(), unknowns_.end(), name) != unknowns_.end();
    }

    Lin eval(const Expr& e) {
        switch (e.kind) {
        case Expr::Num: return {RatFunc(e.num), {}};
        case Expr::Ident: return ident(e);
        case Expr::Neg: {
            Lin a = eval(*e.a);
            return {-a.c, -a.r};
        }
        case Expr::Add:
        case Expr::Sub: {
            Lin a = eval(*e.a), b = eval(*e.b);
            if (e.kind == Expr::Sub) return {a.c - b.c, a.r - b.r};
            return {a.c + b.c, a.r + b.r};
        }
        case Expr::Mul: {
            Lin a = eval(*e.a), b = eval(*e.b);
            if (!a.r.is_zero() && !b.r.is_zero())
                throw LinearityError("product of two expressions involving unknowns", e.span);
            if (a.r.is_zero()) return {a.c * b.c, b.r.scaled(a.c)};
            return {a.c * b.c, a.r.scaled(b.c)};
        }
        case Expr::Div: {
            Lin a = eval(*e.a), b = eval(*e.b);
            if (!b.r.is_zero()) throw LinearityError("division by an expression involving unknowns", e.span);
            if (b.c.is_zero()) throw DslError("division by zero", e.span);
            RatFunc inv = b.c.inverse();
            return {a.c * inv, a.r.scaled(inv)};
        }
        case Expr::Pow: {
            Lin a = eval(*e.a);
            if (e.exponent == 1) return a;
            if (!a.r.is_zero()) throw LinearityError("power of an expression involving unknowns", e.span);
            if (e.exponent < 0 && a.c.is_zero()) throw DslError("division by zero", e.span);
            return {a.c.pow(e.exponent), {}};
        }
        case Expr::Deriv: {
            MultiIndex mu{};
            for (int i : e.indices) {
                if (i < 1 || i > field_->n())
                    throw IndexOutOfRange("derivative index " + std::to_string(i) + " outside 1.." +
                                              std::to_string(field_->n()),
                                          e.span);
                ++mu[i - 1];
            }
            Lin a = eval(*e.a);
            RatFunc c = a.c;
            for (int i : e.indices) c = c.derive(i - 1);
            return {c, a.r.is_zero() ? Row() : prolong(mu, a.r)};
        }
        }
        throw DslError("malformed expression", e.span);
    }

    // Evaluate every let once so unused bad definitions are still reported.
    void force_lets() {
        for (auto& [name, e] : doc_.lets) {
            Expr id{};
            id.kind = Expr::Ident;
            id.name = name;
            id.span = e->span;
            ident(id);
        }
    }

    RatFunc pure(const Expr& e, const char* what) {
        Lin l = eval(e);
        if (!l.r.is_zero()) throw LinearityError(std::string(what) + " may not involve unknowns", e.span);
        return l.c;
    }

private:
    Lin ident(const Expr& e) {
        const std::string& n = e.name;
        if (auto it = lets_.find(n); it != lets_.end()) {
            if (auto c = cache_.find(n); c != cache_.end()) return c->second;
            if (active_.count(n)) throw DslError("recursive definition of '" + n + "'", e.span);
            active_.insert(n);
            Lin v = eval(*it->second);
            active_.erase(n);
            cache_[n] = v;
            return v;
        }
        auto u = std::find(unknowns_.begin(), unknowns_.end(), n);
        if (u != unknowns_.end()) return {RatFunc(), Row::unit(static_cast<std::uint16_t>(u - unknowns_.begin()))};
        if (auto s = subst_.find(n); s != subst_.end()) return {s->second, {}};
        if (auto s = field_->lookup(n)) return {RatFunc(Polynomial::symbol(*s)), {}};
        throw UnknownIdentifier("unknown identifier '" + n + "'", e.span);
    }

    const Document& doc_;
    FieldPtr field_;
    std::vector<std::string> unknowns_;
    std::map<std::string, ExprPtr> lets_;
    std::map<std::string, RatFunc> subst_;
    std::map<std::string, Lin> cache_;
    std::set<std::string> active_;
};

void check_duplicates(const Document& d) {
    std::set<std::string> seen;
    auto add = [&](const std::string& s) {
        if (kKeywords.count(s)) throw DslError("'" + s + "' is a reserved word", {});
        if (is_deriv_name(s) || s == "d") throw DslError("'" + s + "' clashes with derivative notation", {});
        if (!seen.insert(s).second) throw DslError("'" + s + "' declared twice", {});
    };
    for (auto* v : {&d.vars, &d.unknowns, &d.params, &d.functions})
        for (auto& s : *v) add(s);
    for (auto& [s, e] : d.lets) add(s);
}

}  // namespace

std::vector<std::string> Document::case_names() const {
    std::vector<std::string> v;
    for (auto& c : cases) v.push_back(c.first);
    return v;
}

Document parse(const std::string& text) {
    Parser p(text);
    Document d = p.document();
    check_duplicates(d);
    return d;
}

void add_assumptions(Document& doc, const std::vector<std::string>& conditions) {
    for (auto& c : conditions) {
        Parser p(c);
        doc.assumptions.push_back(p.standalone_condition());
    }
}

void System::apply_assumptions(Context& ctx) const {
    for (auto& e : nonzero) ctx.assume_nonzero(e);
    for (auto& e : vanishing) ctx.assume_zero(e);
}

System elaborate(const Document& doc, const std::string& case_name) {
    System sys;
    sys.name = doc.name;
    sys.case_name = case_name;
    sys.order = parse_mono_order(doc.order);

    std::vector<std::string> idents;
    for (auto& [n, e] : doc.lets) collect_idents(e, idents);
    for (auto& eq : doc.equations) {
        collect_idents(eq.lhs, idents);
        collect_idents(eq.rhs, idents);
    }
    for (auto& c : doc.assumptions) {
        collect_idents(c.lhs, idents);
        collect_idents(c.rhs, idents);
    }

    std::vector<std::string> vars = doc.vars;
    if (!doc.vars_declared) {
        int n = 0;
        for (auto& s : idents)
            if (is_x_var(s)) n = std::max(n, std::stoi(s.substr(1)));
        for (auto& [name, e] : doc.lets) max_deriv_index(e, n);
        for (auto& eq : doc.equations) {
            max_deriv_index(eq.lhs, n);
            max_deriv_index(eq.rhs, n);
        }
        if (n > kMaxVars) throw IndexOutOfRange("more than " + std::to_string(kMaxVars) + " variables", {});
        n = std::max(n, 1);
        for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
    }
    if (vars.size() > static_cast<size_t>(kMaxVars))
        throw IndexOutOfRange("more than " + std::to_string(kMaxVars) + " variables", {});
    sys.field = std::make_shared<DiffField>(vars, doc.params, doc.functions);
    const DiffField& F = *sys.field;

    std::set<std::string> known(vars.begin(), vars.end());
    known.insert(doc.params.begin(), doc.params.end());
    known.insert(doc.functions.begin(), doc.functions.end());
    for (auto& [n, e] : doc.lets) known.insert(n);

    std::vector<std::string> unknowns = doc.unknowns;
    if (!doc.unknowns_declared) {
        std::vector<std::string> lhs;
        for (auto& eq : doc.equations) collect_idents(eq.lhs, lhs);
        for (auto& s : lhs)
            if (!known.count(s) && std::find(unknowns.begin(), unknowns.end(), s) == unknowns.end())
                unknowns.push_back(s);
    }
    for (auto& u : unknowns)
        if (known.count(u)) throw DslError("'" + u + "' declared twice", {});

    Elaborator el(doc, sys.field, unknowns);

    std::vector<const Condition*> conds;
    for (auto& c : doc.assumptions) conds.push_back(&c);
    if (!case_name.empty()) {
        auto it = std::find_if(doc.cases.begin(), doc.cases.end(), [&](auto& c) { return c.first == case_name; });
        if (it == doc.cases.end()) throw UnknownIdentifier("unknown case '" + case_name + "'", {});
        for (auto& c : it->second) conds.push_back(&c);
    }
    // substitutions first, so later conditions see them
    std::vector<const Condition*> rest;
    for (auto* c : conds) {
        if (!c->nonzero && c->lhs->kind == Expr::Ident) {
            auto s = F.lookup(c->lhs->name);
            if (s && sym::kind(*s) == SymKind::param) {
                el.substitute(c->lhs->name, el.pure(*c->rhs, "assumed value"));
                continue;
            }
        }
        rest.push_back(c);
    }
    for (auto* c : rest) {
        RatFunc v = el.pure(*c->lhs, "assumption") - el.pure(*c->rhs, "assumption");
        if (c->nonzero) {
            if (v.is_zero()) throw DslError("assumption states 0 != 0", c->span);
            sys.nonzero.push_back(v);
        } else if (!v.is_zero()) {
            if (v.is_constant()) throw DslError("assumption states a nonzero constant vanishes", c->span);
            sys.vanishing.push_back(v);
        }
    }

    el.force_lets();
    OpMatrix A(F.n(), unknowns.size());
    A.col_labels = unknowns;
    std::set<std::string> labels;
    for (size_t i = 0; i < doc.equations.size(); ++i) {
        auto& eq = doc.equations[i];
        Lin l = el.eval(*eq.lhs);
        std::string label = eq.label;
        if (eq.rhs->kind == Expr::Ident && !el.resolvable(eq.rhs->name)) {
            label = eq.rhs->name;
        } else {
            Lin r = el.eval(*eq.rhs);
            l.c -= r.c;
            l.r -= r.r;
        }
        if (!l.c.is_zero())
            throw AffineTermError("equation has a term free of unknowns: " + F.str(l.c), eq.span);
        if (label.empty()) label = default_label("E", i);
        if (!labels.insert(label).second) throw DslError("second member '" + label + "' used twice", eq.span);
        A.rows.push_back(std::move(l.r));
        A.row_labels.push_back(label);
    }
    sys.op = std::move(A);
    if (!doc.priority.empty()) {
        if (static_cast<int>(doc.priority.size()) != F.n())
            throw IndexOutOfRange("priority must list all " + std::to_string(F.n()) + " variables", {});
        try {
            sys.priority = priority_from_listing(doc.priority);
        } catch (const std::invalid_argument& e) {
            throw IndexOutOfRange(e.what(), {});
        }
    }
    return sys;
}

System load(const std::string& text, const std::string& case_name) { return elaborate(parse(text), case_name); }

System load_file(const std::string& path, const std::string& case_name) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load(ss.str(), case_name);
}

std::string render(const System& s) {
    const DiffField& F = *s.field;
    std::ostringstream o;
    auto list = [&](const char* kw, const std::vector<std::string>& v) {
        if (v.empty()) return;
        o << kw << " ";
        for (size_t i = 0; i < v.size(); ++i) o << (i ? ", " : "") << v[i];
        o << ";\n";
    };
    if (!s.name.empty()) o << "system " << s.name << ";\n";
    list("vars", F.vars());
    list("params", F.params());
    list("functions", F.functions());
    list("unknowns", s.op.col_names());
    for (auto& e : s.nonzero) o << "assume " << F.str(e) << " != 0;\n";
    for (auto& e : s.vanishing) o << "assume " << F.str(e) << " = 0;\n";
    if (s.order != MonoOrder::degrevlex) o << "order " << to_string(s.order) << ";\n";
    if (!s.priority.empty()) {
        o << "priority";
        for (auto it = s.priority.rbegin(); it != s.priority.rend(); ++it) o << " " << *it + 1;
        o << ";\n";
    }
    std::set<std::string> taken(F.vars().begin(), F.vars().end());
    taken.insert(F.params().begin(), F.params().end());
    taken.insert(F.functions().begin(), F.functions().end());
    for (auto& c : s.op.col_names()) taken.insert(c);
    auto names = s.op.row_names();
    for (size_t i = 0; i < s.op.nrows(); ++i) {
        std::string body = s.op.row_string(F, i);
        if (taken.count(names[i])) o << names[i] << ": " << body << " = 0;\n";
        else o << body << " = " << names[i] << ";\n";
    }
    return o.str();
}

RatFunc parse_coefficient(const std::string& text, const DiffField& field) {
    Parser p(text);
    ExprPtr e = p.standalone_expr();
    Document d;
    FieldPtr f(std::shared_ptr<const DiffField>(), &field);
    Elaborator el(d, f, {});
    return el.pure(*e, "coefficient");
}

}  // namespace orekit::dsl
