// Shared helpers for the unit tests and the acceptance driver: random
// operators, sections and systems, plus the randomized property suites.
#ifndef OREKIT_TESTS_SUPPORT_HPP
#define OREKIT_TESTS_SUPPORT_HPP

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "orekit/dsl.hpp"
#include "orekit/duality.hpp"

#ifndef OREKIT_CORPUS_DIR
#define OREKIT_CORPUS_DIR "corpus"
#endif

namespace orekit::testing {

inline std::string corpus_path(const std::string& stem) { return std::string(OREKIT_CORPUS_DIR) + "/" + stem + ".dms"; }

inline std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline dsl::System corpus_system(const std::string& stem, const std::string& case_name = "") {
    return dsl::load_file(corpus_path(stem), case_name);
}

inline const std::vector<std::string>& corpus_stems() {
    static const std::vector<std::string> s{
        "contact_phi",  "ex1_6",        "ex1_7",     "ex1_8",          "ex2_a7",           "ex2_a8",
        "ex3_1",        "ex3_2",        "ex3_5_flat", "ex3_5_permuted", "ex3_5_unimodular", "intro_control",
        "killing2",     "killing3",     "medolaghi_c0", "medolaghi_c1", "medolaghi_cc_two"};
    return s;
}

// Operator matrix written in the system language with the given unknowns,
// e.g. op_from("vars x1,x2; unknowns u,v;", "d1(u) - v = A;").
inline OpMatrix op_from(const std::string& header, const std::string& equations) {
    return dsl::load(header + "\n" + equations).op;
}

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin(int percent = 50) { return uniform(0, 99) < percent; }

    mpq_class rational(int range = 3) {
        int num = 0;
        while (num == 0) num = uniform(-range, range);
        mpq_class q(num, coin(80) ? 1 : uniform(1, 3));
        q.canonicalize();
        return q;
    }

    Polynomial polynomial(const DiffField& F, int degree, int terms) {
        Polynomial p;
        for (int t = 0; t < terms; ++t) {
            Monomial m;
            int d = uniform(0, degree);
            for (int k = 0; k < d; ++k) m = m * Monomial(F.var(uniform(0, F.n() - 1)));
            p += Polynomial::term(m, rational());
        }
        return p;
    }

    // Mostly constants and low degree polynomials, sometimes a quotient.
    RatFunc coefficient(const DiffField& F, bool allow_fraction = true) {
        int kind = uniform(0, 9);
        if (kind < 5) return RatFunc(rational());
        Polynomial num = polynomial(F, 1, 2);
        if (num.is_zero()) num = Polynomial(1);
        if (allow_fraction && kind == 9) {
            Polynomial den = Polynomial::symbol(F.var(uniform(0, F.n() - 1))) + Polynomial(uniform(1, 3));
            return RatFunc(num, den);
        }
        return RatFunc(num);
    }

    MultiIndex index(int n, int max_order) {
        MultiIndex mu{};
        int o = uniform(0, max_order);
        for (int k = 0; k < o; ++k) mu[static_cast<size_t>(uniform(0, n - 1))]++;
        return mu;
    }

    Row row(const DiffField& F, size_t m, int max_order, int terms, bool fractions = true) {
        Row r;
        for (int t = 0; t < terms; ++t)
            r += Row::unit(static_cast<std::uint16_t>(uniform(0, static_cast<int>(m) - 1)), index(F.n(), max_order),
                           coefficient(F, fractions));
        return r;
    }

    ScalarOp scalar(const DiffField& F, int max_order, int terms) { return row(F, 1, max_order, terms); }

    OpMatrix matrix(const DiffField& F, size_t p, size_t m, int max_order, int terms, bool fractions = true) {
        std::vector<Row> rows;
        for (size_t i = 0; i < p; ++i) rows.push_back(row(F, m, max_order, terms, fractions));
        return OpMatrix(F.n(), m, rows);
    }

    // Polynomial section of degree <= degree in x1..xn.
    std::vector<RatFunc> section(const DiffField& F, size_t m, int degree) {
        std::vector<RatFunc> s;
        for (size_t k = 0; k < m; ++k) s.emplace_back(polynomial(F, degree, uniform(1, 5)));
        return s;
    }

private:
    std::mt19937_64 rng_;
};

inline FieldPtr plain_field(int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
    return std::make_shared<const DiffField>(v);
}

struct PropertyResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    int skipped = 0;  // inputs abandoned on a budget limit
    std::string first_failure;

    bool ok() const { return failures == 0 && cases >= 100; }
    void fail(const std::string& why) {
        if (failures++ == 0) first_failure = why;
    }
};

// ad(ad P) = P, ad(PQ) = ad(Q) ad(P), (PQ)R = P(QR), and the matrix forms.
inline PropertyResult prop_adjoint(std::uint64_t seed, int cases = 150) {
    PropertyResult res{"adjoint involution and anti-homomorphism"};
    Gen g(seed);
    for (int c = 0; c < cases; ++c) {
        FieldPtr F = plain_field(g.uniform(1, 3));
        ScalarOp P = g.scalar(*F, 3, g.uniform(1, 4));
        ScalarOp Q = g.scalar(*F, 2, g.uniform(1, 4));
        ScalarOp R = g.scalar(*F, 2, g.uniform(1, 3));
        ++res.cases;
        std::vector<std::string> y{"y"};
        if (adjoint(adjoint(P)) != P) res.fail("ad(ad P) != P for P = " + P.to_string(*F, y));
        if (adjoint(op_mul(P, Q)) != op_mul(adjoint(Q), adjoint(P)))
            res.fail("ad(PQ) != ad(Q)ad(P) for P = " + P.to_string(*F, y) + ", Q = " + Q.to_string(*F, y));
        if (op_mul(op_mul(P, Q), R) != op_mul(P, op_mul(Q, R))) res.fail("op_mul not associative");
        size_t p = static_cast<size_t>(g.uniform(1, 3)), q = static_cast<size_t>(g.uniform(1, 3)),
               m = static_cast<size_t>(g.uniform(1, 3));
        OpMatrix A = g.matrix(*F, p, m, 2, 2), B = g.matrix(*F, q, p, 2, 2);
        if (!(adjoint(adjoint(A)) == A)) res.fail("ad(ad A) != A for a matrix");
        if (!(adjoint(compose(B, A)) == compose(adjoint(A), adjoint(B)))) res.fail("ad(BA) != ad(A)ad(B)");
    }
    return res;
}

// Small random systems with polynomial coefficients; abandons inputs that
// hit the completion budget.
inline bool random_system(Gen& g, FieldPtr& F, OpMatrix& A) {
    F = plain_field(g.uniform(1, 3));
    size_t m = static_cast<size_t>(g.uniform(1, 2));
    size_t p = static_cast<size_t>(g.uniform(1, 3));
    A = g.matrix(*F, p, m, 2, g.uniform(1, 3), false);
    // at most one variable coefficient so completion stays small
    int variable = 0;
    for (auto& r : A.rows)
        for (auto& t : r.terms())
            if (!t.second.is_constant()) ++variable;
    return variable <= 1 && !A.is_zero();
}

// CC(A) A = 0 exactly, and on random polynomial sections of degree <= 4:
// CC(A)(A s) = 0 and (BA) s = B(A s).
inline PropertyResult prop_cc_compose(std::uint64_t seed, int want = 120) {
    PropertyResult res{"compose-zero of CC pairs and section oracle"};
    Gen g(seed);
    for (int attempt = 0; res.cases < want && attempt < want * 20; ++attempt) {
        FieldPtr F;
        OpMatrix A;
        if (!random_system(g, F, A)) continue;
        Context ctx(F, PivotPolicy::record);
        ctx.budget().max_steps = 400;
        ctx.budget().max_coeff_degree = 12;
        OpMatrix C;
        try {
            C = compatibility_conditions(ctx, A);
        } catch (const ResourceLimit&) {
            ++res.skipped;
            continue;
        }
        ++res.cases;
        if (!compose(C, A).is_zero()) {
            res.fail("CC(A) A != 0 for A = " + A.row_string(*F, 0));
            continue;
        }
        for (int s = 0; s < 2; ++s) {
            auto sec = g.section(*F, A.cols, 4);
            auto As = apply_to_section(A, sec);
            if (C.nrows() > 0) {
                for (auto& v : apply_to_section(C, As))
                    if (!v.is_zero()) res.fail("CC(A)(A s) != 0");
            }
            OpMatrix B = g.matrix(*F, static_cast<size_t>(g.uniform(1, 2)), A.nrows(), 2, 2);
            if (apply_to_section(compose(B, A), sec) != apply_to_section(B, As)) res.fail("(BA)s != B(As)");
        }
    }
    return res;
}

// Normal forms against a Janet basis: members reduce to zero, nf is
// idempotent and r - nf(r) is a member; the Janet criterion holds and no
// lead divides another involutively.
inline PropertyResult prop_normal_form(std::uint64_t seed, int want = 120) {
    PropertyResult res{"involutive normal form idempotence and membership"};
    Gen g(seed);
    for (int attempt = 0; res.cases < want && attempt < want * 20; ++attempt) {
        FieldPtr F;
        OpMatrix A;
        if (!random_system(g, F, A)) continue;
        Context ctx(F, PivotPolicy::record);
        ctx.budget().max_steps = 400;
        ctx.budget().max_coeff_degree = 12;
        TermOrder ord(F->n());
        std::vector<Row> rows;
        for (auto& r : A.rows)
            if (!r.is_zero()) rows.push_back(r);
        std::optional<JanetBasis> B;
        try {
            B.emplace(JanetBasis::complete(ctx, rows, A.cols, ord));
        } catch (const ResourceLimit&) {
            ++res.skipped;
            continue;
        }
        ++res.cases;
        // D-combination of the inputs
        Row L;
        for (auto& r : rows) L += apply(g.scalar(*F, 2, 2), r);
        if (!B->reduces_to_zero(L)) res.fail("combination of the inputs does not reduce to zero");
        for (auto& r : rows)
            if (!B->reduces_to_zero(r)) res.fail("input row does not reduce to zero");
        Row r = g.row(*F, A.cols, 3, 4, false);
        Row nf = B->normal_form(r);
        if (B->normal_form(nf) != nf) res.fail("normal form not idempotent");
        if (!B->reduces_to_zero(r - nf)) res.fail("r - nf(r) not in the module");
        for (auto& t : nf.terms())
            for (size_t k = 0; k < B->size(); ++k) {
                const Jet& lead = B->rows()[k].lead;
                if (lead.comp != t.first.comp || !divides(lead.mu, t.first.mu)) continue;
                MultiIndex q = t.first.mu - lead.mu;
                bool mult = true;
                for (int v = 0; v < F->n(); ++v)
                    if (q[static_cast<size_t>(v)] && !B->is_multiplicative(k, v)) mult = false;
                if (mult) res.fail("normal form keeps an involutively reducible term");
            }
        for (size_t k = 0; k < B->size(); ++k) {
            for (int v = 0; v < F->n(); ++v)
                if (!B->is_multiplicative(k, v) && !B->reduces_to_zero(d_times(v, B->rows()[k].row)))
                    res.fail("Janet criterion fails");
            for (size_t j = 0; j < B->size(); ++j) {
                if (j == k) continue;
                const Jet &a = B->rows()[j].lead, &b = B->rows()[k].lead;
                if (a.comp != b.comp || !divides(a.mu, b.mu)) continue;
                MultiIndex q = b.mu - a.mu;
                bool mult = true;
                for (int v = 0; v < F->n(); ++v)
                    if (q[static_cast<size_t>(v)] && !B->is_multiplicative(j, v)) mult = false;
                if (mult) res.fail("basis not autoreduced");
            }
        }
    }
    return res;
}

// render/load round trip on random systems, and the parser on random bytes
// and mutated corpus files: only orekit errors, spans inside the text.
inline PropertyResult prop_parser(std::uint64_t seed, int cases = 200) {
    PropertyResult res{"parser round trip and fuzz"};
    Gen g(seed);
    for (int c = 0; c < cases / 2; ++c) {
        FieldPtr F;
        OpMatrix A;
        F = plain_field(g.uniform(1, 4));
        A = g.matrix(*F, static_cast<size_t>(g.uniform(1, 3)), static_cast<size_t>(g.uniform(1, 3)), 3, 3);
        dsl::System s;
        s.name = "random";
        s.field = F;
        s.op = A;
        ++res.cases;
        try {
            dsl::System back = dsl::load(dsl::render(s));
            if (!(back.op == A)) res.fail("round trip changed the matrix:\n" + dsl::render(s));
        } catch (const std::exception& e) {
            res.fail(std::string("round trip threw ") + e.what() + "\n" + dsl::render(s));
        }
    }
    std::vector<std::string> seeds;
    for (auto& stem : corpus_stems()) seeds.push_back(read_text(corpus_path(stem)));
    const std::string alphabet = "abcdxyuv0123456789_;:,()+-*/^=! \n#dlet";
    for (int c = 0; c < cases; ++c) {
        std::string text;
        if (c % 4 == 0) {
            int len = g.uniform(0, 80);
            for (int k = 0; k < len; ++k) text.push_back(static_cast<char>(g.uniform(0, 255)));
        } else {
            text = seeds[static_cast<size_t>(g.uniform(0, static_cast<int>(seeds.size()) - 1))];
            int edits = g.uniform(1, 6);
            for (int k = 0; k < edits && !text.empty(); ++k) {
                size_t pos = static_cast<size_t>(g.uniform(0, static_cast<int>(text.size()) - 1));
                switch (g.uniform(0, 2)) {
                    case 0: text.erase(pos, static_cast<size_t>(g.uniform(1, 4))); break;
                    case 1: text.insert(pos, 1, alphabet[static_cast<size_t>(g.uniform(0, static_cast<int>(alphabet.size()) - 1))]); break;
                    default: text[pos] = static_cast<char>(g.uniform(32, 126));
                }
            }
        }
        ++res.cases;
        try {
            dsl::System s = dsl::load(text);
            (void)s;
        } catch (const dsl::DslError& e) {
            if (e.span().offset > text.size() || e.span().offset + e.span().length > text.size() + 1)
                res.fail(std::string("span outside the text for ") + e.kind());
        } catch (const Error&) {
        } catch (const std::exception& e) {
            res.fail(std::string("foreign exception: ") + e.what());
        }
    }
    return res;
}

}  // namespace orekit::testing

#endif
