#include "orekit/duality.hpp"

#include <algorithm>

namespace orekit {

namespace {

// Run f on a copy of ctx with an empty proviso list, so that the provisos it
// relies on are reported even when ctx already holds them; they are then
// recorded in ctx as well.
template <class F>
auto tracking_provisos(Context& ctx, std::vector<Proviso>& used, F&& f) {
    Context local = ctx;
    local.clear_provisos();
    auto result = f(local);
    used = local.provisos();
    for (auto& p : used) ctx.check_pivot(RatFunc(p.factor), p.where.c_str());
    return result;
}

}  // namespace

OpMatrix stack(const std::vector<const OpMatrix*>& parts) {
    OpMatrix out;
    for (auto* p : parts) {
        if (out.cols == 0 && out.rows.empty()) {
            out.n = p->n;
            out.cols = p->cols;
            out.col_labels = p->col_labels;
        }
        if (p->cols != out.cols) throw DimensionMismatch("stacking matrices with different column counts");
        out.n = std::max(out.n, p->n);
        auto names = p->row_names();
        for (size_t i = 0; i < p->nrows(); ++i) {
            out.rows.push_back(p->rows[i]);
            out.row_labels.push_back(names[i]);
        }
    }
    return out;
}

static std::vector<Row> nonzero_rows(const OpMatrix& A) {
    std::vector<Row> r;
    for (auto& row : A.rows)
        if (!row.is_zero()) r.push_back(row);
    return r;
}

DoubleDuality double_duality_test(Context& ctx, const OpMatrix& D1) {
    DoubleDuality dd;
    dd.adjoint = adjoint(D1);
    dd.cc_of_adjoint = compatibility_conditions(ctx, dd.adjoint);
    dd.parametrizing = adjoint(dd.cc_of_adjoint);
    dd.parametrizing.cols = dd.cc_of_adjoint.nrows();
    dd.parametrizing.rows.resize(D1.cols);
    dd.parametrizing.col_labels.clear();
    for (size_t k = 0; k < dd.parametrizing.cols; ++k) dd.parametrizing.col_labels.push_back(default_label("phi", k));
    dd.parametrizing.row_labels = D1.col_names();
    if (dd.parametrizing.cols == 0) {
        dd.recovered = OpMatrix::identity(D1.n, D1.cols);
    } else {
        dd.recovered = compatibility_conditions(ctx, dd.parametrizing);
    }
    dd.recovered.col_labels = D1.col_names();
    auto gens = nonzero_rows(D1);
    if (gens.empty()) {
        dd.extra = nonzero_rows(dd.recovered);
    } else {
        JanetBasis B = JanetBasis::complete(ctx, gens, D1.cols, TermOrder(D1.n));
        for (auto& r : dd.recovered.rows)
            if (!B.reduces_to_zero(r)) dd.extra.push_back(r);
    }
    dd.torsion_free = dd.extra.empty();
    return dd;
}

Parametrization parametrize(Context& ctx, const OpMatrix& D1) {
    DoubleDuality dd = double_duality_test(ctx, D1);
    if (!dd.torsion_free) {
        std::vector<std::string> t;
        auto names = D1.col_names();
        for (auto& r : dd.extra) t.push_back(r.to_string(ctx.field(), names));
        throw NotParametrizable("operator has torsion and admits no parametrization", t);
    }
    Parametrization p;
    p.op = dd.parametrizing;
    p.potentials = static_cast<int>(p.op.cols);
    p.rank_bound = static_cast<int>(D1.cols) - differential_rank(ctx, D1);
    p.minimal = p.potentials == p.rank_bound;
    return p;
}

TorsionCertificate torsion_certificate(Context& ctx, const OpMatrix& A, const Row& element) {
    TorsionCertificate c;
    c.element = element;
    OpMatrix g(A.n, A.cols, {element});
    OpMatrix S = stack({&g, &A});
    OpMatrix C = compatibility_conditions(ctx, S);
    for (auto& r : C.rows) {
        ScalarOp a = r.restricted(0, 1);
        if (a.is_zero()) continue;
        c.annihilators.push_back(a);
        if (c.witness_op.is_zero()) {
            c.witness_op = a;
            for (size_t j = 0; j < A.nrows(); ++j)
                c.witness_coeffs.push_back(-r.restricted(static_cast<std::uint16_t>(j + 1), static_cast<std::uint16_t>(j + 2))
                                                .shifted(-static_cast<int>(j + 1)));
        }
    }
    return c;
}

bool verify_certificate(const OpMatrix& A, const TorsionCertificate& c) {
    if (c.witness_op.is_zero() || c.witness_coeffs.size() != A.nrows()) return false;
    Row lhs = apply(c.witness_op, c.element), rhs;
    for (size_t j = 0; j < A.nrows(); ++j) rhs += apply(c.witness_coeffs[j], A.rows[j]);
    return lhs == rhs;
}

std::vector<TorsionCertificate> torsion(Context& ctx, const OpMatrix& A) {
    DoubleDuality dd = double_duality_test(ctx, A);
    std::vector<TorsionCertificate> out;
    for (auto& r : dd.extra) out.push_back(torsion_certificate(ctx, A, r));
    return out;
}

KernelAnalysis kernel_analysis(Context& ctx, const OpMatrix& A) {
    KernelAnalysis k;
    auto rows = nonzero_rows(A);
    if (rows.empty()) return k;
    std::vector<Proviso> used;
    JanetBasis B = tracking_provisos(ctx, used, [&](Context& c) {
        return JanetBasis::complete(c, rows, A.cols, TermOrder(A.n));
    });
    std::vector<bool> zero(A.cols, false);
    for (auto& r : B.rows()) {
        k.basis.push_back(r.row);
        if (r.lead.order() == 0) zero[r.lead.comp] = true;
    }
    k.injective = std::all_of(zero.begin(), zero.end(), [](bool b) { return b; });
    for (auto& p : used) k.conditions.push_back(p.factor);
    k.conditional = k.injective && !k.conditions.empty();
    return k;
}

std::vector<OpMatrix> resolution(Context& ctx, const OpMatrix& A, int length) {
    std::vector<OpMatrix> R{A};
    while (static_cast<int>(R.size()) < length) {
        OpMatrix C = compatibility_conditions(ctx, R.back());
        if (C.nrows() == 0) break;
        R.push_back(std::move(C));
    }
    return R;
}

static ExtResult ext_impl(Context& ctx, const std::vector<OpMatrix>& R, int i) {
    ExtResult e;
    e.i = i;
    const int len = static_cast<int>(R.size());
    if (i < 0 || i > len) return e;
    const OpMatrix& A = R.front();
    e.ambient = i == 0 ? A.cols : R[i - 1].nrows();
    if (e.ambient == 0) return e;
    if (i > 0) e.boundaries = nonzero_rows(adjoint(R[i - 1]));
    if (i < len) {
        OpMatrix ad = adjoint(R[i]);
        e.cycles = compatibility_conditions(ctx, ad).rows;
    } else {
        e.cycles = OpMatrix::identity(A.n, e.ambient).rows;
    }
    if (e.boundaries.empty()) {
        e.generators = e.cycles;
    } else {
        JanetBasis B = JanetBasis::complete(ctx, e.boundaries, e.ambient, TermOrder(A.n));
        for (auto& r : e.cycles) {
            Row nf = B.normal_form(r);
            if (!nf.is_zero()) e.generators.push_back(nf);
        }
    }
    // Drop residues generated by the image and the remaining residues, so
    // that d1(u3) is not listed next to u3.
    for (size_t k = e.generators.size(); k-- > 0 && e.generators.size() > 1;) {
        std::vector<Row> others = e.boundaries;
        for (size_t j = 0; j < e.generators.size(); ++j)
            if (j != k) others.push_back(e.generators[j]);
        JanetBasis B = JanetBasis::complete(ctx, others, e.ambient, TermOrder(A.n));
        if (B.reduces_to_zero(e.generators[k])) e.generators.erase(e.generators.begin() + static_cast<long>(k));
    }
    e.vanishes = e.generators.empty();
    return e;
}

ExtResult ext(Context& ctx, const std::vector<OpMatrix>& R, int i) {
    std::vector<Proviso> used;
    ExtResult e = tracking_provisos(ctx, used, [&](Context& c) { return ext_impl(c, R, i); });
    e.provisos = used;
    return e;
}

ExtResult ext(Context& ctx, const OpMatrix& A, int i) {
    return ext(ctx, resolution(ctx, A, std::max(A.n + 2, i + 1)), i);
}

long euler_rank(const std::vector<OpMatrix>& R) {
    if (R.empty()) return 0;
    long s = static_cast<long>(R.front().cols), sign = -1;
    for (auto& r : R) {
        s += sign * static_cast<long>(r.nrows());
        sign = -sign;
    }
    return s;
}

}  // namespace orekit
