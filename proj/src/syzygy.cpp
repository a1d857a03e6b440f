#include "orekit/syzygy.hpp"

#include <algorithm>

namespace orekit {

AugmentedBasis augmented_completion(Context& ctx, const OpMatrix& A, MonoOrder kind) {
    const size_t m = A.cols, p = A.nrows();
    std::vector<Row> aug;
    for (size_t t = 0; t < p; ++t) aug.push_back(A.rows[t] + Row::unit(static_cast<std::uint16_t>(m + t)));
    TermOrder ord(A.n, kind);
    std::vector<int> block(m + p, 1);
    for (size_t k = 0; k < m; ++k) block[k] = 0;
    ord.set_component_blocks(block);
    JanetBasis B = JanetBasis::complete(ctx, aug, m + p, ord);
    AugmentedBasis out;
    for (auto& r : B.rows()) {
        out.left.push_back(r.row.restricted(0, static_cast<std::uint16_t>(m)));
        out.right.push_back(r.row.restricted(static_cast<std::uint16_t>(m), static_cast<std::uint16_t>(m + p))
                                .shifted(-static_cast<int>(m)));
    }
    return out;
}

static bool generated_by(Context& ctx, int n, size_t cols, const std::vector<Row>& gens, const Row& r) {
    if (r.is_zero()) return true;
    if (gens.empty()) return false;
    JanetBasis B = JanetBasis::complete(ctx, gens, cols, TermOrder(n));
    return B.reduces_to_zero(r);
}

bool module_contains(Context& ctx, const OpMatrix& G, const OpMatrix& X) {
    if (G.cols != X.cols) throw DimensionMismatch("module comparison with different column counts");
    std::vector<Row> gens;
    for (auto& r : G.rows)
        if (!r.is_zero()) gens.push_back(r);
    if (gens.empty()) return X.is_zero();
    JanetBasis B = JanetBasis::complete(ctx, gens, G.cols, TermOrder(std::max(G.n, X.n)));
    for (auto& r : X.rows)
        if (!B.reduces_to_zero(r)) return false;
    return true;
}

bool module_equal(Context& ctx, const OpMatrix& G, const OpMatrix& H) {
    return module_contains(ctx, G, H) && module_contains(ctx, H, G);
}

OpMatrix minimize_generators(Context& ctx, const OpMatrix& G) {
    std::vector<Row> cand;
    for (auto& r : G.rows)
        if (!r.is_zero()) cand.push_back(r);
    TermOrder ord(G.n);
    std::stable_sort(cand.begin(), cand.end(), [&](const Row& a, const Row& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return ord.compare(ord.leading(a).first, ord.leading(b).first) < 0;
    });
    std::vector<Row> kept;
    for (auto& r : cand)
        if (!generated_by(ctx, G.n, G.cols, kept, r)) kept.push_back(r);
    for (size_t i = kept.size(); i-- > 0;) {
        std::vector<Row> others;
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        if (generated_by(ctx, G.n, G.cols, others, kept[i])) kept.erase(kept.begin() + static_cast<long>(i));
    }
    OpMatrix out(G.n, G.cols, std::move(kept));
    out.col_labels = G.col_labels;
    return out;
}

OpMatrix compatibility_conditions(Context& ctx, const OpMatrix& A, const CCOptions& opt) {
    AugmentedBasis aug = augmented_completion(ctx, A, opt.kind);
    OpMatrix C(A.n, A.nrows());
    for (size_t i = 0; i < aug.left.size(); ++i)
        if (aug.left[i].is_zero()) C.rows.push_back(aug.right[i]);
    C.col_labels = A.row_names();
    if (opt.minimize && C.nrows() > 1) C = minimize_generators(ctx, C);
    C.col_labels = A.row_names();
    for (size_t i = 0; i < C.nrows(); ++i) C.row_labels.push_back(default_label("C", i));
    return C;
}

int differential_rank(Context& ctx, const OpMatrix& A) {
    std::vector<Row> rows;
    for (auto& r : A.rows)
        if (!r.is_zero()) rows.push_back(r);
    if (rows.empty()) return 0;
    JanetBasis B = JanetBasis::complete(ctx, rows, A.cols, TermOrder(A.n));
    auto led = B.led_components();
    return static_cast<int>(std::count(led.begin(), led.end(), true));
}

DiffSequence build_sequence(Context& ctx, const OpMatrix& A, int max_steps, MonoOrder kind) {
    DiffSequence s;
    int cap = A.n + 1;
    if (max_steps >= 0) cap = std::min(cap, max_steps);
    s.ops.push_back(A);
    for (int i = 0; i < cap; ++i) {
        OpMatrix C = compatibility_conditions(ctx, s.ops.back(), {kind, true});
        if (C.nrows() == 0) {
            s.terminated = true;
            break;
        }
        s.ops.push_back(std::move(C));
    }
    bool strict = true, inv = true;
    for (auto& op : s.ops) {
        s.orders.push_back(op.order());
        SystemAnalysis a = analyze_system(ctx, op, kind);
        s.fi.push_back(a.formally_integrable);
        s.inv.push_back(a.involutive);
        strict = strict && a.formally_integrable;
        inv = inv && a.involutive;
    }
    s.flags.formally_exact = true;
    s.flags.strictly_exact = strict;
    s.flags.involutive = inv;
    return s;
}

}  // namespace orekit
