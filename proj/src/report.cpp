#include "orekit/report.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

namespace orekit::report {

namespace {

std::string policy_name(PivotPolicy p) { return p == PivotPolicy::strict ? "strict" : "record"; }

std::vector<std::string> mu_names(size_t m) {
    std::vector<std::string> v;
    for (size_t k = 0; k < m; ++k) v.push_back(default_label("mu", k));
    return v;
}

std::string jet_string(const Jet& j, const DiffField& F, const std::vector<std::string>& names) {
    return Row::unit(j.comp, j.mu).to_string(F, names);
}

// Scalar operators are shown acting on a placeholder t.
std::string scalar_string(const ScalarOp& P, const DiffField& F) { return P.to_string(F, {"t"}); }

// 0-based highest-first priority back to the DSL listing (1-based, lowest first).
std::vector<int> priority_listing(const std::vector<int>& prio) {
    std::vector<int> out;
    for (auto it = prio.rbegin(); it != prio.rend(); ++it) out.push_back(*it + 1);
    return out;
}

std::vector<Row> nonzero_rows(const OpMatrix& A) {
    std::vector<Row> r;
    for (auto& row : A.rows)
        if (!row.is_zero()) r.push_back(row);
    return r;
}

Json complete_payload(Context& ctx, const dsl::System& sys) {
    const DiffField& F = ctx.field();
    const OpMatrix& A = sys.op;
    TermOrder order = sys.term_order();
    JanetBasis B = JanetBasis::complete(ctx, nonzero_rows(A), A.cols, order);
    auto names = A.col_names();
    Json basis = Json::array();
    auto classes = B.classes();
    for (size_t i = 0; i < B.size(); ++i) {
        Json mult = Json::array();
        for (int v = 0; v < A.n; ++v)
            if (B.is_multiplicative(i, v)) mult.push_back(v + 1);
        basis.push_back({{"row", B.rows()[i].row.to_string(F, names)},
                         {"lead", jet_string(B.rows()[i].lead, F, names)},
                         {"class", classes[i]},
                         {"multiplicative", mult}});
    }
    SystemAnalysis an = analyze_system(ctx, A, order.kind(), order.priority());
    HilbertData h = count_parametric(B, std::max(B.max_order(), 0) + 3);
    Json hd = {{"finite_type", h.finite_type}, {"hilbert", h.hilbert}};
    hd["dimension"] = h.dimension ? Json(*h.dimension) : Json(nullptr);
    const auto& tr = B.trace();
    return {{"order", to_string(order.kind())},
            {"priority", priority_listing(order.priority())},
            {"basis", basis},
            {"board", B.board()},
            {"formally_integrable", an.formally_integrable},
            {"involutive", an.involutive},
            {"regular_priority", priority_listing(an.regular_priority)},
            {"integrability_conditions", rows_json(an.integrability_conditions, F, names)},
            {"parametric", hd},
            {"trace",
             {{"steps", tr.steps.size()},
              {"reductions", tr.reductions},
              {"normal_forms", tr.normal_forms},
              {"max_order", tr.max_order}}}};
}

Json cc_payload(Context& ctx, const dsl::System& sys) {
    OpMatrix C = compatibility_conditions(ctx, sys.op, {sys.order, true});
    return {{"cc", matrix_json(C, ctx.field())}, {"composition_vanishes", compose(C, sys.op).is_zero()}};
}

Json sequence_payload(Context& ctx, const dsl::System& sys, const Options& opt) {
    DiffSequence s = build_sequence(ctx, sys.op, opt.max_steps >= 0 ? static_cast<int>(opt.max_steps) : -1, sys.order);
    Json ops = Json::array();
    Json shape = Json::array({sys.op.cols});
    for (auto& op : s.ops) {
        ops.push_back(matrix_json(op, ctx.field()));
        shape.push_back(op.nrows());
    }
    bool composes = true;
    for (size_t i = 1; i < s.ops.size(); ++i) composes = composes && compose(s.ops[i], s.ops[i - 1]).is_zero();
    Json fi = Json::array(), inv = Json::array();
    for (bool b : s.fi) fi.push_back(b);
    for (bool b : s.inv) inv.push_back(b);
    return {{"operators", ops},
            {"orders", s.orders},
            {"shape", shape},
            {"formally_integrable", fi},
            {"involutive", inv},
            {"terminated", s.terminated},
            {"consecutive_compositions_vanish", composes},
            {"flags",
             {{"formally_exact", s.flags.formally_exact},
              {"strictly_exact", s.flags.strictly_exact},
              {"involutive", s.flags.involutive}}}};
}

Json adjoint_payload(Context& ctx, const dsl::System& sys) {
    OpMatrix ad = adjoint(sys.op);
    return {{"adjoint", matrix_json(ad, ctx.field())}, {"involution", adjoint(ad) == sys.op}};
}

Json rank_payload(Context& ctx, const dsl::System& sys) {
    return {{"unknowns", sys.op.cols},
            {"equations", sys.op.nrows()},
            {"rank", differential_rank(ctx, sys.op)},
            {"rank_adjoint", differential_rank(ctx, adjoint(sys.op))}};
}

Json kernel_json(const KernelAnalysis& k, const DiffField& F) {
    Json c = Json::array();
    for (auto& p : k.conditions) c.push_back(F.str(p));
    return {{"injective", k.injective}, {"conditional", k.conditional}, {"conditions", c}};
}

Json duality_payload(Context& ctx, const dsl::System& sys) {
    const DiffField& F = ctx.field();
    DoubleDuality dd = double_duality_test(ctx, sys.op);
    KernelAnalysis k = kernel_analysis(ctx, dd.adjoint);
    return {{"adjoint", matrix_json(dd.adjoint, F)},
            {"cc_of_adjoint", matrix_json(dd.cc_of_adjoint, F)},
            {"parametrizing", matrix_json(dd.parametrizing, F)},
            {"recovered", matrix_json(dd.recovered, F)},
            {"torsion_free", dd.torsion_free},
            {"torsion_elements", rows_json(dd.extra, F, sys.op.col_names())},
            {"kernel_of_adjoint", kernel_json(k, F)}};
}

Json certificate_json(const OpMatrix& A, const TorsionCertificate& c, const DiffField& F,
                      const std::vector<std::string>& names) {
    Json ann = Json::array();
    for (auto& a : c.annihilators) ann.push_back(scalar_string(a, F));
    Json coeffs = Json::array();
    for (auto& a : c.witness_coeffs) coeffs.push_back(scalar_string(a, F));
    return {{"element", c.element.to_string(F, names)},
            {"annihilators", ann},
            {"witness", scalar_string(c.witness_op, F)},
            {"witness_coefficients", coeffs},
            {"verified", verify_certificate(A, c)}};
}

Json torsion_payload(Context& ctx, const dsl::System& sys) {
    auto certs = torsion(ctx, sys.op);
    Json out = Json::array();
    for (auto& c : certs) out.push_back(certificate_json(sys.op, c, ctx.field(), sys.op.col_names()));
    return {{"torsion_free", certs.empty()}, {"certificates", out}};
}

Json ext_json(Context& ctx, const std::vector<OpMatrix>& R, int i) {
    const DiffField& F = ctx.field();
    ExtResult e = ext(ctx, R, i);
    auto names = mu_names(e.ambient);
    Json torsion = Json::array();
    if (!e.boundaries.empty()) {
        OpMatrix rel(R.front().n, e.ambient, e.boundaries);
        for (auto& g : e.generators) {
            TorsionCertificate c = torsion_certificate(ctx, rel, g);
            if (!c.annihilators.empty()) torsion.push_back(certificate_json(rel, c, F, names));
        }
    }
    return {{"i", i},
            {"vanishes", e.vanishes},
            {"generators", rows_json(e.generators, F, names)},
            {"presentation",
             {{"components", e.ambient},
              {"generators", rows_json(e.cycles, F, names)},
              {"relations", rows_json(e.boundaries, F, names)}}},
            {"torsion", torsion},
            {"provisos", provisos_json(e.provisos, F)}};
}

Json ext_payload(Context& ctx, const dsl::System& sys, const Options& opt) {
    int len = std::max(sys.op.n + 2, opt.ext_index + 1);
    auto R = resolution(ctx, sys.op, len);
    Json shape = Json::array({sys.op.cols});
    for (auto& r : R) shape.push_back(r.nrows());
    Json exts = Json::array();
    if (opt.ext_index >= 0) {
        exts.push_back(ext_json(ctx, R, opt.ext_index));
    } else {
        for (int i = 0; i <= static_cast<int>(R.size()); ++i) exts.push_back(ext_json(ctx, R, i));
    }
    return {{"resolution", shape}, {"euler_rank", euler_rank(R)}, {"ext", exts}};
}

Json parametrize_payload(Context& ctx, const dsl::System& sys) {
    Parametrization p = parametrize(ctx, sys.op);
    return {{"parametrization", matrix_json(p.op, ctx.field())},
            {"potentials", p.potentials},
            {"rank_bound", p.rank_bound},
            {"minimal", p.minimal},
            {"composition_vanishes", compose(sys.op, p.op).is_zero()}};
}

Json case_context(const Context& ctx, const dsl::System& sys) {
    Json nz = Json::array(), z = Json::array();
    for (auto& p : ctx.nonzero()) nz.push_back(ctx.field().str(p));
    for (auto& p : ctx.vanishing()) z.push_back(ctx.field().str(p));
    return {{"case", sys.case_name}, {"nonzero", nz}, {"vanishing", z}};
}

// Assumptions for the two sides of an undecided pivot factor. A factor of
// degree one in some parameter with constant coefficient is solved for it
// so that the vanishing side substitutes instead of merely recording.
std::pair<std::string, std::string> split_sides(const std::string& factor, const DiffField& F) {
    std::string nonzero = factor + " != 0", zero = factor + " = 0";
    try {
        RatFunc f = dsl::parse_coefficient(factor, F);
        for (Sym s : f.num().symbols()) {
            if (sym::kind(s) != SymKind::param) continue;
            auto cs = f.num().coefficients_in(s);
            if (cs.size() != 2 || !cs[1].is_constant()) continue;
            RatFunc value = -RatFunc(cs[0]) / RatFunc(cs[1]);
            zero = F.name(s) + " = " + F.str(value);
            break;
        }
    } catch (const Error&) {
    }
    return {nonzero, zero};
}

struct Runner {
    std::string command, text, source;
    Options opt;
    dsl::Document doc;
    Outcome out;

    Json header(const std::string& case_name, const std::vector<std::string>& extra) const {
        Json assume = Json::array();
        for (auto& a : opt.assume) assume.push_back(a);
        for (auto& a : extra) assume.push_back(a);
        return {{"schema", schema_version},
                {"command", command},
                {"source", source},
                {"digest", digest(text)},
                {"system", doc.name},
                {"case", case_name},
                {"assume", assume},
                {"policy", policy_name(opt.policy)}};
    }

    void branch(const std::string& case_name, std::vector<std::string> extra, int depth) {
        Json rep = header(case_name, extra);
        auto t0 = std::chrono::steady_clock::now();
        auto finish = [&](Json& r) {
            if (opt.timing)
                r["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            out.reports.push_back(std::move(r));
        };
        dsl::Document d = doc;
        std::optional<Context> ctx;
        try {
            std::vector<std::string> conds = opt.assume;
            conds.insert(conds.end(), extra.begin(), extra.end());
            dsl::add_assumptions(d, conds);
            dsl::System sys = dsl::elaborate(d, case_name);
            if (opt.order) sys.order = parse_mono_order(*opt.order);
            if (!opt.priority.empty()) sys.priority = priority_from_listing(opt.priority);
            ctx.emplace(sys.field, opt.policy);
            if (opt.max_steps >= 0) ctx->budget().max_steps = opt.max_steps;
            sys.apply_assumptions(*ctx);
            Json payload = command_payload(command, *ctx, sys, opt);
            rep["status"] = "ok";
            rep["case_context"] = case_context(*ctx, sys);
            rep["result"] = std::move(payload);
            rep["provisos"] = provisos_json(ctx->provisos(), ctx->field());
            finish(rep);
        } catch (const CaseSplitRequired& e) {
            if (opt.split && depth < 4) {
                auto [nz, z] = split_sides(e.factor(), ctx ? ctx->field() : DiffField({}));
                auto a = extra, b = extra;
                a.push_back(nz);
                b.push_back(z);
                branch(case_name, a, depth + 1);
                branch(case_name, b, depth + 1);
                return;
            }
            rep["status"] = "case_split_required";
            rep["diagnostic"] = error_json(e);
            out.exit_code = std::max(out.exit_code, 2);
            finish(rep);
        } catch (const std::exception& e) {
            rep["status"] = "error";
            rep["diagnostic"] = error_json(e);
            out.exit_code = out.exit_code == 2 ? 2 : 1;
            finish(rep);
        }
    }
};

}  // namespace

const std::vector<std::string>& system_commands() {
    static const std::vector<std::string> c{"complete", "cc",      "sequence", "adjoint",    "rank",
                                            "duality",  "torsion", "ext",      "parametrize"};
    return c;
}

std::string digest(const std::string& text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json rows_json(const std::vector<Row>& rows, const DiffField& F, const std::vector<std::string>& names) {
    Json a = Json::array();
    for (auto& r : rows) a.push_back(r.to_string(F, names));
    return a;
}

Json matrix_json(const OpMatrix& A, const DiffField& F) {
    Json rows = Json::array();
    auto rn = A.row_names();
    auto cn = A.col_names();
    for (size_t i = 0; i < A.nrows(); ++i)
        rows.push_back({{"label", rn[i]}, {"order", A.rows[i].order()}, {"row", A.rows[i].to_string(F, cn)}});
    return {{"shape", {A.nrows(), A.cols}}, {"columns", cn}, {"rows", rows}};
}

Json provisos_json(const std::vector<Proviso>& p, const DiffField& F) {
    Json a = Json::array();
    for (auto& x : p) a.push_back({{"nonzero", F.str(x.factor)}, {"where", x.where}});
    return a;
}

Json error_json(const std::exception& e) {
    Json j = {{"kind", "Error"}, {"message", e.what()}};
    if (auto* oe = dynamic_cast<const Error*>(&e)) j["kind"] = oe->kind();
    if (auto* de = dynamic_cast<const dsl::DslError*>(&e)) {
        j["line"] = de->span().line;
        j["column"] = de->span().col;
        j["offset"] = de->span().offset;
        j["length"] = de->span().length;
    }
    if (auto* pe = dynamic_cast<const dsl::ParseError*>(&e)) j["expected"] = pe->expected();
    if (auto* cs = dynamic_cast<const CaseSplitRequired*>(&e)) j["factor"] = cs->factor();
    if (auto* np = dynamic_cast<const NotParametrizable*>(&e)) j["torsion"] = np->torsion();
    return j;
}

Json command_payload(const std::string& command, Context& ctx, const dsl::System& sys, const Options& opt) {
    if (command == "complete") return complete_payload(ctx, sys);
    if (command == "cc") return cc_payload(ctx, sys);
    if (command == "sequence") return sequence_payload(ctx, sys, opt);
    if (command == "adjoint") return adjoint_payload(ctx, sys);
    if (command == "rank") return rank_payload(ctx, sys);
    if (command == "duality") return duality_payload(ctx, sys);
    if (command == "torsion") return torsion_payload(ctx, sys);
    if (command == "ext") return ext_payload(ctx, sys, opt);
    if (command == "parametrize") return parametrize_payload(ctx, sys);
    throw Error("unknown command '" + command + "'");
}

Outcome run_system_command(const std::string& command, const std::string& text, const std::string& source,
                           const Options& opt) {
    Runner r{command, text, source, opt, {}, {}};
    try {
        r.doc = dsl::parse(text);
    } catch (const std::exception& e) {
        Json rep = r.header(opt.case_name, {});
        rep["status"] = "error";
        rep["diagnostic"] = error_json(e);
        return {{rep}, 1};
    }
    if (opt.split && opt.case_name.empty() && !r.doc.cases.empty()) {
        for (auto& c : r.doc.case_names()) r.branch(c, {}, 0);
    } else {
        r.branch(opt.case_name, {}, 0);
    }
    return r.out;
}

Json spencer_payload(spencer::Family f, int n) {
    using namespace spencer;
    ClassicalTable t = classical_dims(f, n);
    std::string chain;
    for (size_t i = 0; i < t.dims.size(); ++i) {
        if (i > 0) chain += " ->" + std::to_string(t.orders[i - 1]) + " ";
        chain += std::to_string(t.dims[i]);
    }
    Json h = Json::array();
    for (size_t s = 0; s < t.h.size(); ++s) h.push_back({{"s", s}, {"dims", t.h[s]}});
    Json flags = Json::object();
    for (auto& [k, v] : t.flags) flags[k] = v;
    Json j = {{"family", to_string(f)},
              {"n", n},
              {"dims", t.dims},
              {"orders", t.orders},
              {"chain", chain},
              {"symbol_dims", t.g_dims},
              {"cohomology", h},
              {"h2_g1", t.h2_g1},
              {"h3_g1", t.h3_g1},
              {"flags", flags}};
    if (t.diagram) {
        auto& d = *t.diagram;
        j["diagram"] = {{"z3_g1", d.z3_g1},
                        {"h3_g1", d.h3_g1},
                        {"z3_hat_g1", d.z3_hat_g1},
                        {"h3_hat_g1", d.h3_hat_g1},
                        {"wedge2_hat_g2", d.wedge2_hat_g2},
                        {"delta_t_s2", d.delta_t_s2},
                        {"wedge2_t", d.wedge2_t},
                        {"wedge3", d.wedge3},
                        {"exact", d.exact}};
    }
    return j;
}

Outcome run_spencer(spencer::Family f, int n, const Options& opt) {
    Json rep = {{"schema", schema_version},
                {"command", "spencer"},
                {"source", "family " + spencer::to_string(f) + " n=" + std::to_string(n)},
                {"family", spencer::to_string(f)},
                {"n", n}};
    auto t0 = std::chrono::steady_clock::now();
    int code = 0;
    try {
        rep["status"] = "ok";
        rep["result"] = spencer_payload(f, n);
    } catch (const std::exception& e) {
        rep["status"] = "error";
        rep["diagnostic"] = error_json(e);
        code = 1;
    }
    if (opt.timing)
        rep["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return {{rep}, code};
}

// ---- markdown ----

namespace {

std::string scalar_md(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

bool all_scalars(const Json& a) {
    for (auto& x : a)
        if (x.is_structured()) return false;
    return true;
}

void render(std::ostringstream& o, const std::string& key, const Json& v, int depth) {
    std::string heading(static_cast<size_t>(std::min(depth, 5)), '#');
    if (key == "board" && v.is_array()) {
        // one line per basis row, multiplicative variables listed, dots elsewhere
        o << "\n" << heading << " board\n\n```\n";
        for (auto& line : v) {
            std::string s = line.get<std::string>();
            for (auto& c : s)
                if (c == '*') c = '.';
            o << "| " << s << " |\n";
        }
        o << "```\n";
        return;
    }
    if (v.is_object()) {
        if (v.contains("shape") && v.contains("rows") && v["rows"].is_array()) {
            o << "\n" << heading << " " << key << " (" << v["shape"][0] << " x " << v["shape"][1] << ")\n\n";
            for (auto& r : v["rows"]) o << "- `" << r["label"].get<std::string>() << "`: " << r["row"].get<std::string>() << "\n";
            return;
        }
        o << "\n" << heading << " " << key << "\n\n";
        for (auto& [k, x] : v.items())
            if (!x.is_structured()) o << "- **" << k << "**: " << scalar_md(x) << "\n";
        for (auto& [k, x] : v.items())
            if (x.is_structured()) render(o, k, x, depth + 1);
        return;
    }
    if (v.is_array()) {
        if (v.empty()) {
            o << "- **" << key << "**: none\n";
        } else if (all_scalars(v) && !v.front().is_string()) {
            o << "- **" << key << "**: ";
            for (size_t i = 0; i < v.size(); ++i) o << (i ? ", " : "") << scalar_md(v[i]);
            o << "\n";
        } else if (all_scalars(v)) {
            o << "\n" << heading << " " << key << "\n\n";
            for (auto& x : v) o << "- `" << scalar_md(x) << "`\n";
        } else if (key == "cohomology") {
            // table of dim H^s(g_j)
            o << "\n" << heading << " cohomology dim H^s(g_j)\n\n| s |";
            size_t cols = v.front()["dims"].size();
            for (size_t j = 0; j < cols; ++j) o << " j=" << j << " |";
            o << "\n|---|";
            for (size_t j = 0; j < cols; ++j) o << "---|";
            o << "\n";
            for (auto& row : v) {
                o << "| " << row["s"] << " |";
                for (auto& d : row["dims"]) o << " " << d << " |";
                o << "\n";
            }
        } else {
            size_t k = 0;
            for (auto& x : v) render(o, key + " [" + std::to_string(k++) + "]", x, depth);
        }
        return;
    }
    o << "- **" << key << "**: " << scalar_md(v) << "\n";
}

}  // namespace

std::string to_markdown(const Json& report) {
    std::ostringstream o;
    o << "# " << report.value("command", std::string("report"));
    if (report.contains("system")) o << ": " << report["system"].get<std::string>();
    if (report.contains("case") && !report["case"].get<std::string>().empty())
        o << " (" << report["case"].get<std::string>() << ")";
    o << "\n\n";
    for (auto& [k, x] : report.items())
        if (!x.is_structured() && k != "command" && k != "system") o << "- **" << k << "**: " << scalar_md(x) << "\n";
    for (auto& [k, x] : report.items())
        if (x.is_structured()) render(o, k, x, 2);
    return o.str();
}

}  // namespace orekit::report
