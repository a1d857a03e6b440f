#include "orekit/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>

namespace orekit::corpus {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw Error("cannot open " + p.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string policy_name(PivotPolicy p) { return p == PivotPolicy::strict ? "strict" : "record"; }

PivotPolicy parse_policy(const std::string& s) {
    if (s == "strict") return PivotPolicy::strict;
    if (s == "record") return PivotPolicy::record;
    throw Error("unknown pivot policy '" + s + "'");
}

std::vector<Row> nonzero_rows(const OpMatrix& A) {
    std::vector<Row> r;
    for (auto& row : A.rows)
        if (!row.is_zero()) r.push_back(row);
    return r;
}

Json entry_json(const Entry& e) {
    return {{"id", e.id}, {"file", e.file}, {"case", e.case_name}, {"policy", policy_name(e.policy)}, {"expected", e.expected}};
}

}  // namespace

Json summary(const dsl::System& sys, PivotPolicy policy) {
    Context ctx(sys.field, policy);
    sys.apply_assumptions(ctx);
    const DiffField& F = *sys.field;
    Json out;
    try {
        out["roundtrip"] = dsl::load(dsl::render(sys)).op == sys.op;
        out["shape"] = {sys.op.nrows(), sys.op.cols};
        OpMatrix C = compatibility_conditions(ctx, sys.op, {sys.order, true});
        out["cc"] = report::rows_json(C.rows, F, C.col_names());
        out["rank"] = differential_rank(ctx, sys.op);
        out["rank_adjoint"] = differential_rank(ctx, adjoint(sys.op));
        auto R = resolution(ctx, sys.op, sys.op.n + 2);
        Json shape = Json::array({sys.op.cols});
        for (auto& r : R) shape.push_back(r.nrows());
        out["resolution"] = shape;
        out["euler_rank"] = euler_rank(R);
        Json exts = Json::array();
        for (int i = 0; i <= static_cast<int>(R.size()); ++i) {
            ExtResult e = ext(ctx, R, i);
            std::vector<std::string> names;
            for (size_t k = 0; k < e.ambient; ++k) names.push_back(default_label("mu", k));
            exts.push_back({{"i", i}, {"vanishes", e.vanishes}, {"generators", report::rows_json(e.generators, F, names)}});
        }
        out["ext"] = exts;
        DoubleDuality dd = double_duality_test(ctx, sys.op);
        out["torsion_free"] = dd.torsion_free;
        out["torsion"] = report::rows_json(dd.extra, F, sys.op.col_names());
        KernelAnalysis k = kernel_analysis(ctx, dd.adjoint);
        Json conds = Json::array();
        for (auto& p : k.conditions) conds.push_back(F.str(p));
        out["adjoint_injective"] = k.injective;
        out["adjoint_conditions"] = conds;
        if (!nonzero_rows(sys.op).empty()) {
            JanetBasis B = JanetBasis::complete(ctx, nonzero_rows(sys.op), sys.op.cols, sys.term_order());
            out["board"] = B.board();
        }
    } catch (const Error& e) {
        Json err = report::error_json(e);
        out = Json{{"error", err}};
    }
    Json prov = Json::array();
    for (auto& p : ctx.provisos()) prov.push_back(F.str(p.factor));
    out["provisos"] = prov;
    return out;
}

std::vector<Entry> load_entries(const std::string& dir) {
    fs::path fx = fs::path(dir) / "fixture.json";
    if (!fs::exists(fx)) return discover(dir);
    Json j = Json::parse(read_file(fx));
    std::vector<Entry> out;
    for (auto& x : j.at("entries")) {
        Entry e;
        e.id = x.at("id").get<std::string>();
        e.file = x.at("file").get<std::string>();
        e.case_name = x.value("case", std::string());
        e.policy = parse_policy(x.value("policy", std::string("strict")));
        e.expected = x.value("expected", Json());
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<Entry> discover(const std::string& dir) {
    std::vector<Entry> old;
    fs::path fx = fs::path(dir) / "fixture.json";
    if (fs::exists(fx)) old = load_entries(dir);
    std::vector<fs::path> files;
    if (fs::is_directory(dir))
        for (auto& p : fs::directory_iterator(dir))
            if (p.path().extension() == ".dms") files.push_back(p.path());
    std::sort(files.begin(), files.end());
    std::vector<Entry> out;
    for (auto& f : files) {
        dsl::Document doc = dsl::parse(read_file(f));
        std::vector<std::string> cases = doc.case_names();
        if (cases.empty()) cases.push_back("");
        for (auto& c : cases) {
            Entry e;
            e.file = f.filename().string();
            e.case_name = c;
            e.id = f.stem().string() + (c.empty() ? "" : "@" + c);
            out.push_back(e);
        }
    }
    // keep hand-added variants such as a record-policy run
    for (auto& o : old) {
        bool file_ok = std::any_of(files.begin(), files.end(), [&](auto& f) { return f.filename() == o.file; });
        auto it = std::find_if(out.begin(), out.end(), [&](const Entry& e) { return e.id == o.id; });
        if (it != out.end()) {
            it->policy = o.policy;
            it->expected = o.expected;
        } else if (file_ok) {
            out.push_back(o);
        }
    }
    std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.id < b.id; });
    return out;
}

bool matches(const Entry& e, const std::string& filter) {
    if (filter.empty()) return true;
    std::string f = filter;
    std::replace(f.begin(), f.end(), '.', '_');
    return e.id.find(f) != std::string::npos || e.id.find(filter) != std::string::npos;
}

Result run_entry(const std::string& dir, const Entry& e) {
    Result r;
    r.id = e.id;
    auto t0 = std::chrono::steady_clock::now();
    Json got;
    try {
        dsl::System sys = dsl::load(read_file(fs::path(dir) / e.file), e.case_name);
        got = summary(sys, e.policy);
    } catch (const std::exception& ex) {
        got = Json{{"error", report::error_json(ex)}, {"provisos", Json::array()}};
    }
    r.provisos = got.value("provisos", Json::array());
    if (e.expected.is_null()) {
        r.diff.push_back("no expectation recorded");
    } else {
        r.diff = json_diff(e.expected, got);
    }
    r.pass = r.diff.empty();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<Result> run(const std::string& dir, const std::string& filter, int jobs) {
    std::vector<Entry> entries;
    for (auto& e : load_entries(dir))
        if (matches(e, filter)) entries.push_back(e);
    std::vector<Result> out(entries.size());
    jobs = std::max(jobs, 1);
    for (size_t start = 0; start < entries.size(); start += static_cast<size_t>(jobs)) {
        std::vector<std::future<Result>> fut;
        size_t end = std::min(entries.size(), start + static_cast<size_t>(jobs));
        for (size_t i = start; i < end; ++i)
            fut.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                     [&dir, &e = entries[i]] { return run_entry(dir, e); }));
        for (size_t i = start; i < end; ++i) out[i] = fut[i - start].get();
    }
    return out;
}

size_t write_fixtures(const std::string& dir) {
    auto entries = discover(dir);
    Json arr = Json::array();
    for (auto& e : entries) {
        try {
            dsl::System sys = dsl::load(read_file(fs::path(dir) / e.file), e.case_name);
            e.expected = summary(sys, e.policy);
        } catch (const std::exception& ex) {
            e.expected = Json{{"error", report::error_json(ex)}, {"provisos", Json::array()}};
        }
        arr.push_back(entry_json(e));
    }
    Json j = {{"schema", report::schema_version}, {"entries", arr}};
    std::ofstream o(fs::path(dir) / "fixture.json");
    o << j.dump(2) << "\n";
    return entries.size();
}

std::vector<std::string> json_diff(const Json& expected, const Json& got, const std::string& path) {
    std::vector<std::string> out;
    std::string here = path.empty() ? "$" : path;
    if (expected.is_object() && got.is_object()) {
        for (auto& [k, v] : expected.items()) {
            if (!got.contains(k)) {
                out.push_back(here + "." + k + ": missing");
                continue;
            }
            auto sub = json_diff(v, got[k], here + "." + k);
            out.insert(out.end(), sub.begin(), sub.end());
        }
        for (auto& [k, v] : got.items())
            if (!expected.contains(k)) out.push_back(here + "." + k + ": unexpected " + v.dump());
        return out;
    }
    if (expected.is_array() && got.is_array()) {
        if (expected.size() != got.size()) {
            out.push_back(here + ": expected " + expected.dump() + ", got " + got.dump());
            return out;
        }
        for (size_t i = 0; i < expected.size(); ++i) {
            auto sub = json_diff(expected[i], got[i], here + "[" + std::to_string(i) + "]");
            out.insert(out.end(), sub.begin(), sub.end());
        }
        return out;
    }
    if (expected != got) out.push_back(here + ": expected " + expected.dump() + ", got " + got.dump());
    return out;
}

}  // namespace orekit::corpus
