// Command-line driver: one subcommand per operation, reports as JSON or Markdown.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "orekit/corpus.hpp"
#include "orekit/report.hpp"

using namespace orekit;
using report::Json;

namespace {

struct Common {
    std::string file;
    report::Options opt;
    std::string policy = "strict";
    bool markdown = false;
    bool no_timing = false;
    std::string output;
};

void add_output_flags(CLI::App* sub, Common& c) {
    auto* fmt = sub->add_option_group("format");
    fmt->add_flag("--md", c.markdown, "Markdown report");
    fmt->add_flag_callback("--json", [&c] { c.markdown = false; }, "JSON report (default)");
    sub->add_option("-o,--output", c.output, "Write the report to a file instead of stdout");
    sub->add_flag("--no-timing", c.no_timing, "Omit timing fields");
}

int emit(const report::Outcome& out, const Common& c) {
    std::string text;
    if (c.markdown) {
        for (size_t i = 0; i < out.reports.size(); ++i) text += (i ? "\n---\n\n" : "") + report::to_markdown(out.reports[i]);
    } else {
        Json j = out.reports.size() == 1 ? out.reports.front() : Json(out.reports);
        text = j.dump(2) + "\n";
    }
    if (c.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream o(c.output);
        if (!o) {
            std::cerr << "cannot write " << c.output << "\n";
            return 1;
        }
        o << text;
    }
    for (auto& r : out.reports)
        if (r.value("status", std::string()) != "ok" && r.contains("diagnostic"))
            std::cerr << r["diagnostic"].value("kind", std::string("Error")) << ": "
                      << r["diagnostic"].value("message", std::string()) << "\n";
    return out.exit_code;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

int run_corpus(const std::string& dir, const std::string& filter, bool write, int jobs, bool as_json) {
    if (write) {
        size_t n = corpus::write_fixtures(dir);
        std::cout << "wrote " << n << " fixtures to " << dir << "/fixture.json\n";
        return 0;
    }
    auto results = corpus::run(dir, filter, jobs);
    size_t failed = 0;
    Json arr = Json::array();
    for (auto& r : results) {
        failed += r.pass ? 0 : 1;
        if (as_json) {
            arr.push_back({{"id", r.id}, {"pass", r.pass}, {"diff", r.diff}, {"provisos", r.provisos}});
            continue;
        }
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.id;
        if (!r.provisos.empty()) {
            std::cout << "  provisos:";
            for (auto& p : r.provisos) std::cout << " " << p.get<std::string>() << " != 0";
        }
        std::cout << "\n";
        for (auto& d : r.diff) std::cout << "    " << d << "\n";
    }
    if (as_json) {
        std::cout << Json{{"schema", report::schema_version}, {"command", "corpus"}, {"results", arr},
                          {"passed", results.size() - failed}, {"failed", failed}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << results.size() - failed << " passed, " << failed << " failed\n";
    }
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orekit: exact computations with linear differential operators"};
    app.require_subcommand(1);
    app.footer("Exit status: 0 success, 1 error, 2 undecided case split (rerun with --split or --assume).");

    Common c;
    std::vector<std::pair<std::string, CLI::App*>> subs;
    const std::map<std::string, std::string> help{
        {"complete", "Janet basis, board, formal integrability and parametric jets"},
        {"cc", "Generating compatibility conditions"},
        {"sequence", "Iterated compatibility conditions with exactness flags"},
        {"adjoint", "Formal adjoint"},
        {"rank", "Differential rank of the operator and of its adjoint"},
        {"duality", "Double duality test and kernel of the adjoint"},
        {"torsion", "Torsion elements with annihilator certificates"},
        {"ext", "Extension modules of a free resolution"},
        {"parametrize", "Parametrization of a torsion-free operator"}};
    for (auto& name : report::system_commands()) {
        CLI::App* sub = app.add_subcommand(name, help.at(name));
        sub->add_option("file", c.file, ".dms system file")->required()->check(CLI::ExistingFile);
        sub->add_option("--assume", c.opt.assume, "Extra assumption such as \"c!=0\" or \"c=0\" (repeatable)")
            ->allow_extra_args(false)
            ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
        sub->add_option("--case", c.opt.case_name, "Declared case to apply");
        sub->add_flag("--split", c.opt.split, "Run every declared case and both sides of undecided pivots");
        sub->add_option("--order", c.opt.order, "Monomial order")->check(CLI::IsMember({"degrevlex", "deglex", "lex"}));
        sub->add_option("--priority", c.opt.priority, "Variable priority, 1-based, lowest first, e.g. 2,3,1")
            ->allow_extra_args(false)
            ->delimiter(',');
        sub->add_option("--max-steps", c.opt.max_steps, "Completion step budget (also ORE_MAX_STEPS)");
        sub->add_option("--policy", c.policy, "Pivot policy for parameter-dependent pivots")
            ->check(CLI::IsMember({"strict", "record"}));
        if (name == "ext") sub->add_option("--i", c.opt.ext_index, "Only this index");
        add_output_flags(sub, c);
        subs.emplace_back(name, sub);
    }

    std::string family = "killing";
    int n = 4;
    CLI::App* sp = app.add_subcommand("spencer", "Spencer cohomology tables of classical Lie equations");
    sp->add_option("--family", family, "Symbol family")->check(CLI::IsMember({"killing", "conformal", "contact"}));
    sp->add_option("--n", n, "Dimension")->check(CLI::Range(2, 7));
    add_output_flags(sp, c);

    std::string dir = "corpus", filter;
    bool write = false, corpus_json = false;
    int jobs = 1;
    CLI::App* cp = app.add_subcommand("corpus", "Run the regression corpus against its fixtures");
    cp->add_option("dir", dir, "Corpus directory");
    cp->add_option("--filter", filter, "Substring of the example id, e.g. 3.2");
    cp->add_flag("--write", write, "Recompute and write fixture.json");
    cp->add_option("--jobs", jobs, "Examples run concurrently")->check(CLI::PositiveNumber);
    cp->add_flag("--json", corpus_json, "JSON summary");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    c.opt.policy = c.policy == "record" ? PivotPolicy::record : PivotPolicy::strict;
    c.opt.timing = !c.no_timing;
    try {
        for (auto& [name, sub] : subs)
            if (sub->parsed()) return emit(report::run_system_command(name, slurp(c.file), c.file, c.opt), c);
        if (sp->parsed()) return emit(report::run_spencer(spencer::parse_family(family), n, c.opt), c);
        if (cp->parsed()) return run_corpus(dir, filter, write, jobs, corpus_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
