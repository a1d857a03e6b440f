// Thin Python layer over the report runner: reports cross the boundary as
// JSON text and are decoded on the Python side.
#include <algorithm>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orekit/report.hpp"

namespace py = pybind11;
using namespace orekit;

namespace {

py::tuple outcome(const report::Outcome& out) {
    std::vector<std::string> texts;
    for (auto& r : out.reports) texts.push_back(r.dump());
    return py::make_tuple(out.exit_code, texts);
}

PivotPolicy policy_of(const std::string& s) {
    if (s == "strict") return PivotPolicy::strict;
    if (s == "record") return PivotPolicy::record;
    throw py::value_error("policy must be 'strict' or 'record'");
}

}  // namespace

PYBIND11_MODULE(_orekit, m) {
    m.doc() = "exact computations with linear differential operators";
    m.attr("schema_version") = report::schema_version;

    m.def("commands", &report::system_commands);

    m.def(
        "run",
        [](const std::string& command, const std::string& text, const std::string& source, const std::string& case_name,
           const std::vector<std::string>& assume, bool split, const std::string& policy, int ext_index,
           long max_steps, bool timing) {
            const auto& cmds = report::system_commands();
            if (std::find(cmds.begin(), cmds.end(), command) == cmds.end())
                throw py::value_error("unknown command: " + command);
            report::Options opt;
            opt.case_name = case_name;
            opt.assume = assume;
            opt.split = split;
            opt.policy = policy_of(policy);
            opt.ext_index = ext_index;
            opt.max_steps = max_steps;
            opt.timing = timing;
            py::gil_scoped_release release;
            auto out = report::run_system_command(command, text, source, opt);
            py::gil_scoped_acquire acquire;
            return outcome(out);
        },
        py::arg("command"), py::arg("text"), py::arg("source") = "<string>", py::arg("case_name") = "",
        py::arg("assume") = std::vector<std::string>{}, py::arg("split") = false, py::arg("policy") = "strict",
        py::arg("ext_index") = -1, py::arg("max_steps") = -1, py::arg("timing") = false);

    m.def(
        "spencer",
        [](const std::string& family, int n) {
            report::Options opt;
            opt.timing = false;
            spencer::Family f;
            try {
                f = spencer::parse_family(family);
            } catch (const std::exception& e) {
                throw py::value_error(e.what());
            }
            return outcome(report::run_spencer(f, n, opt));
        },
        py::arg("family"), py::arg("n"));

    m.def(
        "to_markdown", [](const std::string& json_text) { return report::to_markdown(report::Json::parse(json_text)); },
        py::arg("report"));

    m.def("digest", &report::digest, py::arg("text"));
}
