#ifndef OREKIT_REPORT_HPP
#define OREKIT_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "orekit/dsl.hpp"
#include "orekit/duality.hpp"
#include "orekit/spencer.hpp"

namespace orekit::report {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

struct Options {
    std::vector<std::string> assume;  // "c != 0", "c = 0"
    std::string case_name;
    bool split = false;  // every declared case, and both sides of undecided pivots
    int ext_index = -1;  // -1: all indices of the resolution
    std::optional<std::string> order;
    std::vector<int> priority;  // 1-based, lowest first, as in the DSL
    long max_steps = -1;
    PivotPolicy policy = PivotPolicy::strict;
    bool timing = true;
};

struct Outcome {
    std::vector<Json> reports;  // one per branch
    int exit_code = 0;          // 0 ok, 1 error, 2 undecided case split
};

const std::vector<std::string>& system_commands();

// FNV-1a 64 bit, hex.
std::string digest(const std::string& text);

Json matrix_json(const OpMatrix& A, const DiffField& F);
Json rows_json(const std::vector<Row>& rows, const DiffField& F, const std::vector<std::string>& names);
Json provisos_json(const std::vector<Proviso>& p, const DiffField& F);

// Run one of system_commands() on DSL source text.
Outcome run_system_command(const std::string& command, const std::string& text, const std::string& source,
                           const Options& opt);
// Payload only, for an already elaborated system and a prepared context.
Json command_payload(const std::string& command, Context& ctx, const dsl::System& sys, const Options& opt);

Json spencer_payload(spencer::Family f, int n);
Outcome run_spencer(spencer::Family f, int n, const Options& opt);

Json error_json(const std::exception& e);

std::string to_markdown(const Json& report);

}  // namespace orekit::report

#endif
