#ifndef OREKIT_CORPUS_HPP
#define OREKIT_CORPUS_HPP

#include <string>
#include <vector>

#include "orekit/report.hpp"

namespace orekit::corpus {

using report::Json;

// Everything a fixture pins down about one system: CC, ranks, resolution,
// ext flags and generators, double duality, provisos.
Json summary(const dsl::System& sys, PivotPolicy policy);

struct Entry {
    std::string id;  // "<stem>" or "<stem>@<case>", plus "#record" for the record policy
    std::string file, case_name;
    PivotPolicy policy = PivotPolicy::strict;
    Json expected;
};

struct Result {
    std::string id;
    bool pass = false;
    std::vector<std::string> diff;  // "path: expected X, got Y"
    Json provisos;
    double seconds = 0;
};

// Entries of dir/fixture.json; when the fixture file is missing, one entry
// per .dms file and declared case with an empty expectation.
std::vector<Entry> load_entries(const std::string& dir);
// Entries for every .dms file and case in dir, keeping policies and ids of
// the existing fixture.
std::vector<Entry> discover(const std::string& dir);

bool matches(const Entry& e, const std::string& filter);

Result run_entry(const std::string& dir, const Entry& e);
std::vector<Result> run(const std::string& dir, const std::string& filter, int jobs = 1);
// Recompute expectations and write dir/fixture.json; returns entries written.
size_t write_fixtures(const std::string& dir);

// Differences between two JSON values, one line per mismatching leaf.
std::vector<std::string> json_diff(const Json& expected, const Json& got, const std::string& path = "");

}  // namespace orekit::corpus

#endif
