#pragma once

// Command-line front end. The command implementations return their
// output as strings so they can be exercised directly by tests; the
// binary entry point does argument parsing and stream plumbing only.
// All outputs are byte-deterministic for a fixed seed, independent of
// the worker count.

#include <cstdint>
#include <string>
#include <vector>

namespace vr {

struct VerifyOutcome {
    bool ok = true;
    std::string output;
};

std::string knot_report(int r, int s, std::uint64_t seed);

// format: "csv", "json", or "md"
std::string table_output(int rmax, const std::string& format, bool so3, std::uint64_t seed,
                         int jobs);

VerifyOutcome verify_range(int rmax, int jobs, std::uint64_t seed);

std::string scan_output(int rmin, int rmax, std::uint64_t seed, int jobs);

std::string invariant_output(int r, int s, int genus, const std::vector<int>& colors, bool so3);

std::string dump_json(int r, int s, std::uint64_t seed);

// exit codes: 0 success, 1 verification failure, 2 usage error
int run_cli(int argc, char** argv);

}  // namespace vr
