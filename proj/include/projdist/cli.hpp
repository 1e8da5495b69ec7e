#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "projdist/oracle.hpp"
#include "projdist/settings.hpp"

namespace projdist::cli {

// Exit codes: 0 success, 2 validation failure, 3 parse failure.

struct ReportOptions {
    std::string path_e;
    std::string path_u;
    bool with_oracle = false;
    std::size_t oracle_grid = 64;
    bool json = false;
    Settings settings;
};

struct CurveOptions {
    double b_min = 0.0;
    double b_max = 0.0;
    std::size_t steps = 0;
    std::string out_path;
};

struct GenOptions {
    InstanceSpec spec;
    std::string out_prefix;
    Settings settings;
};

int cmd_report(const ReportOptions& options, std::ostream& out, std::ostream& err);
int cmd_curve(const CurveOptions& options, std::ostream& out, std::ostream& err);
int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err);

// Parses argv-style arguments (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace projdist::cli
