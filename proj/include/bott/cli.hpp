#pragma once

#include "bott/config.hpp"
#include "bott/io.hpp"

#include <string>
#include <vector>

namespace bott {

struct CommandResult {
    std::string command;
    Json inputs;
    Json payload;
    int exit_code = 0;  // 0 ok, 1 domain error, 2 parse error
    std::string out;    // rendered standard output
    std::string err;    // rendered standard error
};

Json envelope(const CommandResult& r);

// args excludes the program name.
CommandResult run(const std::vector<std::string>& args, const Config& config);
CommandResult run(const std::vector<std::string>& args);  // loads config from the environment

// Plot data.  Sweeps r_plus over from, from + step, ... while below `to`.
std::string csc_family_csv(int m, const Rat& from, const Rat& to, const Rat& step, const Rat& tol,
                           bool second_only);
// Moves (r, r - 1) along alpha_t = t * alpha*, beta = 1, t = 0..steps; ends at (1 - r, -r).
std::string cproj_trajectory_csv(const Rat& r, int steps);

// Closed forms used by `scan`.
bool stage3_reductive_closed_form(std::int64_t a, std::int64_t b, std::int64_t c);
bool stage3_fano_closed_form(std::int64_t a, std::int64_t b, std::int64_t c);

}  // namespace bott
