#pragma once

#include <string>

namespace bott {

struct Config {
    int orbit_stage_bound = 8;
    int root_stage_bound = 8;
    int ak_grid = 5;              // integrability samples per axis, at i/(grid+1)
    int ak_max_levels = 20;       // dyadic refinement cap for positivity
    std::string csc_tolerance = "1/1000000000000";
};

inline constexpr const char* kConfigEnv = "BOTT_CONFIG";

// Defaults, overlaid by the JSON file named in $BOTT_CONFIG when set.
Config load_config();
Config config_from_json_text(const std::string& text);

}  // namespace bott
