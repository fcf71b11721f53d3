#include "bott/config.hpp"

#include "bott/error.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace bott {

Config config_from_json_text(const std::string& text) {
    Config cfg;
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("config: ") + e.what());
    }
    if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "config: expected an object");
    if (j.contains("orbit_stage_bound")) cfg.orbit_stage_bound = j["orbit_stage_bound"].get<int>();
    if (j.contains("root_stage_bound")) cfg.root_stage_bound = j["root_stage_bound"].get<int>();
    if (j.contains("ak_grid")) cfg.ak_grid = j["ak_grid"].get<int>();
    if (j.contains("ak_max_levels")) cfg.ak_max_levels = j["ak_max_levels"].get<int>();
    if (j.contains("csc_tolerance")) {
        const auto& t = j["csc_tolerance"];
        cfg.csc_tolerance = t.is_string() ? t.get<std::string>() : t.dump();
    }
    return cfg;
}

Config load_config() {
    const char* path = std::getenv(kConfigEnv);
    if (!path || !*path) return Config{};
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidArgument, std::string("config: cannot open ") + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return config_from_json_text(ss.str());
}

}  // namespace bott
