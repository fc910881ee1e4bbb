#include "polymaass/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace polymaass {

void RunConfig::validate() const {
    if (fourier_terms < 1 || lattice_cutoff < 1 || contour_nodes < 2 ||
        !(contour_radius > 0.0) || !(fd_step > 0.0))
        throw ConfigError("config: all numeric fields must be positive");
    if (contour_nodes % 2 != 0) throw ConfigError("config: contour_nodes must be even");
}

namespace {

std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double parse_num(const std::string& v, const std::string& key) {
    char* end = nullptr;
    double d = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0')
        throw ConfigError("config: bad numeric value for " + key + ": '" + v + "'");
    return d;
}

} // namespace

void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "fourier_terms") cfg.fourier_terms = static_cast<long>(parse_num(value, key));
    else if (key == "lattice_cutoff") cfg.lattice_cutoff = static_cast<long>(parse_num(value, key));
    else if (key == "contour_nodes") cfg.contour_nodes = static_cast<int>(parse_num(value, key));
    else if (key == "contour_radius") cfg.contour_radius = parse_num(value, key);
    else if (key == "fd_step") cfg.fd_step = parse_num(value, key);
    else if (key.rfind("tolerance.", 0) == 0)
        cfg.tolerance_overrides[key.substr(10)] = parse_num(value, key);
    else
        throw ConfigError("config: unknown key '" + key + "'");
}

RunConfig parse_config_file(const std::string& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: line " + std::to_string(lineno) + " is not key = value");
        apply_config_entry(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    base.validate();
    return base;
}

} // namespace polymaass
