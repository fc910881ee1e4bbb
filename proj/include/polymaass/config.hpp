#pragma once

#include "polymaass/errors.hpp"

#include <map>
#include <string>

namespace polymaass {

/// Runtime knobs shared by the CLI commands.  Overridable per key from a flat
/// `key = value` config file (one pair per line, `#` comments) and by flags,
/// flags winning.
struct RunConfig {
    long fourier_terms = 24;
    long lattice_cutoff = 400;
    int contour_nodes = 64;
    double contour_radius = 0.375;
    double fd_step = 0.01;
    std::map<std::string, double> tolerance_overrides;  // keys: identity names

    void validate() const;
};

/// Parse one key/value pair into cfg.  Recognized keys: fourier_terms,
/// lattice_cutoff, contour_nodes, contour_radius, fd_step, and
/// tolerance.<identity>.  ConfigError on unknown keys or bad numbers.
void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value);

/// Load a config file in the flat format.  ConfigError on parse failure.
RunConfig parse_config_file(const std::string& path, RunConfig base = {});

} // namespace polymaass
