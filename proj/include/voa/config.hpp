#pragma once

#include <map>
#include <string>

#include "voa/fock.hpp"

namespace voa {

// CLI configuration document: lattice, cocycle, optional lambda block,
// named submonoids.
struct Config {
    Context ctx;
    std::map<std::string, SubMonoid> submonoids;
    std::string digest;  // stable hash of the canonicalized document

    explicit Config(Context c) : ctx(std::move(c)) {}
};

Config parse_config(const std::string& json_text);
Config load_config(const std::string& path);

}  // namespace voa
