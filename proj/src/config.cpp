#include "voa/config.hpp"

#include <fstream>
#include <json.hpp>

namespace voa {

namespace {

using nlohmann::json;

Rational json_rational(const json& j) {
    if (j.is_number_integer()) return Rational((long)j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw Error(Errc::ConfigError, "rationals must be integers or \"p/q\" strings");
}

IVec json_ivec(const json& j, long rank) {
    if (!j.is_array() || (long)j.size() != rank)
        throw Error(Errc::ConfigError, "vector must have rank entries");
    IVec v;
    for (const auto& x : j) v.push_back(x.get<long>());
    return v;
}

std::string fnv1a_digest(const std::string& text) {
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return buf;
}

}  // namespace

Config parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const std::exception& e) {
        throw Error(Errc::ConfigError, std::string("invalid JSON: ") + e.what());
    }
    if (!j.contains("rank") || !j.contains("gram") || !j.contains("basis_names"))
        throw Error(Errc::ConfigError, "config needs rank, gram, basis_names");
    long rank = j["rank"].get<long>();
    IMat gram;
    for (const auto& row : j["gram"]) gram.push_back(json_ivec(row, rank));
    if ((long)gram.size() != rank) throw Error(Errc::ConfigError, "gram must be rank x rank");
    std::vector<std::string> names;
    for (const auto& n : j["basis_names"]) {
        std::string name = n.get<std::string>();
        if (name == "E" || name == "vac" || name == "L")
            throw Error(Errc::ConfigError, "basis name collides with a grammar keyword");
        names.push_back(name);
    }
    Lattice lat(std::move(gram), std::move(names));

    Cocycle coc = trivial_cocycle(rank);
    if (j.contains("cocycle")) {
        coc.signs.clear();
        for (const auto& row : j["cocycle"]) coc.signs.push_back(json_ivec(row, rank));
    }
    if (!cocycle_validate(coc, lat))
        throw Error(Errc::ConfigError, "cocycle fails the sign condition");

    std::optional<Lambda> lambda;
    if (j.contains("lambda")) {
        Lambda lam;
        for (const auto& p : j["lambda"]["pairings"]) lam.pairings.push_back(json_rational(p));
        if ((long)lam.pairings.size() != rank)
            throw Error(Errc::ConfigError, "lambda pairings must have rank entries");
        lam.norm = json_rational(j["lambda"]["norm"]);
        lambda = std::move(lam);
    }

    Config cfg(Context(std::move(lat), std::move(coc), std::move(lambda)));

    if (j.contains("submonoids")) {
        for (auto& [name, def] : j["submonoids"].items()) {
            std::string kind = def.value("kind", "split");
            if (kind == "split") {
                std::vector<IVec> free, nonneg;
                if (def.contains("free"))
                    for (const auto& v : def["free"]) free.push_back(json_ivec(v, rank));
                if (def.contains("nonneg"))
                    for (const auto& v : def["nonneg"]) nonneg.push_back(json_ivec(v, rank));
                cfg.submonoids.emplace(name, SubMonoid::split(std::move(free), std::move(nonneg)));
            } else if (kind == "generated") {
                std::vector<IVec> gens;
                for (const auto& v : def["generators"]) gens.push_back(json_ivec(v, rank));
                long bound = def.value("search_bound", 20);
                cfg.submonoids.emplace(name, SubMonoid::generated(std::move(gens), bound));
            } else {
                throw Error(Errc::ConfigError, "submonoid kind must be split or generated");
            }
        }
    }
    cfg.digest = fnv1a_digest(j.dump());
    return cfg;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ConfigError, "cannot open config file " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_config(text);
}

}  // namespace voa
