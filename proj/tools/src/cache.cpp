#include "mordell_cli/cli.hpp"

#include <fstream>

namespace mordell::cli {

Json RunManifest::to_json() const
{
    Json params = Json::object();
    for (auto const & [k, v] : parameters)
        params[k] = v;
    Json j = Json::object();
    j["subcommand"] = subcommand;
    j["parameters"] = params;
    j["version"] = version;
    j["timestamp"] = timestamp;
    j["seed"] = seed ? Json(*seed) : Json(nullptr);
    return j;
}

RunManifest RunManifest::from_json(Json const & j)
{
    RunManifest m;
    m.subcommand = j.at("subcommand").get<std::string>();
    for (auto const & [k, v] : j.at("parameters").items())
        m.parameters[k] = v.get<std::string>();
    m.version = j.at("version").get<std::string>();
    m.timestamp = j.at("timestamp").get<std::string>();
    if (!j.at("seed").is_null())
        m.seed = j.at("seed").get<std::uint64_t>();
    return m;
}

std::string cache_key(std::string const & subcommand, Params const & params)
{
    // std::map iterates in key order, so the dump is canonical.
    Json p = Json::object();
    for (auto const & [k, v] : params)
        p[k] = v;
    return subcommand + " " + p.dump();
}

Json CacheRecord::to_json() const
{
    Json j = Json::object();
    j["key"] = key;
    j["value"] = value;
    j["manifest"] = manifest.to_json();
    return j;
}

CacheRecord CacheRecord::from_json(Json const & j)
{
    return {j.at("key").get<std::string>(), j.at("value"), RunManifest::from_json(j.at("manifest"))};
}

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) {}

std::vector<CacheRecord> ResultCache::records() const
{
    std::vector<CacheRecord> out;
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        out.push_back(CacheRecord::from_json(Json::parse(line)));
    }
    return out;
}

std::optional<CacheRecord> ResultCache::lookup(std::string const & key) const
{
    std::optional<CacheRecord> hit;
    for (auto & r : records())
        if (r.key == key)
            hit = std::move(r);
    return hit;
}

void ResultCache::store(CacheRecord const & record) const
{
    std::ofstream out(path_, std::ios::app);
    if (!out)
        throw std::runtime_error("cannot open cache file " + path_.string());
    out << record.to_json().dump() << '\n';
}

} // namespace mordell::cli
