#pragma once

#include "mordell/bigint.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mordell::cli {

using Json = nlohmann::ordered_json;

/// Malformed command line; exit status 64.
class UsageError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

enum class Format { json, csv, text };

Format parse_format(std::string const & name);

/// A JSON number when |v| <= 2^53, otherwise its decimal string.
Json json_int(BigInt const & v);
/// Integral values via json_int, others as "p/q".
Json json_rational(Rational const & q);
/// Decimal string that always carries a '.' or an exponent.
Json json_real(std::string digits);

std::string emit(Json const & result, Format format);

/// Inverse of emit for json and csv. Text output is not parsed.
Json parse(std::string const & bytes, Format format);

/// Canonical parameters: option name without dashes -> value text.
using Params = std::map<std::string, std::string>;

struct RunManifest
{
    std::string subcommand;
    Params parameters;
    std::string version;
    std::string timestamp;
    std::optional<std::uint64_t> seed;

    Json to_json() const;
    static RunManifest from_json(Json const & j);
};

std::string cache_key(std::string const & subcommand, Params const & params);

struct CacheRecord
{
    std::string key;
    Json value;
    RunManifest manifest;

    Json to_json() const;
    static CacheRecord from_json(Json const & j);
};

/// JSON-lines file, one record per line; later records win on lookup.
class ResultCache
{
  public:
    explicit ResultCache(std::filesystem::path path);

    std::optional<CacheRecord> lookup(std::string const & key) const;
    void store(CacheRecord const & record) const;
    std::vector<CacheRecord> records() const;
    std::filesystem::path const & path() const { return path_; }

  private:
    std::filesystem::path path_;
};

struct Context
{
    unsigned precision_bits = 0; ///< 0 selects long double
    unsigned threads = 1;
};

std::vector<std::string> const & subcommand_names();

/// Runs one subcommand on canonical parameters. Throws UsageError,
/// PreconditionError or anything else for internal failures.
Json run_command(std::string const & name, Params const & params, Context const & ctx);

std::string tool_version();

struct Environment
{
    std::optional<std::string> cache_path; ///< MORDELL_LAB_CACHE
};

Environment environment_from_process();

/// Full command line handling. Exit codes: 0 success, 1 internal error,
/// 2 precondition error, 64 usage error or unknown subcommand.
int dispatch(std::vector<std::string> const & args, std::ostream & out, std::ostream & err,
             Environment const & env = {});

} // namespace mordell::cli
