#include "commands.hpp"

#include "mordell/error.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <ctime>
#include <deque>
#include <ostream>

#ifndef MORDELL_LAB_VERSION
#define MORDELL_LAB_VERSION "unknown"
#endif

namespace mordell::cli {

namespace {

constexpr int kUsage = 64;

std::string utc_now()
{
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string usage_text()
{
    std::string s = "usage: mordell-lab [--format json|csv|text] [--cache PATH] [--no-cache] [--precision BITS]\n"
                    "                   [--threads N] <subcommand> [options]\nsubcommands:";
    for (auto const & n : subcommand_names())
        s += " " + n;
    return s + "\n";
}

// First token that is not a global option or its value.
std::optional<std::string> find_subcommand(std::vector<std::string> const & args)
{
    static std::vector<std::string> const valued{"--format", "--cache", "--precision", "--threads"};
    for (std::size_t i = 0; i < args.size(); ++i) {
        auto const & a = args[i];
        if (a.rfind("-", 0) == 0) {
            if (std::find(valued.begin(), valued.end(), a) != valued.end())
                ++i;
            continue;
        }
        return a;
    }
    return std::nullopt;
}

Context context_from(Params const & params, unsigned threads)
{
    Context ctx;
    ctx.threads = threads;
    if (auto it = params.find("precision"); it != params.end())
        ctx.precision_bits = static_cast<unsigned>(std::stoul(it->second));
    return ctx;
}

Json audit(ResultCache const & cache, unsigned threads)
{
    auto records = cache.records();
    std::size_t mismatches = 0;
    Json keys = Json::array();
    for (auto const & r : records) {
        Json fresh = run_command(r.manifest.subcommand, r.manifest.parameters, context_from(r.manifest.parameters, threads));
        if (fresh.dump() != r.value.dump()) {
            ++mismatches;
            keys.push_back(r.key);
        }
    }
    Json out = Json::object();
    out["records"] = records.size();
    out["mismatches"] = mismatches;
    out["mismatched_keys"] = keys;
    return out;
}

} // namespace

std::string tool_version()
{
    return MORDELL_LAB_VERSION;
}

Environment environment_from_process()
{
    Environment env;
    if (char const * p = std::getenv("MORDELL_LAB_CACHE"); p != nullptr && *p != '\0')
        env.cache_path = p;
    return env;
}

int dispatch(std::vector<std::string> const & args, std::ostream & out, std::ostream & err, Environment const & env)
{
    bool wants_help = std::any_of(args.begin(), args.end(), [](auto const & a) { return a == "--help" || a == "-h"; });
    auto sub_name = find_subcommand(args);
    if (!wants_help) {
        if (!sub_name) {
            err << usage_text();
            return kUsage;
        }
        auto const & names = subcommand_names();
        if (std::find(names.begin(), names.end(), *sub_name) == names.end()) {
            err << "unknown subcommand '" << *sub_name << "'\n" << usage_text();
            return kUsage;
        }
    }

    CLI::App app{"Integral points on Mordell curves and related experiments", "mordell-lab"};
    app.fallthrough();
    app.require_subcommand(1);
    std::string format_name = "json";
    std::string cache_flag;
    bool no_cache = false;
    unsigned precision = 0;
    unsigned threads = 1;
    app.add_option("--format", format_name, "output format: json, csv or text")->capture_default_str();
    app.add_option("--cache", cache_flag, "JSON-lines cache file (default: $MORDELL_LAB_CACHE)");
    app.add_flag("--no-cache", no_cache, "neither read nor write the cache");
    app.add_option("--precision", precision, "MPFR working precision in bits; 0 uses long double")
        ->capture_default_str();
    app.add_option("--threads", threads, "worker threads for searches; 0 uses all cores")->capture_default_str();

    struct Bound
    {
        OptionSpec const * spec;
        CLI::Option * opt;
        std::string value;
        bool flag = false;
    };
    std::map<std::string, std::deque<Bound>> bound;
    for (auto const & spec : command_specs()) {
        auto * sub = app.add_subcommand(spec.name, spec.help);
        auto & slots = bound[spec.name];
        for (auto const & o : spec.options) {
            slots.push_back({&o, nullptr, o.default_value.value_or(""), false});
            auto & b = slots.back();
            if (o.flag) {
                b.opt = sub->add_flag("--" + o.name, b.flag, o.help);
            } else {
                b.opt = sub->add_option("--" + o.name, b.value, o.help);
                if (o.default_value)
                    b.opt->capture_default_str();
                if (o.required)
                    b.opt->required();
            }
        }
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (CLI::CallForHelp const &) {
        out << app.help();
        return 0;
    } catch (CLI::ParseError const & e) {
        err << e.what() << "\n" << usage_text();
        return kUsage;
    }

    try {
        Format format = parse_format(format_name);
        auto * sub = app.get_subcommands().front();
        std::string name = sub->get_name();

        std::optional<ResultCache> cache;
        if (!cache_flag.empty())
            cache.emplace(cache_flag);
        else if (env.cache_path)
            cache.emplace(*env.cache_path);

        if (name == "cache-audit") {
            require(cache.has_value(), "cache-audit needs --cache or MORDELL_LAB_CACHE");
            Json report = audit(*cache, threads);
            out << emit(report, format);
            return report["mismatches"].get<std::size_t>() == 0 ? 0 : 1;
        }

        Params params;
        for (auto const & b : bound[name]) {
            if (b.spec->flag)
                params[b.spec->name] = b.flag ? "true" : "false";
            else if (b.opt->count() > 0 || b.spec->default_value)
                params[b.spec->name] = b.value;
        }
        params["precision"] = std::to_string(precision);
        Context ctx = context_from(params, threads);

        std::string key = cache_key(name, params);
        Json value;
        RunManifest manifest;
        std::optional<CacheRecord> hit;
        if (cache && !no_cache)
            hit = cache->lookup(key);
        if (hit) {
            value = hit->value;
            manifest = hit->manifest;
        } else {
            value = run_command(name, params, ctx);
            manifest = {name, params, tool_version(), utc_now(), std::nullopt};
            if (cache && !no_cache)
                cache->store({key, value, manifest});
        }

        if (format == Format::json) {
            Json doc = Json::object();
            doc["result"] = value;
            doc["manifest"] = manifest.to_json();
            out << emit(doc, format);
        } else {
            out << emit(value, format);
        }
        return 0;
    } catch (UsageError const & e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (PreconditionError const & e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (std::exception const & e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace mordell::cli
