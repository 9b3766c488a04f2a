#pragma once

#include "mordell_cli/cli.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mordell::cli {

struct OptionSpec
{
    std::string name;
    std::string help;
    std::optional<std::string> default_value = std::nullopt; ///< absent: optional with no default
    bool flag = false;
    bool required = false;
};

struct CommandSpec
{
    std::string name;
    std::string help;
    std::vector<OptionSpec> options;
    Json (*run)(Params const &, Context const &);
    bool cacheable = true;
};

std::vector<CommandSpec> const & command_specs();

} // namespace mordell::cli
