#include "mordell_cli/cli.hpp"

#include <iostream>

int main(int argc, char ** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return mordell::cli::dispatch(args, std::cout, std::cerr, mordell::cli::environment_from_process());
}
