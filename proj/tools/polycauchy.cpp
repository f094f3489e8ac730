#include <iostream>

#include <polycauchy/cli.hpp>

int main(int argc, char **argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return polycauchy::cli_dispatch(args, std::cout, std::cerr);
}
