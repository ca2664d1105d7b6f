#include "cli_app.hpp"

#include <iostream>

int main(int argc, char **argv)
{
    return singlet::cli::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
