#include <iostream>
#include <string>
#include <vector>

#include <artin/cli.hpp>

int main(int argc, char **argv)
{
    const std::vector<std::string> args(argv + 1, argv + argc);
    const artin::CommandOutcome outcome = artin::run_command(args);
    std::cout << outcome.output;
    if (!outcome.error.empty()) {
        std::cerr << outcome.error << "\n";
    }
    return outcome.exit_code;
}
