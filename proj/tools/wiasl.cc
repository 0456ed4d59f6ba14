#include <wiasl/cli.hh>

#include <iostream>
#include <string>
#include <vector>

auto main(int argc, char * argv[]) -> int
{
    std::vector<std::string> args(argv, argv + argc);
    return wiasl::run_cli(args, std::cout, std::cerr);
}
