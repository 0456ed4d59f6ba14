#ifndef WIASL_GUARD_CLI_HH
#define WIASL_GUARD_CLI_HH 1

#include <iosfwd>
#include <string>
#include <vector>

namespace wiasl
{
    namespace exit_code
    {
        inline constexpr int ok = 0;
        inline constexpr int invalid_labeling = 1;
        inline constexpr int usage = 2;
        inline constexpr int infeasible = 3;
        inline constexpr int timeout = 4;
    }

    /// Runs one command line (args[0] is the program name). Nothing is read from the environment.
    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif
