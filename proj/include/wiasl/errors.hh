#ifndef WIASL_GUARD_ERRORS_HH
#define WIASL_GUARD_ERRORS_HH 1

#include <stdexcept>
#include <string>
#include <vector>

namespace wiasl
{
    class WiaslError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    // A sum or an inserted element does not fit below the configured universe bound.
    class UniverseOverflow : public WiaslError
    {
        public:
            using WiaslError::WiaslError;
    };

    class InvalidParameter : public WiaslError
    {
        public:
            using WiaslError::WiaslError;
    };

    class SizeLimitExceeded : public WiaslError
    {
        public:
            using WiaslError::WiaslError;
    };

    class NotAnEdge : public WiaslError
    {
        public:
            using WiaslError::WiaslError;
    };

    class InvalidInput : public WiaslError
    {
        public:
            using WiaslError::WiaslError;
    };

    class NotBipartite : public WiaslError
    {
        public:
            NotBipartite(const std::string & what, std::vector<int> odd_cycle) :
                WiaslError(what),
                _odd_cycle(std::move(odd_cycle))
            {
            }

            auto odd_cycle() const -> const std::vector<int> & { return _odd_cycle; }

        private:
            std::vector<int> _odd_cycle;
    };

    class SearchTimeout : public WiaslError
    {
        public:
            using WiaslError::WiaslError;
    };
}

#endif
