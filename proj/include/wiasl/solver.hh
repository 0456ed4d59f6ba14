#ifndef WIASL_GUARD_SOLVER_HH
#define WIASL_GUARD_SOLVER_HH 1

#include <wiasl/constructors.hh>
#include <wiasl/graph.hh>
#include <wiasl/labeling.hh>

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace wiasl
{
    enum class SolveMode
    {
        WIASL,
        WIASI,
        Uniform
    };

    enum class UniverseKind
    {
        /// candidate ground sets {lo, ..., lo + m - 1}
        Segment,
        /// every m-subset of {lo, ..., U}
        AllSubsets
    };

    enum class SolveStatus
    {
        Optimal,
        Timeout,
        Infeasible
    };

    auto status_name(SolveStatus s) -> std::string_view;
    auto mode_name(SolveMode m) -> std::string_view;

    /// The solver works on 64 bit masks, so every element (and every sum it keeps) must be <= 63.
    inline constexpr unsigned solver_universe_limit = 63;

    struct SolveOptions
    {
        SolveMode mode = SolveMode::WIASL;
        /// edge label cardinality for SolveMode::Uniform
        std::size_t k = 0;

        UniverseKind universe = UniverseKind::Segment;
        /// U, the largest element a ground set may contain. 0 lets audit() pick 2 * claimed + 2.
        unsigned universe_bound = 0;
        /// lo = 0 instead of 1
        bool allow_zero = false;

        /// Reject labelings where every vertex is a singleton (ignored for SolveMode::Uniform).
        bool require_non_uniform = true;
        std::optional<std::size_t> max_label_size;

        /// zero means no limit
        std::chrono::milliseconds time_budget{ 0 };
        int max_vertices = 12;
        /// Worker threads for AllSubsets levels. Results do not depend on this.
        unsigned workers = 1;
    };

    struct SolveResult
    {
        SolveStatus status = SolveStatus::Infeasible;
        /// |X| of the first feasible level; only meaningful when status is Optimal.
        std::size_t minimum = 0;
        std::optional<SetLabeling> witness;
        /// minimality holds among ground sets inside {lo..universe_bound}
        unsigned universe_bound = 0;
        std::uint64_t nodes_explored = 0;
    };

    /**
     * Looks for a labeling valid for opts.mode using only elements of x.
     *
     * The singleton-labelled vertices of any WIASL cover every edge, so the
     * search walks the vertex covers of g (by size, then lexicographically),
     * gives every cover vertex a distinct singleton and every other vertex a
     * distinct set of two or more elements, and backtracks as soon as an edge
     * label leaves x, two labels coincide, or (WIASI) two edge labels coincide.
     * The first labeling found wins; its ground set is x.
     *
     * Throws SizeLimitExceeded for graphs above opts.max_vertices or x with
     * elements above solver_universe_limit, SearchTimeout when the budget runs out.
     */
    auto exists_labeling(const Graph & g, const IntSet & x, const SolveOptions & opts) -> std::optional<SetLabeling>;

    /// Smallest m with 2^m - 1 >= n, raised to 2 when a non-singleton label is required and to k for k-uniform.
    auto ground_set_lower_bound(const Graph & g, const SolveOptions & opts) -> std::size_t;

    /**
     * Minimum |X| for which g has a labeling of the requested kind, searching
     * m = lower bound, lower bound + 1, ... up to the universe bound. Within a
     * level the lexicographically first feasible ground set is reported.
     */
    auto min_ground_set(const Graph & g, const SolveOptions & opts) -> SolveResult;

    struct SingletonCount
    {
        SolveStatus status = SolveStatus::Infeasible;
        std::size_t count = 0;
        std::optional<SetLabeling> witness;
        std::uint64_t nodes_explored = 0;
    };

    /// Fewest singleton labels over every WIASL of g inside x (all-singleton labelings allowed).
    auto min_singleton_count(const Graph & g, const IntSet & x, const SolveOptions & opts = {}) -> SingletonCount;

    struct AuditRow
    {
        FamilySpec spec;
        std::size_t claimed = 0;
        std::size_t construction = 0;
        bool construction_exception = false;
        Scheme scheme = Scheme::Published;
        SolveResult oracle;
        /// oracle minimum against the claimed value: '=', '<', '>', or '?' without an optimal oracle
        char relation = '?';
        unsigned universe_bound = 0;
        SolveOptions options;
    };

    /// Claimed value, construction size and solver minimum side by side; records the relation, asserts nothing.
    auto audit(const FamilySpec & spec, SolveOptions opts = {}) -> AuditRow;
}

#endif
