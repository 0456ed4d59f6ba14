#ifndef WIASL_GUARD_CONSTRUCTORS_HH
#define WIASL_GUARD_CONSTRUCTORS_HH 1

#include <wiasl/graph.hh>
#include <wiasl/labeling.hh>

#include <cstddef>
#include <string_view>

namespace wiasl
{
    /**
     * Published weak set-labeling number for each family:
     *
     *   path 2 + floor(n/2)     cycle 2 + floor(n/2)     complete 2n - 3
     *   wheel 3 + floor(n/2)    helm n + 3               friendship n + 3
     *   sunlet n + 2            sun n + 3                complete_sun n + 3
     *
     * These are claims. The solver audits them; nothing here assumes they are minimal.
     */
    auto claimed_value(const FamilySpec & spec) -> std::size_t;

    /// Where a construct() labeling came from.
    enum class Scheme
    {
        Published,          ///< the published assignment, unchanged
        PublishedRepaired,  ///< the published assignment with one vertex relabelled by local search
        Repaired            ///< a replacement assignment (zig-zag cycle order, shifted cycle, ...)
    };

    auto scheme_name(Scheme s) -> std::string_view;

    struct Construction
    {
        FamilySpec spec;
        SetLabeling labeling;
        std::size_t claimed;
        /// |minimal_ground_set(labeling)|; the labeling's ground set is exactly {1..ground_size}.
        std::size_t ground_size;
        /// ground_size differs from claimed.
        bool exception;
        Scheme scheme;
    };

    /**
     * The published labeling for the family, transcribed as stated, with the
     * ground set taken as {1..claimed}. Several of these are not WIASLs
     * within that ground set (or at all); construct() checks and repairs.
     */
    auto published_scheme(const FamilySpec & spec) -> SetLabeling;

    /**
     * A WIASL of the family graph over a ground set {1..m} of consecutive
     * positive integers. Tries the published scheme first, then a
     * first-vertex relabelling (paths and cycles), then the family's repaired
     * scheme. When m cannot be brought down to the claimed value the result
     * is still returned, with exception set.
     */
    auto construct(const FamilySpec & spec) -> Construction;

    /**
     * The instances where construct() is known to fall short of the claimed
     * value: complete n <= 3, odd paths from n = 5, every cycle, every wheel,
     * and complete suns from n = 7.
     */
    auto known_shortfall(const FamilySpec & spec) -> bool;

    /**
     * A k-uniform WIASL. k = 1: distinct singletons everywhere. k >= 2: part
     * A of the bipartition gets distinct singletons, part B distinct k-sets.
     * Throws NotBipartite (with an odd cycle) for k >= 2 on a non-bipartite
     * graph, InvalidParameter for k = 0.
     */
    auto construct_k_uniform(const Graph & g, std::size_t k) -> SetLabeling;
}

#endif
