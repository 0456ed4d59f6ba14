#ifndef WIASL_GUARD_GRAPH_HH
#define WIASL_GUARD_GRAPH_HH 1

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wiasl
{
    using Vertex = int;
    using Edge = std::pair<Vertex, Vertex>;

    /// What a generator says a vertex is, so that labelers can address v_i, u_i, w_i and the hub directly.
    enum class Role
    {
        None,
        Path,
        Cycle,
        Clique,
        Pendant,
        Hub,
        Petal,
        Apex
    };

    auto role_name(Role r) -> std::string_view;
    auto parse_role(std::string_view name) -> Role;

    /**
     * A simple undirected graph on vertices 0..n-1. Edges are stored with
     * u < v, sorted, with no duplicates; loops, repeated edges and out of
     * range endpoints are rejected at construction. Immutable afterwards.
     */
    class Graph
    {
        public:
            Graph() = default;
            Graph(int n, std::vector<Edge> edges, std::vector<Role> roles = {});

            auto n() const -> int { return _n; }
            auto edges() const -> const std::vector<Edge> & { return _edges; }
            auto edge_count() const -> std::size_t { return _edges.size(); }
            auto neighbours(Vertex v) const -> const std::vector<Vertex> & { return _adjacency.at(v); }
            auto degree(Vertex v) const -> std::size_t { return _adjacency.at(v).size(); }
            auto has_edge(Vertex u, Vertex v) const -> bool;

            auto roles() const -> const std::vector<Role> & { return _roles; }
            auto role(Vertex v) const -> Role { return _roles.at(v); }

            auto has_isolated_vertices() const -> bool;

            auto operator== (const Graph & other) const -> bool = default;

        private:
            int _n = 0;
            std::vector<Edge> _edges;
            std::vector<std::vector<Vertex>> _adjacency;
            std::vector<Role> _roles;
    };

    enum class Family
    {
        Path,
        Cycle,
        Complete,
        Wheel,
        Helm,
        Friendship,
        Sunlet,
        Sun,
        CompleteSun
    };

    inline constexpr Family all_families[] = { Family::Path, Family::Cycle, Family::Complete, Family::Wheel,
        Family::Helm, Family::Friendship, Family::Sunlet, Family::Sun, Family::CompleteSun };

    auto family_name(Family f) -> std::string_view;
    auto parse_family(std::string_view name) -> Family;
    auto family_min_parameter(Family f) -> int;

    struct FamilySpec
    {
        Family family;
        int n;
    };

    /// Throws InvalidParameter naming the bound when n is below the family minimum.
    auto validate(const FamilySpec & spec) -> void;

    /**
     * The family graph for parameter n.
     *
     *   path        P_n, vertices 0..n-1 in order
     *   cycle       C_n, vertices 0..n-1 around the cycle
     *   complete    K_n
     *   wheel       C_n + K_1: rim 0..n-1, hub n
     *   helm        wheel plus pendant n+i on rim vertex i; hub 2n
     *   friendship  n triangles {i, n+i, 2n}; the shared vertex 2n is the hub
     *   sunlet      C_n with pendant n+i on cycle vertex i
     *   sun         C_n with apex n+i adjacent to i and (i+1) mod n
     *   complete_sun as sun, with the cycle replaced by a clique on 0..n-1
     */
    auto generate(const FamilySpec & spec) -> Graph;

    /// A minimum vertex cover, found by branching on a highest degree vertex (take it, or take all of its neighbours).
    auto minimum_vertex_cover(const Graph & g) -> std::vector<Vertex>;

    /// Throws SizeLimitExceeded above this many vertices.
    inline constexpr int exact_structure_limit = 24;

    auto vertex_cover_number(const Graph & g) -> std::size_t;
    auto independence_number(const Graph & g) -> std::size_t;
    auto is_vertex_cover(const Graph & g, const std::vector<Vertex> & cover) -> bool;

    struct Bipartition
    {
        std::vector<Vertex> part_a, part_b;
    };

    struct BipartitionResult
    {
        std::optional<Bipartition> parts;
        /// When not bipartite: the vertices of an odd cycle, in cycle order.
        std::vector<Vertex> odd_cycle;
    };

    /// Two-colours each component by breadth-first search from its lowest vertex, which goes in part A.
    auto bipartition(const Graph & g) -> BipartitionResult;
}

#endif
