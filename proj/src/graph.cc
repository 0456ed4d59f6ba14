#include <wiasl/graph.hh>
#include <wiasl/errors.hh>

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <queue>
#include <string>

using std::size_t;
using std::string;
using std::string_view;
using std::vector;

namespace wiasl
{
    namespace
    {
        constexpr std::array<std::pair<Role, string_view>, 8> role_names{ {
            { Role::None, "none" }, { Role::Path, "path" }, { Role::Cycle, "cycle" }, { Role::Clique, "clique" },
            { Role::Pendant, "pendant" }, { Role::Hub, "hub" }, { Role::Petal, "petal" }, { Role::Apex, "apex" } } };

        constexpr std::array<std::pair<Family, string_view>, 9> family_names{ {
            { Family::Path, "path" }, { Family::Cycle, "cycle" }, { Family::Complete, "complete" },
            { Family::Wheel, "wheel" }, { Family::Helm, "helm" }, { Family::Friendship, "friendship" },
            { Family::Sunlet, "sunlet" }, { Family::Sun, "sun" }, { Family::CompleteSun, "complete_sun" } } };

        using Mask = std::uint32_t;

        auto adjacency_masks(const Graph & g) -> vector<Mask>
        {
            if (g.n() > exact_structure_limit)
                throw SizeLimitExceeded{ "exact vertex cover search is limited to " + std::to_string(exact_structure_limit)
                    + " vertices, graph has " + std::to_string(g.n()) };
            vector<Mask> adj(g.n(), 0);
            for (auto [u, v] : g.edges()) {
                adj[u] |= Mask{ 1 } << v;
                adj[v] |= Mask{ 1 } << u;
            }
            return adj;
        }

        // Smallest cover of the edges among `alive` vertices, given `chosen` already in the cover.
        auto cover_search(const vector<Mask> & adj, Mask alive, Mask chosen, Mask & best, int & best_size) -> void
        {
            if (std::popcount(chosen) >= best_size)
                return;

            int pick = -1, pick_degree = 0;
            for (Mask rest = alive; rest != 0; rest &= rest - 1) {
                int v = std::countr_zero(rest);
                int d = std::popcount(adj[v] & alive);
                if (d > pick_degree) {
                    pick = v;
                    pick_degree = d;
                }
            }

            if (pick == -1) {
                best = chosen;
                best_size = std::popcount(chosen);
                return;
            }

            Mask without = alive & ~(Mask{ 1 } << pick);
            cover_search(adj, without, chosen | (Mask{ 1 } << pick), best, best_size);

            Mask neighbours = adj[pick] & alive;
            cover_search(adj, without & ~neighbours, chosen | neighbours, best, best_size);
        }
    }

    auto role_name(Role r) -> string_view
    {
        for (auto & [role, name] : role_names)
            if (role == r)
                return name;
        return "none";
    }

    auto parse_role(string_view name) -> Role
    {
        for (auto & [role, n] : role_names)
            if (n == name)
                return role;
        throw InvalidInput{ "unknown vertex role '" + string{ name } + "'" };
    }

    Graph::Graph(int n, vector<Edge> edges, vector<Role> roles) :
        _n(n),
        _adjacency(n < 0 ? 0 : n),
        _roles(std::move(roles))
    {
        if (n < 0)
            throw InvalidInput{ "negative vertex count" };
        if (_roles.empty())
            _roles.assign(n, Role::None);
        else if (_roles.size() != static_cast<size_t>(n))
            throw InvalidInput{ "role list has " + std::to_string(_roles.size()) + " entries for " + std::to_string(n)
                + " vertices" };

        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw InvalidInput{ "edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint outside 0.."
                    + std::to_string(n - 1) };
            if (u == v)
                throw InvalidInput{ "loop at vertex " + std::to_string(u) };
            _edges.emplace_back(std::min(u, v), std::max(u, v));
        }

        std::sort(_edges.begin(), _edges.end());
        if (auto dup = std::adjacent_find(_edges.begin(), _edges.end()); dup != _edges.end())
            throw InvalidInput{ "parallel edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ")" };

        for (auto [u, v] : _edges) {
            _adjacency[u].push_back(v);
            _adjacency[v].push_back(u);
        }
        for (auto & a : _adjacency)
            std::sort(a.begin(), a.end());
    }

    auto Graph::has_edge(Vertex u, Vertex v) const -> bool
    {
        if (u < 0 || u >= _n || v < 0 || v >= _n)
            return false;
        return std::binary_search(_adjacency[u].begin(), _adjacency[u].end(), v);
    }

    auto Graph::has_isolated_vertices() const -> bool
    {
        return std::any_of(_adjacency.begin(), _adjacency.end(), [] (const auto & a) { return a.empty(); });
    }

    auto family_name(Family f) -> string_view
    {
        for (auto & [family, name] : family_names)
            if (family == f)
                return name;
        return "?";
    }

    auto parse_family(string_view name) -> Family
    {
        for (auto & [family, n] : family_names)
            if (n == name)
                return family;
        throw InvalidParameter{ "unknown family '" + string{ name } + "'" };
    }

    auto family_min_parameter(Family f) -> int
    {
        switch (f) {
            case Family::Path:
            case Family::Complete:
                return 2;
            case Family::Friendship:
                return 1;
            case Family::Cycle:
            case Family::Wheel:
            case Family::Helm:
            case Family::Sunlet:
            case Family::Sun:
            case Family::CompleteSun:
                return 3;
        }
        return 3;
    }

    auto validate(const FamilySpec & spec) -> void
    {
        int lo = family_min_parameter(spec.family);
        if (spec.n < lo)
            throw InvalidParameter{ string{ family_name(spec.family) } + " needs n >= " + std::to_string(lo) + ", got "
                + std::to_string(spec.n) };
    }

    auto generate(const FamilySpec & spec) -> Graph
    {
        validate(spec);
        const int n = spec.n;
        vector<Edge> edges;
        vector<Role> roles;

        auto add_cycle = [&] () {
            for (int i = 0; i < n; ++i)
                edges.emplace_back(i, (i + 1) % n);
            roles.assign(n, Role::Cycle);
        };

        auto add_clique = [&] () {
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    edges.emplace_back(i, j);
            roles.assign(n, Role::Clique);
        };

        switch (spec.family) {
            case Family::Path:
                for (int i = 0; i + 1 < n; ++i)
                    edges.emplace_back(i, i + 1);
                roles.assign(n, Role::Path);
                return Graph{ n, edges, roles };

            case Family::Cycle:
                add_cycle();
                return Graph{ n, edges, roles };

            case Family::Complete:
                add_clique();
                return Graph{ n, edges, roles };

            case Family::Wheel:
                add_cycle();
                for (int i = 0; i < n; ++i)
                    edges.emplace_back(i, n);
                roles.push_back(Role::Hub);
                return Graph{ n + 1, edges, roles };

            case Family::Helm:
                add_cycle();
                for (int i = 0; i < n; ++i) {
                    edges.emplace_back(i, n + i);
                    edges.emplace_back(i, 2 * n);
                }
                roles.insert(roles.end(), n, Role::Pendant);
                roles.push_back(Role::Hub);
                return Graph{ 2 * n + 1, edges, roles };

            case Family::Friendship:
                for (int i = 0; i < n; ++i) {
                    edges.emplace_back(i, n + i);
                    edges.emplace_back(i, 2 * n);
                    edges.emplace_back(n + i, 2 * n);
                }
                roles.assign(2 * n, Role::Petal);
                roles.push_back(Role::Hub);
                return Graph{ 2 * n + 1, edges, roles };

            case Family::Sunlet:
                add_cycle();
                for (int i = 0; i < n; ++i)
                    edges.emplace_back(i, n + i);
                roles.insert(roles.end(), n, Role::Pendant);
                return Graph{ 2 * n, edges, roles };

            case Family::Sun:
            case Family::CompleteSun:
                if (spec.family == Family::Sun)
                    add_cycle();
                else
                    add_clique();
                for (int i = 0; i < n; ++i) {
                    edges.emplace_back(i, n + i);
                    edges.emplace_back((i + 1) % n, n + i);
                }
                roles.insert(roles.end(), n, Role::Apex);
                return Graph{ 2 * n, edges, roles };
        }

        throw InvalidParameter{ "unhandled family" };
    }

    auto minimum_vertex_cover(const Graph & g) -> vector<Vertex>
    {
        auto adj = adjacency_masks(g);
        Mask all = g.n() == 32 ? ~Mask{ 0 } : (Mask{ 1 } << g.n()) - 1;
        Mask best = all;
        int best_size = g.n() + 1;
        cover_search(adj, all, 0, best, best_size);

        vector<Vertex> result;
        for (Mask rest = best; rest != 0; rest &= rest - 1)
            result.push_back(std::countr_zero(rest));
        return result;
    }

    auto vertex_cover_number(const Graph & g) -> size_t
    {
        return minimum_vertex_cover(g).size();
    }

    auto independence_number(const Graph & g) -> size_t
    {
        return g.n() - vertex_cover_number(g);
    }

    auto is_vertex_cover(const Graph & g, const vector<Vertex> & cover) -> bool
    {
        vector<bool> in(g.n(), false);
        for (auto v : cover)
            if (v >= 0 && v < g.n())
                in[v] = true;
        return std::all_of(g.edges().begin(), g.edges().end(), [&] (const Edge & e) { return in[e.first] || in[e.second]; });
    }

    auto bipartition(const Graph & g) -> BipartitionResult
    {
        vector<int> colour(g.n(), -1), parent(g.n(), -1), depth(g.n(), 0);

        for (Vertex start = 0; start < g.n(); ++start) {
            if (colour[start] != -1)
                continue;
            colour[start] = 0;
            std::queue<Vertex> queue;
            queue.push(start);
            while (! queue.empty()) {
                Vertex u = queue.front();
                queue.pop();
                for (Vertex v : g.neighbours(u)) {
                    if (colour[v] == -1) {
                        colour[v] = 1 - colour[u];
                        parent[v] = u;
                        depth[v] = depth[u] + 1;
                        queue.push(v);
                    }
                    else if (colour[v] == colour[u]) {
                        // same colour, same BFS tree: walk both up to the common ancestor
                        vector<Vertex> left, right;
                        Vertex a = u, b = v;
                        while (depth[a] > depth[b]) { left.push_back(a); a = parent[a]; }
                        while (depth[b] > depth[a]) { right.push_back(b); b = parent[b]; }
                        while (a != b) {
                            left.push_back(a);
                            right.push_back(b);
                            a = parent[a];
                            b = parent[b];
                        }
                        left.push_back(a);
                        left.insert(left.end(), right.rbegin(), right.rend());
                        return BipartitionResult{ std::nullopt, left };
                    }
                }
            }
        }

        Bipartition parts;
        for (Vertex v = 0; v < g.n(); ++v)
            (colour[v] == 0 ? parts.part_a : parts.part_b).push_back(v);
        return BipartitionResult{ parts, {} };
    }
}
