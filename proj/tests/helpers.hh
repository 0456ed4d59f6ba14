#ifndef WIASL_GUARD_TESTS_HELPERS_HH
#define WIASL_GUARD_TESTS_HELPERS_HH 1

#include "oracles.hh"

#include <wiasl/graph.hh>
#include <wiasl/intset.hh>
#include <wiasl/labeling.hh>

namespace test_helpers
{
    inline auto edges_of(const wiasl::Graph & g) -> oracle::Edges
    {
        oracle::Edges r;
        for (auto [u, v] : g.edges())
            r.emplace_back(u, v);
        return r;
    }

    inline auto graph_of(int n, const oracle::Edges & edges) -> wiasl::Graph
    {
        std::vector<wiasl::Edge> e(edges.begin(), edges.end());
        return wiasl::Graph{ n, e };
    }

    inline auto to_oracle(const wiasl::IntSet & s) -> oracle::Set
    {
        oracle::Set r;
        for (auto e : s)
            r.insert(static_cast<int>(e));
        return r;
    }

    inline auto to_intset(const oracle::Set & s) -> wiasl::IntSet
    {
        wiasl::IntSet r;
        for (int e : s)
            r.insert(static_cast<wiasl::IntSet::Element>(e));
        return r;
    }

    inline auto labels_of(const wiasl::SetLabeling & f) -> std::vector<oracle::Set>
    {
        std::vector<oracle::Set> r;
        for (const auto & l : f.labels())
            r.push_back(to_oracle(l));
        return r;
    }

    /// Independent check of a library labeling against the definitions.
    inline auto oracle_accepts(const wiasl::SetLabeling & f, oracle::Query q = {}) -> bool
    {
        return oracle::is_valid(f.graph().n(), edges_of(f.graph()), labels_of(f), to_oracle(f.ground_set()), q);
    }

    inline auto singletons_cover(const wiasl::Graph & g, const std::vector<oracle::Set> & f) -> bool
    {
        for (auto [u, v] : g.edges())
            if (f[u].size() != 1 && f[v].size() != 1)
                return false;
        return true;
    }
}

#endif
