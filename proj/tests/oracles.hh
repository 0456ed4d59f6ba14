#ifndef WIASL_GUARD_TESTS_ORACLES_HH
#define WIASL_GUARD_TESTS_ORACLES_HH 1

// Slow, obviously-correct reference implementations. Nothing in here uses the
// library: sets are std::set<int>, graphs are edge lists, and the labeling
// search tries every subset for every vertex with no vertex-cover reasoning.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle
{
    using Set = std::set<int>;
    using Edges = std::vector<std::pair<int, int>>;

    inline auto sumset(const Set & a, const Set & b) -> Set
    {
        Set r;
        for (int x : a)
            for (int y : b)
                r.insert(x + y);
        return r;
    }

    inline auto subset(const Set & a, const Set & b) -> bool
    {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    }

    /// every subset of ground with at least one element, as std::set, in mask order
    inline auto nonempty_subsets(const std::vector<int> & ground) -> std::vector<Set>
    {
        std::vector<Set> r;
        for (unsigned mask = 1; mask < (1u << ground.size()); ++mask) {
            Set s;
            for (unsigned i = 0; i < ground.size(); ++i)
                if (mask & (1u << i))
                    s.insert(ground[i]);
            r.push_back(s);
        }
        return r;
    }

    inline auto vertex_cover_number(int n, const Edges & edges) -> int
    {
        int best = n;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            bool covers = std::all_of(edges.begin(), edges.end(),
                [&] (auto e) { return (mask >> e.first & 1) || (mask >> e.second & 1); });
            if (covers)
                best = std::min(best, __builtin_popcount(mask));
        }
        return best;
    }

    inline auto independence_number(int n, const Edges & edges) -> int
    {
        int best = 0;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            bool independent = std::none_of(edges.begin(), edges.end(),
                [&] (auto e) { return (mask >> e.first & 1) && (mask >> e.second & 1); });
            if (independent)
                best = std::max(best, __builtin_popcount(mask));
        }
        return best;
    }

    enum class Kind { WIASL, WIASI };

    struct Query
    {
        Kind kind = Kind::WIASL;
        bool require_non_uniform = true;
    };

    /// Direct check of a complete labeling against the definitions.
    inline auto is_valid(int n, const Edges & edges, const std::vector<Set> & f, const Set & x, Query q) -> bool
    {
        for (int v = 0; v < n; ++v) {
            if (f[v].empty() || ! subset(f[v], x))
                return false;
            for (int w = 0; w < v; ++w)
                if (f[v] == f[w])
                    return false;
        }
        std::vector<Set> edge_labels;
        for (auto [u, v] : edges) {
            auto s = sumset(f[u], f[v]);
            if (! subset(s, x) || s.size() != std::max(f[u].size(), f[v].size()))
                return false;
            edge_labels.push_back(s);
        }
        if (q.kind == Kind::WIASI)
            for (size_t i = 0; i < edge_labels.size(); ++i)
                for (size_t j = 0; j < i; ++j)
                    if (edge_labels[i] == edge_labels[j])
                        return false;
        if (q.require_non_uniform && std::all_of(f.begin(), f.end(), [] (const Set & s) { return s.size() == 1; }))
            return false;
        return true;
    }

    /// Try every injective assignment of non-empty subsets of x, checking edges as soon as both ends are set.
    inline auto find_labeling(int n, const Edges & edges, const Set & x, Query q) -> std::optional<std::vector<Set>>
    {
        auto candidates = nonempty_subsets(std::vector<int>(x.begin(), x.end()));
        std::vector<Set> f(n);
        std::vector<std::vector<int>> earlier(n);
        for (auto [u, v] : edges)
            earlier[std::max(u, v)].push_back(std::min(u, v));

        std::function<bool(int)> place = [&] (int v) -> bool {
            if (v == n)
                return is_valid(n, edges, f, x, q);
            for (const auto & c : candidates) {
                bool ok = true;
                for (int w = 0; w < v && ok; ++w)
                    ok = f[w] != c;
                for (int w : earlier[v]) {
                    if (! ok)
                        break;
                    auto s = sumset(f[w], c);
                    ok = subset(s, x) && s.size() == std::max(f[w].size(), c.size());
                }
                if (! ok)
                    continue;
                f[v] = c;
                if (place(v + 1))
                    return true;
            }
            return false;
        };
        if (place(0))
            return f;
        return std::nullopt;
    }

    /// Fewest singletons over every WIASL inside x (all-singleton labelings allowed); nullopt when none exists.
    inline auto min_singletons(int n, const Edges & edges, const Set & x) -> std::optional<int>
    {
        auto candidates = nonempty_subsets(std::vector<int>(x.begin(), x.end()));
        std::vector<Set> f(n);
        std::optional<int> best;
        std::function<void(int, int)> place = [&] (int v, int singles) {
            if (best && singles >= *best)
                return;
            if (v == n) {
                best = singles;
                return;
            }
            for (const auto & c : candidates) {
                bool ok = true;
                for (int w = 0; w < v && ok; ++w)
                    ok = f[w] != c;
                for (auto [a, b] : edges) {
                    if (! ok)
                        break;
                    int other = a == v ? b : b == v ? a : -1;
                    if (other < 0 || other > v)
                        continue;
                    const Set & o = other == v ? c : f[other];
                    auto s = sumset(o, c);
                    ok = subset(s, x) && s.size() == std::max(o.size(), c.size());
                }
                if (! ok)
                    continue;
                f[v] = c;
                place(v + 1, singles + (c.size() == 1 ? 1 : 0));
            }
        };
        place(0, 0);
        return best;
    }

    inline auto segment(int lo, int m) -> Set
    {
        Set s;
        for (int i = 0; i < m; ++i)
            s.insert(lo + i);
        return s;
    }

    /// Smallest |X| over every X inside {lo..hi} (all subsets) admitting a labeling.
    inline auto min_over_all_subsets(int n, const Edges & edges, int lo, int hi, Query q) -> std::optional<int>
    {
        std::vector<int> universe(hi - lo + 1);
        std::iota(universe.begin(), universe.end(), lo);
        auto all = nonempty_subsets(universe);
        std::stable_sort(all.begin(), all.end(), [] (const Set & a, const Set & b) { return a.size() < b.size(); });
        for (const auto & x : all)
            if (find_labeling(n, edges, x, q))
                return static_cast<int>(x.size());
        return std::nullopt;
    }

    /// Smallest m with {lo..lo+m-1} admitting a labeling, m + lo - 1 <= hi.
    inline auto min_over_segments(int n, const Edges & edges, int lo, int hi, Query q) -> std::optional<int>
    {
        for (int m = 1; lo + m - 1 <= hi; ++m)
            if (find_labeling(n, edges, segment(lo, m), q))
                return m;
        return std::nullopt;
    }

    /// Every graph on exactly n vertices up to isomorphism, as sorted edge lists.
    inline auto graphs_up_to_isomorphism(int n) -> std::vector<Edges>
    {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                pairs.emplace_back(u, v);

        std::set<std::uint32_t> seen;
        std::vector<Edges> result;
        std::vector<int> perm(n);
        for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
            std::iota(perm.begin(), perm.end(), 0);
            std::uint32_t canonical = UINT32_MAX;
            do {
                std::uint32_t image = 0;
                for (size_t i = 0; i < pairs.size(); ++i)
                    if (mask >> i & 1) {
                        int a = perm[pairs[i].first], b = perm[pairs[i].second];
                        auto it = std::find(pairs.begin(), pairs.end(), std::make_pair(std::min(a, b), std::max(a, b)));
                        image |= 1u << (it - pairs.begin());
                    }
                canonical = std::min(canonical, image);
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (seen.insert(canonical).second) {
                Edges edges;
                for (size_t i = 0; i < pairs.size(); ++i)
                    if (canonical >> i & 1)
                        edges.push_back(pairs[i]);
                result.push_back(edges);
            }
        }
        return result;
    }

    inline auto connected(int n, const Edges & edges) -> bool
    {
        std::vector<int> comp(n);
        std::iota(comp.begin(), comp.end(), 0);
        std::function<int(int)> find = [&] (int v) { return comp[v] == v ? v : comp[v] = find(comp[v]); };
        for (auto [u, v] : edges)
            comp[find(u)] = find(v);
        for (int v = 1; v < n; ++v)
            if (find(v) != find(0))
                return false;
        return true;
    }

    /// An odd cycle exists iff 2-colouring fails.
    inline auto bipartite(int n, const Edges & edges) -> bool
    {
        for (unsigned mask = 0; mask < (1u << n); ++mask)
            if (std::all_of(edges.begin(), edges.end(), [&] (auto e) { return (mask >> e.first & 1) != (mask >> e.second & 1); }))
                return true;
        return false;
    }
}

#endif
