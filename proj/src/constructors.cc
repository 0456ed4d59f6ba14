#include <wiasl/constructors.hh>
#include <wiasl/errors.hh>

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

using std::optional;
using std::size_t;
using std::vector;

namespace wiasl
{
    namespace
    {
        using E = IntSet::Element;

        auto seg(size_t m) -> IntSet
        {
            return IntSet::segment(1, static_cast<E>(m));
        }

        // 1, n, 2, n-1, 3, ...: any two neighbours (cyclically) sum to at most n + 2
        auto zigzag(int n) -> vector<E>
        {
            vector<E> result;
            for (int i = 0; i < n; ++i)
                result.push_back(i % 2 == 0 ? 1 + i / 2 : n - i / 2);
            return result;
        }

        // WIASL within {1..m} whose labels and edge labels use every element of {1..m}
        auto fits(const SetLabeling & f, size_t m) -> bool
        {
            auto x = seg(m);
            return verify(f.with_ground_set(x), LabelingClass::WIASL).valid && minimal_ground_set(f) == x;
        }

        // Distinct 2-subsets, one per slot, slot i drawn from {1..bounds[i]}; tightest slots
        // pick first, each taking the lexicographically first pair still free.
        auto fill_pairs(const vector<E> & bounds, const vector<IntSet> & reserved) -> vector<IntSet>
        {
            vector<size_t> order(bounds.size());
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&] (size_t a, size_t b) { return bounds[a] < bounds[b]; });

            std::set<IntSet> used(reserved.begin(), reserved.end());
            vector<IntSet> result(bounds.size());
            for (auto i : order) {
                bool placed = false;
                if (bounds[i] >= 2)
                    for (const auto & p : subsets_of(IntSet::segment(1, bounds[i]), 2, 2))
                        if (used.insert(p).second) {
                            result[i] = p;
                            placed = true;
                            break;
                        }
                if (! placed)
                    throw std::logic_error{ "no free pair below bound " + std::to_string(bounds[i]) };
            }
            return result;
        }

        auto singletons(const vector<E> & values) -> vector<IntSet>
        {
            vector<IntSet> result;
            for (auto v : values)
                result.push_back(IntSet{ v });
            return result;
        }

        auto labeling_over(const FamilySpec & spec, vector<IntSet> labels) -> SetLabeling
        {
            auto g = generate(spec);
            auto f = SetLabeling{ g, std::move(labels), IntSet{} };
            return f.with_ground_set(minimal_ground_set(f));
        }

        // ---- published assignments, 1-based indices as written, vertex i-1 in our numbering

        auto published_path(int n) -> vector<IntSet>
        {
            vector<IntSet> f(n);
            auto at = [&] (int i) -> IntSet & { return f[i - 1]; };
            int r = n / 2;
            for (int i = 1; i <= r; ++i)
                at(2 * i) = IntSet{ E(i) };
            if (n % 2 == 0) {
                for (int j = 1; j <= r - 1; ++j)
                    at(2 * r - (2 * j - 1)) = IntSet{ E(j), E(j + 1) };
                at(1) = IntSet{ E(r), 1 };
            }
            else {
                for (int j = 1; j <= r - 1; ++j)
                    at(2 * r + 1 - 2 * (j - 1)) = IntSet{ E(j), E(j + 1) };
                at(3) = IntSet{ E(r), 1 };
                at(1) = IntSet{ 1, 2, 3 };
            }
            return f;
        }

        auto published_cycle(int n) -> vector<IntSet>
        {
            vector<IntSet> f(n);
            auto at = [&] (int i) -> IntSet & { return f[i - 1]; };
            int r = n / 2;
            if (n % 2 == 0) {
                for (int i = 1; i <= r; ++i)
                    at(2 * i) = IntSet{ E(i) };
                for (int j = 1; j <= r - 1; ++j)
                    at(2 * r - (2 * j - 1)) = IntSet{ E(j), E(j + 1) };
                at(1) = IntSet{ E(r), 1 };
            }
            else {
                for (int i = 1; i <= r + 1; ++i)
                    at(2 * i - 1) = IntSet{ E(i) };
                for (int i = 1; i <= r - 1; ++i)
                    at(2 * i) = IntSet{ E(r - i + 1), E(r - i) };
                at(2 * r) = IntSet{ 1, 2 };
            }
            return f;
        }

        // cycle v_i = {i}, attached u_n = {1,2}, u_{n-1} = {2,3}, ..., u_2 = {n-1,n}, u_1 = {1,n}
        auto published_cycle_with_pairs(int n) -> vector<IntSet>
        {
            vector<IntSet> f;
            for (int i = 1; i <= n; ++i)
                f.push_back(IntSet{ E(i) });
            f.push_back(IntSet{ 1, E(n) });
            for (int i = 2; i <= n; ++i)
                f.push_back(IntSet{ E(n + 1 - i), E(n + 2 - i) });
            return f;
        }

        // ---- repairs

        // Relabel vertex `v` with the first subset of {1..m} (non-singletons first) that makes f fit.
        auto relabel_one(const SetLabeling & f, Vertex v, size_t m) -> optional<SetLabeling>
        {
            auto x = seg(m);
            auto labels = f.labels();

            // every element of the new label plus a neighbour's maximum must stay <= m
            size_t room = m;
            for (auto w : f.graph().neighbours(v))
                if (! labels[w].empty())
                    room = std::min<size_t>(room, m - std::min<size_t>(m, labels[w].max()));
            if (room == 0)
                return std::nullopt;
            auto pool = seg(room);

            auto attempt = [&] (const IntSet & candidate) -> optional<SetLabeling> {
                labels[v] = candidate;
                SetLabeling trial{ f.graph(), labels, x };
                if (fits(trial, m))
                    return trial;
                return std::nullopt;
            };
            if (room >= 2)
                for (const auto & c : subsets_of(pool, 2, room))
                    if (auto r = attempt(c))
                        return r;
            for (const auto & c : subsets_of(pool, 1, 1))
                if (auto r = attempt(c))
                    return r;
            return std::nullopt;
        }

        // Even cycle: singletons shift+1..shift+r at odd positions, pairs between.
        // Odd cycle: singletons shift+1..shift+r+1 at even positions, the two ends adjacent.
        // Uses {1..r+3+shift} where r = floor(n/2).
        auto shifted_cycle(int n, E shift) -> vector<IntSet>
        {
            int r = n / 2;
            vector<IntSet> f(n);
            if (n % 2 == 0) {
                for (int i = 1; i <= r; ++i)
                    f[2 * i - 1] = IntSet{ E(i) + shift };
                for (int i = 1; i < r; ++i)
                    f[2 * i] = IntSet{ E(r + 1 - i), E(r + 2 - i) };
                f[0] = IntSet{ 1, 2 };
            }
            else {
                for (int j = 0; j <= r; ++j)
                    f[2 * j] = IntSet{ E(j + 1) + shift };
                for (int j = 1; j <= r; ++j)
                    f[2 * j - 1] = IntSet{ E(r + 1 - j), E(r + 2 - j) };
            }
            return f;
        }

        auto repaired_path(int n) -> SetLabeling
        {
            FamilySpec spec{ Family::Path, n };
            size_t target = claimed_value(spec);

            // extend the even construction by one vertex, if any label for it fits
            auto shorter = construct(FamilySpec{ Family::Path, n - 1 });
            auto labels = shorter.labeling.labels();
            labels.push_back(IntSet{});
            if (auto r = relabel_one(SetLabeling{ generate(spec), labels, seg(target) }, n - 1, target))
                return *r;

            // otherwise the odd cycle assignment with its closing edge removed
            return labeling_over(spec, shifted_cycle(n, 0));
        }

        auto repaired_sun(const FamilySpec & spec) -> SetLabeling
        {
            int n = spec.n;
            E m = E(claimed_value(spec));
            auto cycle = zigzag(n);
            vector<E> bounds;
            for (int i = 0; i < n; ++i)
                bounds.push_back(m - std::max(cycle[i], cycle[(i + 1) % n]));
            auto labels = singletons(cycle);
            auto apexes = fill_pairs(bounds, {});
            labels.insert(labels.end(), apexes.begin(), apexes.end());
            return labeling_over(spec, labels);
        }

        // Clique vertex 0 takes {1,2}, the rest distinct singletons 1..n-1 ordered so that
        // small values sit next to vertex 0; the apexes are then filled by backtracking.
        auto repaired_complete_sun(const FamilySpec & spec) -> SetLabeling
        {
            int n = spec.n;
            E m = E(std::max<long>(n + 3, 2L * n - 3));

            vector<E> order{ 1 };
            for (int lo = 3, hi = n - 1; lo <= hi; ) {
                order.push_back(E(hi--));
                if (lo <= hi)
                    order.push_back(E(lo++));
            }
            order.push_back(2);

            vector<IntSet> clique{ IntSet{ 1, 2 } };
            for (auto v : order)
                clique.push_back(IntSet{ v });

            vector<IntSet> candidates;
            for (const auto & p : subsets_of(seg(m), 2, 2))
                candidates.push_back(p);
            for (const auto & s : subsets_of(seg(m), 1, 1))
                candidates.push_back(s);

            std::set<IntSet> used(clique.begin(), clique.end());
            vector<IntSet> apex(n);

            auto fits_next_to = [&] (const IntSet & c, const IntSet & neighbour) {
                if (c.max() + neighbour.max() > m)
                    return false;
                return sumset(c, neighbour).size() == std::max(c.size(), neighbour.size());
            };

            auto place = [&] (auto & self, int i) -> bool {
                if (i == n)
                    return true;
                for (const auto & c : candidates) {
                    if (used.contains(c) || ! fits_next_to(c, clique[i]) || ! fits_next_to(c, clique[(i + 1) % n]))
                        continue;
                    used.insert(c);
                    apex[i] = c;
                    if (self(self, i + 1))
                        return true;
                    used.erase(c);
                }
                return false;
            };

            if (! place(place, 0))
                throw std::logic_error{ "complete sun apex assignment failed for n=" + std::to_string(n) };

            clique.insert(clique.end(), apex.begin(), apex.end());
            return labeling_over(spec, clique);
        }

        auto repaired_scheme(const FamilySpec & spec) -> SetLabeling
        {
            int n = spec.n;
            switch (spec.family) {
                case Family::Path:
                    return repaired_path(n);

                case Family::Cycle:
                    return labeling_over(spec, shifted_cycle(n, 0));

                case Family::Wheel: {
                    // the hub must be a singleton: a set hub next to n distinct singletons needs too much room
                    auto labels = shifted_cycle(n, 1);
                    labels.push_back(IntSet{ 1 });
                    return labeling_over(spec, labels);
                }

                case Family::Helm: {
                    E m = E(claimed_value(spec));
                    auto rim = zigzag(n);
                    IntSet hub{ 2, 3 };
                    vector<E> bounds;
                    for (auto s : rim)
                        bounds.push_back(m - s);
                    auto labels = singletons(rim);
                    auto pendants = fill_pairs(bounds, { hub });
                    labels.insert(labels.end(), pendants.begin(), pendants.end());
                    labels.push_back(hub);
                    return labeling_over(spec, labels);
                }

                case Family::Sunlet: {
                    E m = E(claimed_value(spec));
                    auto rim = zigzag(n);
                    vector<E> bounds;
                    for (auto s : rim)
                        bounds.push_back(m - s);
                    auto labels = singletons(rim);
                    auto pendants = fill_pairs(bounds, {});
                    labels.insert(labels.end(), pendants.begin(), pendants.end());
                    return labeling_over(spec, labels);
                }

                case Family::Sun:
                    return repaired_sun(spec);

                case Family::CompleteSun:
                    return repaired_complete_sun(spec);

                case Family::Complete:
                case Family::Friendship:
                    break;
            }
            return labeling_over(spec, published_scheme(spec).labels());
        }
    }

    auto claimed_value(const FamilySpec & spec) -> size_t
    {
        validate(spec);
        size_t n = spec.n;
        switch (spec.family) {
            case Family::Path:
            case Family::Cycle:
                return 2 + n / 2;
            case Family::Complete:
                return 2 * n - 3;
            case Family::Wheel:
                return 3 + n / 2;
            case Family::Helm:
            case Family::Friendship:
            case Family::Sun:
            case Family::CompleteSun:
                return n + 3;
            case Family::Sunlet:
                return n + 2;
        }
        return 0;
    }

    auto scheme_name(Scheme s) -> std::string_view
    {
        switch (s) {
            case Scheme::Published: return "published";
            case Scheme::PublishedRepaired: return "published-repaired";
            case Scheme::Repaired: return "repaired";
        }
        return "?";
    }

    auto published_scheme(const FamilySpec & spec) -> SetLabeling
    {
        validate(spec);
        const int n = spec.n;
        vector<IntSet> labels;

        switch (spec.family) {
            case Family::Path:
                labels = published_path(n);
                break;

            case Family::Cycle:
                labels = published_cycle(n);
                break;

            case Family::Complete:
                for (int i = 1; i < n; ++i)
                    labels.push_back(IntSet{ E(i) });
                labels.push_back(IntSet{ 1, 2 });
                break;

            case Family::Wheel:
                labels = published_cycle(n);
                labels.push_back(IntSet{ 1, 3 });
                break;

            case Family::Helm:
                labels = published_cycle_with_pairs(n);
                labels.push_back(IntSet{ 1, 3 });
                break;

            case Family::Friendship:
                for (int i = 1; i <= n; ++i)
                    labels.push_back(IntSet{ E(i + 1) });
                for (int i = 1; i <= n; ++i)
                    labels.push_back(IntSet{ E(n + 1 - i), E(n + 2 - i) });
                labels.push_back(IntSet{ 1 });
                break;

            case Family::Sunlet:
            case Family::Sun:
            case Family::CompleteSun:
                labels = published_cycle_with_pairs(n);
                break;
        }

        return SetLabeling{ generate(spec), std::move(labels), seg(claimed_value(spec)) };
    }

    auto construct(const FamilySpec & spec) -> Construction
    {
        size_t claimed = claimed_value(spec);

        auto finish = [&] (SetLabeling f, Scheme scheme) {
            auto ground = minimal_ground_set(f);
            if (ground != seg(ground.size()) || ! verify(f.with_ground_set(ground), LabelingClass::WIASL).valid)
                throw std::logic_error{ "construction for " + std::string{ family_name(spec.family) } + " "
                    + std::to_string(spec.n) + " is not a WIASL over a segment" };
            size_t m = ground.size();
            return Construction{ spec, f.with_ground_set(ground), claimed, m, m != claimed, scheme };
        };

        auto published = published_scheme(spec);
        if (fits(published, claimed))
            return finish(published, Scheme::Published);

        if (spec.family == Family::Path || spec.family == Family::Cycle)
            if (auto r = relabel_one(published, 0, claimed))
                return finish(*r, Scheme::PublishedRepaired);

        return finish(repaired_scheme(spec), Scheme::Repaired);
    }

    auto known_shortfall(const FamilySpec & spec) -> bool
    {
        validate(spec);
        switch (spec.family) {
            case Family::Complete:
                return spec.n <= 3;
            case Family::Path:
                return spec.n % 2 == 1 && spec.n >= 5;
            case Family::Cycle:
            case Family::Wheel:
                return true;
            case Family::CompleteSun:
                return spec.n >= 7;
            case Family::Helm:
            case Family::Friendship:
            case Family::Sunlet:
            case Family::Sun:
                return false;
        }
        return false;
    }

    auto construct_k_uniform(const Graph & g, size_t k) -> SetLabeling
    {
        if (k == 0)
            throw InvalidParameter{ "k-uniform labeling needs k >= 1" };

        vector<IntSet> labels(g.n());
        if (k == 1) {
            for (Vertex v = 0; v < g.n(); ++v)
                labels[v] = IntSet{ E(v + 1) };
        }
        else {
            auto split = bipartition(g);
            if (! split.parts)
                throw NotBipartite{ "a " + std::to_string(k) + "-uniform WIASL needs a bipartite graph; found an odd cycle of length "
                    + std::to_string(split.odd_cycle.size()), split.odd_cycle };

            const auto & a = split.parts->part_a;
            const auto & b = split.parts->part_b;
            for (size_t i = 0; i < a.size(); ++i)
                labels[a[i]] = IntSet{ E(i + 1) };

            if (! b.empty()) {
                auto pool = seg(k - 1 + b.size());
                size_t i = 0;
                for (const auto & s : subsets_of(pool, k, k)) {
                    if (i == b.size())
                        break;
                    labels[b[i++]] = s;
                }
            }
        }

        SetLabeling f{ g, std::move(labels), IntSet{} };
        return f.with_ground_set(minimal_ground_set(f));
    }
}
