#include <wiasl/solver.hh>
#include <wiasl/errors.hh>

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

using std::optional;
using std::size_t;
using std::uint64_t;
using std::vector;

using Clock = std::chrono::steady_clock;

namespace wiasl
{
    namespace
    {
        using Mask = uint64_t;

        // keeps the candidate tables of a single search in memory
        constexpr size_t candidate_limit = size_t{ 1 } << 22;

        auto top_bit(Mask m) -> unsigned
        {
            return 63 - std::countl_zero(m);
        }

        // sum of two label masks; the caller has checked top_bit(a) + top_bit(b) <= 63
        auto mask_sumset(Mask a, Mask b) -> Mask
        {
            if (std::popcount(a) > std::popcount(b))
                std::swap(a, b);
            Mask result = 0;
            for (Mask rest = a; rest != 0; rest &= rest - 1)
                result |= b << std::countr_zero(rest);
            return result;
        }

        auto to_intset(Mask m) -> IntSet
        {
            IntSet result;
            for (Mask rest = m; rest != 0; rest &= rest - 1)
                result.insert(static_cast<IntSet::Element>(std::countr_zero(rest)));
            return result;
        }

        auto check_graph(const Graph & g, const SolveOptions & opts) -> void
        {
            if (g.n() > opts.max_vertices)
                throw SizeLimitExceeded{ "solver is limited to " + std::to_string(opts.max_vertices) + " vertices, graph has "
                    + std::to_string(g.n()) };
            if (g.n() > 64)
                throw SizeLimitExceeded{ "solver cannot handle more than 64 vertices" };
        }

        // Each vertex gets placed after as many of its neighbours as possible, so edges are checked early.
        auto search_order(const Graph & g) -> vector<Vertex>
        {
            vector<Vertex> order;
            vector<int> placed_neighbours(g.n(), 0);
            vector<bool> placed(g.n(), false);
            for (int step = 0; step < g.n(); ++step) {
                Vertex best = -1;
                for (Vertex v = 0; v < g.n(); ++v) {
                    if (placed[v])
                        continue;
                    if (best == -1 || placed_neighbours[v] > placed_neighbours[best]
                            || (placed_neighbours[v] == placed_neighbours[best] && g.degree(v) > g.degree(best)))
                        best = v;
                }
                placed[best] = true;
                order.push_back(best);
                for (auto w : g.neighbours(best))
                    ++placed_neighbours[w];
            }
            return order;
        }

        struct Budget
        {
            optional<Clock::time_point> deadline;
            const std::atomic<bool> * cancelled = nullptr;

            static auto from(const SolveOptions & opts) -> Budget
            {
                Budget b;
                if (opts.time_budget.count() > 0)
                    b.deadline = Clock::now() + opts.time_budget;
                return b;
            }
        };

        enum class CoverFilter
        {
            Any,
            NotEverything,  // some vertex must carry a non-singleton
            Everything,     // 1-uniform: all singletons
            Independent     // k-uniform, k >= 2: no edge inside the cover
        };

        class LabelSearch
        {
            public:
                LabelSearch(const Graph & g, const IntSet & x, SolveMode mode, size_t min_multi, size_t max_multi, Budget budget) :
                    _g(g),
                    _mode(mode),
                    _budget(budget),
                    _order(search_order(g)),
                    _label(g.n(), 0)
                {
                    if (x.empty())
                        throw InvalidInput{ "ground set candidate is empty" };
                    if (x.max() > solver_universe_limit)
                        throw SizeLimitExceeded{ "solver ground sets must stay within 0.." + std::to_string(solver_universe_limit)
                            + ", got " + x.to_string() };

                    _x = x.low_word();
                    _x_top = x.max();

                    for (auto e : x)
                        _singles.push_back(Mask{ 1 } << e);

                    max_multi = std::min(max_multi, x.size());
                    if (min_multi <= max_multi && min_multi >= 2) {
                        for (const auto & s : subsets_of(x, min_multi, max_multi)) {
                            if (_multis.size() >= candidate_limit)
                                throw SizeLimitExceeded{ "more than " + std::to_string(candidate_limit)
                                    + " candidate labels; lower max_label_size or shrink the universe" };
                            _multis.push_back(s.low_word());
                        }
                    }

                    _adjacent.assign(g.n(), 0);
                    for (auto [u, v] : g.edges()) {
                        _adjacent[u] |= Mask{ 1 } << v;
                        _adjacent[v] |= Mask{ 1 } << u;
                    }
                }

                /// Labels for the first cover (size, then lexicographic) admitting a completion.
                auto run(CoverFilter filter) -> optional<vector<Mask>>
                {
                    for (auto cover : covers(filter))
                        if (auto r = complete(cover))
                            return r;
                    return std::nullopt;
                }

                /// Labels with the given singleton carriers, if any exist.
                auto complete(Mask cover) -> optional<vector<Mask>>
                {
                    _cover = cover;
                    std::fill(_label.begin(), _label.end(), 0);
                    _edge_labels.clear();
                    if (assign(0))
                        return _label;
                    return std::nullopt;
                }

                auto covers(CoverFilter filter) const -> vector<Mask>
                {
                    const int n = _g.n();
                    vector<Mask> result;
                    vector<int> pick;
                    for (int size = 0; size <= n; ++size) {
                        pick.resize(size);
                        for (int i = 0; i < size; ++i)
                            pick[i] = i;
                        while (true) {
                            Mask m = 0;
                            for (auto p : pick)
                                m |= Mask{ 1 } << p;
                            if (accept(m, filter))
                                result.push_back(m);

                            int i = size;
                            while (i > 0 && pick[i - 1] == n - size + i - 1)
                                --i;
                            if (i == 0)
                                break;
                            ++pick[i - 1];
                            for (int j = i; j < size; ++j)
                                pick[j] = pick[j - 1] + 1;
                        }
                    }
                    return result;
                }

                auto nodes() const -> uint64_t { return _nodes; }
                auto has_multis() const -> bool { return ! _multis.empty(); }

            private:
                const Graph & _g;
                SolveMode _mode;
                Budget _budget;
                vector<Vertex> _order;
                Mask _x = 0;
                unsigned _x_top = 0;
                vector<Mask> _singles, _multis;
                vector<Mask> _adjacent;
                Mask _cover = 0;
                vector<Mask> _label;
                vector<Mask> _edge_labels;
                uint64_t _nodes = 0;

                auto accept(Mask m, CoverFilter filter) const -> bool
                {
                    const int n = _g.n();
                    Mask all = n == 64 ? ~Mask{ 0 } : (Mask{ 1 } << n) - 1;
                    for (auto [u, v] : _g.edges())
                        if (! ((m >> u) & 1) && ! ((m >> v) & 1))
                            return false;
                    switch (filter) {
                        case CoverFilter::Any: return true;
                        case CoverFilter::NotEverything: return m != all;
                        case CoverFilter::Everything: return m == all;
                        case CoverFilter::Independent:
                            for (auto [u, v] : _g.edges())
                                if (((m >> u) & 1) && ((m >> v) & 1))
                                    return false;
                            return true;
                    }
                    return false;
                }

                auto tick() -> void
                {
                    if ((++_nodes & 1023) != 0)
                        return;
                    if (_budget.cancelled && _budget.cancelled->load(std::memory_order_relaxed))
                        throw SearchTimeout{ "search cancelled" };
                    if (_budget.deadline && Clock::now() > *_budget.deadline)
                        throw SearchTimeout{ "time budget exhausted" };
                }

                auto assign(size_t depth) -> bool
                {
                    if (depth == _order.size())
                        return true;

                    Vertex v = _order[depth];
                    const auto & candidates = ((_cover >> v) & 1) ? _singles : _multis;
                    for (auto c : candidates) {
                        if (! admissible(v, c))
                            continue;
                        tick();

                        size_t edge_mark = _edge_labels.size();
                        if (_mode == SolveMode::WIASI)
                            record_edges(v, c);
                        _label[v] = c;
                        if (assign(depth + 1))
                            return true;
                        _label[v] = 0;
                        _edge_labels.resize(edge_mark);
                    }
                    return false;
                }

                auto admissible(Vertex v, Mask c) const -> bool
                {
                    for (auto l : _label)
                        if (l == c)
                            return false;

                    unsigned c_top = top_bit(c);
                    for (Mask rest = _adjacent[v]; rest != 0; rest &= rest - 1) {
                        Mask other = _label[std::countr_zero(rest)];
                        if (other == 0)
                            continue;
                        if (c_top + top_bit(other) > _x_top)
                            return false;
                        Mask sum = mask_sumset(c, other);
                        if ((sum & ~_x) != 0)
                            return false;
                        if (_mode == SolveMode::WIASI
                                && std::find(_edge_labels.begin(), _edge_labels.end(), sum) != _edge_labels.end())
                            return false;
                    }

                    if (_mode == SolveMode::WIASI) {
                        // two new edges at v may collide with each other
                        vector<Mask> fresh;
                        for (Mask rest = _adjacent[v]; rest != 0; rest &= rest - 1) {
                            Mask other = _label[std::countr_zero(rest)];
                            if (other == 0)
                                continue;
                            Mask sum = mask_sumset(c, other);
                            if (std::find(fresh.begin(), fresh.end(), sum) != fresh.end())
                                return false;
                            fresh.push_back(sum);
                        }
                    }
                    return true;
                }

                auto record_edges(Vertex v, Mask c) -> void
                {
                    for (Mask rest = _adjacent[v]; rest != 0; rest &= rest - 1) {
                        Mask other = _label[std::countr_zero(rest)];
                        if (other != 0)
                            _edge_labels.push_back(mask_sumset(c, other));
                    }
                }
        };

        auto label_range(const SolveOptions & opts) -> std::pair<size_t, size_t>
        {
            if (opts.mode == SolveMode::Uniform)
                return { opts.k, opts.k };
            return { 2, opts.max_label_size.value_or(std::numeric_limits<size_t>::max()) };
        }

        auto cover_filter(const SolveOptions & opts) -> CoverFilter
        {
            if (opts.mode == SolveMode::Uniform)
                return opts.k == 1 ? CoverFilter::Everything : CoverFilter::Independent;
            return opts.require_non_uniform ? CoverFilter::NotEverything : CoverFilter::Any;
        }

        auto as_labeling(const Graph & g, const vector<Mask> & labels, const IntSet & x) -> SetLabeling
        {
            vector<IntSet> sets;
            for (auto m : labels)
                sets.push_back(to_intset(m));
            return SetLabeling{ g, std::move(sets), x };
        }

        auto exists_with(const Graph & g, const IntSet & x, const SolveOptions & opts, Budget budget, uint64_t & nodes)
            -> optional<SetLabeling>
        {
            check_graph(g, opts);
            if (opts.mode == SolveMode::Uniform && opts.k == 0)
                throw InvalidParameter{ "k-uniform mode needs k >= 1" };

            auto [lo, hi] = label_range(opts);
            LabelSearch search{ g, x, opts.mode, lo, hi, budget };
            optional<vector<Mask>> found;
            try {
                found = search.run(cover_filter(opts));
            }
            catch (...) {
                nodes += search.nodes();
                throw;
            }
            nodes += search.nodes();
            if (! found)
                return std::nullopt;
            return as_labeling(g, *found, x);
        }

        auto lowest_element(const SolveOptions & opts) -> unsigned
        {
            return opts.allow_zero ? 0 : 1;
        }
    }

    auto status_name(SolveStatus s) -> std::string_view
    {
        switch (s) {
            case SolveStatus::Optimal: return "optimal-within-universe";
            case SolveStatus::Timeout: return "timeout";
            case SolveStatus::Infeasible: return "infeasible-within-universe";
        }
        return "?";
    }

    auto mode_name(SolveMode m) -> std::string_view
    {
        switch (m) {
            case SolveMode::WIASL: return "wiasl";
            case SolveMode::WIASI: return "wiasi";
            case SolveMode::Uniform: return "uniform";
        }
        return "?";
    }

    auto exists_labeling(const Graph & g, const IntSet & x, const SolveOptions & opts) -> optional<SetLabeling>
    {
        uint64_t nodes = 0;
        return exists_with(g, x, opts, Budget::from(opts), nodes);
    }

    auto ground_set_lower_bound(const Graph & g, const SolveOptions & opts) -> size_t
    {
        size_t m = 1;
        while (m < 63 && ((uint64_t{ 1 } << m) - 1) < static_cast<uint64_t>(g.n()))
            ++m;
        if (opts.mode == SolveMode::Uniform)
            m = std::max(m, opts.k);
        else if (opts.require_non_uniform)
            m = std::max<size_t>(m, 2);
        return m;
    }

    auto min_ground_set(const Graph & g, const SolveOptions & opts) -> SolveResult
    {
        check_graph(g, opts);
        const unsigned lo = lowest_element(opts);
        const unsigned hi = opts.universe_bound;
        if (hi > solver_universe_limit)
            throw SizeLimitExceeded{ "universe bound " + std::to_string(hi) + " exceeds " + std::to_string(solver_universe_limit) };

        SolveResult result;
        result.universe_bound = hi;
        if (hi < lo)
            return result;

        const size_t width = hi - lo + 1;
        Budget budget = Budget::from(opts);

        for (size_t m = ground_set_lower_bound(g, opts); m <= width; ++m) {
            try {
                if (opts.universe == UniverseKind::Segment) {
                    auto x = IntSet::segment(lo, static_cast<IntSet::Element>(lo + m - 1));
                    if (auto f = exists_with(g, x, opts, budget, result.nodes_explored)) {
                        result.status = SolveStatus::Optimal;
                        result.minimum = m;
                        result.witness = std::move(f);
                        return result;
                    }
                    continue;
                }

                auto pool = IntSet::segment(lo, hi);
                auto level = subsets_of(pool, m, m);

                if (opts.workers <= 1) {
                    for (const auto & x : level)
                        if (auto f = exists_with(g, x, opts, budget, result.nodes_explored)) {
                            result.status = SolveStatus::Optimal;
                            result.minimum = m;
                            result.witness = std::move(f);
                            return result;
                        }
                    continue;
                }

                // Workers pull candidates in order; once one is feasible, later ones are skipped,
                // earlier ones still finish, and the lowest feasible index wins.
                std::mutex lock;
                auto next = level.begin();
                size_t next_index = 0;
                std::atomic<size_t> best_index{ std::numeric_limits<size_t>::max() };
                std::atomic<bool> timed_out{ false };
                size_t first_interrupted = std::numeric_limits<size_t>::max();
                std::atomic<uint64_t> nodes{ 0 };
                optional<SetLabeling> best;
                std::exception_ptr failure;

                Budget shared = budget;
                shared.cancelled = &timed_out;

                auto work = [&] () {
                    while (true) {
                        IntSet x;
                        size_t index;
                        {
                            std::lock_guard guard{ lock };
                            if (next == level.end() || failure || timed_out)
                                return;
                            x = *next;
                            index = next_index++;
                            ++next;
                        }
                        if (index > best_index.load())
                            return;
                        uint64_t local = 0;
                        try {
                            auto f = exists_with(g, x, opts, shared, local);
                            nodes += local;
                            if (f) {
                                std::lock_guard guard{ lock };
                                if (index < best_index.load()) {
                                    best_index = index;
                                    best = std::move(f);
                                }
                            }
                        }
                        catch (const SearchTimeout &) {
                            nodes += local;
                            std::lock_guard guard{ lock };
                            first_interrupted = std::min(first_interrupted, index);
                            timed_out = true;
                            return;
                        }
                        catch (...) {
                            std::lock_guard guard{ lock };
                            failure = std::current_exception();
                            return;
                        }
                    }
                };

                {
                    vector<std::jthread> pool_threads;
                    for (unsigned w = 0; w < opts.workers; ++w)
                        pool_threads.emplace_back(work);
                }

                result.nodes_explored += nodes.load();
                if (failure)
                    std::rethrow_exception(failure);
                if (best && best_index.load() < first_interrupted) {
                    // every candidate before the winner ran to completion
                    result.status = SolveStatus::Optimal;
                    result.minimum = m;
                    result.witness = std::move(best);
                    return result;
                }
                if (timed_out || best)
                    throw SearchTimeout{ "time budget exhausted" };
            }
            catch (const SearchTimeout &) {
                result.status = SolveStatus::Timeout;
                return result;
            }
        }

        result.status = SolveStatus::Infeasible;
        return result;
    }

    auto min_singleton_count(const Graph & g, const IntSet & x, const SolveOptions & opts) -> SingletonCount
    {
        check_graph(g, opts);
        SolveOptions any = opts;
        any.mode = SolveMode::WIASL;
        any.require_non_uniform = false;

        auto [lo, hi] = label_range(any);
        LabelSearch search{ g, x, SolveMode::WIASL, lo, hi, Budget::from(opts) };

        SingletonCount result;
        try {
            for (auto cover : search.covers(CoverFilter::Any))
                if (auto labels = search.complete(cover)) {
                    result.status = SolveStatus::Optimal;
                    result.count = std::popcount(cover);
                    result.witness = as_labeling(g, *labels, x);
                    break;
                }
        }
        catch (const SearchTimeout &) {
            result.status = SolveStatus::Timeout;
        }
        result.nodes_explored = search.nodes();
        return result;
    }

    auto audit(const FamilySpec & spec, SolveOptions opts) -> AuditRow
    {
        AuditRow row;
        row.spec = spec;
        row.claimed = claimed_value(spec);

        auto built = construct(spec);
        row.construction = built.ground_size;
        row.construction_exception = built.exception;
        row.scheme = built.scheme;

        if (opts.universe_bound == 0)
            opts.universe_bound = static_cast<unsigned>(std::min<size_t>(2 * row.claimed + 2, solver_universe_limit));
        row.universe_bound = opts.universe_bound;
        row.options = opts;

        row.oracle = min_ground_set(generate(spec), opts);
        if (row.oracle.status == SolveStatus::Optimal)
            row.relation = row.oracle.minimum == row.claimed ? '=' : row.oracle.minimum < row.claimed ? '<' : '>';
        return row;
    }
}
