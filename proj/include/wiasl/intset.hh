#ifndef WIASL_GUARD_INTSET_HH
#define WIASL_GUARD_INTSET_HH 1

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace wiasl
{
    /**
     * A finite set of non-negative integers, stored as a bit vector keyed by
     * value. Every element must be strictly below the set's universe bound;
     * anything else raises UniverseOverflow rather than being truncated.
     *
     * Equality and ordering look only at the elements, never at the bound.
     * Ordering is lexicographic on the ascending element lists.
     */
    class IntSet
    {
        public:
            using Element = unsigned;

            static constexpr std::size_t default_universe = 4096;

            class const_iterator
            {
                public:
                    using iterator_category = std::forward_iterator_tag;
                    using value_type = Element;
                    using difference_type = std::ptrdiff_t;
                    using pointer = const Element *;
                    using reference = Element;

                    const_iterator() = default;

                    auto operator* () const -> Element { return _current; }
                    auto operator++ () -> const_iterator &;
                    auto operator++ (int) -> const_iterator;
                    auto operator== (const const_iterator & other) const -> bool = default;

                private:
                    friend class IntSet;
                    const_iterator(const std::vector<std::uint64_t> * words, Element start);

                    const std::vector<std::uint64_t> * _words = nullptr;
                    Element _current = 0;
                    bool _at_end = true;

                    auto seek(Element from) -> void;
            };

            IntSet() = default;
            explicit IntSet(std::size_t universe);
            IntSet(std::initializer_list<Element> elements, std::size_t universe = default_universe);
            explicit IntSet(const std::vector<Element> & elements, std::size_t universe = default_universe);

            /// {lo, lo+1, ..., hi}; empty when hi < lo.
            static auto segment(Element lo, Element hi, std::size_t universe = default_universe) -> IntSet;

            auto insert(Element e) -> void;
            auto erase(Element e) -> void;
            auto contains(Element e) const -> bool;

            auto size() const -> std::size_t;
            auto empty() const -> bool { return _words.empty(); }
            auto min() const -> Element;
            auto max() const -> Element;
            auto universe() const -> std::size_t { return _universe; }

            auto begin() const -> const_iterator;
            auto end() const -> const_iterator { return const_iterator{}; }

            auto elements() const -> std::vector<Element>;
            auto is_subset_of(const IntSet & other) const -> bool;

            auto operator|= (const IntSet & other) -> IntSet &;
            friend auto operator| (IntSet a, const IntSet & b) -> IntSet { return a |= b; }

            auto operator== (const IntSet & other) const -> bool { return _words == other._words; }
            auto operator<=> (const IntSet & other) const -> std::strong_ordering;

            auto to_string() const -> std::string;
            auto hash() const -> std::size_t;

            /// Low 64 bits of the bit vector; only meaningful when max() < 64.
            auto low_word() const -> std::uint64_t { return _words.empty() ? 0 : _words.front(); }

        private:
            friend auto sumset(const IntSet & a, const IntSet & b) -> IntSet;

            std::vector<std::uint64_t> _words;
            std::size_t _universe = default_universe;

            auto trim() -> void;
    };

    /**
     * The sumset {x + y : x in a, y in b}, computed by OR-ing one shifted copy of
     * the larger operand per element of the smaller one. The result takes the
     * smaller of the two universe bounds. An empty operand gives an empty result.
     *
     * Throws UniverseOverflow when max(a) + max(b) reaches the bound.
     */
    auto sumset(const IntSet & a, const IntSet & b) -> IntSet;

    /**
     * Every subset of ground with cardinality in [size_min, size_max], each
     * exactly once: ordered by cardinality, then lexicographically by the
     * ascending element lists. The range is lazy; subsets are produced on
     * iteration.
     */
    class SubsetRange
    {
        public:
            class iterator
            {
                public:
                    using iterator_category = std::input_iterator_tag;
                    using value_type = IntSet;
                    using difference_type = std::ptrdiff_t;
                    using pointer = const IntSet *;
                    using reference = const IntSet &;

                    iterator() = default;

                    auto operator* () const -> const IntSet & { return _current; }
                    auto operator-> () const -> const IntSet * { return &_current; }
                    auto operator++ () -> iterator &;
                    auto operator++ (int) -> void { ++*this; }
                    auto operator== (const iterator & other) const -> bool { return _done == other._done; }

                private:
                    friend class SubsetRange;
                    explicit iterator(const SubsetRange * range);

                    const SubsetRange * _range = nullptr;
                    std::vector<std::size_t> _indices;
                    IntSet _current;
                    bool _done = true;

                    auto materialise() -> void;
            };

            SubsetRange(const IntSet & ground, std::size_t size_min, std::size_t size_max);

            auto begin() const -> iterator { return iterator{ this }; }
            auto end() const -> iterator { return iterator{}; }

        private:
            std::vector<IntSet::Element> _ground;
            std::size_t _size_min, _size_max, _universe;
    };

    /// Throws InvalidParameter unless 1 <= size_min <= size_max <= |ground|.
    auto subsets_of(const IntSet & ground, std::size_t size_min, std::size_t size_max) -> SubsetRange;
}

template <>
struct std::hash<wiasl::IntSet>
{
    auto operator() (const wiasl::IntSet & s) const -> std::size_t { return s.hash(); }
};

#endif
