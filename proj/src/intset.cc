#include <wiasl/intset.hh>
#include <wiasl/errors.hh>

#include <algorithm>
#include <bit>
#include <sstream>

using std::size_t;
using std::string;
using std::uint64_t;
using std::vector;

namespace wiasl
{
    namespace
    {
        auto overflow(std::size_t value, std::size_t universe) -> UniverseOverflow
        {
            return UniverseOverflow{ "value " + std::to_string(value) + " does not fit below universe bound "
                + std::to_string(universe) };
        }
    }

    IntSet::const_iterator::const_iterator(const vector<uint64_t> * words, Element start) :
        _words(words)
    {
        seek(start);
    }

    auto IntSet::const_iterator::seek(Element from) -> void
    {
        size_t word = from / 64;
        if (word >= _words->size()) {
            _at_end = true;
            _current = 0;
            return;
        }

        uint64_t bits = (*_words)[word] & (~uint64_t{ 0 } << (from % 64));
        while (bits == 0) {
            if (++word >= _words->size()) {
                _at_end = true;
                _current = 0;
                return;
            }
            bits = (*_words)[word];
        }

        _at_end = false;
        _current = static_cast<Element>(word * 64 + std::countr_zero(bits));
    }

    auto IntSet::const_iterator::operator++ () -> const_iterator &
    {
        seek(_current + 1);
        if (_at_end)
            _words = nullptr;
        return *this;
    }

    auto IntSet::const_iterator::operator++ (int) -> const_iterator
    {
        auto old = *this;
        ++*this;
        return old;
    }

    IntSet::IntSet(size_t universe) :
        _universe(universe)
    {
    }

    IntSet::IntSet(std::initializer_list<Element> elements, size_t universe) :
        _universe(universe)
    {
        for (auto e : elements)
            insert(e);
    }

    IntSet::IntSet(const vector<Element> & elements, size_t universe) :
        _universe(universe)
    {
        for (auto e : elements)
            insert(e);
    }

    auto IntSet::segment(Element lo, Element hi, size_t universe) -> IntSet
    {
        IntSet result(universe);
        for (auto e = lo; e <= hi && hi >= lo; ++e)
            result.insert(e);
        return result;
    }

    auto IntSet::insert(Element e) -> void
    {
        if (e >= _universe)
            throw overflow(e, _universe);
        size_t word = e / 64;
        if (word >= _words.size())
            _words.resize(word + 1, 0);
        _words[word] |= uint64_t{ 1 } << (e % 64);
    }

    auto IntSet::erase(Element e) -> void
    {
        size_t word = e / 64;
        if (word < _words.size()) {
            _words[word] &= ~(uint64_t{ 1 } << (e % 64));
            trim();
        }
    }

    auto IntSet::contains(Element e) const -> bool
    {
        size_t word = e / 64;
        return word < _words.size() && ((_words[word] >> (e % 64)) & 1);
    }

    auto IntSet::size() const -> size_t
    {
        size_t result = 0;
        for (auto w : _words)
            result += std::popcount(w);
        return result;
    }

    auto IntSet::min() const -> Element
    {
        if (empty())
            throw InvalidInput{ "min() of an empty set" };
        return *begin();
    }

    auto IntSet::max() const -> Element
    {
        if (empty())
            throw InvalidInput{ "max() of an empty set" };
        // trim() keeps the last word non-zero
        return static_cast<Element>((_words.size() - 1) * 64 + 63 - std::countl_zero(_words.back()));
    }

    auto IntSet::begin() const -> const_iterator
    {
        if (empty())
            return end();
        return const_iterator{ &_words, 0 };
    }

    auto IntSet::elements() const -> vector<Element>
    {
        return vector<Element>(begin(), end());
    }

    auto IntSet::is_subset_of(const IntSet & other) const -> bool
    {
        if (_words.size() > other._words.size())
            return false;
        for (size_t i = 0; i < _words.size(); ++i)
            if ((_words[i] & ~other._words[i]) != 0)
                return false;
        return true;
    }

    auto IntSet::operator|= (const IntSet & other) -> IntSet &
    {
        if (! other.empty() && other.max() >= _universe)
            throw overflow(other.max(), _universe);
        if (other._words.size() > _words.size())
            _words.resize(other._words.size(), 0);
        for (size_t i = 0; i < other._words.size(); ++i)
            _words[i] |= other._words[i];
        return *this;
    }

    auto IntSet::operator<=> (const IntSet & other) const -> std::strong_ordering
    {
        auto a = begin(), b = other.begin();
        for ( ; a != end() && b != other.end(); ++a, ++b)
            if (*a != *b)
                return *a <=> *b;
        if (a == end() && b == other.end())
            return std::strong_ordering::equal;
        return a == end() ? std::strong_ordering::less : std::strong_ordering::greater;
    }

    auto IntSet::to_string() const -> string
    {
        std::ostringstream out;
        out << "{";
        bool first = true;
        for (auto e : *this) {
            if (! first)
                out << ",";
            out << e;
            first = false;
        }
        out << "}";
        return out.str();
    }

    auto IntSet::hash() const -> size_t
    {
        size_t h = 0xcbf29ce484222325ULL;
        for (auto w : _words)
            h = (h ^ std::hash<uint64_t>{}(w)) * 0x100000001b3ULL;
        return h;
    }

    auto IntSet::trim() -> void
    {
        while (! _words.empty() && _words.back() == 0)
            _words.pop_back();
    }

    auto sumset(const IntSet & a, const IntSet & b) -> IntSet
    {
        IntSet result(std::min(a.universe(), b.universe()));
        if (a.empty() || b.empty())
            return result;

        size_t top = size_t{ a.max() } + b.max();
        if (top >= result._universe)
            throw overflow(top, result._universe);

        const IntSet & shifter = a.size() <= b.size() ? a : b;
        const IntSet & shifted = a.size() <= b.size() ? b : a;

        result._words.assign(top / 64 + 1, 0);
        for (auto e : shifter) {
            size_t word_shift = e / 64, bit_shift = e % 64;
            for (size_t i = 0; i < shifted._words.size(); ++i) {
                uint64_t w = shifted._words[i];
                if (w == 0)
                    continue;
                result._words[i + word_shift] |= w << bit_shift;
                if (bit_shift != 0 && i + word_shift + 1 < result._words.size())
                    result._words[i + word_shift + 1] |= w >> (64 - bit_shift);
            }
        }
        result.trim();
        return result;
    }

    SubsetRange::SubsetRange(const IntSet & ground, size_t size_min, size_t size_max) :
        _ground(ground.elements()),
        _size_min(size_min),
        _size_max(size_max),
        _universe(ground.universe())
    {
    }

    SubsetRange::iterator::iterator(const SubsetRange * range) :
        _range(range),
        _done(false)
    {
        _indices.resize(range->_size_min);
        for (size_t i = 0; i < _indices.size(); ++i)
            _indices[i] = i;
        materialise();
    }

    auto SubsetRange::iterator::materialise() -> void
    {
        _current = IntSet(_range->_universe);
        for (auto i : _indices)
            _current.insert(_range->_ground[i]);
    }

    auto SubsetRange::iterator::operator++ () -> iterator &
    {
        const size_t n = _range->_ground.size();
        size_t k = _indices.size();

        // next k-combination in lexicographic order, else move to size k + 1
        size_t i = k;
        while (i > 0 && _indices[i - 1] == n - k + i - 1)
            --i;
        if (i > 0) {
            ++_indices[i - 1];
            for (size_t j = i; j < k; ++j)
                _indices[j] = _indices[j - 1] + 1;
        }
        else if (k + 1 <= _range->_size_max) {
            _indices.resize(k + 1);
            for (size_t j = 0; j <= k; ++j)
                _indices[j] = j;
        }
        else {
            _done = true;
            _range = nullptr;
            return *this;
        }

        materialise();
        return *this;
    }

    auto subsets_of(const IntSet & ground, size_t size_min, size_t size_max) -> SubsetRange
    {
        if (size_min < 1 || size_min > size_max || size_max > ground.size())
            throw InvalidParameter{ "subsets_of needs 1 <= size_min <= size_max <= |ground|, got size_min="
                + std::to_string(size_min) + " size_max=" + std::to_string(size_max) + " |ground|="
                + std::to_string(ground.size()) };
        return SubsetRange{ ground, size_min, size_max };
    }
}
