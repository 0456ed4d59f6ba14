#include <wiasl/labeling.hh>
#include <wiasl/errors.hh>

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_map>

using std::size_t;
using std::string;
using std::string_view;
using std::vector;

namespace wiasl
{
    namespace
    {
        constexpr std::array<std::pair<LabelingClass, string_view>, 5> class_names{ {
            { LabelingClass::IASL, "IASL" }, { LabelingClass::IASI, "IASI" }, { LabelingClass::WIASL, "WIASL" },
            { LabelingClass::WIASI, "WIASI" }, { LabelingClass::Uniform, "k-uniform" } } };

        struct Collector
        {
            VerifyReport & report;

            auto add(string_view rule, vector<Vertex> witness, string detail) -> void
            {
                report.valid = false;
                if (report.violations.size() >= max_reported_violations) {
                    report.truncated = true;
                    return;
                }
                report.violations.push_back(Violation{ string{ rule }, std::move(witness), std::move(detail) });
            }
        };

        auto edge_name(Vertex u, Vertex v) -> string
        {
            return "edge " + std::to_string(u) + "-" + std::to_string(v);
        }
    }

    auto class_name(LabelingClass c) -> string_view
    {
        for (auto & [cls, name] : class_names)
            if (cls == c)
                return name;
        return "?";
    }

    auto parse_class(string_view name) -> LabelingClass
    {
        string lowered{ name };
        std::transform(lowered.begin(), lowered.end(), lowered.begin(), [] (unsigned char ch) { return std::tolower(ch); });
        for (auto & [cls, n] : class_names) {
            string candidate{ n };
            std::transform(candidate.begin(), candidate.end(), candidate.begin(), [] (unsigned char ch) { return std::tolower(ch); });
            if (candidate == lowered)
                return cls;
        }
        if (lowered == "uniform")
            return LabelingClass::Uniform;
        throw InvalidInput{ "unknown labeling class '" + string{ name } + "'" };
    }

    SetLabeling::SetLabeling(Graph graph, vector<IntSet> labels, IntSet ground_set) :
        _graph(std::move(graph)),
        _labels(std::move(labels)),
        _ground_set(std::move(ground_set))
    {
        if (_labels.size() != static_cast<size_t>(_graph.n()))
            throw InvalidInput{ "labeling has " + std::to_string(_labels.size()) + " labels for "
                + std::to_string(_graph.n()) + " vertices" };
    }

    auto SetLabeling::with_ground_set(IntSet ground_set) const -> SetLabeling
    {
        return SetLabeling{ _graph, _labels, std::move(ground_set) };
    }

    auto edge_label(const SetLabeling & f, Vertex u, Vertex v) -> IntSet
    {
        if (! f.graph().has_edge(u, v))
            throw NotAnEdge{ std::to_string(u) + "-" + std::to_string(v) + " is not an edge" };
        return sumset(f.label(u), f.label(v));
    }

    auto verify(const SetLabeling & f, LabelingClass c, std::optional<size_t> k) -> VerifyReport
    {
        VerifyReport report;
        report.checked_class = c;
        report.k = k;
        Collector out{ report };

        const auto & g = f.graph();
        const auto & x = f.ground_set();

        if (c == LabelingClass::Uniform && (! k || *k == 0)) {
            out.add(rule_missing_k, {}, "k-uniform check needs a positive k");
            return report;
        }

        std::unordered_map<IntSet, Vertex> first_with_label;
        for (Vertex v = 0; v < g.n(); ++v) {
            const auto & l = f.label(v);
            if (l.empty()) {
                out.add(rule_empty_label, { v }, "vertex " + std::to_string(v) + " has an empty label");
                continue;
            }
            if (! l.is_subset_of(x))
                out.add(rule_label_outside_ground, { v }, "label " + l.to_string() + " of vertex " + std::to_string(v)
                    + " is not inside " + x.to_string());
            auto [it, fresh] = first_with_label.emplace(l, v);
            if (! fresh)
                out.add(rule_duplicate_vertex_label, { it->second, v }, "vertices " + std::to_string(it->second) + " and "
                    + std::to_string(v) + " share label " + l.to_string());
        }

        const bool weak = c == LabelingClass::WIASL || c == LabelingClass::WIASI || c == LabelingClass::Uniform;
        const bool edge_injective = c == LabelingClass::IASI || c == LabelingClass::WIASI;

        std::unordered_map<IntSet, std::pair<Vertex, Vertex>> first_with_edge_label;
        for (auto [u, v] : g.edges()) {
            const auto & a = f.label(u);
            const auto & b = f.label(v);
            if (a.empty() || b.empty())
                continue;

            IntSet e;
            try {
                e = sumset(a, b);
            }
            catch (const UniverseOverflow & err) {
                out.add(rule_edge_outside_ground, { u, v }, edge_name(u, v) + ": " + err.what());
                continue;
            }

            if (! e.is_subset_of(x))
                out.add(rule_edge_outside_ground, { u, v }, edge_name(u, v) + " label " + e.to_string()
                    + " is not inside " + x.to_string());

            if (weak) {
                size_t want = std::max(a.size(), b.size());
                if (e.size() != want)
                    out.add(rule_weak_cardinality, { u, v }, edge_name(u, v) + " label " + e.to_string() + " has "
                        + std::to_string(e.size()) + " elements, max(|f(u)|,|f(v)|) = " + std::to_string(want));
            }

            if (c == LabelingClass::Uniform && e.size() != *k)
                out.add(rule_uniform_cardinality, { u, v }, edge_name(u, v) + " label " + e.to_string() + " has "
                    + std::to_string(e.size()) + " elements, expected " + std::to_string(*k));

            if (edge_injective) {
                auto [it, fresh] = first_with_edge_label.emplace(e, std::pair{ u, v });
                if (! fresh)
                    out.add(rule_duplicate_edge_label, { it->second.first, it->second.second, u, v },
                        edge_name(it->second.first, it->second.second) + " and " + edge_name(u, v) + " share label "
                        + e.to_string());
            }
        }

        return report;
    }

    auto minimal_ground_set(const SetLabeling & f) -> IntSet
    {
        IntSet result(f.ground_set().universe());
        for (const auto & l : f.labels())
            result |= l;
        for (auto [u, v] : f.graph().edges())
            result |= sumset(f.label(u), f.label(v));
        return result;
    }

    auto singleton_cover(const SetLabeling & f) -> vector<Vertex>
    {
        auto report = verify(f, LabelingClass::WIASL);
        if (! report.valid)
            throw InvalidInput{ "singleton_cover needs a WIASL; first violation: " + report.violations.front().detail };

        vector<Vertex> result;
        for (Vertex v = 0; v < f.graph().n(); ++v)
            if (f.label(v).size() == 1)
                result.push_back(v);

        if (! is_vertex_cover(f.graph(), result))
            throw std::logic_error{ "singleton vertices of a WIASL failed to cover every edge" };
        return result;
    }
}
