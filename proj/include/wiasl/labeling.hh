#ifndef WIASL_GUARD_LABELING_HH
#define WIASL_GUARD_LABELING_HH 1

#include <wiasl/graph.hh>
#include <wiasl/intset.hh>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wiasl
{
    enum class LabelingClass
    {
        IASL,
        IASI,
        WIASL,
        WIASI,
        Uniform
    };

    auto class_name(LabelingClass c) -> std::string_view;
    auto parse_class(std::string_view name) -> LabelingClass;

    /**
     * A set-labeling: one IntSet per vertex plus the declared ground set X.
     * Edge labels are never stored; edge_label() derives them on demand.
     *
     * Construction only checks shape (one label per vertex). Whether the
     * labels are non-empty, distinct and inside X is for verify() to report.
     */
    class SetLabeling
    {
        public:
            SetLabeling(Graph graph, std::vector<IntSet> labels, IntSet ground_set);

            auto graph() const -> const Graph & { return _graph; }
            auto labels() const -> const std::vector<IntSet> & { return _labels; }
            auto label(Vertex v) const -> const IntSet & { return _labels.at(v); }
            auto ground_set() const -> const IntSet & { return _ground_set; }

            auto with_ground_set(IntSet ground_set) const -> SetLabeling;

            auto operator== (const SetLabeling & other) const -> bool = default;

        private:
            Graph _graph;
            std::vector<IntSet> _labels;
            IntSet _ground_set;
    };

    /// f(u) + f(v); throws NotAnEdge when uv is not an edge.
    auto edge_label(const SetLabeling & f, Vertex u, Vertex v) -> IntSet;

    struct Violation
    {
        std::string rule;
        std::vector<Vertex> witness;
        std::string detail;
    };

    struct VerifyReport
    {
        bool valid = true;
        LabelingClass checked_class = LabelingClass::WIASL;
        std::optional<std::size_t> k;
        std::vector<Violation> violations;
        /// More violations existed than were recorded.
        bool truncated = false;
    };

    inline constexpr std::size_t max_reported_violations = 64;

    // rule ids
    inline constexpr std::string_view rule_empty_label = "empty-label";
    inline constexpr std::string_view rule_label_outside_ground = "label-outside-ground-set";
    inline constexpr std::string_view rule_duplicate_vertex_label = "duplicate-vertex-label";
    inline constexpr std::string_view rule_edge_outside_ground = "edge-label-outside-ground-set";
    inline constexpr std::string_view rule_duplicate_edge_label = "duplicate-edge-label";
    inline constexpr std::string_view rule_weak_cardinality = "weak-cardinality";
    inline constexpr std::string_view rule_uniform_cardinality = "uniform-cardinality";
    inline constexpr std::string_view rule_missing_k = "missing-k";

    /**
     * Checks f against one labeling class and lists every violation found
     * (up to max_reported_violations).
     *
     *   IASL     non-empty, pairwise distinct vertex labels; vertex and edge labels inside X
     *   IASI     IASL, and edge labels pairwise distinct
     *   WIASL    IASL, and |f(u)+f(v)| = max(|f(u)|, |f(v)|) on every edge
     *   WIASI    WIASL, and edge labels pairwise distinct
     *   Uniform  WIASL, and every edge label has exactly k elements
     *
     * Never throws for an invalid labeling; the report says what is wrong.
     */
    auto verify(const SetLabeling & f, LabelingClass c, std::optional<std::size_t> k = std::nullopt) -> VerifyReport;

    /// The union of every vertex label and every induced edge label.
    auto minimal_ground_set(const SetLabeling & f) -> IntSet;

    /**
     * The vertices carrying singleton labels. For a WIASL these always cover
     * every edge; InvalidInput is thrown if f is not a WIASL.
     */
    auto singleton_cover(const SetLabeling & f) -> std::vector<Vertex>;
}

#endif
