#ifndef WIASL_GUARD_IO_HH
#define WIASL_GUARD_IO_HH 1

#include <wiasl/graph.hh>
#include <wiasl/labeling.hh>
#include <wiasl/solver.hh>

#include <json.hpp>

#include <optional>
#include <string>

namespace wiasl
{
    using Json = nlohmann::json;

    // IntSet: ascending array, e.g. [1,2]
    auto to_json(const IntSet & s) -> Json;
    auto intset_from_json(const Json & j) -> IntSet;

    // Graph: {"n": 4, "edges": [[0,1], ...], "roles": {"0": "cycle", ...}}; roles optional
    auto to_json(const Graph & g) -> Json;
    auto graph_from_json(const Json & j) -> Graph;

    struct LabelingDocument
    {
        SetLabeling labeling;
        LabelingClass labeling_class = LabelingClass::WIASL;
        std::optional<std::size_t> k;
    };

    // {"graph": {...}, "labels": {"0": [1], ...}, "ground_set": [...], "class": "WIASL"}, plus "k" for k-uniform.
    // Unknown keys are ignored on input.
    auto to_json(const SetLabeling & f, LabelingClass c = LabelingClass::WIASL, std::optional<std::size_t> k = std::nullopt) -> Json;
    auto labeling_from_json(const Json & j) -> LabelingDocument;

    auto to_json(const VerifyReport & r) -> Json;
    auto to_json(const SolveResult & r, const SolveOptions & opts) -> Json;

    /// Throws InvalidInput when the file is missing or not JSON.
    auto read_json_file(const std::string & path) -> Json;

    /// Undirected DOT; with a labeling, vertices show their labels and edges their induced labels.
    auto to_dot(const Graph & g, const SetLabeling * f = nullptr) -> std::string;

    auto audit_csv_header() -> std::string;
    auto audit_csv_row(const AuditRow & row) -> std::string;
    auto audit_text_header() -> std::string;
    auto audit_text_row(const AuditRow & row) -> std::string;
}

#endif
