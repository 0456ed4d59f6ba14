#include <wiasl/io.hh>
#include <wiasl/errors.hh>

#include <cstdio>
#include <fstream>
#include <sstream>

using std::optional;
using std::size_t;
using std::string;

namespace wiasl
{
    namespace
    {
        auto require(const Json & j, const char * key) -> const Json &
        {
            if (! j.is_object() || ! j.contains(key))
                throw InvalidInput{ string{ "missing \"" } + key + "\"" };
            return j.at(key);
        }

        auto vertex_key(const string & key, int n) -> Vertex
        {
            size_t used = 0;
            int v = -1;
            try {
                v = std::stoi(key, &used);
            }
            catch (const std::exception &) {
                used = 0;
            }
            if (used != key.size() || v < 0 || v >= n)
                throw InvalidInput{ "\"" + key + "\" is not a vertex of a graph on " + std::to_string(n) + " vertices" };
            return v;
        }

        auto describe_options(const SolveOptions & opts) -> Json
        {
            Json j;
            j["mode"] = string{ mode_name(opts.mode) };
            if (opts.mode == SolveMode::Uniform)
                j["k"] = opts.k;
            j["universe"] = opts.universe == UniverseKind::Segment ? "segment" : "all-subsets";
            j["allow_zero"] = opts.allow_zero;
            j["require_non_uniform"] = opts.require_non_uniform;
            if (opts.max_label_size)
                j["max_label_size"] = *opts.max_label_size;
            return j;
        }
    }

    auto to_json(const IntSet & s) -> Json
    {
        return Json(s.elements());
    }

    auto intset_from_json(const Json & j) -> IntSet
    {
        if (! j.is_array())
            throw InvalidInput{ "a set must be a JSON array of non-negative integers" };
        IntSet result;
        for (const auto & e : j) {
            if (! e.is_number_integer() || e.get<long long>() < 0)
                throw InvalidInput{ "set element " + e.dump() + " is not a non-negative integer" };
            auto value = e.get<long long>();
            if (static_cast<unsigned long long>(value) >= IntSet::default_universe)
                throw UniverseOverflow{ "set element " + std::to_string(value) + " does not fit below universe bound "
                    + std::to_string(IntSet::default_universe) };
            if (result.contains(static_cast<IntSet::Element>(value)))
                throw InvalidInput{ "set element " + std::to_string(value) + " is repeated" };
            result.insert(static_cast<IntSet::Element>(value));
        }
        return result;
    }

    auto to_json(const Graph & g) -> Json
    {
        Json edges = Json::array();
        for (auto [u, v] : g.edges())
            edges.push_back({ u, v });

        Json j{ { "n", g.n() }, { "edges", edges } };
        bool any_role = false;
        Json roles = Json::object();
        for (Vertex v = 0; v < g.n(); ++v)
            if (g.role(v) != Role::None) {
                roles[std::to_string(v)] = string{ role_name(g.role(v)) };
                any_role = true;
            }
        if (any_role)
            j["roles"] = roles;
        return j;
    }

    auto graph_from_json(const Json & j) -> Graph
    {
        const auto & n_json = require(j, "n");
        if (! n_json.is_number_integer() || n_json.get<long long>() < 0)
            throw InvalidInput{ "\"n\" must be a non-negative integer" };
        int n = n_json.get<int>();

        std::vector<Edge> edges;
        const auto & edges_json = require(j, "edges");
        if (! edges_json.is_array())
            throw InvalidInput{ "\"edges\" must be an array of [u,v] pairs" };
        for (const auto & e : edges_json) {
            if (! e.is_array() || e.size() != 2 || ! e[0].is_number_integer() || ! e[1].is_number_integer())
                throw InvalidInput{ "edge " + e.dump() + " is not an [u,v] pair" };
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }

        std::vector<Role> roles;
        if (j.contains("roles")) {
            const auto & r = j.at("roles");
            if (! r.is_object())
                throw InvalidInput{ "\"roles\" must be an object keyed by vertex" };
            roles.assign(n, Role::None);
            for (const auto & [key, value] : r.items()) {
                if (! value.is_string())
                    throw InvalidInput{ "role of vertex " + key + " must be a string" };
                roles[vertex_key(key, n)] = parse_role(value.get<string>());
            }
        }

        return Graph{ n, std::move(edges), std::move(roles) };
    }

    auto to_json(const SetLabeling & f, LabelingClass c, optional<size_t> k) -> Json
    {
        Json labels = Json::object();
        for (Vertex v = 0; v < f.graph().n(); ++v)
            labels[std::to_string(v)] = to_json(f.label(v));

        Json j{ { "graph", to_json(f.graph()) }, { "labels", labels }, { "ground_set", to_json(f.ground_set()) },
            { "class", string{ class_name(c) } } };
        if (c == LabelingClass::Uniform && k)
            j["k"] = *k;
        return j;
    }

    auto labeling_from_json(const Json & j) -> LabelingDocument
    {
        auto g = graph_from_json(require(j, "graph"));

        const auto & labels_json = require(j, "labels");
        if (! labels_json.is_object())
            throw InvalidInput{ "\"labels\" must be an object keyed by vertex" };
        std::vector<IntSet> labels(g.n());
        std::vector<bool> seen(g.n(), false);
        for (const auto & [key, value] : labels_json.items()) {
            Vertex v = vertex_key(key, g.n());
            labels[v] = intset_from_json(value);
            seen[v] = true;
        }
        for (Vertex v = 0; v < g.n(); ++v)
            if (! seen[v])
                throw InvalidInput{ "vertex " + std::to_string(v) + " has no label" };

        auto ground = intset_from_json(require(j, "ground_set"));

        LabelingDocument doc{ SetLabeling{ g, std::move(labels), std::move(ground) }, LabelingClass::WIASL, std::nullopt };
        if (j.contains("class"))
            doc.labeling_class = parse_class(j.at("class").get<string>());
        if (j.contains("k")) {
            if (! j.at("k").is_number_integer() || j.at("k").get<long long>() < 1)
                throw InvalidInput{ "\"k\" must be a positive integer" };
            doc.k = j.at("k").get<size_t>();
        }
        return doc;
    }

    auto to_json(const VerifyReport & r) -> Json
    {
        Json violations = Json::array();
        for (const auto & v : r.violations)
            violations.push_back({ { "rule", v.rule }, { "witness", v.witness }, { "detail", v.detail } });

        Json j{ { "valid", r.valid }, { "class", string{ class_name(r.checked_class) } }, { "violations", violations } };
        if (r.k)
            j["k"] = *r.k;
        if (r.truncated)
            j["truncated"] = true;
        return j;
    }

    auto to_json(const SolveResult & r, const SolveOptions & opts) -> Json
    {
        Json j{ { "status", string{ status_name(r.status) } }, { "universe_bound", r.universe_bound },
            { "nodes_explored", r.nodes_explored }, { "options", describe_options(opts) } };
        if (r.status == SolveStatus::Optimal)
            j["minimum"] = r.minimum;
        if (r.witness) {
            LabelingClass c = opts.mode == SolveMode::WIASI ? LabelingClass::WIASI
                : opts.mode == SolveMode::Uniform ? LabelingClass::Uniform : LabelingClass::WIASL;
            j["witness"] = to_json(*r.witness, c, opts.mode == SolveMode::Uniform ? optional<size_t>{ opts.k } : std::nullopt);
        }
        return j;
    }

    auto read_json_file(const string & path) -> Json
    {
        std::ifstream in{ path };
        if (! in)
            throw InvalidInput{ "cannot open " + path };
        try {
            return Json::parse(in);
        }
        catch (const Json::parse_error & e) {
            throw InvalidInput{ path + ": " + e.what() };
        }
    }

    auto to_dot(const Graph & g, const SetLabeling * f) -> string
    {
        std::ostringstream out;
        out << "graph G {\n";
        for (Vertex v = 0; v < g.n(); ++v) {
            out << "  " << v << " [label=\"" << v;
            if (f)
                out << " " << f->label(v).to_string();
            out << "\"";
            if (g.role(v) != Role::None)
                out << ", role=\"" << role_name(g.role(v)) << "\"";
            out << "];\n";
        }
        for (auto [u, v] : g.edges()) {
            out << "  " << u << " -- " << v;
            if (f)
                out << " [label=\"" << sumset(f->label(u), f->label(v)).to_string() << "\"]";
            out << ";\n";
        }
        out << "}\n";
        return out.str();
    }

    namespace
    {
        auto oracle_cell(const AuditRow & row) -> string
        {
            if (row.oracle.status == SolveStatus::Optimal)
                return std::to_string(row.oracle.minimum);
            return row.oracle.status == SolveStatus::Timeout ? "timeout" : "infeasible";
        }

        auto convention(const AuditRow & row) -> string
        {
            string c = row.options.allow_zero ? "zero" : "positive";
            c += row.options.require_non_uniform ? "/non-uniform" : "/any";
            c += row.options.universe == UniverseKind::Segment ? "/segment" : "/all-subsets";
            return c;
        }
    }

    auto audit_csv_header() -> string
    {
        return "family,n,claimed,construction,exception,scheme,oracle,relation,universe,convention,nodes";
    }

    auto audit_csv_row(const AuditRow & row) -> string
    {
        std::ostringstream out;
        out << family_name(row.spec.family) << "," << row.spec.n << "," << row.claimed << "," << row.construction << ","
            << (row.construction_exception ? "yes" : "no") << "," << scheme_name(row.scheme) << "," << oracle_cell(row) << ","
            << row.relation << "," << row.universe_bound << "," << convention(row) << "," << row.oracle.nodes_explored;
        return out.str();
    }

    namespace
    {
        constexpr const char * text_format = "%-13s %4s %8s %13s %10s %-19s %11s %9s %9s  %s";
    }

    auto audit_text_header() -> string
    {
        char buffer[256];
        std::snprintf(buffer, sizeof(buffer), text_format, "family", "n", "claimed", "construction", "exception", "scheme",
            "oracle", "relation", "universe", "convention");
        return buffer;
    }

    auto audit_text_row(const AuditRow & row) -> string
    {
        char buffer[256];
        string rel(1, row.relation);
        std::snprintf(buffer, sizeof(buffer), text_format, string{ family_name(row.spec.family) }.c_str(),
            std::to_string(row.spec.n).c_str(), std::to_string(row.claimed).c_str(), std::to_string(row.construction).c_str(),
            row.construction_exception ? "yes" : "no", string{ scheme_name(row.scheme) }.c_str(), oracle_cell(row).c_str(),
            rel.c_str(), std::to_string(row.universe_bound).c_str(), convention(row).c_str());
        return buffer;
    }
}
