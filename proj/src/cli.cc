#include <wiasl/cli.hh>
#include <wiasl/constructors.hh>
#include <wiasl/errors.hh>
#include <wiasl/io.hh>
#include <wiasl/solver.hh>

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <random>
#include <regex>

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace wiasl
{
    namespace
    {
        struct Flags
        {
            string out = "text";
            string mode = "wiasl";
            unsigned universe = 0;
            bool allow_zero = false;
            bool all_subsets = false;
            bool allow_uniform = false;
            optional<size_t> max_label_size;
            double time_budget = 0;
            int max_vertices = 12;
            unsigned threads = 1;
            string n_range;
            std::uint64_t seed = 1;
            bool all_conventions = false;
        };

        auto parse_mode(const string & text, SolveOptions & opts) -> void
        {
            static const std::regex uniform{ R"(uniform:(\d+))" };
            std::smatch m;
            if (text == "wiasl")
                opts.mode = SolveMode::WIASL;
            else if (text == "wiasi")
                opts.mode = SolveMode::WIASI;
            else if (std::regex_match(text, m, uniform)) {
                opts.mode = SolveMode::Uniform;
                opts.k = std::stoul(m[1].str());
                if (opts.k == 0)
                    throw CLI::ValidationError{ "--mode", "uniform:k needs k >= 1" };
            }
            else
                throw CLI::ValidationError{ "--mode", "expected wiasl, wiasi or uniform:k, got '" + text + "'" };
        }

        auto solve_options(const Flags & f) -> SolveOptions
        {
            SolveOptions opts;
            parse_mode(f.mode, opts);
            opts.universe = f.all_subsets ? UniverseKind::AllSubsets : UniverseKind::Segment;
            opts.universe_bound = f.universe;
            opts.allow_zero = f.allow_zero;
            opts.require_non_uniform = ! f.allow_uniform;
            opts.max_label_size = f.max_label_size;
            opts.time_budget = std::chrono::milliseconds{ static_cast<long long>(f.time_budget * 1000) };
            opts.max_vertices = f.max_vertices;
            opts.workers = std::max(1u, f.threads);
            if (opts.universe_bound > solver_universe_limit)
                throw CLI::ValidationError{ "--universe", "must be at most " + std::to_string(solver_universe_limit) };
            return opts;
        }

        auto parse_n_range(const string & text) -> std::pair<int, int>
        {
            static const std::regex range{ R"((\d+)\.\.(\d+))" };
            std::smatch m;
            if (! std::regex_match(text, m, range))
                throw CLI::ValidationError{ "--n-range", "expected a..b, got '" + text + "'" };
            int a = std::stoi(m[1].str()), b = std::stoi(m[2].str());
            if (a > b)
                throw CLI::ValidationError{ "--n-range", "empty range " + text };
            return { a, b };
        }

        auto parse_n(const string & text) -> int
        {
            size_t used = 0;
            int n = -1;
            try {
                n = std::stoi(text, &used);
            }
            catch (const std::exception &) {
                used = 0;
            }
            if (used != text.size() || n < 0)
                throw CLI::ValidationError{ "n", "'" + text + "' is not a non-negative integer" };
            return n;
        }

        // G(n, 1/2), then every isolated vertex is joined to a random other vertex
        auto random_graph(int n, std::uint64_t seed) -> Graph
        {
            if (n < 2)
                throw InvalidParameter{ "random graphs need n >= 2" };
            std::mt19937_64 rng{ seed };
            std::bernoulli_distribution coin{ 0.5 };
            vector<vector<bool>> adj(n, vector<bool>(n, false));
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (coin(rng))
                        adj[u][v] = adj[v][u] = true;
            std::uniform_int_distribution<int> other{ 0, n - 2 };
            for (int u = 0; u < n; ++u)
                if (std::none_of(adj[u].begin(), adj[u].end(), [] (bool b) { return b; })) {
                    int v = other(rng);
                    if (v >= u)
                        ++v;
                    adj[u][v] = adj[v][u] = true;
                }
            vector<Edge> edges;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (adj[u][v])
                        edges.emplace_back(u, v);
            return Graph{ n, edges };
        }

        auto print_labels(std::ostream & out, const SetLabeling & f) -> void
        {
            for (Vertex v = 0; v < f.graph().n(); ++v) {
                out << "  f(" << v << ") = " << f.label(v).to_string();
                if (f.graph().role(v) != Role::None)
                    out << "  [" << role_name(f.graph().role(v)) << "]";
                out << "\n";
            }
            for (auto [u, v] : f.graph().edges())
                out << "  f+(" << u << "," << v << ") = " << sumset(f.label(u), f.label(v)).to_string() << "\n";
        }

        auto print_report(std::ostream & out, const VerifyReport & r) -> void
        {
            out << class_name(r.checked_class);
            if (r.k)
                out << " (k=" << *r.k << ")";
            out << ": " << (r.valid ? "valid" : "INVALID") << "\n";
            for (const auto & v : r.violations)
                out << "  " << v.rule << ": " << v.detail << "\n";
            if (r.truncated)
                out << "  (further violations not listed)\n";
        }

        auto status_exit(SolveStatus s) -> int
        {
            switch (s) {
                case SolveStatus::Optimal: return exit_code::ok;
                case SolveStatus::Timeout: return exit_code::timeout;
                case SolveStatus::Infeasible: return exit_code::infeasible;
            }
            return exit_code::ok;
        }

        auto families(std::ostream & out) -> int
        {
            out << "family        min-n  claimed       vertices  edges\n";
            struct Row { Family f; const char * formula; const char * vertices; const char * edges; };
            const Row rows[] = {
                { Family::Path, "2+floor(n/2)", "n", "n-1" },
                { Family::Cycle, "2+floor(n/2)", "n", "n" },
                { Family::Complete, "2n-3", "n", "n(n-1)/2" },
                { Family::Wheel, "3+floor(n/2)", "n+1", "2n" },
                { Family::Helm, "n+3", "2n+1", "3n" },
                { Family::Friendship, "n+3", "2n+1", "3n" },
                { Family::Sunlet, "n+2", "2n", "2n" },
                { Family::Sun, "n+3", "2n", "3n" },
                { Family::CompleteSun, "n+3", "2n", "n(n-1)/2+2n" } };
            char line[128];
            for (const auto & r : rows) {
                std::snprintf(line, sizeof(line), "%-13s %5d  %-13s %-9s %s\n", string{ family_name(r.f) }.c_str(),
                    family_min_parameter(r.f), r.formula, r.vertices, r.edges);
                out << line;
            }
            return exit_code::ok;
        }

        auto generate_command(std::ostream & out, const string & family, const string & n_text, const Flags & f) -> int
        {
            int n = parse_n(n_text);
            Graph g = family == "random" ? random_graph(n, f.seed) : generate(FamilySpec{ parse_family(family), n });
            if (f.out == "json")
                out << to_json(g).dump() << "\n";
            else if (f.out == "dot")
                out << to_dot(g);
            else {
                out << family << " " << n << ": " << g.n() << " vertices, " << g.edge_count() << " edges\n";
                for (auto [u, v] : g.edges())
                    out << "  " << u << " -- " << v << "\n";
            }
            return exit_code::ok;
        }

        auto label_command(std::ostream & out, const string & family, const string & n_text, const Flags & f) -> int
        {
            FamilySpec spec{ parse_family(family), parse_n(n_text) };
            auto c = construct(spec);
            if (f.out == "json") {
                auto j = to_json(c.labeling);
                j["family"] = family;
                j["n"] = spec.n;
                j["claimed"] = c.claimed;
                j["ground_set_size"] = c.ground_size;
                j["exception"] = c.exception;
                j["scheme"] = string{ scheme_name(c.scheme) };
                out << j.dump() << "\n";
            }
            else if (f.out == "dot")
                out << to_dot(c.labeling.graph(), &c.labeling);
            else {
                out << family << " " << spec.n << ": ground set " << c.labeling.ground_set().to_string() << " (size "
                    << c.ground_size << ", claimed " << c.claimed << (c.exception ? ", EXCEPTION" : "") << ", scheme "
                    << scheme_name(c.scheme) << ")\n";
                print_labels(out, c.labeling);
            }
            return exit_code::ok;
        }

        auto verify_command(std::ostream & out, const string & path, const Flags & f, bool mode_given) -> int
        {
            auto doc = labeling_from_json(read_json_file(path));
            auto cls = doc.labeling_class;
            auto k = doc.k;
            if (mode_given) {
                SolveOptions opts;
                parse_mode(f.mode, opts);
                cls = opts.mode == SolveMode::WIASI ? LabelingClass::WIASI
                    : opts.mode == SolveMode::Uniform ? LabelingClass::Uniform : LabelingClass::WIASL;
                if (opts.mode == SolveMode::Uniform)
                    k = opts.k;
            }
            auto report = verify(doc.labeling, cls, k);
            if (f.out == "json")
                out << to_json(report).dump() << "\n";
            else
                print_report(out, report);
            return report.valid ? exit_code::ok : exit_code::invalid_labeling;
        }

        auto solve_command(std::ostream & out, const vector<string> & target, const Flags & f) -> int
        {
            SolveOptions opts = solve_options(f);
            Graph g;
            string name;
            if (target.size() == 2) {
                FamilySpec spec{ parse_family(target[0]), parse_n(target[1]) };
                g = generate(spec);
                name = target[0] + " " + target[1];
                if (opts.universe_bound == 0)
                    opts.universe_bound = static_cast<unsigned>(std::min<size_t>(2 * claimed_value(spec) + 2, solver_universe_limit));
            }
            else if (target.size() == 1) {
                auto j = read_json_file(target[0]);
                g = j.contains("graph") ? graph_from_json(j.at("graph")) : graph_from_json(j);
                name = target[0];
                if (opts.universe_bound == 0)
                    opts.universe_bound = static_cast<unsigned>(std::min<size_t>(2 * g.n() + 2, solver_universe_limit));
            }
            else
                throw CLI::ValidationError{ "solve", "expected 'family n' or a JSON file" };

            auto result = min_ground_set(g, opts);
            if (f.out == "json")
                out << to_json(result, opts).dump() << "\n";
            else {
                out << name << ": " << status_name(result.status);
                if (result.status == SolveStatus::Optimal)
                    out << ", minimum " << result.minimum;
                out << " (mode " << mode_name(opts.mode) << (opts.allow_zero ? ", zero allowed" : "")
                    << (opts.universe == UniverseKind::AllSubsets ? ", all subsets" : ", segments") << ", universe bound "
                    << result.universe_bound << ", " << result.nodes_explored << " nodes)\n";
                if (result.witness) {
                    out << "  ground set " << result.witness->ground_set().to_string() << "\n";
                    print_labels(out, *result.witness);
                }
            }
            return status_exit(result.status);
        }

        auto audit_command(std::ostream & out, const string & family, const Flags & f) -> int
        {
            Family fam = parse_family(family);
            auto [a, b] = parse_n_range(f.n_range);
            SolveOptions base = solve_options(f);

            vector<SolveOptions> conventions{ base };
            if (f.all_conventions) {
                conventions.clear();
                for (bool zero : { false, true })
                    for (bool non_uniform : { true, false }) {
                        auto o = base;
                        o.allow_zero = zero;
                        o.require_non_uniform = non_uniform;
                        conventions.push_back(o);
                    }
            }

            const bool csv = f.out == "csv";
            out << (csv ? audit_csv_header() : audit_text_header()) << "\n" << std::flush;

            int status = exit_code::ok;
            for (int n = a; n <= b; ++n) {
                FamilySpec spec{ fam, n };
                validate(spec);
                for (const auto & opts : conventions) {
                    auto row = audit(spec, opts);
                    out << (csv ? audit_csv_row(row) : audit_text_row(row)) << "\n" << std::flush;
                    if (row.oracle.status == SolveStatus::Timeout)
                        status = exit_code::timeout;
                    else if (row.oracle.status == SolveStatus::Infeasible && status == exit_code::ok)
                        status = exit_code::infeasible;
                }
            }
            return status;
        }
    }

    auto run_cli(const vector<string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{ "Weak integer additive set-labelings: generate, label, verify, solve, audit" };
        app.name(args.empty() ? "wiasl" : args.front());
        app.require_subcommand(1);

        Flags f;
        string family, n_text, path;
        vector<string> target;

        auto add_solver_flags = [&] (CLI::App * cmd) {
            cmd->add_option("--mode", f.mode, "wiasl | wiasi | uniform:k")->default_val("wiasl");
            cmd->add_option("--universe", f.universe, "largest element a ground set may use (default 2*claimed+2)");
            cmd->add_flag("--allow-zero", f.allow_zero, "let ground sets contain 0");
            cmd->add_flag("--all-subsets", f.all_subsets, "try every m-subset of the universe, not just segments");
            cmd->add_flag("--allow-uniform", f.allow_uniform, "admit all-singleton (1-uniform) labelings");
            cmd->add_option("--max-label-size", f.max_label_size, "largest vertex label considered");
            cmd->add_option("--time-budget", f.time_budget, "seconds; 0 means unlimited")->check(CLI::NonNegativeNumber);
            cmd->add_option("--max-vertices", f.max_vertices, "refuse larger graphs")->check(CLI::PositiveNumber);
            cmd->add_option("--threads", f.threads, "worker threads for --all-subsets")->check(CLI::PositiveNumber);
        };

        auto * families_cmd = app.add_subcommand("families", "list the supported families and their claimed values");

        auto * generate_cmd = app.add_subcommand("generate", "emit a family graph (or 'random n --seed s')");
        generate_cmd->add_option("family", family)->required();
        generate_cmd->add_option("n", n_text)->required();
        generate_cmd->add_option("--out", f.out)->check(CLI::IsMember({ "json", "dot", "text" }));
        generate_cmd->add_option("--seed", f.seed, "seed for 'random'");

        auto * label_cmd = app.add_subcommand("label", "emit the constructed WIASL for a family member");
        label_cmd->add_option("family", family)->required();
        label_cmd->add_option("n", n_text)->required();
        label_cmd->add_option("--out", f.out)->check(CLI::IsMember({ "json", "dot", "text" }));

        auto * verify_cmd = app.add_subcommand("verify", "check a labeling JSON file; exit 1 when invalid");
        verify_cmd->add_option("file", path)->required();
        verify_cmd->add_option("--out", f.out)->check(CLI::IsMember({ "json", "text" }));
        auto * verify_mode = verify_cmd->add_option("--mode", f.mode, "override the file's class: wiasl | wiasi | uniform:k");

        auto * solve_cmd = app.add_subcommand("solve", "exact minimum ground set for 'family n' or a graph/labeling JSON file");
        solve_cmd->add_option("target", target)->required()->expected(1, 2);
        solve_cmd->add_option("--out", f.out)->check(CLI::IsMember({ "json", "text" }));
        add_solver_flags(solve_cmd);

        auto * audit_cmd = app.add_subcommand("audit", "claimed value vs construction vs solver, one row per n");
        audit_cmd->add_option("family", family)->required();
        audit_cmd->add_option("--n-range", f.n_range, "a..b")->required();
        audit_cmd->add_option("--out", f.out)->check(CLI::IsMember({ "csv", "text" }));
        audit_cmd->add_flag("--all-conventions", f.all_conventions, "rows for zero/positive x non-uniform/any");
        add_solver_flags(audit_cmd);

        vector<const char *> argv;
        for (const auto & a : args)
            argv.push_back(a.c_str());

        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
            // validate flag combinations before computing anything
            if (solve_cmd->parsed() || audit_cmd->parsed())
                solve_options(f);
            if (audit_cmd->parsed())
                parse_n_range(f.n_range);
        }
        catch (const CLI::CallForHelp &) {
            out << app.help();
            return exit_code::ok;
        }
        catch (const CLI::ParseError & e) {
            err << app.get_name() << ": " << e.what() << "\n";
            return exit_code::usage;
        }

        try {
            if (families_cmd->parsed())
                return families(out);
            if (generate_cmd->parsed())
                return generate_command(out, family, n_text, f);
            if (label_cmd->parsed())
                return label_command(out, family, n_text, f);
            if (verify_cmd->parsed())
                return verify_command(out, path, f, verify_mode->count() > 0);
            if (solve_cmd->parsed())
                return solve_command(out, target, f);
            if (audit_cmd->parsed())
                return audit_command(out, family, f);
        }
        catch (const CLI::ParseError & e) {
            err << app.get_name() << ": " << e.what() << "\n";
            return exit_code::usage;
        }
        catch (const WiaslError & e) {
            err << app.get_name() << ": " << e.what() << "\n";
            return exit_code::usage;
        }

        return exit_code::usage;
    }
}
