// Command-line front end: classification, construction, verification, brute
// force oracles, family generation, SVG rendering, cross-validation.
//
// Exit codes: classify 0 = YES, 1 = NO, 2 = error; verify 0 = pass, 1 = fail;
// oracle 0 = found, 1 = none on this grid, 3 = inconclusive (node cap).

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "pcaepg/builder.hpp"
#include "pcaepg/classify.hpp"
#include "pcaepg/graph_io.hpp"
#include "pcaepg/oracle.hpp"
#include "pcaepg/svg.hpp"

namespace {

using namespace pcaepg;

Graph load_graph(const std::string& spec, const std::string& format) {
    if (spec == "-") return read_graph(std::cin, format);
    std::ifstream in(spec);
    if (!in) throw FormatError("cannot open input file: " + spec);
    return read_graph(in, format);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open output file: " + path);
    out << content;
}

nlohmann::json verdict_json(const std::string& target, const Verdict& v) {
    nlohmann::json j;
    j["target"] = target;
    j["decision"] = v.yes ? "YES" : "NO";
    j["class"] = class_tag_name(v.tag);
    if (v.forbidden) {
        j["certificate"] = {{"family", v.forbidden->family.name()},
                            {"embedding", v.forbidden->embedding}};
    } else if (v.asteroidal_triple) {
        j["certificate"] = {{"asteroidal_triple", *v.asteroidal_triple}};
    } else {
        j["certificate"] = nullptr;
    }
    return j;
}

bool parse_grid(const std::string& text, SearchBudget& budget) {
    auto x = text.find('x');
    if (x == std::string::npos) return false;
    try {
        budget.grid_rows = std::stoi(text.substr(0, x));
        budget.grid_cols = std::stoi(text.substr(x + 1));
    } catch (...) {
        return false;
    }
    return true;
}

int run(int argc, char** argv) {
    CLI::App app{"proper circular arc graphs: B1-EPG/B1-EPR classification and construction"};
    app.require_subcommand(1);

    std::string in_spec = "-", format = "adj", target = "b1epg";
    std::string rep_path, out_path, svg_path, family_name, grid_text = "6x6", report_path;
    int param = 0, max_bends = 1, max_n = 5;
    bool serpentine = false, arc_mode = false, flag_proper = false, flag_normal = false,
         flag_helly3 = false, epr_mode = false;
    std::int64_t node_limit = 4'000'000'000LL;

    auto* classify = app.add_subcommand("classify", "classify a graph; JSON verdict with certificate");
    classify->add_option("--in,in", in_spec, "graph file or - for stdin");
    classify->add_option("--format", format, "adj|graph6")->check(CLI::IsMember({"adj", "graph6"}));
    classify->add_option("--target", target, "pca|interval|phca|b1epg|b1epr")
        ->check(CLI::IsMember({"pca", "interval", "phca", "b1epg", "b1epr"}));

    auto* build = app.add_subcommand("build", "construct a 1-bend representation");
    build->add_option("--in,in", in_spec, "graph file or - for stdin");
    build->add_option("--format", format, "adj|graph6")->check(CLI::IsMember({"adj", "graph6"}));
    build->add_option("--out", out_path, "representation JSON output");
    build->add_option("--svg", svg_path, "also render an SVG");
    build->add_flag("--epr", epr_mode, "rectangle-boundary construction (Corollary-2 route)");

    auto* verify = app.add_subcommand("verify", "validate a representation against a graph");
    verify->add_option("--rep", rep_path, "representation JSON")->required();
    verify->add_option("--in", in_spec, "graph file or - for stdin")->required();
    verify->add_option("--format", format, "adj|graph6")->check(CLI::IsMember({"adj", "graph6"}));
    verify->add_option("--max-bends", max_bends, "bend budget (default 1)");
    verify->add_flag("--epr", epr_mode, "also require the paths to lie on the bounding rectangle");

    auto* oracle = app.add_subcommand("oracle", "exhaustive search oracles");
    oracle->add_option("--in,in", in_spec, "graph file or - for stdin");
    oracle->add_option("--format", format, "adj|graph6")->check(CLI::IsMember({"adj", "graph6"}));
    oracle->add_option("--grid", grid_text, "RxC grid points (default 6x6)");
    oracle->add_option("--node-limit", node_limit, "backtracking node cap");
    oracle->add_flag("--arc", arc_mode, "search a circular arc model instead of grid paths");
    oracle->add_flag("--proper", flag_proper, "arc search: no arc contains another");
    oracle->add_flag("--normal", flag_normal, "arc search: no two arcs cover the circle");
    oracle->add_flag("--helly3", flag_helly3, "arc search: no three arcs cover the circle");

    auto* generate = app.add_subcommand("generate", "emit a named family member");
    generate->add_option("--family", family_name, "family tag (e.g. H3, W4, powercycle)")->required();
    generate->add_option("--param", param, "family parameter where needed");
    generate->add_flag("--serpentine", serpentine, "H5 variant with the extra edge");
    generate->add_option("--format", format, "adj|graph6")->check(CLI::IsMember({"adj", "graph6"}));

    auto* render = app.add_subcommand("render", "render a representation JSON to SVG");
    render->add_option("--rep", rep_path, "representation JSON")->required();
    render->add_option("--svg", svg_path, "SVG output path")->required();

    auto* crossval = app.add_subcommand("crossval", "classifier vs oracle over all connected graphs");
    crossval->add_option("--max-n", max_n, "largest vertex count (<= 7)");
    crossval->add_option("--grid", grid_text, "RxC oracle grid (default 6x6)");
    crossval->add_option("--out", report_path, "report file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    if (classify->parsed()) {
        Graph g = load_graph(in_spec, format);
        Verdict v;
        if (target == "pca") v = is_pca(g);
        else if (target == "interval") v = is_interval(g);
        else if (target == "phca") v = is_phca(g);
        else if (target == "b1epg") v = classify_b1_epg(g);
        else v = classify_b1_epr(g);
        std::cout << verdict_json(target, v).dump(2) << '\n';
        return v.yes ? 0 : 1;
    }

    if (build->parsed()) {
        Graph g = load_graph(in_spec, format);
        EpgRepresentation rep = epr_mode ? build_b1_epr(g).rep : build_b1_epg(g);
        std::string json = rep_to_json(rep);
        if (out_path.empty()) std::cout << json << '\n';
        else write_file(out_path, json + "\n");
        if (!svg_path.empty()) write_file(svg_path, render_svg(rep));
        return 0;
    }

    if (verify->parsed()) {
        Graph g = load_graph(in_spec, format);
        std::ifstream in(rep_path);
        if (!in) throw FormatError("cannot open representation: " + rep_path);
        std::stringstream buf;
        buf << in.rdbuf();
        EpgRepresentation rep = rep_from_json(buf.str());
        ValidationReport report = validate_representation(rep, g, max_bends);
        std::cout << report.to_string() << '\n';
        bool ok = report.ok;
        if (epr_mode) {
            bool boundary = is_epr(rep, bounding_rectangle(rep));
            std::cout << "rectangle boundary: " << (boundary ? "ok" : "VIOLATED") << '\n';
            ok = ok && boundary;
        }
        return ok ? 0 : 1;
    }

    if (oracle->parsed()) {
        Graph g = load_graph(in_spec, format);
        if (arc_mode) {
            auto model = search_arc_representation(g, {flag_proper, flag_normal, flag_helly3});
            if (!model) {
                std::cout << "none\n";
                return 1;
            }
            nlohmann::json j;
            j["circle_size"] = model->circle_size;
            j["arcs"] = nlohmann::json::array();
            for (auto [s, e] : model->arcs) j["arcs"].push_back({s, e});
            std::cout << j.dump(2) << '\n';
            return 0;
        }
        SearchBudget budget;
        if (!parse_grid(grid_text, budget)) throw FormatError("bad --grid, expected RxC");
        budget.node_limit = node_limit;
        EpgSearchResult res = search_b1_epg(g, budget);
        if (res.status == SearchStatus::found) {
            std::cout << rep_to_json(*res.rep) << '\n';
            return 0;
        }
        if (res.status == SearchStatus::exhausted) {
            std::cout << "none\n";
            return 1;
        }
        std::cout << "inconclusive\n";
        return 3;
    }

    if (generate->parsed()) {
        auto fam = parse_family(family_name, param, serpentine);
        if (!fam) throw FormatError("unknown family: " + family_name);
        write_graph(std::cout, named_graph(*fam), format);
        return 0;
    }

    if (render->parsed()) {
        std::ifstream in(rep_path);
        if (!in) throw FormatError("cannot open representation: " + rep_path);
        std::stringstream buf;
        buf << in.rdbuf();
        write_file(svg_path, render_svg(rep_from_json(buf.str())));
        return 0;
    }

    if (crossval->parsed()) {
        SearchBudget budget;
        if (!parse_grid(grid_text, budget)) throw FormatError("bad --grid, expected RxC");
        CrossValidateReport report = cross_validate(max_n, budget);
        if (report_path.empty()) std::cout << report.to_text();
        else write_file(report_path, report.to_text());
        return report.disagreements == 0 ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const PreconditionError& e) {
        nlohmann::json j;
        j["error"] = e.what();
        if (e.pca_verdict.forbidden)
            j["certificate"] = {{"family", e.pca_verdict.forbidden->family.name()},
                                {"embedding", e.pca_verdict.forbidden->embedding}};
        std::cerr << j.dump(2) << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
