#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "ordtile/copies.hpp"
#include "ordtile/extremal.hpp"
#include "ordtile/json_report.hpp"
#include "ordtile/partial_tiling.hpp"
#include "ordtile/thresholds.hpp"

namespace {

using namespace ordtile;

// Exit codes: 0 success, 1 negative mathematical verdict on a yes/no
// question, 2 input error, 3 timeout/unknown.
constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInput = 2;
constexpr int kExitUnknown = 3;

void emit(const json& doc, bool human) {
    if (human)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << doc.dump() << "\n";
}

std::string human_rational(const Rational& r) {
    if (r.is_integer()) return r.str();
    std::ostringstream out;
    out << r.str() << " (~" << r.approx() << ")";
    return out.str();
}

OrderedMultipartite load_parts(const std::string& spec) {
    if (spec.rfind("parts:", 0) == 0) return parse_parts_line(spec);
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("cannot open '" + spec + "'");
    std::string line;
    std::getline(in, line);
    return parse_parts_line(line);
}

int cmd_analyze(const std::string& path, bool human) {
    OrderedGraph pattern = load_ordered_graph(path);
    IntervalColouring witness;
    int r = interval_chromatic(pattern, witness);
    if (r < 2)
        throw std::invalid_argument("pattern has no edges; tiling thresholds are undefined");
    ChiStarResult chi = chi_star_exact(pattern);
    ThresholdReport report = classify(pattern, chi);
    json doc = threshold_json(pattern, report);
    doc["interval_colouring"] = witness.lengths;
    emit(doc, human);
    if (human) {
        std::cout << "chi_< = " << r << ", case " << to_string(report.perfect_case);
        if (report.chi_star.exact)
            std::cout << ", chi*_cr = " << human_rational(report.chi_star.value);
        std::cout << "\n";
    }
    return kExitYes;
}

int cmd_tile(const std::string& host_path, const std::string& pattern_path,
             const std::string& mode, const std::string& x_text, std::optional<int> target,
             long long budget, bool human) {
    OrderedGraph host = load_ordered_graph(host_path);
    OrderedGraph pattern = load_ordered_graph(pattern_path);
    if (mode == "perfect") {
        TilingAnswer answer = perfect_tiling(host, pattern, budget);
        emit(tiling_json(answer), human);
        if (answer.status == TilingStatus::Timeout) return kExitUnknown;
        return answer.status == TilingStatus::PerfectFound ? kExitYes : kExitNo;
    }
    if (mode == "cover") {
        std::vector<int> uncovered = h_cover_uncovered(host, pattern);
        json doc;
        doc["status"] = uncovered.empty() ? "covered" : "uncovered";
        doc["uncovered"] = uncovered;
        doc["copies"] = json::array();
        doc["nodes"] = 0;
        emit(doc, human);
        return uncovered.empty() ? kExitYes : kExitNo;
    }
    if (mode == "max") {
        TilingAnswer answer = max_tiling(host, pattern, target, budget);
        json doc = tiling_json(answer);
        doc["max_copies"] = answer.max_copies;
        if (target) doc["target_met"] = answer.target_met;
        emit(doc, human);
        if (answer.status == TilingStatus::Timeout) return kExitUnknown;
        if (target) return answer.target_met ? kExitYes : kExitNo;
        return kExitYes;
    }
    // mode == "x": an (x, pattern)-tiling question on the host.
    Rational x = Rational::parse(x_text);
    if (x <= Rational(0) || x > Rational(1))
        throw std::invalid_argument("x must lie in (0, 1]");
    Rational needed = x * Rational(host.h());
    int copies = static_cast<int>((needed / Rational(pattern.h())).ceil());
    if (copies > host.h() / pattern.h()) {
        json doc;
        doc["status"] = "max_cover";
        doc["copies"] = json::array();
        doc["nodes"] = 0;
        doc["target_met"] = false;
        emit(doc, human);
        return kExitNo;
    }
    TilingAnswer answer = max_tiling(host, pattern, copies, budget);
    json doc = tiling_json(answer);
    doc["target_met"] = answer.target_met;
    emit(doc, human);
    if (answer.status == TilingStatus::Timeout) return kExitUnknown;
    return answer.target_met ? kExitYes : kExitNo;
}

int cmd_bottlegraph(const std::string& parts_spec, const std::string& pattern_path, bool simple,
                    std::optional<int> tmax, const std::string& x_text, long long budget,
                    bool human) {
    OrderedMultipartite parts = load_parts(parts_spec);
    std::vector<int> sizes = parts.sizes_in_order;
    CompleteMultipartite bottle(sizes);
    OrderedGraph pattern = load_ordered_graph(pattern_path);
    if (!x_text.empty()) {
        XBottleVerdict verdict =
            check_x_bottlegraph(bottle, Rational::parse(x_text), pattern, budget);
        emit(x_bottle_json(verdict), human);
        switch (verdict.status) {
            case XBottleStatus::Yes: return kExitYes;
            case XBottleStatus::No: return kExitNo;
            case XBottleStatus::Unknown: return kExitUnknown;
        }
    }
    BottleVerdict verdict = simple ? check_simple_bottlegraph(bottle, pattern, budget)
                                   : check_bottlegraph_bounded(bottle, pattern,
                                                               tmax.value_or(4), budget);
    emit(bottle_json(verdict), human);
    switch (verdict.status) {
        case BottleStatus::SimpleYes:
        case BottleStatus::BoundedYes: return kExitYes;
        case BottleStatus::NotSimple:
        case BottleStatus::No: return kExitNo;
        case BottleStatus::Unknown: return kExitUnknown;
    }
    return kExitUnknown;
}

int cmd_extremal(const std::string& which, const std::string& pattern_path, int n, int r, int i,
                 int j, const std::string& out_path, long long budget, bool human) {
    json report;
    std::string graph_text;
    if (which == "f1") {
        F1Construction f1 = build_f1(n, r, i, j);
        graph_text = format_ordered_graph(f1.graph);
        report["construction"] = "F1";
        report["params"] = {{"n", n}, {"r", r}, {"i", i}, {"j", j}};
        report["class_sizes"] = f1.class_sizes;
        report["u"] = f1.u;
        report["min_degree"] = f1.min_degree;
        report["degree_formula"] = "n - 1 - floor((n-1)/r)";
        if (!pattern_path.empty()) {
            OrderedGraph pattern = load_ordered_graph(pattern_path);
            std::vector<int> uncovered = h_cover_uncovered(f1.graph, pattern);
            bool u_uncovered = false;
            for (int v : uncovered) u_uncovered |= (v == f1.u);
            report["obstruction"] = {{"kind", "NoCoverAt"}, {"vertex", f1.u},
                                     {"holds", u_uncovered}};
        }
    } else if (which == "f2") {
        OrderedGraph pattern = load_ordered_graph(pattern_path);
        ChiStarResult chi = chi_star_exact(pattern);
        if (!chi.exact)
            throw std::invalid_argument(
                "chi*_cr could not be certified exactly; the construction needs it");
        CompleteMultipartite bottle = build_f2(pattern, n, chi.value);
        AdversarialLabelling adv = adversarial_labelling(bottle, pattern, budget);
        graph_text = format_parts_line(adv.ordering);
        report["construction"] = "F2";
        report["params"] = {{"n", n}, {"chi_star", rational_json(chi.value)}};
        report["class_sizes"] = bottle.sizes;
        report["min_degree"] = static_cast<long long>(n) - bottle.sizes.front();
        report["degree_formula"] = "n - floor(n/chi* + 1)";
        report["obstruction"] = {{"kind", "NoPerfectTiling"},
                                 {"ordering", adv.ordering.sizes_in_order},
                                 {"nodes", adv.nodes}};
    } else if (which == "f3") {
        OrderedGraph pattern = load_ordered_graph(pattern_path);
        F3Construction f3 = build_f3(pattern, n);
        graph_text = format_ordered_graph(f3.graph);
        report["construction"] = "F3";
        report["params"] = {{"n", n}};
        report["class_sizes"] = f3.class_sizes;
        report["min_degree"] = f3.min_degree;
        report["degree_formula"] = "n - ceil(n/(chi_< - 1))";
        report["obstruction"] = {{"kind", "NoCopyOfH"},
                                 {"copies", count_copies(f3.graph, pattern)}};
    } else {
        throw std::invalid_argument("unknown construction '" + which + "'");
    }
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
        out << graph_text;
    } else {
        report["graph"] = graph_text;
    }
    emit(report, human);
    return kExitYes;
}

int cmd_fxh(const std::string& pattern_path, bool human) {
    OrderedGraph pattern = load_ordered_graph(pattern_path);
    FProfile profile = f_profile(pattern);
    emit(fprofile_json(profile), human);
    return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tiling invariants for vertex-ordered graphs"};
    app.require_subcommand(1);
    bool human = false;
    app.add_flag("--human", human, "pretty-print and annotate the output");

    auto* analyze = app.add_subcommand("analyze", "full threshold report for a pattern");
    std::string analyze_path;
    analyze->add_option("graph", analyze_path, "ordered-graph file")->required();

    auto* tile = app.add_subcommand("tile", "tiling and cover searches");
    std::string host_path, tile_pattern, x_text;
    bool want_perfect = false, want_cover = false, want_max = false;
    std::optional<int> target;
    long long budget = kDefaultNodeBudget;
    tile->add_option("host", host_path, "host graph file")->required();
    tile->add_option("pattern", tile_pattern, "pattern graph file")->required();
    tile->add_flag("--perfect", want_perfect, "decide a perfect tiling");
    tile->add_flag("--cover", want_cover, "list vertices in no pattern copy");
    tile->add_flag("--max", want_max, "maximum number of disjoint copies");
    tile->add_option("--x", x_text, "decide an (x,H)-tiling, x as p/q");
    tile->add_option("--target", target, "copy target for --max");
    tile->add_option("--budget", budget, "search node budget");

    auto* bottle = app.add_subcommand("bottlegraph", "bottlegraph certification");
    std::string parts_spec, bottle_pattern, bottle_x;
    bool simple = false;
    std::optional<int> tmax;
    bottle->add_option("parts", parts_spec, "'parts: s1 s2 ...' or a file")->required();
    bottle->add_option("pattern", bottle_pattern, "pattern graph file")->required();
    bottle->add_flag("--simple", simple, "require blow-up factor 1");
    bottle->add_option("--tmax", tmax, "largest blow-up factor to try");
    bottle->add_option("--x", bottle_x, "check an x-bottlegraph, x as p/q");
    bottle->add_option("--budget", budget, "search node budget");

    auto* extremal = app.add_subcommand("extremal", "build extremal constructions");
    std::string which, extremal_pattern, out_path;
    int n = 0, r = 0, i = 0, j = 0;
    extremal->add_option("construction", which, "f1 | f2 | f3")->required();
    extremal->add_option("--pattern", extremal_pattern, "pattern graph file (f2, f3)");
    extremal->add_option("--n", n, "vertex count")->required();
    extremal->add_option("--r", r, "interval chromatic number (f1)");
    extremal->add_option("--i", i, "singleton class index (f1)");
    extremal->add_option("--j", j, "non-neighbour class index (f1)");
    extremal->add_option("--out", out_path, "write the graph to this file");
    extremal->add_option("--budget", budget, "search node budget");

    auto* fxh = app.add_subcommand("fxh", "piecewise profile of the (x,H) threshold");
    std::string fxh_path;
    fxh->add_option("pattern", fxh_path, "pattern graph file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return cmd_analyze(analyze_path, human);
        if (*tile) {
            int modes = int(want_perfect) + int(want_cover) + int(want_max) +
                        int(!x_text.empty());
            if (modes != 1)
                throw std::invalid_argument(
                    "pick exactly one of --perfect, --cover, --max, --x");
            std::string mode = want_perfect ? "perfect"
                               : want_cover ? "cover"
                               : want_max   ? "max"
                                            : "x";
            return cmd_tile(host_path, tile_pattern, mode, x_text, target, budget, human);
        }
        if (*bottle) {
            if (int(simple) + int(tmax.has_value()) + int(!bottle_x.empty()) != 1)
                throw std::invalid_argument("pick exactly one of --simple, --tmax, --x");
            return cmd_bottlegraph(parts_spec, bottle_pattern, simple, tmax, bottle_x, budget,
                                   human);
        }
        if (*extremal)
            return cmd_extremal(which, extremal_pattern, n, r, i, j, out_path, budget, human);
        if (*fxh) return cmd_fxh(fxh_path, human);
    } catch (const ordtile::TimeoutError& e) {
        std::cerr << "timeout: " << e.what() << "\n";
        return kExitUnknown;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
