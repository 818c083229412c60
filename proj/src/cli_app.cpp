#include "nilorb/cli_app.hpp"

#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nilorb/cover.hpp"
#include "nilorb/degeneration.hpp"
#include "nilorb/induction.hpp"
#include "nilorb/oracle.hpp"

namespace nilorb {

namespace {

using nlohmann::json;

json partition_json(const Partition& p) { return json(p.parts()); }

json levi_json(const LeviShape& levi) {
    json blocks = json::array();
    for (auto [size, mult] : levi.gl_blocks) blocks.push_back({{"size", size}, {"mult", mult}});
    return {{"blocks", blocks},
            {"residual", levi.residual.name()},
            {"notation", levi.to_string()}};
}

json namikawa_json(const NamikawaReport& rep) {
    json leaves = json::object();
    for (auto [m, d] : rep.leaves) leaves[std::to_string(m)] = d;
    return {{"total", rep.dim_total}, {"smooth", rep.dim_smooth}, {"leaves", leaves}};
}

std::string diagram_text(const Partition& p) {
    std::string out;
    for (int v : p.parts()) out += "  " + std::string(v, '#') + "\n";
    return out;
}

struct Request {
    bool json_output = false;
    bool diagram = false;
    int brute_bound = 40;
    std::vector<std::string> warnings;
};

Algebra parse_algebra_arg(const std::string& text, Request& req) {
    Algebra g = parse_algebra(text);
    if (g.series == Series::SO && g.size < 3)
        throw std::invalid_argument("so_N requires N >= 3, got " + text);
    if (g.series == Series::SP && g.size < 2)
        throw std::invalid_argument("sp_N requires N >= 2, got " + text);
    if (g.series == Series::SO && g.size == 4)
        req.warnings.push_back("so4 is not simple (so4 = sl2 x sl2); formulas are applied "
                               "at the partition level");
    return g;
}

int emit(const std::string& command, const json& result, const Request& req, int code,
         std::ostream& out, std::ostream& err, const std::string& human) {
    for (const std::string& warning : req.warnings) err << "warning: " << warning << "\n";
    if (req.json_output) {
        json envelope = {{"schema_version", "1"},
                         {"command", command},
                         {"result", result},
                         {"warnings", req.warnings}};
        out << envelope.dump(2) << "\n";
    } else {
        out << human;
    }
    return code;
}

std::string singularity_row(const CoverLeaf& leaf) {
    std::string line = "  " + leaf.child.partition.to_string();
    line += "  q=" + std::to_string(leaf.md.q);
    line += " case=" + std::string(1, deg_case_letter(leaf.md.kind));
    line += " k=" + std::to_string(leaf.md.k);
    line += " d_m=" + std::to_string(leaf.md.d_m);
    line += "  closure=" + leaf.closure.to_string();
    line += "  H_m=" + std::string(leaf.hm == 1 ? "1" : "Z/2");
    line += "  cover=" + leaf.cover.to_string();
    line += "  dimP_m(orbit)=" + std::to_string(leaf.dim_leaf_orbit);
    line += "  dimP_m(cover)=" + std::to_string(leaf.dim_leaf);
    line += leaf.etale ? "  etale" : "";
    line += leaf.closure.non_normal_union() ? "  non_normal_union" : "";
    return line + "\n";
}

int cmd_orbit(const Algebra& g, const Partition& p, Request& req, std::ostream& out,
              std::ostream& err) {
    Orbit o = make_orbit(g, p);
    NamikawaReport nam = namikawa_orbit(o);
    RigidInduction rig = rigid_levi_orbit(o);
    auto sing = singular_set(p);
    auto special = special_row(p, g);

    json result = {{"algebra", g.name()},
                   {"partition", partition_json(p)},
                   {"valid", true},
                   {"very_even", o.very_even},
                   {"dimension", dim_orbit(o)},
                   {"pi1_exponent", pi1_adjoint(o).exponent},
                   {"h2_orbit", h2_orbit(o)},
                   {"h2_universal_cover", {{"value", h2_universal_cover(o)}, {"derived", true}}},
                   {"special_at", special ? json(*special) : json(nullptr)},
                   {"singular_set", json::array()},
                   {"rigid_levi", levi_json(rig.levi)},
                   {"rigid_source", partition_json(rig.source)},
                   {"namikawa", namikawa_json(nam)}};
    for (const SingularData& sd : sing)
        result["singular_set"].push_back({{"m", sd.m}, {"d", sd.d}});

    std::string human;
    human += "orbit " + g.name() + " [" + p.to_string() + "]\n";
    human += "  valid: yes" + std::string(o.very_even ? " (very even)" : "") + "\n";
    human += "  dim = " + std::to_string(dim_orbit(o)) + "\n";
    human += "  pi_1^G = (Z/2)^" + std::to_string(pi1_adjoint(o).exponent) + "\n";
    human += "  H^2(orbit) = " + std::to_string(h2_orbit(o)) + "\n";
    human += "  H^2(universal cover) = " + std::to_string(h2_universal_cover(o)) +
             " (derived)\n";
    human += "  special at: " + (special ? "k=" + std::to_string(*special) : std::string("none")) + "\n";
    human += "  S(alpha): ";
    if (sing.empty()) human += "{}";
    for (size_t i = 0; i < sing.size(); ++i)
        human += (i ? ", " : "") + std::string("m=") + std::to_string(sing[i].m) + " (d=" +
                 std::to_string(sing[i].d) + ")";
    human += "\n";
    human += "  rigid Levi: " + rig.levi.to_string() + ", source [" + rig.source.to_string() +
             "]\n";
    human += "  Namikawa dim P = " + std::to_string(nam.dim_total) + " (smooth " +
             std::to_string(nam.dim_smooth) + ")\n";
    if (req.diagram) human += diagram_text(p);
    return emit("orbit", result, req, kOk, out, err, human);
}

int cmd_degenerations(const Algebra& g, const Partition& p, Request& req, std::ostream& out,
                      std::ostream& err) {
    Orbit o = make_orbit(g, p);
    CoverReport rep = cover_report(o, req.brute_bound);

    json rows = json::array();
    for (const CoverLeaf& leaf : rep.leaves) {
        rows.push_back({{"beta", partition_json(leaf.child.partition)},
                        {"q", leaf.md.q},
                        {"m", leaf.md.m},
                        {"case", std::string(1, deg_case_letter(leaf.md.kind))},
                        {"k", leaf.md.k},
                        {"d_m", leaf.md.d_m},
                        {"closure_singularity", leaf.closure.to_string()},
                        {"non_normal_union", leaf.closure.non_normal_union()},
                        {"H_m", leaf.hm},
                        {"cover_singularity", leaf.cover.to_string()},
                        {"components", leaf.cover.components},
                        {"dim_leaf_orbit", leaf.dim_leaf_orbit},
                        {"dim_leaf_cover", leaf.dim_leaf},
                        {"etale", leaf.etale},
                        {"case_e_normalization", leaf.case_e_normalization}});
    }
    json result = {{"algebra", g.name()},
                   {"partition", partition_json(p)},
                   {"children", rows},
                   {"cover_namikawa", namikawa_json(rep.namikawa)}};

    std::string human = "degenerations of " + g.name() + " [" + p.to_string() + "]\n";
    for (const CoverLeaf& leaf : rep.leaves) human += singularity_row(leaf);
    human += "  cover Namikawa dim P = " + std::to_string(rep.namikawa.dim_total) +
             " (smooth " + std::to_string(rep.namikawa.dim_smooth) + ")\n";
    if (req.diagram)
        for (const CoverLeaf& leaf : rep.leaves)
            human += diagram_text(leaf.child.partition) + "\n";
    return emit("degenerations", result, req, kOk, out, err, human);
}

int cmd_induce(const Algebra& g, const Partition& p, const std::vector<int>& blocks,
               Request& req, std::ostream& out, std::ostream& err) {
    int weight = 0;
    for (int b : blocks) {
        if (b <= 0) throw std::invalid_argument("block sizes must be positive");
        weight += b;
    }
    int start = g.size - 2 * weight;
    if (start < 0)
        throw std::domain_error("blocks of total size " + std::to_string(weight) +
                                " do not fit into " + g.name());
    Algebra g0 = Algebra::make(g.series, start);
    if (auto why = explain_invalid(p, g0))
        throw std::domain_error("source partition invalid for " + g0.name() + ": " + *why);

    json steps = json::array();
    std::string human = "induce " + g.name() + " from [" + p.to_string() + "] in " + g0.name() +
                        "\n";
    Partition cur = p;
    Algebra level = g0;
    bool all_birational = true;
    for (int m : blocks) {
        Algebra next = Algebra::make(level.series, level.size + 2 * m);
        bool birational = is_birational_step(cur, m, next);
        Partition lifted = add_two_then_collapse(cur, m, next);
        bool collapsed = Partition(add_two_rows(cur, m)) != lifted ||
                         !is_valid(Partition(add_two_rows(cur, m)), next);
        steps.push_back({{"block", m},
                         {"from", partition_json(cur)},
                         {"to", partition_json(lifted)},
                         {"collapsed", collapsed},
                         {"birational", birational}});
        human += "  gl" + std::to_string(m) + ": [" + cur.to_string() + "] -> [" +
                 lifted.to_string() + "]" + (collapsed ? " (collapsed)" : "") +
                 (birational ? ", birational: true" : ", birational: false") + "\n";
        all_birational = all_birational && birational;
        cur = std::move(lifted);
        level = next;
    }
    human += "  induced: [" + cur.to_string() + "], birational: " +
             (all_birational ? "true" : "false") + "\n";
    if (req.diagram) human += diagram_text(cur);

    json result = {{"algebra", g.name()},
                   {"source", partition_json(p)},
                   {"source_algebra", g0.name()},
                   {"blocks", blocks},
                   {"induced", partition_json(cur)},
                   {"steps", steps},
                   {"birational", all_birational}};
    return emit("induce", result, req, kOk, out, err, human);
}

int cmd_enumerate(const Algebra& g, Request& req, std::ostream& out, std::ostream& err) {
    std::vector<Orbit> orbits = enumerate_orbits(g);
    json rows = json::array();
    std::string human = g.name() + ": " + std::to_string(orbits.size()) + " orbits\n";
    for (const Orbit& o : orbits) {
        rows.push_back({{"partition", partition_json(o.partition)},
                        {"very_even", o.very_even},
                        {"dimension", dim_orbit(o)},
                        {"pi1_exponent", pi1_adjoint(o).exponent}});
        human += "  [" + o.partition.to_string() + "]  dim=" + std::to_string(dim_orbit(o)) +
                 "  pi1=(Z/2)^" + std::to_string(pi1_adjoint(o).exponent) +
                 (o.very_even ? "  very_even" : "") + "\n";
    }
    json result = {{"algebra", g.name()}, {"count", orbits.size()}, {"orbits", rows}};
    return emit("enumerate", result, req, kOk, out, err, human);
}

int cmd_check(const std::string& series_text, int bound, bool parallel, Request& req,
              std::ostream& out, std::ostream& err) {
    Series series;
    if (series_text == "so")
        series = Series::SO;
    else if (series_text == "sp")
        series = Series::SP;
    else
        throw std::invalid_argument("series must be so or sp, got '" + series_text + "'");

    oracle::ConsistencyReport rep = oracle::run_suite(series, bound, parallel);
    json failures = json::array();
    for (const auto& f : rep.failures)
        failures.push_back({{"check", f.check}, {"witness", f.witness}});
    json result = {{"series", series_text},
                   {"bound", bound},
                   {"checks_run", rep.checks_run},
                   {"failures", failures},
                   {"passed", rep.passed()}};

    std::string human = "consistency suite " + series_text + " N<=" + std::to_string(bound) +
                        ": " + std::to_string(rep.checks_run) + " checks, " +
                        std::to_string(rep.failures.size()) + " failures\n";
    for (const auto& f : rep.failures) human += "  FAIL " + f.check + " @ " + f.witness + "\n";
    return emit("check", result, req, rep.passed() ? kOk : kConsistencyFailure, out, err, human);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Codimension-2 degenerations and cover singularities of nilpotent orbits "
                 "in classical Lie algebras of type B/C/D"};
    app.require_subcommand(1);

    Request req;
    app.add_flag("--json", req.json_output, "structured output envelope on stdout");
    app.add_flag("--diagram", req.diagram, "render Young diagrams as rows of #");

    std::string algebra_text, partition_text, series_text;
    std::string blocks_text;
    int bound = 12;
    bool parallel = false;

    auto* orbit_cmd = app.add_subcommand("orbit", "invariants of one nilpotent orbit");
    orbit_cmd->add_option("algebra", algebra_text, "so<N> or sp<N>")->required();
    orbit_cmd->add_option("partition", partition_text, "comma-separated parts")->required();

    auto* degen_cmd =
        app.add_subcommand("degenerations", "codim-2 children with closure/cover singularities");
    degen_cmd->add_option("algebra", algebra_text)->required();
    degen_cmd->add_option("partition", partition_text)->required();
    degen_cmd->add_option("--bound", req.brute_bound, "brute-force enumeration bound");

    auto* induce_cmd = app.add_subcommand("induce", "Lusztig-Spaltenstein induction");
    induce_cmd->add_option("algebra", algebra_text, "target algebra")->required();
    induce_cmd->add_option("partition", partition_text, "source partition ('' or 0 for empty)");
    induce_cmd->add_option("--blocks", blocks_text, "comma list of gl block sizes")->required();

    auto* enum_cmd = app.add_subcommand("enumerate", "all nilpotent orbits of an algebra");
    enum_cmd->add_option("algebra", algebra_text)->required();

    auto* check_cmd = app.add_subcommand("check", "run the brute-force consistency suite");
    check_cmd->add_option("series", series_text, "so or sp")->required();
    check_cmd->add_option("bound", bound, "maximal algebra size");
    check_cmd->add_flag("--parallel", parallel, "fan out per orbit with OpenMP");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& ex) {
        if (ex.get_exit_code() == 0) {  // --help
            out << app.help();
            return kOk;
        }
        err << "error: " << ex.what() << "\n";
        return kParseError;
    }

    try {
        if (orbit_cmd->parsed() || degen_cmd->parsed()) {
            Algebra g = parse_algebra_arg(algebra_text, req);
            Partition p = parse_partition(partition_text);
            return orbit_cmd->parsed() ? cmd_orbit(g, p, req, out, err)
                                       : cmd_degenerations(g, p, req, out, err);
        }
        if (induce_cmd->parsed()) {
            Algebra g = parse_algebra_arg(algebra_text, req);
            Partition p = parse_partition(partition_text);
            std::vector<int> blocks;
            std::stringstream ss(blocks_text);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                size_t pos = 0;
                int b = std::stoi(tok, &pos);
                if (pos != tok.size()) throw std::invalid_argument("bad block '" + tok + "'");
                blocks.push_back(b);
            }
            return cmd_induce(g, p, blocks, req, out, err);
        }
        if (enum_cmd->parsed()) {
            Algebra g = parse_algebra_arg(algebra_text, req);
            return cmd_enumerate(g, req, out, err);
        }
        if (check_cmd->parsed()) return cmd_check(series_text, bound, parallel, req, out, err);
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << "\n";
        return kParseError;
    } catch (const std::domain_error& ex) {
        err << "error: " << ex.what() << "\n";
        return kDomainError;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return kDomainError;
    }
    return kParseError;
}

}  // namespace nilorb
