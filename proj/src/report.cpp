#include "mhom/report.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "mhom/errors.hpp"
#include "mhom/homology.hpp"
#include "mhom/morse.hpp"
#include "mhom/presentation.hpp"

namespace mhom {

using json = nlohmann::ordered_json;

namespace {

std::string digest_hex(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a:") + buf;
}

struct LoadedInput {
    std::string path;
    std::string text;
    PresentationFile pres;
    RewritingSystem rs;
};

LoadedInput load_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("IOError", "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    LoadedInput li;
    li.path = path;
    li.text = buf.str();
    li.pres = parse_presentation(li.text);
    li.rs = to_rewriting_system(li.pres);
    return li;
}

json input_json(const LoadedInput& li) {
    json j;
    j["path"] = li.path;
    j["digest"] = digest_hex(li.text);
    j["alphabet"] = li.rs.alphabet.symbols;
    json rules = json::array();
    for (const auto& r : li.rs.rules) rules.push_back(render_rule(r, li.rs.alphabet));
    j["rules"] = rules;
    return j;
}

json rules_json(const RewritingSystem& rs) {
    json out = json::array();
    for (const auto& r : rs.rules) out.push_back(render_rule(r, rs.alphabet));
    return out;
}

json critical_pair_json(const CriticalPair& cp, const RewritingSystem& rs) {
    json j;
    j["source"] = render_word(cp.source, rs.alphabet);
    j["left_result"] = render_word(cp.left_result, rs.alphabet);
    j["right_result"] = render_word(cp.right_result, rs.alphabet);
    j["left_normal_form"] = render_word(normal_form(cp.left_result, rs), rs.alphabet);
    j["right_normal_form"] = render_word(normal_form(cp.right_result, rs), rs.alphabet);
    j["kind"] = cp.kind == CriticalPair::Overlap::SuffixPrefix ? "suffix_prefix" : "containment";
    return j;
}

Coeff parse_side(const std::string& side) {
    if (side == "left") return Coeff::Left;
    if (side == "right") return Coeff::Right;
    if (side == "bi") return Coeff::Bi;
    if (side == "trivial") return Coeff::TrivialZ;
    throw Error("BadArgument", "unknown side '" + side + "'");
}

RewritingSystem require_complete(const RewritingSystem& rs, json& results, int& exit_code) {
    RewritingSystem checked = check_complete(rs);
    if (!checked.certified()) {
        results["completeness"] = "FailedConfluence";
        results["witness"] = critical_pair_json(*checked.confluence_witness, checked);
        exit_code = 1;
    }
    return checked;
}

std::vector<Word> generators_or_default(const LoadedInput& li, const std::string& gens_flag,
                                        const RewritingSystem& rs) {
    std::vector<Word> gens;
    if (!gens_flag.empty()) {
        std::stringstream ss(gens_flag);
        std::string entry;
        while (std::getline(ss, entry, ',')) gens.push_back(parse_word(entry, rs.alphabet));
        return gens;
    }
    if (li.pres.generator_subset) return *li.pres.generator_subset;
    for (std::uint32_t a = 0; a < rs.alphabet.size(); ++a)
        gens.push_back(Word{{a}});
    return gens;
}

json homology_table(const ChainComplexZ& z, std::size_t up_to) {
    json groups = json::array();
    for (std::size_t n = 0; n <= up_to; ++n) {
        HomologyGroup h = homology_of_complex(z, n);
        json g;
        g["dim"] = n;
        g["betti"] = h.betti;
        json tor = json::array();
        for (const auto& d : h.torsion) tor.push_back(d.convert_to<std::string>());
        g["torsion"] = tor;
        g["group"] = render_homology_group(h);
        groups.push_back(g);
    }
    return groups;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("IOError", "cannot write '" + path + "'");
    out << text;
}

}  // namespace

std::string dot_cayley(const CayleyDigraph& g) {
    std::string out = "digraph cayley {\n  rankdir=LR;\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        out += "  v" + std::to_string(v) + " [label=\"" + g.vertex_labels[v] + "\"];\n";
    for (const auto& arc : g.arcs)
        out += "  v" + std::to_string(arc.src) + " -> v" + std::to_string(arc.dst) +
               " [label=\"" + arc.label + "\"];\n";
    out += "}\n";
    return out;
}

std::string dot_matching(const MatchingDigraph& g, const Alphabet& alphabet) {
    std::string out = "digraph matching {\n  rankdir=BT;\n";
    out += "  subgraph cluster_lower {\n    label=\"dimension " + std::to_string(g.dim) + "\";\n";
    for (std::size_t i = 0; i < g.lower.size(); ++i)
        out += "    l" + std::to_string(i) + " [label=\"" +
               render_equivariant_cell(g.lower[i], alphabet) + "\"];\n";
    out += "  }\n  subgraph cluster_upper {\n    label=\"dimension " +
           std::to_string(g.dim + 1) + "\";\n";
    for (std::size_t i = 0; i < g.upper.size(); ++i)
        out += "    u" + std::to_string(i) + " [label=\"" +
               render_equivariant_cell(g.upper[i], alphabet) + "\"];\n";
    out += "  }\n";
    for (const auto& arc : g.arcs) {
        if (arc.up) {
            out += "  l" + std::to_string(arc.lower) + " -> u" + std::to_string(arc.upper) +
                   " [style=bold, color=blue];\n";
        } else {
            out += "  u" + std::to_string(arc.upper) + " -> l" + std::to_string(arc.lower) +
                   " [style=dashed, label=\"d" + std::to_string(arc.face_index) + "\"];\n";
        }
    }
    out += "}\n";
    return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"monoid homology from complete rewriting systems"};
    app.require_subcommand(1);

    std::string file;
    std::string output_path;
    std::string side = "left";
    std::string gens_flag;
    std::string dot_path;
    std::size_t max_dim = 3;
    std::size_t length_bound = 6;
    std::size_t bound = 4;
    int fuel = kDefaultCompletionFuel;
    long long flow_fuel = kDefaultFlowFuel;
    bool two_sided = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "presentation file")->required();
        cmd->add_option("-o,--output", output_path, "write the JSON report here");
    };

    CLI::App* c_check = app.add_subcommand("check", "certify completeness");
    add_common(c_check);

    CLI::App* c_complete = app.add_subcommand("complete", "Knuth-Bendix completion");
    add_common(c_complete);
    c_complete->add_option("--fuel", fuel, "rule-addition budget");

    CLI::App* c_resolution = app.add_subcommand("resolution", "free resolution from the collapsed complex");
    add_common(c_resolution);
    c_resolution->add_option("--side", side, "left | right | bi");
    c_resolution->add_option("--max-dim", max_dim, "top dimension");
    c_resolution->add_option("--flow-fuel", flow_fuel, "cell-visit budget for the flow");

    CLI::App* c_homology = app.add_subcommand("homology", "integral homology of the classifying space");
    add_common(c_homology);
    c_homology->add_option("--max-dim", max_dim, "top reported degree");

    CLI::App* c_verify = app.add_subcommand("verify", "collapsing scheme checks on a truncation");
    add_common(c_verify);
    c_verify->add_option("--max-dim", max_dim, "top dimension");
    c_verify->add_option("--length-bound", length_bound, "total length bound");
    c_verify->add_option("--side", side, "left | right | bi | trivial");
    c_verify->add_option("--dot", dot_path, "write the dimension-1 matching digraph here");

    CLI::App* c_cayley = app.add_subcommand("cayley", "bounded Cayley digraph");
    add_common(c_cayley);
    c_cayley->add_flag("--two-sided", two_sided, "two-sided graph");
    c_cayley->add_option("--bound", bound, "element length bound");
    c_cayley->add_option("--gens", gens_flag, "comma-separated generator words");
    c_cayley->add_option("--dot", dot_path, "write DOT here");

    CLI::App* c_oracle = app.add_subcommand("oracle", "brute-force bar-complex homology (finite monoids)");
    add_common(c_oracle);
    c_oracle->add_option("--max-dim", max_dim, "top chain dimension");

    CLI::App* c_f1 = app.add_subcommand("f1", "connectivity certificate for the right Cayley graph");
    add_common(c_f1);
    c_f1->add_option("--gens", gens_flag, "comma-separated generator words");
    c_f1->add_option("--bound", bound, "element length bound");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    const auto started = std::chrono::steady_clock::now();
    json report;
    report["schema"] = 1;
    CLI::App* sub = app.get_subcommands().front();
    report["command"] = sub->get_name();

    int exit_code = 0;
    json results;
    try {
        LoadedInput li = load_input(file);
        report["input"] = input_json(li);
        json params;

        if (sub == c_check) {
            RewritingSystem checked = check_complete(li.rs);
            if (checked.certified()) {
                results["completeness"] = "CertifiedComplete";
                results["critical_pairs"] = critical_pairs(checked).size();
            } else {
                results["completeness"] = "FailedConfluence";
                results["witness"] = critical_pair_json(*checked.confluence_witness, checked);
                exit_code = 1;
            }
        } else if (sub == c_complete) {
            params["fuel"] = fuel;
            RewritingSystem completed = knuth_bendix(li.rs, fuel);
            results["completeness"] = "CertifiedComplete";
            results["rules"] = rules_json(completed);
            PresentationFile pres_out;
            pres_out.alphabet = completed.alphabet;
            pres_out.declared_order = li.pres.declared_order;
            for (const auto& r : completed.rules) pres_out.equations.emplace_back(r.lhs, r.rhs);
            results["presentation"] = serialize_presentation(pres_out);
        } else if (sub == c_resolution) {
            params["side"] = side;
            params["max_dim"] = max_dim;
            RewritingSystem rs = require_complete(li.rs, results, exit_code);
            if (exit_code == 0) {
                Resolution r = build_resolution(rs, max_dim, parse_side(side), flow_fuel);
                results["ranks"] = r.ranks();
                results["d_squared_zero"] = true;
                json bounds = json::array();
                for (std::size_t n = 1; n <= r.max_dim(); ++n) {
                    json jn;
                    jn["dim"] = n;
                    json basis = json::array();
                    for (const auto& c : r.basis[n]) basis.push_back(render_cell(c, rs.alphabet));
                    jn["basis"] = basis;
                    json matrix = json::array();
                    for (std::size_t i = 0; i < r.boundary[n].size(); ++i) {
                        json row = json::array();
                        for (std::size_t k = 0; k < r.boundary[n][i].size(); ++k)
                            row.push_back(render_ring_element(r.boundary[n][i][k],
                                                              parse_side(side), rs.alphabet));
                        matrix.push_back(row);
                    }
                    jn["matrix"] = matrix;
                    bounds.push_back(jn);
                }
                results["boundaries"] = bounds;
            }
        } else if (sub == c_homology) {
            params["max_dim"] = max_dim;
            RewritingSystem rs = require_complete(li.rs, results, exit_code);
            if (exit_code == 0) {
                // One extra dimension so the top reported degree sees its
                // incoming boundary.
                Resolution r = build_resolution(rs, max_dim + 1, Coeff::Left, flow_fuel);
                ChainComplexZ z = trivialize(r);
                results["ranks"] = std::vector<std::size_t>(z.ranks.begin(),
                                                            z.ranks.begin() + max_dim + 1);
                results["groups"] = homology_table(z, max_dim);
            }
        } else if (sub == c_verify) {
            params["max_dim"] = max_dim;
            params["length_bound"] = length_bound;
            params["side"] = side;
            RewritingSystem rs = require_complete(li.rs, results, exit_code);
            if (exit_code == 0) {
                Truncation t{max_dim, length_bound};
                SchemeReport rep = verify_scheme(rs, t, parse_side(side));
                results["all_passed"] = rep.all_passed;
                results["cells"] = {{"essential", rep.essential},
                                    {"redundant", rep.redundant},
                                    {"collapsible", rep.collapsible}};
                json checks = json::array();
                for (const auto& c : rep.checks) {
                    json jc;
                    jc["name"] = c.name;
                    jc["passed"] = c.passed;
                    if (!c.passed) jc["counterexample"] = c.detail;
                    checks.push_back(jc);
                }
                results["checks"] = checks;
                if (!rep.all_passed) exit_code = 1;
                if (!dot_path.empty()) {
                    MatchingDigraph g = build_matching_digraph(rs, 1, t, parse_side(side));
                    write_text_file(dot_path, dot_matching(g, rs.alphabet));
                    results["dot"] = dot_path;
                }
            }
        } else if (sub == c_cayley) {
            params["two_sided"] = two_sided;
            params["bound"] = bound;
            RewritingSystem rs = require_complete(li.rs, results, exit_code);
            if (exit_code == 0) {
                std::vector<Word> gens = generators_or_default(li, gens_flag, rs);
                json jgens = json::array();
                for (const auto& g : gens) jgens.push_back(render_word(g, rs.alphabet));
                params["gens"] = jgens;
                CayleyDigraph g = two_sided ? two_sided_cayley_graph(rs, gens, bound)
                                            : right_cayley_graph(rs, gens, bound);
                OrbitPartition orbits = weak_orbits(g);
                results["vertices"] = g.vertex_count();
                results["arcs"] = g.arcs.size();
                results["bounded"] = g.bounded;
                results["weak_orbits"] = orbits.classes.size();
                if (!dot_path.empty()) {
                    write_text_file(dot_path, dot_cayley(g));
                    results["dot"] = dot_path;
                }
            }
        } else if (sub == c_oracle) {
            params["max_dim"] = max_dim;
            RewritingSystem rs = require_complete(li.rs, results, exit_code);
            if (exit_code == 0) {
                ChainComplexZ z = bar_complex_oracle(rs, max_dim);
                results["ranks"] = z.ranks;
                // The top degree's incoming boundary lies beyond the
                // truncation, so report homology one short of it.
                results["groups"] = homology_table(z, max_dim > 0 ? max_dim - 1 : 0);
            }
        } else if (sub == c_f1) {
            params["bound"] = bound;
            RewritingSystem rs = require_complete(li.rs, results, exit_code);
            if (exit_code == 0) {
                std::vector<Word> gens = generators_or_default(li, gens_flag, rs);
                json jgens = json::array();
                for (const auto& g : gens) jgens.push_back(render_word(g, rs.alphabet));
                params["gens"] = jgens;
                F1Certificate cert = f1_certificate(rs, gens, bound);
                switch (cert.kind) {
                    case F1Certificate::Kind::Connected:
                        results["certificate"] = "Connected";
                        break;
                    case F1Certificate::Kind::Disconnected:
                        results["certificate"] = "Disconnected";
                        results["witness"] = cert.witness;
                        exit_code = 1;
                        break;
                    case F1Certificate::Kind::Inconclusive:
                        results["certificate"] = "Inconclusive";
                        break;
                }
                results["enumeration_complete"] = cert.enumeration_complete;
            }
        }

        report["parameters"] = params;
        report["status"] = exit_code == 0 ? "ok" : "refuted";
        report["results"] = results;
    } catch (const Error& e) {
        report["status"] = "error";
        report["error"] = {{"code", e.code()}, {"message", e.what()}};
        exit_code = 2;
    } catch (const std::exception& e) {
        report["status"] = "error";
        report["error"] = {{"code", "Internal"}, {"message", e.what()}};
        exit_code = 2;
    }

    const auto elapsed = std::chrono::steady_clock::now() - started;
    report["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();

    std::string rendered = report.dump(2) + "\n";
    if (!output_path.empty()) {
        write_text_file(output_path, rendered);
    } else {
        out << rendered;
    }
    return exit_code;
}

}  // namespace mhom
