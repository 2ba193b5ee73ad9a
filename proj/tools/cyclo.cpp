#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyclo/equiv.hpp"
#include "cyclo/families.hpp"
#include "cyclo/grow.hpp"
#include "cyclo/io.hpp"
#include "cyclo/lgraph.hpp"
#include "cyclo/ring.hpp"
#include "cyclo/spectra.hpp"

namespace {

using cyclo::LGraph;
using cyclo::Ring;
using ordered_json = nlohmann::ordered_json;

const char* yn(bool v) { return v ? "yes" : "no"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

std::string manifest_path_for(const std::string& out) {
    const std::string suffix = ".json";
    if (out.size() > suffix.size() && out.compare(out.size() - suffix.size(), suffix.size(), suffix) == 0) {
        return out.substr(0, out.size() - suffix.size()) + ".manifest.json";
    }
    return out + ".manifest.json";
}

// Catalogue names carry ', * and ^; keep file names plain.
std::string file_stem(const std::string& name) {
    std::string out;
    for (char c : name) {
        switch (c) {
            case '\'': out += 'p'; break;
            case '*': out += 's'; break;
            case '^': out += '_'; break;
            default: out += c; break;
        }
    }
    return out;
}

std::string format_double(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << v;
    return os.str();
}

int run_lnsets(int d, bool as_json) {
    const Ring ring(d);
    const cyclo::LabelSet labels(ring);
    if (as_json) {
        ordered_json j;
        j["d"] = d;
        j["legend"] = ring.basis_legend();
        ordered_json by_norm;
        for (int n = 1; n <= 4; ++n) {
            ordered_json arr = ordered_json::array();
            for (const auto& x : labels.of_norm(n)) {
                arr.push_back(ordered_json::array(
                    {static_cast<long>(x.a().get_si()), static_cast<long>(x.b().get_si())}));
            }
            by_norm[std::to_string(n)] = std::move(arr);
        }
        j["labels"] = std::move(by_norm);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "d = " << d << " (" << ring.basis_legend() << ")\n";
    for (int n = 1; n <= 4; ++n) {
        std::cout << "L_" << n << ":";
        bool first = true;
        for (const auto& x : labels.of_norm(n)) {
            std::cout << (first ? " " : ", ") << x.to_string();
            first = false;
        }
        if (labels.of_norm(n).empty()) std::cout << " (empty)";
        std::cout << "\n";
    }
    return 0;
}

int run_check(const std::string& path, bool as_json) {
    const LGraph g = cyclo::graph_from_json(read_file(path));
    const bool connected = g.is_connected();
    const cyclo::IntPolynomial p = cyclo::char_poly(g);
    const bool cyclotomic = cyclo::is_cyclotomic(g);
    const double mahler = cyclo::mahler_measure(cyclo::reciprocal_poly(p));

    std::string key;
    if (g.n() <= 14) key = cyclo::key_hex(cyclo::canonical_key(g));
    bool have_maximal = connected && cyclotomic;
    bool maximal = have_maximal ? cyclo::is_maximal(g) : false;

    if (as_json) {
        ordered_json j;
        j["d"] = g.ring().d();
        j["n"] = g.n();
        j["connected"] = connected;
        ordered_json degs = ordered_json::array();
        for (int v = 0; v < g.n(); ++v) degs.push_back(g.weighted_degree(v));
        j["weighted_degrees"] = std::move(degs);
        j["char_poly"] = p.to_string();
        j["cyclotomic"] = cyclotomic;
        if (key.empty()) {
            j["key"] = nullptr;
        } else {
            j["key"] = key;
        }
        if (have_maximal) {
            j["maximal"] = maximal;
        } else {
            j["maximal"] = nullptr;
        }
        j["reciprocal_mahler"] = mahler;
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    std::cout << "d = " << g.ring().d() << "\n";
    std::cout << "n = " << g.n() << "\n";
    std::cout << "connected: " << yn(connected) << "\n";
    std::cout << "weighted degrees:";
    for (int v = 0; v < g.n(); ++v) std::cout << " " << g.weighted_degree(v);
    std::cout << "\n";
    std::cout << "characteristic polynomial: " << p.to_string() << "\n";
    std::cout << "cyclotomic: " << yn(cyclotomic) << "\n";
    if (!key.empty()) std::cout << "canonical key: " << key << "\n";
    if (have_maximal) std::cout << "maximal: " << yn(maximal) << "\n";
    std::cout << "mahler measure of reciprocal polynomial: " << format_double(mahler) << "\n";
    return 0;
}

struct GrowArgs {
    int d = 0;
    std::string seed;
    std::vector<int> norms{1, 2, 3, 4};
    std::vector<int> charges{-1, 0, 1};
    int max_rounds = 16;
    int max_vertices = 16;
    int jobs = 1;
    std::string json_out;
};

int run_grow(const GrowArgs& args) {
    const Ring ring(args.d);
    cyclo::GrowConfig cfg(ring);
    cfg.allowed_edge_norms = args.norms;
    cfg.allowed_charges = args.charges;
    cfg.max_rounds = args.max_rounds;
    cfg.max_vertices = args.max_vertices;
    cfg.jobs = args.jobs;

    std::vector<LGraph> seeds;
    const auto& names = cyclo::seed_set_names();
    if (std::find(names.begin(), names.end(), args.seed) != names.end()) {
        seeds = cyclo::seed_set(args.seed, ring);
    } else {
        LGraph g = cyclo::graph_from_json(read_file(args.seed));
        if (g.ring() != ring) {
            throw std::invalid_argument("seed file is over d = " + std::to_string(g.ring().d()) +
                                        ", not d = " + std::to_string(args.d));
        }
        seeds.push_back(std::move(g));
    }

    const auto start = std::chrono::steady_clock::now();
    const cyclo::GrowReport report = cyclo::grow_closure(seeds, cfg);
    const auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();

    std::cout << "seeds: " << seeds.size() << "\n";
    for (std::size_t r = 0; r < report.new_classes_per_round.size(); ++r) {
        std::cout << "round " << (r + 1) << ": " << report.new_classes_per_round[r]
                  << " new classes\n";
    }
    std::cout << "classes: " << report.representatives.size() << " ("
              << report.maximal_representatives.size() << " maximal)\n";
    std::cout << "terminated: " << yn(report.terminated) << "\n";
    std::cout << "digest: " << cyclo::classes_digest(report.representatives) << "\n";

    if (!args.json_out.empty()) {
        write_file(args.json_out, cyclo::grow_report_to_json(report, ring));
        std::ostringstream params;
        params << "norms=";
        for (std::size_t i = 0; i < args.norms.size(); ++i)
            params << (i ? "," : "") << args.norms[i];
        params << " charges=";
        for (std::size_t i = 0; i < args.charges.size(); ++i)
            params << (i ? "," : "") << args.charges[i];
        params << " max_rounds=" << args.max_rounds << " max_vertices=" << args.max_vertices
               << " jobs=" << args.jobs;
        cyclo::RunManifest m;
        m.command = "grow";
        m.d = args.d;
        m.parameters = params.str();
        m.seed = args.seed;
        m.outputs = {args.json_out};
        m.wall_ms = wall_ms;
        m.digest = cyclo::classes_digest(report.representatives);
        write_file(manifest_path_for(args.json_out), cyclo::run_manifest_to_json(m));
    }
    return report.terminated ? 0 : 2;
}

int run_verify(int d, int max_n, int jobs) {
    const Ring ring(d);
    const cyclo::ClassificationCheck check = cyclo::verify_classification(ring, max_n, jobs);

    std::cout << "enumeration complete: " << yn(check.enumeration_complete) << "\n";
    std::cout << "classes with n <= " << check.max_n << ": " << check.class_count << "\n";
    std::cout << "maximal classes: ";
    for (std::size_t i = 0; i < check.maximal_names.size(); ++i) {
        std::cout << (i ? ", " : "") << check.maximal_names[i];
    }
    std::cout << " (" << check.maximal_names.size() << ")\n";
    if (check.unmatched_maximal.empty()) {
        std::cout << "maximal classes outside the catalogue: none\n";
    } else {
        std::cout << "maximal classes outside the catalogue: " << check.unmatched_maximal.size()
                  << "\n";
        for (const LGraph& g : check.unmatched_maximal) {
            std::cout << "  n=" << g.n() << " key=" << cyclo::key_hex(cyclo::canonical_key(g))
                      << "\n";
        }
    }
    if (check.stuck_nonmaximal.empty()) {
        std::cout << "nonmaximal classes reach the catalogue: yes\n";
    } else {
        std::cout << "nonmaximal classes that cannot reach the catalogue: "
                  << check.stuck_nonmaximal.size() << "\n";
        for (const LGraph& g : check.stuck_nonmaximal) {
            std::cout << "  n=" << g.n() << " key=" << cyclo::key_hex(cyclo::canonical_key(g))
                      << "\n";
        }
    }
    if (!check.unresolved.empty()) {
        std::cout << "unresolved by search budget: " << check.unresolved.size() << "\n";
    }
    std::cout << "RESULT: " << (check.passed() ? "PASS" : "FAIL") << "\n";

    if (check.passed()) return 0;
    const bool definite_failure = !check.unmatched_maximal.empty() || !check.stuck_nonmaximal.empty();
    return definite_failure ? 1 : 2;
}

int run_export(int d, const std::string& out_dir, bool dot, bool json, int max_k) {
    const Ring ring(d);
    if (!dot && !json) {
        dot = true;
        json = true;
    }
    std::filesystem::create_directories(out_dir);

    const auto start = std::chrono::steady_clock::now();
    const auto entries = cyclo::catalogue(ring, max_k);
    std::vector<std::string> outputs;
    std::vector<LGraph> graphs;
    for (const auto& entry : entries) {
        graphs.push_back(entry.graph);
        const std::string stem = file_stem(entry.name);
        if (json) {
            const std::string name = stem + ".json";
            write_file(out_dir + "/" + name, cyclo::graph_to_json(entry.graph));
            outputs.push_back(name);
        }
        if (dot) {
            const std::string name = stem + ".dot";
            write_file(out_dir + "/" + name, cyclo::graph_to_dot(entry.graph, stem));
            outputs.push_back(name);
        }
    }
    std::sort(outputs.begin(), outputs.end());
    const auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();

    cyclo::RunManifest m;
    m.command = "export";
    m.d = d;
    std::ostringstream params;
    params << "max_k=" << max_k << " formats=" << (json ? "json" : "") << (json && dot ? "," : "")
           << (dot ? "dot" : "");
    m.parameters = params.str();
    m.seed = "catalogue";
    m.outputs = outputs;
    m.wall_ms = wall_ms;
    m.digest = cyclo::classes_digest(graphs);
    write_file(out_dir + "/manifest.json", cyclo::run_manifest_to_json(m));

    std::cout << "wrote " << outputs.size() << " files to " << out_dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for cyclotomic hermitian matrices over imaginary quadratic rings"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "cyclo 1.0.0");
    app.footer("exit codes: 0 ok, 1 verification failure, 2 search budget exceeded, 3 bad input");

    int rc = 0;

    auto* lnsets = app.add_subcommand("lnsets", "print the label sets L_1..L_4 of a ring");
    int lnsets_d = 0;
    bool lnsets_json = false;
    lnsets->add_option("--d", lnsets_d, "discriminant parameter (-2, -7, -11, -15)")->required();
    lnsets->add_flag("--json", lnsets_json, "emit JSON");
    lnsets->callback([&] { rc = run_lnsets(lnsets_d, lnsets_json); });

    auto* check = app.add_subcommand("check", "analyze one graph from a JSON file");
    std::string check_file;
    bool check_json = false;
    check->add_option("file", check_file, "graph JSON document")->required()->check(CLI::ExistingFile);
    check->add_flag("--json", check_json, "emit JSON");
    check->callback([&] { rc = run_check(check_file, check_json); });

    auto* grow = app.add_subcommand("grow", "close a seed set under cyclotomic one-vertex extensions");
    GrowArgs grow_args;
    grow->add_option("--d", grow_args.d, "discriminant parameter (-2, -7, -11, -15)")->required();
    std::string seed_help = "seed set name (";
    {
        const auto& names = cyclo::seed_set_names();
        for (std::size_t i = 0; i < names.size(); ++i) seed_help += (i ? ", " : "") + names[i];
        seed_help += ") or a graph JSON file";
    }
    grow->add_option("--seed", grow_args.seed, seed_help)->required();
    grow->add_option("--norms", grow_args.norms, "allowed edge norms (default 1,2,3,4)")
        ->delimiter(',');
    grow->add_option("--charges", grow_args.charges, "allowed new-vertex charges (default -1,0,1)")
        ->delimiter(',');
    grow->add_option("--max-rounds", grow_args.max_rounds, "growth round budget");
    grow->add_option("--max-vertices", grow_args.max_vertices, "vertex budget");
    grow->add_option("--jobs", grow_args.jobs, "worker threads");
    grow->add_option("--json-out", grow_args.json_out, "write the full report here");
    grow->callback([&] { rc = run_grow(grow_args); });

    auto* verify = app.add_subcommand("verify-theorem",
                                      "check the classification of maximal classes up to a size bound");
    int verify_d = 0;
    int verify_max_n = 6;
    int verify_jobs = 1;
    verify->add_option("--d", verify_d, "discriminant parameter (-2, -7, -11, -15)")->required();
    verify->add_option("--max-n", verify_max_n, "largest vertex count to enumerate")->required();
    verify->add_option("--jobs", verify_jobs, "worker threads");
    verify->callback([&] { rc = run_verify(verify_d, verify_max_n, verify_jobs); });

    auto* exp = app.add_subcommand("export", "write the catalogue of maximal graphs to files");
    int export_d = 0;
    std::string export_dir;
    bool export_dot = false;
    bool export_json = false;
    int export_max_k = 7;
    exp->add_option("--d", export_d, "discriminant parameter (-2, -7, -11, -15)")->required();
    exp->add_option("--out-dir", export_dir, "output directory")->required();
    exp->add_flag("--dot", export_dot, "write graphviz files");
    exp->add_flag("--json", export_json, "write JSON files");
    exp->add_option("--max-k", export_max_k, "largest k for the parameterized families");
    exp->callback([&] { rc = run_export(export_d, export_dir, export_dot, export_json, export_max_k); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
