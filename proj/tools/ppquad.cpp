#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "ppquad/coloring_construct.hpp"
#include "ppquad/decider.hpp"
#include "ppquad/harness.hpp"

using namespace ppquad;

namespace {

constexpr int EXIT_HAS_SBQ = 0;
constexpr int EXIT_NO_SBQ = 10;
constexpr int EXIT_BAD_INPUT = 2;

EmbeddedGraph load(const std::string& path) {
    EmbeddedGraph g = read_pem_file(path);
    auto rep = validate(g);
    if (!rep.valid()) throw DomainError(path + ": " + rep.joined());
    return g;
}

EmbeddedGraph named_guest(const std::string& name) {
    if (name == "k4") return k4();
    if (name == "octahedron") return octahedron();
    if (name == "empty") return EmbeddedGraph{};
    return load(name);
}

ContractionKind parse_kind(const std::string& s) {
    if (s == "c4") return ContractionKind::C4;
    if (s == "c6") return ContractionKind::C6;
    if (s == "c55") return ContractionKind::C55;
    if (s == "v2rem") return ContractionKind::V2Rem;
    if (s == "v2add") return ContractionKind::V2Add;
    throw DomainError("unknown contraction kind '" + s + "'");
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spanning bipartite quadrangulations of projective-plane triangulations"};
    app.require_subcommand(1);

    std::string file, out, report_path, guest = "octahedron", kind_str, matching_file, faces_str, at_str;
    int pivot = -1, second = -1, max_n = 8, guest_face = 0;
    bool use_builtin = false;

    auto* cmd_validate = app.add_subcommand("validate", "check a .pem file");
    cmd_validate->add_option("file", file)->required();

    auto* cmd_decide = app.add_subcommand("decide", "decide spanning bipartite quadrangulation existence");
    cmd_decide->add_option("file", file)->required();
    std::string cert_out;
    cmd_decide->add_option("--certificate", cert_out, "write the certificate as JSON");

    auto* cmd_witness = app.add_subcommand("witness", "write the witness quadrangulation");
    cmd_witness->add_option("file", file)->required();
    cmd_witness->add_option("--out", out)->required();

    auto* cmd_coloring = app.add_subcommand("coloring", "weak or near-weak 2-coloring");
    cmd_coloring->add_option("file", file)->required();

    auto* cmd_bound = app.add_subcommand("bound", "guaranteed bipartite subgraph");
    cmd_bound->add_option("file", file)->required();

    auto* cmd_reduce = app.add_subcommand("reduce", "apply a contraction");
    cmd_reduce->add_option("file", file)->required();
    cmd_reduce->add_option("--kind", kind_str)->required();
    cmd_reduce->add_option("--pivot", pivot)->required();
    cmd_reduce->add_option("--second", second, "second pivot for c55");
    cmd_reduce->add_option("--at", at_str, "identification targets a,b[,c[,d]]");
    cmd_reduce->add_option("--out", out);

    auto* cmd_lift = app.add_subcommand("lift", "lift a dual perfect matching through a contraction");
    cmd_lift->add_option("file", file)->required();
    cmd_lift->add_option("matching", matching_file, "file with contracted edge ids")->required();
    cmd_lift->add_option("--kind", kind_str)->required();
    cmd_lift->add_option("--pivot", pivot)->required();
    cmd_lift->add_option("--second", second);
    cmd_lift->add_option("--at", at_str);

    auto* cmd_enum = app.add_subcommand("enumerate", "all small triangulations of the projective plane");
    cmd_enum->add_option("--max-n", max_n);
    cmd_enum->add_option("--out", out)->required();

    auto* cmd_paste = app.add_subcommand("paste", "paste guests into K6 faces");
    cmd_paste->add_option("--faces", faces_str, "face indices of K6, comma separated")->required();
    cmd_paste->add_option("--guest", guest, "k4, octahedron, empty, or a .pem path");
    cmd_paste->add_option("--guest-face", guest_face);
    cmd_paste->add_option("--out", out);

    auto* cmd_oracle = app.add_subcommand("oracle", "brute-force oracles for one instance");
    cmd_oracle->add_option("file", file)->required();

    auto* cmd_cross = app.add_subcommand("crossvalidate", "cross-validate a corpus directory");
    cmd_cross->add_option("dir", file, "directory of .pem files");
    cmd_cross->add_option("--report", report_path);
    cmd_cross->add_flag("--builtin", use_builtin, "include the built-in corpus");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_validate) {
            EmbeddedGraph g = read_pem_file(file);
            auto rep = validate(g);
            if (rep.valid()) {
                FaceList fl = trace_faces(g);
                std::cout << "valid " << to_string(g.surface) << " n=" << g.vertex_count
                          << " m=" << g.edge_count() << " f=" << fl.count() << "\n";
                return 0;
            }
            std::cout << "invalid: " << rep.joined() << "\n";
            return EXIT_BAD_INPUT;
        }
        if (*cmd_decide) {
            EmbeddedGraph g = load(file);
            Certificate cert = decide_sbq(g);
            if (!cert_out.empty()) {
                std::ofstream f(cert_out);
                f << certificate_to_json(cert) << "\n";
            }
            if (cert.verdict == Verdict::HasSbq) {
                std::cout << "HAS_SBQ\n";
                return EXIT_HAS_SBQ;
            }
            std::cout << "NO_SBQ\n";
            return EXIT_NO_SBQ;
        }
        if (*cmd_witness) {
            EmbeddedGraph g = load(file);
            Certificate cert = decide_sbq(g);
            if (cert.verdict != Verdict::HasSbq) {
                std::cout << "NO_SBQ\n";
                return EXIT_NO_SBQ;
            }
            write_pem_file(*cert.quadrangulation, out);
            std::cout << "coloring " << cert.coloring->to_string() << "\n";
            std::cout << "removed " << cert.removed->to_string() << "\n";
            return EXIT_HAS_SBQ;
        }
        if (*cmd_coloring) {
            EmbeddedGraph g = load(file);
            Coloring c = near_weak_or_weak(g);
            std::cout << c.to_string() << "\n";
            std::cout << "monochromatic_faces " << monochromatic_faces(g, c).size() << "\n";
            return 0;
        }
        if (*cmd_bound) {
            EmbeddedGraph g = load(file);
            BoundResult b = bipartite_subgraph_bound(g);
            std::cout << "size " << b.size << "\n";
            std::cout << "coloring " << b.coloring.to_string() << "\n";
            return 0;
        }
        if (*cmd_reduce) {
            EmbeddedGraph g = load(file);
            ContractionSpec spec{parse_kind(kind_str), pivot, second, parse_ints(at_str)};
            ContractionResult res = apply(g, spec);
            std::string text = write_pem(res.graph);
            if (!out.empty()) {
                std::ofstream f(out);
                f << text;
            } else {
                std::cout << text;
            }
            return 0;
        }
        if (*cmd_lift) {
            EmbeddedGraph g = load(file);
            ContractionSpec spec{parse_kind(kind_str), pivot, second, parse_ints(at_str)};
            ContractionResult res = apply(g, spec);
            std::ifstream mf(matching_file);
            if (!mf) throw DomainError("cannot open " + matching_file);
            std::vector<int> ids;
            int x;
            while (mf >> x) ids.push_back(x);
            EdgeSubset lifted = lift_matching(g, res, EdgeSubset::of(ids));
            std::cout << lifted.to_string() << "\n";
            return 0;
        }
        if (*cmd_enum) {
            std::filesystem::create_directories(out);
            int count = 0;
            for (const auto& g : enumerate_pp_triangulations(max_n)) {
                char name[64];
                std::snprintf(name, sizeof(name), "pp_n%d_%04d.pem", g.vertex_count, count);
                write_pem_file(g, out + "/" + name);
                count++;
            }
            std::cout << "wrote " << count << " instances\n";
            return 0;
        }
        if (*cmd_paste) {
            EmbeddedGraph gst = named_guest(guest);
            std::vector<std::pair<int, EmbeddedGraph>> assignments;
            for (int f : parse_ints(faces_str)) assignments.push_back({f, gst});
            EmbeddedGraph g = paste_family(assignments);
            std::string text = write_pem(g);
            if (!out.empty()) {
                std::ofstream f(out);
                f << text;
            } else {
                std::cout << text;
            }
            return 0;
        }
        if (*cmd_oracle) {
            EmbeddedGraph g = load(file);
            std::cout << "sbq " << (sbq_oracle(g) ? "yes" : "no") << "\n";
            std::cout << "weak " << (weak_oracle(g) ? "yes" : "no") << "\n";
            std::cout << "maxcut " << maxcut_oracle(g) << "\n";
            return 0;
        }
        if (*cmd_cross) {
            Corpus corpus;
            if (use_builtin) corpus = builtin_corpus();
            if (!file.empty()) {
                std::vector<std::string> paths;
                for (const auto& entry : std::filesystem::directory_iterator(file))
                    if (entry.path().extension() == ".pem") paths.push_back(entry.path().string());
                std::sort(paths.begin(), paths.end());
                for (const auto& p : paths)
                    corpus.add(std::filesystem::path(p).stem().string(), load(p));
            }
            Report rep = cross_validate(corpus);
            if (!report_path.empty()) {
                std::ofstream f(report_path);
                f << rep.text;
            } else {
                std::cout << rep.text;
            }
            if (!rep.ok) {
                for (const auto& fail : rep.failures) std::cerr << "disagreement on " << fail << "\n";
                return 1;
            }
            return 0;
        }
    } catch (const TheoremViolation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_BAD_INPUT;
    }
    return 0;
}
