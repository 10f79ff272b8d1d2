#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "rcx/colouring.hpp"
#include "rcx/graph.hpp"
#include "rcx/io.hpp"
#include "rcx/oracle.hpp"
#include "rcx/reductions.hpp"
#include "rcx/serialize.hpp"
#include "rcx/solver.hpp"

namespace {

using nlohmann::json;

struct Options {
    bool as_json = false;
    int threads = 1;
    std::optional<std::string> output;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& payload) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << payload;
}

// Payload to stdout or -o file. `key` wraps plain-text payloads when --json
// is in force; JSON payloads pass key = nullptr.
void emit(const Options& opt, const std::string& payload, const char* key) {
    std::string body = payload;
    if (key != nullptr && opt.as_json) {
        json wrapped;
        wrapped[key] = payload;
        body = wrapped.dump(2) + "\n";
    }
    if (opt.output)
        write_file(*opt.output, body);
    else
        std::cout << body;
}

rcx::Graph load_graph(const std::string& path) { return rcx::parse_graph(read_file(path)); }

rcx::EdgeColouring load_colouring_for(const rcx::Graph& g, const std::string& path) {
    rcx::EdgeColouring c = rcx::parse_colouring(read_file(path));
    if (!(c.host() == g))
        throw std::runtime_error(path + ": colouring does not match the graph file");
    return c;
}

rcx::ReductionInstance load_instance(const std::string& base) {
    return rcx::parse_instance(read_file(base + ".graph"), read_file(base + ".json"));
}

void write_instance(const std::string& base, const rcx::ReductionInstance& inst) {
    write_file(base + ".graph", rcx::write_graph(inst.graph));
    write_file(base + ".json", rcx::instance_sidecar_json(inst));
}

int run_verify(const Options& opt, const std::string& graph_path, const std::string& col_path,
               int k, std::optional<int> max_len, bool witnesses) {
    const rcx::Graph g = load_graph(graph_path);
    const rcx::EdgeColouring c = load_colouring_for(g, col_path);
    rcx::VerifyOptions vo;
    vo.max_len = max_len;
    vo.collect_witnesses = witnesses;
    vo.threads = opt.threads;
    const rcx::Verdict v = rcx::verify_k_rainbow(c, k, vo);
    emit(opt, rcx::verdict_json(v), nullptr);
    return v.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rcx: exact computation, verification and gadget reductions for "
                 "k-rainbow cycle colouring"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.as_json, "wrap plain-text payloads in JSON");
    app.add_option("--threads", opt.threads, "worker threads for verification")
        ->check(CLI::Range(1, 256));

    int exit_code = 0;

    // gen ------------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a graph file");
    gen->require_subcommand(1);
    {
        auto* sub = gen->add_subcommand("complete", "complete graph K_n");
        auto n = std::make_shared<int>(0);
        sub->add_option("-n", *n, "order")->required();
        sub->add_option("-o,--output", opt.output, "output file");
        sub->callback([&, n] { emit(opt, rcx::write_graph(rcx::Graph::complete(*n)), "graph"); });
    }
    {
        auto* sub = gen->add_subcommand("cycle", "cycle graph C_n");
        auto n = std::make_shared<int>(0);
        sub->add_option("-n", *n, "order")->required();
        sub->add_option("-o,--output", opt.output, "output file");
        sub->callback([&, n] { emit(opt, rcx::write_graph(rcx::Graph::cycle(*n)), "graph"); });
    }
    {
        auto* sub = gen->add_subcommand("random", "G(n,p) with a reproducible seed");
        auto n = std::make_shared<int>(0);
        auto p = std::make_shared<double>(0.5);
        auto seed = std::make_shared<std::uint64_t>(0);
        sub->add_option("-n", *n, "order")->required();
        sub->add_option("-p", *p, "edge probability")->required();
        sub->add_option("--seed", *seed, "64-bit seed")->required();
        sub->add_option("-o,--output", opt.output, "output file");
        sub->callback([&, n, p, seed] {
            emit(opt, rcx::write_graph(rcx::Graph::random(*n, *p, *seed)), "graph");
        });
    }

    // check-family -----------------------------------------------------------
    {
        auto* sub = app.add_subcommand("check-family",
                                       "does every k-subset of the vertices lie on a cycle?");
        auto k = std::make_shared<int>(1);
        auto graph_path = std::make_shared<std::string>();
        auto fast = std::make_shared<bool>(false);
        auto exact = std::make_shared<bool>(false);
        sub->add_option("-k", *k, "subset size")->required();
        auto* fe = sub->add_flag("--fast", *fast, "allow the connectivity sufficient condition");
        sub->add_flag("--exact", *exact, "force exhaustive subset enumeration")->excludes(fe);
        sub->add_option("graph", *graph_path, "graph file")->required();
        sub->add_option("-o,--output", opt.output, "output file");
        sub->callback([&, k, graph_path, fast] {
            const rcx::Graph g = load_graph(*graph_path);
            const rcx::FkEvidence e =
                rcx::check_fk_membership(g, *k, *fast ? rcx::FkMode::fast : rcx::FkMode::exact);
            emit(opt, rcx::fk_evidence_json(e, *k), nullptr);
            exit_code = (e.verdict == rcx::FkVerdict::exact_no) ? 1 : 0;
        });
    }

    // solve ------------------------------------------------------------------
    auto* solve = app.add_subcommand("solve", "exact solvers");
    solve->require_subcommand(1);
    {
        auto* sub = solve->add_subcommand("crx", "exact k-rainbow cycle index");
        auto k = std::make_shared<int>(1);
        auto cap = std::make_shared<int>(-1);
        auto graph_path = std::make_shared<std::string>();
        sub->add_option("-k", *k, "subset size")->required();
        sub->add_option("--cap", *cap, "largest colour count to try");
        sub->add_option("graph", *graph_path, "graph file")->required();
        sub->add_option("-o,--output", opt.output, "output file");
        sub->callback([&, k, cap, graph_path] {
            const rcx::Graph g = load_graph(*graph_path);
            std::optional<int> upper;
            if (*cap >= 0) upper = *cap;
            const rcx::CrxOutcome o = rcx::crx_exact(g, *k, upper);
            emit(opt, rcx::crx_outcome_json(o, *k), nullptr);
            exit_code = std::holds_alternative<rcx::CrxResult>(o) ? 0 : 1;
        });
    }
    {
        auto* sub = solve->add_subcommand(
            "crx1-le3", "3-colour rainbow-cycle colouring, or report that none exists");
        auto graph_path = std::make_shared<std::string>();
        sub->add_option("graph", *graph_path, "graph file")->required();
        sub->add_option("-o,--output", opt.output, "output file");
        sub->callback([&, graph_path] {
            const rcx::Graph g = load_graph(*graph_path);
            if (auto col = rcx::decide_crx1_le3(g)) {
                emit(opt, rcx::write_colouring(*col), "colouring");
            } else {
                emit(opt, "{\n  \"error\": \"not_le3\"\n}\n", nullptr);
                exit_code = 1;
            }
        });
    }

    // construct ----------------------------------------------------------------
    auto* construct = app.add_subcommand("construct", "reference colourings of complete graphs");
    construct->require_subcommand(1);
    {
        auto* sub = construct->add_subcommand(
            "k2-complete", "3-colour colouring of K_n with every pair on a rainbow triangle");
        auto n = std::make_shared<int>(0);
        sub->add_option("n", *n, "order")->required();
        sub->add_option("-o,--output", opt.output, "output file");
        sub->callback([&, n] {
            emit(opt, rcx::write_colouring(rcx::construct_2rainbow_complete(*n)), "colouring");
        });
    }
    {
        auto* sub = construct->add_subcommand(
            "k3-k4", "perfect-matching colouring of K_4 (every triangle rainbow)");
        sub->add_option("-o,--output", opt.output, "output file");
        sub->callback(
            [&] { emit(opt, rcx::write_colouring(rcx::construct_3rainbow_k4()), "colouring"); });
    }

    // verify ---------------------------------------------------------------------
    {
        auto* sub = app.add_subcommand("verify", "check a k-rainbow cycle colouring");
        auto k = std::make_shared<int>(1);
        auto max_len = std::make_shared<int>(-1);
        auto witnesses = std::make_shared<bool>(false);
        auto graph_path = std::make_shared<std::string>();
        auto col_path = std::make_shared<std::string>();
        sub->add_option("-k", *k, "subset size")->required();
        sub->add_option("--max-len", *max_len, "cap on rainbow cycle length");
        sub->add_flag("--witnesses", *witnesses, "include one witness cycle per subset");
        sub->add_option("graph", *graph_path, "graph file")->required();
        sub->add_option("colouring", *col_path, "colouring file")->required();
        sub->add_option("-o,--output", opt.output, "output file");
        sub->callback([&, k, max_len, witnesses, graph_path, col_path] {
            std::optional<int> cap;
            if (*max_len >= 0) cap = *max_len;
            exit_code = run_verify(opt, *graph_path, *col_path, *k, cap, *witnesses);
        });
    }

    // reduce ---------------------------------------------------------------------
    auto* reduce = app.add_subcommand("reduce", "build a gadget instance (graph + sidecar)");
    reduce->require_subcommand(1);
    auto reduce_out = std::make_shared<std::string>();
    {
        auto* sub = reduce->add_subcommand("vc-crx1",
                                           "vertex colouring -> 1-rainbow colouring, l colours");
        auto l = std::make_shared<int>(4);
        auto graph_path = std::make_shared<std::string>();
        sub->add_option("--l", *l, "palette size (>= 4)")->required();
        sub->add_option("graph", *graph_path, "graph file")->required();
        sub->add_option("-o,--output", *reduce_out, "output base path")->required();
        sub->callback([&, l, graph_path] {
            write_instance(*reduce_out, rcx::reduce_vc_to_crx1(load_graph(*graph_path), *l));
        });
    }
    {
        auto* sub = reduce->add_subcommand("vc-crx2-4",
                                           "vertex colouring -> 2-rainbow colouring, 4 colours");
        auto graph_path = std::make_shared<std::string>();
        sub->add_option("graph", *graph_path, "graph file")->required();
        sub->add_option("-o,--output", *reduce_out, "output base path")->required();
        sub->callback([&, graph_path] {
            write_instance(*reduce_out, rcx::reduce_vc_to_crx2_le4(load_graph(*graph_path)));
        });
    }
    {
        auto* sub = reduce->add_subcommand("vc-crx2-5",
                                           "vertex colouring -> 2-rainbow colouring, 5 colours");
        auto graph_path = std::make_shared<std::string>();
        sub->add_option("graph", *graph_path, "graph file")->required();
        sub->add_option("-o,--output", *reduce_out, "output base path")->required();
        sub->callback([&, graph_path] {
            write_instance(*reduce_out, rcx::reduce_vc_to_crx2_le5(load_graph(*graph_path)));
        });
    }
    {
        auto* sub = reduce->add_subcommand(
            "rpath-verify1", "rainbow s-t path -> verifying a 1-rainbow colouring");
        auto s = std::make_shared<int>(0);
        auto t = std::make_shared<int>(0);
        auto graph_path = std::make_shared<std::string>();
        auto col_path = std::make_shared<std::string>();
        sub->add_option("--s", *s, "source vertex (1-indexed)")->required();
        sub->add_option("--t", *t, "target vertex (1-indexed)")->required();
        sub->add_option("graph", *graph_path, "graph file")->required();
        sub->add_option("colouring", *col_path, "colouring file")->required();
        sub->add_option("-o,--output", *reduce_out, "output base path")->required();
        sub->callback([&, s, t, graph_path, col_path] {
            const rcx::Graph g = load_graph(*graph_path);
            const rcx::EdgeColouring c = load_colouring_for(g, *col_path);
            write_instance(*reduce_out, rcx::reduce_rpath_to_verify1(g, c, *s - 1, *t - 1));
        });
    }
    {
        auto* sub = reduce->add_subcommand(
            "kpath-kverify", "k-subset rainbow-path connectivity -> k-rainbow verification");
        auto k = std::make_shared<int>(2);
        auto graph_path = std::make_shared<std::string>();
        auto col_path = std::make_shared<std::string>();
        sub->add_option("-k", *k, "subset size (>= 2)")->required();
        sub->add_option("graph", *graph_path, "graph file")->required();
        sub->add_option("colouring", *col_path, "colouring file")->required();
        sub->add_option("-o,--output", *reduce_out, "output base path")->required();
        sub->callback([&, k, graph_path, col_path] {
            const rcx::Graph g = load_graph(*graph_path);
            const rcx::EdgeColouring c = load_colouring_for(g, *col_path);
            write_instance(*reduce_out, rcx::reduce_kpathconn_to_kverify(g, c, *k));
        });
    }
    {
        auto* sub = reduce->add_subcommand(
            "rpath-3path", "rainbow s-t path -> 3-subset rainbow-path connectivity");
        auto s = std::make_shared<int>(0);
        auto t = std::make_shared<int>(0);
        auto graph_path = std::make_shared<std::string>();
        auto col_path = std::make_shared<std::string>();
        sub->add_option("--s", *s, "source vertex (1-indexed)")->required();
        sub->add_option("--t", *t, "target vertex (1-indexed)")->required();
        sub->add_option("graph", *graph_path, "graph file")->required();
        sub->add_option("colouring", *col_path, "colouring file")->required();
        sub->add_option("-o,--output", *reduce_out, "output base path")->required();
        sub->callback([&, s, t, graph_path, col_path] {
            const rcx::Graph g = load_graph(*graph_path);
            const rcx::EdgeColouring c = load_colouring_for(g, *col_path);
            write_instance(*reduce_out, rcx::reduce_rpath_to_3pathconn(g, c, *s - 1, *t - 1));
        });
    }

    // lift -------------------------------------------------------------------------
    auto* lift = app.add_subcommand("lift", "lift a proper vertex colouring through a gadget");
    lift->require_subcommand(1);
    for (const auto& [name, which] : {std::pair<const char*, int>{"vc-crx1", 1},
                                      {"vc-crx2-4", 2},
                                      {"vc-crx2-5", 3}}) {
        auto* sub = lift->add_subcommand(name, "produce the lifted edge colouring");
        auto base = std::make_shared<std::string>();
        auto vc_path = std::make_shared<std::string>();
        auto kind = std::make_shared<int>(which);
        sub->add_option("instance", *base, "instance base path (expects .graph/.json)")
            ->required();
        sub->add_option("vertex-colouring", *vc_path, "vertex colouring file")->required();
        sub->add_option("-o,--output", opt.output, "output file");
        sub->callback([&, base, vc_path, kind] {
            const rcx::ReductionInstance inst = load_instance(*base);
            const rcx::VertexColouring vc = rcx::parse_vertex_colouring(read_file(*vc_path));
            rcx::EdgeColouring lifted = *kind == 1   ? rcx::lift_vc_to_crx1(inst, vc)
                                        : *kind == 2 ? rcx::lift_vc_to_crx2_le4(inst, vc)
                                                     : rcx::lift_vc_to_crx2_le5(inst, vc);
            emit(opt, rcx::write_colouring(lifted), "colouring");
        });
    }

    // extract ----------------------------------------------------------------------
    {
        auto* sub = app.add_subcommand(
            "extract", "read the vertex colouring off an instance's hub edges");
        auto base = std::make_shared<std::string>();
        auto col_path = std::make_shared<std::string>();
        sub->add_option("instance", *base, "instance base path (expects .graph/.json)")
            ->required();
        sub->add_option("colouring", *col_path, "edge colouring of the instance graph")
            ->required();
        sub->add_option("-o,--output", opt.output, "output file");
        sub->callback([&, base, col_path] {
            const rcx::ReductionInstance inst = load_instance(*base);
            const rcx::EdgeColouring c = load_colouring_for(inst.graph, *col_path);
            emit(opt, rcx::write_vertex_colouring(rcx::extract_vertex_colouring(inst, c)),
                 "vertex_colouring");
        });
    }

    // oracle -----------------------------------------------------------------------
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force ground truth");
    oracle_cmd->require_subcommand(1);
    {
        auto* sub = oracle_cmd->add_subcommand("chi", "chromatic number");
        auto cap = std::make_shared<int>(-1);
        auto graph_path = std::make_shared<std::string>();
        sub->add_option("--cap", *cap, "largest colour count to try (default: order)");
        sub->add_option("graph", *graph_path, "graph file")->required();
        sub->add_option("-o,--output", opt.output, "output file");
        sub->callback([&, cap, graph_path] {
            const rcx::Graph g = load_graph(*graph_path);
            const int bound = *cap >= 1 ? *cap : std::max(1, g.order());
            const auto r = rcx::oracle::chromatic_number(g, bound);
            json out;
            if (const int* v = std::get_if<int>(&r)) {
                out["chi"] = *v;
            } else {
                out["error"] = "above_cap";
                out["cap"] = bound;
                exit_code = 1;
            }
            emit(opt, out.dump(2) + "\n", nullptr);
        });
    }
    {
        auto* sub = oracle_cmd->add_subcommand("crx", "brute-force k-rainbow cycle index");
        auto k = std::make_shared<int>(1);
        auto cap = std::make_shared<int>(5);
        auto graph_path = std::make_shared<std::string>();
        sub->add_option("-k", *k, "subset size")->required();
        sub->add_option("--cap", *cap, "largest colour count to try")->required();
        sub->add_option("graph", *graph_path, "graph file")->required();
        sub->add_option("-o,--output", opt.output, "output file");
        sub->callback([&, k, cap, graph_path] {
            const rcx::Graph g = load_graph(*graph_path);
            const auto r = rcx::oracle::crx_bruteforce(g, *k, *cap);
            json out;
            if (const int* v = std::get_if<int>(&r)) {
                out["crx"] = *v;
                out["k"] = *k;
            } else if (const auto* nf = std::get_if<rcx::oracle::NotInFk>(&r)) {
                out["error"] = "not_in_Fk";
                json arr = json::array();
                for (int v2 : nf->subset) arr.push_back(v2 + 1);
                out["witness_subset"] = arr;
                exit_code = 1;
            } else {
                out["error"] = "above_cap";
                out["upper"] = std::get<rcx::oracle::AboveCap>(r).cap;
                out["k"] = *k;
                exit_code = 1;
            }
            emit(opt, out.dump(2) + "\n", nullptr);
        });
    }
    {
        auto* sub = oracle_cmd->add_subcommand("rpath", "rainbow s-t path existence");
        auto s = std::make_shared<int>(0);
        auto t = std::make_shared<int>(0);
        auto graph_path = std::make_shared<std::string>();
        auto col_path = std::make_shared<std::string>();
        sub->add_option("--s", *s, "source vertex (1-indexed)")->required();
        sub->add_option("--t", *t, "target vertex (1-indexed)")->required();
        sub->add_option("graph", *graph_path, "graph file")->required();
        sub->add_option("colouring", *col_path, "colouring file")->required();
        sub->add_option("-o,--output", opt.output, "output file");
        sub->callback([&, s, t, graph_path, col_path] {
            const rcx::Graph g = load_graph(*graph_path);
            const rcx::EdgeColouring c = load_colouring_for(g, *col_path);
            const bool exists = rcx::oracle::rainbow_path_exists(g, c, *s - 1, *t - 1);
            json out;
            out["exists"] = exists;
            emit(opt, out.dump(2) + "\n", nullptr);
            exit_code = exists ? 0 : 1;
        });
    }
    {
        auto* sub = oracle_cmd->add_subcommand("kpath", "k-subset rainbow-path connectivity");
        auto k = std::make_shared<int>(2);
        auto graph_path = std::make_shared<std::string>();
        auto col_path = std::make_shared<std::string>();
        sub->add_option("-k", *k, "subset size")->required();
        sub->add_option("graph", *graph_path, "graph file")->required();
        sub->add_option("colouring", *col_path, "colouring file")->required();
        sub->add_option("-o,--output", opt.output, "output file");
        sub->callback([&, k, graph_path, col_path] {
            const rcx::Graph g = load_graph(*graph_path);
            const rcx::EdgeColouring c = load_colouring_for(g, *col_path);
            const bool connected = rcx::oracle::k_rainbow_path_connected(g, c, *k);
            json out;
            out["connected"] = connected;
            emit(opt, out.dump(2) + "\n", nullptr);
            exit_code = connected ? 0 : 1;
        });
    }

    // ramsey-bound -------------------------------------------------------------------
    {
        auto* sub = app.add_subcommand("ramsey-bound",
                                       "upper bound for the k-colour triangle Ramsey number");
        auto k = std::make_shared<int>(1);
        sub->add_option("-k", *k, "colour count")->required();
        sub->add_option("-o,--output", opt.output, "output file");
        sub->callback([&, k] {
            std::ostringstream out;
            out << rcx::ramsey_upper_bound(*k) << '\n';
            emit(opt, out.str(), "value");
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const rcx::ParseError& e) {
        std::cerr << "rcx: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "rcx: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
