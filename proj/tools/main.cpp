#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "remo/bounds.hpp"
#include "remo/connectivity.hpp"
#include "remo/families.hpp"
#include "remo/graph.hpp"
#include "remo/graph6.hpp"
#include "remo/invariants.hpp"
#include "remo/verifier.hpp"

namespace {

using nlohmann::ordered_json;
using namespace remo;

constexpr int kExitClean = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct ConstructArgs {
    std::string family;
    int n = 0, m = 0, kappa = 0, lambda = 0;
    std::string format = "graph6";
};

struct InvariantsArgs {
    std::string input = "-";
    int precision = 6;
};

struct BoundArgs {
    std::string which;
    int n = 0, m = -1, kappa = 0, lambda = 0;
    int precision = 6;
};

struct VerifyArgs {
    std::string theorem;
    int internal_n = 0;
    std::string corpus;
    int kappa = 0, lambda = 0, jobs = 1;
    std::string format = "json";
};

struct SweepArgs {
    std::string check;
    int n_max = 60, kappa_max = 5;
    std::string format = "json";
};

void print_graph(const Graph& g, const std::string& format) {
    if (format == "graph6") {
        std::cout << encode_graph6(g) << "\n";
        return;
    }
    for (int u = 0; u < g.order(); ++u) {
        std::cout << u << ":";
        for (int v = 0; v < g.order(); ++v)
            if (g.adjacent(u, v)) std::cout << ' ' << v;
        std::cout << "\n";
    }
}

int run_construct(const ConstructArgs& a) {
    Graph g(1);
    std::string blocks;
    if (a.family == "pk-kappa") {
        if (a.kappa < 1) {
            std::cerr << "pk-kappa needs --kappa >= 1\n";
            return kExitUsage;
        }
        KappaPcSelection sel = pk_kappa_member(a.n, a.m, a.kappa);
        g = kappa_pc_graph(sel.member.params);
        blocks = blocks_str(kappa_pc_blocks(sel.member.params));
    } else if (a.family == "pk-lambda") {
        if (a.lambda == 0) {
            std::cerr << "pk-lambda needs --lambda 2 or 3\n";
            return kExitUsage;
        }
        LambdaPcSelection sel = pk_lambda_member(a.n, a.m, a.lambda);
        g = lambda_pc_graph(sel.member.params);
        blocks = blocks_str(lambda_pc_blocks(sel.member.params));
    } else {
        BpkParams p = bpk_params(a.n, a.m);
        g = from_block_sequence(bpk_blocks(p));
        blocks = blocks_str(bpk_blocks(p));
    }
    std::cerr << "family=" << a.family << " n=" << a.n << " m=" << a.m;
    if (a.kappa) std::cerr << " kappa=" << a.kappa;
    if (a.lambda) std::cerr << " lambda=" << a.lambda;
    std::cerr << " -> " << blocks << " order=" << g.order() << " size=" << g.size()
              << "\n";
    print_graph(g, a.format);
    return kExitClean;
}

int run_invariants(const InvariantsArgs& a) {
    std::vector<Graph> graphs = a.input == "-"
                                    ? load_graph6_stream(std::cin, "stdin")
                                    : load_graph6_file(a.input);
    ordered_json out = ordered_json::array();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = graphs[i];
        ordered_json j;
        j["index"] = i;
        j["n"] = g.order();
        j["m"] = g.size();
        bool usable = g.order() >= 2 && is_connected(g);
        j["connected"] = g.order() < 2 || is_connected(g);
        if (usable) {
            RemotenessResult r = remoteness(g);
            j["rho"] = r.value.str();
            j["rhoDecimal"] = r.value.decimal(a.precision);
            j["maximizers"] = r.maximizers;
            j["diameter"] = diameter(g);
        } else {
            j["rho"] = nullptr;
            j["rhoDecimal"] = nullptr;
            j["maximizers"] = ordered_json::array();
            j["diameter"] = g.order() == 1 ? ordered_json(0) : ordered_json(nullptr);
        }
        ConnectivityFacts facts = connectivity_facts(g);
        j["kappa"] = facts.vertex_connectivity;
        j["lambda"] = facts.edge_connectivity;
        j["triangleFree"] = facts.triangle_free;
        out.push_back(std::move(j));
    }
    std::cout << out.dump(2) << "\n";
    return kExitClean;
}

int run_bound(const BoundArgs& a) {
    ordered_json j;
    j["which"] = a.which;
    j["n"] = a.n;
    if (a.m >= 0) j["m"] = a.m;
    if (a.kappa) j["kappa"] = a.kappa;
    if (a.lambda) j["lambda"] = a.lambda;
    bool applicable = true;
    std::optional<Rational> value;
    std::string note;

    auto need_m = [&] {
        if (a.m < 0) throw CLI::ValidationError("--m is required for " + a.which);
    };
    if (a.which == "order") {
        value = bound_order(a.n);
    } else if (a.which == "size") {
        need_m();
        value = *bound_size(a.n, a.m).value;
    } else if (a.which == "kappa") {
        need_m();
        if (a.kappa < 1) throw CLI::ValidationError("--kappa >= 1 is required");
        BoundReport r = bound_kappa(a.n, a.m, a.kappa);
        applicable = r.applicable;
        value = r.value;
        note = r.note;
    } else if (a.which == "lambda-order") {
        value = bound_lambda_order(a.n, a.lambda);
    } else if (a.which == "lambda-size") {
        need_m();
        BoundReport r = bound_lambda_size(a.n, a.m, a.lambda);
        applicable = r.applicable;
        value = r.value;
        note = r.note;
    } else if (a.which == "triangle-free") {
        need_m();
        value = bound_triangle_free(a.n, a.m);
    } else if (a.which == "pk-direct") {
        need_m();
        if ((a.kappa >= 1) == (a.lambda != 0))
            throw CLI::ValidationError("pk-direct needs exactly one of --kappa, --lambda");
        Graph g = a.kappa >= 1 ? pk_kappa(a.n, a.m, a.kappa)
                               : pk_lambda(a.n, a.m, a.lambda);
        value = remoteness(g).value;
        note = "size " + std::to_string(g.size());
    } else {
        throw CLI::ValidationError("unknown bound id: " + a.which);
    }

    j["applicable"] = applicable;
    j["value"] = value ? ordered_json(value->str()) : ordered_json(nullptr);
    j["decimal"] = value ? ordered_json(value->decimal(a.precision)) : ordered_json(nullptr);
    if (!note.empty()) j["note"] = note;
    std::cout << j.dump(2) << "\n";
    return kExitClean;
}

int run_verify(const VerifyArgs& a) {
    std::optional<ClaimId> claim = claim_id_parse(a.theorem);
    if (!claim) {
        std::cerr << "unknown theorem id: " << a.theorem << "\n";
        return kExitUsage;
    }
    if ((a.internal_n == 0) == a.corpus.empty()) {
        std::cerr << "choose exactly one corpus: --internal-n or --corpus\n";
        return kExitUsage;
    }
    CorpusSpec::Filter filter = CorpusSpec::Filter::Connected;
    int param = 0;
    switch (*claim) {
        case ClaimId::KappaBound:
            if (a.kappa < 1) {
                std::cerr << a.theorem << " needs --kappa >= 1\n";
                return kExitUsage;
            }
            filter = CorpusSpec::Filter::Kappa;
            param = a.kappa;
            break;
        case ClaimId::LambdaBound:
        case ClaimId::LambdaOrder:
        case ClaimId::LambdaSize:
            if (a.lambda == 0) {
                std::cerr << a.theorem << " needs --lambda 2 or 3\n";
                return kExitUsage;
            }
            filter = CorpusSpec::Filter::Lambda;
            param = a.lambda;
            break;
        case ClaimId::TriangleFreeBound:
            filter = CorpusSpec::Filter::TriangleFree;
            break;
        default:
            if (a.kappa || a.lambda) {
                std::cerr << a.theorem << " takes neither --kappa nor --lambda\n";
                return kExitUsage;
            }
            break;
    }
    CorpusSpec corpus = a.corpus.empty()
                            ? CorpusSpec::internal(a.internal_n, filter, param)
                            : CorpusSpec::file(a.corpus, filter, param);
    ScanOptions opts;
    opts.jobs = a.jobs;
    VerificationReport rep = verify_theorem(*claim, corpus, opts);
    std::cout << (a.format == "csv" ? report_csv(rep) : report_json(rep));
    return rep.clean() ? kExitClean : kExitViolation;
}

int run_sweep(const SweepArgs& a) {
    std::optional<SweepCheck> check = sweep_check_parse(a.check);
    if (!check) {
        std::cerr << "unknown sweep id: " << a.check << "\n";
        return kExitUsage;
    }
    SweepLimits lim;
    lim.n_max = a.n_max;
    lim.kappa_max = a.kappa_max;
    VerificationReport rep = sweep_consistency(*check, lim);
    std::cout << (a.format == "csv" ? report_csv(rep) : report_json(rep));
    return rep.clean() ? kExitClean : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"path-complete remoteness toolkit: constructions, exact bounds, "
                 "exhaustive verification"};
    app.require_subcommand(1);

    ConstructArgs ca;
    CLI::App* construct = app.add_subcommand(
        "construct", "emit an extremal family member as graph6 or adjacency text");
    construct->add_option("--family", ca.family, "pk-kappa | pk-lambda | bpk")
        ->required()
        ->check(CLI::IsMember({"pk-kappa", "pk-lambda", "bpk"}));
    construct->add_option("--n", ca.n, "order")->required();
    construct->add_option("--m", ca.m, "size (least member of size >= m is chosen)")
        ->required();
    construct->add_option("--kappa", ca.kappa, "connectivity parameter (pk-kappa)");
    construct->add_option("--lambda", ca.lambda, "edge-connectivity parameter (pk-lambda)")
        ->check(CLI::IsMember({2, 3}));
    construct->add_option("--format", ca.format, "graph6 | text")
        ->check(CLI::IsMember({"graph6", "text"}));

    InvariantsArgs ia;
    CLI::App* invariants = app.add_subcommand(
        "invariants", "per-graph report over a graph6 stream (file or '-')");
    invariants->add_option("--input", ia.input, "graph6 file, '-' for standard input");
    invariants->add_option("--precision", ia.precision, "decimal digits for display")
        ->check(CLI::NonNegativeNumber);

    BoundArgs ba;
    CLI::App* bound = app.add_subcommand("bound", "evaluate one bound exactly");
    bound
        ->add_option("--which", ba.which,
                     "order | size | kappa | lambda-order | lambda-size | "
                     "triangle-free | pk-direct")
        ->required();
    bound->add_option("--n", ba.n, "order")->required();
    bound->add_option("--m", ba.m, "size");
    bound->add_option("--kappa", ba.kappa, "connectivity parameter");
    bound->add_option("--lambda", ba.lambda, "edge-connectivity parameter");
    bound->add_option("--precision", ba.precision, "decimal digits for display")
        ->check(CLI::NonNegativeNumber);

    VerifyArgs va;
    CLI::App* verify = app.add_subcommand(
        "verify", "scan a corpus against one claim; exit 1 on any violation");
    verify->add_option("--theorem", va.theorem,
                       "thm1.1 | thm1.2 | cor3.5 | thm3.3 | thm4.3 | cor4.4 | "
                       "cor4.6 | thm5.1")
        ->required();
    verify->add_option("--internal-n", va.internal_n,
                       "scan every connected labeled graph of this order (2..7)");
    verify->add_option("--corpus", va.corpus, "graph6 file to scan instead");
    verify->add_option("--kappa", va.kappa, "hypothesis parameter for thm3.3");
    verify->add_option("--lambda", va.lambda,
                       "hypothesis parameter for thm4.3/cor4.4/cor4.6");
    verify->add_option("--jobs", va.jobs, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--format", va.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));

    SweepArgs sa;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "constructive consistency checks; exit 1 on any violation");
    sweep
        ->add_option("--check", sa.check,
                     "kappa-formula | lambda-sharpness | epsilon-window | "
                     "bpk-equality | family-structure | edge-addition")
        ->required();
    sweep->add_option("--n-max", sa.n_max, "largest order")->check(CLI::PositiveNumber);
    sweep->add_option("--kappa-max", sa.kappa_max, "largest kappa")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--format", sa.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (construct->parsed()) return run_construct(ca);
        if (invariants->parsed()) return run_invariants(ia);
        if (bound->parsed()) return run_bound(ba);
        if (verify->parsed()) return run_verify(va);
        return run_sweep(sa);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
}
