// Command-line front end: computes generalized menage seating counts by any
// of the engine's methods, cross-verifies the methods against each other,
// and emits OEIS-style b-files. Exit status: 0 success, 1 verification
// mismatch or internal integrity failure, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "menage/debruijn.hpp"
#include "menage/sequences.hpp"

namespace {

using namespace menage;

struct ComputeArgs {
    std::string seq_id;
    int raw_k = 0;
    int n_from = 1;
    int n_to = 1;
    std::string method = "transfer";
    std::string format = "plain";
    std::string cache_path;
    bool recompute = false;
};

std::string cache_path_or_env(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("MENAGE_CACHE")) return env;
    return {};
}

int run_compute(const ComputeArgs& args) {
    if (args.seq_id.empty() == (args.raw_k == 0))
        throw UsageError("pass exactly one of --seq and --raw-k");
    SequenceSpec spec = SequenceSpec::raw(args.raw_k);
    if (!args.seq_id.empty()) {
        auto known = SequenceSpec::from_id(args.seq_id);
        if (!known) throw UsageError("unknown sequence id " + args.seq_id);
        spec = *known;
    }
    const auto method = method_from_name(args.method);
    if (!method) throw UsageError("unknown method " + args.method);
    const auto format = format_from_name(args.format);
    if (!format) throw UsageError("unknown format " + args.format);
    if (args.n_from < 0 || args.n_to < args.n_from) throw UsageError("invalid --from/--to range");

    const std::string cache_path = cache_path_or_env(args.cache_path);
    std::vector<TermRecord> terms;
    if (cache_path.empty()) {
        terms = compute_terms(spec.k, args.n_from, args.n_to, *method);
    } else {
        const TermCache cache = args.recompute ? TermCache{} : TermCache::load(cache_path);
        std::map<int, TermRecord> by_n;
        std::vector<int> missing;
        for (int n = args.n_from; n <= args.n_to; ++n) {
            if (auto hit = cache.find(spec.k, n, *method))
                by_n[n] = TermRecord{spec.k, n, std::move(*hit), *method, 0};
            else
                missing.push_back(n);
        }
        if (!missing.empty()) {
            // The transfer sweep shares work across a contiguous range; other
            // methods compute each missing term on its own.
            std::vector<TermRecord> fresh =
                *method == Method::transfer
                    ? compute_terms(spec.k, missing.front(), missing.back(), *method)
                    : [&] {
                          std::vector<TermRecord> recs;
                          for (int n : missing) {
                              auto one = compute_terms(spec.k, n, n, *method);
                              recs.push_back(std::move(one.front()));
                          }
                          return recs;
                      }();
            for (TermRecord& rec : fresh) {
                if (by_n.contains(rec.n)) continue;
                TermCache::append(cache_path, rec);
                by_n[rec.n] = std::move(rec);
            }
        }
        for (auto& [n, rec] : by_n) terms.push_back(std::move(rec));
    }

    std::cout << render_terms(spec, terms, *format);
    return 0;
}

int run_verify(int k, int n_max, const std::vector<std::string>& method_names) {
    std::vector<Method> methods;
    for (const std::string& name : method_names) {
        auto m = method_from_name(name);
        if (!m) throw UsageError("unknown method " + name);
        methods.push_back(*m);
    }
    const VerifyReport report = verify_methods(k, n_max, methods);
    std::cout << report.render();
    return report.all_agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact seating-arrangement counts for the generalized menage problem"};
    app.require_subcommand(1);

    ComputeArgs cargs;
    CLI::App* compute = app.add_subcommand("compute", "compute sequence terms");
    compute->add_option("--seq", cargs.seq_id, "sequence id (A059375, A000179, A094047, A258338, A114939)");
    compute->add_option("--raw-k", cargs.raw_k, "raw seating counts for this run-length bound k");
    compute->add_option("--from", cargs.n_from, "first n (default 1)");
    compute->add_option("--to", cargs.n_to, "last n")->required();
    compute->add_option("--method", cargs.method,
                        "touchard | inclusion-exclusion | transfer | eigen | b2 | diagonal | bruteforce");
    compute->add_option("--format", cargs.format, "plain | bfile | json");
    compute->add_option("--cache", cargs.cache_path,
                        "term cache file (JSON lines; MENAGE_CACHE overrides the default)");
    compute->add_flag("--recompute", cargs.recompute, "ignore cached terms");

    int verify_k = 2;
    int verify_n_max = 1;
    std::vector<std::string> verify_names;
    CLI::App* verify = app.add_subcommand("verify", "cross-check methods against each other");
    verify->add_option("--k", verify_k, "run-length bound")->required();
    verify->add_option("--n-max", verify_n_max, "verify terms 1..n-max")->required();
    verify->add_option("--methods", verify_names, "comma-separated method list")
        ->required()
        ->delimiter(',');

    int graph_k = 2;
    CLI::App* graph = app.add_subcommand("graph", "dump the weighted de Bruijn graph");
    graph->add_option("--k", graph_k, "run-length bound")->required();

    try {
        app.parse(argc, argv);
        if (compute->parsed()) return run_compute(cargs);
        if (verify->parsed()) return run_verify(verify_k, verify_n_max, verify_names);
        if (graph->parsed()) {
            std::cout << menage::build_graph(graph_k).dump();
            return 0;
        }
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const menage::UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        // domain/logic errors signal an engine integrity failure, not misuse
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
