// homog: find certified near-homogeneous sets or certified induced copies,
// count induced patterns, generate corpus instances, verify certificates.

#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "homog/errors.hpp"
#include "homog/family.hpp"
#include "homog/induced.hpp"
#include "homog/oracle.hpp"
#include "homog/pipeline.hpp"
#include "homog/threading.hpp"

namespace {

// exit codes, also listed in README:
//   0 homogeneous-set branch (or success for count/gen/verify)
//   2 evidence branch
//   3 parse error        4 scale error      5 exhaustion
//   6 verification failure
//   1 any other failure
constexpr int kExitHomogeneous = 0;
constexpr int kExitEvidence = 2;
constexpr int kExitParse = 3;
constexpr int kExitScale = 4;
constexpr int kExitExhaustion = 5;
constexpr int kExitVerifyFail = 6;
constexpr int kExitOther = 1;

homog::Rational parse_eps(const std::string& s) {
    homog::Rational eps = homog::Rational::parse(s);
    if (eps <= homog::Rational(0) || eps >= homog::Rational(1, 2))
        throw homog::ArgumentError("eps must be a rational in (0, 1/2), got " + s);
    return eps;
}

int run_find(const std::string& graph_path, const std::string& eps_str,
             const std::string& family_arg, uint64_t seed, std::string out_path,
             long long k_max, int evidence_target) {
    homog::Graph g = homog::Graph::read_file(graph_path);
    homog::FamilySpec fam = homog::resolve_family(family_arg);
    homog::Rational eps = parse_eps(eps_str);
    homog::RunConfig cfg;
    cfg.evidence_target = evidence_target;
    if (k_max > 0) cfg.k_max_override = k_max;
    homog::Outcome outcome = homog::run(g, eps, fam, seed, cfg);
    if (out_path.empty()) out_path = graph_path + ".cert";
    outcome.write_file(out_path);
    if (outcome.is_certificate()) {
        const auto& cert = outcome.certificate();
        std::cout << "homogeneous side=" << (cert.side == homog::Side::Dense ? "DENSE" : "SPARSE")
                  << " |X|=" << cert.x.size << " density=" << cert.density.str()
                  << " delta_actual=" << cert.delta_actual.str() << " cert=" << out_path << "\n";
        return kExitHomogeneous;
    }
    const auto& ev = outcome.evidence();
    std::cout << "evidence pattern=" << ev.pattern_name << " copies=" << ev.copies.size()
              << " claimed_lower_bound=" << ev.claimed_lower_bound << " cert=" << out_path << "\n";
    return kExitEvidence;
}

int run_count(const std::string& graph_path, const std::string& family_arg, long long samples,
              uint64_t seed, long long budget) {
    homog::Graph g = homog::Graph::read_file(graph_path);
    homog::FamilySpec fam = homog::resolve_family(family_arg);
    for (const auto& member : fam.members) {
        long long m = member.g.n();
        if (homog::subset_count_capped(g.n(), int(m), budget) <= budget) {
            long long c = homog::count_induced_exact(g, member.g, budget);
            std::cout << member.name << " exact " << c << "\n";
        } else {
            auto est = homog::estimate_induced(g, member.g, samples, seed);
            std::cout << member.name << " estimated " << est.point << " interval [" << est.lo
                      << ", " << est.hi << "] samples " << est.samples << "\n";
        }
    }
    return 0;
}

int run_verify(const std::string& graph_path, const std::string& cert_path) {
    homog::Graph g = homog::Graph::read_file(graph_path);
    homog::Outcome outcome = homog::Outcome::read_file(cert_path);
    auto rep = homog::oracle::verify_outcome(g, outcome, outcome.params.eps);
    for (const auto& note : rep.notes) std::cout << note << "\n";
    std::cout << (rep.pass ? "PASS" : "FAIL") << "\n";
    return rep.pass ? 0 : kExitVerifyFail;
}

int run_gen(const std::string& kind, int n, const std::string& p_str, int plant,
            const std::string& plant_density, uint64_t seed, const std::string& out_path) {
    homog::oracle::GeneratorSpec spec;
    std::string line = "instance " + kind + " n " + std::to_string(n) + " p " + p_str;
    if (plant > 0) line += " plant " + std::to_string(plant) + " plant_density " + plant_density;
    line += " seed " + std::to_string(seed);
    spec = homog::oracle::GeneratorSpec::parse(line);
    homog::Graph g = homog::oracle::generate(spec);
    if (out_path.empty()) {
        std::cout << g.to_text();
    } else {
        g.write_file(out_path);
        std::cout << "wrote n=" << g.n() << " m=" << g.edge_count() << " to " << out_path << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified homogeneous-set / forbidden-pattern toolkit"};
    app.require_subcommand(1);

    int threads = 1;
    app.add_option("--threads", threads, "worker cap for pair classification")->capture_default_str();

    std::string graph_path, eps_str = "1/10", family_arg = "p4", out_path, cert_path;
    uint64_t seed = 0;
    long long k_max = 0;
    int evidence_target = 100;

    auto* find = app.add_subcommand("find", "run the dichotomy and write a certificate");
    find->add_option("graph", graph_path, "graph file")->required();
    find->add_option("--eps", eps_str, "tolerance as p/q")->required();
    find->add_option("--family", family_arg, "family name or file")->capture_default_str();
    find->add_option("--seed", seed, "rng seed")->capture_default_str();
    find->add_option("--out", out_path, "certificate output path (default <graph>.cert)");
    find->add_option("--k-max", k_max, "override the partition size cap");
    find->add_option("--evidence-target", evidence_target, "copies required for the evidence branch")
        ->capture_default_str();

    long long samples = 200000, budget = homog::kDefaultExactBudget;
    auto* count = app.add_subcommand("count", "exact or estimated induced-copy counts");
    count->add_option("graph", graph_path, "graph file")->required();
    count->add_option("--family", family_arg, "family name or file")->capture_default_str();
    count->add_option("--samples", samples, "sample count for the estimator")->capture_default_str();
    count->add_option("--seed", seed, "rng seed")->capture_default_str();
    count->add_option("--budget", budget, "subset budget for the exact counter")
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify", "re-check a certificate against a graph");
    verify->add_option("graph", graph_path, "graph file")->required();
    verify->add_option("certificate", cert_path, "certificate file")->required();

    std::string kind = "gnp", p_str = "1/2", plant_density_str = "0";
    int n = 0, plant = 0;
    auto* gen = app.add_subcommand("gen", "generate a corpus instance");
    gen->add_option("--kind", kind, "cograph|split|gnp|planted|two_cliques")->capture_default_str();
    gen->add_option("--n", n, "vertex count")->required();
    gen->add_option("--p", p_str, "edge probability as p/q")->capture_default_str();
    gen->add_option("--plant-size", plant, "planted set size");
    gen->add_option("--plant-density", plant_density_str, "planted internal density as p/q")
        ->capture_default_str();
    gen->add_option("--seed", seed, "rng seed")->capture_default_str();
    gen->add_option("--out", out_path, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);
    homog::set_thread_cap(threads);

    try {
        if (find->parsed())
            return run_find(graph_path, eps_str, family_arg, seed, out_path, k_max,
                            evidence_target);
        if (count->parsed()) return run_count(graph_path, family_arg, samples, seed, budget);
        if (verify->parsed()) return run_verify(graph_path, cert_path);
        if (gen->parsed())
            return run_gen(kind, n, p_str, plant, plant_density_str, seed, out_path);
    } catch (const homog::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const homog::ScaleError& e) {
        std::cerr << "scale error: " << e.what() << "\n";
        return kExitScale;
    } catch (const homog::ExhaustionError& e) {
        std::cerr << "exhaustion: " << e.what() << "\n";
        return kExitExhaustion;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOther;
    }
    return kExitOther;
}
