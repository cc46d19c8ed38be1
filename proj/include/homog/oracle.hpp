#pragma once

#include <string>
#include <vector>

#include "homog/graph.hpp"
#include "homog/pipeline.hpp"

namespace homog {
namespace oracle {

// Seeded instance descriptions; the corpus manifest is a list of these.
struct GeneratorSpec {
    enum class Kind { Cograph, Split, Gnp, Planted, TwoCliques };
    Kind kind = Kind::Gnp;
    int n = 0;
    Rational p{1, 2};          // edge probability (gnp, split cross, planted background)
    int plant_size = 0;        // planted only
    Rational plant_density{0}; // planted only; 0 = independent set, 1 = clique
    uint64_t seed = 0;

    static GeneratorSpec parse(const std::string& line);
    std::string to_line() const;
};

Graph generate(const GeneratorSpec& spec);

std::vector<GeneratorSpec> load_corpus(const std::string& path);

struct BruteBest {
    int size = 0;
    VertexSet witness;
};

// Largest set whose density is <= eps or >= 1-eps, by exhaustive search
// largest-first. Capacity-errors above the cap.
BruteBest brute_best_homogeneous(const Graph& g, const Rational& eps, int cap = 18);

struct VerifyReport {
    bool pass = true;
    std::vector<std::string> notes;

    void fail(std::string why) {
        pass = false;
        notes.push_back(std::move(why));
    }
};

// Re-derives every numeric claim in the outcome from g alone, using counting
// routines independent of the ones that produced it.
VerifyReport verify_outcome(const Graph& g, const Outcome& outcome, const Rational& eps);

} // namespace oracle
} // namespace homog
