#ifndef TOPZETA_CORPUS_HPP
#define TOPZETA_CORPUS_HPP

#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "topzeta/criterion.hpp"

namespace topzeta {

struct CorpusOptions {
    unsigned long long seed = 1;
    long long count = 100;
};

/// One random staircase support set: 1-6 vertices with coordinates up to 30,
/// coefficients from {+-1,+-2,+-3}, sometimes with extra lattice points on
/// compact edges and above the staircase; resampled until nondegenerate.
/// mt19937_64 is fully specified, so a fixed seed gives identical output on
/// every platform.
std::vector<SupportPoint> random_nondegenerate_support(std::mt19937_64& rng,
                                                       long long* resamples = nullptr);

struct CorpusSummary {
    unsigned long long seed = 0;
    long long instances = 0;
    long long agreements = 0;        // criterion predicted == actual
    long long residue_checks = 0;    // order-1 residue cross-checks performed
    long long residue_matches = 0;
    long long order2_poles = 0;
    long long degenerate_resamples = 0;
    std::vector<std::string> counterexamples; // rendered inputs, expected empty

    bool all_clean() const {
        return agreements == instances && residue_matches == residue_checks &&
               counterexamples.empty();
    }
};

/// Runs verify_criterion over `count` seeded instances. Deterministic: equal
/// options give byte-identical summaries. Throws std::invalid_argument when
/// count < 1.
CorpusSummary run_corpus(const CorpusOptions& options);

std::string corpus_text(const CorpusSummary& summary);
nlohmann::ordered_json corpus_json(const CorpusSummary& summary);

} // namespace topzeta

#endif
