#ifndef BCREP_THEOREM_HPP
#define BCREP_THEOREM_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bcrep/rep1cat.hpp"
#include "bcrep/rep2cat.hpp"

namespace bcrep {

/// Strict R -> (rho1, rho0); on 1-cells [t] -> (r1, r0). Throws strictify_first otherwise.
std::pair<Rep1, Rep1> theorem_functor(const RepReduced& r);

/**
 * Levels from generate_levels, each conjugated by a random unimodular matrix,
 * paired as (rho1, rho0) with c = dx for a random normalized integer 1-cochain x
 * (about a quarter of them strict). Every diagonal pair is kept so that each level
 * appears; off-diagonal pairs are sampled by rng up to max_items in total.
 */
std::vector<RepReduced> build_inventory(const TwoGroupPtr& g, std::size_t dim_max, SplitMix64& rng,
                                        std::size_t max_items = 48);

struct ClauseLine {
    char clause;  // 'A'..'D'
    std::string instance;
    bool pass = false;
    std::string witness;
};

struct EquivalenceReport {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::vector<ClauseLine> lines;

    bool passed(char clause) const;
    bool all_passed() const;
    /// One line per instance, then a summary. Contains no timings.
    std::string render() const;
};

/**
 * A: every level pair is hit by a strict representation and every inventory item validates.
 * B: random intertwiner pairs lift to 1-intertwiners.
 * C: lifts over the same pair are 2-isomorphic, lifts over different pairs are not,
 *    and strictification carries each lift to the canonical representative.
 * D: beta = 0 and there is no nonzero equivariant beta for any inventory item.
 */
EquivalenceReport verify_equivalence(const TwoGroupPtr& g, const std::vector<RepReduced>& inventory,
                                     std::size_t trials, std::uint64_t seed);

}  // namespace bcrep

#endif
