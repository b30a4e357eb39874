#ifndef BCREP_REP1CAT_HPP
#define BCREP_REP1CAT_HPP

#include <vector>

#include "bcrep/exactlin.hpp"
#include "bcrep/grp.hpp"
#include "bcrep/random.hpp"

namespace bcrep {

/// Linear representation of a finite group on Q^dim.
struct Rep1 {
    FinGroup group;
    std::size_t dim = 0;
    std::vector<Matrix> rho;

    bool operator==(const Rep1&) const = default;
};

/// REP-SHAPE, REP-IDENTITY and REP-HOM over all pairs.
Violations rep1_violations(const Rep1& r);

/// Basis of {T : T a(g) = b(g) T for all g}, each a b.dim x a.dim matrix.
std::vector<Matrix> intertwiner_space(const Rep1& a, const Rep1& b);

Rep1 trivial_rep1(const FinGroup& g, std::size_t dim);
std::vector<Rat> character(const Rep1& r);
/// g -> u rho(g) u^{-1}.
Rep1 conjugate(const Rep1& r, const Matrix& u);
/// Restriction to an invariant subspace spanned by the columns of basis.
Rep1 restrict_to(const Rep1& r, const Matrix& basis);

/// Every homomorphism from g into the signed permutation matrices of size n.
std::vector<Rep1> signed_permutation_reps(const FinGroup& g, std::size_t n);

/**
 * Representations of dimension 0..dim_max, one per character: signed
 * permutation representations and their restrictions to the kernel of the
 * averaging projector. Sorted by dimension, then character.
 */
std::vector<Rep1> generate_levels(const FinGroup& g, std::size_t dim_max);

/// Integer matrix with entries in [-2, 2] and determinant +-1.
Matrix random_unimodular(std::size_t n, SplitMix64& rng);

}  // namespace bcrep

#endif
