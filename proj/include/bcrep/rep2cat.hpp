#ifndef BCREP_REP2CAT_HPP
#define BCREP_REP2CAT_HPP

#include <memory>
#include <optional>
#include <vector>

#include "bcrep/ch2cat.hpp"
#include "bcrep/cohom.hpp"
#include "bcrep/grp.hpp"

namespace bcrep {

/**
 * Representation of a skeletal 2-group on a two-term complex, fully unpacked.
 *
 * tau_mor is indexed by the morphism (x, g) : g -> g at g * |pi1| + x and
 * tau_tens by (a, b) at a * |pi0| + b. All tau values are maps V0 -> V1.
 */
struct RepFull {
    TwoGroupPtr group;
    TwoVect space;
    std::vector<Matrix> f1;  // f^a_1 per object a
    std::vector<Matrix> f0;  // f^a_0 per object a
    std::vector<Matrix> tau_mor;
    std::vector<Matrix> tau_tens;
    Matrix tau_e;

    const Matrix& tau(const Morphism& m) const { return tau_mor[m.g * group->pi1.order() + m.a]; }
    const Matrix& tau(Element a, Element b) const { return tau_tens[a * group->pi0.order() + b]; }

    bool operator==(const RepFull& other) const;
};

/// Every item of (O2)-(O5) and every instance of (AO1)-(AO5), exhaustively.
Violations validate_rep_full(const RepFull& r);

/// Moves a nonzero tau_e into tau_tens by the coboundary of the constant 1-cochain tau_e,
/// leaving tau_e = 0. Identity on data that already has tau_e = 0.
RepFull canonicalize(const RepFull& r);

/**
 * Reduced representation on a zero-differential complex (dims n1 -> n0).
 *
 * rho1, rho0 are representations of pi0; beta holds the image of each
 * generator of pi1 (extended additively); c is a normalized 2-cochain in the
 * bimodule Hom(V0, V1) with left action rho1 and right action rho0.
 */
struct RepReduced {
    TwoGroupPtr group;
    std::size_t n1 = 0;
    std::size_t n0 = 0;
    std::vector<Matrix> rho1;
    std::vector<Matrix> rho0;
    std::vector<Matrix> beta;
    Cochain c;

    bool operator==(const RepReduced& other) const;
};

using RepPtr = std::shared_ptr<const RepReduced>;

/// Bimodule Hom(U0, V1) with left action V.rho1 and right action U.rho0.
BimodulePtr hom_bimodule(const FinGroup& pi0, const std::vector<Matrix>& left, std::size_t rows,
                         const std::vector<Matrix>& right, std::size_t cols);
BimodulePtr level_bimodule(const RepReduced& src, const RepReduced& dst);

/// Builds the c cochain over the rep's own bimodule; no validation beyond shapes.
RepReduced make_rep_reduced(TwoGroupPtr group, std::vector<Matrix> rho1, std::vector<Matrix> rho0,
                            std::vector<Matrix> beta, std::vector<Matrix> c_values);
/// (rho1, rho0, 0, 0).
RepReduced strict_rep(TwoGroupPtr group, std::vector<Matrix> rho1, std::vector<Matrix> rho0);

/// beta(x) = sum_i x_i beta_i for a residue tuple x.
Matrix beta_value(const RepReduced& r, Element x);

/// The 3-cochain that the unpacked associator axiom forces dc to equal:
/// (a,b,c) -> -rho1(abc) beta(z(a,b,c)). Vanishes when beta = 0.
Cochain beta_pushforward(const RepReduced& r);

/// Homomorphism, equivariance, normalization and dc = beta_pushforward checks.
Violations validate_rep_reduced(const RepReduced& r);
bool is_strict(const RepReduced& r);

/// tau_(x,g) = rho1(g) beta(x), tau_(a,b) = c(a,b), tau_e = 0.
RepFull expand(const RepReduced& r);
/// Requires zero differential and a valid representation; canonicalizes first.
RepReduced reduce(const RepFull& r);

/// Basis of pi0-equivariant homomorphisms pi1 -> Hom(V0, V1), each basis element
/// given by its values on the generators of pi1.
std::vector<std::vector<Matrix>> beta_space(const TwoGroupData& G, const std::vector<Matrix>& rho1,
                                            const std::vector<Matrix>& rho0);

/// 1-intertwiner (r1, r0, mu) : src -> dst; mu lives in level_bimodule(src, dst).
struct Inter1 {
    RepPtr src;
    RepPtr dst;
    Matrix r1;
    Matrix r0;
    Cochain mu;
};

/// 2-intertwiner omega : U0 -> V1 between parallel 1-intertwiners.
struct Inter2 {
    Inter1 src;
    Inter1 dst;
    Matrix omega;
};

/// (I1), (I2) and (AI1)-(AI3) for data between two unpacked representations.
Violations validate_inter_full(const RepFull& u, const RepFull& v, const Matrix& r1, const Matrix& r0,
                               const std::vector<Matrix>& mu);
Violations validate_inter1(const Inter1& t);
/// The two component equations and (A2I) for all a in pi0.
Violations validate_inter2(const Inter2& w);

Inter1 identity_inter1(const RepPtr& r);
/// s after t.
Inter1 compose_inter1(const Inter1& s, const Inter1& t);

/// Witness omega with nu - mu = d omega (the (A2I) axiom rearranged) when r = s componentwise.
std::optional<Inter2> two_iso(const Inter1& t, const Inter1& s);

struct Strictification {
    RepReduced strict;
    Inter1 forward;   // R -> S, (1, 1, averaging_contraction(c))
    Inter1 backward;  // S -> R, (1, 1, -averaging_contraction(c))
};

Strictification strictify(const RepPtr& r);

/// Intertwiner-space bases of the two levels between strict representations.
struct HomClasses {
    std::vector<Matrix> level1;
    std::vector<Matrix> level0;
};

HomClasses hom_classes(const RepReduced& r, const RepReduced& r2);
/// The representative (r1, r0, 0) of the class over (r1, r0); requires strict endpoints.
Inter1 canonical_inter1(const RepPtr& r, const RepPtr& r2, const Matrix& r1, const Matrix& r0);

}  // namespace bcrep

#endif
