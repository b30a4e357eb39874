#include <doctest.h>

#include "bcrep/cohom.hpp"
#include "gen.hpp"

using namespace bcrep;

namespace {

BimodulePtr trivial_line(const FinGroup& g) { return make_bimodule(Bimodule::trivial(g, 1, 1)); }

// Degree-1 and degree-2 coboundaries written out term by term.
Matrix d1_by_hand(const Cochain& mu, Element a, Element b) {
    const Bimodule& m = *mu.bimodule();
    return m.left[a] * mu({b}) - mu({m.group.mul(a, b)}) + mu({a}) * m.right[b];
}

Matrix d2_by_hand(const Cochain& c, Element a, Element b, Element x) {
    const Bimodule& m = *c.bimodule();
    const FinGroup& g = m.group;
    return m.left[a] * c({b, x}) - c({g.mul(a, b), x}) + c({a, g.mul(b, x)}) - c({a, b}) * m.right[x];
}

}  // namespace

TEST_SUITE("cohom") {

TEST_CASE("coboundary examples") {
    const FinGroup z2 = FinGroup::cyclic(2);
    const BimodulePtr m = trivial_line(z2);
    CHECK(coboundary(Cochain::zero(m, 2)).is_zero());
    const Cochain omega(m, 0, {Matrix::scalar(7)});
    CHECK(coboundary(omega).is_zero());
    const Cochain mu(m, 1, {Matrix::scalar(0), Matrix::scalar(Rat(1) / 2)});
    CHECK(coboundary(mu)({1, 1}) == Matrix::scalar(1));
    CHECK_FALSE(is_cocycle(mu));
    CHECK(is_cocycle(Cochain::zero(m, 1)));
}

TEST_CASE("averaging contraction examples") {
    const FinGroup z2 = FinGroup::cyclic(2);
    const BimodulePtr m = trivial_line(z2);
    CHECK(averaging_contraction(Cochain::zero(m, 2)).is_zero());
    const Cochain z(m, 2, {Matrix::scalar(0), Matrix::scalar(0), Matrix::scalar(0), Matrix::scalar(1)});
    const Cochain c = averaging_contraction(z);
    CHECK(c({0}) == Matrix::scalar(0));
    CHECK(c({1}) == Matrix::scalar(Rat(1) / 2));
    CHECK(coboundary(c) == z);
    const Cochain not_cocycle(m, 1, {Matrix::scalar(0), Matrix::scalar(1)});
    CHECK_THROWS_AS(averaging_contraction(not_cocycle), AlgebraError);
    CHECK_THROWS_AS(averaging_contraction(Cochain::zero(m, 0)), AlgebraError);
}

TEST_CASE("cohomologous examples") {
    SplitMix64 rng(23);
    const FinGroup s3 = FinGroup::symmetric(3);
    const BimodulePtr m = gen::bimodule(rng, s3, 2);
    const Cochain c = gen::cochain(rng, m, 2);
    const auto same = cohomologous(c, c);
    REQUIRE(same.has_value());
    CHECK(coboundary(*same).is_zero());

    const Cochain z = coboundary(gen::cochain(rng, m, 1));
    const Cochain shifted = c + z;
    const auto x = cohomologous(shifted, c);
    REQUIRE(x.has_value());
    CHECK(coboundary(*x) == z);

    // Perturb a cocycle at one entry: no longer a cocycle, hence not a coboundary.
    if (m->rows > 0 && m->cols > 0) {
        std::vector<Matrix> v = z.values();
        v[7](0, 0) += 1;
        const Cochain broken(m, 2, v);
        CHECK_FALSE(is_cocycle(broken));
        CHECK_FALSE(cohomologous(broken, Cochain::zero(m, 2)).has_value());
    }
    CHECK_THROWS_AS(cohomologous(Cochain::zero(m, 1), Cochain::zero(m, 2)), AlgebraError);
}

TEST_CASE("bimodule validation") {
    const FinGroup z2 = FinGroup::cyclic(2);
    Bimodule bad = Bimodule::trivial(z2, 1, 1);
    bad.left[1] = Matrix::scalar(2);
    CHECK_FALSE(bimodule_violations(bad).empty());
    CHECK_THROWS_AS(make_bimodule(bad), AlgebraError);
}

TEST_CASE("property: coboundary matches hand expansion and squares to zero") {
    SplitMix64 rng(29);
    for (const std::string& name : gen::group_names()) {
        const FinGroup g = gen::named_group(name);
        for (int trial = 0; trial < 6; ++trial) {
            const BimodulePtr m = gen::bimodule(rng, g, 2);
            const Cochain mu = gen::cochain(rng, m, 1);
            const Cochain c = gen::cochain(rng, m, 2);
            const Cochain dmu = coboundary(mu), dc = coboundary(c);
            for (Element a = 0; a < g.order(); ++a)
                for (Element b = 0; b < g.order(); ++b) {
                    CHECK(dmu({a, b}) == d1_by_hand(mu, a, b));
                    for (Element x = 0; x < g.order(); ++x) CHECK(dc({a, b, x}) == d2_by_hand(c, a, b, x));
                }
            for (std::size_t n = 0; n <= 2; ++n) CHECK(coboundary(coboundary(gen::cochain(rng, m, n))).is_zero());
            // Matrix form agrees with the direct formula.
            const Matrix v = coboundary_matrix(m, 1) * cochain_vector(mu);
            CHECK(cochain_from_vector(m, 2, v) == dmu);
        }
    }
}

TEST_CASE("property: cohomology vanishes in positive degree") {
    SplitMix64 rng(31);
    for (const std::string& name : gen::group_names()) {
        const FinGroup g = gen::named_group(name);
        const BimodulePtr m = gen::bimodule(rng, g, 2);
        for (std::size_t n = 1; n <= 2; ++n) {
            const CohomologyDims d = cohomology_dims(m, n);
            CHECK(d.cochains == power(g.order(), n) * m->rows * m->cols);
            CHECK(d.cohomology() == 0);
        }
        // H^0 is the space of equivariant maps: dim Hom_G(right, left).
        const CohomologyDims d0 = cohomology_dims(m, 0);
        const Rep1 left{g, m->rows, m->left}, right{g, m->cols, m->right};
        CHECK(d0.cohomology() == intertwiner_space(right, left).size());
    }
}

}
