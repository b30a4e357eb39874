#include <doctest.h>

#include "bcrep/rep1cat.hpp"
#include "gen.hpp"

using namespace bcrep;

namespace {

// dim Hom_G(A, B) = (1/|G|) sum_g chi_A(g^{-1}) chi_B(g), computed from traces only.
Rat character_pairing(const Rep1& a, const Rep1& b) {
    const auto ca = character(a), cb = character(b);
    Rat total = 0;
    for (Element g = 0; g < a.group.order(); ++g) total += ca[a.group.inv(g)] * cb[g];
    return total / Rat(static_cast<unsigned long>(a.group.order()));
}

}  // namespace

TEST_SUITE("rep1cat") {

TEST_CASE("intertwiner space examples") {
    const FinGroup z2 = FinGroup::cyclic(2);
    const Rep1 triv = trivial_rep1(z2, 1);
    const Rep1 sign{z2, 1, {Matrix::scalar(1), Matrix::scalar(-1)}};
    const auto b = intertwiner_space(triv, triv);
    REQUIRE(b.size() == 1);
    CHECK(b[0] == Matrix::scalar(1));
    CHECK(intertwiner_space(triv, sign).empty());
    const Rep1 regular{z2, 2, {Matrix::identity(2), Matrix::from_rows({{0, 1}, {1, 0}})}};
    CHECK(intertwiner_space(regular, regular).size() == 2);
}

TEST_CASE("validation") {
    const FinGroup z3 = FinGroup::cyclic(3);
    CHECK(rep1_violations(trivial_rep1(z3, 2)).empty());
    Rep1 bad = trivial_rep1(z3, 1);
    bad.rho[1] = Matrix::scalar(-1);
    CHECK_FALSE(rep1_violations(bad).empty());
}

TEST_CASE("generated levels") {
    // Q-representations up to dimension 3, one per isomorphism class.
    // Z/2: irreps 1, sign          -> 1 + 2 + 3 + 4 = 10 classes with dim 0..3.
    // Z/3: irreps 1, 2-dim         -> 1 + 1 + 2 + 2 = 6.
    // S3:  irreps 1, sign, 2-dim   -> 1 + 2 + 4 + 6 = 13.
    CHECK(generate_levels(FinGroup::cyclic(2), 3).size() == 10);
    CHECK(generate_levels(FinGroup::cyclic(3), 3).size() == 6);
    CHECK(generate_levels(FinGroup::symmetric(3), 3).size() == 13);
    CHECK(generate_levels(FinGroup::trivial(), 3).size() == 4);
    for (const Rep1& r : generate_levels(FinGroup::symmetric(3), 3)) CHECK(rep1_violations(r).empty());
}

TEST_CASE("property: intertwiner dimensions") {
    SplitMix64 rng(61);
    for (const std::string& name : gen::group_names()) {
        const FinGroup g = gen::named_group(name);
        for (int trial = 0; trial < 15; ++trial) {
            const Rep1 a = gen::rep1(rng, g, 3), b = gen::rep1(rng, g, 3);
            const auto basis = intertwiner_space(a, b);
            CHECK(Rat(static_cast<unsigned long>(basis.size())) == character_pairing(a, b));
            for (const Matrix& t : basis)
                for (Element x = 0; x < g.order(); ++x) CHECK(t * a.rho[x] == b.rho[x] * t);
            // The identity intertwines a with itself.
            const auto self = intertwiner_space(a, a);
            Matrix stacked(a.dim * a.dim, self.size());
            for (std::size_t k = 0; k < self.size(); ++k)
                for (std::size_t e = 0; e < a.dim * a.dim; ++e) stacked(e, k) = self[k].entries()[e];
            Matrix id(a.dim * a.dim, 1);
            for (std::size_t i = 0; i < a.dim; ++i) id(i * a.dim + i, 0) = 1;
            CHECK(solve(stacked, id).has_value());
            // Simultaneous base change leaves the dimension alone.
            const Matrix u = gen::invertible(rng, a.dim), v = gen::invertible(rng, b.dim);
            CHECK(intertwiner_space(conjugate(a, u), conjugate(b, v)).size() == basis.size());
        }
    }
}

TEST_CASE("random unimodular matrices") {
    SplitMix64 rng(67);
    for (int i = 0; i < 50; ++i) {
        const std::size_t n = rng.index(5);
        const Matrix m = random_unimodular(n, rng);
        const Rat d = determinant(m);
        CHECK((d == 1 || d == -1));
        for (const Rat& x : m.entries()) CHECK((x >= -2 && x <= 2));
    }
}

}
