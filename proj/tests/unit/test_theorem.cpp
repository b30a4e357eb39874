#include <doctest.h>

#include "bcrep/theorem.hpp"
#include "gen.hpp"

using namespace bcrep;

namespace {

TwoGroupPtr z2_carry() {
    const FinGroup g = FinGroup::cyclic(2);
    const FinAbGroup a({2});
    return make_two_group(g, a, trivial_action(g, a), cyclic_carry_cocycle(2, 2));
}

}  // namespace

TEST_SUITE("theorem") {

TEST_CASE("functor examples") {
    const TwoGroupPtr g = z2_carry();
    const RepReduced triv = strict_rep(g, {Matrix::scalar(1), Matrix::scalar(1)}, {Matrix::scalar(1), Matrix::scalar(1)});
    const auto [l1, l0] = theorem_functor(triv);
    CHECK(l1 == trivial_rep1(g->pi0, 1));
    CHECK(l0 == trivial_rep1(g->pi0, 1));

    // Two cohomologous c's strictify to the same pair.
    SplitMix64 rng(71);
    const RepReduced r = gen::rep_reduced(rng, g, 2);
    RepReduced r2 = r;
    r2.c = r.c + coboundary(gen::cochain(rng, r.c.bimodule(), 1, true));
    CHECK(validate_rep_reduced(r2).empty());
    const auto s1 = strictify(std::make_shared<const RepReduced>(r)).strict;
    const auto s2 = strictify(std::make_shared<const RepReduced>(r2)).strict;
    CHECK(theorem_functor(s1) == theorem_functor(s2));
    CHECK(theorem_functor(reduce(expand(s1))) == theorem_functor(s1));

    RepReduced nonstrict = triv;
    nonstrict.c = Cochain(nonstrict.c.bimodule(), 2, {Matrix::scalar(0), Matrix::scalar(0), Matrix::scalar(0), Matrix::scalar(1)});
    CHECK_THROWS_AS(theorem_functor(nonstrict), AlgebraError);
}

TEST_CASE("verify_equivalence on the nontrivial Z/2 2-group") {
    const TwoGroupPtr g = z2_carry();
    SplitMix64 rng(42);
    const auto inventory = build_inventory(g, 2, rng);
    CHECK(inventory.size() == 36);
    const EquivalenceReport report = verify_equivalence(g, inventory, 100, 42);
    CHECK(report.all_passed());
    CHECK(report.render() == verify_equivalence(g, inventory, 100, 42).render());
    CHECK(report.render().find("SUMMARY A=PASS B=PASS C=PASS D=PASS PASS") != std::string::npos);
}

TEST_CASE("verify_equivalence on the trivial 2-group") {
    const FinGroup g1 = FinGroup::trivial();
    const FinAbGroup a(std::vector<std::size_t>{});
    const TwoGroupPtr g = make_two_group(g1, a, trivial_action(g1, a), Cocycle3::zero(1));
    SplitMix64 rng(1);
    const EquivalenceReport report = verify_equivalence(g, build_inventory(g, 3, rng), 20, 1);
    CHECK(report.all_passed());
}

TEST_CASE("verify_equivalence fails clause A on a corrupted rho") {
    const TwoGroupPtr g = z2_carry();
    SplitMix64 rng(42);
    auto inventory = build_inventory(g, 1, rng);
    RepReduced bad = inventory.back();
    REQUIRE(bad.n1 == 1);
    bad.rho1[1] = Matrix::scalar(2);
    inventory.push_back(bad);
    const EquivalenceReport report = verify_equivalence(g, inventory, 10, 42);
    CHECK_FALSE(report.passed('A'));
    CHECK(report.passed('B'));
    CHECK_FALSE(report.all_passed());
    CHECK(report.render().find("FAIL RHO1-HOM at (g,h)=(1,1)") != std::string::npos);
}

}
