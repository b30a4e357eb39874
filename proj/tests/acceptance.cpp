// One line per acceptance criterion; exit status is nonzero if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "bcrep/cli.hpp"
#include "bcrep/theorem.hpp"
#include "gen.hpp"

using namespace bcrep;

namespace {

const std::string fixtures = BCREP_FIXTURES;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cli(std::vector<std::string> args, std::string* stdout_text = nullptr) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    if (stdout_text) *stdout_text = out.str() + err.str();
    return code;
}

TwoGroupPtr group_with(const FinGroup& pi0, const FinAbGroup& pi1) {
    return make_two_group(pi0, pi1, trivial_action(pi0, pi1), Cocycle3::zero(pi0.order()));
}

// 1: 2-category axioms of Ch2 on random cells.
Outcome criterion1() {
    Outcome o;
    gen::SplitMix64 rng(101);
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t configs = 0;
    for (; configs < 1200; ++configs) {
        const TwoVect u = gen::complex(rng, 4), v = gen::complex(rng, 4), w = gen::complex(rng, 4), x = gen::complex(rng, 4);
        const OneCell f = gen::one_cell(rng, u, v), f2 = gen::one_cell(rng, v, w), f3 = gen::one_cell(rng, w, x);
        const TwoCell s = gen::two_cell(rng, f), s2 = gen::two_cell(rng, s.dst());
        const TwoCell t = gen::two_cell(rng, f2), t2 = gen::two_cell(rng, t.dst());
        const TwoCell r = gen::two_cell(rng, f3);
        const std::string at = "config " + std::to_string(configs);
        try {
            // Both closed forms of the horizontal composite, computed here from the components.
            const Matrix form_a = t.src().f1() * s.sigma() + t.sigma() * s.dst().f0();
            const Matrix form_b = t.dst().f1() * s.sigma() + t.sigma() * s.src().f0();
            if (form_a != form_b) o.fail(at + ": horizontal composite formulas disagree");
            const TwoCell h = hcomp(t, s);
            if (h.sigma() != form_a) o.fail(at + ": hcomp component differs from the closed form");
            if (!(h.src() == compose1(t.src(), s.src())) || !(h.dst() == compose1(t.dst(), s.dst())))
                o.fail(at + ": hcomp boundary");
            if (!(hcomp(vcomp(t2, t), vcomp(s2, s)) == vcomp(hcomp(t2, s2), hcomp(t, s)))) o.fail(at + ": interchange");
            if (!(compose1(f3, compose1(f2, f)) == compose1(compose1(f3, f2), f))) o.fail(at + ": 1-cell associativity");
            if (!(hcomp(r, hcomp(t, s)) == hcomp(hcomp(r, t), s))) o.fail(at + ": 2-cell horizontal associativity");
            if (!(compose1(identity1(v), f) == f) || !(compose1(f, identity1(u)) == f)) o.fail(at + ": 1-cell units");
            if (!(vcomp(identity2(s.dst()), s) == s) || !(vcomp(s, identity2(f)) == s)) o.fail(at + ": vertical units");
            if (!(hcomp(identity2(identity1(v)), s) == s) || !(hcomp(s, identity2(identity1(u))) == s))
                o.fail(at + ": horizontal units");
            if (!(vcomp(inv2(s), s) == identity2(f))) o.fail(at + ": inverse");
        } catch (const std::exception& e) {
            o.fail(at + ": " + e.what());
        }
    }
    const double secs = seconds_since(t0);
    if (secs >= 10) o.fail("took " + std::to_string(secs) + " s");
    if (o.pass) o.detail = std::to_string(configs) + " configurations, 0 violations, " + std::to_string(secs).substr(0, 4) + " s";
    return o;
}

// 2: equivalent to zero exactly when d is invertible.
Outcome criterion2() {
    Outcome o;
    gen::SplitMix64 rng(202);
    std::size_t invertible = 0, total = 0;
    for (std::size_t n = 0; n <= 4; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            for (std::size_t rep = 0; rep < 40; ++rep, ++total) {
                const TwoVect v(gen::matrix_of_rank(rng, n, n, k));
                const auto w = is_equiv_to_zero(v);
                const bool inv = is_invertible(v.d());
                invertible += inv;
                const std::string at = "n=" + std::to_string(n) + " rank=" + std::to_string(k);
                if (inv != (k == n)) o.fail(at + ": invertibility does not match the rank");
                if (w.has_value() != inv) o.fail(at + ": witness existence does not match invertibility");
                if (w) {
                    // The witness must be a 2-cell 1_V => 0_V: d sigma = -1 and sigma d = -1.
                    const Matrix minus = Rat(-1) * Matrix::identity(n);
                    if (!(w->src() == identity1(v)) || !(w->dst() == zero1(v, v)) || v.d() * w->sigma() != minus ||
                        w->sigma() * v.d() != minus)
                        o.fail(at + ": witness does not validate");
                }
            }
    // Non-square differentials are never invertible.
    for (std::size_t rep = 0; rep < 60; ++rep, ++total) {
        const TwoVect v = gen::complex(rng, 4);
        if (v.dim1() != v.dim0() && is_equiv_to_zero(v)) o.fail("non-square differential reported equivalent to 0");
    }
    if (o.pass) o.detail = std::to_string(total) + " matrices, " + std::to_string(invertible) + " invertible";
    return o;
}

// 3: normalization to a zero differential with validated witnesses.
Outcome criterion3() {
    Outcome o;
    gen::SplitMix64 rng(303);
    std::size_t count = 0;
    for (; count < 250; ++count) {
        const TwoVect v = gen::complex(rng, 5);
        const std::string at = "complex " + std::to_string(count);
        try {
            const Normalization n = normalize(v);
            const std::size_t k = rank(v.d());
            if (!n.normal.d().is_zero()) o.fail(at + ": differential not zero");
            if (n.normal.dim1() != v.dim1() - k || n.normal.dim0() != v.dim0() - k) o.fail(at + ": wrong dimensions");
            if (!(n.to_normal.src() == v) || !(n.from_normal.dst() == v)) o.fail(at + ": witness endpoints");
            if (!(n.unit.src() == compose1(n.from_normal, n.to_normal)) || !(n.unit.dst() == identity1(v)))
                o.fail(at + ": unit boundary");
            if (!(n.counit.src() == compose1(n.to_normal, n.from_normal)) || !(n.counit.dst() == identity1(n.normal)))
                o.fail(at + ": counit boundary");
            // Re-validate the 2-cell equations directly.
            const Matrix& s = n.unit.sigma();
            const OneCell& a = n.unit.src();
            if (v.d() * s != Matrix::identity(v.dim0()) - a.f0() || s * v.d() != Matrix::identity(v.dim1()) - a.f1())
                o.fail(at + ": unit 2-cell equations");
        } catch (const std::exception& e) {
            o.fail(at + ": " + e.what());
        }
    }
    if (o.pass) o.detail = std::to_string(count) + " differentials";
    return o;
}

// 4: the bar complex squares to zero and the averaging contraction inverts it on cocycles.
Outcome criterion4() {
    Outcome o;
    gen::SplitMix64 rng(404);
    std::size_t contractions = 0;
    for (const std::string& name : gen::group_names()) {
        const FinGroup g = gen::named_group(name);
        for (std::size_t degree = 0; degree <= 2; ++degree)
            for (int rep = 0; rep < 10; ++rep) {
                const auto m = gen::bimodule(rng, g, 2);
                if (!coboundary(coboundary(gen::cochain(rng, m, degree))).is_zero())
                    o.fail(name + ": dd != 0 in degree " + std::to_string(degree));
            }
        for (std::size_t degree = 1; degree <= 3; ++degree)
            for (int rep = 0; rep < 100; ++rep, ++contractions) {
                const auto m = gen::bimodule(rng, g, degree == 3 ? 1 : 2);
                const Cochain z = coboundary(gen::cochain(rng, m, degree - 1));
                if (!(coboundary(averaging_contraction(z)) == z))
                    o.fail(name + ": d avg(z) != z in degree " + std::to_string(degree));
            }
    }
    // The hand example: trivial Z/2 action on Q, z(1,1) = 1 gives c(1) = 1/2.
    const FinGroup z2 = FinGroup::cyclic(2);
    const auto q = make_bimodule(Bimodule::trivial(z2, 1, 1));
    Cochain z = Cochain::zero(q, 2);
    std::vector<Matrix> values = z.values();
    values[tuple_index(std::vector<Element>{1, 1}, 2)] = Matrix::scalar(1);
    z = Cochain(q, 2, values);
    const Cochain c = averaging_contraction(z);
    if (!(c({1}) == Matrix::scalar(Rat(1) / 2)) || !(c({0}) == Matrix::scalar(0))) o.fail("hand example c(1) != 1/2");
    if (!(coboundary(c) == z)) o.fail("hand example d c != z");
    if (o.pass) o.detail = std::to_string(contractions) + " contractions, hand example c(1)=1/2";
    return o;
}

// 5: no nonzero equivariant beta over the grid.
Outcome criterion5() {
    Outcome o;
    std::size_t pairs = 0;
    const std::vector<std::pair<std::string, FinAbGroup>> pi1s{
        {"Z/2", FinAbGroup({2})}, {"Z/3", FinAbGroup({3})}, {"Z/2xZ/2", FinAbGroup({2, 2})}};
    for (const std::string& name : gen::group_names()) {
        const FinGroup pi0 = gen::named_group(name);
        const auto levels = generate_levels(pi0, 3);
        for (const auto& [pname, pi1] : pi1s) {
            const TwoGroupPtr g = group_with(pi0, pi1);
            for (const Rep1& a : levels)
                for (const Rep1& b : levels) {
                    ++pairs;
                    const auto space = beta_space(*g, a.rho, b.rho);
                    if (!space.empty())
                        o.fail("pi0=" + name + " pi1=" + pname + " dims (" + std::to_string(a.dim) + "," +
                               std::to_string(b.dim) + "): beta space dimension " + std::to_string(space.size()));
                }
        }
    }
    if (o.pass) o.detail = std::to_string(pairs) + " level pairs, all beta spaces zero";
    return o;
}

std::vector<TwoGroupPtr> sample_groups() {
    std::vector<TwoGroupPtr> out;
    const FinGroup z2 = FinGroup::cyclic(2);
    const FinAbGroup a2({2});
    out.push_back(make_two_group(z2, a2, trivial_action(z2, a2), cyclic_carry_cocycle(2, 2)));
    for (const std::string& name : gen::group_names()) out.push_back(group_with(gen::named_group(name), a2));
    return out;
}

// 6: strictification is an equivalence.
Outcome criterion6() {
    Outcome o;
    gen::SplitMix64 rng(606);
    const auto groups = sample_groups();
    std::size_t count = 0, nonstrict = 0;
    for (; count < 220; ++count) {
        const auto r = std::make_shared<const RepReduced>(gen::rep_reduced(rng, groups[count % groups.size()], 3));
        const std::string at = "rep " + std::to_string(count);
        try {
            nonstrict += !is_strict(*r);
            const Strictification s = strictify(r);
            if (!is_strict(s.strict) || !validate_rep_reduced(s.strict).empty()) o.fail(at + ": strict form invalid");
            if (!validate_inter1(s.forward).empty() || !validate_inter1(s.backward).empty())
                o.fail(at + ": witnesses invalid");
            const auto back_forth = two_iso(compose_inter1(s.backward, s.forward), identity_inter1(r));
            const auto forth_back = two_iso(compose_inter1(s.forward, s.backward), identity_inter1(s.forward.dst));
            if (!back_forth || !validate_inter2(*back_forth).empty()) o.fail(at + ": backward o forward");
            if (!forth_back || !validate_inter2(*forth_back).empty()) o.fail(at + ": forward o backward");
        } catch (const std::exception& e) {
            o.fail(at + ": " + e.what());
        }
    }
    if (o.pass) o.detail = std::to_string(count) + " representations, " + std::to_string(nonstrict) + " non-strict";
    return o;
}

// 7: the equivalence check end to end, with negative controls.
Outcome criterion7() {
    Outcome o;
    double worst = 0;
    for (const char* name : {"z2_z2_nontrivial", "z2_z2_trivial", "z3_z3_trivial", "s3_z2_trivial"}) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string text;
        const int code = cli({"verify-theorem", fixtures + "/" + name + ".json", "--dim-max", "3", "--trials", "100",
                              "--seed", "42"},
                             &text);
        const double secs = seconds_since(t0);
        worst = std::max(worst, secs);
        if (code != 0) o.fail(std::string(name) + ": exit " + std::to_string(code));
        if (text.find("SUMMARY A=PASS B=PASS C=PASS D=PASS PASS") == std::string::npos) o.fail(std::string(name) + ": summary");
        if (secs >= 60) o.fail(std::string(name) + ": took " + std::to_string(secs) + " s");
    }
    struct Negative {
        std::vector<std::string> args;
        std::string witness;
    };
    const std::vector<Negative> negatives{
        {{"verify-theorem", fixtures + "/bad_action_z3.json"}, "ACTION-HOM"},
        {{"verify-theorem", fixtures + "/bad_pi0_table.json"}, "GROUP-"},
        {{"verify-theorem", fixtures + "/bad_z_normalization.json"}, "Z-NORM"},
        {{"verify-theorem", fixtures + "/z2_z2_nontrivial.json", "--trials", "10", "--rep",
          fixtures + "/rep_z2_corrupt_rho.json"},
         "FAIL RHO1-HOM"},
    };
    for (const Negative& n : negatives) {
        std::string text;
        if (cli(n.args, &text) != 1) o.fail("negative control " + n.args[1] + " did not exit 1");
        else if (text.find(n.witness) == std::string::npos) o.fail("negative control " + n.args[1] + " lacks " + n.witness);
    }
    if (o.pass) o.detail = "4 fixtures pass (slowest " + std::to_string(worst).substr(0, 4) + " s), 4 negative controls exit 1";
    return o;
}

// 8: reduce and expand are mutually inverse; reports are deterministic.
Outcome criterion8() {
    Outcome o;
    gen::SplitMix64 rng(808);
    const auto groups = sample_groups();
    std::size_t count = 0;
    for (; count < 150; ++count) {
        const RepReduced r = gen::rep_reduced(rng, groups[count % groups.size()], 3);
        const std::string at = "rep " + std::to_string(count);
        try {
            const RepFull full = expand(r);
            if (!validate_rep_full(full).empty()) o.fail(at + ": expansion invalid");
            if (!(reduce(full) == r)) o.fail(at + ": reduce o expand != id");
            if (!(expand(reduce(full)) == full)) o.fail(at + ": expand o reduce != id");
        } catch (const std::exception& e) {
            o.fail(at + ": " + e.what());
        }
    }
    for (const char* name : {"z2_z2_nontrivial", "z3_z3_carry"}) {
        std::string a, b;
        const std::vector<std::string> args{"verify-theorem", fixtures + "/" + name + ".json", "--seed", "9", "--trials", "30"};
        cli(args, &a);
        cli(args, &b);
        if (a != b || a.empty()) o.fail(std::string(name) + ": reports differ for the same seed");
    }
    if (o.pass) o.detail = std::to_string(count) + " round trips, reports byte-identical";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                         criterion5, criterion6, criterion7, criterion8};
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o.fail(std::string("uncaught: ") + e.what());
        }
        all = all && o.pass;
        std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " (" << o.detail << ")" << std::endl;
    }
    return all ? 0 : 1;
}
