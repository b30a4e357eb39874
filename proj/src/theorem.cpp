#include "bcrep/theorem.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <sstream>

namespace bcrep {

std::pair<Rep1, Rep1> theorem_functor(const RepReduced& r) {
    if (!is_strict(r)) throw AlgebraError(ErrorKind::strictify_first, "theorem_functor needs a strict representation");
    const FinGroup& g = r.group->pi0;
    return {Rep1{g, r.n1, r.rho1}, Rep1{g, r.n0, r.rho0}};
}

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, SplitMix64& rng) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<long>(rng.uniform(-2, 2));
    return m;
}

Matrix random_combination(const std::vector<Matrix>& basis, std::size_t rows, std::size_t cols, SplitMix64& rng) {
    Matrix m(rows, cols);
    for (const Matrix& b : basis) m += Rat(static_cast<long>(rng.uniform(-2, 2))) * b;
    return m;
}

std::optional<Inter1> lift(const RepPtr& u, const RepPtr& v, const Matrix& r1, const Matrix& r0) {
    auto bimodule = level_bimodule(*u, *v);
    std::vector<Matrix> target;
    for (std::size_t k = 0; k < u->c.values().size(); ++k) target.push_back(r1 * u->c.at(k) - v->c.at(k) * r0);
    const auto x = cohomologous(Cochain(bimodule, 2, std::move(target)), Cochain::zero(bimodule, 2));
    if (!x) return std::nullopt;
    return Inter1{u, v, r1, r0, Cochain(bimodule, 1, x->values())};
}

std::string first(const Violations& v) { return v.empty() ? std::string() : v.front().to_string(); }

}  // namespace

std::vector<RepReduced> build_inventory(const TwoGroupPtr& g, std::size_t dim_max, SplitMix64& rng,
                                        std::size_t max_items) {
    std::vector<Rep1> levels;
    for (const Rep1& r : generate_levels(g->pi0, dim_max)) levels.push_back(conjugate(r, random_unimodular(r.dim, rng)));

    // The diagonal pairs keep every level in the inventory; off-diagonal pairs are sampled.
    std::vector<std::pair<std::size_t, std::size_t>> pairs, rest;
    for (std::size_t i = 0; i < levels.size(); ++i)
        for (std::size_t j = 0; j < levels.size(); ++j) (i == j ? pairs : rest).emplace_back(i, j);
    for (std::size_t k = rest.size(); k > 1; --k) std::swap(rest[k - 1], rest[rng.index(k)]);
    const std::size_t room = max_items > pairs.size() ? max_items - pairs.size() : 0;
    if (rest.size() > room) rest.resize(room);
    pairs.insert(pairs.end(), rest.begin(), rest.end());
    std::sort(pairs.begin(), pairs.end());

    std::vector<RepReduced> out;
    const std::size_t n = g->pi0.order();
    for (const auto& [i, j] : pairs) {
        RepReduced r = strict_rep(g, levels[i].rho, levels[j].rho);
        if (rng.index(4) != 0) {
            std::vector<Matrix> x(n, Matrix(r.n1, r.n0));
            for (std::size_t a = 1; a < n; ++a) x[a] = random_matrix(r.n1, r.n0, rng);
            r.c = coboundary(Cochain(r.c.bimodule(), 1, std::move(x)));
        }
        out.push_back(std::move(r));
    }
    return out;
}

bool EquivalenceReport::passed(char clause) const {
    bool seen = false;
    for (const ClauseLine& l : lines) {
        if (l.clause != clause) continue;
        seen = true;
        if (!l.pass) return false;
    }
    return seen;
}

bool EquivalenceReport::all_passed() const {
    return passed('A') && passed('B') && passed('C') && passed('D');
}

std::string EquivalenceReport::render() const {
    std::ostringstream os;
    os << "verify-theorem seed=" << seed << " trials=" << trials << '\n';
    for (const ClauseLine& l : lines) {
        os << l.clause << ' ' << l.instance << ' ' << (l.pass ? "PASS" : "FAIL");
        if (!l.witness.empty()) os << ' ' << l.witness;
        os << '\n';
    }
    os << "SUMMARY";
    for (char c : {'A', 'B', 'C', 'D'}) os << ' ' << c << '=' << (passed(c) ? "PASS" : "FAIL");
    os << ' ' << (all_passed() ? "PASS" : "FAIL") << '\n';
    return os.str();
}

EquivalenceReport verify_equivalence(const TwoGroupPtr& g, const std::vector<RepReduced>& inventory,
                                     std::size_t trials, std::uint64_t seed) {
    EquivalenceReport report{seed, trials, {}};
    SplitMix64 rng(seed);
    auto push = [&](char clause, std::string instance, bool pass, std::string witness) {
        report.lines.push_back({clause, std::move(instance), pass, std::move(witness)});
    };
    auto item_name = [&](std::size_t k) {
        return "item[" + std::to_string(k) + "](" + std::to_string(inventory[k].n1) + "," +
               std::to_string(inventory[k].n0) + ")";
    };

    // A: essential surjectivity.
    std::vector<RepPtr> valid;
    std::vector<std::size_t> valid_index;
    std::vector<Rep1> levels;
    auto add_level = [&](Rep1 r) {
        if (std::find(levels.begin(), levels.end(), r) == levels.end()) levels.push_back(std::move(r));
    };
    for (std::size_t k = 0; k < inventory.size(); ++k) {
        const RepReduced& r = inventory[k];
        Violations v;
        if (!r.group || !(r.group->pi0 == g->pi0) || !(r.group->pi1 == g->pi1) || r.group->action != g->action ||
            r.group->z.table != g->z.table) {
            v.push_back({"GROUP", "item is over a different 2-group"});
        } else {
            v = validate_rep_reduced(r);
        }
        if (v.empty()) {
            valid.push_back(std::make_shared<const RepReduced>(r));
            valid_index.push_back(k);
        }
        if (r.group && r.rho1.size() == g->pi0.order() && r.rho0.size() == g->pi0.order()) {
            add_level(Rep1{g->pi0, r.n1, r.rho1});
            add_level(Rep1{g->pi0, r.n0, r.rho0});
        }
        push('A', item_name(k), v.empty(), first(v));
    }
    {
        std::string witness;
        std::size_t count = 0;
        for (std::size_t i = 0; i < levels.size() && witness.empty(); ++i)
            for (std::size_t j = 0; j < levels.size() && witness.empty(); ++j) {
                ++count;
                const std::string where = "pair(" + std::to_string(i) + "," + std::to_string(j) + ")";
                try {
                    const RepReduced s = strict_rep(g, levels[i].rho, levels[j].rho);
                    const Violations v = validate_rep_reduced(s);
                    if (!v.empty()) witness = where + " " + first(v);
                    else if (!(theorem_functor(s) == std::make_pair(levels[i], levels[j])))
                        witness = where + " functor image differs";
                } catch (const AlgebraError& e) {
                    witness = where + " " + e.what();
                }
            }
        push('A', "level-pairs(" + std::to_string(levels.size() * levels.size()) + ")", witness.empty(), witness);
    }

    // B and C: fullness and faithfulness on random hom-classes.
    if (valid.empty()) {
        push('B', "trials", false, "no valid inventory items");
        push('C', "trials", false, "no valid inventory items");
    }
    const FinGroup& pi0 = g->pi0;
    for (std::size_t trial = 0; trial < trials && !valid.empty(); ++trial) {
        const std::size_t i = rng.index(valid.size()), j = rng.index(valid.size());
        const RepPtr& u = valid[i];
        const RepPtr& v = valid[j];
        const std::string name = "trial[" + std::to_string(trial) + "](" + std::to_string(valid_index[i]) + "->" +
                                 std::to_string(valid_index[j]) + ")";
        std::optional<Inter1> t;
        std::vector<Matrix> basis1, basis0;
        try {
            basis1 = intertwiner_space(Rep1{pi0, u->n1, u->rho1}, Rep1{pi0, v->n1, v->rho1});
            basis0 = intertwiner_space(Rep1{pi0, u->n0, u->rho0}, Rep1{pi0, v->n0, v->rho0});
            const Matrix r1 = random_combination(basis1, v->n1, u->n1, rng);
            const Matrix r0 = random_combination(basis0, v->n0, u->n0, rng);
            t = lift(u, v, r1, r0);
            if (!t) {
                push('B', name, false, "intertwiner pair has no lift");
            } else {
                const Violations bad = validate_inter1(*t);
                push('B', name, bad.empty(), first(bad));
                if (!bad.empty()) t.reset();
            }
        } catch (const AlgebraError& e) {
            push('B', name, false, e.what());
        }
        if (!t) {
            push('C', name, false, "no 1-intertwiner to compare");
            continue;
        }
        try {
            std::string witness;
            // Same pair, shifted by d omega: must be 2-isomorphic.
            auto bimodule = level_bimodule(*u, *v);
            const Matrix omega = random_matrix(v->n1, u->n0, rng);
            Inter1 shifted{u, v, t->r1, t->r0, t->mu + coboundary(Cochain(bimodule, 0, {omega}))};
            if (const Violations bad = validate_inter1(shifted); !bad.empty()) witness = "shifted lift: " + first(bad);
            else if (const auto w = two_iso(*t, shifted); !w) witness = "same pair not 2-isomorphic";
            else if (const Violations bad2 = validate_inter2(*w); !bad2.empty()) witness = "witness: " + first(bad2);

            // A different pair: must not be 2-isomorphic.
            if (witness.empty() && (!basis1.empty() || !basis0.empty())) {
                const std::size_t pick = rng.index(basis1.size() + basis0.size());
                Matrix r1 = t->r1, r0 = t->r0;
                if (pick < basis1.size()) r1 += basis1[pick];
                else r0 += basis0[pick - basis1.size()];
                const auto other = lift(u, v, r1, r0);
                if (!other) witness = "second pair has no lift";
                else if (two_iso(*t, *other)) witness = "different pairs 2-isomorphic";
            }

            // Conjugated through strictifications: must match the canonical representative.
            if (witness.empty()) {
                const Strictification su = strictify(u);
                const Strictification sv = strictify(v);
                const Inter1 through = compose_inter1(sv.forward, compose_inter1(*t, su.backward));
                const Inter1 canon = canonical_inter1(su.backward.src, sv.forward.dst, t->r1, t->r0);
                if (!two_iso(through, canon)) witness = "strictified lift differs from canonical representative";
            }
            push('C', name, witness.empty(), witness);
        } catch (const AlgebraError& e) {
            push('C', name, false, e.what());
        }
    }

    // D: beta vanishes.
    for (std::size_t k = 0; k < inventory.size(); ++k) {
        const RepReduced& r = inventory[k];
        std::string witness;
        for (std::size_t i = 0; i < r.beta.size() && witness.empty(); ++i)
            if (!r.beta[i].is_zero()) witness = "beta nonzero on generator " + std::to_string(i);
        if (witness.empty()) {
            try {
                const auto space = beta_space(*g, r.rho1, r.rho0);
                if (!space.empty()) witness = "equivariant beta space has dimension " + std::to_string(space.size());
            } catch (const std::exception& e) {
                witness = e.what();
            }
        }
        push('D', item_name(k), witness.empty(), witness);
    }
    return report;
}

}  // namespace bcrep
