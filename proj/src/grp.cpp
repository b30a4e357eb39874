#include "bcrep/grp.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace bcrep {

Violations check_group_table(const Table& mult) {
    Violations out;
    const std::size_t n = mult.size();
    if (n == 0) {
        out.push_back({"GROUP-EMPTY", ""});
        return out;
    }
    for (std::size_t a = 0; a < n; ++a) {
        if (mult[a].size() != n) {
            out.push_back({"GROUP-SHAPE", tuple_label("row", {a})});
            return out;
        }
        for (Element x : mult[a]) {
            if (x >= n) {
                out.push_back({"GROUP-RANGE", tuple_label("row", {a})});
                return out;
            }
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        if (mult[0][a] != a || mult[a][0] != a) out.push_back({"GROUP-IDENTITY", tuple_label("a", {a})});
    }
    for (std::size_t a = 0; a < n; ++a) {
        bool has_inverse = false;
        for (std::size_t b = 0; b < n && !has_inverse; ++b) has_inverse = mult[a][b] == 0 && mult[b][a] == 0;
        if (!has_inverse) out.push_back({"GROUP-INVERSE", tuple_label("a", {a})});
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (mult[mult[a][b]][c] != mult[a][mult[b][c]])
                    out.push_back({"GROUP-ASSOC", tuple_label("a,b,c", {a, b, c})});
    return out;
}

// ---------------------------------------------------------------------------
// FinGroup

FinGroup::FinGroup(const Table& mult) {
    const Violations v = check_group_table(mult);
    if (!v.empty()) throw AlgebraError(ErrorKind::invariant, "not a group: " + v.front().to_string());
    order_ = mult.size();
    mult_.reserve(order_ * order_);
    for (const auto& row : mult) mult_.insert(mult_.end(), row.begin(), row.end());
    inverse_.resize(order_);
    for (Element a = 0; a < order_; ++a)
        for (Element b = 0; b < order_; ++b)
            if (mul(a, b) == 0) inverse_[a] = b;
}

FinGroup FinGroup::trivial() { return FinGroup(Table{{0}}); }

FinGroup FinGroup::cyclic(std::size_t n) {
    Table t(n, std::vector<Element>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FinGroup(t);
}

FinGroup FinGroup::symmetric(std::size_t n) {
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const std::size_t order = perms.size();
    Table t(order, std::vector<Element>(order));
    for (std::size_t a = 0; a < order; ++a) {
        for (std::size_t b = 0; b < order; ++b) {
            // (a*b)(i) = a(b(i))
            std::vector<std::size_t> c(n);
            for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
            t[a][b] = static_cast<Element>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
        }
    }
    return FinGroup(t);
}

FinGroup FinGroup::direct_product(const FinGroup& a, const FinGroup& b) {
    const std::size_t na = a.order(), nb = b.order();
    Table t(na * nb, std::vector<Element>(na * nb));
    for (std::size_t x = 0; x < na * nb; ++x)
        for (std::size_t y = 0; y < na * nb; ++y)
            t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    return FinGroup(t);
}

Table FinGroup::table() const {
    Table t(order_, std::vector<Element>(order_));
    for (Element a = 0; a < order_; ++a)
        for (Element b = 0; b < order_; ++b) t[a][b] = mul(a, b);
    return t;
}

std::vector<Element> FinGroup::generators() const {
    std::vector<Element> gens;
    std::vector<bool> in_subgroup(order_, false);
    in_subgroup[0] = true;
    for (Element candidate = 1; candidate < order_; ++candidate) {
        if (in_subgroup[candidate]) continue;
        gens.push_back(candidate);
        // Closure of the current subgroup under right multiplication by all generators.
        std::vector<Element> frontier;
        for (Element x = 0; x < order_; ++x)
            if (in_subgroup[x]) frontier.push_back(x);
        while (!frontier.empty()) {
            const Element x = frontier.back();
            frontier.pop_back();
            for (Element s : gens) {
                const Element y = mul(x, s);
                if (!in_subgroup[y]) {
                    in_subgroup[y] = true;
                    frontier.push_back(y);
                }
            }
        }
    }
    return gens;
}

// ---------------------------------------------------------------------------
// FinAbGroup

FinAbGroup::FinAbGroup(std::vector<std::size_t> invariant_factors) : factors_(std::move(invariant_factors)) {
    order_ = 1;
    for (std::size_t f : factors_) {
        if (f < 2) throw AlgebraError(ErrorKind::invariant, "invariant factors must be >= 2");
        order_ *= f;
    }
}

std::vector<std::size_t> FinAbGroup::decode(Element a) const {
    if (a >= order_) throw AlgebraError(ErrorKind::shape, "pi1 element out of range");
    std::vector<std::size_t> r(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
        r[i] = a % factors_[i];
        a /= factors_[i];
    }
    return r;
}

Element FinAbGroup::encode(const std::vector<std::size_t>& residues) const {
    if (residues.size() != factors_.size()) throw AlgebraError(ErrorKind::shape, "pi1 tuple length");
    Element a = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (residues[i] >= factors_[i]) throw AlgebraError(ErrorKind::invariant, "pi1 residue out of range");
        a = a * factors_[i] + residues[i];
    }
    return a;
}

Element FinAbGroup::add(Element a, Element b) const {
    auto x = decode(a);
    const auto y = decode(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % factors_[i];
    return encode(x);
}

Element FinAbGroup::neg(Element a) const {
    auto x = decode(a);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (factors_[i] - x[i]) % factors_[i];
    return encode(x);
}

Element FinAbGroup::generator(std::size_t i) const {
    std::vector<std::size_t> r(factors_.size(), 0);
    r.at(i) = 1;
    return encode(r);
}

// ---------------------------------------------------------------------------
// Actions and cocycles

Violations check_action(const FinGroup& pi0, const FinAbGroup& pi1, const ActionTable& action) {
    Violations out;
    const std::size_t n = pi0.order(), m = pi1.order();
    if (action.size() != n) {
        out.push_back({"ACTION-SHAPE", "expected " + std::to_string(n) + " rows"});
        return out;
    }
    for (Element g = 0; g < n; ++g) {
        if (action[g].size() != m) {
            out.push_back({"ACTION-SHAPE", tuple_label("g", {g})});
            return out;
        }
        for (Element x : action[g]) {
            if (x >= m) {
                out.push_back({"ACTION-RANGE", tuple_label("g", {g})});
                return out;
            }
        }
    }
    for (Element a = 0; a < m; ++a)
        if (action[0][a] != a) out.push_back({"ACTION-IDENTITY", tuple_label("a", {a})});
    for (Element g = 0; g < n; ++g) {
        std::vector<bool> hit(m, false);
        for (Element a = 0; a < m; ++a) hit[action[g][a]] = true;
        if (std::find(hit.begin(), hit.end(), false) != hit.end()) out.push_back({"ACTION-BIJECTIVE", tuple_label("g", {g})});
        for (Element a = 0; a < m; ++a)
            for (Element b = 0; b < m; ++b)
                if (action[g][pi1.add(a, b)] != pi1.add(action[g][a], action[g][b]))
                    out.push_back({"ACTION-ADDITIVE", tuple_label("g,a,b", {g, a, b})});
    }
    for (Element g = 0; g < n; ++g)
        for (Element h = 0; h < n; ++h)
            for (Element a = 0; a < m; ++a)
                if (action[pi0.mul(g, h)][a] != action[g][action[h][a]])
                    out.push_back({"ACTION-HOM", tuple_label("g,h,a", {g, h, a})});
    return out;
}

ActionTable trivial_action(const FinGroup& pi0, const FinAbGroup& pi1) {
    std::vector<Element> row(pi1.order());
    std::iota(row.begin(), row.end(), 0);
    return ActionTable(pi0.order(), row);
}

Violations cocycle3_violations(const FinGroup& pi0, const FinAbGroup& pi1, const ActionTable& action,
                               const Cocycle3& z) {
    const std::size_t n = pi0.order();
    if (z.n != n || z.table.size() != n * n * n) throw AlgebraError(ErrorKind::shape, "z table size");
    if (action.size() != n) throw AlgebraError(ErrorKind::shape, "action table size");
    for (Element x : z.table)
        if (x >= pi1.order()) throw AlgebraError(ErrorKind::shape, "z value out of range");
    Violations out;
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c)
                if ((a == 0 || b == 0 || c == 0) && z(a, b, c) != 0)
                    out.push_back({"Z-NORM", tuple_label("g1,g2,g3", {a, b, c})});
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c)
                for (Element d = 0; d < n; ++d) {
                    // a|>z(b,c,d) - z(ab,c,d) + z(a,bc,d) - z(a,b,cd) + z(a,b,c)
                    Element s = action[a][z(b, c, d)];
                    s = pi1.add(s, pi1.neg(z(pi0.mul(a, b), c, d)));
                    s = pi1.add(s, z(a, pi0.mul(b, c), d));
                    s = pi1.add(s, pi1.neg(z(a, b, pi0.mul(c, d))));
                    s = pi1.add(s, z(a, b, c));
                    if (s != 0) out.push_back({"Z-COCYCLE", tuple_label("g1,g2,g3,g4", {a, b, c, d})});
                }
    return out;
}

bool check_cocycle3(const FinGroup& pi0, const FinAbGroup& pi1, const ActionTable& action, const Cocycle3& z) {
    return cocycle3_violations(pi0, pi1, action, z).empty();
}

Cocycle3 cyclic_carry_cocycle(std::size_t n, std::size_t m) {
    Cocycle3 z = Cocycle3::zero(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) z.at(a, b, c) = (a * ((b + c) / n)) % m;
    return z;
}

Violations two_group_violations(const TwoGroupData& g) {
    Violations out = check_action(g.pi0, g.pi1, g.action);
    if (!out.empty()) return out;
    return cocycle3_violations(g.pi0, g.pi1, g.action, g.z);
}

TwoGroupPtr make_two_group(FinGroup pi0, FinAbGroup pi1, ActionTable action, Cocycle3 z) {
    auto g = std::make_shared<TwoGroupData>(TwoGroupData{std::move(pi0), std::move(pi1), std::move(action), std::move(z)});
    const Violations v = two_group_violations(*g);
    if (!v.empty()) throw AlgebraError(ErrorKind::invariant, "invalid 2-group: " + v.front().to_string());
    return g;
}

// ---------------------------------------------------------------------------
// Skeletal model

Morphism tg_identity(Element g) { return {0, g}; }

Morphism tg_compose(const TwoGroupData& G, const Morphism& second, const Morphism& first) {
    if (first.g != second.g) throw AlgebraError(ErrorKind::composition, "morphisms of a skeletal 2-group are automorphisms");
    return {G.pi1.add(second.a, first.a), first.g};
}

Morphism tg_tensor_mor(const TwoGroupData& G, const Morphism& m, const Morphism& m2) {
    return {G.pi1.add(m.a, G.act(m.g, m2.a)), G.pi0.mul(m.g, m2.g)};
}

Morphism tg_associator(const TwoGroupData& G, Element g1, Element g2, Element g3) {
    return {G.z(g1, g2, g3), G.pi0.mul(G.pi0.mul(g1, g2), g3)};
}

Violations coherence_violations(const TwoGroupData& G) {
    Violations out;
    const std::size_t n = G.pi0.order();
    const auto& p = G.pi0;
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c)
                for (Element d = 0; d < n; ++d) {
                    // ((ab)c)d -> (ab)(cd) -> a(b(cd))
                    const Morphism lhs = tg_compose(G, tg_associator(G, a, b, p.mul(c, d)),
                                                    tg_associator(G, p.mul(a, b), c, d));
                    // ((ab)c)d -> (a(bc))d -> a((bc)d) -> a(b(cd))
                    const Morphism step1 = tg_tensor_mor(G, tg_associator(G, a, b, c), tg_identity(d));
                    const Morphism step2 = tg_associator(G, a, p.mul(b, c), d);
                    const Morphism step3 = tg_tensor_mor(G, tg_identity(a), tg_associator(G, b, c, d));
                    const Morphism rhs = tg_compose(G, step3, tg_compose(G, step2, step1));
                    if (!(lhs == rhs)) out.push_back({"PENTAGON", tuple_label("g1,g2,g3,g4", {a, b, c, d})});
                }
    // Trivial unitors: (1_a (x) lambda_b) o alpha_{a,e,b} = rho_a (x) 1_b, i.e. alpha_{a,e,b} is an identity.
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            const Morphism lhs = tg_compose(G, tg_tensor_mor(G, tg_identity(a), tg_identity(b)), tg_associator(G, a, 0, b));
            if (!(lhs == tg_identity(p.mul(a, b)))) out.push_back({"TRIANGLE", tuple_label("a,b", {a, b})});
        }
    return out;
}

}  // namespace bcrep
