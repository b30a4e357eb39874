#ifndef BCREP_GRP_HPP
#define BCREP_GRP_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include "bcrep/error.hpp"

namespace bcrep {

using Element = std::size_t;
using Table = std::vector<std::vector<Element>>;

/// Exhaustive group-axiom check of a multiplication table whose identity is element 0.
Violations check_group_table(const Table& mult);

/// Finite group given by its multiplication table; identity is element 0.
class FinGroup {
public:
    /// Throws ErrorKind::invariant naming the first failed axiom.
    explicit FinGroup(const Table& mult);

    static FinGroup trivial();
    static FinGroup cyclic(std::size_t n);
    /// Permutations of {0..n-1} in lexicographic order; the identity comes first.
    static FinGroup symmetric(std::size_t n);
    static FinGroup direct_product(const FinGroup& a, const FinGroup& b);

    std::size_t order() const noexcept { return order_; }
    Element identity() const noexcept { return 0; }
    Element mul(Element a, Element b) const { return mult_[a * order_ + b]; }
    Element inv(Element a) const { return inverse_[a]; }
    Table table() const;

    /// Greedy generating set: smallest elements not in the subgroup generated so far.
    std::vector<Element> generators() const;

    bool operator==(const FinGroup&) const = default;

private:
    std::size_t order_ = 0;
    std::vector<Element> mult_;
    std::vector<Element> inverse_;
};

/// Product of cyclic groups Z/n_1 x ... x Z/n_k; elements are residue tuples,
/// indexed lexicographically with the first factor most significant.
class FinAbGroup {
public:
    FinAbGroup() = default;
    explicit FinAbGroup(std::vector<std::size_t> invariant_factors);

    const std::vector<std::size_t>& invariant_factors() const noexcept { return factors_; }
    std::size_t order() const noexcept { return order_; }
    std::size_t rank() const noexcept { return factors_.size(); }
    Element zero() const noexcept { return 0; }

    Element add(Element a, Element b) const;
    Element neg(Element a) const;
    std::vector<std::size_t> decode(Element a) const;
    Element encode(const std::vector<std::size_t>& residues) const;
    /// The unit tuple in factor i.
    Element generator(std::size_t i) const;

    bool operator==(const FinAbGroup&) const = default;

private:
    std::vector<std::size_t> factors_;
    std::size_t order_ = 1;
};

/// action[g][a] = g |> a.
using ActionTable = Table;

/// Each g acts additively and bijectively, e acts trivially, and (gh)|>a == g|>(h|>a).
Violations check_action(const FinGroup& pi0, const FinAbGroup& pi1, const ActionTable& action);
ActionTable trivial_action(const FinGroup& pi0, const FinAbGroup& pi1);

/// z(g1,g2,g3) stored flat at (g1*n + g2)*n + g3.
struct Cocycle3 {
    std::size_t n = 0;
    std::vector<Element> table;

    Element operator()(Element g1, Element g2, Element g3) const { return table[(g1 * n + g2) * n + g3]; }
    Element& at(Element g1, Element g2, Element g3) { return table[(g1 * n + g2) * n + g3]; }

    static Cocycle3 zero(std::size_t n) { return {n, std::vector<Element>(n * n * n, 0)}; }
};

/// Normalization (Z-NORM) and the 3-cocycle identity (Z-COCYCLE) over all 4-tuples.
Violations cocycle3_violations(const FinGroup& pi0, const FinAbGroup& pi1, const ActionTable& action,
                               const Cocycle3& z);
bool check_cocycle3(const FinGroup& pi0, const FinAbGroup& pi1, const ActionTable& action, const Cocycle3& z);

/// The cocycle z(a,b,c) = a * floor((b + c) / n) mod m on Z/n with values in Z/m, trivial action.
Cocycle3 cyclic_carry_cocycle(std::size_t n, std::size_t m);

/// Skeletal 2-group: objects pi0, morphisms (a, g) : g -> g, associator (z(g,h,k), ghk).
struct TwoGroupData {
    FinGroup pi0;
    FinAbGroup pi1;
    ActionTable action;
    Cocycle3 z;

    Element act(Element g, Element a) const { return action[g][a]; }
};

using TwoGroupPtr = std::shared_ptr<const TwoGroupData>;

Violations two_group_violations(const TwoGroupData& g);
/// Validates and shares; throws ErrorKind::invariant on the first violation.
TwoGroupPtr make_two_group(FinGroup pi0, FinAbGroup pi1, ActionTable action, Cocycle3 z);

struct Morphism {
    Element a;  // in pi1
    Element g;  // in pi0

    bool operator==(const Morphism&) const = default;
};

Morphism tg_identity(Element g);
/// Composition of parallel automorphisms: addition in pi1.
Morphism tg_compose(const TwoGroupData& G, const Morphism& second, const Morphism& first);
/// (a,g) (x) (a2,g2) = (a + g|>a2, g g2).
Morphism tg_tensor_mor(const TwoGroupData& G, const Morphism& m, const Morphism& m2);
Morphism tg_associator(const TwoGroupData& G, Element g1, Element g2, Element g3);

/**
 * Pentagon and triangle (with trivial unitors) evaluated with tg_compose,
 * tg_tensor_mor and tg_associator, independently of check_cocycle3.
 */
Violations coherence_violations(const TwoGroupData& G);

}  // namespace bcrep

#endif
