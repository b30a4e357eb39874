#ifndef BCREP_COHOM_HPP
#define BCREP_COHOM_HPP

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "bcrep/exactlin.hpp"
#include "bcrep/grp.hpp"

namespace bcrep {

/**
 * Matrices of shape rows x cols with g . v . h = left[g] * v * right[h].
 *
 * For intertwiners between representations U and V this is Hom(U0, V1) with
 * left = rho1 of V and right = rho0 of U.
 */
struct Bimodule {
    FinGroup group;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Matrix> left;
    std::vector<Matrix> right;

    static Bimodule trivial(const FinGroup& group, std::size_t rows, std::size_t cols);

    Matrix act_left(Element g, const Matrix& v) const { return left[g] * v; }
    Matrix act_right(const Matrix& v, Element h) const { return v * right[h]; }
    bool operator==(const Bimodule&) const = default;
};

using BimodulePtr = std::shared_ptr<const Bimodule>;

Violations bimodule_violations(const Bimodule& m);
/// Validates and shares; throws ErrorKind::invariant.
BimodulePtr make_bimodule(Bimodule m);

/// Flat index of (g1, ..., gn), g1 most significant.
std::size_t tuple_index(std::span<const Element> args, std::size_t order);
std::vector<Element> index_tuple(std::size_t index, std::size_t degree, std::size_t order);
std::size_t power(std::size_t base, std::size_t exp);

/// Function G^n -> bimodule carrier. Degree 0 holds a single matrix.
class Cochain {
public:
    Cochain(BimodulePtr bimodule, std::size_t degree, std::vector<Matrix> values);

    static Cochain zero(BimodulePtr bimodule, std::size_t degree);

    std::size_t degree() const noexcept { return degree_; }
    const BimodulePtr& bimodule() const noexcept { return bimodule_; }
    const FinGroup& group() const noexcept { return bimodule_->group; }
    const std::vector<Matrix>& values() const noexcept { return values_; }

    const Matrix& operator()(std::span<const Element> args) const;
    const Matrix& operator()(std::initializer_list<Element> args) const;
    const Matrix& at(std::size_t flat) const { return values_[flat]; }

    bool is_zero() const;
    /// Vanishes whenever some argument is the identity.
    bool is_normalized() const;

    Cochain& operator+=(const Cochain& other);
    Cochain& operator-=(const Cochain& other);
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    friend Cochain operator*(const Rat& s, Cochain c);
    friend Cochain operator-(Cochain c) { return Rat(-1) * std::move(c); }

    /// Same degree, same bimodule value, same entries.
    bool operator==(const Cochain& other) const;

private:
    BimodulePtr bimodule_;
    std::size_t degree_;
    std::vector<Matrix> values_;
};

/**
 * Bar differential:
 *   (dc)(g1..g_{n+1}) = g1 . c(g2..) + sum_i (-1)^i c(.., g_i g_{i+1}, ..) + (-1)^{n+1} c(g1..g_n) . g_{n+1}.
 * In degree 1: (d mu)(a,b) = a . mu(b) - mu(ab) + mu(a) . b.
 */
Cochain coboundary(const Cochain& c);
bool is_cocycle(const Cochain& c);

/**
 * c(g1..g_{n-1}) = ((-1)^n / |G|) sum_k z(g1..g_{n-1}, k) . k^{-1}.
 *
 * Division by |G| is exact because the coefficients are rational; this is the
 * only place characteristic zero is used. Throws ErrorKind::not_cocycle for
 * non-cocycles and verifies coboundary(result) == z before returning.
 */
Cochain averaging_contraction(const Cochain& z);

/// Matrix of the coboundary C^n -> C^{n+1} in the coordinates of cochain_vector.
Matrix coboundary_matrix(const BimodulePtr& m, std::size_t degree);
Matrix cochain_vector(const Cochain& c);
Cochain cochain_from_vector(const BimodulePtr& m, std::size_t degree, const Matrix& v);

/// Some x with coboundary(x) == c1 - c2 from an exact linear solve, or nullopt.
std::optional<Cochain> cohomologous(const Cochain& c1, const Cochain& c2);

struct CohomologyDims {
    std::size_t cochains = 0;
    std::size_t cocycles = 0;
    std::size_t coboundaries = 0;
    std::size_t cohomology() const { return cocycles - coboundaries; }
};

/// Dimensions of C^n, Z^n, B^n computed from ranks of coboundary matrices.
CohomologyDims cohomology_dims(const BimodulePtr& m, std::size_t degree);

}  // namespace bcrep

#endif
