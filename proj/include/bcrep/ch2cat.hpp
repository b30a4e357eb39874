#ifndef BCREP_CH2CAT_HPP
#define BCREP_CH2CAT_HPP

#include <optional>

#include "bcrep/exactlin.hpp"

namespace bcrep {

/// A two-term complex d : V1 -> V0 (dim V1 = d.cols(), dim V0 = d.rows()).
class TwoVect {
public:
    TwoVect() = default;
    explicit TwoVect(Matrix d) : d_(std::move(d)) {}

    /// The complex with zero differential between spaces of the given dimensions.
    static TwoVect zero_differential(std::size_t dim1, std::size_t dim0) { return TwoVect(Matrix(dim0, dim1)); }

    const Matrix& d() const noexcept { return d_; }
    std::size_t dim1() const noexcept { return d_.cols(); }
    std::size_t dim0() const noexcept { return d_.rows(); }

    bool operator==(const TwoVect&) const = default;

private:
    Matrix d_;
};

/// Commutative square (f1, f0) : V -> W with f0 * d_V == d_W * f1. Validated on construction.
class OneCell {
public:
    OneCell(TwoVect src, TwoVect dst, Matrix f1, Matrix f0);

    const TwoVect& src() const noexcept { return src_; }
    const TwoVect& dst() const noexcept { return dst_; }
    const Matrix& f1() const noexcept { return f1_; }
    const Matrix& f0() const noexcept { return f0_; }

    bool operator==(const OneCell&) const = default;

private:
    TwoVect src_;
    TwoVect dst_;
    Matrix f1_;
    Matrix f0_;
};

/**
 * A homotopy sigma : V0 -> W1 from f to g, both V -> W, with
 *   d_W * sigma == g0 - f0   and   sigma * d_V == g1 - f1.
 */
class TwoCell {
public:
    TwoCell(OneCell src, OneCell dst, Matrix sigma);

    const OneCell& src() const noexcept { return src_; }
    const OneCell& dst() const noexcept { return dst_; }
    const Matrix& sigma() const noexcept { return sigma_; }

    bool operator==(const TwoCell&) const = default;

private:
    OneCell src_;
    OneCell dst_;
    Matrix sigma_;
};

OneCell identity1(const TwoVect& v);
OneCell zero1(const TwoVect& v, const TwoVect& w);
TwoCell identity2(const OneCell& f);

/// g after f.
OneCell compose1(const OneCell& g, const OneCell& f);
/// tau after sigma; the component is the sum.
TwoCell vcomp(const TwoCell& tau, const TwoCell& sigma);
/// Horizontal composite of sigma : f => g (U -> V) and outer : f' => g' (V -> W).
/// Both closed forms f'1 sigma + sigma' g0 and g'1 sigma + sigma' f0 are evaluated;
/// disagreement throws ErrorKind::invariant.
TwoCell hcomp(const TwoCell& outer, const TwoCell& sigma);
TwoCell inv2(const TwoCell& sigma);

/// Witness 1_V => 0_V (sigma = -d^{-1}) when d is invertible.
std::optional<TwoCell> is_equiv_to_zero(const TwoVect& v);

/// V (+) W with differential d (+) 1_W, its canonical injection and projection,
/// and the 2-cell 0 (+) 1_W : iota o pi => 1.
struct PadEquivalence {
    TwoVect padded;
    OneCell iota;
    OneCell pi;
    TwoCell eta;
};

PadEquivalence pad_equivalence(const TwoVect& v, std::size_t w_dim);

/// V ~ (ker d --0--> coker d). unit : from_normal o to_normal => 1_V,
/// counit : to_normal o from_normal => 1_N (that composite is exactly the identity).
struct Normalization {
    TwoVect normal;
    OneCell to_normal;
    OneCell from_normal;
    TwoCell unit;
    TwoCell counit;
};

Normalization normalize(const TwoVect& v);

// Self-equivalences of a zero-differential V: objects (f1, f0) with f_i invertible,
// morphisms (sigma, f1, f0) with sigma : V0 -> V1.
struct EqMorphism {
    Matrix sigma;
    Matrix f1;
    Matrix f0;

    bool operator==(const EqMorphism&) const = default;
};

/// left (x) right = (sigma_l f0_r + f1_l sigma_r, f1_l f1_r, f0_l f0_r).
EqMorphism eq_tensor(const EqMorphism& left, const EqMorphism& right);
EqMorphism eq_identity(std::size_t dim1, std::size_t dim0);
/// (f1, f0) |> sigma = f1 sigma f0^{-1}.
Matrix eq_act(const Matrix& f1, const Matrix& f0, const Matrix& sigma);

}  // namespace bcrep

#endif
