#include "bcrep/ch2cat.hpp"

#include <string>

#include "bcrep/error.hpp"

namespace bcrep {

namespace {

std::string shape_of(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

void expect_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* what) {
    if (m.rows() != rows || m.cols() != cols) {
        throw AlgebraError(ErrorKind::shape, std::string(what) + " is " + shape_of(m) + ", expected " +
                                                 std::to_string(rows) + "x" + std::to_string(cols));
    }
}

}  // namespace

OneCell::OneCell(TwoVect src, TwoVect dst, Matrix f1, Matrix f0)
    : src_(std::move(src)), dst_(std::move(dst)), f1_(std::move(f1)), f0_(std::move(f0)) {
    expect_shape(f1_, dst_.dim1(), src_.dim1(), "f1");
    expect_shape(f0_, dst_.dim0(), src_.dim0(), "f0");
    if (!(f0_ * src_.d() == dst_.d() * f1_)) {
        throw AlgebraError(ErrorKind::invariant, "1-cell square does not commute");
    }
}

TwoCell::TwoCell(OneCell src, OneCell dst, Matrix sigma)
    : src_(std::move(src)), dst_(std::move(dst)), sigma_(std::move(sigma)) {
    if (!(src_.src() == dst_.src()) || !(src_.dst() == dst_.dst())) {
        throw AlgebraError(ErrorKind::composition, "2-cell between 1-cells with different endpoints");
    }
    const TwoVect& v = src_.src();
    const TwoVect& w = src_.dst();
    expect_shape(sigma_, w.dim1(), v.dim0(), "sigma");
    if (!(w.d() * sigma_ == dst_.f0() - src_.f0())) {
        throw AlgebraError(ErrorKind::invariant, "2-cell: d_W sigma != g0 - f0");
    }
    if (!(sigma_ * v.d() == dst_.f1() - src_.f1())) {
        throw AlgebraError(ErrorKind::invariant, "2-cell: sigma d_V != g1 - f1");
    }
}

OneCell identity1(const TwoVect& v) {
    return OneCell(v, v, Matrix::identity(v.dim1()), Matrix::identity(v.dim0()));
}

OneCell zero1(const TwoVect& v, const TwoVect& w) {
    return OneCell(v, w, Matrix(w.dim1(), v.dim1()), Matrix(w.dim0(), v.dim0()));
}

TwoCell identity2(const OneCell& f) { return TwoCell(f, f, Matrix(f.dst().dim1(), f.src().dim0())); }

OneCell compose1(const OneCell& g, const OneCell& f) {
    if (!(f.dst() == g.src())) throw AlgebraError(ErrorKind::composition, "compose1: f.dst != g.src");
    return OneCell(f.src(), g.dst(), g.f1() * f.f1(), g.f0() * f.f0());
}

TwoCell vcomp(const TwoCell& tau, const TwoCell& sigma) {
    if (!(sigma.dst() == tau.src())) throw AlgebraError(ErrorKind::composition, "vcomp: sigma.dst != tau.src");
    return TwoCell(sigma.src(), tau.dst(), tau.sigma() + sigma.sigma());
}

TwoCell hcomp(const TwoCell& outer, const TwoCell& sigma) {
    if (!(sigma.src().dst() == outer.src().src())) {
        throw AlgebraError(ErrorKind::composition, "hcomp: middle complexes differ");
    }
    const OneCell& f = sigma.src();
    const OneCell& g = sigma.dst();
    const OneCell& f2 = outer.src();
    const OneCell& g2 = outer.dst();
    Matrix first = f2.f1() * sigma.sigma() + outer.sigma() * g.f0();
    const Matrix second = g2.f1() * sigma.sigma() + outer.sigma() * f.f0();
    if (!(first == second)) {
        throw AlgebraError(ErrorKind::invariant, "hcomp: the two horizontal composite formulas disagree");
    }
    return TwoCell(compose1(f2, f), compose1(g2, g), std::move(first));
}

TwoCell inv2(const TwoCell& sigma) { return TwoCell(sigma.dst(), sigma.src(), -sigma.sigma()); }

std::optional<TwoCell> is_equiv_to_zero(const TwoVect& v) {
    if (!is_invertible(v.d())) return std::nullopt;
    return TwoCell(identity1(v), zero1(v, v), -inverse(v.d()));
}

PadEquivalence pad_equivalence(const TwoVect& v, std::size_t w_dim) {
    const std::size_t n1 = v.dim1();
    const std::size_t n0 = v.dim0();
    TwoVect padded(direct_sum(v.d(), Matrix::identity(w_dim)));
    const Matrix iota1 = vstack(Matrix::identity(n1), Matrix(w_dim, n1));
    const Matrix iota0 = vstack(Matrix::identity(n0), Matrix(w_dim, n0));
    OneCell iota(v, padded, iota1, iota0);
    OneCell pi(padded, v, iota1.transpose(), iota0.transpose());
    TwoCell eta(compose1(iota, pi), identity1(padded), direct_sum(Matrix(n1, n0), Matrix::identity(w_dim)));
    return {std::move(padded), std::move(iota), std::move(pi), std::move(eta)};
}

Normalization normalize(const TwoVect& v) {
    const ComplexSplitting s = split_complex(v.d());
    const TwoVect normal = TwoVect::zero_differential(s.kernel_dim, v.dim0() - s.rank);
    PadEquivalence pad = pad_equivalence(normal, s.rank);

    // pad.padded has differential 0 (+) 1_r, which is the block form of the splitting.
    const OneCell to_block(v, pad.padded, s.p1, s.p0);
    const OneCell from_block(pad.padded, v, s.p1_inverse, s.p0_inverse);

    OneCell to_normal = compose1(pad.pi, to_block);
    OneCell from_normal = compose1(from_block, pad.iota);

    // Conjugate eta by the isomorphism: from_block o eta o to_block.
    const TwoCell whiskered = hcomp(hcomp(identity2(from_block), pad.eta), identity2(to_block));
    TwoCell unit(compose1(from_normal, to_normal), identity1(v), whiskered.sigma());
    TwoCell counit = identity2(compose1(to_normal, from_normal));
    if (!(counit.src() == identity1(normal))) {
        throw AlgebraError(ErrorKind::invariant, "normalize: to_normal o from_normal is not the identity");
    }
    return {normal, std::move(to_normal), std::move(from_normal), std::move(unit), std::move(counit)};
}

EqMorphism eq_tensor(const EqMorphism& left, const EqMorphism& right) {
    for (const Matrix* f : {&left.f1, &left.f0, &right.f1, &right.f0}) {
        if (!is_invertible(*f)) throw AlgebraError(ErrorKind::not_equivalence, "eq_tensor: non-invertible component");
    }
    if (!left.f1.same_shape(right.f1) || !left.f0.same_shape(right.f0) || !left.sigma.same_shape(right.sigma) ||
        left.sigma.rows() != left.f1.rows() || left.sigma.cols() != left.f0.rows()) {
        throw AlgebraError(ErrorKind::shape, "eq_tensor: component shapes differ");
    }
    return {left.sigma * right.f0 + left.f1 * right.sigma, left.f1 * right.f1, left.f0 * right.f0};
}

EqMorphism eq_identity(std::size_t dim1, std::size_t dim0) {
    return {Matrix(dim1, dim0), Matrix::identity(dim1), Matrix::identity(dim0)};
}

Matrix eq_act(const Matrix& f1, const Matrix& f0, const Matrix& sigma) { return f1 * sigma * inverse(f0); }

}  // namespace bcrep
