// Seeded generators shared by the unit and acceptance suites.
#ifndef BCREP_TESTS_GEN_HPP
#define BCREP_TESTS_GEN_HPP

#include <string>
#include <vector>

#include "bcrep/ch2cat.hpp"
#include "bcrep/cohom.hpp"
#include "bcrep/random.hpp"
#include "bcrep/rep1cat.hpp"
#include "bcrep/rep2cat.hpp"

namespace gen {

using namespace bcrep;

inline Rat small_rat(SplitMix64& rng) {
    // Mostly integers, sometimes halves and thirds.
    const long num = rng.uniform(-3, 3);
    const long den = rng.index(4) == 0 ? rng.uniform(2, 3) : 1;
    return Rat(num) / Rat(den);
}

inline Matrix matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = small_rat(rng);
    return m;
}

/// Exactly rank k: U [I_k 0; 0 0] V with U, V unimodular.
inline Matrix matrix_of_rank(SplitMix64& rng, std::size_t rows, std::size_t cols, std::size_t k) {
    Matrix core(rows, cols);
    for (std::size_t i = 0; i < k; ++i) core(i, i) = 1;
    return random_unimodular(rows, rng) * core * random_unimodular(cols, rng);
}

inline Matrix invertible(SplitMix64& rng, std::size_t n) {
    while (true) {
        Matrix m = matrix(rng, n, n);
        if (is_invertible(m)) return m;
    }
}

inline TwoVect complex(SplitMix64& rng, std::size_t max_dim) {
    const std::size_t d1 = rng.index(max_dim + 1), d0 = rng.index(max_dim + 1);
    const std::size_t k = rng.index(std::min(d1, d0) + 1);
    return TwoVect(matrix_of_rank(rng, d0, d1, k));
}

/// Chain map (h d_V + k_W a, d_W h + b k_V): the homotopy part plus maps killing d.
inline OneCell one_cell(SplitMix64& rng, const TwoVect& v, const TwoVect& w) {
    Matrix h = matrix(rng, w.dim1(), v.dim0());
    Matrix f1 = h * v.d();
    Matrix f0 = w.d() * h;
    if (v == w && rng.index(2) == 0) {
        f1 += Matrix::identity(v.dim1());
        f0 += Matrix::identity(v.dim0());
    }
    const Matrix ka = kernel_basis(w.d());  // columns span ker d_W in W1
    if (ka.cols() > 0 && v.dim1() > 0) f1 += ka * matrix(rng, ka.cols(), v.dim1());
    const Matrix kb = kernel_basis(v.d().transpose());  // rows annihilating im d_V
    if (kb.cols() > 0 && w.dim0() > 0) f0 += matrix(rng, w.dim0(), kb.cols()) * kb.transpose();
    return OneCell(v, w, std::move(f1), std::move(f0));
}

/// A 2-cell out of f with random component: g = f + (sigma d_V, d_W sigma).
inline TwoCell two_cell(SplitMix64& rng, const OneCell& f) {
    Matrix sigma = matrix(rng, f.dst().dim1(), f.src().dim0());
    OneCell g(f.src(), f.dst(), f.f1() + sigma * f.src().d(), f.f0() + f.dst().d() * sigma);
    return TwoCell(f, std::move(g), std::move(sigma));
}

inline FinGroup named_group(const std::string& name) {
    if (name == "Z/2") return FinGroup::cyclic(2);
    if (name == "Z/3") return FinGroup::cyclic(3);
    if (name == "Z/4") return FinGroup::cyclic(4);
    if (name == "S3") return FinGroup::symmetric(3);
    return FinGroup::trivial();
}

inline const std::vector<std::string>& group_names() {
    static const std::vector<std::string> names{"Z/2", "Z/3", "Z/4", "S3"};
    return names;
}

inline Rep1 rep1(SplitMix64& rng, const FinGroup& g, std::size_t dim_max) {
    static std::vector<std::pair<FinGroup, std::vector<Rep1>>> cache;
    const std::vector<Rep1>* levels = nullptr;
    for (const auto& [k, v] : cache)
        if (k == g) levels = &v;
    if (!levels) {
        cache.emplace_back(g, generate_levels(g, 3));
        levels = &cache.back().second;
    }
    std::vector<const Rep1*> fit;
    for (const Rep1& r : *levels)
        if (r.dim <= dim_max) fit.push_back(&r);
    const Rep1& base = *fit[rng.index(fit.size())];
    return conjugate(base, random_unimodular(base.dim, rng));
}

inline BimodulePtr bimodule(SplitMix64& rng, const FinGroup& g, std::size_t dim_max) {
    const Rep1 l = rep1(rng, g, dim_max), r = rep1(rng, g, dim_max);
    return make_bimodule(Bimodule{g, l.dim, r.dim, l.rho, r.rho});
}

inline Cochain cochain(SplitMix64& rng, const BimodulePtr& m, std::size_t degree, bool normalized = false) {
    const std::size_t n = m->group.order();
    std::vector<Matrix> values;
    for (std::size_t k = 0; k < power(n, degree); ++k) {
        const auto t = index_tuple(k, degree, n);
        bool has_e = false;
        for (Element x : t) has_e = has_e || x == 0;
        values.push_back(normalized && has_e ? Matrix(m->rows, m->cols) : matrix(rng, m->rows, m->cols));
    }
    return Cochain(m, degree, std::move(values));
}

/// Valid reduced representation with c = dx for a random normalized 1-cochain x.
inline RepReduced rep_reduced(SplitMix64& rng, const TwoGroupPtr& g, std::size_t dim_max) {
    const Rep1 a = rep1(rng, g->pi0, dim_max), b = rep1(rng, g->pi0, dim_max);
    RepReduced r = strict_rep(g, a.rho, b.rho);
    if (rng.index(5) != 0) r.c = coboundary(cochain(rng, r.c.bimodule(), 1, true));
    return r;
}

}  // namespace gen

#endif
