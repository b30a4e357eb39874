#include "bcrep/rep1cat.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace bcrep {

Violations rep1_violations(const Rep1& r) {
    const std::size_t n = r.group.order();
    if (r.rho.size() != n) return {{"REP-SHAPE", "need one matrix per group element"}};
    for (const Matrix& m : r.rho)
        if (m.rows() != r.dim || m.cols() != r.dim) return {{"REP-SHAPE", "matrix is not dim x dim"}};
    Violations out;
    if (!(r.rho[0] == Matrix::identity(r.dim))) out.push_back({"REP-IDENTITY", ""});
    for (Element g = 0; g < n; ++g)
        for (Element h = 0; h < n; ++h)
            if (!(r.rho[g] * r.rho[h] == r.rho[r.group.mul(g, h)])) out.push_back({"REP-HOM", tuple_label("g,h", {g, h})});
    return out;
}

std::vector<Matrix> intertwiner_space(const Rep1& a, const Rep1& b) {
    const std::size_t p = b.dim, q = a.dim, n = a.group.order();
    // Unknown T (p x q) flattened row-major; one block of p*q equations per element.
    Matrix system(n * p * q, p * q);
    for (Element g = 0; g < n; ++g) {
        const Matrix& A = a.rho[g];
        const Matrix& B = b.rho[g];
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < q; ++j) {
                const std::size_t row = (g * p + i) * q + j;
                for (std::size_t s = 0; s < q; ++s) system(row, i * q + s) += A(s, j);
                for (std::size_t s = 0; s < p; ++s) system(row, s * q + j) -= B(i, s);
            }
    }
    const Matrix kernel = kernel_basis(system);
    std::vector<Matrix> basis;
    for (std::size_t k = 0; k < kernel.cols(); ++k) {
        Matrix t(p, q);
        for (std::size_t u = 0; u < p * q; ++u) t(u / q, u % q) = kernel(u, k);
        basis.push_back(std::move(t));
    }
    return basis;
}

Rep1 trivial_rep1(const FinGroup& g, std::size_t dim) {
    return {g, dim, std::vector<Matrix>(g.order(), Matrix::identity(dim))};
}

std::vector<Rat> character(const Rep1& r) {
    std::vector<Rat> chi;
    for (const Matrix& m : r.rho) {
        Rat t = 0;
        for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
        chi.push_back(t);
    }
    return chi;
}

Rep1 conjugate(const Rep1& r, const Matrix& u) {
    const Matrix ui = inverse(u);
    Rep1 out{r.group, r.dim, {}};
    for (const Matrix& m : r.rho) out.rho.push_back(u * m * ui);
    return out;
}

Rep1 restrict_to(const Rep1& r, const Matrix& basis) {
    Rep1 out{r.group, basis.cols(), {}};
    for (const Matrix& m : r.rho) {
        auto x = solve(basis, m * basis);
        if (!x) throw AlgebraError(ErrorKind::invariant, "subspace is not invariant");
        out.rho.push_back(std::move(*x));
    }
    return out;
}

namespace {

struct SignedPerm {
    std::vector<int> perm;  // e_i -> sign[i] e_{perm[i]}
    std::vector<int> sign;

    bool operator==(const SignedPerm&) const = default;
};

SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
    // (a b) e_i = a(sign_b[i] e_{perm_b[i]})
    SignedPerm out{std::vector<int>(a.perm.size()), std::vector<int>(a.perm.size())};
    for (std::size_t i = 0; i < a.perm.size(); ++i) {
        const auto j = static_cast<std::size_t>(b.perm[i]);
        out.perm[i] = a.perm[j];
        out.sign[i] = a.sign[j] * b.sign[i];
    }
    return out;
}

std::vector<SignedPerm> all_signed_perms(std::size_t n) {
    std::vector<SignedPerm> out;
    std::vector<int> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
    do {
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            SignedPerm s{perm, std::vector<int>(n)};
            for (std::size_t i = 0; i < n; ++i) s.sign[i] = (mask >> i & 1) ? -1 : 1;
            out.push_back(std::move(s));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Matrix to_matrix(const SignedPerm& s) {
    const std::size_t n = s.perm.size();
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(static_cast<std::size_t>(s.perm[i]), i) = s.sign[i];
    return m;
}

}  // namespace

std::vector<Rep1> signed_permutation_reps(const FinGroup& g, std::size_t n) {
    const std::size_t order = g.order();
    const std::vector<Element> gens = g.generators();
    const std::vector<SignedPerm> pool = all_signed_perms(n);
    SignedPerm id{std::vector<int>(n), std::vector<int>(n, 1)};
    for (std::size_t i = 0; i < n; ++i) id.perm[i] = static_cast<int>(i);

    std::vector<Rep1> out;
    std::vector<std::size_t> choice(gens.size(), 0);
    while (true) {
        // Propagate from the identity along left multiplication by generators;
        // the assignment extends to a homomorphism iff no conflict appears.
        std::vector<std::optional<SignedPerm>> value(order);
        value[0] = id;
        std::vector<Element> queue{0};
        bool ok = true;
        for (std::size_t head = 0; head < queue.size() && ok; ++head) {
            const Element h = queue[head];
            for (std::size_t k = 0; k < gens.size() && ok; ++k) {
                const Element gh = g.mul(gens[k], h);
                SignedPerm v = compose(pool[choice[k]], *value[h]);
                if (!value[gh]) {
                    value[gh] = std::move(v);
                    queue.push_back(gh);
                } else if (!(*value[gh] == v)) {
                    ok = false;
                }
            }
        }
        if (ok) {
            Rep1 r{g, n, {}};
            for (const auto& v : value) r.rho.push_back(to_matrix(*v));
            out.push_back(std::move(r));
        }
        std::size_t k = 0;
        while (k < choice.size() && ++choice[k] == pool.size()) choice[k++] = 0;
        if (k == choice.size()) break;
    }
    return out;
}

std::vector<Rep1> generate_levels(const FinGroup& g, std::size_t dim_max) {
    std::map<std::pair<std::size_t, std::vector<Rat>>, Rep1> by_character;
    auto add = [&](Rep1 r) {
        auto key = std::make_pair(r.dim, character(r));
        by_character.emplace(std::move(key), std::move(r));
    };
    add(Rep1{g, 0, std::vector<Matrix>(g.order(), Matrix(0, 0))});
    const Rat inv_order = Rat(1) / Rat(static_cast<unsigned long>(g.order()));
    for (std::size_t n = 1; n <= dim_max; ++n)
        for (Rep1& r : signed_permutation_reps(g, n)) {
            Matrix projector(n, n);
            for (const Matrix& m : r.rho) projector += m;
            projector *= inv_order;
            const Matrix basis = kernel_basis(projector);
            if (basis.cols() > 0 && basis.cols() < n) add(restrict_to(r, basis));
            add(std::move(r));
        }
    std::vector<Rep1> out;
    for (auto& [key, r] : by_character) out.push_back(std::move(r));
    return out;
}

Matrix random_unimodular(std::size_t n, SplitMix64& rng) {
    while (true) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>(rng.uniform(-2, 2));
        const Rat det = determinant(m);
        if (det == 1 || det == -1) return m;
    }
}

}  // namespace bcrep
