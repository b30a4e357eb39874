#include "bcrep/rep2cat.hpp"

#include <string>

#include "bcrep/rep1cat.hpp"

namespace bcrep {

namespace {

bool same_group(const TwoGroupPtr& a, const TwoGroupPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->pi0 == b->pi0 && a->pi1 == b->pi1 && a->action == b->action && a->z.table == b->z.table;
}

bool same_rep(const RepPtr& a, const RepPtr& b) { return a == b || (a && b && *a == *b); }

bool has_shape(const Matrix& m, std::size_t rows, std::size_t cols) { return m.rows() == rows && m.cols() == cols; }

bool all_shaped(const std::vector<Matrix>& ms, std::size_t count, std::size_t rows, std::size_t cols) {
    if (ms.size() != count) return false;
    for (const Matrix& m : ms)
        if (!has_shape(m, rows, cols)) return false;
    return true;
}

}  // namespace

bool RepFull::operator==(const RepFull& other) const {
    return same_group(group, other.group) && space == other.space && f1 == other.f1 && f0 == other.f0 &&
           tau_mor == other.tau_mor && tau_tens == other.tau_tens && tau_e == other.tau_e;
}

bool RepReduced::operator==(const RepReduced& other) const {
    return same_group(group, other.group) && n1 == other.n1 && n0 == other.n0 && rho1 == other.rho1 &&
           rho0 == other.rho0 && beta == other.beta && c == other.c;
}

// ---------------------------------------------------------------------------
// Unpacked representations

Violations validate_rep_full(const RepFull& r) {
    Violations out;
    if (!r.group) return {{"SHAPE", "missing 2-group"}};
    const TwoGroupData& G = *r.group;
    const std::size_t n = G.pi0.order(), m = G.pi1.order();
    const std::size_t v1 = r.space.dim1(), v0 = r.space.dim0();
    const Matrix& d = r.space.d();
    if (!all_shaped(r.f1, n, v1, v1) || !all_shaped(r.f0, n, v0, v0) || !all_shaped(r.tau_mor, n * m, v1, v0) ||
        !all_shaped(r.tau_tens, n * n, v1, v0) || !has_shape(r.tau_e, v1, v0)) {
        return {{"SHAPE", "representation tables do not match the complex"}};
    }
    const Matrix I1 = Matrix::identity(v1), I0 = Matrix::identity(v0);

    for (Element a = 0; a < n; ++a)
        if (!(r.f0[a] * d == d * r.f1[a])) out.push_back({"O2", tuple_label("a", {a})});
    for (Element g = 0; g < n; ++g)
        for (Element x = 0; x < m; ++x) {
            const Matrix& t = r.tau({x, g});
            // phi : g -> g, so f^{a'} - f^a vanishes on both levels.
            if (!(d * t).is_zero() || !(t * d).is_zero()) out.push_back({"O3", tuple_label("x,g", {x, g})});
        }
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            const Element ab = G.pi0.mul(a, b);
            if (!(r.f0[ab] - r.f0[a] * r.f0[b] == d * r.tau(a, b)) || !(r.f1[ab] - r.f1[a] * r.f1[b] == r.tau(a, b) * d))
                out.push_back({"O4", tuple_label("a,b", {a, b})});
        }
    if (!(r.f0[0] - I0 == d * r.tau_e) || !(r.f1[0] - I1 == r.tau_e * d)) out.push_back({"O5", ""});

    for (Element g = 0; g < n; ++g)
        for (Element x = 0; x < m; ++x)
            for (Element y = 0; y < m; ++y)
                if (!(r.tau({G.pi1.add(y, x), g}) == r.tau({y, g}) + r.tau({x, g})))
                    out.push_back({"AO1", tuple_label("x,y,g", {x, y, g})});
    for (Element g = 0; g < n; ++g)
        if (!r.tau({0, g}).is_zero()) out.push_back({"AO2", tuple_label("g", {g})});
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element x = 0; x < m; ++x)
                for (Element y = 0; y < m; ++y) {
                    const Morphism phi{x, a}, psi{y, b};
                    const Matrix lhs = r.tau(a, b) + r.f1[b] * r.tau(phi) + r.tau(psi) * r.f0[a];
                    const Matrix rhs = r.tau(tg_tensor_mor(G, phi, psi)) + r.tau(a, b);
                    if (!(lhs == rhs)) out.push_back({"AO3", tuple_label("x,a,y,b", {x, a, y, b})});
                }
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c) {
                const Matrix lhs = r.tau(tg_associator(G, a, b, c)) + r.tau(a, G.pi0.mul(b, c)) + r.f1[a] * r.tau(b, c);
                const Matrix rhs = r.tau(G.pi0.mul(a, b), c) + r.tau(a, b) * r.f0[c];
                if (!(lhs == rhs)) out.push_back({"AO4", tuple_label("a,b,c", {a, b, c})});
            }
    // Unitors are identities, so tau at rho_a and lambda_a is tau_(0,a).
    for (Element a = 0; a < n; ++a) {
        if (!(r.tau(a, 0) + r.f1[a] * r.tau_e == r.tau({0, a}))) out.push_back({"AO5-RIGHT", tuple_label("a", {a})});
        if (!(r.tau(0, a) + r.tau_e * r.f0[a] == r.tau({0, a}))) out.push_back({"AO5-LEFT", tuple_label("a", {a})});
    }
    return out;
}

RepFull canonicalize(const RepFull& r) {
    if (!r.space.d().is_zero()) throw AlgebraError(ErrorKind::not_reduced, "canonicalize needs a zero differential");
    if (r.tau_e.is_zero()) return r;
    RepFull out = r;
    const std::size_t n = r.group->pi0.order();
    const Matrix& nu = r.tau_e;
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            out.tau_tens[a * n + b] = r.tau(a, b) + r.f1[a] * nu - nu + nu * r.f0[b];
    out.tau_e = Matrix(nu.rows(), nu.cols());
    return out;
}

// ---------------------------------------------------------------------------
// Reduced representations

BimodulePtr hom_bimodule(const FinGroup& pi0, const std::vector<Matrix>& left, std::size_t rows,
                         const std::vector<Matrix>& right, std::size_t cols) {
    return std::make_shared<const Bimodule>(Bimodule{pi0, rows, cols, left, right});
}

BimodulePtr level_bimodule(const RepReduced& src, const RepReduced& dst) {
    return hom_bimodule(src.group->pi0, dst.rho1, dst.n1, src.rho0, src.n0);
}

RepReduced make_rep_reduced(TwoGroupPtr group, std::vector<Matrix> rho1, std::vector<Matrix> rho0,
                            std::vector<Matrix> beta, std::vector<Matrix> c_values) {
    if (!group) throw AlgebraError(ErrorKind::shape, "representation without 2-group");
    if (rho1.empty() || rho0.empty()) throw AlgebraError(ErrorKind::shape, "representation tables are empty");
    const std::size_t n1 = rho1.front().rows(), n0 = rho0.front().rows();
    auto bimodule = hom_bimodule(group->pi0, rho1, n1, rho0, n0);
    Cochain c(bimodule, 2, std::move(c_values));
    return RepReduced{std::move(group), n1, n0, std::move(rho1), std::move(rho0), std::move(beta), std::move(c)};
}

RepReduced strict_rep(TwoGroupPtr group, std::vector<Matrix> rho1, std::vector<Matrix> rho0) {
    const std::size_t n = group->pi0.order();
    const std::size_t n1 = rho1.at(0).rows(), n0 = rho0.at(0).rows();
    std::vector<Matrix> beta(group->pi1.rank(), Matrix(n1, n0));
    std::vector<Matrix> c(n * n, Matrix(n1, n0));
    return make_rep_reduced(std::move(group), std::move(rho1), std::move(rho0), std::move(beta), std::move(c));
}

Matrix beta_value(const RepReduced& r, Element x) {
    const auto residues = r.group->pi1.decode(x);
    Matrix v(r.n1, r.n0);
    for (std::size_t i = 0; i < residues.size(); ++i)
        if (residues[i] != 0) v += Rat(static_cast<unsigned long>(residues[i])) * r.beta[i];
    return v;
}

Cochain beta_pushforward(const RepReduced& r) {
    const TwoGroupData& G = *r.group;
    const std::size_t n = G.pi0.order();
    std::vector<Matrix> values;
    values.reserve(n * n * n);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c) {
                const Element abc = G.pi0.mul(G.pi0.mul(a, b), c);
                values.push_back(-(r.rho1[abc] * beta_value(r, G.z(a, b, c))));
            }
    return Cochain(r.c.bimodule(), 3, std::move(values));
}

Violations validate_rep_reduced(const RepReduced& r) {
    Violations out;
    if (!r.group) return {{"SHAPE", "missing 2-group"}};
    const TwoGroupData& G = *r.group;
    const std::size_t n = G.pi0.order();
    if (!all_shaped(r.rho1, n, r.n1, r.n1) || !all_shaped(r.rho0, n, r.n0, r.n0) ||
        !all_shaped(r.beta, G.pi1.rank(), r.n1, r.n0) || r.c.degree() != 2) {
        return {{"SHAPE", "representation tables do not match dims"}};
    }
    const Matrix I1 = Matrix::identity(r.n1), I0 = Matrix::identity(r.n0);
    if (!(r.rho1[0] == I1)) out.push_back({"RHO1-IDENTITY", ""});
    if (!(r.rho0[0] == I0)) out.push_back({"RHO0-IDENTITY", ""});
    for (Element g = 0; g < n; ++g)
        for (Element h = 0; h < n; ++h) {
            if (!(r.rho1[g] * r.rho1[h] == r.rho1[G.pi0.mul(g, h)])) out.push_back({"RHO1-HOM", tuple_label("g,h", {g, h})});
            if (!(r.rho0[g] * r.rho0[h] == r.rho0[G.pi0.mul(g, h)])) out.push_back({"RHO0-HOM", tuple_label("g,h", {g, h})});
        }
    if (!out.empty()) return out;
    if (!(*r.c.bimodule() == *level_bimodule(r, r))) {
        return {{"SHAPE", "c is not valued in Hom(V0, V1) with the rho actions"}};
    }

    const auto& factors = G.pi1.invariant_factors();
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (!(Rat(static_cast<unsigned long>(factors[i])) * r.beta[i]).is_zero())
            out.push_back({"BETA-ORDER", tuple_label("generator", {i})});
    for (Element g = 0; g < n; ++g)
        for (std::size_t i = 0; i < factors.size(); ++i) {
            const Matrix lhs = beta_value(r, G.act(g, G.pi1.generator(i))) * r.rho0[g];
            if (!(lhs == r.rho1[g] * r.beta[i])) out.push_back({"BETA-EQUIVARIANT", tuple_label("g,generator", {g, i})});
        }
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            if ((a == 0 || b == 0) && !r.c({a, b}).is_zero()) out.push_back({"C-NORMALIZED", tuple_label("a,b", {a, b})});
    const Cochain dc = coboundary(r.c);
    const Cochain push = beta_pushforward(r);
    for (std::size_t idx = 0; idx < dc.values().size(); ++idx)
        if (!(dc.at(idx) == push.at(idx))) out.push_back({"C-COBOUNDARY", tuple_label("a,b,c", index_tuple(idx, 3, n))});
    return out;
}

bool is_strict(const RepReduced& r) {
    for (const Matrix& b : r.beta)
        if (!b.is_zero()) return false;
    return r.c.is_zero();
}

RepFull expand(const RepReduced& r) {
    const Violations v = validate_rep_reduced(r);
    if (!v.empty()) throw AlgebraError(ErrorKind::invariant, "expand of invalid representation: " + v.front().to_string());
    const TwoGroupData& G = *r.group;
    const std::size_t n = G.pi0.order(), m = G.pi1.order();
    RepFull full{r.group, TwoVect::zero_differential(r.n1, r.n0), r.rho1, r.rho0, {}, {}, Matrix(r.n1, r.n0)};
    full.tau_mor.reserve(n * m);
    for (Element g = 0; g < n; ++g)
        for (Element x = 0; x < m; ++x) full.tau_mor.push_back(r.rho1[g] * beta_value(r, x));
    full.tau_tens = r.c.values();
    return full;
}

RepReduced reduce(const RepFull& r) {
    if (!r.space.d().is_zero()) throw AlgebraError(ErrorKind::not_reduced, "reduce needs a zero differential");
    const Violations v = validate_rep_full(r);
    if (!v.empty()) throw AlgebraError(ErrorKind::invariant, "reduce of invalid representation: " + v.front().to_string());
    const RepFull canon = canonicalize(r);
    const TwoGroupData& G = *r.group;
    std::vector<Matrix> beta;
    for (std::size_t i = 0; i < G.pi1.rank(); ++i) beta.push_back(canon.tau({G.pi1.generator(i), 0}));
    RepReduced out = make_rep_reduced(r.group, canon.f1, canon.f0, std::move(beta), canon.tau_tens);
    const Violations rv = validate_rep_reduced(out);
    if (!rv.empty()) throw AlgebraError(ErrorKind::invariant, "reduce produced invalid data: " + rv.front().to_string());
    return out;
}

std::vector<std::vector<Matrix>> beta_space(const TwoGroupData& G, const std::vector<Matrix>& rho1,
                                            const std::vector<Matrix>& rho0) {
    const std::size_t n = G.pi0.order();
    const std::size_t gens = G.pi1.rank();
    const std::size_t n1 = rho1.at(0).rows(), n0 = rho0.at(0).rows();
    const std::size_t block = n1 * n0;
    const std::size_t unknowns = gens * block;
    const auto& factors = G.pi1.invariant_factors();

    // Linear constraints on (beta_1, ..., beta_k), one block of rows per condition.
    auto evaluate = [&](const std::vector<Matrix>& beta) {
        std::vector<Matrix> rows;
        for (std::size_t i = 0; i < gens; ++i) rows.push_back(Rat(static_cast<unsigned long>(factors[i])) * beta[i]);
        for (Element g = 0; g < n; ++g)
            for (std::size_t j = 0; j < gens; ++j) {
                const auto image = G.pi1.decode(G.act(g, G.pi1.generator(j)));
                Matrix lhs(n1, n0);
                for (std::size_t i = 0; i < gens; ++i) lhs += Rat(static_cast<unsigned long>(image[i])) * beta[i];
                rows.push_back(lhs * rho0[g] - rho1[g] * beta[j]);
            }
        return rows;
    };
    const std::size_t equations = (gens + n * gens) * block;
    Matrix system(equations, unknowns);
    for (std::size_t u = 0; u < unknowns; ++u) {
        std::vector<Matrix> unit(gens, Matrix(n1, n0));
        unit[u / block](u % block / n0, u % n0) = 1;
        const auto rows = evaluate(unit);
        for (std::size_t b = 0; b < rows.size(); ++b)
            for (std::size_t e = 0; e < block; ++e) system(b * block + e, u) = rows[b].entries()[e];
    }
    const Matrix kernel = kernel_basis(system);
    std::vector<std::vector<Matrix>> basis;
    for (std::size_t k = 0; k < kernel.cols(); ++k) {
        std::vector<Matrix> beta(gens, Matrix(n1, n0));
        for (std::size_t u = 0; u < unknowns; ++u) beta[u / block](u % block / n0, u % n0) = kernel(u, k);
        basis.push_back(std::move(beta));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Intertwiners

Violations validate_inter_full(const RepFull& u, const RepFull& v, const Matrix& r1, const Matrix& r0,
                               const std::vector<Matrix>& mu) {
    const TwoGroupData& G = *u.group;
    const std::size_t n = G.pi0.order(), m = G.pi1.order();
    const Matrix& du = u.space.d();
    const Matrix& dv = v.space.d();
    if (!has_shape(r1, v.space.dim1(), u.space.dim1()) || !has_shape(r0, v.space.dim0(), u.space.dim0()) ||
        !all_shaped(mu, n, v.space.dim1(), u.space.dim0())) {
        return {{"SHAPE", "intertwiner components do not match the representations"}};
    }
    Violations out;
    if (!(r0 * du == dv * r1)) out.push_back({"I1", ""});
    for (Element a = 0; a < n; ++a) {
        if (!(v.f1[a] * r1 - r1 * u.f1[a] == mu[a] * du)) out.push_back({"I2-LEVEL1", tuple_label("a", {a})});
        if (!(v.f0[a] * r0 - r0 * u.f0[a] == dv * mu[a])) out.push_back({"I2-LEVEL0", tuple_label("a", {a})});
    }
    for (Element a = 0; a < n; ++a)
        for (Element x = 0; x < m; ++x) {
            // phi = (x, a) : a -> a
            if (!(mu[a] + v.tau({x, a}) * r0 == r1 * u.tau({x, a}) + mu[a])) out.push_back({"AI1", tuple_label("x,a", {x, a})});
        }
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            const Matrix lhs = r1 * u.tau(a, b) + mu[G.pi0.mul(a, b)];
            const Matrix rhs = mu[a] * u.f0[b] + v.f1[a] * mu[b] + v.tau(a, b) * r0;
            if (!(lhs == rhs)) out.push_back({"AI2", tuple_label("a,b", {a, b})});
        }
    if (!(mu[0] + r1 * u.tau_e == v.tau_e * r0)) out.push_back({"AI3", ""});
    return out;
}

Violations validate_inter1(const Inter1& t) {
    if (!t.src || !t.dst) return {{"SHAPE", "intertwiner without endpoints"}};
    if (!same_group(t.src->group, t.dst->group)) return {{"SHAPE", "endpoints over different 2-groups"}};
    if (t.mu.degree() != 1 || !(*t.mu.bimodule() == *level_bimodule(*t.src, *t.dst)))
        return {{"SHAPE", "mu is not a 1-cochain in Hom(U0, V1)"}};
    return validate_inter_full(expand(*t.src), expand(*t.dst), t.r1, t.r0, t.mu.values());
}

Violations validate_inter2(const Inter2& w) {
    const Inter1& t = w.src;
    const Inter1& s = w.dst;
    if (!same_rep(t.src, s.src) || !same_rep(t.dst, s.dst)) return {{"SHAPE", "2-intertwiner between non-parallel 1-cells"}};
    const RepFull u = expand(*t.src);
    const RepFull v = expand(*t.dst);
    if (!has_shape(w.omega, v.space.dim1(), u.space.dim0())) return {{"SHAPE", "omega has the wrong shape"}};
    Violations out;
    if (!(s.r1 - t.r1 == w.omega * u.space.d())) out.push_back({"2I-LEVEL1", ""});
    if (!(s.r0 - t.r0 == v.space.d() * w.omega)) out.push_back({"2I-LEVEL0", ""});
    for (Element a = 0; a < u.group->pi0.order(); ++a)
        if (!(v.f1[a] * w.omega + t.mu.at(a) == s.mu.at(a) + w.omega * u.f0[a]))
            out.push_back({"A2I", tuple_label("a", {a})});
    return out;
}

Inter1 identity_inter1(const RepPtr& r) {
    return Inter1{r, r, Matrix::identity(r->n1), Matrix::identity(r->n0), Cochain::zero(level_bimodule(*r, *r), 1)};
}

Inter1 compose_inter1(const Inter1& s, const Inter1& t) {
    if (!same_rep(t.dst, s.src)) throw AlgebraError(ErrorKind::composition, "compose_inter1: t.dst != s.src");
    auto bimodule = level_bimodule(*t.src, *s.dst);
    std::vector<Matrix> mu;
    mu.reserve(t.mu.values().size());
    for (std::size_t a = 0; a < t.mu.values().size(); ++a) mu.push_back(s.r1 * t.mu.at(a) + s.mu.at(a) * t.r0);
    return Inter1{t.src, s.dst, s.r1 * t.r1, s.r0 * t.r0, Cochain(std::move(bimodule), 1, std::move(mu))};
}

std::optional<Inter2> two_iso(const Inter1& t, const Inter1& s) {
    if (!same_rep(t.src, s.src) || !same_rep(t.dst, s.dst))
        throw AlgebraError(ErrorKind::composition, "two_iso: 1-intertwiners are not parallel");
    if (!(t.r1 == s.r1) || !(t.r0 == s.r0)) return std::nullopt;
    const auto omega = cohomologous(s.mu, t.mu);
    if (!omega) return std::nullopt;
    Inter2 w{t, s, omega->at(0)};
    const Violations v = validate_inter2(w);
    if (!v.empty()) throw AlgebraError(ErrorKind::invariant, "two_iso witness failed: " + v.front().to_string());
    return w;
}

Strictification strictify(const RepPtr& r) {
    for (const Matrix& b : r->beta)
        if (!b.is_zero()) throw AlgebraError(ErrorKind::nonzero_beta, "strictify needs beta = 0");
    auto strict = std::make_shared<const RepReduced>(strict_rep(r->group, r->rho1, r->rho0));
    const Cochain mu = averaging_contraction(r->c);
    const Matrix I1 = Matrix::identity(r->n1), I0 = Matrix::identity(r->n0);
    Inter1 forward{r, strict, I1, I0, Cochain(level_bimodule(*r, *strict), 1, mu.values())};
    Inter1 backward{strict, r, I1, I0, Cochain(level_bimodule(*strict, *r), 1, (-mu).values())};
    return {*strict, std::move(forward), std::move(backward)};
}

HomClasses hom_classes(const RepReduced& r, const RepReduced& r2) {
    if (!is_strict(r) || !is_strict(r2)) throw AlgebraError(ErrorKind::strictify_first, "hom_classes needs strict representations");
    const FinGroup& G = r.group->pi0;
    return {intertwiner_space(Rep1{G, r.n1, r.rho1}, Rep1{G, r2.n1, r2.rho1}),
            intertwiner_space(Rep1{G, r.n0, r.rho0}, Rep1{G, r2.n0, r2.rho0})};
}

Inter1 canonical_inter1(const RepPtr& r, const RepPtr& r2, const Matrix& r1, const Matrix& r0) {
    if (!is_strict(*r) || !is_strict(*r2)) throw AlgebraError(ErrorKind::strictify_first, "canonical representatives need strict representations");
    Inter1 t{r, r2, r1, r0, Cochain::zero(level_bimodule(*r, *r2), 1)};
    const Violations v = validate_inter1(t);
    if (!v.empty()) throw AlgebraError(ErrorKind::invariant, "not an intertwiner pair: " + v.front().to_string());
    return t;
}

}  // namespace bcrep
