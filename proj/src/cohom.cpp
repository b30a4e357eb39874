#include "bcrep/cohom.hpp"

#include <algorithm>
#include <string>

namespace bcrep {

Bimodule Bimodule::trivial(const FinGroup& group, std::size_t rows, std::size_t cols) {
    return {group, rows, cols, std::vector<Matrix>(group.order(), Matrix::identity(rows)),
            std::vector<Matrix>(group.order(), Matrix::identity(cols))};
}

Violations bimodule_violations(const Bimodule& m) {
    Violations out;
    const std::size_t n = m.group.order();
    if (m.left.size() != n || m.right.size() != n) {
        out.push_back({"BIMODULE-SHAPE", "action tables must have one matrix per element"});
        return out;
    }
    for (Element g = 0; g < n; ++g) {
        if (m.left[g].rows() != m.rows || m.left[g].cols() != m.rows || m.right[g].rows() != m.cols ||
            m.right[g].cols() != m.cols) {
            out.push_back({"BIMODULE-SHAPE", tuple_label("g", {g})});
            return out;
        }
    }
    if (!(m.left[0] == Matrix::identity(m.rows))) out.push_back({"LEFT-IDENTITY", ""});
    if (!(m.right[0] == Matrix::identity(m.cols))) out.push_back({"RIGHT-IDENTITY", ""});
    for (Element g = 0; g < n; ++g)
        for (Element h = 0; h < n; ++h) {
            if (!(m.left[g] * m.left[h] == m.left[m.group.mul(g, h)]))
                out.push_back({"LEFT-HOM", tuple_label("g,h", {g, h})});
            if (!(m.right[g] * m.right[h] == m.right[m.group.mul(g, h)]))
                out.push_back({"RIGHT-HOM", tuple_label("g,h", {g, h})});
        }
    return out;
}

BimodulePtr make_bimodule(Bimodule m) {
    const Violations v = bimodule_violations(m);
    if (!v.empty()) throw AlgebraError(ErrorKind::invariant, "invalid bimodule: " + v.front().to_string());
    return std::make_shared<const Bimodule>(std::move(m));
}

std::size_t power(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    while (exp--) r *= base;
    return r;
}

std::size_t tuple_index(std::span<const Element> args, std::size_t order) {
    std::size_t idx = 0;
    for (Element g : args) idx = idx * order + g;
    return idx;
}

std::vector<Element> index_tuple(std::size_t index, std::size_t degree, std::size_t order) {
    std::vector<Element> t(degree);
    for (std::size_t i = degree; i-- > 0;) {
        t[i] = index % order;
        index /= order;
    }
    return t;
}

// ---------------------------------------------------------------------------
// Cochain

Cochain::Cochain(BimodulePtr bimodule, std::size_t degree, std::vector<Matrix> values)
    : bimodule_(std::move(bimodule)), degree_(degree), values_(std::move(values)) {
    if (!bimodule_) throw AlgebraError(ErrorKind::shape, "cochain without bimodule");
    if (values_.size() != power(bimodule_->group.order(), degree_)) {
        throw AlgebraError(ErrorKind::shape, "cochain of degree " + std::to_string(degree_) + " needs " +
                                                 std::to_string(power(bimodule_->group.order(), degree_)) +
                                                 " values, got " + std::to_string(values_.size()));
    }
    for (const Matrix& v : values_) {
        if (v.rows() != bimodule_->rows || v.cols() != bimodule_->cols) {
            throw AlgebraError(ErrorKind::shape, "cochain value has the wrong shape");
        }
    }
}

Cochain Cochain::zero(BimodulePtr bimodule, std::size_t degree) {
    const std::size_t count = power(bimodule->group.order(), degree);
    const Matrix z(bimodule->rows, bimodule->cols);
    return Cochain(std::move(bimodule), degree, std::vector<Matrix>(count, z));
}

const Matrix& Cochain::operator()(std::span<const Element> args) const {
    if (args.size() != degree_) throw AlgebraError(ErrorKind::shape, "cochain evaluated at the wrong arity");
    return values_[tuple_index(args, group().order())];
}

const Matrix& Cochain::operator()(std::initializer_list<Element> args) const {
    return (*this)(std::span<const Element>(args.begin(), args.size()));
}

bool Cochain::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const Matrix& m) { return m.is_zero(); });
}

bool Cochain::is_normalized() const {
    const std::size_t n = group().order();
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const auto t = index_tuple(i, degree_, n);
        if (std::find(t.begin(), t.end(), Element{0}) != t.end() && !values_[i].is_zero()) return false;
    }
    return true;
}

Cochain& Cochain::operator+=(const Cochain& other) {
    if (degree_ != other.degree_ || !(*bimodule_ == *other.bimodule_))
        throw AlgebraError(ErrorKind::shape, "adding cochains of different degree or bimodule");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& other) {
    if (degree_ != other.degree_ || !(*bimodule_ == *other.bimodule_))
        throw AlgebraError(ErrorKind::shape, "subtracting cochains of different degree or bimodule");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
    return *this;
}

Cochain operator*(const Rat& s, Cochain c) {
    for (auto& v : c.values_) v *= s;
    return c;
}

bool Cochain::operator==(const Cochain& other) const {
    return degree_ == other.degree_ && (bimodule_ == other.bimodule_ || *bimodule_ == *other.bimodule_) &&
           values_ == other.values_;
}

// ---------------------------------------------------------------------------
// Differential and contraction

Cochain coboundary(const Cochain& c) {
    const Bimodule& m = *c.bimodule();
    const FinGroup& G = m.group;
    const std::size_t n = c.degree();
    const std::size_t ord = G.order();
    const std::size_t count = power(ord, n + 1);
    std::vector<Matrix> out;
    out.reserve(count);
    std::vector<Element> face(n);
    for (std::size_t idx = 0; idx < count; ++idx) {
        const auto g = index_tuple(idx, n + 1, ord);
        // g1 . c(g2, ..., g_{n+1})
        std::copy(g.begin() + 1, g.end(), face.begin());
        Matrix value = m.left[g[0]] * c(face);
        for (std::size_t i = 1; i <= n; ++i) {
            // c(g1, ..., g_i g_{i+1}, ..., g_{n+1})
            std::size_t k = 0;
            for (std::size_t j = 0; j <= n; ++j) {
                if (j == i - 1) {
                    face[k++] = G.mul(g[j], g[j + 1]);
                    ++j;
                } else {
                    face[k++] = g[j];
                }
            }
            if (i % 2 == 1) value -= c(face);
            else value += c(face);
        }
        std::copy(g.begin(), g.end() - 1, face.begin());
        const Matrix last = c(face) * m.right[g[n]];
        if ((n + 1) % 2 == 1) value -= last;
        else value += last;
        out.push_back(std::move(value));
    }
    return Cochain(c.bimodule(), n + 1, std::move(out));
}

bool is_cocycle(const Cochain& c) { return coboundary(c).is_zero(); }

Cochain averaging_contraction(const Cochain& z) {
    const std::size_t n = z.degree();
    if (n == 0) throw AlgebraError(ErrorKind::shape, "averaging contraction needs degree >= 1");
    if (!is_cocycle(z)) throw AlgebraError(ErrorKind::not_cocycle, "averaging contraction of a non-cocycle");
    const Bimodule& m = *z.bimodule();
    const FinGroup& G = m.group;
    const std::size_t ord = G.order();
    const Rat scale = Rat(n % 2 == 0 ? 1 : -1) / Rat(static_cast<unsigned long>(ord));
    const std::size_t count = power(ord, n - 1);
    std::vector<Matrix> out;
    out.reserve(count);
    std::vector<Element> args(n);
    for (std::size_t idx = 0; idx < count; ++idx) {
        const auto g = index_tuple(idx, n - 1, ord);
        std::copy(g.begin(), g.end(), args.begin());
        Matrix sum(m.rows, m.cols);
        for (Element k = 0; k < ord; ++k) {
            args[n - 1] = k;
            sum += z(args) * m.right[G.inv(k)];
        }
        out.push_back(scale * std::move(sum));
    }
    Cochain c(z.bimodule(), n - 1, std::move(out));
    if (!(coboundary(c) == z)) throw AlgebraError(ErrorKind::invariant, "averaging contraction failed to bound z");
    return c;
}

Matrix cochain_vector(const Cochain& c) {
    const Bimodule& m = *c.bimodule();
    const std::size_t block = m.rows * m.cols;
    Matrix v(c.values().size() * block, 1);
    for (std::size_t t = 0; t < c.values().size(); ++t)
        for (std::size_t p = 0; p < m.rows; ++p)
            for (std::size_t q = 0; q < m.cols; ++q) v(t * block + p * m.cols + q, 0) = c.at(t)(p, q);
    return v;
}

Cochain cochain_from_vector(const BimodulePtr& m, std::size_t degree, const Matrix& v) {
    const std::size_t count = power(m->group.order(), degree);
    const std::size_t block = m->rows * m->cols;
    if (v.rows() != count * block || v.cols() != 1) throw AlgebraError(ErrorKind::shape, "cochain vector length");
    std::vector<Matrix> values(count, Matrix(m->rows, m->cols));
    for (std::size_t t = 0; t < count; ++t)
        for (std::size_t p = 0; p < m->rows; ++p)
            for (std::size_t q = 0; q < m->cols; ++q) values[t](p, q) = v(t * block + p * m->cols + q, 0);
    return Cochain(m, degree, std::move(values));
}

Matrix coboundary_matrix(const BimodulePtr& mp, std::size_t n) {
    const Bimodule& m = *mp;
    const FinGroup& G = m.group;
    const std::size_t ord = G.order();
    const std::size_t r = m.rows, c = m.cols, block = r * c;
    const std::size_t src_count = power(ord, n), dst_count = power(ord, n + 1);
    Matrix D(dst_count * block, src_count * block);
    std::vector<Element> face(n);
    for (std::size_t idx = 0; idx < dst_count; ++idx) {
        const auto g = index_tuple(idx, n + 1, ord);
        const std::size_t row0 = idx * block;
        // g1 . x(g2..): coefficient left[g1](p, s) on x(g2..)(s, q)
        std::copy(g.begin() + 1, g.end(), face.begin());
        std::size_t col0 = tuple_index(face, ord) * block;
        for (std::size_t p = 0; p < r; ++p)
            for (std::size_t s = 0; s < r; ++s) {
                const Rat& a = m.left[g[0]](p, s);
                if (sgn(a) == 0) continue;
                for (std::size_t q = 0; q < c; ++q) D(row0 + p * c + q, col0 + s * c + q) += a;
            }
        for (std::size_t i = 1; i <= n; ++i) {
            std::size_t k = 0;
            for (std::size_t j = 0; j <= n; ++j) {
                if (j == i - 1) {
                    face[k++] = G.mul(g[j], g[j + 1]);
                    ++j;
                } else {
                    face[k++] = g[j];
                }
            }
            col0 = tuple_index(face, ord) * block;
            const int sign = i % 2 == 1 ? -1 : 1;
            for (std::size_t e = 0; e < block; ++e) D(row0 + e, col0 + e) += sign;
        }
        // (-1)^{n+1} x(g1..gn) . g_{n+1}: coefficient right[g_{n+1}](s, q) on x(..)(p, s)
        std::copy(g.begin(), g.end() - 1, face.begin());
        col0 = tuple_index(face, ord) * block;
        const int sign = (n + 1) % 2 == 1 ? -1 : 1;
        for (std::size_t s = 0; s < c; ++s)
            for (std::size_t q = 0; q < c; ++q) {
                const Rat& a = m.right[g[n]](s, q);
                if (sgn(a) == 0) continue;
                for (std::size_t p = 0; p < r; ++p) D(row0 + p * c + q, col0 + p * c + s) += sign * a;
            }
    }
    return D;
}

std::optional<Cochain> cohomologous(const Cochain& c1, const Cochain& c2) {
    if (c1.degree() != c2.degree() || !(*c1.bimodule() == *c2.bimodule()))
        throw AlgebraError(ErrorKind::shape, "cohomologous: degree or bimodule mismatch");
    if (c1.degree() == 0) throw AlgebraError(ErrorKind::shape, "cohomologous: degree-0 cochains have no coboundaries");
    const std::size_t n = c1.degree() - 1;
    const auto x = solve(coboundary_matrix(c1.bimodule(), n), cochain_vector(c1 - c2));
    if (!x) return std::nullopt;
    Cochain result = cochain_from_vector(c1.bimodule(), n, *x);
    if (!(coboundary(result) == c1 - c2)) throw AlgebraError(ErrorKind::invariant, "cohomologous: solve is inconsistent");
    return result;
}

CohomologyDims cohomology_dims(const BimodulePtr& m, std::size_t degree) {
    CohomologyDims d;
    d.cochains = power(m->group.order(), degree) * m->rows * m->cols;
    d.cocycles = d.cochains - rank(coboundary_matrix(m, degree));
    d.coboundaries = degree == 0 ? 0 : rank(coboundary_matrix(m, degree - 1));
    return d;
}

}  // namespace bcrep
