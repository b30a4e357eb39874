#include "bcrep/io.hpp"

#include <fstream>
#include <functional>
#include <sstream>

namespace bcrep {

ParseError::ParseError(std::string position, const std::string& message)
    : std::runtime_error("parse error at " + position + ": " + message), position_(std::move(position)) {}

namespace {

namespace fs = std::filesystem;
using Leaf = std::function<void(const Json&, const std::string&)>;

std::string line_column(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::string child(const std::string& at, const std::string& key) { return at + "/" + key; }
std::string child(const std::string& at, std::size_t index) { return at + "/" + std::to_string(index); }

const Json& field(const Json& j, const char* key, const std::string& at) {
    if (!j.is_object()) throw ParseError(at.empty() ? "/" : at, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) throw ParseError(child(at, key), "missing key");
    return *it;
}

const Json& array(const Json& j, const std::string& at, std::optional<std::size_t> size = std::nullopt) {
    if (!j.is_array()) throw ParseError(at, "expected an array");
    if (size && j.size() != *size)
        throw ParseError(at, "expected " + std::to_string(*size) + " entries, found " + std::to_string(j.size()));
    return j;
}

std::size_t natural(const Json& j, const std::string& at) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        throw ParseError(at, "expected a non-negative integer");
    return j.get<std::size_t>();
}

Rat rat_from_json(const Json& j, const std::string& at) {
    if (j.is_number_integer()) return Rat(std::to_string(j.get<long long>()));
    if (!j.is_string()) throw ParseError(at, "expected a rational string \"p/q\"");
    try {
        return parse_rat(j.get<std::string>());
    } catch (const AlgebraError& e) {
        throw ParseError(at, e.what());
    }
}

Matrix shaped(const Json& j, const std::string& at, std::size_t rows, std::size_t cols) {
    Matrix m = matrix_from_json(j, at);
    if (m.rows() == 0 && rows == 0 && j.is_array()) return Matrix(0, cols);
    if (m.rows() != rows || m.cols() != cols)
        throw ParseError(at, "expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix, found " +
                                 std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    return m;
}

std::vector<Matrix> shaped_list(const Json& j, const std::string& at, std::size_t count, std::size_t rows,
                                std::size_t cols) {
    array(j, at, count);
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(shaped(j[i], child(at, i), rows, cols));
    return out;
}

/// Visits a depth-deep nested array of side order in row-major tuple order.
void nested(const Json& j, const std::string& at, std::size_t depth, std::size_t order, const Leaf& leaf) {
    if (depth == 0) {
        leaf(j, at);
        return;
    }
    array(j, at, order);
    for (std::size_t i = 0; i < order; ++i) nested(j[i], child(at, i), depth - 1, order, leaf);
}

std::vector<Matrix> shaped_nested(const Json& j, const std::string& at, std::size_t depth, std::size_t order,
                                  std::size_t rows, std::size_t cols) {
    std::vector<Matrix> out;
    nested(j, at, depth, order, [&](const Json& leaf, const std::string& where) { out.push_back(shaped(leaf, where, rows, cols)); });
    return out;
}

Json nested_to_json(const std::vector<Json>& flat, std::size_t depth, std::size_t order, std::size_t& pos) {
    if (depth == 0) return flat[pos++];
    Json out = Json::array();
    for (std::size_t i = 0; i < order; ++i) out.push_back(nested_to_json(flat, depth - 1, order, pos));
    return out;
}

Json nested_to_json(const std::vector<Matrix>& values, std::size_t depth, std::size_t order) {
    std::vector<Json> flat;
    for (const Matrix& m : values) flat.push_back(matrix_to_json(m));
    std::size_t pos = 0;
    return nested_to_json(flat, depth, order, pos);
}

Table table_from_json(const Json& j, const std::string& at, std::size_t order) {
    array(j, at, order);
    Table t(order);
    for (std::size_t a = 0; a < order; ++a) {
        array(j[a], child(at, a), order);
        for (std::size_t b = 0; b < order; ++b) t[a].push_back(natural(j[a][b], child(child(at, a), b)));
    }
    return t;
}

Element tuple_from_json(const Json& j, const std::string& at, const FinAbGroup& pi1) {
    array(j, at, pi1.rank());
    std::vector<std::size_t> residues;
    for (std::size_t i = 0; i < pi1.rank(); ++i) {
        const std::size_t r = natural(j[i], child(at, i));
        if (r >= pi1.invariant_factors()[i]) throw ParseError(child(at, i), "residue out of range");
        residues.push_back(r);
    }
    return pi1.encode(residues);
}

Json tuple_to_json(const FinAbGroup& pi1, Element x) {
    Json out = Json::array();
    for (std::size_t r : pi1.decode(x)) out.push_back(r);
    return out;
}

FinGroup group_table_from_json(const Json& j, const std::string& at) {
    const std::size_t n = natural(field(j, "order", at), child(at, "order"));
    const Table t = table_from_json(field(j, "mult", at), child(at, "mult"), n);
    return FinGroup(t);
}

Document load(const Json& ref, const fs::path& base, const std::string& at) {
    if (!ref.is_string()) throw ParseError(at, "expected a file reference");
    try {
        return read_document(base / ref.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(at + " -> " + ref.get<std::string>() + " " + e.position(), e.what());
    }
}

void expect_kind(const Document& d, const std::string& kind, const std::string& at) {
    if (d.kind != kind) throw ParseError(at, "referenced file has kind \"" + d.kind + "\", expected \"" + kind + "\"");
}

}  // namespace

Document read_document(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string(), "cannot read file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    Document doc;
    try {
        doc.json = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path.string() + ": " + line_column(text, e.byte), "invalid JSON");
    }
    const auto it = doc.json.is_object() ? doc.json.find("kind") : doc.json.end();
    if (it == doc.json.end() || !it->is_string()) throw ParseError(path.string() + ": /kind", "missing \"kind\" field");
    doc.kind = it->get<std::string>();
    doc.base = path.parent_path();
    return doc;
}

void write_json(const fs::path& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError(path.string(), "cannot write file");
    out << j.dump(1) << '\n';
}

Json rat_to_json(const Rat& r) { return format_rat(r); }

Json matrix_to_json(const Matrix& m) {
    if (m.rows() == 0) return Json{{"rows", 0}, {"cols", m.cols()}, {"data", Json::array()}};
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_json(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

Matrix matrix_from_json(const Json& j, const std::string& at) {
    if (j.is_object()) {
        const std::size_t rows = natural(field(j, "rows", at), child(at, "rows"));
        const std::size_t cols = natural(field(j, "cols", at), child(at, "cols"));
        const Json& data = field(j, "data", at);
        array(data, child(at, "data"), rows);
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            const std::string row_at = child(child(at, "data"), i);
            array(data[i], row_at, cols);
            for (std::size_t k = 0; k < cols; ++k) m(i, k) = rat_from_json(data[i][k], child(row_at, k));
        }
        return m;
    }
    array(j, at);
    const std::size_t rows = j.size();
    const std::size_t cols = rows == 0 ? 0 : array(j[0], child(at, 0)).size();
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        array(j[i], child(at, i), cols);
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = rat_from_json(j[i][k], child(child(at, i), k));
    }
    return m;
}

// ---------------------------------------------------------------------------
// 2-groups

Table pi0_table_from_json(const Json& j, const std::string& at) {
    const Json& pi0j = field(j, "pi0", at);
    const std::size_t n = natural(field(pi0j, "order", child(at, "pi0")), child(at, "pi0/order"));
    if (n == 0) throw ParseError(child(at, "pi0/order"), "order must be positive");
    return table_from_json(field(pi0j, "mult", child(at, "pi0")), child(at, "pi0/mult"), n);
}

TwoGroupData two_group_from_json(const Json& j, const std::string& at) {
    const Table mult = pi0_table_from_json(j, at);
    const std::size_t n = mult.size();

    const Json& factors_j = array(field(field(j, "pi1", at), "invariant_factors", child(at, "pi1")),
                                  child(at, "pi1/invariant_factors"));
    std::vector<std::size_t> factors;
    for (std::size_t i = 0; i < factors_j.size(); ++i) {
        const std::size_t f = natural(factors_j[i], child(at, "pi1/invariant_factors/" + std::to_string(i)));
        if (f < 2) throw ParseError(child(at, "pi1/invariant_factors/" + std::to_string(i)), "invariant factors must be >= 2");
        factors.push_back(f);
    }
    const FinAbGroup pi1(factors);

    FinGroup pi0(mult);

    const std::string act_at = child(at, "action");
    const Json& act = array(field(j, "action", at), act_at, n);
    ActionTable action(n);
    for (std::size_t g = 0; g < n; ++g) {
        array(act[g], child(act_at, g), pi1.order());
        for (std::size_t a = 0; a < pi1.order(); ++a)
            action[g].push_back(tuple_from_json(act[g][a], child(child(act_at, g), a), pi1));
    }
    Cocycle3 z = Cocycle3::zero(n);
    std::size_t pos = 0;
    nested(field(j, "z", at), child(at, "z"), 3, n,
           [&](const Json& leaf, const std::string& where) { z.table[pos++] = tuple_from_json(leaf, where, pi1); });
    return TwoGroupData{std::move(pi0), pi1, std::move(action), std::move(z)};
}

Json two_group_to_json(const TwoGroupData& g) {
    const std::size_t n = g.pi0.order();
    Json action = Json::array();
    for (std::size_t x = 0; x < n; ++x) {
        Json row = Json::array();
        for (std::size_t a = 0; a < g.pi1.order(); ++a) row.push_back(tuple_to_json(g.pi1, g.act(x, a)));
        action.push_back(std::move(row));
    }
    std::vector<Json> flat;
    for (Element v : g.z.table) flat.push_back(tuple_to_json(g.pi1, v));
    std::size_t pos = 0;
    return Json{{"kind", "twogroup"},
                {"pi0", {{"order", n}, {"mult", g.pi0.table()}}},
                {"pi1", {{"invariant_factors", g.pi1.invariant_factors()}}},
                {"action", std::move(action)},
                {"z", nested_to_json(flat, 3, n, pos)}};
}

TwoGroupPtr group_reference(const Json& j, const fs::path& base, const std::string& at) {
    if (j.is_string()) {
        const Document d = load(j, base, at);
        expect_kind(d, "twogroup", at);
        TwoGroupData g = two_group_from_json(d.json, "");
        return make_two_group(std::move(g.pi0), std::move(g.pi1), std::move(g.action), std::move(g.z));
    }
    TwoGroupData g = two_group_from_json(j, at);
    return make_two_group(std::move(g.pi0), std::move(g.pi1), std::move(g.action), std::move(g.z));
}

// ---------------------------------------------------------------------------
// Complexes and cells

TwoVect complex_from_json(const Json& j, const std::string& at) {
    const Json& dj = field(j, "d", at);
    if (j.contains("dims")) {
        const Json& dims = array(j["dims"], child(at, "dims"), 2);
        return TwoVect(shaped(dj, child(at, "d"), natural(dims[1], child(at, "dims/1")), natural(dims[0], child(at, "dims/0"))));
    }
    return TwoVect(matrix_from_json(dj, child(at, "d")));
}

Json complex_to_json(const TwoVect& v) {
    return Json{{"kind", "complex"}, {"dims", {v.dim1(), v.dim0()}}, {"d", matrix_to_json(v.d())}};
}

OneCell onecell_from_json(const Json& j, const std::string& at) {
    TwoVect src = complex_from_json(field(j, "src", at), child(at, "src"));
    TwoVect dst = complex_from_json(field(j, "dst", at), child(at, "dst"));
    Matrix f1 = shaped(field(j, "f1", at), child(at, "f1"), dst.dim1(), src.dim1());
    Matrix f0 = shaped(field(j, "f0", at), child(at, "f0"), dst.dim0(), src.dim0());
    return OneCell(std::move(src), std::move(dst), std::move(f1), std::move(f0));
}

Json onecell_to_json(const OneCell& f) {
    return Json{{"kind", "onecell"},
                {"src", complex_to_json(f.src())},
                {"dst", complex_to_json(f.dst())},
                {"f1", matrix_to_json(f.f1())},
                {"f0", matrix_to_json(f.f0())}};
}

TwoCell twocell_from_json(const Json& j, const std::string& at) {
    OneCell src = onecell_from_json(field(j, "src", at), child(at, "src"));
    OneCell dst = onecell_from_json(field(j, "dst", at), child(at, "dst"));
    Matrix sigma = shaped(field(j, "sigma", at), child(at, "sigma"), src.dst().dim1(), src.src().dim0());
    return TwoCell(std::move(src), std::move(dst), std::move(sigma));
}

Json twocell_to_json(const TwoCell& s) {
    return Json{{"kind", "twocell"},
                {"src", onecell_to_json(s.src())},
                {"dst", onecell_to_json(s.dst())},
                {"sigma", matrix_to_json(s.sigma())}};
}

// ---------------------------------------------------------------------------
// Representations

RepReduced rep_from_json(const Json& j, const fs::path& base, const std::string& at) {
    TwoGroupPtr g = group_reference(field(j, "group", at), base, child(at, "group"));
    const Json& dims = array(field(j, "dims", at), child(at, "dims"), 2);
    const std::size_t n1 = natural(dims[0], child(at, "dims/0")), n0 = natural(dims[1], child(at, "dims/1"));
    const std::size_t n = g->pi0.order();
    auto rho1 = shaped_list(field(j, "rho1", at), child(at, "rho1"), n, n1, n1);
    auto rho0 = shaped_list(field(j, "rho0", at), child(at, "rho0"), n, n0, n0);
    std::vector<Matrix> beta(g->pi1.rank(), Matrix(n1, n0));
    if (j.contains("beta")) beta = shaped_list(j["beta"], child(at, "beta"), g->pi1.rank(), n1, n0);
    std::vector<Matrix> c(n * n, Matrix(n1, n0));
    if (j.contains("c")) c = shaped_nested(j["c"], child(at, "c"), 2, n, n1, n0);
    RepReduced r = make_rep_reduced(g, std::move(rho1), std::move(rho0), std::move(beta), std::move(c));
    r.n1 = n1;
    r.n0 = n0;
    return r;
}

RepReduced rep_reference(const Json& j, const fs::path& base, const std::string& at) {
    if (j.is_string()) {
        const Document d = load(j, base, at);
        expect_kind(d, "representation", at);
        return rep_from_json(d.json, d.base, "");
    }
    return rep_from_json(j, base, at);
}

Json rep_to_json(const RepReduced& r) {
    Json rho1 = Json::array(), rho0 = Json::array(), beta = Json::array();
    for (const Matrix& m : r.rho1) rho1.push_back(matrix_to_json(m));
    for (const Matrix& m : r.rho0) rho0.push_back(matrix_to_json(m));
    for (const Matrix& m : r.beta) beta.push_back(matrix_to_json(m));
    Json group = two_group_to_json(*r.group);
    group.erase("kind");
    return Json{{"kind", "representation"},
                {"group", std::move(group)},
                {"dims", {r.n1, r.n0}},
                {"rho1", std::move(rho1)},
                {"rho0", std::move(rho0)},
                {"beta", std::move(beta)},
                {"c", nested_to_json(r.c.values(), 2, r.group->pi0.order())}};
}

RepFull rep_full_from_json(const Json& j, const fs::path& base, const std::string& at) {
    TwoGroupPtr g = group_reference(field(j, "group", at), base, child(at, "group"));
    TwoVect space = complex_from_json(j, at);
    const std::size_t n = g->pi0.order(), m = g->pi1.order();
    const std::size_t v1 = space.dim1(), v0 = space.dim0();
    RepFull r{g, space, {}, {}, {}, {}, Matrix(v1, v0)};
    r.f1 = shaped_list(field(j, "f1", at), child(at, "f1"), n, v1, v1);
    r.f0 = shaped_list(field(j, "f0", at), child(at, "f0"), n, v0, v0);
    // tau_mor[g][x] for the morphism (x, g).
    const std::string mor_at = child(at, "tau_mor");
    const Json& mor = array(field(j, "tau_mor", at), mor_at, n);
    for (std::size_t x = 0; x < n; ++x) {
        auto row = shaped_list(mor[x], child(mor_at, x), m, v1, v0);
        r.tau_mor.insert(r.tau_mor.end(), row.begin(), row.end());
    }
    r.tau_tens = shaped_nested(field(j, "tau_tens", at), child(at, "tau_tens"), 2, n, v1, v0);
    r.tau_e = shaped(field(j, "tau_e", at), child(at, "tau_e"), v1, v0);
    return r;
}

Inter1 inter1_from_json(const Json& j, const fs::path& base, const std::string& at) {
    auto u = std::make_shared<const RepReduced>(rep_reference(field(j, "src", at), base, child(at, "src")));
    auto v = std::make_shared<const RepReduced>(rep_reference(field(j, "dst", at), base, child(at, "dst")));
    Matrix r1 = shaped(field(j, "r1", at), child(at, "r1"), v->n1, u->n1);
    Matrix r0 = shaped(field(j, "r0", at), child(at, "r0"), v->n0, u->n0);
    auto mu = shaped_list(field(j, "mu", at), child(at, "mu"), u->group->pi0.order(), v->n1, u->n0);
    if (!(u->group->pi0 == v->group->pi0)) throw ParseError(at, "endpoints over different groups");
    auto bimodule = level_bimodule(*u, *v);
    return Inter1{u, v, std::move(r1), std::move(r0), Cochain(std::move(bimodule), 1, std::move(mu))};
}

Json inter1_to_json(const Inter1& t) {
    Json mu = Json::array();
    for (const Matrix& m : t.mu.values()) mu.push_back(matrix_to_json(m));
    return Json{{"kind", "inter1"},
                {"src", rep_to_json(*t.src)},
                {"dst", rep_to_json(*t.dst)},
                {"r1", matrix_to_json(t.r1)},
                {"r0", matrix_to_json(t.r0)},
                {"mu", std::move(mu)}};
}

Inter2 inter2_from_json(const Json& j, const fs::path& base, const std::string& at) {
    auto one = [&](const char* key) {
        const Json& ref = field(j, key, at);
        if (ref.is_string()) {
            const Document d = load(ref, base, child(at, key));
            expect_kind(d, "inter1", child(at, key));
            return inter1_from_json(d.json, d.base, "");
        }
        return inter1_from_json(ref, base, child(at, key));
    };
    Inter1 src = one("src");
    Inter1 dst = one("dst");
    Matrix omega = shaped(field(j, "omega", at), child(at, "omega"), src.dst->n1, src.src->n0);
    return Inter2{std::move(src), std::move(dst), std::move(omega)};
}

// ---------------------------------------------------------------------------
// Cochains

Cochain cochain_from_json(const Json& j, const fs::path& base, const std::string& at) {
    const Json& gj = field(j, "group", at);
    FinGroup g = FinGroup::trivial();
    if (gj.is_string() || gj.contains("pi0")) g = group_reference(gj, base, child(at, "group"))->pi0;
    else g = group_table_from_json(gj, child(at, "group"));
    const std::size_t n = g.order();
    const std::size_t degree = natural(field(j, "degree", at), child(at, "degree"));
    const std::size_t rows = natural(field(j, "rows", at), child(at, "rows"));
    const std::size_t cols = natural(field(j, "cols", at), child(at, "cols"));
    Bimodule m = Bimodule::trivial(g, rows, cols);
    if (j.contains("left")) m.left = shaped_list(j["left"], child(at, "left"), n, rows, rows);
    if (j.contains("right")) m.right = shaped_list(j["right"], child(at, "right"), n, cols, cols);
    auto values = shaped_nested(field(j, "values", at), child(at, "values"), degree, n, rows, cols);
    return Cochain(make_bimodule(std::move(m)), degree, std::move(values));
}

Json cochain_to_json(const Cochain& c) {
    const Bimodule& m = *c.bimodule();
    Json left = Json::array(), right = Json::array();
    for (const Matrix& x : m.left) left.push_back(matrix_to_json(x));
    for (const Matrix& x : m.right) right.push_back(matrix_to_json(x));
    return Json{{"kind", "cochain"},
                {"group", {{"order", m.group.order()}, {"mult", m.group.table()}}},
                {"degree", c.degree()},
                {"rows", m.rows},
                {"cols", m.cols},
                {"left", std::move(left)},
                {"right", std::move(right)},
                {"values", nested_to_json(c.values(), c.degree(), m.group.order())}};
}

}  // namespace bcrep
