#include "gcoring/structure_file.hpp"

#include <gmp.h>

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "gcoring/error.hpp"

namespace gcoring {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

[[noreturn]] void semantic(const std::string& where, const std::string& msg) {
    throw Error(ErrorKind::SemanticError, where + ": " + msg);
}

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

bool is_prime(std::uint64_t p) {
    mpz_t z;
    mpz_init_set_ui(z, static_cast<unsigned long>(p));
    const int r = mpz_probab_prime_p(z, 40);
    mpz_clear(z);
    return r > 0;
}

const json& member(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) semantic(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) semantic(where, std::string("missing key \"") + key + "\"");
    return *it;
}

std::size_t size_value(const json& v, const std::string& where, std::size_t cap) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) semantic(where, "expected a non-negative integer");
    const auto n = v.get<std::uint64_t>();
    if (n > cap) semantic(where, "value " + std::to_string(n) + " exceeds the limit " + std::to_string(cap));
    return static_cast<std::size_t>(n);
}

std::string name_value(const json& v, const std::string& where) {
    if (!v.is_string()) semantic(where, "expected a name");
    return v.get<std::string>();
}

Scalar scalar_value(Field f, const json& v, const std::string& where) {
    std::string s;
    if (v.is_number_integer())
        s = v.is_number_unsigned() ? std::to_string(v.get<std::uint64_t>()) : std::to_string(v.get<std::int64_t>());
    else if (v.is_string())
        s = v.get<std::string>();
    else
        semantic(where, "entries are integers or \"p/q\" strings");
    try {
        return Scalar::parse(f, s);
    } catch (const Error& e) {
        semantic(where, e.what());
    }
}

// Rows as nested arrays, or {"rows": r, "cols": c, "entries": [...]} in row-major order.
Mat matrix_value(Field f, const json& v, const std::string& where) {
    if (v.is_object()) {
        const std::size_t r = size_value(member(v, "rows", where), where + ".rows", kMaxEntries);
        const std::size_t c = size_value(member(v, "cols", where), where + ".cols", kMaxEntries);
        if (r != 0 && c > kMaxEntries / r) semantic(where, "matrix too large");
        Mat m(f, r, c);
        auto it = v.find("entries");
        if (it == v.end()) return m;
        if (!it->is_array() || it->size() != r * c) semantic(where, "entries must list rows·cols values");
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = scalar_value(f, (*it)[i * c + j], where);
        return m;
    }
    if (!v.is_array() || v.empty()) semantic(where, "expected a matrix");
    const std::size_t r = v.size();
    if (!v[0].is_array()) semantic(where, "matrix rows must be arrays");
    const std::size_t c = v[0].size();
    if (c == 0 || (r != 0 && c > kMaxEntries / r)) semantic(where, "matrix has an invalid shape");
    Mat m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (!v[i].is_array() || v[i].size() != c) semantic(where, "ragged matrix at row " + std::to_string(i));
        for (std::size_t j = 0; j < c; ++j) m(i, j) = scalar_value(f, v[i][j], where);
    }
    return m;
}

// A flat array is a column vector.
Mat vector_value(Field f, const json& v, const std::string& where) {
    if (v.is_array() && !v.empty() && !v[0].is_array()) {
        if (v.size() > kMaxEntries) semantic(where, "vector too large");
        Mat m(f, v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = scalar_value(f, v[i], where);
        return m;
    }
    return matrix_value(f, v, where);
}

std::vector<Mat> matrix_list(Field f, const json& v, const std::string& where, bool vectors = false) {
    if (!v.is_array()) semantic(where, "expected a list of matrices");
    std::vector<Mat> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string w = where + "[" + std::to_string(i) + "]";
        out.push_back(vectors ? vector_value(f, v[i], w) : matrix_value(f, v[i], w));
    }
    return out;
}

void require_shape(const Mat& m, std::size_t r, std::size_t c, const std::string& where) {
    if (m.rows() != r || m.cols() != c)
        semantic(where, "expected a " + std::to_string(r) + "×" + std::to_string(c) + " matrix, got " +
                            std::to_string(m.rows()) + "×" + std::to_string(m.cols()));
}

template <class Map>
const typename Map::mapped_type& resolve(const Map& m, const json& v, const std::string& kind, const std::string& where) {
    const std::string name = name_value(v, where);
    auto it = m.find(name);
    if (it == m.end()) semantic(where, "unknown " + kind + " \"" + name + "\"");
    return it->second;
}

const json* section(const json& root, const char* key) {
    auto it = root.find(key);
    if (it == root.end()) return nullptr;
    if (!it->is_object()) semantic(key, "expected an object of named entries");
    return &*it;
}

void parse_body(const json& root, StructureFile& sf) {
    if (!root.is_object()) semantic("document", "top level must be an object");
    auto fit = root.find("field");
    if (fit == root.end()) throw ParseError(1, 1, "missing field declaration");
    const json& fv = *fit;
    if (fv.is_string() && fv.get<std::string>() == "Q") {
        sf.field = Field::rationals();
    } else if (fv.is_object() && fv.size() == 1 && fv.contains("Fp")) {
        const json& pv = fv["Fp"];
        if (!pv.is_number_unsigned() && !(pv.is_number_integer() && pv.get<std::int64_t>() > 0))
            semantic("field", "Fp needs a positive integer");
        const auto p = pv.get<std::uint64_t>();
        if (p >= (std::uint64_t(1) << 62)) semantic("field", "p must be below 2^62");
        if (!is_prime(p)) semantic("field", std::to_string(p) + " is not prime");
        sf.field = Field::prime(p);
    } else {
        semantic("field", "expected \"Q\" or {\"Fp\": p}");
    }
    const Field f = sf.field;

    const json& gv = member(root, "group", "document");
    const std::size_t order = size_value(member(gv, "order", "group"), "group.order", kMaxOrder);
    if (order == 0) semantic("group.order", "order must be positive");
    const json& tv = member(gv, "table", "group");
    if (!tv.is_array() || tv.size() != order) semantic("group.table", "needs one row per element");
    std::vector<std::vector<std::size_t>> table(order);
    for (std::size_t i = 0; i < order; ++i) {
        if (!tv[i].is_array() || tv[i].size() != order) semantic("group.table", "row " + std::to_string(i) + " has the wrong length");
        for (std::size_t j = 0; j < order; ++j) {
            const std::size_t v = size_value(tv[i][j], "group.table", kMaxOrder);
            if (v >= order) semantic("group.table", "entry out of range");
            table[i].push_back(v);
        }
    }
    try {
        sf.group = FiniteGroup::from_table(std::move(table));
    } catch (const Error& e) {
        semantic("group", e.what());
    }
    if (!validate_group(sf.group).ok()) semantic("group", "table is not a group with identity 0");
    const FiniteGroup& g = sf.group;
    const std::size_t n = g.order;

    if (const json* s = section(root, "algebras"))
        for (const auto& [name, v] : s->items()) {
            const std::string w = "algebra " + name;
            const std::size_t d = size_value(member(v, "dim", w), w + ".dim", kMaxDim);
            if (d * d * d > kMaxEntries) semantic(w, "dimension too large");
            Mat t = d == 0 ? Mat(f, 0, 0) : matrix_value(f, member(v, "table", w), w + ".table");
            require_shape(t, d, d * d, w + ".table");
            Mat u = d == 0 ? Mat(f, 0, 1) : vector_value(f, member(v, "unit", w), w + ".unit");
            require_shape(u, d, 1, w + ".unit");
            sf.algebras[name] = make_algebra(f, name, d, std::move(t), std::move(u));
        }

    if (const json* s = section(root, "bimodules"))
        for (const auto& [name, v] : s->items()) {
            const std::string w = "bimodule " + name;
            Bimodule m;
            m.field = f;
            m.dim = size_value(member(v, "dim", w), w + ".dim", kMaxDim);
            for (const char* side : {"left", "right"}) {
                auto it = v.find(side);
                if (it == v.end() || it->is_null()) continue;
                const AlgebraPtr& r = resolve(sf.algebras, *it, "algebra", w + "." + side);
                std::vector<Mat> acts = matrix_list(f, member(v, (std::string(side) + "_action").c_str(), w),
                                                    w + "." + side + "_action");
                if (acts.size() != r->dim) semantic(w, std::string("needs one ") + side + " action per basis element");
                for (const auto& a : acts) require_shape(a, m.dim, m.dim, w + "." + side + "_action");
                (std::string(side) == "left" ? m.left_ring : m.right_ring) = r;
                (std::string(side) == "left" ? m.left : m.right) = std::move(acts);
            }
            sf.bimodules[name] = std::move(m);
        }

    if (const json* s = section(root, "corings"))
        for (const auto& [name, v] : s->items()) {
            const std::string w = "coring " + name;
            const AlgebraPtr& a = resolve(sf.algebras, member(v, "base", w), "algebra", w + ".base");
            const json& cv = member(v, "components", w);
            if (!cv.is_array() || cv.size() != n) semantic(w + ".components", "needs one bimodule per group element");
            std::vector<Bimodule> comps;
            for (std::size_t i = 0; i < n; ++i) {
                const Bimodule& b = resolve(sf.bimodules, cv[i], "bimodule", w + ".components");
                if (!same_algebra(b.left_ring, a) || !same_algebra(b.right_ring, a))
                    semantic(w, "component " + cv[i].get<std::string>() + " is not an A-bimodule over the base");
                comps.push_back(b);
            }
            std::vector<Mat> delta = matrix_list(f, member(v, "delta", w), w + ".delta");
            if (delta.size() != n * n) semantic(w + ".delta", "needs |G|² maps");
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y)
                    require_shape(delta[x * n + y], comps[x].dim * comps[y].dim, comps[g.mul(x, y)].dim,
                                  w + ".delta[" + std::to_string(x * n + y) + "]");
            Mat counit = matrix_value(f, member(v, "counit", w), w + ".counit");
            require_shape(counit, a->dim, comps[0].dim, w + ".counit");
            sf.corings[name] = make_group_coring_from_ambient(g, a, std::move(comps), delta, std::move(counit));
        }

    if (const json* s = section(root, "grouplikes"))
        for (const auto& [name, v] : s->items()) {
            const std::string w = "grouplike " + name;
            const CoringPtr& c = resolve(sf.corings, member(v, "coring", w), "coring", w + ".coring");
            std::vector<Mat> xs = matrix_list(f, member(v, "elements", w), w + ".elements", true);
            if (xs.size() != n) semantic(w + ".elements", "needs one element per group element");
            for (std::size_t i = 0; i < n; ++i) require_shape(xs[i], c->comps[i].dim, 1, w + ".elements");
            sf.grouplikes[name] = GrouplikeFamily{c, std::move(xs)};
        }

    if (const json* s = section(root, "morphisms"))
        for (const auto& [name, v] : s->items()) {
            const std::string w = "morphism " + name;
            const AlgebraPtr& src = resolve(sf.algebras, member(v, "src", w), "algebra", w + ".src");
            const AlgebraPtr& dst = resolve(sf.algebras, member(v, "dst", w), "algebra", w + ".dst");
            Mat m = src->dim == 0 || dst->dim == 0 ? Mat(f, dst->dim, src->dim)
                                                   : matrix_value(f, member(v, "matrix", w), w + ".matrix");
            require_shape(m, dst->dim, src->dim, w + ".matrix");
            sf.morphisms[name] = RingMorphism{src, dst, std::move(m)};
        }

    if (const json* s = section(root, "witnesses"))
        for (const auto& [name, v] : s->items()) {
            const std::string w = "witness " + name;
            const CoringPtr& c = resolve(sf.corings, member(v, "coring", w), "coring", w + ".coring");
            std::vector<Mat> gs = matrix_list(f, member(v, "gammas", w), w + ".gammas");
            if (gs.size() != n) semantic(w + ".gammas", "needs one map per group element");
            for (std::size_t i = 0; i < n; ++i) require_shape(gs[i], c->comps[i].dim, c->comps[0].dim, w + ".gammas");
            sf.witnesses[name] = CofreeWitness{std::move(gs)};
        }

    if (const json* s = section(root, "hopf"))
        for (const auto& [name, v] : s->items()) {
            const std::string w = "hopf " + name;
            auto h = std::make_shared<HopfGCoalgebra>();
            h->group = g;
            h->field = f;
            const json& cv = member(v, "components", w);
            if (!cv.is_array() || cv.size() != n) semantic(w + ".components", "needs one algebra per group element");
            for (std::size_t i = 0; i < n; ++i) h->comps.push_back(resolve(sf.algebras, cv[i], "algebra", w + ".components"));
            h->delta = matrix_list(f, member(v, "delta", w), w + ".delta");
            if (h->delta.size() != n * n) semantic(w + ".delta", "needs |G|² maps");
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y)
                    require_shape(h->delta[x * n + y], h->comps[x]->dim * h->comps[y]->dim,
                                  h->comps[g.mul(x, y)]->dim, w + ".delta");
            h->counit = matrix_value(f, member(v, "counit", w), w + ".counit");
            require_shape(h->counit, 1, h->comps[0]->dim, w + ".counit");
            h->antipode = matrix_list(f, member(v, "antipode", w), w + ".antipode");
            if (h->antipode.size() != n) semantic(w + ".antipode", "needs one map per group element");
            for (std::size_t x = 0; x < n; ++x)
                require_shape(h->antipode[x], h->comps[x]->dim, h->comps[g.inverse(x)]->dim, w + ".antipode");
            sf.hopf[name] = h;
        }

    if (const json* s = section(root, "comodule_algebras"))
        for (const auto& [name, v] : s->items()) {
            const std::string w = "comodule algebra " + name;
            ComoduleAlgebra ca;
            ca.alg = resolve(sf.algebras, member(v, "algebra", w), "algebra", w + ".algebra");
            ca.hopf = resolve(sf.hopf, member(v, "hopf", w), "hopf", w + ".hopf");
            ca.rho = matrix_list(f, member(v, "coactions", w), w + ".coactions");
            if (ca.rho.size() != n) semantic(w + ".coactions", "needs one coaction per group element");
            for (std::size_t x = 0; x < n; ++x)
                require_shape(ca.rho[x], ca.alg->dim * ca.hopf->comps[x]->dim, ca.alg->dim, w + ".coactions");
            sf.comodule_algebras[name] = std::move(ca);
        }

    const json& cv = member(root, "check", "document");
    Fixture& t = sf.target;
    auto nit = cv.find("name");
    t.name = nit == cv.end() ? std::string("structure") : name_value(*nit, "check.name");
    auto dit = cv.find("description");
    if (dit != cv.end()) t.description = name_value(*dit, "check.description");
    t.coring = resolve(sf.corings, member(cv, "coring", "check"), "coring", "check.coring");
    t.grouplike = resolve(sf.grouplikes, member(cv, "grouplike", "check"), "grouplike", "check.grouplike");
    if (t.grouplike.coring != t.coring) semantic("check.grouplike", "belongs to another coring");
    auto bit = cv.find("base_map");
    if (bit != cv.end()) {
        t.base_map = resolve(sf.morphisms, *bit, "morphism", "check.base_map");
        if (!same_algebra(t.base_map.dst, t.coring->base)) semantic("check.base_map", "target is not the base algebra");
    } else {
        t.base_map = coinvariant_inclusion(t.grouplike);
    }
    auto wit = cv.find("witness");
    if (wit != cv.end()) t.witness = resolve(sf.witnesses, *wit, "witness", "check.witness");
    auto cit = cv.find("comodule_algebra");
    if (cit != cv.end()) {
        t.comodule_algebra = resolve(sf.comodule_algebras, *cit, "comodule algebra", "check.comodule_algebra");
        const GroupCoring& c = *t.coring;
        if (!same_algebra(t.comodule_algebra->alg, c.base)) semantic("check.comodule_algebra", "algebra is not the base");
        for (std::size_t x = 0; x < n; ++x)
            if (c.comps[x].dim != c.base->dim * t.comodule_algebra->hopf->comps[x]->dim)
                semantic("check.comodule_algebra", "coring is not A⊗H");
    }
}

// ---- emission ----

ojson scalar_json(const Scalar& s) {
    const std::string str = s.str();
    if (str.find('/') == std::string::npos && str.size() < 18) return std::stoll(str);
    return str;
}

ojson matrix_json(const Mat& m) {
    if (m.rows() == 0 || m.cols() == 0) return ojson{{"rows", m.rows()}, {"cols", m.cols()}};
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ojson row = ojson::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ojson vector_json(const Mat& v) {
    if (v.rows() == 0 || v.cols() != 1) return matrix_json(v);
    ojson out = ojson::array();
    for (std::size_t i = 0; i < v.rows(); ++i) out.push_back(scalar_json(v(i, 0)));
    return out;
}

ojson list_json(const std::vector<Mat>& ms, bool vectors = false) {
    ojson out = ojson::array();
    for (const auto& m : ms) out.push_back(vectors ? vector_json(m) : matrix_json(m));
    return out;
}

// Like dump(2), but arrays of scalars (matrix rows, vectors) stay on one line.
void write_pretty(const ojson& j, std::size_t indent, std::string& out) {
    const std::string pad(indent, ' '), inner(indent + 2, ' ');
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        std::size_t k = 0;
        for (const auto& [key, v] : j.items()) {
            out += inner + ojson(key).dump() + ": ";
            write_pretty(v, indent + 2, out);
            out += ++k < j.size() ? ",\n" : "\n";
        }
        out += pad + "}";
    } else if (j.is_array()) {
        const bool flat = std::all_of(j.begin(), j.end(), [](const ojson& e) { return e.is_primitive(); });
        if (flat) {
            out += "[";
            for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
            out += "]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out += inner;
            write_pretty(j[i], indent + 2, out);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += pad + "]";
    } else {
        out += j.dump();
    }
}

struct Namer {
    std::vector<std::pair<AlgebraPtr, std::string>> algebras;
    ojson out = ojson::object();

    std::string name(const AlgebraPtr& a, const std::string& preferred) {
        for (const auto& [p, nm] : algebras)
            if (p == a) return nm;
        std::string nm = preferred;
        for (std::size_t k = 1;; ++k) {
            bool taken = false;
            for (const auto& e : algebras) taken = taken || e.second == nm;
            if (!taken) break;
            nm = preferred + "_" + std::to_string(k);
        }
        algebras.emplace_back(a, nm);
        ojson v{{"dim", a->dim}};
        if (a->dim > 0) {
            v["table"] = matrix_json(a->table);
            v["unit"] = vector_json(a->unit);
        }
        out[nm] = std::move(v);
        return nm;
    }
};

}  // namespace

StructureFile parse_structure(const std::string& text) {
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw ParseError(1, 1, "missing field declaration");
    json root;
    try {
        root = json::parse(text, nullptr, true, true);
    } catch (const json::parse_error& e) {
        std::string msg = e.what();
        auto pos = msg.find("]: ");
        const auto [line, col] = line_col(text, e.byte);
        throw ParseError(line, col, pos == std::string::npos ? msg : msg.substr(pos + 3));
    } catch (const std::exception& e) {
        throw ParseError(1, 1, e.what());
    }
    StructureFile sf;
    try {
        parse_body(root, sf);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::SemanticError) throw;
        throw Error(ErrorKind::SemanticError, e.what());
    } catch (const json::exception& e) {
        throw Error(ErrorKind::SemanticError, e.what());
    } catch (const std::length_error& e) {
        throw Error(ErrorKind::SemanticError, std::string("structure too large: ") + e.what());
    } catch (const std::bad_alloc&) {
        throw Error(ErrorKind::SemanticError, "structure too large");
    }
    return sf;
}

std::string emit_structure(const Fixture& fx) {
    const GroupCoring& c = *fx.coring;
    const FiniteGroup& g = c.group;
    const std::size_t n = g.order;
    const Field f = c.field();
    ojson root;
    if (f.p == 0)
        root["field"] = "Q";
    else
        root["field"] = ojson{{"Fp", f.p}};
    ojson table = ojson::array();
    for (std::size_t i = 0; i < n; ++i) table.push_back(g.table[i]);
    root["group"] = ojson{{"order", n}, {"table", table}};

    Namer algs;
    const std::string a = algs.name(c.base, "A");
    const std::string b = algs.name(fx.base_map.src, "B");
    std::vector<std::string> hnames;
    if (fx.comodule_algebra)
        for (std::size_t x = 0; x < n; ++x) hnames.push_back(algs.name(fx.comodule_algebra->hopf->comps[x], "H"));

    ojson bims = ojson::object();
    ojson comps = ojson::array();
    for (std::size_t x = 0; x < n; ++x) {
        const Bimodule& m = c.comps[x];
        const std::string nm = "C_" + std::to_string(x);
        bims[nm] = ojson{{"dim", m.dim},
                         {"left", a},
                         {"left_action", list_json(m.left)},
                         {"right", a},
                         {"right_action", list_json(m.right)}};
        comps.push_back(nm);
    }
    std::vector<Mat> delta;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) delta.push_back(c.pair(x, y).sect() * c.delta_at(x, y));

    root["algebras"] = ojson::object();  // filled last so that every referenced algebra is present
    root["bimodules"] = std::move(bims);
    root["corings"] = ojson{{"C", {{"base", a}, {"components", comps}, {"delta", list_json(delta)}, {"counit", matrix_json(c.counit)}}}};
    root["grouplikes"] = ojson{{"x", {{"coring", "C"}, {"elements", list_json(fx.grouplike.x, true)}}}};
    ojson mor{{"src", b}, {"dst", a}};
    if (!fx.base_map.mat.empty()) mor["matrix"] = matrix_json(fx.base_map.mat);
    root["morphisms"] = ojson{{"b", mor}};
    ojson check{{"name", fx.name}};
    if (!fx.description.empty()) check["description"] = fx.description;
    check["coring"] = "C";
    check["grouplike"] = "x";
    check["base_map"] = "b";
    if (fx.witness) {
        root["witnesses"] = ojson{{"w", {{"coring", "C"}, {"gammas", list_json(fx.witness->gammas)}}}};
        check["witness"] = "w";
    }
    if (fx.comodule_algebra) {
        const HopfGCoalgebra& h = *fx.comodule_algebra->hopf;
        const std::string ca = algs.name(fx.comodule_algebra->alg, "A");
        root["hopf"] = ojson{{"H", {{"components", hnames},
                                    {"delta", list_json(h.delta)},
                                    {"counit", matrix_json(h.counit)},
                                    {"antipode", list_json(h.antipode)}}}};
        root["comodule_algebras"] = ojson{{"AH", {{"algebra", ca}, {"hopf", "H"}, {"coactions", list_json(fx.comodule_algebra->rho)}}}};
        check["comodule_algebra"] = "AH";
    }
    root["algebras"] = std::move(algs.out);
    root["check"] = std::move(check);
    std::string out;
    write_pretty(root, 0, out);
    return out + "\n";
}

Fixture load_target(const std::string& name_or_path) {
    for (const auto& nm : fixture_names())
        if (nm == name_or_path) return fixture_by_name(nm);
    std::ifstream in(name_or_path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read " + name_or_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_structure(ss.str()).target;
}

}  // namespace gcoring
