#include "gcoring/group.hpp"

#include <array>

#include "gcoring/error.hpp"

namespace gcoring {

FiniteGroup FiniteGroup::trivial() { return FiniteGroup{}; }

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return from_table(std::move(t));
}

FiniteGroup FiniteGroup::symmetric3() {
    // Permutations of {0,1,2} in image form; index 0 is the identity.
    const std::array<std::array<std::size_t, 3>, 6> perms{{
        {0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1},
    }};
    std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            std::array<std::size_t, 3> c{};
            for (std::size_t i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
            for (std::size_t k = 0; k < 6; ++k)
                if (perms[k] == c) t[a][b] = k;
        }
    return from_table(std::move(t));
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<std::size_t>> table) {
    FiniteGroup g;
    g.order = table.size();
    if (g.order == 0) throw Error(ErrorKind::InvalidArgument, "empty group table");
    for (const auto& row : table) {
        if (row.size() != g.order) throw Error(ErrorKind::DimensionMismatch, "group table is not square");
        for (auto x : row)
            if (x >= g.order) throw Error(ErrorKind::InvalidArgument, "group table entry out of range");
    }
    g.table = std::move(table);
    g.inv.assign(g.order, 0);
    for (std::size_t a = 0; a < g.order; ++a) {
        bool found = false;
        for (std::size_t b = 0; b < g.order && !found; ++b)
            if (g.table[a][b] == 0 && g.table[b][a] == 0) {
                g.inv[a] = b;
                found = true;
            }
        if (!found) throw Error(ErrorKind::InvalidArgument, "element " + std::to_string(a) + " has no inverse");
    }
    return g;
}

bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table == b.table; }

CheckReport validate_group(const FiniteGroup& g) {
    CheckReport r;
    bool shape = g.table.size() == g.order && g.inv.size() == g.order;
    for (const auto& row : g.table) {
        shape = shape && row.size() == g.order;
        for (auto x : row) shape = shape && x < g.order;
    }
    r.add("group/shape", "group table", shape, "table is not a square index table");
    if (!shape) return r;
    std::string idfail;
    for (std::size_t a = 0; a < g.order; ++a)
        if (g.table[0][a] != a || g.table[a][0] != a) idfail += std::to_string(a) + " ";
    r.add("group/identity", "group identity at index 0", idfail.empty(), "elements " + idfail);
    std::string assoc;
    for (std::size_t a = 0; a < g.order; ++a)
        for (std::size_t b = 0; b < g.order; ++b)
            for (std::size_t c = 0; c < g.order; ++c)
                if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]] && assoc.size() < 200)
                    assoc += "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ") ";
    r.add("group/associativity", "group associativity", assoc.empty(), "triples " + assoc);
    std::string invfail;
    for (std::size_t a = 0; a < g.order; ++a)
        if (g.table[a][g.inv[a]] != 0 || g.table[g.inv[a]][a] != 0) invfail += std::to_string(a) + " ";
    r.add("group/inverses", "group inverses", invfail.empty(), "elements " + invfail);
    return r;
}

AlgebraPtr group_algebra(Field f, const FiniteGroup& g) {
    const std::size_t n = g.order;
    Mat t(f, n, n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t(g.mul(a, b), a * n + b) = Scalar::one(f);
    return make_algebra(f, "k[G" + std::to_string(n) + "]", n, t, Mat::unit_vector(f, n, 0));
}

}  // namespace gcoring
