#pragma once

#include <string>
#include <vector>

#include "gcoring/algebra.hpp"
#include "gcoring/report.hpp"

namespace gcoring {

// Finite group by multiplication table; the identity is index 0.
struct FiniteGroup {
    std::size_t order = 1;
    std::vector<std::vector<std::size_t>> table{{0}};
    std::vector<std::size_t> inv{0};

    std::size_t mul(std::size_t a, std::size_t b) const { return table[a][b]; }
    std::size_t inverse(std::size_t a) const { return inv[a]; }
    static constexpr std::size_t e = 0;

    static FiniteGroup trivial();
    static FiniteGroup cyclic(std::size_t n);
    static FiniteGroup symmetric3();
    // Fills inv; throws if some element has no inverse or entries are out of range.
    static FiniteGroup from_table(std::vector<std::vector<std::size_t>> table);
};

bool operator==(const FiniteGroup& a, const FiniteGroup& b);

CheckReport validate_group(const FiniteGroup& g);

// k[G] with basis the group elements.
AlgebraPtr group_algebra(Field f, const FiniteGroup& g);

}  // namespace gcoring
