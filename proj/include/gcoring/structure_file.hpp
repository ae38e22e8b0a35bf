#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "gcoring/fixtures.hpp"

namespace gcoring {

// Largest accepted declared dimension, group order and matrix entry count.
inline constexpr std::size_t kMaxDim = 512;
inline constexpr std::size_t kMaxOrder = 64;
inline constexpr std::size_t kMaxEntries = std::size_t(1) << 22;

struct StructureFile {
    Field field;
    FiniteGroup group;
    std::map<std::string, AlgebraPtr> algebras;
    std::map<std::string, Bimodule> bimodules;
    std::map<std::string, CoringPtr> corings;
    std::map<std::string, GrouplikeFamily> grouplikes;
    std::map<std::string, RingMorphism> morphisms;
    std::map<std::string, CofreeWitness> witnesses;
    std::map<std::string, HopfPtr> hopf;
    std::map<std::string, ComoduleAlgebra> comodule_algebras;
    Fixture target;  // the structure named by the "check" section
};

// Throws ParseError (with line and column) or SemanticError (naming the entry).
StructureFile parse_structure(const std::string& text);
std::string emit_structure(const Fixture& fx);

// A fixture name or a path to a structure file.
Fixture load_target(const std::string& name_or_path);

}  // namespace gcoring
