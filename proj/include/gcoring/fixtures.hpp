#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcoring/hopf_group.hpp"

namespace gcoring {

// Bundled test structures shared by the tests, the acceptance binary and the CLI.
struct Fixture {
    std::string name;
    std::string description;
    CoringPtr coring;
    GrouplikeFamily grouplike;
    RingMorphism base_map;  // B → A
    std::optional<CofreeWitness> witness;
    std::optional<ComoduleAlgebra> comodule_algebra;
};

// Trivial coring C_α = A over G = C_2, x_α = 1, B = A.
Fixture fixture_triv(const AlgebraPtr& a);
Fixture fixture_triv();
// A = k[C_2] with its regular coaction over the cofree k[C_2]⟨C_2⟩, B = k.
Fixture fixture_kc2();
// Cofree coring on the Sweedler coring of k ⊂ k×k, G = C_2, x_α = 1⊗1.
Fixture fixture_swe();
// A = k with trivial coaction over k[C_2]⟨C_2⟩, B = k.
Fixture fixture_nongal();

std::vector<std::string> fixture_names();
// Throws UnknownSuite for an unknown name.
Fixture fixture_by_name(const std::string& name);

// k[C_3]⟨C_2⟩ with every antipode replaced by the identity (only the antipode law fails).
HopfGCoalgebra corrupted_antipode_hopf();

}  // namespace gcoring
