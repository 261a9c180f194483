#pragma once

// Dehn-twist words along the standard hyperelliptic chain a_1, ..., a_{2g+1},
// evaluated through the symplectic action on H1(Sigma_g; Z). Equality here is
// H1-faithful only: a necessary condition for an identity in the mapping
// class group.

#include <cstdint>
#include <string_view>
#include <vector>

#include "scalc/lattice.hpp"
#include "scalc/matrix.hpp"

namespace scalc {

// Basis order (x_1..x_g, y_1..y_g) with <x_i, y_i> = +1.
std::int64_t symplectic_pairing(const IntVector& a, const IntVector& b);
BigMatrix standard_symplectic_form(int genus);
bool is_symplectic(const BigMatrix& m, int genus);

struct ChainClasses {
  int genus = 1;
  std::vector<IntVector> vectors;  // v_1 .. v_{2g+1}, stored 0-based
};

// v_1 = x_1, v_{2i} = y_i, v_{2i+1} = x_i + x_{i+1}, v_{2g+1} = x_g.
ChainClasses chain_classes(int genus);

// z -> z + <z, v> v, or its inverse z -> z - <z, v> v.
BigMatrix transvection_matrix(const IntVector& v, int genus, int sign = 1);

struct TwistLetter {
  std::size_t curve = 1;  // 1-based chain index
  int sign = 1;
  friend bool operator==(const TwistLetter&, const TwistLetter&) = default;
};

struct TwistWord {
  int genus = 1;
  std::vector<TwistLetter> letters;
};

// Ordered product of the letters' transvections; empty word gives identity.
BigMatrix word_matrix(const TwistWord& word);

enum class RelatorFamily { X, Y, Z };

RelatorFamily parse_relator_family(std::string_view name);
char family_name(RelatorFamily f);

// X: (a_1 ... a_{2g+1}^2 ... a_1)^2, Y: (a_1 ... a_{2g+1})^{2g+2},
// Z: (a_1 ... a_{2g})^{4g+2}.
TwistWord relator_family(RelatorFamily family, int genus);

// a_1 a_2 ... a_{2g+1}^2 ... a_2 a_1, the hyperelliptic involution.
TwistWord hyperelliptic_half_word(int genus);

// Euler characteristic of a genus-g Lefschetz fibration over the sphere.
std::int64_t lefschetz_euler(int genus, std::int64_t critical_points);

}  // namespace scalc
