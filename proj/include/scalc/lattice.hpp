#pragma once

// Integer symmetric bilinear forms: Gram matrices, direct sums, exact
// signature and determinant.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "scalc/matrix.hpp"

namespace scalc {

// Diagonal form such as <+1, -1^9> on H2(CP2 # 9 CP2-bar) in basis h, e_1..e_9.
struct DiagonalForm {
  std::vector<int> signs;

  static DiagonalForm blown_up_plane(std::size_t blowups);
};

using IntVector = std::vector<std::int64_t>;

class IntLattice {
 public:
  IntLattice() = default;
  // Throws unless gram is square, symmetric and matches the label count.
  IntLattice(std::vector<std::string> labels, IntMatrix gram);

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const IntMatrix& gram() const noexcept { return gram_; }
  std::size_t rank() const noexcept { return labels_.size(); }
  std::int64_t pairing(std::string_view a, std::string_view b) const;
  std::size_t index_of(std::string_view label) const;

  IntLattice relabeled(std::string_view suffix) const;

  friend bool operator==(const IntLattice&, const IntLattice&) = default;

 private:
  std::vector<std::string> labels_;
  IntMatrix gram_;
};

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

struct FormClass {
  std::size_t rank = 0;
  Signature signature;
  std::int64_t determinant = 1;
  bool even = true;
  bool unimodular = true;

  friend bool operator==(const FormClass&, const FormClass&) = default;
};

IntLattice gram_from_vectors(const DiagonalForm& ambient, const std::vector<IntVector>& vectors,
                             std::vector<std::string> labels);

IntLattice direct_sum(const IntLattice& a, const IntLattice& b);

// Congruence diagonalization over the rationals; no floating point.
Signature signature(const IntLattice& lattice);

std::int64_t determinant(const IntLattice& lattice);

FormClass classify_form(const IntLattice& lattice);

// "E8", "minusE8" (Dynkin chain 1-2-...-7 with node 8 on node 5) or "H".
IntLattice standard_form(std::string_view name);

}  // namespace scalc
