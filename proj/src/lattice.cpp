#include "scalc/lattice.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace scalc {

DiagonalForm DiagonalForm::blown_up_plane(std::size_t blowups) {
  DiagonalForm f;
  f.signs.push_back(1);
  f.signs.insert(f.signs.end(), blowups, -1);
  return f;
}

IntLattice::IntLattice(std::vector<std::string> labels, IntMatrix gram)
    : labels_(std::move(labels)), gram_(std::move(gram)) {
  if (!gram_.square()) throw Error("Gram matrix is not square");
  if (gram_.rows() != labels_.size())
    throw Error("Gram matrix size " + std::to_string(gram_.rows()) + " does not match " +
                std::to_string(labels_.size()) + " labels");
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    for (std::size_t j = i + 1; j < gram_.cols(); ++j)
      if (gram_(i, j) != gram_(j, i)) throw Error("Gram matrix is not symmetric");
}

std::size_t IntLattice::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw Error("no class labelled '" + std::string(label) + "'");
}

std::int64_t IntLattice::pairing(std::string_view a, std::string_view b) const {
  return gram_(index_of(a), index_of(b));
}

IntLattice IntLattice::relabeled(std::string_view suffix) const {
  std::vector<std::string> labels;
  for (const auto& l : labels_) labels.push_back(l + std::string(suffix));
  return IntLattice(std::move(labels), gram_);
}

IntLattice gram_from_vectors(const DiagonalForm& ambient, const std::vector<IntVector>& vectors,
                             std::vector<std::string> labels) {
  if (ambient.signs.empty()) throw Error("ambient diagonal form is empty");
  if (labels.size() != vectors.size()) throw Error("one label per vector is required");
  for (const auto& v : vectors)
    if (v.size() != ambient.signs.size())
      throw Error("vector of length " + std::to_string(v.size()) + " in an ambient of rank " +
                  std::to_string(ambient.signs.size()));
  IntMatrix gram(vectors.size(), vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < vectors.size(); ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < ambient.signs.size(); ++k)
        s = detail::checked_add(
            s, detail::checked_mul(ambient.signs[k], detail::checked_mul(vectors[i][k], vectors[j][k])));
      gram(i, j) = s;
    }
  return IntLattice(std::move(labels), std::move(gram));
}

IntLattice direct_sum(const IntLattice& a, const IntLattice& b) {
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  IntMatrix gram(a.rank() + b.rank(), a.rank() + b.rank());
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) gram(i, j) = a.gram()(i, j);
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j) gram(a.rank() + i, a.rank() + j) = b.gram()(i, j);
  return IntLattice(std::move(labels), std::move(gram));
}

Signature signature(const IntLattice& lattice) {
  using Rational = boost::multiprecision::cpp_rational;
  const std::size_t n = lattice.rank();
  Matrix<Rational> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = lattice.gram()(i, j);

  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, pivot) == 0) ++pivot;
    if (pivot == n) {
      // Zero diagonal: a nonzero off-diagonal entry a_ij makes
      // (e_i + e_j) anisotropic with square 2 a_ij.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a(i, j) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) {
        sig.zero += n - k;
        break;
      }
      for (std::size_t c = 0; c < n; ++c) a(pi, c) += a(pj, c);
      for (std::size_t r = 0; r < n; ++r) a(r, pi) += a(r, pj);
      pivot = pi;
    }
    a.swap_rows(k, pivot);
    a.swap_cols(k, pivot);
    const Rational p = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / p;
      for (std::size_t c = k; c < n; ++c) a(i, c) -= f * a(k, c);
      for (std::size_t r = k; r < n; ++r) a(r, i) -= f * a(r, k);
    }
    if (p > 0) ++sig.positive;
    else ++sig.negative;
  }
  return sig;
}

std::int64_t determinant(const IntLattice& lattice) { return determinant(lattice.gram()); }

FormClass classify_form(const IntLattice& lattice) {
  FormClass fc;
  fc.rank = lattice.rank();
  fc.signature = signature(lattice);
  fc.determinant = determinant(lattice);
  for (std::size_t i = 0; i < lattice.rank(); ++i)
    if (lattice.gram()(i, i) % 2 != 0) fc.even = false;
  fc.unimodular = fc.determinant == 1 || fc.determinant == -1;
  return fc;
}

IntLattice standard_form(std::string_view name) {
  if (name == "H")
    return IntLattice({"u", "v"}, IntMatrix{{0, 1}, {1, 0}});
  if (name != "E8" && name != "minusE8")
    throw Error("unknown standard form '" + std::string(name) + "'");
  const std::int64_t s = name == "E8" ? 1 : -1;
  IntMatrix gram(8, 8);
  for (std::size_t i = 0; i < 8; ++i) gram(i, i) = 2 * s;
  auto edge = [&](std::size_t a, std::size_t b) {
    gram(a, b) = -s;
    gram(b, a) = -s;
  };
  for (std::size_t i = 0; i + 1 < 7; ++i) edge(i, i + 1);
  edge(4, 7);
  std::vector<std::string> labels;
  for (int i = 1; i <= 8; ++i) labels.push_back("n" + std::to_string(i));
  return IntLattice(std::move(labels), std::move(gram));
}

}  // namespace scalc
