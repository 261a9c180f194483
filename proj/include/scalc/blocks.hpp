#pragma once

// Manifold models: dimension-tagged records of Chern numbers, Betti numbers,
// fundamental group, a declared H2 basis and codimension-2 markings.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "scalc/fpgroup.hpp"
#include "scalc/lattice.hpp"

namespace scalc {

struct Chern2 {
  std::int64_t euler = 0;
  friend bool operator==(const Chern2&, const Chern2&) = default;
};

struct Chern4 {
  std::int64_t c1_sq = 0;
  std::int64_t c2 = 0;
  friend bool operator==(const Chern4&, const Chern4&) = default;
};

struct Chern6 {
  std::int64_t c1_cubed = 0;
  std::int64_t c1c2 = 0;
  std::int64_t c3 = 0;
  friend bool operator==(const Chern6&, const Chern6&) = default;
};

using ChernNumbers = std::variant<Chern2, Chern4, Chern6>;

enum class ClassKind { Sphere, Torus, Surface, FourTorus };

std::string to_string(ClassKind k);

struct ClassRecord {
  std::string label;
  ClassKind kind = ClassKind::Sphere;
  int genus = 0;  // for ClassKind::Surface
  std::optional<std::int64_t> self_pairing;  // 4-dimensional ambients only
  std::int64_t c1_eval = 0;
  // Intersection number with each named codimension-2 marking.
  std::map<std::string, std::int64_t> meets;
  std::optional<std::string> killed_by;
  std::string note;

  bool essential() const { return !killed_by.has_value(); }
};

struct ManifoldModel;

struct SubmanifoldMarking {
  std::string name;
  std::shared_ptr<const ManifoldModel> submanifold;
  std::int64_t normal_euler = 0;
  Presentation complement_pi1;
  // Submanifold generators and "mu" to words in complement_pi1.
  std::map<std::string, Word> boundary_images;
  bool has_transverse_sphere = false;
  // Basis class represented by the submanifold, if any (the fiber "f").
  std::optional<std::string> class_label;

  const Word& image(std::string_view generator) const;
};

inline constexpr std::string_view kMeridian = "mu";

struct ManifoldModel {
  std::string name;
  int dim = 4;
  ChernNumbers chern;
  std::optional<std::int64_t> signature;  // dimension 4 only
  std::vector<std::int64_t> betti;
  std::vector<bool> betti_derived;  // derived under the declared-basis assumption
  Presentation pi1;
  std::vector<ClassRecord> h2_basis;
  bool basis_complete = false;
  std::optional<IntLattice> h2_form;  // Gram of h2_basis in dimension 4
  std::map<std::string, SubmanifoldMarking> markings;
  std::vector<std::string> provenance;
  std::vector<std::string> notes;

  const Chern2& chern2() const;
  const Chern4& chern4() const;
  const Chern6& chern6() const;
  // c2 in dimension 4, c3 in dimension 6, the Euler number in dimension 2.
  std::int64_t euler() const;
  std::int64_t betti_euler() const;
  std::size_t essential_classes() const;

  const ClassRecord* find_class(std::string_view label) const;
  const SubmanifoldMarking& marking(std::string_view name) const;

  // Throws on a Poincare-duality or Euler-number violation, or when a
  // complete basis disagrees with b_2.
  void validate() const;
};

// Genus-g surface. Generators default to a, b (g = 1) or a1, b1, ..., ag, bg.
ManifoldModel surface(int genus, std::vector<std::string> generators = {});

// T^n for n in {2, 4, 6} with free abelian fundamental group.
ManifoldModel torus(std::vector<std::string> generators);

// CP2 # k CP2-bar in the basis h, e1, ..., ek.
ManifoldModel rational_surface(int k);

// E(n) with fiber marking "F" (generators a, b) and, for n <= 2, an explicit
// H2 basis: f, e9, m1..m8 for n = 1; f, m1..m8, m1'..m8', sigma and two
// rim/dual pairs for n = 2.
ManifoldModel elliptic_surface(int n);

// rational_surface(4g+5) seen as the genus-g hyperelliptic Lefschetz fibration
// with monodromy (a_1 ... a_{2g+1}^2 ... a_1)^2, marked by a fiber "F" of class
// (g+2)h - g e1 - e2 - ... - e_{4g+5}.
ManifoldModel hyperelliptic_fibration(int genus);

// Products of a 4- or 2-manifold with a surface.
ManifoldModel product(const ManifoldModel& m, const ManifoldModel& s);

// With a transverse sphere the complement has the ambient fundamental group
// and the meridian bounds. The draft's boundary_images give the submanifold
// generators as words in the ambient generators. Refuses a draft without a
// transverse sphere, whose complement group is unknown.
SubmanifoldMarking complement_pi1_via_sphere(const ManifoldModel& m, SubmanifoldMarking draft);

// Adds a marking after checking dimensions and image coverage.
ManifoldModel with_marking(ManifoldModel m, SubmanifoldMarking marking);

struct DeclaredBlock {
  std::string name;
  int dim = 4;
  ChernNumbers chern;
  std::optional<std::int64_t> signature;
  std::vector<std::int64_t> betti;
  Presentation pi1;
};

ManifoldModel declare_block(const DeclaredBlock& raw);

std::int64_t alternating_sum(const std::vector<std::int64_t>& betti);

}  // namespace scalc
