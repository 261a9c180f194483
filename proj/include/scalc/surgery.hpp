#pragma once

// Fiber sums along codimension-2 submanifolds, Luttinger surgery on 4-tori
// and the Calabi-Yau verdict.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "scalc/blocks.hpp"

namespace scalc {

// Appends "'" to every name already in `taken`, repeating until fresh.
std::vector<std::string> primed_names(const std::vector<std::string>& names,
                                      const std::set<std::string>& taken);

// Side-1 submanifold generators to words in the side-2 submanifold
// generators. The meridian always goes to the inverse side-2 meridian.
struct GluingMap {
  std::vector<std::string> source;
  std::vector<std::string> target;
  std::vector<Word> images;

  // Row i holds the exponent sums of images[i].
  IntMatrix abelianized() const;
  // Throws unless images cover the source and the abelianized map is in GL(k, Z).
  void validate() const;
};

// Names on side 2 are primed when they collide with side-1 generator names.
std::vector<std::string> side_two_generators(const SubmanifoldMarking& y1, const SubmanifoldMarking& y2);
std::vector<std::string> side_two_complement(const SubmanifoldMarking& y1, const SubmanifoldMarking& y2);

// Table entries "a" -> "c'" in side-2 names; an entry for "mu" must read mu'^-1.
GluingMap make_gluing(const SubmanifoldMarking& y1, const SubmanifoldMarking& y2,
                      const std::map<std::string, std::string>& table);

// Each side-1 generator to the same-named side-2 generator.
GluingMap identity_gluing(const SubmanifoldMarking& y1, const SubmanifoldMarking& y2);

Chern6 chern_sum_6(const Chern6& x1, const Chern6& x2, const Chern4& y);

// Complement generators of side 1 then side 2, both complements' relators,
// one relator per glued generator and one for the meridians.
Presentation van_kampen_fiber_sum(const SubmanifoldMarking& y1, const SubmanifoldMarking& y2,
                                  const GluingMap& glue);

std::int64_t c1_eval_sewn(std::int64_t c1_eval_c1, std::int64_t c1_eval_c2, std::int64_t y_dot_c1,
                          std::int64_t y_dot_c2);

// A rim torus over a submanifold generator survives exactly when the circle
// and its glued image bound on both sides.
bool rim_class_essential(const SubmanifoldMarking& y1, const SubmanifoldMarking& y2,
                         const GluingMap& glue, const std::string& generator);

enum class RimFate { Essential, Nullhomologous };

struct H2Directives {
  // Labels per side; a trailing '*' matches by prefix. Side-2 labels are
  // primed on collision with side-1 labels.
  std::vector<std::string> keep1;
  std::vector<std::string> keep2;
  struct Sew {
    std::string first;   // side-1 label
    std::string second;  // side-2 label
    std::string as;
  };
  std::vector<Sew> sew;
  std::map<std::string, RimFate> rim;
  bool complete = false;
};

struct FiberSumInput {
  const ManifoldModel* m1 = nullptr;
  std::string y1;
  const ManifoldModel* m2 = nullptr;
  std::string y2;
};

// Dimension-6 fiber sum with a scripted H2 basis.
ManifoldModel fiber_sum_6(const FiberSumInput& in, const GluingMap& glue, const H2Directives& h2,
                          std::string name);

// Dimension-4 fiber sum. The H2 basis keeps classes disjoint from the fiber,
// the fiber once, sews the first pair of sections and adds the essential rim
// pairs; it is complete when it has b2 classes and a unimodular form.
ManifoldModel fiber_sum_4(const FiberSumInput& in, const GluingMap& glue, std::string name);

H2Directives automatic_directives(const FiberSumInput& in, const GluingMap& glue);

struct LuttingerSpec {
  std::string torus;  // marking name
  std::string curve;  // generator of the torus
  std::int64_t p = 1;
  int sign = 1;
  std::optional<std::pair<std::string, std::string>> killed_pair;
  std::string op_name = "luttinger";
};

ManifoldModel luttinger(const ManifoldModel& m, const LuttingerSpec& spec, std::string name);

enum class CyVerdict { Certified, OnDeclaredBasis, NotCY };

std::string to_string(CyVerdict v);

struct CyCheck {
  bool chern_zero = false;
  bool c1_evals_zero = false;
  bool basis_complete = false;
  CyVerdict verdict = CyVerdict::NotCY;
};

CyCheck cy_check(const ManifoldModel& m);

struct FamilyEntry {
  int genus = 1;
  int n = 1;
  Chern6 block;     // X(n,g) x Sigma_g
  Chern6 computed;  // sum of two blocks along Sigma_g x Sigma_g
  std::optional<Chern6> closed_form;  // (24(g-1)^2, 24(1-g), 8(g+2)(1-g)), n = 1 only
  bool congruences = false;           // c1^3, c1c2, c3 = 0 mod 2, 24, 2

  std::optional<bool> matches() const;
};

FamilyEntry family_remark42(int genus, int n);

}  // namespace scalc
