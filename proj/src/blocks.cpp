#include "scalc/blocks.hpp"

#include <algorithm>
#include <set>

namespace scalc {
namespace {

std::vector<std::string> default_surface_generators(int genus) {
  if (genus == 1) return {"a", "b"};
  std::vector<std::string> names;
  for (int i = 1; i <= genus; ++i) {
    names.push_back("a" + std::to_string(i));
    names.push_back("b" + std::to_string(i));
  }
  return names;
}

std::vector<Word> all_commutators(std::size_t first, std::size_t count) {
  std::vector<Word> out;
  for (std::size_t i = first; i < first + count; ++i)
    for (std::size_t j = i + 1; j < first + count; ++j)
      out.push_back(Word::commutator(Word::generator(i), Word::generator(j)));
  return out;
}

Word shifted(const Word& w, std::size_t offset) {
  std::vector<Letter> letters;
  for (const auto& l : w.letters()) letters.push_back({l.gen + offset, l.sign});
  return Word(std::move(letters));
}

// Presentation of G x H: H's generators follow G's and commute with them.
Presentation direct_product(const Presentation& g, const Presentation& h) {
  std::vector<std::string> names = g.generators();
  for (const auto& n : h.generators()) {
    if (g.find_generator(n)) throw Error("generator '" + n + "' is used by both factors");
    names.push_back(n);
  }
  std::vector<Word> relators = g.relators();
  const std::size_t offset = g.generator_count();
  for (const auto& r : h.relators()) relators.push_back(shifted(r, offset));
  for (std::size_t i = 0; i < offset; ++i)
    for (std::size_t j = 0; j < h.generator_count(); ++j)
      relators.push_back(Word::commutator(Word::generator(i), Word::generator(offset + j)));
  return Presentation(std::move(names), std::move(relators));
}

std::vector<std::int64_t> kunneth(const std::vector<std::int64_t>& a,
                                  const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

int surface_genus(const ManifoldModel& s) {
  if (s.dim != 2) throw Error("'" + s.name + "' is not a surface");
  return static_cast<int>(s.betti[1] / 2);
}

ClassRecord surface_class(std::string label, int genus) {
  ClassRecord c;
  c.label = std::move(label);
  c.genus = genus;
  c.kind = genus == 0 ? ClassKind::Sphere : genus == 1 ? ClassKind::Torus : ClassKind::Surface;
  return c;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void attach_form(ManifoldModel& m, IntMatrix gram) {
  std::vector<std::string> labels;
  for (const auto& c : m.h2_basis) labels.push_back(c.label);
  m.h2_form = IntLattice(std::move(labels), std::move(gram));
  for (std::size_t i = 0; i < m.h2_basis.size(); ++i) m.h2_basis[i].self_pairing = (*m.h2_form).gram()(i, i);
}

SubmanifoldMarking fiber_marking(const ManifoldModel& m, int genus, std::optional<std::string> label) {
  auto fiber = std::make_shared<ManifoldModel>(surface(genus));
  fiber->name = "F";
  SubmanifoldMarking draft;
  draft.name = "F";
  draft.submanifold = fiber;
  draft.has_transverse_sphere = true;
  draft.class_label = std::move(label);
  for (const auto& g : fiber->pi1.generators()) draft.boundary_images[g] = Word{};
  return complement_pi1_via_sphere(m, std::move(draft));
}

}  // namespace

std::string to_string(ClassKind k) {
  switch (k) {
    case ClassKind::Sphere: return "sphere";
    case ClassKind::Torus: return "torus";
    case ClassKind::Surface: return "surface";
    case ClassKind::FourTorus: return "four_torus";
  }
  return "?";
}

const Word& SubmanifoldMarking::image(std::string_view generator) const {
  auto it = boundary_images.find(std::string(generator));
  if (it == boundary_images.end())
    throw Error("marking '" + name + "' has no image for '" + std::string(generator) + "'");
  return it->second;
}

const Chern2& ManifoldModel::chern2() const {
  if (auto p = std::get_if<Chern2>(&chern)) return *p;
  throw Error("'" + name + "' is not 2-dimensional");
}

const Chern4& ManifoldModel::chern4() const {
  if (auto p = std::get_if<Chern4>(&chern)) return *p;
  throw Error("'" + name + "' is not 4-dimensional");
}

const Chern6& ManifoldModel::chern6() const {
  if (auto p = std::get_if<Chern6>(&chern)) return *p;
  throw Error("'" + name + "' is not 6-dimensional");
}

std::int64_t ManifoldModel::euler() const {
  switch (dim) {
    case 2: return chern2().euler;
    case 4: return chern4().c2;
    default: return chern6().c3;
  }
}

std::int64_t alternating_sum(const std::vector<std::int64_t>& betti) {
  std::int64_t sum = 0;
  for (std::size_t k = 0; k < betti.size(); ++k) sum += (k % 2 == 0 ? 1 : -1) * betti[k];
  return sum;
}

std::int64_t ManifoldModel::betti_euler() const { return alternating_sum(betti); }

std::size_t ManifoldModel::essential_classes() const {
  return static_cast<std::size_t>(
      std::count_if(h2_basis.begin(), h2_basis.end(), [](const ClassRecord& c) { return c.essential(); }));
}

const ClassRecord* ManifoldModel::find_class(std::string_view label) const {
  for (const auto& c : h2_basis)
    if (c.label == label) return &c;
  return nullptr;
}

const SubmanifoldMarking& ManifoldModel::marking(std::string_view marking_name) const {
  auto it = markings.find(std::string(marking_name));
  if (it == markings.end())
    throw Error("'" + name + "' has no marking '" + std::string(marking_name) + "'");
  return it->second;
}

void ManifoldModel::validate() const {
  if (dim != 2 && dim != 4 && dim != 6) throw Error("'" + name + "': dimension must be 2, 4 or 6");
  const bool chern_ok = (dim == 2 && std::holds_alternative<Chern2>(chern)) ||
                        (dim == 4 && std::holds_alternative<Chern4>(chern)) ||
                        (dim == 6 && std::holds_alternative<Chern6>(chern));
  if (!chern_ok) throw Error("'" + name + "': Chern numbers do not match dimension " + std::to_string(dim));
  if (betti.size() != static_cast<std::size_t>(dim) + 1)
    throw Error("'" + name + "': expected " + std::to_string(dim + 1) + " Betti numbers");
  for (std::size_t k = 0; k < betti.size(); ++k) {
    if (betti[k] < 0) throw Error("'" + name + "': negative Betti number");
    if (betti[k] != betti[betti.size() - 1 - k])
      throw Error("'" + name + "': Betti numbers violate Poincare duality (b" + std::to_string(k) +
                  " = " + std::to_string(betti[k]) + ", b" + std::to_string(betti.size() - 1 - k) +
                  " = " + std::to_string(betti[betti.size() - 1 - k]) + ")");
  }
  if (betti_euler() != euler())
    throw Error("'" + name + "': alternating Betti sum " + std::to_string(betti_euler()) +
                " differs from the Euler number " + std::to_string(euler()));
  if (signature && dim != 4) throw Error("'" + name + "': signature is only defined in dimension 4");
  if (basis_complete && static_cast<std::int64_t>(essential_classes()) != betti[2])
    throw Error("'" + name + "': complete basis has " + std::to_string(essential_classes()) +
                " classes but b2 = " + std::to_string(betti[2]));
}

ManifoldModel surface(int genus, std::vector<std::string> generators) {
  if (genus < 0) throw Error("surface genus must be nonnegative");
  if (generators.empty()) generators = default_surface_generators(genus);
  if (generators.size() != 2 * static_cast<std::size_t>(genus))
    throw Error("a genus " + std::to_string(genus) + " surface needs " + std::to_string(2 * genus) +
                " generators");
  std::vector<Word> relators;
  if (genus > 0) {
    Word r;
    for (std::size_t i = 0; i < generators.size(); i += 2)
      r = r * Word::commutator(Word::generator(i), Word::generator(i + 1));
    relators.push_back(r);
  }
  ManifoldModel m;
  m.name = genus == 1 ? "T2" : "S" + std::to_string(genus);
  m.dim = 2;
  m.chern = Chern2{2 - 2 * static_cast<std::int64_t>(genus)};
  m.betti = {1, 2 * static_cast<std::int64_t>(genus), 1};
  m.betti_derived.assign(3, false);
  m.pi1 = Presentation(std::move(generators), std::move(relators));
  m.provenance.push_back("surface(" + std::to_string(genus) + ")");
  m.validate();
  return m;
}

ManifoldModel torus(std::vector<std::string> generators) {
  const auto n = static_cast<std::int64_t>(generators.size());
  if (n != 2 && n != 4 && n != 6) throw Error("torus dimension must be 2, 4 or 6");
  ManifoldModel m;
  m.name = "T" + std::to_string(n);
  m.dim = static_cast<int>(n);
  if (n == 2) m.chern = Chern2{0};
  if (n == 4) {
    m.chern = Chern4{0, 0};
    m.signature = 0;
  }
  if (n == 6) m.chern = Chern6{};
  for (std::int64_t k = 0; k <= n; ++k) m.betti.push_back(binomial(n, k));
  m.betti_derived.assign(m.betti.size(), false);
  m.pi1 = Presentation(std::move(generators), all_commutators(0, static_cast<std::size_t>(n)));
  m.provenance.push_back("torus(" + std::to_string(n) + ")");
  m.validate();
  return m;
}

ManifoldModel rational_surface(int k) {
  if (k < 0) throw Error("blow-up count must be nonnegative");
  const std::int64_t kk = k;
  ManifoldModel m;
  m.name = k == 0 ? "CP2" : "CP2#" + std::to_string(k) + "CP2bar";
  m.dim = 4;
  m.chern = Chern4{9 - kk, 3 + kk};
  m.signature = 1 - kk;
  m.betti = {1, 0, 1 + kk, 0, 1};
  m.betti_derived.assign(5, false);
  ClassRecord h = surface_class("h", 0);
  h.c1_eval = 3;
  m.h2_basis.push_back(h);
  for (int i = 1; i <= k; ++i) {
    ClassRecord e = surface_class("e" + std::to_string(i), 0);
    e.c1_eval = 1;
    m.h2_basis.push_back(e);
  }
  IntMatrix gram(m.h2_basis.size(), m.h2_basis.size());
  gram(0, 0) = 1;
  for (std::size_t i = 1; i < m.h2_basis.size(); ++i) gram(i, i) = -1;
  attach_form(m, std::move(gram));
  m.basis_complete = true;
  m.provenance.push_back("rational_surface(" + std::to_string(k) + ")");
  m.validate();
  return m;
}

ManifoldModel elliptic_surface(int n) {
  if (n < 1) throw Error("E(n) needs n >= 1");
  const std::int64_t nn = n;
  ManifoldModel m;
  m.name = "E(" + std::to_string(n) + ")";
  m.dim = 4;
  m.chern = Chern4{0, 12 * nn};
  m.signature = -8 * nn;
  m.betti = {1, 0, 12 * nn - 2, 0, 1};
  m.betti_derived.assign(5, false);
  m.provenance.push_back("elliptic_surface(" + std::to_string(n) + ")");

  if (n == 1) {
    // Coordinates in h, e1, ..., e9.
    std::vector<IntVector> vectors;
    vectors.push_back({3, -1, -1, -1, -1, -1, -1, -1, -1, -1});
    IntVector e9(10, 0);
    e9[9] = 1;
    vectors.push_back(e9);
    for (std::size_t i = 1; i <= 7; ++i) {
      IntVector v(10, 0);
      v[i] = 1;
      v[i + 1] = -1;
      vectors.push_back(v);
    }
    vectors.push_back({-1, 0, 0, 0, 0, 0, 1, 1, 1, 0});
    std::vector<std::string> labels = {"f", "e9"};
    for (int i = 1; i <= 8; ++i) labels.push_back("m" + std::to_string(i));
    const auto lattice = gram_from_vectors(DiagonalForm::blown_up_plane(9), vectors, labels);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      ClassRecord c = surface_class(labels[i], i == 0 ? 1 : 0);
      const std::int64_t f_dot = lattice.gram()(0, i);
      c.c1_eval = (2 - nn) * f_dot;
      c.meets["F"] = f_dot;
      m.h2_basis.push_back(c);
    }
    attach_form(m, lattice.gram());
    m.basis_complete = true;
  } else if (n == 2) {
    std::vector<std::string> labels = {"f"};
    for (const char* suffix : {"", "'"})
      for (int i = 1; i <= 8; ++i) labels.push_back("m" + std::to_string(i) + suffix);
    for (const char* l : {"sigma", "rim_a", "dual_a", "rim_b", "dual_b"}) labels.push_back(l);
    IntMatrix gram(22, 22);
    const auto e8 = standard_form("minusE8").gram();
    for (std::size_t block : {1U, 9U})
      for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) gram(block + i, block + j) = e8(i, j);
    auto hyperbolic = [&gram](std::size_t torus, std::size_t sphere) {
      gram(torus, sphere) = 1;
      gram(sphere, torus) = 1;
      gram(sphere, sphere) = -2;
    };
    hyperbolic(0, 17);
    hyperbolic(18, 19);
    hyperbolic(20, 21);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const bool is_torus = i == 0 || i == 18 || i == 20;
      ClassRecord c = surface_class(labels[i], is_torus ? 1 : 0);
      c.c1_eval = (2 - nn) * gram(0, i);
      c.meets["F"] = gram(0, i);
      m.h2_basis.push_back(c);
    }
    attach_form(m, std::move(gram));
    m.basis_complete = true;
  }
  m.markings.emplace("F", fiber_marking(m, 1, n <= 2 ? std::optional<std::string>("f") : std::nullopt));
  m.validate();
  return m;
}

ManifoldModel hyperelliptic_fibration(int genus) {
  if (genus < 1) throw Error("fibration genus must be at least 1");
  const std::int64_t g = genus;
  ManifoldModel m = rational_surface(4 * genus + 5);
  m.name = "X(1," + std::to_string(genus) + ")";
  m.provenance.push_back("hyperelliptic_fibration(" + std::to_string(genus) + ")");
  for (std::size_t i = 0; i < m.h2_basis.size(); ++i)
    m.h2_basis[i].meets["F"] = i == 0 ? g + 2 : i == 1 ? g : 1;
  m.markings.emplace("F", fiber_marking(m, genus, std::nullopt));
  return m;
}

ManifoldModel product(const ManifoldModel& m, const ManifoldModel& s) {
  if (s.dim != 2 || (m.dim != 2 && m.dim != 4))
    throw Error("product expects a 2- or 4-manifold times a surface, got dimensions " +
                std::to_string(m.dim) + " and " + std::to_string(s.dim));
  const int genus = surface_genus(s);
  const std::int64_t chi = s.chern2().euler;
  ManifoldModel p;
  p.name = m.name + "x" + s.name;
  p.dim = m.dim + 2;
  p.betti = kunneth(m.betti, s.betti);
  p.betti_derived.assign(p.betti.size(), false);
  p.pi1 = direct_product(m.pi1, s.pi1);
  p.provenance = m.provenance;
  p.provenance.push_back("product with " + s.name);

  if (m.dim == 2) {
    const std::int64_t chi_m = m.chern2().euler;
    p.chern = Chern4{2 * chi_m * chi, chi_m * chi};
    p.signature = 0;
    ClassRecord a = surface_class(m.name + "_x_pt", surface_genus(m));
    a.c1_eval = chi_m;
    ClassRecord b = surface_class("pt_x_" + s.name, genus);
    b.c1_eval = chi;
    p.h2_basis = {a, b};
    attach_form(p, IntMatrix{{0, 1}, {1, 0}});
    p.basis_complete = p.betti[2] == 2;
    p.validate();
    return p;
  }

  const auto& c = m.chern4();
  p.chern = Chern6{3 * c.c1_sq * chi, (c.c1_sq + c.c2) * chi, c.c2 * chi};
  for (const auto& cls : m.h2_basis) {
    ClassRecord copy = cls;
    copy.self_pairing.reset();
    copy.meets.clear();
    for (const auto& [marking, value] : cls.meets) copy.meets[marking + "x" + s.name] = value;
    p.h2_basis.push_back(copy);
  }
  ClassRecord point = surface_class("pt_x_" + s.name, genus);
  point.c1_eval = chi;
  for (const auto& [name, marking] : m.markings) point.meets[name + "x" + s.name] = 0;
  point.note = "push-off disjoint from the marked submanifolds";
  p.h2_basis.push_back(point);
  p.basis_complete = m.basis_complete && static_cast<std::int64_t>(p.h2_basis.size()) == p.betti[2];

  for (const auto& [name, marking] : m.markings) {
    SubmanifoldMarking y;
    y.name = name + "x" + s.name;
    auto sub = std::make_shared<ManifoldModel>(product(*marking.submanifold, s));
    sub->name = y.name;
    y.submanifold = sub;
    y.normal_euler = marking.normal_euler;
    y.has_transverse_sphere = marking.has_transverse_sphere;
    y.complement_pi1 = direct_product(marking.complement_pi1, s.pi1);
    y.boundary_images = marking.boundary_images;
    const std::size_t offset = marking.complement_pi1.generator_count();
    for (std::size_t i = 0; i < s.pi1.generator_count(); ++i)
      y.boundary_images[s.pi1.generators()[i]] = Word::generator(offset + i);
    p.markings.emplace(y.name, std::move(y));
  }
  p.validate();
  return p;
}

SubmanifoldMarking complement_pi1_via_sphere(const ManifoldModel& m, SubmanifoldMarking draft) {
  if (!draft.submanifold) throw Error("marking '" + draft.name + "' has no submanifold");
  if (!draft.has_transverse_sphere)
    throw Error("marking '" + draft.name + "' has no transverse sphere; its complement group is unknown");
  if (auto it = draft.boundary_images.find(std::string(kMeridian));
      it != draft.boundary_images.end() && !free_reduce(it->second).empty())
    throw Error("marking '" + draft.name + "': a transverse sphere forces the meridian to bound");
  std::map<std::string, Word> images;
  for (const auto& g : draft.submanifold->pi1.generators())
    images[g] = free_reduce(draft.image(g));
  images[std::string(kMeridian)] = Word{};
  draft.complement_pi1 = m.pi1;
  draft.boundary_images = std::move(images);
  return draft;
}

ManifoldModel with_marking(ManifoldModel m, SubmanifoldMarking marking) {
  if (!marking.submanifold) throw Error("marking '" + marking.name + "' has no submanifold");
  if (marking.submanifold->dim != m.dim - 2)
    throw Error("marking '" + marking.name + "' must have dimension " + std::to_string(m.dim - 2));
  std::set<std::string> expected(marking.submanifold->pi1.generators().begin(),
                                 marking.submanifold->pi1.generators().end());
  expected.insert(std::string(kMeridian));
  for (const auto& g : expected) marking.image(g);
  for (const auto& [g, w] : marking.boundary_images) {
    if (!expected.count(g)) throw Error("marking '" + marking.name + "' maps unknown generator '" + g + "'");
    for (const auto& l : w.letters())
      if (l.gen >= marking.complement_pi1.generator_count())
        throw Error("marking '" + marking.name + "': image of '" + g + "' leaves the complement group");
  }
  if (marking.has_transverse_sphere && !marking.image(kMeridian).empty())
    throw Error("marking '" + marking.name + "': a transverse sphere forces the meridian to bound");
  if (m.markings.count(marking.name)) throw Error("'" + m.name + "' already has a marking '" + marking.name + "'");
  const std::string key = marking.name;
  m.markings.emplace(key, std::move(marking));
  return m;
}

ManifoldModel declare_block(const DeclaredBlock& raw) {
  ManifoldModel m;
  m.name = raw.name;
  m.dim = raw.dim;
  m.chern = raw.chern;
  m.signature = raw.signature;
  m.betti = raw.betti;
  m.betti_derived.assign(m.betti.size(), false);
  m.pi1 = raw.pi1;
  m.provenance.push_back("declared");
  m.validate();
  return m;
}

}  // namespace scalc
