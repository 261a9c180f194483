#include "scalc/surgery.hpp"

#include <algorithm>

namespace scalc {
namespace {

Word shifted(const Word& w, std::size_t offset) {
  std::vector<Letter> letters;
  for (const auto& l : w.letters()) letters.push_back({l.gen + offset, l.sign});
  return Word(std::move(letters));
}

std::set<std::string> side_one_names(const SubmanifoldMarking& y1) {
  std::set<std::string> taken(y1.complement_pi1.generators().begin(), y1.complement_pi1.generators().end());
  taken.insert(y1.submanifold->pi1.generators().begin(), y1.submanifold->pi1.generators().end());
  taken.insert(std::string(kMeridian));
  return taken;
}

std::string side_two_meridian(const SubmanifoldMarking& y1) {
  return primed_names({std::string(kMeridian)}, side_one_names(y1)).front();
}

// Side-2 boundary images of the target generators, moved past side 1's
// complement generators.
std::vector<std::optional<Word>> side_two_images(const SubmanifoldMarking& y2, std::size_t offset) {
  std::vector<std::optional<Word>> out;
  for (const auto& g : y2.submanifold->pi1.generators()) out.emplace_back(shifted(y2.image(g), offset));
  return out;
}

std::size_t source_index(const GluingMap& glue, const std::string& generator) {
  auto it = std::find(glue.source.begin(), glue.source.end(), generator);
  if (it == glue.source.end()) throw Error("'" + generator + "' is not a submanifold generator");
  return static_cast<std::size_t>(it - glue.source.begin());
}

void check_sides(const FiberSumInput& in, int dim) {
  if (!in.m1 || !in.m2) throw Error("fiber sum needs two models");
  if (in.m1->dim != dim || in.m2->dim != dim)
    throw Error("fiber sum of '" + in.m1->name + "' and '" + in.m2->name + "' needs dimension " +
                std::to_string(dim));
  const auto& y1 = in.m1->marking(in.y1);
  const auto& y2 = in.m2->marking(in.y2);
  if (y1.submanifold->dim != dim - 2 || y2.submanifold->dim != dim - 2)
    throw Error("fiber sum submanifolds must have dimension " + std::to_string(dim - 2));
  if (y1.submanifold->betti != y2.submanifold->betti ||
      y1.submanifold->pi1.generator_count() != y2.submanifold->pi1.generator_count())
    throw Error("submanifolds '" + y1.name + "' and '" + y2.name + "' are not diffeomorphic");
  if (y1.normal_euler + y2.normal_euler != 0)
    throw Error("normal Euler numbers " + std::to_string(y1.normal_euler) + " and " +
                std::to_string(y2.normal_euler) + " do not cancel");
}

bool matches_pattern(const std::string& label, const std::string& pattern) {
  if (!pattern.empty() && pattern.back() == '*')
    return label.compare(0, pattern.size() - 1, pattern, 0, pattern.size() - 1) == 0;
  return label == pattern;
}

std::vector<const ClassRecord*> select(const ManifoldModel& m, const std::vector<std::string>& patterns,
                                       int side) {
  std::vector<const ClassRecord*> out;
  for (const auto& pattern : patterns) {
    bool any = false;
    for (const auto& c : m.h2_basis) {
      if (!c.essential() || !matches_pattern(c.label, pattern)) continue;
      if (std::find(out.begin(), out.end(), &c) != out.end())
        throw Error("class '" + c.label + "' of side " + std::to_string(side) + " is kept twice");
      out.push_back(&c);
      any = true;
    }
    if (!any) throw Error("'" + pattern + "' matches no class of side " + std::to_string(side));
  }
  return out;
}

const ClassRecord& require_class(const ManifoldModel& m, const std::string& label) {
  const auto* c = m.find_class(label);
  if (!c) throw Error("'" + m.name + "' has no class '" + label + "'");
  if (!c->essential()) throw Error("class '" + label + "' of '" + m.name + "' was killed");
  return *c;
}

std::int64_t meets(const ClassRecord& c, const std::string& marking) {
  auto it = c.meets.find(marking);
  if (it == c.meets.end())
    throw Error("class '" + c.label + "' has no recorded intersection with '" + marking + "'");
  return it->second;
}

std::int64_t form_pairing(const ManifoldModel& m, const std::string& a, const std::string& b) {
  return m.h2_form->pairing(a, b);
}

struct Piece {
  enum Kind { Kept1, Kept2, Sewn, Rim, Dual } kind;
  std::string a;  // side-1 label, or the rim generator
  std::string b;  // side-2 label
};

struct Assembly {
  std::vector<ClassRecord> classes;
  std::optional<IntMatrix> gram;
  bool has_sphere_section = false;
};

Assembly assemble(const FiberSumInput& in, const GluingMap& glue, const H2Directives& h2) {
  const auto& m1 = *in.m1;
  const auto& m2 = *in.m2;
  const auto& y1 = m1.marking(in.y1);
  const auto& y2 = m2.marking(in.y2);
  const bool four = m1.dim == 4;
  Assembly out;
  std::vector<Piece> pieces;

  std::set<std::string> side_one_labels;
  for (const auto& c : m1.h2_basis) side_one_labels.insert(c.label);

  for (const auto* c : select(m1, h2.keep1, 1)) {
    if (meets(*c, y1.name) != 0)
      throw Error("class '" + c->label + "' meets '" + y1.name + "' and cannot be kept");
    ClassRecord r = *c;
    r.meets = {{y1.name, 0}};
    out.classes.push_back(r);
    pieces.push_back({Piece::Kept1, c->label, ""});
  }
  for (const auto* c : select(m2, h2.keep2, 2)) {
    if (meets(*c, y2.name) != 0)
      throw Error("class '" + c->label + "' meets '" + y2.name + "' and cannot be kept");
    ClassRecord r = *c;
    r.label = primed_names({c->label}, side_one_labels).front();
    r.meets = {{y1.name, 0}};
    out.classes.push_back(r);
    pieces.push_back({Piece::Kept2, "", c->label});
  }
  for (const auto& s : h2.sew) {
    const auto& c1 = require_class(m1, s.first);
    const auto& c2 = require_class(m2, s.second);
    const auto d1 = meets(c1, y1.name);
    const auto d2 = meets(c2, y2.name);
    if (d1 == 0 || d1 != d2)
      throw Error("classes '" + s.first + "' and '" + s.second + "' meet the submanifolds " +
                  std::to_string(d1) + " and " + std::to_string(d2) + " times and cannot be sewn");
    ClassRecord r;
    r.label = s.as;
    r.genus = c1.genus + c2.genus;
    r.kind = r.genus == 0 ? ClassKind::Sphere : r.genus == 1 ? ClassKind::Torus : ClassKind::Surface;
    r.c1_eval = c1_eval_sewn(c1.c1_eval, c2.c1_eval, d1, d2);
    r.meets = {{y1.name, d1}};
    r.note = "sewn from " + s.first + " and " + s.second;
    out.has_sphere_section = out.has_sphere_section || (r.kind == ClassKind::Sphere && d1 == 1);
    out.classes.push_back(r);
    pieces.push_back({Piece::Sewn, s.first, s.second});
  }
  for (const auto& g : glue.source)
    if (!h2.rim.count(g)) throw Error("no rim directive for generator '" + g + "'");
  for (const auto& g : glue.source) {
    const bool essential = rim_class_essential(y1, y2, glue, g);
    const auto fate = h2.rim.at(g);
    if (fate == RimFate::Essential && !essential)
      throw Error("rim torus over '" + g + "' cannot be essential: " + g + " does not bound on both sides");
    if (fate == RimFate::Nullhomologous && essential)
      throw Error("rim torus over '" + g + "' is essential: " + g + " bounds on both sides");
    if (!essential) continue;
    std::set<std::string> taken;
    for (const auto& c : out.classes) taken.insert(c.label);
    ClassRecord rim;
    rim.label = primed_names({"rim_" + g}, taken).front();
    rim.kind = ClassKind::Torus;
    rim.genus = 1;
    rim.meets = {{y1.name, 0}};
    rim.note = "rim class";
    ClassRecord dual;
    dual.label = primed_names({"dual_" + g}, taken).front();
    dual.meets = {{y1.name, 0}};
    dual.note = "vanishing disks of " + g + " on both sides";
    out.classes.push_back(rim);
    pieces.push_back({Piece::Rim, g, ""});
    out.classes.push_back(dual);
    pieces.push_back({Piece::Dual, g, ""});
  }
  for (const auto& [g, fate] : h2.rim)
    source_index(glue, g);

  std::set<std::string> labels;
  for (const auto& c : out.classes)
    if (!labels.insert(c.label).second) throw Error("duplicate class label '" + c.label + "'");

  if (four && m1.h2_form && m2.h2_form) {
    const std::size_t n = pieces.size();
    IntMatrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto& p = pieces[i];
        const auto& q = pieces[j];
        std::int64_t v = 0;
        auto on1 = [](const Piece& x) { return x.kind == Piece::Kept1 || x.kind == Piece::Sewn; };
        auto on2 = [](const Piece& x) { return x.kind == Piece::Kept2 || x.kind == Piece::Sewn; };
        if (on1(p) && on1(q)) v += form_pairing(m1, p.a, q.a);
        if (on2(p) && on2(q)) v += form_pairing(m2, p.b, q.b);
        const bool rims = (p.kind == Piece::Rim || p.kind == Piece::Dual) &&
                          (q.kind == Piece::Rim || q.kind == Piece::Dual) && p.a == q.a;
        if (rims) v = p.kind == Piece::Dual && q.kind == Piece::Dual ? -2 : p.kind == q.kind ? 0 : 1;
        gram(i, j) = v;
      }
    for (std::size_t i = 0; i < n; ++i) out.classes[i].self_pairing = gram(i, i);
    out.gram = std::move(gram);
  } else {
    for (auto& c : out.classes) c.self_pairing.reset();
  }
  return out;
}

struct SumCore {
  ManifoldModel model;
  Assembly h2;
};

SumCore sum_core(const FiberSumInput& in, const GluingMap& glue, const H2Directives& h2, std::string name) {
  glue.validate();
  const auto& y1 = in.m1->marking(in.y1);
  const auto& y2 = in.m2->marking(in.y2);
  SumCore core;
  auto& m = core.model;
  m.name = std::move(name);
  m.dim = in.m1->dim;
  m.pi1 = van_kampen_fiber_sum(y1, y2, glue);
  m.provenance = in.m1->provenance;
  m.provenance.push_back("fiber sum of " + in.m1->name + " and " + in.m2->name + " along " + y1.name);
  core.h2 = assemble(in, glue, h2);
  m.h2_basis = core.h2.classes;
  for (const auto& [g, fate] : h2.rim)
    if (fate == RimFate::Nullhomologous)
      m.notes.push_back("rim torus over " + g + " is nullhomologous: " + g + " does not bound on both sides");
  return core;
}

// Carries the side-1 marking into the sum when the sewn section keeps a
// transverse sphere, so that sums can be iterated.
void carry_marking(SumCore& core, const SubmanifoldMarking& y1) {
  if (!y1.has_transverse_sphere || !core.h2.has_sphere_section) return;
  SubmanifoldMarking carried = y1;
  carried.complement_pi1 = core.model.pi1;
  core.model.markings.emplace(carried.name, std::move(carried));
}

}  // namespace

std::vector<std::string> primed_names(const std::vector<std::string>& names, const std::set<std::string>& taken) {
  std::vector<std::string> out;
  for (auto n : names) {
    while (taken.count(n)) n += "'";
    out.push_back(n);
  }
  return out;
}

IntMatrix GluingMap::abelianized() const {
  IntMatrix m(images.size(), target.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = 0; j < target.size(); ++j) m(i, j) = images[i].exponent_sum(j);
  return m;
}

void GluingMap::validate() const {
  if (images.size() != source.size()) throw Error("gluing map does not cover every generator");
  if (source.size() != target.size())
    throw Error("gluing map between groups with " + std::to_string(source.size()) + " and " +
                std::to_string(target.size()) + " generators");
  for (const auto& w : images)
    for (const auto& l : w.letters())
      if (l.gen >= target.size()) throw Error("gluing image uses an unknown generator");
  const BigInt det = determinant(to_big(abelianized()));
  if (det != 1 && det != -1)
    throw Error("gluing map is not invertible on H1 (determinant " + det.str() + ")");
}

std::vector<std::string> side_two_generators(const SubmanifoldMarking& y1, const SubmanifoldMarking& y2) {
  return primed_names(y2.submanifold->pi1.generators(), side_one_names(y1));
}

std::vector<std::string> side_two_complement(const SubmanifoldMarking& y1, const SubmanifoldMarking& y2) {
  return primed_names(y2.complement_pi1.generators(), side_one_names(y1));
}

GluingMap make_gluing(const SubmanifoldMarking& y1, const SubmanifoldMarking& y2,
                      const std::map<std::string, std::string>& table) {
  GluingMap glue;
  glue.source = y1.submanifold->pi1.generators();
  glue.target = side_two_generators(y1, y2);
  for (const auto& [key, value] : table) {
    if (key == kMeridian) {
      const std::vector<std::string> mu2{side_two_meridian(y1)};
      Word w;
      try {
        w = free_reduce(parse_word(value, mu2));
      } catch (const Error&) {
        w = Word{};
      }
      if (w != Word::generator(0, -1))
        throw Error("the meridian must map to " + mu2.front() + "^-1, not '" + value + "'");
      continue;
    }
    if (std::find(glue.source.begin(), glue.source.end(), key) == glue.source.end())
      throw Error("gluing maps unknown generator '" + key + "'");
  }
  for (const auto& g : glue.source) {
    auto it = table.find(g);
    if (it == table.end()) throw Error("gluing has no image for '" + g + "'");
    glue.images.push_back(free_reduce(parse_word(it->second, glue.target)));
  }
  glue.validate();
  return glue;
}

GluingMap identity_gluing(const SubmanifoldMarking& y1, const SubmanifoldMarking& y2) {
  GluingMap glue;
  glue.source = y1.submanifold->pi1.generators();
  glue.target = side_two_generators(y1, y2);
  for (std::size_t i = 0; i < glue.source.size(); ++i) glue.images.push_back(Word::generator(i));
  glue.validate();
  return glue;
}

Chern6 chern_sum_6(const Chern6& x1, const Chern6& x2, const Chern4& y) {
  return {x1.c1_cubed + x2.c1_cubed - 6 * y.c1_sq, x1.c1c2 + x2.c1c2 - 2 * (y.c1_sq + y.c2),
          x1.c3 + x2.c3 - 2 * y.c2};
}

Presentation van_kampen_fiber_sum(const SubmanifoldMarking& y1, const SubmanifoldMarking& y2,
                                  const GluingMap& glue) {
  glue.validate();
  if (glue.source != y1.submanifold->pi1.generators() || glue.target != side_two_generators(y1, y2))
    throw Error("gluing map does not match the submanifolds '" + y1.name + "' and '" + y2.name + "'");
  const std::size_t offset = y1.complement_pi1.generator_count();
  std::vector<std::string> names = y1.complement_pi1.generators();
  for (const auto& n : side_two_complement(y1, y2)) names.push_back(n);

  std::vector<Word> relators = y1.complement_pi1.relators();
  for (const auto& r : y2.complement_pi1.relators()) relators.push_back(shifted(r, offset));
  const auto images2 = side_two_images(y2, offset);
  for (std::size_t i = 0; i < glue.source.size(); ++i) {
    const Word other = substitute(glue.images[i], images2, glue.target);
    relators.push_back(free_reduce(y1.image(glue.source[i]) * other.inverse()));
  }
  relators.push_back(free_reduce(y1.image(kMeridian) * shifted(y2.image(kMeridian), offset)));
  relators.erase(std::remove_if(relators.begin(), relators.end(), [](const Word& w) { return w.empty(); }),
                 relators.end());
  return Presentation(std::move(names), std::move(relators));
}

std::int64_t c1_eval_sewn(std::int64_t c1_eval_c1, std::int64_t c1_eval_c2, std::int64_t y_dot_c1,
                          std::int64_t y_dot_c2) {
  return c1_eval_c1 + c1_eval_c2 - y_dot_c1 - y_dot_c2;
}

bool rim_class_essential(const SubmanifoldMarking& y1, const SubmanifoldMarking& y2,
                         const GluingMap& glue, const std::string& generator) {
  const std::size_t i = source_index(glue, generator);
  if (!free_reduce(y1.image(generator)).empty()) return false;
  return substitute(glue.images[i], side_two_images(y2, 0), glue.target).empty();
}

H2Directives automatic_directives(const FiberSumInput& in, const GluingMap& glue) {
  const auto& y1 = in.m1->marking(in.y1);
  const auto& y2 = in.m2->marking(in.y2);
  H2Directives h2;
  const ClassRecord* section1 = nullptr;
  const ClassRecord* section2 = nullptr;
  for (const auto& c : in.m1->h2_basis) {
    if (!c.essential() || !c.meets.count(y1.name)) continue;
    if (c.meets.at(y1.name) == 0) h2.keep1.push_back(c.label);
    else if (c.meets.at(y1.name) == 1 && !section1) section1 = &c;
  }
  for (const auto& c : in.m2->h2_basis) {
    if (!c.essential() || !c.meets.count(y2.name)) continue;
    if (c.meets.at(y2.name) == 0 && c.label != y2.class_label) h2.keep2.push_back(c.label);
    else if (c.meets.at(y2.name) == 1 && !section2) section2 = &c;
  }
  if (section1 && section2) h2.sew.push_back({section1->label, section2->label, "sigma"});
  for (const auto& g : glue.source)
    h2.rim[g] = rim_class_essential(y1, y2, glue, g) ? RimFate::Essential : RimFate::Nullhomologous;
  return h2;
}

ManifoldModel fiber_sum_6(const FiberSumInput& in, const GluingMap& glue, const H2Directives& h2,
                          std::string name) {
  check_sides(in, 6);
  const auto& y1 = in.m1->marking(in.y1);
  SumCore core = sum_core(in, glue, h2, std::move(name));
  auto& m = core.model;
  const auto chern = chern_sum_6(in.m1->chern6(), in.m2->chern6(), y1.submanifold->chern4());
  m.chern = chern;
  const std::int64_t chi = in.m1->betti_euler() + in.m2->betti_euler() - 2 * y1.submanifold->betti_euler();
  if (chi != chern.c3)
    throw Error("Euler number " + std::to_string(chi) + " of the sum disagrees with c3 = " +
                std::to_string(chern.c3));
  const auto b1 = static_cast<std::int64_t>(abelian_invariants(m.pi1).free_rank);
  const auto b2 = static_cast<std::int64_t>(m.essential_classes());
  const std::int64_t b3 = 2 - 2 * b1 + 2 * b2 - chi;
  if (b3 < 0) throw Error("declared basis of " + std::to_string(b2) + " classes gives b3 < 0");
  m.betti = {1, b1, b2, b3, b2, b1, 1};
  m.betti_derived = {false, false, true, true, true, false, false};
  m.basis_complete = h2.complete;
  carry_marking(core, y1);
  m.validate();
  return m;
}

ManifoldModel fiber_sum_4(const FiberSumInput& in, const GluingMap& glue, std::string name) {
  check_sides(in, 4);
  const auto& y1 = in.m1->marking(in.y1);
  SumCore core = sum_core(in, glue, automatic_directives(in, glue), std::move(name));
  auto& m = core.model;
  const auto& c1 = in.m1->chern4();
  const auto& c2 = in.m2->chern4();
  const std::int64_t euler = c1.c2 + c2.c2 - 2 * y1.submanifold->euler();
  const std::int64_t sigma = in.m1->signature.value_or(0) + in.m2->signature.value_or(0);
  m.chern = Chern4{2 * euler + 3 * sigma, euler};
  m.signature = sigma;
  const auto b1 = static_cast<std::int64_t>(abelian_invariants(m.pi1).free_rank);
  const std::int64_t b2 = euler - 2 + 2 * b1;
  m.betti = {1, b1, b2, b1, 1};
  m.betti_derived.assign(5, false);
  if (core.h2.gram) {
    std::vector<std::string> labels;
    for (const auto& c : m.h2_basis) labels.push_back(c.label);
    m.h2_form = IntLattice(std::move(labels), *core.h2.gram);
    m.basis_complete = static_cast<std::int64_t>(m.h2_basis.size()) == b2 &&
                       std::abs(determinant(*m.h2_form)) == 1;
  }
  carry_marking(core, y1);
  m.validate();
  return m;
}

ManifoldModel luttinger(const ManifoldModel& m, const LuttingerSpec& spec, std::string name) {
  if (m.dim != 6) throw Error("Luttinger surgery needs a 6-manifold");
  const auto& torus = m.marking(spec.torus);
  if (torus.submanifold->dim != 4 || torus.submanifold->pi1.generator_count() != 4)
    throw Error("'" + spec.torus + "' is not a 4-torus");
  if (!torus.submanifold->pi1.find_generator(spec.curve))
    throw Error("'" + spec.curve + "' is not a generator of '" + spec.torus + "'");
  if (spec.p < 0) throw Error("surgery coefficient must be nonnegative");
  if (spec.sign != 1 && spec.sign != -1) throw Error("surgery sign must be +1 or -1");

  ManifoldModel out = m;
  out.name = std::move(name);
  out.provenance.push_back(spec.op_name + " on " + spec.torus + " along " + spec.curve + "^" +
                           std::to_string(spec.p));
  const Word relation =
      free_reduce(torus.image(spec.curve).power(spec.p) * torus.image(kMeridian).power(spec.sign));
  // With a transverse sphere the complement group is the current ambient group.
  const Presentation& complement = torus.has_transverse_sphere ? m.pi1 : torus.complement_pi1;
  std::vector<Word> relators = complement.relators();
  if (!relation.empty()) relators.push_back(relation);
  out.pi1 = Presentation(complement.generators(), std::move(relators));
  if (spec.p == 0) out.notes.push_back(spec.op_name + ": p = 0, only the framing changes");
  if (torus.has_transverse_sphere) {
    out.notes.push_back(spec.op_name + ": meridian bounds, sign recorded but inert");
    out.markings.erase(spec.torus);
    for (auto& [key, marking] : out.markings)
      if (marking.has_transverse_sphere) marking.complement_pi1 = out.pi1;
  } else {
    out.markings.clear();
  }

  std::int64_t killed = 0;
  if (spec.killed_pair) {
    for (const auto& label : {spec.killed_pair->first, spec.killed_pair->second}) {
      require_class(m, label);
      for (auto& c : out.h2_basis)
        if (c.label == label) c.killed_by = spec.op_name;
      ++killed;
    }
  }
  const auto b1 = static_cast<std::int64_t>(abelian_invariants(out.pi1).free_rank);
  const std::int64_t b2 = m.betti[2] - killed;
  const std::int64_t b3 = 2 - 2 * b1 + 2 * b2 - out.euler();
  if (b2 < 0 || b3 < 0) throw Error("surgery leaves negative Betti numbers");
  const bool b2_derived = m.betti_derived.at(2);
  out.betti = {1, b1, b2, b3, b2, b1, 1};
  out.betti_derived = {false, false, b2_derived, true, b2_derived, false, false};
  out.validate();
  return out;
}

std::string to_string(CyVerdict v) {
  switch (v) {
    case CyVerdict::Certified: return "CY_certified";
    case CyVerdict::OnDeclaredBasis: return "CY_on_declared_basis";
    case CyVerdict::NotCY: return "NotCY";
  }
  return "?";
}

CyCheck cy_check(const ManifoldModel& m) {
  CyCheck r;
  if (m.dim == 6) r.chern_zero = m.chern6().c1_cubed == 0 && m.chern6().c1c2 == 0;
  else if (m.dim == 4) r.chern_zero = m.chern4().c1_sq == 0;
  else r.chern_zero = m.chern2().euler == 0;
  r.c1_evals_zero = std::all_of(m.h2_basis.begin(), m.h2_basis.end(),
                                [](const ClassRecord& c) { return !c.essential() || c.c1_eval == 0; });
  r.basis_complete = m.basis_complete;
  if (!r.chern_zero || !r.c1_evals_zero) r.verdict = CyVerdict::NotCY;
  else r.verdict = r.basis_complete ? CyVerdict::Certified : CyVerdict::OnDeclaredBasis;
  return r;
}

std::optional<bool> FamilyEntry::matches() const {
  if (!closed_form) return std::nullopt;
  return computed == *closed_form;
}

FamilyEntry family_remark42(int genus, int n) {
  if (genus < 1 || n < 1) throw Error("family needs g >= 1 and n >= 1");
  const std::int64_t g = genus;
  const ManifoldModel unit = hyperelliptic_fibration(genus);
  ManifoldModel x = unit;
  for (int i = 2; i <= n; ++i) {
    const FiberSumInput in{&x, "F", &unit, "F"};
    x = fiber_sum_4(in, identity_gluing(x.marking("F"), unit.marking("F")),
                    "X(" + std::to_string(i) + "," + std::to_string(genus) + ")");
  }
  std::vector<std::string> names;
  for (int i = 1; i <= genus; ++i) {
    names.push_back("c" + std::to_string(i));
    names.push_back("d" + std::to_string(i));
  }
  const ManifoldModel base = surface(genus, names);
  const ManifoldModel block = product(x, base);
  const ManifoldModel y = product(surface(genus), base);

  FamilyEntry e;
  e.genus = genus;
  e.n = n;
  e.block = block.chern6();
  e.computed = chern_sum_6(block.chern6(), block.chern6(), y.chern4());
  if (n == 1) e.closed_form = Chern6{24 * (g - 1) * (g - 1), 24 * (1 - g), 8 * (g + 2) * (1 - g)};
  e.congruences = e.computed.c1_cubed % 2 == 0 && e.computed.c1c2 % 24 == 0 && e.computed.c3 % 2 == 0;
  return e;
}

}  // namespace scalc
