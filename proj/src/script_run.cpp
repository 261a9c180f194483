#include <algorithm>
#include <cctype>
#include <memory>
#include <set>
#include <tuple>

#include "scalc/error.hpp"
#include "scalc/mcg.hpp"
#include "scalc/script.hpp"
#include "scalc/surgery.hpp"

namespace scalc {
namespace {

// Argument access with errors phrased for script authors.
const Json& arg(const Json& args, const std::string& key) {
  if (!args.is_object() || !args.contains(key)) throw Error("missing argument \"" + key + "\"");
  return args.at(key);
}

std::string arg_string(const Json& args, const std::string& key) {
  const Json& v = arg(args, key);
  if (!v.is_string()) throw Error("argument \"" + key + "\" must be a string");
  return v.get<std::string>();
}

std::int64_t as_int(const Json& v, const std::string& what) {
  if (!v.is_number_integer()) throw Error(what + " must be an integer");
  return v.get<std::int64_t>();
}

std::int64_t arg_int(const Json& args, const std::string& key) { return as_int(arg(args, key), "argument \"" + key + "\""); }

std::int64_t arg_int_or(const Json& args, const std::string& key, std::int64_t fallback) {
  return args.contains(key) ? arg_int(args, key) : fallback;
}

std::vector<std::string> string_list(const Json& v, const std::string& what) {
  if (!v.is_array()) throw Error(what + " must be a list of strings");
  std::vector<std::string> out;
  for (const auto& s : v) {
    if (!s.is_string()) throw Error(what + " must be a list of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

std::vector<int> int_list(const Json& v, const std::string& what) {
  std::vector<int> out;
  if (v.is_array()) {
    for (const auto& x : v) out.push_back(static_cast<int>(as_int(x, what)));
  } else {
    out.push_back(static_cast<int>(as_int(v, what)));
  }
  if (out.empty()) throw Error(what + " is empty");
  return out;
}

Json chern_json(const ChernNumbers& c) {
  Json j = Json::object();
  if (auto p = std::get_if<Chern2>(&c)) {
    j["euler"] = p->euler;
  } else if (auto p = std::get_if<Chern4>(&c)) {
    j["c1_sq"] = p->c1_sq;
    j["c2"] = p->c2;
  } else {
    const auto& q = std::get<Chern6>(c);
    j["c1_cubed"] = q.c1_cubed;
    j["c1c2"] = q.c1c2;
    j["c3"] = q.c3;
  }
  return j;
}

ChernNumbers parse_chern(int dim, const Json& j) {
  if (dim == 2) return Chern2{arg_int(j, "euler")};
  if (dim == 4) return Chern4{arg_int(j, "c1_sq"), arg_int(j, "c2")};
  if (dim == 6) return Chern6{arg_int(j, "c1_cubed"), arg_int(j, "c1c2"), arg_int(j, "c3")};
  throw Error("dimension must be 2, 4 or 6");
}

Json words_json(const std::vector<Word>& words, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (const auto& w : words) out.push_back(format_word(w, names));
  return out;
}

Json presentation_json(const Presentation& p) {
  Json j = Json::object();
  j["generators"] = p.generators();
  j["relators"] = words_json(p.relators(), p.generators());
  return j;
}

Json pi1_detail(const Presentation& p, std::size_t max_cosets) {
  const GroupVerdict v = classify_group(p, max_cosets);
  Json j = Json::object();
  j["presentation"] = presentation_json(p);
  Json simplified = presentation_json(v.simplified);
  simplified["rank"] = v.simplified.generator_count();
  j["simplified"] = std::move(simplified);
  j["triviality"] = to_string(v.triviality);
  j["order"] = v.finite_index ? Json(*v.finite_index) : Json(nullptr);
  j["coset_index"] = nullptr;
  if (v.abelian.free_rank == 0) {
    const CosetResult r = todd_coxeter(p, {}, max_cosets);
    j["coset_index"] = r.index ? Json(*r.index) : Json(nullptr);
    j["cosets_defined"] = r.cosets_defined;
  }
  j["abelianization"] = {{"free_rank", v.abelian.free_rank}, {"torsion", v.abelian.torsion}};
  j["abelian"] = v.abelian.to_string();
  j["abelian_certified"] = v.abelian_certified;
  j["description"] = v.description();
  return j;
}

Json class_json(const ClassRecord& c) {
  Json j = Json::object();
  j["label"] = c.label;
  j["kind"] = to_string(c.kind);
  if (c.kind == ClassKind::Surface) j["genus"] = c.genus;
  j["self"] = c.self_pairing ? Json(*c.self_pairing) : Json(nullptr);
  j["c1"] = c.c1_eval;
  j["killed_by"] = c.killed_by ? Json(*c.killed_by) : Json(nullptr);
  return j;
}

Json form_json(const IntLattice& form) {
  const FormClass f = classify_form(form);
  Json j = Json::object();
  j["rank"] = f.rank;
  j["signature"] = {f.signature.positive, f.signature.negative};
  j["degenerate"] = f.signature.zero;
  j["determinant"] = f.determinant;
  j["even"] = f.even;
  j["unimodular"] = f.unimodular;
  return j;
}

Json model_json(const ManifoldModel& m, std::size_t max_cosets) {
  Json j = Json::object();
  j["name"] = m.name;
  j["kind"] = "model";
  j["dim"] = m.dim;
  j["provenance"] = m.provenance;
  j["chern"] = chern_json(m.chern);
  if (m.signature) j["signature"] = *m.signature;
  j["euler"] = m.euler();
  j["betti"] = m.betti;
  Json derived = Json::array();
  for (bool b : m.betti_derived) derived.push_back(b);
  j["betti_derived"] = std::move(derived);
  Json detail = pi1_detail(m.pi1, max_cosets);
  j["pi1"] = detail["description"];
  detail.erase("description");
  j["pi1_detail"] = std::move(detail);

  Json h2 = Json::object();
  h2["complete"] = m.basis_complete;
  h2["declared"] = m.h2_basis.size();
  h2["essential"] = m.essential_classes();
  Json classes = Json::array();
  for (const auto& c : m.h2_basis) classes.push_back(class_json(c));
  h2["classes"] = std::move(classes);
  h2["form"] = m.h2_form ? form_json(*m.h2_form) : Json(nullptr);
  j["h2"] = std::move(h2);

  Json markings = Json::array();
  for (const auto& [key, mk] : m.markings) {
    Json k = Json::object();
    k["name"] = mk.name;
    k["dim"] = mk.submanifold->dim;
    k["generators"] = mk.submanifold->pi1.generators();
    k["normal_euler"] = mk.normal_euler;
    k["transverse_sphere"] = mk.has_transverse_sphere;
    k["class"] = mk.class_label ? Json(*mk.class_label) : Json(nullptr);
    markings.push_back(std::move(k));
  }
  j["markings"] = std::move(markings);

  const CyCheck cy = cy_check(m);
  j["cy"] = {{"verdict", to_string(cy.verdict)},
             {"chern_zero", cy.chern_zero},
             {"c1_evals_zero", cy.c1_evals_zero},
             {"basis_complete", cy.basis_complete}};
  j["notes"] = m.notes;
  return j;
}

Json chern6_json(const Chern6& c) { return chern_json(ChernNumbers{c}); }

struct GlueEntry {
  std::string model1, marking1, model2, marking2;
  GluingMap map;
  Json record;
};

class Runner {
 public:
  explicit Runner(const RunOptions& options) : options_(options) {}

  Report run(const Script& script) {
    std::set<std::string> declared;
    for (const auto& s : script.statements)
      if (s.kind == "param") declared.insert(s.name);
    for (const auto& [name, value] : options_.params)
      if (!declared.count(name)) throw Error("unknown parameter '" + name + "'");

    for (const auto& s : script.statements) {
      try {
        execute(s);
      } catch (const StatementError&) {
        throw;
      } catch (const std::exception& e) {
        throw StatementError(e.what(), s.line, s.kind + (s.name.empty() ? "" : " " + s.name));
      }
    }
    return std::move(report_);
  }

 private:
  Json substitute(const Json& j) const {
    if (j.is_string()) {
      const auto& s = j.get_ref<const std::string&>();
      if (s.size() > 1 && s[0] == '$') return params_.at(s.substr(1));
      return j;
    }
    if (j.is_array()) {
      Json out = Json::array();
      for (const auto& v : j) out.push_back(substitute(v));
      return out;
    }
    if (j.is_object()) {
      Json out = Json::object();
      for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = substitute(it.value());
      return out;
    }
    return j;
  }

  void execute(const Statement& s) {
    if (s.kind == "param") {
      auto it = options_.params.find(s.name);
      const Json value = it != options_.params.end() ? it->second : s.args;
      params_[s.name] = value;
      report_.params[s.name] = value;
      return;
    }
    const Json args = substitute(s.args);
    if (s.kind == "block") define(s.name, build_block(s.name, args));
    else if (s.kind == "product") run_product(s.name, args);
    else if (s.kind == "mark") run_mark(s.name, args);
    else if (s.kind == "glue") run_glue(s.name, args);
    else if (s.kind == "fiber_sum") run_fiber_sum(s.name, args);
    else if (s.kind == "luttinger") run_luttinger(s.name, args);
    else if (s.kind == "mcg_check") records_[s.name] = mcg_record(s.name, args);
    else if (s.kind == "family") records_[s.name] = family_record(s.name, args);
    else if (s.kind == "assert") run_assert(s, args);
    else if (s.kind == "report")
      for (const auto& n : args) report_.records.push_back(record(n.get<std::string>()));
  }

  void define(const std::string& name, ManifoldModel m) {
    m.name = name;
    models_.insert_or_assign(name, std::move(m));
  }

  const ManifoldModel& model(const std::string& name) const {
    auto it = models_.find(name);
    if (it == models_.end()) throw Error("'" + name + "' is not a manifold");
    return it->second;
  }

  static ManifoldModel build_block(const std::string& name, const Json& args) {
    const std::string type = arg_string(args, "type");
    if (type == "surface") {
      std::vector<std::string> gens;
      if (args.contains("generators")) gens = string_list(args["generators"], "generators");
      return surface(static_cast<int>(arg_int(args, "genus")), gens);
    }
    if (type == "torus") return torus(string_list(arg(args, "generators"), "generators"));
    if (type == "rational") return rational_surface(static_cast<int>(arg_int(args, "k")));
    if (type == "elliptic") return elliptic_surface(static_cast<int>(arg_int(args, "n")));
    if (type == "hyperelliptic") return hyperelliptic_fibration(static_cast<int>(arg_int(args, "genus")));
    if (type == "declared") {
      DeclaredBlock raw;
      raw.name = name;
      raw.dim = static_cast<int>(arg_int(args, "dim"));
      raw.chern = parse_chern(raw.dim, arg(args, "chern"));
      if (args.contains("signature")) raw.signature = arg_int(args, "signature");
      for (const auto& b : arg(args, "betti")) raw.betti.push_back(as_int(b, "betti"));
      if (args.contains("pi1")) {
        const Json& p = args["pi1"];
        const auto gens = string_list(arg(p, "generators"), "pi1 generators");
        std::vector<Word> rels;
        if (p.contains("relators"))
          for (const auto& r : string_list(p["relators"], "pi1 relators")) rels.push_back(parse_word(r, gens));
        raw.pi1 = Presentation(gens, rels);
      }
      return declare_block(raw);
    }
    throw Error("unknown block type '" + type + "'");
  }

  void run_product(const std::string& name, const Json& args) {
    const auto factors = string_list(arg(args, "factors"), "factors");
    if (factors.size() != 2) throw Error("product takes two factors");
    define(name, product(model(factors[0]), model(factors[1])));
  }

  void run_mark(const std::string& name, const Json& args) {
    const std::string on = arg_string(args, "on");
    ManifoldModel& m = models_.at(on);
    SubmanifoldMarking draft;
    draft.name = name;
    if (args.contains("torus")) {
      draft.submanifold = std::make_shared<ManifoldModel>(torus(string_list(args["torus"], "torus")));
    } else {
      const Json& s = arg(args, "surface");
      std::vector<std::string> gens;
      if (s.contains("generators")) gens = string_list(s["generators"], "generators");
      draft.submanifold = std::make_shared<ManifoldModel>(surface(static_cast<int>(arg_int(s, "genus")), gens));
    }
    draft.normal_euler = arg_int_or(args, "normal_euler", 0);
    draft.has_transverse_sphere = args.value("transverse_sphere", false);
    if (args.contains("class")) draft.class_label = arg_string(args, "class");
    const Json& images = arg(args, "images");
    if (!images.is_object()) throw Error("images must map generators to words");
    for (auto it = images.begin(); it != images.end(); ++it) {
      if (!it.value().is_string()) throw Error("image of '" + it.key() + "' must be a word");
      draft.boundary_images[it.key()] = parse_word(it.value().get<std::string>(), m.pi1.generators());
    }
    m = with_marking(m, complement_pi1_via_sphere(m, std::move(draft)));
    cache_.erase(on);
    Json rec = Json::object();
    rec["name"] = name;
    rec["kind"] = "marking";
    rec["on"] = on;
    rec["generators"] = m.marking(name).submanifold->pi1.generators();
    rec["normal_euler"] = m.marking(name).normal_euler;
    rec["transverse_sphere"] = m.marking(name).has_transverse_sphere;
    records_[name] = std::move(rec);
  }

  static std::pair<std::string, std::string> split_ref(const std::string& ref) {
    const auto dot = ref.find('.');
    if (dot == std::string::npos || dot + 1 == ref.size())
      throw Error("'" + ref + "' must name a marking as MODEL.MARKING");
    return {ref.substr(0, dot), ref.substr(dot + 1)};
  }

  void run_glue(const std::string& name, const Json& args) {
    GlueEntry g;
    const std::string from = arg_string(args, "from");
    const std::string to = arg_string(args, "to");
    std::tie(g.model1, g.marking1) = split_ref(from);
    std::tie(g.model2, g.marking2) = split_ref(to);
    const auto& y1 = model(g.model1).marking(g.marking1);
    const auto& y2 = model(g.model2).marking(g.marking2);
    const Json& table = arg(args, "map");
    if (table.is_string()) {
      if (table.get<std::string>() != "identity") throw Error("map must be a table or \"identity\"");
      g.map = identity_gluing(y1, y2);
    } else {
      if (!table.is_object()) throw Error("map must be a table or \"identity\"");
      std::map<std::string, std::string> entries;
      for (auto it = table.begin(); it != table.end(); ++it) {
        if (!it.value().is_string()) throw Error("image of '" + it.key() + "' must be a word");
        entries[it.key()] = it.value().get<std::string>();
      }
      g.map = make_gluing(y1, y2, entries);
    }
    Json rec = Json::object();
    rec["name"] = name;
    rec["kind"] = "glue";
    rec["from"] = from;
    rec["to"] = to;
    Json images = Json::object();
    for (std::size_t i = 0; i < g.map.source.size(); ++i)
      images[g.map.source[i]] = format_word(g.map.images[i], g.map.target);
    rec["map"] = std::move(images);
    rec["determinant"] = determinant(g.map.abelianized());
    g.record = std::move(rec);
    records_[name] = g.record;
    glues_.emplace(name, std::move(g));
  }

  static std::vector<std::string> side_list(const Json& keep, const char* side) {
    return keep.contains(side) ? string_list(keep[side], std::string("keep.") + side) : std::vector<std::string>{};
  }

  static H2Directives parse_h2(const Json& j) {
    H2Directives h2;
    if (j.contains("keep")) {
      h2.keep1 = side_list(j["keep"], "1");
      h2.keep2 = side_list(j["keep"], "2");
    }
    if (j.contains("sew")) {
      for (const auto& s : j["sew"]) {
        const auto classes = string_list(arg(s, "classes"), "sew classes");
        if (classes.size() != 2) throw Error("sew joins exactly two classes");
        h2.sew.push_back({classes[0], classes[1], arg_string(s, "as")});
      }
    }
    if (j.contains("rim")) {
      const Json& rim = j["rim"];
      if (!rim.is_object()) throw Error("rim must map generators to \"essential\" or \"null\"");
      for (auto it = rim.begin(); it != rim.end(); ++it) {
        const std::string fate = it.value().is_string() ? it.value().get<std::string>() : "";
        if (fate == "essential") h2.rim[it.key()] = RimFate::Essential;
        else if (fate == "null") h2.rim[it.key()] = RimFate::Nullhomologous;
        else throw Error("rim fate of '" + it.key() + "' must be \"essential\" or \"null\"");
      }
    }
    h2.complete = j.value("complete", false);
    return h2;
  }

  void run_fiber_sum(const std::string& name, const Json& args) {
    const std::string glue_name = arg_string(args, "glue");
    auto it = glues_.find(glue_name);
    if (it == glues_.end()) throw Error("'" + glue_name + "' is not a gluing");
    const GlueEntry& g = it->second;
    const FiberSumInput in{&model(g.model1), g.marking1, &model(g.model2), g.marking2};
    if (in.m1->dim == 6) {
      define(name, fiber_sum_6(in, g.map, parse_h2(arg(args, "h2")), name));
    } else {
      if (args.contains("h2")) throw Error("four-dimensional sums derive their H2 basis; drop \"h2\"");
      define(name, fiber_sum_4(in, g.map, name));
    }
  }

  void run_luttinger(const std::string& name, const Json& args) {
    LuttingerSpec spec;
    spec.torus = arg_string(args, "torus");
    spec.curve = arg_string(args, "curve");
    spec.p = arg_int(args, "p");
    spec.sign = static_cast<int>(arg_int_or(args, "sign", 1));
    spec.op_name = name;
    if (args.contains("kills")) {
      const auto kills = string_list(args["kills"], "kills");
      if (kills.size() != 2) throw Error("kills names a rim torus and its dual sphere");
      spec.killed_pair = std::pair{kills[0], kills[1]};
    }
    define(name, luttinger(model(arg_string(args, "on")), spec, name));
  }

  static Json mcg_record(const std::string& name, const Json& args) {
    const std::string family = arg_string(args, "family");
    const RelatorFamily f = parse_relator_family(family);
    Json entries = Json::array();
    bool all_identity = true;
    for (int g : int_list(arg(args, "genus"), "genus")) {
      const TwistWord w = relator_family(f, g);
      const bool identity = word_matrix(w) == BigMatrix::identity(2 * static_cast<std::size_t>(g));
      all_identity = all_identity && identity;
      Json e = Json::object();
      e["id"] = "g" + std::to_string(g);
      e["genus"] = g;
      e["length"] = w.letters.size();
      e["identity_on_h1"] = identity;
      e["lefschetz_euler"] = lefschetz_euler(g, static_cast<std::int64_t>(w.letters.size()));
      if (f == RelatorFamily::X) {
        BigMatrix minus = BigMatrix::identity(2 * static_cast<std::size_t>(g));
        for (std::size_t i = 0; i < minus.rows(); ++i) minus(i, i) = -1;
        e["half_word_negates"] = word_matrix(hyperelliptic_half_word(g)) == minus;
        e["rational_surface_euler"] = 3 + (4 * g + 5);
      }
      entries.push_back(std::move(e));
    }
    Json rec = Json::object();
    rec["name"] = name;
    rec["kind"] = "mcg_check";
    rec["family"] = std::string(1, family_name(f));
    rec["check"] = "H1-faithful only";
    rec["all_identity"] = all_identity;
    rec["entries"] = std::move(entries);
    return rec;
  }

  static Json family_record(const std::string& name, const Json& args) {
    Json entries = Json::array();
    Json mismatches = Json::array();
    bool all_congruences = true;
    const auto ns = args.contains("n") ? int_list(args["n"], "n") : std::vector<int>{1};
    for (int g : int_list(arg(args, "genus"), "genus")) {
      for (int n : ns) {
        const FamilyEntry e = family_remark42(g, n);
        const auto match = e.matches();
        Json j = Json::object();
        j["id"] = "g" + std::to_string(g) + "n" + std::to_string(n);
        j["genus"] = g;
        j["n"] = n;
        j["block"] = chern6_json(e.block);
        j["computed"] = chern6_json(e.computed);
        j["closed_form"] = e.closed_form ? chern6_json(*e.closed_form) : Json(nullptr);
        j["matches"] = match ? Json(*match) : Json(nullptr);
        j["mismatch"] = match.has_value() && !*match;
        j["congruences"] = e.congruences;
        all_congruences = all_congruences && e.congruences;
        if (match.has_value() && !*match) mismatches.push_back(j["id"]);
        entries.push_back(std::move(j));
      }
    }
    Json rec = Json::object();
    rec["name"] = name;
    rec["kind"] = "family";
    rec["all_congruences"] = all_congruences;
    rec["mismatches"] = std::move(mismatches);
    rec["entries"] = std::move(entries);
    return rec;
  }

  const Json& record(const std::string& name) {
    if (auto it = records_.find(name); it != records_.end()) return it->second;
    if (auto it = cache_.find(name); it != cache_.end()) return it->second;
    return cache_.emplace(name, model_json(model(name), options_.max_cosets)).first->second;
  }

  static const Json* step(const Json& j, const std::string& key) {
    if (j.is_object()) return j.contains(key) ? &j.at(key) : nullptr;
    if (!j.is_array()) return nullptr;
    if (!key.empty() && std::all_of(key.begin(), key.end(), ::isdigit)) {
      const std::size_t i = std::stoul(key);
      return i < j.size() ? &j.at(i) : nullptr;
    }
    for (const auto& e : j)
      for (const char* id : {"label", "name", "id"})
        if (e.is_object() && e.contains(id) && e[id] == key) return &e;
    return nullptr;
  }

  void run_assert(const Statement& s, const Json& args) {
    if (args.contains("if")) {
      const Json& cond = args["if"];
      for (auto it = cond.begin(); it != cond.end(); ++it) {
        auto p = params_.find(it.key());
        if (p == params_.end()) throw Error("condition on unknown parameter '" + it.key() + "'");
        if (p->second != it.value()) return;
      }
    }
    const std::string& path = s.name;
    const auto dot = path.find('.');
    const Json* at = &record(path.substr(0, dot));
    std::size_t pos = dot;
    while (pos != std::string::npos) {
      const auto next = path.find('.', pos + 1);
      const std::string key = path.substr(pos + 1, next == std::string::npos ? std::string::npos : next - pos - 1);
      at = step(*at, key);
      if (!at) throw Error("no value at '" + path + "'");
      pos = next;
    }
    AssertionResult r;
    r.line = s.line;
    r.target = path;
    r.expected = args.at("equals");
    r.actual = *at;
    r.passed = r.expected == r.actual;
    report_.assertions.push_back(std::move(r));
  }

  const RunOptions& options_;
  Report report_;
  std::map<std::string, Json> params_;
  std::map<std::string, ManifoldModel> models_;
  std::map<std::string, GlueEntry> glues_;
  std::map<std::string, Json> records_;
  std::map<std::string, Json> cache_;
};

}  // namespace

Report run_script(const Script& script, const RunOptions& options) { return Runner(options).run(script); }

}  // namespace scalc
