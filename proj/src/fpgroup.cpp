#include "scalc/fpgroup.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace scalc {

Word Word::commutator(const Word& x, const Word& y) {
  return x * y * x.inverse() * y.inverse();
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back(it->inverse());
  return Word(std::move(out));
}

Word Word::power(std::int64_t exponent) const {
  const Word base = exponent < 0 ? inverse() : *this;
  const std::int64_t n = exponent < 0 ? -exponent : exponent;
  std::vector<Letter> out;
  out.reserve(base.size() * static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i)
    out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  return Word(std::move(out));
}

std::int64_t Word::exponent_sum(std::size_t gen) const {
  std::int64_t s = 0;
  for (const auto& l : letters_)
    if (l.gen == gen) s += l.sign;
  return s;
}

std::size_t Word::occurrences(std::size_t gen) const {
  return static_cast<std::size_t>(std::count_if(
      letters_.begin(), letters_.end(), [gen](const Letter& l) { return l.gen == gen; }));
}

std::size_t Word::max_generator() const {
  std::size_t m = 0;
  for (const auto& l : letters_) m = std::max(m, l.gen);
  return m;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out));
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const auto& l : w.letters()) {
    if (!stack.empty() && stack.back() == l.inverse())
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return Word(std::move(stack));
}

Word cyclic_reduce(const Word& w) {
  const Word reduced = free_reduce(w);
  const auto& ls = reduced.letters();
  std::size_t lo = 0;
  std::size_t hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == ls[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(ls.begin() + static_cast<std::ptrdiff_t>(lo),
                                  ls.begin() + static_cast<std::ptrdiff_t>(hi)));
}

namespace {

std::string generator_label(std::size_t gen, std::span<const std::string> names) {
  if (gen < names.size()) return names[gen];
  return "g" + std::to_string(gen);
}

}  // namespace

Word substitute(const Word& w, std::span<const std::optional<Word>> images,
                std::span<const std::string> names) {
  std::vector<Letter> out;
  for (const auto& l : w.letters()) {
    if (l.gen >= images.size() || !images[l.gen])
      throw Error("no image for generator '" + generator_label(l.gen, names) + "'");
    const Word& img = *images[l.gen];
    if (l.sign > 0) {
      out.insert(out.end(), img.letters().begin(), img.letters().end());
    } else {
      const Word inv = img.inverse();
      out.insert(out.end(), inv.letters().begin(), inv.letters().end());
    }
  }
  return free_reduce(Word(std::move(out)));
}

// ---------------------------------------------------------------------------
// Word text syntax

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, std::span<const std::string> names)
      : text_(text), names_(names) {}

  Word parse() {
    Word w = parse_product();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error("bad word \"" + std::string(text_) + "\" at offset " +
                std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '*' ||
            text_[pos_] == '.'))
      ++pos_;
  }

  bool at_factor_start() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '[' || c == '(';
  }

  Word parse_product() {
    Word w;
    while (at_factor_start()) w = w * parse_factor();
    return w;
  }

  Word parse_factor() {
    Word atom = parse_atom();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      bool negative = false;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
        negative = text_[pos_] == '-';
        ++pos_;
      }
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (start == pos_) fail("missing exponent");
      const std::int64_t e = std::stoll(std::string(text_.substr(start, pos_ - start)));
      atom = atom.power(negative ? -e : e);
    }
    return atom;
  }

  Word parse_atom() {
    skip_space();
    const char c = text_[pos_];
    if (c == '[') {
      ++pos_;
      Word x = parse_product();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ',') fail("expected ',' in commutator");
      ++pos_;
      Word y = parse_product();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ']') fail("expected ']'");
      ++pos_;
      return Word::commutator(x, y);
    }
    if (c == '(') {
      ++pos_;
      Word x = parse_product();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return x;
    }
    if (c == '1') {
      ++pos_;
      return Word{};
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    while (pos_ < text_.size() && text_[pos_] == '\'') ++pos_;
    if (start == pos_) fail("expected a generator");
    const std::string_view name = text_.substr(start, pos_ - start);
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return Word::generator(i);
    fail("unknown generator '" + std::string(name) + "'");
  }

  std::string_view text_;
  std::span<const std::string> names_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, std::span<const std::string> names) {
  return WordParser(text, names).parse();
}

std::string format_word(const Word& w, std::span<const std::string> names) {
  if (w.empty()) return "1";
  std::string out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const std::int64_t e = static_cast<std::int64_t>(j - i) * ls[i].sign;
    if (!out.empty()) out += ' ';
    out += generator_label(ls[i].gen, names);
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

// ---------------------------------------------------------------------------

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators)
    : generators_(std::move(generators)) {
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (g.empty()) throw Error("empty generator name");
    if (!seen.insert(g).second) throw Error("duplicate generator name '" + g + "'");
  }
  relators_.reserve(relators.size());
  for (const auto& r : relators) {
    for (const auto& l : r.letters()) {
      if (l.gen >= generators_.size())
        throw Error("relator refers to generator index " + std::to_string(l.gen) +
                    " but the presentation has " + std::to_string(generators_.size()));
      if (l.sign != 1 && l.sign != -1) throw Error("letter sign must be +1 or -1");
    }
    relators_.push_back(cyclic_reduce(r));
  }
}

std::optional<std::size_t> Presentation::find_generator(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i] == name) return i;
  return std::nullopt;
}

std::string Presentation::to_string() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) os << (i ? ", " : "") << generators_[i];
  os << " |";
  for (std::size_t i = 0; i < relators_.size(); ++i)
    os << (i ? ", " : " ") << format_word(relators_[i], generators_);
  os << ">";
  return os.str();
}

// ---------------------------------------------------------------------------

std::string AbelianInvariants::to_string() const {
  if (trivial()) return "1";
  std::vector<std::string> parts;
  if (free_rank == 1) parts.emplace_back("Z");
  else if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (auto d : torsion) parts.push_back("Z_" + std::to_string(d));
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " x " : "") + parts[i];
  return out;
}

IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m(p.relators().size(), p.generator_count());
  for (std::size_t r = 0; r < p.relators().size(); ++r)
    for (const auto& l : p.relators()[r].letters())
      m(r, l.gen) = detail::checked_add(m(r, l.gen), l.sign);
  return m;
}

AbelianInvariants abelian_invariants(const Presentation& p) {
  AbelianInvariants out;
  const auto diag = smith_normal_form(relation_matrix(p));
  out.free_rank = p.generator_count() - diag.size();
  for (auto d : diag)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(Triviality t) {
  switch (t) {
    case Triviality::ProvedTrivial: return "trivial";
    case Triviality::ProvedNontrivial: return "nontrivial";
    case Triviality::Unknown: return "unknown";
  }
  return "unknown";
}

std::string GroupVerdict::description() const {
  if (triviality == Triviality::ProvedTrivial) return "trivial";
  if (abelian_certified) return abelian.to_string();
  if (finite_index)
    return "order " + std::to_string(*finite_index) + " (abelianization " +
           abelian.to_string() + ")";
  if (abelian.free_rank > 0) return "infinite (abelianization " + abelian.to_string() + ")";
  return "unknown (abelianization " + abelian.to_string() + ")";
}

namespace {

bool is_commutator_of(const Word& relator, std::size_t x, std::size_t y) {
  if (relator.size() != 4) return false;
  // Any cyclic rotation of [x,y] or its inverse has the shape u v u^-1 v^-1
  // with {u, v} generating on {x, y}.
  const auto& l = relator.letters();
  for (std::size_t rot = 0; rot < 4; ++rot) {
    const Letter a = l[rot], b = l[(rot + 1) % 4], c = l[(rot + 2) % 4], d = l[(rot + 3) % 4];
    if (c == a.inverse() && d == b.inverse() && a.sign == 1 &&
        ((a.gen == x && b.gen == y) || (a.gen == y && b.gen == x)))
      return true;
  }
  return false;
}

bool commutators_present(const Presentation& p) {
  const std::size_t n = p.generator_count();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool found = std::any_of(p.relators().begin(), p.relators().end(),
                                     [&](const Word& r) { return is_commutator_of(r, i, j); });
      if (!found) return false;
    }
  return true;
}

}  // namespace

GroupVerdict classify_group(const Presentation& p, std::size_t max_cosets) {
  GroupVerdict v;
  v.simplified = tietze_simplify(p, kDefaultTietzePasses);
  v.abelian = abelian_invariants(p);

  if (v.simplified.generator_count() == 0) {
    v.triviality = Triviality::ProvedTrivial;
    v.finite_index = 1;
    v.abelian_certified = true;
    return v;
  }

  v.abelian_certified = v.simplified.generator_count() == 1 || commutators_present(v.simplified);

  if (v.abelian.free_rank > 0) {
    // Infinite abelianization: the group is infinite, enumeration cannot end.
    v.triviality = Triviality::ProvedNontrivial;
    return v;
  }

  const CosetResult tc = todd_coxeter(v.simplified, {}, max_cosets);
  if (tc.index) {
    v.finite_index = *tc.index;
    v.triviality = *tc.index == 1 ? Triviality::ProvedTrivial : Triviality::ProvedNontrivial;
    std::int64_t torsion_order = 1;
    for (auto d : v.abelian.torsion) torsion_order = detail::checked_mul(torsion_order, d);
    if (static_cast<std::size_t>(torsion_order) == *tc.index) v.abelian_certified = true;
  } else if (!v.abelian.trivial()) {
    v.triviality = Triviality::ProvedNontrivial;
  } else {
    v.triviality = Triviality::Unknown;
  }
  return v;
}

}  // namespace scalc
