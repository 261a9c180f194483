#include <algorithm>
#include <set>

#include "scalc/fpgroup.hpp"

namespace scalc {
namespace {

// Least rotation of w or its inverse; equal keys mean the relators define
// the same normal closure.
std::vector<Letter> canonical_key(const Word& w) {
  std::vector<Letter> best;
  bool first = true;
  for (const Word& candidate : {w, w.inverse()}) {
    const auto& ls = candidate.letters();
    for (std::size_t rot = 0; rot < ls.size(); ++rot) {
      std::vector<Letter> v(ls.begin() + static_cast<std::ptrdiff_t>(rot), ls.end());
      v.insert(v.end(), ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(rot));
      if (first || v < best) {
        best = std::move(v);
        first = false;
      }
    }
  }
  return best;
}

void drop_trivial_and_duplicates(std::vector<Word>& relators) {
  std::set<std::vector<Letter>> seen;
  std::vector<Word> kept;
  for (auto& r : relators) {
    Word reduced = cyclic_reduce(r);
    if (reduced.empty()) continue;
    if (!seen.insert(canonical_key(reduced)).second) continue;
    kept.push_back(std::move(reduced));
  }
  relators = std::move(kept);
}

struct Elimination {
  std::size_t relator = 0;
  std::size_t gen = 0;
};

std::optional<Elimination> pick_elimination(const std::vector<Word>& relators,
                                            std::size_t generator_count) {
  std::optional<Elimination> best;
  for (std::size_t r = 0; r < relators.size(); ++r) {
    if (best && relators[r].size() >= relators[best->relator].size()) continue;
    for (std::size_t g = generator_count; g-- > 0;) {
      if (relators[r].occurrences(g) == 1) {
        best = Elimination{r, g};
        break;
      }
    }
  }
  return best;
}

}  // namespace

Presentation tietze_simplify(const Presentation& p, std::size_t budget) {
  std::vector<std::string> gens = p.generators();
  std::vector<Word> relators = p.relators();
  drop_trivial_and_duplicates(relators);

  for (std::size_t pass = 0; pass < budget; ++pass) {
    const auto elim = pick_elimination(relators, gens.size());
    if (!elim) break;

    // Rotate the relator to g^e w and solve for g.
    const Word& r = relators[elim->relator];
    const auto& ls = r.letters();
    std::size_t at = 0;
    while (ls[at].gen != elim->gen) ++at;
    const int sign = ls[at].sign;
    std::vector<Letter> rest(ls.begin() + static_cast<std::ptrdiff_t>(at) + 1, ls.end());
    rest.insert(rest.end(), ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(at));
    const Word tail(std::move(rest));
    const Word value = sign > 0 ? tail.inverse() : tail;

    // Substitute and renumber the generators above the eliminated one.
    std::vector<std::optional<Word>> images(gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (g == elim->gen) continue;
      images[g] = Word::generator(g < elim->gen ? g : g - 1);
    }
    std::vector<Letter> renumbered;
    for (const auto& l : value.letters())
      renumbered.push_back({l.gen < elim->gen ? l.gen : l.gen - 1, l.sign});
    images[elim->gen] = Word(std::move(renumbered));

    std::vector<Word> next;
    next.reserve(relators.size());
    for (std::size_t i = 0; i < relators.size(); ++i)
      if (i != elim->relator) next.push_back(substitute(relators[i], images, gens));
    gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(elim->gen));
    relators = std::move(next);
    drop_trivial_and_duplicates(relators);
  }
  return Presentation(std::move(gens), std::move(relators));
}

}  // namespace scalc
