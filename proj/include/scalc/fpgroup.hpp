#pragma once

// Finitely presented groups: words, presentations, abelianization, coset
// enumeration and Tietze simplification.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scalc/matrix.hpp"

namespace scalc {

struct Letter {
  std::size_t gen = 0;
  int sign = 1;  // +1 or -1

  Letter inverse() const { return {gen, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// A word in the free group on indexed generators. The empty word is the
// identity. Words are not reduced implicitly; use free_reduce.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  static Word generator(std::size_t gen, int sign = 1) { return Word{{gen, sign}}; }
  // x y x^-1 y^-1
  static Word commutator(const Word& x, const Word& y);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  Word power(std::int64_t exponent) const;
  // Sum of signs of letters on `gen`.
  std::int64_t exponent_sum(std::size_t gen) const;
  std::size_t occurrences(std::size_t gen) const;
  std::size_t max_generator() const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Word free_reduce(const Word& w);
// Free reduction followed by removal of inverse letter pairs at the two ends.
Word cyclic_reduce(const Word& w);

// Homomorphic image of w under generator -> word images. A missing image is
// an error naming the generator (from `names` when provided).
Word substitute(const Word& w, std::span<const std::optional<Word>> images,
                std::span<const std::string> names = {});

// Text form: "c d c^-1 d^-1", "[c,d]", "mu'^-1", "c^3", "1" for identity.
Word parse_word(std::string_view text, std::span<const std::string> names);
std::string format_word(const Word& w, std::span<const std::string> names);

class Presentation {
 public:
  Presentation() = default;
  // Relators are stored freely and cyclically reduced; letters must refer to
  // existing generators and generator names must be unique.
  Presentation(std::vector<std::string> generators, std::vector<Word> relators);

  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }
  std::size_t generator_count() const noexcept { return generators_.size(); }
  std::optional<std::size_t> find_generator(std::string_view name) const;

  std::string to_string() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<std::int64_t> torsion;  // d_1 | d_2 | ..., each >= 2

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;  // "1", "Z", "Z^2", "Z_2 x Z_4", "Z x Z_3"
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

// Nonzero diagonal of the Smith normal form, nonnegative, with d_i | d_{i+1}.
std::vector<std::int64_t> smith_normal_form(const IntMatrix& m);

// One row per relator of generator exponent sums.
IntMatrix relation_matrix(const Presentation& p);
AbelianInvariants abelian_invariants(const Presentation& p);

inline constexpr std::size_t kDefaultMaxCosets = 100000;

struct CosetResult {
  std::optional<std::size_t> index;  // empty when the table limit was hit
  std::size_t cosets_defined = 0;

  bool exceeded() const { return !index.has_value(); }
};

// HLT coset enumeration of the subgroup generated by `subgroup`. Gives up
// (index empty) rather than exceed `max_cosets` table rows.
CosetResult todd_coxeter(const Presentation& p, std::span<const Word> subgroup,
                         std::size_t max_cosets = kDefaultMaxCosets);

// Removes trivial and duplicate (up to rotation and inversion) relators and
// eliminates generators that occur exactly once in some relator. `budget`
// bounds the number of elimination passes.
Presentation tietze_simplify(const Presentation& p, std::size_t budget);

inline constexpr std::size_t kDefaultTietzePasses = 256;

enum class Triviality { ProvedTrivial, ProvedNontrivial, Unknown };

struct GroupVerdict {
  Triviality triviality = Triviality::Unknown;
  std::optional<std::size_t> finite_index;  // group order when enumeration finished
  AbelianInvariants abelian;
  Presentation simplified;
  // True when the group is known to equal its abelianization.
  bool abelian_certified = false;

  // "trivial", "Z", "Z^2", "Z_2 x Z_3", or a hedged string when not certified.
  std::string description() const;
};

GroupVerdict classify_group(const Presentation& p,
                            std::size_t max_cosets = kDefaultMaxCosets);

std::string to_string(Triviality t);

}  // namespace scalc
