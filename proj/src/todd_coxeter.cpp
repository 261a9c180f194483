// HLT coset enumeration with coincidence processing, following the classical
// scan-and-fill formulation. Columns are indexed by 2*gen (generator) and
// 2*gen+1 (its inverse); cosets are defined first-free and relators are
// scanned in presentation order, so tables are reproducible.

#include <algorithm>
#include <vector>

#include "scalc/fpgroup.hpp"

namespace scalc {
namespace {

constexpr std::size_t kUndefined = static_cast<std::size_t>(-1);

class CosetTable {
 public:
  CosetTable(std::size_t generators, std::size_t max_cosets)
      : width_(2 * generators), max_cosets_(max_cosets) {
    add_row();
  }

  bool exceeded() const noexcept { return exceeded_; }
  std::size_t defined() const noexcept { return parent_.size(); }

  bool live(std::size_t c) const { return parent_[c] == c; }

  std::size_t live_count() const {
    std::size_t n = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c) n += live(c) ? 1 : 0;
    return n;
  }

  std::size_t entry(std::size_t c, std::size_t col) const { return table_[c * width_ + col]; }

  void define(std::size_t c, std::size_t col) {
    if (parent_.size() >= max_cosets_) {
      exceeded_ = true;
      return;
    }
    const std::size_t d = add_row();
    set(c, col, d);
    set(d, col ^ 1U, c);
  }

  void scan_and_fill(std::size_t coset, const std::vector<std::size_t>& word) {
    if (word.empty()) return;
    std::size_t f = coset;
    std::size_t b = coset;
    std::ptrdiff_t i = 0;
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(word.size()) - 1;
    auto at = [&word](std::ptrdiff_t k) { return word[static_cast<std::size_t>(k)]; };
    for (;;) {
      while (i <= j && entry(f, at(i)) != kUndefined) f = entry(f, at(i++));
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && entry(b, at(j) ^ 1U) != kUndefined) b = entry(b, at(j--) ^ 1U);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        // Deduction closes the scan.
        set(f, at(i), b);
        set(b, at(i) ^ 1U, f);
        return;
      }
      define(f, at(i));
      if (exceeded_) return;
    }
  }

 private:
  std::size_t add_row() {
    const std::size_t c = parent_.size();
    parent_.push_back(c);
    table_.resize(table_.size() + width_, kUndefined);
    return c;
  }

  void set(std::size_t c, std::size_t col, std::size_t d) { table_[c * width_ + col] = d; }

  std::size_t rep(std::size_t c) {
    std::size_t root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      const std::size_t next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  void merge(std::size_t k, std::size_t l, std::vector<std::size_t>& queue) {
    const std::size_t k1 = rep(k);
    const std::size_t l1 = rep(l);
    if (k1 == l1) return;
    const std::size_t lo = std::min(k1, l1);
    const std::size_t hi = std::max(k1, l1);
    parent_[hi] = lo;
    queue.push_back(hi);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::vector<std::size_t> queue;
    merge(a, b, queue);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const std::size_t e = queue[qi];
      for (std::size_t x = 0; x < width_; ++x) {
        const std::size_t f = entry(e, x);
        if (f == kUndefined) continue;
        if (entry(f, x ^ 1U) == e) set(f, x ^ 1U, kUndefined);
        const std::size_t e1 = rep(e);
        const std::size_t f1 = rep(f);
        if (entry(e1, x) != kUndefined) {
          merge(f1, entry(e1, x), queue);
        } else if (entry(f1, x ^ 1U) != kUndefined) {
          merge(e1, entry(f1, x ^ 1U), queue);
        } else {
          set(e1, x, f1);
          set(f1, x ^ 1U, e1);
        }
      }
    }
  }

  std::size_t width_;
  std::size_t max_cosets_;
  bool exceeded_ = false;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> table_;
};

std::vector<std::size_t> columns(const Word& w) {
  std::vector<std::size_t> out;
  out.reserve(w.size());
  for (const auto& l : w.letters()) out.push_back(2 * l.gen + (l.sign > 0 ? 0U : 1U));
  return out;
}

}  // namespace

CosetResult todd_coxeter(const Presentation& p, std::span<const Word> subgroup,
                         std::size_t max_cosets) {
  if (max_cosets < 1) throw Error("max_cosets must be at least 1");
  for (const auto& w : subgroup)
    for (const auto& l : w.letters())
      if (l.gen >= p.generator_count()) throw Error("subgroup word uses an unknown generator");

  std::vector<std::vector<std::size_t>> relators;
  for (const auto& r : p.relators())
    if (!r.empty()) relators.push_back(columns(r));

  CosetTable table(p.generator_count(), max_cosets);
  for (const auto& w : subgroup) {
    table.scan_and_fill(0, columns(free_reduce(w)));
    if (table.exceeded()) return {std::nullopt, table.defined()};
  }

  const std::size_t width = 2 * p.generator_count();
  for (std::size_t c = 0; c < table.defined(); ++c) {
    for (const auto& r : relators) {
      if (!table.live(c)) break;
      table.scan_and_fill(c, r);
      if (table.exceeded()) return {std::nullopt, table.defined()};
    }
    for (std::size_t x = 0; x < width && table.live(c); ++x) {
      if (table.entry(c, x) == kUndefined) table.define(c, x);
      if (table.exceeded()) return {std::nullopt, table.defined()};
    }
  }
  return {table.live_count(), table.defined()};
}

}  // namespace scalc
