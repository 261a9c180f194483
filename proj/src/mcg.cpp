#include "scalc/mcg.hpp"

#include <string>

namespace scalc {
namespace {

void require_genus(int genus) {
  if (genus < 1) throw Error("genus must be at least 1, got " + std::to_string(genus));
}

}  // namespace

std::int64_t symplectic_pairing(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size() || a.size() % 2 != 0)
    throw Error("symplectic pairing needs vectors of equal even length");
  const std::size_t g = a.size() / 2;
  std::int64_t s = 0;
  for (std::size_t i = 0; i < g; ++i)
    s += a[i] * b[g + i] - a[g + i] * b[i];
  return s;
}

BigMatrix standard_symplectic_form(int genus) {
  require_genus(genus);
  const auto g = static_cast<std::size_t>(genus);
  BigMatrix j(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    j(i, g + i) = 1;
    j(g + i, i) = -1;
  }
  return j;
}

bool is_symplectic(const BigMatrix& m, int genus) {
  const BigMatrix j = standard_symplectic_form(genus);
  return m.transposed() * j * m == j;
}

ChainClasses chain_classes(int genus) {
  require_genus(genus);
  const auto g = static_cast<std::size_t>(genus);
  auto x = [g](std::size_t i) {
    IntVector v(2 * g, 0);
    v[i - 1] = 1;
    return v;
  };
  auto y = [g](std::size_t i) {
    IntVector v(2 * g, 0);
    v[g + i - 1] = 1;
    return v;
  };
  ChainClasses c;
  c.genus = genus;
  c.vectors.push_back(x(1));
  for (std::size_t i = 1; i <= g; ++i) {
    c.vectors.push_back(y(i));
    if (i < g) {
      IntVector sum = x(i);
      sum[i] = 1;
      c.vectors.push_back(sum);
    }
  }
  c.vectors.push_back(x(g));
  return c;
}

BigMatrix transvection_matrix(const IntVector& v, int genus, int sign) {
  require_genus(genus);
  const std::size_t n = 2 * static_cast<std::size_t>(genus);
  if (v.size() != n) throw Error("transvection vector has the wrong length");
  BigMatrix m = BigMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    IntVector e(n, 0);
    e[k] = 1;
    const std::int64_t t = sign * symplectic_pairing(e, v);
    for (std::size_t r = 0; r < n; ++r) m(r, k) += BigInt(t) * v[r];
  }
  return m;
}

BigMatrix word_matrix(const TwistWord& word) {
  const ChainClasses chain = chain_classes(word.genus);
  BigMatrix acc = BigMatrix::identity(2 * static_cast<std::size_t>(word.genus));
  for (const auto& l : word.letters) {
    if (l.curve < 1 || l.curve > chain.vectors.size())
      throw Error("twist index " + std::to_string(l.curve) + " out of range 1.." +
                  std::to_string(chain.vectors.size()));
    if (l.sign != 1 && l.sign != -1) throw Error("twist sign must be +1 or -1");
    acc = acc * transvection_matrix(chain.vectors[l.curve - 1], word.genus, l.sign);
  }
  return acc;
}

RelatorFamily parse_relator_family(std::string_view name) {
  if (name == "X") return RelatorFamily::X;
  if (name == "Y") return RelatorFamily::Y;
  if (name == "Z") return RelatorFamily::Z;
  throw Error("unknown relator family '" + std::string(name) + "'");
}

char family_name(RelatorFamily f) {
  switch (f) {
    case RelatorFamily::X: return 'X';
    case RelatorFamily::Y: return 'Y';
    case RelatorFamily::Z: return 'Z';
  }
  return '?';
}

TwistWord hyperelliptic_half_word(int genus) {
  require_genus(genus);
  const auto top = 2 * static_cast<std::size_t>(genus) + 1;
  TwistWord w{genus, {}};
  for (std::size_t i = 1; i <= top; ++i) w.letters.push_back({i, 1});
  for (std::size_t i = top; i >= 1; --i) w.letters.push_back({i, 1});
  return w;
}

TwistWord relator_family(RelatorFamily family, int genus) {
  require_genus(genus);
  const auto g = static_cast<std::size_t>(genus);
  TwistWord w{genus, {}};
  auto repeat = [&w](std::size_t last, std::size_t times) {
    for (std::size_t t = 0; t < times; ++t)
      for (std::size_t i = 1; i <= last; ++i) w.letters.push_back({i, 1});
  };
  switch (family) {
    case RelatorFamily::X: {
      const TwistWord half = hyperelliptic_half_word(genus);
      for (int t = 0; t < 2; ++t)
        w.letters.insert(w.letters.end(), half.letters.begin(), half.letters.end());
      break;
    }
    case RelatorFamily::Y:
      repeat(2 * g + 1, 2 * g + 2);
      break;
    case RelatorFamily::Z:
      repeat(2 * g, 4 * g + 2);
      break;
  }
  return w;
}

std::int64_t lefschetz_euler(int genus, std::int64_t critical_points) {
  if (critical_points < 0) throw Error("critical point count must be nonnegative");
  return 2 * (2 - 2 * static_cast<std::int64_t>(genus)) + critical_points;
}

}  // namespace scalc
