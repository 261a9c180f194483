#pragma once

// Brute-force oracles shared by the unit and acceptance tests.

#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "scalc/fpgroup.hpp"
#include "scalc/lattice.hpp"

namespace oracle {

using namespace scalc;

inline Presentation pres(std::vector<std::string> gens, std::vector<std::string> relators) {
  std::vector<Word> rels;
  for (const auto& r : relators) rels.push_back(parse_word(r, gens));
  return Presentation(std::move(gens), std::move(rels));
}

inline std::int64_t laplace_det(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  std::int64_t total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    total += (c % 2 ? -1 : 1) * m[0][c] * laplace_det(minor);
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// gcd of all k x k minors.
inline std::int64_t minor_gcd(const IntMatrix& m, std::size_t k) {
  std::vector<std::vector<std::size_t>> rows, cols;
  std::vector<std::size_t> cur;
  subsets(m.rows(), k, 0, cur, rows);
  subsets(m.cols(), k, 0, cur, cols);
  std::int64_t g = 0;
  for (const auto& rs : rows)
    for (const auto& cs : cols) {
      std::vector<std::vector<std::int64_t>> sub;
      for (auto r : rs) {
        std::vector<std::int64_t> row;
        for (auto c : cs) row.push_back(m(r, c));
        sub.push_back(row);
      }
      g = std::gcd(g, laplace_det(sub));
    }
  return g;
}

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t max_dim, int bound) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<int> entry(-bound, bound);
  IntMatrix m(dim(rng), dim(rng));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = entry(rng);
  return m;
}

using Perm = std::vector<std::size_t>;

inline Perm compose(const Perm& p, const Perm& q) {  // p after q
  Perm r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

inline Perm invert(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = i;
  return r;
}

inline Perm evaluate(const Word& word, const std::vector<Perm>& gens) {
  Perm acc(gens.empty() ? 0 : gens[0].size());
  std::iota(acc.begin(), acc.end(), 0);
  for (const auto& l : word.letters())
    acc = compose(acc, l.sign > 0 ? gens[l.gen] : invert(gens[l.gen]));
  return acc;
}

inline std::size_t closure_order(const std::vector<Perm>& gens) {
  Perm id(gens[0].size());
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> seen{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Perm y = compose(x, g);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return seen.size();
}

inline Perm cycle_perm(std::size_t points, std::vector<std::vector<std::size_t>> cycles) {
  Perm p(points);
  std::iota(p.begin(), p.end(), 0);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) p[c[i]] = c[(i + 1) % c.size()];
  return p;
}

struct Case {
  std::string name;
  Presentation presentation;
  std::vector<Perm> perms;
};

// Quaternion units as (sign, unit) with unit in {1, i, j, k}; left regular action.
inline std::vector<Perm> quaternion_perms() {
  static const int table[4][4][2] = {
      {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
      {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
      {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
      {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}};
  auto index = [](int sign, int unit) { return static_cast<std::size_t>(unit + (sign < 0 ? 4 : 0)); };
  auto left = [&](int unit) {
    Perm p(8);
    for (int s : {1, -1})
      for (int u = 0; u < 4; ++u) {
        const int* prod = table[unit][u];
        p[index(s, u)] = index(s * prod[0], prod[1]);
      }
    return p;
  };
  return {left(1), left(2)};
}

inline std::vector<Case> corpus() {
  std::vector<Case> out;
  for (std::size_t n = 1; n <= 24; ++n) {
    std::vector<std::size_t> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 0);
    out.push_back({"Z_" + std::to_string(n), pres({"a"}, {"a^" + std::to_string(n)}),
                   {cycle_perm(n, {cyc})}});
  }
  for (std::size_t m = 2; m <= 6; ++m)
    for (std::size_t n = 2; m * n <= 24; ++n) {
      std::vector<std::size_t> c1(m), c2(n);
      std::iota(c1.begin(), c1.end(), 0);
      std::iota(c2.begin(), c2.end(), m);
      out.push_back({"Z_" + std::to_string(m) + "xZ_" + std::to_string(n),
                     pres({"a", "b"}, {"a^" + std::to_string(m), "b^" + std::to_string(n), "[a,b]"}),
                     {cycle_perm(m + n, {c1}), cycle_perm(m + n, {c2})}});
    }
  for (std::size_t n = 3; n <= 12; ++n) {
    Perm r(n), s(n);
    for (std::size_t i = 0; i < n; ++i) {
      r[i] = (i + 1) % n;
      s[i] = (n - i) % n;
    }
    out.push_back({"D_" + std::to_string(n),
                   pres({"r", "s"}, {"r^" + std::to_string(n), "s^2", "(s r)^2"}), {r, s}});
  }
  out.push_back({"A_4", pres({"a", "b"}, {"a^2", "b^3", "(a b)^3"}),
                 {cycle_perm(4, {{0, 1}, {2, 3}}), cycle_perm(4, {{0, 1, 2}})}});
  out.push_back({"S_4", pres({"a", "b"}, {"a^2", "b^3", "(a b)^4"}),
                 {cycle_perm(4, {{0, 1}}), cycle_perm(4, {{1, 2, 3}})}});
  out.push_back({"Q_8", pres({"i", "j"}, {"i^4", "i^2 j^-2", "j^-1 i j i"}), quaternion_perms()});
  out.push_back({"Z_2^3",
                 pres({"a", "b", "c"}, {"a^2", "b^2", "c^2", "[a,b]", "[a,c]", "[b,c]"}),
                 {cycle_perm(6, {{0, 1}}), cycle_perm(6, {{2, 3}}), cycle_perm(6, {{4, 5}})}});
  return out;
}

// The ten classes f, e9, e1-e2, ..., e7-e8, -h+e6+e7+e8 of CP2 # 9 CP2-bar,
// coordinates in the basis (h, e1, ..., e9).
inline std::vector<IntVector> elliptic_vectors() {
  std::vector<IntVector> v;
  v.push_back({3, -1, -1, -1, -1, -1, -1, -1, -1, -1});
  IntVector e9(10, 0);
  e9[9] = 1;
  v.push_back(e9);
  for (std::size_t i = 1; i <= 7; ++i) {
    IntVector x(10, 0);
    x[i] = 1;
    x[i + 1] = -1;
    v.push_back(x);
  }
  v.push_back({-1, 0, 0, 0, 0, 0, 1, 1, 1, 0});
  return v;
}

inline std::vector<std::string> elliptic_labels() {
  return {"f", "e9", "m1", "m2", "m3", "m4", "m5", "m6", "m7", "m8"};
}

inline IntLattice random_symmetric(std::mt19937& rng, std::size_t n, int bound) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) g(i, j) = g(j, i) = entry(rng);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  return IntLattice(labels, g);
}

inline IntMatrix random_unimodular(std::mt19937& rng, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> op(0, 2);
  std::uniform_int_distribution<int> mult(-2, 2);
  for (int step = 0; step < 6; ++step) {
    const std::size_t a = idx(rng), b = idx(rng);
    switch (op(rng)) {
      case 0:
        u.swap_cols(a, b);
        break;
      case 1:
        for (std::size_t r = 0; r < n; ++r) u(r, a) = -u(r, a);
        break;
      default:
        if (a != b) {
          const int k = mult(rng);
          for (std::size_t r = 0; r < n; ++r) u(r, a) += k * u(r, b);
        }
    }
  }
  return u;
}

// b_k(M x S) = sum_i b_i(M) b_{k-i}(S), by direct summation over pairs.
inline std::vector<std::int64_t> kunneth_oracle(const std::vector<std::int64_t>& m,
                                         const std::vector<std::int64_t>& s) {
  std::vector<std::int64_t> out;
  for (std::size_t k = 0; k + 2 <= m.size() + s.size(); ++k) {
    std::int64_t b = 0;
    for (std::size_t i = 0; i <= k; ++i)
      if (i < m.size() && k - i < s.size()) b += m[i] * s[k - i];
    out.push_back(b);
  }
  return out;
}

}  // namespace oracle
