#pragma once

// Brute-force references used by the unit and acceptance suites. Each one takes a route
// that shares no code with the library function it is compared against.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

// ---- cyclic polytope faces via facet-level Gale evenness ---------------------------------
//
// A d-subset F of [n] is a facet of C(n,d) iff between any two non-members i < j the number
// of members of F is even. Faces are the subsets of facets (and the empty set).

inline bool is_facet(const std::vector<int>& f, int n) {
  std::vector<bool> in(n + 2, false);
  for (int v : f) in[v] = true;
  for (int i = 1; i <= n; ++i) {
    if (in[i]) continue;
    for (int j = i + 1; j <= n; ++j) {
      if (in[j]) continue;
      int between = 0;
      for (int k = i + 1; k < j; ++k) between += in[k] ? 1 : 0;
      if (between % 2 != 0) return false;
    }
  }
  return true;
}

// Face set of C(n,d) as bitmasks over [n] (bit i-1 is vertex i).
inline std::set<std::uint64_t> cyclic_faces(int n, int d) {
  std::vector<std::uint64_t> facets;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (__builtin_popcountll(s) != d) continue;
    std::vector<int> f;
    for (int i = 1; i <= n; ++i) {
      if (s >> (i - 1) & 1) f.push_back(i);
    }
    if (is_facet(f, n)) facets.push_back(s);
  }
  std::set<std::uint64_t> faces;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    for (std::uint64_t f : facets) {
      if ((s & ~f) == 0) {
        faces.insert(s);
        break;
      }
    }
  }
  return faces;
}

// Minimal non-faces of a face family given as a set of masks over [m], by checking every subset.
inline std::vector<std::uint64_t> minimal_nonfaces(const std::set<std::uint64_t>& faces, int m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << m); ++s) {
    if (faces.count(s)) continue;
    bool minimal = true;
    for (int i = 0; i < m && minimal; ++i) {
      if ((s >> i & 1) && !faces.count(s & ~(std::uint64_t{1} << i))) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

// ---- basic products (Hall's construction) -----------------------------------------------
//
// Generators x_1 < ... < x_k are the weight-1 basic products. Having ordered the basic
// products of weight < w (by weight, then by creation order), [u, v] is basic of weight w
// iff W(u) + W(v) = w, u > v, and when u = [s, t] also t <= v.

struct BasicProduct {
  int left = -1;  // index into the list, -1 for generators
  int right = -1;
  int weight = 1;
  std::vector<int> content;  // occurrences of each generator
};

inline std::vector<BasicProduct> basic_products(int k, int max_weight) {
  std::vector<BasicProduct> list;
  for (int i = 0; i < k; ++i) {
    BasicProduct g;
    g.content.assign(k, 0);
    g.content[i] = 1;
    list.push_back(g);
  }
  for (int w = 2; w <= max_weight; ++w) {
    const int existing = static_cast<int>(list.size());
    for (int u = 0; u < existing; ++u) {
      for (int v = 0; v < u; ++v) {
        if (list[u].weight + list[v].weight != w) continue;
        if (list[u].left >= 0 && list[u].right > v) continue;
        BasicProduct p;
        p.left = u;
        p.right = v;
        p.weight = w;
        p.content.resize(k);
        for (int i = 0; i < k; ++i) p.content[i] = list[u].content[i] + list[v].content[i];
        list.push_back(p);
      }
    }
  }
  return list;
}

inline std::int64_t basic_product_count(int k, int w) {
  std::int64_t c = 0;
  for (const auto& p : basic_products(k, w)) c += p.weight == w ? 1 : 0;
  return c;
}

// Hilton-Milnor spectrum for spheres of the given dimensions: each basic product with
// content a gives S^{sum a_i (dim_i - 1) + 1}. Generated up to the weight the ceiling allows.
inline std::map<int, std::int64_t> hilton_milnor_spectrum(const std::vector<int>& dims, int ceiling) {
  const int min_step = *std::min_element(dims.begin(), dims.end()) - 1;
  const int max_weight = (ceiling - 1) / min_step;
  std::map<int, std::int64_t> out;
  for (const auto& p : basic_products(static_cast<int>(dims.size()), max_weight)) {
    int dim = 1;
    for (std::size_t i = 0; i < dims.size(); ++i) dim += p.content[i] * (dims[i] - 1);
    if (dim <= ceiling) ++out[dim];
  }
  return out;
}

// ---- relations among relations -----------------------------------------------------------
//
// Smallest degree of g_i * A = g_j * B over all ordered generator pairs i != j and all
// squarefree multipliers A, B over [m] with A != B, comparing exponent vectors directly.
inline int min_relation_degree(const std::vector<std::vector<int>>& gens, int m) {
  int best = -1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      for (std::uint64_t a = 0; a < (std::uint64_t{1} << m); ++a) {
        std::vector<int> lhs(m + 1, 0);
        for (int v : gens[i]) ++lhs[v];
        for (int v = 1; v <= m; ++v) lhs[v] += (a >> (v - 1) & 1) ? 1 : 0;
        std::vector<int> rest = lhs;
        for (int v : gens[j]) --rest[v];
        std::uint64_t b = 0;
        bool ok = true;
        for (int v = 1; v <= m && ok; ++v) {
          if (rest[v] < 0 || rest[v] > 1) ok = false;
          if (rest[v] == 1) b |= std::uint64_t{1} << (v - 1);
        }
        if (!ok || a == b) continue;
        int degree = 0;
        for (int v = 1; v <= m; ++v) degree += 2 * lhs[v];
        if (best < 0 || degree < best) best = degree;
      }
    }
  }
  return best;
}

// ---- connected sums by iterating the cofibration long exact sequence ----------------------
//
// For (T - U) -> X # T -> X, the LES reads
//   ... -> H_k(T-U) -> H_k(X#T) -> H_k(X) --delta--> H_{k-1}(T-U) -> ...
// X minus a disk includes into X # T and maps onto X isomorphically below the top degree,
// so H_k(X#T) -> H_k(X) is onto for k < D and delta vanishes there; in degree D the target
// H_{D-1}(T-U) is zero. Exactness then fixes every rank. Summands are added one copy at a time.

using Ranks = std::map<int, std::int64_t>;  // unreduced, zero ranks omitted

inline Ranks punctured_product(int m, int n) {
  Ranks r{{0, 1}};
  ++r[m];
  ++r[n];
  return r;
}

inline Ranks les_step(const Ranks& x, int m, int n) {
  const int dim = m + n;
  const Ranks a = punctured_product(m, n);
  const auto get = [](const Ranks& r, int k) { return r.count(k) ? r.at(k) : std::int64_t{0}; };
  // rank of delta_k : H_k(X) -> H_{k-1}(T-U). Zero below D by surjectivity; in degree D the
  // target H_{D-1}(T-U) vanishes because m, n >= 2.
  std::map<int, std::int64_t> delta;
  for (int k = 1; k <= dim + 1; ++k) delta[k] = 0;
  if (get(a, dim - 1) != 0) throw std::logic_error("punctured product has a class in degree D-1");
  Ranks out;
  for (int k = 1; k <= dim; ++k) {
    // image of H_k(T-U) -> H_k(X#T) plus kernel of delta_k.
    const std::int64_t rank = (get(a, k) - delta[k + 1]) + (get(x, k) - delta[k]);
    if (rank != 0) out[k] = rank;
  }
  out[0] = 1;
  return out;
}

// summands: (multiplicity, m, n), processed in the order given.
inline Ranks connected_sum_by_les(const std::vector<std::tuple<int, int, int>>& summands) {
  Ranks x;
  bool started = false;
  for (const auto& [count, m, n] : summands) {
    for (int c = 0; c < count; ++c) {
      if (!started) {
        x = punctured_product(m, n);
        x[m + n] = 1;
        started = true;
      } else {
        x = les_step(x, m, n);
      }
    }
  }
  return x;
}

}  // namespace oracle
