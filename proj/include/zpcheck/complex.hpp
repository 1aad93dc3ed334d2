#pragma once

#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "zpcheck/gale.hpp"

namespace zpcheck {

// Simplicial complex on vertices 1..m, stored in minimal-non-face form.
//
// Whatever the input (cyclic polytope boundary, polygon dual, facet list, non-face list),
// construction normalizes to the antichain of minimal non-faces, which is all the face
// ring needs. Every singleton must be a face.
class SimplicialComplex {
 public:
  // Boundary complex of C(n,d), vertices identified with the facets of the dual simple polytope.
  static SimplicialComplex from_cyclic(const CyclicParams& p);
  // Boundary of the m-gon (m >= 4): edges {i, i+1 mod m}.
  static SimplicialComplex from_polygon(int m);
  // Downward closure of the given facets.
  static SimplicialComplex from_facets(int m, const std::vector<VertexSubset>& facets);
  // Subsets of [m] containing none of the given non-faces.
  static SimplicialComplex from_nonfaces(int m, const std::vector<VertexSubset>& nonfaces);

  [[nodiscard]] int vertex_count() const { return m_; }
  [[nodiscard]] bool contains(const VertexSubset& s) const;
  [[nodiscard]] const std::vector<VertexSubset>& minimal_nonfaces() const { return minimal_; }
  // Largest face cardinality minus one. Exhaustive for complexes given by non-faces.
  [[nodiscard]] int dimension() const;
  // Human-readable provenance, e.g. "cyclic C(8,4)".
  [[nodiscard]] const std::string& source() const { return source_; }

 private:
  SimplicialComplex(int m, std::vector<Mask> minimal, std::string source, int dim);
  [[nodiscard]] bool contains_mask(Mask s) const;

  int m_ = 0;
  std::vector<Mask> nonface_masks_;
  std::vector<VertexSubset> minimal_;
  std::string source_;
  mutable int dim_ = -2;  // -2: not computed yet
};

std::vector<VertexSubset> minimal_nonfaces(const SimplicialComplex& k);

// Squarefree monomial v_{i1}...v_{ik} with |v_i| = 2.
class SquarefreeMonomial {
 public:
  // Throws InputError for an empty support.
  explicit SquarefreeMonomial(VertexSubset support);

  [[nodiscard]] const VertexSubset& support() const { return support_; }
  [[nodiscard]] int degree() const { return 2 * static_cast<int>(support_.size()); }
  [[nodiscard]] bool divides(const SquarefreeMonomial& other) const { return support_.is_subset_of(other.support_); }
  // "v1v3v5"
  [[nodiscard]] std::string to_string() const;

  friend auto operator<=>(const SquarefreeMonomial& a, const SquarefreeMonomial& b) {
    return a.support_ <=> b.support_;
  }
  friend bool operator==(const SquarefreeMonomial&, const SquarefreeMonomial&) = default;

 private:
  VertexSubset support_;
};

// Z[v_1..v_m] / I with I generated by squarefree monomials.
class FaceRingPresentation {
 public:
  // Sorts generators lexicographically by support. Throws InputError if a generator
  // mentions a variable beyond m or divides another generator.
  FaceRingPresentation(int m, std::vector<SquarefreeMonomial> generators);

  [[nodiscard]] int variable_count() const { return m_; }
  [[nodiscard]] const std::vector<SquarefreeMonomial>& generators() const { return generators_; }
  [[nodiscard]] std::size_t cardinality() const { return generators_.size(); }
  // Empty ideal (K is a full simplex); downstream syzygy and wedge computations reject it.
  [[nodiscard]] bool is_trivial() const { return generators_.empty(); }
  // generator degree -> count
  [[nodiscard]] std::map<int, int> degree_histogram() const;

 private:
  int m_;
  std::vector<SquarefreeMonomial> generators_;
};

FaceRingPresentation face_ring(const SimplicialComplex& k);

// Plain-text complex format:
//   vertices <m>
//   facets | nonfaces
//   <subset as space-separated integers>   (one per line)
// Blank lines and text after '%' are ignored.
SimplicialComplex parse_complex(std::istream& in);
SimplicialComplex parse_complex(std::string_view text);
SimplicialComplex read_complex_file(const std::string& path);

}  // namespace zpcheck
