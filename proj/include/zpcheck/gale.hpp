#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "zpcheck/bits.hpp"

namespace zpcheck {

// Combinatorial type of the cyclic polytope C(n,d): n vertices on the moment curve in R^d.
// Vertices are the indices 1..n in curve order; no coordinates are ever needed.
struct CyclicParams {
  int n;
  int d;

  // Requires d >= 2 and n >= d + 1.
  CyclicParams(int n, int d);
};

// A set of vertex indices, kept strictly increasing.
class VertexSubset {
 public:
  VertexSubset() = default;
  // Sorts the input; throws InputError on duplicates or indices outside [1, kMaxVertices].
  explicit VertexSubset(std::vector<int> members);
  VertexSubset(std::initializer_list<int> members);

  static VertexSubset from_mask(Mask mask);

  [[nodiscard]] std::span<const int> members() const& { return members_; }
  std::span<const int> members() const&& = delete;
  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] bool empty() const { return members_.empty(); }
  [[nodiscard]] Mask mask() const { return mask_; }
  [[nodiscard]] bool contains(int v) const;
  [[nodiscard]] bool is_subset_of(const VertexSubset& other) const { return is_subset(mask_, other.mask_); }

  // Throws InputError unless every member lies in [1, n].
  void check_range(int n) const;

  // "{1,3,5}"
  [[nodiscard]] std::string to_string() const;

  // Lexicographic on the sorted member sequence.
  friend std::strong_ordering operator<=>(const VertexSubset& a, const VertexSubset& b) {
    return a.members_ <=> b.members_;
  }
  friend bool operator==(const VertexSubset& a, const VertexSubset& b) { return a.mask_ == b.mask_; }

 private:
  std::vector<int> members_;
  Mask mask_ = 0;
};

// Maximal run [first, last] of consecutive indices inside a vertex subset.
struct Component {
  int first;
  int last;
  bool proper;  // avoids both vertex 1 and vertex n
  bool odd;

  [[nodiscard]] int size() const { return last - first + 1; }
  friend bool operator==(const Component&, const Component&) = default;
};

std::vector<Component> components(const VertexSubset& x, int n);

// Gale evenness test: X spans a (|X|-1)-face of C(n,d) iff |X| <= d and the number of
// proper odd components is at most d - |X|. The empty set is a face.
bool is_face(const VertexSubset& x, const CyclicParams& p);

// All faces with 1 <= |X| <= max_card, ordered by cardinality then lexicographically.
std::vector<VertexSubset> enumerate_faces(const CyclicParams& p, int max_card);

// f_{k-1} counts for k = 1..max_card.
std::vector<long long> face_counts(const CyclicParams& p, int max_card);

bool is_q_neighborly(const CyclicParams& p, int q);

}  // namespace zpcheck
