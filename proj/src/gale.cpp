#include "zpcheck/gale.hpp"

#include <algorithm>
#include <sstream>

#include "zpcheck/error.hpp"

namespace zpcheck {

CyclicParams::CyclicParams(int n_, int d_) : n(n_), d(d_) {
  if (d < 2) throw InputError("cyclic polytope needs d >= 2, got d=" + std::to_string(d));
  if (n < d + 1) {
    throw InputError("cyclic polytope C(n,d) needs n >= d+1, got C(" + std::to_string(n) + "," +
                     std::to_string(d) + ")");
  }
  if (n > kMaxVertices) {
    throw InputError("at most " + std::to_string(kMaxVertices) + " vertices supported, got n=" +
                     std::to_string(n));
  }
}

VertexSubset::VertexSubset(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    const int v = members_[i];
    if (v < 1 || v > kMaxVertices) throw InputError("vertex index out of range: " + std::to_string(v));
    if (i > 0 && members_[i - 1] == v) throw InputError("duplicate vertex index: " + std::to_string(v));
    mask_ |= vertex_bit(v);
  }
}

VertexSubset::VertexSubset(std::initializer_list<int> members) : VertexSubset(std::vector<int>(members)) {}

VertexSubset VertexSubset::from_mask(Mask mask) {
  std::vector<int> members;
  members.reserve(popcount(mask));
  for (int i = 1; mask != 0; ++i, mask >>= 1) {
    if (mask & 1) members.push_back(i);
  }
  return VertexSubset(std::move(members));
}

bool VertexSubset::contains(int v) const {
  return v >= 1 && v <= kMaxVertices && (mask_ & vertex_bit(v)) != 0;
}

void VertexSubset::check_range(int n) const {
  for (int v : members_) {
    if (v > n) {
      throw InputError("vertex " + std::to_string(v) + " outside [1," + std::to_string(n) + "]");
    }
  }
}

std::string VertexSubset::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out << ',';
    out << members_[i];
  }
  out << '}';
  return out.str();
}

std::vector<Component> components(const VertexSubset& x, int n) {
  x.check_range(n);
  std::vector<Component> out;
  const auto members = x.members();
  std::size_t i = 0;
  while (i < members.size()) {
    std::size_t j = i;
    while (j + 1 < members.size() && members[j + 1] == members[j] + 1) ++j;
    const int first = members[i];
    const int last = members[j];
    out.push_back(Component{first, last, first != 1 && last != n, (last - first + 1) % 2 == 1});
    i = j + 1;
  }
  return out;
}

namespace {

// Mask version of the evenness test; x must already be range checked.
bool is_face_mask(Mask x, int n, int d) {
  const int k = popcount(x);
  if (k > d) return false;
  int proper_odd = 0;
  int i = 1;
  while (i <= n) {
    if (!(x & vertex_bit(i))) {
      ++i;
      continue;
    }
    int j = i;
    while (j + 1 <= n && (x & vertex_bit(j + 1))) ++j;
    if (i != 1 && j != n && (j - i + 1) % 2 == 1) ++proper_odd;
    i = j + 1;
  }
  return proper_odd <= d - k;
}

}  // namespace

bool is_face(const VertexSubset& x, const CyclicParams& p) {
  x.check_range(p.n);
  return is_face_mask(x.mask(), p.n, p.d);
}

std::vector<VertexSubset> enumerate_faces(const CyclicParams& p, int max_card) {
  if (max_card < 0) throw InputError("max_card must be nonnegative");
  if (max_card > p.d) {
    throw InputError("max_card " + std::to_string(max_card) + " exceeds d=" + std::to_string(p.d) +
                     "; no face has more than d vertices");
  }
  std::vector<VertexSubset> faces;
  for (int k = 1; k <= max_card; ++k) {
    const std::size_t begin = faces.size();
    for_each_subset_of_size(p.n, k, [&](Mask s) {
      if (is_face_mask(s, p.n, p.d)) faces.push_back(VertexSubset::from_mask(s));
      return true;
    });
    std::sort(faces.begin() + static_cast<std::ptrdiff_t>(begin), faces.end());
  }
  return faces;
}

std::vector<long long> face_counts(const CyclicParams& p, int max_card) {
  if (max_card < 0 || max_card > p.d) {
    throw InputError("max_card must lie in [0," + std::to_string(p.d) + "]");
  }
  std::vector<long long> counts;
  for (int k = 1; k <= max_card; ++k) {
    long long c = 0;
    for_each_subset_of_size(p.n, k, [&](Mask s) {
      c += is_face_mask(s, p.n, p.d) ? 1 : 0;
      return true;
    });
    counts.push_back(c);
  }
  return counts;
}

bool is_q_neighborly(const CyclicParams& p, int q) {
  if (q < 1) throw InputError("neighborliness order q must be >= 1");
  // q > n is vacuously true: there are no q-subsets.
  return for_each_subset_of_size(p.n, q, [&](Mask s) { return is_face_mask(s, p.n, p.d); });
}

}  // namespace zpcheck
