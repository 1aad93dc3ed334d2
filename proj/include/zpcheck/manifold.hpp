#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace zpcheck {

// S^lo x S^hi with 2 <= lo <= hi (factors are reordered on construction).
struct SphereProduct {
  int lo;
  int hi;

  SphereProduct(int m, int n);
  [[nodiscard]] int dimension() const { return lo + hi; }
  // "S5xS7"
  [[nodiscard]] std::string to_string() const;

  friend auto operator<=>(const SphereProduct&, const SphereProduct&) = default;
};

struct Summand {
  std::int64_t multiplicity;
  SphereProduct factor;

  friend auto operator<=>(const Summand&, const Summand&) = default;
};

// Connected sum of copies of sphere products, all of the same total dimension.
class ConnectedSumSpec {
 public:
  // Throws InputError when empty or a multiplicity is < 1, DimensionMismatchError when
  // total dimensions differ.
  explicit ConnectedSumSpec(std::vector<Summand> summands);

  // Grammar: summands joined by '#', each "k*S<m>xS<n>" with "k*" optional; whitespace ignored.
  static ConnectedSumSpec parse(std::string_view text);

  [[nodiscard]] const std::vector<Summand>& summands() const { return summands_; }
  [[nodiscard]] int dimension() const { return summands_.front().factor.dimension(); }
  // Equal factors merged, sorted by factor.
  [[nodiscard]] ConnectedSumSpec normalized() const;
  // "16*S5xS7 # 15*S6xS6" in the stored order.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const ConnectedSumSpec&, const ConnectedSumSpec&) = default;

 private:
  std::vector<Summand> summands_;
};

// Unreduced homology ranks of a space of top dimension D; zero ranks are not stored.
// All spaces handled here have torsion-free homology, so ranks are the whole story.
class GradedRanks {
 public:
  explicit GradedRanks(int top_dimension);

  void set(int degree, std::int64_t rank);
  void add(int degree, std::int64_t rank);
  [[nodiscard]] std::int64_t rank(int degree) const;
  // Same as rank() except in degree 0.
  [[nodiscard]] std::int64_t reduced_rank(int degree) const;
  [[nodiscard]] int top_dimension() const { return top_; }
  [[nodiscard]] const std::map<int, std::int64_t>& ranks() const { return ranks_; }

  friend bool operator==(const GradedRanks&, const GradedRanks&) = default;

 private:
  std::map<int, std::int64_t> ranks_;
  int top_;
};

// Kunneth for S^m x S^n. The punctured variant drops the top class (T minus an open disk).
GradedRanks product_homology(const SphereProduct& t, bool punctured = false);

// Middle degrees add over all copies of all summands; one class in degrees 0 and D.
GradedRanks connected_sum_homology(const ConnectedSumSpec& spec);

bool poincare_check(const GradedRanks& g);

std::int64_t euler_characteristic(const GradedRanks& g);

// Smallest positive degree with nonzero rank; throws InputError if there is none.
int first_nonzero_degree(const GradedRanks& g);

// rank pi_q (x) Q for a simply connected space, read off homology in the rational
// Hurewicz range q <= 2r - 2 (r = first_nonzero_degree). Throws RangeError beyond it.
std::int64_t rational_homotopy_rank(const GradedRanks& g, int q);

}  // namespace zpcheck
