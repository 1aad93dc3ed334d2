#pragma once

#include <cstdint>
#include <map>
#include <span>

#include "zpcheck/complex.hpp"

namespace zpcheck {

int moebius(std::int64_t n);

// Witt formula: number of basic products of weight w on k generators,
// (1/w) * sum_{d | w} mu(d) k^{w/d}. Throws OverflowError past int64.
std::int64_t basic_product_count(std::int64_t k, int w);

// Multiset of odd spheres S^D (D >= 3) appearing in a Hilton-Milnor product, truncated at
// an explicit ceiling. Dimensions above the ceiling were never computed.
class SphereSpectrum {
 public:
  explicit SphereSpectrum(int ceiling);

  void add(int dim, std::int64_t multiplicity);
  [[nodiscard]] std::int64_t multiplicity(int dim) const;
  [[nodiscard]] int ceiling() const { return ceiling_; }
  [[nodiscard]] const std::map<int, std::int64_t>& entries() const { return entries_; }

  friend bool operator==(const SphereSpectrum&, const SphereSpectrum&) = default;

 private:
  std::map<int, std::int64_t> entries_;
  int ceiling_;
};

// Hilton-Milnor spectrum of a wedge of `count` copies of S^dim: a weight-w basic product
// contributes S^{(dim-1)w + 1}.
SphereSpectrum wedge_spectrum(std::int64_t count, int sphere_dim, int ceiling);

// Same for a wedge of spheres of mixed odd dimensions, using the multigraded Witt formula.
SphereSpectrum mixed_wedge_spectrum(std::span<const int> dims, int ceiling);

// rank of pi_q (x) Q of the wedge: each odd sphere S^D contributes rank 1 in degree D only.
std::int64_t rational_rank_wedge(const SphereSpectrum& s, int q);

// Wedge-of-spheres model for the homotopy of B_T P (and of Z_P in degrees >= 3), valid for
// 3 <= q <= q_max = rmin - 2, where rmin is the minimal relation-among-relations degree.
class WedgeModel {
 public:
  WedgeModel(SphereSpectrum spectrum, int facet_count, int rmin);

  [[nodiscard]] const SphereSpectrum& spectrum() const { return spectrum_; }
  [[nodiscard]] int facet_count() const { return facet_count_; }
  [[nodiscard]] int rmin() const { return rmin_; }
  [[nodiscard]] int q_min() const { return 3; }
  [[nodiscard]] int q_max() const { return rmin_ - 2; }
  // pi_2(B_T P) = Z^m.
  [[nodiscard]] int pi2_rank() const { return facet_count_; }
  // Rational rank of pi_q(Z_P); throws RangeError outside [3, q_max].
  [[nodiscard]] std::int64_t rank(int q) const;

 private:
  SphereSpectrum spectrum_;
  int facet_count_;
  int rmin_;
};

// Generator r_j of degree |r_j| gives a wedge summand S^{|r_j| - 1}.
WedgeModel borel_model(const FaceRingPresentation& f, int rmin);

}  // namespace zpcheck
