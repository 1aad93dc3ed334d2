#include "zpcheck/hilton.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "zpcheck/error.hpp"

namespace zpcheck {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in basic product count");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in basic product count");
  return r;
}

std::int64_t checked_pow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

// (sum parts)! / prod parts[i]!, built as a product of running binomials C(total, i).
// Each step multiplies by total / i; dividing out gcd(result, i) first keeps it exact.
std::int64_t multinomial(std::span<const int> parts) {
  std::int64_t result = 1;
  int total = 0;
  for (int p : parts) {
    for (int i = 1; i <= p; ++i) {
      ++total;
      const std::int64_t g = std::gcd(result, static_cast<std::int64_t>(i));
      result = checked_mul(result / g, total / (i / g));
    }
  }
  return result;
}

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

void check_odd_dim(int dim) {
  if (dim < 3) throw InputError("sphere dimension must be >= 3, got " + std::to_string(dim));
  if (dim % 2 == 0) {
    throw UnsupportedError("even-dimensional sphere S^" + std::to_string(dim) +
                           " not supported: rational ranks are computed for odd spheres only");
  }
}

}  // namespace

int moebius(std::int64_t n) {
  if (n < 1) throw InputError("moebius function is defined for n >= 1, got " + std::to_string(n));
  int sign = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::int64_t basic_product_count(std::int64_t k, int w) {
  if (k < 1 || w < 1) throw InputError("basic_product_count needs k >= 1 and w >= 1");
  std::int64_t sum = 0;
  for (int d : divisors(w)) {
    const int mu = moebius(d);
    if (mu == 0) continue;
    sum = checked_add(sum, mu * checked_pow(k, w / d));
  }
  if (sum % w != 0) throw std::logic_error("Witt sum not divisible by weight");
  return sum / w;
}

SphereSpectrum::SphereSpectrum(int ceiling) : ceiling_(ceiling) {
  if (ceiling < 0) throw InputError("spectrum ceiling must be nonnegative");
}

void SphereSpectrum::add(int dim, std::int64_t multiplicity) {
  if (multiplicity == 0) return;
  if (multiplicity < 0) throw InputError("negative sphere multiplicity");
  if (dim > ceiling_) throw RangeError("sphere dimension " + std::to_string(dim) + " above spectrum ceiling");
  if (dim < 3 || dim % 2 == 0) throw UnsupportedError("spectrum holds odd spheres of dimension >= 3 only");
  entries_[dim] = checked_add(entries_[dim], multiplicity);
}

std::int64_t SphereSpectrum::multiplicity(int dim) const {
  const auto it = entries_.find(dim);
  return it == entries_.end() ? 0 : it->second;
}

SphereSpectrum wedge_spectrum(std::int64_t count, int sphere_dim, int ceiling) {
  if (count < 1) throw InputError("wedge needs at least one sphere");
  check_odd_dim(sphere_dim);
  SphereSpectrum s(ceiling);
  for (int w = 1; (sphere_dim - 1) * w + 1 <= ceiling; ++w) {
    s.add((sphere_dim - 1) * w + 1, basic_product_count(count, w));
  }
  return s;
}

SphereSpectrum mixed_wedge_spectrum(std::span<const int> dims, int ceiling) {
  if (dims.empty()) throw InputError("wedge needs at least one sphere");
  // Group equal dimensions: spheres of one dimension are interchangeable for counting.
  std::map<int, std::int64_t> groups;
  for (int d : dims) {
    check_odd_dim(d);
    ++groups[d];
  }
  std::vector<int> step;  // dim - 1 per group
  std::vector<std::int64_t> size;
  for (const auto& [d, c] : groups) {
    step.push_back(d - 1);
    size.push_back(c);
  }
  SphereSpectrum s(ceiling);
  const std::size_t g = step.size();
  std::vector<int> exps(g, 0);

  // Number of basic products whose letters come from the groups with multiplicities exps:
  // (1/W) sum_{d | gcd} mu(d) multinomial(exps/d) prod size_i^{exps_i/d}.
  const auto count_for = [&](int weight) {
    int common = 0;
    for (int e : exps) common = std::gcd(common, e);
    std::int64_t sum = 0;
    std::vector<int> reduced(g);
    for (int d : divisors(common)) {
      const int mu = moebius(d);
      if (mu == 0) continue;
      std::int64_t term = 1;
      for (std::size_t i = 0; i < g; ++i) {
        reduced[i] = exps[i] / d;
        term = checked_mul(term, checked_pow(size[i], reduced[i]));
      }
      term = checked_mul(term, multinomial(reduced));
      sum = checked_add(sum, mu * term);
    }
    if (sum % weight != 0) throw std::logic_error("multigraded Witt sum not divisible by weight");
    return sum / weight;
  };

  // Depth-first walk over exponent vectors with sum exps_i * step_i + 1 <= ceiling.
  const auto walk = [&](auto&& self, std::size_t idx, int used, int weight) -> void {
    if (idx == g) {
      if (weight > 0) s.add(used + 1, count_for(weight));
      return;
    }
    for (int e = 0; used + e * step[idx] + 1 <= ceiling; ++e) {
      exps[idx] = e;
      self(self, idx + 1, used + e * step[idx], weight + e);
    }
    exps[idx] = 0;
  };
  walk(walk, 0, 0, 0);
  return s;
}

std::int64_t rational_rank_wedge(const SphereSpectrum& s, int q) {
  if (q > s.ceiling()) {
    throw RangeError("degree " + std::to_string(q) + " above spectrum ceiling " + std::to_string(s.ceiling()));
  }
  return s.multiplicity(q);
}

WedgeModel::WedgeModel(SphereSpectrum spectrum, int facet_count, int rmin)
    : spectrum_(std::move(spectrum)), facet_count_(facet_count), rmin_(rmin) {}

std::int64_t WedgeModel::rank(int q) const {
  if (q < q_min() || q > q_max()) {
    throw RangeError("degree " + std::to_string(q) + " outside the wedge model's valid range [" +
                     std::to_string(q_min()) + "," + std::to_string(q_max()) + "]");
  }
  return rational_rank_wedge(spectrum_, q);
}

WedgeModel borel_model(const FaceRingPresentation& f, int rmin) {
  if (f.cardinality() < 2) {
    throw InputError("wedge model needs at least two ideal generators, have " + std::to_string(f.cardinality()));
  }
  if (rmin < 4 || rmin % 2 != 0) throw InputError("relation degree must be even and >= 4");
  std::vector<int> dims;
  for (const auto& g : f.generators()) dims.push_back(g.degree() - 1);
  const int q_max = rmin - 2;
  return WedgeModel(mixed_wedge_spectrum(dims, q_max), f.variable_count(), rmin);
}

}  // namespace zpcheck
