#include "zpcheck/manifold.hpp"

#include <algorithm>
#include <cctype>
#include <regex>

#include "zpcheck/error.hpp"

namespace zpcheck {

SphereProduct::SphereProduct(int m, int n) : lo(std::min(m, n)), hi(std::max(m, n)) {
  if (lo < 2) {
    throw InputError("sphere product factors must have dimension >= 2, got S" + std::to_string(m) + "xS" +
                     std::to_string(n));
  }
}

std::string SphereProduct::to_string() const { return "S" + std::to_string(lo) + "xS" + std::to_string(hi); }

ConnectedSumSpec::ConnectedSumSpec(std::vector<Summand> summands) : summands_(std::move(summands)) {
  if (summands_.empty()) throw InputError("connected sum needs at least one summand");
  const int dim = summands_.front().factor.dimension();
  for (const auto& s : summands_) {
    if (s.multiplicity < 1) {
      throw InputError("summand multiplicity must be >= 1, got " + std::to_string(s.multiplicity));
    }
    if (s.factor.dimension() != dim) {
      throw DimensionMismatchError("connected sum of manifolds of different dimensions: " +
                                   summands_.front().factor.to_string() + " (" + std::to_string(dim) + ") and " +
                                   s.factor.to_string() + " (" + std::to_string(s.factor.dimension()) + ")");
    }
  }
}

ConnectedSumSpec ConnectedSumSpec::parse(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  static const std::regex summand_re(R"(^(?:(\d+)\*)?[Ss](\d+)[xX][Ss](\d+)$)");
  std::vector<Summand> summands;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = compact.find('#', start);
    const std::string piece = compact.substr(start, end == std::string::npos ? std::string::npos : end - start);
    std::smatch match;
    if (!std::regex_match(piece, match, summand_re)) {
      throw InputError("cannot parse connected-sum summand '" + piece + "' (expected k*S<m>xS<n>)");
    }
    try {
      const std::int64_t k = match[1].matched ? std::stoll(match[1].str()) : 1;
      summands.push_back(Summand{k, SphereProduct(std::stoi(match[2].str()), std::stoi(match[3].str()))});
    } catch (const std::out_of_range&) {
      throw InputError("number out of range in summand '" + piece + "'");
    }
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return ConnectedSumSpec(std::move(summands));
}

ConnectedSumSpec ConnectedSumSpec::normalized() const {
  std::map<SphereProduct, std::int64_t> merged;
  for (const auto& s : summands_) merged[s.factor] += s.multiplicity;
  std::vector<Summand> out;
  for (const auto& [factor, k] : merged) out.push_back(Summand{k, factor});
  return ConnectedSumSpec(std::move(out));
}

std::string ConnectedSumSpec::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < summands_.size(); ++i) {
    if (i) s += " # ";
    s += std::to_string(summands_[i].multiplicity) + "*" + summands_[i].factor.to_string();
  }
  return s;
}

GradedRanks::GradedRanks(int top_dimension) : top_(top_dimension) {
  if (top_dimension < 0) throw InputError("top dimension must be nonnegative");
}

void GradedRanks::set(int degree, std::int64_t rank) {
  if (degree < 0 || degree > top_) {
    throw RangeError("degree " + std::to_string(degree) + " outside [0," + std::to_string(top_) + "]");
  }
  if (rank < 0) throw InputError("homology rank must be nonnegative");
  if (rank == 0) {
    ranks_.erase(degree);
  } else {
    ranks_[degree] = rank;
  }
}

void GradedRanks::add(int degree, std::int64_t rank) { set(degree, this->rank(degree) + rank); }

std::int64_t GradedRanks::rank(int degree) const {
  const auto it = ranks_.find(degree);
  return it == ranks_.end() ? 0 : it->second;
}

std::int64_t GradedRanks::reduced_rank(int degree) const {
  return degree == 0 ? std::max<std::int64_t>(rank(0) - 1, 0) : rank(degree);
}

GradedRanks product_homology(const SphereProduct& t, bool punctured) {
  GradedRanks g(t.dimension());
  g.add(0, 1);
  g.add(t.lo, 1);
  g.add(t.hi, 1);
  if (!punctured) g.add(t.dimension(), 1);
  return g;
}

GradedRanks connected_sum_homology(const ConnectedSumSpec& spec) {
  const int dim = spec.dimension();
  GradedRanks g(dim);
  g.set(0, 1);
  for (const auto& s : spec.summands()) {
    const GradedRanks piece = product_homology(s.factor, true);
    for (const auto& [k, r] : piece.ranks()) {
      if (k > 0) g.add(k, s.multiplicity * r);
    }
  }
  g.add(dim, 1);
  return g;
}

bool poincare_check(const GradedRanks& g) {
  const int d = g.top_dimension();
  for (int k = 0; k <= d; ++k) {
    if (g.rank(k) != g.rank(d - k)) return false;
  }
  return true;
}

std::int64_t euler_characteristic(const GradedRanks& g) {
  std::int64_t chi = 0;
  for (const auto& [k, r] : g.ranks()) chi += (k % 2 == 0) ? r : -r;
  return chi;
}

int first_nonzero_degree(const GradedRanks& g) {
  for (const auto& [k, r] : g.ranks()) {
    if (k > 0) return k;
  }
  throw InputError("homology has no classes in positive degree");
}

std::int64_t rational_homotopy_rank(const GradedRanks& g, int q) {
  if (q <= 0) throw InputError("homotopy degree must be positive, got " + std::to_string(q));
  const int r = first_nonzero_degree(g);
  if (q > 2 * r - 2) {
    throw RangeError("degree " + std::to_string(q) + " outside the rational Hurewicz range q <= " +
                     std::to_string(2 * r - 2));
  }
  return g.rank(q);
}

}  // namespace zpcheck
