#include "zpcheck/syzygy.hpp"

#include <cassert>

#include "zpcheck/error.hpp"

namespace zpcheck {

SquarefreeMonomial lcm_support(const SquarefreeMonomial& a, const SquarefreeMonomial& b) {
  return SquarefreeMonomial(VertexSubset::from_mask(a.support().mask() | b.support().mask()));
}

MinimalRelation min_relation_degree(const FaceRingPresentation& f) {
  const auto& gens = f.generators();
  if (gens.size() < 2) {
    throw NoRelationsError("relations among relations need at least two ideal generators, have " +
                           std::to_string(gens.size()));
  }
  std::size_t best_i = 0;
  std::size_t best_j = 1;
  int best = -1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const int deg = 2 * popcount(gens[i].support().mask() | gens[j].support().mask());
      if (best < 0 || deg < best) {
        best = deg;
        best_i = i;
        best_j = j;
      }
    }
  }
  const Mask gi = gens[best_i].support().mask();
  const Mask gj = gens[best_j].support().mask();
  const Mask lcm = gi | gj;
  // Incomparable generators make both quotients nonempty and distinct.
  assert((lcm & ~gi) != 0 && (lcm & ~gj) != 0 && (lcm & ~gi) != (lcm & ~gj));
  RelationAmongRelations witness{best_i, best_j, SquarefreeMonomial(VertexSubset::from_mask(lcm & ~gi)),
                                 SquarefreeMonomial(VertexSubset::from_mask(lcm & ~gj)), best};
  return MinimalRelation{best, std::move(witness)};
}

}  // namespace zpcheck
