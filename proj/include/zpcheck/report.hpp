#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "zpcheck/complex.hpp"
#include "zpcheck/hilton.hpp"
#include "zpcheck/manifold.hpp"
#include "zpcheck/syzygy.hpp"

namespace zpcheck {

// Where a simplicial complex comes from on the command line:
//   cyclic <n> <d> | polygon <m> | file <path>
struct ComplexSource {
  enum class Kind { Cyclic, Polygon, File };

  Kind kind;
  std::vector<std::string> args;

  static ComplexSource parse(std::span<const std::string> words);
  [[nodiscard]] SimplicialComplex build() const;
  [[nodiscard]] std::string to_string() const;
};

enum class Verdict { NotEquivalent, Inconclusive };

std::string to_string(Verdict v);

struct RankRow {
  int q;
  std::int64_t wedge_rank;     // pi_q(Z_P) (x) Q from the wedge model
  std::int64_t manifold_rank;  // pi_q(M) (x) Q from rational Hurewicz
};

// Outcome of comparing rational homotopy ranks of Z_K against a connected sum M.
struct VerdictReport {
  std::string source;
  ConnectedSumSpec manifold;  // normalized
  FaceRingPresentation ideal;
  MinimalRelation rmin;
  WedgeModel wedge;
  GradedRanks homology;
  int hurewicz_bound;  // 2r - 2
  int window_lo;
  int window_hi;
  std::optional<int> requested_q;
  std::vector<RankRow> table;  // every admissible q, ascending
  std::optional<int> discriminating_q;
  Verdict verdict;
  std::vector<std::string> notes;

  // 0 for NOT_EQUIVALENT, 2 for INCONCLUSIVE.
  [[nodiscard]] int exit_code() const { return verdict == Verdict::NotEquivalent ? 0 : 2; }
};

// Compares ranks for q in [3, min(q_max, 2r - 2)]. Without a requested degree the first
// discriminating q (ascending) decides; with one, only that degree does and it must lie
// inside the window (RangeError otherwise).
VerdictReport run_verdict(const SimplicialComplex& k, const std::string& source, const ConnectedSumSpec& manifold,
                          std::optional<int> q = std::nullopt);

// C(8,4) against 16*S5xS7 # 15*S6xS6.
VerdictReport run_counterexample();

inline constexpr const char* kCounterexampleManifold = "16*S5xS7 # 15*S6xS6";

// JSON views. Integers only; keys come out sorted, so dump() is canonical.
nlohmann::json faces_json(const CyclicParams& p, int max_card, bool count_only);
nlohmann::json ideal_json(const FaceRingPresentation& f, const std::string& source);
nlohmann::json relation_json(const FaceRingPresentation& f, const MinimalRelation& r);
nlohmann::json spectrum_json(const SphereSpectrum& s);
nlohmann::json wedge_json(const WedgeModel& w);
nlohmann::json homology_json(const ConnectedSumSpec& spec, const GradedRanks& g);
nlohmann::json to_json(const VerdictReport& r);

// Text views.
std::string faces_text(const CyclicParams& p, int max_card, bool count_only);
std::string ideal_text(const FaceRingPresentation& f, const std::string& source);
std::string relation_text(const FaceRingPresentation& f, const MinimalRelation& r);
std::string wedge_text(const WedgeModel& w);
std::string homology_text(const ConnectedSumSpec& spec, const GradedRanks& g);
std::string to_text(const VerdictReport& r, bool quiet);

}  // namespace zpcheck
