#include "zpcheck/report.hpp"

#include <algorithm>
#include <sstream>

#include "zpcheck/error.hpp"

namespace zpcheck {

using nlohmann::json;

namespace {

int parse_int(const std::string& word, const char* what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(word, &used);
  } catch (const std::exception&) {
    throw InputError(std::string("expected an integer for ") + what + ", got '" + word + "'");
  }
  if (used != word.size()) throw InputError(std::string("expected an integer for ") + what + ", got '" + word + "'");
  return v;
}

json subset_json(const VertexSubset& s) { return json(std::vector<int>(s.members().begin(), s.members().end())); }

json ranks_json(const GradedRanks& g) {
  json out = json::array();
  for (const auto& [k, r] : g.ranks()) out.push_back({{"degree", k}, {"rank", r}});
  return out;
}

std::string spectrum_line(const SphereSpectrum& s) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [dim, mult] : s.entries()) {
    out << (first ? "" : " x ") << mult << "*S" << dim;
    first = false;
  }
  if (first) out << "(none)";
  return out.str();
}

std::string ranks_line(const GradedRanks& g) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [k, r] : g.ranks()) {
    out << (first ? "" : ", ") << k << ':' << r;
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace

ComplexSource ComplexSource::parse(std::span<const std::string> words) {
  if (words.empty()) throw InputError("missing complex source (cyclic <n> <d> | polygon <m> | file <path>)");
  const std::string& kind = words[0];
  const std::vector<std::string> args(words.begin() + 1, words.end());
  if (kind == "cyclic") {
    if (args.size() != 2) throw InputError("usage: cyclic <n> <d>");
    parse_int(args[0], "n");
    parse_int(args[1], "d");
    return ComplexSource{Kind::Cyclic, args};
  }
  if (kind == "polygon") {
    if (args.size() != 1) throw InputError("usage: polygon <m>");
    parse_int(args[0], "m");
    return ComplexSource{Kind::Polygon, args};
  }
  if (kind == "file") {
    if (args.size() != 1) throw InputError("usage: file <path>");
    return ComplexSource{Kind::File, args};
  }
  throw InputError("unknown complex source '" + kind + "' (expected cyclic, polygon or file)");
}

SimplicialComplex ComplexSource::build() const {
  switch (kind) {
    case Kind::Cyclic:
      return SimplicialComplex::from_cyclic(CyclicParams(parse_int(args[0], "n"), parse_int(args[1], "d")));
    case Kind::Polygon:
      return SimplicialComplex::from_polygon(parse_int(args[0], "m"));
    case Kind::File:
      return read_complex_file(args[0]);
  }
  throw InputError("unknown complex source");
}

std::string ComplexSource::to_string() const {
  switch (kind) {
    case Kind::Cyclic:
      return "cyclic C(" + args[0] + "," + args[1] + ")";
    case Kind::Polygon:
      return "polygon " + args[0];
    case Kind::File:
      return "file " + args[0];
  }
  return "?";
}

std::string to_string(Verdict v) { return v == Verdict::NotEquivalent ? "NOT_EQUIVALENT" : "INCONCLUSIVE"; }

VerdictReport run_verdict(const SimplicialComplex& k, const std::string& source, const ConnectedSumSpec& manifold,
                          std::optional<int> q) {
  FaceRingPresentation ideal = face_ring(k);
  if (ideal.cardinality() < 2) {
    throw InputError(source + " has " + std::to_string(ideal.cardinality()) +
                     " minimal non-faces; the comparison needs at least two");
  }
  MinimalRelation rmin = min_relation_degree(ideal);
  WedgeModel wedge = borel_model(ideal, rmin.degree);
  const ConnectedSumSpec spec = manifold.normalized();
  GradedRanks homology = connected_sum_homology(spec);
  const int hurewicz = 2 * first_nonzero_degree(homology) - 2;
  const int lo = wedge.q_min();
  const int hi = std::min(wedge.q_max(), hurewicz);

  if (q && (*q < lo || *q > hi)) {
    throw RangeError("q=" + std::to_string(*q) + " outside the joint validity window [" + std::to_string(lo) + "," +
                     std::to_string(hi) + "]: wedge model valid for " + std::to_string(wedge.q_min()) +
                     " <= q <= " + std::to_string(wedge.q_max()) + ", rational Hurewicz valid for q <= " +
                     std::to_string(hurewicz));
  }

  std::vector<RankRow> table;
  for (int d = lo; d <= hi; ++d) table.push_back(RankRow{d, wedge.rank(d), rational_homotopy_rank(homology, d)});

  std::optional<int> discriminating;
  for (const auto& row : table) {
    if (q && row.q != *q) continue;
    if (row.wedge_rank != row.manifold_rank) {
      discriminating = row.q;
      break;
    }
  }

  std::vector<std::string> notes;
  notes.push_back("wedge side: pi_q(Z_K) (x) Q from the wedge of spheres S^{|r_j|-1}, valid for " +
                  std::to_string(wedge.q_min()) + " <= q <= |R_min| - 2 = " + std::to_string(wedge.q_max()));
  notes.push_back("manifold side: pi_q(M) (x) Q = H_q(M; Q) in the rational Hurewicz range q <= " +
                  std::to_string(hurewicz));
  if (lo > hi) notes.push_back("validity window is empty; no degree can be compared");
  const Verdict verdict = discriminating ? Verdict::NotEquivalent : Verdict::Inconclusive;
  if (verdict == Verdict::Inconclusive) {
    notes.push_back("rational ranks agree in every compared degree; this does not show the spaces are equivalent");
  } else {
    notes.push_back("rational homotopy ranks differ in degree " + std::to_string(*discriminating) +
                    ", so the spaces are not homotopy equivalent");
  }

  return VerdictReport{source,
                       spec,
                       std::move(ideal),
                       std::move(rmin),
                       std::move(wedge),
                       std::move(homology),
                       hurewicz,
                       lo,
                       hi,
                       q,
                       std::move(table),
                       discriminating,
                       verdict,
                       std::move(notes)};
}

VerdictReport run_counterexample() {
  const CyclicParams p(8, 4);
  VerdictReport r = run_verdict(SimplicialComplex::from_cyclic(p), "cyclic C(8,4)",
                                ConnectedSumSpec::parse(kCounterexampleManifold));
  r.notes.insert(r.notes.begin(),
                 "C(8,4) means n=8 vertices in dimension d=4; the ordering C(4,8) names the same polytope");
  return r;
}

json faces_json(const CyclicParams& p, int max_card, bool count_only) {
  json out = {{"n", p.n}, {"d", p.d}, {"max_card", max_card}};
  out["counts"] = face_counts(p, max_card);
  if (!count_only) {
    json faces = json::array();
    for (const auto& f : enumerate_faces(p, max_card)) faces.push_back(subset_json(f));
    out["faces"] = std::move(faces);
  }
  return out;
}

json ideal_json(const FaceRingPresentation& f, const std::string& source) {
  json gens = json::array();
  for (const auto& g : f.generators()) {
    gens.push_back({{"monomial", g.to_string()}, {"support", subset_json(g.support())}, {"degree", g.degree()}});
  }
  json hist = json::array();
  for (const auto& [deg, count] : f.degree_histogram()) hist.push_back({{"degree", deg}, {"count", count}});
  return {{"source", source},
          {"variables", f.variable_count()},
          {"cardinality", f.cardinality()},
          {"generators", std::move(gens)},
          {"degree_histogram", std::move(hist)}};
}

json relation_json(const FaceRingPresentation& f, const MinimalRelation& r) {
  const auto& w = r.witness;
  return {{"degree", r.degree},
          {"witness",
           {{"i", w.i + 1},
            {"j", w.j + 1},
            {"generator_i", f.generators()[w.i].to_string()},
            {"generator_j", f.generators()[w.j].to_string()},
            {"multiplier_i", w.multiplier_i.to_string()},
            {"multiplier_j", w.multiplier_j.to_string()}}}};
}

json spectrum_json(const SphereSpectrum& s) {
  json entries = json::array();
  for (const auto& [dim, mult] : s.entries()) entries.push_back({{"dim", dim}, {"multiplicity", mult}});
  return {{"ceiling", s.ceiling()}, {"spheres", std::move(entries)}};
}

json wedge_json(const WedgeModel& w) {
  return {{"facets", w.facet_count()},
          {"pi2_rank", w.pi2_rank()},
          {"rmin", w.rmin()},
          {"q_min", w.q_min()},
          {"q_max", w.q_max()},
          {"spectrum", spectrum_json(w.spectrum())}};
}

json homology_json(const ConnectedSumSpec& spec, const GradedRanks& g) {
  json out = {{"spec", spec.to_string()},
              {"dimension", g.top_dimension()},
              {"ranks", ranks_json(g)},
              {"poincare", poincare_check(g)},
              {"euler", euler_characteristic(g)}};
  out["hurewicz_bound"] = 2 * first_nonzero_degree(g) - 2;
  return out;
}

json to_json(const VerdictReport& r) {
  json table = json::array();
  for (const auto& row : r.table) {
    table.push_back({{"q", row.q}, {"wedge_rank", row.wedge_rank}, {"manifold_rank", row.manifold_rank}});
  }
  json comparison = {{"window", {r.window_lo, r.window_hi}}, {"table", std::move(table)}, {"notes", r.notes}};
  comparison["requested_q"] = r.requested_q ? json(*r.requested_q) : json(nullptr);
  comparison["q"] = r.discriminating_q ? json(*r.discriminating_q) : json(nullptr);
  const int shown_q = r.discriminating_q.value_or(r.requested_q.value_or(0));
  const auto row = std::find_if(r.table.begin(), r.table.end(), [&](const RankRow& x) { return x.q == shown_q; });
  comparison["rank_left"] = row != r.table.end() ? json(row->wedge_rank) : json(nullptr);
  comparison["rank_right"] = row != r.table.end() ? json(row->manifold_rank) : json(nullptr);
  return {{"input", {{"source", r.source}, {"manifold", r.manifold.to_string()}}},
          {"ideal", ideal_json(r.ideal, r.source)},
          {"rmin", relation_json(r.ideal, r.rmin)},
          {"wedge", wedge_json(r.wedge)},
          {"manifold", homology_json(r.manifold, r.homology)},
          {"comparison", std::move(comparison)},
          {"verdict", to_string(r.verdict)}};
}

std::string faces_text(const CyclicParams& p, int max_card, bool count_only) {
  std::ostringstream out;
  out << "C(" << p.n << "," << p.d << ") faces with at most " << max_card << " vertices\n";
  const auto counts = face_counts(p, max_card);
  for (std::size_t k = 0; k < counts.size(); ++k) out << "  f" << k << " = " << counts[k] << '\n';
  if (!count_only) {
    for (const auto& f : enumerate_faces(p, max_card)) out << f.to_string() << '\n';
  }
  return out.str();
}

std::string ideal_text(const FaceRingPresentation& f, const std::string& source) {
  std::ostringstream out;
  out << "face ring of " << source << ": Z[v1..v" << f.variable_count() << "] / I, |I| = " << f.cardinality()
      << '\n';
  for (const auto& g : f.generators()) out << "  " << g.to_string() << "  (degree " << g.degree() << ")\n";
  out << "degree histogram:";
  for (const auto& [deg, count] : f.degree_histogram()) out << ' ' << deg << ':' << count;
  out << '\n';
  return out.str();
}

std::string relation_text(const FaceRingPresentation& f, const MinimalRelation& r) {
  const auto& w = r.witness;
  std::ostringstream out;
  out << "|R_min| = " << r.degree << '\n'
      << "witness: " << f.generators()[w.i].to_string() << " * " << w.multiplier_i.to_string() << " - "
      << f.generators()[w.j].to_string() << " * " << w.multiplier_j.to_string() << " = 0\n";
  return out.str();
}

std::string wedge_text(const WedgeModel& w) {
  std::ostringstream out;
  out << "wedge spectrum (through dimension " << w.spectrum().ceiling() << "): " << spectrum_line(w.spectrum())
      << '\n'
      << "valid range: " << w.q_min() << " <= q <= " << w.q_max() << "  (|R_min| = " << w.rmin() << ")\n"
      << "pi_2 rank: " << w.pi2_rank() << '\n';
  for (int q = w.q_min(); q <= w.q_max(); ++q) out << "  rank pi_" << q << " (x) Q = " << w.rank(q) << '\n';
  return out.str();
}

std::string homology_text(const ConnectedSumSpec& spec, const GradedRanks& g) {
  std::ostringstream out;
  out << "M = " << spec.to_string() << "  (dimension " << g.top_dimension() << ")\n"
      << "H_*(M) ranks: " << ranks_line(g) << '\n'
      << "Poincare duality: " << (poincare_check(g) ? "ok" : "FAILS") << '\n'
      << "Euler characteristic: " << euler_characteristic(g) << '\n';
  return out.str();
}

std::string to_text(const VerdictReport& r, bool quiet) {
  std::ostringstream out;
  if (!quiet) {
    out << "== input\n"
        << "complex:  " << r.source << '\n'
        << "manifold: " << r.manifold.to_string() << "\n\n"
        << "== ideal\n"
        << ideal_text(r.ideal, r.source) << '\n'
        << "== relations among relations\n"
        << relation_text(r.ideal, r.rmin) << '\n'
        << "== wedge model\n"
        << wedge_text(r.wedge) << '\n'
        << "== manifold\n"
        << homology_text(r.manifold, r.homology) << "rational Hurewicz range: q <= " << r.hurewicz_bound
        << "\n\n"
        << "== comparison (window " << r.window_lo << ".." << r.window_hi << ")\n";
    for (const auto& row : r.table) {
      out << "  q=" << row.q << "  wedge " << row.wedge_rank << "  manifold " << row.manifold_rank
          << (row.wedge_rank != row.manifold_rank ? "  <- differs" : "") << '\n';
    }
    for (const auto& n : r.notes) out << "note: " << n << '\n';
    out << '\n';
  }
  out << "verdict: " << to_string(r.verdict);
  if (r.discriminating_q) {
    const auto row = std::find_if(r.table.begin(), r.table.end(),
                                  [&](const RankRow& x) { return x.q == *r.discriminating_q; });
    out << " at q=" << row->q << " (rank " << row->wedge_rank << " vs " << row->manifold_rank << ")";
  } else if (r.requested_q) {
    const auto row = std::find_if(r.table.begin(), r.table.end(),
                                  [&](const RankRow& x) { return x.q == *r.requested_q; });
    out << " at q=" << row->q << " (rank " << row->wedge_rank << " vs " << row->manifold_rank << ")";
  }
  out << '\n';
  return out.str();
}

}  // namespace zpcheck
