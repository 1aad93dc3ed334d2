#include "zpcheck/complex.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "zpcheck/error.hpp"

namespace zpcheck {

namespace {

void check_vertex_count(int m) {
  if (m < 1 || m > kMaxVertices) {
    throw InputError("vertex count must lie in [1," + std::to_string(kMaxVertices) + "], got " +
                     std::to_string(m));
  }
}

// Minimal non-faces of a downward-closed predicate: subsets S, 2 <= |S| <= max_card, with
// S not a face but every (|S|-1)-subset a face. Checking codimension-one subsets suffices
// because the face predicate is downward closed.
std::vector<Mask> search_minimal_nonfaces(int m, int max_card, const std::function<bool(Mask)>& is_face) {
  std::vector<Mask> out;
  for (int k = 2; k <= std::min(max_card, m); ++k) {
    for_each_subset_of_size(m, k, [&](Mask s) {
      if (is_face(s)) return true;
      for (Mask rest = s; rest != 0; rest &= rest - 1) {
        const Mask drop = rest & (~rest + 1);
        if (!is_face(s & ~drop)) return true;
      }
      out.push_back(s);
      return true;
    });
  }
  return out;
}

// Keeps the inclusion-minimal elements of a family of masks.
std::vector<Mask> minimal_elements(std::vector<Mask> family) {
  std::sort(family.begin(), family.end(), [](Mask a, Mask b) {
    return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
  });
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<Mask> out;
  for (Mask s : family) {
    const bool dominated = std::any_of(out.begin(), out.end(), [&](Mask t) { return is_subset(t, s); });
    if (!dominated) out.push_back(s);
  }
  return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(int m, std::vector<Mask> minimal, std::string source, int dim)
    : m_(m), nonface_masks_(std::move(minimal)), source_(std::move(source)), dim_(dim) {
  for (Mask s : nonface_masks_) {
    if (popcount(s) < 2) {
      throw InputError("vertex " + VertexSubset::from_mask(s).to_string() + " is not a face of " + source_ +
                       " (ghost vertices are not allowed)");
    }
    minimal_.push_back(VertexSubset::from_mask(s));
  }
  std::sort(minimal_.begin(), minimal_.end());
  nonface_masks_.clear();
  for (const auto& s : minimal_) nonface_masks_.push_back(s.mask());
}

SimplicialComplex SimplicialComplex::from_cyclic(const CyclicParams& p) {
  const auto face = [&](Mask s) { return is_face(VertexSubset::from_mask(s), p); };
  auto minimal = search_minimal_nonfaces(p.n, p.d + 1, face);
  return SimplicialComplex(p.n, std::move(minimal),
                           "cyclic C(" + std::to_string(p.n) + "," + std::to_string(p.d) + ")", p.d - 1);
}

SimplicialComplex SimplicialComplex::from_polygon(int m) {
  if (m < 4) throw InputError("polygon needs m >= 4 vertices, got " + std::to_string(m));
  check_vertex_count(m);
  std::vector<Mask> minimal;
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 2; j <= m; ++j) {
      if (i == 1 && j == m) continue;  // wrap-around edge
      minimal.push_back(vertex_bit(i) | vertex_bit(j));
    }
  }
  return SimplicialComplex(m, std::move(minimal), "polygon " + std::to_string(m), 1);
}

SimplicialComplex SimplicialComplex::from_facets(int m, const std::vector<VertexSubset>& facets) {
  check_vertex_count(m);
  std::vector<Mask> masks;
  int dim = -1;
  Mask covered = 0;
  for (const auto& f : facets) {
    f.check_range(m);
    masks.push_back(f.mask());
    covered |= f.mask();
    dim = std::max(dim, static_cast<int>(f.size()) - 1);
  }
  if (covered != full_mask(m)) {
    const Mask missing = full_mask(m) & ~covered;
    throw InputError("vertices " + VertexSubset::from_mask(missing).to_string() +
                     " lie in no facet (ghost vertices are not allowed)");
  }
  const auto face = [&](Mask s) {
    return std::any_of(masks.begin(), masks.end(), [&](Mask f) { return is_subset(s, f); });
  };
  auto minimal = search_minimal_nonfaces(m, dim + 2, face);
  return SimplicialComplex(m, std::move(minimal), "facet list on " + std::to_string(m) + " vertices", dim);
}

SimplicialComplex SimplicialComplex::from_nonfaces(int m, const std::vector<VertexSubset>& nonfaces) {
  check_vertex_count(m);
  std::vector<Mask> masks;
  for (const auto& s : nonfaces) {
    s.check_range(m);
    if (s.empty()) throw InputError("the empty set cannot be a non-face");
    masks.push_back(s.mask());
  }
  return SimplicialComplex(m, minimal_elements(std::move(masks)),
                           "non-face list on " + std::to_string(m) + " vertices", -2);
}

bool SimplicialComplex::contains_mask(Mask s) const {
  return std::none_of(nonface_masks_.begin(), nonface_masks_.end(), [&](Mask t) { return is_subset(t, s); });
}

bool SimplicialComplex::contains(const VertexSubset& s) const {
  s.check_range(m_);
  return contains_mask(s.mask());
}

int SimplicialComplex::dimension() const {
  if (dim_ == -2) {
    int best = 0;
    for (int k = m_; k >= 1 && best == 0; --k) {
      for_each_subset_of_size(m_, k, [&](Mask s) {
        if (!contains_mask(s)) return true;
        best = k;
        return false;
      });
    }
    dim_ = best - 1;
  }
  return dim_;
}

std::vector<VertexSubset> minimal_nonfaces(const SimplicialComplex& k) { return k.minimal_nonfaces(); }

SquarefreeMonomial::SquarefreeMonomial(VertexSubset support) : support_(std::move(support)) {
  if (support_.empty()) throw InputError("squarefree monomial needs a nonempty support");
}

std::string SquarefreeMonomial::to_string() const {
  std::string s;
  for (int v : support_.members()) s += "v" + std::to_string(v);
  return s;
}

FaceRingPresentation::FaceRingPresentation(int m, std::vector<SquarefreeMonomial> generators)
    : m_(m), generators_(std::move(generators)) {
  check_vertex_count(m);
  std::sort(generators_.begin(), generators_.end());
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    generators_[i].support().check_range(m);
    for (std::size_t j = 0; j < generators_.size(); ++j) {
      if (i != j && generators_[i].divides(generators_[j])) {
        throw InputError("ideal generators are not minimal: " + generators_[i].to_string() + " divides " +
                         generators_[j].to_string());
      }
    }
  }
}

std::map<int, int> FaceRingPresentation::degree_histogram() const {
  std::map<int, int> h;
  for (const auto& g : generators_) ++h[g.degree()];
  return h;
}

FaceRingPresentation face_ring(const SimplicialComplex& k) {
  std::vector<SquarefreeMonomial> gens;
  for (const auto& s : minimal_nonfaces(k)) gens.emplace_back(s);
  return FaceRingPresentation(k.vertex_count(), std::move(gens));
}

SimplicialComplex parse_complex(std::istream& in) {
  enum class Section { None, Facets, NonFaces };
  int m = -1;
  Section section = Section::None;
  std::vector<VertexSubset> subsets;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto pos = line.find('%'); pos != std::string::npos) line.erase(pos);
    std::istringstream tokens(line);
    std::string head;
    if (!(tokens >> head)) continue;
    const auto fail = [&](const std::string& why) {
      throw InputError("complex file line " + std::to_string(lineno) + ": " + why);
    };
    if (head == "vertices") {
      if (m != -1) fail("duplicate 'vertices' header");
      if (!(tokens >> m) || m < 1) fail("expected a positive vertex count");
      continue;
    }
    if (head == "facets" || head == "nonfaces") {
      if (m == -1) fail("'vertices m' must come first");
      if (section != Section::None) fail("only one of 'facets' or 'nonfaces' is allowed");
      section = head == "facets" ? Section::Facets : Section::NonFaces;
      continue;
    }
    if (section == Section::None) fail("expected 'vertices', 'facets' or 'nonfaces', got '" + head + "'");
    std::vector<int> members;
    std::istringstream row(line);
    std::string tok;
    while (row >> tok) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        fail("not an integer: '" + tok + "'");
      }
      if (used != tok.size()) fail("not an integer: '" + tok + "'");
      members.push_back(v);
    }
    try {
      VertexSubset s(std::move(members));
      s.check_range(m);
      subsets.push_back(std::move(s));
    } catch (const InputError& e) {
      fail(e.what());
    }
  }
  if (m == -1) throw InputError("complex file: missing 'vertices m' header");
  if (section == Section::None) throw InputError("complex file: missing 'facets' or 'nonfaces' section");
  return section == Section::Facets ? SimplicialComplex::from_facets(m, subsets)
                                    : SimplicialComplex::from_nonfaces(m, subsets);
}

SimplicialComplex parse_complex(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_complex(in);
}

SimplicialComplex read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open complex file '" + path + "'");
  return parse_complex(in);
}

}  // namespace zpcheck
