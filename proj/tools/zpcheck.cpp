// zpcheck: face rings of cyclic polytopes, wedge models of moment-angle complexes, and
// rational homotopy comparisons against connected sums of sphere products.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zpcheck/error.hpp"
#include "zpcheck/report.hpp"

namespace {

using zpcheck::ComplexSource;

struct Options {
  bool json = false;
  bool quiet = false;
};

void emit(const Options& opt, const nlohmann::json& j, const std::string& text) {
  if (opt.json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zpcheck: moment-angle complex homotopy checks for cyclic polytopes"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Emit machine-readable JSON");
  app.add_flag("--quiet", opt.quiet, "Print only the essential result");

  auto* faces = app.add_subcommand("faces", "Enumerate faces of the cyclic polytope C(n,d)");
  int n = 0, d = 0;
  std::optional<int> max_card;
  bool count_only = false;
  faces->add_option("n", n, "Vertex count")->required();
  faces->add_option("d", d, "Dimension")->required();
  faces->add_option("--max-card", max_card, "Largest face cardinality (default d)");
  faces->add_flag("--count", count_only, "Only print face counts");

  std::vector<std::string> source_words;
  const auto add_source = [&](CLI::App* sub) {
    sub->add_option("source", source_words, "cyclic <n> <d> | polygon <m> | file <path>")->required()->expected(1, 3);
  };
  auto* ideal = app.add_subcommand("ideal", "Minimal non-face generators of the face ring");
  add_source(ideal);
  auto* syzmin = app.add_subcommand("syzmin", "Minimal degree of a relation among relations");
  add_source(syzmin);
  auto* wedge = app.add_subcommand("wedge", "Hilton-Milnor wedge model of pi_*(Z_K) (x) Q");
  add_source(wedge);

  std::string spec_text;
  auto* homology = app.add_subcommand("homology", "Homology ranks of a connected sum of sphere products");
  homology->add_option("spec", spec_text, "e.g. \"16*S5xS7 # 15*S6xS6\"")->required();

  auto* verdict = app.add_subcommand("verdict", "Compare rational homotopy of Z_K with a connected sum");
  add_source(verdict);
  std::optional<int> degree;
  verdict->add_option("--vs", spec_text, "Connected-sum spec")->required();
  verdict->add_option("--q,--degree", degree, "Compare in this degree only");

  auto* counterexample = app.add_subcommand("counterexample", "Run C(8,4) against 16*S5xS7 # 15*S6xS6");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (faces->parsed()) {
      const zpcheck::CyclicParams p(n, d);
      const int k = max_card.value_or(p.d);
      emit(opt, zpcheck::faces_json(p, k, count_only || opt.quiet), zpcheck::faces_text(p, k, count_only || opt.quiet));
      return 0;
    }
    if (homology->parsed()) {
      const auto spec = zpcheck::ConnectedSumSpec::parse(spec_text).normalized();
      const auto g = zpcheck::connected_sum_homology(spec);
      emit(opt, zpcheck::homology_json(spec, g), zpcheck::homology_text(spec, g));
      return 0;
    }
    if (counterexample->parsed()) {
      const auto report = zpcheck::run_counterexample();
      emit(opt, zpcheck::to_json(report), zpcheck::to_text(report, opt.quiet));
      return report.exit_code();
    }

    const auto source = ComplexSource::parse(source_words);
    const auto complex = source.build();
    const std::string name = source.to_string();
    if (verdict->parsed()) {
      const auto spec = zpcheck::ConnectedSumSpec::parse(spec_text);
      const auto report = zpcheck::run_verdict(complex, name, spec, degree);
      emit(opt, zpcheck::to_json(report), zpcheck::to_text(report, opt.quiet));
      return report.exit_code();
    }
    const auto ring = zpcheck::face_ring(complex);
    if (ideal->parsed()) {
      emit(opt, zpcheck::ideal_json(ring, name), zpcheck::ideal_text(ring, name));
      return 0;
    }
    const auto rmin = zpcheck::min_relation_degree(ring);
    if (syzmin->parsed()) {
      emit(opt, zpcheck::relation_json(ring, rmin), zpcheck::relation_text(ring, rmin));
      return 0;
    }
    if (wedge->parsed()) {
      const auto model = zpcheck::borel_model(ring, rmin.degree);
      emit(opt, zpcheck::wedge_json(model), zpcheck::wedge_text(model));
      return 0;
    }
  } catch (const zpcheck::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
