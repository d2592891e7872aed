// Command line front end: derives and classifies the quantum symmetry of a
// Potts instance, with exact enumeration oracles for cross-checking.
//
// Exit codes: 0 success, 2 input error, 3 enumeration/size guard,
// 4 internal inconsistency.

#include <iostream>

#include "CLI11.hpp"
#include "pottsym/report.hpp"

using namespace pottsym;

int main(int argc, char** argv) {
  CLI::App app{"quantum symmetry analysis of Potts models on finite weighted graphs"};
  app.require_subcommand(1);

  std::string modelPath;
  ReportOptions opts;
  std::string format = "text";
  auto addCommon = [&](CLI::App* sub) {
    sub->add_option("model", modelPath, "model file (JSON)")->required();
    sub->add_option("--format", format, "output format: text|machine")
        ->check(CLI::IsMember({"text", "machine"}));
    sub->add_flag("--trace", opts.trace, "include the rule application trace");
    sub->add_flag("--timestamp", opts.timestamp, "include a timestamp field");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "full pipeline: relations, group, verdict");
  addCommon(analyze);
  CLI::App* relations = app.add_subcommand("relations", "fixpoint presentation only");
  addCommon(relations);
  CLI::App* classical = app.add_subcommand("classical", "classical symmetry group");
  addCommon(classical);
  CLI::App* energy = app.add_subcommand("energy", "exact energy spectrum");
  addCommon(energy);

  CLI::App* partition = app.add_subcommand("partition", "partition function Z(beta)");
  addCommon(partition);
  double beta = 0.0;
  partition->add_option("--beta", beta, "inverse temperature")->required();

  CLI::App* checkPerm = app.add_subcommand("check-perm", "exhaustive preservation check");
  addCommon(checkPerm);
  std::string permText;
  checkPerm->add_option("--perm", permText, "permutation in cycle notation over labels")
      ->required();

  CLI::App* verifyRep = app.add_subcommand("verify-rep", "verify a representation file");
  addCommon(verifyRep);
  std::string repPath;
  double tol = 1e-9;
  verifyRep->add_option("--rep", repPath, "representation file (JSON)")->required();
  verifyRep->add_option("--tol", tol, "residual tolerance");

  CLI11_PARSE(app, argc, argv);
  opts.machine = format == "machine";

  try {
    PottsModel model = load_model_file(modelPath);
    if (analyze->parsed()) {
      std::cout << render_analyze(run_analysis(model), opts);
    } else if (relations->parsed()) {
      AnalysisResult r{model,          level_function(model), color_table(model),
                       AutGroup{},     RelationSet::init(model), {},
                       {}};
      r.rs.addCommutantIdentities(model);
      r.rs.propagate();
      r.pres = extract_presentation(r.rs);
      std::cout << render_relations(r, opts);
    } else if (classical->parsed()) {
      std::cout << render_classical(model, automorphisms(model), opts);
    } else if (energy->parsed()) {
      std::cout << render_energy(model, energy_spectrum(model), opts);
    } else if (partition->parsed()) {
      std::cout << render_partition(model, beta, partition_function(model, beta), opts);
    } else if (checkPerm->parsed()) {
      Permutation sigma = parse_cycles(permText, model.labels());
      std::cout << render_check_perm(model, sigma, check_preservation(model, sigma),
                                     commutes_with_coupling(model, sigma), opts);
    } else if (verifyRep->parsed()) {
      NumericRep rep = load_rep_file(repPath, model);
      RelationSet rs = RelationSet::init(model);
      rs.addCommutantIdentities(model);
      rs.propagate();
      std::cout << render_verify_rep(model, rep, verify_numeric_rep(model, rs, rep, tol), opts);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
