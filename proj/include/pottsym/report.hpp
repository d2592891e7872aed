#pragma once

#include <string>

#include "pottsym/classify.hpp"
#include "pottsym/io.hpp"
#include "pottsym/oracle.hpp"

namespace pottsym {

inline constexpr const char* kEngineVersion = "1.0.0";
inline constexpr const char* kReportSchema = "pottsym/report-v1";

struct AnalysisResult {
  PottsModel model;
  std::vector<GaussianRational> levels;
  ColorTable colors;
  AutGroup aut;
  RelationSet rs;
  Presentation pres;
  Classification cls;
};

AnalysisResult run_analysis(const PottsModel& model);

struct ReportOptions {
  bool machine = false;
  bool trace = false;
  bool timestamp = false;
};

// Renderers return the full report body; text or a single JSON document.
std::string render_analyze(const AnalysisResult& r, const ReportOptions& opts);
std::string render_relations(const AnalysisResult& r, const ReportOptions& opts);
std::string render_classical(const PottsModel& model, const AutGroup& aut,
                             const ReportOptions& opts);
std::string render_energy(const PottsModel& model, const EnergySpectrum& s,
                          const ReportOptions& opts);
std::string render_partition(const PottsModel& model, double beta, std::complex<double> z,
                             const ReportOptions& opts);
std::string render_check_perm(const PottsModel& model, const Permutation& sigma, bool preserves,
                              bool commutes, const ReportOptions& opts);
std::string render_verify_rep(const PottsModel& model, const NumericRep& rep,
                              const VerifyReport& vr, const ReportOptions& opts);

}  // namespace pottsym
