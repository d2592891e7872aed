#include "pottsym/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "json.hpp"

namespace pottsym {

using nlohmann::json;

AnalysisResult run_analysis(const PottsModel& model) {
  AnalysisResult r{model,
                   level_function(model),
                   color_table(model),
                   automorphisms(model),
                   RelationSet::init(model),
                   {},
                   {}};
  r.rs.addCommutantIdentities(model);
  r.rs.propagate();
  r.pres = extract_presentation(r.rs);
  r.cls = classify(model, r.rs, r.aut);
  return r;
}

namespace {

json model_json(const PottsModel& model) {
  json m;
  m["vertices"] = model.labels();
  json edges = json::array();
  for (const Edge& e : model.edges()) {
    json je;
    je["u"] = model.labels()[e.u];
    je["v"] = model.labels()[e.v];
    je["weight"] = model.J(e.u, e.v).str();
    edges.push_back(je);
  }
  m["edges"] = edges;
  m["q"] = model.q();
  m["zero_pattern_matches_adjacency"] = model.zeroPatternMatchesAdjacency();
  return m;
}

json header_json(const char* command, const ReportOptions& opts) {
  json doc;
  doc["schema"] = kReportSchema;
  doc["engine_version"] = kEngineVersion;
  doc["command"] = command;
  if (opts.timestamp) {
    auto now = std::chrono::system_clock::now().time_since_epoch();
    doc["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(now).count();
  }
  return doc;
}

json levels_json(const PottsModel& model, const std::vector<GaussianRational>& levels) {
  json out = json::array();
  for (int v = 0; v < model.n(); ++v) {
    json e;
    e["vertex"] = model.labels()[v];
    e["value"] = levels[v].str();
    out.push_back(e);
  }
  return out;
}

json colors_json(const ColorTable& ct) {
  json out;
  out["count"] = ct.numColors;
  json vals = json::array();
  for (const auto& v : ct.valueOf) vals.push_back(v.str());
  out["values"] = vals;
  json matrix = json::array();
  for (int i = 0; i < ct.n; ++i) {
    json row = json::array();
    for (int j = 0; j < ct.n; ++j) row.push_back(ct(i, j));
    matrix.push_back(row);
  }
  out["matrix"] = matrix;
  return out;
}

json classical_json(const PottsModel& model, const AutGroup& aut) {
  json out;
  out["order"] = aut.order.get_str();
  json gens = json::array();
  for (const Permutation& g : aut.generators) gens.push_back(to_cycles(g, model.labels()));
  out["generators"] = gens;
  out["elements_enumerated"] = aut.elements.has_value();
  if (aut.elements) out["element_count"] = aut.elements->size();
  return out;
}

json presentation_json(const PottsModel& model, const Presentation& pres) {
  json out;
  json names = json::array();
  for (int key : pres.freeClassKeys) names.push_back(pres.varNames.at(key));
  out["free_variables"] = names;
  out["free_variable_count"] = pres.freeVarCount;
  json grid = json::array();
  for (int i = 0; i < pres.n; ++i) {
    json row = json::array();
    for (int j = 0; j < pres.n; ++j) row.push_back(pres.grid[i * pres.n + j]);
    grid.push_back(row);
  }
  out["grid"] = grid;
  json blocks = json::array();
  for (const auto& b : pres.blocks) {
    json jb;
    json rows = json::array(), cols = json::array();
    for (int r : b.rows) rows.push_back(model.labels()[r]);
    for (int c : b.cols) cols.push_back(model.labels()[c]);
    jb["rows"] = rows;
    jb["cols"] = cols;
    blocks.push_back(jb);
  }
  out["blocks"] = blocks;
  out["identities"] = pres.identities;
  out["all_commute"] = pres.allCommute;
  return out;
}

json rep_json(const NumericRep& rep) {
  json out;
  out["d"] = rep.d;
  out["exact"] = rep.exact;
  json entries = json::array();
  for (int i = 0; i < rep.n; ++i) {
    json row = json::array();
    for (int j = 0; j < rep.n; ++j) {
      json m = json::array();
      for (int r = 0; r < rep.d; ++r) {
        json mr = json::array();
        for (int c = 0; c < rep.d; ++c) {
          if (rep.exact)
            mr.push_back(rep.exactAt(i, j, r, c).str());
          else {
            json el;
            el["re"] = rep.at(i, j, r, c).real();
            el["im"] = rep.at(i, j, r, c).imag();
            mr.push_back(el);
          }
        }
        m.push_back(mr);
      }
      row.push_back(m);
    }
    entries.push_back(row);
  }
  out["entries"] = entries;
  return out;
}

json verification_json(const VerifyReport& vr) {
  json out;
  out["mode"] = vr.exactMode ? "exact" : "floating";
  out["tolerance"] = vr.tolerance;
  out["pass"] = vr.pass;
  json fams = json::array();
  for (const auto& f : vr.families) {
    json jf;
    jf["name"] = f.name;
    jf["residual"] = f.residual;
    fams.push_back(jf);
  }
  out["families"] = fams;
  out["max_residual"] = vr.maxResidual();
  return out;
}

json classification_json(const PottsModel& model, const RelationSet& rs,
                         const Classification& cls) {
  json out;
  out["verdict"] = verdict_str(cls.verdict);
  if (cls.structureHint) out["structure_hint"] = *cls.structureHint;
  if (cls.disjointPair) {
    out["disjoint_pair"] = json::array({to_cycles(cls.disjointPair->first, model.labels()),
                                        to_cycles(cls.disjointPair->second, model.labels())});
  }
  if (cls.certificate) out["certificate"] = rep_json(*cls.certificate);
  if (cls.verification) out["verification"] = verification_json(*cls.verification);
  if (cls.witness && cls.witness->entryA >= 0) {
    json w;
    w["magnitude"] = cls.witness->magnitude;
    if (!cls.witness->exactMagnitude.empty()) w["exact_magnitude"] = cls.witness->exactMagnitude;
    w["entry_a"] = rs.entryName(cls.witness->entryA);
    w["entry_b"] = rs.entryName(cls.witness->entryB);
    out["witness"] = w;
  }
  out["notes"] = cls.notes;
  return out;
}

std::string grid_text(const PottsModel& model, const Presentation& pres) {
  int n = pres.n;
  size_t width = 1;
  for (const std::string& s : pres.grid) width = std::max(width, s.size());
  std::ostringstream out;
  for (int i = 0; i < n; ++i) {
    out << "  [ ";
    for (int j = 0; j < n; ++j) {
      const std::string& s = pres.grid[i * n + j];
      out << s << std::string(width - s.size() + 1, ' ');
    }
    out << "]\n";
  }
  (void)model;
  return out.str();
}

std::string model_text(const PottsModel& model) {
  std::ostringstream out;
  out << "model: " << model.n() << " vertices, " << model.edges().size()
      << " edges, q = " << model.q() << "\n";
  out << "vertices:";
  for (const auto& l : model.labels()) out << " " << l;
  out << "\nedges:";
  for (const Edge& e : model.edges())
    out << " {" << model.labels()[e.u] << "," << model.labels()[e.v]
        << "; w=" << model.J(e.u, e.v).str() << "}";
  out << "\n";
  return out.str();
}

std::string classical_text(const PottsModel& model, const AutGroup& aut) {
  std::ostringstream out;
  out << "classical group: order " << aut.order.get_str() << "\n";
  if (aut.generators.empty()) out << "  generators: (trivial)\n";
  for (const Permutation& g : aut.generators)
    out << "  generator: " << to_cycles(g, model.labels()) << "\n";
  return out.str();
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string render_analyze(const AnalysisResult& r, const ReportOptions& opts) {
  if (opts.machine) {
    json doc = header_json("analyze", opts);
    doc["model"] = model_json(r.model);
    doc["level_function"] = levels_json(r.model, r.levels);
    doc["colors"] = colors_json(r.colors);
    doc["classical"] = classical_json(r.model, r.aut);
    doc["presentation"] = presentation_json(r.model, r.pres);
    doc["classification"] = classification_json(r.model, r.rs, r.cls);
    if (opts.trace) doc["trace"] = r.rs.trace();
    return dump(doc);
  }
  std::ostringstream out;
  out << model_text(r.model);
  out << "level function:";
  for (int v = 0; v < r.model.n(); ++v)
    out << " f(" << r.model.labels()[v] << ")=" << r.levels[v].str();
  out << "\ncoupling colors: " << r.colors.numColors << " distinct values\n";
  out << classical_text(r.model, r.aut);
  out << "fixpoint presentation (" << r.pres.freeVarCount << " free variable"
      << (r.pres.freeVarCount == 1 ? "" : "s");
  if (r.pres.freeVarCount > 0) {
    out << ":";
    for (int key : r.pres.freeClassKeys) out << " " << r.pres.varNames.at(key);
  }
  out << ")\n";
  out << grid_text(r.model, r.pres);
  out << "verdict: " << verdict_str(r.cls.verdict) << "\n";
  if (r.cls.structureHint) out << "structure hint: " << *r.cls.structureHint << "\n";
  if (r.cls.disjointPair)
    out << "disjoint automorphisms: " << to_cycles(r.cls.disjointPair->first, r.model.labels())
        << " and " << to_cycles(r.cls.disjointPair->second, r.model.labels()) << "\n";
  if (r.cls.verification)
    out << "certificate verification: " << (r.cls.verification->pass ? "pass" : "FAIL")
        << " (mode " << (r.cls.verification->exactMode ? "exact" : "floating")
        << ", max residual " << r.cls.verification->maxResidual() << ")\n";
  if (r.cls.witness && r.cls.witness->entryA >= 0)
    out << "noncommutation witness: |[" << r.rs.entryName(r.cls.witness->entryA) << ", "
        << r.rs.entryName(r.cls.witness->entryB) << "]| = " << r.cls.witness->magnitude << "\n";
  for (const auto& note : r.cls.notes) out << "note: " << note << "\n";
  if (opts.trace) {
    out << "trace:\n";
    for (const auto& t : r.rs.trace()) out << "  " << t << "\n";
  }
  return out.str();
}

std::string render_relations(const AnalysisResult& r, const ReportOptions& opts) {
  if (opts.machine) {
    json doc = header_json("relations", opts);
    doc["model"] = model_json(r.model);
    doc["level_function"] = levels_json(r.model, r.levels);
    doc["colors"] = colors_json(r.colors);
    doc["presentation"] = presentation_json(r.model, r.pres);
    if (opts.trace) doc["trace"] = r.rs.trace();
    return dump(doc);
  }
  std::ostringstream out;
  out << model_text(r.model);
  out << "fixpoint presentation (" << r.pres.freeVarCount << " free variable"
      << (r.pres.freeVarCount == 1 ? "" : "s") << ")\n";
  out << grid_text(r.model, r.pres);
  out << "identities:\n";
  for (const auto& id : r.pres.identities) out << "  " << id << "\n";
  out << (r.pres.allCommute ? "all surviving variables commute\n"
                            : "commutation not established for all pairs\n");
  if (opts.trace) {
    out << "trace:\n";
    for (const auto& t : r.rs.trace()) out << "  " << t << "\n";
  }
  return out.str();
}

std::string render_classical(const PottsModel& model, const AutGroup& aut,
                             const ReportOptions& opts) {
  if (opts.machine) {
    json doc = header_json("classical", opts);
    doc["model"] = model_json(model);
    doc["classical"] = classical_json(model, aut);
    return dump(doc);
  }
  return model_text(model) + classical_text(model, aut);
}

std::string render_energy(const PottsModel& model, const EnergySpectrum& s,
                          const ReportOptions& opts) {
  if (opts.machine) {
    json doc = header_json("energy", opts);
    doc["model"] = model_json(model);
    json spec = json::array();
    for (const auto& [e, m] : s.entries) {
      json je;
      je["energy"] = e.str();
      je["multiplicity"] = m;
      spec.push_back(je);
    }
    doc["spectrum"] = spec;
    doc["total_configurations"] = s.totalConfigurations;
    return dump(doc);
  }
  std::ostringstream out;
  out << model_text(model);
  out << "energy spectrum over " << s.totalConfigurations << " configurations:\n";
  for (const auto& [e, m] : s.entries) out << "  H = " << e.str() << "  x" << m << "\n";
  return out.str();
}

std::string render_partition(const PottsModel& model, double beta, std::complex<double> z,
                             const ReportOptions& opts) {
  if (opts.machine) {
    json doc = header_json("partition", opts);
    doc["model"] = model_json(model);
    doc["beta"] = beta;
    doc["z_re"] = z.real();
    doc["z_im"] = z.imag();
    return dump(doc);
  }
  std::ostringstream out;
  out << model_text(model);
  out << "Z(" << beta << ") = " << z.real();
  if (z.imag() != 0.0) out << (z.imag() > 0 ? " + " : " - ") << std::abs(z.imag()) << "i";
  out << "\n";
  return out.str();
}

std::string render_check_perm(const PottsModel& model, const Permutation& sigma, bool preserves,
                              bool commutes, const ReportOptions& opts) {
  if (opts.machine) {
    json doc = header_json("check-perm", opts);
    doc["model"] = model_json(model);
    doc["perm"] = to_cycles(sigma, model.labels());
    doc["preserves_hamiltonian"] = preserves;
    doc["commutes_with_coupling"] = commutes;
    return dump(doc);
  }
  std::ostringstream out;
  out << model_text(model);
  out << "permutation: " << to_cycles(sigma, model.labels()) << "\n";
  out << "preserves hamiltonian (exhaustive): " << (preserves ? "true" : "false") << "\n";
  out << "commutes with coupling matrix: " << (commutes ? "true" : "false") << "\n";
  return out.str();
}

std::string render_verify_rep(const PottsModel& model, const NumericRep& rep,
                              const VerifyReport& vr, const ReportOptions& opts) {
  if (opts.machine) {
    json doc = header_json("verify-rep", opts);
    doc["model"] = model_json(model);
    doc["rep"] = rep_json(rep);
    doc["verification"] = verification_json(vr);
    return dump(doc);
  }
  std::ostringstream out;
  out << model_text(model);
  out << "representation: d = " << rep.d << (rep.exact ? " (exact entries)" : " (floating)")
      << "\n";
  out << "verification (" << (vr.exactMode ? "exact" : "floating") << ", tol " << vr.tolerance
      << "): " << (vr.pass ? "pass" : "FAIL") << "\n";
  for (const auto& f : vr.families)
    out << "  " << f.name << ": max residual " << f.residual << "\n";
  return out.str();
}

}  // namespace pottsym
