// Acceptance regression suite. Each criterion prints a single PASS/FAIL line;
// the process exits nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>

#include "pottsym/report.hpp"
#include "testutil.hpp"

using namespace pottsym;
using namespace testutil;

namespace {

int failures = 0;

struct Expect {
  bool ok = true;
  std::string detail;
  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

void criterion(int number, const std::string& name, const std::function<void(Expect&)>& body) {
  Expect e;
  auto start = std::chrono::steady_clock::now();
  try {
    body(e);
  } catch (const std::exception& ex) {
    e.require(false, std::string("exception: ") + ex.what());
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (e.ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << name << "  ["
            << seconds << " s]";
  if (!e.ok) {
    std::cout << "  -- " << e.detail;
    ++failures;
  }
  std::cout << "\n";
}

template <typename F>
void for_each_configuration(int n, int q, F&& f) {
  Configuration omega;
  omega.spins.assign(n, 0);
  for (;;) {
    f(omega);
    int v = 0;
    while (v < n && ++omega.spins[v] == q) omega.spins[v++] = 0;
    if (v == n) break;
  }
}

double elapsed(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Shared deterministic pool for criteria 7 and 8.
std::vector<PottsModel> soundness_pool() {
  std::vector<PottsModel> models{
      cube_model(GaussianRational(2)),
      example2_model(GaussianRational(0), GaussianRational(1)),
      cube_model(GaussianRational(1)),
      example2_model(GaussianRational(1), GaussianRational(1)),
      triangle_model(),
      path3_model()};
  ModelGen gen(101);
  for (int t = 0; t < 50; ++t) models.push_back(gen.random(7, 2, t % 5 == 0));
  return models;
}

}  // namespace

int main() {
  criterion(1, "marked-rung cube is commutative with the displayed relations", [](Expect& e) {
    for (const GaussianRational& lambda :
         {GaussianRational(2), GaussianRational(Rational(1, 2)),
          GaussianRational(Rational(3), Rational(1))}) {
      auto t0 = std::chrono::steady_clock::now();
      PottsModel cube = cube_model(lambda);
      AnalysisResult r = run_analysis(cube);
      e.require(elapsed(t0) < 1.0, "analysis exceeded 1 s");
      e.require(r.cls.verdict == Verdict::Commutative,
                "verdict not Commutative for lambda=" + lambda.str());
      auto idx = [&](const char* l) { return cube.indexOf(l); };
      for (const char* a : {"1", "2", "3", "1'", "2'", "3'"})
        for (const char* b : {"4", "4'"}) {
          e.require(r.rs.kind(idx(a), idx(b)) == EntryKind::Zero, "row zeros missing");
          e.require(r.rs.kind(idx(b), idx(a)) == EntryKind::Zero, "column zeros missing");
        }
      e.require(r.rs.kind(idx("2"), idx("1")) == EntryKind::Zero, "q(2,1) not zero");
      e.require(r.rs.kind(idx("2"), idx("3")) == EntryKind::Zero, "q(2,3) not zero");
      const char* plain[] = {"1", "2", "3", "4"};
      const char* primed[] = {"1'", "2'", "3'", "4'"};
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          int ip = idx(plain[i]), jp = idx(plain[j]);
          int ipr = idx(primed[i]), jpr = idx(primed[j]);
          bool swapOk = r.rs.kind(ipr, jp) == EntryKind::Zero
                            ? r.rs.kind(ip, jpr) == EntryKind::Zero
                            : r.rs.sameClass(ipr, jp, ip, jpr);
          bool diagOk = r.rs.kind(ipr, jpr) == EntryKind::Zero
                            ? r.rs.kind(ip, jp) == EntryKind::Zero
                            : r.rs.sameClass(ipr, jpr, ip, jp);
          e.require(swapOk, "q(i',j) = q(i,j') missing");
          e.require(diagOk, "q(i',j') = q(i,j) missing");
        }
    }
  });

  criterion(2, "uniform cube is certified non-classical", [](Expect& e) {
    auto t0 = std::chrono::steady_clock::now();
    AnalysisResult r = run_analysis(cube_model(GaussianRational(1)));
    e.require(elapsed(t0) < 5.0, "analysis exceeded 5 s");
    e.require(r.cls.verdict != Verdict::Commutative, "verdict must not be Commutative");
    e.require(r.cls.disjointPair.has_value(), "disjoint automorphism search failed");
    e.require(r.cls.verification.has_value() && r.cls.verification->pass &&
                  r.cls.verification->tolerance == 1e-9,
              "certificate did not verify at 1e-9");
    e.require(r.cls.witness.has_value() && r.cls.witness->magnitude >= 1e-2,
              "commutator witness below 1e-2");
  });

  criterion(3, "zero-weight eight-vertex instance is the free product of two Z2 blocks",
            [](Expect& e) {
              PottsModel m = example2_model(GaussianRational(0), GaussianRational(1));
              AnalysisResult r = run_analysis(m);
              auto idx = [&](const char* l) { return m.indexOf(l); };
              auto blockOf = [](const std::string& l) {
                if (l == "1" || l == "2") return 0;
                if (l == "3" || l == "4") return 1;
                if (l == "5" || l == "6") return 2;
                return 3;
              };
              for (const char* a : {"1", "2", "3", "4", "5", "6", "7", "8"})
                for (const char* b : {"1", "2", "3", "4", "5", "6", "7", "8"}) {
                  EntryKind k = r.rs.kind(idx(a), idx(b));
                  e.require(k == (blockOf(a) == blockOf(b) ? EntryKind::Var : EntryKind::Zero),
                            std::string("block pattern broken at q(") + a + "," + b + ")");
                }
              for (auto [a, b] : {std::pair{"2", "1"}})
                e.require(r.rs.sameClass(idx("1"), idx("2"), idx(a), idx(b)),
                          "p block merge missing");
              for (auto [a, b] :
                   {std::pair{"4", "3"}, {"5", "6"}, {"6", "5"}, {"7", "8"}, {"8", "7"}})
                e.require(r.rs.sameClass(idx("3"), idx("4"), idx(a), idx(b)),
                          "q block merge missing");
              e.require(r.rs.sameClass(idx("1"), idx("1"), idx("2"), idx("2")),
                        "p complement merge missing");
              e.require(r.pres.freeVarCount == 2, "expected exactly two projection variables");
              e.require(r.pres.grid[r.rs.entryId(idx("1"), idx("1"))] == "1-p" &&
                            r.pres.grid[r.rs.entryId(idx("1"), idx("2"))] == "p" &&
                            r.pres.grid[r.rs.entryId(idx("3"), idx("4"))] == "q" &&
                            r.pres.grid[r.rs.entryId(idx("7"), idx("7"))] == "1-q",
                        "grid does not show the displayed block matrix");
              e.require(r.cls.verdict == Verdict::Quantum, "verdict not Quantum");
              e.require(r.cls.structureHint && *r.cls.structureHint == "C(Z2) * C(Z2)",
                        "structure hint mismatch");
              e.require(r.cls.verification && r.cls.verification->maxResidual() < 1e-12,
                        "certificate residuals not below 1e-12");
            });

  criterion(4, "uniform eight-vertex control keeps Z2 x Z2 and is never called quantum",
            [](Expect& e) {
              AnalysisResult r = run_analysis(example2_model(GaussianRational(1), GaussianRational(1)));
              e.require(r.aut.order == 4, "classical order is not 4");
              e.require(r.aut.generators.size() == 2, "expected two generators");
              for (const Permutation& g : r.aut.generators)
                e.require(g.order() == 2, "generator is not an involution");
              if (r.aut.generators.size() == 2) {
                const Permutation &a = r.aut.generators[0], &b = r.aut.generators[1];
                e.require(a.after(b) == b.after(a), "generators do not commute");
              }
              e.require(r.cls.verdict != Verdict::Quantum, "control must not be Quantum");
            });

  criterion(5, "form-versus-hamiltonian identity on random models", [](Expect& e) {
    auto t0 = std::chrono::steady_clock::now();
    ModelGen gen(211);
    for (int t = 0; t < 50; ++t) {
      int q = t % 2 == 0 ? 2 : 3;
      PottsModel m = gen.random(5, q, false);
      for_each_configuration(m.n(), q, [&](const Configuration& omega) {
        auto lifted = lift_configuration(m, omega);
        if (!(bilinear_form(m, lifted, lifted) == hamiltonian(m, omega)))
          e.require(false, "identity violated");
      });
    }
    e.require(elapsed(t0) < 10.0, "suite exceeded 10 s");
  });

  criterion(6, "preservation equals coupling commutation over entire symmetric groups",
            [](Expect& e) {
              auto t0 = std::chrono::steady_clock::now();
              ModelGen gen(223);
              for (int t = 0; t < 20; ++t) {
                PottsModel m = gen.random(6, 2, t % 4 == 0);
                std::vector<int> img(m.n());
                for (int i = 0; i < m.n(); ++i) img[i] = i;
                do {
                  Permutation sigma(img);
                  if (check_preservation(m, sigma) != commutes_with_coupling(m, sigma))
                    e.require(false, "equivalence violated");
                } while (std::next_permutation(img.begin(), img.end()));
              }
              e.require(elapsed(t0) < 60.0, "suite exceeded 60 s");
            });

  criterion(7, "every classical automorphism satisfies every fixpoint relation exactly",
            [](Expect& e) {
              for (const PottsModel& m : soundness_pool()) {
                RelationSet rs = RelationSet::init(m);
                rs.addCommutantIdentities(m);
                rs.propagate();
                AutGroup g = automorphisms(m);
                if (!g.elements) {
                  e.require(false, "group not enumerable");
                  continue;
                }
                for (const Permutation& s : *g.elements) {
                  VerifyReport vr = verify_numeric_rep(m, rs, classical_rep(m, s), 1e-9);
                  if (!(vr.exactMode && vr.pass && vr.maxResidual() == 0.0)) {
                    e.require(false, "violation on a model with n=" + std::to_string(m.n()));
                    break;
                  }
                }
              }
            });

  criterion(8, "search and brute-force automorphism oracles agree as element sets",
            [](Expect& e) {
              for (const PottsModel& m : soundness_pool()) {
                if (m.n() > 8) continue;
                AutGroup fast = automorphisms(m);
                AutGroup slow = brute_force_automorphisms(m);
                if (!fast.elements || !slow.elements) {
                  e.require(false, "element enumeration missing");
                  continue;
                }
                if (!(fast.order == slow.order && *fast.elements == *slow.elements))
                  e.require(false, "oracle mismatch on a model with n=" + std::to_string(m.n()));
              }
            });

  criterion(9, "spectrum and partition cross-checks", [](Expect& e) {
    EnergySpectrum tri = energy_spectrum(triangle_model());
    e.require(tri.entries.size() == 2 && tri.entries[0].first == GaussianRational(2) &&
                  tri.entries[0].second == 6 && tri.entries[1].first == GaussianRational(6) &&
                  tri.entries[1].second == 2,
              "triangle spectrum mismatch");
    ModelGen gen(307);
    for (int t = 0; t < 20; ++t) {
      int q = 2 + t % 2;
      PottsModel m = gen.random(4, q, false, true);
      EnergySpectrum s = energy_spectrum(m);
      std::uint64_t expect = 1;
      for (int i = 0; i < m.n(); ++i) expect *= q;
      double z0 = partition_function(s, 0.0).real();
      e.require(std::abs(z0 - static_cast<double>(expect)) < 1e-12, "Z(0) != q^n");
      for (double beta : {0.0, 0.5, 1.0}) {
        double direct = 0.0;
        for_each_configuration(m.n(), q, [&](const Configuration& omega) {
          direct += std::exp(-beta * hamiltonian(m, omega).reDouble());
        });
        if (std::abs(partition_function(s, beta).real() - direct) >= 1e-12)
          e.require(false, "partition mismatch vs direct summation");
      }
    }
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
