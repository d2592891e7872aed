#include "pottsym/oracle.hpp"

#include <cmath>
#include <map>

namespace pottsym {

namespace {

void check_configuration(const PottsModel& model, const Configuration& omega) {
  if (static_cast<int>(omega.spins.size()) != model.n())
    throw InputError("configuration length does not match vertex count");
  for (int s : omega.spins)
    if (s < 0 || s >= model.q())
      throw InputError("spin value " + std::to_string(s) + " out of range for q=" +
                       std::to_string(model.q()));
}

struct WeightedEdge {
  int u, v;
  int color;  // index into values
};

// The nonzero-coupling edges grouped by exact value; zero weights drop out of
// every energy sum.
struct EdgeColors {
  std::vector<WeightedEdge> edges;
  std::vector<GaussianRational> values;
};

EdgeColors nonzero_edges(const PottsModel& model) {
  EdgeColors ec;
  std::map<GaussianRational, int> ids;
  for (const Edge& e : model.edges()) {
    const GaussianRational& w = model.J(e.u, e.v);
    if (w.isZero()) continue;
    auto it = ids.find(w);
    if (it == ids.end()) {
      it = ids.emplace(w, static_cast<int>(ec.values.size())).first;
      ec.values.push_back(w);
    }
    ec.edges.push_back({e.u, e.v, it->second});
  }
  return ec;
}

// Energy from per-color agreement counts over undirected edges; the factor 2
// realizes the ordered-pair sum.
GaussianRational energy_from_counts(const EdgeColors& ec, const std::vector<int>& counts) {
  GaussianRational h;
  for (size_t c = 0; c < ec.values.size(); ++c) {
    if (counts[c] == 0) continue;
    h += GaussianRational(Rational(2 * counts[c])) * ec.values[c];
  }
  return h;
}

// Walks all q^n configurations, updating per-color agreement counts digit by
// digit and invoking visit(counts) once per configuration.
template <typename Visit>
void enumerate_counts(const PottsModel& model, const EdgeColors& ec, Visit visit) {
  int n = model.n(), q = model.q();
  std::vector<std::vector<std::pair<int, int>>> incident(n);  // vertex -> (other, color)
  for (const auto& e : ec.edges) {
    incident[e.u].push_back({e.v, e.color});
    incident[e.v].push_back({e.u, e.color});
  }
  std::vector<int> spins(n, 0);
  std::vector<int> counts(ec.values.size(), 0);
  for (const auto& e : ec.edges) counts[e.color]++;  // all spins equal initially
  for (;;) {
    visit(counts);
    int v = 0;
    while (v < n) {
      for (const auto& [u, c] : incident[v])
        if (spins[u] == spins[v]) counts[c]--;
      spins[v]++;
      if (spins[v] == q) spins[v] = 0;
      for (const auto& [u, c] : incident[v])
        if (spins[u] == spins[v]) counts[c]++;
      if (spins[v] != 0) break;
      ++v;
    }
    if (v == n) break;
  }
}

}  // namespace

std::uint64_t enumeration_count(const PottsModel& model) {
  std::uint64_t total = 1;
  for (int i = 0; i < model.n(); ++i) {
    total *= static_cast<std::uint64_t>(model.q());
    if (total > kEnumerationLimit)
      throw GuardError("instance too large: q^n exceeds the enumeration limit (2^24)");
  }
  return total;
}

GaussianRational hamiltonian(const PottsModel& model, const Configuration& omega) {
  check_configuration(model, omega);
  GaussianRational h;
  for (const Edge& e : model.edges()) {
    if (omega.spins[e.u] == omega.spins[e.v]) {
      h += model.J(e.u, e.v);
      h += model.J(e.v, e.u);
    }
  }
  return h;
}

EnergySpectrum energy_spectrum(const PottsModel& model) {
  std::uint64_t total = enumeration_count(model);
  EdgeColors ec = nonzero_edges(model);
  std::map<std::vector<int>, std::uint64_t> byCounts;
  enumerate_counts(model, ec, [&](const std::vector<int>& counts) { byCounts[counts]++; });

  std::map<GaussianRational, std::uint64_t> byEnergy;
  for (const auto& [counts, mult] : byCounts) byEnergy[energy_from_counts(ec, counts)] += mult;

  EnergySpectrum s;
  s.totalConfigurations = total;
  for (const auto& [e, m] : byEnergy) s.entries.emplace_back(e, m);
  return s;
}

std::complex<double> partition_function(const EnergySpectrum& spectrum, double beta) {
  std::complex<double> z = 0.0;
  for (const auto& [energy, mult] : spectrum.entries) {
    double mag = std::exp(-beta * energy.reDouble());
    double phase = -beta * energy.imDouble();
    z += static_cast<double>(mult) * std::complex<double>(mag * std::cos(phase), mag * std::sin(phase));
  }
  return z;
}

std::complex<double> partition_function(const PottsModel& model, double beta) {
  if (!std::isfinite(beta)) throw InputError("beta must be finite");
  return partition_function(energy_spectrum(model), beta);
}

GroupAlgebraElement GroupAlgebraElement::star() const {
  int m = q();
  GroupAlgebraElement out(m);
  for (int g = 0; g < m; ++g) out.coeffs[g] = coeffs[(m - g) % m].conj();
  return out;
}

GroupAlgebraElement convolve(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.q() != b.q()) throw InputError("group algebra element length mismatch");
  int m = a.q();
  GroupAlgebraElement out(m);
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h) out.coeffs[(g + h) % m] += a.coeffs[g] * b.coeffs[h];
  return out;
}

GaussianRational bilinear_form(const PottsModel& model, const std::vector<GroupAlgebraElement>& F,
                               const std::vector<GroupAlgebraElement>& H) {
  int n = model.n();
  if (static_cast<int>(F.size()) != n || static_cast<int>(H.size()) != n)
    throw InputError("bilinear form arguments must assign one element per vertex");
  for (int i = 0; i < n; ++i)
    if (F[i].q() != model.q() || H[i].q() != model.q())
      throw InputError("group algebra element length mismatch");
  GaussianRational acc;
  for (const Edge& e : model.edges()) {
    const GaussianRational& w = model.J(e.u, e.v);
    if (w.isZero()) continue;
    acc += w * convolve(F[e.u].star(), H[e.v]).tau();
    acc += w * convolve(F[e.v].star(), H[e.u]).tau();
  }
  return acc;
}

std::vector<GroupAlgebraElement> lift_configuration(const PottsModel& model,
                                                    const Configuration& omega) {
  check_configuration(model, omega);
  std::vector<GroupAlgebraElement> out;
  out.reserve(model.n());
  for (int i = 0; i < model.n(); ++i) {
    GroupAlgebraElement e(model.q());
    e.coeffs[omega.spins[i]] = GaussianRational(1);
    out.push_back(std::move(e));
  }
  return out;
}

bool check_preservation(const PottsModel& model, const Permutation& sigma) {
  if (sigma.n() != model.n()) throw InputError("permutation size does not match vertex count");
  enumeration_count(model);
  EdgeColors ec = nonzero_edges(model);

  // Side-by-side model whose edges are the sigma-images; equal per-color
  // agreement counts for every configuration imply equal energies, and when
  // counts differ the exact sums decide.
  EdgeColors both = ec;
  int base = static_cast<int>(ec.values.size());
  for (size_t k = 0; k < ec.edges.size(); ++k) {
    WeightedEdge e = ec.edges[k];
    both.edges.push_back({sigma(e.u), sigma(e.v), base + e.color});
  }
  both.values.insert(both.values.end(), ec.values.begin(), ec.values.end());

  bool preserved = true;
  enumerate_counts(model, both, [&](const std::vector<int>& counts) {
    if (!preserved) return;
    for (int c = 0; c < base; ++c) {
      if (counts[c] != counts[base + c]) {
        GaussianRational lhs, rhs;
        for (int d = 0; d < base; ++d) {
          lhs += GaussianRational(Rational(counts[d])) * both.values[d];
          rhs += GaussianRational(Rational(counts[base + d])) * both.values[d];
        }
        if (lhs != rhs) preserved = false;
        return;
      }
    }
  });
  return preserved;
}

}  // namespace pottsym
