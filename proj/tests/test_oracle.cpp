#include <cmath>

#include "doctest.h"
#include "pottsym/oracle.hpp"
#include "testutil.hpp"

using namespace pottsym;
using namespace testutil;

namespace {

// Test-side oracle: walks configurations as mixed-radix counters.
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

// Independent bilinear form: the expanded double sum over group elements.
GaussianRational bilinear_reference(const PottsModel& m, const std::vector<GroupAlgebraElement>& F,
                                    const std::vector<GroupAlgebraElement>& H) {
  GaussianRational acc;
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) {
      if (m.J(i, j).isZero()) continue;
      for (int g = 0; g < m.q(); ++g)
        acc += m.J(i, j) * F[i].coeffs[g].conj() * H[j].coeffs[g];
    }
  return acc;
}

}  // namespace

TEST_CASE("hamiltonian uses the ordered-pair convention") {
  PottsModel edge = single_edge_model();
  CHECK(hamiltonian(edge, {{0, 0}}) == GaussianRational(2));
  CHECK(hamiltonian(edge, {{0, 1}}).isZero());
  PottsModel k3 = triangle_model();
  CHECK(hamiltonian(k3, {{1, 1, 1}}) == GaussianRational(6));
  CHECK_THROWS_AS(hamiltonian(edge, {{0, 5}}), InputError);
  CHECK_THROWS_AS(hamiltonian(edge, {{0}}), InputError);
}

TEST_CASE("hamiltonian is invariant under spin relabeling") {
  ModelGen gen(17);
  std::mt19937 rng(18);
  for (int t = 0; t < 15; ++t) {
    int q = 2 + t % 3;
    PottsModel m = gen.random(5, q, true);
    std::vector<int> relabel(q);
    for (int g = 0; g < q; ++g) relabel[g] = g;
    std::shuffle(relabel.begin(), relabel.end(), rng);
    for_each_configuration(m.n(), q, [&](const Configuration& omega) {
      Configuration mapped = omega;
      for (int& s : mapped.spins) s = relabel[s];
      CHECK(hamiltonian(m, omega) == hamiltonian(m, mapped));
    });
  }
}

TEST_CASE("energy spectrum on the small instances") {
  EnergySpectrum tri = energy_spectrum(triangle_model());
  REQUIRE(tri.entries.size() == 2);
  CHECK(tri.entries[0].first == GaussianRational(2));
  CHECK(tri.entries[0].second == 6);
  CHECK(tri.entries[1].first == GaussianRational(6));
  CHECK(tri.entries[1].second == 2);

  EnergySpectrum sv = energy_spectrum(single_vertex_model(3));
  REQUIRE(sv.entries.size() == 1);
  CHECK(sv.entries[0].first.isZero());
  CHECK(sv.entries[0].second == 3);

  EnergySpectrum se = energy_spectrum(single_edge_model());
  REQUIRE(se.entries.size() == 2);
  CHECK(se.entries[0].first.isZero());
  CHECK(se.entries[0].second == 2);
  CHECK(se.entries[1].first == GaussianRational(2));
  CHECK(se.entries[1].second == 2);
}

TEST_CASE("spectrum multiplicities always sum to q^n") {
  ModelGen gen(19);
  for (int t = 0; t < 12; ++t) {
    int q = 2 + t % 3;
    PottsModel m = gen.random(6, q, false);
    EnergySpectrum s = energy_spectrum(m);
    std::uint64_t total = 0, expect = 1;
    for (const auto& [e, mult] : s.entries) total += mult;
    for (int i = 0; i < m.n(); ++i) expect *= q;
    CHECK(total == expect);
    CHECK(s.totalConfigurations == expect);
  }
}

TEST_CASE("the enumeration guard rejects oversized instances") {
  std::vector<std::string> labels;
  for (int i = 0; i < 30; ++i) labels.push_back("v" + std::to_string(i));
  PottsModel big = build_model(labels, {}, {}, GaussianRational(1), 2);
  CHECK_THROWS_AS(energy_spectrum(big), GuardError);
  CHECK_THROWS_AS(check_preservation(big, Permutation(30)), GuardError);
}

TEST_CASE("partition function values") {
  PottsModel k3 = triangle_model();
  CHECK(partition_function(k3, 0.0).real() == doctest::Approx(8.0).epsilon(1e-14));
  CHECK(partition_function(k3, 0.0).imag() == 0.0);
  double z1 = partition_function(k3, 1.0).real();
  CHECK(std::abs(z1 - (2 * std::exp(-6.0) + 6 * std::exp(-2.0))) < 1e-12);
  // Ground states of the single edge dominate at low temperature.
  CHECK(std::abs(partition_function(single_edge_model(), 50.0).real() - 2.0) < 1e-12);
}

TEST_CASE("partition function matches direct per-configuration summation") {
  // Nonnegative couplings keep every Boltzmann term at most 1, so the two
  // summation orders agree to well below the pinned tolerance.
  ModelGen gen(23);
  for (int t = 0; t < 10; ++t) {
    int q = 2 + t % 2;
    PottsModel m = gen.random(4, q, false, true);
    for (double beta : {0.0, 0.5, 1.0}) {
      double direct = 0.0;
      for_each_configuration(m.n(), q, [&](const Configuration& omega) {
        direct += std::exp(-beta * hamiltonian(m, omega).reDouble());
      });
      CHECK(std::abs(partition_function(m, beta).real() - direct) < 1e-12);
    }
  }
}

TEST_CASE("group algebra operations") {
  GroupAlgebraElement f(3);
  f.coeffs[1] = GaussianRational(Rational(1), Rational(2));  // (1+2i) chi_1
  GroupAlgebraElement s = f.star();
  CHECK(s.coeffs[2] == GaussianRational(Rational(1), Rational(-2)));
  CHECK(s.coeffs[1].isZero());
  GroupAlgebraElement g(3);
  g.coeffs[2] = GaussianRational(1);
  CHECK(convolve(f, g).coeffs[0] == f.coeffs[1]);  // chi_1 * chi_2 = chi_0
  CHECK(convolve(f, g).tau() == f.coeffs[1]);
}

TEST_CASE("lifting configurations to indicator elements") {
  PottsModel sv = single_vertex_model();
  auto lifted = lift_configuration(sv, {{0}});
  CHECK(lifted[0].coeffs[0] == GaussianRational(1));
  CHECK(lifted[0].coeffs[1].isZero());

  PottsModel edge = single_edge_model();
  auto two = lift_configuration(edge, {{1, 0}});
  CHECK(two[0].coeffs[1] == GaussianRational(1));
  CHECK(two[1].coeffs[0] == GaussianRational(1));
}

TEST_CASE("lift round trip recovers the configuration") {
  ModelGen gen(29);
  std::mt19937 rng(30);
  for (int t = 0; t < 10; ++t) {
    int q = 2 + t % 3;
    PottsModel m = gen.random(6, q, false);
    std::uniform_int_distribution<int> spin(0, q - 1);
    Configuration omega;
    for (int v = 0; v < m.n(); ++v) omega.spins.push_back(spin(rng));
    auto lifted = lift_configuration(m, omega);
    for (int v = 0; v < m.n(); ++v)
      for (int g = 0; g < q; ++g)
        CHECK(lifted[v].coeffs[g].isOne() == (omega.spins[v] == g));
  }
}

TEST_CASE("the form evaluated on a lifted configuration is the hamiltonian") {
  ModelGen gen(31);
  for (int t = 0; t < 8; ++t) {
    int q = 2 + t % 2;
    PottsModel m = gen.random(4, q, true);
    for_each_configuration(m.n(), q, [&](const Configuration& omega) {
      auto lifted = lift_configuration(m, omega);
      GaussianRational form = bilinear_form(m, lifted, lifted);
      CHECK(form == hamiltonian(m, omega));
      CHECK(form == bilinear_reference(m, lifted, lifted));
    });
  }
}

TEST_CASE("form edge cases") {
  PottsModel edge = single_edge_model();
  // tau kills elements supported away from the identity.
  std::vector<GroupAlgebraElement> F(2, GroupAlgebraElement(2)), H(2, GroupAlgebraElement(2));
  F[0].coeffs[0] = GaussianRational(1);
  H[1].coeffs[1] = GaussianRational(1);
  CHECK(bilinear_form(edge, F, H).isZero());

  // Both arguments supported on a single vertex: the zero diagonal kills it.
  std::vector<GroupAlgebraElement> G(2, GroupAlgebraElement(2));
  G[0].coeffs[0] = GaussianRational(1);
  CHECK(bilinear_form(edge, G, G).isZero());

  std::vector<GroupAlgebraElement> bad(1, GroupAlgebraElement(2));
  CHECK_THROWS_AS(bilinear_form(edge, bad, bad), InputError);
}

TEST_CASE("preservation checks on the worked examples") {
  PottsModel edge = single_edge_model();
  CHECK(check_preservation(edge, Permutation(2)));
  CHECK(check_preservation(edge, Permutation({1, 0})));

  PottsModel cube = cube_model(GaussianRational(2));
  CHECK(check_preservation(cube, Permutation(8)));
  Permutation rot = parse_cycles("(1 2 3 4)(1' 2' 3' 4')", cube.labels());
  CHECK_FALSE(check_preservation(cube, rot));
  CHECK_FALSE(commutes_with_coupling(cube, rot));
  Permutation refl = parse_cycles("(1 3)(1' 3')", cube.labels());
  CHECK(check_preservation(cube, refl));
}

TEST_CASE("preservation agrees with coupling commutation on all permutations") {
  ModelGen gen(37);
  for (int t = 0; t < 6; ++t) {
    PottsModel m = gen.random(5, 2, t % 2 == 1);
    std::vector<int> img(m.n());
    for (int i = 0; i < m.n(); ++i) img[i] = i;
    do {
      Permutation sigma(img);
      CHECK(check_preservation(m, sigma) == commutes_with_coupling(m, sigma));
    } while (std::next_permutation(img.begin(), img.end()));
  }
}
