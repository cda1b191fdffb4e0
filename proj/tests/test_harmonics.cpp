#include "doctest.h"

#include "calogero/harmonics.hpp"
#include "calogero/construct.hpp"

using namespace calogero;

namespace {

Params make_params(Family f, int n, Rational g0, Rational g1, Rational omega) {
  Params p;
  p.family = f;
  p.n = n;
  p.g0 = g0;
  p.g1 = g1;
  p.omega = omega;
  p.validate();
  return p;
}

Poly find_component(const HarmonicDecomposition& dec, int m) {
  for (const auto& t : dec.terms)
    if (t.m == m) return t.harmonic;
  throw std::runtime_error("component not present");
}

}  // namespace

TEST_CASE("deformed laplacian examples") {
  auto pa = make_params(Family::A, 2, rat(1), rat(0), rat(1));
  CHECK(apply_L(Poly::constant(2, rat(1)), pa).is_zero());
  Poly y2 = msym({2, 0}, 2) * rat(1, 4) + msym({1, 1}, 2);
  CHECK(apply_L(y2, pa).is_zero());
  auto p1 = make_params(Family::A, 1, rat(0), rat(0), rat(1));
  CHECK(apply_L(msym({2}, 1), p1) == Poly::constant(1, rat(2)));
}

TEST_CASE("radial polynomials from the equation") {
  auto pa = make_params(Family::A, 2, rat(3, 2), rat(0), rat(2));
  auto r0 = radial_poly(0, 3, pa);
  REQUIRE(r0.size() == 1);
  CHECK(r0[0] == 1);
  auto r1 = radial_poly(1, 0, pa);
  REQUIRE(r1.size() == 2);
  CHECK(r1[1] == 1);
  CHECK(r1[0] == -(Rational(1) + pa.g0) / pa.omega);

  auto p1 = make_params(Family::A, 1, rat(0), rat(0), rat(5));
  auto s1 = radial_poly(1, 0, p1);
  CHECK(s1[0] == rat(-1) / (2 * p1.omega));
}

TEST_CASE("worked decomposition at n=2") {
  auto pa = make_params(Family::A, 2, rat(1), rat(0), rat(3, 7));
  auto dec = decompose_harmonic({2, 0}, pa);
  REQUIRE(dec.terms.size() == 2);
  CHECK(find_component(dec, 0) == msym({2, 0}, 2) * rat(1, 4) + msym({1, 1}, 2));
  CHECK(find_component(dec, 1) == Poly::constant(2, rat(3, 4)));
  // R_1 = r^2 - 2/omega
  for (const auto& t : dec.terms)
    if (t.m == 1) {
      REQUIRE(t.radial.size() == 2);
      CHECK(t.radial[0] == rat(-2) / pa.omega);
    }
}

TEST_CASE("degree-one and empty cases") {
  auto pa = make_params(Family::A, 2, rat(2), rat(0), rat(1));
  auto dec1 = decompose_harmonic({1, 0}, pa);
  REQUIRE(dec1.terms.size() == 1);
  CHECK(dec1.terms[0].m == 0);
  CHECK(dec1.terms[0].harmonic == msym({1, 0}, 2));
  auto dec0 = decompose_harmonic({0, 0}, pa);
  REQUIRE(dec0.terms.size() == 1);
  CHECK(dec0.terms[0].harmonic == Poly::constant(2, rat(1)));
}

TEST_CASE("reconstruction and harmonicity over the grid") {
  for (const auto& g0 : {rat(0), rat(1, 2), rat(1), rat(2)}) {
    for (int n = 1; n <= 3; ++n) {
      auto pa = make_params(Family::A, n, g0, rat(0), rat(1));
      for (const auto& lam : partitions_leq_weight(n, 4))
        CHECK_NOTHROW(decompose_harmonic(lam, pa));  // asserts internally
      auto pb = make_params(Family::B, n, g0, rat(3, 2), rat(1));
      for (const auto& lam : partitions_leq_weight(n, 3))
        CHECK_NOTHROW(decompose_harmonic(lam, pb));
    }
  }
}

TEST_CASE("leading parts assemble the jack polynomial") {
  auto pa = make_params(Family::A, 3, rat(1, 2), rat(0), rat(1));
  Poly r2 = msym({2, 0, 0}, 3);
  for (const auto& lam : partitions_leq_weight(3, 4)) {
    auto dec = decompose_harmonic(lam, pa);
    Poly sum(3);
    for (const auto& t : dec.terms) {
      Poly piece = t.harmonic;
      for (int i = 0; i < t.m; ++i) piece = piece * r2;
      sum += piece;
    }
    CHECK(sum == jack_monic(lam, 3, pa.g0));
  }
  auto pb = make_params(Family::B, 2, rat(1), rat(1), rat(1));
  Poly r2b = msym({2, 0}, 2);
  for (const auto& lam : partitions_leq_weight(2, 3)) {
    auto dec = decompose_harmonic(lam, pb);
    Poly sum(2);
    for (const auto& t : dec.terms) {
      Poly piece = t.harmonic;
      for (int i = 0; i < t.m; ++i) piece = piece * r2b;
      sum += piece;
    }
    CHECK(sum == jack_monic(lam, 2, pb.g0).squared_vars());
  }
}

TEST_CASE("component counts respect the harmonic dimensions") {
  auto pa = make_params(Family::A, 3, rat(1), rat(0), rat(1));
  for (const auto& lam : partitions_leq_weight(3, 4)) {
    auto dec = decompose_harmonic(lam, pa);
    for (const auto& t : dec.terms)
      CHECK(dim_harmonic(weight(lam) - 2 * t.m, 3, Family::A) >= 1);
  }
  // Dunkl's dimension identity: sum of harmonic dims equals dim P_l
  for (int l = 0; l <= 6; ++l) {
    int total = 0;
    for (int m = 0; 2 * m <= l; ++m) total += dim_harmonic(l - 2 * m, 3, Family::A);
    CHECK(total == dim_homogeneous(l, 3));
    int totalB = 0;
    for (int m = 0; m <= l; ++m) totalB += dim_harmonic(l - m, 3, Family::B);
    CHECK(totalB == dim_homogeneous(l, 3));
  }
}

TEST_CASE("dunkl projection worked cases") {
  auto pa = make_params(Family::A, 2, rat(1), rat(0), rat(1));
  CHECK(dunkl_projection({1, 0}, 0, pa) == msym({1, 0}, 2));
  auto dec = decompose_harmonic({2, 0}, pa);
  CHECK(dunkl_projection({2, 0}, 0, pa) == find_component(dec, 0));
  CHECK(dunkl_projection({2, 0}, 1, pa) == find_component(dec, 1));
}

TEST_CASE("dunkl projection matches the linear-solve decomposition") {
  for (const auto& g0 : {rat(1, 2), rat(1)}) {
    auto pa = make_params(Family::A, 2, g0, rat(0), rat(1));
    for (const auto& lam : partitions_leq_weight(2, 4)) {
      auto dec = decompose_harmonic(lam, pa);
      for (const auto& t : dec.terms)
        CHECK(dunkl_projection(lam, t.m, pa) == t.harmonic);
    }
    auto pb = make_params(Family::B, 2, g0, rat(1), rat(1));
    for (const auto& lam : partitions_leq_weight(2, 3)) {
      auto dec = decompose_harmonic(lam, pb);
      for (const auto& t : dec.terms)
        CHECK(dunkl_projection(lam, t.m, pb) == t.harmonic);
    }
  }
}
