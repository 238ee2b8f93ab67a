#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "kwb/chern.hpp"
#include "test_util.hpp"

using namespace kwb;

namespace {

const Window kW{-3, 3, -6, 6};

PerfObject random_object(std::mt19937& rng, int depth) {
  const int pick = depth <= 0 ? 0 : static_cast<int>(rng() % 4);
  switch (pick) {
    case 1:
      return PerfObject::shifted(random_object(rng, depth - 1),
                                 static_cast<int>(rng() % 7) - 3);
    case 2:
    case 3:
      return PerfObject::cone(random_object(rng, depth - 1),
                              random_object(rng, depth - 1));
    default:
      return PerfObject::generator("k");
  }
}

SparseVec random_vec(int dim, std::mt19937& rng) {
  SparseVec v;
  for (int i = 0; i < dim; ++i)
    if (rng() % 2) v[i] = Scalar(static_cast<int>(rng() % 11) - 5);
  return v;
}

int total_dim(const CyclicComplexWindow& cc, Bidegree total) {
  auto it = cc.slices.find(total);
  if (it == cc.slices.end() || it->second.empty()) return 0;
  return it->second.back().offset + it->second.back().dim;
}

}  // namespace

TEST_CASE("euler class follows the shift and cone rules") {
  const PerfObject k = PerfObject::generator("k");
  CHECK(euler_class(k).m == 1);
  CHECK(euler_class(PerfObject::shifted(k, 1)).m == -1);
  CHECK(euler_class(PerfObject::shifted(k, -2)).m == 1);
  const K0Class cone = euler_class(PerfObject::cone(k, PerfObject::shifted(k, 2)));
  CHECK(cone.m == 0);
  std::mt19937 rng(5);
  for (int t = 0; t < 100; ++t) {
    const PerfObject x = random_object(rng, 4);
    const int s = static_cast<int>(rng() % 9) - 4;
    const K0Class ex = euler_class(x);
    CHECK(euler_class(PerfObject::shifted(x, s)).m == (s % 2 ? -ex.m : ex.m));
    const PerfObject y = random_object(rng, 3);
    CHECK(euler_class(PerfObject::cone(x, y)).m == euler_class(y).m - ex.m);
  }
}

TEST_CASE("transport and transform commute over the euler class") {
  FinitenessReport fin;
  fin.weakly_adams_connected = Verdict::Holds;
  std::mt19937 rng(20260824);
  for (int t = 0; t < 50; ++t) {
    const PerfObject x = random_object(rng, 5);
    const K0Class via_objects = euler_class(koszul_transform(x));
    const K0Class via_classes = k0_transport(euler_class(x), fin);
    CHECK(via_objects.generator == via_classes.generator);
    CHECK(via_objects.m == via_classes.m);
  }
}

TEST_CASE("transport refuses without weak Adams connectivity") {
  FinitenessReport fin;
  fin.weakly_adams_connected = Verdict::Fails;
  fin.witness = "generator at Adams degree 0";
  CHECK_THROWS_AS(k0_transport({"k", 1}, fin), IdentityViolation);
  // unknown verdict is not an outright failure: transport proceeds
  fin.weakly_adams_connected = Verdict::Unknown;
  CHECK(k0_transport({"k", 2}, fin).m == 2);
}

TEST_CASE("degree-zero Chern classes are cycles with the requested multiplicity") {
  for (const std::string name : {"ground", "exterior1", "poly1"}) {
    const ExpandedAlgebra e = kwb::expand_presentation(kwbtest::corpus(name), kW);
    const MixedComplexWindow m = hochschild_mixed(e.algebra, kW);
    const CyclicComplexWindow neg = cyclic_complex(m, CyclicVariant::Negative);
    for (long mult : {1L, -3L, 0L}) {
      const CyclicClass c = chern0(neg, m, mult);
      CHECK(c.total == Bidegree{0, 0});
      Scalar sum(0);
      for (const auto& [i, v] : c.coords) sum += v;
      CHECK(sum == Scalar(mult));
      CHECK(vec_is_zero(neg.complex.diff_at(c.total).apply(c.coords)));
    }
    const CyclicCochainWindow cw = cyclic_cochain(e.algebra, kW);
    const CyclicClass phi = contravariant_chern0(cw, 2);
    CHECK(vec_is_zero(cw.cc.complex.diff_at(phi.total).apply(phi.coords)));
  }
}

TEST_CASE("the pairing is bilinear") {
  const ExpandedAlgebra e = kwbtest::expand("exterior1", kW);
  const MixedComplexWindow m = hochschild_mixed(e.algebra, kW);
  const CyclicComplexWindow neg = cyclic_complex(m, CyclicVariant::Negative);
  const CyclicCochainWindow cw = cyclic_cochain(e.algebra, kW);

  std::mt19937 rng(11);
  int exercised = 0;
  for (int h = -2; h <= 2; ++h)
    for (int a = -2; a <= 2; ++a) {
      const Bidegree xt{h, a};
      const Bidegree pt = -xt;
      const int xd = total_dim(neg, xt);
      const int pd = total_dim(cw.cc, pt);
      if (xd == 0 || pd == 0) continue;
      for (int t = 0; t < 10; ++t) {
        CyclicClass x1{xt, random_vec(xd, rng)}, x2{xt, random_vec(xd, rng)};
        CyclicClass p1{pt, random_vec(pd, rng)}, p2{pt, random_vec(pd, rng)};
        const Scalar c1(static_cast<int>(rng() % 9) - 4);
        const Scalar c2(static_cast<int>(rng() % 9) - 4);
        CyclicClass xs{xt, scaled(x1.coords, c1)};
        axpy(xs.coords, c2, x2.coords);
        CHECK(cyclic_pairing(cw, p1, neg, xs) ==
              c1 * cyclic_pairing(cw, p1, neg, x1) +
                  c2 * cyclic_pairing(cw, p1, neg, x2));
        CyclicClass ps{pt, scaled(p1.coords, c1)};
        axpy(ps.coords, c2, p2.coords);
        CHECK(cyclic_pairing(cw, ps, neg, x1) ==
              c1 * cyclic_pairing(cw, p1, neg, x1) +
                  c2 * cyclic_pairing(cw, p2, neg, x1));
        ++exercised;
      }
    }
  CHECK(exercised > 0);
}

TEST_CASE("cocycles annihilate boundaries") {
  for (const std::string name : {"exterior1", "poly1"}) {
    const ExpandedAlgebra e = kwb::expand_presentation(kwbtest::corpus(name), kW);
    const MixedComplexWindow m = hochschild_mixed(e.algebra, kW);
    const CyclicComplexWindow neg = cyclic_complex(m, CyclicVariant::Negative);
    const CyclicCochainWindow cw = cyclic_cochain(e.algebra, kW);
    const CyclicClass phi = contravariant_chern0(cw, 1);

    std::mt19937 rng(23);
    const Bidegree above{1, 0};
    const int yd = total_dim(neg, above);
    for (int t = 0; t < 25; ++t) {
      CyclicClass dy{{0, 0}, neg.complex.diff_at(above).apply(random_vec(yd, rng))};
      CHECK(cyclic_pairing(cw, phi, neg, dy) == Scalar(0));
    }
  }
}

TEST_CASE("the pairing intertwines the two differentials") {
  const ExpandedAlgebra e = kwbtest::expand("exterior1", kW);
  const MixedComplexWindow m = hochschild_mixed(e.algebra, kW);
  const CyclicComplexWindow neg = cyclic_complex(m, CyclicVariant::Negative);
  const CyclicCochainWindow cw = cyclic_cochain(e.algebra, kW);

  std::mt19937 rng(31);
  int exercised = 0;
  for (int h = -2; h <= 2; ++h)
    for (int a = -2; a <= 2; ++a) {
      const Bidegree u{h, a};            // cochain side
      const Bidegree xt = -u + Bidegree{1, 0};  // chain side, one degree up
      const int pd = total_dim(cw.cc, u);
      const int xd = total_dim(neg, xt);
      if (pd == 0 || xd == 0) continue;
      for (int t = 0; t < 10; ++t) {
        const CyclicClass phi{u, random_vec(pd, rng)};
        const CyclicClass x{xt, random_vec(xd, rng)};
        const CyclicClass dphi{u + Bidegree{-1, 0},
                               cw.cc.complex.diff_at(u).apply(phi.coords)};
        const CyclicClass dx{-u, neg.complex.diff_at(xt).apply(x.coords)};
        CHECK(cyclic_pairing(cw, dphi, neg, x) ==
              sign_pow(u.h) * cyclic_pairing(cw, phi, neg, dx));
        ++exercised;
      }
    }
  CHECK(exercised > 0);
}

TEST_CASE("the triangle closes with value m * m' and is reproducible") {
  for (const std::string name : {"ground", "exterior1"}) {
    const ExpandedAlgebra e = kwb::expand_presentation(kwbtest::corpus(name), kW);
    const FinitenessReport fin = classify_finiteness(e.pres);
    const TriangleReport r1 = loday_triangle_check(e.algebra, fin, kW);
    const TriangleReport r2 = loday_triangle_check(e.algebra, fin, kW);
    CHECK_MESSAGE(r1.pass, name);
    REQUIRE(r1.samples.size() == r2.samples.size());
    for (size_t i = 0; i < r1.samples.size(); ++i) {
      CHECK(r1.samples[i].direct == Scalar(r1.samples[i].m * r1.samples[i].mp));
      CHECK(r1.samples[i].direct == r2.samples[i].direct);
      CHECK(r1.samples[i].mirrored == r2.samples[i].mirrored);
    }
  }
}
