#include <catch_amalgamated.hpp>

#include <sstream>

#include "fixtures.hpp"
#include "mtc/extension.hpp"
#include "mtc/free_fermion.hpp"

using namespace mtc;

namespace {

// Sector-1 Gauss sum recomputed straight from the graded base category.
Scalar sector1_gauss(const GradedData& g) {
  Scalar t(0);
  for (std::size_t x : g.labels_in(1)) t += g.dims[x] * g.dims[x] * g.base.twist(x);
  return t;
}

void require_balanced(const ExtensionData& e) {
  REQUIRE(e.dims[0] == e.dims[1]);
  REQUIRE(e.count(OrbitKind::Sector0) == e.count(OrbitKind::Q) + e.count(OrbitKind::MPair));
  Scalar t(0);
  for (const auto& o : e.objects)
    if (o.sector == 1) t += o.dim * o.dim * o.twist;
  REQUIRE(t == e.gauss);
}

}  // namespace

TEST_CASE("extend by 0 is the base table") {
  const GradedData f1 = ising_like(1);
  const ExtensionData e = extend(f1, 0);
  CHECK(e.name == "F_1");
  CHECK(e.objects.size() == 3);
  CHECK(same_objects(e, table_of(f1)));
  CHECK(e.gauss == gauss_sum(f1.base, 1));
  CHECK(e.gauss == sector1_gauss(f1));
}

TEST_CASE("extend(F_1, 1) splits sigma x sigma into an m-type pair") {
  const ExtensionData e = extend(ising_like(1), 1);
  CHECK(e.name == "F_1+V(1)");
  CHECK(e.source.l == 1);
  std::vector<const ExtensionObject*> twisted;
  for (const auto& o : e.objects)
    if (o.sector == 1) twisted.push_back(&o);
  REQUIRE(twisted.size() == 2);
  for (const auto* o : twisted) {
    CHECK(o->dim == Scalar(1));
    CHECK(o->twist == root_of_unity(1, 8));
    CHECK(o->kind == OrbitKind::MPair);
  }
  CHECK(twisted[0]->label == "sigma*sigma:0");
  CHECK(twisted[1]->label == "sigma*sigma:1");
  CHECK(same_objects(e, table_of(ising_like(2))));
}

TEST_CASE("extend(F_1, l) matches F_{l+1} for l = 1..15") {
  const GradedData f1 = ising_like(1);
  for (long l = 1; l <= 15; ++l) {
    INFO("l = " << l);
    const ExtensionData e = extend(f1, l);
    REQUIRE(same_objects(e, table_of(ising_like(l + 1))));
    require_balanced(e);
  }
}

TEST_CASE("dimension rules: 1/2 for q x q, full product otherwise") {
  // F_2 x F_1: m-pair (tw0, tw1) of dim 1 with sigma of dim sqrt2 gives one q object of dim sqrt2
  const ExtensionData e = extend(ising_like(2), 1);
  CHECK(e.count(OrbitKind::Q) == 1);
  CHECK(e.count(OrbitKind::MPair) == 0);
  for (const auto& o : e.objects)
    if (o.kind == OrbitKind::Q) {
      CHECK(o.dim == sqrt2());
      CHECK(o.label == "{tw0,tw1}*sigma");
    }
  // F_2 x F_2: two diagonal orbits of dim 1
  const ExtensionData e2 = extend(ising_like(2), 2);
  CHECK(e2.count(OrbitKind::MPair) == 1);
  CHECK(same_objects(e2, table_of(ising_like(4))));
}

TEST_CASE("Gauss ladder identity for l = 0..16") {
  for (long base : {1L, 16L}) {
    const GradedData g = ising_like(base);
    const Scalar t0 = gauss_sum(g.base, 1);
    for (long l = 0; l <= 16; ++l) {
      INFO("base F_" << base << " l = " << l);
      const ExtensionData e = extend(g, l);
      REQUIRE(e.gauss == root_of_unity(l, 16) * t0);
    }
  }
}

TEST_CASE("additivity: extend(extend(G, a), b) = extend(G, a + b)") {
  const GradedData f1 = ising_like(1);
  for (long a = 1; a <= 4; ++a)
    for (long b = 1; b <= 4; ++b) {
      INFO("a=" << a << " b=" << b);
      const ExtensionData twice = extend(extend(f1, a), b);
      REQUIRE(same_objects(twice, extend(f1, a + b)));
      REQUIRE(twice.source.l == a + b);
    }
}

TEST_CASE("period 16 and balance for every base F_a") {
  for (long a = 1; a <= 16; ++a) {
    const GradedData g = ising_like(a);
    INFO("a = " << a);
    REQUIRE(same_objects(extend(g, 16), table_of(g)));
    for (long l = 0; l <= 16; ++l) require_balanced(extend(g, l));
  }
}

TEST_CASE("sector 0 is copied verbatim") {
  const GradedData g = ising_like(3);
  const ExtensionData e = extend(g, 5);
  std::vector<std::string> want, got;
  for (std::size_t x : g.labels_in(0)) want.push_back(g.base.label(x));
  for (const auto& o : e.objects)
    if (o.sector == 0) got.push_back(o.label);
  CHECK(got == want);
}

TEST_CASE("extending a rank-9 product") {
  const ModularData f1 = ising_like(1).base;
  const ModularData p = deligne_product(f1, f1);
  const GradedData g = sector_grading(p, p.index_of("(psi,1)"));
  // three q-type sector-1 objects
  for (long l = 0; l <= 16; ++l) {
    const ExtensionData e = extend(g, l);
    require_balanced(e);
    REQUIRE(e.gauss == root_of_unity(l, 16) * gauss_sum(p, 1));
  }
  CHECK(same_objects(extend(g, 16), table_of(g)));
}

TEST_CASE("extend preconditions") {
  CHECK_THROWS_AS(extend(ising_like(1), -1), InputError);
  CHECK_THROWS_AS(extend(table_of(ising_like(1)), -1), InputError);
  // a graded category whose base is not modular
  const GradedData good = ising_like(2);
  GradedData bad = good;
  Matrix<Scalar> s = good.base.S();
  s(2, 3) = s(3, 2) = s(2, 2);
  bad.base = good.base.with_S(s).without_fusion();
  try {
    extend(bad, 1);
    FAIL("expected StructuralError");
  } catch (const StructuralError& e) {
    CHECK(std::string(e.what()).find("(a) base is modular") != std::string::npos);
  }
}

TEST_CASE("sixteen table over F_16 is the sixteen-fold way") {
  const SixteenTable t = sixteen_table(ising_like(16));
  REQUIRE(t.rows.size() == 16);
  CHECK(t.distinct);
  CHECK(t.ladder);
  for (long l = 0; l < 16; ++l) {
    CHECK(t.rows[l].gauss == Scalar(2) * root_of_unity(l, 16));
    CHECK(t.rows[l].dims[0] == Scalar(2));
    CHECK(t.rows[l].dims[1] == Scalar(2));
    CHECK(t.rows[l].sector0_orbits == 1);
    CHECK(t.rows[l].q_types + t.rows[l].m_pairs == 1);
    CHECK((t.rows[l].q_types == 1) == (l % 2 == 1));
  }
  std::ostringstream os;
  os << t;
  CHECK(os.str().find("distinct: yes") != std::string::npos);
}

TEST_CASE("sixteen table over F_1 is shifted by one step") {
  const GradedData g = ising_like(1);
  const SixteenTable t = sixteen_table(g);
  CHECK(t.distinct);
  CHECK(t.ladder);
  CHECK(t.rows[0].gauss == gauss_sum(g.base, 1));
  for (long l = 0; l < 16; ++l) CHECK(t.rows[l].gauss == Scalar(2) * root_of_unity(l + 1, 16));
}

TEST_CASE("sixteen table for toric code and semion squared") {
  const ModularData tc = fixtures::toric_code();
  const SixteenTable t = sixteen_table(sector_grading(tc, tc.index_of("f")));
  CHECK(t.distinct);
  CHECK(t.ladder);
  const ModularData ss = deligne_product(fixtures::semion(), fixtures::semion());
  const SixteenTable u = sixteen_table(sector_grading(ss, ss.index_of("(s,s)")));
  CHECK(u.distinct);
  CHECK(u.ladder);
  CHECK(u.rows[0].gauss == Scalar(2) * root_of_unity(4, 16));
}

TEST_CASE("profiles follow the object counts") {
  CHECK(profile_of(ising_like(1)) == StabilityProfile{1, 0});
  CHECK(profile_of(ising_like(2)) == StabilityProfile{0, 1});
  CHECK(profile_of(extend(ising_like(1), 1)) == StabilityProfile{0, 1});
  CHECK(profile_of(extend(ising_like(2), 1)) == StabilityProfile{1, 0});
}
