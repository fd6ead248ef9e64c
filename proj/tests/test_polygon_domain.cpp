#include "doctest.h"
#include "support.hpp"

using namespace testing;

TEST_CASE("standard domain") {
  for (int g = 1; g <= 4; ++g) {
    const PolygonDomain p = standard_domain(GenusContext(g));
    CHECK(validate(p).ok());
    CHECK(p.length() == static_cast<std::size_t>(4 * g));
  }
  const PolygonDomain p = standard_domain(GenusContext(1));
  CHECK(p.context().format(p.side(1)) == "b1");
  CHECK(p.context().format(p.side(2)) == "a1");
  CHECK(p.context().format(p.side(3)) == "B1");
  CHECK(p.context().format(p.side(4)) == "A1");
  CHECK(p.pairing() == std::vector<int>{3, 4, 1, 2});
  CHECK(p.energy() == 10);
}

TEST_CASE("validation catches broken domains") {
  const PolygonDomain bad = domain(1, {"b1", "a1", "B1", "B1"}, {3, 4, 1, 2});
  const ValidationReport r = validate(bad);
  CHECK_FALSE(r.ok());
  CHECK(r.violations.size() >= 2);

  CHECK(validate(twisted_torus()).ok());

  CHECK_FALSE(validate(domain(1, {"b1", "B1", "a1", "A1"}, {2, 1, 4, 3})).ok());
}

TEST_CASE("mapping classes") {
  GenusContext g1(1);
  CHECK(from_mapping_class(MappingClass::identity(g1), g1) == standard_domain(g1));

  MappingClass twist = MappingClass::identity(g1);
  twist.beta_images[0] = W(g1, "b1 a1");
  CHECK(preserves_boundary(twist, g1));
  CHECK(from_mapping_class(twist, g1) == twisted_torus());

  const MappingClass twice = compose(twist, twist, g1);
  CHECK(from_mapping_class(twice, g1) ==
        domain(1, {"b1 a1 a1", "a1", "A1 A1 B1", "A1"}, {3, 4, 1, 2}));

  MappingClass broken = MappingClass::identity(g1);
  broken.alpha_images[0] = W(g1, "a1 a1");
  try {
    from_mapping_class(broken, g1);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BoundaryNotPreserved);
  }
}

TEST_CASE("twist compositions keep the domain valid") {
  GenusContext g1(1);
  MappingClass t1 = MappingClass::identity(g1), t2 = MappingClass::identity(g1);
  t1.beta_images[0] = W(g1, "b1 a1");
  t2.alpha_images[0] = W(g1, "a1 B1");
  CHECK(preserves_boundary(t2, g1));
  SplitMix64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    MappingClass phi = MappingClass::identity(g1);
    for (int k = 0; k < 6; ++k) phi = compose(rng.below(2) ? t1 : t2, phi, g1);
    CHECK(validate(from_mapping_class(phi, g1)).ok());
  }
}

TEST_CASE("balance classification") {
  const BalanceReport standard = balance_classify(standard_domain(GenusContext(1)));
  for (const SideBalance& s : standard.sides) CHECK(s.status == BalanceStatus::Neutral);

  const PolygonDomain p = twisted_torus();
  const BalanceReport r = balance_classify(p);
  const SideBalance& s2 = r.sides[1];
  REQUIRE(s2.unbalanced_right);
  CHECK(s2.status == BalanceStatus::UnbalancedRight);
  CHECK(s2.unbalanced_right->l.empty());
  CHECK(p.context().format(s2.unbalanced_right->y) == "A1");
  CHECK(p.context().format(s2.unbalanced_right->r) == "B1");
}

TEST_CASE("witnesses factor the sides they describe") {
  for (int g = 1; g <= 3; ++g)
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const PolygonDomain p = random_domain(g, 30, seed);
      const BalanceReport r = balance_classify(p);
      for (int i = 1; i <= p.size(); ++i) {
        const SideBalance& s = r.sides[i - 1];
        if (s.unbalanced_right) {
          const auto& w = *s.unbalanced_right;
          CHECK(multiply(w.l, invert(w.y)) == p.side(i));
          CHECK(multiply(w.y, w.r) == p.side(i + 1));
          CHECK(w.y.length() > w.l.length());
          CHECK(multiply(p.side(i), p.side(i + 1)).length() < p.side(i + 1).length());
        }
        if (s.unbalanced_left) {
          const auto& w = *s.unbalanced_left;
          CHECK(multiply(w.l, invert(w.x)) == p.side(i - 1));
          CHECK(multiply(w.x, w.r) == p.side(i));
          CHECK(w.x.length() > w.r.length());
          CHECK(multiply(p.side(i - 1), p.side(i)).length() < p.side(i - 1).length());
        }
        if (s.balanced) {
          const auto& w = *s.balanced;
          CHECK(p.side(i).length() % 2 == 0);
          CHECK(multiply(w.x, invert(w.y)) == p.side(i));
          CHECK(w.x.length() == w.y.length());
          CHECK(w.x != w.y);
          CHECK(multiply(w.l, invert(w.x)) == p.side(i - 1));
          CHECK(multiply(w.y, w.r) == p.side(i + 1));
        }
      }
    }
}

TEST_CASE("canonical arcs") {
  const PolygonDomain p = twisted_torus();
  const CGSet cg = cg_set(p);
  REQUIRE(cg.arcs.size() == 2);
  CHECK(p.context().format(cg.arcs[0]) == "b1 a1");
  CHECK(p.context().format(cg.arcs[1]) == "a1");
  CHECK(abelian_determinant(p) * abelian_determinant(p) == 1);
  CHECK(vertex_class_count(p) == 1);
}
