#include <algorithm>
#include <optional>

#include "doctest.h"
#include "support.hpp"

using namespace testing;

namespace {

bool eq1_holds(const PolygonDomain& p) {
  if (multiply(std::span<const Word>(p.sides())) != p.context().boundary_inverse()) return false;
  for (int i = 1; i <= p.size(); ++i)
    if (p.side(p.partner(i)) != invert(p.side(i))) return false;
  const BigInt det = abelian_determinant(p);
  return det == 1 || det == -1;
}

// The cut-and-paste of a general cut-slide done by hand: the sides i..j
// collapse to their product d, and the partner of c_i (First) or c_j (Second)
// is replaced by the remaining sides of the cut piece.
std::vector<Word> direct_cut_slide_sides(const PolygonDomain& p, int i, int j, Attach attach) {
  Word d;
  for (int k = i; k <= j; ++k) d = multiply(d, p.side(k));
  std::vector<Word> piece;
  const int glued = attach == Attach::First ? i : j;
  const int target = p.partner(glued);
  if (attach == Attach::First) {
    for (int k = i + 1; k <= j; ++k) piece.push_back(p.side(k));
    piece.push_back(invert(d));
  } else {
    piece.push_back(invert(d));
    for (int k = i; k < j; ++k) piece.push_back(p.side(k));
  }
  std::vector<Word> out;
  for (int k = 1; k <= p.size(); ++k) {
    if (k == i) out.push_back(d);
    if (k >= i && k <= j) continue;
    if (k == target)
      out.insert(out.end(), piece.begin(), piece.end());
    else
      out.push_back(p.side(k));
  }
  return out;
}

}  // namespace

TEST_CASE("triangle moves on the standard torus") {
  const PolygonDomain ps = standard_domain(GenusContext(1));
  CHECK(apply_move(ps, {1, Attach::First}) == twisted_torus());
  CHECK(apply_move(ps, {2, Attach::First}) ==
        domain(1, {"b1", "a1 B1", "B1", "b1 A1"}, {3, 4, 1, 2}));
  CHECK(apply_move(twisted_torus(), {2, Attach::Second}) == ps);
  CHECK_THROWS_AS(apply_move(ps, {4, Attach::First}), Error);
  CHECK_THROWS_AS(apply_move(ps, {0, Attach::Second}), Error);
}

TEST_CASE("move text") {
  const TriangleCSMove m{3, Attach::Second};
  CHECK(to_string(m) == "cs(3, second)");
  CHECK(parse_move("cs(3, second)") == m);
  CHECK(parse_move(" cs( 12 ,first ) ") == TriangleCSMove{12, Attach::First});
  CHECK_THROWS_AS(parse_move("cs(3)"), Error);
  CHECK_THROWS_AS(parse_move("cs(x, first)"), Error);
}

TEST_CASE("enumeration") {
  for (int g = 1; g <= 3; ++g) {
    const PolygonDomain p = random_domain(g, 10, g);
    CHECK(enumerate_moves(p).size() == static_cast<std::size_t>(2 * (4 * g - 1)));
  }
  const PolygonDomain ps = standard_domain(GenusContext(1));
  for (TriangleCSMove m : enumerate_moves(ps)) CHECK(validate(apply_move(ps, m)).ok());
}

TEST_CASE("inverse moves undo, checked against exhaustive search") {
  const PolygonDomain ps = standard_domain(GenusContext(1));
  CHECK(invert_move(ps, {1, Attach::First}) == TriangleCSMove{2, Attach::Second});
  for (int g = 1; g <= 3; ++g)
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const PolygonDomain p = random_domain(g, 25, seed);
      for (TriangleCSMove m : enumerate_moves(p)) {
        const PolygonDomain q = apply_move(p, m);
        const TriangleCSMove back = invert_move(p, m);
        CHECK(apply_move(q, back) == p);
        int restoring = 0;
        for (TriangleCSMove c : enumerate_moves(q)) restoring += apply_move(q, c) == p;
        CHECK(restoring == 1);
        CHECK(apply_move(p, invert_move(q, back)) == q);
      }
    }
}

TEST_CASE("moves preserve the domain invariants and change length by twice the label change") {
  for (int g = 1; g <= 3; ++g)
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const PolygonDomain p = random_domain(g, 20, 100 + seed);
      for (TriangleCSMove m : enumerate_moves(p)) {
        const PolygonDomain q = apply_move(p, m);
        CHECK(eq1_holds(q));
        CHECK(validate(q).ok());
        const Word d = multiply(p.side(m.i), p.side(m.i + 1));
        const Word& replaced = m.attach == Attach::First ? p.side(m.i) : p.side(m.i + 1);
        CHECK(static_cast<long>(q.length()) - static_cast<long>(p.length()) ==
              2 * (static_cast<long>(d.length()) - static_cast<long>(replaced.length())));
      }
    }
}

TEST_CASE("induced substitutions") {
  const PolygonDomain ps = standard_domain(GenusContext(1));
  const NielsenStep s = induced_substitution(ps, {1, Attach::First});
  CHECK(ps.context().format(s.removed_label) == "b1");
  CHECK(ps.context().format(s.added_label) == "b1 a1");
  CHECK(format(s.new_in_old[0]) == "x1 x2");
  CHECK(format(s.new_in_old[1]) == "x2");

  const PolygonDomain t = twisted_torus();
  const NielsenStep back = induced_substitution(t, {2, Attach::Second});
  CHECK(t.context().format(back.removed_label) == "b1 a1");
  CHECK(format(back.new_in_old[0]) == "x1 x2^-1");

  // Substituting the old generators by their expressions must give the new
  // arcs, and the two directions are mutually inverse.
  for (int g = 1; g <= 3; ++g)
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      const PolygonDomain p = random_domain(g, 20, 500 + seed);
      const CGSet old_cg = cg_set(p);
      for (TriangleCSMove m : enumerate_moves(p)) {
        const NielsenStep st = induced_substitution(p, m);
        const CGSet new_cg = cg_set(apply_move(p, m));
        for (std::size_t k = 0; k < new_cg.arcs.size(); ++k)
          CHECK(evaluate(st.new_in_old[k], old_cg.arcs) == new_cg.arcs[k]);
        for (std::size_t k = 0; k < old_cg.arcs.size(); ++k)
          CHECK(evaluate(st.old_in_new[k], new_cg.arcs) == old_cg.arcs[k]);
        int changed = 0;
        for (std::size_t k = 0; k < st.new_in_old.size(); ++k)
          changed += st.new_in_old[k].length() != 1;
        CHECK(changed == 1);
      }
    }
}

TEST_CASE("paths compose their substitutions") {
  for (int g = 1; g <= 2; ++g)
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const RandomWalk w = random_walk(standard_domain(GenusContext(g)), 15, seed);
      const std::vector<BasisWord> composed = compose_old_in_new(w.path);
      const CGSet base = cg_set(w.path.base), end = cg_set(w.domain);
      for (std::size_t k = 0; k < base.arcs.size(); ++k)
        CHECK(evaluate(composed[k], end.arcs) == base.arcs[k]);
      CHECK(reverse(w.path).endpoint() == w.path.base);
    }
}

TEST_CASE("inapplicable paths report the prefix") {
  const PolygonDomain ps = standard_domain(GenusContext(1));
  CSPath path{ps, {{1, Attach::First}, {7, Attach::First}}};
  try {
    path.domains();
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InapplicableMove);
    CHECK(std::string(e.what()).find("prefix length 1") != std::string::npos);
  }
}

TEST_CASE("general cut-slides") {
  const PolygonDomain ps = standard_domain(GenusContext(1));
  const CutSlideResult one = general_cut_slide(ps, 1, 2, Attach::First);
  CHECK(one.moves.size() == 1);
  CHECK(one.domain == apply_move(ps, {1, Attach::First}));
  CHECK_THROWS_AS(general_cut_slide(ps, 2, 2, Attach::First), Error);

  int checked = 0;
  for (int g = 1; g <= 2; ++g)
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const PolygonDomain p = random_domain(g, 15, 900 + seed);
      for (int i = 1; i <= p.size(); ++i)
        for (int j = i + 1; j <= p.size(); ++j)
          for (Attach a : {Attach::First, Attach::Second}) {
            std::optional<CutSlideResult> found;
            try {
              found = general_cut_slide(p, i, j, a);
            } catch (const Error& e) {
              CHECK(e.kind() == ErrorKind::InvalidSpan);
              const int target = p.partner(a == Attach::First ? i : j);
              CHECK((target >= i && target <= j));
              continue;
            }
            const CutSlideResult& r = *found;
            ++checked;
            CHECK(r.domain.sides() == direct_cut_slide_sides(p, i, j, a));
            CHECK(CSPath{p, r.moves}.endpoint() == r.domain);
            CHECK(validate(r.domain).ok());
          }
    }
  CHECK(checked > 100);
}
