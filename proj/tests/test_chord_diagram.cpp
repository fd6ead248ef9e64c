#include <algorithm>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "fatnielsen/chord_diagram.hpp"

using namespace testing;

namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(FATNIELSEN_GOLDEN_DIR) + "/" + name);
  REQUIRE_MESSAGE(in, "missing golden file " << name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("diagram of the standard torus") {
  const ChordDiagram d = to_chord_diagram(standard_domain(GenusContext(1)));
  CHECK(d.slots() == 4);
  CHECK(d.chords() == std::vector<std::pair<int, int>>{{1, 3}, {2, 4}});
  CHECK(from_chord_diagram(d) == standard_domain(GenusContext(1)));

  const ChordDiagram t = to_chord_diagram(twisted_torus());
  CHECK(t.chords() == std::vector<std::pair<int, int>>{{1, 3}, {2, 4}});
  CHECK(t.context.format(t.labels[0]) == "b1 a1");
  CHECK(t.context.format(t.labels[2]) == "A1 B1");
}

TEST_CASE("round trip through the diagram") {
  for (int g = 1; g <= 3; ++g)
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const PolygonDomain p = random_domain(g, 20, seed);
      CHECK(from_chord_diagram(to_chord_diagram(p)) == p);
    }
  ChordDiagram bare = to_chord_diagram(standard_domain(GenusContext(1)));
  bare.labels.clear();
  CHECK_THROWS_AS(from_chord_diagram(bare), Error);
}

TEST_CASE("sliding slot 2 toward the tail is the first triangle move") {
  const PolygonDomain ps = standard_domain(GenusContext(1));
  const ChordDiagram d = to_chord_diagram(ps);
  CHECK(chord_slide(d, 2, SlideDirection::TowardTail) == to_chord_diagram(apply_move(ps, {1, Attach::First})));
}

TEST_CASE("slides and moves form a commuting square") {
  for (int g = 1; g <= 3; ++g)
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const PolygonDomain p = random_domain(g, 20, 60 + seed);
      const ChordDiagram d = to_chord_diagram(p);
      ChordDiagram bare = d;
      bare.labels.clear();
      for (int s = 1; s <= d.slots(); ++s)
        for (SlideDirection dir : {SlideDirection::TowardTail, SlideDirection::AwayFromTail}) {
          if ((s == 1 && dir == SlideDirection::TowardTail) ||
              (s == d.slots() && dir == SlideDirection::AwayFromTail)) {
            CHECK_THROWS_AS(chord_slide(d, s, dir), Error);
            continue;
          }
          const TriangleCSMove m = slide_move(d, s, dir);
          const ChordDiagram slid = chord_slide(d, s, dir);
          CHECK(slid == to_chord_diagram(apply_move(p, m)));
          CHECK(chord_slide(bare, s, dir).pairing == slid.pairing);
        }
    }
}

TEST_CASE("sliding back undoes a slide") {
  const PolygonDomain p = random_domain(2, 20, 9);
  const ChordDiagram d = to_chord_diagram(p);
  for (TriangleCSMove m : enumerate_moves(p)) {
    const int slot = m.attach == Attach::First ? m.i + 1 : m.i;
    const auto dir = m.attach == Attach::First ? SlideDirection::TowardTail : SlideDirection::AwayFromTail;
    const ChordDiagram slid = chord_slide(d, slot, dir);
    const TriangleCSMove back = invert_move(p, m);
    const int back_slot = back.attach == Attach::First ? back.i + 1 : back.i;
    const auto back_dir =
        back.attach == Attach::First ? SlideDirection::TowardTail : SlideDirection::AwayFromTail;
    CHECK(chord_slide(slid, back_slot, back_dir) == d);
  }
}

TEST_CASE("slides match the moves one for one on the standard torus") {
  const PolygonDomain ps = standard_domain(GenusContext(1));
  const ChordDiagram d = to_chord_diagram(ps);
  std::vector<ChordDiagram> from_slides, from_moves;
  for (int s = 1; s <= 4; ++s) {
    if (s > 1) from_slides.push_back(chord_slide(d, s, SlideDirection::TowardTail));
    if (s < 4) from_slides.push_back(chord_slide(d, s, SlideDirection::AwayFromTail));
  }
  for (TriangleCSMove m : enumerate_moves(ps)) from_moves.push_back(to_chord_diagram(apply_move(ps, m)));
  CHECK(from_slides.size() == from_moves.size());
  for (const ChordDiagram& x : from_slides) {
    CHECK(std::count(from_moves.begin(), from_moves.end(), x) == 1);
    CHECK(std::count(from_slides.begin(), from_slides.end(), x) == 1);
  }
}

TEST_CASE("ascii rendering of the standard torus is stable") {
  const ChordDiagram d = to_chord_diagram(standard_domain(GenusContext(1)));
  CHECK(render(d, "ascii") == golden("torus_standard.txt"));
}

TEST_CASE("svg and dot output") {
  for (int g = 1; g <= 3; ++g) {
    const ChordDiagram d = to_chord_diagram(random_domain(g, 10, g));
    const std::string svg = render(d, "svg");
    CHECK(count(svg, "<path ") == 2 * g);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(count(svg, "<svg ") == 1);
    CHECK(count(svg, "</svg>") == 1);
    // Every element is either self-closing or closed.
    CHECK(count(svg, "<text ") == count(svg, "</text>"));
    CHECK(svg == render(d, "svg"));

    const std::string dot = render(d, "dot");
    CHECK(dot.rfind("graph chord_diagram {", 0) == 0);
    CHECK(count(dot, "cyclic order") == d.slots());
    CHECK(count(dot, "style=bold") == d.slots() + 1);
  }
}

TEST_CASE("render rejects unknown formats") {
  const ChordDiagram d = to_chord_diagram(standard_domain(GenusContext(1)));
  for (const char* f : {"", "png"}) {
    try {
      render(d, f);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UsageError);
    }
  }
}
