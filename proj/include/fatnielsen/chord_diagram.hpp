#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fatnielsen/cs_moves.hpp"

namespace fatnielsen {

// Linear chord diagram dual to a polygon domain: slot k on the core is side k,
// chords join paired slots, and the tail sits past slot 1 where c_0 was.
// Labels are optional; an unlabelled diagram has an empty label vector.
struct ChordDiagram {
  GenusContext context{1};
  std::vector<int> pairing;  // 1-based partner of each slot
  std::vector<Word> labels;

  int slots() const noexcept { return static_cast<int>(pairing.size()); }
  bool labelled() const noexcept { return !labels.empty(); }
  // Chords as (smaller slot, larger slot), sorted by the smaller slot.
  std::vector<std::pair<int, int>> chords() const;

  friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;
};

ChordDiagram to_chord_diagram(const PolygonDomain& p);
// Requires labels. Throws PreconditionViolation otherwise.
PolygonDomain from_chord_diagram(const ChordDiagram& d);

enum class SlideDirection { TowardTail, AwayFromTail };

const char* to_string(SlideDirection d);

// Sliding the endpoint at slot s along the chord at the neighbouring slot:
// toward the tail this is cs(s-1, first), away from it cs(s, second).
TriangleCSMove slide_move(const ChordDiagram& d, int slot, SlideDirection dir);

// Throws InvalidSlide when the neighbouring slot does not exist.
ChordDiagram chord_slide(const ChordDiagram& d, int slot, SlideDirection dir);

// Formats: "ascii", "dot", "svg". Throws UsageError on anything else.
std::string render(const ChordDiagram& d, std::string_view format);

}  // namespace fatnielsen
