#pragma once

#include <array>
#include <vector>

#include "fatnielsen/cs_moves.hpp"
#include "fatnielsen/errors.hpp"

namespace fatnielsen {

// Dart 2a is arc a traversed along its label, dart 2a+1 against it.
using Dart = int;

constexpr int arc_of(Dart d) noexcept { return d >> 1; }
constexpr Dart reversed(Dart d) noexcept { return d ^ 1; }
constexpr Dart forward_dart(int arc) noexcept { return 2 * arc; }

// One-vertex triangulation of the genus-g surface with one boundary component,
// stored as a combinatorial map. Arc 0 is the boundary; its forward dart bounds
// a triangle and its reverse dart faces the outside. Every face lists its three
// darts in clockwise order, and the labels around a face multiply to 1.
class Triangulation {
 public:
  Triangulation(GenusContext ctx, std::vector<Word> labels,
                std::vector<std::array<Dart, 3>> faces);

  const GenusContext& context() const noexcept { return ctx_; }
  int arc_count() const noexcept { return static_cast<int>(labels_.size()); }
  int face_count() const noexcept { return static_cast<int>(faces_.size()); }

  const Word& label(int arc) const { return labels_.at(arc); }
  Word dart_label(Dart d) const;
  const std::vector<Word>& labels() const noexcept { return labels_; }
  const std::vector<std::array<Dart, 3>>& faces() const noexcept { return faces_; }

  // -1 for the outer boundary dart.
  int face_of(Dart d) const { return face_of_.at(d); }
  // Successor of d in its face.
  Dart next(Dart d) const;

 private:
  GenusContext ctx_;
  std::vector<Word> labels_;
  std::vector<std::array<Dart, 3>> faces_;
  std::vector<int> face_of_;
  std::vector<int> slot_of_;
};

std::vector<std::string> validate(const Triangulation& t);

// Equality of the labelled maps: compares the faces as cyclic triples of dart
// labels, so arc numbering and orientation do not matter.
bool same_triangulation(const Triangulation& a, const Triangulation& b);

// Corners at the base point, walked from the corner just after the boundary
// arc ends. Corner t sits between incoming[t] and next(incoming[t]); the arc
// end following corner t belongs to next(incoming[t]).
struct CornerOrder {
  std::vector<Dart> incoming;
  std::vector<int> corner_of_incoming;  // by dart, -1 if none
  std::vector<int> first_occurrence;    // by arc: first corner t whose outgoing dart is on the arc
};

CornerOrder corner_order(const Triangulation& t);

// Diagonals from the corner between c_0 and c_1. Arc 0 is the boundary, arcs
// 1..2g the CG arcs in canonical order, arcs 2g+1.. the diagonals
// delta_2..delta_{4g-1} with delta_k = c_1 ... c_k.
Triangulation fan_triangulate(const PolygonDomain& p);

struct GreedyResult {
  PolygonDomain domain;
  std::vector<int> order;         // non-boundary arcs in first-appearance order
  std::vector<bool> removed;      // by arc
};

GreedyResult greedy(const Triangulation& t);
PolygonDomain greedy_extract(const Triangulation& t);

// Local removal test: with tau the triangle right after the first occurrence
// of the arc at the base point and v the corner of tau opposite the arc, the
// arc is removed exactly when v comes after that occurrence.
bool locality_removed(const Triangulation& t, int arc);

// Replace the arc by the other diagonal of the quadrilateral formed by its two
// triangles. The arc keeps its number. Throws NotFlippable.
Triangulation diagonal_exchange(const Triangulation& t, int arc);

// Whether two arcs border a common triangle.
bool share_triangle(const Triangulation& t, int a, int b);

struct FlipPath {
  Triangulation base;
  std::vector<int> arcs;

  std::vector<Triangulation> triangulations() const;
  Triangulation endpoint() const;
};

// Flip arc1, arc2, arc1, arc2, arc1 for two arcs on exactly one common
// triangle. Throws NotPentagonConfiguration.
FlipPath pentagon_loop(const Triangulation& t, int arc1, int arc2);

class MultiArcDiscrepancyError : public Error {
 public:
  MultiArcDiscrepancyError(const std::string& what, PolygonDomain before, PolygonDomain after)
      : Error(ErrorKind::MultiArcDiscrepancy, what),
        before_(std::move(before)),
        after_(std::move(after)) {}

  const PolygonDomain& before() const noexcept { return before_; }
  const PolygonDomain& after() const noexcept { return after_; }

 private:
  PolygonDomain before_;
  PolygonDomain after_;
};

struct FlipTranslation {
  CSPath path;
  int cut_slide_steps = 0;  // arc replacements realized by one general cut-slide
  int connector_steps = 0;  // replacements routed through the standard domain
};

FlipTranslation translate_flips(const FlipPath& path);
CSPath flips_to_cs(const FlipPath& path);

}  // namespace fatnielsen
