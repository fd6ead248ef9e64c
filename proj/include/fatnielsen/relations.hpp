#pragma once

#include <map>
#include <vector>

#include "fatnielsen/cs_moves.hpp"

namespace fatnielsen {

enum class LoopClass { Involution, Commutation, Triangle, PentagonType, Unclassified };

const char* to_string(LoopClass c);  // "I", "C", "T", "pentagon-type", "unclassified"

struct RelationLoop {
  PolygonDomain base;
  std::vector<TriangleCSMove> moves;
  LoopClass kind = LoopClass::Unclassified;
  // Arc labels (orientation normalized) that change somewhere along the loop.
  std::vector<Word> varying_arcs;
};

// True iff replaying the moves from p returns exactly p. Throws
// InapplicableMove with the applicable prefix length.
bool check_loop(const PolygonDomain& p, const std::vector<TriangleCSMove>& moves);

// Cut triangle (i, i+1), glue it along the partner of c_i, cut it again and
// glue it along the partner of c_{i+1}, then cut it once more so that it
// returns to where it started. Three First moves.
std::vector<TriangleCSMove> triangle_relation(const PolygonDomain& p, int i);

// m2 as seen after m1 has been applied. Requires disjoint supports.
TriangleCSMove transport_move(const PolygonDomain& p, TriangleCSMove m1, TriangleCSMove m2);

// Whether m1 then m2 and m2 then m1 (each with renumbered indices) reach the
// same domain. Throws PreconditionViolation if the supports meet.
bool commuting_pair(const PolygonDomain& p, TriangleCSMove m1, TriangleCSMove m2);

// Classify a closed move sequence based at p.
RelationLoop classify_loop(const PolygonDomain& p, std::vector<TriangleCSMove> moves);

// Longest search allowed: 6 at genus 1, 5 at genus 2, 4 above.
int max_loop_length(int genus);

// Every loop at p of length <= max_len that does not immediately undo a move,
// plus the length-2 involution loops. A loop ends the first time it returns
// to p. Sorted by length, then by move sequence. Throws SearchBudgetExceeded.
std::vector<RelationLoop> find_loops(const PolygonDomain& p, int max_len);

struct LoopCensus {
  int max_len = 0;
  std::map<LoopClass, int> counts;
  std::map<int, int> lengths;  // loop length -> count
  std::vector<RelationLoop> loops;
};

LoopCensus loop_census(const PolygonDomain& p, int max_len);

}  // namespace fatnielsen
