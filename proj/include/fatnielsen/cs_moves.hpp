#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fatnielsen/polygon_domain.hpp"

namespace fatnielsen {

enum class Attach { First, Second };

// Cut the triangle spanned by sides i, i+1 along d = c_i * c_{i+1} and glue it
// back along the partner of c_i (First) or of c_{i+1} (Second).
struct TriangleCSMove {
  int i = 1;
  Attach attach = Attach::First;

  friend bool operator==(const TriangleCSMove&, const TriangleCSMove&) = default;
};

std::string to_string(const TriangleCSMove& m);     // "cs(3, first)"
TriangleCSMove parse_move(std::string_view text);   // throws ParseError

// Where each position of the post-move polygon comes from.
struct SlotOrigin {
  enum Kind { Old, Diagonal, DiagonalInverse } kind = Old;
  int old_position = 0;  // meaningful for Old
};

struct MoveLayout {
  std::vector<SlotOrigin> slots;
  std::vector<int> pairing;  // 1-based partners of the new positions
};

// Purely combinatorial part of a move: only the pairing is consulted. Throws
// InvalidMove when the index is out of range.
MoveLayout plan_move(std::span<const int> pairing, TriangleCSMove m);

// Position (in the current numbering) whose side is replaced by two new sides.
int move_target(const PolygonDomain& p, TriangleCSMove m);
// Positions touched by the move: {i, i+1, target}.
std::vector<int> move_support(const PolygonDomain& p, TriangleCSMove m);

PolygonDomain apply_move(const PolygonDomain& p, TriangleCSMove m);

// New position of an untouched side after the move.
int map_position(const PolygonDomain& p, TriangleCSMove m, int position);

std::vector<TriangleCSMove> enumerate_moves(const PolygonDomain& p);

// The move on apply_move(p, m) that restores p.
TriangleCSMove invert_move(const PolygonDomain& p, TriangleCSMove m);

// A free-group word over an abstract basis x_1..x_n; letters are signed and
// 1-based (-k is the inverse of x_k). Always reduced.
class BasisWord {
 public:
  BasisWord() = default;
  explicit BasisWord(std::vector<int> letters);
  static BasisWord generator(int k, int sign = 1);

  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }

  friend bool operator==(const BasisWord&, const BasisWord&) = default;

 private:
  std::vector<int> letters_;
};

BasisWord multiply(const BasisWord& u, const BasisWord& v);
BasisWord invert(const BasisWord& w);
// Replace x_k by images[k-1].
BasisWord substitute(const BasisWord& w, std::span<const BasisWord> images);
Word evaluate(const BasisWord& w, std::span<const Word> basis);
std::string format(const BasisWord& w, std::string_view name = "x");

// Change of CG basis caused by one move. Generators are numbered in the
// canonical order of the respective domain.
struct NielsenStep {
  int removed_arc = 0;  // 1-based index in the old CG basis
  int added_arc = 0;    // 1-based index in the new CG basis
  Word removed_label;
  Word added_label;
  std::vector<BasisWord> new_in_old;  // x'_k written in the old generators
  std::vector<BasisWord> old_in_new;  // x_k written in the new generators
  std::string description;            // new_in_old, e.g. "x1 -> x1 x2"
};

NielsenStep induced_substitution(const PolygonDomain& p, TriangleCSMove m);

struct CSPath {
  PolygonDomain base;
  std::vector<TriangleCSMove> moves;

  // All domains visited, base first. Throws InapplicableMove.
  std::vector<PolygonDomain> domains() const;
  PolygonDomain endpoint() const;
};

// The path traversed backwards: starts at endpoint(), ends at base.
CSPath reverse(const CSPath& path);

// Images of the base CG generators written in the CG generators of the
// endpoint, obtained by composing old_in_new along the path.
std::vector<BasisWord> compose_old_in_new(const CSPath& path);

struct CutSlideResult {
  PolygonDomain domain;
  std::vector<TriangleCSMove> moves;
};

// Cut the sub-polygon on sides i..j (1 <= i < j <= 4g) along c_i...c_j and
// glue it along the partner of c_i (First) or c_j (Second). The returned moves
// replay to the directly computed domain. Throws InvalidSpan.
CutSlideResult general_cut_slide(const PolygonDomain& p, int i, int j, Attach attach);

}  // namespace fatnielsen
