#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fatnielsen/word.hpp"

namespace fatnielsen {

// A polygon domain of the genus-g surface with one boundary component: the
// 4g non-boundary sides c_1..c_4g read clockwise after the boundary side c_0,
// together with the involution pairing identified sides. Positions are
// 1-based throughout the public interface.
class PolygonDomain {
 public:
  PolygonDomain(GenusContext ctx, std::vector<Word> sides, std::vector<int> pairing);

  const GenusContext& context() const noexcept { return ctx_; }
  int genus() const noexcept { return ctx_.genus(); }
  int size() const noexcept { return static_cast<int>(sides_.size()); }

  const Word& side(int pos) const { return sides_.at(pos - 1); }
  int partner(int pos) const { return pairing_.at(pos - 1); }
  const std::vector<Word>& sides() const noexcept { return sides_; }
  // pairing()[k] is the partner of position k+1.
  const std::vector<int>& pairing() const noexcept { return pairing_; }

  // |P|: total word length of the sides.
  std::size_t length() const;
  // ||P||: sum of side energies. Exact but quadratic in the side lengths; use
  // compare_energy for ordering.
  BigInt energy() const;

  friend bool operator==(const PolygonDomain& a, const PolygonDomain& b) {
    return a.ctx_ == b.ctx_ && a.sides_ == b.sides_ && a.pairing_ == b.pairing_;
  }

 private:
  GenusContext ctx_;
  std::vector<Word> sides_;
  std::vector<int> pairing_;
};

// Orders domains of the same genus by ||P|| in linear time.
std::strong_ordering compare_energy(const PolygonDomain& a, const PolygonDomain& b);

PolygonDomain standard_domain(const GenusContext& ctx);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty(); }
};

ValidationReport validate(const PolygonDomain& p);

// Number of vertex classes after the side identifications (1 for a domain
// whose corners all close up at the base point).
int vertex_class_count(const PolygonDomain& p);

// Canonical arc labels: one per pair, taken at the smaller position, ordered
// by that position.
struct CGSet {
  std::vector<Word> arcs;
  std::vector<int> first_position;  // position carrying arcs[k]
};

CGSet cg_set(const PolygonDomain& p);

// Arc index (0-based, in CG order) of the side at each position, and whether
// that side carries the canonical label (+1) or its inverse (-1).
struct ArcOccurrence {
  int arc = 0;
  int sign = 1;
};
std::vector<ArcOccurrence> arc_occurrences(const PolygonDomain& p);

// The CG arc labels with each arc oriented to its lower-energy label, sorted.
std::vector<Word> unoriented_arcs(const PolygonDomain& p);

// Exact determinant of the 2g x 2g abelianization matrix of the CG set.
BigInt abelian_determinant(const PolygonDomain& p);

// Automorphism given by the images of alpha_1..alpha_g, beta_1..beta_g.
struct MappingClass {
  std::vector<Word> alpha_images;
  std::vector<Word> beta_images;

  static MappingClass identity(const GenusContext& ctx);
};

Word apply_mapping(const MappingClass& phi, const GenusContext& ctx, const Word& w);
MappingClass compose(const MappingClass& outer, const MappingClass& inner,
                     const GenusContext& ctx);
bool preserves_boundary(const MappingClass& phi, const GenusContext& ctx);

// Sides phi(sigma_i) with the standard pairing. Throws BoundaryNotPreserved.
PolygonDomain from_mapping_class(const MappingClass& phi, const GenusContext& ctx);

enum class BalanceStatus { Neutral, UnbalancedRight, UnbalancedLeft, Balanced };

const char* to_string(BalanceStatus s);

// Reduced witness words. Unbalanced-right: c_i = l*inv(y), c_{i+1} = y*r.
// Unbalanced-left: c_{i-1} = l*inv(x), c_i = x*r. Balanced: c_i = x*inv(y),
// c_{i-1} = l*inv(x), c_{i+1} = y*r. Unused slots stay empty.
struct BalanceWitness {
  Word l, x, y, r;
};

// Classification of one side against its neighbours inside 1..4g. A side can
// be unbalanced on both sides at once; status reports the right one first.
struct SideBalance {
  BalanceStatus status = BalanceStatus::Neutral;
  std::size_t left_depth = 0;   // cancellation with c_{i-1}
  std::size_t right_depth = 0;  // cancellation with c_{i+1}
  std::optional<BalanceWitness> unbalanced_right;
  std::optional<BalanceWitness> unbalanced_left;
  std::optional<BalanceWitness> balanced;
};

struct BalanceReport {
  std::vector<SideBalance> sides;  // sides[k] describes position k+1
  bool any_unbalanced() const;
  bool any_balanced() const;
};

BalanceReport balance_classify(const PolygonDomain& p);

}  // namespace fatnielsen
