#pragma once

#include <optional>
#include <vector>

#include "fatnielsen/cs_moves.hpp"
#include "fatnielsen/errors.hpp"

namespace fatnielsen {

enum class Rationale { Unbalanced, Balanced };

const char* to_string(Rationale r);

// Raised when a non-standard domain offers no length- or energy-reducing move
// under the implemented conventions. Carries the offending domain.
class StuckDomainError : public Error {
 public:
  StuckDomainError(const std::string& what, PolygonDomain domain)
      : Error(ErrorKind::StuckDomain, what), domain_(std::move(domain)) {}

  const PolygonDomain& domain() const noexcept { return domain_; }

 private:
  PolygonDomain domain_;
};

struct MoveChoice {
  TriangleCSMove move;
  Rationale rationale = Rationale::Unbalanced;
  int side = 0;  // the unbalanced or balanced side that justified the move
};

// Length-reducing move on an unbalanced side if one exists (largest drop,
// then smallest index, then First), otherwise an energy-reducing move on the
// first balanced side.
MoveChoice select_move(const PolygonDomain& p);

struct ReductionStep {
  TriangleCSMove move;
  Rationale rationale = Rationale::Unbalanced;
  int side = 0;
  std::size_t length_before = 0;
  std::size_t length_after = 0;
  // Sign of ||P_after|| - ||P_before||; only measured on balanced steps (an
  // unbalanced step is certified by the length drop) and 0 otherwise.
  int energy_change = 0;
  NielsenStep nielsen;
};

struct ReductionTrace {
  PolygonDomain start;
  std::vector<ReductionStep> steps;
  PolygonDomain final_domain;

  CSPath path() const;
};

ReductionTrace reduce(const PolygonDomain& p);

// Path from one domain to another through the standard domain.
CSPath connect(const PolygonDomain& from, const PolygonDomain& to);

struct Factorization {
  ReductionTrace trace;
  // composed[k]: the k-th CG generator of the start domain written in the
  // standard generators sigma-ordered as (beta_g, alpha_g, beta_{g-1}, ...).
  std::vector<BasisWord> composed;
  // The automorphism recovered from the composed substitution.
  MappingClass recovered;
};

// Throws BoundaryNotPreserved, StuckDomain or CompositionMismatch.
Factorization factorize_mapping_class(const MappingClass& phi, const GenusContext& ctx);

}  // namespace fatnielsen
