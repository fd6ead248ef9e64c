#include "fatnielsen/random_walk.hpp"

#include <optional>

#include "fatnielsen/errors.hpp"

namespace fatnielsen {

RandomWalk random_walk(const PolygonDomain& start, int steps, std::uint64_t seed) {
  if (steps < 0) throw Error(ErrorKind::PreconditionViolation, "steps must be >= 0");
  SplitMix64 rng(seed);
  RandomWalk walk{start, CSPath{start, {}}};
  std::optional<TriangleCSMove> undo;
  for (int s = 0; s < steps; ++s) {
    std::vector<TriangleCSMove> moves = enumerate_moves(walk.domain);
    if (undo) std::erase(moves, *undo);
    TriangleCSMove m = moves[rng.below(moves.size())];
    undo = invert_move(walk.domain, m);
    walk.domain = apply_move(walk.domain, m);
    walk.path.moves.push_back(m);
  }
  return walk;
}

}  // namespace fatnielsen
