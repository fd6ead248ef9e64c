#include "fatnielsen/relations.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "fatnielsen/errors.hpp"

namespace fatnielsen {

const char* to_string(LoopClass c) {
  switch (c) {
    case LoopClass::Involution: return "I";
    case LoopClass::Commutation: return "C";
    case LoopClass::Triangle: return "T";
    case LoopClass::PentagonType: return "pentagon-type";
    case LoopClass::Unclassified: return "unclassified";
  }
  return "unclassified";
}

bool check_loop(const PolygonDomain& p, const std::vector<TriangleCSMove>& moves) {
  return CSPath{p, moves}.endpoint() == p;
}

std::vector<TriangleCSMove> triangle_relation(const PolygonDomain& p, int i) {
  std::vector<TriangleCSMove> moves;
  PolygonDomain current = p;
  int position = i;
  for (int step = 0; step < 3; ++step) {
    const TriangleCSMove m{position, Attach::First};
    const MoveLayout layout = plan_move(current.pairing(), m);
    // The triangle lands where the old c_{position+1} now sits.
    int landed = 0;
    for (std::size_t s = 0; s < layout.slots.size(); ++s)
      if (layout.slots[s].kind == SlotOrigin::Old && layout.slots[s].old_position == position + 1)
        landed = static_cast<int>(s) + 1;
    moves.push_back(m);
    current = apply_move(current, m);
    position = landed;
  }
  if (current != p)
    throw Error(ErrorKind::InternalInvariantViolation, "triangle relation does not close");
  return moves;
}

namespace {

bool supports_meet(const PolygonDomain& p, TriangleCSMove a, TriangleCSMove b) {
  const std::vector<int> sa = move_support(p, a);
  for (int x : move_support(p, b))
    if (std::find(sa.begin(), sa.end(), x) != sa.end()) return true;
  return false;
}

bool move_less(const TriangleCSMove& a, const TriangleCSMove& b) {
  if (a.i != b.i) return a.i < b.i;
  return a.attach == Attach::First && b.attach == Attach::Second;
}

bool sequence_less(const std::vector<TriangleCSMove>& a, const std::vector<TriangleCSMove>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), move_less);
}

}  // namespace

TriangleCSMove transport_move(const PolygonDomain& p, TriangleCSMove m1, TriangleCSMove m2) {
  if (supports_meet(p, m1, m2))
    throw Error(ErrorKind::PreconditionViolation, "moves " + to_string(m1) + " and " +
                                                      to_string(m2) + " touch a common side");
  const TriangleCSMove moved{map_position(p, m1, m2.i), m2.attach};
  const PolygonDomain after = apply_move(p, m1);
  if (map_position(p, m1, m2.i + 1) != moved.i + 1 ||
      move_target(after, moved) != map_position(p, m1, move_target(p, m2)))
    throw Error(ErrorKind::PreconditionViolation,
                "moves " + to_string(m1) + " and " + to_string(m2) + " interact after sliding");
  return moved;
}

bool commuting_pair(const PolygonDomain& p, TriangleCSMove m1, TriangleCSMove m2) {
  const PolygonDomain a = apply_move(apply_move(p, m1), transport_move(p, m1, m2));
  const PolygonDomain b = apply_move(apply_move(p, m2), transport_move(p, m2, m1));
  return a == b;
}

RelationLoop classify_loop(const PolygonDomain& p, std::vector<TriangleCSMove> moves) {
  RelationLoop loop{p, std::move(moves), LoopClass::Unclassified, {}};
  const auto& ms = loop.moves;
  const std::vector<PolygonDomain> domains = CSPath{p, ms}.domains();
  if (domains.back() != p)
    throw Error(ErrorKind::PreconditionViolation, "move sequence does not close up");

  std::vector<Word> constant = unoriented_arcs(p);
  std::vector<Word> all = constant;
  for (const PolygonDomain& d : domains) {
    std::vector<Word> arcs = unoriented_arcs(d), meet, join;
    std::set_intersection(constant.begin(), constant.end(), arcs.begin(), arcs.end(),
                          std::back_inserter(meet), EnergyLess{});
    std::set_union(all.begin(), all.end(), arcs.begin(), arcs.end(), std::back_inserter(join),
                   EnergyLess{});
    constant = std::move(meet);
    all = std::move(join);
  }
  std::set_difference(all.begin(), all.end(), constant.begin(), constant.end(),
                      std::back_inserter(loop.varying_arcs), EnergyLess{});

  switch (ms.size()) {
    case 2:
      if (ms[1] == invert_move(p, ms[0])) loop.kind = LoopClass::Involution;
      break;
    case 3: {
      const std::vector<TriangleCSMove> backwards = reverse(CSPath{p, ms}).moves;
      for (int i = 1; i < p.size(); ++i) {
        std::vector<TriangleCSMove> t;
        try {
          t = triangle_relation(p, i);
        } catch (const Error&) {
          continue;
        }
        if (t == ms || t == backwards) loop.kind = LoopClass::Triangle;
      }
      break;
    }
    case 4:
      for (TriangleCSMove m : enumerate_moves(p)) {
        if (supports_meet(p, ms[0], m)) continue;
        try {
          if (transport_move(p, ms[0], m) != ms[1]) continue;
          const TriangleCSMove first_again = transport_move(p, m, ms[0]);
          const auto undo = reverse(CSPath{p, {m, first_again}}).moves;
          if (undo[0] == ms[2] && undo[1] == ms[3]) loop.kind = LoopClass::Commutation;
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::PreconditionViolation) throw;
        }
      }
      break;
    case 5:
      if (static_cast<int>(constant.size()) == 2 * p.genus() - 2 && loop.varying_arcs.size() == 5)
        loop.kind = LoopClass::PentagonType;
      break;
    default:
      break;
  }
  return loop;
}

int max_loop_length(int genus) {
  if (genus == 1) return 6;
  if (genus == 2) return 5;
  return 4;
}

namespace {

void search(const PolygonDomain& base, const PolygonDomain& current, TriangleCSMove forbidden,
            int max_len, std::vector<TriangleCSMove>& trail,
            std::vector<std::vector<TriangleCSMove>>& found) {
  for (TriangleCSMove m : enumerate_moves(current)) {
    if (m == forbidden) continue;
    PolygonDomain next = apply_move(current, m);
    trail.push_back(m);
    if (next == base)
      found.push_back(trail);
    else if (static_cast<int>(trail.size()) < max_len)
      search(base, next, invert_move(current, m), max_len, trail, found);
    trail.pop_back();
  }
}

}  // namespace

std::vector<RelationLoop> find_loops(const PolygonDomain& p, int max_len) {
  if (max_len < 0) throw Error(ErrorKind::PreconditionViolation, "negative loop length");
  if (max_len > max_loop_length(p.genus()))
    throw Error(ErrorKind::SearchBudgetExceeded,
                "loop search at genus " + std::to_string(p.genus()) + " is limited to length " +
                    std::to_string(max_loop_length(p.genus())));

  const std::vector<TriangleCSMove> first = enumerate_moves(p);
  std::vector<std::vector<std::vector<TriangleCSMove>>> found(first.size());
  std::vector<std::exception_ptr> failures(first.size());
  if (max_len >= 1) {
    std::vector<std::thread> workers;
    for (std::size_t k = 0; k < first.size(); ++k) {
      workers.emplace_back([&, k] {
        try {
          const TriangleCSMove m = first[k];
          const PolygonDomain next = apply_move(p, m);
          std::vector<TriangleCSMove> trail{m};
          if (next == p)
            found[k].push_back(trail);
          else if (max_len > 1)
            search(p, next, invert_move(p, m), max_len, trail, found[k]);
          if (max_len >= 2) found[k].push_back({m, invert_move(p, m)});
        } catch (...) {
          failures[k] = std::current_exception();
        }
      });
    }
    for (auto& w : workers) w.join();
  }
  for (auto& f : failures)
    if (f) std::rethrow_exception(f);

  std::vector<std::vector<TriangleCSMove>> sequences;
  for (auto& part : found) sequences.insert(sequences.end(), part.begin(), part.end());
  std::sort(sequences.begin(), sequences.end(), sequence_less);
  std::vector<RelationLoop> loops;
  for (auto& s : sequences) loops.push_back(classify_loop(p, std::move(s)));
  return loops;
}

LoopCensus loop_census(const PolygonDomain& p, int max_len) {
  LoopCensus census;
  census.max_len = max_len;
  census.loops = find_loops(p, max_len);
  for (const RelationLoop& l : census.loops) {
    ++census.counts[l.kind];
    ++census.lengths[static_cast<int>(l.moves.size())];
  }
  return census;
}

}  // namespace fatnielsen
