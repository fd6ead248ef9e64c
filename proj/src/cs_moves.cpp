#include "fatnielsen/cs_moves.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "fatnielsen/errors.hpp"

namespace fatnielsen {

std::string to_string(const TriangleCSMove& m) {
  return "cs(" + std::to_string(m.i) + ", " +
         (m.attach == Attach::First ? "first" : "second") + ")";
}

TriangleCSMove parse_move(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto fail = [&] {
    return Error(ErrorKind::ParseError, "malformed move '" + std::string(text) + "'");
  };
  if (s.rfind("cs(", 0) != 0 || s.back() != ')') throw fail();
  auto comma = s.find(',');
  if (comma == std::string::npos) throw fail();
  std::string num = s.substr(3, comma - 3);
  std::string att = s.substr(comma + 1, s.size() - comma - 2);
  if (num.empty() || !std::all_of(num.begin(), num.end(), ::isdigit) || num.size() > 6)
    throw fail();
  TriangleCSMove m;
  m.i = std::stoi(num);
  if (att == "first")
    m.attach = Attach::First;
  else if (att == "second")
    m.attach = Attach::Second;
  else
    throw fail();
  return m;
}

MoveLayout plan_move(std::span<const int> pairing, TriangleCSMove m) {
  const int n = static_cast<int>(pairing.size());
  if (m.i < 1 || m.i > n - 1)
    throw Error(ErrorKind::InvalidMove, "move index " + std::to_string(m.i) +
                                            " outside 1.." + std::to_string(n - 1));
  const int i = m.i;
  const int target = m.attach == Attach::First ? pairing[i - 1] : pairing[i];
  if (target == i || target == i + 1)
    throw Error(ErrorKind::InvalidMove, "cut triangle is glued to itself");

  MoveLayout layout;
  for (int k = 1; k <= n; ++k) {
    if (k == i) {
      layout.slots.push_back({SlotOrigin::Diagonal, 0});
    } else if (k == i + 1) {
      continue;
    } else if (k == target) {
      if (m.attach == Attach::First) {
        layout.slots.push_back({SlotOrigin::Old, i + 1});
        layout.slots.push_back({SlotOrigin::DiagonalInverse, 0});
      } else {
        layout.slots.push_back({SlotOrigin::DiagonalInverse, 0});
        layout.slots.push_back({SlotOrigin::Old, i});
      }
    } else {
      layout.slots.push_back({SlotOrigin::Old, k});
    }
  }

  std::vector<int> new_pos_of_old(n + 1, 0);
  int diag = 0, diag_inv = 0;
  for (int s = 0; s < n; ++s) {
    const auto& o = layout.slots[s];
    if (o.kind == SlotOrigin::Old) new_pos_of_old[o.old_position] = s + 1;
    else if (o.kind == SlotOrigin::Diagonal) diag = s + 1;
    else diag_inv = s + 1;
  }
  layout.pairing.assign(n, 0);
  for (int s = 0; s < n; ++s) {
    const auto& o = layout.slots[s];
    if (o.kind == SlotOrigin::Old)
      layout.pairing[s] = new_pos_of_old[pairing[o.old_position - 1]];
    else if (o.kind == SlotOrigin::Diagonal)
      layout.pairing[s] = diag_inv;
    else
      layout.pairing[s] = diag;
  }
  return layout;
}

int move_target(const PolygonDomain& p, TriangleCSMove m) {
  return m.attach == Attach::First ? p.partner(m.i) : p.partner(m.i + 1);
}

std::vector<int> move_support(const PolygonDomain& p, TriangleCSMove m) {
  return {m.i, m.i + 1, move_target(p, m)};
}

PolygonDomain apply_move(const PolygonDomain& p, TriangleCSMove m) {
  MoveLayout layout = plan_move(p.pairing(), m);
  const Word d = multiply(p.side(m.i), p.side(m.i + 1));
  const Word d_inv = invert(d);
  std::vector<Word> sides;
  sides.reserve(layout.slots.size());
  for (const auto& o : layout.slots) {
    switch (o.kind) {
      case SlotOrigin::Old: sides.push_back(p.side(o.old_position)); break;
      case SlotOrigin::Diagonal: sides.push_back(d); break;
      case SlotOrigin::DiagonalInverse: sides.push_back(d_inv); break;
    }
  }
  PolygonDomain out(p.context(), std::move(sides), std::move(layout.pairing));
  ValidationReport report = validate(out);
  if (!report.ok())
    throw Error(ErrorKind::InternalInvariantViolation,
                to_string(m) + " produced an invalid domain: " + report.violations.front());
  return out;
}

int map_position(const PolygonDomain& p, TriangleCSMove m, int position) {
  const int target = move_target(p, m);
  if (position == m.i || position == m.i + 1 || position == target)
    throw Error(ErrorKind::PreconditionViolation,
                "position " + std::to_string(position) + " is touched by " + to_string(m));
  return position - (position > m.i + 1 ? 1 : 0) + (position > target ? 1 : 0);
}

std::vector<TriangleCSMove> enumerate_moves(const PolygonDomain& p) {
  std::vector<TriangleCSMove> moves;
  for (int i = 1; i < p.size(); ++i) {
    moves.push_back({i, Attach::First});
    moves.push_back({i, Attach::Second});
  }
  return moves;
}

TriangleCSMove invert_move(const PolygonDomain& p, TriangleCSMove m) {
  if (m.i < 1 || m.i >= p.size())
    throw Error(ErrorKind::InvalidMove, "move index out of range");
  // The slid triangle now occupies the two slots that replaced the target.
  const int target = move_target(p, m);
  const int slot = target < m.i ? target : target - 1;
  return {slot, m.attach == Attach::First ? Attach::Second : Attach::First};
}

BasisWord::BasisWord(std::vector<int> letters) {
  for (int l : letters) {
    if (!letters_.empty() && letters_.back() == -l)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

BasisWord BasisWord::generator(int k, int sign) {
  return BasisWord({sign < 0 ? -k : k});
}

BasisWord multiply(const BasisWord& u, const BasisWord& v) {
  std::vector<int> all = u.letters();
  all.insert(all.end(), v.letters().begin(), v.letters().end());
  return BasisWord(std::move(all));
}

BasisWord invert(const BasisWord& w) {
  std::vector<int> out(w.letters().rbegin(), w.letters().rend());
  for (int& l : out) l = -l;
  return BasisWord(std::move(out));
}

BasisWord substitute(const BasisWord& w, std::span<const BasisWord> images) {
  BasisWord out;
  for (int l : w.letters()) {
    const BasisWord& img = images[std::abs(l) - 1];
    out = multiply(out, l > 0 ? img : invert(img));
  }
  return out;
}

Word evaluate(const BasisWord& w, std::span<const Word> basis) {
  Word out;
  for (int l : w.letters()) {
    const Word& b = basis[std::abs(l) - 1];
    out = multiply(out, l > 0 ? b : invert(b));
  }
  return out;
}

std::string format(const BasisWord& w, std::string_view name) {
  std::string out;
  for (int l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += std::string(name) + std::to_string(std::abs(l));
    if (l < 0) out += "^-1";
  }
  return out.empty() ? "1" : out;
}

namespace {

// Express a side label through the CG basis it belongs to.
class BasisLookup {
 public:
  explicit BasisLookup(const CGSet& cg) {
    for (std::size_t k = 0; k < cg.arcs.size(); ++k) {
      index_.emplace(cg.arcs[k], static_cast<int>(k) + 1);
      index_.emplace(invert(cg.arcs[k]), -static_cast<int>(k) - 1);
    }
  }

  // Signed generator carrying exactly this label, or 0.
  int find(const Word& w) const {
    auto it = index_.find(w);
    return it == index_.end() ? 0 : it->second;
  }

  BasisWord require(const Word& w) const {
    int k = find(w);
    if (k == 0)
      throw Error(ErrorKind::InternalInvariantViolation,
                  "label is not a CG generator of the domain");
    return BasisWord({k});
  }

 private:
  std::map<Word, int, EnergyLess> index_;
};

}  // namespace

NielsenStep induced_substitution(const PolygonDomain& p, TriangleCSMove m) {
  const PolygonDomain q = apply_move(p, m);
  const CGSet old_cg = cg_set(p);
  const CGSet new_cg = cg_set(q);
  const BasisLookup old_lookup(old_cg), new_lookup(new_cg);

  const Word& u = p.side(m.i);
  const Word& v = p.side(m.i + 1);
  const Word d = multiply(u, v);

  NielsenStep step;
  const Word& removed = m.attach == Attach::First ? u : v;
  const int removed_signed = old_lookup.find(removed);
  const int added_signed = new_lookup.find(d);
  if (removed_signed == 0 || added_signed == 0)
    throw Error(ErrorKind::InternalInvariantViolation, "move does not exchange one arc");
  step.removed_arc = std::abs(removed_signed);
  step.added_arc = std::abs(added_signed);
  step.removed_label = old_cg.arcs[step.removed_arc - 1];
  step.added_label = new_cg.arcs[step.added_arc - 1];

  // Surviving arcs keep their curve; only the canonical orientation may flip.
  step.old_in_new.resize(old_cg.arcs.size());
  for (std::size_t k = 0; k < old_cg.arcs.size(); ++k) {
    const Word& label = old_cg.arcs[k];
    if (static_cast<int>(k) + 1 == step.removed_arc) {
      // u = d * inv(v) for First, v = inv(u) * d for Second.
      BasisWord expr = m.attach == Attach::First
                           ? multiply(new_lookup.require(d), invert(new_lookup.require(v)))
                           : multiply(invert(new_lookup.require(u)), new_lookup.require(d));
      step.old_in_new[k] = removed_signed > 0 ? expr : invert(expr);
    } else {
      step.old_in_new[k] = new_lookup.require(label);
    }
  }
  step.new_in_old.resize(new_cg.arcs.size());
  for (std::size_t k = 0; k < new_cg.arcs.size(); ++k) {
    const Word& label = new_cg.arcs[k];
    if (static_cast<int>(k) + 1 == step.added_arc) {
      BasisWord expr = multiply(old_lookup.require(u), old_lookup.require(v));
      step.new_in_old[k] = added_signed > 0 ? expr : invert(expr);
    } else {
      step.new_in_old[k] = old_lookup.require(label);
    }
  }

  std::ostringstream desc;
  bool first = true;
  for (std::size_t k = 0; k < step.new_in_old.size(); ++k) {
    const BasisWord& img = step.new_in_old[k];
    if (img == BasisWord::generator(static_cast<int>(k) + 1)) continue;
    if (!first) desc << ", ";
    first = false;
    desc << "x" << (k + 1) << " -> " << format(img);
  }
  step.description = first ? "identity" : desc.str();
  return step;
}

std::vector<PolygonDomain> CSPath::domains() const {
  std::vector<PolygonDomain> out{base};
  for (std::size_t k = 0; k < moves.size(); ++k) {
    try {
      out.push_back(apply_move(out.back(), moves[k]));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InvalidMove) throw;
      throw Error(ErrorKind::InapplicableMove,
                  "move " + std::to_string(k) + " (" + to_string(moves[k]) +
                      ") is not applicable; applicable prefix length " + std::to_string(k));
    }
  }
  return out;
}

PolygonDomain CSPath::endpoint() const { return domains().back(); }

CSPath reverse(const CSPath& path) {
  std::vector<PolygonDomain> ds = path.domains();
  CSPath out{ds.back(), {}};
  for (std::size_t k = path.moves.size(); k-- > 0;)
    out.moves.push_back(invert_move(ds[k], path.moves[k]));
  return out;
}

std::vector<BasisWord> compose_old_in_new(const CSPath& path) {
  const std::size_t rank = 2 * static_cast<std::size_t>(path.base.genus());
  std::vector<BasisWord> acc;
  for (std::size_t k = 0; k < rank; ++k)
    acc.push_back(BasisWord::generator(static_cast<int>(k) + 1));
  PolygonDomain current = path.base;
  for (const auto& m : path.moves) {
    NielsenStep step = induced_substitution(current, m);
    for (auto& w : acc) w = substitute(w, step.old_in_new);
    current = apply_move(current, m);
  }
  return acc;
}

CutSlideResult general_cut_slide(const PolygonDomain& p, int i, int j, Attach attach) {
  const int n = p.size();
  if (i < 1 || j > n || i >= j)
    throw Error(ErrorKind::InvalidSpan, "span " + std::to_string(i) + ".." +
                                            std::to_string(j) + " is out of range");
  const int glue = attach == Attach::First ? p.partner(i) : p.partner(j);
  if (glue >= i && glue <= j)
    throw Error(ErrorKind::InvalidSpan,
                "span " + std::to_string(i) + ".." + std::to_string(j) +
                    " contains the side it would be glued to");

  // Direct cut-and-paste.
  std::vector<Word> span(p.sides().begin() + (i - 1), p.sides().begin() + j);
  const Word d = multiply(std::span<const Word>(span));
  std::vector<Word> sides;
  std::vector<int> origin;  // old position, 0 for d, -1 for inv(d)
  for (int k = 1; k <= n; ++k) {
    if (k == i) {
      origin.push_back(0);
    } else if (k > i && k <= j) {
      continue;
    } else if (k == glue) {
      if (attach == Attach::First) {
        for (int t = i + 1; t <= j; ++t) origin.push_back(t);
        origin.push_back(-1);
      } else {
        origin.push_back(-1);
        for (int t = i; t < j; ++t) origin.push_back(t);
      }
    } else {
      origin.push_back(k);
    }
  }
  std::vector<int> where(n + 1, 0);
  int pos_d = 0, pos_dinv = 0;
  for (int s = 0; s < n; ++s) {
    if (origin[s] > 0) where[origin[s]] = s + 1;
    else if (origin[s] == 0) pos_d = s + 1;
    else pos_dinv = s + 1;
  }
  std::vector<int> pairing(n);
  for (int s = 0; s < n; ++s) {
    if (origin[s] > 0) {
      sides.push_back(p.side(origin[s]));
      pairing[s] = where[p.partner(origin[s])];
    } else if (origin[s] == 0) {
      sides.push_back(d);
      pairing[s] = pos_dinv;
    } else {
      sides.push_back(invert(d));
      pairing[s] = pos_d;
    }
  }
  CutSlideResult result{PolygonDomain(p.context(), std::move(sides), std::move(pairing)), {}};

  // Triangle decomposition: grow the diagonal one side at a time.
  PolygonDomain current = p;
  if (attach == Attach::First) {
    int idx = i;
    for (int step = 0; step < j - i; ++step) {
      TriangleCSMove m{idx, Attach::First};
      int target = move_target(current, m);
      result.moves.push_back(m);
      current = apply_move(current, m);
      idx = target < idx ? idx + 1 : idx;
    }
  } else {
    int idx = j;
    for (int step = 0; step < j - i; ++step) {
      TriangleCSMove m{idx - 1, Attach::Second};
      int target = move_target(current, m);
      result.moves.push_back(m);
      current = apply_move(current, m);
      idx = target < m.i ? m.i + 1 : m.i;
    }
  }
  if (current != result.domain)
    throw Error(ErrorKind::InternalInvariantViolation,
                "triangle decomposition disagrees with the direct cut-slide");
  return result;
}

}  // namespace fatnielsen
