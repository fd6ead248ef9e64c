#include "fatnielsen/triangulation.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <optional>

#include "fatnielsen/reduction.hpp"

namespace fatnielsen {

Triangulation::Triangulation(GenusContext ctx, std::vector<Word> labels,
                             std::vector<std::array<Dart, 3>> faces)
    : ctx_(ctx), labels_(std::move(labels)), faces_(std::move(faces)) {
  const int darts = 2 * arc_count();
  face_of_.assign(darts, -1);
  slot_of_.assign(darts, -1);
  for (int f = 0; f < face_count(); ++f) {
    for (int s = 0; s < 3; ++s) {
      const Dart d = faces_[f][s];
      if (d < 0 || d >= darts)
        throw Error(ErrorKind::MalformedTriangulation,
                    "face " + std::to_string(f) + " refers to an unknown arc");
      if (face_of_[d] != -1)
        throw Error(ErrorKind::MalformedTriangulation,
                    "directed arc " + std::to_string(d) + " lies on two faces");
      face_of_[d] = f;
      slot_of_[d] = s;
    }
  }
}

Word Triangulation::dart_label(Dart d) const {
  const Word& w = labels_.at(arc_of(d));
  return d & 1 ? invert(w) : w;
}

Dart Triangulation::next(Dart d) const {
  const int f = face_of_.at(d);
  if (f < 0) throw Error(ErrorKind::MalformedTriangulation, "directed arc bounds no face");
  return faces_[f][(slot_of_[d] + 1) % 3];
}

std::vector<std::string> validate(const Triangulation& t) {
  std::vector<std::string> out;
  const int g = t.context().genus();
  if (t.arc_count() != 6 * g - 1)
    out.push_back("expected " + std::to_string(6 * g - 1) + " arcs, found " +
                  std::to_string(t.arc_count()));
  if (t.face_count() != 4 * g - 1)
    out.push_back("expected " + std::to_string(4 * g - 1) + " triangles, found " +
                  std::to_string(t.face_count()));
  if (!out.empty()) return out;

  if (t.label(0) != t.context().boundary()) out.push_back("arc 0 is not labelled by the boundary word");
  if (t.face_of(1) != -1) out.push_back("the boundary arc borders two triangles");
  for (Dart d = 0; d < 2 * t.arc_count(); ++d)
    if (d != 1 && t.face_of(d) == -1)
      out.push_back("arc " + std::to_string(arc_of(d)) + " borders fewer than two triangles");
  for (int a = 0; a < t.arc_count(); ++a)
    if (t.label(a).empty()) out.push_back("arc " + std::to_string(a) + " has the trivial label");
  for (int f = 0; f < t.face_count(); ++f) {
    const auto& tri = t.faces()[f];
    Word product = multiply(multiply(t.dart_label(tri[0]), t.dart_label(tri[1])),
                            t.dart_label(tri[2]));
    if (!product.empty())
      out.push_back("labels around triangle " + std::to_string(f) + " do not multiply to 1");
  }
  if (!out.empty()) return out;
  try {
    CornerOrder order = corner_order(t);
    (void)order;
  } catch (const Error& e) {
    out.push_back(e.what());
  }
  return out;
}

namespace {

using FaceKey = std::array<Word, 3>;

std::strong_ordering compare_keys(const FaceKey& a, const FaceKey& b) {
  for (int k = 0; k < 3; ++k)
    if (auto c = energy_compare(a[k], b[k]); c != 0) return c;
  return std::strong_ordering::equal;
}

std::vector<FaceKey> canonical_faces(const Triangulation& t) {
  std::vector<FaceKey> keys;
  for (const auto& tri : t.faces()) {
    FaceKey best;
    for (int r = 0; r < 3; ++r) {
      FaceKey k{t.dart_label(tri[r]), t.dart_label(tri[(r + 1) % 3]),
                t.dart_label(tri[(r + 2) % 3])};
      if (r == 0 || compare_keys(k, best) < 0) best = std::move(k);
    }
    keys.push_back(std::move(best));
  }
  std::sort(keys.begin(), keys.end(),
            [](const FaceKey& a, const FaceKey& b) { return compare_keys(a, b) < 0; });
  return keys;
}

}  // namespace

bool same_triangulation(const Triangulation& a, const Triangulation& b) {
  return a.context() == b.context() && a.label(0) == b.label(0) &&
         canonical_faces(a) == canonical_faces(b);
}

CornerOrder corner_order(const Triangulation& t) {
  CornerOrder order;
  const int corners = 3 * t.face_count();
  order.corner_of_incoming.assign(2 * t.arc_count(), -1);
  order.first_occurrence.assign(t.arc_count(), -1);
  Dart in = 0;
  while (true) {
    if (static_cast<int>(order.incoming.size()) >= corners || order.corner_of_incoming[in] != -1)
      throw Error(ErrorKind::MalformedTriangulation, "corners at the base point do not form one cycle");
    const int c = static_cast<int>(order.incoming.size());
    order.incoming.push_back(in);
    order.corner_of_incoming[in] = c;
    const Dart out = t.next(in);
    if (order.first_occurrence[arc_of(out)] == -1) order.first_occurrence[arc_of(out)] = c;
    if (out == 0) break;
    in = reversed(out);
  }
  if (static_cast<int>(order.incoming.size()) != corners)
    throw Error(ErrorKind::MalformedTriangulation,
                "triangulation has more than one vertex");
  return order;
}

Triangulation fan_triangulate(const PolygonDomain& p) {
  const int n = p.size();
  const int g = p.genus();
  std::vector<Word> labels{p.context().boundary()};
  for (const Word& w : cg_set(p).arcs) labels.push_back(w);
  const std::vector<ArcOccurrence> occ = arc_occurrences(p);
  auto side = [&](int k) { return 2 * (occ[k - 1].arc + 1) + (occ[k - 1].sign < 0 ? 1 : 0); };

  // delta_k sits at arc 2g + k - 1
  auto delta = [&](int k) { return 2 * (2 * g + k - 1); };
  Word running = p.side(1);
  for (int k = 2; k <= n - 1; ++k) {
    running = multiply(running, p.side(k));
    labels.push_back(running);
  }

  std::vector<std::array<Dart, 3>> faces;
  faces.push_back({side(1), side(2), reversed(delta(2))});
  for (int k = 2; k <= n - 2; ++k) faces.push_back({delta(k), side(k + 1), reversed(delta(k + 1))});
  faces.push_back({delta(n - 1), side(n), 0});
  return Triangulation(p.context(), std::move(labels), std::move(faces));
}

GreedyResult greedy(const Triangulation& t) {
  if (auto v = validate(t); !v.empty()) throw Error(ErrorKind::MalformedTriangulation, v.front());
  const CornerOrder corners = corner_order(t);

  GreedyResult result{PolygonDomain(standard_domain(t.context())), {}, {}};
  for (int a = 1; a < t.arc_count(); ++a) result.order.push_back(a);
  std::sort(result.order.begin(), result.order.end(), [&](int x, int y) {
    return corners.first_occurrence[x] < corners.first_occurrence[y];
  });

  std::vector<int> parent(t.face_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int f) {
    while (parent[f] != f) f = parent[f] = parent[parent[f]];
    return f;
  };
  result.removed.assign(t.arc_count(), false);
  int removed = 0;
  for (int a : result.order) {
    int f1 = find(t.face_of(forward_dart(a)));
    int f2 = find(t.face_of(reversed(forward_dart(a))));
    if (f1 == f2) continue;
    parent[f1] = f2;
    result.removed[a] = true;
    ++removed;
  }
  const int g = t.context().genus();
  if (removed != 4 * g - 2)
    throw Error(ErrorKind::MalformedTriangulation, "greedy removal did not leave a single disk");

  // Walk the merged face from the boundary, stepping over removed arcs.
  auto step = [&](Dart d) {
    Dart e = t.next(d);
    while (result.removed[arc_of(e)]) e = t.next(reversed(e));
    return e;
  };
  std::vector<Dart> darts;
  for (Dart d = step(0); d != 0; d = step(d)) {
    darts.push_back(d);
    if (static_cast<int>(darts.size()) > 4 * g)
      throw Error(ErrorKind::MalformedTriangulation, "remaining arcs do not bound a polygon");
  }
  if (static_cast<int>(darts.size()) != 4 * g)
    throw Error(ErrorKind::MalformedTriangulation, "remaining arcs do not bound a polygon");

  std::vector<Word> sides;
  std::vector<int> pairing(4 * g, 0);
  std::vector<int> position_of(2 * t.arc_count(), 0);
  for (int k = 0; k < 4 * g; ++k) {
    sides.push_back(t.dart_label(darts[k]));
    position_of[darts[k]] = k + 1;
  }
  for (int k = 0; k < 4 * g; ++k) pairing[k] = position_of[reversed(darts[k])];
  result.domain = PolygonDomain(t.context(), std::move(sides), std::move(pairing));
  return result;
}

PolygonDomain greedy_extract(const Triangulation& t) { return greedy(t).domain; }

bool locality_removed(const Triangulation& t, int arc) {
  if (arc == 0) throw Error(ErrorKind::PreconditionViolation, "the boundary arc is never removed");
  if (arc < 0 || arc >= t.arc_count())
    throw Error(ErrorKind::PreconditionViolation, "no arc " + std::to_string(arc));
  const CornerOrder corners = corner_order(t);
  const int first = corners.first_occurrence[arc];
  const Dart out = t.next(corners.incoming[first]);
  // The corner of tau away from the arc is the one entered by the dart that
  // follows the reverse of out.
  const Dart opposite_in = t.next(reversed(out));
  return corners.corner_of_incoming[opposite_in] > first;
}

Triangulation diagonal_exchange(const Triangulation& t, int arc) {
  if (arc <= 0 || arc >= t.arc_count())
    throw Error(ErrorKind::NotFlippable, "arc " + std::to_string(arc) + " cannot be exchanged");
  const Dart plus = forward_dart(arc);
  const Dart minus = reversed(plus);
  const int f1 = t.face_of(plus);
  const int f2 = t.face_of(minus);
  if (f1 == f2)
    throw Error(ErrorKind::NotFlippable,
                "arc " + std::to_string(arc) + " borders the same triangle twice");
  const Dart a = t.next(plus), b = t.next(a);
  const Dart x = t.next(minus), y = t.next(x);

  std::vector<Word> labels = t.labels();
  labels[arc] = multiply(t.dart_label(b), t.dart_label(x));
  std::vector<std::array<Dart, 3>> faces = t.faces();
  faces[f1] = {plus, y, a};
  faces[f2] = {minus, b, x};
  return Triangulation(t.context(), std::move(labels), std::move(faces));
}

bool share_triangle(const Triangulation& t, int a, int b) {
  const int fa[2] = {t.face_of(forward_dart(a)), t.face_of(reversed(forward_dart(a)))};
  const int fb[2] = {t.face_of(forward_dart(b)), t.face_of(reversed(forward_dart(b)))};
  for (int u : fa)
    for (int v : fb)
      if (u != -1 && u == v) return true;
  return false;
}

std::vector<Triangulation> FlipPath::triangulations() const {
  std::vector<Triangulation> out{base};
  for (int arc : arcs) out.push_back(diagonal_exchange(out.back(), arc));
  return out;
}

Triangulation FlipPath::endpoint() const {
  Triangulation t = base;
  for (int arc : arcs) t = diagonal_exchange(t, arc);
  return t;
}

FlipPath pentagon_loop(const Triangulation& t, int arc1, int arc2) {
  auto fail = [](const std::string& why) {
    return Error(ErrorKind::NotPentagonConfiguration, why);
  };
  if (arc1 <= 0 || arc2 <= 0 || arc1 >= t.arc_count() || arc2 >= t.arc_count())
    throw fail("pentagon arcs must be non-boundary arcs");
  if (arc1 == arc2) throw fail("pentagon arcs must be distinct");
  std::array<int, 2> f1{t.face_of(forward_dart(arc1)), t.face_of(reversed(forward_dart(arc1)))};
  std::array<int, 2> f2{t.face_of(forward_dart(arc2)), t.face_of(reversed(forward_dart(arc2)))};
  if (f1[0] == f1[1] || f2[0] == f2[1]) throw fail("an arc borders the same triangle twice");
  int shared = 0;
  for (int u : f1)
    for (int v : f2) shared += u == v;
  if (shared != 1) throw fail("arcs must share exactly one triangle");
  return FlipPath{t, {arc1, arc2, arc1, arc2, arc1}};
}

namespace {

std::optional<std::vector<TriangleCSMove>> single_cut_slide(const PolygonDomain& from,
                                                            const PolygonDomain& to,
                                                            const Word& added) {
  const Word added_inv = invert(added);
  const int n = from.size();
  for (int i = 1; i <= n; ++i) {
    Word d;
    for (int j = i; j <= n; ++j) {
      d = multiply(d, from.side(j));
      if (j == i || (d != added && d != added_inv)) continue;
      for (Attach attach : {Attach::First, Attach::Second}) {
        try {
          CutSlideResult r = general_cut_slide(from, i, j, attach);
          if (r.domain == to) return r.moves;
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::InvalidSpan) throw;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

FlipTranslation translate_flips(const FlipPath& path) {
  const std::vector<Triangulation> ts = path.triangulations();
  std::vector<PolygonDomain> ps;
  for (const Triangulation& t : ts) ps.push_back(greedy_extract(t));

  FlipTranslation out{CSPath{ps.front(), {}}, 0, 0};
  for (std::size_t k = 0; k + 1 < ps.size(); ++k) {
    const PolygonDomain& from = ps[k];
    const PolygonDomain& to = ps[k + 1];
    if (from == to) continue;
    const std::vector<Word> before = unoriented_arcs(from);
    const std::vector<Word> after = unoriented_arcs(to);
    std::vector<Word> added;
    std::set_difference(after.begin(), after.end(), before.begin(), before.end(),
                        std::back_inserter(added), EnergyLess{});
    if (added.size() > 1)
      throw MultiArcDiscrepancyError("flip " + std::to_string(k + 1) + " replaces " +
                                         std::to_string(added.size()) + " arcs of the polygon",
                                     from, to);

    std::optional<std::vector<TriangleCSMove>> moves;
    if (added.size() == 1) moves = single_cut_slide(from, to, added.front());
    if (moves) {
      ++out.cut_slide_steps;
    } else {
      moves = connect(from, to).moves;
      ++out.connector_steps;
    }
    out.path.moves.insert(out.path.moves.end(), moves->begin(), moves->end());
  }
  if (out.path.endpoint() != ps.back())
    throw Error(ErrorKind::InternalInvariantViolation,
                "translated CS path misses the final greedy polygon");
  return out;
}

CSPath flips_to_cs(const FlipPath& path) { return translate_flips(path).path; }

}  // namespace fatnielsen
