#include "fatnielsen/polygon_domain.hpp"

#include <algorithm>
#include <numeric>

#include "fatnielsen/errors.hpp"

namespace fatnielsen {

PolygonDomain::PolygonDomain(GenusContext ctx, std::vector<Word> sides,
                             std::vector<int> pairing)
    : ctx_(ctx), sides_(std::move(sides)), pairing_(std::move(pairing)) {
  const int n = ctx_.alphabet_size();
  if (static_cast<int>(sides_.size()) != n || static_cast<int>(pairing_.size()) != n)
    throw Error(ErrorKind::PreconditionViolation,
                "polygon domain of genus " + std::to_string(ctx_.genus()) +
                    " needs exactly " + std::to_string(n) + " sides");
  for (int p : pairing_)
    if (p < 1 || p > n)
      throw Error(ErrorKind::PreconditionViolation, "pairing index out of range");
  for (const Word& w : sides_)
    for (Letter l : w.letters())
      if (!ctx_.valid(l))
        throw Error(ErrorKind::UnknownLetter, "side letter outside the alphabet");
}

std::size_t PolygonDomain::length() const {
  std::size_t total = 0;
  for (const Word& w : sides_) total += w.length();
  return total;
}

BigInt PolygonDomain::energy() const {
  BigInt total = 0;
  for (const Word& w : sides_) total += energy_value(w, ctx_.genus());
  return total;
}

std::strong_ordering compare_energy(const PolygonDomain& a, const PolygonDomain& b) {
  return compare_energy_sums(a.sides(), b.sides(), a.genus());
}

PolygonDomain standard_domain(const GenusContext& ctx) {
  const int n = ctx.alphabet_size();
  std::vector<Word> sides;
  std::vector<int> pairing(n);
  for (int i = 1; i <= n; ++i) {
    sides.push_back(Word::from_indices({i}));
    int r = (i - 1) % 4;
    pairing[i - 1] = r < 2 ? i + 2 : i - 2;
  }
  return PolygonDomain(ctx, std::move(sides), std::move(pairing));
}

int vertex_class_count(const PolygonDomain& p) {
  // Corner k (0..n) sits between c_k and c_{k+1}, with c_0 = c_{n+1} the
  // boundary. Each paired side glues the corner before its start to the corner
  // after its partner's end.
  const int n = p.size();
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int i = 1; i <= n; ++i) {
    int j = p.partner(i);
    if (j < 1 || j > n) continue;
    // start of c_i (corner i-1) is the end of c_j (corner j)
    parent[find(i - 1)] = find(j);
  }
  int classes = 0;
  for (int k = 0; k <= n; ++k) classes += find(k) == k;
  return classes;
}

namespace {

BigInt determinant(std::vector<std::vector<BigInt>> m) {
  // Bareiss fraction-free elimination.
  const std::size_t n = m.size();
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return n == 0 ? BigInt(1) : sign * m[n - 1][n - 1];
}

}  // namespace

CGSet cg_set(const PolygonDomain& p) {
  CGSet out;
  for (int i = 1; i <= p.size(); ++i) {
    if (p.partner(i) > i) {
      out.arcs.push_back(p.side(i));
      out.first_position.push_back(i);
    }
  }
  return out;
}

std::vector<ArcOccurrence> arc_occurrences(const PolygonDomain& p) {
  std::vector<ArcOccurrence> occ(p.size());
  int next = 0;
  for (int i = 1; i <= p.size(); ++i) {
    int j = p.partner(i);
    if (j > i) {
      occ[i - 1] = {next, 1};
      occ[j - 1] = {next, -1};
      ++next;
    }
  }
  return occ;
}

std::vector<Word> unoriented_arcs(const PolygonDomain& p) {
  std::vector<Word> out;
  for (const Word& w : cg_set(p).arcs) {
    Word inv = invert(w);
    out.push_back(energy_compare(w, inv) <= 0 ? w : inv);
  }
  std::sort(out.begin(), out.end(), EnergyLess{});
  return out;
}

BigInt abelian_determinant(const PolygonDomain& p) {
  CGSet cg = cg_set(p);
  std::vector<std::vector<BigInt>> m;
  for (const Word& w : cg.arcs) {
    std::vector<BigInt> row;
    for (int v : p.context().abelianize(w)) row.emplace_back(v);
    m.push_back(std::move(row));
  }
  if (m.size() != static_cast<std::size_t>(2 * p.genus())) return 0;
  return determinant(std::move(m));
}

ValidationReport validate(const PolygonDomain& p) {
  ValidationReport report;
  auto fail = [&](std::string msg) { report.violations.push_back(std::move(msg)); };
  const int n = p.size();

  bool involution = true;
  for (int i = 1; i <= n; ++i) {
    int j = p.partner(i);
    if (p.partner(j) != i) {
      involution = false;
      fail("pairing is not an involution at position " + std::to_string(i));
    } else if (j == i) {
      involution = false;
      fail("position " + std::to_string(i) + " is paired with itself");
    } else if (j == i - 1 || j == i + 1) {
      fail("position " + std::to_string(i) + " is paired with an adjacent side");
    }
  }
  for (int i = 1; i <= n; ++i) {
    if (p.side(i).empty()) fail("side " + std::to_string(i) + " is the identity");
    int j = p.partner(i);
    if (j > i && p.side(j) != invert(p.side(i)))
      fail("paired sides " + std::to_string(i) + " and " + std::to_string(j) +
           " are not mutually inverse");
  }
  if (multiply(std::span<const Word>(p.sides())) != p.context().boundary_inverse())
    fail("product of sides is not the inverse boundary word");
  if (involution) {
    if (vertex_class_count(p) != 1) fail("corners do not close up to a single vertex");
    BigInt det = abelian_determinant(p);
    if (det != 1 && det != -1) fail("abelianized arc labels do not form a basis");
  }
  return report;
}

MappingClass MappingClass::identity(const GenusContext& ctx) {
  MappingClass m;
  for (int k = 1; k <= ctx.genus(); ++k) {
    m.alpha_images.push_back(Word({ctx.alpha(k)}));
    m.beta_images.push_back(Word({ctx.beta(k)}));
  }
  return m;
}

Word apply_mapping(const MappingClass& phi, const GenusContext& ctx, const Word& w) {
  Word out;
  for (Letter l : w.letters()) {
    int k = ctx.genus() - (l.index - 1) / 4;
    const Word& image = l.is_alpha() ? phi.alpha_images.at(k - 1)
                                     : phi.beta_images.at(k - 1);
    out = multiply(out, l.is_positive() ? image : invert(image));
  }
  return out;
}

MappingClass compose(const MappingClass& outer, const MappingClass& inner,
                     const GenusContext& ctx) {
  MappingClass m;
  for (const Word& w : inner.alpha_images)
    m.alpha_images.push_back(apply_mapping(outer, ctx, w));
  for (const Word& w : inner.beta_images)
    m.beta_images.push_back(apply_mapping(outer, ctx, w));
  return m;
}

bool preserves_boundary(const MappingClass& phi, const GenusContext& ctx) {
  return apply_mapping(phi, ctx, ctx.boundary()) == ctx.boundary();
}

PolygonDomain from_mapping_class(const MappingClass& phi, const GenusContext& ctx) {
  const auto g = static_cast<std::size_t>(ctx.genus());
  if (phi.alpha_images.size() != g || phi.beta_images.size() != g)
    throw Error(ErrorKind::PreconditionViolation,
                "mapping class needs one image per generator");
  if (!preserves_boundary(phi, ctx))
    throw Error(ErrorKind::BoundaryNotPreserved,
                "mapping class does not fix the boundary word");
  PolygonDomain standard = standard_domain(ctx);
  std::vector<Word> sides;
  for (const Word& s : standard.sides()) sides.push_back(apply_mapping(phi, ctx, s));
  return PolygonDomain(ctx, std::move(sides), standard.pairing());
}

const char* to_string(BalanceStatus s) {
  switch (s) {
    case BalanceStatus::Neutral: return "neutral";
    case BalanceStatus::UnbalancedRight: return "unbalanced-right";
    case BalanceStatus::UnbalancedLeft: return "unbalanced-left";
    case BalanceStatus::Balanced: return "balanced";
  }
  return "neutral";
}

bool BalanceReport::any_unbalanced() const {
  for (const auto& s : sides)
    if (s.unbalanced_left || s.unbalanced_right) return true;
  return false;
}

bool BalanceReport::any_balanced() const {
  for (const auto& s : sides)
    if (s.balanced) return true;
  return false;
}

BalanceReport balance_classify(const PolygonDomain& p) {
  BalanceReport report;
  const int n = p.size();
  for (int i = 1; i <= n; ++i) {
    const Word& c = p.side(i);
    SideBalance sb;
    if (i > 1) sb.left_depth = cancellation_depth(p.side(i - 1), c);
    if (i < n) sb.right_depth = cancellation_depth(c, p.side(i + 1));
    const std::size_t len = c.length();

    if (i < n && 2 * sb.right_depth > len) {
      const Word& next = p.side(i + 1);
      BalanceWitness w;
      w.y = prefix(next, sb.right_depth);
      w.l = prefix(c, len - sb.right_depth);
      w.r = suffix(next, next.length() - sb.right_depth);
      sb.unbalanced_right = w;
    }
    if (i > 1 && 2 * sb.left_depth > len) {
      const Word& prev = p.side(i - 1);
      BalanceWitness w;
      w.x = prefix(c, sb.left_depth);
      w.r = suffix(c, len - sb.left_depth);
      w.l = prefix(prev, prev.length() - sb.left_depth);
      sb.unbalanced_left = w;
    }
    if (i > 1 && i < n && len > 0 && len % 2 == 0) {
      const std::size_t half = len / 2;
      if (sb.left_depth >= half && sb.right_depth >= half) {
        const Word& prev = p.side(i - 1);
        const Word& next = p.side(i + 1);
        BalanceWitness w;
        w.x = prefix(c, half);
        w.y = invert(suffix(c, half));
        w.l = prefix(prev, prev.length() - half);
        w.r = suffix(next, next.length() - half);
        sb.balanced = w;
      }
    }
    if (sb.unbalanced_right)
      sb.status = BalanceStatus::UnbalancedRight;
    else if (sb.unbalanced_left)
      sb.status = BalanceStatus::UnbalancedLeft;
    else if (sb.balanced)
      sb.status = BalanceStatus::Balanced;
    report.sides.push_back(std::move(sb));
  }
  return report;
}

}  // namespace fatnielsen
