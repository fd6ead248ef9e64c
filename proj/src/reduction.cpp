#include "fatnielsen/reduction.hpp"

#include <tuple>

namespace fatnielsen {

const char* to_string(Rationale r) {
  return r == Rationale::Unbalanced ? "unbalanced" : "balanced";
}

namespace {

// |P| change of a move: the replaced arc (two sides) is exchanged for d.
long length_change(const PolygonDomain& p, TriangleCSMove m) {
  const Word d = multiply(p.side(m.i), p.side(m.i + 1));
  const Word& replaced = m.attach == Attach::First ? p.side(m.i) : p.side(m.i + 1);
  return 2 * (static_cast<long>(d.length()) - static_cast<long>(replaced.length()));
}

}  // namespace

MoveChoice select_move(const PolygonDomain& p) {
  if (p == standard_domain(p.context()))
    throw Error(ErrorKind::PreconditionViolation, "domain is already standard");

  const BalanceReport report = balance_classify(p);
  std::optional<std::tuple<long, MoveChoice>> best;
  auto consider = [&](TriangleCSMove m, int side) {
    long delta = length_change(p, m);
    MoveChoice c{m, Rationale::Unbalanced, side};
    if (!best) {
      best.emplace(delta, c);
      return;
    }
    auto& [bd, bc] = *best;
    bool better = delta < bd ||
                  (delta == bd && (m.i < bc.move.i ||
                                   (m.i == bc.move.i && m.attach == Attach::First &&
                                    bc.move.attach == Attach::Second)));
    if (better) best.emplace(delta, c);
  };
  for (int i = 1; i <= p.size(); ++i) {
    const SideBalance& sb = report.sides[i - 1];
    if (sb.unbalanced_right) consider({i, Attach::Second}, i);
    if (sb.unbalanced_left) consider({i - 1, Attach::First}, i);
  }
  if (best) {
    if (std::get<0>(*best) >= 0)
      throw StuckDomainError("unbalanced side does not shorten the domain", p);
    return std::get<1>(*best);
  }

  for (int i = 2; i < p.size(); ++i) {
    if (!report.sides[i - 1].balanced) continue;
    const TriangleCSMove left{i - 1, Attach::First};
    const TriangleCSMove right{i, Attach::Second};
    const PolygonDomain via_left = apply_move(p, left);
    const PolygonDomain via_right = apply_move(p, right);
    const bool left_drops = compare_energy(via_left, p) < 0;
    const bool right_drops = compare_energy(via_right, p) < 0;
    if (!left_drops && !right_drops)
      throw StuckDomainError("balanced side " + std::to_string(i) +
                                 " admits no energy-reducing move",
                             p);
    if (left_drops && (!right_drops || compare_energy(via_left, via_right) <= 0))
      return {left, Rationale::Balanced, i};
    return {right, Rationale::Balanced, i};
  }
  throw StuckDomainError("non-standard domain without unbalanced or balanced sides", p);
}

CSPath ReductionTrace::path() const {
  CSPath out{start, {}};
  for (const auto& s : steps) out.moves.push_back(s.move);
  return out;
}

ReductionTrace reduce(const PolygonDomain& p) {
  ValidationReport report = validate(p);
  if (!report.ok())
    throw Error(ErrorKind::PreconditionViolation,
                "invalid polygon domain: " + report.violations.front());
  const PolygonDomain target = standard_domain(p.context());
  ReductionTrace trace{p, {}, p};
  PolygonDomain current = p;
  while (current != target) {
    MoveChoice choice = select_move(current);
    ReductionStep step;
    step.move = choice.move;
    step.rationale = choice.rationale;
    step.side = choice.side;
    step.length_before = current.length();
    step.nielsen = induced_substitution(current, choice.move);
    PolygonDomain next = apply_move(current, choice.move);
    if (choice.rationale == Rationale::Balanced) {
      auto c = compare_energy(next, current);
      step.energy_change = c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    current = std::move(next);
    step.length_after = current.length();
    trace.steps.push_back(std::move(step));
  }
  trace.final_domain = current;
  return trace;
}

CSPath connect(const PolygonDomain& from, const PolygonDomain& to) {
  CSPath out = reduce(from).path();
  CSPath back = reverse(reduce(to).path());
  out.moves.insert(out.moves.end(), back.moves.begin(), back.moves.end());
  return out;
}

Factorization factorize_mapping_class(const MappingClass& phi, const GenusContext& ctx) {
  const PolygonDomain start = from_mapping_class(phi, ctx);
  Factorization f{reduce(start), {}, {}};
  f.composed = compose_old_in_new(f.trace.path());

  // The standard CG set is (beta_g, alpha_g, beta_{g-1}, alpha_{g-1}, ...).
  const CGSet standard = cg_set(standard_domain(ctx));
  const int g = ctx.genus();
  f.recovered.alpha_images.resize(g);
  f.recovered.beta_images.resize(g);
  for (int k = 1; k <= g; ++k) {
    const int block = g - k;
    f.recovered.beta_images[k - 1] = evaluate(f.composed[2 * block], standard.arcs);
    f.recovered.alpha_images[k - 1] = evaluate(f.composed[2 * block + 1], standard.arcs);
  }
  if (f.recovered.alpha_images != phi.alpha_images ||
      f.recovered.beta_images != phi.beta_images)
    throw Error(ErrorKind::CompositionMismatch,
                "composed Nielsen substitution differs from the mapping class");
  return f;
}

}  // namespace fatnielsen
