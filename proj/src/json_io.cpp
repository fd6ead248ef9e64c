#include "fatnielsen/json_io.hpp"

#include <set>

#include "fatnielsen/errors.hpp"

namespace fatnielsen {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) bad("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

void check_schema(const json& j) {
  if (!j.is_object()) bad("expected a JSON object");
  auto it = j.find("schema");
  if (it != j.end() && (!it->is_number_integer() || it->get<int>() != kSchemaVersion))
    bad("unsupported schema version");
}

int integer(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

const std::string& text(const json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get_ref<const std::string&>();
}

GenusContext context_from(const json& j) {
  int g = integer(field(j, "genus"), "genus");
  if (g < 1) bad("genus must be at least 1");
  return GenusContext(g);
}

}  // namespace

json to_json(const PolygonDomain& p) {
  json sides = json::array();
  for (const Word& w : p.sides()) sides.push_back(p.context().format(w));
  json pairs = json::array();
  for (int i = 1; i <= p.size(); ++i)
    if (p.partner(i) > i) pairs.push_back({i, p.partner(i)});
  return {{"schema", kSchemaVersion}, {"genus", p.genus()}, {"sides", sides}, {"pairing", pairs}};
}

PolygonDomain domain_from_json(const json& j) {
  check_schema(j);
  GenusContext ctx = context_from(j);
  const json& sides = field(j, "sides");
  const json& pairs = field(j, "pairing");
  if (!sides.is_array() || !pairs.is_array()) bad("'sides' and 'pairing' must be arrays");
  const int n = ctx.alphabet_size();
  if (static_cast<int>(sides.size()) != n)
    bad("genus " + std::to_string(ctx.genus()) + " needs " + std::to_string(n) + " sides");
  std::vector<Word> words;
  for (const json& s : sides) words.push_back(ctx.parse(text(s, "side")));
  std::vector<int> pairing(n, 0);
  for (const json& pr : pairs) {
    if (!pr.is_array() || pr.size() != 2) bad("pairing entries must be [i, j]");
    int a = integer(pr[0], "pairing index"), b = integer(pr[1], "pairing index");
    if (a < 1 || a > n || b < 1 || b > n) bad("pairing index out of range");
    if (pairing[a - 1] || pairing[b - 1]) bad("a side appears in two pairs");
    pairing[a - 1] = b;
    pairing[b - 1] = a;
  }
  for (int k = 0; k < n; ++k)
    if (!pairing[k]) bad("side " + std::to_string(k + 1) + " is unpaired");
  return PolygonDomain(ctx, std::move(words), std::move(pairing));
}

json to_json(const MappingClass& phi, const GenusContext& ctx) {
  json images = json::object();
  for (int k = 1; k <= ctx.genus(); ++k) {
    images[ctx.letter_name(ctx.alpha(k))] = ctx.format(phi.alpha_images.at(k - 1));
    images[ctx.letter_name(ctx.beta(k))] = ctx.format(phi.beta_images.at(k - 1));
  }
  return {{"schema", kSchemaVersion}, {"genus", ctx.genus()}, {"images", images}};
}

int genus_from_json(const json& j) {
  check_schema(j);
  return context_from(j).genus();
}

MappingClass mapping_class_from_json(const json& j, const GenusContext& ctx) {
  check_schema(j);
  if (j.contains("genus") && integer(j["genus"], "genus") != ctx.genus())
    bad("mapping class genus differs from the requested genus");
  const json& images = field(j, "images");
  if (!images.is_object()) bad("'images' must be an object");
  MappingClass phi = MappingClass::identity(ctx);
  std::set<std::string> known;
  for (int k = 1; k <= ctx.genus(); ++k) {
    for (Letter l : {ctx.alpha(k), ctx.beta(k)}) {
      const std::string name = ctx.letter_name(l);
      known.insert(name);
      auto it = images.find(name);
      if (it == images.end()) continue;  // generators left out are fixed
      Word w = ctx.parse(text(*it, "image"));
      (l.is_alpha() ? phi.alpha_images : phi.beta_images)[k - 1] = std::move(w);
    }
  }
  for (auto it = images.begin(); it != images.end(); ++it)
    if (!known.count(it.key())) bad("'" + it.key() + "' is not a generator of genus " +
                                    std::to_string(ctx.genus()));
  return phi;
}

json to_json(const CSPath& path) {
  json moves = json::array();
  for (const TriangleCSMove& m : path.moves) moves.push_back(to_string(m));
  return {{"schema", kSchemaVersion}, {"base", to_json(path.base)}, {"moves", moves}};
}

CSPath cs_path_from_json(const json& j) {
  check_schema(j);
  CSPath path{domain_from_json(field(j, "base")), {}};
  const json& moves = field(j, "moves");
  if (!moves.is_array()) bad("'moves' must be an array");
  for (const json& m : moves) path.moves.push_back(parse_move(text(m, "move")));
  return path;
}

json to_json(const Triangulation& t) {
  const GenusContext& ctx = t.context();
  json arcs = json::array();
  for (int a = 0; a < t.arc_count(); ++a)
    arcs.push_back({{"id", a}, {"label", ctx.format(t.label(a))}, {"boundary", a == 0}});
  json faces = json::array();
  for (const auto& tri : t.faces()) {
    json f = json::array();
    for (Dart d : tri) f.push_back((d & 1 ? "-" : "+") + std::to_string(arc_of(d)));
    faces.push_back(f);
  }
  return {{"schema", kSchemaVersion}, {"genus", ctx.genus()}, {"arcs", arcs}, {"faces", faces}};
}

Triangulation triangulation_from_json(const json& j) {
  check_schema(j);
  GenusContext ctx = context_from(j);
  const json& arcs = field(j, "arcs");
  const json& faces = field(j, "faces");
  if (!arcs.is_array() || !faces.is_array()) bad("'arcs' and 'faces' must be arrays");
  const int n = static_cast<int>(arcs.size());
  std::vector<Word> labels(n);
  std::vector<bool> seen(n, false);
  for (const json& a : arcs) {
    int id = integer(field(a, "id"), "arc id");
    if (id < 0 || id >= n || seen[id]) bad("arc ids must be 0.." + std::to_string(n - 1));
    seen[id] = true;
    labels[id] = ctx.parse(text(field(a, "label"), "arc label"));
    bool boundary = a.contains("boundary") && a["boundary"].is_boolean() && a["boundary"].get<bool>();
    if (boundary != (id == 0)) bad("the boundary arc must be arc 0, and only arc 0");
  }
  std::vector<std::array<Dart, 3>> tris;
  for (const json& f : faces) {
    if (!f.is_array() || f.size() != 3) bad("faces must list three directed arcs");
    std::array<Dart, 3> tri{};
    for (int k = 0; k < 3; ++k) {
      const std::string& s = text(f[k], "directed arc");
      if (s.size() < 2 || (s[0] != '+' && s[0] != '-') ||
          s.find_first_not_of("0123456789", 1) != std::string::npos || s.size() > 8)
        bad("directed arc '" + s + "' must look like +3 or -3");
      int id = std::stoi(s.substr(1));
      if (id >= n) bad("face refers to unknown arc " + std::to_string(id));
      tri[k] = 2 * id + (s[0] == '-' ? 1 : 0);
    }
    tris.push_back(tri);
  }
  return Triangulation(ctx, std::move(labels), std::move(tris));
}

json to_json(const FlipPath& path) {
  return {{"schema", kSchemaVersion}, {"triangulation", to_json(path.base)}, {"flips", path.arcs}};
}

FlipPath flip_path_from_json(const json& j) {
  check_schema(j);
  FlipPath path{triangulation_from_json(field(j, "triangulation")), {}};
  const json& flips = field(j, "flips");
  if (!flips.is_array()) bad("'flips' must be an array");
  for (const json& f : flips) path.arcs.push_back(integer(f, "flip"));
  return path;
}

json to_json(const ReductionStep& step, const GenusContext& ctx) {
  json j = {{"move", to_string(step.move)},
            {"rationale", to_string(step.rationale)},
            {"side", step.side},
            {"length_before", step.length_before},
            {"length_after", step.length_after},
            {"removed_arc", ctx.format(step.nielsen.removed_label)},
            {"added_arc", ctx.format(step.nielsen.added_label)},
            {"substitution", step.nielsen.description}};
  if (step.rationale == Rationale::Balanced) j["energy_change"] = step.energy_change;
  return j;
}

json to_json(const ReductionTrace& trace) {
  json steps = json::array();
  for (const ReductionStep& s : trace.steps) steps.push_back(to_json(s, trace.start.context()));
  return {{"schema", kSchemaVersion},
          {"start", to_json(trace.start)},
          {"steps", steps},
          {"final", to_json(trace.final_domain)},
          {"path", to_json(trace.path())}};
}

json to_json(const RelationLoop& loop) {
  json moves = json::array();
  for (const TriangleCSMove& m : loop.moves) moves.push_back(to_string(m));
  json varying = json::array();
  for (const Word& w : loop.varying_arcs) varying.push_back(loop.base.context().format(w));
  return {{"class", to_string(loop.kind)}, {"moves", moves}, {"varying_arcs", varying}};
}

json to_json(const LoopCensus& census) {
  json counts = json::object();
  for (LoopClass c : {LoopClass::Involution, LoopClass::Commutation, LoopClass::Triangle,
                      LoopClass::PentagonType, LoopClass::Unclassified}) {
    auto it = census.counts.find(c);
    counts[to_string(c)] = it == census.counts.end() ? 0 : it->second;
  }
  json lengths = json::object();
  for (auto [len, count] : census.lengths) lengths[std::to_string(len)] = count;
  json loops = json::array();
  json unclassified = json::array();
  for (const RelationLoop& l : census.loops) {
    loops.push_back(to_json(l));
    if (l.kind == LoopClass::Unclassified) unclassified.push_back(to_json(l));
  }
  return {{"schema", kSchemaVersion},
          {"max_len", census.max_len},
          {"total", census.loops.size()},
          {"counts", counts},
          {"lengths", lengths},
          {"unclassified", unclassified},
          {"loops", loops}};
}

json to_json(const ChordDiagram& d) {
  json chords = json::array();
  for (auto [a, b] : d.chords()) chords.push_back({a, b});
  json j = {{"schema", kSchemaVersion},
            {"genus", d.context.genus()},
            {"slots", d.slots()},
            {"chords", chords}};
  if (d.labelled()) {
    json labels = json::array();
    for (const Word& w : d.labels) labels.push_back(d.context.format(w));
    j["labels"] = labels;
  }
  return j;
}

}  // namespace fatnielsen
