// fatnielsen: command-line front end for polygon domains, cut-slide paths,
// triangulations and chord diagrams. Structured output is JSON on stdout;
// failures are a JSON record on stderr.
//
// Exit codes: 0 success, 1 invalid input or usage, 2 a domain or flip path
// on which the reduction or translation gets stuck, 3 internal error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "fatnielsen/json_io.hpp"
#include "fatnielsen/random_walk.hpp"

using namespace fatnielsen;

namespace {

struct Failure {
  int code;
  json record;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::UsageError, "cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

json read_json(const std::string& path) {
  const std::string text = read_input(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError,
                (path.empty() || path == "-" ? std::string("stdin") : path) + ": " + e.what());
  }
}

void require_valid(const PolygonDomain& p) {
  ValidationReport r = validate(p);
  if (!r.ok()) throw Error(ErrorKind::PreconditionViolation, "invalid polygon domain: " + r.violations.front());
}

// --domain accepts a file, "-" for stdin, or "standard" (needs --genus).
PolygonDomain load_domain(const std::string& source, std::optional<int> genus) {
  if (source == "standard") {
    if (!genus) throw Error(ErrorKind::UsageError, "--domain standard needs --genus");
    if (*genus < 1) throw Error(ErrorKind::UsageError, "--genus must be at least 1");
    return standard_domain(GenusContext(*genus));
  }
  PolygonDomain p = domain_from_json(read_json(source));
  if (genus && *genus != p.genus())
    throw Error(ErrorKind::UsageError, "--genus " + std::to_string(*genus) +
                                           " does not match the domain's genus " +
                                           std::to_string(p.genus()));
  require_valid(p);
  return p;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int run_reduce(const std::string& source, std::optional<int> genus, bool trace) {
  const PolygonDomain p = load_domain(source, genus);
  const ReductionTrace t = reduce(p);
  if (!trace) {
    emit(to_json(t));
    return 0;
  }
  for (std::size_t k = 0; k < t.steps.size(); ++k) {
    json line = to_json(t.steps[k], p.context());
    line["schema"] = kSchemaVersion;
    line["step"] = k + 1;
    std::cout << line.dump() << '\n';
  }
  std::cout << json{{"schema", kSchemaVersion}, {"steps", t.steps.size()},
                    {"final", to_json(t.final_domain)}}
                   .dump()
            << '\n';
  return 0;
}

int run_factorize(int genus, const std::string& map_path) {
  if (genus < 1) throw Error(ErrorKind::UsageError, "--genus must be at least 1");
  const GenusContext ctx(genus);
  const MappingClass phi = mapping_class_from_json(read_json(map_path), ctx);
  const Factorization f = factorize_mapping_class(phi, ctx);
  json substitution = json::array();
  for (const BasisWord& w : f.composed) substitution.push_back(format(w, "x"));
  const CSPath path = f.trace.path();
  json moves = json::array();
  for (const TriangleCSMove& m : path.moves) moves.push_back(to_string(m));
  emit({{"schema", kSchemaVersion},
        {"genus", genus},
        {"map", to_json(phi, ctx)},
        {"domain", to_json(path.base)},
        {"length", path.moves.size()},
        {"moves", moves},
        {"composed", substitution},
        {"recovered", to_json(f.recovered, ctx)}});
  return 0;
}

int run_random_walk(int genus, int steps, std::uint64_t seed, const std::string& source) {
  if (genus < 1) throw Error(ErrorKind::UsageError, "--genus must be at least 1");
  if (steps < 0) throw Error(ErrorKind::UsageError, "--steps must be >= 0");
  const PolygonDomain start = load_domain(source, genus);
  const RandomWalk w = random_walk(start, steps, seed);
  json out = to_json(w.domain);
  json moves = json::array();
  for (const TriangleCSMove& m : w.path.moves) moves.push_back(to_string(m));
  out["prng"] = "splitmix64";
  out["seed"] = seed;
  out["steps"] = steps;
  out["start"] = to_json(start);
  out["moves"] = moves;
  emit(out);
  return 0;
}

int run_verify(std::optional<int> genus, const std::string& domain, bool relations,
               int max_loop, const std::string& triangulation) {
  if (relations) {
    if (!genus && domain.empty())
      throw Error(ErrorKind::UsageError, "verify --relations needs --genus or --domain");
    const PolygonDomain base = load_domain(domain.empty() ? "standard" : domain, genus);
    emit(to_json(loop_census(base, max_loop)));
    return 0;
  }
  if (!triangulation.empty()) {
    const Triangulation t = triangulation_from_json(read_json(triangulation));
    const std::vector<std::string> v = validate(t);
    emit({{"schema", kSchemaVersion}, {"valid", v.empty()}, {"violations", v}});
    return v.empty() ? 0 : 1;
  }
  const PolygonDomain p =
      domain == "standard" ? load_domain(domain, genus) : domain_from_json(read_json(domain));
  const ValidationReport r = validate(p);
  emit({{"schema", kSchemaVersion},
        {"valid", r.ok()},
        {"violations", r.violations},
        {"length", p.length()},
        {"energy", p.energy().str()}});
  return r.ok() ? 0 : 1;
}

int run_triangulate(const std::string& source, std::optional<int> genus) {
  emit(to_json(fan_triangulate(load_domain(source, genus))));
  return 0;
}

int run_extract(const std::string& source) {
  const Triangulation t = triangulation_from_json(read_json(source));
  const GreedyResult g = greedy(t);
  json removed = json::array();
  for (int a : g.order)
    if (g.removed[a]) removed.push_back(a);
  json out = to_json(g.domain);
  out["removed_arcs"] = removed;
  emit(out);
  return 0;
}

int run_translate(const std::string& source) {
  const FlipPath path = flip_path_from_json(read_json(source));
  const FlipTranslation tr = translate_flips(path);
  json out = to_json(tr.path);
  out["final"] = to_json(tr.path.endpoint());
  out["cut_slide_steps"] = tr.cut_slide_steps;
  out["connector_steps"] = tr.connector_steps;
  emit(out);
  return 0;
}

int run_render(const std::string& source, std::optional<int> genus, const std::string& format) {
  const ChordDiagram d = to_chord_diagram(load_domain(source, genus));
  std::cout << render(d, format);
  return 0;
}

Failure failure_of(const Error& e) {
  json record{{"schema", kSchemaVersion}, {"error", to_string(e.kind())}, {"message", e.what()}};
  int code = 1;
  switch (e.kind()) {
    case ErrorKind::StuckDomain:
      code = 2;
      if (auto* s = dynamic_cast<const StuckDomainError*>(&e)) record["domain"] = to_json(s->domain());
      break;
    case ErrorKind::MultiArcDiscrepancy:
      code = 2;
      if (auto* m = dynamic_cast<const MultiArcDiscrepancyError*>(&e)) {
        record["before"] = to_json(m->before());
        record["after"] = to_json(m->after());
      }
      break;
    case ErrorKind::InternalInvariantViolation:
    case ErrorKind::CompositionMismatch:
      code = 3;
      break;
    default:
      break;
  }
  return {code, record};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cut-slide reduction of polygon domains and related tools", "fatnielsen"};
  app.require_subcommand(1);
  std::string output;
  app.add_option("-o,--output", output, "Write results to this file instead of stdout");

  std::optional<int> genus;
  std::string domain, map_path, triangulation, flips, format;
  int steps = 0, max_loop = 4;
  std::uint64_t seed = 0;
  bool trace = false, relations = false;

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a polygon domain to the standard one");
  reduce_cmd->add_option("--genus", genus, "Genus (required with --domain standard)");
  reduce_cmd->add_option("--domain", domain, "Domain JSON file, '-' for stdin, or 'standard'");
  reduce_cmd->add_flag("--trace", trace, "Emit one JSON line per step");

  auto* factorize_cmd = app.add_subcommand("factorize", "Factor a mapping class into CS moves");
  int factor_genus = 1;
  factorize_cmd->add_option("--genus", factor_genus, "Genus")->required();
  factorize_cmd->add_option("--map", map_path, "Mapping class JSON file")->required();

  auto* walk_cmd = app.add_subcommand("random-walk", "Random CS walk from a domain");
  int walk_genus = 1;
  std::string walk_start = "standard";
  walk_cmd->add_option("--genus", walk_genus, "Genus")->required();
  walk_cmd->add_option("--steps", steps, "Number of moves")->required();
  walk_cmd->add_option("--seed", seed, "PRNG seed");
  walk_cmd->add_option("--domain", walk_start, "Start domain (default: standard)");

  auto* verify_cmd = app.add_subcommand("verify", "Validate a domain or run the loop census");
  verify_cmd->add_option("--genus", genus, "Genus");
  verify_cmd->add_option("--domain", domain, "Domain JSON file or 'standard'");
  verify_cmd->add_option("--triangulation", triangulation, "Triangulation JSON file");
  verify_cmd->add_flag("--relations", relations, "Enumerate and classify short loops");
  verify_cmd->add_option("--max-loop", max_loop, "Longest loop searched");

  auto* tri_cmd = app.add_subcommand("triangulate", "Fan triangulation of a domain");
  tri_cmd->add_option("--genus", genus, "Genus (required with --domain standard)");
  tri_cmd->add_option("--domain", domain, "Domain JSON file, '-' for stdin, or 'standard'");

  auto* extract_cmd = app.add_subcommand("extract", "Greedy polygon domain of a triangulation");
  extract_cmd->add_option("--triangulation", triangulation, "Triangulation JSON file (default stdin)");

  auto* translate_cmd = app.add_subcommand("translate-flips", "Turn a flip path into a CS path");
  translate_cmd->add_option("--flips", flips, "Flip path JSON file (default stdin)");

  auto* render_cmd = app.add_subcommand("render", "Draw the chord diagram of a domain");
  render_cmd->add_option("--genus", genus, "Genus (required with --domain standard)");
  render_cmd->add_option("--domain", domain, "Domain JSON file, '-' for stdin, or 'standard'");
  render_cmd->add_option("--format", format, "ascii, dot or svg")->required();

  auto dispatch = [&]() -> int {
    try {
      if (*reduce_cmd) return run_reduce(domain, genus, trace);
      if (*factorize_cmd) return run_factorize(factor_genus, map_path);
      if (*walk_cmd) return run_random_walk(walk_genus, steps, seed, walk_start);
      if (*verify_cmd) return run_verify(genus, domain, relations, max_loop, triangulation);
      if (*tri_cmd) return run_triangulate(domain, genus);
      if (*extract_cmd) return run_extract(triangulation);
      if (*translate_cmd) return run_translate(flips);
      if (*render_cmd) return run_render(domain, genus, format);
    } catch (const Error& e) {
      Failure f = failure_of(e);
      std::cerr << f.record.dump() << '\n';
      return f.code;
    } catch (const std::exception& e) {
      std::cerr << json{{"schema", kSchemaVersion}, {"error", "InternalError"}, {"message", e.what()}}.dump()
                << '\n';
      return 3;
    }
    return 1;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << json{{"schema", kSchemaVersion}, {"error", "UsageError"}, {"message", e.what()}}.dump()
              << '\n';
    return 1;
  }

  std::ofstream out_file;
  std::streambuf* const stdout_buf = std::cout.rdbuf();
  if (!output.empty()) {
    out_file.open(output);
    if (!out_file) {
      std::cerr << json{{"schema", kSchemaVersion}, {"error", "UsageError"},
                        {"message", "cannot write '" + output + "'"}}.dump()
                << '\n';
      return 1;
    }
    std::cout.rdbuf(out_file.rdbuf());
  }
  const int code = dispatch();
  std::cout.flush();
  std::cout.rdbuf(stdout_buf);
  return code;
}
