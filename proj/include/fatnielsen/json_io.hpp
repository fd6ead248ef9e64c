#pragma once

#include "json.hpp"

#include "fatnielsen/chord_diagram.hpp"
#include "fatnielsen/reduction.hpp"
#include "fatnielsen/relations.hpp"
#include "fatnielsen/triangulation.hpp"

namespace fatnielsen {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Every reader throws ParseError on a malformed document (and UnknownLetter
// for words outside the alphabet). Readers do not run semantic validation.

// {"schema":1,"genus":1,"sides":["b1","a1","B1","A1"],"pairing":[[1,3],[2,4]]}
json to_json(const PolygonDomain& p);
PolygonDomain domain_from_json(const json& j);

// {"schema":1,"genus":1,"images":{"a1":"a1","b1":"b1 a1"}}
json to_json(const MappingClass& phi, const GenusContext& ctx);
// The document's genus, if present, must match ctx.
MappingClass mapping_class_from_json(const json& j, const GenusContext& ctx);
int genus_from_json(const json& j);

json to_json(const CSPath& path);
CSPath cs_path_from_json(const json& j);

// Faces list directed arcs as "+k" (along the label of arc k) or "-k".
json to_json(const Triangulation& t);
Triangulation triangulation_from_json(const json& j);

json to_json(const FlipPath& path);
FlipPath flip_path_from_json(const json& j);

json to_json(const ReductionStep& step, const GenusContext& ctx);
json to_json(const ReductionTrace& trace);
json to_json(const RelationLoop& loop);
json to_json(const LoopCensus& census);
json to_json(const ChordDiagram& d);

}  // namespace fatnielsen
