#pragma once

#include "mcat/enriched.hpp"
#include "mcat/prop.hpp"
#include "mcat/short.hpp"
#include "mcat/table_mc.hpp"
#include "mcat/vfinset.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>

namespace mcat {

using Json = nlohmann::json;

// Raised on unreadable files, malformed JSON, or payloads whose shape does
// not match the documented schema.  Semantic problems (tables that fail the
// laws) are NOT raised here; they belong to the check_* reports.
struct JsonError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

// {"source": n, "target": m, "values": [..]}
Json ordmap_to_json(const OrdMap& f);
OrdMap ordmap_from_json(const Json& j);

// {"sources": [..sizes..], "target": size, "table": [..]}
Json multimap_to_json(const MultiMap& m);
MultiMap multimap_from_json(const Json& j);

// {"kind":"instance","colors":[names],"generators":[{name,sources,target}],
//  "composites":[{"index":OrdMap,"arguments":[ids],"outer":id,"result":id}]}
// Identities are implicit: morphism ids 1..C are the color identities in
// color order, generators follow in listed order.
Json instance_to_json(const TableInstance& v);
TableInstance instance_from_json(const Json& j);

// {"kind":"category","objects":[names],
//  "homs":[{"from","to","size"}],
//  "kappa":[{"x","y","z","map":MultiMap}],
//  "idents":[{"at","map":MultiMap}]}
Json category_to_json(const VCategory<FinSetInstance>& c);
VCategory<FinSetInstance> category_from_json(const Json& j);

// {"kind":"functor","sources":[category..],"target":category,
//  "objects":[{"at":[names],"to":name}],
//  "components":[{"from":[names],"to":[names],"map":MultiMap}]}
Json functor_to_json(const MultiEntryFunctor<FinSetInstance>& f);
MultiEntryFunctor<FinSetInstance> functor_from_json(const Json& j);

// {"kind":"transformation","source":functor,"target":functor,
//  "components":[{"at":[names],"map":MultiMap}]}
Json transformation_to_json(const VNatTransformation<FinSetInstance>& t);
VNatTransformation<FinSetInstance> transformation_from_json(const Json& j);

// {"kind":"prop-morphism","source":[sizes],"target":[sizes],
//  "index":OrdMap,"components":[MultiMap..]}
Json prop_morphism_to_json(const PropMorphism<FinSetInstance>& m);
PropMorphism<FinSetInstance> prop_morphism_from_json(const Json& j);

// Exact rationals travel as strings "p/q" (or "p"); integer JSON numbers are
// accepted on input.
Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

// {"rows": r, "cols": c, "entries": ["p/q", ..]} row-major
Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j);

// {"kind":"short-space","dim": d,
//  "levels":[{"l": level, "W": Mat, "functionals": Mat}..]}
// Levels are listed with consecutive ascending l; the window is their range.
Json space_to_json(const ShortSpace& s);
ShortSpace space_from_json(const Json& j);

// {"kind":"short-map","sources":[space..],"target":space,
//  "shape":[source dims.., target dim],"coefficients":["p/q"..]}
Json short_map_to_json(const ShortMultiMap& f);
ShortMultiMap short_map_from_json(const Json& j);

}  // namespace mcat
