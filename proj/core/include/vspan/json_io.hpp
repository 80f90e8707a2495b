#pragma once

#include <string>

#include "vspan/diagram.hpp"
#include "vspan/laurent.hpp"
#include "vspan/surface.hpp"
#include "vspan/verify.hpp"

namespace vspan {

// JSON text forms.  Schemas are stable:
//   diagram:  {"components": [[{"label", "role": "O"|"U", "sign"}, ...], ...]}
//             (an empty component is a free loop)
//   laurent:  [[exponent, "coefficient"], ...] ascending, exact integers
//   surface:  {"boundary", "genus", "m", "proper",
//              "crossings": [{"id", "proper", "faces": [4 ids]}, ...]}
//   report:   {"subject", "applicable", "note", "measured", "predicted",
//              "checks", "passed"}
//   census:   {"samples", "outcomes": {check: {"applicable", "passed"}},
//              "groups": [{"c", "span_genus": [[span, genus], ...]}],
//              "all_passed"}
std::string to_json(const Diagram& d);
std::string to_json(const LaurentPoly& p);
std::string to_json(const SurfaceSummary& s);
std::string to_json(const Report& r);
std::string to_json(const CensusReport& c);

// Inverse of to_json(Diagram); throws ParseError on malformed JSON and
// ValidationError on structurally bad codes.
Diagram diagram_from_json(const std::string& text);

} // namespace vspan
