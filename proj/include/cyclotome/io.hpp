#pragma once

// JSON input formats.
//
//   monoid:    {"kind": "monoid", "elements": [..], "table": [[..]..], "identity": i}
//   category:  {"kind": "category", "objects": [..],
//               "arrows": [{"name", "source", "target"}..], "identities": [..],
//               "table": [[k or null ..]..]}            table[f][g] = f then g
//   colimit:   {"kind": "colimit", "cells": [{"dim": n}..],
//               "relations": [{"level": p, "left": {"cell": a, "values": [F(0)..F(p)]},
//                              "right": {"cell": b, "values": [..]}}..]}
//   representable: {"kind": "representable", "n": n}
//   algebra:   {"field": "Q" | {"Fp": p}, "basis": [{"name", "degree"}..], "unit": i,
//               "products": [[i, j, k, "c"]..], "commutative": bool}

#include <memory>
#include <string>

#include "json.hpp"

#include "cyclotome/algebra.hpp"
#include "cyclotome/colimit.hpp"
#include "cyclotome/cyclic_set.hpp"
#include "cyclotome/nerve.hpp"

namespace cyclotome {

using Json = nlohmann::ordered_json;

/// Parses a file; syntax errors become InputError with the path and line.
Json load_json_file(const std::string& path);
/// Same for in-memory text; `origin` names the source in messages.
Json parse_json_text(const std::string& text, const std::string& origin);

FiniteMonoid monoid_from_json(const Json& j);
FiniteCategory category_from_json(const Json& j);
CyclicPresentation presentation_from_json(const Json& j);
GradedAlgebra algebra_from_json(const Json& j);

Json to_json(const FiniteMonoid& M);
Json to_json(const GradedAlgebra& A);

/// A cyclic set from any of the cyclic-set kinds above.
std::shared_ptr<const CyclicSet> cyclic_set_from_json(const Json& j, int truncation);

/// Parses "3", "-2", "1/3" or "0.25" exactly.
mpq_class parse_rational(const std::string& s);

}  // namespace cyclotome
