#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "rthy/channels.hpp"
#include "rthy/encoding.hpp"
#include "rthy/extended.hpp"
#include "rthy/lp.hpp"
#include "rthy/majorize.hpp"
#include "rthy/monotone.hpp"
#include "rthy/order.hpp"
#include "rthy/possibilistic.hpp"
#include "rthy/quantale.hpp"

namespace rthy::io {

using json = nlohmann::json;

// Every reader throws Error(ParseError) on malformed input.
json read_file(const std::string& path);

json to_json(const Rational& v);
json to_json(const Extended& v);
json to_json(const Vector& v);
Rational rational_from_json(const json& j);  // "p/q" string or integer
Extended extended_from_json(const json& j);  // also "+inf", "-inf"
Vector vector_from_json(const json& j);

// Row-major list of rows.
json matrix_to_json(const RationalMatrix& m);
json bool_matrix_to_json(const BoolMatrix& m);

// {"hypotheses": h, "outcomes": n, "columns": [[...], ...]}
Encoding encoding_from_json(const json& j);
json encoding_to_json(const Encoding& x);

// A bare array, or {"distribution": [...]}.
Vector distribution_from_json(const json& j);

// {"size": n, "pairs": [[i, j], ...]} with i >= j.
FinitePreorder preorder_from_json(const json& j);
json preorder_to_json(const FinitePreorder& p);

// {"T": [...], "X": [...], "unit": [...], "free": [...],
//  "star": {"t,u": [...]}, "act": {"t,x": [...]}}
FiniteQuantaleModule module_from_json(const json& j);
json module_to_json(const FiniteQuantaleModule& m);

// {"R": [...], "unit": [...], "free": [...], "box": {"a,b": [...]}}
CommutativeQuantale quantale_from_json(const json& j);

// {"hypotheses": h, "input": a, "output": b, "columns": {"h,a": [...]}}
ChannelEncoding channel_from_json(const json& j);
json channel_to_json(const ChannelEncoding& psi);

// {"name": value, ...} over a subset of the given names.
PartialValuation valuation_from_json(const json& j, const std::vector<std::string>& names);
json valuation_to_json(const PartialValuation& f, const std::vector<std::string>& names);

// {"generators": [[image of names[0], image of names[1], ...], ...]}
PermutationAction action_from_json(const json& j, const std::vector<std::string>& names);

ElementSet set_from_json(const json& j, const std::vector<std::string>& names);
json set_to_json(const ElementSet& s, const std::vector<std::string>& names);

json points_to_json(const std::vector<Point2>& pts);
json violations_to_json(const std::vector<Violation>& vs);

}  // namespace rthy::io
