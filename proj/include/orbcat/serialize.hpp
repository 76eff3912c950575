#pragma once

#include <string>

#include "orbcat/geom.hpp"
#include "orbcat/orbit.hpp"

namespace orbcat {

// Quiver text grammar: "vertices <n>" then "arrow <s> <t>" lines, comments
// starting with '#'.
Quiver parse_quiver_text(const std::string& text);
std::string quiver_to_text(const Quiver& q);

// JSON codecs; every document carries "schema": 1. Rational entries are
// written as "p/q" strings.
std::string quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const std::string& s);

std::string field_to_json(const Field& f);
Field field_from_json(const std::string& s);

std::string complex_to_json(const Complex& c);
Complex complex_from_json(const std::string& s);

std::string db_object_to_json(const DerivedModel& model, const DbObject& x);
DbObject db_object_from_json(const DerivedModel& model, const std::string& s);

// Deterministic DOT export of the labels in a shift window, mesh edges
// given by irreducible maps, one color per F-orbit.
std::string export_ar_quiver(const OrbitHandle& h, int shift_lo, int shift_hi);

}  // namespace orbcat
