#ifndef MODEQ_PRESENTATION_IO_HPP
#define MODEQ_PRESENTATION_IO_HPP

#include <iosfwd>

#include "modeq/graded.hpp"

namespace modeq {

// JSON import/export of graded presentations (schema 1); the layout is
// documented in the README. Invariant definitions and the xi/lambda
// monomials are polynomial expression strings over the generator names.
GradedPresentation parse_presentation_json(std::istream& in);
GradedPresentation parse_presentation_json_file(const std::string& path);
std::string serialize_presentation_json(const GradedPresentation& pres);

} // namespace modeq

#endif
