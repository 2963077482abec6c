#ifndef ISOP_SPECFILE_HPP
#define ISOP_SPECFILE_HPP

#include <string>

#include "types.hpp"

namespace isop {

struct SpecDocument {
  ProblemSpec problem;
  Options options;
};

// Parses the JSON problem document. The schema is strict: unknown keys are
// rejected, integer fields must be integer tokens. Parse errors carry
// line/column anchors; validation errors name the offending field.
SpecDocument parse_spec_document(const std::string& text);

// Reads and parses a document from disk (Error(Io) if unreadable).
SpecDocument load_spec_document(const std::string& path);

} // namespace isop

#endif
