#pragma once

#include "pbv/poisson.hpp"

#include <map>
#include <string>
#include <string_view>

namespace pbv {

/// A parsed structure description: sections [ring], [dual_basis], [volume],
/// [poisson], [options] with key = value lines and # comments. Omitting
/// [dual_basis] gives the identity matrix; omitting [volume] gives the free
/// default a = b = {(x_1..x_n) -> 1}.
struct InputDocument {
  PoissonStructure structure;
  std::map<std::string, std::string> options;
};

/// Parses a document from text; `source` names it in error messages.
/// Throws ParseError (with line/column) on malformed input.
InputDocument parse_document(const std::string& text, const std::string& source = "<input>");

/// Reads and parses a file; a missing or unreadable file is a ParseError
/// at line 0.
InputDocument load_document(const std::string& path);

/// Parses "(poly) (d x)* ^ (d y)* + ..." into a multivector; "0" is the
/// degree-0 zero. Every term must have the same number of factors.
Multivector parse_multivector(const PresPtr& pres, std::string_view text);

/// Parses "(poly) d x ^ d y + ..." into a form.
KForm parse_kform(const PresPtr& pres, std::string_view text);

} // namespace pbv
