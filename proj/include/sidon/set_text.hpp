#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sidon/integer_set.hpp"

namespace sidon::io {

// Text format: ASCII decimal integers separated by whitespace or newlines,
// lines starting with '#' ignored, and an optional header line "mod M"
// (cyclic ambient) or "n N" (interval ambient) before the first element.
// Duplicate elements are rejected; elements may appear in any order.
IntegerSet parse_set_text(std::istream& in);
IntegerSet parse_set_string(const std::string& text);
IntegerSet parse_set_file(const std::string& path);

// Writes the optional comment lines, the ambient header if bounded, and the
// elements ten per line.
void write_set_text(std::ostream& out, const IntegerSet& set,
                    const std::vector<std::string>& comments = {});

}  // namespace sidon::io
