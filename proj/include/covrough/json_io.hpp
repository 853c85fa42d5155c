#ifndef COVROUGH_JSON_IO_HPP
#define COVROUGH_JSON_IO_HPP

#include <string>

#include "covrough/covering.hpp"
#include "covrough/universe.hpp"

namespace covrough {

/// Parses a covering document:
///   {"universe": ["a","b","c"], "blocks": [["a","b"],["a","c"]]}
/// Block order and in-block order are non-semantic. Throws covrough::error
/// on malformed JSON or any covering-invariant violation.
Covering parse_covering(const std::string& text, int cap = Universe::default_cap);

/// Canonical single-line document: universe in stored order, blocks sorted
/// by mask, in-block labels in element order. parse(print(c)) == c.
std::string print_covering(const Covering& c);

}  // namespace covrough

#endif
