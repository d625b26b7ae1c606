#ifndef SECANT_CONGRUENCE_IO_HPP
#define SECANT_CONGRUENCE_IO_HPP

#include <string>
#include <string_view>

#include "secant/congruence.hpp"

namespace secant::congruence {

// Plain-text congruence files. Blank lines and text after '#' are ignored.
//
//   n 5
//   kind linear
//   matrix 1
//   0 1 -2 0 3 1        (n+1 rows of n+1 entries, one block per matrix)
//   ...
//
//   n 3
//   kind determinantal
//   1 0 0 0 | 0 1 0 0   (n rows, each n-1 groups of n+1 coefficients)
//
// Entries are integers; p/q is accepted on input.

std::string serialize(const Congruence& c);
Congruence parse_congruence(std::string_view text);
Congruence load_congruence(const std::string& path);
void save_congruence(const Congruence& c, const std::string& path);

}  // namespace secant::congruence

#endif  // SECANT_CONGRUENCE_IO_HPP
