#pragma once

#include <iosfwd>
#include <string>

#include "resurgence/monomial_ideal.hpp"

namespace resurgence {

/// Ideal text format: first line lists the variable names separated by
/// spaces; each following line is one generator written as `var^exp` tokens
/// with the exponent omitted when it is 1.  A single line `1` denotes the
/// unit ideal; no generator lines denote the zero ideal.
MonomialIdeal read_ideal(std::istream& in);
MonomialIdeal read_ideal_file(const std::string& path);
void write_ideal(std::ostream& out, const MonomialIdeal& I);
std::string ideal_to_string(const MonomialIdeal& I);

}  // namespace resurgence
