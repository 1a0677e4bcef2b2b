#ifndef DVKIT_PRINTER_HPP
#define DVKIT_PRINTER_HPP

#include "dvkit/ring.hpp"

#include <string>
#include <vector>

namespace dvkit {

// Canonical rendering: terms in descending grevlex, variables in context
// order inside each monomial. Printing then re-parsing yields an equal value.
std::string to_string(const ParamPoly &p, const std::vector<std::string> &names);
std::string to_string(const FieldElement &c, const std::vector<std::string> &names);
std::string to_string(const Polynomial &f);
std::string to_string(const RationalFunction &f);

} // namespace dvkit

#endif
