#include "creatures.hpp"

#include "decpi/formats.hpp"

namespace decpi::testing {

Term t(const char* text) { return parse_term(text); }

}  // namespace decpi::testing
