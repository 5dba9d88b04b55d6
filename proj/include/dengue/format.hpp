#ifndef DENGUE_FORMAT_HPP
#define DENGUE_FORMAT_HPP

#include <string>

namespace dengue {

/// Plain decimal with up to 12 significant digits (CSV cells, summaries).
std::string format_number(double value);

/// Shortest decimal that parses back to exactly the same double; integral
/// values print without an exponent (descriptors, config files).
std::string format_exact(double value);

} // namespace dengue

#endif
