#pragma once

#include <string>

#include "dictlp/dictionary.hpp"

namespace dictlp::cli {

/**
 * Prints a dictionary one equation per line in textbook style:
 *
 *     x4 = 18 - 4x1 - 2x2 + 2x3
 *     x5 = -3 + x1 + x2 + 2x3
 *     z = 8x1 + 11x2 - 10x3
 *
 * Rows follow basis order, terms follow nonbasis order, zero terms are
 * dropped and unit magnitudes are left implicit. The objective constant is
 * omitted when it is zero and some term remains. Dual dictionaries use `y`
 * and `-w`. Every line ends in '\n'.
 */
std::string format_dictionary(const Dictionary& d);

/// "x5" or "y5" depending on the side.
std::string variable_name(Side side, std::size_t index);

}  // namespace dictlp::cli
