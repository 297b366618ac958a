#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "zetascan/special_functions.hpp"

namespace zetascan {

// Complex literal: "1.5", "-2i", "0.5+14.1i", "1e-3-2.5e+1i". The split
// point is the last sign that is neither the leading character nor part of
// an exponent; each side must be a complete finite double. Throws
// std::invalid_argument otherwise.
Complex parse_complex(const std::string& text);

// "lo:hi" with two finite doubles (ordering is the caller's concern).
// Throws std::invalid_argument otherwise.
std::pair<double, double> parse_range(const std::string& text);

// "NxM" with two decimal counts in [1, 1000000]. Throws
// std::invalid_argument otherwise.
std::pair<std::uint32_t, std::uint32_t> parse_dims(const std::string& text);

}  // namespace zetascan
