#pragma once

#include <string>

namespace pancake {

/// Decimal rendering with 12 significant digits, as used by every export.
std::string format_number(double value);

/// value rounded to the 12 significant digits that format_number prints.
double rounded_number(double value);

}  // namespace pancake
