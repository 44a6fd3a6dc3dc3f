#include "pancake/format.hpp"

#include <cmath>
#include <sstream>

namespace pancake {

std::string format_number(double value) {
  // Collapse -0 so identical spectra print identically.
  if (value == 0.0) value = 0.0;
  std::ostringstream out;
  out.precision(12);
  out << value;
  std::string s = out.str();
  if (s == "-0") s = "0";
  return s;
}

double rounded_number(double value) { return std::stod(format_number(value)); }

}  // namespace pancake
