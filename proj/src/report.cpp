#include "mysticum/report.hpp"

#include <algorithm>

namespace mysticum {

void VerificationReport::finalize() {
  pass = std::all_of(witnesses.begin(), witnesses.end(), [](const Rat& w) { return w.is_zero(); }) &&
         std::all_of(numeric.begin(), numeric.end(), [](const NumericCheck& c) { return c.ok(); });
}

const NamedPoint* VerificationReport::find_point(std::string_view label) const {
  auto it = std::find_if(points.begin(), points.end(), [&](const NamedPoint& p) { return p.label == label; });
  return it == points.end() ? nullptr : &*it;
}

const NamedLine* VerificationReport::find_line(std::string_view label) const {
  auto it = std::find_if(lines.begin(), lines.end(), [&](const NamedLine& l) { return l.label == label; });
  return it == lines.end() ? nullptr : &*it;
}

}  // namespace mysticum
