#include "flagcert/combo.hpp"

#include <stdexcept>

namespace flagcert {

GraphCombo& GraphCombo::operator+=(const GraphCombo& o) {
  if (!o.terms.empty() && !terms.empty() && level != o.level)
    throw std::invalid_argument("combo level mismatch");
  if (terms.empty()) level = o.level;
  for (const auto& [key, coeff] : o.terms) add(key, coeff);
  return *this;
}

GraphCombo& GraphCombo::operator-=(const GraphCombo& o) {
  if (!o.terms.empty() && !terms.empty() && level != o.level)
    throw std::invalid_argument("combo level mismatch");
  if (terms.empty()) level = o.level;
  for (const auto& [key, coeff] : o.terms) add(key, -coeff);
  return *this;
}

GraphCombo& GraphCombo::operator*=(const QSqrt2& scale) {
  if (scale.is_zero()) {
    terms.clear();
    return *this;
  }
  for (auto& [key, coeff] : terms) coeff *= scale;
  return *this;
}

GraphCombo operator+(GraphCombo a, const GraphCombo& b) { return a += b; }
GraphCombo operator-(GraphCombo a, const GraphCombo& b) { return a -= b; }
GraphCombo operator*(const QSqrt2& scale, GraphCombo a) { return a *= scale; }

}  // namespace flagcert
