#ifndef FLAGCERT_COMBO_HPP
#define FLAGCERT_COMBO_HPP

#include <map>
#include <string>

#include "flagcert/canonical.hpp"
#include "flagcert/qsqrt2.hpp"

namespace flagcert {

// Linear combination of colored-graph classes expanded at a fixed vertex
// count. Keys are canonical encodings; zero coefficients are dropped.
struct GraphCombo {
  int level = 0;
  std::map<CanonicalForm, QSqrt2> terms;

  bool empty() const { return terms.empty(); }

  void add(const CanonicalForm& key, const QSqrt2& coeff) {
    if (coeff.is_zero()) return;
    QSqrt2& slot = terms[key];
    slot += coeff;
    if (slot.is_zero()) terms.erase(key);
  }

  GraphCombo& operator+=(const GraphCombo& o);
  GraphCombo& operator-=(const GraphCombo& o);
  GraphCombo& operator*=(const QSqrt2& scale);

  QSqrt2 coefficient(const CanonicalForm& key) const {
    auto it = terms.find(key);
    return it == terms.end() ? QSqrt2() : it->second;
  }

  bool operator==(const GraphCombo& o) const {
    return level == o.level && terms == o.terms;
  }
};

GraphCombo operator+(GraphCombo a, const GraphCombo& b);
GraphCombo operator-(GraphCombo a, const GraphCombo& b);
GraphCombo operator*(const QSqrt2& scale, GraphCombo a);

}  // namespace flagcert

#endif
