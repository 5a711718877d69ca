#pragma once

#include <functional>
#include <string>
#include <utility>

#include "heavenlift/charts.hpp"
#include "heavenlift/errors.hpp"
#include "heavenlift/jets.hpp"

namespace heavenlift {

// A scalar field presented as "give me your truncated Taylor expansion at this
// point".  Evaluators may throw SingularPointError at points outside their
// domain (branch cuts, vanishing denominators, nonpositive arguments of logs).
struct FieldEvaluator {
  ChartId chart = ChartId::ORIGINAL;
  std::string label;
  std::function<Jet(const Point4&, int)> eval;

  Jet operator()(const Point4& pt, int order) const { return eval(pt, order); }
};

inline FieldEvaluator custom_field(ChartId chart, std::string label,
                                   std::function<Jet(const Point4&, int)> fn) {
  return FieldEvaluator{chart, std::move(label), std::move(fn)};
}

// Predicate for samplers: true where the evaluator succeeds.
inline std::function<bool(const Point4&)> field_domain(FieldEvaluator field,
                                                       int order = 2) {
  return [field = std::move(field), order](const Point4& pt) {
    try {
      field(pt, order);
      return true;
    } catch (const Error&) {
      return false;
    }
  };
}

}  // namespace heavenlift
