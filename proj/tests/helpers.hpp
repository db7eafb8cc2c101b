#pragma once

#include <string>
#include <vector>

#include "elliptica/quotient.hpp"
#include "elliptica/text.hpp"

namespace testing_helpers {

using namespace elliptica;

inline ContextPtr ctx_of(std::vector<int> w) { return GradedContext::make(std::move(w)); }

inline Polynomial P(const ContextPtr& ctx, const std::string& s) { return parse_polynomial(ctx, s); }

inline Presentation pres(std::vector<int> w, const std::vector<std::string>& rels) {
  ContextPtr ctx = ctx_of(std::move(w));
  std::vector<Polynomial> ps;
  for (const auto& r : rels) ps.push_back(parse_polynomial(ctx, r));
  return Presentation(ctx, std::move(ps));
}

inline Presentation example1() { return pres({2, 2}, {"x1^2 - x2^2", "x1*x2"}); }
inline Presentation example1_bad() { return pres({2, 2}, {"x1^2", "x1*x2"}); }

}  // namespace testing_helpers
