#include "pperm/polynomial.hpp"

namespace pperm {

RatPoly to_rat(const MultiPoly& p) {
  RatPoly out;
  for (const auto& [m, c] : p.terms()) out.add_term(m, Rat(c));
  return out;
}

MultiPoly substitute_scalars(const MultiPoly& p, const std::map<std::string, MultiPoly>& bind) {
  std::map<Variable, MultiPoly> b;
  for (const auto& [name, val] : bind) b.emplace(Variable::scalar(name), val);
  return p.substitute(b);
}

Int coefficient_sum(const MultiPoly& p) {
  Int s = 0;
  for (const auto& [m, c] : p.terms()) s += c;
  return s;
}

}  // namespace pperm
