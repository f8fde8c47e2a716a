#pragma once

#include <cmath>
#include <map>
#include <string>

namespace bshift {

enum class relation { le, ge, eq };

inline const char* relation_symbol(relation r) {
  switch (r) {
    case relation::le: return "<=";
    case relation::ge: return ">=";
    case relation::eq: return "==";
  }
  return "?";
}

// One verified inequality: both sides, the relation, the signed margin
// rhs - lhs, and pass/fail at the tolerance recorded in params["tol"].
struct bound_certificate {
  std::string name;
  std::map<std::string, double> params;
  double lhs = 0.0;
  double rhs = 0.0;
  relation rel = relation::le;
  bool pass = false;

  double margin() const { return rhs - lhs; }
};

inline bound_certificate make_certificate(std::string name,
                                          std::map<std::string, double> params,
                                          double lhs, double rhs, relation rel,
                                          double tol) {
  bound_certificate c;
  c.name = std::move(name);
  c.params = std::move(params);
  c.params["tol"] = tol;
  c.lhs = lhs;
  c.rhs = rhs;
  c.rel = rel;
  switch (rel) {
    case relation::le: c.pass = lhs <= rhs + tol; break;
    case relation::ge: c.pass = lhs >= rhs - tol; break;
    case relation::eq: c.pass = std::abs(lhs - rhs) <= tol; break;
  }
  return c;
}

}  // namespace bshift
