#pragma once

#include <string>

#include "mjlab/core.hpp"

namespace mjlab {

// Element [(M, omega), (lambda, mu), kappa] of the metaplectic real Jacobi group.
// omega(tau) = eps * principal_sqrt(c tau + d).
struct JacobiElement {
  double a = 1, b = 0, c = 0, d = 1;
  int eps = 1;
  double lambda = 0, mu = 0, kappa = 0;

  static JacobiElement identity() { return {}; }
  static JacobiElement T() { return {1, 1, 0, 1, 1, 0, 0, 0}; }
  static JacobiElement S() { return {0, -1, 1, 0, 1, 0, 0, 0}; }
  static JacobiElement heisenberg(double lambda, double mu, double kappa = 0) {
    return {1, 0, 0, 1, 1, lambda, mu, kappa};
  }
  static JacobiElement from_word(const std::string& word);

  cplx omega(cplx tau) const;
  bool valid(double tol = 1e-12) const;
  std::string to_json() const;
  static JacobiElement from_json(const std::string& text);
};

JacobiElement multiply(const JacobiElement& A, const JacobiElement& B);

enum class Action { Standard, Skew };

struct TaggedForm {
  Function f;
  WeightIndex weight;
  Action action;
};

// phi |_{k,m} A, exact jets when phi has them.
Function slash(const Function& phi, const WeightIndex& w, const JacobiElement& A);
// phi |^{sk}_{k,m} A
Function skew_slash(const Function& phi, const WeightIndex& w, const JacobiElement& A);
Function act(const Function& phi, const WeightIndex& w, Action action, const JacobiElement& A);
TaggedForm act(const TaggedForm& phi, const JacobiElement& A);

}  // namespace mjlab
