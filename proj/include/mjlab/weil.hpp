#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mjlab/core.hpp"

namespace mjlab {

using WeilVector = Eigen::VectorXcd;
using WeilMatrix = Eigen::MatrixXcd;

enum class Generator { T, S };

// e_N(w) = exp(2 pi i w / N)
cplx e_n(double N, double w);

// rho_m(T) and rho_m(S) on C[Z/2mZ]; the dual is the entrywise conjugate.
WeilMatrix rho_generator(int two_m, Generator g, bool dual = false);
// Ordered product of generator images, e.g. "STS".
WeilMatrix rho_word(int two_m, const std::string& word, bool dual = false);

// Vector-valued function of (tau, z).
using VectorFn = std::function<WeilVector(const EvalPoint&)>;

// (rho(g) (h |_{k,m} g))(p) for a word g in T and S; index m may be zero
// for functions of tau alone.
WeilVector vector_slash(const VectorFn& h, double k, double m, const std::string& word, const EvalPoint& p,
                        int two_m_rep, bool dual);

std::string matrix_to_json(const WeilMatrix& M);

}  // namespace mjlab
