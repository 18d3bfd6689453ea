#include "mjlab/weil.hpp"

#include "json.hpp"
#include "mjlab/group.hpp"

namespace mjlab {

cplx e_n(double N, double w) { return std::exp(2.0 * kPi * kI * w / N); }

WeilMatrix rho_generator(int two_m, Generator g, bool dual) {
  if (two_m <= 0) fail(ErrorKind::DomainError, "Weil representation needs 2m > 0");
  const double m = 0.5 * two_m;
  WeilMatrix M = WeilMatrix::Zero(two_m, two_m);
  if (g == Generator::T) {
    // representative l in [0, 2m)
    for (int l = 0; l < two_m; ++l) M(l, l) = e_n(4.0 * m, double(l) * l);
  } else {
    cplx pre = 1.0 / principal_sqrt(2.0 * kI * m);
    // column l is the image of e_l
    for (int l = 0; l < two_m; ++l)
      for (int lp = 0; lp < two_m; ++lp) M(lp, l) = pre * e_n(2.0 * m, -double(l) * lp);
  }
  return dual ? WeilMatrix(M.conjugate()) : M;
}

WeilMatrix rho_word(int two_m, const std::string& word, bool dual) {
  WeilMatrix M = WeilMatrix::Identity(two_m, two_m);
  for (char ch : word) {
    if (ch == 'T') M = M * rho_generator(two_m, Generator::T, dual);
    else if (ch == 'S') M = M * rho_generator(two_m, Generator::S, dual);
    else fail(ErrorKind::ParseError, std::string("unknown generator '") + ch + "'");
  }
  return M;
}

WeilVector vector_slash(const VectorFn& h, double k, double m, const std::string& word, const EvalPoint& p,
                        int two_m_rep, bool dual) {
  JacobiElement A = JacobiElement::from_word(word);
  cplx tau = p.tau(), z = p.z();
  cplx cd = A.c * tau + A.d;
  EvalPoint image = EvalPoint::from((A.a * tau + A.b) / cd, z / cd);
  cplx factor = std::pow(A.omega(tau), -2.0 * k) * std::exp(2.0 * kPi * kI * m * (-A.c * z * z / cd));
  return rho_word(two_m_rep, word, dual) * (factor * h(image));
}

std::string matrix_to_json(const WeilMatrix& M) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < M.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < M.cols(); ++j) row.push_back({M(i, j).real(), M(i, j).imag()});
    rows.push_back(row);
  }
  return rows.dump();
}

}  // namespace mjlab
