#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

namespace mjlab {

using cplx = std::complex<double>;

// Highest total order a jet can carry. Depth-3 quasi factorizations need 6,
// the rest of the library needs at most 4.
inline constexpr int kMaxJetOrder = 8;

// Real coordinates of a point of H x C, in the order (x, y, u, v).
enum Var : int { kX = 0, kY = 1, kU = 2, kV = 3 };

using Multi = std::array<int, 4>;

// Truncated Taylor polynomial in the four real displacements (dx, dy, du, dv)
// with complex coefficients. Coefficients are stored in graded order, so the
// jet of order n is a prefix of the jet of order n+1.
class Jet {
 public:
  Jet() : order_(0), c_(1, cplx(0.0)) {}
  explicit Jet(int order, cplx value = 0.0);

  static Jet constant(int order, cplx value) { return Jet(order, value); }
  // The coordinate `var` around the base value `base`.
  static Jet variable(int order, int var, double base);

  int order() const { return order_; }
  std::size_t size() const { return c_.size(); }
  cplx value() const { return c_[0]; }

  cplx& operator[](std::size_t i) { return c_[i]; }
  const cplx& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<cplx>& coeffs() const { return c_; }

  // Taylor coefficient of dx^a dy^b du^c dv^d.
  cplx coeff(const Multi& alpha) const;
  // Mixed partial derivative, i.e. coefficient times alpha!.
  cplx partial(const Multi& alpha) const;

  Jet truncated(int order) const;
  bool is_affine() const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(cplx s);
  Jet& operator+=(cplx s) { c_[0] += s; return *this; }
  Jet& operator-=(cplx s) { c_[0] -= s; return *this; }

  Jet operator-() const;

  // Partial derivative in a real coordinate; lowers the order by one.
  Jet d(int var) const;
  // Coefficientwise conjugate. Valid because the variables are real.
  Jet conj() const;
  Jet real() const;
  Jet imag() const;

 private:
  int order_;
  std::vector<cplx> c_;
};

Jet operator+(Jet a, const Jet& b);
Jet operator-(Jet a, const Jet& b);
Jet operator*(const Jet& a, const Jet& b);
Jet operator/(const Jet& a, const Jet& b);
Jet operator+(Jet a, cplx s);
Jet operator+(cplx s, Jet a);
Jet operator-(Jet a, cplx s);
Jet operator-(cplx s, const Jet& a);
Jet operator*(Jet a, cplx s);
Jet operator*(cplx s, Jet a);
Jet operator/(Jet a, cplx s);
Jet operator/(cplx s, const Jet& a);

Jet inverse(const Jet& a);

// Evaluates sum_k series[k] * (g - g(0))^k.
Jet compose(const std::vector<cplx>& series, const Jet& g);

Jet exp(const Jet& g);
Jet log(const Jet& g);
// Principal power around the base value.
Jet pow(const Jet& g, double p);
Jet powi(const Jet& g, int n);
Jet sqrt(const Jet& g);

// Multivariate substitution: given the jet `f` of a function at a base point
// (its variables being displacements of x', y', u', v'), and jets of the new
// coordinates x'(x,y,u,v) etc., returns the jet of the composite.
Jet substitute(const Jet& f, const std::array<Jet, 4>& coords);

// Wirtinger derivatives.
Jet d_tau(const Jet& f);
Jet d_taubar(const Jet& f);
Jet d_z(const Jet& f);
Jet d_zbar(const Jet& f);

// Univariate Taylor coefficient helpers.
namespace series {
std::vector<cplx> exp(cplx a0, int n);
std::vector<cplx> pow(cplx a0, double p, int n);
std::vector<cplx> log(cplx a0, int n);
std::vector<cplx> mul(const std::vector<cplx>& a, const std::vector<cplx>& b, int n);
// Coefficients of exp(-2 a t - t^2) up to t^n.
std::vector<cplx> gaussian_shift(cplx a, int n);
}  // namespace series

// Number of monomials of total degree <= n in four variables.
std::size_t jet_size(int order);
const Multi& jet_exponent(std::size_t index);

}  // namespace mjlab
