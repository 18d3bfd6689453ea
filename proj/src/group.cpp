#include "mjlab/group.hpp"

#include <cmath>

#include "json.hpp"

namespace mjlab {

cplx JacobiElement::omega(cplx tau) const { return static_cast<double>(eps) * principal_sqrt(c * tau + d); }

bool JacobiElement::valid(double tol) const {
  return std::abs(a * d - b * c - 1.0) <= tol && (eps == 1 || eps == -1);
}

JacobiElement JacobiElement::from_word(const std::string& word) {
  JacobiElement g;
  for (char ch : word) {
    if (ch == 'T') g = multiply(g, T());
    else if (ch == 'S') g = multiply(g, S());
    else if (ch == ' ' || ch == ',') continue;
    else fail(ErrorKind::ParseError, std::string("unknown generator '") + ch + "'");
  }
  return g;
}

std::string JacobiElement::to_json() const {
  nlohmann::json j{{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"eps", eps},
                   {"lambda", lambda}, {"mu", mu}, {"kappa", kappa}};
  return j.dump();
}

JacobiElement JacobiElement::from_json(const std::string& text) {
  JacobiElement g;
  try {
    auto j = nlohmann::json::parse(text);
    g.a = j.value("a", 1.0);
    g.b = j.value("b", 0.0);
    g.c = j.value("c", 0.0);
    g.d = j.value("d", 1.0);
    g.eps = j.value("eps", 1);
    g.lambda = j.value("lambda", 0.0);
    g.mu = j.value("mu", 0.0);
    g.kappa = j.value("kappa", 0.0);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, e.what());
  }
  if (!g.valid()) fail(ErrorKind::DomainError, "group element needs ad - bc = 1 and eps = +-1");
  return g;
}

JacobiElement multiply(const JacobiElement& A, const JacobiElement& B) {
  JacobiElement r;
  r.a = A.a * B.a + A.b * B.c;
  r.b = A.a * B.b + A.b * B.d;
  r.c = A.c * B.a + A.d * B.c;
  r.d = A.c * B.b + A.d * B.d;
  // X M' + X'
  double l1 = A.lambda * B.a + A.mu * B.c;
  double m1 = A.lambda * B.b + A.mu * B.d;
  r.lambda = l1 + B.lambda;
  r.mu = m1 + B.mu;
  r.kappa = (l1 * B.mu - m1 * B.lambda) + A.kappa + B.kappa;
  // omega''(tau) = omega(g' tau) * omega'(tau), compared with the principal root at tau = i.
  const cplx i(0.0, 1.0);
  cplx gi = (B.a * i + B.b) / (B.c * i + B.d);
  cplx prod = A.omega(gi) * B.omega(i);
  cplx principal = principal_sqrt(r.c * i + r.d);
  r.eps = (prod / principal).real() > 0.0 ? 1 : -1;
  return r;
}

namespace {

struct Transformed {
  std::array<Jet, 4> image;  // x', y', u', v'
  Jet factor;
};

// Image coordinates and automorphy factor as jets at p.
Transformed transform(const WeightIndex& w, const JacobiElement& A, Action action, const EvalPoint& p,
                      int order) {
  auto c = coords(p, order);
  Jet cd = A.c * c.tau + cplx(A.d);
  Jet inv = inverse(cd);
  Jet tau2 = (A.a * c.tau + cplx(A.b)) * inv;
  Jet shifted = c.z + A.lambda * c.tau + cplx(A.mu);
  Jet z2 = shifted * inv;
  Jet omega = static_cast<double>(A.eps) * sqrt(cd);
  const double m = w.m();
  Jet index = exp(2.0 * kPi * kI * m *
                  (-A.c * shifted * shifted * inv + A.lambda * A.lambda * c.tau + 2.0 * A.lambda * c.z +
                   cplx(A.lambda * A.mu + A.kappa)));
  Jet weight(order);
  if (action == Action::Standard) {
    weight = powi(omega, -w.two_k());
  } else {
    weight = powi(omega.conj(), 2 - w.two_k()) * pow(cd * cd.conj(), -0.5);
  }
  return {{tau2.real(), tau2.imag(), z2.real(), z2.imag()}, weight * index};
}

EvalPoint image_point(const Transformed& t) {
  return EvalPoint(t.image[0].value().real(), t.image[1].value().real(), t.image[2].value().real(),
                   t.image[3].value().real());
}

}  // namespace

Function act(const Function& phi, const WeightIndex& w, Action action, const JacobiElement& A) {
  if (phi.kind() == JetKind::Exact) {
    return Function::exact([phi, w, action, A](const EvalPoint& p, int n) {
      Transformed t = transform(w, A, action, p, n);
      Jet inner = phi.jet(image_point(t), n);
      return substitute(inner, t.image) * t.factor;
    });
  }
  return Function::sampled(
      [phi, w, action, A](const EvalPoint& p) {
        Transformed t = transform(w, A, action, p, 0);
        return phi(image_point(t)) * t.factor.value();
      },
      phi.step());
}

Function slash(const Function& phi, const WeightIndex& w, const JacobiElement& A) {
  return act(phi, w, Action::Standard, A);
}

Function skew_slash(const Function& phi, const WeightIndex& w, const JacobiElement& A) {
  return act(phi, w, Action::Skew, A);
}

TaggedForm act(const TaggedForm& phi, const JacobiElement& A) {
  return {act(phi.f, phi.weight, phi.action, A), phi.weight, phi.action};
}

}  // namespace mjlab
