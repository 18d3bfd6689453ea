#include "mjlab/decompose.hpp"

#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace mjlab {

Rational::Rational(long n, long d) {
  if (d == 0) fail(ErrorKind::ParseError, "zero denominator");
  if (d < 0) n = -n, d = -d;
  long g = std::gcd(std::abs(n), d);
  if (g == 0) g = 1;
  num = n / g;
  den = d / g;
}

std::string Rational::str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

Rational Rational::parse(const std::string& text) {
  try {
    auto slash = text.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
      long v = std::stol(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return Rational(v);
    }
    std::string a = text.substr(0, slash), b = text.substr(slash + 1);
    long n = std::stol(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    long d = std::stol(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    return Rational(n, d);
  } catch (const std::logic_error&) {
    fail(ErrorKind::ParseError, "bad rational '" + text + "'");
  }
}

FourierData FourierData::read(std::istream& in) {
  FourierData d;
  std::string line;
  bool header = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (!header) {
      std::string rest;
      ls >> rest;
      if (first != "index" || rest.rfind("2m=", 0) != 0)
        fail(ErrorKind::ParseError, "expected header 'index 2m=<int>'");
      try {
        d.two_m = std::stoi(rest.substr(3));
      } catch (const std::logic_error&) {
        fail(ErrorKind::ParseError, "bad index in header");
      }
      if (d.two_m <= 0) fail(ErrorKind::ParseError, "index must be positive");
      header = true;
      continue;
    }
    int r;
    double re, im;
    if (!(ls >> r >> re >> im)) fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected 'n r re im'");
    d.coeffs[{Rational::parse(first), r}] += cplx(re, im);
  }
  if (!header) fail(ErrorKind::ParseError, "missing header");
  return d;
}

void FourierData::write(std::ostream& out) const {
  out << "index 2m=" << two_m << "\n";
  out.precision(17);
  for (const auto& [key, c] : coeffs) out << key.first.str() << " " << key.second << " " << c.real() << " " << c.imag() << "\n";
}

cplx FourierData::evaluate(const EvalPoint& p) const {
  cplx sum = 0.0;
  for (const auto& [key, c] : coeffs)
    sum += c * std::exp(2.0 * kPi * kI * (key.first.value() * p.tau() + double(key.second) * p.z()));
  return sum;
}

cplx evaluate_q_series(const QSeries& h, cplx tau) {
  cplx sum = 0.0;
  for (const auto& [e, a] : h) sum += a * std::exp(2.0 * kPi * kI * e.value() * tau);
  return sum;
}

namespace {

// n - r^2 / 4m
Rational class_exponent(const Rational& n, int r, int two_m) {
  long four_m = 2L * two_m;
  return Rational(n.num * four_m - long(r) * r * n.den, four_m * n.den);
}

int residue(int r, int two_m) { return ((r % two_m) + two_m) % two_m; }

}  // namespace

std::vector<QSeries> theta_decompose(const FourierData& data, double tol) {
  std::vector<QSeries> h(data.two_m);
  for (const auto& [key, c] : data.coeffs) {
    int l = residue(key.second, data.two_m);
    Rational e = class_exponent(key.first, key.second, data.two_m);
    auto it = h[l].find(e);
    if (it == h[l].end()) {
      h[l][e] = c;
    } else if (std::abs(it->second - c) > tol * std::max(1.0, std::abs(c))) {
      std::ostringstream os;
      os << "coefficients at (n, r) = (" << key.first.str() << ", " << key.second << ") and another index of class (D/4m = "
         << e.str() << ", l = " << l << ") differ";
      fail(ErrorKind::NotThetaDecomposable, os.str());
    }
  }
  return h;
}

cplx theta_recompose(int two_m, const std::vector<QSeries>& h, const EvalPoint& p, const TruncationPolicy& policy) {
  cplx sum = 0.0;
  for (int l = 0; l < two_m; ++l)
    if (!h[l].empty()) sum += evaluate_q_series(h[l], p.tau()) * theta_ml(two_m, l, p, policy);
  return sum;
}

FourierData recompose_coefficients(int two_m, const std::vector<QSeries>& h, int max_r) {
  FourierData d;
  d.two_m = two_m;
  for (int l = 0; l < two_m; ++l) {
    for (const auto& [e, a] : h[l]) {
      for (int r = -max_r; r <= max_r; ++r) {
        if (residue(r, two_m) != l) continue;
        // n = e + r^2 / 4m
        Rational n(e.num * 2L * two_m + long(r) * r * e.den, 2L * two_m * e.den);
        d.coeffs[{n, r}] += a;
      }
    }
  }
  return d;
}

std::string h_to_json(const std::vector<QSeries>& h) {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t l = 0; l < h.size(); ++l) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, a] : h[l]) terms.push_back({e.num, e.den, a.real(), a.imag()});
    j[std::to_string(l)] = terms;
  }
  return j.dump();
}

cplx theta_like_recompose(int two_m, const std::vector<TauFn>& h, const std::optional<Function>& varphi,
                          const EvalPoint& p, const TruncationPolicy& policy) {
  if (int(h.size()) != two_m) fail(ErrorKind::DomainError, "need one h_l per residue");
  auto c = coords(p, 0);
  cplx sum = varphi ? (*varphi)(p) : cplx(0.0);
  for (int l = 0; l < two_m; ++l) {
    if (!h[l]) continue;
    cplx hl = h[l](p.tau());
    if (hl != 0.0) sum += hl * mu_hat_ml(two_m, l, c.tau, c.z, policy).value();
  }
  return sum;
}

Function theta_like_constant(int two_m, const std::vector<cplx>& h, const TruncationPolicy& policy) {
  return Function::exact([=](const EvalPoint& p, int n) {
    auto c = coords(p, n);
    Jet sum(n);
    for (int l = 0; l < two_m; ++l)
      if (h[l] != 0.0) sum += h[l] * mu_hat_ml(two_m, l, c.tau, c.z, policy);
    return sum;
  });
}

}  // namespace mjlab
