#include "hankelforge/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace hankelforge {

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rat& c) {
  Polynomial p;
  if (c != 0) p.coeffs_ = {c};
  return p;
}

Polynomial Polynomial::monomial(long degree, const Rat& c) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  Polynomial p;
  if (c != 0) {
    p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rat(0));
    p.coeffs_.back() = c;
  }
  return p;
}

std::optional<long> Polynomial::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<long>(i);
  return std::nullopt;
}

Rat Polynomial::coeff(long i) const {
  if (i < 0 || i >= static_cast<long>(coeffs_.size())) return Rat(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rat Polynomial::leading() const {
  if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rat Polynomial::operator()(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  Polynomial r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rat& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial& Polynomial::operator/=(const Rat& c) {
  if (c == 0) throw std::domain_error("polynomial division by zero scalar");
  for (auto& x : coeffs_) x /= c;
  return *this;
}

Polynomial Polynomial::pow(unsigned long k) const {
  Polynomial acc = Polynomial::constant(Rat(1));
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

Polynomial Polynomial::shifted_up(long s) const {
  if (s < 0) throw std::invalid_argument("shifted_up: negative shift");
  if (is_zero() || s == 0) return *this;
  Polynomial r;
  r.coeffs_.assign(static_cast<std::size_t>(s), Rat(0));
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

Polynomial Polynomial::shifted_down(long s) const {
  if (s < 0) throw std::invalid_argument("shifted_down: negative shift");
  if (is_zero() || s == 0) return *this;
  auto val = valuation();
  if (!val || *val < s)
    throw std::domain_error("shifted_down: x^" + std::to_string(s) + " does not divide polynomial");
  Polynomial r;
  r.coeffs_.assign(coeffs_.begin() + s, coeffs_.end());
  return r;
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rat& c = coeffs_[i];
    if (c == 0) continue;
    Rat mag = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Polynomial rem = a;
  std::vector<Rat> q;
  long db = b.degree();
  if (rem.degree() >= db) q.assign(static_cast<std::size_t>(rem.degree() - db) + 1, Rat(0));
  Rat lead_b = b.leading();
  while (!rem.is_zero() && rem.degree() >= db) {
    long shift = rem.degree() - db;
    Rat factor = rem.leading() / lead_b;
    q[static_cast<std::size_t>(shift)] = factor;
    rem -= b.shifted_up(shift) * factor;
  }
  return {Polynomial(std::move(q)), rem};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x / x.leading();
}

}  // namespace hankelforge
