#include "forge/scalar.hpp"

namespace forge {

namespace {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(unsigned long p) {
  if (!is_prime(p)) throw field_error("field characteristic must be prime, got " + std::to_string(p));
  return Field(Kind::prime, p);
}

Scalar Field::reduce(const Scalar& x) const {
  if (kind_ == Kind::rationals) {
    // mpq_class values built from raw integer pairs are not canonical until
    // told so, and GMP arithmetic silently misbehaves on non-canonical input.
    Scalar y = x;
    y.canonicalize();
    return y;
  }
  // x = n/d with gcd(n,d) = 1; in F_p this is n * d^{-1} mod p.
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class den = x.get_den() % p;
  if (den < 0) den += p;
  mpz_class num = x.get_num() % p;
  if (num < 0) num += p;
  if (den == 1) return Scalar(num);
  if (den == 0) throw field_error("denominator divisible by " + std::to_string(p_));
  mpz_class den_inv;
  if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
    throw field_error("denominator not invertible mod " + std::to_string(p_));
  mpz_class r = (num * den_inv) % p;
  if (r < 0) r += p;
  return Scalar(r);
}

Scalar Field::inv(const Scalar& a) const {
  Scalar r = reduce(a);
  if (r == 0) throw field_error("division by zero");
  if (kind_ == Kind::rationals) return Scalar(1) / r;
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class v;
  if (mpz_invert(v.get_mpz_t(), r.get_num().get_mpz_t(), p.get_mpz_t()) == 0)
    throw field_error("element not invertible mod " + std::to_string(p_));
  return Scalar(v);
}

std::string Field::to_string(const Scalar& a) const {
  Scalar r = reduce(a);
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Scalar Field::parse(const std::string& s) const {
  if (s.empty()) throw field_error("empty scalar literal");
  // mpq_class's string constructor accepts "a/b"; validate digits ourselves so
  // garbage fails loudly instead of silently parsing a prefix.
  std::size_t slash = s.find('/');
  auto check_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  bool ok = slash == std::string::npos
                ? check_int(s)
                : check_int(s.substr(0, slash)) && check_int(s.substr(slash + 1));
  if (!ok) throw field_error("bad scalar literal '" + s + "'");
  Scalar v(s);
  if (v.get_den() == 0) throw field_error("zero denominator in '" + s + "'");
  v.canonicalize();
  return reduce(v);
}

std::string Field::describe() const {
  return kind_ == Kind::rationals ? "Q" : "F" + std::to_string(p_);
}

}  // namespace forge
