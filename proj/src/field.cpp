#include "superdim/field.hpp"

#include <cctype>
#include <stdexcept>

namespace superdim {

namespace {

mpz_class residue(const mpq_class& q, std::uint32_t p) {
  mpz_class mod(p);
  mpz_class num = q.get_num() % mod;
  if (num < 0) num += mod;
  mpz_class den = q.get_den() % mod;
  if (den == 0) {
    throw std::domain_error("denominator " + q.get_den().get_str() + " is not invertible mod " +
                            std::to_string(p));
  }
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
  mpz_class r = (num * inv) % mod;
  if (r < 0) r += mod;
  return r;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

Scalar::Scalar(const mpq_class& q, std::uint32_t modulus) : value_(q), modulus_(0) {
  value_.canonicalize();
  bind(modulus);
}

void Scalar::bind(std::uint32_t modulus) {
  if (modulus == modulus_) return;
  if (modulus_ != 0) {
    throw std::domain_error("mixing residues mod " + std::to_string(modulus_) + " and mod " +
                            std::to_string(modulus));
  }
  value_ = mpq_class(residue(value_, modulus));
  modulus_ = modulus;
}

std::uint32_t Scalar::common_modulus(const Scalar& a, const Scalar& b) {
  if (a.modulus_ == b.modulus_) return a.modulus_;
  if (a.modulus_ == 0) return b.modulus_;
  if (b.modulus_ == 0) return a.modulus_;
  throw std::domain_error("mixing residues mod " + std::to_string(a.modulus_) + " and mod " +
                          std::to_string(b.modulus_));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (modulus_ == 0) return Scalar(1 / value_);
  mpz_class inv;
  mpz_class mod(modulus_);
  mpz_invert(inv.get_mpz_t(), value_.get_num().get_mpz_t(), mod.get_mpz_t());
  Scalar r;
  r.value_ = mpq_class(inv);
  r.modulus_ = modulus_;
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (r.is_zero()) return r;
  if (modulus_ == 0) {
    r.value_ = -value_;
  } else {
    r.value_ = mpq_class(mpz_class(modulus_) - value_.get_num());
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  const std::uint32_t m = common_modulus(*this, other);
  if (m == 0) {
    value_ += other.value_;
    return *this;
  }
  bind(m);
  const Scalar& rhs = other.modulus_ == m ? other : Scalar(other.value_, m);
  mpz_class s = value_.get_num() + rhs.value_.get_num();
  if (s >= m) s -= m;
  value_ = mpq_class(s);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  const std::uint32_t m = common_modulus(*this, other);
  if (m == 0) {
    value_ *= other.value_;
    return *this;
  }
  bind(m);
  const Scalar& rhs = other.modulus_ == m ? other : Scalar(other.value_, m);
  mpz_class s = (value_.get_num() * rhs.value_.get_num()) % m;
  value_ = mpq_class(s);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) { return *this *= other.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.modulus_ == b.modulus_) return a.value_ == b.value_;
  const std::uint32_t m = Scalar::common_modulus(a, b);
  return Scalar(a.value_, m).value_ == Scalar(b.value_, m).value_;
}

std::string Scalar::to_string() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::parse(const std::string& text) {
  if (text == "Q" || text == "q") return rationals();
  if (text.size() >= 2 && (text[0] == 'F' || text[0] == 'f')) {
    for (std::size_t i = 1; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw std::invalid_argument("bad field '" + text + "'");
      }
    }
    return prime(static_cast<std::uint32_t>(std::stoul(text.substr(1))));
  }
  throw std::invalid_argument("bad field '" + text + "' (expected Q or F<p>)");
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

}  // namespace superdim
