#include "skein/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace skein {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 abs128(i128 x) { return x < 0 ? static_cast<u128>(-x) : static_cast<u128>(x); }

bool fits64(i128 x) {
  return x >= std::numeric_limits<int64_t>::min() && x <= std::numeric_limits<int64_t>::max();
}

mpz_class mpz_from(i128 x) {
  bool neg = x < 0;
  u128 m = abs128(x);
  mpz_class hi(static_cast<unsigned long>(static_cast<uint64_t>(m >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<uint64_t>(m)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(int64_t n, int64_t d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  i128 nn = n, dd = d;
  if (dd < 0) {
    nn = -nn;
    dd = -dd;
  }
  u128 g = gcd128(abs128(nn), static_cast<u128>(dd));
  if (g > 1) {
    nn /= static_cast<i128>(g);
    dd /= static_cast<i128>(g);
  }
  if (fits64(nn) && fits64(dd)) {
    num_ = static_cast<int64_t>(nn);
    den_ = static_cast<int64_t>(dd);
  } else {
    set_big(mpq_class(mpz_from(nn), mpz_from(dd)));
  }
}

Rational::Rational(const mpq_class& q) { set_big(q); }

void Rational::set_big(mpq_class q) {
  q.canonicalize();
  big_ = std::make_unique<mpq_class>(std::move(q));
  normalize_big();
}

void Rational::normalize_big() {
  if (!big_) return;
  const mpz_class& n = big_->get_num();
  const mpz_class& d = big_->get_den();
  if (n.fits_slong_p() && d.fits_slong_p()) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
  }
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  try {
    mpq_class q(s, 10);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
    return Rational(q);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  return q;
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
  if (big_) return big_->get_num().get_str() + "/" + big_->get_den().get_str();
  return std::to_string(num_) + "/" + std::to_string(den_);
}

mpz_class Rational::numerator() const {
  return big_ ? big_->get_num() : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  return big_ ? big_->get_den() : mpz_class(static_cast<long>(den_));
}

Rational Rational::operator-() const {
  if (big_) return Rational(mpq_class(-*big_));
  if (num_ == std::numeric_limits<int64_t>::min()) return Rational(mpq_class(-to_mpq()));
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      int64_t out;
      if (!__builtin_add_overflow(num_, o.num_, &out)) {
        num_ = out;
        return *this;
      }
      set_big(mpq_class(mpz_from(static_cast<i128>(num_) + o.num_)));
      return *this;
    }
    i128 n = static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_;
    i128 d = static_cast<i128>(den_) * o.den_;
    u128 g = gcd128(abs128(n), static_cast<u128>(d));
    if (g > 1) {
      n /= static_cast<i128>(g);
      d /= static_cast<i128>(g);
    }
    if (n == 0) {
      num_ = 0;
      den_ = 1;
    } else if (fits64(n) && fits64(d)) {
      num_ = static_cast<int64_t>(n);
      den_ = static_cast<int64_t>(d);
    } else {
      set_big(mpq_class(mpz_from(n), mpz_from(d)));
    }
    return *this;
  }
  set_big(to_mpq() + o.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      int64_t out;
      if (!__builtin_mul_overflow(num_, o.num_, &out)) {
        num_ = out;
        return *this;
      }
      set_big(mpq_class(mpz_from(static_cast<i128>(num_) * o.num_)));
      return *this;
    }
    i128 n = static_cast<i128>(num_) * o.num_;
    i128 d = static_cast<i128>(den_) * o.den_;
    u128 g = gcd128(abs128(n), static_cast<u128>(d));
    if (g > 1) {
      n /= static_cast<i128>(g);
      d /= static_cast<i128>(g);
    }
    if (n == 0) {
      num_ = 0;
      den_ = 1;
    } else if (fits64(n) && fits64(d)) {
      num_ = static_cast<int64_t>(n);
      den_ = static_cast<int64_t>(d);
    } else {
      set_big(mpq_class(mpz_from(n), mpz_from(d)));
    }
    return *this;
  }
  set_big(to_mpq() * o.to_mpq());
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational");
  if (big_) return Rational(mpq_class(1 / *big_));
  return Rational(den_, num_);
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical forms differ in representation only when values differ
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
  }
  return a.to_mpq() < b.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  if (r.is_integer()) return os << r.numerator().get_str();
  return os << r.str();
}

}  // namespace skein
