/*
  Copyright (c) 2026 the bandforms authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#pragma once

#include <gmpxx.h>
#include <string>

#include "errors.hpp"

namespace bandforms {

// Element of Q/Z in canonical form: numerator/denominator with
// gcd(num, den) = 1 and 0 <= num < den.  The zero element is 0/1.
class RationalModOne {
public:
  RationalModOne() : num_(0), den_(1) {}

  RationalModOne(const mpz_class &num, const mpz_class &den) {
    normalize(num, den);
  }

  RationalModOne(long num, long den) { normalize(mpz_class(num), mpz_class(den)); }

  static RationalModOne zero() { return RationalModOne(); }

  const mpz_class &num() const { return num_; }
  const mpz_class &den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  RationalModOne operator+(const RationalModOne &o) const {
    return RationalModOne(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }

  RationalModOne operator-() const { return RationalModOne(-num_, den_); }

  RationalModOne operator-(const RationalModOne &o) const {
    return *this + (-o);
  }

  // n * a in the Z-module Q/Z.
  RationalModOne scaled(const mpz_class &n) const {
    return RationalModOne(n * num_, den_);
  }

  bool operator==(const RationalModOne &o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalModOne &o) const { return !(*this == o); }

  bool operator<(const RationalModOne &o) const {
    return cmp(num_ * o.den_, o.num_ * den_) < 0;
  }

  std::string str() const { return num_.get_str() + "/" + den_.get_str(); }

private:
  void normalize(mpz_class num, mpz_class den) {
    if (den == 0) throw InputError("rational with zero denominator");
    if (den < 0) {
      den = -den;
      num = -num;
    }
    // representative in [0, den), then reduce
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), den.get_mpz_t());
    num_ = r / g;
    den_ = den / g;
    if (num_ == 0) den_ = 1;
  }

  mpz_class num_;
  mpz_class den_;
};

inline RationalModOne rmo_add(const RationalModOne &a, const RationalModOne &b) {
  return a + b;
}

inline RationalModOne rmo_scale(const mpz_class &n, const RationalModOne &a) {
  return a.scaled(n);
}

} // namespace bandforms
