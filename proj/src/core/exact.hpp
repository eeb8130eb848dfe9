// Copyright 2026 The hyperwit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

// Boost 1.74 implements `int == rational` by swapping the operands, which
// C++20's reversed-candidate rule turns into infinite recursion. Exact
// non-template overloads win overload resolution and end the cycle.
namespace boost {
inline bool operator==(const rational<std::int64_t> &r, int i) {
    return r.denominator() == 1 && r.numerator() == i;
}
inline bool operator==(int i, const rational<std::int64_t> &r) {
    return r == i;
}
inline bool operator!=(const rational<std::int64_t> &r, int i) {
    return !(r == i);
}
inline bool operator!=(int i, const rational<std::int64_t> &r) {
    return !(r == i);
}
}  // namespace boost

namespace hyperwit {

using Rational = boost::rational<std::int64_t>;

/// 2^k as a 64-bit integer, k in [0, 62].
std::int64_t pow2(int k);

double to_double(const Rational &r);
std::string to_string(const Rational &r);

/// Exact element of Q(sqrt 5): rational() + irrational() * sqrt(5).
///
/// The only irrational value the closed forms produce is alpha(H_4^3) =
/// (3 + sqrt 5) / 8; everything derived from it (robustness, beta) stays in
/// this field, so witness arithmetic never needs a tolerance.
class Exact {
   public:
    Exact() = default;
    Exact(std::int64_t v) : a_(v) {  // NOLINT(google-explicit-constructor)
    }
    Exact(Rational a) : a_(a) {  // NOLINT(google-explicit-constructor)
    }
    Exact(Rational a, Rational b) : a_(a), b_(b) {
    }

    static Exact sqrt5() {
        return Exact(Rational(0), Rational(1));
    }

    const Rational &rational() const noexcept {
        return a_;
    }
    const Rational &irrational() const noexcept {
        return b_;
    }
    bool is_rational() const noexcept {
        return b_ == 0;
    }
    double to_double() const;
    /// -1, 0 or +1, computed exactly.
    int sign() const;

    Exact operator-() const {
        return Exact(-a_, -b_);
    }
    Exact &operator+=(const Exact &o);
    Exact &operator-=(const Exact &o);
    Exact &operator*=(const Exact &o);
    Exact &operator/=(const Exact &o);

    friend Exact operator+(Exact l, const Exact &r) {
        return l += r;
    }
    friend Exact operator-(Exact l, const Exact &r) {
        return l -= r;
    }
    friend Exact operator*(Exact l, const Exact &r) {
        return l *= r;
    }
    friend Exact operator/(Exact l, const Exact &r) {
        return l /= r;
    }
    friend bool operator==(const Exact &l, const Exact &r) {
        return l.a_ == r.a_ && l.b_ == r.b_;
    }
    friend bool operator<(const Exact &l, const Exact &r) {
        return (l - r).sign() < 0;
    }
    friend bool operator<=(const Exact &l, const Exact &r) {
        return (l - r).sign() <= 0;
    }
    friend bool operator>(const Exact &l, const Exact &r) {
        return (l - r).sign() > 0;
    }
    friend bool operator>=(const Exact &l, const Exact &r) {
        return (l - r).sign() >= 0;
    }

    /// "p/q" for rationals, "(a + b*sqrt(5))" style otherwise.
    std::string str() const;

   private:
    Rational a_{0};
    Rational b_{0};
};

}  // namespace hyperwit
