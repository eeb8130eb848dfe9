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

#include "core/exact.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hyperwit {

std::int64_t pow2(int k) {
    if (k < 0 || k > 62) {
        throw std::out_of_range("pow2 exponent out of range: " + std::to_string(k));
    }
    return std::int64_t{1} << k;
}

double to_double(const Rational &r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::string to_string(const Rational &r) {
    if (r.denominator() == 1) {
        return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double Exact::to_double() const {
    return hyperwit::to_double(a_) + hyperwit::to_double(b_) * std::sqrt(5.0);
}

int Exact::sign() const {
    auto sgn = [](const Rational &r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); };
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) {
        return sa;
    }
    if (sa == 0 || sa == sb) {
        return sb;
    }
    // Opposite signs: compare a^2 against 5 b^2.
    Rational a2 = a_ * a_;
    Rational b2 = b_ * b_ * 5;
    if (a2 == b2) {
        return 0;
    }
    return a2 > b2 ? sa : sb;
}

Exact &Exact::operator+=(const Exact &o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

Exact &Exact::operator-=(const Exact &o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

Exact &Exact::operator*=(const Exact &o) {
    Rational a = a_ * o.a_ + b_ * o.b_ * 5;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    return *this;
}

Exact &Exact::operator/=(const Exact &o) {
    // (a + b r)/(c + d r) = (a + b r)(c - d r) / (c^2 - 5 d^2)
    Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * 5;
    if (norm == 0) {
        throw std::domain_error("Exact: division by zero");
    }
    *this *= Exact(o.a_, -o.b_);
    a_ /= norm;
    b_ /= norm;
    return *this;
}

std::string Exact::str() const {
    if (is_rational()) {
        return to_string(a_);
    }
    std::ostringstream os;
    os << "(" << to_string(a_) << (b_ > 0 ? " + " : " - ") << to_string(b_ > 0 ? b_ : -b_)
       << "*sqrt(5))";
    return os.str();
}

}  // namespace hyperwit
