// Copyright 2026 The phforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "phforge/complex_poly.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "phforge/conversion.hpp"
#include "phforge/error.hpp"

namespace phforge {

namespace {

constexpr int kPascalRows = 65;

using PascalTable = std::array<std::array<double, kPascalRows>, kPascalRows>;

const PascalTable& pascal() {
    static const PascalTable table = [] {
        PascalTable t{};
        for (int n = 0; n < kPascalRows; ++n) {
            t[n][0] = 1.0;
            for (int k = 1; k <= n; ++k) {
                t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0.0);
            }
        }
        return t;
    }();
    return table;
}

bool finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

} // namespace

const char* to_string(Basis basis) {
    return basis == Basis::Bernstein ? "bernstein" : "legendre";
}

double binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) {
        return 0.0;
    }
    if (n >= kPascalRows) {
        throw Error(ErrorKind::InvalidArgument, "binomial: n out of table range");
    }
    return pascal()[n][k];
}

ComplexPoly::ComplexPoly(Basis basis, std::vector<Complex> coeffs)
    : basis_(basis), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw Error(ErrorKind::InvalidArgument, "polynomial needs at least one coefficient");
    }
    for (const Complex& c : coeffs_) {
        if (!finite(c)) {
            throw Error(ErrorKind::InvalidArgument, "polynomial coefficient is not finite");
        }
    }
}

ComplexPoly ComplexPoly::zero(Basis basis, int degree) {
    return ComplexPoly(basis, std::vector<Complex>(static_cast<std::size_t>(degree) + 1));
}

ComplexPoly ComplexPoly::constant(Complex value, Basis basis) {
    return ComplexPoly(basis, {value});
}

bool ComplexPoly::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Complex& c) { return c == Complex{}; });
}

ComplexPoly ComplexPoly::operator-() const {
    return Complex(-1.0) * *this;
}

ComplexPoly ComplexPoly::conj() const {
    std::vector<Complex> out(coeffs_.size());
    std::transform(coeffs_.begin(), coeffs_.end(), out.begin(),
                   [](const Complex& c) { return std::conj(c); });
    return ComplexPoly(basis_, std::move(out));
}

ComplexPoly operator*(Complex s, const ComplexPoly& p) {
    std::vector<Complex> out(p.coeffs_.size());
    std::transform(p.coeffs_.begin(), p.coeffs_.end(), out.begin(),
                   [s](const Complex& c) { return s * c; });
    return ComplexPoly(p.basis_, std::move(out));
}

ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b) {
    const int degree = std::max(a.degree(), b.degree());
    ComplexPoly lhs = elevate(a, degree);
    ComplexPoly rhs = elevate(convert(b, a.basis()), degree);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        lhs.coeffs_[i] += rhs.coeffs_[i];
    }
    return lhs;
}

ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b) {
    return a + (-b);
}

double bernstein_basis(int n, int i, double t) {
    if (i < 0 || i > n) {
        return 0.0;
    }
    return binomial(n, i) * std::pow(1.0 - t, n - i) * std::pow(t, i);
}

double legendre_basis(int k, double t) {
    // P_k(x) on x = 2t - 1, then L_k = sqrt(2k+1) P_k.
    const double x = 2.0 * t - 1.0;
    double prev = 1.0;
    double cur = x;
    if (k == 0) {
        return 1.0;
    }
    for (int j = 1; j < k; ++j) {
        const double next = ((2.0 * j + 1.0) * x * cur - j * prev) / (j + 1.0);
        prev = cur;
        cur = next;
    }
    return std::sqrt(2.0 * k + 1.0) * cur;
}

Complex de_casteljau(std::span<const Complex> controls, double t) {
    std::vector<Complex> work(controls.begin(), controls.end());
    const double s = 1.0 - t;
    for (std::size_t level = work.size(); level > 1; --level) {
        for (std::size_t i = 0; i + 1 < level; ++i) {
            work[i] = s * work[i] + t * work[i + 1];
        }
    }
    return work.front();
}

Complex eval(const ComplexPoly& p, double t) {
    if (p.basis() == Basis::Bernstein) {
        return de_casteljau(p.coeffs(), t);
    }
    Complex sum{};
    for (int k = 0; k <= p.degree(); ++k) {
        sum += p[k] * legendre_basis(k, t);
    }
    return sum;
}

ComplexPoly elevate(const ComplexPoly& p, int degree) {
    if (degree < p.degree()) {
        throw Error(ErrorKind::InvalidArgument, "elevate: target degree below current degree");
    }
    std::vector<Complex> c(p.coeffs().begin(), p.coeffs().end());
    if (p.basis() == Basis::Legendre) {
        c.resize(static_cast<std::size_t>(degree) + 1);
        return ComplexPoly::legendre(std::move(c));
    }
    while (static_cast<int>(c.size()) - 1 < degree) {
        const int n = static_cast<int>(c.size()) - 1;
        std::vector<Complex> up(c.size() + 1);
        up.front() = c.front();
        up.back() = c.back();
        for (int i = 1; i <= n; ++i) {
            const double a = static_cast<double>(i) / (n + 1);
            up[i] = a * c[i - 1] + (1.0 - a) * c[i];
        }
        c = std::move(up);
    }
    return ComplexPoly::bernstein(std::move(c));
}

ComplexPoly from_power(std::span<const double> power_coeffs) {
    if (power_coeffs.empty()) {
        throw Error(ErrorKind::InvalidArgument, "from_power: empty coefficient list");
    }
    const int n = static_cast<int>(power_coeffs.size()) - 1;
    std::vector<Complex> b(power_coeffs.size());
    for (int j = 0; j <= n; ++j) {
        double sum = 0.0;
        for (int i = 0; i <= j; ++i) {
            sum += binomial(j, i) / binomial(n, i) * power_coeffs[i];
        }
        b[j] = sum;
    }
    return ComplexPoly::bernstein(std::move(b));
}

bool approx_equal(const ComplexPoly& a, const ComplexPoly& b, double tol) {
    const int degree = std::max(a.degree(), b.degree());
    const ComplexPoly lhs = elevate(a, degree);
    const ComplexPoly rhs = elevate(convert(b, a.basis()), degree);
    for (int i = 0; i <= degree; ++i) {
        if (std::abs(lhs[i] - rhs[i]) > tol) {
            return false;
        }
    }
    return true;
}

double max_abs_coeff(const ComplexPoly& p) {
    double m = 0.0;
    for (const Complex& c : p.coeffs()) {
        m = std::max(m, std::abs(c));
    }
    return m;
}

} // namespace phforge
