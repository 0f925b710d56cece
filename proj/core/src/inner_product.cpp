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

#include "phforge/inner_product.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "phforge/conversion.hpp"
#include "phforge/error.hpp"

namespace phforge {

ComplexPoly bernstein_product(const ComplexPoly& u, const ComplexPoly& v, Conjugation conj) {
    if (u.basis() != Basis::Bernstein || v.basis() != Basis::Bernstein) {
        throw Error(ErrorKind::BasisMismatch,
                    "bernstein_product: operands must be in the Bernstein basis");
    }
    const int m = u.degree();
    const int n = v.degree();
    std::vector<Complex> z(static_cast<std::size_t>(m + n) + 1);
    for (int k = 0; k <= m + n; ++k) {
        Complex sum{};
        for (int j = std::max(0, k - n); j <= std::min(m, k); ++j) {
            const Complex vk = conj == Conjugation::Second ? std::conj(v[k - j]) : v[k - j];
            sum += binomial(m, j) * binomial(n, k - j) * u[j] * vk;
        }
        z[k] = sum / binomial(m + n, k);
    }
    return ComplexPoly::bernstein(std::move(z));
}

Complex inner_product(const ComplexPoly& u, const ComplexPoly& v) {
    const ComplexPoly z = bernstein_product(convert(u, Basis::Bernstein),
                                            convert(v, Basis::Bernstein), Conjugation::Second);
    Complex sum{};
    for (const Complex& c : z.coeffs()) {
        sum += c;
    }
    return sum / static_cast<double>(z.degree() + 1);
}

double norm(const ComplexPoly& w) {
    return std::sqrt(std::max(0.0, inner_product(w, w).real()));
}

double distance(const ComplexPoly& u, const ComplexPoly& v) {
    return norm(u - v);
}

double angle(const ComplexPoly& u, const ComplexPoly& v) {
    const double nu = norm(u);
    const double nv = norm(v);
    if (nu == 0.0 || nv == 0.0) {
        throw Error(ErrorKind::UndefinedAngle, "angle: operand has zero norm");
    }
    const double c = std::clamp(inner_product(u, v).real() / (nu * nv), -1.0, 1.0);
    return std::acos(c);
}

GaussRule gauss_legendre(int count) {
    if (count < 1) {
        throw Error(ErrorKind::InvalidArgument, "gauss_legendre: need at least one node");
    }
    GaussRule rule;
    rule.nodes.resize(count);
    rule.weights.resize(count);
    // Newton on P_count(x) over [-1,1], mapped to [0,1].
    for (int i = 0; i < (count + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (count + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int j = 2; j <= count; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = count * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        double p0 = 1.0;
        double p1 = x;
        for (int j = 2; j <= count; ++j) {
            const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
            p0 = p1;
            p1 = p2;
        }
        dp = count * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = 0.5 * (1.0 - x);
        rule.nodes[count - 1 - i] = 0.5 * (1.0 + x);
        rule.weights[i] = 0.5 * w;
        rule.weights[count - 1 - i] = 0.5 * w;
    }
    return rule;
}

Complex quadrature_inner_product(const ComplexPoly& u, const ComplexPoly& v, int nodes) {
    const GaussRule rule = gauss_legendre(nodes);
    Complex sum{};
    for (int i = 0; i < nodes; ++i) {
        const double t = rule.nodes[i];
        sum += rule.weights[i] * eval(u, t) * std::conj(eval(v, t));
    }
    return sum;
}

} // namespace phforge
