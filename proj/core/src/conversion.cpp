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

#include "phforge/conversion.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "phforge/error.hpp"

namespace phforge {

namespace {

double legendre_to_bernstein(int n, int j, int k) {
    double sum = 0.0;
    for (int i = std::max(0, j + k - n); i <= std::min(j, k); ++i) {
        const double sign = ((k + i) % 2 == 0) ? 1.0 : -1.0;
        sum += sign * binomial(k, i) * binomial(k, i) * binomial(n - k, j - i);
    }
    return std::sqrt(2.0 * k + 1.0) / binomial(n, j) * sum;
}

double bernstein_to_legendre(int n, int j, int k) {
    double sum = 0.0;
    for (int i = 0; i <= j; ++i) {
        const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
        sum += sign * binomial(j, i) * binomial(j, i) / binomial(n + j, k + i);
    }
    return std::sqrt(2.0 * j + 1.0) / (n + j + 1.0) * binomial(n, k) * sum;
}

} // namespace

ConversionPack build_conversion(int degree) {
    if (degree < 0 || degree > kMaxDegree) {
        throw Error(ErrorKind::InvalidArgument, "build_conversion: degree out of range [0, 10]");
    }
    const int n = degree;
    ConversionPack pack;
    pack.degree = n;
    pack.m.resize(n + 1, n + 1);
    pack.minv.resize(n + 1, n + 1);
    for (int j = 0; j <= n; ++j) {
        for (int k = 0; k <= n; ++k) {
            pack.m(j, k) = legendre_to_bernstein(n, j, k);
            pack.minv(j, k) = bernstein_to_legendre(n, j, k);
        }
    }
    pack.g = pack.minv.transpose() * pack.minv;
    return pack;
}

const ConversionPack& conversion(int degree) {
    static const std::array<ConversionPack, kMaxDegree + 1> packs = [] {
        std::array<ConversionPack, kMaxDegree + 1> out;
        for (int n = 0; n <= kMaxDegree; ++n) {
            out[n] = build_conversion(n);
        }
        return out;
    }();
    if (degree < 0 || degree > kMaxDegree) {
        throw Error(ErrorKind::InvalidArgument, "conversion: degree out of range [0, 10]");
    }
    return packs[degree];
}

Eigen::VectorXcd to_vector(std::span<const Complex> coeffs) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(coeffs.size()));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = coeffs[i];
    }
    return v;
}

std::vector<Complex> from_vector(const Eigen::VectorXcd& v) {
    return {v.data(), v.data() + v.size()};
}

ComplexPoly convert(const ComplexPoly& p, Basis target) {
    if (p.basis() == target) {
        return p;
    }
    const ConversionPack& pack = conversion(p.degree());
    const Eigen::VectorXcd c = to_vector(p.coeffs());
    if (target == Basis::Bernstein) {
        return ComplexPoly::bernstein(from_vector(pack.m.cast<Complex>() * c));
    }
    return ComplexPoly::legendre(from_vector(pack.minv.cast<Complex>() * c));
}

} // namespace phforge
