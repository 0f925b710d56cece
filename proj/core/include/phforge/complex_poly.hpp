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

#pragma once

#include <complex>
#include <span>
#include <vector>

namespace phforge {

using Complex = std::complex<double>;

enum class Basis { Bernstein, Legendre };

const char* to_string(Basis basis);

/// Absolute tolerance used when two coefficient vectors are compared for
/// equality (degree <= 6).
inline constexpr double kCoeffTolerance = 1e-12;

/// Largest degree for which conversion matrices are supported.
inline constexpr int kMaxDegree = 10;

/// Binomial coefficient from a Pascal-triangle table, valid for n <= 64.
double binomial(int n, int k);

/// Complex-coefficient polynomial on t in [0,1], tagged with its basis.
///
/// Bernstein coefficients are Bezier control points b^n_k(t); Legendre
/// coefficients refer to the shifted, normalized Legendre polynomials L_k(t),
/// which are orthonormal on [0,1].
class ComplexPoly {
public:
    ComplexPoly(Basis basis, std::vector<Complex> coeffs);

    static ComplexPoly bernstein(std::vector<Complex> coeffs) {
        return ComplexPoly(Basis::Bernstein, std::move(coeffs));
    }
    static ComplexPoly legendre(std::vector<Complex> coeffs) {
        return ComplexPoly(Basis::Legendre, std::move(coeffs));
    }
    static ComplexPoly zero(Basis basis, int degree);
    static ComplexPoly constant(Complex value, Basis basis = Basis::Bernstein);

    Basis basis() const noexcept { return basis_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }
    const Complex& operator[](std::size_t i) const { return coeffs_[i]; }

    bool is_zero() const noexcept;

    ComplexPoly operator-() const;
    ComplexPoly conj() const;

    friend ComplexPoly operator*(Complex s, const ComplexPoly& p);
    friend ComplexPoly operator*(const ComplexPoly& p, Complex s) { return s * p; }

    /// Sum and difference convert `b` into the basis of `a` and raise both to
    /// the larger degree.
    friend ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b);
    friend ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b);

private:
    Basis basis_;
    std::vector<Complex> coeffs_;
};

/// Value of b^n_i(t).
double bernstein_basis(int n, int i, double t);

/// Value of L_k(t) from the three-term Legendre recurrence.
double legendre_basis(int k, double t);

/// de Casteljau evaluation of a Bezier polynomial with complex control points.
Complex de_casteljau(std::span<const Complex> controls, double t);

Complex eval(const ComplexPoly& p, double t);

/// Raises the degree without changing the polynomial (Bernstein degree
/// elevation, or zero padding in the Legendre basis).
ComplexPoly elevate(const ComplexPoly& p, int degree);

/// Bernstein coefficients of the polynomial sum_i a_i t^i with real
/// power-basis coefficients.
ComplexPoly from_power(std::span<const double> power_coeffs);

/// Coefficient-wise comparison after aligning basis and degree.
bool approx_equal(const ComplexPoly& a, const ComplexPoly& b, double tol = kCoeffTolerance);

/// Largest coefficient magnitude.
double max_abs_coeff(const ComplexPoly& p);

} // namespace phforge
