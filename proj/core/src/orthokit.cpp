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

#include "phforge/orthokit.hpp"

#include <algorithm>
#include <cmath>

#include "phforge/conversion.hpp"
#include "phforge/error.hpp"
#include "phforge/inner_product.hpp"

namespace phforge {

namespace {

/// Bernstein square root of a hodograph of even degree 2m, when it exists.
std::optional<ComplexPoly> square_root(const ComplexPoly& h) {
    if (h.degree() % 2 != 0) {
        return std::nullopt;
    }
    const int m = h.degree() / 2;
    const double scale = std::max(max_abs_coeff(h), 1e-300);
    const Complex w0 = principal_sqrt(h[0]);
    if (std::abs(w0) * std::abs(w0) < 1e-12 * scale) {
        return std::nullopt;
    }
    std::vector<Complex> w(static_cast<std::size_t>(m) + 1);
    w[0] = w0;
    for (int k = 1; k <= m; ++k) {
        Complex rest{};
        for (int j = 1; j < k; ++j) {
            rest += binomial(m, j) * binomial(m, k - j) * w[j] * w[k - j];
        }
        w[k] = (h[k] * binomial(2 * m, k) - rest) / (2.0 * binomial(m, k) * w0);
    }
    ComplexPoly root = ComplexPoly::bernstein(std::move(w));
    const ComplexPoly check = bernstein_product(root, root, Conjugation::None);
    for (int k = 0; k <= h.degree(); ++k) {
        if (std::abs(check[k] - h[k]) > 1e-8 * scale) {
            return std::nullopt;
        }
    }
    return root;
}

bool collinear(const ComplexPoly& h, double tol = 1e-8) {
    const double scale = max_abs_coeff(h);
    if (scale == 0.0) {
        return true;
    }
    Complex dir{};
    for (const Complex& c : h.coeffs()) {
        if (std::abs(c) == scale) {
            dir = c / scale;
            break;
        }
    }
    for (const Complex& c : h.coeffs()) {
        if (std::abs((c * std::conj(dir)).imag()) > tol * scale) {
            return false;
        }
    }
    return true;
}

double speed_integral(const ComplexPoly& h) {
    const GaussRule rule = gauss_legendre(24);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * std::abs(eval(h, rule.nodes[i]));
    }
    return sum;
}

} // namespace

const char* to_string(OrthoPhKind kind) {
    switch (kind) {
    case OrthoPhKind::Regular: return "regular";
    case OrthoPhKind::Linear: return "linear";
    case OrthoPhKind::Scaled: return "scaled";
    }
    return "unknown";
}

Eigen::VectorXd flatten(const ComplexPoly& legendre) {
    if (legendre.basis() != Basis::Legendre) {
        throw Error(ErrorKind::BasisMismatch, "flatten: expected Legendre coefficients");
    }
    const int n = legendre.degree() + 1;
    Eigen::VectorXd a(2 * n);
    for (int k = 0; k < n; ++k) {
        a(2 * k) = legendre[k].real();
        a(2 * k + 1) = legendre[k].imag();
    }
    return a;
}

ComplexPoly unflatten(const Eigen::VectorXd& flat) {
    if (flat.size() == 0 || flat.size() % 2 != 0) {
        throw Error(ErrorKind::InvalidArgument, "unflatten: length must be even and nonzero");
    }
    std::vector<Complex> c(static_cast<std::size_t>(flat.size() / 2));
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = {flat(2 * k), flat(2 * k + 1)};
    }
    return ComplexPoly::legendre(std::move(c));
}

OrthoBasis householder(const Eigen::VectorXd& a) {
    const double alpha = a.norm();
    if (!(alpha >= kDegenerateNorm) || a.size() < 2 || a.size() % 2 != 0) {
        throw Error(ErrorKind::DegenerateInput,
                    "householder: coefficient vector is zero or has odd length");
    }
    const Eigen::Index n = a.size();
    OrthoBasis basis;
    basis.g = a;
    basis.g(0) += (a(0) >= 0.0 ? 1.0 : -1.0) * alpha;
    basis.q = Eigen::MatrixXd::Identity(n, n) -
              (2.0 / basis.g.squaredNorm()) * basis.g * basis.g.transpose();

    const Eigen::Index rows = n / 2;
    basis.complex_q.resize(rows, n - 1);
    for (Eigen::Index j = 0; j < rows; ++j) {
        for (Eigen::Index k = 1; k < n; ++k) {
            basis.complex_q(j, k - 1) = {basis.q(2 * j, k), basis.q(2 * j + 1, k)};
        }
    }
    for (Eigen::Index k = 0; k < n - 1; ++k) {
        basis.curves.push_back(ComplexPoly::legendre(from_vector(basis.complex_q.col(k))));
    }
    return basis;
}

OrthoBasis orthogonal_basis(const ComplexPoly& w) {
    return householder(flatten(convert(w, Basis::Legendre)));
}

ComplexPoly orthogonal_family(const OrthoBasis& basis, std::span<const double> xi) {
    if (static_cast<int>(xi.size()) != basis.dimension()) {
        throw Error(ErrorKind::Arity, "orthogonal_family: need one coefficient per basis curve");
    }
    Eigen::VectorXd x(static_cast<Eigen::Index>(xi.size()));
    for (std::size_t k = 0; k < xi.size(); ++k) {
        x(static_cast<Eigen::Index>(k)) = xi[k];
    }
    return ComplexPoly::legendre(from_vector(basis.complex_q * x.cast<Complex>()));
}

std::pair<double, double> dot_cross(const ComplexPoly& r, const ComplexPoly& s, double t) {
    const Complex z = eval(r, t) * std::conj(eval(s, t));
    return {z.real(), z.imag()};
}

OrthoPhResult orthogonal_ph_with_speed(const ComplexPoly& curve, const ComplexPoly& speed,
                                       Complex start, const OrthoPhOptions& options) {
    const ComplexPoly r = convert(curve, Basis::Bernstein);
    const int n = r.degree();
    if (n < 1) {
        throw Error(ErrorKind::InvalidArgument, "orthogonal_ph_with_speed: curve must be nonconstant");
    }
    const ComplexPoly sigma = convert(speed, Basis::Bernstein);
    if (sigma.degree() > n - 1) {
        throw Error(ErrorKind::InvalidArgument,
                    "orthogonal_ph_with_speed: speed degree exceeds hodograph degree");
    }
    for (const Complex& c : sigma.coeffs()) {
        if (c.imag() != 0.0) {
            throw Error(ErrorKind::InvalidArgument, "orthogonal_ph_with_speed: speed must be real");
        }
    }
    const ComplexPoly sigma_n = elevate(sigma, n - 1);
    const ComplexPoly sigma_sq = bernstein_product(sigma_n, sigma_n, Conjugation::None);
    const double sq_scale = std::max(max_abs_coeff(sigma_sq), 1e-300);
    const double length = inner_product(sigma_n, ComplexPoly::constant(1.0)).real();
    const double pos_scale = std::max(std::abs(length), 1.0);

    const OrthoBasis basis = orthogonal_basis(r);
    const int dim = basis.dimension();
    const ConversionPack& pack = conversion(n);
    // Bernstein control points of each basis curve, as columns.
    const Eigen::MatrixXcd controls_of = pack.m.cast<Complex>() * basis.complex_q;

    auto controls_at = [&](const solve::Vector& xi) -> Eigen::VectorXcd {
        return controls_of * xi.cast<Complex>();
    };
    auto hodograph_of = [&](const Eigen::VectorXcd& p) {
        std::vector<Complex> d(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            d[k] = static_cast<double>(n) * (p(k + 1) - p(k));
        }
        return ComplexPoly::bernstein(std::move(d));
    };

    const solve::ResidualFn system = [&](const solve::Vector& xi) {
        const Eigen::VectorXcd p = controls_at(xi);
        const ComplexPoly h = hodograph_of(p);
        const ComplexPoly hh = bernstein_product(h, h, Conjugation::Second);
        solve::Vector f(dim);
        f(0) = (p(0).real() - start.real()) / pos_scale;
        f(1) = (p(0).imag() - start.imag()) / pos_scale;
        for (int k = 0; k <= hh.degree(); ++k) {
            f(2 + k) = (hh[k].real() - sigma_sq[k].real()) / sq_scale;
        }
        return f;
    };

    // Any curve from the start point with arc length L stays within L of it,
    // and |xi| = ||r_perp|| is bounded by that radius plus |start|.
    const double box = std::abs(length) + std::abs(start);
    const solve::Vector lo = solve::Vector::Constant(dim, -box);
    const solve::Vector hi = solve::Vector::Constant(dim, box);
    const std::vector<solve::Vector> starts = solve::halton_box(options.starts, lo, hi);

    solve::MultistartOptions ms;
    ms.newton.tolerance = options.tolerance;
    ms.dedup_radius = options.dedup_radius;

    OrthoPhResult result;
    result.raw = solve::multistart(system, starts, ms);

    // Straight lines are singular roots, so Newton approaches them only
    // linearly and leaves clusters of near-copies. Replace any nearly
    // collinear root by the exact line start + u * integral(sigma), where
    // the unit u makes it orthogonal to r, then merge duplicates.
    std::vector<Complex> integral(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k < n; ++k) {
        integral[k + 1] = integral[k] + sigma_n[k] / static_cast<double>(n);
    }
    const Complex a = inner_product(r, ComplexPoly::bernstein(integral));
    const double b = inner_product(r, ComplexPoly::constant(start)).real();
    Eigen::MatrixXd real_controls(2 * (n + 1), dim);
    for (int k = 0; k <= n; ++k) {
        real_controls.row(2 * k) = controls_of.row(k).real();
        real_controls.row(2 * k + 1) = controls_of.row(k).imag();
    }
    const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> to_xi(real_controls);
    int snapped = 0;
    std::vector<solve::Vector> merged;
    std::vector<double> merged_residuals;
    for (std::size_t i = 0; i < result.raw.solutions.size(); ++i) {
        solve::Vector xi = result.raw.solutions[i];
        double res = result.raw.residuals[i];
        const ComplexPoly h = hodograph_of(controls_at(xi));
        if (std::abs(a) > 0.0 && std::abs(b) <= std::abs(a) && collinear(h, 1e-3)) {
            Complex dir{};
            for (const Complex& c : h.coeffs()) {
                dir += c;
            }
            const double spread = std::acos(std::clamp(-b / std::abs(a), -1.0, 1.0));
            Complex best{};
            for (double sgn : {-1.0, 1.0}) {
                const Complex u = std::polar(1.0, std::arg(a) + sgn * spread);
                if (best == Complex{} || (std::conj(u) * dir).real() > (std::conj(best) * dir).real()) {
                    best = u;
                }
            }
            Eigen::VectorXd target(2 * (n + 1));
            for (int k = 0; k <= n; ++k) {
                const Complex p = start + best * integral[k];
                target(2 * k) = p.real();
                target(2 * k + 1) = p.imag();
            }
            const solve::Vector line = to_xi.solve(target);
            const double line_res = system(line).cwiseAbs().maxCoeff();
            if (line_res < 1e-10 && (real_controls * line - target).cwiseAbs().maxCoeff() < 1e-10 * pos_scale) {
                xi = line;
                res = line_res;
                ++snapped;
            }
        }
        bool duplicate = false;
        for (const auto& x : merged) {
            duplicate = duplicate || (x - xi).norm() < options.dedup_radius;
        }
        if (!duplicate) {
            merged.push_back(xi);
            merged_residuals.push_back(res);
        }
    }
    if (snapped > 0) {
        result.raw.diagnostics += (result.raw.diagnostics.empty() ? "" : "; ") + std::to_string(snapped) +
                                  " near-line roots snapped to exact lines";
    }
    result.raw.solutions = std::move(merged);
    result.raw.residuals = std::move(merged_residuals);
    for (std::size_t i = 0; i < result.raw.solutions.size(); ++i) {
        const solve::Vector& xi = result.raw.solutions[i];
        OrthoPhSolution sol;
        sol.xi = xi;
        const Eigen::VectorXcd p = controls_at(xi);
        sol.controls = from_vector(p);
        sol.hodograph = hodograph_of(p);
        sol.residual = result.raw.residuals[i];
        sol.preimage = square_root(sol.hodograph);
        if (sol.preimage) {
            sol.kind = OrthoPhKind::Regular;
        } else {
            sol.kind = collinear(sol.hodograph) ? OrthoPhKind::Linear : OrthoPhKind::Scaled;
        }
        sol.arc_length = speed_integral(sol.hodograph);
        result.solutions.push_back(std::move(sol));
    }
    return result;
}

} // namespace phforge
