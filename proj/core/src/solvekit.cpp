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

#include "phforge/solvekit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "phforge/error.hpp"

namespace phforge::solve {

namespace {

double max_norm(const Vector& v) {
    return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

bool all_finite(const Vector& v) {
    return v.allFinite();
}

constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

double radical_inverse(int index, int base) {
    double result = 0.0;
    double f = 1.0 / base;
    while (index > 0) {
        result += f * (index % base);
        index /= base;
        f /= base;
    }
    return result;
}

Vector canonical(const Vector& x, const std::vector<bool>& periodic) {
    Vector y = x;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
        if (static_cast<std::size_t>(i) < periodic.size() && periodic[i]) {
            y(i) = wrap_angle(y(i));
        }
    }
    return y;
}

double separation(const Vector& a, const Vector& b, const std::vector<bool>& periodic) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        double d = a(i) - b(i);
        if (static_cast<std::size_t>(i) < periodic.size() && periodic[i]) {
            d = wrap_angle(d);
        }
        sum += d * d;
    }
    return std::sqrt(sum);
}

} // namespace

const char* to_string(NewtonStatus status) {
    switch (status) {
    case NewtonStatus::Converged: return "converged";
    case NewtonStatus::SingularJacobian: return "singular-jacobian";
    case NewtonStatus::MaxIterations: return "max-iterations";
    case NewtonStatus::NonFinite: return "non-finite";
    }
    return "unknown";
}

Matrix fd_jacobian(const ResidualFn& f, const Vector& x, double step) {
    const Vector f0 = f(x);
    Matrix jac(f0.size(), x.size());
    Vector xp = x;
    for (Eigen::Index j = 0; j < x.size(); ++j) {
        const double h = step * std::max(1.0, std::abs(x(j)));
        xp(j) = x(j) + h;
        jac.col(j) = (f(xp) - f0) / h;
        xp(j) = x(j);
    }
    return jac;
}

NewtonResult newton(const ResidualFn& f, Vector x0, const NewtonOptions& options) {
    NewtonResult result;
    result.x = std::move(x0);
    Vector fx = f(result.x);
    result.residual = max_norm(fx);
    for (int it = 0; it < options.max_iterations; ++it) {
        if (!all_finite(fx)) {
            result.status = NewtonStatus::NonFinite;
            return result;
        }
        if (result.residual < options.tolerance) {
            result.status = NewtonStatus::Converged;
            return result;
        }
        result.iterations = it + 1;
        const Matrix jac = options.jacobian ? options.jacobian(result.x)
                                            : fd_jacobian(f, result.x, options.fd_step);
        Eigen::ColPivHouseholderQR<Matrix> qr(jac);
        if (qr.rank() < jac.cols()) {
            result.status = NewtonStatus::SingularJacobian;
            return result;
        }
        const Vector step = qr.solve(-fx);
        if (!all_finite(step)) {
            result.status = NewtonStatus::NonFinite;
            return result;
        }
        double lambda = 1.0;
        Vector trial = result.x + step;
        Vector ft = f(trial);
        for (int halvings = 0; halvings < 20 && !(max_norm(ft) < result.residual); ++halvings) {
            lambda *= 0.5;
            trial = result.x + lambda * step;
            ft = f(trial);
        }
        // Accept the last trial even when it did not decrease the residual;
        // Newton may need to pass through a worse point near a root.
        result.x = std::move(trial);
        fx = std::move(ft);
        result.residual = max_norm(fx);
    }
    result.status = result.residual < options.tolerance && all_finite(fx)
                        ? NewtonStatus::Converged
                        : NewtonStatus::MaxIterations;
    return result;
}

SolutionSet multistart(const ResidualFn& f, std::span<const Vector> starts,
                       const MultistartOptions& options) {
    SolutionSet set;
    set.starts_used = static_cast<int>(starts.size());
    int converged = 0;
    int singular = 0;
    int non_finite = 0;
    int exhausted = 0;
    for (const Vector& start : starts) {
        const NewtonResult r = newton(f, start, options.newton);
        switch (r.status) {
        case NewtonStatus::Converged: break;
        case NewtonStatus::SingularJacobian: ++singular; continue;
        case NewtonStatus::NonFinite: ++non_finite; continue;
        case NewtonStatus::MaxIterations: ++exhausted; continue;
        }
        ++converged;
        const Vector root = canonical(r.x, options.periodic);
        auto same = std::find_if(set.solutions.begin(), set.solutions.end(), [&](const Vector& s) {
            return separation(s, root, options.periodic) < options.dedup_radius;
        });
        if (same == set.solutions.end()) {
            set.solutions.push_back(root);
            set.residuals.push_back(r.residual);
        } else {
            const auto idx = static_cast<std::size_t>(same - set.solutions.begin());
            if (r.residual < set.residuals[idx]) {
                set.solutions[idx] = root;
                set.residuals[idx] = r.residual;
            }
        }
    }
    set.converged_fraction =
        starts.empty() ? 0.0 : static_cast<double>(converged) / static_cast<double>(starts.size());

    std::vector<std::size_t> order(set.solutions.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const Vector& x = set.solutions[a];
        const Vector& y = set.solutions[b];
        return std::lexicographical_compare(x.data(), x.data() + x.size(), y.data(),
                                            y.data() + y.size());
    });
    SolutionSet sorted;
    sorted.starts_used = set.starts_used;
    sorted.converged_fraction = set.converged_fraction;
    for (std::size_t i : order) {
        sorted.solutions.push_back(set.solutions[i]);
        sorted.residuals.push_back(set.residuals[i]);
    }
    std::ostringstream diag;
    diag << "starts=" << set.starts_used << " converged=" << converged
         << " singular=" << singular << " non_finite=" << non_finite
         << " max_iterations=" << exhausted << " distinct=" << sorted.solutions.size();
    sorted.diagnostics = diag.str();
    return sorted;
}

std::vector<Vector> halton_box(int count, const Vector& lo, const Vector& hi) {
    const Eigen::Index dim = lo.size();
    if (dim > static_cast<Eigen::Index>(std::size(kPrimes))) {
        throw Error(ErrorKind::InvalidArgument, "halton_box: dimension too large");
    }
    std::vector<Vector> points;
    points.reserve(static_cast<std::size_t>(std::max(count, 0)));
    for (int i = 1; i <= count; ++i) {
        Vector p(dim);
        for (Eigen::Index d = 0; d < dim; ++d) {
            p(d) = lo(d) + (hi(d) - lo(d)) * radical_inverse(i, kPrimes[d]);
        }
        points.push_back(std::move(p));
    }
    return points;
}

std::vector<Vector> grid_box(int per_axis, const Vector& lo, const Vector& hi) {
    const Eigen::Index dim = lo.size();
    std::vector<Vector> points;
    std::vector<int> idx(static_cast<std::size_t>(dim), 0);
    while (true) {
        Vector p(dim);
        for (Eigen::Index d = 0; d < dim; ++d) {
            p(d) = lo(d) + (hi(d) - lo(d)) * (idx[d] + 0.5) / per_axis;
        }
        points.push_back(std::move(p));
        Eigen::Index d = 0;
        while (d < dim && ++idx[d] == per_axis) {
            idx[d] = 0;
            ++d;
        }
        if (d == dim) {
            break;
        }
    }
    return points;
}

double wrap_angle(double a) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r = std::remainder(a, two_pi);
    if (r <= -std::numbers::pi) {
        r += two_pi;
    }
    return r;
}

RealQuadratic quadratic_real(double a, double b, double c) {
    RealQuadratic out;
    if (a == 0.0) {
        if (b == 0.0) {
            if (c != 0.0) {
                throw Error(ErrorKind::InvalidArgument, "quadratic_real: no solution (a = b = 0)");
            }
            return out;
        }
        out.roots.push_back(-c / b);
        return out;
    }
    out.discriminant = b * b - 4.0 * a * c;
    if (out.discriminant < 0.0) {
        return out;
    }
    const double s = std::sqrt(out.discriminant);
    const double q = -0.5 * (b + std::copysign(s, b));
    if (q == 0.0) {
        out.roots = {0.0, 0.0};
        return out;
    }
    out.roots = {q / a, c / q};
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

std::array<Complex, 2> quadratic_complex(Complex a, Complex b, Complex c) {
    if (a == Complex{}) {
        if (b == Complex{}) {
            throw Error(ErrorKind::InvalidArgument, "quadratic_complex: no solution (a = b = 0)");
        }
        const Complex r = -c / b;
        return {r, r};
    }
    const Complex s = std::sqrt(b * b - 4.0 * a * c);
    // Choose the sign that avoids cancellation in b + s.
    const Complex q = -0.5 * (std::real(std::conj(b) * s) >= 0.0 ? b + s : b - s);
    if (q == Complex{}) {
        return {Complex{}, Complex{}};
    }
    return {q / a, c / q};
}

std::vector<double> bracket_roots(const std::function<double(double)>& f, double lo, double hi,
                                  const BracketOptions& options) {
    std::vector<double> roots;
    const int n = options.intervals;
    double x0 = lo;
    double f0 = f(x0);
    for (int i = 1; i <= n; ++i) {
        const double x1 = lo + (hi - lo) * i / n;
        const double f1 = f(x1);
        if (f0 == 0.0) {
            roots.push_back(x0);
        } else if (f0 * f1 < 0.0) {
            // Illinois variant of regula falsi; a and b stay on opposite sides.
            double a = x0, fa = f0, b = x1, fb = f1;
            for (int it = 0; it < options.max_iterations; ++it) {
                const double x = b - fb * (b - a) / (fb - fa);
                const double fx = f(x);
                if (fx == 0.0) {
                    a = b = x;
                    break;
                }
                if (fx * fb < 0.0) {
                    a = b;
                    fa = fb;
                } else {
                    fa *= 0.5;
                }
                b = x;
                fb = fx;
                if (std::abs(b - a) < options.tolerance) {
                    break;
                }
            }
            roots.push_back(std::abs(fa) < std::abs(fb) ? a : b);
        }
        x0 = x1;
        f0 = f1;
    }
    if (f0 == 0.0) {
        roots.push_back(x0);
    }
    return roots;
}

} // namespace phforge::solve
