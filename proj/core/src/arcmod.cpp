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

#include "phforge/arcmod.hpp"

#include <cmath>
#include <string>

#include "phforge/conversion.hpp"
#include "phforge/error.hpp"
#include "phforge/phcore.hpp"

namespace phforge {

ArcSystem build_system(const ComplexPoly& w, double delta_s, const std::map<int, double>& fixed) {
    if (!(delta_s > 0.0))
        throw Error(ErrorKind::InvalidArgument, "delta_s must be positive (only lengthening is supported)");
    CanonicalCheck check = is_canonical(w);
    if (!check.canonical)
        throw Error(ErrorKind::NotCanonical,
                    "pre-image is not canonical (residual " + std::to_string(check.residual) + ")");

    ArcSystem sys;
    sys.preimage = convert(w, Basis::Legendre);
    sys.basis = orthogonal_basis(sys.preimage);
    const int n = sys.basis.dimension();
    for (const auto& [k, v] : fixed) {
        if (k < 1 || k > n)
            throw Error(ErrorKind::InvalidArgument, "gamma index " + std::to_string(k) +
                                                        " outside 1.." + std::to_string(n));
        if (!std::isfinite(v))
            throw Error(ErrorKind::InvalidArgument, "fixed gamma values must be finite");
    }
    if (n - static_cast<int>(fixed.size()) != 3)
        throw Error(ErrorKind::Arity, "expected " + std::to_string(n - 3) + " fixed gammas, got " +
                                          std::to_string(fixed.size()));
    sys.fixed = fixed;
    for (int k = 1; k <= n; ++k)
        if (!fixed.contains(k)) sys.free.push_back(k);

    const Eigen::MatrixXcd& q = sys.basis.complex_q;
    sys.f = q.transpose() * q;
    sys.fk = 2.0 * q.transpose() * to_vector(sys.preimage.coeffs());
    sys.s = arc_length(sys.preimage);
    sys.delta_s = delta_s;
    return sys;
}

Eigen::VectorXd assemble_gamma(const ArcSystem& sys, const Eigen::VectorXd& free_values) {
    if (free_values.size() != static_cast<Eigen::Index>(sys.free.size()))
        throw Error(ErrorKind::Arity, "expected 3 free gamma values");
    Eigen::VectorXd gamma(sys.basis.dimension());
    for (const auto& [k, v] : sys.fixed) gamma[k - 1] = v;
    for (std::size_t i = 0; i < sys.free.size(); ++i) gamma[sys.free[i] - 1] = free_values[i];
    return gamma;
}

Eigen::Vector3d arc_residual(const ArcSystem& sys, const Eigen::VectorXd& gamma) {
    const Eigen::VectorXcd g = gamma.cast<Complex>();
    const Complex q = (g.transpose() * sys.f * g)(0, 0) + (g.transpose() * sys.fk)(0, 0);
    return {gamma.squaredNorm() - sys.delta_s, q.real(), q.imag()};
}

Complex arc_residual_expanded(const ArcSystem& sys, const Eigen::VectorXd& gamma) {
    const auto& curves = sys.basis.curves;
    const auto c = sys.preimage.coeffs();
    const std::size_t n = curves.size();
    Complex q{};
    for (std::size_t j = 0; j < n; ++j) {
        Complex fj{};
        for (std::size_t l = 0; l < c.size(); ++l) fj += 2.0 * curves[j][l] * c[l];
        q += fj * gamma[j];
        for (std::size_t k = 0; k < n; ++k) {
            Complex fjk{};
            for (std::size_t l = 0; l < c.size(); ++l) fjk += curves[j][l] * curves[k][l];
            q += fjk * gamma[j] * gamma[k];
        }
    }
    return q;
}

ArcResult solve_arc_system(const ArcSystem& sys, const ArcOptions& options) {
    if (options.starts < 1) throw Error(ErrorKind::InvalidArgument, "starts must be positive");
    solve::ResidualFn f = [&](const solve::Vector& x) -> solve::Vector {
        return arc_residual(sys, assemble_gamma(sys, x));
    };
    const double half = options.box_scale * std::sqrt(sys.delta_s);
    const solve::Vector lo = solve::Vector::Constant(3, -half);
    const solve::Vector hi = solve::Vector::Constant(3, half);
    auto starts = solve::halton_box(options.starts, lo, hi);
    solve::MultistartOptions ms;
    ms.newton.tolerance = options.tolerance;
    ms.dedup_radius = options.dedup_radius;

    ArcResult out;
    out.raw = solve::multistart(f, starts, ms);
    for (const auto& x : out.raw.solutions) {
        ArcSolution s;
        s.gamma = assemble_gamma(sys, x);
        s.residual = arc_residual(sys, s.gamma).cwiseAbs().maxCoeff();
        ComplexPoly dw = orthogonal_family(sys.basis, {s.gamma.data(), static_cast<std::size_t>(s.gamma.size())});
        s.perturbation = perturbation_from_legendre({dw.coeffs().begin(), dw.coeffs().end()},
                                                    PerturbScheme::Orthogonal);
        ComplexPoly moved = sys.preimage + dw;
        s.arc_length = arc_length(moved);
        s.end_point = build_curve(moved).controls.back();
        out.solutions.push_back(std::move(s));
    }
    if (out.solutions.empty() && out.raw.diagnostics.empty())
        out.raw.diagnostics = "no real solution found from " + std::to_string(options.starts) + " starts";
    return out;
}

double arc_length_after(const ComplexPoly& w, const Eigen::VectorXd& gamma) {
    if (!gamma.allFinite()) throw Error(ErrorKind::InvalidArgument, "gamma must be finite");
    return arc_length(w) + gamma.squaredNorm();
}

} // namespace phforge
