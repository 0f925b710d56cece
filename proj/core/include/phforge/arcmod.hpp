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

#include <map>
#include <vector>

#include <Eigen/Dense>

#include "phforge/complex_poly.hpp"
#include "phforge/modify.hpp"
#include "phforge/orthokit.hpp"
#include "phforge/solvekit.hpp"

namespace phforge {

/// Arc-length modification dw = sum gamma_k b_k of a canonical pre-image.
/// Unknowns are gamma_1 .. gamma_{2m+1}; `fixed` maps 1-based indices to
/// fixed values and must leave exactly three free.
struct ArcSystem {
    ComplexPoly preimage = ComplexPoly::zero(Basis::Legendre, 0);  ///< Legendre form
    OrthoBasis basis;
    Eigen::MatrixXcd f;   ///< Q^T Q, (2m+1) x (2m+1), unconjugated
    Eigen::VectorXcd fk;  ///< f_k = 2 sum_l b_{k,l} c_l
    double s = 0.0;
    double delta_s = 0.0;
    std::map<int, double> fixed;
    std::vector<int> free;  ///< 1-based, ascending
};

ArcSystem build_system(const ComplexPoly& w, double delta_s, const std::map<int, double>& fixed);

/// Full gamma vector from the free unknowns.
Eigen::VectorXd assemble_gamma(const ArcSystem& sys, const Eigen::VectorXd& free_values);

/// (sum gamma^2 - dS, Re q, Im q) where q = gamma^T F gamma + gamma^T f.
Eigen::Vector3d arc_residual(const ArcSystem& sys, const Eigen::VectorXd& gamma);

/// q evaluated as the double sum over basis-curve coefficients.
Complex arc_residual_expanded(const ArcSystem& sys, const Eigen::VectorXd& gamma);

struct ArcSolution {
    Eigen::VectorXd gamma;
    Perturbation perturbation;
    double residual = 0.0;       ///< max-norm of arc_residual
    double arc_length = 0.0;     ///< of w + dw
    Complex end_point{};         ///< r(1) of the perturbed canonical curve
};

struct ArcOptions {
    int starts = 256;
    double box_scale = 1.5;   ///< starts in [-scale sqrt(dS), scale sqrt(dS)]^3
    double tolerance = 1e-12;
    double dedup_radius = 1e-6;
};

struct ArcResult {
    std::vector<ArcSolution> solutions;  ///< lexicographic in the free gammas
    solve::SolutionSet raw;
};

ArcResult solve_arc_system(const ArcSystem& sys, const ArcOptions& options = {});

/// S + ||gamma||^2, valid because the basis curves are orthonormal and
/// orthogonal to w.
double arc_length_after(const ComplexPoly& w, const Eigen::VectorXd& gamma);

} // namespace phforge
