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
#include <cstdint>
#include <random>
#include <vector>

#include "phforge/complex_poly.hpp"

namespace phforge::test {

/// Random instances for property tests. Seeded, so every run sees the same
/// sequence.
struct Gen {
    explicit Gen(std::uint64_t seed = 20260417) : rng(seed) {}

    std::mt19937_64 rng;

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
    Complex complex(double s = 1.0) { return {uniform(-s, s), uniform(-s, s)}; }

    ComplexPoly poly_exact(int degree, Basis basis = Basis::Bernstein, double s = 1.0) {
        std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
        for (auto& z : c) z = complex(s);
        return ComplexPoly(basis, std::move(c));
    }
    ComplexPoly poly(int max_degree, Basis basis = Basis::Bernstein) {
        return poly_exact(integer(0, max_degree), basis);
    }
};

} // namespace phforge::test
