// Copyright 2026 The spinnet Authors
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


#pragma once

#include <span>
#include <vector>

#include "spinnet/state.hpp"

namespace spinnet {

/// Von Neumann entropy in bits of the reduced state on `subset`.
/// Eigenvalues in (-1e-10, 0) are treated as 0.
double entanglement_entropy(const PureState &state, std::span<const QubitRef> subset);
double entanglement_entropy(const PureState &state, std::initializer_list<QubitRef> subset);

/// Wootters concurrence of a two-qubit density matrix. Throws InvalidArgument
/// unless rho is 4x4, Hermitian, unit trace and positive semidefinite (1e-10).
double concurrence(const DensityMatrix &rho);

struct PolarizationSample {
    double theta = 0.0;
    double p_up = 0.0;
};

/// Fit of p(theta) = a + b cos^2(theta - theta0) with b >= 0.
struct PolarizationFit {
    /// (p_max - p_min) / (p_max + p_min) of the fitted curve, clamped to [0, 1].
    double degree = 0.0;
    /// In [0, pi).
    double theta0 = 0.0;
    /// Root-mean-square deviation of the samples from the fit.
    double residual = 0.0;
    double a = 0.0;
    double b = 0.0;
};

/// Golden-section search over theta0 with a linear least-squares solve for
/// (a, b) at each trial. Throws DegenerateSamples for fewer than 4 samples or
/// when every theta is equal.
PolarizationFit fit_polarization(std::span<const PolarizationSample> samples);

}  // namespace spinnet
