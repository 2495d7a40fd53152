// Copyright 2026 The povm-forge Authors
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

#include <cstddef>
#include <random>

#include "povm_forge/hermitian.hpp"
#include "povm_forge/quantum.hpp"
#include "povm_forge/symmetry.hpp"

namespace povm_forge::random {

using Rng = std::mt19937_64;

/// Entries with independent standard normal real and imaginary parts (real
/// parts only when `real` is set).
ComplexMatrix gaussian_matrix(Rng& rng, int rows, int cols, bool real = false);

/// Hermitian matrix with Gaussian entries.
HermitianMatrix hermitian(Rng& rng, int d, bool real = false);

/// G·G† for a d×rank Gaussian G.
HermitianMatrix psd(Rng& rng, int d, int rank, bool real = false);

/// Random unit vector (Haar distributed for complex vectors).
ComplexVector unit_vector(Rng& rng, int d, bool real = false);

/// Density matrix of the given rank, trace one.
HermitianMatrix density_matrix(Rng& rng, int d, int rank, bool real = false);

/// n operators S^{-1/2} A_k S^{-1/2}, S = Σ A_k, from random PSD A_k of the
/// given rank; requires n·rank ≥ d for a full-rank S almost surely.
Povm povm(Rng& rng, int d, std::size_t n, int rank = 1, bool real = false);

/// Random priors (Dirichlet(1,…,1)) over m random states of the given rank.
Ensemble ensemble(Rng& rng, int d, std::size_t m, int rank = 1, bool real = false);

/// The orbit closure of m random states under rep, with priors constant on
/// each orbit.
Ensemble symmetric_ensemble(Rng& rng, const FiniteRep& rep, std::size_t m, int rank = 1, bool real = false);

}  // namespace povm_forge::random
