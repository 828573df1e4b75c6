// Copyright 2026 The lindprep Authors
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

#include <random>

#include "lindprep/types.hpp"

namespace lindprep {

/// Matrix with independent standard complex Gaussian entries.
Matrix random_matrix(int rows, int cols, std::mt19937_64& rng);

Matrix random_hermitian(int dim, std::mt19937_64& rng);

/// A A^dagger normalized to unit trace.
Matrix random_density(int dim, std::mt19937_64& rng);

/// Haar-like unitary from the QR factorization of a Gaussian matrix with the
/// phases of the R diagonal absorbed.
Matrix random_unitary(int dim, std::mt19937_64& rng);

/// Normalized random state vector.
Vector random_state(int dim, std::mt19937_64& rng);

}  // namespace lindprep
