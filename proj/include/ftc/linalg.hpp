// Copyright 2026 The ftc authors
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

#ifndef FTC_LINALG_HPP_
#define FTC_LINALG_HPP_

#include <stdexcept>
#include <vector>

#include "ftc/matrix.hpp"

namespace ftc {

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Eigenvalues of a symmetric matrix by cyclic Jacobi sweeps, ascending.
// Plenty accurate for the small dense matrices used here (K <= a few
// hundred); throws NumericError if the sweeps fail to converge.
std::vector<double> symmetric_eigenvalues(const Matrix& a);

// Solves A x = b for symmetric positive definite A via Cholesky.
// Throws NumericError if A is not positive definite.
std::vector<double> solve_spd(const Matrix& a, const std::vector<double>& b);

}  // namespace ftc

#endif  // FTC_LINALG_HPP_
