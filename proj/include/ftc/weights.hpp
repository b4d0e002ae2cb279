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

#ifndef FTC_WEIGHTS_HPP_
#define FTC_WEIGHTS_HPP_

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "ftc/matrix.hpp"
#include "ftc/topology.hpp"

namespace ftc {

// Mixing (combination) matrix tied to the topology whose edge set plus
// diagonal defines its allowed support. A *feasible* matrix is symmetric,
// row-stochastic and support-consistent; entries may be negative.
struct MixingMatrix {
  Matrix entries;
  std::shared_ptr<const Topology> support;

  int K() const { return support ? support->K : 0; }
};

// Ordered sequence [A_1, ..., A_tau] over a common topology. Index 1 is
// applied first: products are A_tau * ... * A_2 * A_1.
struct MixingSequence {
  std::shared_ptr<const Topology> support;
  std::vector<Matrix> matrices;

  int tau() const { return static_cast<int>(matrices.size()); }
  int K() const { return support ? support->K : 0; }
};

// Metropolis-Hastings weights: a_kl = 1 / (1 + max(deg_k, deg_l)) on edges,
// diagonal takes the remainder. Symmetric, doubly stochastic, nonnegative.
MixingMatrix metropolis(std::shared_ptr<const Topology> g);

// Finite-time sequence from the spectrum of a static doubly stochastic w:
// one factor (w - lambda I) / (1 - lambda) per distinct eigenvalue lambda
// below one, emitted in descending eigenvalue order. The product over the
// sequence equals the (1/K) all-ones matrix up to eigensolver accuracy.
// Throws NumericError when a sub-unit eigenvalue sits too close to one for
// the normalization to be trustworthy.
MixingSequence eigenvalue_ft_sequence(const MixingMatrix& w,
                                      double cluster_tol = 1e-8);

// Dense product A_tau * ... * A_1.
Matrix product(const MixingSequence& seq);

// Max-norm residuals of the three feasibility constraints.
struct FeasibilityReport {
  double symmetry_defect = 0.0;    // max |a_kl - a_lk| / 2
  double stochastic_defect = 0.0;  // max |row sum - 1|
  double sparsity_defect = 0.0;    // max |entry off support|
  double max() const;
};

FeasibilityReport feasibility_report(const MixingMatrix& m);
FeasibilityReport feasibility_report(const Matrix& entries, const Topology& g);

// Sequence file format: "K=<int> tau=<int>" header, then tau blocks of K
// lines of K decimals (17 significant digits; round-trip exact).
void save_sequence(const MixingSequence& seq, std::ostream& out);
void save_sequence(const MixingSequence& seq, const std::string& path);
MixingSequence load_sequence(std::istream& in,
                             std::shared_ptr<const Topology> g);
MixingSequence load_sequence(const std::string& path,
                             std::shared_ptr<const Topology> g);

}  // namespace ftc

#endif  // FTC_WEIGHTS_HPP_
