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

#include "ftc/weights.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ftc/kernels.hpp"
#include "ftc/linalg.hpp"

namespace ftc {

MixingMatrix metropolis(std::shared_ptr<const Topology> g) {
  const int K = g->K;
  Matrix a(K, K);
  for (const auto& [k, l] : g->edges) {
    const double w = 1.0 / (1.0 + std::max(g->degree(k), g->degree(l)));
    a(k, l) = w;
    a(l, k) = w;
  }
  for (int k = 0; k < K; ++k) {
    double off = 0.0;
    for (int l : g->neighbors[k]) {
      if (l != k) off += a(k, l);
    }
    a(k, k) = 1.0 - off;
  }
  return MixingMatrix{std::move(a), std::move(g)};
}

MixingSequence eigenvalue_ft_sequence(const MixingMatrix& w,
                                      double cluster_tol) {
  const int K = w.K();
  const auto eig = symmetric_eigenvalues(w.entries);  // ascending

  // group eigenvalues whose consecutive gap is within cluster_tol
  std::vector<double> distinct;
  std::vector<int> group_size;
  for (double v : eig) {
    if (distinct.empty() || v - distinct.back() > cluster_tol) {
      distinct.push_back(v);
      group_size.push_back(1);
    } else {
      // running mean of the group
      distinct.back() += (v - distinct.back()) / (group_size.back() + 1);
      ++group_size.back();
    }
  }

  if (std::abs(distinct.back() - 1.0) > 1e-8) {
    throw NumericError("eigenvalue_ft_sequence: top eigenvalue is not 1");
  }
  if (group_size.back() != 1) {
    throw NumericError(
        "eigenvalue_ft_sequence: eigenvalue 1 is not simple (graph "
        "disconnected or nearly so)");
  }
  if (std::abs(distinct.front()) > 1.0 + 1e-8) {
    throw NumericError("eigenvalue_ft_sequence: spectral radius exceeds 1");
  }

  MixingSequence seq;
  seq.support = w.support;
  // descending order: the largest sub-unit eigenvalue is eliminated first
  for (int s = static_cast<int>(distinct.size()) - 2; s >= 0; --s) {
    const double lambda = distinct[s];
    const double denom = 1.0 - lambda;
    if (denom < 10.0 * cluster_tol) {
      std::ostringstream msg;
      msg << "eigenvalue_ft_sequence: eigenvalue " << lambda
          << " too close to 1 (1 - lambda = " << denom << ")";
      throw NumericError(msg.str());
    }
    Matrix a = w.entries;
    for (std::size_t i = 0; i < a.rows(); ++i) a(i, i) -= lambda;
    for (std::size_t i = 0; i < a.size(); ++i) a.data()[i] /= denom;
    seq.matrices.push_back(std::move(a));
  }
  return seq;
}

Matrix product(const MixingSequence& seq) {
  const int K = seq.K();
  Matrix p = Matrix::identity(K);
  if (seq.matrices.empty()) return p;
  p = seq.matrices.front();
  Matrix next(K, K);
  for (int m = 1; m < seq.tau(); ++m) {
    const Matrix& a = seq.matrices[m];
    for (int k = 0; k < K; ++k) {
      // dense row combine: next.row(k) = sum_l a(k,l) * p.row(l)
      std::vector<const double*> rows(K);
      std::vector<double> wts(K);
      for (int l = 0; l < K; ++l) {
        rows[l] = p.row(l);
        wts[l] = a(k, l);
      }
      kernels::weighted_sum(next.row(k), K, rows.data(), wts.data(), K);
    }
    std::swap(p, next);
  }
  return p;
}

double FeasibilityReport::max() const {
  return std::max({symmetry_defect, stochastic_defect, sparsity_defect});
}

FeasibilityReport feasibility_report(const Matrix& a, const Topology& g) {
  FeasibilityReport r;
  const int K = g.K;
  for (int k = 0; k < K; ++k) {
    double sum = 0.0;
    for (int l = 0; l < K; ++l) {
      sum += a(k, l);
      if (l > k) {
        r.symmetry_defect =
            std::max(r.symmetry_defect, std::abs(a(k, l) - a(l, k)) / 2.0);
      }
      if (l != k && !g.has_edge(k, l)) {
        r.sparsity_defect = std::max(r.sparsity_defect, std::abs(a(k, l)));
      }
    }
    r.stochastic_defect = std::max(r.stochastic_defect, std::abs(sum - 1.0));
  }
  return r;
}

FeasibilityReport feasibility_report(const MixingMatrix& m) {
  return feasibility_report(m.entries, *m.support);
}

void save_sequence(const MixingSequence& seq, std::ostream& out) {
  out << "K=" << seq.K() << " tau=" << seq.tau() << "\n";
  char buf[64];
  for (const Matrix& a : seq.matrices) {
    for (std::size_t k = 0; k < a.rows(); ++k) {
      for (std::size_t l = 0; l < a.cols(); ++l) {
        std::snprintf(buf, sizeof buf, "%.17g", a(k, l));
        out << (l ? " " : "") << buf;
      }
      out << "\n";
    }
  }
}

void save_sequence(const MixingSequence& seq, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for write: " + path);
  save_sequence(seq, out);
}

MixingSequence load_sequence(std::istream& in,
                             std::shared_ptr<const Topology> g) {
  std::string header;
  if (!std::getline(in, header)) {
    throw std::invalid_argument("sequence file: missing header");
  }
  int K = 0, tau = 0;
  if (std::sscanf(header.c_str(), "K=%d tau=%d", &K, &tau) != 2) {
    throw std::invalid_argument("sequence file: expected 'K=<int> tau=<int>'");
  }
  if (g && g->K != K) {
    throw std::invalid_argument("sequence file: K does not match topology");
  }
  MixingSequence seq;
  seq.support = std::move(g);
  for (int t = 0; t < tau; ++t) {
    Matrix a(K, K);
    for (int k = 0; k < K; ++k) {
      std::string line;
      if (!std::getline(in, line)) {
        throw std::invalid_argument("sequence file: truncated");
      }
      std::istringstream ls(line);
      for (int l = 0; l < K; ++l) {
        if (!(ls >> a(k, l))) {
          throw std::invalid_argument("sequence file: malformed row");
        }
      }
    }
    seq.matrices.push_back(std::move(a));
  }
  if (seq.support) {
    for (const Matrix& a : seq.matrices) {
      if (feasibility_report(a, *seq.support).sparsity_defect != 0.0) {
        throw std::invalid_argument(
            "sequence file: entries off the topology support");
      }
    }
  }
  return seq;
}

MixingSequence load_sequence(const std::string& path,
                             std::shared_ptr<const Topology> g) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open sequence file: " + path);
  return load_sequence(in, std::move(g));
}

}  // namespace ftc
