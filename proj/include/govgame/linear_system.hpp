// Copyright 2026 The govgame Authors
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

#ifndef GOVGAME_LINEAR_SYSTEM_HPP_
#define GOVGAME_LINEAR_SYSTEM_HPP_

#include <utility>

#include "govgame/game.hpp"

namespace govgame {

enum class SolveStatus { Unique, Underdetermined, Inconsistent };

template <typename Scalar>
struct LinearSolution {
  SolveStatus status = SolveStatus::Inconsistent;
  Index rank = 0;
  // Set only when status is Unique.
  Vector<Scalar> x;
};

// Gauss-Jordan elimination for a (possibly non-square) system A x = b.
// Pivots on any nonzero entry, so the result is exact for exact scalars; the
// routine is not meant for floating point.
template <typename Scalar>
LinearSolution<Scalar> solve_exact(Matrix<Scalar> a, Vector<Scalar> b) {
  const Index rows = a.rows();
  const Index cols = a.cols();
  std::vector<Index> pivot_col;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && a(p, c) == Scalar(0)) ++p;
    if (p == rows) continue;
    if (p != r) {
      a.row(p).swap(a.row(r));
      std::swap(b[p], b[r]);
    }
    const Scalar inv = Scalar(1) / a(r, c);
    a.row(r) *= inv;
    b[r] *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == Scalar(0)) continue;
      const Scalar f = a(i, c);
      a.row(i) -= f * a.row(r);
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }

  LinearSolution<Scalar> out;
  out.rank = r;
  for (Index i = r; i < rows; ++i) {
    if (b[i] != Scalar(0)) return out;
  }
  if (r < cols) {
    out.status = SolveStatus::Underdetermined;
    return out;
  }
  out.status = SolveStatus::Unique;
  out.x = Vector<Scalar>::Zero(cols);
  for (Index i = 0; i < r; ++i) out.x[pivot_col[static_cast<std::size_t>(i)]] = b[i];
  return out;
}

}  // namespace govgame

#endif  // GOVGAME_LINEAR_SYSTEM_HPP_
