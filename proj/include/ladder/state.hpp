// Copyright 2026 The ladder authors
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

#ifndef LADDER_STATE_HPP
#define LADDER_STATE_HPP

#include <map>
#include <utility>
#include <vector>

#include "ladder/group.hpp"

namespace ladder {

/// Stored amplitudes below this magnitude are dropped.
inline constexpr double kPruneThreshold = 1e-15;

/// Finite-support vector of the two-sided sequence space, indexed by the
/// (unbounded) level number. Shifts are O(1): the map keys are stored
/// relative to an offset, so a shift only rebases the offset and the stored
/// amplitudes stay bit-identical.
class SparseState {
  public:
    SparseState() = default;

    static SparseState basis(Index k) {
        SparseState s;
        s.entries_.emplace(k, Complex(1.0, 0.0));
        return s;
    }

    /// Builds from (index, amplitude) pairs; throws std::invalid_argument on
    /// a duplicate index. Sub-threshold amplitudes are dropped.
    static SparseState from_entries(
        const std::vector<std::pair<Index, Complex>>& entries);

    Complex amplitude(Index k) const {
        auto it = entries_.find(k - offset_);
        return it == entries_.end() ? Complex(0.0) : it->second;
    }

    std::size_t support_size() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }

    /// Sorted support indices.
    std::vector<Index> support() const;

    /// Sorted (index, amplitude) pairs.
    std::vector<std::pair<Index, Complex>> entries() const;

    double norm() const;

    /// Minimal radius R with support inside [-R, R]; 0 for the zero state.
    Index support_radius() const;

    /// Exact entrywise equality (indices and bit-level amplitudes).
    bool operator==(const SparseState& o) const;
    bool operator!=(const SparseState& o) const { return !(*this == o); }

    void shift_in_place(int amount) { offset_ += amount; }
    void apply_pair_in_place(const PairUnitary& u);

  private:
    void set(Index k, Complex v);

    Index offset_ = 0;
    std::map<Index, Complex> entries_; // stored key = index - offset_
};

SparseState basis_state(Index k);

/// Conjugate-linear in the first argument: sum of conj(a_k) * b_k.
Complex inner(const SparseState& a, const SparseState& b);

double norm(const SparseState& a);

struct Truncation {
    SparseState state; // restriction of the input to [-radius, radius]
    double norm = 0.0; // norm of that restriction
};

/// Restriction of `a` to the window [-radius, radius] plus its norm.
Truncation truncate(const SparseState& a, Index radius);

SparseState apply_op(const SparseState& a, const ControlOp& op);

/// Folds apply_op left to right: seq[0] acts first.
SparseState apply_sequence(const SparseState& a, const ControlSequence& seq);

} // namespace ladder

#endif
