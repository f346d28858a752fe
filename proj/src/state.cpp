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

#include "ladder/state.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace ladder {

SparseState SparseState::from_entries(
    const std::vector<std::pair<Index, Complex>>& entries) {
    SparseState s;
    for (const auto& [k, v] : entries) {
        if (s.entries_.count(k) != 0) {
            throw std::invalid_argument("duplicate index " + std::to_string(k));
        }
        if (std::abs(v) >= kPruneThreshold) {
            s.entries_.emplace(k, v);
        }
    }
    return s;
}

std::vector<Index> SparseState::support() const {
    std::vector<Index> out;
    out.reserve(entries_.size());
    for (const auto& [k, v] : entries_) {
        out.push_back(k + offset_);
    }
    return out;
}

std::vector<std::pair<Index, Complex>> SparseState::entries() const {
    std::vector<std::pair<Index, Complex>> out;
    out.reserve(entries_.size());
    for (const auto& [k, v] : entries_) {
        out.emplace_back(k + offset_, v);
    }
    return out;
}

double SparseState::norm() const {
    double sq = 0.0;
    for (const auto& [k, v] : entries_) {
        sq += std::norm(v);
    }
    return std::sqrt(sq);
}

Index SparseState::support_radius() const {
    Index r = 0;
    for (const auto& [k, v] : entries_) {
        r = std::max(r, std::llabs(k + offset_));
    }
    return r;
}

bool SparseState::operator==(const SparseState& o) const {
    if (entries_.size() != o.entries_.size()) {
        return false;
    }
    auto it = entries_.begin();
    auto jt = o.entries_.begin();
    for (; it != entries_.end(); ++it, ++jt) {
        if (it->first + offset_ != jt->first + o.offset_ || it->second != jt->second) {
            return false;
        }
    }
    return true;
}

void SparseState::set(Index k, Complex v) {
    const Index key = k - offset_;
    if (std::abs(v) < kPruneThreshold) {
        entries_.erase(key);
    } else {
        entries_[key] = v;
    }
}

void SparseState::apply_pair_in_place(const PairUnitary& u) {
    const Complex c0 = amplitude(0);
    const Complex c1 = amplitude(1);
    if (c0 == Complex(0.0) && c1 == Complex(0.0)) {
        return;
    }
    const auto [n0, n1] = u.apply(c0, c1);
    set(0, n0);
    set(1, n1);
}

SparseState basis_state(Index k) { return SparseState::basis(k); }

Complex inner(const SparseState& a, const SparseState& b) {
    // Iterate the smaller support, look up in the other.
    Complex acc(0.0);
    if (a.support_size() <= b.support_size()) {
        for (const auto& [k, v] : a.entries()) {
            acc += std::conj(v) * b.amplitude(k);
        }
    } else {
        for (const auto& [k, v] : b.entries()) {
            acc += std::conj(a.amplitude(k)) * v;
        }
    }
    return acc;
}

double norm(const SparseState& a) { return a.norm(); }

Truncation truncate(const SparseState& a, Index radius) {
    Truncation t;
    std::vector<std::pair<Index, Complex>> kept;
    double sq = 0.0;
    for (const auto& [k, v] : a.entries()) {
        if (-radius <= k && k <= radius) {
            kept.emplace_back(k, v);
            sq += std::norm(v);
        }
    }
    t.state = SparseState::from_entries(kept);
    t.norm = std::sqrt(sq);
    return t;
}

SparseState apply_op(const SparseState& a, const ControlOp& op) {
    SparseState out = a;
    if (op.is_shift()) {
        out.shift_in_place(op.shift_amount());
    } else {
        out.apply_pair_in_place(op.matrix());
    }
    return out;
}

SparseState apply_sequence(const SparseState& a, const ControlSequence& seq) {
    SparseState out = a;
    for (const ControlOp& op : seq) {
        if (op.is_shift()) {
            out.shift_in_place(op.shift_amount());
        } else {
            out.apply_pair_in_place(op.matrix());
        }
    }
    return out;
}

} // namespace ladder
