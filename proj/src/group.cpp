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

#include "ladder/group.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ladder/errors.hpp"

namespace ladder {

namespace {

constexpr double kPi = 3.14159265358979323846;

double entry_abs(Complex z) { return std::abs(z); }

/// Wraps an angle into (-pi, pi].
double wrap_angle(double x) {
    double r = std::remainder(x, 2.0 * kPi);
    if (r <= -kPi) {
        r += 2.0 * kPi;
    }
    return r;
}

void append_shift_run(ControlSequence& seq, Index amount) {
    const ControlOp op = amount > 0 ? ControlOp::shift_up() : ControlOp::shift_down();
    for (Index i = 0; i < std::llabs(amount); ++i) {
        seq.push_back(op);
    }
}

bool close_to(Complex z, double re, double tol) {
    return std::abs(z - Complex(re, 0.0)) <= tol;
}

} // namespace

double PairUnitary::unitarity_defect() const {
    const PairUnitary g = adjoint() * (*this);
    double d = entry_abs(g.m00 - Complex(1.0));
    d = std::max(d, entry_abs(g.m01));
    d = std::max(d, entry_abs(g.m10));
    d = std::max(d, entry_abs(g.m11 - Complex(1.0)));
    return d;
}

double PairUnitary::max_entry_distance(const PairUnitary& o) const {
    double d = entry_abs(m00 - o.m00);
    d = std::max(d, entry_abs(m01 - o.m01));
    d = std::max(d, entry_abs(m10 - o.m10));
    d = std::max(d, entry_abs(m11 - o.m11));
    return d;
}

ControlOp ControlOp::pair(const PairUnitary& u) {
    if (!u.is_unitary()) {
        throw NotUnitaryError("pair block fails unitarity (defect " +
                              std::to_string(u.unitarity_defect()) + ")");
    }
    return ControlOp(OpKind::Pair, u);
}

ControlOp ControlOp::inverse() const {
    switch (kind_) {
    case OpKind::ShiftUp:
        return shift_down();
    case OpKind::ShiftDown:
        return shift_up();
    case OpKind::Pair:
    default:
        return ControlOp(OpKind::Pair, u_.adjoint());
    }
}

DerivedOp DerivedOp::swap_range(Index k, Index span) {
    if (span < 1) {
        throw std::invalid_argument("swap_range requires span >= 1");
    }
    return DerivedOp(DerivedKind::SwapRange, k, span);
}

DerivedOp DerivedOp::pair_at(Index n, const PairUnitary& u) {
    if (!u.is_unitary()) {
        throw NotUnitaryError("pair_at block fails unitarity");
    }
    return DerivedOp(DerivedKind::PairAt, n, 1, u);
}

namespace {

/// Block positions of the Eq.-style ladder word for a coefficient exchange
/// over [k, k+span]: k, k+1, ..., k+span-1, k+span-2, ..., k.
std::vector<Index> swap_range_positions(Index k, Index span) {
    std::vector<Index> pos;
    pos.reserve(static_cast<std::size_t>(2 * span - 1));
    for (Index n = k; n <= k + span - 1; ++n) {
        pos.push_back(n);
    }
    for (Index n = k + span - 2; n >= k; --n) {
        pos.push_back(n);
    }
    return pos;
}

/// Emits the conjugated blocks at `positions` (all with matrix `u`) with
/// adjacent shift runs merged: between consecutive blocks at p and q only the
/// net shift p - q is emitted.
ControlSequence telescoped_word(const std::vector<Index>& positions, const PairUnitary& u) {
    ControlSequence seq;
    Index frame = 0; // current shift offset applied to the state
    for (Index p : positions) {
        append_shift_run(seq, -p - frame);
        frame = -p;
        seq.push_back(ControlOp::pair(u));
    }
    append_shift_run(seq, -frame);
    return seq;
}

} // namespace

ControlSequence expand_derived(const DerivedOp& d) {
    switch (d.kind()) {
    case DerivedKind::Swap:
        return telescoped_word({d.base()}, PairUnitary::exchange());
    case DerivedKind::PairAt:
        return telescoped_word({d.base()}, d.matrix());
    case DerivedKind::SwapRange:
    default:
        return telescoped_word(swap_range_positions(d.base(), d.span()),
                               PairUnitary::exchange());
    }
}

ControlSequence expand_derived_naive(const DerivedOp& d) {
    std::vector<Index> positions;
    PairUnitary u = PairUnitary::exchange();
    switch (d.kind()) {
    case DerivedKind::Swap:
        positions = {d.base()};
        break;
    case DerivedKind::PairAt:
        positions = {d.base()};
        u = d.matrix();
        break;
    case DerivedKind::SwapRange:
        positions = swap_range_positions(d.base(), d.span());
        break;
    }
    ControlSequence seq;
    for (Index p : positions) {
        append_shift_run(seq, -p);
        seq.push_back(ControlOp::pair(u));
        append_shift_run(seq, p);
    }
    return seq;
}

std::size_t telescoped_length(const DerivedOp& d) {
    if (d.kind() != DerivedKind::SwapRange) {
        return static_cast<std::size_t>(2 * std::llabs(d.base()) + 1);
    }
    return static_cast<std::size_t>(2 * std::llabs(d.base()) + 4 * d.span() - 3);
}

std::optional<std::map<Index, Index>> as_permutation(const ControlSequence& seq,
                                                     const IndexWindow& window) {
    constexpr double kTol = 1e-12;
    // Classify each op once: -1/+1 shift, 0 identity block, 2 exchange block.
    std::vector<int> moves;
    moves.reserve(seq.size());
    for (const ControlOp& op : seq) {
        if (op.is_shift()) {
            moves.push_back(op.shift_amount());
            continue;
        }
        const PairUnitary& u = op.matrix();
        if (close_to(u.m00, 1, kTol) && close_to(u.m11, 1, kTol) &&
            close_to(u.m01, 0, kTol) && close_to(u.m10, 0, kTol)) {
            moves.push_back(0);
        } else if (close_to(u.m01, 1, kTol) && close_to(u.m10, 1, kTol) &&
                   close_to(u.m00, 0, kTol) && close_to(u.m11, 0, kTol)) {
            moves.push_back(2);
        } else {
            return std::nullopt;
        }
    }
    std::map<Index, Index> perm;
    for (Index k = window.lo; k <= window.hi; ++k) {
        Index pos = k;
        for (int m : moves) {
            if (m == 2) {
                if (pos == 0) {
                    pos = 1;
                } else if (pos == 1) {
                    pos = 0;
                }
            } else {
                pos += m;
            }
        }
        perm.emplace(k, pos);
    }
    return perm;
}

ControlSequence invert_sequence(const ControlSequence& seq) {
    ControlSequence inv;
    inv.reserve(seq.size());
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
        inv.push_back(it->inverse());
    }
    return inv;
}

PairUnitary zyz_matrix(const EulerAngles& a) {
    const double c = std::cos(a.theta / 2.0);
    const double s = std::sin(a.theta / 2.0);
    const Complex i(0.0, 1.0);
    return {std::exp(i * (a.delta - (a.alpha + a.beta) / 2.0)) * c,
            -std::exp(i * (a.delta - (a.alpha - a.beta) / 2.0)) * s,
            std::exp(i * (a.delta + (a.alpha - a.beta) / 2.0)) * s,
            std::exp(i * (a.delta + (a.alpha + a.beta) / 2.0)) * c};
}

EulerAngles zyz_decompose(const PairUnitary& v) {
    if (!v.is_unitary()) {
        throw NotUnitaryError("zyz_decompose requires a unitary matrix");
    }
    // Entry magnitudes below this are treated as an exact pole of the chart.
    constexpr double kPole = 1e-13;

    EulerAngles a;
    const double lower = std::abs(v.m10);
    const double upper = std::abs(v.m00);
    a.theta = 2.0 * std::atan2(lower, upper);

    if (lower <= kPole) { // diagonal: theta = 0, rotation axis degenerate
        a.theta = 0.0;
        a.beta = 0.0;
        a.alpha = wrap_angle(std::arg(v.m11 * std::conj(v.m00)));
    } else if (upper <= kPole) { // antidiagonal: theta = pi
        a.theta = kPi;
        a.beta = 0.0;
        a.alpha = wrap_angle(std::arg(v.m10 * std::conj(-v.m01)));
    } else {
        const Complex det = v.m00 * v.m11 - v.m01 * v.m10;
        const double det_arg = std::arg(det);
        a.alpha = wrap_angle(std::arg(v.m11) + std::arg(v.m10) - det_arg);
        a.beta = wrap_angle(std::arg(v.m11) - std::arg(v.m10));
    }

    // Fix the global phase against the best-conditioned entry of the
    // delta-free reconstruction; this absorbs the sign flips introduced by
    // wrapping alpha/beta into (-pi, pi].
    EulerAngles base = a;
    base.delta = 0.0;
    const PairUnitary w = zyz_matrix(base);
    if (std::abs(w.m00) >= std::abs(w.m10)) {
        a.delta = wrap_angle(std::arg(v.m00) - std::arg(w.m00));
    } else {
        a.delta = wrap_angle(std::arg(v.m10) - std::arg(w.m10));
    }
    return a;
}

} // namespace ladder
