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

#ifndef LADDER_GROUP_HPP
#define LADDER_GROUP_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace ladder {

using Index = std::int64_t;
using Complex = std::complex<double>;

/// 2x2 complex matrix acting on the coefficient pair of (e0, e1).
/// Invariant (enforced at the ControlOp boundary): unitary within 1e-12.
struct PairUnitary {
    Complex m00{1.0}, m01{0.0}, m10{0.0}, m11{1.0};

    static PairUnitary identity() { return {}; }

    /// The coefficient exchange e0 <-> e1 (the basic swap block).
    static PairUnitary exchange() { return {0.0, 1.0, 1.0, 0.0}; }

    /// diag(p0, p1) phase block.
    static PairUnitary diagonal(Complex p0, Complex p1) {
        return {p0, 0.0, 0.0, p1};
    }

    PairUnitary adjoint() const {
        return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
    }

    PairUnitary operator*(const PairUnitary& o) const {
        return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
    }

    /// Max entrywise deviation of M†M from the identity.
    double unitarity_defect() const;
    bool is_unitary(double tol = 1e-12) const { return unitarity_defect() <= tol; }

    /// Applies the block to a coefficient pair (c0, c1).
    std::pair<Complex, Complex> apply(Complex c0, Complex c1) const {
        return {m00 * c0 + m01 * c1, m10 * c0 + m11 * c1};
    }

    double max_entry_distance(const PairUnitary& o) const;
};

enum class OpKind { ShiftUp, ShiftDown, Pair };

/// One primitive generator: the level shift, its inverse, or a two-level
/// unitary block on (e0, e1).
class ControlOp {
  public:
    static ControlOp shift_up() { return ControlOp(OpKind::ShiftUp); }
    static ControlOp shift_down() { return ControlOp(OpKind::ShiftDown); }
    /// Throws NotUnitaryError if `u` fails the 1e-12 unitarity invariant.
    static ControlOp pair(const PairUnitary& u);

    OpKind kind() const { return kind_; }
    bool is_shift() const { return kind_ != OpKind::Pair; }
    /// +1 for ShiftUp, -1 for ShiftDown, 0 for Pair.
    int shift_amount() const {
        return kind_ == OpKind::ShiftUp ? 1 : kind_ == OpKind::ShiftDown ? -1 : 0;
    }
    const PairUnitary& matrix() const { return u_; }

    ControlOp inverse() const;

  private:
    explicit ControlOp(OpKind kind, PairUnitary u = PairUnitary::identity())
        : kind_(kind), u_(u) {}
    OpKind kind_;
    PairUnitary u_;
};

/// A word in the control group. ops[0] acts first on the state.
using ControlSequence = std::vector<ControlOp>;

enum class DerivedKind { Swap, SwapRange, PairAt };

/// Composite group elements: Swap(n) exchanges coefficients n and n+1,
/// SwapRange(k,l) exchanges coefficients k and k+l, PairAt(n,V) applies V to
/// the coefficient pair (n, n+1).
class DerivedOp {
  public:
    static DerivedOp swap_at(Index n) { return DerivedOp(DerivedKind::Swap, n, 1); }
    /// Throws std::invalid_argument for span < 1.
    static DerivedOp swap_range(Index k, Index span);
    static DerivedOp pair_at(Index n, const PairUnitary& u);

    DerivedKind kind() const { return kind_; }
    Index base() const { return base_; }
    Index span() const { return span_; }
    const PairUnitary& matrix() const { return u_; }

  private:
    DerivedOp(DerivedKind kind, Index base, Index span,
              PairUnitary u = PairUnitary::exchange())
        : kind_(kind), base_(base), span_(span), u_(u) {}
    DerivedKind kind_;
    Index base_;
    Index span_;
    PairUnitary u_;
};

/// Expands a derived op into primitives with adjacent shift runs merged
/// (telescoped canonical form). SwapRange(k,l) telescopes to
/// 2|k| + 4l - 3 primitives.
ControlSequence expand_derived(const DerivedOp& d);

/// Untelescoped expansion: each conjugated block emitted as
/// [shift in, block, shift out]. Kept as the cross-check route for the
/// canonical form.
ControlSequence expand_derived_naive(const DerivedOp& d);

/// Primitive count of the telescoped expansion, without building it.
std::size_t telescoped_length(const DerivedOp& d);

/// Closed index range [lo, hi].
struct IndexWindow {
    Index lo = 0;
    Index hi = 0;
    bool contains(Index k) const { return lo <= k && k <= hi; }
};

/// If every op of `seq` permutes basis states (shifts, and Pair blocks that
/// are the identity or the exchange, entries within 1e-12 of {0,1}), returns
/// the induced index map on the window. Otherwise nullopt (not a permutation).
std::optional<std::map<Index, Index>> as_permutation(const ControlSequence& seq,
                                                     const IndexWindow& window);

/// Reversed sequence with each op inverted; appending it undoes `seq`.
ControlSequence invert_sequence(const ControlSequence& seq);

/// Euler angles of the Z-Y-Z factorization V = e^{i delta} Rz(alpha)
/// Ry(theta) Rz(beta), theta in [0, pi], the others in (-pi, pi].
struct EulerAngles {
    double delta = 0.0;
    double alpha = 0.0;
    double theta = 0.0;
    double beta = 0.0;
};

/// Throws NotUnitaryError for non-unitary input. At theta in {0, pi} the
/// gauge freedom is fixed by beta = 0. Reconstruction via zyz_matrix matches
/// the input entrywise within 1e-12.
EulerAngles zyz_decompose(const PairUnitary& v);

/// e^{i delta} Rz(alpha) Ry(theta) Rz(beta).
PairUnitary zyz_matrix(const EulerAngles& a);

} // namespace ladder

#endif
