// Copyright 2026 The qfid Authors
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

// Single-qubit channels in operator-sum (Kraus) form and affine Bloch-ball
// form, plus the Choi matrix as a validation view.

#ifndef QFID_CHANNELS_H
#define QFID_CHANNELS_H

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qfid/qmath.h"
#include "qfid/random.h"
#include "qfid/states.h"

namespace qfid {

inline constexpr double kUnitaryTolerance = 1e-10;
inline constexpr double kTracePreservationTolerance = 1e-10;
inline constexpr double kUnitalTolerance = 1e-10;
/// Channels failing the CPTP thresholds by at most this factor are flagged
/// as borderline rather than plainly non-CPTP.
inline constexpr double kBorderlineFactor = 10;
inline constexpr size_t kMaxKrausOps = 4;
/// Choi eigenvalues kept when extracting Kraus operators.
inline constexpr double kKrausExtractionThreshold = 1e-10;

class UnitaryGate {
   public:
    /// Throws QfidError(not_unitary) unless u^dagger u = I within
    /// kUnitaryTolerance.
    static UnitaryGate make(const ComplexMatrix2 &u);
    static UnitaryGate identity() {
        return UnitaryGate(ComplexMatrix2::identity());
    }

    const ComplexMatrix2 &matrix() const {
        return u_;
    }
    UnitaryGate adjoint() const {
        return UnitaryGate(dagger(u_));
    }

   private:
    explicit UnitaryGate(const ComplexMatrix2 &u) : u_(u) {
    }
    ComplexMatrix2 u_;
};

/// exp(-i angle/2 n.sigma) for the normalized axis n.
UnitaryGate rotation_gate(const BlochVector &axis, double angle);

/// S[rho] = sum_i K_i rho K_i^dagger with 1 to kMaxKrausOps operators.
///
/// Trace preservation is not enforced at construction so that malformed
/// channels can still be diagnosed; see diagnose().
class KrausChannel {
   public:
    /// Throws QfidError(invalid_argument) for an empty list, more than
    /// kMaxKrausOps operators, or non-finite entries.
    static KrausChannel make(std::vector<ComplexMatrix2> ops);

    std::span<const ComplexMatrix2> ops() const {
        return ops_;
    }

   private:
    explicit KrausChannel(std::vector<ComplexMatrix2> ops) : ops_(std::move(ops)) {
    }
    std::vector<ComplexMatrix2> ops_;
};

/// r -> m r + t on Bloch vectors. Every linear trace-preserving qubit map has
/// this form; complete positivity is a separate condition checked via choi().
struct AffineBlochMap {
    RealMatrix3 m = RealMatrix3::identity();
    BlochVector t{};
};

using Channel = std::variant<KrausChannel, AffineBlochMap>;

/// Kraus channel {u}.
KrausChannel conjugation(const UnitaryGate &u);

/// Linear extension of the channel to an arbitrary 2x2 matrix. This is the
/// path the fidelity estimators use; it never validates its output.
ComplexMatrix2 apply_linear(const KrausChannel &s, const ComplexMatrix2 &m);
ComplexMatrix2 apply_linear(const AffineBlochMap &s, const ComplexMatrix2 &m);
ComplexMatrix2 apply_linear(const Channel &s, const ComplexMatrix2 &m);

/// Applies the channel and validates the result as a density matrix
/// (throws the validate_density error if a non-physical map slipped in).
DensityMatrix apply(const Channel &s, const DensityMatrix &rho);
DensityMatrix apply(const UnitaryGate &u, const DensityMatrix &rho);

/// m_jk = Tr(sigma_j S[sigma_k]) / 2, t_j = Tr(sigma_j S[I]) / 2.
AffineBlochMap kraus_to_affine(const KrausChannel &s);
AffineBlochMap to_affine(const Channel &s);

/// Minimal Kraus family from the eigendecomposition of the trace-2 Choi
/// matrix, keeping eigenvalues above kKrausExtractionThreshold. Each operator
/// is rephased so its largest entry is real and positive.
/// Throws QfidError(not_cptp) if the Choi matrix is not PSD.
KrausChannel kraus_from_choi(const ComplexMatrix4 &choi_trace_one);
KrausChannel affine_to_kraus(const AffineBlochMap &s);
KrausChannel to_kraus(const Channel &s);

/// Choi matrix (id (x) S)(|Phi+><Phi+|) normalized to trace 1. Row index is
/// 2 i + k for input basis index i and output index k.
ComplexMatrix4 choi(const Channel &s);

struct ChannelDiagnostics {
    /// ||sum K^dagger K - I||_max; 0 for affine maps.
    double trace_residual = 0;
    double min_choi_eigenvalue = 0;
    /// ||S[I/2] - I/2||_max.
    double unital_residual = 0;
    /// Largest ||m r + t|| over the six axial directions plus a fixed set of
    /// random unit vectors.
    double max_output_radius = 0;
    bool cptp = false;
    bool unital = false;
    /// Not CPTP, but within kBorderlineFactor of every threshold.
    bool borderline = false;
};

ChannelDiagnostics diagnose(const Channel &s);
bool is_cptp(const Channel &s);
bool is_unital(const Channel &s);

/// outer after inner. Kraus pairs give the product family {A_i B_j},
/// re-extracted through the Choi matrix when it exceeds kMaxKrausOps
/// operators; affine pairs give (m_A m_B, m_A t_B + t_A). Mixed pairs
/// convert inner to outer's representation.
Channel compose(const Channel &outer, const Channel &inner);

/// Named channel families:
///   depolarizing      p      in [0, 1]
///   amplitude_damping gamma  in [0, 1]
///   phase_damping     lambda in [0, 1]
///   bit_flip          q      in [0, 1]
///   phase_flip        q      in [0, 1]
///   rotation          nx, ny, nz (non-zero axis), angle (radians)
/// Throws QfidError(unknown_preset) or QfidError(param_out_of_range), the
/// latter also for missing or unrecognized parameter names.
KrausChannel preset(std::string_view name, const std::map<std::string, double> &params);

/// Isometry built from a (2 k) x 2 complex Gaussian matrix with orthonormalized
/// columns, sliced into k stacked 2x2 Kraus operators.
KrausChannel random_cptp(Rng &rng, size_t kraus_count);

/// Haar-random unitary via Gram-Schmidt on a complex Gaussian matrix (the
/// triangular factor's diagonal is real positive).
UnitaryGate random_unitary(Rng &rng);

}  // namespace qfid

#endif
