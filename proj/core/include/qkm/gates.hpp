#pragma once

#include <complex>

namespace qkm {

using Amplitude = std::complex<double>;

/// A single-qubit unitary, row-major: [u00 u01; u10 u11].
struct Gate2x2 {
    Amplitude u00, u01, u10, u11;

    /// Max-norm deviation of (U† U) from the identity.
    double unitarity_defect() const;
};

namespace gates {

Gate2x2 hadamard();
Gate2x2 pauli_x();
/// Rotation around the y axis: Ry(theta)|0> = cos(theta/2)|0> + sin(theta/2)|1>.
Gate2x2 ry(double theta);
/// Phase shift diag(1, e^{i*phi}).
Gate2x2 phase(double phi);

} // namespace gates

} // namespace qkm
