#include "qkm/gates.hpp"

#include <algorithm>
#include <cmath>

namespace qkm {

double Gate2x2::unitarity_defect() const {
    // U† U, entry by entry.
    const Amplitude a = std::conj(u00) * u00 + std::conj(u10) * u10;
    const Amplitude b = std::conj(u00) * u01 + std::conj(u10) * u11;
    const Amplitude c = std::conj(u01) * u00 + std::conj(u11) * u10;
    const Amplitude d = std::conj(u01) * u01 + std::conj(u11) * u11;
    return std::max({std::abs(a - Amplitude{1.0, 0.0}), std::abs(b),
                     std::abs(c), std::abs(d - Amplitude{1.0, 0.0})});
}

namespace gates {

Gate2x2 hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    return {{s, 0.0}, {s, 0.0}, {s, 0.0}, {-s, 0.0}};
}

Gate2x2 pauli_x() {
    return {{0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}};
}

Gate2x2 ry(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return {{c, 0.0}, {-s, 0.0}, {s, 0.0}, {c, 0.0}};
}

Gate2x2 phase(double phi) {
    return {{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, std::polar(1.0, phi)};
}

} // namespace gates

} // namespace qkm
