#include "fvt/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fvt/errors.hpp"

namespace fvt {

namespace {

constexpr int kMaxQubits = 12;

void check_qubit(const StateVector& state, int qubit, const char* role) {
    if (qubit < 0 || qubit >= state.n_qubits) {
        throw IndexError(std::string(role) + " qubit " + std::to_string(qubit) +
                         " out of range for " + std::to_string(state.n_qubits) + " qubits");
    }
}

// One 2x2 unitary on `target`, pair-indexed as in the usual mask walk.
void apply_1q(StateVector& s, int target, cdouble m00, cdouble m01, cdouble m10, cdouble m11) {
    const std::size_t mask = std::size_t{1} << target;
    const std::size_t lo_mask = mask - 1;
    const std::size_t hi_mask = ~lo_mask;
    const std::size_t half = s.dim() >> 1;
    cdouble* amps = s.amps.data();
    for (std::size_t i = 0; i < half; ++i) {
        const std::size_t i0 = ((i & hi_mask) << 1) | (i & lo_mask);
        const std::size_t i1 = i0 | mask;
        const cdouble a0 = amps[i0];
        const cdouble a1 = amps[i1];
        amps[i0] = m00 * a0 + m01 * a1;
        amps[i1] = m10 * a0 + m11 * a1;
    }
}

}  // namespace

StateVector zero_state(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw ConfigError("n_qubits must be in [1, " + std::to_string(kMaxQubits) + "], got " +
                          std::to_string(n_qubits));
    }
    StateVector s;
    s.n_qubits = n_qubits;
    s.amps.assign(std::size_t{1} << n_qubits, cdouble{0.0, 0.0});
    s.amps[0] = cdouble{1.0, 0.0};
    return s;
}

void apply_gate_in_place(StateVector& state, const Gate& gate) {
    check_qubit(state, gate.target, "target");
    if (gate.kind == GateKind::Cnot) {
        check_qubit(state, gate.control, "control");
        if (gate.control == gate.target) {
            throw IndexError("CNOT control equals target (" + std::to_string(gate.target) + ")");
        }
        const std::size_t cmask = std::size_t{1} << gate.control;
        const std::size_t tmask = std::size_t{1} << gate.target;
        cdouble* amps = state.amps.data();
        const std::size_t dim = state.dim();
        for (std::size_t b = 0; b < dim; ++b) {
            if ((b & cmask) != 0 && (b & tmask) == 0) {
                std::swap(amps[b], amps[b | tmask]);
            }
        }
        return;
    }

    const double c = std::cos(gate.angle / 2.0);
    const double s = std::sin(gate.angle / 2.0);
    switch (gate.kind) {
        case GateKind::Rx:
            apply_1q(state, gate.target, {c, 0}, {0, -s}, {0, -s}, {c, 0});
            break;
        case GateKind::Ry:
            apply_1q(state, gate.target, {c, 0}, {-s, 0}, {s, 0}, {c, 0});
            break;
        case GateKind::Rz:
            apply_1q(state, gate.target, {c, -s}, {0, 0}, {0, 0}, {c, s});
            break;
        case GateKind::Cnot:
            break;  // handled above
    }
}

StateVector apply_gate(StateVector state, const Gate& gate) {
    apply_gate_in_place(state, gate);
    return state;
}

double expectation_z(const StateVector& state, int qubit) {
    check_qubit(state, qubit, "measured");
    const std::size_t mask = std::size_t{1} << qubit;
    double val = 0.0;
    for (std::size_t b = 0; b < state.dim(); ++b) {
        const double p = std::norm(state.amps[b]);
        val += (b & mask) ? -p : p;
    }
    return val;
}

cdouble inner_product(const StateVector& a, const StateVector& b) {
    if (a.n_qubits != b.n_qubits) {
        throw ShapeError("inner_product: " + std::to_string(a.n_qubits) + " vs " +
                         std::to_string(b.n_qubits) + " qubits");
    }
    cdouble acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        acc += std::conj(a.amps[i]) * b.amps[i];
    }
    return acc;
}

double fidelity(const StateVector& a, const StateVector& b) {
    const cdouble ip = inner_product(a, b);
    return std::clamp(std::norm(ip), 0.0, 1.0);
}

double norm_sq(const StateVector& state) {
    double acc = 0.0;
    for (const cdouble& amp : state.amps) {
        acc += std::norm(amp);
    }
    return acc;
}

}  // namespace fvt
