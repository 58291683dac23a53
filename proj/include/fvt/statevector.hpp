#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace fvt {

using cdouble = std::complex<double>;

/// Dense statevector of an n-qubit register, little-endian: bit q of an
/// amplitude index holds qubit q, so |q0 q1 ... q_{n-1}> with q0 = 1 and the
/// rest 0 is amplitude index 1. Unit norm is an invariant of every operation
/// that produces one.
struct StateVector {
    int n_qubits = 0;
    std::vector<cdouble> amps;

    std::size_t dim() const { return amps.size(); }
};

enum class GateKind { Rx, Ry, Rz, Cnot };

/// One gate instance. Rotations use the half-angle convention
/// Rk(d) = exp(-i d K / 2) for K in {X, Y, Z}; CNOT flips `target` iff
/// `control` is 1.
struct Gate {
    GateKind kind = GateKind::Rx;
    int target = 0;
    int control = -1;    // set for Cnot only
    double angle = 0.0;  // set for rotations only

    static Gate rx(int target, double angle) { return {GateKind::Rx, target, -1, angle}; }
    static Gate ry(int target, double angle) { return {GateKind::Ry, target, -1, angle}; }
    static Gate rz(int target, double angle) { return {GateKind::Rz, target, -1, angle}; }
    static Gate cnot(int control, int target) { return {GateKind::Cnot, target, control, 0.0}; }
};

/// |0...0> on n_qubits qubits. n_qubits must lie in [1, 12].
StateVector zero_state(int n_qubits);

/// Applies `gate` to `state` in place.
void apply_gate_in_place(StateVector& state, const Gate& gate);

/// Value-semantics wrapper: returns U|state>.
StateVector apply_gate(StateVector state, const Gate& gate);

/// <Z_qubit> = sum over basis states of +|amp|^2 (qubit bit 0) or -|amp|^2
/// (qubit bit 1). Exact expectation, no sampling.
double expectation_z(const StateVector& state, int qubit);

/// <a|b>.
cdouble inner_product(const StateVector& a, const StateVector& b);

/// |<a|b>|^2, clamped to [0, 1]. Symmetric in its arguments bit-for-bit.
double fidelity(const StateVector& a, const StateVector& b);

/// Sum of |amp|^2.
double norm_sq(const StateVector& state);

}  // namespace fvt
