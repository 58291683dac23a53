#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fvt/statevector.hpp"

namespace fvt {

/// One line of a circuit: a parameterized rotation bound to a trainable angle
/// slot, or a fixed CNOT.
struct GateTemplate {
    GateKind kind = GateKind::Rx;
    int qubit = 0;        // target
    int control = -1;     // Cnot only
    int param_index = -1; // rotations only
};

/// A seeded random ansatz. Rebuilding from (seed, n_qubits, depth) is
/// bit-identical; every param_index in [0, n_params) appears exactly once.
struct CircuitSpec {
    int n_qubits = 0;
    int depth = 0;
    std::uint64_t seed = 0;
    int n_params = 0;
    std::vector<GateTemplate> gates;
};

/// Trainable rotation angles of one filter, radians; length == spec.n_params.
struct FilterParams {
    std::vector<double> angles;
};

/// depth layers of one random-axis rotation per qubit (fresh param each)
/// followed by a CNOT ring control i -> target (i+1) mod n. Deterministic in
/// all arguments; n_params = depth * n_qubits.
CircuitSpec build_random_ansatz(std::uint64_t seed, int n_qubits, int depth);

/// Angle encoding: prod_i Ry(pi * patch[i]) |0...0>, one pixel per qubit.
StateVector embed_patch(std::span<const double> patch);

struct FilterOutput {
    StateVector state;             // kept for fidelity between filters
    std::vector<double> features;  // <Z_q> per qubit, each in [-1, 1]
};

/// Embeds the patch, runs the ansatz with the given angles, measures <Z> on
/// every qubit.
FilterOutput run_filter(const CircuitSpec& spec, const FilterParams& params,
                        std::span<const double> patch);

/// Ansatz circuit applied to an already-embedded state.
void apply_ansatz_in_place(const CircuitSpec& spec, const FilterParams& params,
                           StateVector& state);

/// Human-readable serialization, one gate per line; round-trips through
/// circuit_from_text.
std::string circuit_to_text(const CircuitSpec& spec);
CircuitSpec circuit_from_text(const std::string& text);

}  // namespace fvt
