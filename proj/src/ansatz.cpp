#include "fvt/ansatz.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "fvt/errors.hpp"
#include "fvt/rng.hpp"

namespace fvt {

CircuitSpec build_random_ansatz(std::uint64_t seed, int n_qubits, int depth) {
    if (n_qubits < 2) {
        throw ConfigError("ansatz needs n_qubits >= 2, got " + std::to_string(n_qubits));
    }
    if (n_qubits > 12) {
        throw ConfigError("ansatz n_qubits capped at 12, got " + std::to_string(n_qubits));
    }
    if (depth < 1) {
        throw ConfigError("ansatz needs depth >= 1, got " + std::to_string(depth));
    }

    CircuitSpec spec;
    spec.n_qubits = n_qubits;
    spec.depth = depth;
    spec.seed = seed;
    spec.n_params = depth * n_qubits;

    std::mt19937_64 gen(seed);
    static constexpr GateKind kAxes[3] = {GateKind::Rx, GateKind::Ry, GateKind::Rz};
    for (int layer = 0; layer < depth; ++layer) {
        for (int q = 0; q < n_qubits; ++q) {
            GateTemplate g;
            g.kind = kAxes[rng::bounded(gen, 3)];
            g.qubit = q;
            g.param_index = layer * n_qubits + q;
            spec.gates.push_back(g);
        }
        for (int q = 0; q < n_qubits; ++q) {
            GateTemplate g;
            g.kind = GateKind::Cnot;
            g.control = q;
            g.qubit = (q + 1) % n_qubits;
            spec.gates.push_back(g);
        }
    }
    return spec;
}

StateVector embed_patch(std::span<const double> patch) {
    StateVector state = zero_state(static_cast<int>(patch.size()));
    for (std::size_t q = 0; q < patch.size(); ++q) {
        apply_gate_in_place(state, Gate::ry(static_cast<int>(q), std::numbers::pi * patch[q]));
    }
    return state;
}

void apply_ansatz_in_place(const CircuitSpec& spec, const FilterParams& params,
                           StateVector& state) {
    if (static_cast<int>(params.angles.size()) != spec.n_params) {
        throw ShapeError("filter params: expected " + std::to_string(spec.n_params) +
                         " angles, got " + std::to_string(params.angles.size()));
    }
    if (state.n_qubits != spec.n_qubits) {
        throw ShapeError("ansatz expects " + std::to_string(spec.n_qubits) + " qubits, state has " +
                         std::to_string(state.n_qubits));
    }
    for (const GateTemplate& g : spec.gates) {
        if (g.kind == GateKind::Cnot) {
            apply_gate_in_place(state, Gate::cnot(g.control, g.qubit));
        } else {
            apply_gate_in_place(state, Gate{g.kind, g.qubit, -1, params.angles[g.param_index]});
        }
    }
}

FilterOutput run_filter(const CircuitSpec& spec, const FilterParams& params,
                        std::span<const double> patch) {
    if (static_cast<int>(patch.size()) != spec.n_qubits) {
        throw ShapeError("patch size " + std::to_string(patch.size()) + " != filter qubits " +
                         std::to_string(spec.n_qubits));
    }
    FilterOutput out;
    out.state = embed_patch(patch);
    apply_ansatz_in_place(spec, params, out.state);
    out.features.resize(spec.n_qubits);
    for (int q = 0; q < spec.n_qubits; ++q) {
        out.features[q] = expectation_z(out.state, q);
    }
    return out;
}

namespace {

const char* kind_name(GateKind k) {
    switch (k) {
        case GateKind::Rx: return "rx";
        case GateKind::Ry: return "ry";
        case GateKind::Rz: return "rz";
        case GateKind::Cnot: return "cnot";
    }
    return "?";
}

}  // namespace

std::string circuit_to_text(const CircuitSpec& spec) {
    std::ostringstream os;
    os << "ansatz v1 n_qubits=" << spec.n_qubits << " depth=" << spec.depth
       << " seed=" << spec.seed << " n_params=" << spec.n_params << "\n";
    for (const GateTemplate& g : spec.gates) {
        if (g.kind == GateKind::Cnot) {
            os << "cnot " << g.control << " " << g.qubit << "\n";
        } else {
            os << kind_name(g.kind) << " " << g.qubit << " p" << g.param_index << "\n";
        }
    }
    return os.str();
}

CircuitSpec circuit_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string header;
    if (!std::getline(is, header)) {
        throw FormatError("circuit text: empty input");
    }
    CircuitSpec spec;
    {
        std::istringstream hs(header);
        std::string tag, version;
        hs >> tag >> version;
        if (tag != "ansatz" || version != "v1") {
            throw FormatError("circuit text: bad header '" + header + "'");
        }
        std::string kv;
        while (hs >> kv) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) {
                throw FormatError("circuit text: bad header field '" + kv + "'");
            }
            const std::string key = kv.substr(0, eq);
            const std::string value = kv.substr(eq + 1);
            if (key == "n_qubits") spec.n_qubits = std::stoi(value);
            else if (key == "depth") spec.depth = std::stoi(value);
            else if (key == "seed") spec.seed = std::stoull(value);
            else if (key == "n_params") spec.n_params = std::stoi(value);
            else throw FormatError("circuit text: unknown header field '" + key + "'");
        }
    }

    std::string line;
    int line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kind;
        ls >> kind;
        GateTemplate g;
        if (kind == "cnot") {
            g.kind = GateKind::Cnot;
            if (!(ls >> g.control >> g.qubit)) {
                throw FormatError("circuit text line " + std::to_string(line_no) + ": bad cnot");
            }
        } else if (kind == "rx" || kind == "ry" || kind == "rz") {
            g.kind = kind == "rx" ? GateKind::Rx : kind == "ry" ? GateKind::Ry : GateKind::Rz;
            std::string ptok;
            if (!(ls >> g.qubit >> ptok) || ptok.size() < 2 || ptok[0] != 'p') {
                throw FormatError("circuit text line " + std::to_string(line_no) +
                                  ": bad rotation");
            }
            g.param_index = std::stoi(ptok.substr(1));
        } else {
            throw FormatError("circuit text line " + std::to_string(line_no) +
                              ": unknown gate '" + kind + "'");
        }
        spec.gates.push_back(g);
    }
    return spec;
}

}  // namespace fvt
