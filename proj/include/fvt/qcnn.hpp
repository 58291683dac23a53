#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fvt/ansatz.hpp"
#include "fvt/image.hpp"
#include "fvt/matrix.hpp"

namespace fvt {

/// Model hyperparameters needed to size a fresh ModelParams.
struct ModelArch {
    int n_filters = 2;
    int n_qubits = 4;  // must be a perfect square; patch side = sqrt(n_qubits)
    int depth = 2;
    int n_classes = 2;
    int image_h = 14;
    int image_w = 14;
};

/// The whole model: L quanvolutional filters plus the FC head. Patch geometry
/// is square patches of side sqrt(n_qubits) with stride equal to the side
/// (2x2 / stride 2 in the default 4-qubit setting).
struct ModelParams {
    int patch_side = 2;
    int stride = 2;
    int n_windows = 0;  // per filter, for the image size the model was built for
    std::vector<CircuitSpec> filter_specs;
    std::vector<FilterParams> filter_params;
    Matrix fc_weights;            // n_classes x feature_dim
    std::vector<double> fc_bias;  // n_classes

    int n_filters() const { return static_cast<int>(filter_specs.size()); }
    int n_qubits() const { return filter_specs.empty() ? 0 : filter_specs[0].n_qubits; }
    int n_classes() const { return static_cast<int>(fc_bias.size()); }
    int feature_dim() const { return n_filters() * n_windows * n_qubits(); }
};

/// Fresh model: filter specs from per-filter derived seeds, angles uniform in
/// [-pi, pi), FC weights uniform in [-0.1, 0.1], bias zero. Deterministic in
/// (seed, arch).
ModelParams init_model(std::uint64_t seed, const ModelArch& arch);

/// Output of the quanvolution layer on one image. Feature layout is
/// filter-major, then window-major (row-major over window positions), then
/// qubit-major: index = (l * n_windows + w) * n_qubits + q. States use the
/// same l * n_windows + w indexing.
struct QuanvOutput {
    int n_filters = 0;
    int n_windows = 0;
    int n_qubits = 0;
    std::vector<StateVector> states;
    std::vector<double> features;

    const StateVector& state(int filter, int window) const {
        return states[static_cast<std::size_t>(filter) * n_windows + window];
    }
};

/// Number of window positions the model's patch/stride produce on an H x W
/// image; throws ShapeError when the geometry does not tile the image.
int window_count(const ModelParams& model, int image_h, int image_w);

/// Flattened (row-major) patch pixels for every window position of an image.
std::vector<std::vector<double>> extract_patches(const ModelParams& model, const Image& image);

/// Sliding-window quanvolution with every filter. OpenMP over
/// (filter, window) pairs; bit-identical to quanv_forward_serial.
QuanvOutput quanv_forward(const ModelParams& model, const Image& image);

/// Plain-loop reference implementation.
QuanvOutput quanv_forward_serial(const ModelParams& model, const Image& image);

struct Prediction {
    std::vector<double> probs;
    std::vector<double> logits;
};

/// Softmax over fc_weights * features + fc_bias.
Prediction predict_from_features(const ModelParams& model, std::span<const double> features);

/// Full forward pass on one image.
Prediction predict(const ModelParams& model, const Image& image);

/// Mean over all unordered filter pairs (l < l') and all window positions of
/// the pairwise state fidelity. Needs at least two filters.
double pairwise_fidelity_mean(const QuanvOutput& output);

/// Numerically stable softmax (max-subtracted).
std::vector<double> softmax(std::span<const double> logits);

}  // namespace fvt
