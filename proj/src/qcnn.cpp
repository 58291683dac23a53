#include "fvt/qcnn.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fvt/errors.hpp"
#include "fvt/rng.hpp"

namespace fvt {

namespace {

// Substream tags for init_model; fixed so that runs are reproducible from the
// base seed alone.
constexpr std::uint64_t kSpecStream = 100;  // +filter index
constexpr std::uint64_t kAngleStream = 1;
constexpr std::uint64_t kFcStream = 2;

int isqrt_exact(int n) {
    const int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    return r * r == n ? r : -1;
}

}  // namespace

int window_count(const ModelParams& model, int image_h, int image_w) {
    const int p = model.patch_side;
    const int s = model.stride;
    if (image_h < p || image_w < p || (image_h - p) % s != 0 || (image_w - p) % s != 0) {
        throw ShapeError("image " + std::to_string(image_h) + "x" + std::to_string(image_w) +
                         " incompatible with patch " + std::to_string(p) + " stride " +
                         std::to_string(s));
    }
    return ((image_h - p) / s + 1) * ((image_w - p) / s + 1);
}

ModelParams init_model(std::uint64_t seed, const ModelArch& arch) {
    if (arch.n_filters < 2) {
        throw ConfigError("need at least 2 filters, got " + std::to_string(arch.n_filters));
    }
    if (arch.n_classes < 2) {
        throw ConfigError("need at least 2 classes, got " + std::to_string(arch.n_classes));
    }
    const int side = isqrt_exact(arch.n_qubits);
    if (side < 1) {
        throw ConfigError("n_qubits must be a perfect square (patch side^2), got " +
                          std::to_string(arch.n_qubits));
    }

    ModelParams model;
    model.patch_side = side;
    model.stride = side;
    model.n_windows = window_count(model, arch.image_h, arch.image_w);

    for (int l = 0; l < arch.n_filters; ++l) {
        model.filter_specs.push_back(
            build_random_ansatz(rng::derive_seed(seed, kSpecStream + l), arch.n_qubits,
                                arch.depth));
    }

    std::mt19937_64 angle_gen(rng::derive_seed(seed, kAngleStream));
    for (int l = 0; l < arch.n_filters; ++l) {
        FilterParams params;
        params.angles.resize(model.filter_specs[l].n_params);
        for (double& a : params.angles) {
            a = rng::uniform(angle_gen, -std::numbers::pi, std::numbers::pi);
        }
        model.filter_params.push_back(std::move(params));
    }

    const int feat = arch.n_filters * model.n_windows * arch.n_qubits;
    model.fc_weights = Matrix(arch.n_classes, feat);
    std::mt19937_64 fc_gen(rng::derive_seed(seed, kFcStream));
    for (double& w : model.fc_weights.data) {
        w = rng::uniform(fc_gen, -0.1, 0.1);
    }
    model.fc_bias.assign(arch.n_classes, 0.0);
    return model;
}

std::vector<std::vector<double>> extract_patches(const ModelParams& model, const Image& image) {
    const int p = model.patch_side;
    const int s = model.stride;
    const int wy = (image.h - p) / s + 1;
    const int wx = (image.w - p) / s + 1;
    std::vector<std::vector<double>> patches;
    patches.reserve(static_cast<std::size_t>(wy) * wx);
    for (int ry = 0; ry < wy; ++ry) {
        for (int rx = 0; rx < wx; ++rx) {
            std::vector<double> patch(static_cast<std::size_t>(p) * p);
            for (int dy = 0; dy < p; ++dy) {
                for (int dx = 0; dx < p; ++dx) {
                    patch[dy * p + dx] = image.at(ry * s + dy, rx * s + dx);
                }
            }
            patches.push_back(std::move(patch));
        }
    }
    return patches;
}

namespace {

QuanvOutput make_output_shell(const ModelParams& model, const Image& image) {
    QuanvOutput out;
    out.n_filters = model.n_filters();
    out.n_windows = window_count(model, image.h, image.w);
    if (out.n_windows != model.n_windows) {
        throw ShapeError("image yields " + std::to_string(out.n_windows) +
                         " windows but the model was built for " +
                         std::to_string(model.n_windows));
    }
    out.n_qubits = model.n_qubits();
    out.states.resize(static_cast<std::size_t>(out.n_filters) * out.n_windows);
    out.features.resize(static_cast<std::size_t>(out.n_filters) * out.n_windows * out.n_qubits);
    return out;
}

inline void fill_slot(const ModelParams& model, const std::vector<std::vector<double>>& patches,
                      QuanvOutput& out, int l, int w) {
    FilterOutput fo = run_filter(model.filter_specs[l], model.filter_params[l], patches[w]);
    const std::size_t slot = static_cast<std::size_t>(l) * out.n_windows + w;
    out.states[slot] = std::move(fo.state);
    for (int q = 0; q < out.n_qubits; ++q) {
        out.features[slot * out.n_qubits + q] = fo.features[q];
    }
}

}  // namespace

QuanvOutput quanv_forward(const ModelParams& model, const Image& image) {
    QuanvOutput out = make_output_shell(model, image);
    const auto patches = extract_patches(model, image);
    const int total = out.n_filters * out.n_windows;
    // Disjoint output slots per (filter, window): any schedule gives the same
    // bits as the serial loop.
#pragma omp parallel for schedule(static)
    for (int i = 0; i < total; ++i) {
        fill_slot(model, patches, out, i / out.n_windows, i % out.n_windows);
    }
    return out;
}

QuanvOutput quanv_forward_serial(const ModelParams& model, const Image& image) {
    QuanvOutput out = make_output_shell(model, image);
    const auto patches = extract_patches(model, image);
    for (int l = 0; l < out.n_filters; ++l) {
        for (int w = 0; w < out.n_windows; ++w) {
            fill_slot(model, patches, out, l, w);
        }
    }
    return out;
}

std::vector<double> softmax(std::span<const double> logits) {
    double max_logit = logits[0];
    for (double v : logits) max_logit = std::max(max_logit, v);
    std::vector<double> probs(logits.size());
    double z = 0.0;
    for (std::size_t i = 0; i < logits.size(); ++i) {
        probs[i] = std::exp(logits[i] - max_logit);
        z += probs[i];
    }
    for (double& p : probs) p /= z;
    return probs;
}

Prediction predict_from_features(const ModelParams& model, std::span<const double> features) {
    if (static_cast<int>(features.size()) != model.fc_weights.cols) {
        throw ShapeError("feature vector length " + std::to_string(features.size()) +
                         " != fc input " + std::to_string(model.fc_weights.cols));
    }
    Prediction pred;
    pred.logits.resize(model.n_classes());
    for (int c = 0; c < model.n_classes(); ++c) {
        double acc = model.fc_bias[c];
        const double* row = model.fc_weights.data.data() +
                            static_cast<std::size_t>(c) * model.fc_weights.cols;
        for (std::size_t f = 0; f < features.size(); ++f) {
            acc += row[f] * features[f];
        }
        pred.logits[c] = acc;
    }
    pred.probs = softmax(pred.logits);
    return pred;
}

Prediction predict(const ModelParams& model, const Image& image) {
    const QuanvOutput out = quanv_forward(model, image);
    return predict_from_features(model, out.features);
}

double pairwise_fidelity_mean(const QuanvOutput& output) {
    if (output.n_filters < 2) {
        throw ConfigError("pairwise fidelity needs at least 2 filters, got " +
                          std::to_string(output.n_filters));
    }
    double acc = 0.0;
    int n_pairs = 0;
    for (int l = 0; l < output.n_filters; ++l) {
        for (int lp = l + 1; lp < output.n_filters; ++lp) {
            ++n_pairs;
            for (int w = 0; w < output.n_windows; ++w) {
                acc += fidelity(output.state(l, w), output.state(lp, w));
            }
        }
    }
    return acc / (static_cast<double>(n_pairs) * output.n_windows);
}

}  // namespace fvt
