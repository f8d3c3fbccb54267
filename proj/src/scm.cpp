#include "causalgen/scm.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "causalgen/errors.hpp"
#include "causalgen/rng.hpp"

namespace causalgen {

std::string to_string(MonotonicFamily f) {
    return f == MonotonicFamily::tanh ? "tanh" : "sqrt";
}

std::optional<MonotonicFamily> monotonic_family_from_string(std::string_view s) {
    if (s == "tanh") return MonotonicFamily::tanh;
    if (s == "sqrt") return MonotonicFamily::sqrt;
    return std::nullopt;
}

double eval_function(const FunctionSpec& spec, double x) {
    if (!std::isfinite(x)) throw NumericalDivergence("eval_function: non-finite input");
    switch (spec.kind) {
        case FunctionKind::identity: return x;
        case FunctionKind::linear: return spec.a * x;
        case FunctionKind::monotonic:
            if (spec.family == MonotonicFamily::tanh) return spec.a * std::tanh(spec.b * x);
            return spec.a * (x >= 0.0 ? 1.0 : -1.0) * std::sqrt(std::abs(x));
        case FunctionKind::periodic: return spec.a * std::sin(spec.b * x + spec.c);
    }
    return x;
}

namespace {

double signed_uniform(Rng& rng, double lo, double hi) {
    const double mag = rng.uniform(lo, hi);
    return rng.bernoulli(0.5) ? -mag : mag;
}

}  // namespace

FunctionSpec sample_function(const FunctionConfig& config, Rng& rng) {
    const int k = rng.categorical(config.prob_functions);
    const FunctionKind kind = config.functions[static_cast<std::size_t>(k)];
    FunctionSpec spec;
    spec.kind = kind;
    switch (kind) {
        case FunctionKind::linear:
            spec.a = signed_uniform(rng, 0.2, 0.8);
            break;
        case FunctionKind::monotonic:
            spec.family = rng.bernoulli(0.5) ? MonotonicFamily::tanh : MonotonicFamily::sqrt;
            spec.a = signed_uniform(rng, 0.5, 2.0);
            spec.b = rng.uniform(0.5, 2.0);
            break;
        case FunctionKind::periodic:
            spec.a = rng.uniform(0.5, 2.0);
            spec.b = rng.uniform(0.5, 2.0);
            spec.c = rng.uniform(0.0, 2.0 * std::numbers::pi);
            break;
        case FunctionKind::identity:
            break;
    }
    return spec;
}

bool is_purely_linear(const StructuralCausalModel& scm) {
    for (const auto& [edge, spec] : scm.functions) {
        if (scm.graph.var_type(edge.parent_var) == VarType::noise) continue;
        if (spec.kind != FunctionKind::linear) return false;
    }
    return true;
}

double linear_spectral_radius(const StructuralCausalModel& scm) {
    const auto& g = scm.graph;
    std::vector<int> signal_vars;
    std::vector<int> signal_index(static_cast<std::size_t>(g.m_total()), -1);
    for (int v = 0; v < g.m_total(); ++v) {
        if (g.var_type(v) == VarType::noise) continue;
        signal_index[static_cast<std::size_t>(v)] = static_cast<int>(signal_vars.size());
        signal_vars.push_back(v);
    }
    const int m = static_cast<int>(signal_vars.size());
    const int L = g.max_lag();
    if (m == 0 || L == 0) return 0.0;

    // X(t) = B0 X(t) + sum_s A_s X(t-s) + noise; solve out B0 (strictly
    // triangular under a topological order, so I - B0 is invertible).
    Eigen::MatrixXd b0 = Eigen::MatrixXd::Zero(m, m);
    std::vector<Eigen::MatrixXd> lagged(static_cast<std::size_t>(L), Eigen::MatrixXd::Zero(m, m));
    for (const auto& [edge, spec] : scm.functions) {
        if (g.var_type(edge.parent_var) == VarType::noise) continue;
        const int pi = signal_index[static_cast<std::size_t>(edge.parent_var)];
        const int ci = signal_index[static_cast<std::size_t>(edge.child_var)];
        const double beta = spec.kind == FunctionKind::linear ? spec.a : 0.0;
        if (edge.rel_lag == 0)
            b0(ci, pi) += beta;
        else
            lagged[static_cast<std::size_t>(edge.rel_lag - 1)](ci, pi) += beta;
    }

    const Eigen::MatrixXd solver =
        (Eigen::MatrixXd::Identity(m, m) - b0).partialPivLu().inverse();
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(m * L, m * L);
    for (int s = 0; s < L; ++s)
        companion.block(0, s * m, m, m) = solver * lagged[static_cast<std::size_t>(s)];
    if (L > 1)
        companion.block(m, 0, m * (L - 1), m * (L - 1))
            .setIdentity();
    return companion.eigenvalues().cwiseAbs().maxCoeff();
}

StructuralCausalModel generate_scm(const FunctionConfig& config, const TimeSeriesCausalGraph& graph,
                                   std::uint64_t seed) {
    if (config.functions.empty() || config.functions.size() != config.prob_functions.size())
        throw ConfigError("generate_scm: invalid function configuration");

    Rng rng(seed);
    StructuralCausalModel scm;
    scm.graph = graph;

    // Present-time nodes in variable order, matching the graph generator.
    for (int v = 0; v < graph.m_total(); ++v) {
        const bool is_noise = graph.var_type(v) == VarType::noise;
        if (is_noise) {
            // A noise node's only possible parent is its own lagged copy;
            // that relationship is limited to linear.
            if (graph.has_structural(v, 1, v))
                scm.noise_ar[v] = FunctionSpec::linear(rng.uniform(0.2, 0.9));
            continue;
        }
        for (const auto& edge : graph.parents_of(v)) {
            if (graph.var_type(edge.parent_var) == VarType::noise) {
                scm.functions[edge] = FunctionSpec::identity();
            } else {
                scm.functions[edge] = sample_function(config, rng);
            }
        }
    }

    // Stability guard: purely linear systems are rescaled toward radius
    // 0.95 until stable. Nonlinear edges are bounded or sub-linear, so
    // only the all-linear case can diverge this way.
    if (is_purely_linear(scm)) {
        for (int guard = 0; guard < 8; ++guard) {
            const double radius = linear_spectral_radius(scm);
            if (radius < 1.0) break;
            const double scale = 0.95 / radius;
            for (auto& [edge, spec] : scm.functions) {
                if (spec.kind == FunctionKind::linear) spec.a *= scale;
            }
        }
    }
    return scm;
}

}  // namespace causalgen
