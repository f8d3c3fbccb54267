#include "causalgen/simulate.hpp"

#include <cmath>

#include "causalgen/errors.hpp"
#include "causalgen/rng.hpp"

namespace causalgen {

namespace {

constexpr double kDivergenceLimit = 1e9;

double sample_scaled(NoiseKind kind, double variance, Rng& rng) {
    switch (kind) {
        case NoiseKind::gaussian:
            return std::sqrt(variance) * rng.normal();
        case NoiseKind::laplace: {
            // Inverse CDF; variance of Laplace(b) is 2 b^2.
            const double b = std::sqrt(variance / 2.0);
            const double u = rng.uniform01() - 0.5;
            const double sign = u >= 0.0 ? 1.0 : -1.0;
            return -b * sign * std::log(1.0 - 2.0 * std::abs(u));
        }
        case NoiseKind::students_t: {
            // t with 5 dof as normal over sqrt(chi^2_5 / 5); Var = 5/3.
            const double z = rng.normal();
            double chi2 = 0.0;
            for (int i = 0; i < 5; ++i) {
                const double w = rng.normal();
                chi2 += w * w;
            }
            const double t = z / std::sqrt(chi2 / 5.0);
            return t * std::sqrt(variance * 3.0 / 5.0);
        }
        case NoiseKind::uniform: {
            const double width = std::sqrt(12.0 * variance);
            return rng.uniform(-width / 2.0, width / 2.0);
        }
    }
    return 0.0;
}

}  // namespace

Eigen::VectorXd sample_noise(const NoiseConfig& config, int n, Rng& rng, NoiseDraw& draw) {
    if (n < 1) throw ConfigError("sample_noise: n must be >= 1");
    draw.variance = config.noise_variance.is_range
                        ? rng.uniform(config.noise_variance.lo, config.noise_variance.hi)
                        : config.noise_variance.lo;
    const int k = rng.categorical(config.prob_distributions);
    draw.distribution = config.distributions[static_cast<std::size_t>(k)];
    Eigen::VectorXd out(n);
    for (int t = 0; t < n; ++t) out(t) = sample_scaled(draw.distribution, draw.variance, rng);
    return out;
}

void apply_noise_ar(const StructuralCausalModel& scm, Eigen::MatrixXd& noise_columns) {
    int col = 0;
    for (int v = 0; v < scm.graph.m_total(); ++v) {
        if (scm.graph.var_type(v) != VarType::noise) continue;
        const auto it = scm.noise_ar.find(v);
        if (it != scm.noise_ar.end()) {
            auto series = noise_columns.col(col);
            for (Eigen::Index t = 1; t < series.size(); ++t)
                series(t) += eval_function(it->second, series(t - 1));
        }
        ++col;
    }
}

namespace {

Dataset simulate_one(const StructuralCausalModel& scm, const NoiseConfig& noise,
                     const RuntimeConfig& runtime, int num_samples, std::uint64_t seed) {
    const auto& g = scm.graph;
    const int m_total = g.m_total();
    const int max_lag = g.max_lag();
    if (num_samples <= max_lag + runtime.burn_in)
        throw ConfigError("num_samples must exceed max_lag + burn_in");

    Rng rng(seed);
    Eigen::MatrixXd values = Eigen::MatrixXd::Zero(num_samples, m_total);

    // Noise pass: one (variance, family, series) draw per noise variable,
    // then the autoregressive recursion over those with an AR edge.
    std::vector<int> noise_vars;
    for (int v = 0; v < m_total; ++v)
        if (g.var_type(v) == VarType::noise) noise_vars.push_back(v);
    if (!noise_vars.empty()) {
        Eigen::MatrixXd noise_cols(num_samples, static_cast<Eigen::Index>(noise_vars.size()));
        for (std::size_t i = 0; i < noise_vars.size(); ++i) {
            NoiseDraw draw;
            draw.variable = noise_vars[i];
            noise_cols.col(static_cast<Eigen::Index>(i)) = sample_noise(noise, num_samples, rng, draw);
        }
        apply_noise_ar(scm, noise_cols);
        for (std::size_t i = 0; i < noise_vars.size(); ++i)
            values.col(noise_vars[i]) = noise_cols.col(static_cast<Eigen::Index>(i));
    }

    // Main recursion: non-noise variables in instantaneous topological
    // order; additive noise enters through its identity edge.
    const std::vector<int> order = lag0_variable_order(g);
    std::vector<std::vector<std::pair<StructuralEdge, FunctionSpec>>> in_edges(
        static_cast<std::size_t>(m_total));
    for (const auto& [edge, spec] : scm.functions)
        in_edges[static_cast<std::size_t>(edge.child_var)].emplace_back(edge, spec);

    for (int t = max_lag; t < num_samples; ++t) {
        for (const int v : order) {
            double acc = 0.0;
            for (const auto& [edge, spec] : in_edges[static_cast<std::size_t>(v)])
                acc += eval_function(spec, values(t - edge.rel_lag, edge.parent_var));
            if (std::abs(acc) > kDivergenceLimit)
                throw NumericalDivergence("simulation diverged at t=" + std::to_string(t));
            values(t, v) = acc;
        }
    }

    const int start = (runtime.keep_warmup ? 0 : max_lag) + runtime.burn_in;
    Dataset out;
    out.seed = seed;
    out.num_samples = num_samples;

    std::vector<int> keep_cols;
    for (int v = 0; v < m_total; ++v) {
        const auto& info = g.variables()[static_cast<std::size_t>(v)];
        if (runtime.return_observed_data_only && !info.observed) continue;
        keep_cols.push_back(v);
        out.columns.push_back({info.name, info.type, info.observed});
    }
    out.values.resize(num_samples - start, static_cast<Eigen::Index>(keep_cols.size()));
    for (std::size_t i = 0; i < keep_cols.size(); ++i)
        out.values.col(static_cast<Eigen::Index>(i)) =
            values.col(keep_cols[i]).segment(start, num_samples - start);
    return out;
}

}  // namespace

std::vector<Dataset> generate_dataset(const StructuralCausalModel& scm, const NoiseConfig& noise,
                                      const RuntimeConfig& runtime) {
    if (runtime.num_samples.size() != runtime.data_generating_seeds.size())
        throw ConfigError("runtime num_samples and data_generating_seeds lengths differ");
    std::vector<Dataset> out;
    out.reserve(runtime.num_samples.size());
    for (std::size_t i = 0; i < runtime.num_samples.size(); ++i)
        out.push_back(simulate_one(scm, noise, runtime, runtime.num_samples[i],
                                   runtime.data_generating_seeds[i]));
    return out;
}

std::vector<Dataset> regenerate(const StructuralCausalModel& scm, const NoiseConfig& base_noise,
                                const RuntimeConfig& base_runtime,
                                const std::optional<NoiseConfig>& noise_override,
                                const std::optional<RuntimeConfig>& runtime_override) {
    return generate_dataset(scm, noise_override.value_or(base_noise),
                            runtime_override.value_or(base_runtime));
}

std::vector<int> observed_column_indices(const std::vector<DatasetColumn>& columns) {
    std::vector<int> idx;
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i].observed) idx.push_back(static_cast<int>(i));
    return idx;
}

Eigen::MatrixXd observed_values(const Dataset& data) {
    const auto idx = observed_column_indices(data.columns);
    Eigen::MatrixXd out(data.values.rows(), static_cast<Eigen::Index>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
        out.col(static_cast<Eigen::Index>(i)) = data.values.col(idx[i]);
    return out;
}

}  // namespace causalgen
