#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "causalgen/config.hpp"
#include "causalgen/scm.hpp"

namespace causalgen {

class Rng;

struct DatasetColumn {
    std::string name;
    VarType type = VarType::feature;
    bool observed = true;

    bool operator==(const DatasetColumn&) const = default;
};

struct Dataset {
    Eigen::MatrixXd values;  // rows = timesteps (warm-up trimmed unless kept)
    std::vector<DatasetColumn> columns;
    std::uint64_t seed = 0;
    int num_samples = 0;  // configured length before trimming

    bool operator==(const Dataset& other) const {
        return seed == other.seed && num_samples == other.num_samples && columns == other.columns &&
               values.rows() == other.values.rows() && values.cols() == other.values.cols() &&
               values == other.values;
    }
};

struct NoiseDraw {
    int variable = 0;
    NoiseKind distribution = NoiseKind::gaussian;
    double variance = 0.0;
};

/// IID noise series of length n: realized variance drawn uniformly from the
/// configured range (or taken as-is when scalar), family drawn from
/// prob_distributions, samples scaled to the realized population variance.
Eigen::VectorXd sample_noise(const NoiseConfig& config, int n, Rng& rng, NoiseDraw& draw);

/// In-place forward recursion N(t) += phi * N(t-1) for every noise
/// variable with an autoregressive edge. Columns follow scm variable order.
void apply_noise_ar(const StructuralCausalModel& scm, Eigen::MatrixXd& noise_columns);

/// Run the simulation for every (num_samples, seed) pair of the runtime
/// configuration. Values beyond 1e9 in magnitude abort with
/// NumericalDivergence.
std::vector<Dataset> generate_dataset(const StructuralCausalModel& scm, const NoiseConfig& noise,
                                      const RuntimeConfig& runtime);

/// Re-simulate the stored SCM with optionally overridden noise and/or
/// runtime settings; with no overrides and the same seeds the output is
/// bit-identical to the original run.
std::vector<Dataset> regenerate(const StructuralCausalModel& scm, const NoiseConfig& base_noise,
                                const RuntimeConfig& base_runtime,
                                const std::optional<NoiseConfig>& noise_override,
                                const std::optional<RuntimeConfig>& runtime_override);

/// Matrix restricted to observed columns (targets and features), in
/// column order.
Eigen::MatrixXd observed_values(const Dataset& data);
std::vector<int> observed_column_indices(const std::vector<DatasetColumn>& columns);

}  // namespace causalgen
