#pragma once

#include <optional>
#include <string>
#include <vector>

namespace causalgen {

enum class Complexity { low, medium, high };

enum class FunctionKind { identity, linear, monotonic, periodic };
enum class NoiseKind { gaussian, laplace, students_t, uniform };

std::string to_string(Complexity c);
std::string to_string(FunctionKind k);
std::string to_string(NoiseKind k);
std::optional<Complexity> complexity_from_string(std::string_view s);
std::optional<FunctionKind> function_kind_from_string(std::string_view s);
std::optional<NoiseKind> noise_kind_from_string(std::string_view s);

/// noise_variance is either a scalar or a [lo, hi] range sampled uniformly
/// per dataset. A scalar serializes back as a scalar.
struct VarianceSpec {
    double lo = 0.0;
    double hi = 0.0;
    bool is_range = false;

    static VarianceSpec scalar(double v) { return {v, v, false}; }
    static VarianceSpec range(double lo, double hi) { return {lo, hi, true}; }
    bool operator==(const VarianceSpec&) const = default;
};

struct CausalGraphConfig {
    int num_targets = 0;
    int num_features = 0;
    int num_latent = 0;
    bool include_noise = true;
    int min_lag = 1;
    int max_lag = 1;
    double prob_edge = 0.0;
    // Unset means "use prob_edge"; keyed by the candidate parent's type.
    std::optional<double> prob_target_parent;
    std::optional<double> prob_feature_parent;
    std::optional<double> prob_latent_parent;
    int max_target_parents = 0;
    int max_feature_parents = 0;
    int max_latent_parents = 0;
    int max_target_children = 0;
    int max_feature_children = 0;
    int max_latent_children = 0;
    int max_parents_per_variable = 0;
    double prob_target_autoregressive = 0.0;
    double prob_feature_autoregressive = 0.0;
    double prob_latent_autoregressive = 0.0;
    double prob_noise_autoregressive = 0.0;
    bool allow_latent_direct_target_cause = true;
    bool allow_target_direct_target_cause = false;

    bool operator==(const CausalGraphConfig&) const = default;
};

struct FunctionConfig {
    std::vector<FunctionKind> functions;
    std::vector<double> prob_functions;

    bool operator==(const FunctionConfig&) const = default;
};

struct NoiseConfig {
    std::vector<NoiseKind> distributions;
    std::vector<double> prob_distributions;
    VarianceSpec noise_variance = VarianceSpec::scalar(0.01);

    bool operator==(const NoiseConfig&) const = default;
};

struct RuntimeConfig {
    std::vector<int> num_samples;
    std::vector<std::uint64_t> data_generating_seeds;
    bool return_observed_data_only = true;
    // Zero-initialized rows t < max_lag are trimmed unless keep_warmup is
    // set; burn_in drops additional leading rows after the warm-up.
    bool keep_warmup = false;
    int burn_in = 0;

    bool operator==(const RuntimeConfig&) const = default;
};

struct DataGenerationConfig {
    Complexity complexity = Complexity::low;
    CausalGraphConfig graph;
    FunctionConfig function;
    NoiseConfig noise;
    RuntimeConfig runtime;

    bool operator==(const DataGenerationConfig&) const = default;
};

// Partially specified configuration: exactly the user-supplied fields are
// set. Unset fields are filled by apply_complexity_defaults.
struct PartialCausalGraphConfig {
    std::optional<int> num_targets, num_features, num_latent;
    std::optional<bool> include_noise;
    std::optional<int> min_lag, max_lag;
    std::optional<double> prob_edge;
    std::optional<double> prob_target_parent, prob_feature_parent, prob_latent_parent;
    std::optional<int> max_target_parents, max_feature_parents, max_latent_parents;
    std::optional<int> max_target_children, max_feature_children, max_latent_children;
    std::optional<int> max_parents_per_variable;
    std::optional<double> prob_target_autoregressive, prob_feature_autoregressive,
        prob_latent_autoregressive, prob_noise_autoregressive;
    std::optional<bool> allow_latent_direct_target_cause, allow_target_direct_target_cause;

    bool operator==(const PartialCausalGraphConfig&) const = default;
};

struct PartialFunctionConfig {
    std::optional<std::vector<FunctionKind>> functions;
    std::optional<std::vector<double>> prob_functions;

    bool operator==(const PartialFunctionConfig&) const = default;
};

struct PartialNoiseConfig {
    std::optional<std::vector<NoiseKind>> distributions;
    std::optional<std::vector<double>> prob_distributions;
    std::optional<VarianceSpec> noise_variance;

    bool operator==(const PartialNoiseConfig&) const = default;
};

struct PartialRuntimeConfig {
    std::optional<std::vector<int>> num_samples;
    std::optional<std::vector<std::uint64_t>> data_generating_seeds;
    std::optional<bool> return_observed_data_only;
    std::optional<bool> keep_warmup;
    std::optional<int> burn_in;

    bool operator==(const PartialRuntimeConfig&) const = default;
};

struct PartialDataGenerationConfig {
    std::optional<Complexity> complexity;
    PartialCausalGraphConfig graph;
    PartialFunctionConfig function;
    PartialNoiseConfig noise;
    PartialRuntimeConfig runtime;

    bool operator==(const PartialDataGenerationConfig&) const = default;
};

struct ValidationFinding {
    std::string field;
    std::string message;

    bool operator==(const ValidationFinding&) const = default;
};

struct ValidationReport {
    std::vector<ValidationFinding> findings;

    bool ok() const { return findings.empty(); }
};

/// Parse the key/value config document. Unknown keys, type mismatches and
/// out-of-range probabilities are rejected (SyntaxError, UnknownKeyError,
/// TypeMismatchError).
PartialDataGenerationConfig parse_config(const std::string& document);

/// Assign `value` (document syntax) to the dotted `key`. Shared by the
/// document parser and the experiment-spec override maps.
void set_config_key(PartialDataGenerationConfig& partial, const std::string& key,
                    const std::string& value);

std::string serialize_config(const PartialDataGenerationConfig& partial);
std::string serialize_config(const DataGenerationConfig& config);

/// Merge: fields set in `over` win over `base`.
PartialDataGenerationConfig merge_config(const PartialDataGenerationConfig& base,
                                         const PartialDataGenerationConfig& over);

/// Fill every unset field from the complexity preset. User-set fields are
/// never overwritten; the result always passes validate. Idempotent.
DataGenerationConfig apply_complexity_defaults(const PartialDataGenerationConfig& partial,
                                               Complexity complexity);

/// The documented preset table, i.e. apply_complexity_defaults({}, c).
DataGenerationConfig complexity_preset(Complexity c);

ValidationReport validate(const DataGenerationConfig& config);

PartialDataGenerationConfig to_partial(const DataGenerationConfig& config);

}  // namespace causalgen
