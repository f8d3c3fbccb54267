#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "causalgen/config.hpp"
#include "causalgen/graph.hpp"

namespace causalgen {

enum class MonotonicFamily { tanh, sqrt };

std::string to_string(MonotonicFamily f);
std::optional<MonotonicFamily> monotonic_family_from_string(std::string_view s);

/// One sampled univariate edge function.
///   identity:  f(x) = x                      (noise edges)
///   linear:    f(x) = beta * x
///   monotonic: f(x) = a * tanh(b x)  or  a * sign(x) * sqrt(|x|)
///   periodic:  f(x) = a * sin(b x + c)
struct FunctionSpec {
    FunctionKind kind = FunctionKind::identity;
    MonotonicFamily family = MonotonicFamily::tanh;
    double a = 0.0;  // linear beta lives here as well
    double b = 0.0;
    double c = 0.0;

    static FunctionSpec identity() { return {}; }
    static FunctionSpec linear(double beta) {
        return {FunctionKind::linear, MonotonicFamily::tanh, beta, 0.0, 0.0};
    }

    bool operator==(const FunctionSpec&) const = default;
};

double eval_function(const FunctionSpec& spec, double x);

/// Graph plus one function per anchored edge. Lag-replicated copies of an
/// edge share the same spec (functional dependence is time-invariant).
struct StructuralCausalModel {
    TimeSeriesCausalGraph graph;
    std::map<StructuralEdge, FunctionSpec> functions;  // child is non-noise
    std::map<int, FunctionSpec> noise_ar;              // noise variable -> linear spec

    bool operator==(const StructuralCausalModel&) const = default;
};

/// One function draw: kind per prob_functions, parameters per the
/// documented sampling ranges (linear |beta| in [0.2, 0.8]; monotonic
/// |a| in [0.5, 2], b in [0.5, 2]; periodic a, b in [0.5, 2], c in [0, 2pi)).
FunctionSpec sample_function(const FunctionConfig& config, class Rng& rng);

/// Attach functions to every edge of `graph`. Noise-to-variable edges are
/// identity; noise autoregression is linear with coefficient in [0.2, 0.9].
/// Purely linear draws are rescaled to companion spectral radius < 1.
StructuralCausalModel generate_scm(const FunctionConfig& config, const TimeSeriesCausalGraph& graph,
                                   std::uint64_t seed);

/// Spectral radius of the companion form of the model restricted to its
/// non-noise variables, with instantaneous edges solved out. Only
/// meaningful when every sampled function is linear.
double linear_spectral_radius(const StructuralCausalModel& scm);

/// True when every non-noise edge function is linear.
bool is_purely_linear(const StructuralCausalModel& scm);

}  // namespace causalgen
