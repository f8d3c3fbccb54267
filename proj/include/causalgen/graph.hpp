#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "causalgen/config.hpp"

namespace causalgen {

enum class VarType { target, feature, latent, noise };

std::string to_string(VarType t);
std::optional<VarType> var_type_from_string(std::string_view s);

/// A node of the full time graph: variable index plus lag (0 = present).
struct NodeId {
    int variable = 0;
    int lag = 0;

    auto operator<=>(const NodeId&) const = default;
};

struct VariableInfo {
    std::string name;
    VarType type = VarType::feature;
    bool observed = true;

    bool operator==(const VariableInfo&) const = default;
};

/// Directed edge between full-time-graph nodes. parent_lag >= child_lag
/// always (the future never causes the past).
struct Edge {
    int parent_var = 0;
    int parent_lag = 0;
    int child_var = 0;
    int child_lag = 0;

    auto operator<=>(const Edge&) const = default;
};

/// Lag-0-anchored edge: parent at relative lag `rel_lag` of the child at
/// the present time. The full edge set is its lag replication.
struct StructuralEdge {
    int parent_var = 0;
    int rel_lag = 0;
    int child_var = 0;

    auto operator<=>(const StructuralEdge&) const = default;
};

/// The Full Time Graph. Stored anchored; lag replication (every edge is
/// copied back in time up to max_lag) holds by construction.
class TimeSeriesCausalGraph {
public:
    TimeSeriesCausalGraph() = default;
    TimeSeriesCausalGraph(std::vector<VariableInfo> variables, int max_lag,
                          std::vector<StructuralEdge> edges);

    int m_total() const { return static_cast<int>(variables_.size()); }
    int max_lag() const { return max_lag_; }
    int node_count() const { return m_total() * (max_lag_ + 1); }
    const std::vector<VariableInfo>& variables() const { return variables_; }
    VarType var_type(int variable) const { return variables_[static_cast<std::size_t>(variable)].type; }

    /// Sorted, deduplicated anchored edges.
    const std::vector<StructuralEdge>& structural_edges() const { return edges_; }

    /// Anchored in-edges of `child_var`, sorted by (parent_var, rel_lag).
    std::vector<StructuralEdge> parents_of(int child_var) const;

    /// Full lag-replicated node-level edge set, sorted.
    std::vector<Edge> full_edges() const;

    bool has_structural(int parent_var, int rel_lag, int child_var) const;

    bool operator==(const TimeSeriesCausalGraph&) const = default;

private:
    std::vector<VariableInfo> variables_;
    int max_lag_ = 0;
    std::vector<StructuralEdge> edges_;
};

/// Summary graph: one node per variable, an edge iff any lagged FG edge
/// connects the pair. Self-loops encode autoregression.
struct SummaryGraph {
    int num_variables = 0;
    std::vector<std::pair<int, int>> edges;  // sorted (from, to)

    bool operator==(const SummaryGraph&) const = default;
};

/// Node count of Algorithm-style graph construction:
/// (1 + include_noise) * (targets + features + latent) * (1 + max_lag).
long long node_count(const CausalGraphConfig& config);

/// Variable naming and ordering used by the generator: targets Y1..,
/// features X1.., latents U1.., then one noise variable N_<name> per
/// non-noise variable when include_noise is set.
std::vector<VariableInfo> make_variables(const CausalGraphConfig& config);

/// Random full time graph. Pure function of (config, seed).
TimeSeriesCausalGraph generate_graph(const CausalGraphConfig& config, std::uint64_t seed);

SummaryGraph summary_graph(const TimeSeriesCausalGraph& fg);

/// Deterministic topological order over all (variable, lag) nodes; parents
/// precede children, ties broken by (lag descending, variable ascending).
std::vector<NodeId> topological_order(const TimeSeriesCausalGraph& fg);

/// Topological order of the non-noise variables under the lag-0
/// (instantaneous) subgraph; the evaluation order of the simulator.
std::vector<int> lag0_variable_order(const TimeSeriesCausalGraph& fg);

}  // namespace causalgen
