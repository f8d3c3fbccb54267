#include "causalgen/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "causalgen/errors.hpp"
#include "causalgen/rng.hpp"
#include "causalgen/text.hpp"

namespace causalgen {

std::string to_string(VarType t) {
    switch (t) {
        case VarType::target: return "target";
        case VarType::feature: return "feature";
        case VarType::latent: return "latent";
        case VarType::noise: return "noise";
    }
    return "";
}

std::optional<VarType> var_type_from_string(std::string_view s) {
    if (s == "target") return VarType::target;
    if (s == "feature") return VarType::feature;
    if (s == "latent") return VarType::latent;
    if (s == "noise") return VarType::noise;
    return std::nullopt;
}

TimeSeriesCausalGraph::TimeSeriesCausalGraph(std::vector<VariableInfo> variables, int max_lag,
                                             std::vector<StructuralEdge> edges)
    : variables_(std::move(variables)), max_lag_(max_lag), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const auto& e : edges_) {
        if (e.parent_var < 0 || e.parent_var >= m_total() || e.child_var < 0 || e.child_var >= m_total())
            throw ConfigError("edge references unknown variable");
        if (e.rel_lag < 0 || e.rel_lag > max_lag_)
            throw ConfigError("edge lag outside [0, max_lag]");
    }
}

std::vector<StructuralEdge> TimeSeriesCausalGraph::parents_of(int child_var) const {
    std::vector<StructuralEdge> out;
    for (const auto& e : edges_)
        if (e.child_var == child_var) out.push_back(e);
    std::sort(out.begin(), out.end(), [](const StructuralEdge& a, const StructuralEdge& b) {
        return std::tie(a.parent_var, a.rel_lag) < std::tie(b.parent_var, b.rel_lag);
    });
    return out;
}

std::vector<Edge> TimeSeriesCausalGraph::full_edges() const {
    std::vector<Edge> out;
    for (const auto& e : edges_) {
        for (int k = 0; e.rel_lag + k <= max_lag_; ++k)
            out.push_back({e.parent_var, e.rel_lag + k, e.child_var, k});
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool TimeSeriesCausalGraph::has_structural(int parent_var, int rel_lag, int child_var) const {
    return std::binary_search(edges_.begin(), edges_.end(),
                              StructuralEdge{parent_var, rel_lag, child_var});
}

long long node_count(const CausalGraphConfig& c) {
    const long long vars = c.num_targets + c.num_features + c.num_latent;
    return (1LL + (c.include_noise ? 1 : 0)) * vars * (1LL + c.max_lag);
}

std::vector<VariableInfo> make_variables(const CausalGraphConfig& c) {
    std::vector<VariableInfo> vars;
    for (int i = 0; i < c.num_targets; ++i)
        vars.push_back({"Y" + format_int(i + 1), VarType::target, true});
    for (int i = 0; i < c.num_features; ++i)
        vars.push_back({"X" + format_int(i + 1), VarType::feature, true});
    for (int i = 0; i < c.num_latent; ++i)
        vars.push_back({"U" + format_int(i + 1), VarType::latent, false});
    if (c.include_noise) {
        const std::size_t base = vars.size();
        for (std::size_t i = 0; i < base; ++i)
            vars.push_back({"N_" + vars[i].name, VarType::noise, false});
    }
    return vars;
}

namespace {

struct GenState {
    std::vector<VariableInfo> vars;
    int max_lag = 0;
    std::set<StructuralEdge> edges;

    // Variable-level reachability in the instantaneous (rel_lag == 0)
    // subgraph, for keeping lag-0 candidate selection acyclic.
    bool reachable_lag0(int from, int to) const {
        if (from == to) return true;
        std::vector<int> stack{from};
        std::set<int> seen{from};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (const auto& e : edges) {
                if (e.rel_lag != 0 || e.parent_var != v) continue;
                if (e.child_var == to) return true;
                if (seen.insert(e.child_var).second) stack.push_back(e.child_var);
            }
        }
        return false;
    }

    // Children of node (var, lag) in the lag-replicated graph, excluding
    // edges internal to the noise chain (those never count toward caps).
    int children_of_node(int var, int lag) const {
        int n = 0;
        for (const auto& e : edges) {
            if (e.parent_var != var || e.rel_lag > lag) continue;
            if (vars[static_cast<std::size_t>(var)].type == VarType::noise) continue;
            ++n;
        }
        return n;
    }
};

int max_parents_cap(const CausalGraphConfig& c, VarType t) {
    switch (t) {
        case VarType::target: return c.max_target_parents;
        case VarType::feature: return c.max_feature_parents;
        case VarType::latent: return c.max_latent_parents;
        case VarType::noise: return 0;
    }
    return 0;
}

int max_children_cap(const CausalGraphConfig& c, VarType t) {
    switch (t) {
        case VarType::target: return c.max_target_children;
        case VarType::feature: return c.max_feature_children;
        case VarType::latent: return c.max_latent_children;
        case VarType::noise: return 0;
    }
    return 0;
}

double autoregressive_prob(const CausalGraphConfig& c, VarType t) {
    switch (t) {
        case VarType::target: return c.prob_target_autoregressive;
        case VarType::feature: return c.prob_feature_autoregressive;
        case VarType::latent: return c.prob_latent_autoregressive;
        case VarType::noise: return c.prob_noise_autoregressive;
    }
    return 0.0;
}

double parent_prob(const CausalGraphConfig& c, VarType parent_type) {
    switch (parent_type) {
        case VarType::target: return c.prob_target_parent.value_or(c.prob_edge);
        case VarType::feature: return c.prob_feature_parent.value_or(c.prob_edge);
        case VarType::latent: return c.prob_latent_parent.value_or(c.prob_edge);
        case VarType::noise: return 0.0;
    }
    return 0.0;
}

}  // namespace

TimeSeriesCausalGraph generate_graph(const CausalGraphConfig& config, std::uint64_t seed) {
    if (config.min_lag > config.max_lag || config.num_targets + config.num_features < 1)
        throw ConfigError("generate_graph: invalid graph configuration");

    Rng rng(seed);
    GenState st;
    st.vars = make_variables(config);
    st.max_lag = config.max_lag;
    const int n_signal = config.num_targets + config.num_features + config.num_latent;
    const int m_total = static_cast<int>(st.vars.size());

    // Noise wiring: each noise variable feeds exactly its own variable.
    if (config.include_noise) {
        for (int v = 0; v < n_signal; ++v) st.edges.insert({n_signal + v, 0, v});
    }

    // Autoregressive self-edges; one Bernoulli draw per variable whether
    // or not it can succeed, so streams stay comparable across configs.
    if (config.max_lag > 0) {
        for (int v = 0; v < m_total; ++v) {
            const double p = autoregressive_prob(config, st.vars[static_cast<std::size_t>(v)].type);
            if (rng.bernoulli(p)) st.edges.insert({v, 1, v});
        }
    }

    // Sampled parents for each non-noise variable at the present time.
    for (int child = 0; child < n_signal; ++child) {
        const VarType child_type = st.vars[static_cast<std::size_t>(child)].type;

        std::vector<std::pair<int, int>> candidates;  // (parent_var, rel_lag), sorted
        for (int j = 0; j < n_signal; ++j) {
            if (j == child) continue;  // self-edges only via the autoregressive step
            const VarType jt = st.vars[static_cast<std::size_t>(j)].type;
            if (child_type == VarType::target && jt == VarType::latent &&
                !config.allow_latent_direct_target_cause)
                continue;
            if (child_type == VarType::target && jt == VarType::target &&
                !config.allow_target_direct_target_cause)
                continue;
            for (int s = config.min_lag; s <= config.max_lag; ++s) {
                if (s == 0 && st.reachable_lag0(child, j)) continue;
                candidates.emplace_back(j, s);
            }
        }
        rng.shuffle(candidates);

        // Parent accounting excludes noise edges; a present autoregressive
        // self-edge counts as one parent of the child node.
        int parents = st.edges.count({child, 1, child}) ? 1 : 0;
        std::map<int, int> per_variable;
        if (parents) per_variable[child] = 1;
        const int parent_cap = max_parents_cap(config, child_type);

        std::size_t head = 0;
        while (parents < parent_cap && head < candidates.size()) {
            const auto [j, s] = candidates[head++];
            if (per_variable.count(j) && per_variable[j] >= config.max_parents_per_variable) continue;
            const VarType jt = st.vars[static_cast<std::size_t>(j)].type;
            const bool add_edge = rng.bernoulli(parent_prob(config, jt));
            if (!add_edge) continue;
            if (st.children_of_node(j, s) >= max_children_cap(config, jt)) continue;
            st.edges.insert({j, s, child});
            ++parents;
            const int mult = ++per_variable[j];
            if (mult >= config.max_parents_per_variable) {
                // Drop the remaining candidates of this variable.
                std::size_t w = head;
                for (std::size_t r = head; r < candidates.size(); ++r)
                    if (candidates[r].first != j) candidates[w++] = candidates[r];
                candidates.resize(w);
            }
        }
    }

    return TimeSeriesCausalGraph(std::move(st.vars), config.max_lag,
                                 std::vector<StructuralEdge>(st.edges.begin(), st.edges.end()));
}

SummaryGraph summary_graph(const TimeSeriesCausalGraph& fg) {
    SummaryGraph sg;
    sg.num_variables = fg.m_total();
    std::set<std::pair<int, int>> edges;
    for (const auto& e : fg.structural_edges()) edges.emplace(e.parent_var, e.child_var);
    sg.edges.assign(edges.begin(), edges.end());
    return sg;
}

std::vector<NodeId> topological_order(const TimeSeriesCausalGraph& fg) {
    const int m = fg.m_total();
    const int lags = fg.max_lag() + 1;
    const auto index = [m](const NodeId& n) { return n.lag * m + n.variable; };

    std::vector<int> in_degree(static_cast<std::size_t>(m * lags), 0);
    std::vector<std::vector<NodeId>> children(static_cast<std::size_t>(m * lags));
    for (const auto& e : fg.full_edges()) {
        const NodeId parent{e.parent_var, e.parent_lag};
        const NodeId child{e.child_var, e.child_lag};
        ++in_degree[static_cast<std::size_t>(index(child))];
        children[static_cast<std::size_t>(index(parent))].push_back(child);
    }

    // Kahn's algorithm; the ready set is ordered (lag desc, variable asc).
    const auto later = [](const NodeId& a, const NodeId& b) {
        return std::pair(-a.lag, a.variable) < std::pair(-b.lag, b.variable);
    };
    std::set<NodeId, decltype(later)> ready(later);
    for (int lag = 0; lag < lags; ++lag)
        for (int v = 0; v < m; ++v)
            if (in_degree[static_cast<std::size_t>(lag * m + v)] == 0) ready.insert({v, lag});

    std::vector<NodeId> order;
    order.reserve(static_cast<std::size_t>(m * lags));
    while (!ready.empty()) {
        const NodeId n = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(n);
        for (const NodeId& c : children[static_cast<std::size_t>(index(n))])
            if (--in_degree[static_cast<std::size_t>(index(c))] == 0) ready.insert(c);
    }
    if (order.size() != static_cast<std::size_t>(m * lags))
        throw CycleError("full time graph contains a cycle");
    return order;
}

std::vector<int> lag0_variable_order(const TimeSeriesCausalGraph& fg) {
    const int m = fg.m_total();
    std::vector<int> in_degree(static_cast<std::size_t>(m), 0);
    std::vector<std::vector<int>> children(static_cast<std::size_t>(m));
    for (const auto& e : fg.structural_edges()) {
        if (e.rel_lag != 0) continue;
        if (fg.var_type(e.parent_var) == VarType::noise) continue;
        if (fg.var_type(e.child_var) == VarType::noise) continue;
        ++in_degree[static_cast<std::size_t>(e.child_var)];
        children[static_cast<std::size_t>(e.parent_var)].push_back(e.child_var);
    }
    std::set<int> ready;
    for (int v = 0; v < m; ++v)
        if (fg.var_type(v) != VarType::noise && in_degree[static_cast<std::size_t>(v)] == 0)
            ready.insert(v);
    std::vector<int> order;
    while (!ready.empty()) {
        const int v = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(v);
        for (const int c : children[static_cast<std::size_t>(v)])
            if (--in_degree[static_cast<std::size_t>(c)] == 0) ready.insert(c);
    }
    int n_signal = 0;
    for (int v = 0; v < m; ++v)
        if (fg.var_type(v) != VarType::noise) ++n_signal;
    if (order.size() != static_cast<std::size_t>(n_signal))
        throw CycleError("instantaneous subgraph contains a cycle");
    return order;
}

}  // namespace causalgen
