#pragma once

#include <set>
#include <utility>

#include "causalgen/graph.hpp"

namespace causalgen {

/// Directed lagged link X_src(t - lag) -> X_dst(t).
struct Link {
    int src = 0;
    int dst = 0;
    int lag = 0;

    auto operator<=>(const Link&) const = default;
};

/// A predicted or true set of links over m observed variables evaluated up
/// to lag l_max. Unoriented contemporaneous edges (CPDAG-style output) are
/// kept separately until expanded.
struct LinkSet {
    int m = 0;
    int l_max = 0;
    std::set<Link> links;
    std::set<std::pair<int, int>> undirected_contemporaneous;  // i < j, lag 0

    bool operator==(const LinkSet&) const = default;
};

struct GraphScore {
    long long tp = 0, fp = 0, fn = 0, tn = 0;
    long long universe = 0;
    double f1 = 0.0;
    double shd = 0.0;
    double ntp = 0.0, nfp = 0.0, nfn = 0.0;
    double tpr = 0.0;
    // False when tp = fp = fn = 0, where F1 is reported as 0 by convention.
    bool f1_defined = true;
};

/// |L_t| = (l_max + 1) m^2 - m: every (i, j, s) with s in [0, l_max]
/// except instantaneous self-links.
long long link_universe_size(int m, int l_max);

/// Upper bound on links in a valid DAG: l_max m^2 + m(m-1)/2 (the
/// instantaneous part must stay acyclic).
long long max_dag_links(int m, int l_max);

/// Replace each unoriented contemporaneous pair {i, j} by both directed
/// links; already-present directions are not duplicated.
LinkSet expand_undirected(const LinkSet& set);

/// Confusion counts over the link universe plus the derived normalized
/// metrics. Undirected entries on either side are expanded first.
GraphScore score_graph(const LinkSet& truth, const LinkSet& pred);

/// Ground truth restricted to observed variables: edges touching latent or
/// noise variables are dropped (not transitively closed) and the observed
/// variables are reindexed densely. Lags beyond l_max raise LagOverflow.
LinkSet project_observed(const TimeSeriesCausalGraph& graph, int l_max);

}  // namespace causalgen
