#include "causalgen/metrics.hpp"

#include <algorithm>

#include "causalgen/errors.hpp"
#include "causalgen/text.hpp"

namespace causalgen {

long long link_universe_size(int m, int l_max) {
    return (static_cast<long long>(l_max) + 1) * m * m - m;
}

long long max_dag_links(int m, int l_max) {
    return static_cast<long long>(l_max) * m * m + static_cast<long long>(m) * (m - 1) / 2;
}

LinkSet expand_undirected(const LinkSet& set) {
    LinkSet out = set;
    for (const auto& [i, j] : set.undirected_contemporaneous) {
        out.links.insert({i, j, 0});
        out.links.insert({j, i, 0});
    }
    out.undirected_contemporaneous.clear();
    return out;
}

namespace {

void check_links(const LinkSet& set, const char* side) {
    for (const auto& link : set.links) {
        if (link.lag < 0 || link.lag > set.l_max)
            throw LagOverflow(std::string(side) + " link lag " + format_int(link.lag) +
                              " exceeds l_max " + format_int(set.l_max));
        if (link.src < 0 || link.src >= set.m || link.dst < 0 || link.dst >= set.m)
            throw UniverseMismatch(std::string(side) + " link references variable outside [0, m)");
        if (link.lag == 0 && link.src == link.dst)
            throw UniverseMismatch(std::string(side) + " contains an instantaneous self-link");
    }
}

}  // namespace

GraphScore score_graph(const LinkSet& truth_in, const LinkSet& pred_in) {
    if (truth_in.m != pred_in.m || truth_in.l_max != pred_in.l_max)
        throw UniverseMismatch("truth (m=" + format_int(truth_in.m) + ", l_max=" +
                               format_int(truth_in.l_max) + ") and prediction (m=" +
                               format_int(pred_in.m) + ", l_max=" + format_int(pred_in.l_max) +
                               ") describe different universes");
    const LinkSet truth = expand_undirected(truth_in);
    const LinkSet pred = expand_undirected(pred_in);
    check_links(truth, "truth");
    check_links(pred, "prediction");

    GraphScore s;
    s.universe = link_universe_size(truth.m, truth.l_max);
    for (const auto& link : pred.links) {
        if (truth.links.count(link))
            ++s.tp;
        else
            ++s.fp;
    }
    s.fn = static_cast<long long>(truth.links.size()) - s.tp;
    s.tn = s.universe - s.tp - s.fp - s.fn;

    const double u = static_cast<double>(s.universe);
    s.ntp = static_cast<double>(s.tp) / u;
    s.nfp = static_cast<double>(s.fp) / u;
    s.nfn = static_cast<double>(s.fn) / u;
    // SHD is (FP + FN) / |L_t|; computed as NFP + NFN so the identity is
    // exact in floating point as well.
    s.shd = s.nfp + s.nfn;
    if (s.tp + s.fp + s.fn == 0) {
        s.f1 = 0.0;
        s.f1_defined = false;
    } else {
        s.f1 = static_cast<double>(s.tp) /
               (static_cast<double>(s.tp) + (static_cast<double>(s.fp) + static_cast<double>(s.fn)) / 2.0);
    }
    const double tpr_den = s.ntp + s.nfn;
    s.tpr = tpr_den > 0.0 ? s.ntp / tpr_den : 0.0;
    return s;
}

LinkSet project_observed(const TimeSeriesCausalGraph& graph, int l_max) {
    LinkSet out;
    out.l_max = l_max;
    std::vector<int> observed_index(static_cast<std::size_t>(graph.m_total()), -1);
    for (int v = 0; v < graph.m_total(); ++v) {
        const auto t = graph.var_type(v);
        if (t == VarType::target || t == VarType::feature)
            observed_index[static_cast<std::size_t>(v)] = out.m++;
    }
    for (const auto& e : graph.structural_edges()) {
        const int src = observed_index[static_cast<std::size_t>(e.parent_var)];
        const int dst = observed_index[static_cast<std::size_t>(e.child_var)];
        if (src < 0 || dst < 0) continue;  // latent- or noise-adjacent edges are dropped
        if (e.rel_lag > l_max)
            throw LagOverflow("true link at lag " + format_int(e.rel_lag) + " exceeds l_max " +
                              format_int(l_max));
        out.links.insert({src, dst, e.rel_lag});
    }
    return out;
}

}  // namespace causalgen
