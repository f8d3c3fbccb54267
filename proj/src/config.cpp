#include "causalgen/config.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "causalgen/errors.hpp"
#include "causalgen/text.hpp"

namespace causalgen {

std::string to_string(Complexity c) {
    switch (c) {
        case Complexity::low: return "low";
        case Complexity::medium: return "medium";
        case Complexity::high: return "high";
    }
    return "";
}

std::string to_string(FunctionKind k) {
    switch (k) {
        case FunctionKind::identity: return "identity";
        case FunctionKind::linear: return "linear";
        case FunctionKind::monotonic: return "monotonic";
        case FunctionKind::periodic: return "periodic";
    }
    return "";
}

std::string to_string(NoiseKind k) {
    switch (k) {
        case NoiseKind::gaussian: return "gaussian";
        case NoiseKind::laplace: return "laplace";
        case NoiseKind::students_t: return "students_t";
        case NoiseKind::uniform: return "uniform";
    }
    return "";
}

std::optional<Complexity> complexity_from_string(std::string_view s) {
    if (s == "low") return Complexity::low;
    if (s == "medium") return Complexity::medium;
    if (s == "high") return Complexity::high;
    return std::nullopt;
}

std::optional<FunctionKind> function_kind_from_string(std::string_view s) {
    if (s == "identity") return FunctionKind::identity;
    if (s == "linear") return FunctionKind::linear;
    if (s == "monotonic") return FunctionKind::monotonic;
    if (s == "periodic") return FunctionKind::periodic;
    return std::nullopt;
}

std::optional<NoiseKind> noise_kind_from_string(std::string_view s) {
    if (s == "gaussian") return NoiseKind::gaussian;
    if (s == "laplace") return NoiseKind::laplace;
    if (s == "students_t") return NoiseKind::students_t;
    if (s == "uniform") return NoiseKind::uniform;
    return std::nullopt;
}

namespace {

double parse_probability(const std::string& key, std::string_view raw) {
    const auto v = parse_double(raw);
    if (!v) throw TypeMismatchError(key + ": expected a number, got '" + std::string(raw) + "'");
    if (*v < 0.0 || *v > 1.0)
        throw TypeMismatchError(key + ": probability out of range [0, 1]: " + std::string(raw));
    return *v;
}

int parse_count(const std::string& key, std::string_view raw) {
    const auto v = parse_int(raw);
    if (!v) throw TypeMismatchError(key + ": expected an integer, got '" + std::string(raw) + "'");
    if (*v < 0) throw TypeMismatchError(key + ": expected a nonnegative count, got " + std::string(raw));
    return static_cast<int>(*v);
}

bool parse_flag(const std::string& key, std::string_view raw) {
    const auto v = parse_bool(raw);
    if (!v) throw TypeMismatchError(key + ": expected true/false, got '" + std::string(raw) + "'");
    return *v;
}

/// "[a, b, c]" -> trimmed items; "[]" -> empty.
std::vector<std::string> parse_list_items(const std::string& key, std::string_view raw) {
    raw = trim(raw);
    if (raw.size() < 2 || raw.front() != '[' || raw.back() != ']')
        throw TypeMismatchError(key + ": expected a [..] list, got '" + std::string(raw) + "'");
    raw = trim(raw.substr(1, raw.size() - 2));
    std::vector<std::string> items;
    if (raw.empty()) return items;
    for (const auto& part : split(raw, ',')) items.emplace_back(trim(part));
    return items;
}

std::vector<double> parse_prob_list(const std::string& key, std::string_view raw) {
    std::vector<double> out;
    for (const auto& item : parse_list_items(key, raw)) out.push_back(parse_probability(key, item));
    return out;
}

std::string serialize_list(const std::vector<std::string>& items) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ", ";
        out += items[i];
    }
    out += "]";
    return out;
}

std::string serialize_variance(const VarianceSpec& v) {
    if (!v.is_range) return format_double(v.lo);
    return "[" + format_double(v.lo) + ", " + format_double(v.hi) + "]";
}

}  // namespace

void set_config_key(PartialDataGenerationConfig& p, const std::string& key, const std::string& value) {
    auto& g = p.graph;
    if (key == "complexity") {
        const auto c = complexity_from_string(trim(value));
        if (!c) throw TypeMismatchError("complexity: expected low/medium/high, got '" + value + "'");
        p.complexity = *c;
    } else if (key == "graph.num_targets") {
        g.num_targets = parse_count(key, value);
    } else if (key == "graph.num_features") {
        g.num_features = parse_count(key, value);
    } else if (key == "graph.num_latent") {
        g.num_latent = parse_count(key, value);
    } else if (key == "graph.include_noise") {
        g.include_noise = parse_flag(key, value);
    } else if (key == "graph.min_lag") {
        g.min_lag = parse_count(key, value);
    } else if (key == "graph.max_lag") {
        g.max_lag = parse_count(key, value);
    } else if (key == "graph.prob_edge") {
        g.prob_edge = parse_probability(key, value);
    } else if (key == "graph.prob_target_parent") {
        g.prob_target_parent = parse_probability(key, value);
    } else if (key == "graph.prob_feature_parent") {
        g.prob_feature_parent = parse_probability(key, value);
    } else if (key == "graph.prob_latent_parent") {
        g.prob_latent_parent = parse_probability(key, value);
    } else if (key == "graph.max_target_parents") {
        g.max_target_parents = parse_count(key, value);
    } else if (key == "graph.max_feature_parents") {
        g.max_feature_parents = parse_count(key, value);
    } else if (key == "graph.max_latent_parents") {
        g.max_latent_parents = parse_count(key, value);
    } else if (key == "graph.max_target_children") {
        g.max_target_children = parse_count(key, value);
    } else if (key == "graph.max_feature_children") {
        g.max_feature_children = parse_count(key, value);
    } else if (key == "graph.max_latent_children") {
        g.max_latent_children = parse_count(key, value);
    } else if (key == "graph.max_parents_per_variable") {
        g.max_parents_per_variable = parse_count(key, value);
    } else if (key == "graph.prob_target_autoregressive") {
        g.prob_target_autoregressive = parse_probability(key, value);
    } else if (key == "graph.prob_feature_autoregressive") {
        g.prob_feature_autoregressive = parse_probability(key, value);
    } else if (key == "graph.prob_latent_autoregressive") {
        g.prob_latent_autoregressive = parse_probability(key, value);
    } else if (key == "graph.prob_noise_autoregressive") {
        g.prob_noise_autoregressive = parse_probability(key, value);
    } else if (key == "graph.allow_latent_direct_target_cause") {
        g.allow_latent_direct_target_cause = parse_flag(key, value);
    } else if (key == "graph.allow_target_direct_target_cause") {
        g.allow_target_direct_target_cause = parse_flag(key, value);
    } else if (key == "function.functions") {
        std::vector<FunctionKind> ks;
        for (const auto& item : parse_list_items(key, value)) {
            const auto k = function_kind_from_string(item);
            if (!k || *k == FunctionKind::identity)
                throw TypeMismatchError(key + ": expected linear/monotonic/periodic, got '" + item + "'");
            ks.push_back(*k);
        }
        p.function.functions = std::move(ks);
    } else if (key == "function.prob_functions") {
        p.function.prob_functions = parse_prob_list(key, value);
    } else if (key == "noise.distributions") {
        std::vector<NoiseKind> ks;
        for (const auto& item : parse_list_items(key, value)) {
            const auto k = noise_kind_from_string(item);
            if (!k) throw TypeMismatchError(key + ": unknown distribution '" + item + "'");
            ks.push_back(*k);
        }
        p.noise.distributions = std::move(ks);
    } else if (key == "noise.prob_distributions") {
        p.noise.prob_distributions = parse_prob_list(key, value);
    } else if (key == "noise.noise_variance") {
        const auto t = trim(value);
        if (!t.empty() && t.front() == '[') {
            const auto items = parse_list_items(key, value);
            if (items.size() != 2) throw TypeMismatchError(key + ": range needs exactly [lo, hi]");
            const auto lo = parse_double(items[0]);
            const auto hi = parse_double(items[1]);
            if (!lo || !hi) throw TypeMismatchError(key + ": expected numeric range bounds");
            p.noise.noise_variance = VarianceSpec::range(*lo, *hi);
        } else {
            const auto v = parse_double(t);
            if (!v) throw TypeMismatchError(key + ": expected a number or [lo, hi]");
            p.noise.noise_variance = VarianceSpec::scalar(*v);
        }
    } else if (key == "runtime.num_samples") {
        std::vector<int> ns;
        for (const auto& item : parse_list_items(key, value)) {
            const auto v = parse_int(item);
            if (!v || *v <= 0) throw TypeMismatchError(key + ": expected positive counts, got '" + item + "'");
            ns.push_back(static_cast<int>(*v));
        }
        p.runtime.num_samples = std::move(ns);
    } else if (key == "runtime.data_generating_seeds") {
        std::vector<std::uint64_t> seeds;
        for (const auto& item : parse_list_items(key, value)) {
            const auto v = parse_int(item);
            if (!v || *v < 0) throw TypeMismatchError(key + ": expected nonnegative seeds, got '" + item + "'");
            seeds.push_back(static_cast<std::uint64_t>(*v));
        }
        p.runtime.data_generating_seeds = std::move(seeds);
    } else if (key == "runtime.return_observed_data_only") {
        p.runtime.return_observed_data_only = parse_flag(key, value);
    } else if (key == "runtime.keep_warmup") {
        p.runtime.keep_warmup = parse_flag(key, value);
    } else if (key == "runtime.burn_in") {
        p.runtime.burn_in = parse_count(key, value);
    } else {
        throw UnknownKeyError("unknown config key: '" + key + "'");
    }
}

PartialDataGenerationConfig parse_config(const std::string& document) {
    PartialDataGenerationConfig partial;
    std::istringstream in(document);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto content = trim(line);
        if (content.empty()) continue;
        const auto eq = content.find('=');
        if (eq == std::string_view::npos)
            throw SyntaxError("line " + format_int(lineno) + ": expected 'key = value'");
        const std::string key{trim(content.substr(0, eq))};
        const std::string value{trim(content.substr(eq + 1))};
        if (key.empty()) throw SyntaxError("line " + format_int(lineno) + ": empty key");
        if (value.empty()) throw SyntaxError("line " + format_int(lineno) + ": empty value for '" + key + "'");
        set_config_key(partial, key, value);
    }
    return partial;
}

namespace {

// Serialization walks the same canonical key order for partial and
// complete configs, so complete round-trips are bit-exact.
class DocWriter {
public:
    template <typename T, typename Fmt>
    void field(const char* key, const std::optional<T>& v, Fmt&& fmt) {
        if (v) line(key, fmt(*v));
    }
    void line(const char* key, const std::string& value) {
        out_ += key;
        out_ += " = ";
        out_ += value;
        out_ += "\n";
    }
    std::string str() && { return std::move(out_); }

private:
    std::string out_;
};

std::string fmt_count(int v) { return format_int(v); }
std::string fmt_seed(std::uint64_t v) { return format_int(static_cast<long long>(v)); }
std::string fmt_flag(bool v) { return v ? "true" : "false"; }

template <typename T, typename Fmt>
std::string fmt_list(const std::vector<T>& items, Fmt&& fmt) {
    std::vector<std::string> strs;
    strs.reserve(items.size());
    for (const auto& it : items) strs.push_back(fmt(it));
    return serialize_list(strs);
}

std::string serialize_partial(const PartialDataGenerationConfig& p) {
    DocWriter w;
    w.field("complexity", p.complexity, [](Complexity c) { return to_string(c); });
    const auto& g = p.graph;
    w.field("graph.num_targets", g.num_targets, fmt_count);
    w.field("graph.num_features", g.num_features, fmt_count);
    w.field("graph.num_latent", g.num_latent, fmt_count);
    w.field("graph.include_noise", g.include_noise, fmt_flag);
    w.field("graph.min_lag", g.min_lag, fmt_count);
    w.field("graph.max_lag", g.max_lag, fmt_count);
    w.field("graph.prob_edge", g.prob_edge, format_double);
    w.field("graph.prob_target_parent", g.prob_target_parent, format_double);
    w.field("graph.prob_feature_parent", g.prob_feature_parent, format_double);
    w.field("graph.prob_latent_parent", g.prob_latent_parent, format_double);
    w.field("graph.max_target_parents", g.max_target_parents, fmt_count);
    w.field("graph.max_feature_parents", g.max_feature_parents, fmt_count);
    w.field("graph.max_latent_parents", g.max_latent_parents, fmt_count);
    w.field("graph.max_target_children", g.max_target_children, fmt_count);
    w.field("graph.max_feature_children", g.max_feature_children, fmt_count);
    w.field("graph.max_latent_children", g.max_latent_children, fmt_count);
    w.field("graph.max_parents_per_variable", g.max_parents_per_variable, fmt_count);
    w.field("graph.prob_target_autoregressive", g.prob_target_autoregressive, format_double);
    w.field("graph.prob_feature_autoregressive", g.prob_feature_autoregressive, format_double);
    w.field("graph.prob_latent_autoregressive", g.prob_latent_autoregressive, format_double);
    w.field("graph.prob_noise_autoregressive", g.prob_noise_autoregressive, format_double);
    w.field("graph.allow_latent_direct_target_cause", g.allow_latent_direct_target_cause, fmt_flag);
    w.field("graph.allow_target_direct_target_cause", g.allow_target_direct_target_cause, fmt_flag);
    w.field("function.functions", p.function.functions, [](const std::vector<FunctionKind>& ks) {
        return fmt_list(ks, [](FunctionKind k) { return to_string(k); });
    });
    w.field("function.prob_functions", p.function.prob_functions,
            [](const std::vector<double>& v) { return fmt_list(v, format_double); });
    w.field("noise.distributions", p.noise.distributions, [](const std::vector<NoiseKind>& ks) {
        return fmt_list(ks, [](NoiseKind k) { return to_string(k); });
    });
    w.field("noise.prob_distributions", p.noise.prob_distributions,
            [](const std::vector<double>& v) { return fmt_list(v, format_double); });
    w.field("noise.noise_variance", p.noise.noise_variance, serialize_variance);
    w.field("runtime.num_samples", p.runtime.num_samples,
            [](const std::vector<int>& v) { return fmt_list(v, fmt_count); });
    w.field("runtime.data_generating_seeds", p.runtime.data_generating_seeds,
            [](const std::vector<std::uint64_t>& v) { return fmt_list(v, fmt_seed); });
    w.field("runtime.return_observed_data_only", p.runtime.return_observed_data_only, fmt_flag);
    w.field("runtime.keep_warmup", p.runtime.keep_warmup, fmt_flag);
    w.field("runtime.burn_in", p.runtime.burn_in, fmt_count);
    return std::move(w).str();
}

}  // namespace

std::string serialize_config(const PartialDataGenerationConfig& partial) {
    return serialize_partial(partial);
}

std::string serialize_config(const DataGenerationConfig& config) {
    return serialize_partial(to_partial(config));
}

PartialDataGenerationConfig to_partial(const DataGenerationConfig& c) {
    PartialDataGenerationConfig p;
    p.complexity = c.complexity;
    const auto& g = c.graph;
    auto& pg = p.graph;
    pg.num_targets = g.num_targets;
    pg.num_features = g.num_features;
    pg.num_latent = g.num_latent;
    pg.include_noise = g.include_noise;
    pg.min_lag = g.min_lag;
    pg.max_lag = g.max_lag;
    pg.prob_edge = g.prob_edge;
    pg.prob_target_parent = g.prob_target_parent;
    pg.prob_feature_parent = g.prob_feature_parent;
    pg.prob_latent_parent = g.prob_latent_parent;
    pg.max_target_parents = g.max_target_parents;
    pg.max_feature_parents = g.max_feature_parents;
    pg.max_latent_parents = g.max_latent_parents;
    pg.max_target_children = g.max_target_children;
    pg.max_feature_children = g.max_feature_children;
    pg.max_latent_children = g.max_latent_children;
    pg.max_parents_per_variable = g.max_parents_per_variable;
    pg.prob_target_autoregressive = g.prob_target_autoregressive;
    pg.prob_feature_autoregressive = g.prob_feature_autoregressive;
    pg.prob_latent_autoregressive = g.prob_latent_autoregressive;
    pg.prob_noise_autoregressive = g.prob_noise_autoregressive;
    pg.allow_latent_direct_target_cause = g.allow_latent_direct_target_cause;
    pg.allow_target_direct_target_cause = g.allow_target_direct_target_cause;
    p.function.functions = c.function.functions;
    p.function.prob_functions = c.function.prob_functions;
    p.noise.distributions = c.noise.distributions;
    p.noise.prob_distributions = c.noise.prob_distributions;
    p.noise.noise_variance = c.noise.noise_variance;
    p.runtime.num_samples = c.runtime.num_samples;
    p.runtime.data_generating_seeds = c.runtime.data_generating_seeds;
    p.runtime.return_observed_data_only = c.runtime.return_observed_data_only;
    p.runtime.keep_warmup = c.runtime.keep_warmup;
    p.runtime.burn_in = c.runtime.burn_in;
    return p;
}

PartialDataGenerationConfig merge_config(const PartialDataGenerationConfig& base,
                                         const PartialDataGenerationConfig& over) {
    PartialDataGenerationConfig out = base;
    auto pick = [](auto& dst, const auto& src) {
        if (src) dst = src;
    };
    pick(out.complexity, over.complexity);
    pick(out.graph.num_targets, over.graph.num_targets);
    pick(out.graph.num_features, over.graph.num_features);
    pick(out.graph.num_latent, over.graph.num_latent);
    pick(out.graph.include_noise, over.graph.include_noise);
    pick(out.graph.min_lag, over.graph.min_lag);
    pick(out.graph.max_lag, over.graph.max_lag);
    pick(out.graph.prob_edge, over.graph.prob_edge);
    pick(out.graph.prob_target_parent, over.graph.prob_target_parent);
    pick(out.graph.prob_feature_parent, over.graph.prob_feature_parent);
    pick(out.graph.prob_latent_parent, over.graph.prob_latent_parent);
    pick(out.graph.max_target_parents, over.graph.max_target_parents);
    pick(out.graph.max_feature_parents, over.graph.max_feature_parents);
    pick(out.graph.max_latent_parents, over.graph.max_latent_parents);
    pick(out.graph.max_target_children, over.graph.max_target_children);
    pick(out.graph.max_feature_children, over.graph.max_feature_children);
    pick(out.graph.max_latent_children, over.graph.max_latent_children);
    pick(out.graph.max_parents_per_variable, over.graph.max_parents_per_variable);
    pick(out.graph.prob_target_autoregressive, over.graph.prob_target_autoregressive);
    pick(out.graph.prob_feature_autoregressive, over.graph.prob_feature_autoregressive);
    pick(out.graph.prob_latent_autoregressive, over.graph.prob_latent_autoregressive);
    pick(out.graph.prob_noise_autoregressive, over.graph.prob_noise_autoregressive);
    pick(out.graph.allow_latent_direct_target_cause, over.graph.allow_latent_direct_target_cause);
    pick(out.graph.allow_target_direct_target_cause, over.graph.allow_target_direct_target_cause);
    pick(out.function.functions, over.function.functions);
    pick(out.function.prob_functions, over.function.prob_functions);
    pick(out.noise.distributions, over.noise.distributions);
    pick(out.noise.prob_distributions, over.noise.prob_distributions);
    pick(out.noise.noise_variance, over.noise.noise_variance);
    pick(out.runtime.num_samples, over.runtime.num_samples);
    pick(out.runtime.data_generating_seeds, over.runtime.data_generating_seeds);
    pick(out.runtime.return_observed_data_only, over.runtime.return_observed_data_only);
    pick(out.runtime.keep_warmup, over.runtime.keep_warmup);
    pick(out.runtime.burn_in, over.runtime.burn_in);
    return out;
}

DataGenerationConfig complexity_preset(Complexity c) {
    DataGenerationConfig cfg;
    cfg.complexity = c;
    auto& g = cfg.graph;
    g.include_noise = true;
    g.allow_latent_direct_target_cause = true;
    g.allow_target_direct_target_cause = false;
    switch (c) {
        case Complexity::low:
            g.num_targets = 1;
            g.num_features = 3;
            g.num_latent = 0;
            g.min_lag = 1;
            g.max_lag = 2;
            g.prob_edge = 0.2;
            g.max_target_parents = g.max_feature_parents = g.max_latent_parents = 2;
            g.max_target_children = g.max_feature_children = g.max_latent_children = 2;
            g.max_parents_per_variable = 1;
            g.prob_target_autoregressive = 0.2;
            g.prob_feature_autoregressive = 0.3;
            g.prob_latent_autoregressive = 0.3;
            g.prob_noise_autoregressive = 0.0;
            cfg.function.functions = {FunctionKind::linear};
            cfg.function.prob_functions = {1.0};
            cfg.noise.distributions = {NoiseKind::gaussian};
            cfg.noise.prob_distributions = {1.0};
            cfg.noise.noise_variance = VarianceSpec::scalar(0.01);
            break;
        case Complexity::medium:
            g.num_targets = 1;
            g.num_features = 5;
            g.num_latent = 1;
            g.min_lag = 1;
            g.max_lag = 5;
            g.prob_edge = 0.3;
            g.max_target_parents = g.max_feature_parents = g.max_latent_parents = 3;
            g.max_target_children = g.max_feature_children = g.max_latent_children = 3;
            g.max_parents_per_variable = 2;
            g.prob_target_autoregressive = 0.3;
            g.prob_feature_autoregressive = 0.4;
            g.prob_latent_autoregressive = 0.4;
            g.prob_noise_autoregressive = 0.2;
            cfg.function.functions = {FunctionKind::linear, FunctionKind::monotonic};
            cfg.function.prob_functions = {0.8, 0.2};
            cfg.noise.distributions = {NoiseKind::gaussian, NoiseKind::laplace};
            cfg.noise.prob_distributions = {0.8, 0.2};
            cfg.noise.noise_variance = VarianceSpec::range(0.01, 0.05);
            break;
        case Complexity::high:
            g.num_targets = 1;
            g.num_features = 8;
            g.num_latent = 2;
            g.min_lag = 0;
            g.max_lag = 5;
            g.prob_edge = 0.4;
            g.max_target_parents = g.max_feature_parents = g.max_latent_parents = 4;
            g.max_target_children = g.max_feature_children = g.max_latent_children = 4;
            g.max_parents_per_variable = 3;
            g.prob_target_autoregressive = 0.4;
            g.prob_feature_autoregressive = 0.5;
            g.prob_latent_autoregressive = 0.5;
            g.prob_noise_autoregressive = 0.3;
            cfg.function.functions = {FunctionKind::linear, FunctionKind::monotonic, FunctionKind::periodic};
            cfg.function.prob_functions = {0.5, 0.3, 0.2};
            cfg.noise.distributions = {NoiseKind::gaussian, NoiseKind::laplace, NoiseKind::students_t,
                                       NoiseKind::uniform};
            cfg.noise.prob_distributions = {0.4, 0.2, 0.2, 0.2};
            cfg.noise.noise_variance = VarianceSpec::range(0.01, 0.1);
            break;
    }
    cfg.runtime.num_samples = {1000};
    cfg.runtime.data_generating_seeds = {1};
    cfg.runtime.return_observed_data_only = true;
    cfg.runtime.keep_warmup = false;
    cfg.runtime.burn_in = 0;
    return cfg;
}

DataGenerationConfig apply_complexity_defaults(const PartialDataGenerationConfig& partial,
                                               Complexity complexity) {
    DataGenerationConfig out = complexity_preset(complexity);
    auto pick = [](auto& dst, const auto& src) {
        if (src) dst = *src;
    };
    const auto& g = partial.graph;
    pick(out.graph.num_targets, g.num_targets);
    pick(out.graph.num_features, g.num_features);
    pick(out.graph.num_latent, g.num_latent);
    pick(out.graph.include_noise, g.include_noise);
    pick(out.graph.min_lag, g.min_lag);
    pick(out.graph.max_lag, g.max_lag);
    pick(out.graph.prob_edge, g.prob_edge);
    // The per-parent-type probabilities stay unset unless the user set
    // them; unset means "use prob_edge" downstream.
    if (g.prob_target_parent) out.graph.prob_target_parent = g.prob_target_parent;
    if (g.prob_feature_parent) out.graph.prob_feature_parent = g.prob_feature_parent;
    if (g.prob_latent_parent) out.graph.prob_latent_parent = g.prob_latent_parent;
    pick(out.graph.max_target_parents, g.max_target_parents);
    pick(out.graph.max_feature_parents, g.max_feature_parents);
    pick(out.graph.max_latent_parents, g.max_latent_parents);
    pick(out.graph.max_target_children, g.max_target_children);
    pick(out.graph.max_feature_children, g.max_feature_children);
    pick(out.graph.max_latent_children, g.max_latent_children);
    pick(out.graph.max_parents_per_variable, g.max_parents_per_variable);
    pick(out.graph.prob_target_autoregressive, g.prob_target_autoregressive);
    pick(out.graph.prob_feature_autoregressive, g.prob_feature_autoregressive);
    pick(out.graph.prob_latent_autoregressive, g.prob_latent_autoregressive);
    pick(out.graph.prob_noise_autoregressive, g.prob_noise_autoregressive);
    pick(out.graph.allow_latent_direct_target_cause, g.allow_latent_direct_target_cause);
    pick(out.graph.allow_target_direct_target_cause, g.allow_target_direct_target_cause);
    pick(out.function.functions, partial.function.functions);
    pick(out.function.prob_functions, partial.function.prob_functions);
    // A user-supplied function list with preset probabilities (or vice
    // versa) would silently mismatch; re-derive the unset side instead.
    if (partial.function.functions && !partial.function.prob_functions) {
        const auto n = partial.function.functions->size();
        out.function.prob_functions.assign(n, n ? 1.0 / static_cast<double>(n) : 0.0);
    }
    pick(out.noise.distributions, partial.noise.distributions);
    pick(out.noise.prob_distributions, partial.noise.prob_distributions);
    if (partial.noise.distributions && !partial.noise.prob_distributions) {
        const auto n = partial.noise.distributions->size();
        out.noise.prob_distributions.assign(n, n ? 1.0 / static_cast<double>(n) : 0.0);
    }
    pick(out.noise.noise_variance, partial.noise.noise_variance);
    pick(out.runtime.num_samples, partial.runtime.num_samples);
    pick(out.runtime.data_generating_seeds, partial.runtime.data_generating_seeds);
    if (partial.runtime.num_samples && !partial.runtime.data_generating_seeds) {
        std::vector<std::uint64_t> seeds(partial.runtime.num_samples->size());
        for (std::size_t i = 0; i < seeds.size(); ++i) seeds[i] = i + 1;
        out.runtime.data_generating_seeds = std::move(seeds);
    }
    pick(out.runtime.return_observed_data_only, partial.runtime.return_observed_data_only);
    pick(out.runtime.keep_warmup, partial.runtime.keep_warmup);
    pick(out.runtime.burn_in, partial.runtime.burn_in);
    out.complexity = complexity;
    return out;
}

namespace {

void check_probability(ValidationReport& r, const std::string& field, double p) {
    if (p < 0.0 || p > 1.0)
        r.findings.push_back({field, "probability " + format_double(p) + " outside [0, 1]"});
}

void check_prob_vector(ValidationReport& r, const std::string& field, std::size_t n_items,
                       const std::vector<double>& probs) {
    if (probs.size() != n_items) {
        r.findings.push_back({field, "length " + format_int(static_cast<long long>(probs.size())) +
                                         " does not match " + format_int(static_cast<long long>(n_items)) +
                                         " entries"});
        return;
    }
    double sum = 0.0;
    for (const double p : probs) {
        if (p < 0.0 || p > 1.0) {
            r.findings.push_back({field, "entry " + format_double(p) + " outside [0, 1]"});
            return;
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        r.findings.push_back({field, "probabilities sum to " + format_double(sum) + " != 1"});
}

}  // namespace

ValidationReport validate(const DataGenerationConfig& c) {
    ValidationReport r;
    const auto& g = c.graph;
    if (g.min_lag > g.max_lag) r.findings.push_back({"graph.min_lag", "min_lag > max_lag"});
    if (g.min_lag < 0) r.findings.push_back({"graph.min_lag", "negative lag"});
    if (g.max_lag < 0) r.findings.push_back({"graph.max_lag", "negative lag"});
    if (g.num_targets < 0) r.findings.push_back({"graph.num_targets", "negative count"});
    if (g.num_features < 0) r.findings.push_back({"graph.num_features", "negative count"});
    if (g.num_latent < 0) r.findings.push_back({"graph.num_latent", "negative count"});
    if (g.num_targets + g.num_features < 1)
        r.findings.push_back({"graph.num_targets", "need at least one observed variable (targets + features)"});
    check_probability(r, "graph.prob_edge", g.prob_edge);
    if (g.prob_target_parent) check_probability(r, "graph.prob_target_parent", *g.prob_target_parent);
    if (g.prob_feature_parent) check_probability(r, "graph.prob_feature_parent", *g.prob_feature_parent);
    if (g.prob_latent_parent) check_probability(r, "graph.prob_latent_parent", *g.prob_latent_parent);
    check_probability(r, "graph.prob_target_autoregressive", g.prob_target_autoregressive);
    check_probability(r, "graph.prob_feature_autoregressive", g.prob_feature_autoregressive);
    check_probability(r, "graph.prob_latent_autoregressive", g.prob_latent_autoregressive);
    check_probability(r, "graph.prob_noise_autoregressive", g.prob_noise_autoregressive);
    for (const auto& [field, v] :
         {std::pair<const char*, int>{"graph.max_target_parents", g.max_target_parents},
          {"graph.max_feature_parents", g.max_feature_parents},
          {"graph.max_latent_parents", g.max_latent_parents},
          {"graph.max_target_children", g.max_target_children},
          {"graph.max_feature_children", g.max_feature_children},
          {"graph.max_latent_children", g.max_latent_children},
          {"graph.max_parents_per_variable", g.max_parents_per_variable}}) {
        if (v < 0) r.findings.push_back({field, "negative cap"});
    }
    if (c.function.functions.empty())
        r.findings.push_back({"function.functions", "empty function list"});
    check_prob_vector(r, "function.prob_functions", c.function.functions.size(), c.function.prob_functions);
    if (c.noise.distributions.empty())
        r.findings.push_back({"noise.distributions", "empty distribution list"});
    check_prob_vector(r, "noise.prob_distributions", c.noise.distributions.size(),
                      c.noise.prob_distributions);
    if (c.noise.noise_variance.lo <= 0.0)
        r.findings.push_back({"noise.noise_variance", "variance must be strictly positive"});
    if (c.noise.noise_variance.lo > c.noise.noise_variance.hi)
        r.findings.push_back({"noise.noise_variance", "range lo > hi"});
    const auto& rt = c.runtime;
    if (rt.num_samples.empty()) r.findings.push_back({"runtime.num_samples", "empty list"});
    if (rt.num_samples.size() != rt.data_generating_seeds.size())
        r.findings.push_back({"runtime.data_generating_seeds",
                              "length does not match runtime.num_samples"});
    if (rt.burn_in < 0) r.findings.push_back({"runtime.burn_in", "negative burn-in"});
    for (const int n : rt.num_samples) {
        if (n <= 0) {
            r.findings.push_back({"runtime.num_samples", "non-positive sample count"});
            break;
        }
        if (n <= g.max_lag + rt.burn_in) {
            r.findings.push_back(
                {"runtime.num_samples", "num_samples must exceed max_lag + burn_in"});
            break;
        }
    }
    return r;
}

}  // namespace causalgen
