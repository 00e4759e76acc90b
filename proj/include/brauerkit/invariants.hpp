#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "brauerkit/configuration.hpp"
#include "brauerkit/quiver.hpp"

namespace brauerkit {

using dim_t = std::int64_t;

/// dim Lambda = 2|polygons| + sum_v val(v) * (val(v) * mu(v) - 1).
[[nodiscard]] inline dim_t dim_lambda(const BrauerConfiguration& config) {
    dim_t sum = 2 * static_cast<dim_t>(config.polygon_count());
    for (const auto& v : config.vertices()) {
        const auto val = static_cast<dim_t>(config.valency(v));
        const auto mu = static_cast<dim_t>(config.multiplicity(v));
        sum += val * (val * mu - 1);
    }
    return sum;
}

namespace detail {

inline std::string describe_components(const std::vector<std::vector<std::size_t>>& comps) {
    std::ostringstream os;
    os << comps.size() << " components:";
    for (const auto& c : comps) {
        os << " {";
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << (c[i] + 1);
        os << '}';
    }
    return os.str();
}

inline void require_connected(const BrauerConfiguration& config) {
    auto comps = polygon_components(config);
    if (comps.size() != 1) {
        throw error(errc::precondition,
                    "center dimension needs a connected configuration; polygons split into " +
                        describe_components(comps));
    }
}

// Closed form shared by the configuration and histogram routes.
inline dim_t center_formula(dim_t polygons, dim_t vertices, dim_t mu_sum, dim_t loops, dim_t singletons) {
    return 1 + polygons - vertices + mu_sum + loops - singletons;
}

}  // namespace detail

/// The center expression evaluated without the connectivity check. On a
/// disconnected configuration this is not the center dimension: each extra
/// component adds one to the true value.
[[nodiscard]] inline dim_t center_formula(const BrauerConfiguration& config) {
    dim_t mu_sum = 0;
    dim_t singletons = 0;
    for (const auto& v : config.vertices()) {
        mu_sum += static_cast<dim_t>(config.multiplicity(v));
        singletons += config.valency(v) == 1 ? 1 : 0;
    }
    const auto loops = static_cast<dim_t>(build_quiver(config).loop_count());
    return detail::center_formula(static_cast<dim_t>(config.polygon_count()),
                                  static_cast<dim_t>(config.vertex_count()), mu_sum, loops, singletons);
}

/// Center dimension of a connected configuration:
/// 1 + |polygons| - |vertices| + sum mu + #loops - #{v : val(v) = 1}.
/// Throws errc::precondition for a disconnected configuration.
[[nodiscard]] inline dim_t dim_center(const BrauerConfiguration& config) {
    detail::require_connected(config);
    return center_formula(config);
}

struct AlgebraInvariants {
    dim_t dim_lambda = 0;
    std::optional<dim_t> dim_center;  ///< empty when the configuration is disconnected
    dim_t center_formula = 0;         ///< unguarded center expression
    std::size_t components = 1;
    dim_t loops = 0;
    std::size_t polygon_count = 0;
    std::size_t vertex_count = 0;
    dim_t mu_sum = 0;
    std::map<std::size_t, std::size_t> valency_histogram;

    [[nodiscard]] bool connected() const noexcept { return dim_center.has_value(); }

    friend bool operator==(const AlgebraInvariants&, const AlgebraInvariants&) = default;
};

/// Valency-level summary of a configuration: enough to evaluate both
/// dimension formulas without the words themselves. The loop count cannot be
/// recovered from the histogram and is carried explicitly.
struct ValencyProfile {
    std::size_t polygon_count = 0;
    std::map<std::size_t, std::size_t> valency_histogram;
    std::size_t loops = 0;

    friend bool operator==(const ValencyProfile&, const ValencyProfile&) = default;
};

[[nodiscard]] inline AlgebraInvariants invariants(const BrauerConfiguration& config) {
    AlgebraInvariants out;
    out.dim_lambda = dim_lambda(config);
    out.loops = static_cast<dim_t>(build_quiver(config).loop_count());
    out.polygon_count = config.polygon_count();
    out.vertex_count = config.vertex_count();
    dim_t singletons = 0;
    for (const auto& v : config.vertices()) {
        out.mu_sum += static_cast<dim_t>(config.multiplicity(v));
        ++out.valency_histogram[config.valency(v)];
        singletons += config.valency(v) == 1 ? 1 : 0;
    }
    out.center_formula = detail::center_formula(static_cast<dim_t>(out.polygon_count),
                                                static_cast<dim_t>(out.vertex_count), out.mu_sum, out.loops,
                                                singletons);
    out.components = polygon_components(config).size();
    if (out.components == 1) out.dim_center = out.center_formula;
    return out;
}

[[nodiscard]] inline ValencyProfile valency_profile(const BrauerConfiguration& config) {
    ValencyProfile p;
    p.polygon_count = config.polygon_count();
    p.loops = build_quiver(config).loop_count();
    for (const auto& v : config.vertices()) ++p.valency_histogram[config.valency(v)];
    return p;
}

/// Invariants evaluated from a valency profile alone. The profile is assumed
/// to describe a connected configuration.
[[nodiscard]] inline AlgebraInvariants invariants(const ValencyProfile& profile) {
    if (profile.polygon_count == 0) throw error(errc::validation, "profile needs at least one polygon");
    AlgebraInvariants out;
    out.polygon_count = profile.polygon_count;
    out.loops = static_cast<dim_t>(profile.loops);
    out.valency_histogram = profile.valency_histogram;
    out.dim_lambda = 2 * static_cast<dim_t>(profile.polygon_count);
    dim_t singletons = 0;
    for (const auto& [val, count] : profile.valency_histogram) {
        if (val == 0) throw error(errc::validation, "valency 0 is not allowed in a profile");
        const auto v = static_cast<dim_t>(val);
        const auto n = static_cast<dim_t>(count);
        const dim_t mu = val == 1 ? 2 : 1;
        out.dim_lambda += n * v * (v * mu - 1);
        out.mu_sum += n * mu;
        out.vertex_count += count;
        if (val == 1) singletons = n;
    }
    out.center_formula =
        detail::center_formula(static_cast<dim_t>(profile.polygon_count), static_cast<dim_t>(out.vertex_count),
                               out.mu_sum, out.loops, singletons);
    out.dim_center = out.center_formula;
    return out;
}

struct PropV3Verdict {
    std::size_t polygons = 0;    ///< m
    std::size_t singletons = 0;  ///< n, vertices of valency 1
    dim_t claimed = 0;           ///< m + n + 1
    dim_t actual = 0;            ///< dim_center
    [[nodiscard]] bool holds() const noexcept { return claimed == actual; }
};

/// Checks dim Z = m + n + 1 for a configuration whose polygons never repeat a
/// vertex. Throws errc::precondition naming the first repeated vertex.
[[nodiscard]] inline PropV3Verdict check_prop_v3(const BrauerConfiguration& config) {
    for (const auto& poly : config.polygons()) {
        for (const auto& [v, f] : poly.multiset()) {
            if (f > 1) {
                throw error(errc::precondition, "vertex '" + v.label() + "' occurs " + std::to_string(f) +
                                                    " times in polygon " + std::to_string(poly.index() + 1));
            }
        }
    }
    PropV3Verdict out;
    out.polygons = config.polygon_count();
    for (const auto& v : config.vertices()) out.singletons += config.valency(v) == 1 ? 1 : 0;
    out.claimed = static_cast<dim_t>(out.polygons + out.singletons + 1);
    out.actual = dim_center(config);
    return out;
}

}  // namespace brauerkit
