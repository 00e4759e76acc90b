#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#include "brauerkit/configuration.hpp"

namespace brauerkit {

struct Arrow {
    std::size_t source = 0;
    std::size_t target = 0;
    VertexId vertex;

    [[nodiscard]] bool is_loop() const noexcept { return source == target; }
};

/// Brauer quiver: one node per polygon, one arrow per covering in the
/// circular order of each vertex.
class Quiver {
public:
    Quiver(std::size_t nodes, std::vector<Arrow> arrows) : nodes_(nodes), arrows_(std::move(arrows)) {
        for (const auto& a : arrows_) loops_ += a.is_loop() ? 1 : 0;
    }

    [[nodiscard]] std::size_t node_count() const noexcept { return nodes_; }
    [[nodiscard]] const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
    [[nodiscard]] std::size_t loop_count() const noexcept { return loops_; }

private:
    std::size_t nodes_;
    std::vector<Arrow> arrows_;
    std::size_t loops_ = 0;
};

/// Builds the quiver by closing every successor sequence into a circle and
/// emitting one arrow per cyclically consecutive pair. A valency-1 vertex has
/// a one-entry circle and so yields exactly one loop at its polygon.
/// Arrows are grouped by vertex (first-appearance order), then by sequence
/// position.
[[nodiscard]] inline Quiver build_quiver(const BrauerConfiguration& config) {
    std::vector<Arrow> arrows;
    for (const auto& v : config.vertices()) {
        const auto& occ = config.occurrences(v);
        const std::size_t k = occ.size();
        for (std::size_t t = 0; t < k; ++t) {
            arrows.push_back({occ[t].polygon, occ[(t + 1) % k].polygon, v});
        }
    }
    return Quiver(config.polygon_count(), std::move(arrows));
}

namespace detail {

class disjoint_sets {
public:
    explicit disjoint_sets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Connected components of the polygon/vertex incidence graph, reported as
/// sorted lists of polygon indices. Components are ordered by their smallest
/// polygon.
[[nodiscard]] inline std::vector<std::vector<std::size_t>> polygon_components(const BrauerConfiguration& config) {
    detail::disjoint_sets sets(config.polygon_count());
    for (const auto& v : config.vertices()) {
        const auto& occ = config.occurrences(v);
        for (std::size_t t = 1; t < occ.size(); ++t) sets.unite(occ[0].polygon, occ[t].polygon);
    }
    std::vector<std::vector<std::size_t>> by_root(config.polygon_count());
    for (std::size_t i = 0; i < config.polygon_count(); ++i) by_root[sets.find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& c : by_root) {
        if (!c.empty()) out.push_back(std::move(c));
    }
    return out;
}

[[nodiscard]] inline bool is_connected(const BrauerConfiguration& config) {
    return polygon_components(config).size() == 1;
}

}  // namespace brauerkit
