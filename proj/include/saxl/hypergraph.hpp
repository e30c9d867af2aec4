#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "saxl/error.hpp"
#include "saxl/partition.hpp"
#include "saxl/tableau.hpp"

namespace saxl {

struct GridVertex {
    int id;   ///< 1-based, row-major
    int row;  ///< 1..n
    int col;  ///< 1..n
    int beta; ///< n + 2 - row - col, distance from the diagonal edge
};

/// Triangular point set {(r, c) : r + c <= n + 1} with row-major ids.
class DeltaGrid {
public:
    explicit DeltaGrid(int n) : n_(n) {
        if (n < 1)
            throw Error(ErrorCode::BadShape, "grid needs n >= 1");
        vertices_.reserve(staircase_size(n));
        for (int r = 1; r <= n; ++r)
            for (int c = 1; r + c <= n + 1; ++c)
                vertices_.push_back({static_cast<int>(vertices_.size()) + 1, r, c, n + 2 - r - c});
    }

    int n() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(vertices_.size()); }
    const std::vector<GridVertex>& vertices() const noexcept { return vertices_; }
    const GridVertex& vertex(int id) const { return vertices_.at(id - 1); }

    int id_at(int row, int col) const {
        if (row < 1 || col < 1 || row + col > n_ + 1)
            throw Error(ErrorCode::BadShape, "point outside the grid");
        // rows 1..row-1 hold n, n-1, ..., n-row+2 points
        int before = (row - 1) * n_ - (row - 1) * (row - 2) / 2;
        return before + col;
    }

    int beta(int id) const { return vertex(id).beta; }

    /// beta values indexed by id - 1.
    std::vector<int> betas() const {
        std::vector<int> out;
        out.reserve(vertices_.size());
        for (const auto& v : vertices_)
            out.push_back(v.beta);
        return out;
    }

private:
    int n_;
    std::vector<GridVertex> vertices_;
};

inline DeltaGrid delta_grid(int n) { return DeltaGrid(n); }

/// Sorted, duplicate-free vertex ids.
using Hyperedge = std::vector<int>;
using Layer = std::vector<Hyperedge>;

/// Three hyperedge layers on vertices 1..d whose edge sizes follow the column
/// lengths of type[0], type[1], type[2].
struct YoungHypergraph {
    int d = 0;
    std::array<Partition, 3> type;
    std::array<Layer, 3> layers;

    friend bool operator==(const YoungHypergraph&, const YoungHypergraph&) = default;
};

/// Numbers the boxes of `shape` column by column, top to bottom; each column
/// becomes one edge.
inline Layer columnwise_layer(const Partition& shape) {
    Layer layer;
    int next = 1;
    for (int height : column_lengths(shape)) {
        Hyperedge edge(height);
        for (int& v : edge)
            v = next++;
        layer.push_back(std::move(edge));
    }
    return layer;
}

/// Reference construction: every layer built columnwise from its partition.
inline YoungHypergraph columnwise_hypergraph(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() != mu.size() || mu.size() != nu.size())
        throw Error(ErrorCode::SizeMismatch, "hypergraph type partitions must have equal size");
    return {lambda.size(), {lambda, mu, nu}, {columnwise_layer(lambda), columnwise_layer(mu), columnwise_layer(nu)}};
}

inline bool validate(const YoungHypergraph& h) {
    if (h.d < 0)
        return false;
    for (std::size_t k = 0; k < 3; ++k) {
        if (h.type[k].size() != h.d)
            return false;
        std::vector<int> seen(h.d + 1, 0);
        std::vector<int> sizes;
        for (const auto& edge : h.layers[k]) {
            if (edge.empty())
                return false;
            for (std::size_t i = 0; i < edge.size(); ++i) {
                int v = edge[i];
                if (v < 1 || v > h.d || seen[v]++)
                    return false;
                if (i > 0 && edge[i - 1] >= v)
                    return false;
            }
            sizes.push_back(static_cast<int>(edge.size()));
        }
        for (int v = 1; v <= h.d; ++v)
            if (seen[v] != 1)
                return false;
        std::sort(sizes.rbegin(), sizes.rend());
        if (sizes != column_lengths(h.type[k]))
            return false;
    }
    return true;
}

/// Grid rows as layer-1 edges.
inline Layer grid_row_layer(const DeltaGrid& grid) {
    Layer layer;
    for (int r = 1; r <= grid.n(); ++r) {
        Hyperedge edge;
        for (int c = 1; r + c <= grid.n() + 1; ++c)
            edge.push_back(grid.id_at(r, c));
        layer.push_back(std::move(edge));
    }
    return layer;
}

/// Grid columns as layer-2 edges.
inline Layer grid_column_layer(const DeltaGrid& grid) {
    Layer layer;
    for (int c = 1; c <= grid.n(); ++c) {
        Hyperedge edge;
        for (int r = 1; r + c <= grid.n() + 1; ++r)
            edge.push_back(grid.id_at(r, c));
        layer.push_back(std::move(edge));
    }
    return layer;
}

/// Staircase hypergraph of type (staircase(n), staircase(n), shape of
/// `filling`) whose third layer realizes the filling: the edge for column j
/// holds vertices whose beta values are exactly the entries of column j.
/// The filling needs content staircase(n) and no repeated entry within a
/// column; it does not have to be semistandard.
inline YoungHypergraph hypergraph_from_filling(int n, const Filling& filling) {
    const Partition rho = staircase(n);
    if (filling.shape().size() != rho.size())
        throw Error(ErrorCode::SizeMismatch, "filling of " + filling.shape().to_string() + " does not have " +
                                                 std::to_string(rho.size()) + " boxes");
    if (!has_content(filling, rho))
        throw Error(ErrorCode::BadShape, "filling content must be " + rho.to_string());
    if (!has_distinct_column_entries(filling))
        throw Error(ErrorCode::BadShape, "filling has a column with a repeated entry");

    const DeltaGrid grid(n);
    // Unused vertices per beta value, smallest id first.
    std::vector<std::vector<int>> pool(n + 1);
    for (auto it = grid.vertices().rbegin(); it != grid.vertices().rend(); ++it)
        pool[it->beta].push_back(it->id);

    Layer third;
    for (int j = 0; j < filling.num_columns(); ++j) {
        Hyperedge edge;
        for (int beta : filling.column(j)) {
            edge.push_back(pool[beta].back());
            pool[beta].pop_back();
        }
        std::sort(edge.begin(), edge.end());
        third.push_back(std::move(edge));
    }
    return {grid.size(), {rho, rho, filling.shape()}, {grid_row_layer(grid), grid_column_layer(grid), std::move(third)}};
}

/// Young hypergraph of type (staircase(n), staircase(n), nu) built from the
/// Gale-Ryser filling of nu with content staircase(n).
inline YoungHypergraph staircase_hypergraph(int n, const Partition& nu) {
    const Partition rho = staircase(n);
    if (nu.size() != rho.size())
        throw Error(ErrorCode::SizeMismatch,
                    nu.to_string() + " does not have " + std::to_string(rho.size()) + " boxes");
    auto filling = gale_ryser_filling(nu, rho);
    if (!filling)
        throw Error(ErrorCode::NotDominating, nu.to_string() + " does not dominate " + rho.to_string());
    return hypergraph_from_filling(n, *filling);
}

/// Sorted beta values of each third-layer edge.
inline std::vector<std::vector<int>> third_layer_betas(const YoungHypergraph& h, const DeltaGrid& grid) {
    std::vector<std::vector<int>> out;
    for (const auto& edge : h.layers[2]) {
        std::vector<int> betas;
        for (int v : edge)
            betas.push_back(grid.beta(v));
        std::sort(betas.begin(), betas.end());
        out.push_back(std::move(betas));
    }
    return out;
}

} // namespace saxl
