#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "nlbs/errors.hpp"

namespace nlbs {

/// Tensor grid on [-R, R]^n with odd per-axis node count (origin is a node).
class BoxGrid {
public:
    BoxGrid() = default;
    BoxGrid(int n, double radius, double spacing);

    int n() const { return n_; }
    double radius() const { return radius_; }
    double spacing() const { return spacing_; }
    int nodes_per_axis() const { return m_; }
    std::int64_t size() const { return size_; }
    std::int64_t origin_index() const;

    std::array<int, 3> multi_index(std::int64_t flat) const;
    std::int64_t flat_index(const std::array<int, 3>& mi) const;
    std::array<double, 3> coords(std::int64_t flat) const;
    double coord(int axis_index_value) const {
        return -radius_ + spacing_ * axis_index_value;
    }
    /// flat index offset by one node along axis (caller checks bounds)
    std::int64_t stride(int axis) const { return strides_[axis]; }
    bool on_face(const std::array<int, 3>& mi, int axis) const {
        return mi[axis] == 0 || mi[axis] == m_ - 1;
    }
    bool on_any_face(const std::array<int, 3>& mi) const {
        for (int a = 0; a < n_; ++a)
            if (on_face(mi, a)) return true;
        return false;
    }

private:
    int n_ = 0;
    double radius_ = 0.0;
    double spacing_ = 0.0;
    int m_ = 0;
    std::int64_t size_ = 0;
    std::array<std::int64_t, 3> strides_{1, 0, 0};
};

/// Real-valued function sampled on a BoxGrid (flat row-major storage).
struct GridFn {
    BoxGrid grid;
    std::vector<double> values;

    GridFn() = default;
    explicit GridFn(const BoxGrid& g, double fill = 0.0)
        : grid(g), values(static_cast<std::size_t>(g.size()), fill) {}

    double& operator[](std::int64_t i) { return values[static_cast<std::size_t>(i)]; }
    double operator[](std::int64_t i) const { return values[static_cast<std::size_t>(i)]; }
    bool all_finite() const;
    double at_origin() const { return values[static_cast<std::size_t>(grid.origin_index())]; }
};

/// Boolean mask over a BoxGrid.
struct GridMask {
    BoxGrid grid;
    std::vector<std::uint8_t> values;

    GridMask() = default;
    explicit GridMask(const BoxGrid& g) : grid(g), values(static_cast<std::size_t>(g.size()), 0) {}
    bool operator[](std::int64_t i) const { return values[static_cast<std::size_t>(i)] != 0; }
    void set(std::int64_t i, bool v) { values[static_cast<std::size_t>(i)] = v ? 1 : 0; }
};

}  // namespace nlbs
