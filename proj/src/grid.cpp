#include "nlbs/grid.hpp"

namespace nlbs {

BoxGrid::BoxGrid(int n, double radius, double spacing)
    : n_(n), radius_(radius), spacing_(spacing) {
    if (n < 1 || n > 3) throw DegenerateInput("BoxGrid: n must be 1, 2 or 3");
    if (!(radius > 0.0) || !(spacing > 0.0)) throw DegenerateInput("BoxGrid: bad extents");
    const double ratio = radius / spacing;
    const double rounded = std::round(ratio);
    if (std::abs(ratio - rounded) > 1e-12 * std::max(1.0, ratio))
        throw DegenerateInput("BoxGrid: R/h must be integral");
    const int half = static_cast<int>(rounded);
    m_ = 2 * half + 1;
    size_ = 1;
    for (int a = 0; a < n_; ++a) size_ *= m_;
    // row-major: axis 0 slowest
    strides_ = {1, 0, 0};
    if (n_ == 2) strides_ = {m_, 1, 0};
    if (n_ == 3) strides_ = {static_cast<std::int64_t>(m_) * m_, m_, 1};
}

std::int64_t BoxGrid::origin_index() const {
    std::array<int, 3> mi{};
    for (int a = 0; a < n_; ++a) mi[a] = (m_ - 1) / 2;
    return flat_index(mi);
}

std::array<int, 3> BoxGrid::multi_index(std::int64_t flat) const {
    std::array<int, 3> mi{0, 0, 0};
    for (int a = 0; a < n_; ++a) {
        mi[a] = static_cast<int>(flat / strides_[a]);
        flat %= strides_[a];
    }
    return mi;
}

std::int64_t BoxGrid::flat_index(const std::array<int, 3>& mi) const {
    std::int64_t f = 0;
    for (int a = 0; a < n_; ++a) f += strides_[a] * mi[a];
    return f;
}

std::array<double, 3> BoxGrid::coords(std::int64_t flat) const {
    const auto mi = multi_index(flat);
    std::array<double, 3> x{0.0, 0.0, 0.0};
    for (int a = 0; a < n_; ++a) x[a] = coord(mi[a]);
    return x;
}

bool GridFn::all_finite() const {
    for (double v : values)
        if (!std::isfinite(v)) return false;
    return true;
}

}  // namespace nlbs
