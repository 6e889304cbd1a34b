#include "roadgeom/segment_grid.hpp"

#include <algorithm>
#include <cmath>

namespace roadgeom {

SegmentGrid::SegmentGrid(std::vector<Segment> segments) : segments_(std::move(segments)) {
    if (segments_.empty()) {
        columns_ = rows_ = 1;
        offsets_.assign(2, 0);
        return;
    }
    Point2d lo = segments_.front().a;
    Point2d hi = lo;
    double total_length = 0.0;
    for (const Segment& s : segments_) {
        lo = lo.cwiseMin(s.a).cwiseMin(s.b);
        hi = hi.cwiseMax(s.a).cwiseMax(s.b);
        total_length += distance(s.a, s.b);
    }
    const Point2d extent = hi - lo;
    const double scale = std::max({extent.x(), extent.y(), 1e-300});
    const double m = static_cast<double>(segments_.size());
    const double mean = total_length / m;
    const double area = std::max(extent.x(), scale * 1e-9) * std::max(extent.y(), scale * 1e-9);
    cell_ = std::max(mean, std::sqrt(area / (4.0 * m)));
    if (!(cell_ > 0.0)) cell_ = scale > 1e-300 ? scale : 1.0;
    pad_ = 1e-9 * std::max(scale, std::max(std::abs(lo.x()) + std::abs(lo.y()), std::abs(hi.x()) + std::abs(hi.y())));
    origin_ = lo - Point2d::Constant(pad_);
    constexpr double kMaxCells = double(1 << 22);
    columns_ = static_cast<std::size_t>(std::min(kMaxCells, std::floor((extent.x() + 2 * pad_) / cell_) + 1));
    rows_ = static_cast<std::size_t>(std::min(kMaxCells, std::floor((extent.y() + 2 * pad_) / cell_) + 1));
    while (static_cast<double>(columns_) * static_cast<double>(rows_) > 4.0 * m + 16.0) {
        cell_ *= 1.5;
        columns_ = static_cast<std::size_t>(std::floor((extent.x() + 2 * pad_) / cell_) + 1);
        rows_ = static_cast<std::size_t>(std::floor((extent.y() + 2 * pad_) / cell_) + 1);
    }

    offsets_.assign(num_cells() + 1, 0);
    for (const Segment& s : segments_) {
        for_each_cell(s, [&](std::size_t c, std::size_t r) { ++offsets_[r * columns_ + c + 1]; });
    }
    for (std::size_t i = 0; i < num_cells(); ++i) offsets_[i + 1] += offsets_[i];
    items_.resize(offsets_.back());
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (std::uint32_t id = 0; id < segments_.size(); ++id) {
        for_each_cell(segments_[id], [&](std::size_t c, std::size_t r) {
            items_[cursor[r * columns_ + c]++] = id;
        });
    }
}

std::int64_t SegmentGrid::column_of(double x) const {
    const auto c = static_cast<std::int64_t>(std::floor((x - origin_.x()) / cell_));
    return std::clamp<std::int64_t>(c, 0, static_cast<std::int64_t>(columns_) - 1);
}

std::int64_t SegmentGrid::row_of(double y) const {
    const auto r = static_cast<std::int64_t>(std::floor((y - origin_.y()) / cell_));
    return std::clamp<std::int64_t>(r, 0, static_cast<std::int64_t>(rows_) - 1);
}

template <typename Visit>
void SegmentGrid::for_each_cell(const Segment& s, Visit&& visit) const {
    const double xmin = std::min(s.a.x(), s.b.x());
    const double xmax = std::max(s.a.x(), s.b.x());
    const std::int64_t c0 = column_of(xmin - pad_);
    const std::int64_t c1 = column_of(xmax + pad_);
    const double dx = s.b.x() - s.a.x();
    for (std::int64_t c = c0; c <= c1; ++c) {
        const double strip_lo = std::max(xmin, origin_.x() + static_cast<double>(c) * cell_ - pad_);
        const double strip_hi = std::min(xmax, origin_.x() + static_cast<double>(c + 1) * cell_ + pad_);
        double ylo;
        double yhi;
        if (dx == 0.0 || strip_lo > strip_hi) {
            ylo = std::min(s.a.y(), s.b.y());
            yhi = std::max(s.a.y(), s.b.y());
        } else {
            const double slope = (s.b.y() - s.a.y()) / dx;
            const double y0 = s.a.y() + (strip_lo - s.a.x()) * slope;
            const double y1 = s.a.y() + (strip_hi - s.a.x()) * slope;
            ylo = std::max(std::min(y0, y1), std::min(s.a.y(), s.b.y()));
            yhi = std::min(std::max(y0, y1), std::max(s.a.y(), s.b.y()));
        }
        const std::int64_t r0 = row_of(ylo - pad_);
        const std::int64_t r1 = row_of(yhi + pad_);
        for (std::int64_t r = r0; r <= r1; ++r) visit(static_cast<std::size_t>(c), static_cast<std::size_t>(r));
    }
}

}  // namespace roadgeom
