#pragma once

#include "roadgeom/geometry.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace roadgeom {

/// Uniform grid over segments. Each segment is registered in every cell its (slightly padded)
/// extent passes through, so any point of a segment is found in the cell that contains it.
class SegmentGrid {
public:
    struct Segment {
        Point2d a;
        Point2d b;
    };

    SegmentGrid() = default;
    explicit SegmentGrid(std::vector<Segment> segments);

    std::size_t columns() const { return columns_; }
    std::size_t rows() const { return rows_; }
    std::size_t num_cells() const { return columns_ * rows_; }
    double cell_size() const { return cell_; }
    const Point2d& origin() const { return origin_; }
    const std::vector<Segment>& segments() const { return segments_; }

    std::span<const std::uint32_t> cell(std::size_t column, std::size_t row) const {
        const std::size_t c = row * columns_ + column;
        return {items_.data() + offsets_[c], items_.data() + offsets_[c + 1]};
    }
    std::span<const std::uint32_t> cell(std::size_t index) const {
        return {items_.data() + offsets_[index], items_.data() + offsets_[index + 1]};
    }

    /// Column / row of a coordinate, clamped into the grid.
    std::int64_t column_of(double x) const;
    std::int64_t row_of(double y) const;

private:
    template <typename Visit>
    void for_each_cell(const Segment& s, Visit&& visit) const;

    std::vector<Segment> segments_;
    Point2d origin_ = Point2d::Zero();
    double cell_ = 1.0;
    double pad_ = 0.0;
    std::size_t columns_ = 0;
    std::size_t rows_ = 0;
    std::vector<std::size_t> offsets_;
    std::vector<std::uint32_t> items_;
};

}  // namespace roadgeom
