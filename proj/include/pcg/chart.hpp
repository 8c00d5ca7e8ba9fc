#ifndef PCG_CHART_HPP
#define PCG_CHART_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "pcg/errors.hpp"
#include "pcg/rational.hpp"

namespace pcg {

/// Coordinate chart of odd dimension 2n+1 with named coordinates.
class Chart {
public:
    static std::shared_ptr<const Chart> create(std::vector<std::string> coord_names) {
        const std::size_t dim = coord_names.size();
        if (dim < 3 || dim % 2 == 0)
            fail(ErrorKind::ShapeMismatch, "chart dimension must be odd and >= 3, got " + std::to_string(dim));
        std::set<std::string> seen;
        for (const auto& name : coord_names) {
            if (name.empty()) fail(ErrorKind::ShapeMismatch, "empty coordinate name");
            if (!seen.insert(name).second)
                fail(ErrorKind::ShapeMismatch, "duplicate coordinate name '" + name + "'");
        }
        return std::shared_ptr<const Chart>(new Chart(std::move(coord_names)));
    }

    std::size_t dim() const { return coords_.size(); }
    std::size_t n() const { return (dim() - 1) / 2; }
    const std::vector<std::string>& coord_names() const { return coords_; }
    const std::string& coord_name(std::size_t i) const { return coords_.at(i); }

    std::size_t index_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) fail(ErrorKind::UnknownIdentifier, "unknown coordinate '" + name + "'");
        return it->second;
    }

    bool has_coord(const std::string& name) const { return index_.count(name) != 0; }

    bool same_as(const Chart& o) const { return coords_ == o.coords_; }

private:
    explicit Chart(std::vector<std::string> coords) : coords_(std::move(coords)) {
        for (std::size_t i = 0; i < coords_.size(); ++i) index_[coords_[i]] = i;
    }

    std::vector<std::string> coords_;
    std::map<std::string, std::size_t> index_;
};

using ChartPtr = std::shared_ptr<const Chart>;

inline void require_same_chart(const ChartPtr& a, const ChartPtr& b) {
    if (!a || !b || !a->same_as(*b))
        fail(ErrorKind::InternalInconsistency, "operands live on different charts");
}

/// Exact rational point of a chart; every coordinate assigned exactly once.
class Point {
public:
    Point(ChartPtr chart, std::vector<Rational> values) : chart_(std::move(chart)), values_(std::move(values)) {
        if (values_.size() != chart_->dim())
            fail(ErrorKind::ShapeMismatch, "point has wrong number of coordinates");
    }

    static Point from_assignments(const ChartPtr& chart, const std::map<std::string, Rational>& assignments) {
        if (assignments.size() != chart->dim())
            fail(ErrorKind::ShapeMismatch, "point must assign every chart coordinate exactly once");
        std::vector<Rational> values(chart->dim());
        for (const auto& [name, value] : assignments) values[chart->index_of(name)] = value;
        return Point(chart, std::move(values));
    }

    static Point origin(const ChartPtr& chart) {
        return Point(chart, std::vector<Rational>(chart->dim(), Rational(0)));
    }

    const ChartPtr& chart() const { return chart_; }
    const std::vector<Rational>& values() const { return values_; }
    const Rational& operator[](std::size_t i) const { return values_.at(i); }

private:
    ChartPtr chart_;
    std::vector<Rational> values_;
};

} // namespace pcg

#endif
