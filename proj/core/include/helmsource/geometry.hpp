// Copyright 2026 The helmsource Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HELMSOURCE_GEOMETRY_HPP
#define HELMSOURCE_GEOMETRY_HPP

#include <cmath>
#include <complex>
#include <vector>

namespace helmsource {

using Complex = std::complex<double>;

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    Point2() = default;
    Point2(double x_, double y_) : x(x_), y(y_) {}

    Point2 operator+(const Point2& o) const { return {x + o.x, y + o.y}; }
    Point2 operator-(const Point2& o) const { return {x - o.x, y - o.y}; }
    Point2 operator*(double s) const { return {s * x, s * y}; }

    double dot(const Point2& o) const { return x * o.x + y * o.y; }
    double norm() const { return std::hypot(x, y); }
    double norm_sq() const { return x * x + y * y; }
};

inline double distance(const Point2& a, const Point2& b) { return (a - b).norm(); }

/// Axis-aligned rectangle [xmin, xmax] x [ymin, ymax].
struct Rect {
    double xmin = -4.0;
    double ymin = -4.0;
    double xmax = 4.0;
    double ymax = 4.0;

    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
    double area() const { return width() * height(); }

    bool contains(const Point2& p) const {
        return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
    }
    bool strictly_contains(const Point2& p) const {
        return p.x > xmin && p.x < xmax && p.y > ymin && p.y < ymax;
    }
    /// Radius of the smallest origin-centered disc containing the rectangle.
    double circumradius() const {
        const double cx = std::max(std::abs(xmin), std::abs(xmax));
        const double cy = std::max(std::abs(ymin), std::abs(ymax));
        return std::hypot(cx, cy);
    }
};

/// Dense complex matrix in row-major order. Rows index measurement angles,
/// columns index wave numbers throughout this library.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Complex>& data() { return data_; }
    const std::vector<Complex>& data() const { return data_; }

    bool same_shape(const ComplexMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : data_) m = std::max(m, std::abs(v));
        return m;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

}  // namespace helmsource

#endif  // HELMSOURCE_GEOMETRY_HPP
