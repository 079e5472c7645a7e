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

#ifndef HELMSOURCE_SOURCES_HPP
#define HELMSOURCE_SOURCES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "helmsource/geometry.hpp"

namespace helmsource {

enum class SourceKind { point, gaussian };

enum class PointSourceType { monopole, dipole };

/// A point source: either a monopole with scalar intensity lambda or a
/// dipole with vector intensity xi. The type is declared explicitly and is
/// never inferred from which intensity happens to be nonzero; samplers hold
/// it fixed.
struct PointSource {
    Point2 z;
    PointSourceType type = PointSourceType::monopole;
    double lambda = 0.0;  // active for monopoles
    Point2 xi;            // active for dipoles
};

/// A Gaussian blob lambda * exp(-xi |x - z|^2) with decay rate xi > 0.
struct GaussianSource {
    Point2 z;
    double lambda = 0.0;
    double xi = 1.0;
};

/// A homogeneous collection of sources supported inside the rectangle
/// `domain`. Exactly one of the two source lists is populated according to
/// `kind`; mixing families is rejected by validate().
struct SourceConfiguration {
    SourceKind kind = SourceKind::point;
    std::vector<PointSource> point_sources;
    std::vector<GaussianSource> gaussian_sources;
    Rect domain;

    std::size_t count() const {
        return kind == SourceKind::point ? point_sources.size() : gaussian_sources.size();
    }
};

/// Slot layout of the flattened unknown vector: all lambdas first, then all
/// xi components, then all locations. Point sources occupy 5 slots each
/// (lambda, xi_x, xi_y, z_x, z_y for a total of 5J), Gaussian sources 4
/// (lambda, xi, z_x, z_y; 4J). The point-source type mask is part of the
/// layout so inactive intensity slots are identifiable.
struct ParameterLayout {
    SourceKind kind = SourceKind::point;
    std::size_t source_count = 0;
    std::vector<PointSourceType> type_mask;  // size J for point sources, empty otherwise

    std::size_t size() const {
        return (kind == SourceKind::point ? 5 : 4) * source_count;
    }
    std::size_t xi_components() const { return kind == SourceKind::point ? 2 : 1; }

    std::size_t lambda_slot(std::size_t j) const { return j; }
    std::size_t xi_slot(std::size_t j, std::size_t comp = 0) const {
        return source_count + j * xi_components() + comp;
    }
    std::size_t z_slot(std::size_t j, std::size_t comp) const {
        return source_count * (1 + xi_components()) + 2 * j + comp;
    }

    /// True when slot i is an intensity slot switched off by the type mask.
    bool slot_inactive(std::size_t i) const;

    /// Column names in slot order: lambda_1.., xi_1_x/xi_1.., z_1_x, z_1_y...
    std::vector<std::string> coordinate_names() const;

    bool operator==(const ParameterLayout&) const = default;
};

struct ParameterVector {
    ParameterLayout layout;
    std::vector<double> values;

    double& operator[](std::size_t i) { return values[i]; }
    double operator[](std::size_t i) const { return values[i]; }
};

/// Collects every violated invariant; an empty list means the configuration
/// is valid. Never throws.
std::vector<std::string> validate(const SourceConfiguration& config);

/// Sum of Gaussian blobs at x. Point configurations are distributions and
/// have no pointwise density; asking for one throws std::invalid_argument.
double density_at(const SourceConfiguration& config, const Point2& x);

ParameterLayout layout_of(const SourceConfiguration& config);

/// Flatten a configuration; inactive intensity slots are written as zero.
ParameterVector pack(const SourceConfiguration& config);

/// Rebuild a configuration from a flattened vector. Throws
/// std::invalid_argument on a size mismatch or when a point-source vector
/// carries nonzero values in slots the type mask declares inactive.
SourceConfiguration unpack(const ParameterVector& phi, const Rect& domain);

}  // namespace helmsource

#endif  // HELMSOURCE_SOURCES_HPP
