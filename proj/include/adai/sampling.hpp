#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "adai/problems.hpp"

namespace adai {

struct SamplingCounts {
    int interior_total = 131;
    int min_per_subdomain = 50;  // ignored by the 1D grid
    int per_interface = 1;
    int per_boundary_face = 1;

    static SamplingCounts defaults_for(const std::string& problem);
};

struct BoundarySet {
    int subdomain = 0;
    std::vector<Point> points;
    std::vector<double> values;
    std::vector<Point> normals;  // outward
};

struct InterfaceSet {
    int interface_index = 0;
    int second = 1;
    int first = 0;
    std::vector<Point> points;
    std::vector<Point> normals;
    std::vector<double> jump_u;
    std::vector<double> jump_flux;
};

/// Collocation points; fixed for the whole training run.
struct Batch {
    int dim = 1;
    std::vector<std::vector<Point>> interior;  // indexed by subdomain
    std::vector<BoundarySet> dirichlet;        // one set per subdomain touching the boundary
    std::vector<BoundarySet> neumann;
    std::vector<InterfaceSet> interfaces;

    std::size_t interior_size() const;
};

/// Interior points per subdomain: proportional to measure with a floor.
std::vector<int> allocate_interior(const ProblemSpec& problem, const SamplingCounts& counts);

/// 1D: uniform grid split by membership (grid points on interfaces or the boundary go to
/// those sets instead). 2D/3D: rejection sampling per subdomain. Deterministic in `seed`.
Batch build_batch(const ProblemSpec& problem, const SamplingCounts& counts, std::uint64_t seed);

/// Columns x[,y[,z]],role,id with 1-based subdomain / interface ids.
void write_batch_csv(std::ostream& out, const Batch& batch);

}  // namespace adai
