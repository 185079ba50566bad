#include "adai/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "adai/csv.hpp"

namespace adai {

SamplingCounts SamplingCounts::defaults_for(const std::string& problem) {
    if (problem == "letters2d") {
        return {3679, 50, 100, 60};
    }
    if (problem == "spheres3d") {
        return {3336, 50, 200, 300};
    }
    return {131, 50, 1, 1};
}

std::size_t Batch::interior_size() const {
    std::size_t n = 0;
    for (const auto& pts : interior) {
        n += pts.size();
    }
    return n;
}

namespace {

enum class Stream : std::uint64_t { Interior = 1, Boundary = 2, Interface = 3 };

std::mt19937_64 make_rng(std::uint64_t seed, Stream stream, std::uint64_t index) {
    std::seed_seq seq{seed, static_cast<std::uint64_t>(stream), index};
    return std::mt19937_64(seq);
}

std::vector<std::vector<Point>> grid_interior_1d(const ProblemSpec& problem, int count) {
    if (count < 2) {
        throw ConfigError("1D interior grid needs at least 2 points");
    }
    std::vector<std::vector<Point>> interior(static_cast<std::size_t>(problem.num_subdomains));
    const double lo = problem.domain.lo[0];
    const double hi = problem.domain.hi[0];
    for (int j = 0; j < count; ++j) {
        const Point x{lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(count - 1),
                      0.0, 0.0};
        if (x[0] == lo || x[0] == hi) {
            continue;
        }
        const bool on_interface =
            std::any_of(problem.interfaces.begin(), problem.interfaces.end(),
                        [&](const InterfaceSpec& iface) { return iface.distance(x) == 0.0; });
        if (on_interface) {
            continue;
        }
        interior[static_cast<std::size_t>(problem.membership(x))].push_back(x);
    }
    return interior;
}

std::vector<Point> rejection_sample(const ProblemSpec& problem, int m, int count,
                                    std::uint64_t seed) {
    auto rng = make_rng(seed, Stream::Interior, static_cast<std::uint64_t>(m));
    const Box& box = problem.subdomain_bounds.at(static_cast<std::size_t>(m));
    std::array<std::uniform_real_distribution<double>, 3> dist;
    for (std::size_t i = 0; i < 3; ++i) {
        dist[i] = std::uniform_real_distribution<double>(box.lo[i], std::max(box.lo[i], box.hi[i]));
    }
    const long long max_draws = 1000LL * count + 1000000LL;
    std::vector<Point> points;
    points.reserve(static_cast<std::size_t>(count));
    long long draws = 0;
    while (static_cast<int>(points.size()) < count) {
        if (++draws > max_draws) {
            throw std::runtime_error("rejection sampling could not fill subdomain " +
                                     std::to_string(m + 1) + " after " +
                                     std::to_string(max_draws) + " draws");
        }
        Point x{};
        for (int i = 0; i < problem.dim; ++i) {
            x[static_cast<std::size_t>(i)] = dist[static_cast<std::size_t>(i)](rng);
        }
        if (problem.membership(x) == m) {
            points.push_back(x);
        }
    }
    return points;
}

std::vector<BoundarySet> sample_faces(const ProblemSpec& problem,
                                      const std::vector<BoundaryFace>& faces, int per_face,
                                      std::uint64_t seed, std::uint64_t stream_offset) {
    std::vector<BoundarySet> sets;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const auto& face = faces[f];
        auto it = std::find_if(sets.begin(), sets.end(),
                               [&](const BoundarySet& s) { return s.subdomain == face.subdomain; });
        if (it == sets.end()) {
            sets.push_back({face.subdomain, {}, {}, {}});
            it = sets.end() - 1;
        }
        auto rng = make_rng(seed, Stream::Boundary, stream_offset + f);
        const auto axis = static_cast<std::size_t>(face.axis);
        for (int k = 0; k < per_face; ++k) {
            Point x{};
            for (int i = 0; i < problem.dim; ++i) {
                const auto ii = static_cast<std::size_t>(i);
                if (ii == axis) {
                    continue;
                }
                std::uniform_real_distribution<double> d(problem.domain.lo[ii], problem.domain.hi[ii]);
                x[ii] = d(rng);
            }
            x[axis] = face.side == 0 ? problem.domain.lo[axis] : problem.domain.hi[axis];
            it->points.push_back(x);
            it->values.push_back(face.value(x));
            it->normals.push_back(face.outward_normal);
        }
    }
    return sets;
}

}  // namespace

std::vector<int> allocate_interior(const ProblemSpec& problem, const SamplingCounts& counts) {
    const int m_count = problem.num_subdomains;
    const int floor_count = counts.min_per_subdomain;
    if (counts.interior_total < floor_count * m_count) {
        throw ConfigError("interior_total " + std::to_string(counts.interior_total) +
                          " cannot give every one of " + std::to_string(m_count) +
                          " subdomains " + std::to_string(floor_count) + " points");
    }
    const double total_measure =
        std::accumulate(problem.measure.begin(), problem.measure.end(), 0.0);
    std::vector<int> alloc(static_cast<std::size_t>(m_count));
    std::vector<double> remainder(static_cast<std::size_t>(m_count));
    for (std::size_t m = 0; m < alloc.size(); ++m) {
        const double raw = counts.interior_total * problem.measure[m] / total_measure;
        alloc[m] = std::max(floor_count, static_cast<int>(std::floor(raw)));
        remainder[m] = raw - std::floor(raw);
    }
    int missing = counts.interior_total - std::accumulate(alloc.begin(), alloc.end(), 0);
    std::vector<std::size_t> order(alloc.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
    for (std::size_t k = 0; missing > 0; k = (k + 1) % order.size()) {
        ++alloc[order[k]];
        --missing;
    }
    // Floors pushed the sum over the target: trim the largest allocations.
    while (missing < 0) {
        auto largest = std::max_element(alloc.begin(), alloc.end());
        --*largest;
        ++missing;
    }
    return alloc;
}

Batch build_batch(const ProblemSpec& problem, const SamplingCounts& counts, std::uint64_t seed) {
    if (counts.interior_total <= 0 || counts.per_interface <= 0 || counts.per_boundary_face <= 0) {
        throw ConfigError("sampling counts must be positive");
    }
    Batch batch;
    batch.dim = problem.dim;
    if (problem.dim == 1) {
        batch.interior = grid_interior_1d(problem, counts.interior_total);
    } else {
        const auto alloc = allocate_interior(problem, counts);
        for (int m = 0; m < problem.num_subdomains; ++m) {
            batch.interior.push_back(
                rejection_sample(problem, m, alloc[static_cast<std::size_t>(m)], seed));
        }
    }
    batch.dirichlet = sample_faces(problem, problem.dirichlet, counts.per_boundary_face, seed, 0);
    batch.neumann = sample_faces(problem, problem.neumann, counts.per_boundary_face, seed, 1000);
    for (std::size_t k = 0; k < problem.interfaces.size(); ++k) {
        const auto& iface = problem.interfaces[k];
        InterfaceSet set;
        set.interface_index = static_cast<int>(k);
        set.second = iface.second;
        set.first = iface.first;
        std::seed_seq seq{seed, static_cast<std::uint64_t>(Stream::Interface),
                          static_cast<std::uint64_t>(k)};
        std::array<std::uint64_t, 1> derived{};
        seq.generate(derived.begin(), derived.end());
        set.points = iface.sample(counts.per_interface, derived[0]);
        for (const auto& x : set.points) {
            set.normals.push_back(iface.normal(x));
            set.jump_u.push_back(iface.jump_u(x));
            set.jump_flux.push_back(iface.jump_flux(x));
        }
        batch.interfaces.push_back(std::move(set));
    }
    return batch;
}

void write_batch_csv(std::ostream& out, const Batch& batch) {
    static constexpr const char* kAxes[] = {"x", "y", "z"};
    for (int i = 0; i < batch.dim; ++i) {
        out << kAxes[i] << ',';
    }
    out << "role,id\n";
    auto row = [&](const Point& x, const char* role, int id) {
        for (int i = 0; i < batch.dim; ++i) {
            out << format_real(x[static_cast<std::size_t>(i)]) << ',';
        }
        out << role << ',' << id << '\n';
    };
    for (std::size_t m = 0; m < batch.interior.size(); ++m) {
        for (const auto& x : batch.interior[m]) {
            row(x, "interior", static_cast<int>(m) + 1);
        }
    }
    for (const auto& set : batch.dirichlet) {
        for (const auto& x : set.points) {
            row(x, "dirichlet", set.subdomain + 1);
        }
    }
    for (const auto& set : batch.neumann) {
        for (const auto& x : set.points) {
            row(x, "neumann", set.subdomain + 1);
        }
    }
    for (const auto& set : batch.interfaces) {
        for (const auto& x : set.points) {
            row(x, "interface", set.interface_index + 1);
        }
    }
}

}  // namespace adai
