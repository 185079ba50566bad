#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "adai/common.hpp"

namespace adai {

/// sum_i sq[i] x_i^2 + lin[i] x_i + c. Every benchmark solution has this form.
struct Quadratic {
    Point sq{};
    Point lin{};
    double c = 0.0;

    double value(const Point& x) const;
    Point gradient(const Point& x) const;
    double laplacian(int dim) const;
};

struct Box {
    Point lo{};
    Point hi{};
};

/// One face of the rectangular domain: coordinate `axis` fixed at lo (side 0) or hi (side 1).
struct BoundaryFace {
    std::string name;
    int subdomain = 0;
    int axis = 0;
    int side = 0;
    Point outward_normal{};
    std::function<double(const Point&)> value;
};

/// Interface between a `second` subdomain (the inclusion) and a `first` one.
/// Jumps follow [[f]] = f_second - f_first and the normal points away from `second`.
struct InterfaceSpec {
    std::string name;
    int second = 1;
    int first = 0;
    std::function<std::vector<Point>(int count, std::uint64_t seed)> sample;
    std::function<Point(const Point&)> normal;
    /// Distance to the interface; zero on it.
    std::function<double(const Point&)> distance;
    std::function<double(const Point&)> jump_u;
    std::function<double(const Point&)> jump_flux;
};

/// Piecewise problem div(kappa_m grad u_m) = source_m in subdomain m (0-based indices).
struct ProblemSpec {
    std::string name;
    int dim = 1;
    int num_subdomains = 2;
    Box domain;
    std::vector<double> kappa;
    std::vector<double> source;
    std::function<int(const Point&)> membership;
    std::vector<Box> subdomain_bounds;  // proposal boxes for rejection sampling
    std::vector<double> measure;        // length / area / volume per subdomain
    std::vector<BoundaryFace> dirichlet;
    std::vector<BoundaryFace> neumann;
    std::vector<InterfaceSpec> interfaces;
    std::vector<Quadratic> exact;

    double analytical(int m, const Point& x) const { return exact.at(m).value(x); }
    Point analytical_grad(int m, const Point& x) const { return exact.at(m).gradient(x); }
    double analytical_laplacian(int m) const { return exact.at(m).laplacian(dim); }

    /// Exact solution of whichever subdomain contains x.
    double exact_at(const Point& x) const { return analytical(membership(x), x); }
};

/// Coefficients (c0, c1, c2) of u_m = c0 x^2 + c1 x + c2 for the 1D problem on [0, 1] with
/// equal-width layers, u(0) = u(1) = 0, continuous u and kappa u' at every interface.
std::vector<std::array<double, 3>> solve_1d_coefficients(const std::vector<double>& kappas);

/// Five layers on [0, 1], interfaces at 0.2, 0.4, 0.6, 0.8.
ProblemSpec problem_1d();

struct Rect {
    double x0 = 0.0;
    double y0 = 0.0;
    double x1 = 0.0;
    double y1 = 0.0;
};

struct Letter {
    std::string name;
    std::vector<Rect> rects;
};

/// Axis-aligned letter inclusions of the 2D benchmark.
struct LetterLayout {
    int version = 1;
    std::vector<Letter> letters;

    static LetterLayout default_layout();
    /// Throws ConfigError on overlap, out-of-bounds or wrong letter count.
    void validate() const;
};

nlohmann::json layout_to_json(const LetterLayout& layout);
LetterLayout layout_from_json(const nlohmann::json& j);
/// Empty path gives the default layout.
LetterLayout read_layout_file(const std::string& path);

/// An exposed edge of a letter; `fixed` is the coordinate along `axis`.
struct EdgeSegment {
    int axis = 0;
    double fixed = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    Point normal{};

    double length() const { return hi - lo; }
};

/// Parts of the rectangle edges that border the background (shared edges removed).
std::vector<EdgeSegment> letter_boundary(const Letter& letter);

/// [0, 1.7] x [0, 1] with four letter inclusions.
ProblemSpec problem_2d_letters(const LetterLayout& layout = LetterLayout::default_layout());

struct Sphere {
    Point center{};
    double radius = 0.3;
};

/// Sphere m = 0..7 holds subdomain m + 1.
std::vector<Sphere> benchmark_spheres();

/// [-1, 1]^3 with eight spherical inclusions.
ProblemSpec problem_3d_spheres();

/// Level set min_k |x - c_k| - r.
double sphere_level_set(const Point& x);

ProblemSpec make_problem(const std::string& name,
                         const LetterLayout& layout = LetterLayout::default_layout());

}  // namespace adai
