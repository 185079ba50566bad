#include "adai/problems.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/Dense>

namespace adai {

double Quadratic::value(const Point& x) const {
    double v = c;
    for (std::size_t i = 0; i < 3; ++i) {
        v += (sq[i] * x[i] + lin[i]) * x[i];
    }
    return v;
}

Point Quadratic::gradient(const Point& x) const {
    Point g{};
    for (std::size_t i = 0; i < 3; ++i) {
        g[i] = 2.0 * sq[i] * x[i] + lin[i];
    }
    return g;
}

double Quadratic::laplacian(int dim) const {
    double lap = 0.0;
    for (int i = 0; i < dim; ++i) {
        lap += 2.0 * sq[static_cast<std::size_t>(i)];
    }
    return lap;
}

namespace {

double dot(const Point& a, const Point& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// p and q of an interface read off the exact piecewise solution.
void attach_exact_jumps(const ProblemSpec& problem, InterfaceSpec& iface) {
    const Quadratic second = problem.exact.at(iface.second);
    const Quadratic first = problem.exact.at(iface.first);
    const double k_second = problem.kappa.at(iface.second);
    const double k_first = problem.kappa.at(iface.first);
    iface.jump_u = [second, first](const Point& x) { return second.value(x) - first.value(x); };
    iface.jump_flux = [second, first, k_second, k_first, normal = iface.normal](const Point& x) {
        const Point n = normal(x);
        return k_second * dot(second.gradient(x), n) - k_first * dot(first.gradient(x), n);
    };
}

std::vector<BoundaryFace> box_faces(const ProblemSpec& problem, int subdomain) {
    static constexpr const char* kAxisNames[] = {"x", "y", "z"};
    std::vector<BoundaryFace> faces;
    const Quadratic exact = problem.exact.at(subdomain);
    for (int axis = 0; axis < problem.dim; ++axis) {
        for (int side = 0; side < 2; ++side) {
            BoundaryFace face;
            const double coord = side == 0 ? problem.domain.lo[axis] : problem.domain.hi[axis];
            std::ostringstream name;
            name << kAxisNames[axis] << "=" << coord;
            face.name = name.str();
            face.subdomain = subdomain;
            face.axis = axis;
            face.side = side;
            face.outward_normal[static_cast<std::size_t>(axis)] = side == 0 ? -1.0 : 1.0;
            face.value = [exact](const Point& x) { return exact.value(x); };
            faces.push_back(std::move(face));
        }
    }
    return faces;
}

}  // namespace

std::vector<std::array<double, 3>> solve_1d_coefficients(const std::vector<double>& kappas) {
    constexpr double source = -1.0;
    const int layers = static_cast<int>(kappas.size());
    if (layers < 1) {
        throw std::invalid_argument("solve_1d_coefficients: need at least one layer");
    }
    std::vector<std::array<double, 3>> coeffs(kappas.size());
    for (std::size_t m = 0; m < kappas.size(); ++m) {
        if (!(kappas[m] > 0.0)) {
            throw std::invalid_argument("solve_1d_coefficients: kappa must be positive");
        }
        coeffs[m][0] = source / (2.0 * kappas[m]);
    }

    // Unknowns (c1_m, c2_m) at columns (2m, 2m + 1).
    const int n = 2 * layers;
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    a(0, 1) = 1.0;  // u(0) = 0
    a(1, n - 2) = 1.0;  // u(1) = 0
    a(1, n - 1) = 1.0;
    rhs(1) = -coeffs.back()[0];
    int row = 2;
    for (int k = 1; k < layers; ++k) {
        const double x = static_cast<double>(k) / static_cast<double>(layers);
        const auto left = static_cast<std::size_t>(k - 1);
        const auto right = static_cast<std::size_t>(k);
        a(row, 2 * (k - 1)) = x;
        a(row, 2 * (k - 1) + 1) = 1.0;
        a(row, 2 * k) = -x;
        a(row, 2 * k + 1) = -1.0;
        rhs(row) = (coeffs[right][0] - coeffs[left][0]) * x * x;
        ++row;
        a(row, 2 * (k - 1)) = kappas[left];
        a(row, 2 * k) = -kappas[right];
        rhs(row) = 2.0 * x * (kappas[right] * coeffs[right][0] - kappas[left] * coeffs[left][0]);
        ++row;
    }
    const Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    if (!lu.isInvertible()) {
        throw std::runtime_error("solve_1d_coefficients: singular interface system");
    }
    const Eigen::VectorXd sol = lu.solve(rhs);
    for (int m = 0; m < layers; ++m) {
        coeffs[static_cast<std::size_t>(m)][1] = sol(2 * m);
        coeffs[static_cast<std::size_t>(m)][2] = sol(2 * m + 1);
    }
    return coeffs;
}

ProblemSpec problem_1d() {
    ProblemSpec p;
    p.name = "poisson1d";
    p.dim = 1;
    p.num_subdomains = 5;
    p.domain = {{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}};
    p.kappa = {1.0, 0.25, 0.9, 0.1, 0.8};
    p.source.assign(5, -1.0);
    static constexpr std::array<double, 4> kCuts{0.2, 0.4, 0.6, 0.8};
    p.membership = [](const Point& x) {
        int m = 0;
        while (m < 4 && x[0] >= kCuts[static_cast<std::size_t>(m)]) {
            ++m;
        }
        return m;
    };
    for (int m = 0; m < 5; ++m) {
        const double lo = m == 0 ? 0.0 : kCuts[static_cast<std::size_t>(m - 1)];
        const double hi = m == 4 ? 1.0 : kCuts[static_cast<std::size_t>(m)];
        p.subdomain_bounds.push_back({{lo, 0.0, 0.0}, {hi, 0.0, 0.0}});
        p.measure.push_back(hi - lo);
    }
    for (const auto& c : solve_1d_coefficients(p.kappa)) {
        Quadratic q;
        q.sq[0] = c[0];
        q.lin[0] = c[1];
        q.c = c[2];
        p.exact.push_back(q);
    }
    auto zero = [](const Point&) { return 0.0; };
    p.dirichlet.push_back({"x=0", 0, 0, 0, {-1.0, 0.0, 0.0}, zero});
    p.dirichlet.push_back({"x=1", 4, 0, 1, {1.0, 0.0, 0.0}, zero});
    for (int k = 0; k < 4; ++k) {
        const double cut = kCuts[static_cast<std::size_t>(k)];
        InterfaceSpec iface;
        iface.name = "x=" + std::to_string(cut).substr(0, 3);
        iface.second = k + 1;
        iface.first = k;
        iface.sample = [cut](int count, std::uint64_t) {
            return std::vector<Point>(static_cast<std::size_t>(count), Point{cut, 0.0, 0.0});
        };
        iface.normal = [](const Point&) { return Point{-1.0, 0.0, 0.0}; };
        iface.distance = [cut](const Point& x) { return std::abs(x[0] - cut); };
        // Perfect contact: no jump in u or in the flux.
        iface.jump_u = zero;
        iface.jump_flux = zero;
        p.interfaces.push_back(std::move(iface));
    }
    return p;
}

LetterLayout LetterLayout::default_layout() {
    LetterLayout layout;
    layout.version = 1;
    layout.letters = {
        {"I", {{0.20, 0.25, 0.30, 0.75}}},
        {"I", {{0.45, 0.25, 0.55, 0.75}}},
        {"T", {{0.70, 0.65, 1.00, 0.75}, {0.80, 0.25, 0.90, 0.65}}},
        {"M",
         {{1.10, 0.25, 1.18, 0.75},
          {1.42, 0.25, 1.50, 0.75},
          {1.18, 0.55, 1.30, 0.70},
          {1.30, 0.45, 1.42, 0.60}}},
    };
    return layout;
}

namespace {

bool closed_overlap(const Rect& a, const Rect& b) {
    return a.x0 <= b.x1 && b.x0 <= a.x1 && a.y0 <= b.y1 && b.y0 <= a.y1;
}

bool open_overlap(const Rect& a, const Rect& b) {
    return a.x0 < b.x1 && b.x0 < a.x1 && a.y0 < b.y1 && b.y0 < a.y1;
}

bool in_rect(const Rect& r, const Point& x) {
    return x[0] >= r.x0 && x[0] <= r.x1 && x[1] >= r.y0 && x[1] <= r.y1;
}

constexpr double kLettersWidth = 1.7;
constexpr double kLettersHeight = 1.0;

}  // namespace

void LetterLayout::validate() const {
    if (letters.size() != 4) {
        throw ConfigError("letter layout must define exactly 4 letters (got " +
                          std::to_string(letters.size()) + ")");
    }
    for (std::size_t l = 0; l < letters.size(); ++l) {
        const auto& rects = letters[l].rects;
        if (rects.empty()) {
            throw ConfigError("letter " + std::to_string(l + 1) + " has no rectangles");
        }
        for (std::size_t i = 0; i < rects.size(); ++i) {
            const Rect& r = rects[i];
            if (!(r.x0 < r.x1 && r.y0 < r.y1)) {
                throw ConfigError("letter " + std::to_string(l + 1) + ": degenerate rectangle");
            }
            if (!(r.x0 > 0.0 && r.x1 < kLettersWidth && r.y0 > 0.0 && r.y1 < kLettersHeight)) {
                throw ConfigError("letter " + std::to_string(l + 1) +
                                  ": rectangle must lie strictly inside [0,1.7]x[0,1]");
            }
            for (std::size_t j = 0; j < i; ++j) {
                if (open_overlap(r, rects[j])) {
                    throw ConfigError("letter " + std::to_string(l + 1) +
                                      ": rectangles overlap (they may only share edges)");
                }
            }
        }
        for (std::size_t other = 0; other < l; ++other) {
            for (const Rect& a : rects) {
                for (const Rect& b : letters[other].rects) {
                    if (closed_overlap(a, b)) {
                        throw ConfigError("letters " + std::to_string(other + 1) + " and " +
                                          std::to_string(l + 1) + " touch or overlap");
                    }
                }
            }
        }
    }
}

nlohmann::json layout_to_json(const LetterLayout& layout) {
    nlohmann::json letters = nlohmann::json::array();
    for (const auto& letter : layout.letters) {
        nlohmann::json rects = nlohmann::json::array();
        for (const auto& r : letter.rects) {
            rects.push_back({r.x0, r.y0, r.x1, r.y1});
        }
        letters.push_back({{"name", letter.name}, {"rects", rects}});
    }
    return {{"version", layout.version}, {"domain", {0.0, 0.0, kLettersWidth, kLettersHeight}},
            {"letters", letters}};
}

LetterLayout read_layout_file(const std::string& path) {
    if (path.empty()) {
        return LetterLayout::default_layout();
    }
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("layout_file: cannot open '" + path + "'");
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("layout_file: " + std::string(e.what()));
    }
    return layout_from_json(j);
}

LetterLayout layout_from_json(const nlohmann::json& j) {
    LetterLayout layout;
    try {
        layout.version = j.value("version", 1);
        for (const auto& letter : j.at("letters")) {
            Letter l;
            l.name = letter.value("name", "");
            for (const auto& r : letter.at("rects")) {
                const auto v = r.get<std::vector<double>>();
                if (v.size() != 4) {
                    throw ConfigError("rectangles are [x0, y0, x1, y1]");
                }
                l.rects.push_back({v[0], v[1], v[2], v[3]});
            }
            layout.letters.push_back(std::move(l));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed letter layout: ") + e.what());
    }
    layout.validate();
    return layout;
}

std::vector<EdgeSegment> letter_boundary(const Letter& letter) {
    std::vector<EdgeSegment> segments;
    const auto& rects = letter.rects;
    for (std::size_t i = 0; i < rects.size(); ++i) {
        const Rect& r = rects[i];
        struct Edge {
            int axis;
            double fixed, lo, hi;
            Point normal;
        };
        const std::array<Edge, 4> edges{{
            {0, r.x0, r.y0, r.y1, {-1.0, 0.0, 0.0}},
            {0, r.x1, r.y0, r.y1, {1.0, 0.0, 0.0}},
            {1, r.y0, r.x0, r.x1, {0.0, -1.0, 0.0}},
            {1, r.y1, r.x0, r.x1, {0.0, 1.0, 0.0}},
        }};
        for (const Edge& e : edges) {
            const bool outward_positive = e.normal[static_cast<std::size_t>(e.axis)] > 0.0;
            std::vector<std::pair<double, double>> covered;
            for (std::size_t j = 0; j < rects.size(); ++j) {
                if (j == i) {
                    continue;
                }
                const Rect& o = rects[j];
                const double o_lo = e.axis == 0 ? o.x0 : o.y0;
                const double o_hi = e.axis == 0 ? o.x1 : o.y1;
                const double t_lo = e.axis == 0 ? o.y0 : o.x0;
                const double t_hi = e.axis == 0 ? o.y1 : o.x1;
                // Does o contain the strip just outside this edge?
                const bool spans = outward_positive ? (o_lo <= e.fixed && o_hi > e.fixed)
                                                    : (o_lo < e.fixed && o_hi >= e.fixed);
                const double lo = std::max(e.lo, t_lo);
                const double hi = std::min(e.hi, t_hi);
                if (spans && hi > lo) {
                    covered.emplace_back(lo, hi);
                }
            }
            std::sort(covered.begin(), covered.end());
            double cursor = e.lo;
            for (const auto& [lo, hi] : covered) {
                if (lo > cursor) {
                    segments.push_back({e.axis, e.fixed, cursor, lo, e.normal});
                }
                cursor = std::max(cursor, hi);
            }
            if (e.hi > cursor) {
                segments.push_back({e.axis, e.fixed, cursor, e.hi, e.normal});
            }
        }
    }
    return segments;
}

namespace {

Point segment_point(const EdgeSegment& s, double t) {
    Point p{};
    p[static_cast<std::size_t>(s.axis)] = s.fixed;
    p[static_cast<std::size_t>(1 - s.axis)] = t;
    return p;
}

double segment_distance(const EdgeSegment& s, const Point& x) {
    const double along = x[static_cast<std::size_t>(1 - s.axis)];
    const double across = x[static_cast<std::size_t>(s.axis)] - s.fixed;
    const double outside = along < s.lo ? s.lo - along : (along > s.hi ? along - s.hi : 0.0);
    return std::hypot(across, outside);
}

}  // namespace

ProblemSpec problem_2d_letters(const LetterLayout& layout) {
    layout.validate();
    ProblemSpec p;
    p.name = "letters2d";
    p.dim = 2;
    p.num_subdomains = 5;
    p.domain = {{0.0, 0.0, 0.0}, {kLettersWidth, kLettersHeight, 0.0}};
    p.kappa = {1.0 / 4.0, 1.0 / 6.0, 1.0 / 10.0, 1.0 / 14.0, 1.0 / 3.0};
    auto quad = [](double ax, double ay, double bx, double by) {
        Quadratic q;
        q.sq = {ax, ay, 0.0};
        q.lin = {bx, by, 0.0};
        return q;
    };
    p.exact = {quad(1, 1, 0, 0), quad(3, 0, 0, 2), quad(4, 1, 0, 0), quad(1, 5, 0, 0),
               quad(0.5, 1, 0, 0)};
    // x^2 + 5y^2 with kappa = 1/14 gives kappa * Laplacian = 6/7, not 1; the source of the
    // fourth subdomain is set so the listed solution stays exact.
    p.source = {1.0, 1.0, 1.0, 6.0 / 7.0, 1.0};

    const auto letters = layout.letters;
    p.membership = [letters](const Point& x) {
        for (std::size_t l = 0; l < letters.size(); ++l) {
            for (const Rect& r : letters[l].rects) {
                if (in_rect(r, x)) {
                    return static_cast<int>(l) + 1;
                }
            }
        }
        return 0;
    };

    double letters_area = 0.0;
    p.subdomain_bounds.push_back(p.domain);
    p.measure.push_back(0.0);
    for (const auto& letter : letters) {
        Box bounds{{1e300, 1e300, 0.0}, {-1e300, -1e300, 0.0}};
        double area = 0.0;
        for (const Rect& r : letter.rects) {
            bounds.lo[0] = std::min(bounds.lo[0], r.x0);
            bounds.lo[1] = std::min(bounds.lo[1], r.y0);
            bounds.hi[0] = std::max(bounds.hi[0], r.x1);
            bounds.hi[1] = std::max(bounds.hi[1], r.y1);
            area += (r.x1 - r.x0) * (r.y1 - r.y0);
        }
        p.subdomain_bounds.push_back(bounds);
        p.measure.push_back(area);
        letters_area += area;
    }
    p.measure[0] = kLettersWidth * kLettersHeight - letters_area;

    p.dirichlet = box_faces(p, 0);

    for (std::size_t l = 0; l < letters.size(); ++l) {
        const auto segments = letter_boundary(letters[l]);
        double total = 0.0;
        for (const auto& s : segments) {
            total += s.length();
        }
        InterfaceSpec iface;
        iface.name = "letter" + std::to_string(l + 1) + "-" + letters[l].name;
        iface.second = static_cast<int>(l) + 1;
        iface.first = 0;
        iface.sample = [segments, total, l](int count, std::uint64_t seed) {
            std::seed_seq seq{seed, static_cast<std::uint64_t>(0x1f7e), static_cast<std::uint64_t>(l)};
            std::mt19937_64 rng(seq);
            std::uniform_real_distribution<double> dist(0.0, total);
            std::vector<Point> points;
            points.reserve(static_cast<std::size_t>(count));
            while (static_cast<int>(points.size()) < count) {
                double t = dist(rng);
                for (const auto& s : segments) {
                    if (t < s.length()) {
                        const double along = s.lo + t;
                        // Corners carry no well-defined normal.
                        if (along > s.lo && along < s.hi) {
                            points.push_back(segment_point(s, along));
                        }
                        break;
                    }
                    t -= s.length();
                }
            }
            return points;
        };
        iface.distance = [segments](const Point& x) {
            double best = 1e300;
            for (const auto& s : segments) {
                best = std::min(best, segment_distance(s, x));
            }
            return best;
        };
        iface.normal = [segments](const Point& x) {
            const EdgeSegment* best = &segments.front();
            double best_d = 1e300;
            for (const auto& s : segments) {
                const double d = segment_distance(s, x);
                if (d < best_d) {
                    best_d = d;
                    best = &s;
                }
            }
            return best->normal;
        };
        attach_exact_jumps(p, iface);
        p.interfaces.push_back(std::move(iface));
    }
    return p;
}

std::vector<Sphere> benchmark_spheres() {
    // Subdomains 2..9 in order: (x, y, z) signs
    // (-,-,-) (-,+,-) (+,-,-) (+,+,-) (-,-,+) (-,+,+) (+,-,+) (+,+,+)
    std::vector<Sphere> spheres;
    for (int k = 0; k < 8; ++k) {
        const double z = (k / 4) % 2 == 0 ? -0.5 : 0.5;
        const double x = (k / 2) % 2 == 0 ? -0.5 : 0.5;
        const double y = k % 2 == 0 ? -0.5 : 0.5;
        spheres.push_back({{x, y, z}, 0.3});
    }
    return spheres;
}

double sphere_level_set(const Point& x) {
    double best = 1e300;
    for (const auto& s : benchmark_spheres()) {
        const double d = std::sqrt((x[0] - s.center[0]) * (x[0] - s.center[0]) +
                                   (x[1] - s.center[1]) * (x[1] - s.center[1]) +
                                   (x[2] - s.center[2]) * (x[2] - s.center[2]));
        best = std::min(best, d - s.radius);
    }
    return best;
}

ProblemSpec problem_3d_spheres() {
    ProblemSpec p;
    p.name = "spheres3d";
    p.dim = 3;
    p.num_subdomains = 9;
    p.domain = {{-1.0, -1.0, -1.0}, {1.0, 1.0, 1.0}};
    p.kappa = {1.0 / 6.0,  1.0 / 8.0, 1.0 / 14.0, 1.0 / 16.0, 1.0 / 10.0,
               1.0 / 2.0,  1.0 / 12.0, 1.0 / 9.0, 1.0 / 18.0};
    p.source.assign(9, 1.0);
    auto quad = [](Point sq, Point lin) {
        Quadratic q;
        q.sq = sq;
        q.lin = lin;
        return q;
    };
    p.exact = {
        quad({1, 1, 1}, {0, 0, 0}),   quad({3, 0, 1}, {0, 2, 0}), quad({4, 1, 2}, {0, 0, 0}),
        quad({1, 5, 2}, {0, 0, 0}),   quad({1, 3, 1}, {0, 0, 0}), quad({0, 1, 0}, {2, 0, 2}),
        quad({5, 0, 1}, {0, 2, 0}),   quad({2, 2, 0.5}, {0, 0, 0}), quad({3, 5, 1}, {0, 0, 0}),
    };
    const auto spheres = benchmark_spheres();
    p.membership = [spheres](const Point& x) {
        for (std::size_t k = 0; k < spheres.size(); ++k) {
            const auto& c = spheres[k].center;
            const double d2 = (x[0] - c[0]) * (x[0] - c[0]) + (x[1] - c[1]) * (x[1] - c[1]) +
                              (x[2] - c[2]) * (x[2] - c[2]);
            if (d2 <= spheres[k].radius * spheres[k].radius) {
                return static_cast<int>(k) + 1;
            }
        }
        return 0;
    };
    const double ball = 4.0 / 3.0 * std::numbers::pi * 0.3 * 0.3 * 0.3;
    p.subdomain_bounds.push_back(p.domain);
    p.measure.push_back(8.0 - 8.0 * ball);
    for (const auto& s : spheres) {
        Box b;
        for (std::size_t i = 0; i < 3; ++i) {
            b.lo[i] = s.center[i] - s.radius;
            b.hi[i] = s.center[i] + s.radius;
        }
        p.subdomain_bounds.push_back(b);
        p.measure.push_back(ball);
    }
    p.dirichlet = box_faces(p, 0);

    for (std::size_t k = 0; k < spheres.size(); ++k) {
        const Sphere s = spheres[k];
        InterfaceSpec iface;
        iface.name = "sphere" + std::to_string(k + 2);
        iface.second = static_cast<int>(k) + 1;
        iface.first = 0;
        // Fibonacci lattice; deterministic, so the seed is unused.
        iface.sample = [s](int count, std::uint64_t) {
            const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
            std::vector<Point> points;
            points.reserve(static_cast<std::size_t>(count));
            for (int i = 0; i < count; ++i) {
                const double zc = 1.0 - (2.0 * i + 1.0) / static_cast<double>(count);
                const double rho = std::sqrt(std::max(0.0, 1.0 - zc * zc));
                const double phi = golden * i;
                const Point u{rho * std::cos(phi), rho * std::sin(phi), zc};
                const double norm = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
                points.push_back({s.center[0] + s.radius * u[0] / norm,
                                  s.center[1] + s.radius * u[1] / norm,
                                  s.center[2] + s.radius * u[2] / norm});
            }
            return points;
        };
        iface.normal = [s](const Point& x) {
            const Point d{x[0] - s.center[0], x[1] - s.center[1], x[2] - s.center[2]};
            const double r = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
            return Point{d[0] / r, d[1] / r, d[2] / r};
        };
        iface.distance = [s](const Point& x) {
            const Point d{x[0] - s.center[0], x[1] - s.center[1], x[2] - s.center[2]};
            return std::abs(std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]) - s.radius);
        };
        attach_exact_jumps(p, iface);
        p.interfaces.push_back(std::move(iface));
    }
    return p;
}

ProblemSpec make_problem(const std::string& name, const LetterLayout& layout) {
    if (name == "poisson1d") {
        return problem_1d();
    }
    if (name == "letters2d") {
        return problem_2d_letters(layout);
    }
    if (name == "spheres3d") {
        return problem_3d_spheres();
    }
    throw ConfigError("unknown problem '" + name +
                      "'; valid problems: poisson1d, letters2d, spheres3d");
}

}  // namespace adai
