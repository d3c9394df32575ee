#ifndef WICKS_HYPERBOLIC_HPP
#define WICKS_HYPERBOLIC_HPP

#include <array>
#include <vector>

#include "wicks/word.hpp"

namespace wicks {

// Hyperboloid model: points (x,y,z) with x^2 + y^2 - z^2 = -1, z > 0,
// isometries in SO+(2,1) preserving J = diag(1,1,-1).

struct Vec3 {
    double x = 0, y = 0, z = 0;
};

double minkowski_dot(const Vec3& a, const Vec3& b);

// geodesic distance between hyperboloid points
double hyperbolic_distance(const Vec3& a, const Vec3& b);

struct Mat3 {
    double m[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

    static Mat3 identity() { return {}; }
    Mat3 operator*(const Mat3& o) const;
    Vec3 apply(const Vec3& v) const;

    // J M^T J, the inverse of an O(2,1) matrix
    Mat3 minkowski_inverse() const;
    // max |(M^T J M - J)_{ij}|
    double minkowski_defect() const;
    // Gram-Schmidt against the Minkowski form (columns: spacelike, spacelike,
    // timelike with z > 0)
    void reorthogonalize();
    // max |(M - I)_{ij}|
    double deviation_from_identity() const;
};

Mat3 boost_x(double t);       // translation by t along the x-axis geodesic
Mat3 rotation_origin(double theta); // rotation by theta about (0,0,1)

// Side length of the regular hyperbolic n-gon with all interior angles 2pi/3.
// Exists iff n >= 7; throws Infeasible otherwise (n = 6 is the Euclidean
// degenerate case).
double regular_side_length(int n);

// Side opposite angleC of the hyperbolic triangle with the given angles, by
// the dual law of cosines: cosh c = (cos C + cos A cos B)/(sin A sin B).
// Throws Infeasible when the angle sum reaches pi.
double triangle_side(double angleC, double angleA, double angleB);

struct Development {
    std::vector<Vec3> vertices; // v0 .. v_{n-1}
    Mat3 holonomy;              // product of all side translations and turns
    double holonomy_deviation = 0;
};

// Lays the polygon boundary out from a fixed base point and direction:
// translate by lengths[i], then turn by the exterior angle pi/3 (interior
// 2pi/3). Closure of the polygon is holonomy == identity. Throws
// NumericalOverflow for side lengths > 50, std::invalid_argument on size
// mismatch or non-positive lengths.
Development develop_polygon(const SignedWord& w, const std::vector<double>& lengths);

// chord between vertices i and j of a development
double chord_length(const Development& dev, int i, int j);
// interior angle at vertex `at` between the chords toward j and k
double angle_at(const Development& dev, int at, int j, int k);

// Residual of membership in W_U: 6g-3 pairing components l_x - l_{x^{-1}} and
// 3 holonomy coordinates (rotation angle and translation pair of the
// Lie-algebra element), 6g constraints in total.
struct ClosureResidual {
    std::vector<double> pairing;
    std::array<double, 3> holonomy{};

    int dimension() const { return static_cast<int>(pairing.size()) + 3; }
    std::vector<double> stacked() const;
    double norm() const;     // Euclidean
    double max_abs() const;
};

ClosureResidual membership_residual(const SignedWord& w, const std::vector<double>& lengths);

struct ProjectOptions {
    int max_iterations = 100;
    double tolerance = 1e-8;      // on the residual 2-norm
    double fd_step = 1e-6;        // relative finite-difference step
};

struct ProjectionResult {
    std::vector<double> lengths;
    int iterations = 0;
    double residual_norm = 0;
};

// Damped Gauss-Newton projection onto the realizability variety. The start
// must lie in the basin of a solution (about a 5% perturbation of the regular
// point at genus 2 is safe). Throws NoConvergence / NonPositive.
ProjectionResult project_to_variety(const SignedWord& w, const std::vector<double>& start,
                                    const ProjectOptions& opts = {});

// Singular values of the residual Jacobian (central differences), descending.
std::vector<double> residual_singular_values(const SignedWord& w,
                                             const std::vector<double>& lengths);

// Rank with the relative singular-value threshold (default 1e-7).
int jacobian_rank(const SignedWord& w, const std::vector<double>& lengths,
                  double rel_tol = 1e-7);

} // namespace wicks

#endif
