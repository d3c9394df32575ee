#include "wicks/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace wicks {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMaxSide = 50.0;
constexpr int kReorthEvery = 8;

double sq(double x) { return x * x; }

} // namespace

double minkowski_dot(const Vec3& a, const Vec3& b) {
    return a.x * b.x + a.y * b.y - a.z * b.z;
}

double hyperbolic_distance(const Vec3& a, const Vec3& b) {
    return std::acosh(std::max(1.0, -minkowski_dot(a, b)));
}

Mat3 Mat3::operator*(const Mat3& o) const {
    Mat3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0;
            for (int k = 0; k < 3; ++k) s += m[i][k] * o.m[k][j];
            out.m[i][j] = s;
        }
    return out;
}

Vec3 Mat3::apply(const Vec3& v) const {
    return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
}

Mat3 Mat3::minkowski_inverse() const {
    // J M^T J with J = diag(1,1,-1)
    Mat3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = m[j][i];
            if ((i == 2) != (j == 2)) s = -s;
            out.m[i][j] = s;
        }
    return out;
}

double Mat3::minkowski_defect() const {
    double worst = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = m[0][i] * m[0][j] + m[1][i] * m[1][j] - m[2][i] * m[2][j];
            double target = i != j ? 0.0 : (i == 2 ? -1.0 : 1.0);
            worst = std::max(worst, std::abs(s - target));
        }
    return worst;
}

void Mat3::reorthogonalize() {
    // columns c0, c1 spacelike (+1), c2 timelike (-1, future-pointing)
    auto col = [&](int j) { return Vec3{m[0][j], m[1][j], m[2][j]}; };
    auto set_col = [&](int j, const Vec3& v) {
        m[0][j] = v.x;
        m[1][j] = v.y;
        m[2][j] = v.z;
    };
    auto axpy = [](const Vec3& v, double a, const Vec3& w) {
        return Vec3{v.x + a * w.x, v.y + a * w.y, v.z + a * w.z};
    };

    Vec3 c0 = col(0);
    double n0 = std::sqrt(minkowski_dot(c0, c0));
    c0 = {c0.x / n0, c0.y / n0, c0.z / n0};

    Vec3 c1 = axpy(col(1), -minkowski_dot(col(1), c0), c0);
    double n1 = std::sqrt(minkowski_dot(c1, c1));
    c1 = {c1.x / n1, c1.y / n1, c1.z / n1};

    Vec3 c2 = axpy(col(2), -minkowski_dot(col(2), c0), c0);
    c2 = axpy(c2, -minkowski_dot(c2, c1), c1);
    double n2 = std::sqrt(-minkowski_dot(c2, c2));
    c2 = {c2.x / n2, c2.y / n2, c2.z / n2};
    if (c2.z < 0) c2 = {-c2.x, -c2.y, -c2.z};

    set_col(0, c0);
    set_col(1, c1);
    set_col(2, c2);
}

double Mat3::deviation_from_identity() const {
    double worst = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            worst = std::max(worst, std::abs(m[i][j] - (i == j ? 1.0 : 0.0)));
    return worst;
}

Mat3 boost_x(double t) {
    Mat3 out;
    out.m[0][0] = std::cosh(t);
    out.m[0][2] = std::sinh(t);
    out.m[2][0] = std::sinh(t);
    out.m[2][2] = std::cosh(t);
    return out;
}

Mat3 rotation_origin(double theta) {
    Mat3 out;
    out.m[0][0] = std::cos(theta);
    out.m[0][1] = -std::sin(theta);
    out.m[1][0] = std::sin(theta);
    out.m[1][1] = std::cos(theta);
    return out;
}

double regular_side_length(int n) {
    // Half-side from the center/vertex/edge-midpoint right triangle with
    // angles pi/n and pi/3: cosh(s/2) = cos(pi/n)/sin(pi/3). Equivalently the
    // step T(s) R(pi/3) is elliptic of order n: cosh s = (1 + 4cos(2pi/n))/3.
    if (n <= 6)
        throw Infeasible("no hyperbolic regular " + std::to_string(n) +
                         "-gon with interior angles 2pi/3");
    double ratio = std::cos(kPi / n) / std::sin(kPi / 3);
    return 2.0 * std::acosh(ratio);
}

double triangle_side(double angleC, double angleA, double angleB) {
    for (double a : {angleA, angleB, angleC})
        if (!(a > 0 && a < kPi)) throw std::invalid_argument("angles must lie in (0, pi)");
    if (angleA + angleB + angleC >= kPi)
        throw Infeasible("angle sum must be below pi in the hyperbolic plane");
    double c = (std::cos(angleC) + std::cos(angleA) * std::cos(angleB)) /
               (std::sin(angleA) * std::sin(angleB));
    return std::acosh(c);
}

Development develop_polygon(const SignedWord& w, const std::vector<double>& lengths) {
    int n = w.size();
    if (static_cast<int>(lengths.size()) != n)
        throw std::invalid_argument("length vector size " + std::to_string(lengths.size()) +
                                    " does not match word length " + std::to_string(n));
    for (double l : lengths) {
        if (!(l > 0)) throw std::invalid_argument("side lengths must be positive");
        if (l > kMaxSide)
            throw NumericalOverflow("side length " + std::to_string(l) + " exceeds " +
                                    std::to_string(kMaxSide));
    }

    Development dev;
    dev.vertices.reserve(static_cast<size_t>(n));
    Mat3 frame;
    const Mat3 turn = rotation_origin(kPi / 3);
    dev.vertices.push_back(Vec3{0, 0, 1});
    for (int i = 0; i < n; ++i) {
        frame = frame * boost_x(lengths[static_cast<size_t>(i)]) * turn;
        if ((i + 1) % kReorthEvery == 0) frame.reorthogonalize();
        if (i + 1 < n) dev.vertices.push_back(frame.apply(Vec3{0, 0, 1}));
    }
    dev.holonomy = frame;
    dev.holonomy_deviation = frame.deviation_from_identity();
    return dev;
}

double chord_length(const Development& dev, int i, int j) {
    return hyperbolic_distance(dev.vertices.at(static_cast<size_t>(i)),
                               dev.vertices.at(static_cast<size_t>(j)));
}

double angle_at(const Development& dev, int at, int j, int k) {
    const Vec3& p = dev.vertices.at(static_cast<size_t>(at));
    auto unit_toward = [&](int q) {
        const Vec3& t = dev.vertices.at(static_cast<size_t>(q));
        double c = -minkowski_dot(p, t);
        double s = std::sqrt(std::max(0.0, c * c - 1.0));
        // tangent of the geodesic from p to t
        return Vec3{(t.x - c * p.x) / s, (t.y - c * p.y) / s, (t.z - c * p.z) / s};
    };
    Vec3 u = unit_toward(j);
    Vec3 v = unit_toward(k);
    return std::acos(std::clamp(minkowski_dot(u, v), -1.0, 1.0));
}

std::vector<double> ClosureResidual::stacked() const {
    std::vector<double> out = pairing;
    out.insert(out.end(), holonomy.begin(), holonomy.end());
    return out;
}

double ClosureResidual::norm() const {
    double s = 0;
    for (double v : stacked()) s += sq(v);
    return std::sqrt(s);
}

double ClosureResidual::max_abs() const {
    double worst = 0;
    for (double v : stacked()) worst = std::max(worst, std::abs(v));
    return worst;
}

ClosureResidual membership_residual(const SignedWord& w, const std::vector<double>& lengths) {
    ValidationReport rep = validate_wicks(w);
    if (!rep.nonempty || !rep.each_letter_twice || !rep.opposite_signs)
        throw MalformedWord("membership residual needs each letter twice with opposite signs");

    ClosureResidual res;

    // condition (1): l at the positive occurrence minus l at the negative one
    std::vector<int> pos_plus(static_cast<size_t>(w.max_id() + 1), -1);
    std::vector<int> pos_minus(static_cast<size_t>(w.max_id() + 1), -1);
    for (int i = 0; i < w.size(); ++i) {
        if (w[i].sign > 0) pos_plus[static_cast<size_t>(w[i].id)] = i;
        else pos_minus[static_cast<size_t>(w[i].id)] = i;
    }
    for (size_t id = 0; id < pos_plus.size(); ++id) {
        if (pos_plus[id] < 0) continue;
        res.pairing.push_back(lengths.at(static_cast<size_t>(pos_plus[id])) -
                              lengths.at(static_cast<size_t>(pos_minus[id])));
    }

    // condition (2), basepoint-free form: the boundary holonomy must be the
    // identity. (H - H^{-1})/2 = sinh(log H) gives smooth coordinates that
    // vanish exactly at the identity near it.
    Development dev = develop_polygon(w, lengths);
    Mat3 h = dev.holonomy;
    Mat3 hinv = h.minkowski_inverse();
    auto half_diff = [&](int i, int j) { return (h.m[i][j] - hinv.m[i][j]) / 2.0; };
    res.holonomy = {half_diff(1, 0), half_diff(0, 2), half_diff(1, 2)};
    return res;
}

namespace {

// solve the SPD system a x = b in place by Cholesky; dimension m
std::vector<double> cholesky_solve(std::vector<double> a, std::vector<double> b, int m) {
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = a[static_cast<size_t>(i * m + j)];
            for (int k = 0; k < j; ++k)
                s -= a[static_cast<size_t>(i * m + k)] * a[static_cast<size_t>(j * m + k)];
            if (i == j) {
                if (s <= 0) throw NoConvergence("normal equations lost positive definiteness");
                a[static_cast<size_t>(i * m + j)] = std::sqrt(s);
            } else {
                a[static_cast<size_t>(i * m + j)] = s / a[static_cast<size_t>(j * m + j)];
            }
        }
    }
    for (int i = 0; i < m; ++i) {
        double s = b[static_cast<size_t>(i)];
        for (int k = 0; k < i; ++k) s -= a[static_cast<size_t>(i * m + k)] * b[static_cast<size_t>(k)];
        b[static_cast<size_t>(i)] = s / a[static_cast<size_t>(i * m + i)];
    }
    for (int i = m; i-- > 0;) {
        double s = b[static_cast<size_t>(i)];
        for (int k = i + 1; k < m; ++k)
            s -= a[static_cast<size_t>(k * m + i)] * b[static_cast<size_t>(k)];
        b[static_cast<size_t>(i)] = s / a[static_cast<size_t>(i * m + i)];
    }
    return b;
}

// central-difference Jacobian of the stacked residual, row-major r x m
std::vector<double> residual_jacobian(const SignedWord& w, const std::vector<double>& lengths,
                                      double fd_step, int& rows) {
    int m = static_cast<int>(lengths.size());
    rows = membership_residual(w, lengths).dimension();
    std::vector<double> jac(static_cast<size_t>(rows * m));
    for (int j = 0; j < m; ++j) {
        double h = fd_step * std::max(1.0, std::abs(lengths[static_cast<size_t>(j)]));
        std::vector<double> lp = lengths, lm = lengths;
        lp[static_cast<size_t>(j)] += h;
        lm[static_cast<size_t>(j)] -= h;
        std::vector<double> rp = membership_residual(w, lp).stacked();
        std::vector<double> rm = membership_residual(w, lm).stacked();
        for (int i = 0; i < rows; ++i)
            jac[static_cast<size_t>(i * m + j)] =
                (rp[static_cast<size_t>(i)] - rm[static_cast<size_t>(i)]) / (2 * h);
    }
    return jac;
}

} // namespace

ProjectionResult project_to_variety(const SignedWord& w, const std::vector<double>& start,
                                    const ProjectOptions& opts) {
    std::vector<double> cur = start;
    ClosureResidual res = membership_residual(w, cur);
    double cur_norm = res.norm();
    if (cur_norm < opts.tolerance) return {cur, 0, cur_norm};

    int m = static_cast<int>(cur.size());
    double lambda = 1e-10;

    for (int iter = 1; iter <= opts.max_iterations; ++iter) {
        int rows = 0;
        std::vector<double> jac = residual_jacobian(w, cur, opts.fd_step, rows);
        std::vector<double> r = res.stacked();

        // J^T J and -J^T r
        std::vector<double> jtj(static_cast<size_t>(m * m), 0.0);
        std::vector<double> rhs(static_cast<size_t>(m), 0.0);
        for (int i = 0; i < rows; ++i)
            for (int a = 0; a < m; ++a) {
                double jia = jac[static_cast<size_t>(i * m + a)];
                rhs[static_cast<size_t>(a)] -= jia * r[static_cast<size_t>(i)];
                for (int b = a; b < m; ++b)
                    jtj[static_cast<size_t>(a * m + b)] += jia * jac[static_cast<size_t>(i * m + b)];
            }
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < a; ++b)
                jtj[static_cast<size_t>(a * m + b)] = jtj[static_cast<size_t>(b * m + a)];

        for (;;) {
            std::vector<double> damped = jtj;
            for (int a = 0; a < m; ++a) damped[static_cast<size_t>(a * m + a)] += lambda;
            std::vector<double> step = cholesky_solve(std::move(damped), rhs, m);

            // step damping keeps the lengths positive
            double scale = 1.0;
            int halvings = 0;
            std::vector<double> next(static_cast<size_t>(m));
            for (;;) {
                bool positive = true;
                for (int a = 0; a < m; ++a) {
                    next[static_cast<size_t>(a)] =
                        cur[static_cast<size_t>(a)] + scale * step[static_cast<size_t>(a)];
                    if (next[static_cast<size_t>(a)] <= 0) positive = false;
                }
                if (positive) break;
                scale /= 2;
                if (++halvings > 60)
                    throw NonPositive("damping cannot keep the side lengths positive");
            }

            ClosureResidual next_res = membership_residual(w, next);
            double next_norm = next_res.norm();
            if (next_norm < cur_norm || next_norm < opts.tolerance) {
                cur = std::move(next);
                res = std::move(next_res);
                cur_norm = next_norm;
                lambda = std::max(lambda * 0.25, 1e-12);
                break;
            }
            lambda *= 10;
            if (lambda > 1e8)
                throw NoConvergence("residual stopped decreasing at " + std::to_string(cur_norm));
        }

        if (cur_norm < opts.tolerance) return {cur, iter, cur_norm};
    }
    throw NoConvergence("no convergence after " + std::to_string(opts.max_iterations) +
                        " iterations, residual " + std::to_string(cur_norm));
}

std::vector<double> residual_singular_values(const SignedWord& w,
                                             const std::vector<double>& lengths) {
    int rows = 0;
    int m = static_cast<int>(lengths.size());
    std::vector<double> jac = residual_jacobian(w, lengths, 1e-6, rows);

    // eigenvalues of J J^T (rows x rows symmetric) by cyclic Jacobi
    std::vector<double> a(static_cast<size_t>(rows * rows), 0.0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < rows; ++j) {
            double s = 0;
            for (int k = 0; k < m; ++k)
                s += jac[static_cast<size_t>(i * m + k)] * jac[static_cast<size_t>(j * m + k)];
            a[static_cast<size_t>(i * rows + j)] = s;
        }

    auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i * rows + j)]; };
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0;
        for (int p = 0; p < rows; ++p)
            for (int q = p + 1; q < rows; ++q) off += sq(at(p, q));
        if (off < 1e-26) break;
        for (int p = 0; p < rows; ++p)
            for (int q = p + 1; q < rows; ++q) {
                if (std::abs(at(p, q)) < 1e-300) continue;
                double theta = (at(q, q) - at(p, p)) / (2 * at(p, q));
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                for (int k = 0; k < rows; ++k) {
                    double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < rows; ++k) {
                    double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
    }

    std::vector<double> sv;
    sv.reserve(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i) sv.push_back(std::sqrt(std::max(0.0, at(i, i))));
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return sv;
}

int jacobian_rank(const SignedWord& w, const std::vector<double>& lengths, double rel_tol) {
    std::vector<double> sv = residual_singular_values(w, lengths);
    if (sv.empty() || sv.front() == 0) return 0;
    int rank = 0;
    for (double s : sv)
        if (s > rel_tol * sv.front()) ++rank;
    return rank;
}

} // namespace wicks
