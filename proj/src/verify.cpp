#include "wallcross/verify.hpp"

#include "wallcross/error.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace wallcross {

namespace {

double operator_norm(const Eigen::MatrixXcd& m) {
    return Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues()(0);
}

double defect_of(const Eigen::MatrixXcd& u) {
    const Eigen::MatrixXcd dev =
        u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
    return operator_norm(dev);
}

// Box-Muller on top of mt19937_64, so the stream does not depend on the
// standard library's normal_distribution implementation.
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : rng_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    std::complex<double> next_complex() {
        const double re = next();
        const double im = next();
        return {re, im};
    }

private:
    double uniform() {
        // 53-bit mantissa in [0, 1).
        return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    }

    std::mt19937_64 rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// QR of a complex Ginibre matrix with the phases of the R diagonal folded
// into Q gives Haar measure.
Eigen::MatrixXcd haar_unitary(int n, GaussianSource& source) {
    Eigen::MatrixXcd z(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            z(i, j) = source.next_complex();
        }
    }
    const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        const std::complex<double> d = r(j, j);
        const double mag = std::abs(d);
        const std::complex<double> phase = mag > 0 ? d / mag : 1.0;
        q.col(j) *= phase;
    }
    return q;
}

// Orthonormal basis of the skew-hermitian n x n matrices under Re tr(X* Y).
std::vector<Eigen::MatrixXcd> skew_hermitian_basis(int n) {
    const std::complex<double> i_unit(0.0, 1.0);
    std::vector<Eigen::MatrixXcd> basis;
    for (int d = 0; d < n; ++d) {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
        m(d, d) = i_unit;
        basis.push_back(m);
    }
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int r = 0; r < n; ++r) {
        for (int c = r + 1; c < n; ++c) {
            Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
            m(r, c) = inv_sqrt2;
            m(c, r) = -inv_sqrt2;
            basis.push_back(m);
            Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(n, n);
            w(r, c) = i_unit * inv_sqrt2;
            w(c, r) = i_unit * inv_sqrt2;
            basis.push_back(w);
        }
    }
    return basis;
}

// Jacobian of psi at `tuple`, one column per perturbation direction, rows
// the realified entries of the su(n)-projected derivative.
Eigen::MatrixXd psi_jacobian(const UnitaryTuple& tuple, double step) {
    const int n = tuple.n;
    const Eigen::MatrixXcd base_inv = evaluate_psi(tuple).adjoint();
    const auto basis = skew_hermitian_basis(n);
    const int directions = static_cast<int>(tuple.matrices.size()) *
                           static_cast<int>(basis.size());
    Eigen::MatrixXd jac(2 * n * n, directions);

    int col = 0;
    for (std::size_t m = 0; m < tuple.matrices.size(); ++m) {
        for (const Eigen::MatrixXcd& direction : basis) {
            const Eigen::MatrixXcd shift_pos = (step * direction).exp();
            const Eigen::MatrixXcd shift_neg = (-step * direction).exp();

            UnitaryTuple plus = tuple;
            plus.matrices[m] = shift_pos * tuple.matrices[m];
            UnitaryTuple minus = tuple;
            minus.matrices[m] = shift_neg * tuple.matrices[m];

            Eigen::MatrixXcd deriv =
                (evaluate_psi(plus) - evaluate_psi(minus)) / (2.0 * step);
            deriv = deriv * base_inv;  // translate back to the identity
            deriv = 0.5 * (deriv - deriv.adjoint().eval());
            deriv -= (deriv.trace() / static_cast<double>(n)) *
                     Eigen::MatrixXcd::Identity(n, n);

            for (int r = 0; r < n; ++r) {
                for (int c = 0; c < n; ++c) {
                    jac(r * n + c, col) = deriv(r, c).real();
                    jac(n * n + r * n + c, col) = deriv(r, c).imag();
                }
            }
            ++col;
        }
    }
    return jac;
}

}  // namespace

double measure_unitarity_defect(UnitaryTuple& tuple) {
    double defect = 0.0;
    for (const Eigen::MatrixXcd& u : tuple.matrices) {
        defect = std::max(defect, defect_of(u));
    }
    tuple.unitarity_defect = defect;
    return defect;
}

Eigen::MatrixXcd evaluate_psi(const UnitaryTuple& tuple) {
    if (tuple.n < 1 || tuple.g < 1 ||
        tuple.matrices.size() != 2 * static_cast<std::size_t>(tuple.g)) {
        throw Error(ErrorKind::invalid_input, "tuple must hold 2g matrices");
    }
    Eigen::MatrixXcd product = Eigen::MatrixXcd::Identity(tuple.n, tuple.n);
    for (int i = 0; i < tuple.g; ++i) {
        const Eigen::MatrixXcd& a = tuple.matrices[2 * i];
        const Eigen::MatrixXcd& b = tuple.matrices[2 * i + 1];
        product = product * a * b * a.adjoint() * b.adjoint();
    }
    return product;
}

SpecialUnitaryReport check_special_unitary(const UnitaryTuple& tuple, double tol) {
    const Eigen::MatrixXcd psi = evaluate_psi(tuple);
    SpecialUnitaryReport report;
    report.det_residual = std::abs(psi.determinant() - std::complex<double>(1.0));
    report.unitarity_residual = defect_of(psi);
    report.pass = report.det_residual < tol && report.unitarity_residual < tol;
    return report;
}

double check_equivariance(const UnitaryTuple& tuple, const Eigen::MatrixXcd& u,
                          double tol) {
    if (defect_of(u) > tol) {
        throw Error(ErrorKind::invalid_input, "conjugating matrix is not unitary");
    }
    UnitaryTuple conjugated = tuple;
    for (Eigen::MatrixXcd& m : conjugated.matrices) {
        m = u * m * u.adjoint();
    }
    const Eigen::MatrixXcd lhs = evaluate_psi(conjugated);
    const Eigen::MatrixXcd rhs = u * evaluate_psi(tuple) * u.adjoint();
    return operator_norm(lhs - rhs);
}

UnitaryTuple sample_haar(int n, int g, std::uint64_t seed) {
    if (n < 1 || g < 1) {
        throw Error(ErrorKind::invalid_input, "need n >= 1 and g >= 1");
    }
    GaussianSource source(seed);
    UnitaryTuple tuple;
    tuple.n = n;
    tuple.g = g;
    for (int i = 0; i < 2 * g; ++i) {
        tuple.matrices.push_back(haar_unitary(n, source));
    }
    measure_unitarity_defect(tuple);
    return tuple;
}

UnitaryTuple make_reducible(int n1, int n2, int g, std::uint64_t seed) {
    if (n1 < 1 || n2 < 1 || g < 1) {
        throw Error(ErrorKind::invalid_input, "block sizes and genus must be positive");
    }
    GaussianSource source(seed);
    UnitaryTuple tuple;
    tuple.n = n1 + n2;
    tuple.g = g;
    for (int i = 0; i < 2 * g; ++i) {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(tuple.n, tuple.n);
        m.topLeftCorner(n1, n1) = haar_unitary(n1, source);
        m.bottomRightCorner(n2, n2) = haar_unitary(n2, source);
        tuple.matrices.push_back(std::move(m));
    }
    measure_unitarity_defect(tuple);
    return tuple;
}

RankResult differential_rank(const UnitaryTuple& tuple, double rank_tol, double step) {
    const Eigen::MatrixXd jac = psi_jacobian(tuple, step);
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
    RankResult result;
    const auto& sigma = svd.singularValues();
    result.singular_values.assign(sigma.data(), sigma.data() + sigma.size());
    const double largest = sigma.size() > 0 ? sigma(0) : 0.0;
    if (largest == 0.0) return result;  // rank 0, clean
    const double threshold = rank_tol * largest;
    for (int i = 0; i < sigma.size(); ++i) {
        if (sigma(i) > threshold) ++result.rank;
        const double ratio = sigma(i) / largest;
        if (ratio > rank_tol / 10.0 && ratio < rank_tol * 10.0) {
            result.indeterminate = true;
        }
    }
    return result;
}

WallMembershipReport wall_membership(const UnitaryTuple& tuple, double angle_tol) {
    const Eigen::MatrixXcd psi = evaluate_psi(tuple);
    const Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(psi);

    WallMembershipReport report;
    const int n = tuple.n;
    for (int i = 0; i < n; ++i) {
        double angle = std::arg(solver.eigenvalues()(i)) / (2.0 * std::numbers::pi);
        angle -= std::floor(angle);
        report.angles.push_back(angle);
    }
    std::sort(report.angles.begin(), report.angles.end());

    for (int mask = 1; mask < (1 << n) - 1; ++mask) {
        double sum = 0.0;
        std::vector<int> subset;
        for (int i = 0; i < n; ++i) {
            if (mask & (1 << i)) {
                sum += report.angles[i];
                subset.push_back(i + 1);
            }
        }
        const double nearest = std::round(sum);
        const double residual = std::abs(sum - nearest);
        if (residual < angle_tol) {
            report.hits.push_back(
                WallHit{std::move(subset), static_cast<int>(nearest), residual});
        }
    }
    return report;
}

BatteryReport run_battery(const BatteryConfig& config) {
    if (config.n < 1 || config.g < 1 || config.trials < 1) {
        throw Error(ErrorKind::usage, "battery needs n >= 1, g >= 1, trials >= 1");
    }
    BatteryReport report;
    report.config = config;
    report.full_rank_expected = config.n * config.n - 1;

    auto fail = [&](std::uint64_t seed, const std::string& what) {
        report.failures.push_back("seed " + std::to_string(seed) + ": " + what);
    };

    std::vector<std::pair<int, int>> splits;
    for (int n1 = 1; 2 * n1 <= config.n; ++n1) {
        if (config.n - n1 >= 1) splits.push_back({n1, config.n - n1});
    }

    for (int trial = 0; trial < config.trials; ++trial) {
        const std::uint64_t seed = config.seed_base + static_cast<std::uint64_t>(trial);
        TrialRecord record;
        record.seed = seed;
        bool ok = true;

        const UnitaryTuple haar = sample_haar(config.n, config.g, seed);
        const UnitaryTuple witness = sample_haar(config.n, 1, seed ^ 0x9e3779b97f4a7c15ULL);

        const SpecialUnitaryReport su = check_special_unitary(haar, config.tol_residual);
        record.det_residual = su.det_residual;
        record.unitarity_residual = su.unitarity_residual;
        if (!su.pass) {
            ok = false;
            fail(seed, "special-unitary residuals too large");
        }

        record.equivariance_residual =
            check_equivariance(haar, witness.matrices[0], config.tol_residual);
        if (record.equivariance_residual >= config.tol_residual) {
            ok = false;
            fail(seed, "equivariance residual too large");
        }

        const RankResult haar_rank =
            differential_rank(haar, config.rank_tol, config.fd_step);
        record.haar_rank = haar_rank.rank;
        if (haar_rank.indeterminate) {
            ok = false;
            fail(seed, "indeterminate rank on a Haar tuple");
        }
        if (haar_rank.rank != report.full_rank_expected) {
            ok = false;
            fail(seed, "Haar tuple rank " + std::to_string(haar_rank.rank) +
                           " != " + std::to_string(report.full_rank_expected));
        }

        const WallMembershipReport haar_walls =
            wall_membership(haar, config.angle_tol);
        if (!haar_walls.hits.empty()) {
            ok = false;
            fail(seed, "Haar image unexpectedly lies on a wall");
        }

        for (const auto& [n1, n2] : splits) {
            const UnitaryTuple red =
                make_reducible(n1, n2, config.g, seed ^ 0xc2b2ae3d27d4eb4fULL);
            const RankResult red_rank =
                differential_rank(red, config.rank_tol, config.fd_step);
            record.reducible_ranks.push_back(red_rank.rank);
            if (red_rank.indeterminate) {
                ok = false;
                fail(seed, "indeterminate rank on a reducible tuple");
            }
            if (red_rank.rank >= report.full_rank_expected) {
                ok = false;
                fail(seed, "reducible tuple has full rank");
            }
            const WallMembershipReport red_walls =
                wall_membership(red, config.angle_tol);
            const bool block_hit = std::any_of(
                red_walls.hits.begin(), red_walls.hits.end(), [&](const WallHit& hit) {
                    const int size = static_cast<int>(hit.subset.size());
                    return size == n1 || size == n2;
                });
            if (!block_hit) {
                ok = false;
                fail(seed, "reducible image misses its block wall");
            }
        }

        record.pass = ok;
        report.trials.push_back(std::move(record));
    }

    // Cross-check the derivative once per battery: half the step must agree.
    {
        const UnitaryTuple probe = sample_haar(config.n, config.g, config.seed_base);
        const Eigen::MatrixXd full = psi_jacobian(probe, config.fd_step);
        const Eigen::MatrixXd half = psi_jacobian(probe, config.fd_step / 2.0);
        report.fd_halfstep_relative_error =
            (full - half).norm() / std::max(full.norm(), 1e-300);
        if (report.fd_halfstep_relative_error >= 1e-4) {
            report.failures.push_back("finite-difference half-step disagreement " +
                                      std::to_string(report.fd_halfstep_relative_error));
        }
    }

    report.pass = report.failures.empty();
    return report;
}

}  // namespace wallcross
