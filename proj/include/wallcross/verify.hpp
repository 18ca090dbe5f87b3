#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace wallcross {

/// A point of the representation space of the free surface group: 2g unitary
/// n x n matrices (A_1, B_1, ..., A_g, B_g).
struct UnitaryTuple {
    int n = 0;
    int g = 0;
    std::vector<Eigen::MatrixXcd> matrices;
    double unitarity_defect = 0.0;
};

/// Refresh the stored defect: max over matrices of ||U* U - I|| in operator
/// norm.
double measure_unitarity_defect(UnitaryTuple& tuple);

/// The commutator-product map: prod_i A_i B_i A_i^* B_i^*, inverses taken as
/// conjugate transposes.
Eigen::MatrixXcd evaluate_psi(const UnitaryTuple& tuple);

struct SpecialUnitaryReport {
    double det_residual = 0.0;        // |det(psi) - 1|
    double unitarity_residual = 0.0;  // ||psi* psi - I||
    bool pass = false;
};

/// The image must land in the special unitary group; both residuals are pure
/// rounding for genuinely unitary input.
SpecialUnitaryReport check_special_unitary(const UnitaryTuple& tuple, double tol);

/// Operator-norm distance between psi(u t u^*) and u psi(t) u^*.
double check_equivariance(const UnitaryTuple& tuple, const Eigen::MatrixXcd& u,
                          double tol);

/// 2g independent Haar-distributed unitaries (QR of a complex Gaussian with
/// phase correction), bit-reproducible per seed.
UnitaryTuple sample_haar(int n, int g, std::uint64_t seed);

/// Block-diagonal tuple with independent Haar blocks of sizes n1 and n2; the
/// construction makes the image reducible by force.
UnitaryTuple make_reducible(int n1, int n2, int g, std::uint64_t seed);

struct RankResult {
    int rank = 0;
    bool indeterminate = false;
    std::vector<double> singular_values;
};

/// Numerical rank of the differential of psi, by central differences along
/// an orthonormal basis of the 2g copies of the skew-hermitian algebra, the
/// image translated back to the identity and projected to the traceless
/// skew-hermitian subspace. Full rank is n^2 - 1. Singular values falling
/// inside a band around the threshold are flagged indeterminate.
RankResult differential_rank(const UnitaryTuple& tuple, double rank_tol = 1e-6,
                             double step = 1e-5);

struct WallHit {
    std::vector<int> subset;  // 1-based indices into the sorted angles
    int level = 0;
    double residual = 0.0;
};

struct WallMembershipReport {
    std::vector<double> angles;  // sorted eigenvalue angles of psi in [0,1)
    std::vector<WallHit> hits;
};

/// Scan all proper subsets of the eigenvalue angles of psi for integer sums;
/// a reducible image must produce at least one hit.
WallMembershipReport wall_membership(const UnitaryTuple& tuple,
                                     double angle_tol = 1e-8);

struct BatteryConfig {
    int n = 2;
    int g = 1;
    int trials = 50;
    std::uint64_t seed_base = 42;
    double tol_residual = 1e-10;
    double rank_tol = 1e-6;
    double fd_step = 1e-5;
    double angle_tol = 1e-8;
};

struct TrialRecord {
    std::uint64_t seed = 0;
    double equivariance_residual = 0.0;
    double det_residual = 0.0;
    double unitarity_residual = 0.0;
    int haar_rank = 0;
    std::vector<int> reducible_ranks;  // one per split (n1, n2), n1 <= n2
    bool pass = false;
};

struct BatteryReport {
    BatteryConfig config;
    std::vector<TrialRecord> trials;
    int full_rank_expected = 0;
    double fd_halfstep_relative_error = 0.0;
    std::vector<std::string> failures;
    bool pass = false;
};

/// The seeded verification battery for one (n, g): residual checks and the
/// rank dichotomy between Haar and block-reducible tuples.
BatteryReport run_battery(const BatteryConfig& config);

}  // namespace wallcross
