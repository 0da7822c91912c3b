#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace stagnys {

class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// LU factorization with partial (row) pivoting.  A factorization is immutable
// after construction and may be shared across concurrent solves.
class LUFactors {
public:
    explicit LUFactors(const Eigen::MatrixXcd& a); // throws SingularMatrixError

    Eigen::VectorXcd solve(const Eigen::VectorXcd& b) const;
    Eigen::VectorXcd solve_adjoint(const Eigen::VectorXcd& b) const;
    Eigen::MatrixXcd reconstruct() const; // == A up to rounding
    double growth() const { return growth_; } // max|U| / max|A|
    Eigen::Index size() const { return lu_.rows(); }

private:
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu_;
    double growth_ = 0.0;
};

Eigen::VectorXcd lu_solve(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& b);

struct Cond2Result {
    double value = 0.0;
    bool converged = false;
    int iterations = 0;
};

// Spectral condition number sigma_max/sigma_min via power iteration on A*A
// and inverse iteration through the LU factors.  Deterministic all-ones start;
// stops when successive Rayleigh estimates agree to `tol` relative or after
// `max_iter` iterations (then converged=false and the best estimate is kept).
Cond2Result cond2(const Eigen::MatrixXcd& a, double tol = 1e-6, int max_iter = 10000);

// sigma_max alone (power iteration on A*A).
double spectral_norm(const Eigen::MatrixXcd& a, double tol = 1e-6, int max_iter = 10000);

} // namespace stagnys
