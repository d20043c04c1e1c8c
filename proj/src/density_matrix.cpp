#include "escat/density_matrix.hpp"

#include <cmath>

namespace escat {

namespace {

constexpr double kHermitianTol = 1e-12; // relative Frobenius
constexpr double kTraceTol = 1e-12;
constexpr double kPsdTol = 1e-12;       // relative to max eigenvalue
constexpr double kEigClipTol = 1e-10;
constexpr int kContrastScanSamples = 1024;

std::complex<double> cis(double phase) {
    return {std::cos(phase), std::sin(phase)};
}

// (|v| * len)^2 as a checked dimensionless exponent
double exponent_sq(const Vec3& v, double len_m) {
    const Quantity x = Quantity(v.norm(), Dim::inverse_length) *
                       Quantity(len_m, Dim::length);
    const double s = x.as_dimensionless();
    return s * s;
}

} // namespace

BeamSet::BeamSet(WaveVector k0, std::vector<WaveVector> transfers)
    : k0_(k0), transfers_(std::move(transfers)) {
    if (transfers_.empty())
        throw ValidationError("beam set must contain at least one transfer");
    for (std::size_t i = 0; i < transfers_.size(); ++i) {
        if (transfers_[i].norm2() == 0.0)
            throw ValidationError("forward beam q = 0 is not allowed in a beam set");
        if (!std::isfinite(transfers_[i].norm2()))
            throw ValidationError("beam transfers must be finite");
        for (std::size_t j = 0; j < i; ++j)
            if (transfers_[i] == transfers_[j])
                throw ValidationError("duplicate momentum transfer in beam set");
    }
}

bool BeamSet::is_axial() const {
    for (const auto& q : transfers_)
        if (q.x != 0.0 || q.y != 0.0)
            return false;
    return true;
}

DensityMatrix::DensityMatrix(BeamSet basis, Eigen::MatrixXcd unnormalized)
    : basis_(std::move(basis)), gamma_(std::move(unnormalized)) {
    const int d = basis_.dim();
    if (gamma_.rows() != d || gamma_.cols() != d)
        throw ValidationError("gamma dimension does not match beam set");

    const double trace = gamma_.trace().real();
    if (!(trace > 0.0) || !std::isfinite(trace))
        throw NumericError("degenerate normalization: trace of unnormalized gamma "
                           "is not positive (all amplitudes vanish?)");
    gamma_ /= trace;

    const double scale = gamma_.norm();
    if ((gamma_ - gamma_.adjoint()).norm() > kHermitianTol * scale)
        throw NumericError("density matrix is not Hermitian");
    if (std::abs(gamma_.trace().real() - 1.0) > kTraceTol ||
        std::abs(gamma_.trace().imag()) > kTraceTol)
        throw NumericError("density matrix trace differs from 1");

    const Eigen::VectorXd ev = eigenvalues();
    if (ev(0) < -kPsdTol * ev(d - 1))
        throw NumericError("density matrix is not positive semidefinite");
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gamma_,
                                                           Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericError("Hermitian eigendecomposition failed");
    return solver.eigenvalues();
}

std::complex<double> overlap_gaussian(const SampleState& state, const WaveVector& q,
                                      const WaveVector& q_prime) {
    const Vec3 dq = static_cast<const Vec3&>(q_prime) - static_cast<const Vec3&>(q);
    const double damping = std::exp(-0.5 * exponent_sq(dq, state.sigma0));
    return damping * cis(dq.dot(state.cm_mean));
}

namespace {

Eigen::MatrixXcd assemble_direct(const SampleState& state, const Lattice& lattice,
                                 const AtomWavefunction& wf, const BeamSet& beams,
                                 double prefactor) {
    const int d = beams.dim();
    const auto& qs = beams.transfers();
    std::vector<std::complex<double>> f(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        f[static_cast<std::size_t>(i)] = f_q(lattice, wf, qs[static_cast<std::size_t>(i)], prefactor);

    const double s0sq = state.sigma0 * state.sigma0;
    Eigen::MatrixXcd g(d, d);
    for (int i = 0; i < d; ++i) {
        const auto& qi = qs[static_cast<std::size_t>(i)];
        for (int j = 0; j < d; ++j) {
            const auto& qj = qs[static_cast<std::size_t>(j)];
            // (|q|^2 + |q'|^2 - q'.q) sigma0^2, dimensionless by construction
            const double expo = (qi.norm2() + qj.norm2() - qj.dot(qi)) * s0sq;
            g(i, j) = std::exp(-expo) * f[static_cast<std::size_t>(i)] *
                      std::conj(f[static_cast<std::size_t>(j)]);
        }
    }
    return g;
}

Eigen::MatrixXcd assemble_factorized(const SampleState& state, const Lattice& lattice,
                                     const AtomWavefunction& wf, const BeamSet& beams,
                                     double prefactor) {
    const int d = beams.dim();
    const auto& qs = beams.transfers();
    std::vector<std::complex<double>> c(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        c[static_cast<std::size_t>(i)] =
            c_q_asymptotic(state, lattice, wf, qs[static_cast<std::size_t>(i)], prefactor);

    Eigen::MatrixXcd g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            g(i, j) = c[static_cast<std::size_t>(i)] *
                      std::conj(c[static_cast<std::size_t>(j)]) *
                      overlap_gaussian(state, qs[static_cast<std::size_t>(i)],
                                       qs[static_cast<std::size_t>(j)]);
    return g;
}

} // namespace

DensityMatrix build_rho_asymptotic(const SampleState& state, const Lattice& lattice,
                                   const AtomWavefunction& wf, const BeamSet& beams,
                                   double coulomb_prefactor) {
    return DensityMatrix(beams,
                         assemble_direct(state, lattice, wf, beams, coulomb_prefactor));
}

DensityMatrix build_rho_factorized(const SampleState& state, const Lattice& lattice,
                                   const AtomWavefunction& wf, const BeamSet& beams,
                                   double coulomb_prefactor) {
    return DensityMatrix(
        beams, assemble_factorized(state, lattice, wf, beams, coulomb_prefactor));
}

double purity(const DensityMatrix& rho) {
    return rho.gamma().squaredNorm(); // sum |gamma_{q,q'}|^2
}

double von_neumann_entropy(const DensityMatrix& rho, EntropyBase base) {
    const Eigen::VectorXd ev = rho.eigenvalues();
    double s = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        double lambda = ev(i);
        if (lambda < -kEigClipTol || lambda > 1.0 + kEigClipTol)
            throw NumericError("positivity violation: eigenvalue " +
                               std::to_string(lambda) + " outside [0, 1]");
        lambda = std::min(1.0, std::max(0.0, lambda));
        if (lambda > 0.0)
            s -= lambda * std::log(lambda);
    }
    return base == EntropyBase::bits ? s / std::log(2.0) : s;
}

double intensity(const DensityMatrix& rho, const Vec3& r_m) {
    const auto& qs = rho.basis().transfers();
    const int d = rho.dim();
    std::complex<double> acc{0.0, 0.0};
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const Vec3 dq = static_cast<const Vec3&>(qs[static_cast<std::size_t>(i)]) -
                            static_cast<const Vec3&>(qs[static_cast<std::size_t>(j)]);
            acc += rho.gamma()(i, j) * cis(dq.dot(r_m));
        }
    if (std::abs(acc.imag()) > 1e-12 * std::max(1.0, std::abs(acc.real())))
        throw NumericError("intensity has a non-negligible imaginary residue");
    return acc.real();
}

double fringe_contrast(const DensityMatrix& rho, std::optional<Vec3> scan_direction) {
    if (rho.dim() != 2)
        throw ValidationError("fringe contrast is defined for a two-beam basis");
    const auto& qs = rho.basis().transfers();
    const Vec3 dq = static_cast<const Vec3&>(qs[0]) - static_cast<const Vec3&>(qs[1]);

    Vec3 dir = scan_direction.value_or(dq);
    const double dn = dir.norm();
    if (!(dn > 0.0))
        throw ValidationError("scan direction must be nonzero");
    dir = dir / dn;
    const double rate = std::abs(dq.dot(dir)); // fringe phase per meter along dir
    if (rate == 0.0)
        throw ValidationError("scan direction is perpendicular to the fringes");

    const double period = 2.0 * M_PI / rate;
    auto probe = [&](double t) { return intensity(rho, dir * t); };

    // Coarse scan, then ternary refinement around the best samples. For a
    // single cosine this pins the extrema to machine precision.
    const double step = period / kContrastScanSamples;
    double tmax = 0.0, tmin = 0.0, imax = probe(0.0), imin = imax;
    for (int i = 1; i < kContrastScanSamples; ++i) {
        const double v = probe(i * step);
        if (v > imax) { imax = v; tmax = i * step; }
        if (v < imin) { imin = v; tmin = i * step; }
    }
    auto refine = [&](double t0, bool maximize) {
        double lo = t0 - step, hi = t0 + step;
        for (int it = 0; it < 200 && (hi - lo) > 1e-18 * period + 0.0; ++it) {
            const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
            const bool keep_left = maximize ? probe(m1) > probe(m2) : probe(m1) < probe(m2);
            if (keep_left) hi = m2; else lo = m1;
        }
        return probe(0.5 * (lo + hi));
    };
    imax = std::max(imax, refine(tmax, true));
    imin = std::min(imin, refine(tmin, false));

    const double denom = imax + imin;
    if (!(denom > 0.0))
        throw NumericError("degenerate intensity profile");
    return (imax - imin) / denom;
}

} // namespace escat
