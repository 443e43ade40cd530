#pragma once

#include "qdrd/factorization.hpp"
#include "qdrd/matrix.hpp"
#include "qdrd/op_counter.hpp"

namespace qdrd {

struct LsSolution {
    Vector x_star;
    double residual_sq = 0.0;
};

/*
 * Solve R x = b for upper-triangular R. When a diagonal entry is stored
 * with an exactly zero imaginary part (which the factorizations here
 * guarantee), each row costs one real reciprocal division, so the whole
 * solve performs exactly n divisions. A general complex diagonal falls back
 * to conjugate division and costs what it costs.
 */
inline Vector back_substitute(const Matrix& r, const Vector& b,
                              OpCounter& ctr = OpCounter::disabled()) {
    const std::size_t n = r.rows();
    if (r.cols() != n) throw DimensionError("back_substitute: matrix must be square");
    if (b.size() != n) throw DimensionError("back_substitute: length mismatch");

    PhaseScope scope(ctr, Phase::back_substitution);
    Vector x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        Complex s = b[ii];
        for (std::size_t j = ii + 1; j < n; ++j) s = csub(s, cmul(r(ii, j), x[j], ctr), ctr);
        const Complex diag = r(ii, ii);
        if (diag == Complex{0.0, 0.0})
            throw SingularityError("back_substitute: zero diagonal at " + std::to_string(ii));
        if (diag.imag() == 0.0) {
            const double inv = rdiv(1.0, diag.real(), ctr);
            x[ii] = cscale(inv, s, ctr);
        } else {
            const double den = cabs2(diag, ctr);
            x[ii] = cdiv_real(cmul(s, std::conj(diag), ctr), den, ctr);
        }
    }
    return x;
}

// Division-free solve for unit-diagonal R' (the QDRD triangle).
inline Vector back_substitute_unit_diag(const Matrix& r, const Vector& b,
                                        OpCounter& ctr = OpCounter::disabled()) {
    const std::size_t n = r.rows();
    if (r.cols() != n) throw DimensionError("back_substitute_unit_diag: matrix must be square");
    if (b.size() != n) throw DimensionError("back_substitute_unit_diag: length mismatch");
    for (std::size_t i = 0; i < n; ++i)
        if (r(i, i) != Complex{1.0, 0.0})
            throw DimensionError("back_substitute_unit_diag: diagonal is not exactly one");

    PhaseScope scope(ctr, Phase::back_substitution);
    Vector x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        Complex s = b[ii];
        for (std::size_t j = ii + 1; j < n; ++j) s = csub(s, cmul(r(ii, j), x[j], ctr), ctr);
        x[ii] = s;
    }
    return x;
}

/*
 * Unconstrained least squares via thin QR: solve R x = Q^H y, with the
 * residual from the norm split |y|^2 - |Q^H y|^2 (the |Qtilde^H y|^2 term
 * of the full factorization, without materializing Qtilde). The transform
 * and residual are booked under the factorization phase.
 */
inline LsSolution solve_ls_qr(const Matrix& a, const Vector& y,
                              OpCounter& ctr = OpCounter::disabled()) {
    if (a.rows() != y.size()) throw DimensionError("solve_ls_qr: length mismatch");
    const QrFactors f = thin_qr_mgs(a, ctr);
    PhaseScope scope(ctr, Phase::factorization);
    const Vector z = conj_transpose_matvec(f.q, y, ctr);
    const Vector x = back_substitute(f.r, z, ctr);
    double res = rsub(sq_norm2(y, ctr), sq_norm2(z, ctr), ctr);
    if (res < 0.0) res = 0.0; // roundoff on consistent systems
    return {x, res};
}

/*
 * Same problem through the square-root-free path: R' x = Q'^H y after the
 * normalizer cancels from the normal equations. No square roots anywhere,
 * no divisions in back substitution. Q~ is unavailable here, so the
 * residual is recomputed directly from y - A x.
 */
inline LsSolution solve_ls_qdrd(const Matrix& a, const Vector& y,
                                OpCounter& ctr = OpCounter::disabled()) {
    if (a.rows() != y.size()) throw DimensionError("solve_ls_qdrd: length mismatch");
    const QdrdFactors f = qdrd_sqrt_free(a, ctr);
    PhaseScope scope(ctr, Phase::factorization);
    const Vector z = conj_transpose_matvec(f.q_prime, y, ctr);
    const Vector x = back_substitute_unit_diag(f.r_prime, z, ctr);
    const double res = sq_norm2(vec_sub(y, matvec(a, x, ctr), ctr), ctr);
    return {x, res};
}

} // namespace qdrd
