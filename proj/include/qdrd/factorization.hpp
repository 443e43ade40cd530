#pragma once

#include <cstddef>
#include <vector>

#include "qdrd/errors.hpp"
#include "qdrd/matrix.hpp"
#include "qdrd/op_counter.hpp"
#include "qdrd/scalar_ops.hpp"

namespace qdrd {

// A column is declared dependent when its residual squared norm drops to
// this fraction of |A|_F^2 (squared-norm scale of double precision).
inline constexpr double kRankTolerance = 1e-24;

// Thin QR: A = Q R, Q^H Q = I, R upper triangular with real positive
// diagonal.
struct QrFactors {
    Matrix q; // m x n, orthonormal columns
    Matrix r; // n x n
};

// Full QR: A = Qbar Rbar with Qbar m x m unitary. Columns n..m-1 of Qbar
// form the Qtilde block of the thin/full relation.
struct FullQrFactors {
    Matrix q_bar; // m x m
    Matrix r_bar; // m x n

    Matrix q_tilde() const {
        const std::size_t m = q_bar.rows(), n = r_bar.cols();
        Matrix qt(m, m - n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = n; j < m; ++j) qt(i, j - n) = q_bar(i, j);
        return qt;
    }
};

// Square-root-free QDRD: A = Q' D' R' where Q' = Q D^{-1} has orthogonal
// but unnormalized columns (Q'^H Q' = D'^{-1}), D' = D^2 holds the squared
// column norms, and R' = D^{-1} R has unit diagonal.
struct QdrdFactors {
    Matrix q_prime;              // m x n
    std::vector<double> d_prime; // length n, entries d'_j = d_jj^2 > 0
    Matrix r_prime;              // n x n, diagonal exactly 1.0
};

/*
 * Modified Gram-Schmidt thin QR.
 *
 * Column j is orthogonalized against the previously fixed columns, its norm
 * becomes r_jj (one square root per column, booked under the normalization
 * phase together with the 2m divisions that scale the column), and the
 * projection coefficients r_jk need no division because q_j is already
 * normalized. Diagonal entries are stored with an exactly zero imaginary
 * part, which back substitution later relies on.
 */
inline QrFactors thin_qr_mgs(const Matrix& a, OpCounter& ctr = OpCounter::disabled()) {
    const std::size_t m = a.rows(), n = a.cols();
    if (m < n) throw DimensionError("thin_qr_mgs: need rows >= cols, got " + dim_str(m, n));

    PhaseScope scope(ctr, Phase::factorization);
    const double fro2 = sq_norm_fro(a, ctr);

    Matrix v = a; // residual columns, consumed left to right
    Matrix q(m, n);
    Matrix r(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double d2 = 0.0;
        for (std::size_t i = 0; i < m; ++i) d2 = radd(d2, cabs2(v(i, j), ctr), ctr);
        if (d2 <= kRankTolerance * fro2)
            throw SingularityError("thin_qr_mgs: column " + std::to_string(j) +
                                   " is numerically dependent");
        {
            PhaseScope norm(ctr, Phase::normalization);
            const double d = rsqrt(d2, ctr);
            for (std::size_t i = 0; i < m; ++i) q(i, j) = cdiv_real(v(i, j), d, ctr);
            r(j, j) = Complex{d, 0.0};
        }
        for (std::size_t k = j + 1; k < n; ++k) {
            Complex coef{0.0, 0.0};
            for (std::size_t i = 0; i < m; ++i)
                coef = cadd(coef, cmul(std::conj(q(i, j)), v(i, k), ctr), ctr);
            r(j, k) = coef;
            for (std::size_t i = 0; i < m; ++i)
                v(i, k) = csub(v(i, k), cmul(coef, q(i, j), ctr), ctr);
        }
    }
    return {q, r};
}

/*
 * Square-root-free MGS (QDRD). Identical sweep structure to thin_qr_mgs,
 * but the column scaling divides by the squared norm d' instead of the norm
 * d, so no square root is ever taken. The projection coefficients
 * r'_jk = q'_j^H v_k come out right because q'_j already carries the 1/d'_j
 * factor; the update subtracts r'_jk times the raw residual column.
 * Division counts match thin_qr_mgs exactly; the entire saving is the n
 * square roots here plus the n diagonal divisions in back substitution.
 */
inline QdrdFactors qdrd_sqrt_free(const Matrix& a, OpCounter& ctr = OpCounter::disabled()) {
    const std::size_t m = a.rows(), n = a.cols();
    if (m < n) throw DimensionError("qdrd_sqrt_free: need rows >= cols, got " + dim_str(m, n));

    PhaseScope scope(ctr, Phase::factorization);
    const double fro2 = sq_norm_fro(a, ctr);

    Matrix v = a;
    Matrix qp(m, n);
    Matrix rp(n, n);
    std::vector<double> dp(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double d2 = 0.0;
        for (std::size_t i = 0; i < m; ++i) d2 = radd(d2, cabs2(v(i, j), ctr), ctr);
        if (d2 <= kRankTolerance * fro2)
            throw SingularityError("qdrd_sqrt_free: column " + std::to_string(j) +
                                   " is numerically dependent");
        dp[j] = d2;
        {
            PhaseScope norm(ctr, Phase::normalization);
            for (std::size_t i = 0; i < m; ++i) qp(i, j) = cdiv_real(v(i, j), d2, ctr);
            rp(j, j) = Complex{1.0, 0.0}; // set, not computed
        }
        for (std::size_t k = j + 1; k < n; ++k) {
            Complex coef{0.0, 0.0};
            for (std::size_t i = 0; i < m; ++i)
                coef = cadd(coef, cmul(std::conj(qp(i, j)), v(i, k), ctr), ctr);
            rp(j, k) = coef;
            for (std::size_t i = 0; i < m; ++i)
                v(i, k) = csub(v(i, k), cmul(coef, v(i, j), ctr), ctr);
        }
    }
    return {qp, dp, rp};
}

/*
 * Full QR via Householder reflections, then a diagonal re-phasing so the
 * leading n x n block of Rbar has real positive diagonal and the first n
 * columns of Qbar match the thin MGS factor entrywise. Rank deficiency is
 * tolerated (a zero pivot just skips the re-phase for that column).
 */
inline FullQrFactors full_qr_householder(const Matrix& a, OpCounter& ctr = OpCounter::disabled()) {
    const std::size_t m = a.rows(), n = a.cols();
    if (m < n)
        throw DimensionError("full_qr_householder: need rows >= cols, got " + dim_str(m, n));

    PhaseScope scope(ctr, Phase::factorization);
    Matrix rb = a;
    Matrix qb = Matrix::identity(m);
    std::vector<Complex> hv(m);

    for (std::size_t k = 0; k < n; ++k) {
        double s2 = 0.0;
        for (std::size_t i = k; i < m; ++i) s2 = radd(s2, cabs2(rb(i, k), ctr), ctr);
        if (s2 == 0.0) continue; // column already annihilated

        const double norm = rsqrt(s2, ctr);
        const Complex x0 = rb(k, k);
        const double x0abs2 = cabs2(x0, ctr);
        Complex phase{1.0, 0.0};
        if (x0abs2 > 0.0) phase = cdiv_real(x0, rsqrt(x0abs2, ctr), ctr);
        const Complex alpha = cscale(-norm, phase, ctr); // sign avoids cancellation in v[k]

        for (std::size_t i = k; i < m; ++i) hv[i] = rb(i, k);
        hv[k] = csub(hv[k], alpha, ctr);
        double vsq = 0.0;
        for (std::size_t i = k; i < m; ++i) vsq = radd(vsq, cabs2(hv[i], ctr), ctr);
        if (vsq == 0.0) continue;
        const double beta = rdiv(2.0, vsq, ctr);

        // Rbar <- H Rbar on the trailing columns; column k is set exactly.
        for (std::size_t j = k + 1; j < n; ++j) {
            Complex acc{0.0, 0.0};
            for (std::size_t i = k; i < m; ++i)
                acc = cadd(acc, cmul(std::conj(hv[i]), rb(i, j), ctr), ctr);
            const Complex t = cscale(beta, acc, ctr);
            for (std::size_t i = k; i < m; ++i)
                rb(i, j) = csub(rb(i, j), cmul(hv[i], t, ctr), ctr);
        }
        rb(k, k) = alpha;
        for (std::size_t i = k + 1; i < m; ++i) rb(i, k) = Complex{0.0, 0.0};

        // Qbar <- Qbar H (H is Hermitian and involutive).
        for (std::size_t i = 0; i < m; ++i) {
            Complex acc{0.0, 0.0};
            for (std::size_t j = k; j < m; ++j)
                acc = cadd(acc, cmul(qb(i, j), hv[j], ctr), ctr);
            const Complex t = cscale(beta, acc, ctr);
            for (std::size_t j = k; j < m; ++j)
                qb(i, j) = csub(qb(i, j), cmul(t, std::conj(hv[j]), ctr), ctr);
        }
    }

    // Re-phase to the shared convention: diag(Rbar) real and positive.
    for (std::size_t k = 0; k < n; ++k) {
        const double mag2 = cabs2(rb(k, k), ctr);
        if (mag2 == 0.0) continue;
        const double mag = rsqrt(mag2, ctr);
        const Complex ph = cdiv_real(rb(k, k), mag, ctr);
        const Complex phc = std::conj(ph);
        for (std::size_t i = 0; i < m; ++i) qb(i, k) = cmul(qb(i, k), ph, ctr);
        for (std::size_t j = k + 1; j < n; ++j) rb(k, j) = cmul(rb(k, j), phc, ctr);
        rb(k, k) = Complex{mag, 0.0};
    }
    return {qb, rb};
}

/*
 * Test-only bridge from QDRD back to thin QR: D = sqrt(D'), Q = Q' D,
 * R = D R'. This is the reference path that does spend square roots.
 */
inline QrFactors relate_qdrd_to_qr(const QdrdFactors& f, OpCounter& ctr = OpCounter::disabled()) {
    const std::size_t m = f.q_prime.rows(), n = f.q_prime.cols();
    Matrix q(m, n);
    Matrix r(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        if (!(f.d_prime[j] > 0.0))
            throw SingularityError("relate_qdrd_to_qr: d'[" + std::to_string(j) +
                                   "] is not positive");
        const double d = rsqrt(f.d_prime[j], ctr);
        for (std::size_t i = 0; i < m; ++i) q(i, j) = cscale(d, f.q_prime(i, j), ctr);
        for (std::size_t k = j + 1; k < n; ++k) r(j, k) = cscale(d, f.r_prime(j, k), ctr);
        r(j, j) = Complex{d, 0.0};
    }
    return {q, r};
}

} // namespace qdrd
