"""Time-delay embedding and the smallest-eigenvalue "law" of a short sequence.

A sequence of ``2l - 1`` points is folded into the ``l x l`` Hankel matrix
``S[i, j] = x[i + j]``. The eigenvector of ``S`` whose eigenvalue has the
smallest magnitude is the direction along which ``S`` varies least; if the
sequence obeys a linear recurrence of order below ``l`` it spans a null
vector, ``S v = 0``.

The eigensolver is a cyclic Jacobi iteration compiled with numba. It is
accurate for the small symmetric matrices that occur here (l up to ~140).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numba import njit, prange

OFF_TOL = 1e-13
MAX_SWEEPS = 100
_SIGN_TIE = 1e-12


class EigenError(ArithmeticError):
    pass


@dataclass(frozen=True)
class ShapeletVector:
    components: np.ndarray
    eigenvalue: float
    source_class: int | str | None = None


def hankel_embed(sequence, l: int) -> np.ndarray:
    x = np.asarray(sequence, dtype=np.float64)
    if l < 2:
        raise ValueError(f"embedding dimension must be >= 2, got {l}")
    if x.ndim != 1 or x.shape[0] != 2 * l - 1:
        raise ValueError(f"sequence length must be 2l-1 = {2 * l - 1}, got {x.shape[0] if x.ndim == 1 else x.shape}")
    idx = np.arange(l)
    return x[idx[:, None] + idx[None, :]]


@njit(cache=True)
def _jacobi(a, v, tol, max_sweeps):
    # Diagonalises the symmetric matrix ``a`` in place; accumulates rotations in ``v``.
    # Returns (sweeps used or -1, final off-diagonal Frobenius norm).
    n = a.shape[0]
    fro = 0.0
    for i in range(n):
        for j in range(n):
            fro += a[i, j] * a[i, j]
    thresh = tol * (1.0 + math.sqrt(fro))
    off = 0.0
    for sweep in range(max_sweeps + 1):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off += a[p, q] * a[p, q]
        off = math.sqrt(2.0 * off)
        if off <= thresh:
            return sweep, off
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)
                a[p, p] -= t * apq
                a[q, q] += t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for k in range(n):
                    if k == p or k == q:
                        continue
                    akp = a[k, p]
                    akq = a[k, q]
                    nkp = akp - s * (akq + tau * akp)
                    nkq = akq + s * (akp - tau * akq)
                    a[k, p] = nkp
                    a[p, k] = nkp
                    a[k, q] = nkq
                    a[q, k] = nkq
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = vkp - s * (vkq + tau * vkp)
                    v[k, q] = vkq + s * (vkp - tau * vkq)
    return -1, off


@njit(cache=True)
def _canonical_sign(vec, tie):
    n = vec.shape[0]
    big = 0.0
    for i in range(n):
        if abs(vec[i]) > big:
            big = abs(vec[i])
    for i in range(n):
        if abs(vec[i]) >= big - tie:
            if vec[i] < 0.0:
                for k in range(n):
                    vec[k] = -vec[k]
            return


@njit(cache=True)
def _min_abs_index(lam):
    # first entry of the (|lambda|, lambda, index) order
    best = 0
    for i in range(1, lam.shape[0]):
        a, b = abs(lam[i]), abs(lam[best])
        if a < b or (a == b and lam[i] < lam[best]):
            best = i
    return best


@njit(cache=True)
def _law_of(seq, l, out_vec, tol, max_sweeps, tie):
    a = np.empty((l, l))
    for i in range(l):
        for j in range(l):
            a[i, j] = seq[i + j]
    v = np.eye(l)
    sweeps, off = _jacobi(a, v, tol, max_sweeps)
    lam = np.empty(l)
    for i in range(l):
        lam[i] = a[i, i]
    best = _min_abs_index(lam)
    norm = 0.0
    for k in range(l):
        out_vec[k] = v[k, best]
        norm += out_vec[k] * out_vec[k]
    norm = math.sqrt(norm)
    for k in range(l):
        out_vec[k] /= norm
    _canonical_sign(out_vec, tie)
    return lam[best], sweeps, off


@njit(parallel=True, cache=True)
def _laws_batch(seqs, l, tol, max_sweeps, tie):
    n = seqs.shape[0]
    vecs = np.empty((n, l))
    lams = np.empty(n)
    status = np.empty(n, dtype=np.int64)
    offs = np.empty(n)
    for i in prange(n):
        lam, sweeps, off = _law_of(seqs[i], l, vecs[i], tol, max_sweeps, tie)
        lams[i] = lam
        status[i] = sweeps
        offs[i] = off
    return vecs, lams, status, offs


def symmetric_eigen(S) -> tuple[np.ndarray, np.ndarray]:
    """Eigen-decomposition of a symmetric matrix by cyclic Jacobi sweeps.

    Eigenvalues come back ordered by absolute value, ties broken by signed
    value and then by diagonal position; eigenvectors are the matching
    columns of the returned matrix.
    """
    S = np.array(S, dtype=np.float64)
    if S.ndim != 2 or S.shape[0] != S.shape[1]:
        raise ValueError("expected a square matrix")
    if not np.all(np.isfinite(S)):
        raise EigenError("matrix has non-finite entries")
    if not np.array_equal(S, S.T):
        raise ValueError("matrix is not symmetric")
    V = np.eye(S.shape[0])
    sweeps, off = _jacobi(S, V, OFF_TOL, MAX_SWEEPS)
    if sweeps < 0:
        raise EigenError(f"Jacobi did not converge in {MAX_SWEEPS} sweeps (off-diagonal norm {off:.3e})")
    lam = np.diag(S).copy()
    order = np.lexsort((np.arange(len(lam)), lam, np.abs(lam)))
    return lam[order], V[:, order]


def canonical_sign(vec) -> np.ndarray:
    """Flip ``vec`` so its largest-magnitude component (first on ties) is >= 0."""
    out = np.array(vec, dtype=np.float64)
    _canonical_sign(out, _SIGN_TIE)
    return out


def shapelet_vector(sequence, l: int, source_class=None) -> ShapeletVector:
    """Law of one sequence: the min-|eigenvalue| eigenvector of its Hankel matrix.

    Shares the compiled kernel with :func:`shapelet_vectors`, so both give
    bit-identical results.
    """
    S = hankel_embed(sequence, l)
    if not np.all(np.isfinite(S)):
        raise EigenError("sequence has non-finite values")
    vec = np.empty(l)
    lam, sweeps, off = _law_of(np.asarray(sequence, dtype=np.float64), l, vec, OFF_TOL, MAX_SWEEPS, _SIGN_TIE)
    if sweeps < 0:
        raise EigenError(f"Jacobi did not converge in {MAX_SWEEPS} sweeps (off-diagonal norm {off:.3e})")
    return ShapeletVector(vec, float(lam), source_class)


def shapelet_vectors(sequences, l: int) -> tuple[np.ndarray, np.ndarray]:
    """Batched :func:`shapelet_vector` over the rows of ``sequences``.

    Returns ``(vectors, eigenvalues)`` with ``vectors`` of shape ``(n, l)``.
    """
    seqs = np.ascontiguousarray(sequences, dtype=np.float64)
    if seqs.ndim != 2 or seqs.shape[1] != 2 * l - 1:
        raise ValueError(f"sequences must have shape (n, {2 * l - 1})")
    if not np.all(np.isfinite(seqs)):
        raise EigenError("sequences contain non-finite values")
    if seqs.shape[0] == 0:
        return np.empty((0, l)), np.empty(0)
    vecs, lams, status, offs = _laws_batch(seqs, l, OFF_TOL, MAX_SWEEPS, _SIGN_TIE)
    bad = np.flatnonzero(status < 0)
    if bad.size:
        raise EigenError(
            f"Jacobi did not converge for sequence {bad[0]} (off-diagonal norm {offs[bad[0]]:.3e})")
    return vecs, lams
