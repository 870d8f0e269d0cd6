"""Block-Hankel matrices of FIR systems.

Builds the Hankel matrices attached to the strictly causal / strictly
anti-causal parts of a matrix Laurent polynomial, extracts the McMillan
degree from their ranks, and runs the Hankel-based para-unitarity test
together with the structure of its defect.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .laurent import LaurentPoly

__all__ = [
    "BlockHankel", "HankelPair", "DefectReport", "ParaunitaryResult",
    "shift_J", "flip_T", "stack_B", "flat_B",
    "hankel_causal", "hankel_anticausal", "hankel_pair",
    "numerical_rank", "mcmillan_degree", "hankel_singular_values",
    "is_paraunitary_hankel", "defect_structure", "toeplitz_gram_equiv",
]

DEFAULT_RANK_TOL = 1e-10
DEFAULT_TOL = 1e-9
_ABS_FLOOR = 1e-14


@dataclass(frozen=True)
class BlockHankel:
    """Block matrix constant along block anti-diagonals."""

    p: int
    m: int
    block_rows: int
    block_cols: int
    data: np.ndarray

    def block(self, i, j):
        return self.data[i * self.p:(i + 1) * self.p,
                         j * self.m:(j + 1) * self.m]

    @property
    def is_empty(self):
        return self.data.size == 0

    def singular_values(self):
        if self.is_empty:
            return np.zeros(0)
        return np.linalg.svd(self.data, compute_uv=False)

    def rank(self, rank_tol=DEFAULT_RANK_TOL):
        return numerical_rank(self.singular_values(), rank_tol)


@dataclass(frozen=True)
class HankelPair:
    """Hankel matrices of the strictly causal / strictly anti-causal parts."""

    H: BlockHankel
    H_hat: BlockHankel


def _empty_hankel(p, m):
    return BlockHankel(p, m, 0, 0, np.zeros((0, 0), dtype=complex))


def _build(p, m, size, blockfn):
    data = np.zeros((size * p, size * m), dtype=complex)
    for i in range(size):
        for j in range(size):
            B = blockfn(i, j)
            if B is not None:
                data[i * p:(i + 1) * p, j * m:(j + 1) * m] = B
    return BlockHankel(p, m, size, size, data)


def shift_J(k, p):
    """kp x kp block-shift matrix with I_p on the block superdiagonal."""
    J = np.zeros((k * p, k * p), dtype=complex)
    for i in range(k - 1):
        J[i * p:(i + 1) * p, (i + 1) * p:(i + 2) * p] = np.eye(p)
    return J


def flip_T(k, rho):
    """k*rho x k*rho block anti-identity (flip) permutation."""
    T = np.zeros((k * rho, k * rho), dtype=complex)
    for i in range(k):
        j = k - 1 - i
        T[i * rho:(i + 1) * rho, j * rho:(j + 1) * rho] = np.eye(rho)
    return T


def stack_B(F, eta=0):
    """(n+eta)p x m block column: eta zero blocks over B_1 ... B_n."""
    zeros = np.zeros((eta * F.p, F.m), dtype=complex)
    return np.vstack([zeros] + [np.asarray(B) for B in F.coeffs])


def flat_B(F):
    """p x nm block row (B_1, ..., B_n)."""
    return np.hstack([np.asarray(B) for B in F.coeffs])


def hankel_causal(F, eta=None):
    """Hankel matrix of a strictly causal polynomial with padding eta.

    Block (i, j) equals B_{i+j+1-eta}; the first block row is the impulse
    response.  Defaults eta to the delay -q.
    """
    if F.q > 0:
        raise ValueError("hankel_causal needs a strictly causal polynomial "
                         f"(q <= 0), got q={F.q}")
    if eta is None:
        eta = -F.q
    eta = int(eta)
    if eta < 0:
        raise ValueError("eta must be nonnegative")
    n = F.n

    def blk(i, j):
        k = i + j + 1 - eta
        return F.coeffs[k - 1] if 1 <= k <= n else None

    return _build(F.p, F.m, n + eta, blk)


def hankel_anticausal(F, eta=None):
    """Hankel matrix of a strictly anti-causal polynomial, reversed order."""
    if F.q < F.n + 1:
        raise ValueError("hankel_anticausal needs a strictly anti-causal "
                         f"polynomial (q >= n+1), got q={F.q}, n={F.n}")
    if eta is None:
        eta = F.q - F.n - 1
    eta = int(eta)
    if eta < 0:
        raise ValueError("eta must be nonnegative")
    n = F.n

    def blk(i, j):
        k = i + j + 1 - eta
        return F.coeffs[n - k] if 1 <= k <= n else None

    return _build(F.p, F.m, n + eta, blk)


def hankel_pair(F):
    """Hankel matrices of F_r and F_l for any shift regime.

    Degenerate regimes (purely causal or purely anti-causal) return one
    empty 0x0 member.
    """
    q, n = F.q, F.n
    if q <= 0:
        return HankelPair(hankel_causal(F), _empty_hankel(F.p, F.m))
    if q >= n + 1:
        return HankelPair(_empty_hankel(F.p, F.m), hankel_anticausal(F))
    # genuine Laurent regime q in [1, n]: H from B_{q+1}..B_n, Hhat from
    # B_{q-1}..B_1
    tail = list(F.coeffs[q:])
    head = list(F.coeffs[:q - 1][::-1])
    H = (hankel_causal(LaurentPoly(0, tail), 0) if tail
         else _empty_hankel(F.p, F.m))
    H_hat = (hankel_causal(LaurentPoly(0, head), 0) if head
             else _empty_hankel(F.p, F.m))
    return HankelPair(H, H_hat)


def numerical_rank(sigma, rank_tol=DEFAULT_RANK_TOL):
    """Rank by relative singular-value thresholding.

    Counts sigma_k > rank_tol * sigma_1, with an absolute floor when the
    leading singular value itself vanishes.
    """
    sigma = np.asarray(sigma, dtype=float)
    if sigma.size == 0 or sigma[0] <= _ABS_FLOOR:
        return 0
    return int(np.sum(sigma > rank_tol * sigma[0]))


def mcmillan_degree(F, rank_tol=DEFAULT_RANK_TOL):
    """McMillan degree rank(H) + rank(H_hat) of the Hankel pair."""
    pair = hankel_pair(F)
    return pair.H.rank(rank_tol) + pair.H_hat.rank(rank_tol)


def hankel_singular_values(H):
    return H.singular_values()


@dataclass(frozen=True)
class ParaunitaryResult:
    member: bool
    residual: float
    role: str                 # "isometry" or "co-isometry"
    residual_hankel: float
    residual_sums: float


def _normalized_h0(F):
    F0 = F.shift(-F.q)
    return hankel_causal(F0, 0), F0


def _paraunitary_residuals(F):
    """Residuals of the Hankel-form and coefficient-sum membership tests."""
    H0, F0 = _normalized_h0(F)
    p, m, n = F.p, F.m, F.n
    A = H0.data
    if p >= m:
        role = "isometry"
        G = np.eye(n * m) - A.conj().T @ A
        res_h = float(np.max(np.abs(G[:, :m])))
        eye = np.eye(m)
        res_s = 0.0
        for k in range(n):
            S = sum(F0.coeffs[k + j].conj().T @ F0.coeffs[j]
                    for j in range(n - k))
            target = eye if k == 0 else 0.0
            res_s = max(res_s, float(np.max(np.abs(S - target))))
    else:
        role = "co-isometry"
        G = np.eye(n * p) - A @ A.conj().T
        res_h = float(np.max(np.abs(G[:p, :])))
        eye = np.eye(p)
        res_s = 0.0
        for k in range(n):
            S = sum(F0.coeffs[k + j] @ F0.coeffs[j].conj().T
                    for j in range(n - k))
            target = eye if k == 0 else 0.0
            res_s = max(res_s, float(np.max(np.abs(S - target))))
    return role, res_h, res_s


def is_paraunitary_hankel(F, tol=DEFAULT_TOL):
    """Membership test for the para-unitary class via the Hankel matrix.

    Runs both the Hankel Gram-condition and the equivalent coefficient-sum
    conditions; the two must agree (they are the same linear relations), so
    disagreement beyond 10*tol signals an internal indexing bug.
    """
    role, res_h, res_s = _paraunitary_residuals(F)
    if abs(res_h - res_s) > 10 * tol:
        raise RuntimeError(
            "internal inconsistency between Hankel and coefficient-sum "
            f"para-unitarity tests: {res_h:.3e} vs {res_s:.3e}")
    res = max(res_h, res_s)
    return ParaunitaryResult(res <= tol, res, role, res_h, res_s)


@dataclass(frozen=True)
class DefectReport:
    role: str
    zero_block_ok: bool
    coupling_ok: bool
    delta: np.ndarray
    delta_eigenvalues: np.ndarray
    delta_psd: bool
    delta_contraction: bool
    delta_projection: bool


def defect_structure(F, tol=DEFAULT_TOL):
    """Structure of I - H*H (or I - HH*) for a para-unitary polynomial.

    The leading block must vanish together with its couplings; the trailing
    block Delta is reported with its PSD / weak-contraction classification
    and, in the square case, whether it is an orthogonal projection.
    """
    check = is_paraunitary_hankel(F, tol)
    if not check.member:
        raise ValueError("defect_structure requires a para-unitary input "
                         f"(residual {check.residual:.3e})")
    H0, _ = _normalized_h0(F)
    p, m = F.p, F.m
    A = H0.data
    if p >= m:
        X = np.eye(F.n * m) - A.conj().T @ A
        s = m
    else:
        X = np.eye(F.n * p) - A @ A.conj().T
        s = p
    zero_ok = float(np.max(np.abs(X[:s, :s]))) <= tol
    coupling = max(float(np.max(np.abs(X[:s, s:]), initial=0.0)),
                   float(np.max(np.abs(X[s:, :s]), initial=0.0)))
    delta = X[s:, s:]
    herm = (delta + delta.conj().T) / 2.0
    eigs = np.linalg.eigvalsh(herm) if herm.size else np.zeros(0)
    psd = bool(eigs.size == 0 or eigs.min() >= -tol)
    contraction = bool(eigs.size == 0 or eigs.max() <= 1.0 + tol)
    projection = bool(p == m and
                      np.all(np.minimum(np.abs(eigs), np.abs(eigs - 1)) <= tol))
    return DefectReport(check.role, zero_ok, coupling <= tol, delta, eigs,
                        psd, contraction, projection)


def toeplitz_gram_equiv(F):
    """Residual of the Hankel-vs-triangular-Toeplitz Gram identity.

    Flipping the block rows (columns) of H_0 produces a block-triangular
    Toeplitz matrix with the same Gram products, so the residual is pure
    rounding noise.
    """
    H0, _ = _normalized_h0(F)
    A = H0.data
    n = F.n
    Tp = flip_T(n, F.p)
    Tm = flip_T(n, F.m)
    left = Tp @ A
    right = A @ Tm
    r1 = float(np.max(np.abs(A.conj().T @ A - left.conj().T @ left)))
    r2 = float(np.max(np.abs(A @ A.conj().T - right @ right.conj().T)))
    return max(r1, r2)
