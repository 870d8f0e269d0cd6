"""Structured families of FIR polynomials built from a given one.

Coefficient reversal, Hankel reblocking, power dilation, sparse exponent
placement, rectangular stacking/widening, block compositions and the
Hankel-level product formula.  Each construction is a pure transformation
of LaurentPoly values; para-unitarity preservation is checked in tests,
not assumed here.
"""
from __future__ import annotations

import numpy as np

from .laurent import LaurentPoly
from .hankel import BlockHankel, flip_T, hankel_causal

__all__ = [
    "reverse_poly", "reblock", "dilate", "exponent_map",
    "u_iso", "u_coiso", "rect_stack", "rect_widen",
    "compose_diag", "compose_mix_rows", "compose_mix_cols",
    "product_via_hankel", "interleave_coeffs", "hankel_abr",
]


def reverse_poly(F):
    """Reverse the coefficient order B_k -> B_{n+1-k}, keeping the shift."""
    return LaurentPoly(F.q, F.coeffs[::-1])


def reblock(F, j):
    """jp x jm polynomial read off the j-superblocked delayed Hankel.

    Requires a delayed strictly causal input (q <= -1) and j in [1, 1-q].
    The extended Hankel (delay eta = -q) is padded with zero block
    rows/columns up to a block count divisible by j, partitioned into
    j x j superblocks, and the first superblock row gives the new
    coefficients.  The result has q = 0, equals the input as a function
    for j = 1, and shares its McMillan degree for every valid j.
    """
    if F.q > -1:
        raise ValueError(f"reblock needs a delayed polynomial (q <= -1), "
                         f"got q={F.q}")
    j = int(j)
    eta = -F.q
    if not 1 <= j <= 1 + eta:
        raise ValueError(f"j must lie in [1, {1 + eta}]")
    p, m, n = F.p, F.m, F.n
    total = n + eta
    count = -(-total // j)         # superblock columns after zero padding

    def c(k):
        # 0-based coefficient sequence: eta zeros, B_1, ..., B_n, zeros
        if eta <= k <= eta + n - 1:
            return F.coeffs[k - eta]
        return np.zeros((p, m), dtype=complex)

    out = []
    for t in range(count):
        D = np.zeros((j * p, j * m), dtype=complex)
        for i in range(j):
            for l in range(j):
                D[i * p:(i + 1) * p, l * m:(l + 1) * m] = c(t * j + i + l)
        out.append(D)
    return LaurentPoly(0, out)


def dilate(F, a, gamma):
    """z^a (z^-gamma B_1 + z^-2gamma B_2 + ...): spread powers by gamma."""
    gamma = int(gamma)
    if gamma < 1:
        raise ValueError("gamma must be a positive integer")
    p, m = F.p, F.m
    out = [np.zeros((p, m), dtype=complex) for _ in range(F.n * gamma)]
    for k, B in enumerate(F.coeffs, start=1):
        out[k * gamma - 1] = np.array(B)
    return LaurentPoly(int(a), out)


def _runs(exponents):
    runs = [[exponents[0]]]
    for e in exponents[1:]:
        if e == runs[-1][-1] + 1:
            runs[-1].append(e)
        else:
            runs.append([e])
    return runs


def exponent_map(F, exponents):
    """Place the coefficients at the given z^-e exponents, zeros between.

    Only patterns made of equal-length runs of consecutive exponents with
    uniformly spaced run starts are accepted (the interleavings the Hankel
    machinery covers); anything else is rejected.
    """
    exponents = [int(e) for e in exponents]
    if len(exponents) != F.n:
        raise ValueError(f"need exactly n={F.n} exponents")
    if exponents[0] < 1 or any(b <= a for a, b in zip(exponents,
                                                      exponents[1:])):
        raise ValueError("exponents must be strictly increasing positive "
                         "integers")
    runs = _runs(exponents)
    rho = len(runs[0])
    if any(len(r) != rho for r in runs):
        raise ValueError("exponent pattern rejected: runs of unequal length")
    starts = [r[0] for r in runs]
    gaps = {b - a for a, b in zip(starts, starts[1:])}
    if len(gaps) > 1:
        raise ValueError("exponent pattern rejected: non-uniform run spacing")
    p, m = F.p, F.m
    out = [np.zeros((p, m), dtype=complex) for _ in range(exponents[-1])]
    for B, e in zip(F.coeffs, exponents):
        out[e - 1] = np.array(B)
    return LaurentPoly(0, out)


def u_iso(alpha, beta, eta, delta):
    """Kronecker isometry I_eta x [0_{beta x delta}; I_delta; 0_{alpha x d}]."""
    if eta <= 0 or delta <= 0 or alpha < 0 or beta < 0:
        raise ValueError("need eta, delta > 0 and alpha, beta >= 0")
    cell = np.vstack([np.zeros((beta, delta)),
                      np.eye(delta),
                      np.zeros((alpha, delta))])
    return np.kron(np.eye(eta), cell).astype(complex)


def u_coiso(alpha, beta, eta, delta):
    """Kronecker co-isometry I_eta x [0, I_delta, 0] (row layout)."""
    if eta <= 0 or delta <= 0 or alpha < 0 or beta < 0:
        raise ValueError("need eta, delta > 0 and alpha, beta >= 0")
    cell = np.hstack([np.zeros((delta, beta)),
                      np.eye(delta),
                      np.zeros((delta, alpha))])
    return np.kron(np.eye(eta), cell).astype(complex)


def _grouped(F, rho):
    """Coefficient groups of rho, zero-padded at the tail."""
    rho = int(rho)
    if rho < 1:
        raise ValueError("rho must be >= 1")
    p, m = F.p, F.m
    coeffs = [np.array(B) for B in F.coeffs]
    while len(coeffs) % rho:
        coeffs.append(np.zeros((p, m), dtype=complex))
    return [coeffs[g:g + rho] for g in range(0, len(coeffs), rho)]


def rect_stack(F, rho):
    """rho*p x m polynomial with vertically stacked coefficient groups.

    Preserves the isometry side of para-unitarity.
    """
    return LaurentPoly(0, [np.vstack(g) for g in _grouped(F, rho)])


def rect_widen(F, rho):
    """p x rho*m polynomial with horizontally stacked coefficient groups.

    Preserves the co-isometry side of para-unitarity.
    """
    return LaurentPoly(0, [np.hstack(g) for g in _grouped(F, rho)])


def _aligned(Fb, Fc):
    """q=0 normalizations with equal coefficient counts (zero-padded)."""
    Fb = Fb.shift(-Fb.q)
    Fc = Fc.shift(-Fc.q)
    n = max(Fb.n, Fc.n)
    Bs = list(Fb.coeffs) + [np.zeros((Fb.p, Fb.m), dtype=complex)
                            for _ in range(n - Fb.n)]
    Cs = list(Fc.coeffs) + [np.zeros((Fc.p, Fc.m), dtype=complex)
                            for _ in range(n - Fc.n)]
    return Bs, Cs


def compose_diag(Fb, Fc, variant="diag"):
    """Block-diagonal (or anti-diagonal) composition of two polynomials.

    Preserves isometry when both inputs are isometric, co-isometry when
    both are co-isometric.  The shorter input is zero-padded.
    """
    if variant not in ("diag", "antidiag"):
        raise ValueError(f"unknown variant {variant!r}")
    Bs, Cs = _aligned(Fb, Fc)
    out = []
    for B, C in zip(Bs, Cs):
        if variant == "diag":
            D = np.block([[B, np.zeros((B.shape[0], C.shape[1]))],
                          [np.zeros((C.shape[0], B.shape[1])), C]])
        else:
            D = np.block([[np.zeros((B.shape[0], C.shape[1])), B],
                          [C, np.zeros((C.shape[0], B.shape[1]))]])
        out.append(D)
    return LaurentPoly(0, out)


def compose_mix_rows(Fb, Fc, alpha):
    """Row-stacked sqrt(alpha)/sqrt(1-alpha) mixture, m_c >= m_b.

    D_k stacks sqrt(alpha) [B_k, 0] over sqrt(1-alpha) C_k.
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValueError("alpha must lie in [0, 1]")
    if Fc.m < Fb.m:
        raise ValueError("compose_mix_rows needs m_c >= m_b")
    Bs, Cs = _aligned(Fb, Fc)
    sa, sb = np.sqrt(alpha), np.sqrt(1.0 - alpha)
    pad = Fc.m - Fb.m
    out = []
    for B, C in zip(Bs, Cs):
        top = sa * np.hstack([B, np.zeros((Fb.p, pad))])
        out.append(np.vstack([top, sb * C]))
    return LaurentPoly(0, out)


def compose_mix_cols(Fb, Fc, alpha):
    """Column-stacked sqrt(alpha)/sqrt(1-alpha) mixture, p_b >= p_c."""
    if not 0.0 <= alpha <= 1.0:
        raise ValueError("alpha must lie in [0, 1]")
    if Fb.p < Fc.p:
        raise ValueError("compose_mix_cols needs p_b >= p_c")
    Bs, Cs = _aligned(Fb, Fc)
    sa, sb = np.sqrt(alpha), np.sqrt(1.0 - alpha)
    pad = Fb.p - Fc.p
    out = []
    for B, C in zip(Bs, Cs):
        left = sa * B
        right = sb * np.vstack([C, np.zeros((pad, Fc.m))])
        out.append(np.hstack([left, right]))
    return LaurentPoly(0, out)


def product_via_hankel(Fb, Fc, check_tol=1e-12):
    """Polynomial product computed through the stacked Hankel identity.

    The coefficient stack of the product is the extended Hankel of the
    left factor times the block flip times the coefficient stack of the
    right factor.  A second, Hankel-on-Hankel form of the same identity
    is cross-checked; failure indicates an internal indexing bug.  Inputs
    are normalized to q = 0; the result carries q = -1 as in the product
    of two q = 0 polynomials.
    """
    if Fb.m != Fc.p:
        raise ValueError("inner dimension mismatch: "
                         f"{Fb.p}x{Fb.m} times {Fc.p}x{Fc.m}")
    Fb = Fb.shift(-Fb.q)
    Fc = Fc.shift(-Fc.q)
    n, l, rho = Fb.n, Fc.n, Fb.m
    Hl = hankel_causal(Fb, l).data
    T = flip_T(n + l, rho)
    # right-factor stack padded with n leading zero blocks
    Cstack = np.vstack([np.zeros((n * rho, Fc.m), dtype=complex)]
                       + [np.asarray(C) for C in Fc.coeffs])
    Dstack = Hl @ T @ Cstack
    p = Fb.p
    out = [Dstack[(t + 1) * p:(t + 2) * p, :] for t in range(n + l - 1)]
    if np.max(np.abs(Dstack[:p, :])) > check_tol:
        raise RuntimeError("product stack has a nonzero leading block")
    # cross-check: Hankel of the product = H_B(eta=l) T H_C(eta=n)
    Hc = hankel_causal(Fc, n).data
    Hd = hankel_causal(LaurentPoly(0, out), 1).data
    if np.max(np.abs(Hd - Hl @ T @ Hc)) > check_tol:
        raise RuntimeError("Hankel product identity violated")
    return LaurentPoly(-1, out)


def interleave_coeffs(F, a, b, rho):
    """Coefficient sequence of the (a, b, rho)-interleaved polynomial.

    Groups of rho consecutive coefficients separated by (a+b)*rho zero
    blocks, with b*rho leading and a*rho trailing zero blocks.  The input
    is zero-padded so rho divides n.
    """
    if a < 0 or b < 0:
        raise ValueError("a and b must be nonnegative")
    groups = _grouped(F, rho)
    p, m = F.p, F.m
    z = np.zeros((p, m), dtype=complex)
    seq = [z] * (b * rho)
    for g, grp in enumerate(groups):
        if g:
            seq = seq + [z] * ((a + b) * rho)
        seq = seq + grp
    seq = seq + [z] * (a * rho)
    return seq


def hankel_abr(F, a, b, rho):
    """The (a+b+1)n p x (a+b+1)n m interleaved Hankel H(a, b, rho)."""
    seq = interleave_coeffs(F, a, b, rho)
    H = hankel_causal(LaurentPoly(0, seq), 0)
    return BlockHankel(F.p, F.m, len(seq), len(seq), H.data)
