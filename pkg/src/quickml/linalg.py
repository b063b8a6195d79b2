"""Dense linear algebra built on the kernel layer."""

import numpy as np

from . import backend
from ._validate import as_matrix, as_vector
from .errors import NoConvergence, NotSymmetric, ShapeMismatch, SingularMatrix

JACOBI_CONV_FACTOR = 1e-10
JACOBI_MAX_SWEEPS = 100
SYMMETRY_RTOL = 1e-9


def solve_linear_system(A, b):
    """Solve A x = b by LU factorization with partial pivoting.

    Raises SingularMatrix when a pivot falls below 1e-12 times the
    largest absolute entry of A.
    """
    A = as_matrix(A, name="A", square=True)
    b = as_vector(b, name="b")
    if b.shape[0] != A.shape[0]:
        raise ShapeMismatch(
            f"A is {A.shape[0]}x{A.shape[1]} but b has {b.shape[0]} entries"
        )
    x, status = backend.kernels().lu_solve(A, b)
    if status != 0:
        raise SingularMatrix("matrix is singular to working precision")
    return np.asarray(x)


def symmetric_eigen(S, max_sweeps: int = JACOBI_MAX_SWEEPS):
    """Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.

    Returns (eigenvalues, eigenvectors) with eigenvalues sorted in
    descending order and eigenvectors as matching columns. Each column is
    sign-fixed so its largest-magnitude entry is positive. Sweeping stops
    once the off-diagonal Frobenius norm drops to 1e-10 of the input's
    Frobenius norm.
    """
    S = as_matrix(S, name="S", square=True)
    n = S.shape[0]
    scale = float(np.max(np.abs(S))) if n else 0.0
    if n and float(np.max(np.abs(S - S.T))) > SYMMETRY_RTOL * max(scale, 1e-300):
        raise NotSymmetric("matrix is not symmetric within tolerance")
    Sym = (S + S.T) / 2.0  # kill roundoff asymmetry before rotating
    vals, vecs, sweeps, converged = backend.kernels().jacobi_eigh(
        Sym, JACOBI_CONV_FACTOR, int(max_sweeps)
    )
    if not converged:
        raise NoConvergence(f"Jacobi sweep limit {max_sweeps} reached")
    vals = np.asarray(vals)
    vecs = np.asarray(vecs)
    # stable descending sort: equal eigenvalues keep rotation order
    order = np.argsort(-vals, kind="stable")
    vals = vals[order]
    vecs = vecs[:, order]
    for j in range(n):
        lead = int(np.argmax(np.abs(vecs[:, j])))
        if vecs[lead, j] < 0.0:
            vecs[:, j] = -vecs[:, j]
    return vals, vecs
