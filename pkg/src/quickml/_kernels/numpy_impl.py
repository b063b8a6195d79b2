"""Pure-numpy kernel build.

Reference semantics for the numba build in numba_impl.py: every function
here has an @njit twin with the same signature, and the twins must agree
to floating-point roundoff. Status flags are returned, never raised;
wrappers turn them into typed exceptions.
"""

import numpy as np

NAME = "numpy"

# splitmix64 constants (python ints; arithmetic masked to 64 bits)
_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def _mix64(z):
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
    return z ^ (z >> 31)


def fy_permutation(n, state):
    """Fisher-Yates shuffle of 0..n-1 driven by a splitmix64 stream.

    `state` is the generator state before the call; returns (perm, state
    after). Bounded draws use modulo rejection so the shuffle is unbiased.
    """
    state = int(state) & _MASK64
    perm = np.arange(n, dtype=np.int64)
    for i in range(n - 1, 0, -1):
        bound = i + 1
        rem = (1 << 64) % bound
        limit = (1 << 64) - rem
        while True:
            state = (state + _GAMMA) & _MASK64
            x = _mix64(state)
            if x < limit:
                j = x % bound
                break
        perm[i], perm[j] = perm[j], perm[i]
    return perm, np.uint64(state)


def lu_solve(A, b):
    """Solve Ax = b by LU with partial pivoting.

    Returns (x, status); status 1 flags a pivot below 1e-12 times the
    largest entry magnitude of A (treated as singular).
    """
    A = A.copy()
    b = b.copy()
    n = b.shape[0]
    if n == 0:
        return b, 0
    scale = np.max(np.abs(A))
    if scale == 0.0:
        return b, 1
    tol = 1e-12 * scale
    for k in range(n):
        j = k + int(np.argmax(np.abs(A[k:, k])))
        if abs(A[j, k]) < tol:
            return b, 1
        if j != k:
            A[[k, j]] = A[[j, k]]
            b[k], b[j] = b[j], b[k]
        A[k + 1 :, k] /= A[k, k]
        A[k + 1 :, k + 1 :] -= np.outer(A[k + 1 :, k], A[k, k + 1 :])
        b[k + 1 :] -= A[k + 1 :, k] * b[k]
    x = np.empty(n)
    for i in range(n - 1, -1, -1):
        x[i] = (b[i] - np.dot(A[i, i + 1 :], x[i + 1 :])) / A[i, i]
    return x, 0


def _off_diag_norm(A):
    n = A.shape[0]
    acc = 0.0
    for p in range(n - 1):
        acc += np.dot(A[p, p + 1 :], A[p, p + 1 :])
    return np.sqrt(2.0 * acc)


def jacobi_eigh(S, conv_factor, max_sweeps):
    """Cyclic Jacobi eigendecomposition of a symmetric matrix.

    Sweeps rotate every strict upper-triangle pair in row order until the
    off-diagonal Frobenius norm drops below conv_factor * ||S||_F.
    Returns (eigenvalues, eigenvector columns, sweeps, converged) with
    eigenpairs unsorted; ordering and sign policy live in the wrapper.
    """
    A = S.copy()
    n = A.shape[0]
    V = np.eye(n)
    thresh = conv_factor * np.sqrt(np.sum(S * S))
    sweeps = 0
    while sweeps < max_sweeps:
        if _off_diag_norm(A) <= thresh:
            return np.diag(A).copy(), V, sweeps, 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                diff = A[q, q] - A[p, p]
                if abs(apq) < 1e-36 * abs(diff):
                    t = apq / diff
                else:
                    tau = diff / (2.0 * apq)
                    t = 1.0 / (abs(tau) + np.sqrt(1.0 + tau * tau))
                    if tau < 0.0:
                        t = -t
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                rp = A[p, :].copy()
                rq = A[q, :].copy()
                A[p, :] = c * rp - s * rq
                A[q, :] = s * rp + c * rq
                cp = A[:, p].copy()
                cq = A[:, q].copy()
                A[:, p] = c * cp - s * cq
                A[:, q] = s * cp + c * cq
                vp = V[:, p].copy()
                vq = V[:, q].copy()
                V[:, p] = c * vp - s * vq
                V[:, q] = s * vp + c * vq
        sweeps += 1
    converged = 1 if _off_diag_norm(A) <= thresh else 0
    return np.diag(A).copy(), V, sweeps, converged


def _sigmoid(z):
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


def _bce_mean(z, y):
    # mean of softplus(-z) + (1 - y) * z, the overflow-free BCE form
    sp = np.maximum(-z, 0.0) + np.log1p(np.exp(-np.abs(z)))
    return float(np.mean(sp + (1.0 - y) * z))


def logistic_train(X, y, w0, alpha, beta, max_epochs, batch_size, method, beta2, eps):
    """Batch-gradient logistic regression with momentum (method 0) or
    bias-corrected adaptive moments (method 1).

    Returns (w, b, vw, vb, losses, epochs_run, status); losses holds the
    full-set mean binary cross entropy recorded at each epoch end, and
    status 1 flags a non-finite parameter or loss (training aborted).
    """
    n, p = X.shape
    w = w0.copy()
    b = 0.0
    vw = np.zeros(p)
    vb = 0.0
    sw = np.zeros(p)  # second moment, method 1 only
    sb = 0.0
    losses = np.full(max_epochs, np.nan)
    step = 0
    epochs_run = 0
    # divergence is detected, not warned about; numeric traps stay quiet
    with np.errstate(over="ignore", invalid="ignore", under="ignore"):
        for epoch in range(max_epochs):
            for start in range(0, n, batch_size):
                end = min(start + batch_size, n)
                cnt = end - start
                z = X[start:end] @ w + b
                diff = _sigmoid(z) - y[start:end]
                gw = X[start:end].T @ diff / cnt
                gb = float(np.sum(diff)) / cnt
                vw = beta * vw + (1.0 - beta) * gw
                vb = beta * vb + (1.0 - beta) * gb
                if method == 0:
                    w = w - alpha * vw
                    b = b - alpha * vb
                else:
                    step += 1
                    sw = beta2 * sw + (1.0 - beta2) * gw * gw
                    sb = beta2 * sb + (1.0 - beta2) * gb * gb
                    c1 = 1.0 - beta ** step
                    c2 = 1.0 - beta2 ** step
                    w = w - alpha * (vw / c1) / (np.sqrt(sw / c2) + eps)
                    b = b - alpha * (vb / c1) / (np.sqrt(sb / c2) + eps)
            z = X @ w + b
            loss = _bce_mean(z, y)
            losses[epoch] = loss
            epochs_run = epoch + 1
            if not (np.all(np.isfinite(w)) and np.isfinite(b) and np.isfinite(loss)):
                return w, b, vw, vb, losses, epochs_run, 1
    return w, b, vw, vb, losses, epochs_run, 0


def svm_train(X, y, alpha, beta, lam, early_stop, max_epochs, batch_size):
    """Linear SVM on hinge subgradients, momentum updates, epoch-level
    early termination once training accuracy reaches early_stop.

    Labels must be -1/+1. Per batch the sample subgradients (lam*w when
    the margin is met, lam*w - y_i x_i otherwise) are averaged, then
    applied through the momentum buffer. Returns
    (w, b, vw, vb, acc_hist, epochs_run, status).
    """
    n, p = X.shape
    w = np.zeros(p)
    b = 0.0
    vw = np.zeros(p)
    vb = 0.0
    acc_hist = np.full(max_epochs, np.nan)
    epochs_run = 0
    with np.errstate(over="ignore", invalid="ignore", under="ignore"):
        for epoch in range(max_epochs):
            for start in range(0, n, batch_size):
                end = min(start + batch_size, n)
                cnt = end - start
                Xb = X[start:end]
                yb = y[start:end]
                margins = yb * (Xb @ w + b)
                active = margins < 1.0
                gw = lam * w - (Xb.T @ (yb * active)) / cnt
                gb = -float(np.sum(yb * active)) / cnt
                vw = beta * vw + (1.0 - beta) * gw
                vb = beta * vb + (1.0 - beta) * gb
                w = w - alpha * vw
                b = b - alpha * vb
            scores = X @ w + b
            pred = np.where(scores >= 0.0, 1.0, -1.0)
            acc = float(np.mean(pred == y))
            acc_hist[epoch] = acc
            epochs_run = epoch + 1
            if not (np.all(np.isfinite(w)) and np.isfinite(b)):
                return w, b, vw, vb, acc_hist, epochs_run, 1
            if acc >= early_stop:
                break
    return w, b, vw, vb, acc_hist, epochs_run, 0


def kmeans_lloyd(X, centroids, max_iterations, tol):
    """Lloyd iteration from given initial centroids.

    Assignment breaks distance ties toward the smallest centroid index;
    a cluster left empty is re-seeded with the point farthest from its
    assigned centroid. Stops when the largest centroid displacement is
    <= tol or after max_iterations. Returns
    (centroids, labels, inertia, inertia_hist, iterations_run); the
    history holds the post-assignment cost of each iteration.
    """
    n, p = X.shape
    k = centroids.shape[0]
    C = centroids.copy()
    inertia_hist = np.full(max_iterations, np.nan)
    iterations = 0
    labels = np.zeros(n, dtype=np.int64)
    for it in range(max_iterations):
        D = np.empty((n, k))
        for c in range(k):
            diffc = X - C[c]
            D[:, c] = np.einsum("ij,ij->i", diffc, diffc)
        labels = np.argmin(D, axis=1).astype(np.int64)
        dists = D[np.arange(n), labels]
        inertia_hist[it] = float(np.sum(dists))
        counts = np.bincount(labels, minlength=k)
        for c in range(k):
            if counts[c] == 0:
                j = int(np.argmax(dists))
                counts[labels[j]] -= 1
                labels[j] = c
                counts[c] = 1
                dists[j] = -1.0
        sums = np.empty((k, p))
        for jf in range(p):
            sums[:, jf] = np.bincount(labels, weights=X[:, jf], minlength=k)
        newC = sums / counts[:, None]
        disp = np.sqrt(np.max(np.sum((newC - C) ** 2, axis=1)))
        C = newC
        iterations = it + 1
        if disp <= tol:
            break
    D = np.empty((n, k))
    for c in range(k):
        diffc = X - C[c]
        D[:, c] = np.einsum("ij,ij->i", diffc, diffc)
    labels = np.argmin(D, axis=1).astype(np.int64)
    inertia = float(np.sum(D[np.arange(n), labels]))
    return C, labels, inertia, inertia_hist, iterations


def pairwise_sq_dists(Q, S):
    """Squared Euclidean distances, queries in rows against stored rows."""
    nq = Q.shape[0]
    ns = S.shape[0]
    D = np.empty((nq, ns))
    for a in range(nq):
        diff = S - Q[a]
        D[a, :] = np.einsum("ij,ij->i", diff, diff)
    return D
