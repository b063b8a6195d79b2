"""Numba @njit kernel build.

Twin of numpy_impl.py: same functions, same signatures, loop bodies
written the numba way. All kernels compile with cache=True so the cost
is paid once per machine, and none use parallel mode (fits are
single-threaded by contract and timings must be stable).
"""

import numpy as np
from numba import njit

NAME = "numba"

_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_U0 = np.uint64(0)
_S30 = np.uint64(30)
_S27 = np.uint64(27)
_S31 = np.uint64(31)


@njit(cache=True)
def fy_permutation(n, state):
    s = np.uint64(state)
    perm = np.arange(n, dtype=np.int64)
    for i in range(n - 1, 0, -1):
        bound = np.uint64(i + 1)
        rem = (_U0 - bound) % bound  # 2**64 mod bound
        while True:
            s = s + _GAMMA
            z = (s ^ (s >> _S30)) * _MIX1
            z = (z ^ (z >> _S27)) * _MIX2
            x = z ^ (z >> _S31)
            if rem == _U0 or x < (_U0 - rem):
                j = np.int64(x % bound)
                break
        t = perm[i]
        perm[i] = perm[j]
        perm[j] = t
    return perm, s


@njit(cache=True)
def lu_solve(A, b):
    A = A.copy()
    b = b.copy()
    n = b.shape[0]
    if n == 0:
        return b, 0
    scale = 0.0
    for i in range(n):
        for j in range(n):
            v = abs(A[i, j])
            if v > scale:
                scale = v
    if scale == 0.0:
        return b, 1
    tol = 1e-12 * scale
    for k in range(n):
        piv = k
        best = abs(A[k, k])
        for i in range(k + 1, n):
            v = abs(A[i, k])
            if v > best:
                best = v
                piv = i
        if best < tol:
            return b, 1
        if piv != k:
            for j in range(n):
                tmp = A[k, j]
                A[k, j] = A[piv, j]
                A[piv, j] = tmp
            tb = b[k]
            b[k] = b[piv]
            b[piv] = tb
        akk = A[k, k]
        for i in range(k + 1, n):
            f = A[i, k] / akk
            A[i, k] = f
            for j in range(k + 1, n):
                A[i, j] -= f * A[k, j]
            b[i] -= f * b[k]
    x = np.empty(n)
    for i in range(n - 1, -1, -1):
        acc = b[i]
        for j in range(i + 1, n):
            acc -= A[i, j] * x[j]
        x[i] = acc / A[i, i]
    return x, 0


@njit(cache=True)
def _off_diag_norm(A):
    n = A.shape[0]
    acc = 0.0
    for p in range(n - 1):
        for q in range(p + 1, n):
            acc += A[p, q] * A[p, q]
    return np.sqrt(2.0 * acc)


@njit(cache=True)
def jacobi_eigh(S, conv_factor, max_sweeps):
    A = S.copy()
    n = A.shape[0]
    V = np.eye(n)
    thresh = conv_factor * np.sqrt(np.sum(S * S))
    sweeps = 0
    while sweeps < max_sweeps:
        if _off_diag_norm(A) <= thresh:
            vals = np.empty(n)
            for i in range(n):
                vals[i] = A[i, i]
            return vals, V, sweeps, 1
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
                for j in range(n):
                    arp = A[p, j]
                    arq = A[q, j]
                    A[p, j] = c * arp - s * arq
                    A[q, j] = s * arp + c * arq
                for i in range(n):
                    acp = A[i, p]
                    acq = A[i, q]
                    A[i, p] = c * acp - s * acq
                    A[i, q] = s * acp + c * acq
                    vcp = V[i, p]
                    vcq = V[i, q]
                    V[i, p] = c * vcp - s * vcq
                    V[i, q] = s * vcp + c * vcq
        sweeps += 1
    converged = 1 if _off_diag_norm(A) <= thresh else 0
    vals = np.empty(n)
    for i in range(n):
        vals[i] = A[i, i]
    return vals, V, sweeps, converged


@njit(cache=True)
def logistic_train(X, y, w0, alpha, beta, max_epochs, batch_size, method, beta2, eps):
    n, p = X.shape
    w = w0.copy()
    b = 0.0
    vw = np.zeros(p)
    vb = 0.0
    sw = np.zeros(p)
    sb = 0.0
    losses = np.full(max_epochs, np.nan)
    step = 0
    epochs_run = 0
    gw = np.empty(p)
    for epoch in range(max_epochs):
        for start in range(0, n, batch_size):
            end = min(start + batch_size, n)
            cnt = end - start
            for j in range(p):
                gw[j] = 0.0
            gb = 0.0
            for i in range(start, end):
                z = b
                for j in range(p):
                    z += X[i, j] * w[j]
                if z >= 0.0:
                    pr = 1.0 / (1.0 + np.exp(-z))
                else:
                    ez = np.exp(z)
                    pr = ez / (1.0 + ez)
                d = pr - y[i]
                for j in range(p):
                    gw[j] += d * X[i, j]
                gb += d
            inv = 1.0 / cnt
            vb = beta * vb + (1.0 - beta) * (gb * inv)
            if method == 0:
                for j in range(p):
                    vw[j] = beta * vw[j] + (1.0 - beta) * (gw[j] * inv)
                    w[j] -= alpha * vw[j]
                b -= alpha * vb
            else:
                step += 1
                c1 = 1.0 - beta ** step
                c2 = 1.0 - beta2 ** step
                for j in range(p):
                    g = gw[j] * inv
                    vw[j] = beta * vw[j] + (1.0 - beta) * g
                    sw[j] = beta2 * sw[j] + (1.0 - beta2) * g * g
                    w[j] -= alpha * (vw[j] / c1) / (np.sqrt(sw[j] / c2) + eps)
                gb2 = gb * inv
                sb = beta2 * sb + (1.0 - beta2) * gb2 * gb2
                b -= alpha * (vb / c1) / (np.sqrt(sb / c2) + eps)
        loss = 0.0
        ok = np.isfinite(b)
        for j in range(p):
            if not np.isfinite(w[j]):
                ok = False
        for i in range(n):
            z = b
            for j in range(p):
                z += X[i, j] * w[j]
            m = -z if z < 0.0 else 0.0
            loss += m + np.log1p(np.exp(-abs(z))) + (1.0 - y[i]) * z
        loss /= n
        losses[epoch] = loss
        epochs_run = epoch + 1
        if not (ok and np.isfinite(loss)):
            return w, b, vw, vb, losses, epochs_run, 1
    return w, b, vw, vb, losses, epochs_run, 0


@njit(cache=True)
def svm_train(X, y, alpha, beta, lam, early_stop, max_epochs, batch_size):
    n, p = X.shape
    w = np.zeros(p)
    b = 0.0
    vw = np.zeros(p)
    vb = 0.0
    acc_hist = np.full(max_epochs, np.nan)
    epochs_run = 0
    acc_w = np.empty(p)
    for epoch in range(max_epochs):
        for start in range(0, n, batch_size):
            end = min(start + batch_size, n)
            cnt = end - start
            for j in range(p):
                acc_w[j] = 0.0
            accb = 0.0
            for i in range(start, end):
                z = b
                for j in range(p):
                    z += X[i, j] * w[j]
                if y[i] * z < 1.0:
                    for j in range(p):
                        acc_w[j] -= y[i] * X[i, j]
                    accb -= y[i]
            inv = 1.0 / cnt
            for j in range(p):
                g = lam * w[j] + acc_w[j] * inv
                vw[j] = beta * vw[j] + (1.0 - beta) * g
                w[j] -= alpha * vw[j]
            gb = accb * inv
            vb = beta * vb + (1.0 - beta) * gb
            b -= alpha * vb
        correct = 0
        ok = np.isfinite(b)
        for j in range(p):
            if not np.isfinite(w[j]):
                ok = False
        for i in range(n):
            z = b
            for j in range(p):
                z += X[i, j] * w[j]
            pred = 1.0 if z >= 0.0 else -1.0
            if pred == y[i]:
                correct += 1
        acc = correct / n
        acc_hist[epoch] = acc
        epochs_run = epoch + 1
        if not ok:
            return w, b, vw, vb, acc_hist, epochs_run, 1
        if acc >= early_stop:
            break
    return w, b, vw, vb, acc_hist, epochs_run, 0


@njit(cache=True)
def kmeans_lloyd(X, centroids, max_iterations, tol):
    n, p = X.shape
    k = centroids.shape[0]
    C = centroids.copy()
    inertia_hist = np.full(max_iterations, np.nan)
    labels = np.zeros(n, dtype=np.int64)
    dists = np.empty(n)
    counts = np.zeros(k, dtype=np.int64)
    sums = np.empty((k, p))
    iterations = 0
    for it in range(max_iterations):
        total = 0.0
        for i in range(n):
            best = 0
            bestd = np.inf
            for c in range(k):
                d = 0.0
                for j in range(p):
                    df = X[i, j] - C[c, j]
                    d += df * df
                if d < bestd:
                    bestd = d
                    best = c
            labels[i] = best
            dists[i] = bestd
            total += bestd
        inertia_hist[it] = total
        for c in range(k):
            counts[c] = 0
        for i in range(n):
            counts[labels[i]] += 1
        for c in range(k):
            if counts[c] == 0:
                jmax = 0
                dmax = -np.inf
                for i in range(n):
                    if dists[i] > dmax:
                        dmax = dists[i]
                        jmax = i
                counts[labels[jmax]] -= 1
                labels[jmax] = c
                counts[c] = 1
                dists[jmax] = -1.0
        for c in range(k):
            for j in range(p):
                sums[c, j] = 0.0
        for i in range(n):
            li = labels[i]
            for j in range(p):
                sums[li, j] += X[i, j]
        dispmax = 0.0
        for c in range(k):
            dsp = 0.0
            for j in range(p):
                m = sums[c, j] / counts[c]
                dd = m - C[c, j]
                dsp += dd * dd
                C[c, j] = m
            if dsp > dispmax:
                dispmax = dsp
        iterations = it + 1
        if np.sqrt(dispmax) <= tol:
            break
    inertia = 0.0
    for i in range(n):
        best = 0
        bestd = np.inf
        for c in range(k):
            d = 0.0
            for j in range(p):
                df = X[i, j] - C[c, j]
                d += df * df
            if d < bestd:
                bestd = d
                best = c
        labels[i] = best
        inertia += bestd
    return C, labels, inertia, inertia_hist, iterations


@njit(cache=True)
def pairwise_sq_dists(Q, S):
    nq, p = Q.shape
    ns = S.shape[0]
    D = np.empty((nq, ns))
    for a in range(nq):
        for i in range(ns):
            acc = 0.0
            for j in range(p):
                d = Q[a, j] - S[i, j]
                acc += d * d
            D[a, i] = acc
    return D
