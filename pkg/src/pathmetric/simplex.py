"""Exact rational feasibility engine (internal).

Decides whether integer rows a_j . x >= d_j admit a solution, returning either
a rational witness or a Farkas certificate. The method is a dual simplex on
min c.x subject to the rows, where c is the coefficient sum of an initial
active set S of linearly independent rows: y = 1 on S is then dual-feasible,
so the walk starts strictly inside the dual cone instead of at a degenerate
origin. Violated rows enter the active set one at a time; when a violated row
cannot be exchanged (the dual ray is unblocked), that ray *is* the Farkas
certificate.

All state is kept over the integers: with delta = |det A_S| and
N = delta * inverse(A_S^T), every pivot update divides exactly, so no
floating-point number appears anywhere on the decision path. Pivoting is
deterministic: windowed most-violated row selection with smallest-index tie
breaks, switching to Bland's rule (first violated row, smallest-index leaving
tie break) after a run of degenerate pivots, which guarantees termination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

# Sparse integer row: (variable indices, matching coefficients, bound).
IntRow = tuple[tuple[int, ...], tuple[int, ...], int]

_STALL_SWITCH = 300
_SCAN_WINDOW = 1024
_MAX_ITERS = 10_000_000  # defensive only; Bland's rule terminates long before


class IterationLimitExceeded(RuntimeError):
    """Raised when a caller-imposed pivot budget runs out."""

    def __init__(self, iterations: int):
        self.iterations = iterations
        super().__init__(f"pivot budget exhausted after {iterations} iterations")


@dataclass(frozen=True)
class EngineResult:
    feasible: bool
    witness: list[Fraction] | None = None
    certificate: dict[int, Fraction] | None = None


class _Eliminator:
    """Incremental exact Gaussian elimination used to pick a start basis."""

    def __init__(self, nvars: int):
        self.nvars = nvars
        self.pivots: list[tuple[int, list[Fraction]]] = []  # (pivot col, reduced row)

    def try_add(self, idx: tuple[int, ...], val: tuple[int, ...]) -> bool:
        row = [Fraction(0)] * self.nvars
        for i, v in zip(idx, val):
            row[i] = Fraction(v)
        for col, prow in self.pivots:
            f = row[col]
            if f:
                for i in range(self.nvars):
                    if prow[i]:
                        row[i] -= f * prow[i]
        for col in range(self.nvars):
            if row[col]:
                inv = 1 / row[col]
                row = [c * inv for c in row]
                self.pivots.append((col, row))
                return True
        return False


def _invert_scaled(mat: list[list[int]]) -> tuple[list[list[int]], int]:
    """Return (N, delta) with N = delta * inverse(mat) integral, delta = |det|."""
    n = len(mat)
    a = [[Fraction(x) for x in row] for row in mat]
    inv = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise ValueError("start basis is singular")
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            inv[col], inv[piv] = inv[piv], inv[col]
            det = -det
        det *= a[col][col]
        f = 1 / a[col][col]
        a[col] = [x * f for x in a[col]]
        inv[col] = [x * f for x in inv[col]]
        for r in range(n):
            if r != col and a[r][col]:
                g = a[r][col]
                a[r] = [x - g * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - g * y for x, y in zip(inv[r], inv[col])]
    delta = abs(det.numerator)
    if det.denominator != 1:
        raise ValueError("integer basis has non-integer determinant")
    sign = 1 if det > 0 else -1
    out = []
    for row in inv:
        scaled = [x * det * sign for x in row]
        if any(x.denominator != 1 for x in scaled):
            raise ValueError("scaled inverse is not integral")
        out.append([x.numerator for x in scaled])
    return out, delta


def _choose_start(
    nvars: int, rows: list[IntRow]
) -> tuple[list[int], list[int], list[list[int]], int]:
    """Pick kept columns, start rows S, N = delta*(A_S^T)^{-1} and delta.

    Fast path: one singleton row per variable (the usual x_i >= 1 bounds)
    gives a diagonal start. Otherwise rows are scanned by exact elimination;
    variables outside the pivot columns are dropped, which preserves both
    feasibility and certificates because those columns are linear
    combinations of the kept ones.
    """
    singleton: dict[int, int] = {}
    for j, (idx, val, _d) in enumerate(rows):
        if len(idx) == 1 and idx[0] not in singleton:
            singleton[idx[0]] = j
    if len(singleton) == nvars:
        keep = list(range(nvars))
        S = [singleton[i] for i in range(nvars)]
        coefs = [rows[S[i]][1][0] for i in range(nvars)]
        delta = 1
        for c in coefs:
            delta *= abs(c)
        N = [[0] * nvars for _ in range(nvars)]
        for i, c in enumerate(coefs):
            N[i][i] = delta // c if c > 0 else -(delta // -c)
        return keep, S, N, delta

    elim = _Eliminator(nvars)
    S = []
    for j, (idx, val, _d) in enumerate(rows):
        if elim.try_add(idx, val):
            S.append(j)
            if len(S) == nvars:
                break
    keep = sorted({col for col, _ in elim.pivots})
    colpos = {c: i for i, c in enumerate(keep)}
    mat = []  # A_S^T restricted to kept columns: column k = row S[k]
    r = len(S)
    for i in range(r):
        mat.append([0] * r)
    for k, j in enumerate(S):
        idx, val, _d = rows[j]
        for i, v in zip(idx, val):
            if i in colpos:
                mat[colpos[i]][k] = v
    N, delta = _invert_scaled(mat)
    return keep, S, N, delta


def solve_integer_rows(
    nvars: int, rows: list[IntRow], max_iters: int | None = None
) -> EngineResult:
    """Decide feasibility of integer rows a_j . x >= d_j over rational x."""
    # Constant rows decide themselves; keep indices intact for certificates.
    for j, (idx, _val, d) in enumerate(rows):
        if not idx and d > 0:
            return EngineResult(False, certificate={j: Fraction(1)})
    if nvars == 0 or not rows:
        return EngineResult(True, witness=[Fraction(0)] * nvars)

    keep, S, N, delta = _choose_start(nvars, rows)
    if len(keep) < nvars:
        kset = set(keep)
        remap = {c: i for i, c in enumerate(keep)}
        proj: list[IntRow] = []
        for idx, val, d in rows:
            pi = tuple(remap[i] for i in idx if i in kset)
            pv = tuple(v for i, v in zip(idx, val) if i in kset)
            proj.append((pi, pv, d))
        sub = _solve_started(len(keep), proj, S, N, delta, max_iters)
        if not sub.feasible:
            return sub
        witness = [Fraction(0)] * nvars
        assert sub.witness is not None
        for c, x in zip(keep, sub.witness):
            witness[c] = x
        return EngineResult(True, witness=witness)
    return _solve_started(nvars, rows, S, N, delta, max_iters)


def _solve_started(
    nvars: int,
    rows: list[IntRow],
    S: list[int],
    N: list[list[int]],
    delta: int,
    max_iters: int | None = None,
) -> EngineResult:
    n = nvars
    m = len(rows)
    in_s = [False] * m
    for j in S:
        in_s[j] = True
    c = [0] * n  # objective: coefficient sum of the initial active rows
    for j in S:
        idx, val, _d = rows[j]
        for i, v in zip(idx, val):
            c[i] += v

    def x_num() -> list[int]:
        xi = [0] * n
        for k, j in enumerate(S):
            dj = rows[j][2]
            if dj:
                nk = N[k]
                for i in range(n):
                    if nk[i]:
                        xi[i] += dj * nk[i]
        return xi

    def y_num() -> list[int]:
        y = [0] * n
        for k in range(n):
            nk = N[k]
            s = 0
            for i in range(n):
                if nk[i] and c[i]:
                    s += nk[i] * c[i]
            y[k] = s
        return y

    xi = x_num()
    y = y_num()
    bland = False
    stall = 0
    cursor = 0
    iters = 0
    while True:
        iters += 1
        if max_iters is not None and iters > max_iters:
            raise IterationLimitExceeded(iters - 1)
        if iters > _MAX_ITERS:
            raise RuntimeError("simplex iteration limit exceeded (solver bug)")
        # entering: a violated row  a_j . x < d_j,  via  a_j . xi < delta * d_j
        enter = -1
        enter_dot = 0
        if bland:
            for j in range(m):
                if in_s[j]:
                    continue
                idx, val, d = rows[j]
                s = 0
                for i, v in zip(idx, val):
                    s += xi[i] * v
                if s < delta * d:
                    enter = j
                    enter_dot = s
                    break
        else:
            best = 0
            scanned = 0
            hits = 0
            jj = cursor
            while scanned < m:
                j = jj
                jj += 1
                if jj >= m:
                    jj = 0
                scanned += 1
                if in_s[j]:
                    continue
                idx, val, d = rows[j]
                s = 0
                for i, v in zip(idx, val):
                    s += xi[i] * v
                viol = delta * d - s
                if viol > 0:
                    hits += 1
                    if viol > best or (viol == best and j < enter):
                        best = viol
                        enter = j
                        enter_dot = s
                if hits and scanned >= _SCAN_WINDOW:
                    break
            cursor = jj
        if enter < 0:
            return EngineResult(True, witness=[Fraction(x, delta) for x in xi])

        # direction: lam = N a_enter / delta solves A_S^T lam = a_enter
        idx, val, _d = rows[enter]
        lam = [0] * n
        for k in range(n):
            nk = N[k]
            s = 0
            for i, v in zip(idx, val):
                s += nk[i] * v
            lam[k] = s

        # dual ratio test: largest t with y - t*lam >= 0
        leave = -1
        t_num = t_den = 0
        for k in range(n):
            lk = lam[k]
            if lk > 0:
                if leave < 0:
                    t_num, t_den, leave = y[k], lk, k
                else:
                    cmp = y[k] * t_den - t_num * lk
                    if cmp < 0 or (cmp == 0 and S[k] < S[leave]):
                        t_num, t_den, leave = y[k], lk, k
        if leave < 0:
            # unblocked dual ray: a_enter - sum_k (lam_k/delta) a_{S_k} = 0 with
            # positive combined bound, i.e. a Farkas certificate
            cert = {enter: Fraction(delta)}
            for k in range(n):
                if lam[k]:
                    cert[S[k]] = Fraction(-lam[k])
            total = sum(cert[j] * rows[j][2] for j in cert)
            return EngineResult(
                False, certificate={j: mult / total for j, mult in cert.items() if mult}
            )

        if t_num == 0:
            stall += 1
            if stall >= _STALL_SWITCH:
                bland = True
        else:
            stall = 0

        # integer pivot: active row at position `leave` is replaced by `enter`
        piv = lam[leave]  # > 0 by the ratio test
        nl = N[leave]
        for k in range(n):
            if k == leave:
                continue
            lk = lam[k]
            nk = N[k]
            if lk:
                for i in range(n):
                    nk[i] = (piv * nk[i] - lk * nl[i]) // delta
            elif piv != delta:
                for i in range(n):
                    nk[i] = (piv * nk[i]) // delta
        # O(n) exact updates of xi = delta'*x and y = N'c; nl is unchanged by
        # the pivot, enter_dot is a_enter . xi from pricing, and every division
        # by the old delta is exact because the targets are integer vectors
        d_enter = rows[enter][2]
        yl = y[leave]
        for k in range(n):
            if k != leave:
                y[k] = (piv * y[k] - lam[k] * yl) // delta
        for i in range(n):
            xi[i] = (piv * xi[i] - enter_dot * nl[i]) // delta + d_enter * nl[i]
        in_s[S[leave]] = False
        in_s[enter] = True
        S[leave] = enter
        delta = piv
