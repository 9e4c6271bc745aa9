"""Exact rational two-phase simplex for small dense linear programs.

Solves min c.x subject to A x = b, x >= 0 entirely in rational arithmetic.
Every terminal status ships checkable data:

  optimal    x, objective, and duals y with y.A_j <= c_j for every column
             and y.b == objective
  infeasible Farkas vector y with y.A_j <= 0 for every column and y.b > 0
  unbounded  a feasible x plus a ray r >= 0 with A r = 0 and c.r < 0

Uses gmpy2.mpq internally when available (Fraction otherwise); inputs may
mix ints and Fractions, outputs are Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

try:
    from gmpy2 import mpq as _q
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _q = Fraction

def _fr(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    return Fraction(int(v.numerator), int(v.denominator))


@dataclass
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: list | None = None
    objective: Fraction | None = None
    y: list | None = None  # duals (optimal) or Farkas vector (infeasible)
    ray: list | None = None
    # opaque restart data (surviving rows, basis columns); feed back as
    # `warm` when re-solving the same rows with extra columns appended
    warm: tuple | None = None


def _warm_tableau(rows: list[list], rhs: list, warm: tuple, nc: int):
    """Tableau reduced to a remembered basis, or None when it no longer fits."""
    live_in, bcols = warm
    if len(live_in) != len(bcols) or any(j >= nc for j in bcols):
        return None
    live = list(live_in)
    basis = list(bcols)
    T = [list(rows[i]) + [rhs[i]] for i in live]
    mm = len(T)
    for pos in range(mm):
        col = basis[pos]
        r = next((k for k in range(pos, mm) if T[k][col] != 0), -1)
        if r < 0:
            return None
        if r != pos:
            T[pos], T[r] = T[r], T[pos]
            live[pos], live[r] = live[r], live[pos]
        prow = T[pos]
        piv = prow[col]
        if piv != 1:
            inv = 1 / piv
            prow = [v * inv if v else v for v in prow]
            T[pos] = prow
        for k in range(mm):
            row = T[k]
            if row is prow:
                continue
            f = row[col]
            if f != 0:
                T[k] = [a - f * p if p else a for a, p in zip(row, prow)]
    if any(T[pos][nc] < 0 for pos in range(mm)):
        return None
    return T, basis, live


def _solve_transposed(cols: list[list], rhs: list) -> list:
    """Solve M^T y = rhs where M's columns are given; M is invertible."""
    mm = len(rhs)
    # rows of M^T are the given columns
    aug = [list(cols[k]) + [rhs[k]] for k in range(mm)]
    for col in range(mm):
        piv = next(r for r in range(col, mm) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        prow = aug[col]
        inv = 1 / prow[col]
        for k in range(col, mm + 1):
            prow[k] *= inv
        for r in range(mm):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                for k in range(col, mm + 1):
                    aug[r][k] -= f * prow[k]
    return [aug[r][mm] for r in range(mm)]


def solve_standard(A: list[list], b: list, c: list, warm: tuple | None = None) -> LPResult:
    m = len(A)
    nc = len(c)
    zero = _q(0)
    cost = [_q(v) for v in c]

    if m == 0:
        for j in range(nc):
            if cost[j] < 0:
                ray = [Fraction(0)] * nc
                ray[j] = Fraction(1)
                return LPResult("unbounded", x=[Fraction(0)] * nc, ray=ray)
        return LPResult("optimal", x=[Fraction(0)] * nc, objective=Fraction(0), y=[])

    sign = [1] * m
    rows = []
    rhs = []
    for i in range(m):
        r = [_q(v) for v in A[i]]
        bi = _q(b[i])
        if bi < 0:
            r = [-v for v in r]
            bi = -bi
            sign[i] = -1
        rows.append(r)
        rhs.append(bi)

    T = None
    art_of_row = {}
    n_art = 0
    if warm is not None:
        built = _warm_tableau(rows, rhs, warm, nc)
        if built is not None:
            T, basis, live_rows = built

    if T is None:
        # crash basis from unit columns; a -1 unit on a zero-rhs row counts
        # too, after flipping that row
        basis = [-1] * m
        for j in range(nc):
            hit = -1
            val = None
            for i in range(m):
                v = rows[i][j]
                if v != 0:
                    if hit >= 0:
                        hit = -1
                        break
                    hit = i
                    val = v
            if hit < 0 or basis[hit] >= 0:
                continue
            if val == 1:
                basis[hit] = j
            elif val == -1 and rhs[hit] == 0:
                rows[hit] = [-v for v in rows[hit]]
                sign[hit] = -sign[hit]
                basis[hit] = j

        for i in range(m):
            if basis[i] < 0:
                basis[i] = nc + n_art
                art_of_row[i] = nc + n_art
                n_art += 1

        # tableau rows carry the rhs in the last slot
        T = []
        for i in range(m):
            row = rows[i] + [zero] * n_art + [rhs[i]]
            if basis[i] >= nc:
                row[basis[i]] = _q(1)
            T.append(row)
        live_rows = list(range(m))  # indices into rows/sign surviving deletion

    ncols = nc + n_art

    # pristine oriented columns for dual extraction (artificials are units)
    def orig_col(j: int, live: list[int]) -> list:
        if j < nc:
            return [rows[i][j] for i in live]
        return [(_q(1) if art_of_row.get(i) == j else zero) for i in live]

    def rebuild_zrow(cvec: list) -> list:
        z = list(cvec) + [zero]
        for pos in range(len(T)):
            cb = cvec[basis[pos]]
            if cb != 0:
                trow = T[pos]
                for k in range(ncols + 1):
                    if trow[k] != 0:
                        z[k] -= cb * trow[k]
        return z

    def pivot(z: list, pi: int, pj: int) -> None:
        prow = T[pi]
        piv = prow[pj]
        if piv != 1:
            inv = 1 / piv
            prow = [v * inv if v else v for v in prow]
            T[pi] = prow
        for i in range(len(T)):
            row = T[i]
            if row is prow:
                continue
            f = row[pj]
            if f != 0:
                T[i] = [a - f * b if b else a for a, b in zip(row, prow)]
        f = z[pj]
        if f != 0:
            z[:] = [a - f * b if b else a for a, b in zip(z, prow)]
        basis[pi] = pj

    def run_phase(z: list, pricable) -> int | None:
        """Pivot to optimality; returns an entering column on unboundedness.

        Leaving rows follow the lexicographic ratio rule, comparing rhs
        first and then a fixed column order that starts with the phase's
        initial basis.  The basis columns form an identity at phase
        start, so every row begins lexicographically positive and no
        basis can repeat, which rules out cycling on degenerate pivots.
        """
        in_basis = [False] * ncols
        for j in basis:
            in_basis[j] = True
        order = list(basis) + [j for j in range(ncols) if not in_basis[j]]

        def lex_less(i: int, j: int, enter: int) -> bool:
            ti, tj = T[i], T[j]
            vi, vj = ti[enter], tj[enter]
            d = ti[ncols] * vj - tj[ncols] * vi
            if d != 0:
                return d < 0
            for k in order:
                d = ti[k] * vj - tj[k] * vi
                if d != 0:
                    return d < 0
            return False

        while True:
            enter = -1
            best = zero
            for j in range(ncols):
                if pricable(j) and z[j] < best:
                    best = z[j]
                    enter = j
            if enter < 0:
                return None
            leave = -1
            for i in range(len(T)):
                if T[i][enter] > 0 and (leave < 0 or lex_less(i, leave, enter)):
                    leave = i
            if leave < 0:
                return enter
            pivot(z, leave, enter)

    artificial = set(range(nc, ncols))

    if n_art:
        pcost = [zero] * nc + [_q(1)] * n_art
        z = rebuild_zrow(pcost)
        hit = run_phase(z, lambda j: j not in artificial)
        # the auxiliary objective is bounded below by zero
        assert hit is None
        obj1 = -z[ncols]
        if obj1 > 0:
            cb = [pcost[basis[i]] for i in range(len(T))]
            cols = [orig_col(basis[k], live_rows) for k in range(len(T))]
            y = _solve_transposed(cols, cb)
            y_full = [Fraction(0)] * m
            for pos, i in enumerate(live_rows):
                y_full[i] = _fr(y[pos]) * sign[i]
            return LPResult("infeasible", y=y_full)
        # drive artificials out of the basis, deleting dependent rows
        pos = 0
        while pos < len(T):
            if basis[pos] >= nc:
                pj = next((j for j in range(nc) if T[pos][j] != 0), -1)
                if pj >= 0:
                    pivot(z, pos, pj)
                else:
                    del T[pos], live_rows[pos], basis[pos]
                    continue
            pos += 1

    ext_cost = list(cost) + [zero] * n_art
    z = rebuild_zrow(ext_cost)
    hit = run_phase(z, lambda j: j not in artificial)
    nr = len(T)

    if hit is not None:
        ray = [Fraction(0)] * nc
        ray[hit] = Fraction(1)
        for i in range(nr):
            if T[i][hit] != 0:
                ray[basis[i]] = _fr(-T[i][hit])
        x = [Fraction(0)] * nc
        for i in range(nr):
            x[basis[i]] = _fr(T[i][ncols])
        return LPResult("unbounded", x=x, ray=ray)

    x = [Fraction(0)] * nc
    for i in range(nr):
        x[basis[i]] = _fr(T[i][ncols])
    objective = sum((x[j] * _fr(cost[j]) for j in range(nc) if x[j]), Fraction(0))

    cb = [ext_cost[basis[i]] for i in range(nr)]
    cols = [orig_col(basis[k], live_rows) for k in range(nr)]
    y = _solve_transposed(cols, cb)
    y_full = [Fraction(0)] * m
    for pos, i in enumerate(live_rows):
        y_full[i] = _fr(y[pos]) * sign[i]
    return LPResult("optimal", x=x, objective=objective, y=y_full,
                    warm=(list(live_rows), list(basis)))
