"""Exact linear algebra helpers: matrices over F_p and over Q(zeta_p).

F_p matrices are tuples of row tuples of ints in [0, p).  Cyclotomic
matrices are lists of lists of CycNum; elimination never pivots on a
zero entry, so every routine here is exact.
"""

from __future__ import annotations

from .cyclotomic import CycNum

Vec = tuple[int, ...]
Mat = tuple[Vec, ...]


# ---------------------------------------------------------------- F_p side

def vec_mod(v, p: int) -> Vec:
    return tuple(int(x) % p for x in v)


def vec_add(u: Vec, v: Vec, p: int) -> Vec:
    return tuple((a + b) % p for a, b in zip(u, v))


def vec_sub(u: Vec, v: Vec, p: int) -> Vec:
    return tuple((a - b) % p for a, b in zip(u, v))


def vec_scale(c: int, v: Vec, p: int) -> Vec:
    return tuple((c * a) % p for a in v)


def mat_vec(m: Mat, v: Vec, p: int) -> Vec:
    return tuple(sum(r * x for r, x in zip(row, v)) % p for row in m)


def mat_mul(a: Mat, b: Mat, p: int) -> Mat:
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) % p for col in bt)
        for row in a
    )


def transpose(a: Mat) -> Mat:
    return tuple(zip(*a))


def identity(n: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def rref(rows, p: int) -> tuple[Mat, tuple[int, ...]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    work = [list(vec_mod(r, p)) for r in rows]
    ncols = len(work[0]) if work else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][c]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = pow(work[r][c], -1, p)
        work[r] = [(inv * x) % p for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [(x - f * y) % p for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in work[:r]), tuple(pivots)


def solve(a: Mat, b: Vec, p: int) -> Vec | None:
    """One solution x of a @ x = b over F_p, or None."""
    m = len(a)
    n = len(a[0]) if m else 0
    aug = [list(row) + [b[i]] for i, row in enumerate(a)]
    reduced, pivots = rref(tuple(tuple(r) for r in aug), p)
    x = [0] * n
    for row, c in zip(reduced, pivots):
        if c == n:
            return None
        x[c] = row[n]
    return tuple(x)


def nullspace(a: Mat, p: int) -> tuple[Vec, ...]:
    """Basis of the right kernel of a over F_p."""
    n = len(a[0]) if a else 0
    reduced, pivots = rref(a, p)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for row, c in zip(reduced, pivots):
            v[c] = (-row[f]) % p
        basis.append(tuple(v))
    return tuple(basis)


def det(a: Mat, p: int) -> int:
    n = len(a)
    work = [list(vec_mod(r, p)) for r in a]
    result = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if work[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            work[c], work[piv] = work[piv], work[c]
            result = -result
        result = (result * work[c][c]) % p
        inv = pow(work[c][c], -1, p)
        for i in range(c + 1, n):
            if work[i][c]:
                f = (inv * work[i][c]) % p
                work[i] = [(x - f * y) % p for x, y in zip(work[i], work[c])]
    return result % p


def inverse(a: Mat, p: int) -> Mat:
    n = len(a)
    aug = tuple(tuple(a[i]) + tuple(1 if i == j else 0 for j in range(n))
                for i in range(n))
    reduced, pivots = rref(aug, p)
    if pivots[:n] != tuple(range(n)):
        raise ValueError("matrix is singular mod p")
    return tuple(row[n:] for row in reduced[:n])


# -------------------------------------------------------- cyclotomic side

def cyc_zero_matrix(p: int, rows: int, cols: int) -> list[list[CycNum]]:
    zero = CycNum.zero(p)
    return [[zero] * cols for _ in range(rows)]


def cyc_identity(p: int, n: int) -> list[list[CycNum]]:
    one = CycNum.from_rational(p, 1)
    zero = CycNum.zero(p)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def cyc_mat_mul(a, b) -> list[list[CycNum]]:
    rows, inner, cols = len(a), len(b), len(b[0])
    p = a[0][0].p
    zero = CycNum.zero(p)
    out = []
    for i in range(rows):
        arow = a[i]
        orow = [zero] * cols
        for k in range(inner):
            aik = arow[k]
            if aik.is_zero():
                continue
            brow = b[k]
            orow = [o + aik * brow[j] for j, o in enumerate(orow)]
        out.append(orow)
    return out


def cyc_mat_scale(c: CycNum, a) -> list[list[CycNum]]:
    return [[c * x for x in row] for row in a]


def cyc_mat_add(a, b) -> list[list[CycNum]]:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def cyc_mat_sub(a, b) -> list[list[CycNum]]:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def cyc_mat_eq(a, b) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def cyc_mat_vec(a, v) -> list[CycNum]:
    p = a[0][0].p
    zero = CycNum.zero(p)
    out = []
    for row in a:
        acc = zero
        for x, y in zip(row, v):
            if not x.is_zero():
                acc = acc + x * y
        out.append(acc)
    return out


def cyc_kron(a, b) -> list[list[CycNum]]:
    out = []
    for ra in a:
        for rb in b:
            out.append([x * y for x in ra for y in rb])
    return out


def _cyc_eliminate(a) -> tuple[list[list[CycNum]], list[int]]:
    work = [list(row) for row in a]
    nrows = len(work)
    ncols = len(work[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if not work[i][c].is_zero()), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = work[r][c].inverse()
        work[r] = [inv * x for x in work[r]]
        for i in range(nrows):
            if i != r and not work[i][c].is_zero():
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return work, pivots


def cyc_rank(a) -> int:
    _, pivots = _cyc_eliminate(a)
    return len(pivots)


def cyc_nullspace(a) -> list[list[CycNum]]:
    p = a[0][0].p
    n = len(a[0])
    reduced, pivots = _cyc_eliminate(a)
    free = [c for c in range(n) if c not in pivots]
    one = CycNum.from_rational(p, 1)
    zero = CycNum.zero(p)
    basis = []
    for f in free:
        v = [zero] * n
        v[f] = one
        for row, c in zip(reduced[: len(pivots)], pivots):
            v[c] = -row[f]
        basis.append(v)
    return basis


def cyc_inverse(a) -> list[list[CycNum]]:
    n = len(a)
    p = a[0][0].p
    one = CycNum.from_rational(p, 1)
    zero = CycNum.zero(p)
    aug = [list(a[i]) + [one if i == j else zero for j in range(n)]
           for i in range(n)]
    reduced, pivots = _cyc_eliminate(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("cyclotomic matrix is singular")
    return [row[n:] for row in reduced[:n]]


def cyc_det(a) -> CycNum:
    n = len(a)
    p = a[0][0].p
    work = [list(row) for row in a]
    result = CycNum.from_rational(p, 1)
    for c in range(n):
        piv = next((i for i in range(c, n) if not work[i][c].is_zero()), None)
        if piv is None:
            return CycNum.zero(p)
        if piv != c:
            work[c], work[piv] = work[piv], work[c]
            result = -result
        result = result * work[c][c]
        inv = work[c][c].inverse()
        for i in range(c + 1, n):
            if not work[i][c].is_zero():
                f = inv * work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[c])]
    return result
