"""Exact linear algebra over the prime field F_p.

Matrices are tuples of tuples of ints reduced mod p, indexed [row][col].
Every routine uses Gaussian elimination with leftmost-pivot selection, so
all outputs (rref, kernel bases, solutions) are deterministic.
"""

from __future__ import annotations

Matrix = tuple[tuple[int, ...], ...]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def zeros(rows: int, cols: int) -> Matrix:
    return tuple((0,) * cols for _ in range(rows))


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def reduce_mod(m, p: int) -> Matrix:
    return tuple(tuple(int(x) % p for x in row) for row in m)


def mat_mul(a: Matrix, b: Matrix, p: int) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise ValueError(f"shape mismatch: {len(a)}x{len(a[0])} @ {len(b)}x{len(b[0]) if b else 0}")
    if not b:
        return tuple(() for _ in a) if not a or not a[0] else zeros(len(a), 0)
    cols_b = len(b[0])
    bt = list(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) % p for col in bt)
        for row in a
    ) if cols_b else zeros(len(a), 0)


def mat_add(a: Matrix, b: Matrix, p: int) -> Matrix:
    return tuple(tuple((x + y) % p for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def scalar_mul(s: int, a: Matrix, p: int) -> Matrix:
    return tuple(tuple((s * x) % p for x in row) for row in a)


def rref(m: Matrix, p: int) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot column indices."""
    rows = [list(r) for r in m]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if rows[i][c] % p != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(inv * x) % p for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] % p != 0:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return tuple(tuple(row) for row in rows), pivots


def rank(m: Matrix, p: int) -> int:
    return len(rref(m, p)[1])


def kernel_basis(m: Matrix, p: int) -> list[tuple[int, ...]]:
    """Deterministic basis of {x : m x = 0}, one vector per free column."""
    if not m:
        # 0 x n matrix: kernel is everything
        return []
    ncols = len(m[0])
    red, pivots = rref(m, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-red[r][fc]) % p
        basis.append(tuple(v))
    return basis


def kernel_matrix(m: Matrix, ncols: int, p: int) -> Matrix:
    """Kernel basis assembled as an ncols x nullity matrix (columns are basis vectors)."""
    if not m:
        return identity(ncols)
    basis = kernel_basis(m, p)
    return tuple(tuple(v[i] for v in basis) for i in range(ncols))


def solve(m: Matrix, b: tuple[int, ...], p: int) -> tuple[int, ...] | None:
    """One solution of m x = b (free variables set to 0), or None."""
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    aug = tuple(tuple(row) + (b[i] % p,) for i, row in enumerate(m))
    if not aug:
        return (0,) * ncols if all(x % p == 0 for x in b) else ((0,) * ncols if nrows == 0 else None)
    red, pivots = rref(aug, p)
    for r in range(len(red)):
        if all(x == 0 for x in red[r][:ncols]) and red[r][ncols] != 0:
            return None
    x = [0] * ncols
    for r, pc in enumerate(pivots):
        if pc == ncols:
            return None
        x[pc] = red[r][ncols]
    return tuple(x)


def solve_matrix(m: Matrix, b: Matrix, p: int) -> Matrix | None:
    """X with m @ X = b, or None. Solves column by column."""
    ncols_b = len(b[0]) if b else 0
    if not b:
        ncols_b = 0
    cols = []
    for j in range(ncols_b):
        col = tuple(b[i][j] for i in range(len(b)))
        x = solve(m, col, p)
        if x is None:
            return None
        cols.append(x)
    ncols_m = len(m[0]) if m else 0
    return tuple(tuple(cols[j][i] for j in range(ncols_b)) for i in range(ncols_m))


def inverse(m: Matrix, p: int) -> Matrix | None:
    n = len(m)
    if any(len(row) != n for row in m):
        return None
    if n == 0:
        return ()
    aug = tuple(row + identity(n)[i] for i, row in enumerate(m))
    red, pivots = rref(aug, p)
    if pivots != list(range(n)):
        return None
    return tuple(row[n:] for row in red)


def kronecker(a: Matrix, b: Matrix, p: int, b_shape: tuple[int, int]) -> Matrix:
    """Kronecker product with row-major index convention.

    b_shape carries (rows, cols) of b explicitly so zero-dimensional
    factors keep their shape information.
    """
    br, bc = b_shape
    ar = len(a)
    ac = len(a[0]) if a else 0
    out_rows = ar * br
    out_cols = ac * bc
    out = [[0] * out_cols for _ in range(out_rows)]
    for i in range(ar):
        for j in range(ac):
            if a[i][j] == 0:
                continue
            for k in range(br):
                for l in range(bc):
                    out[i * br + k][j * bc + l] = (a[i][j] * b[k][l]) % p
    return tuple(tuple(row) for row in out)
