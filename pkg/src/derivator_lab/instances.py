"""The two computation targets: finite sets with cartesian structure and
matrices over a prime field with Kronecker structure.

Both are bicomplete closed symmetric monoidal, with deterministic finite
(co)limit engines: quotients of finite sets use union-find with
smallest-index representatives, and all matrix kernels/cokernels use
Gaussian elimination with leftmost pivots.  Tensors are strictly
associative and unital under the row-major index conventions used here,
so associators and unitors are identities; symmetries are not.
"""

from __future__ import annotations

import itertools
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any

from . import linalg
from .diagrams import Diagram


@dataclass(frozen=True)
class ColimitPresentation:
    diagram: Diagram
    obj: Any
    legs: dict[str, Any]
    data: Any = field(compare=False, default=None)


@dataclass(frozen=True)
class LimitPresentation:
    diagram: Diagram
    obj: Any
    legs: dict[str, Any]
    data: Any = field(compare=False, default=None)


class NotACocone(ValueError):
    pass


class NotACone(ValueError):
    pass


class InstanceCategory(ABC):
    """A bicomplete closed symmetric monoidal computation target."""

    name: str = ""

    # -- category structure -------------------------------------------------
    @abstractmethod
    def identity(self, x): ...

    @abstractmethod
    def compose(self, g, f): ...

    @abstractmethod
    def source(self, f): ...

    @abstractmethod
    def target(self, f): ...

    @abstractmethod
    def hom(self, x, y) -> list: ...

    @abstractmethod
    def is_iso(self, f) -> bool: ...

    @abstractmethod
    def invert(self, f): ...

    @abstractmethod
    def iso_exists(self, x, y): ...

    # -- (co)limits ----------------------------------------------------------
    @abstractmethod
    def colimit(self, d: Diagram) -> ColimitPresentation: ...

    @abstractmethod
    def limit(self, d: Diagram) -> LimitPresentation: ...

    @abstractmethod
    def factor_cocone(self, pres: ColimitPresentation, target, legs: dict[str, Any]): ...

    @abstractmethod
    def factor_cone(self, pres: LimitPresentation, source, legs: dict[str, Any]): ...

    def initial(self):
        from .fincat import empty_category
        return self.colimit(Diagram(empty_category(), self, {}, {})).obj

    def terminal(self):
        from .fincat import empty_category
        return self.limit(Diagram(empty_category(), self, {}, {})).obj

    @abstractmethod
    def unique_from_initial(self, x): ...

    @abstractmethod
    def unique_to_terminal(self, x): ...

    def is_pointed(self) -> bool:
        return self.is_iso(self.unique_to_terminal(self.initial()))

    def zero_mor(self, x, y):
        """x -> terminal ≅ initial -> y; only defined in a pointed instance."""
        if not self.is_pointed():
            raise ValueError(f"{self.name} is not pointed; no zero morphisms")
        through = self.invert(self.unique_to_terminal(self.initial()))
        return self.compose(self.unique_from_initial(y),
                            self.compose(through, self.unique_to_terminal(x)))

    # -- monoidal structure ---------------------------------------------------
    @abstractmethod
    def tensor_obj(self, x, y): ...

    @abstractmethod
    def tensor_mor(self, f, g): ...

    @abstractmethod
    def unit(self): ...

    @abstractmethod
    def symmetry(self, x, y): ...

    @abstractmethod
    def hom_obj(self, x, z): ...

    @abstractmethod
    def hom_obj_mor(self, f, g): ...

    @abstractmethod
    def eval_mor(self, x, z): ...

    @abstractmethod
    def curry(self, f, x, y, z): ...

    @abstractmethod
    def uncurry(self, g, x, y, z): ...

    # -- copowers of the unit --------------------------------------------------
    @abstractmethod
    def copower(self, n: int): ...

    @abstractmethod
    def copower_map(self, n_src: int, n_dst: int, table: list[int]): ...

    @abstractmethod
    def copower_eval_right(self, v, mors: list): ...

    @abstractmethod
    def copower_eval_left(self, v, mors: list): ...

    # -- sampling and display ----------------------------------------------------
    @abstractmethod
    def random_object(self, rng, cap: int = 3): ...

    @abstractmethod
    def random_mor(self, rng, x, y): ...

    @abstractmethod
    def random_iso(self, rng, x): ...

    @abstractmethod
    def obj_repr(self, x) -> str: ...

    @abstractmethod
    def mor_repr(self, f) -> str: ...


# ---------------------------------------------------------------------------
# finite sets


@dataclass(frozen=True, eq=True)
class FinSetObj:
    size: int

    def __repr__(self):
        return f"FinSetObj({self.size})"


@dataclass(frozen=True, eq=True)
class FinSetMor:
    src: FinSetObj
    dst: FinSetObj
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != self.src.size:
            raise ValueError("table length does not match source size")
        if any(not (0 <= v < self.dst.size) for v in self.table):
            raise ValueError("table value outside target range")

    def __call__(self, e: int) -> int:
        return self.table[e]

    def __repr__(self):
        return f"FinSetMor({self.src.size}->{self.dst.size}, {list(self.table)})"


class FinSetInstance(InstanceCategory):
    """Finite sets {0..n-1} with total function tables; cartesian closed."""

    name = "finset"

    def identity(self, x):
        return FinSetMor(x, x, tuple(range(x.size)))

    def compose(self, g, f):
        if f.dst != g.src:
            raise ValueError("not composable")
        return FinSetMor(f.src, g.dst, tuple(g.table[v] for v in f.table))

    def source(self, f):
        return f.src

    def target(self, f):
        return f.dst

    def hom(self, x, y):
        return [FinSetMor(x, y, t) for t in itertools.product(range(y.size), repeat=x.size)]

    def is_iso(self, f):
        return f.src.size == f.dst.size and len(set(f.table)) == f.src.size

    def invert(self, f):
        if not self.is_iso(f):
            raise ValueError("not an isomorphism")
        inv = [0] * f.src.size
        for i, v in enumerate(f.table):
            inv[v] = i
        return FinSetMor(f.dst, f.src, tuple(inv))

    def iso_exists(self, x, y):
        if x.size != y.size:
            return None
        return self.identity(x)

    # quotient by the relation generated by x ~ D(f)(x), smallest-index reps
    def colimit(self, d: Diagram) -> ColimitPresentation:
        shape = d.shape
        offsets: dict[str, int] = {}
        total = 0
        for j in shape.objects:
            offsets[j] = total
            total += d.ob[j].size
        parent = list(range(total))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        def union(i, j):
            ri, rj = find(i), find(j)
            if ri != rj:
                # smaller index wins, keeping representatives canonical
                if ri < rj:
                    parent[rj] = ri
                else:
                    parent[ri] = rj

        for m, s, t in shape.morphisms:
            f = d.mor[m]
            for e in range(d.ob[s].size):
                union(offsets[s] + e, offsets[t] + f.table[e])
        reps = sorted({find(i) for i in range(total)})
        class_index = {r: c for c, r in enumerate(reps)}
        class_of = [class_index[find(i)] for i in range(total)]
        obj = FinSetObj(len(reps))
        legs = {
            j: FinSetMor(d.ob[j], obj,
                         tuple(class_of[offsets[j] + e] for e in range(d.ob[j].size)))
            for j in shape.objects
        }
        return ColimitPresentation(d, obj, legs, data=(offsets, class_of, reps))

    def factor_cocone(self, pres, target, legs):
        offsets, class_of, reps = pres.data
        d = pres.diagram
        table = [0] * pres.obj.size
        seen = [False] * pres.obj.size
        for j in d.shape.objects:
            leg = legs[j]
            for e in range(d.ob[j].size):
                c = class_of[offsets[j] + e]
                v = leg.table[e]
                if seen[c] and table[c] != v:
                    raise NotACocone(f"legs disagree on class {c} (object {j}, element {e})")
                table[c] = v
                seen[c] = True
        return FinSetMor(pres.obj, target, tuple(table))

    # subset of the product satisfying all compatibility equations
    def limit(self, d: Diagram) -> LimitPresentation:
        shape = d.shape
        objs = shape.objects
        tuples = []
        for t in itertools.product(*[range(d.ob[j].size) for j in objs]):
            assignment = dict(zip(objs, t))
            if all(d.mor[m].table[assignment[s]] == assignment[tt]
                   for m, s, tt in shape.morphisms):
                tuples.append(t)
        index = {t: i for i, t in enumerate(tuples)}
        obj = FinSetObj(len(tuples))
        legs = {
            j: FinSetMor(obj, d.ob[j], tuple(t[i] for t in tuples))
            for i, j in enumerate(objs)
        }
        return LimitPresentation(d, obj, legs, data=(tuples, index))

    def factor_cone(self, pres, source, legs):
        tuples, index = pres.data
        objs = pres.diagram.shape.objects
        table = []
        for v in range(source.size):
            t = tuple(legs[j].table[v] for j in objs)
            if t not in index:
                raise NotACone(f"legs at element {v} do not satisfy the compatibility equations")
            table.append(index[t])
        return FinSetMor(source, pres.obj, tuple(table))

    def unique_from_initial(self, x):
        return FinSetMor(FinSetObj(0), x, ())

    def unique_to_terminal(self, x):
        return FinSetMor(x, FinSetObj(1), (0,) * x.size)

    # cartesian monoidal structure, row-major pair index x*|Y|+y
    def tensor_obj(self, x, y):
        return FinSetObj(x.size * y.size)

    def tensor_mor(self, f, g):
        table = []
        for a in range(f.src.size):
            for b in range(g.src.size):
                table.append(f.table[a] * g.dst.size + g.table[b])
        return FinSetMor(self.tensor_obj(f.src, g.src), self.tensor_obj(f.dst, g.dst), tuple(table))

    def unit(self):
        return FinSetObj(1)

    def symmetry(self, x, y):
        table = [0] * (x.size * y.size)
        for a in range(x.size):
            for b in range(y.size):
                table[a * y.size + b] = b * x.size + a
        return FinSetMor(self.tensor_obj(x, y), self.tensor_obj(y, x), tuple(table))

    # the function set Z^X, tables enumerated lexicographically
    def hom_obj(self, x, z):
        return FinSetObj(z.size ** x.size)

    def encode_fn(self, table: tuple[int, ...], z_size: int) -> int:
        k = 0
        for v in table:
            k = k * z_size + v
        return k

    def decode_fn(self, k: int, x_size: int, z_size: int) -> tuple[int, ...]:
        out = [0] * x_size
        for i in range(x_size - 1, -1, -1):
            out[i] = k % z_size
            k //= z_size
        return tuple(out)

    def hom_obj_mor(self, f, g):
        # f: x -> x', g: z -> z' induce hom(x',z) -> hom(x,z')
        x, xp = f.src, f.dst
        z, zp = g.src, g.dst
        src = self.hom_obj(xp, z)
        dst = self.hom_obj(x, zp)
        table = []
        for k in range(src.size):
            t = self.decode_fn(k, xp.size, z.size)
            table.append(self.encode_fn(tuple(g.table[t[f.table[a]]] for a in range(x.size)), zp.size))
        return FinSetMor(src, dst, tuple(table))

    def eval_mor(self, x, z):
        h = self.hom_obj(x, z)
        table = []
        for k in range(h.size):
            t = self.decode_fn(k, x.size, z.size)
            for a in range(x.size):
                table.append(t[a])
        return FinSetMor(self.tensor_obj(h, x), z, tuple(table))

    def curry(self, f, x, y, z):
        tables = []
        for b in range(y.size):
            tables.append(self.encode_fn(tuple(f.table[a * y.size + b] for a in range(x.size)), z.size))
        return FinSetMor(y, self.hom_obj(x, z), tuple(tables))

    def uncurry(self, g, x, y, z):
        table = []
        for a in range(x.size):
            for b in range(y.size):
                table.append(self.decode_fn(g.table[b], x.size, z.size)[a])
        return FinSetMor(self.tensor_obj(x, y), z, tuple(table))

    def copower(self, n: int):
        return FinSetObj(n)

    def copower_map(self, n_src, n_dst, table):
        return FinSetMor(FinSetObj(n_src), FinSetObj(n_dst), tuple(table))

    def copower_eval_right(self, v, mors):
        n = len(mors)
        w = mors[0].dst if mors else FinSetObj(0)
        table = []
        for a in range(v.size):
            for h in range(n):
                table.append(mors[h].table[a])
        return FinSetMor(self.tensor_obj(v, FinSetObj(n)), w, tuple(table))

    def copower_eval_left(self, v, mors):
        n = len(mors)
        w = mors[0].dst if mors else FinSetObj(0)
        table = []
        for h in range(n):
            for a in range(v.size):
                table.append(mors[h].table[a])
        return FinSetMor(self.tensor_obj(FinSetObj(n), v), w, tuple(table))

    def random_object(self, rng, cap: int = 3):
        return FinSetObj(rng.randint(0, cap))

    def random_mor(self, rng, x, y):
        if x.size > 0 and y.size == 0:
            raise ValueError("no map into the empty set")
        return FinSetMor(x, y, tuple(rng.randrange(y.size) for _ in range(x.size)))

    def random_iso(self, rng, x):
        table = list(range(x.size))
        rng.shuffle(table)
        return FinSetMor(x, x, tuple(table))

    def obj_repr(self, x):
        return f"set({x.size})"

    def mor_repr(self, f):
        return f"map({f.src.size}->{f.dst.size};{','.join(map(str, f.table))})"


# ---------------------------------------------------------------------------
# matrices over F_p


@dataclass(frozen=True, eq=True)
class MatObj:
    dim: int

    def __repr__(self):
        return f"MatObj({self.dim})"


@dataclass(frozen=True, eq=True)
class MatMor:
    src: MatObj
    dst: MatObj
    mat: linalg.Matrix  # dst.dim rows, src.dim columns

    def __post_init__(self):
        if len(self.mat) != self.dst.dim or any(len(r) != self.src.dim for r in self.mat):
            raise ValueError("matrix shape does not match source/target dimensions")

    def __repr__(self):
        return f"MatMor({self.src.dim}->{self.dst.dim}, {[list(r) for r in self.mat]})"


class MatInstance(InstanceCategory):
    """Finite-dimensional F_p vector spaces presented as matrix dimensions."""

    def __init__(self, p: int = 2):
        if not linalg.is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        self.p = p
        self.name = f"mat{p}"

    def mor(self, src_dim: int, dst_dim: int, rows) -> MatMor:
        return MatMor(MatObj(src_dim), MatObj(dst_dim), linalg.reduce_mod(rows, self.p))

    def identity(self, x):
        return MatMor(x, x, linalg.identity(x.dim))

    def compose(self, g, f):
        if f.dst != g.src:
            raise ValueError("not composable")
        rows = tuple(
            tuple(sum(g.mat[i][k] * f.mat[k][j] for k in range(f.dst.dim)) % self.p
                  for j in range(f.src.dim))
            for i in range(g.dst.dim)
        )
        return MatMor(f.src, g.dst, rows)

    def source(self, f):
        return f.src

    def target(self, f):
        return f.dst

    def hom(self, x, y):
        entries = x.dim * y.dim
        out = []
        for vals in itertools.product(range(self.p), repeat=entries):
            rows = tuple(tuple(vals[i * x.dim:(i + 1) * x.dim]) for i in range(y.dim))
            out.append(MatMor(x, y, rows))
        return out

    def is_iso(self, f):
        return f.src.dim == f.dst.dim and linalg.rank(f.mat, self.p) == f.src.dim

    def invert(self, f):
        inv = linalg.inverse(f.mat, self.p)
        if inv is None:
            raise ValueError("not an isomorphism")
        return MatMor(f.dst, f.src, inv)

    def iso_exists(self, x, y):
        if x.dim != y.dim:
            return None
        return self.identity(x)

    def zero(self, x, y):
        return MatMor(x, y, linalg.zeros(y.dim, x.dim))

    def zero_mor(self, x, y):
        return self.zero(x, y)

    # cokernel of the standard difference map between sums over morphisms/objects
    def colimit(self, d: Diagram) -> ColimitPresentation:
        shape = d.shape
        offsets: dict[str, int] = {}
        total = 0
        for j in shape.objects:
            offsets[j] = total
            total += d.ob[j].dim
        cols: list[tuple[int, ...]] = []
        for m, s, t in shape.morphisms:
            f = d.mor[m]
            for e in range(d.ob[s].dim):
                col = [0] * total
                col[offsets[s] + e] = (col[offsets[s] + e] - 1) % self.p
                for r in range(d.ob[t].dim):
                    col[offsets[t] + r] = (col[offsets[t] + r] + f.mat[r][e]) % self.p
                cols.append(tuple(col))
        m_matrix = tuple(tuple(c[i] for c in cols) for i in range(total))
        m_t = tuple(zip(*m_matrix)) if cols else tuple(() for _ in range(0))
        left_null = linalg.kernel_basis(m_t, self.p) if cols else \
            [tuple(1 if i == j else 0 for j in range(total)) for i in range(total)]
        pi = tuple(left_null)
        obj = MatObj(len(pi))
        legs = {
            j: MatMor(d.ob[j], obj,
                      tuple(tuple(row[offsets[j] + e] for e in range(d.ob[j].dim)) for row in pi))
            for j in shape.objects
        }
        return ColimitPresentation(d, obj, legs, data=(offsets, m_matrix, pi, total))

    def factor_cocone(self, pres, target, legs):
        offsets, m_matrix, pi, total = pres.data
        d = pres.diagram
        w = target.dim
        q_cols: list[list[int]] = [[0] * w for _ in range(total)]
        for j in d.shape.objects:
            leg = legs[j]
            for e in range(d.ob[j].dim):
                for r in range(w):
                    q_cols[offsets[j] + e][r] = leg.mat[r][e]
        q = tuple(tuple(q_cols[c][r] for c in range(total)) for r in range(w))
        diff_cols = tuple(zip(*m_matrix)) if m_matrix and m_matrix[0] else ()
        for col in diff_cols:
            img = tuple(sum(q[r][i] * col[i] for i in range(total)) % self.p for r in range(w))
            if any(v != 0 for v in img):
                raise NotACocone("legs do not coequalize the difference map")
        if not pi:
            return MatMor(pres.obj, target, tuple(() for _ in range(w)))
        sol = linalg.solve_matrix(tuple(zip(*pi)), tuple(zip(*q)), self.p)
        if sol is None:
            raise NotACocone("cocone does not factor through the cokernel")
        return MatMor(pres.obj, target, tuple(zip(*sol)))

    # kernel of the standard difference map
    def limit(self, d: Diagram) -> LimitPresentation:
        shape = d.shape
        objs = shape.objects
        offsets: dict[str, int] = {}
        total = 0
        for j in objs:
            offsets[j] = total
            total += d.ob[j].dim
        rows: list[tuple[int, ...]] = []
        for m, s, t in shape.morphisms:
            f = d.mor[m]
            for r in range(d.ob[t].dim):
                row = [0] * total
                for e in range(d.ob[s].dim):
                    row[offsets[s] + e] = (row[offsets[s] + e] + f.mat[r][e]) % self.p
                row[offsets[t] + r] = (row[offsets[t] + r] - 1) % self.p
                rows.append(tuple(row))
        n_matrix = tuple(rows)
        iota = linalg.kernel_matrix(n_matrix, total, self.p)
        nullity = len(iota[0]) if iota else 0
        obj = MatObj(nullity)
        legs = {
            j: MatMor(obj, d.ob[j],
                      tuple(iota[offsets[j] + e] for e in range(d.ob[j].dim)))
            for j in objs
        }
        return LimitPresentation(d, obj, legs, data=(offsets, n_matrix, iota, total))

    def factor_cone(self, pres, source, legs):
        offsets, n_matrix, iota, total = pres.data
        d = pres.diagram
        v = source.dim
        m_rows: list[tuple[int, ...]] = []
        for j in d.shape.objects:
            for r in range(d.ob[j].dim):
                m_rows.append(tuple(legs[j].mat[r][c] for c in range(v)))
        m = tuple(m_rows)
        for row in n_matrix:
            for c in range(v):
                val = sum(row[i] * m[i][c] for i in range(total)) % self.p
                if val != 0:
                    raise NotACone("legs do not satisfy the compatibility equations")
        sol = linalg.solve_matrix(iota, m, self.p)
        if sol is None:
            raise NotACone("cone does not factor through the kernel")
        return MatMor(source, pres.obj, sol)

    def unique_from_initial(self, x):
        return MatMor(MatObj(0), x, tuple(() for _ in range(x.dim)))

    def unique_to_terminal(self, x):
        return MatMor(x, MatObj(0), ())

    # Kronecker monoidal structure
    def tensor_obj(self, x, y):
        return MatObj(x.dim * y.dim)

    def tensor_mor(self, f, g):
        mat = linalg.kronecker(f.mat, g.mat, self.p, (g.dst.dim, g.src.dim))
        src = self.tensor_obj(f.src, g.src)
        dst = self.tensor_obj(f.dst, g.dst)
        # kronecker cannot infer shapes through zero-dimensional factors
        if len(mat) != dst.dim or (mat and len(mat[0]) != src.dim) or (not mat and dst.dim > 0):
            mat = linalg.zeros(dst.dim, src.dim)
        return MatMor(src, dst, mat)

    def unit(self):
        return MatObj(1)

    def symmetry(self, x, y):
        rows = [[0] * (x.dim * y.dim) for _ in range(x.dim * y.dim)]
        for a in range(x.dim):
            for b in range(y.dim):
                rows[b * x.dim + a][a * y.dim + b] = 1
        return MatMor(self.tensor_obj(x, y), self.tensor_obj(y, x),
                      tuple(tuple(r) for r in rows))

    # internal hom of dimension m·n; index of the (r, c) matrix unit is r*m + c
    def hom_obj(self, x, z):
        return MatObj(x.dim * z.dim)

    def hom_obj_mor(self, f, g):
        # f: x -> x', g: z -> z' induce hom(x',z) -> hom(x,z'): A -> g∘A∘f
        x, xp = f.src, f.dst
        z, zp = g.src, g.dst
        src = self.hom_obj(xp, z)
        dst = self.hom_obj(x, zp)
        rows = [[0] * src.dim for _ in range(dst.dim)]
        for rp in range(zp.dim):
            for c in range(x.dim):
                for r in range(z.dim):
                    for cp in range(xp.dim):
                        rows[rp * x.dim + c][r * xp.dim + cp] = \
                            (g.mat[rp][r] * f.mat[cp][c]) % self.p
        return MatMor(src, dst, tuple(tuple(r) for r in rows))

    def eval_mor(self, x, z):
        h = self.hom_obj(x, z)
        rows = [[0] * (h.dim * x.dim) for _ in range(z.dim)]
        for i in range(z.dim):
            for j in range(x.dim):
                rows[i][(i * x.dim + j) * x.dim + j] = 1
        return MatMor(self.tensor_obj(h, x), z, tuple(tuple(r) for r in rows))

    def curry(self, f, x, y, z):
        rows = [[0] * y.dim for _ in range(x.dim * z.dim)]
        for r in range(z.dim):
            for i in range(x.dim):
                for b in range(y.dim):
                    rows[r * x.dim + i][b] = f.mat[r][i * y.dim + b]
        return MatMor(y, self.hom_obj(x, z), tuple(tuple(r) for r in rows))

    def uncurry(self, g, x, y, z):
        rows = [[0] * (x.dim * y.dim) for _ in range(z.dim)]
        for r in range(z.dim):
            for i in range(x.dim):
                for b in range(y.dim):
                    rows[r][i * y.dim + b] = g.mat[r * x.dim + i][b]
        return MatMor(self.tensor_obj(x, y), z, tuple(tuple(r) for r in rows))

    def copower(self, n: int):
        return MatObj(n)

    def copower_map(self, n_src, n_dst, table):
        rows = [[0] * n_src for _ in range(n_dst)]
        for h, v in enumerate(table):
            rows[v][h] = 1
        return MatMor(MatObj(n_src), MatObj(n_dst), tuple(tuple(r) for r in rows))

    def copower_eval_right(self, v, mors):
        n = len(mors)
        w = mors[0].dst if mors else MatObj(0)
        rows = [[0] * (v.dim * n) for _ in range(w.dim)]
        for h, m in enumerate(mors):
            for r in range(w.dim):
                for c in range(v.dim):
                    rows[r][c * n + h] = m.mat[r][c]
        return MatMor(self.tensor_obj(v, MatObj(n)), w, tuple(tuple(r) for r in rows))

    def copower_eval_left(self, v, mors):
        n = len(mors)
        w = mors[0].dst if mors else MatObj(0)
        rows = [[0] * (n * v.dim) for _ in range(w.dim)]
        for h, m in enumerate(mors):
            for r in range(w.dim):
                for c in range(v.dim):
                    rows[r][h * v.dim + c] = m.mat[r][c]
        return MatMor(self.tensor_obj(MatObj(n), v), w, tuple(tuple(r) for r in rows))

    def random_object(self, rng, cap: int = 3):
        return MatObj(rng.randint(0, min(cap, 2)))

    def random_mor(self, rng, x, y):
        rows = tuple(tuple(rng.randrange(self.p) for _ in range(x.dim)) for _ in range(y.dim))
        return MatMor(x, y, rows)

    def random_iso(self, rng, x):
        while True:
            f = self.random_mor(rng, x, x)
            if self.is_iso(f):
                return f

    def obj_repr(self, x):
        return f"F{self.p}^{x.dim}"

    def mor_repr(self, f):
        return f"mat({f.src.dim}->{f.dst.dim};{[list(r) for r in f.mat]})"
