"""Symplectic vector spaces over F_p and their (oriented) Lagrangian calculus.

Subspaces are kept in reduced row echelon form, which is the unique
canonical representative and doubles as a dictionary key.  An orientation
is a scalar in F_p^x against the wedge of the RREF rows: the top exterior
power is one dimensional, so the scalar is the complete datum.
"""

from __future__ import annotations

import os
from itertools import combinations, product

from . import linalg
from .cyclotomic import is_odd_prime, legendre

DEFAULT_MAX_CELLS = 10_000


class ScaleLimitError(Exception):
    """Raised when an enumeration would exceed the desk-scale guard."""


def max_cells() -> int:
    value = os.environ.get("WEIL_MAX_CELLS")
    return int(value) if value else DEFAULT_MAX_CELLS


def _guard(count: int, what: str) -> None:
    limit = max_cells()
    if count > limit:
        raise ScaleLimitError(
            f"{what} needs {count} cells, above the limit {limit} "
            f"(override with WEIL_MAX_CELLS)")


class SymplecticSpace:
    """(V, omega) of dimension 2n over F_p, omega given by a Gram matrix."""

    def __init__(self, p: int, n: int, gram=None) -> None:
        if not is_odd_prime(p):
            raise ValueError(f"p must be an odd prime, got {p}")
        if n < 0:
            raise ValueError("half-dimension must be nonnegative")
        self.p = p
        self.n = n
        dim = 2 * n
        if gram is None:
            gram = tuple(
                tuple(
                    1 if j == i + n else (-1 if j == i - n else 0) % p
                    for j in range(dim))
                for i in range(dim))
        gram = tuple(tuple(x % p for x in row) for row in gram)
        if len(gram) != dim or any(len(row) != dim for row in gram):
            raise ValueError("Gram matrix has wrong shape")
        for i in range(dim):
            if gram[i][i] != 0:
                raise ValueError("Gram matrix must have zero diagonal")
            for j in range(dim):
                if (gram[i][j] + gram[j][i]) % p != 0:
                    raise ValueError("Gram matrix must be antisymmetric")
        if dim and linalg.det(gram, p) == 0:
            raise ValueError("Gram matrix must be nondegenerate")
        self.gram = gram
        self.dim = dim
        self.half = pow(2, -1, p)

    def omega(self, v, w) -> int:
        if len(v) != self.dim or len(w) != self.dim:
            raise ValueError("vector length does not match the space")
        g = self.gram
        return sum(v[i] * sum(g[i][j] * w[j] for j in range(self.dim))
                   for i in range(self.dim)) % self.p

    def negated(self) -> SymplecticSpace:
        """The same underlying space with the form negated."""
        p = self.p
        return SymplecticSpace(
            p, self.n, tuple(tuple((-x) % p for x in row) for row in self.gram))

    def times(self, other: SymplecticSpace) -> SymplecticSpace:
        """Cartesian product with block-diagonal Gram matrix."""
        if other.p != self.p:
            raise ValueError("mixed characteristics")
        d1, d2 = self.dim, other.dim
        gram = tuple(
            tuple((self.gram[i][j] if i < d1 and j < d1 else
                   other.gram[i - d1][j - d1] if i >= d1 and j >= d1 else 0)
                  for j in range(d1 + d2))
            for i in range(d1 + d2))
        return SymplecticSpace(self.p, self.n + other.n, gram)

    def vectors(self):
        """All of V, lexicographically."""
        _guard(self.p ** self.dim, "vector enumeration")
        return [tuple(v) for v in product(range(self.p), repeat=self.dim)]

    def key(self):
        return (self.p, self.n, self.gram)

    def __eq__(self, other) -> bool:
        return isinstance(other, SymplecticSpace) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self) -> str:
        return f"SymplecticSpace(p={self.p}, dim={self.dim})"


class Subspace:
    """Row span of an RREF basis; the zero subspace has an empty basis."""

    def __init__(self, space: SymplecticSpace, basis, pivots) -> None:
        self.space = space
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def from_rows(cls, space: SymplecticSpace, rows) -> Subspace:
        basis, pivots = linalg.rref(tuple(tuple(r) for r in rows), space.p)
        return cls(space, basis, pivots)

    @classmethod
    def zero(cls, space: SymplecticSpace) -> Subspace:
        return cls(space, (), ())

    @classmethod
    def full(cls, space: SymplecticSpace) -> Subspace:
        return cls.from_rows(space, linalg.identity(space.dim))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, v):
        """Coefficients of v against the RREF basis, or None if v not here."""
        p = self.space.p
        c = tuple(v[j] for j in self.pivots)
        residue = list(v)
        for coeff, row in zip(c, self.basis):
            residue = [(x - coeff * y) % p for x, y in zip(residue, row)]
        if any(residue):
            return None
        return c

    def contains(self, v) -> bool:
        return self.coords(v) is not None

    def reduce_mod(self, v):
        """Canonical coset representative of v modulo this subspace."""
        p = self.space.p
        out = list(x % p for x in v)
        for row, c in zip(self.basis, self.pivots):
            f = out[c]
            if f:
                out = [(x - f * y) % p for x, y in zip(out, row)]
        return tuple(out)

    def intersect(self, other: Subspace) -> Subspace:
        # kernel of the stacked basis gives coefficients of common vectors
        if not self.basis or not other.basis:
            return Subspace.zero(self.space)
        p = self.space.p
        stacked = tuple(zip(*(self.basis + other.basis)))  # columns = rows
        rows = []
        for coeffs in linalg.nullspace(stacked, p):
            head = coeffs[: self.dim]
            v = [0] * self.space.dim
            for c, row in zip(head, self.basis):
                v = [(x + c * y) % p for x, y in zip(v, row)]
            rows.append(tuple(v))
        return Subspace.from_rows(self.space, rows) if rows else Subspace.zero(self.space)

    def add(self, other: Subspace) -> Subspace:
        return Subspace.from_rows(self.space, self.basis + other.basis)

    def contains_subspace(self, other: Subspace) -> bool:
        return all(self.contains(v) for v in other.basis)

    def is_isotropic(self) -> bool:
        return all(self.space.omega(u, v) == 0
                   for u in self.basis for v in self.basis)

    def is_lagrangian(self) -> bool:
        return self.dim == self.space.n and self.is_isotropic()

    def key(self):
        return self.basis

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subspace)
                and self.space.key() == other.space.key()
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.space.key(), self.basis))

    def __repr__(self) -> str:
        return f"Subspace({self.basis})"


def quotient_reps(a: Subspace, b: Subspace):
    """Coset representatives of a/b, ordered lexicographically over the
    free (non-pivot-of-b) coordinates of a."""
    if not a.contains_subspace(b):
        raise ValueError("quotient_reps requires b contained in a")
    p = a.space.p
    free_rows = [row for row, c in zip(a.basis, a.pivots) if c not in b.pivots]
    reps = []
    for coeffs in product(range(p), repeat=len(free_rows)):
        v = [0] * a.space.dim
        for c, row in zip(coeffs, free_rows):
            v = [(x + c * y) % p for x, y in zip(v, row)]
        reps.append(b.reduce_mod(v))
    return tuple(reps)


class OrientedSubspace:
    """A subspace with a nonzero scalar against its RREF top wedge."""

    def __init__(self, sub: Subspace, orient: int) -> None:
        orient %= sub.space.p
        if orient == 0:
            raise ValueError("orientation scalar must be nonzero")
        self.sub = sub
        self.orient = orient

    @classmethod
    def from_rows(cls, space: SymplecticSpace, rows, orient: int = 1) -> OrientedSubspace:
        """Span of the given rows, oriented by orient times their wedge."""
        sub = Subspace.from_rows(space, rows)
        if sub.dim != len(rows):
            raise ValueError("rows are linearly dependent")
        change = _coords_matrix(rows, sub)
        d = linalg.det(change, space.p)
        return cls(sub, orient * d)

    @property
    def space(self) -> SymplecticSpace:
        return self.sub.space

    def rescaled(self, factor: int) -> OrientedSubspace:
        return OrientedSubspace(self.sub, (self.orient * factor) % self.space.p)

    def key(self):
        return (self.sub.basis, self.orient)

    def __eq__(self, other) -> bool:
        return (isinstance(other, OrientedSubspace)
                and self.sub == other.sub and self.orient == other.orient)

    def __hash__(self):
        return hash((self.sub.key(), self.orient))

    def __repr__(self) -> str:
        return f"OrientedSubspace({self.sub.basis}, o={self.orient})"


def _coords_matrix(rows, sub: Subspace):
    """Each row expressed against sub's RREF basis (rows must lie in sub)."""
    out = []
    for r in rows:
        c = sub.coords(r)
        if c is None:
            raise ValueError("row does not lie in the subspace")
        out.append(c)
    return tuple(out)


# ----------------------------------------------------------- enumeration

def all_subspaces(space: SymplecticSpace, k: int):
    """All k-dimensional subspaces, in RREF-lexicographic order."""
    p, dim = space.p, space.dim
    _guard(p ** dim, "subspace enumeration")
    found = []
    for pivots in combinations(range(dim), k):
        free = [(i, j) for i in range(k) for j in range(dim)
                if j > pivots[i] and j not in pivots]
        for values in product(range(p), repeat=len(free)):
            rows = [[0] * dim for _ in range(k)]
            for i in range(k):
                rows[i][pivots[i]] = 1
            for (i, j), v in zip(free, values):
                rows[i][j] = v
            found.append(Subspace(space, tuple(tuple(r) for r in rows), pivots))
    found.sort(key=lambda s: s.basis)
    return found


def lagrangian_subspaces(space: SymplecticSpace):
    return [s for s in all_subspaces(space, space.n) if s.is_isotropic()]


def oriented_lagrangians(space: SymplecticSpace):
    return [OrientedSubspace(sub, o)
            for sub in lagrangian_subspaces(space)
            for o in range(1, space.p)]


def isotropic_subspaces(space: SymplecticSpace, k: int):
    return [s for s in all_subspaces(space, k) if s.is_isotropic()]


def in_general_position(a, b) -> bool:
    """True iff the two subspaces sum to the whole space."""
    sa = a.sub if isinstance(a, OrientedSubspace) else a
    sb = b.sub if isinstance(b, OrientedSubspace) else b
    return sa.add(sb).dim == sa.space.dim


# ------------------------------------------------------- wedge pairings

def pairing_det(rows_a, rows_b, space: SymplecticSpace) -> int:
    """det[omega(a_i, b_j)]; the empty determinant is 1."""
    k = len(rows_a)
    if len(rows_b) != k:
        raise ValueError("wedge pairing needs equal dimensions")
    if k == 0:
        return 1
    m = tuple(tuple(space.omega(u, v) for v in rows_b) for u in rows_a)
    return linalg.det(m, space.p)


def wedge_pairing(a: OrientedSubspace, b: OrientedSubspace) -> int:
    """Pairing of top wedges induced by the form: both orientation scalars
    times the determinant of the basis pairing matrix."""
    space = a.space
    return (a.orient * b.orient
            * pairing_det(a.sub.basis, b.sub.basis, space)) % space.p


class QuotientOrientation:
    """Top wedge of a quotient, held as lift vectors plus a scalar."""

    def __init__(self, lifts, scalar: int) -> None:
        self.lifts = tuple(tuple(v) for v in lifts)
        self.scalar = scalar

    def rescaled(self, factor: int, p: int) -> QuotientOrientation:
        return QuotientOrientation(self.lifts, (self.scalar * factor) % p)


def wedge_pairing_quotient(a: QuotientOrientation, b: QuotientOrientation,
                           space: SymplecticSpace) -> int:
    return (a.scalar * b.scalar
            * pairing_det(a.lifts, b.lifts, space)) % space.p


def orientation_decompose(m: OrientedSubspace, i: Subspace):
    """Split the orientation of m across i and m/i.

    Returns (iota, quotient orientation).  Gauge: the quotient wedge is the
    unscaled wedge of the RREF completion rows, with the whole
    change-of-basis scalar pushed into iota; for i = 0 the quotient carries
    the original orientation and iota is 1.  Any other gauge differs by
    t x 1/t, which is invisible inside the quadratic character.
    """
    sub = m.sub
    if not sub.contains_subspace(i):
        raise ValueError("orientation_decompose requires i contained in m")
    p = m.space.p
    if i.dim == 0:
        return 1, QuotientOrientation(sub.basis, m.orient)
    completion = tuple(row for row, c in zip(sub.basis, sub.pivots)
                       if c not in i.pivots)
    stacked = i.basis + completion
    change = _coords_matrix(stacked, sub)
    d = linalg.det(change, p)
    iota = (m.orient * pow(d, -1, p)) % p
    return iota, QuotientOrientation(completion, 1)


# -------------------------------------------------------- residue maps

class ResidueMap:
    """The map m -> s with s in target, m - s in modulus; defined whenever
    target + modulus is the whole space.  Its kernel is source n modulus."""

    def __init__(self, source: Subspace, modulus: Subspace, target: Subspace) -> None:
        space = source.space
        if not in_general_position(target, modulus):
            raise ValueError("residue map needs target + modulus = V")
        p = space.p
        cols = tuple(zip(*(target.basis + modulus.basis)))
        images = []
        for row in source.basis:
            coeffs = linalg.solve(cols, row, p)
            v = [0] * space.dim
            for c, t in zip(coeffs[: target.dim], target.basis):
                v = [(x + c * y) % p for x, y in zip(v, t)]
            images.append(tuple(v))
        self.source = source
        self.target = target
        self.modulus = modulus
        self.images = tuple(images)

    def apply(self, v):
        coeffs = self.source.coords(v)
        if coeffs is None:
            raise ValueError("vector not in the source subspace")
        p = self.source.space.p
        out = [0] * self.source.space.dim
        for c, img in zip(coeffs, self.images):
            out = [(x + c * y) % p for x, y in zip(out, img)]
        return tuple(out)


def residue_map(m: Subspace, l: Subspace, n: Subspace) -> ResidueMap:
    return ResidueMap(m, l, n)


# -------------------------------------------------------- discriminants

def discriminant(form, p: int) -> int:
    """Class of a nondegenerate symmetric form in {+1, -1}: the Legendre
    character of its determinant."""
    d = linalg.det(tuple(tuple(x % p for x in row) for row in form), p)
    if d == 0:
        raise ValueError("degenerate symmetric form")
    return legendre(d, p)


def diagonalize_symmetric(form, p: int):
    """Congruence diagonalization; returns the diagonal entries.

    Independent route to the discriminant: the product of the diagonal
    lies in the same square class as the determinant.
    """
    a = [list(x % p for x in row) for row in form]
    k = len(a)
    diag = []
    for s in range(k):
        if a[s][s] == 0:
            swap = next((i for i in range(s + 1, k) if a[i][i]), None)
            if swap is not None:
                a[s], a[swap] = a[swap], a[s]
                for row in a:
                    row[s], row[swap] = row[swap], row[s]
            else:
                j = next((j for j in range(s + 1, k) if a[s][j]), None)
                if j is None:
                    raise ValueError("degenerate symmetric form")
                # v_s += v_j makes the diagonal entry 2*a[s][j] != 0
                for i in range(k):
                    a[i][s] = (a[i][s] + a[i][j]) % p
                a[s] = [(x + y) % p for x, y in zip(a[s], a[j])]
        pivot = a[s][s]
        inv = pow(pivot, -1, p)
        for i in range(s + 1, k):
            f = (a[i][s] * inv) % p
            if f:
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[s])]
                for r in range(k):
                    a[r][i] = (a[r][i] - f * a[r][s]) % p
        diag.append(pivot)
    return diag


# -------------------------------------------------- the symplectic group

class SpElement:
    """A linear map preserving the form, as a matrix acting on columns."""

    def __init__(self, space: SymplecticSpace, mat) -> None:
        p = space.p
        mat = tuple(tuple(x % p for x in row) for row in mat)
        gm = linalg.mat_mul(linalg.mat_mul(linalg.transpose(mat), space.gram, p),
                            mat, p)
        if gm != space.gram:
            raise ValueError("matrix does not preserve the symplectic form")
        self.space = space
        self.mat = mat

    @classmethod
    def identity(cls, space: SymplecticSpace) -> SpElement:
        return cls(space, linalg.identity(space.dim))

    @classmethod
    def transvection(cls, space: SymplecticSpace, u, a: int = 1) -> SpElement:
        """v -> v + a*omega(v, u)*u."""
        p, dim = space.p, space.dim
        basis = linalg.identity(dim)
        cols = []
        for j in range(dim):
            w = space.omega(basis[j], u)
            cols.append(tuple((basis[j][i] + a * w * u[i]) % p for i in range(dim)))
        mat = tuple(tuple(cols[j][i] for j in range(dim)) for i in range(dim))
        return cls(space, mat)

    def __mul__(self, other: SpElement) -> SpElement:
        return SpElement(self.space, linalg.mat_mul(self.mat, other.mat, self.space.p))

    def inverse(self) -> SpElement:
        return SpElement(self.space, linalg.inverse(self.mat, self.space.p))

    def act_vec(self, v):
        return linalg.mat_vec(self.mat, v, self.space.p)

    def act_lagrangian(self, l: OrientedSubspace) -> OrientedSubspace:
        """Image subspace with the orientation pushed forward: the wedge of
        the image rows, re-expressed against the target RREF wedge."""
        images = [self.act_vec(row) for row in l.sub.basis]
        image_sub = Subspace.from_rows(self.space, images)
        change = _coords_matrix(images, image_sub)
        d = linalg.det(change, self.space.p)
        return OrientedSubspace(image_sub, l.orient * d)

    def key(self):
        return self.mat

    def __eq__(self, other) -> bool:
        return isinstance(other, SpElement) and self.mat == other.mat \
            and self.space.key() == other.space.key()

    def __hash__(self):
        return hash((self.space.key(), self.mat))

    def __repr__(self) -> str:
        return f"SpElement({self.mat})"


class SymplecticIso:
    """A linear isomorphism between two spaces carrying form to form."""

    def __init__(self, src: SymplecticSpace, dst: SymplecticSpace, mat) -> None:
        if src.p != dst.p or src.dim != dst.dim:
            raise ValueError("spaces are not isomorphic as listed")
        p = src.p
        mat = tuple(tuple(x % p for x in row) for row in mat)
        gm = linalg.mat_mul(linalg.mat_mul(linalg.transpose(mat), dst.gram, p),
                            mat, p)
        if gm != src.gram:
            raise ValueError("matrix does not carry the source form to the target")
        self.src = src
        self.dst = dst
        self.mat = mat

    @classmethod
    def from_element(cls, g: SpElement) -> SymplecticIso:
        return cls(g.space, g.space, g.mat)

    def act_vec(self, v):
        return linalg.mat_vec(self.mat, v, self.src.p)

    def compose(self, other: SymplecticIso) -> SymplecticIso:
        """self after other."""
        if other.dst.key() != self.src.key():
            raise ValueError("isomorphisms do not chain")
        return SymplecticIso(other.src, self.dst,
                             linalg.mat_mul(self.mat, other.mat, self.src.p))

    def inverse(self) -> SymplecticIso:
        return SymplecticIso(self.dst, self.src,
                             linalg.inverse(self.mat, self.src.p))

    def map_lagrangian(self, l: OrientedSubspace) -> OrientedSubspace:
        images = [self.act_vec(row) for row in l.sub.basis]
        image_sub = Subspace.from_rows(self.dst, images)
        change = _coords_matrix(images, image_sub)
        d = linalg.det(change, self.dst.p)
        return OrientedSubspace(image_sub, l.orient * d)


def sp_enumerate(space: SymplecticSpace):
    """All of Sp(V) for dim V = 2 (that is SL_2); refused in higher rank."""
    if space.dim != 2:
        raise ScaleLimitError("full symplectic group enumeration only for dim 2")
    p = space.p
    _guard(p ** 4, "SL2 enumeration")
    out = []
    for a, b, c, d in product(range(p), repeat=4):
        if (a * d - b * c) % p == 1:
            out.append(SpElement(space, ((a, b), (c, d))))
    return out


def sp_sample(space: SymplecticSpace, count: int, rng, word_length: int = 20):
    """Seeded random elements as words in symplectic transvections."""
    p, dim = space.p, space.dim
    out = []
    for _ in range(count):
        g = SpElement.identity(space)
        for _ in range(word_length):
            u = tuple(rng.randrange(p) for _ in range(dim))
            if not any(u):
                continue
            g = g * SpElement.transvection(space, u, rng.randrange(1, p))
        out.append(g)
    return out


# ---------------------------------------------------- symplectic reduction

class Reduction:
    """The reduced space perp(I)/I for an oriented isotropic I, with the
    projection/section pair and the transfer of oriented Lagrangians."""

    def __init__(self, space: SymplecticSpace, iso: OrientedSubspace) -> None:
        if not iso.sub.is_isotropic():
            raise ValueError("reduction requires an isotropic subspace")
        p = space.p
        rows = tuple(linalg.mat_vec(space.gram, u, p) for u in iso.sub.basis)
        if rows:
            perp = Subspace.from_rows(space, linalg.nullspace(rows, p))
        else:
            perp = Subspace.full(space)
        section = tuple(row for row, c in zip(perp.basis, perp.pivots)
                        if c not in iso.sub.pivots)
        gram = tuple(tuple(space.omega(u, v) for v in section) for u in section)
        self.space = space
        self.iso = iso
        self.perp = perp
        self.section = section
        self.reduced = SymplecticSpace(p, space.n - iso.sub.dim, gram)

    def project(self, v):
        """Quotient coordinates of v in perp(I)."""
        p = self.space.p
        stacked = self.iso.sub.basis + self.section
        coeffs = linalg.solve(tuple(zip(*stacked)), tuple(v), p)
        if coeffs is None:
            raise ValueError("vector is not in perp(I)")
        return tuple(coeffs[self.iso.sub.dim:])

    def lift(self, c):
        p = self.space.p
        v = [0] * self.space.dim
        for x, row in zip(c, self.section):
            v = [(a + x * b) % p for a, b in zip(v, row)]
        return tuple(v)

    def lift_lagrangian(self, l: OrientedSubspace) -> OrientedSubspace:
        """Preimage of a reduced oriented Lagrangian: pr^{-1}(L) oriented by
        o_I wedge (lift of o_L)."""
        p = self.space.p
        lifted = [self.lift(row) for row in l.sub.basis]
        pre = Subspace.from_rows(self.space, self.iso.sub.basis + tuple(lifted))
        change = _coords_matrix(self.iso.sub.basis + tuple(lifted), pre)
        d = linalg.det(change, p)
        return OrientedSubspace(pre, self.iso.orient * l.orient * d)

    def induced_element(self, g: SpElement) -> SpElement:
        """The element of Sp(perp(I)/I) induced by g; g must preserve I."""
        for u in self.iso.sub.basis:
            if not self.iso.sub.contains(g.act_vec(u)):
                raise ValueError("element does not preserve the isotropic subspace")
        cols = [self.project(g.act_vec(w)) for w in self.section]
        k = len(cols)
        mat = tuple(tuple(cols[j][i] for j in range(k)) for i in range(k))
        return SpElement(self.reduced, mat)


def symplectic_reduction(space: SymplecticSpace, iso: OrientedSubspace) -> Reduction:
    return Reduction(space, iso)


# --------------------------------------------------------- text literals

def parse_subspace(space: SymplecticSpace, text: str) -> OrientedSubspace:
    """Parse 'rows=1,0;0,1|o=2'; orientation defaults to 1 and is taken
    against the wedge of the listed rows."""
    body = text.strip()
    orient = 1
    if "|" in body:
        body, otext = body.split("|", 1)
        if not otext.startswith("o="):
            raise ValueError(f"bad orientation field in {text!r}")
        orient = int(otext[2:])
    if not body.startswith("rows="):
        raise ValueError(f"subspace literal must start with 'rows=': {text!r}")
    rows = []
    for chunk in body[5:].split(";"):
        row = tuple(int(x) % space.p for x in chunk.split(","))
        if len(row) != space.dim:
            raise ValueError(f"row length {len(row)} != dim {space.dim}")
        rows.append(row)
    return OrientedSubspace.from_rows(space, rows, orient)


def format_subspace(l: OrientedSubspace) -> str:
    rows = ";".join(",".join(str(x) for x in row) for row in l.sub.basis)
    return f"rows={rows}|o={l.orient}"
