"""The Heisenberg group H(V) = V x F_p and its models indexed by
oriented Lagrangians.

A model vector is stored by its values on the coset representatives of
(Z.L)\\H(V); the representatives are the pairs (v, 0) with v running over
the canonical transversal of V/L, so every evaluation reduces to one
group-law decomposition plus a character twist.
"""

from __future__ import annotations

from .cyclotomic import CycNum, psi
from .symplectic import (OrientedSubspace, ScaleLimitError, SymplecticSpace,
                         Subspace, max_cells, quotient_reps)


class HeisElement:
    """(v, z) with the product twisted by half the symplectic pairing."""

    __slots__ = ("space", "v", "z")

    def __init__(self, space: SymplecticSpace, v, z: int) -> None:
        self.space = space
        self.v = tuple(x % space.p for x in v)
        self.z = z % space.p

    @classmethod
    def identity(cls, space: SymplecticSpace) -> HeisElement:
        return cls(space, (0,) * space.dim, 0)

    def __mul__(self, other: HeisElement) -> HeisElement:
        space = self.space
        if other.space.key() != space.key():
            raise ValueError("mixed ambient spaces")
        z = self.z + other.z + space.half * space.omega(self.v, other.v)
        return HeisElement(space, tuple(a + b for a, b in zip(self.v, other.v)), z)

    def inverse(self) -> HeisElement:
        return HeisElement(self.space, tuple(-a for a in self.v), -self.z)

    def is_central(self) -> bool:
        return not any(self.v)

    def key(self):
        return (self.v, self.z)

    def __eq__(self, other) -> bool:
        return (isinstance(other, HeisElement) and self.v == other.v
                and self.z == other.z and self.space.key() == other.space.key())

    def __hash__(self):
        return hash((self.space.key(), self.v, self.z))

    def __repr__(self) -> str:
        return f"HeisElement(v={self.v}, z={self.z})"


def sp_act_heis(g, h: HeisElement) -> HeisElement:
    """The symplectic action on the vector coordinate; an automorphism."""
    return HeisElement(h.space, g.act_vec(h.v), h.z)


def parse_heis(space: SymplecticSpace, text: str) -> HeisElement:
    """Parse 'v=1,0|z=2'."""
    body = text.strip()
    if "|" not in body:
        raise ValueError(f"bad group element literal {text!r}")
    vpart, zpart = body.split("|", 1)
    if not vpart.startswith("v=") or not zpart.startswith("z="):
        raise ValueError(f"bad group element literal {text!r}")
    v = tuple(int(x) for x in vpart[2:].split(","))
    if len(v) != space.dim:
        raise ValueError(f"vector length {len(v)} != dim {space.dim}")
    return HeisElement(space, v, int(zpart[2:]))


def format_heis(h: HeisElement) -> str:
    return "v=" + ",".join(str(x) for x in h.v) + f"|z={h.z}"


def heis_elements(space: SymplecticSpace):
    """All p^(2n+1) group elements, lexicographically."""
    out = []
    for v in space.vectors():
        for z in range(space.p):
            out.append(HeisElement(space, v, z))
    return out


def heis_generators(space: SymplecticSpace):
    """The standard basis vectors plus a central generator."""
    gens = []
    for i in range(space.dim):
        e = tuple(1 if j == i else 0 for j in range(space.dim))
        gens.append(HeisElement(space, e, 0))
    gens.append(HeisElement(space, (0,) * space.dim, 1))
    return gens


class ModelSpace:
    """The model attached to an oriented Lagrangian: functions on H(V)
    equivariant under the center by the character and invariant under left
    translation by L.  The space itself ignores the orientation; the
    orientation only enters the intertwiner normalization."""

    def __init__(self, label: OrientedSubspace, char_exp: int = 1) -> None:
        sub = label.sub
        if not sub.is_lagrangian():
            raise ValueError("model labels must be Lagrangian")
        space = sub.space
        if char_exp % space.p == 0:
            raise ValueError("character exponent must be nonzero mod p")
        self.label = label
        self.space = space
        self.char_exp = char_exp % space.p
        self.reps = quotient_reps(Subspace.full(space), sub)
        self.rep_index = {v: i for i, v in enumerate(self.reps)}

    @property
    def dim(self) -> int:
        return len(self.reps)

    def psi_value(self, z: int) -> CycNum:
        return psi(self.char_exp * z, self.space.p)

    def decompose(self, h: HeisElement) -> tuple[int, int]:
        """h = (0, z').(l, 0).(rep, 0); returns (rep index, z')."""
        space = self.space
        r = self.label.sub.reduce_mod(h.v)
        zp = (h.z - space.half * space.omega(h.v, r)) % space.p
        return self.rep_index[r], zp

    def rep_element(self, i: int) -> HeisElement:
        return HeisElement(self.space, self.reps[i], 0)

    def key(self):
        return (self.space.key(), self.label.sub.basis, self.char_exp)

    def __eq__(self, other) -> bool:
        return isinstance(other, ModelSpace) and self.key() == other.key() \
            and self.label.orient == other.label.orient

    def __hash__(self):
        return hash((self.key(), self.label.orient))

    def __repr__(self) -> str:
        return f"ModelSpace({self.label!r}, chi^{self.char_exp})"


class ModelVector:
    """A vector in a model, stored by its values at the representatives."""

    __slots__ = ("model", "values")

    def __init__(self, model: ModelSpace, values) -> None:
        values = tuple(values)
        if len(values) != model.dim:
            raise ValueError("value vector has wrong length")
        self.model = model
        self.values = values

    def evaluate(self, h: HeisElement) -> CycNum:
        i, zp = self.model.decompose(h)
        return self.model.psi_value(zp) * self.values[i]

    def __add__(self, other: ModelVector) -> ModelVector:
        return ModelVector(self.model,
                           tuple(a + b for a, b in zip(self.values, other.values)))

    def scaled(self, c) -> ModelVector:
        return ModelVector(self.model, tuple(c * v for v in self.values))

    def __eq__(self, other) -> bool:
        return (isinstance(other, ModelVector)
                and self.model.key() == other.model.key()
                and self.values == other.values)

    def to_json(self) -> dict:
        return {
            "reps": [list(v) for v in self.model.reps],
            "values": [x.to_json() for x in self.values],
        }

    def __repr__(self) -> str:
        return f"ModelVector({self.values})"


def delta_vector(model: ModelSpace) -> ModelVector:
    """The function supported on Z.L, normalized to 1 at the identity."""
    p = model.space.p
    values = [CycNum.zero(p)] * model.dim
    values[model.rep_index[(0,) * model.space.dim]] = CycNum.from_rational(p, 1)
    return ModelVector(model, values)


def basis_vector(model: ModelSpace, i: int) -> ModelVector:
    p = model.space.p
    values = [CycNum.zero(p)] * model.dim
    values[i] = CycNum.from_rational(p, 1)
    return ModelVector(model, values)


def pi_monomial(model: ModelSpace, h: HeisElement):
    """Right translation by h as a row-monomial matrix: entry i is
    (column j, character exponent e) with new[i] = psi^e * old[j]."""
    out = []
    for i in range(model.dim):
        j, zp = model.decompose(model.rep_element(i) * h)
        out.append((j, (model.char_exp * zp) % model.space.p))
    return out


def pi_matrix(model: ModelSpace, h: HeisElement):
    p = model.space.p
    zero = CycNum.zero(p)
    mat = [[zero] * model.dim for _ in range(model.dim)]
    for i, (j, e) in enumerate(pi_monomial(model, h)):
        mat[i][j] = psi(e, p)
    return mat


def pi_act(model: ModelSpace, h: HeisElement, f: ModelVector) -> ModelVector:
    if f.model.key() != model.key():
        raise ValueError("vector does not belong to this model")
    p = model.space.p
    values = [None] * model.dim
    for i, (j, e) in enumerate(pi_monomial(model, h)):
        values[i] = psi(e, p) * f.values[j]
    return ModelVector(model, values)


class _PhaseUnionFind:
    """Union-find with a character-exponent potential on each node."""

    def __init__(self, size: int, p: int) -> None:
        self.parent = list(range(size))
        self.phase = [0] * size  # node value = psi^phase * root value
        self.dead = [False] * size
        self.p = p

    def find(self, x: int) -> tuple[int, int]:
        path = []
        while self.parent[x] != x:
            path.append(x)
            x = self.parent[x]
        acc = 0
        for node in reversed(path):
            acc = (acc + self.phase[node]) % self.p
            self.parent[node] = x
            self.phase[node] = acc
        return x, self.phase[path[0]] if path else 0

    def relate(self, a: int, b: int, e: int) -> None:
        """Impose value(a) = psi^e * value(b)."""
        ra, pa = self.find(a)
        rb, pb = self.find(b)
        if ra == rb:
            if (pa - pb - e) % self.p != 0:
                self.dead[ra] = True
            return
        # attach rb under ra: value(b) = psi^(pa - e - pb) * value(ra)
        self.parent[rb] = ra
        self.phase[rb] = (pa - e - pb) % self.p
        self.dead[ra] = self.dead[ra] or self.dead[rb]


def commutant_dimension(model: ModelSpace, elements=None) -> int:
    """Dimension of the space of matrices commuting with the whole action.

    Each group element acts by a monomial matrix, so the commutant
    equations only ever tie one matrix entry to another times a root of
    unity; the solution space is enumerated by consistent orbit classes.
    Restricting to a generating set leaves the solution space unchanged.
    """
    d = model.dim
    if d * d > max_cells():
        raise ScaleLimitError(f"commutant solve for dimension {d} refused")
    p = model.space.p
    if elements is None:
        elements = heis_generators(model.space)
    uf = _PhaseUnionFind(d * d, p)
    for h in elements:
        mono = pi_monomial(model, h)
        col = [None] * d
        exp = [0] * d
        for i, (j, e) in enumerate(mono):
            col[j] = i
            exp[j] = e
        # A[sigma(i), sigma(j)] = psi^(e_i - e_j) A[i, j] where row sigma(i)
        # of pi(h) hits column i with exponent e_i
        for i in range(d):
            for j in range(d):
                uf.relate(col[i] * d + col[j], i * d + j,
                          (exp[i] - exp[j]) % p)
    roots = set()
    for x in range(d * d):
        r, _ = uf.find(x)
        roots.add(r)
    return sum(1 for r in roots if not uf.dead[r])


def central_character_ok(model: ModelSpace) -> bool:
    """The center must act by the chosen character times the identity."""
    space = model.space
    p = space.p
    for z in range(p):
        h = HeisElement(space, (0,) * space.dim, z)
        for i, (j, e) in enumerate(pi_monomial(model, h)):
            if j != i or e != (model.char_exp * z) % p:
                return False
    return True
