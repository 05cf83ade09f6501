"""Canonical intertwining operators between Heisenberg models, and the
kernel calculus that presents them.

The transverse ansatz is a Gauss-sum normalization times the averaging
operator; the closed form for an arbitrary pair averages over M/(M n L)
and rescales by the orientation data of the intersection.  Chaining
through a transverse middle gives an independent construction; the two
must agree exactly, and the whole system must be multiplicative.

The top-wedge pairing is realized as the plain determinant of the basis
pairing matrix (see symplectic.wedge_pairing); with that realization the
binomial sign that would accompany a reversed-order pairing is always a
square and is omitted, which is what exact multiplicativity forces once
the quotients are two dimensional.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .cyclotomic import CycNum, gauss_sum, legendre
from .heisenberg import HeisElement, ModelSpace, ModelVector, delta_vector
from .symplectic import (OrientedSubspace, SymplecticSpace,
                         in_general_position, oriented_lagrangians,
                         orientation_decompose, pairing_det, quotient_reps,
                         residue_map, wedge_pairing_quotient)


class Intertwiner:
    """A matrix from the source model to the target model, in the
    representative bases."""

    def __init__(self, source: ModelSpace, target: ModelSpace, mat) -> None:
        self.source = source
        self.target = target
        self.mat = [list(row) for row in mat]

    def apply(self, f: ModelVector) -> ModelVector:
        if f.model.key() != self.source.key():
            raise ValueError("vector does not live in the source model")
        return ModelVector(self.target, linalg.cyc_mat_vec(self.mat, f.values))

    def compose(self, other: Intertwiner) -> Intertwiner:
        if other.target.key() != self.source.key():
            raise ValueError("models do not chain")
        return Intertwiner(other.source, self.target,
                           linalg.cyc_mat_mul(self.mat, other.mat))

    def scaled(self, c: CycNum) -> Intertwiner:
        return Intertwiner(self.source, self.target,
                           linalg.cyc_mat_scale(c, self.mat))

    def intertwines(self, h: HeisElement) -> bool:
        from .heisenberg import pi_matrix
        lhs = linalg.cyc_mat_mul(self.mat, pi_matrix(self.source, h))
        rhs = linalg.cyc_mat_mul(pi_matrix(self.target, h), self.mat)
        return linalg.cyc_mat_eq(lhs, rhs)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Intertwiner)
                and self.source.key() == other.source.key()
                and self.target.key() == other.target.key()
                and linalg.cyc_mat_eq(self.mat, other.mat))

    def __repr__(self) -> str:
        return f"Intertwiner({self.target.label!r} <- {self.source.label!r})"


def averaging(target: ModelSpace, source: ModelSpace) -> Intertwiner:
    """Sum of left translates over M/(M n L).

    The sum is independent of the chosen lifts because moving a lift by
    the intersection only multiplies the summand by a trivial character
    value (the intersection sits inside both Lagrangians).
    """
    space = source.space
    p = space.p
    inter = target.label.sub.intersect(source.label.sub)
    lifts = quotient_reps(target.label.sub, inter)
    zero = CycNum.zero(p)
    mat = [[zero] * source.dim for _ in range(target.dim)]
    for i in range(target.dim):
        ri = target.rep_element(i)
        for m in lifts:
            j, zp = source.decompose(HeisElement(space, m, 0) * ri)
            mat[i][j] = mat[i][j] + source.psi_value(zp)
    return Intertwiner(source, target, mat)


def normalization(target: OrientedSubspace, source: OrientedSubspace,
                  char_exp: int = 1) -> CycNum:
    """The exact scalar making the averaged operator multiplicative.

    For source L and target M with I = M n L this is
    (G1/q)^(n - dim I) * sigma((iota_L / iota_M) * wedge(L/I, M/I)),
    where G1 is the Gauss sum of the chosen character and sigma the
    quadratic character.  The sigma argument is never zero: the induced
    pairing between the two quotients is nondegenerate.
    """
    space = source.space
    p = space.p
    inter = target.sub.intersect(source.sub)
    n_i = space.n - inter.dim
    iota_l, q_l = orientation_decompose(source, inter)
    iota_m, q_m = orientation_decompose(target, inter)
    w = wedge_pairing_quotient(q_l, q_m, space)
    arg = (iota_l * pow(iota_m, -1, p) * w) % p
    if arg == 0:
        raise ValueError("degenerate quadratic-character argument")
    sign = legendre(arg, p)
    scale = CycNum.from_rational(p, Fraction(sign, p ** n_i))
    return scale * gauss_sum(p, char_exp) ** n_i


def canonical_intertwiner(target: ModelSpace, source: ModelSpace) -> Intertwiner:
    """Closed form of the canonical operator: normalization times averaging."""
    a = normalization(target.label, source.label, source.char_exp)
    return averaging(target, source).scaled(a)


def chained_intertwiner(target: ModelSpace, source: ModelSpace,
                        middle: OrientedSubspace | None = None) -> Intertwiner:
    """The canonical operator built by chaining through a Lagrangian
    transverse to both endpoints (the first one in enumeration order
    unless a middle is supplied); independent of the choice."""
    space = source.space
    if middle is None:
        middle = next(
            c for c in oriented_lagrangians(space)
            if in_general_position(c, source.label)
            and in_general_position(c, target.label))
    mid_model = ModelSpace(middle, source.char_exp)
    first = canonical_intertwiner(mid_model, source)
    second = canonical_intertwiner(target, mid_model)
    return second.compose(first)


def cocycle_direct(outer: ModelSpace, middle: ModelSpace,
                   source: ModelSpace) -> CycNum:
    """The proportionality scalar of two chained averagings against the
    direct one, read off at the identity on the delta vector."""
    step = averaging(middle, source).apply(delta_vector(source))
    return averaging(outer, middle).apply(step).evaluate(
        HeisElement.identity(source.space))


def cocycle_gauss_sum(outer: ModelSpace, middle: ModelSpace,
                      source: ModelSpace) -> CycNum:
    """The same scalar as a quadratic Gauss sum over the middle Lagrangian:
    sum of psi(omega(r(m), m)/2) with r the residue map through the source."""
    space = source.space
    total = CycNum.zero(space.p)
    r = residue_map(middle.label.sub, source.label.sub, outer.label.sub)
    for m in quotient_reps(middle.label.sub, middle.label.sub.intersect(
            source.label.sub)):
        # transverse triples make the quotient the whole middle Lagrangian
        val = (space.half * space.omega(r.apply(m), m)) % space.p
        total = total + middle.psi_value(val)
    return total


def cocycle_closed_form(outer: ModelSpace, middle: ModelSpace,
                        source: ModelSpace) -> CycNum:
    """Gauss-sum-power times quadratic character of the wedge pairing of
    the residue image wedge against the middle orientation."""
    space = source.space
    p = space.p
    r = residue_map(middle.label.sub, source.label.sub, outer.label.sub)
    w = pairing_det(r.images, middle.label.sub.basis, space)
    arg = (middle.label.orient * middle.label.orient * w) % p
    return gauss_sum(p, source.char_exp) ** space.n * legendre(arg, p)


def cocycle(outer: ModelSpace, middle: ModelSpace,
            source: ModelSpace) -> tuple[CycNum, CycNum]:
    """Both routes to the composition scalar; callers assert they agree."""
    if not (in_general_position(outer.label, middle.label)
            and in_general_position(middle.label, source.label)
            and in_general_position(outer.label, source.label)):
        raise ValueError("composition scalar needs a pairwise transverse triple")
    return cocycle_closed_form(outer, middle, source), \
        cocycle_direct(outer, middle, source)


class Transport:
    """Cache of models and canonical operators over one space and one
    central character."""

    def __init__(self, space: SymplecticSpace, char_exp: int = 1) -> None:
        self.space = space
        self.char_exp = char_exp % space.p
        self._models: dict = {}
        self._mats: dict = {}

    def model(self, label: OrientedSubspace) -> ModelSpace:
        key = (label.sub.basis, label.orient)
        found = self._models.get(key)
        if found is None:
            found = ModelSpace(label, self.char_exp)
            self._models[key] = found
        return found

    def operator(self, target: OrientedSubspace, source: OrientedSubspace,
                 method: str = "closed_form") -> Intertwiner:
        key = (target.sub.basis, target.orient,
               source.sub.basis, source.orient, method)
        found = self._mats.get(key)
        if found is None:
            if method == "closed_form":
                found = canonical_intertwiner(self.model(target), self.model(source))
            elif method == "chained":
                found = chained_intertwiner(self.model(target), self.model(source))
            else:
                raise ValueError(f"unknown method {method!r}")
            self._mats[key] = found
        return found


# ------------------------------------------------------------ kernels

class Kernel:
    """A two-sided invariant, character-equivariant function on all of
    H(V), presenting one intertwining operator through convolution."""

    def __init__(self, target: ModelSpace, source: ModelSpace, values: dict,
                 check: bool = True) -> None:
        self.target = target
        self.source = source
        self.space = source.space
        self.values = values
        if check:
            self._check_equivariance()

    def _check_equivariance(self) -> None:
        space = self.space
        p = space.p
        zero_v = (0,) * space.dim
        for (v, z), val in self.values.items():
            # central twist
            expect = self.source.psi_value(1) * self.values[(v, (z - 1) % p)]
            if val != expect:
                raise ValueError("kernel is not character-equivariant")
        for m in self.target.label.sub.basis:
            h_m = HeisElement(space, m, 0)
            for (v, z) in list(self.values):
                h = HeisElement(space, v, z)
                left = h_m * h
                if self.values[(left.v, left.z)] != self.values[(v, z)]:
                    raise ValueError("kernel is not left invariant")
        for l in self.source.label.sub.basis:
            h_l = HeisElement(space, l, 0)
            for (v, z) in list(self.values):
                h = HeisElement(space, v, z)
                right = h * h_l
                if self.values[(right.v, right.z)] != self.values[(v, z)]:
                    raise ValueError("kernel is not right invariant")
        if zero_v not in {v for (v, _) in self.values}:
            raise ValueError("kernel table is not dense")

    def value(self, h: HeisElement) -> CycNum:
        return self.values[(h.v, h.z)]


def _dense_table(space: SymplecticSpace, fn) -> dict:
    table = {}
    for v in space.vectors():
        for z in range(space.p):
            table[(v, z)] = fn(HeisElement(space, v, z))
    return table


def ansatz_kernel(target: ModelSpace, source: ModelSpace) -> Kernel:
    """The explicit kernel on a transverse pair: the normalization scalar
    spread over H(V) by the character read through the double-coset
    parametrization h = (m, 0).(0, z).(l, 0)."""
    if not in_general_position(target.label, source.label):
        raise ValueError("the explicit kernel needs a transverse pair")
    space = source.space
    a = normalization(target.label, source.label, source.char_exp)
    split = residue_map(target.label.sub.add(source.label.sub),
                        source.label.sub, target.label.sub)

    def entry(h: HeisElement) -> CycNum:
        # h = (m,0).(0,z').(l,0) uniquely; z' = z - omega(m, v)/2
        m = split.apply(h.v)
        zp = (h.z - space.half * space.omega(m, h.v)) % space.p
        return a * source.psi_value(zp)

    return Kernel(target, source, _dense_table(space, entry))


def kernel_of(op: Intertwiner) -> Kernel:
    """Invert the transform: the kernel is the target-model evaluation of
    the image of the source delta vector (the identity coset is always the
    first representative)."""
    image = op.apply(delta_vector(op.source))

    def entry(h: HeisElement) -> CycNum:
        return image.evaluate(h)

    return Kernel(op.target, op.source, _dense_table(op.source.space, entry))


def kernel_transform(kernel: Kernel, f: ModelVector) -> ModelVector:
    """The operator presented by a kernel: convolution against the model
    vector, summed once per descent orbit (the source representatives are
    an orbit transversal)."""
    if f.model.key() != kernel.source.key():
        raise ValueError("vector does not live in the kernel's source model")
    space = kernel.space
    source = kernel.source
    out = []
    for i in range(kernel.target.dim):
        h = kernel.target.rep_element(i)
        acc = CycNum.zero(space.p)
        for j in range(source.dim):
            r = source.rep_element(j)
            acc = acc + kernel.value(h * r.inverse()) * f.values[j]
        out.append(acc)
    return ModelVector(kernel.target, out)


def kernel_matrix(kernel: Kernel) -> Intertwiner:
    space = kernel.space
    source, target = kernel.source, kernel.target
    mat = []
    for i in range(target.dim):
        h = target.rep_element(i)
        mat.append([kernel.value(h * source.rep_element(j).inverse())
                    for j in range(source.dim)])
    return Intertwiner(source, target, mat)


def kernel_convolve(k1: Kernel, k2: Kernel) -> Kernel:
    """Convolution over the shared middle Lagrangian, summed once per
    descent orbit; the transform sends it to operator composition."""
    if k1.source.key() != k2.target.key():
        raise ValueError("kernels do not share the middle model")
    space = k1.space
    middle = k1.source

    def entry(h: HeisElement) -> CycNum:
        acc = CycNum.zero(space.p)
        for j in range(middle.dim):
            r = middle.rep_element(j)
            acc = acc + k1.value(h * r.inverse()) * k2.value(r)
        return acc

    return Kernel(k1.target, k2.source, _dense_table(space, entry))
