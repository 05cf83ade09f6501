"""The canonical vector space attached to a symplectic space: horizontal
sections of the model bundle under the multiplicative transport, the Weil
representation acting on it, the total idempotent on the ambient section
space, and the product / duality / reduction compatibilities.

A canonical vector is stored by one component only (at a fixed base
Lagrangian); every other component is generated on demand through the
transport, which multiplicativity keeps consistent.
"""

from __future__ import annotations

from . import linalg
from .cyclotomic import CycNum
from .heisenberg import (HeisElement, ModelSpace, ModelVector, basis_vector,
                         delta_vector, pi_matrix)
from .intertwine import Transport
from .symplectic import (OrientedSubspace, ScaleLimitError, SpElement,
                         Subspace, SymplecticIso, SymplecticSpace, max_cells,
                         oriented_lagrangians, symplectic_reduction)


def default_base(space: SymplecticSpace) -> OrientedSubspace:
    """span{e_1..e_n} with unit orientation when that is Lagrangian (it is
    for the standard form); otherwise the first enumerated candidate."""
    rows = [tuple(1 if j == i else 0 for j in range(space.dim))
            for i in range(space.n)]
    sub = Subspace.from_rows(space, rows)
    if sub.is_lagrangian():
        return OrientedSubspace(sub, 1)
    return oriented_lagrangians(space)[0]


class CanonicalSpace:
    """The space of horizontal sections, handled through one base point."""

    def __init__(self, space: SymplecticSpace, char_exp: int = 1,
                 base: OrientedSubspace | None = None) -> None:
        self.space = space
        self.char_exp = char_exp % space.p
        self.transport = Transport(space, char_exp)
        self.base = base if base is not None else default_base(space)
        self.base_model = self.transport.model(self.base)

    @property
    def dim(self) -> int:
        return self.base_model.dim

    def vector(self, values) -> CanonicalVector:
        return CanonicalVector(self, ModelVector(self.base_model, values))

    def basis_vectors(self):
        return [self.vector(basis_vector(self.base_model, i).values)
                for i in range(self.dim)]

    def delta(self) -> CanonicalVector:
        return CanonicalVector(self, delta_vector(self.base_model))


class CanonicalVector:
    """One horizontal section, stored by its component at the base."""

    def __init__(self, holder: CanonicalSpace, value_at_base: ModelVector) -> None:
        if value_at_base.model.key() != holder.base_model.key():
            raise ValueError("value vector does not live at the base model")
        self.holder = holder
        self.value_at_base = value_at_base

    def component(self, label: OrientedSubspace) -> ModelVector:
        op = self.holder.transport.operator(label, self.holder.base)
        return op.apply(self.value_at_base)

    def heis_act(self, h: HeisElement) -> CanonicalVector:
        from .heisenberg import pi_act
        return CanonicalVector(
            self.holder, pi_act(self.holder.base_model, h, self.value_at_base))

    def __eq__(self, other) -> bool:
        return (isinstance(other, CanonicalVector)
                and self.holder is other.holder
                and self.value_at_base == other.value_at_base)


# ----------------------------------------------------------- pullbacks

def pullback(f: SymplecticIso, label: OrientedSubspace,
             u: ModelVector) -> ModelVector:
    """Pull a model vector on the target space back along f: the result at
    h is the value of u at f(h); lands in the model at label."""
    dst_model = ModelSpace(label, u.model.char_exp)
    values = [u.evaluate(HeisElement(f.dst, f.act_vec(dst_model.reps[i]), 0))
              for i in range(dst_model.dim)]
    return ModelVector(dst_model, values)


def pullback_matrix(f: SymplecticIso, src_model: ModelSpace,
                    dst_model: ModelSpace):
    """Matrix of the pullback along f from a model on f's target space to a
    model on f's source space; each row is a single character value."""
    p = dst_model.space.p
    zero = CycNum.zero(p)
    mat = [[zero] * src_model.dim for _ in range(dst_model.dim)]
    for i in range(dst_model.dim):
        image = HeisElement(f.dst, f.act_vec(dst_model.reps[i]), 0)
        j, zp = src_model.decompose(image)
        mat[i][j] = src_model.psi_value(zp)
    return mat


def quantization_matrix(f: SymplecticIso, src_can: CanonicalSpace,
                        dst_can: CanonicalSpace):
    """The matrix of the contravariant functor on a morphism f, from the
    base model of the source-of-sections space (over f's target) to the
    base model over f's source space."""
    if src_can.space.key() != f.dst.key() or dst_can.space.key() != f.src.key():
        raise ValueError("canonical spaces do not match the morphism")
    moved = f.map_lagrangian(dst_can.base)
    transport_mat = src_can.transport.operator(moved, src_can.base).mat
    pull = pullback_matrix(f, src_can.transport.model(moved), dst_can.base_model)
    return linalg.cyc_mat_mul(pull, transport_mat)


class WeilRepresentation:
    """The linear action of Sp(V) on the canonical space: pull back along
    g^{-1} and transport home; a genuine homomorphism, no projective
    multiplier."""

    def __init__(self, holder: CanonicalSpace) -> None:
        self.holder = holder
        self._cache: dict = {}

    def matrix(self, g: SpElement):
        found = self._cache.get(g.mat)
        if found is None:
            iso = SymplecticIso.from_element(g.inverse())
            found = quantization_matrix(iso, self.holder, self.holder)
            self._cache[g.mat] = found
        return found


def weil_rep(holder: CanonicalSpace, g: SpElement):
    return WeilRepresentation(holder).matrix(g)


# ----------------------------------------------------- total idempotent

def gamma_dimension(space: SymplecticSpace) -> int:
    labels = oriented_lagrangians(space)
    return len(labels) * ModelSpace(labels[0]).dim


def _guard_gamma(space: SymplecticSpace) -> None:
    d = gamma_dimension(space)
    if d * d > max_cells() * 10:
        raise ScaleLimitError(f"section space of dimension {d} refused")


def total_idempotent(transport: Transport):
    """Block matrix on the full section space: block (M, L) is the
    canonical operator scaled by 1/#OLag.  Exactly idempotent, with image
    of dimension p^n."""
    space = transport.space
    _guard_gamma(space)
    labels = oriented_lagrangians(space)
    count = len(labels)
    p = space.p
    scale = CycNum.from_rational(p, 1) / CycNum.from_rational(p, count)
    d = transport.model(labels[0]).dim
    total = linalg.cyc_zero_matrix(p, count * d, count * d)
    for bi, m in enumerate(labels):
        for bj, l in enumerate(labels):
            block = transport.operator(m, l).mat
            for i in range(d):
                row = total[bi * d + i]
                for j in range(d):
                    row[bj * d + j] = scale * block[i][j]
    return total


def gamma_action(transport: Transport, g: SpElement):
    """The geometric action of g on the section space: the component at L
    of the image section is the pullback along g^{-1} of the component at
    g^{-1}L."""
    space = transport.space
    _guard_gamma(space)
    labels = oriented_lagrangians(space)
    index = {lab.key(): i for i, lab in enumerate(labels)}
    iso = SymplecticIso.from_element(g.inverse())
    p = space.p
    d = transport.model(labels[0]).dim
    total = linalg.cyc_zero_matrix(p, len(labels) * d, len(labels) * d)
    for bi, l in enumerate(labels):
        moved = iso.map_lagrangian(l)
        bj = index[moved.key()]
        block = pullback_matrix(iso, transport.model(moved), transport.model(l))
        for i in range(d):
            row = total[bi * d + i]
            for j in range(d):
                row[bj * d + j] = block[i][j]
    return total


# ------------------------------------------------------ tensor product

class TensorStructure:
    """The product canonical space with its identification against the
    tensor product of the factors."""

    def __init__(self, c1: CanonicalSpace, c2: CanonicalSpace) -> None:
        if c1.char_exp != c2.char_exp:
            raise ValueError("factors must share the central character")
        self.c1 = c1
        self.c2 = c2
        self.product_space = c1.space.times(c2.space)
        base = self.pair_label(c1.base, c2.base)
        self.product = CanonicalSpace(self.product_space, c1.char_exp, base)

    def pair_label(self, l1: OrientedSubspace, l2: OrientedSubspace) -> OrientedSubspace:
        """L1 x L2 with the product orientation; the padded stacked rows
        are already in RREF, so the scalar is just the product."""
        d1, d2 = self.c1.space.dim, self.c2.space.dim
        rows = [row + (0,) * d2 for row in l1.sub.basis]
        rows += [(0,) * d1 + row for row in l2.sub.basis]
        sub = Subspace(self.product_space, tuple(rows),
                       l1.sub.pivots + tuple(c + d1 for c in l2.sub.pivots))
        return OrientedSubspace(sub, l1.orient * l2.orient)

    def pair_element(self, g1: SpElement, g2: SpElement) -> SpElement:
        d1, d2 = self.c1.space.dim, self.c2.space.dim
        mat = [[0] * (d1 + d2) for _ in range(d1 + d2)]
        for i in range(d1):
            for j in range(d1):
                mat[i][j] = g1.mat[i][j]
        for i in range(d2):
            for j in range(d2):
                mat[d1 + i][d1 + j] = g2.mat[i][j]
        return SpElement(self.product_space, mat)

    def alpha(self):
        """Matrix of the identification from the product base model to the
        tensor basis (row index i1 * dim2 + i2)."""
        m1, m2 = self.c1.base_model, self.c2.base_model
        prod_model = self.product.base_model
        p = self.product_space.p
        zero = CycNum.zero(p)
        rows = m1.dim * m2.dim
        mat = [[zero] * prod_model.dim for _ in range(rows)]
        for i1 in range(m1.dim):
            for i2 in range(m2.dim):
                v = m1.reps[i1] + m2.reps[i2]
                j, zp = prod_model.decompose(HeisElement(self.product_space, v, 0))
                mat[i1 * m2.dim + i2][j] = prod_model.psi_value(zp)
        return mat


# ------------------------------------------------------------- duality

class DualityStructure:
    """The negated-form space with the same character, the inverse-character
    models on the original space, and the pairing between the two section
    spaces."""

    def __init__(self, c: CanonicalSpace) -> None:
        self.primal = c
        space = c.space
        self.bar_space = space.negated()
        base_rows = c.base.sub.basis
        bar_base = OrientedSubspace(
            Subspace(self.bar_space, base_rows, c.base.sub.pivots), c.base.orient)
        self.dual = CanonicalSpace(self.bar_space, c.char_exp, bar_base)
        self.inverse_char = Transport(space, (-c.char_exp) % space.p)

    def mirror_label(self, label: OrientedSubspace) -> OrientedSubspace:
        """The same subspace data read inside the negated-form space."""
        return OrientedSubspace(
            Subspace(self.bar_space, label.sub.basis, label.sub.pivots),
            label.orient)

    def flip_matrix(self, label: OrientedSubspace):
        """Matrix of the central-sign pullback from the negated-space model
        to the inverse-character model at the same Lagrangian."""
        src = self.dual.transport.model(self.mirror_label(label))
        dst = self.inverse_char.model(label)
        p = self.primal.space.p
        zero = CycNum.zero(p)
        mat = [[zero] * src.dim for _ in range(dst.dim)]
        for i in range(dst.dim):
            # the flip (v, z) -> (v, -z) fixes the z = 0 representatives
            j, zp = src.decompose(HeisElement(self.bar_space, dst.reps[i], 0))
            mat[i][j] = src.psi_value(zp)
        return mat

    def pairing(self, a: CanonicalVector, b: CanonicalVector,
                label: OrientedSubspace | None = None) -> CycNum:
        """Sum over V/L of the product of component values; independent of
        the chosen Lagrangian."""
        if a.holder.space.key() != self.bar_space.key():
            raise ValueError("first argument must live over the negated space")
        if b.holder.space.key() != self.primal.space.key():
            raise ValueError("second argument must live over the original space")
        if label is None:
            label = self.primal.base
        av = a.component(self.mirror_label(label)).values
        bv = b.component(label).values
        acc = CycNum.zero(self.primal.space.p)
        for x, y in zip(av, bv):
            acc = acc + x * y
        return acc

    def gram_matrix(self):
        basis_a = self.dual.basis_vectors()
        basis_b = self.primal.basis_vectors()
        return [[self.pairing(a, b) for b in basis_b] for a in basis_a]


# ----------------------------------------------------------- reduction

def invariant_subspace(c: CanonicalSpace, iso_sub: Subspace):
    """Basis (list of base-model value vectors) of the vectors fixed by the
    Heisenberg action of the given isotropic subspace."""
    model = c.base_model
    p = c.space.p
    d = model.dim
    stacked = []
    for u in iso_sub.basis:
        mat = pi_matrix(model, HeisElement(c.space, u, 0))
        one = CycNum.from_rational(p, 1)
        for i in range(d):
            row = list(mat[i])
            row[i] = row[i] - one
            stacked.append(row)
    if not stacked:
        return [basis_vector(model, i).values for i in range(d)]
    return [tuple(v) for v in linalg.cyc_nullspace(stacked)]


class CanonicalReduction:
    """The identification of the invariant vectors with the canonical space
    of the reduced symplectic quotient."""

    def __init__(self, c: CanonicalSpace, iso: OrientedSubspace) -> None:
        self.ambient = c
        self.geometry = symplectic_reduction(c.space, iso)
        self.reduced = CanonicalSpace(self.geometry.reduced, c.char_exp)
        self.lifted_base = self.geometry.lift_lagrangian(self.reduced.base)

    def restriction_matrix(self):
        """Rows: reduced-base representatives; columns: entries of the
        component at the lifted base Lagrangian."""
        src = self.ambient.transport.model(self.lifted_base)
        dst = self.reduced.base_model
        p = self.ambient.space.p
        zero = CycNum.zero(p)
        mat = [[zero] * src.dim for _ in range(dst.dim)]
        for i in range(dst.dim):
            v = self.geometry.lift(dst.reps[i])
            j, zp = src.decompose(HeisElement(self.ambient.space, v, 0))
            mat[i][j] = src.psi_value(zp)
        return mat

    def alpha_matrix(self):
        """From base-model values of an invariant vector to the reduced
        base-model values: transport to the lifted base, then restrict."""
        transport_mat = self.ambient.transport.operator(
            self.lifted_base, self.ambient.base).mat
        return linalg.cyc_mat_mul(self.restriction_matrix(), transport_mat)

    def apply(self, v: CanonicalVector) -> CanonicalVector:
        if v.holder is not self.ambient and \
                v.holder.space.key() != self.ambient.space.key():
            raise ValueError("vector does not live in the ambient canonical space")
        for u in self.geometry.iso.sub.basis:
            moved = v.heis_act(HeisElement(self.ambient.space, u, 0))
            if moved.value_at_base != v.value_at_base:
                raise ValueError("vector is not invariant under the subspace")
        values = linalg.cyc_mat_vec(self.alpha_matrix(), v.value_at_base.values)
        return self.reduced.vector(values)

    def invariant_basis(self):
        return invariant_subspace(self.ambient, self.geometry.iso.sub)


def distinguished_vector(c: CanonicalSpace, label: OrientedSubspace) -> CanonicalVector:
    """The canonical vector whose component at the given Lagrangian is the
    delta vector: the image of 1 under the reduction to a point."""
    back = c.transport.operator(c.base, label)
    model = c.transport.model(label)
    return CanonicalVector(c, back.apply(delta_vector(model)))
