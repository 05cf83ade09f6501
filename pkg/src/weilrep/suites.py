"""Named verification suites: each one runs a family of exact identity
checks at desk scale and returns a machine-readable report with a witness
for every failure.

Sampled checks draw from a seeded generator, so a report is a pure
function of (suite, p, dim, seed, samples).
"""

from __future__ import annotations

import random

from . import linalg
from .canonical import (CanonicalReduction, CanonicalSpace, TensorStructure,
                        WeilRepresentation, distinguished_vector,
                        gamma_action, invariant_subspace, quantization_matrix,
                        total_idempotent)
from .cyclotomic import CycNum, gauss_sum, legendre
from .heisenberg import (ModelSpace, central_character_ok,
                         commutant_dimension, delta_vector, heis_elements,
                         heis_generators, pi_matrix, sp_act_heis)
from .intertwine import (Transport, ansatz_kernel, averaging,
                         chained_intertwiner, cocycle, cocycle_gauss_sum,
                         kernel_convolve, kernel_matrix, kernel_of,
                         normalization)
from .symplectic import (OrientedSubspace, SpElement, SymplecticIso,
                         SymplecticSpace, diagonalize_symmetric, discriminant,
                         format_subspace, in_general_position,
                         oriented_lagrangians, pairing_det, residue_map,
                         sp_enumerate, sp_sample, wedge_pairing)

SUITES = ("svn", "multiplicativity", "egorov", "homomorphism", "tensor",
          "duality", "reduction", "lemmas", "gauss", "kernels", "idempotent")


def _check(name: str, passed: bool, witness=None) -> dict:
    out = {"name": name, "passed": bool(passed)}
    if witness is not None and not passed:
        out["witness"] = witness
    return out


def _report(suite: str, p: int, dim: int, seed: int, checks: list) -> dict:
    failed = sum(1 for c in checks if not c["passed"])
    return {
        "kind": "verify-report",
        "suite": suite,
        "p": p,
        "dim": dim,
        "seed": seed,
        "checks": checks,
        "total": len(checks),
        "failed": failed,
        "passed": failed == 0,
    }


def _mat_json(mat) -> list:
    return [[x.to_json() for x in row] for row in mat]


def _triple_witness(n, m, l, lhs, rhs) -> dict:
    return {
        "outer": format_subspace(n),
        "middle": format_subspace(m),
        "inner": format_subspace(l),
        "lhs": _mat_json(lhs),
        "rhs": _mat_json(rhs),
    }


# --------------------------------------------------------------- gauss

def suite_gauss(p: int, dim: int, seed: int = 0, samples: int | None = None) -> dict:
    checks = []
    g1 = gauss_sum(p)
    for n in (1, 2, 3):
        lhs = g1 ** (2 * n)
        rhs = CycNum.from_rational(p, p ** n * legendre((-1) ** n, p))
        checks.append(_check(
            f"gauss-sum power identity n={n}", lhs == rhs,
            {"lhs": lhs.to_json(), "rhs": rhs.to_json()}))
    checks.append(_check("gauss sum is nonzero", not g1.is_zero()))
    return _report("gauss", p, dim, seed, checks)


# ----------------------------------------------------------------- svn

def suite_svn(p: int, dim: int, seed: int = 0, samples: int | None = None) -> dict:
    space = SymplecticSpace(p, dim // 2)
    checks = []
    seen = set()
    for label in oriented_lagrangians(space):
        if label.sub.basis in seen:
            continue
        seen.add(label.sub.basis)
        model = ModelSpace(label)
        d = commutant_dimension(model)
        checks.append(_check(
            f"commutant dimension 1 at {format_subspace(label)}", d == 1,
            {"dimension": d}))
        checks.append(_check(
            f"central character at {format_subspace(label)}",
            central_character_ok(model)))
    return _report("svn", p, dim, seed, checks)


# ------------------------------------------------------ multiplicativity

def _sample_triples(labels, rng, count):
    return [(rng.choice(labels), rng.choice(labels), rng.choice(labels))
            for _ in range(count)]


def suite_multiplicativity(p: int, dim: int, seed: int = 0,
                           samples: int | None = None) -> dict:
    space = SymplecticSpace(p, dim // 2)
    tr = Transport(space)
    labels = oriented_lagrangians(space)
    rng = random.Random(seed)
    checks = []
    exhaustive = (p == 3 and dim == 2)
    if exhaustive:
        triples = [(n, m, l) for n in labels for m in labels for l in labels]
    else:
        default = 500 if dim == 2 else 200
        triples = _sample_triples(labels, rng, samples or default)
    bad = 0
    witness = None
    for n, m, l in triples:
        lhs = tr.operator(n, m).compose(tr.operator(m, l))
        rhs = tr.operator(n, l)
        if not linalg.cyc_mat_eq(lhs.mat, rhs.mat):
            bad += 1
            if witness is None:
                witness = _triple_witness(n, m, l, lhs.mat, rhs.mat)
    checks.append(_check(
        f"transport multiplicative on {len(triples)} "
        f"{'exhaustive' if exhaustive else 'sampled'} triples",
        bad == 0, witness))
    # closed form against chained extension
    if exhaustive:
        pairs = [(m, l) for m in labels for l in labels]
    else:
        pairs = [(rng.choice(labels), rng.choice(labels)) for _ in range(40)]
    bad = 0
    witness = None
    for m, l in pairs:
        closed = tr.operator(m, l)
        chained = chained_intertwiner(tr.model(m), tr.model(l))
        if not linalg.cyc_mat_eq(closed.mat, chained.mat):
            bad += 1
            if witness is None:
                witness = _triple_witness(m, m, l, closed.mat, chained.mat)
    checks.append(_check(
        f"closed form equals chained extension on {len(pairs)} pairs",
        bad == 0, witness))
    if exhaustive:
        # independence of the transverse middle, every valid middle
        bad = 0
        for m, l in pairs:
            closed = tr.operator(m, l)
            for mid in labels:
                if not (in_general_position(mid, m) and in_general_position(mid, l)):
                    continue
                alt = chained_intertwiner(tr.model(m), tr.model(l), middle=mid)
                if not linalg.cyc_mat_eq(closed.mat, alt.mat):
                    bad += 1
        checks.append(_check("chaining independent of the middle", bad == 0))
        # identity on equal labels
        ok = all(linalg.cyc_mat_eq(tr.operator(l, l).mat,
                                   linalg.cyc_identity(p, tr.model(l).dim))
                 for l in labels)
        checks.append(_check("self-operator is the identity", ok))
        # orientation covariance: scaling o_L scales T by legendre(c)
        l0, m0 = labels[1], labels[4]
        for c in range(2, p):
            scaled = tr.operator(m0, l0.rescaled(c))
            expect = linalg.cyc_mat_scale(
                CycNum.from_rational(p, legendre(c, p)), tr.operator(m0, l0).mat)
            checks.append(_check(
                f"orientation covariance under scale {c}",
                linalg.cyc_mat_eq(scaled.mat, expect)))
    return _report("multiplicativity", p, dim, seed, checks)


# ---------------------------------------------------------- intertwining

def suite_kernels(p: int, dim: int, seed: int = 0,
                  samples: int | None = None) -> dict:
    space = SymplecticSpace(p, dim // 2)
    tr = Transport(space)
    labels = oriented_lagrangians(space)
    rng = random.Random(seed)
    checks = []
    exhaustive = (p == 3 and dim == 2)
    # intertwining property
    pairs = ([(m, l) for m in labels for l in labels] if exhaustive
             else [(rng.choice(labels), rng.choice(labels)) for _ in range(10)])
    elements = (heis_elements(space) if exhaustive
                else heis_generators(space))
    bad = 0
    for m, l in pairs:
        op = tr.operator(m, l)
        for h in elements:
            if not op.intertwines(h):
                bad += 1
    checks.append(_check(
        f"operators intertwine the actions ({len(pairs)} pairs x "
        f"{len(elements)} elements)", bad == 0))
    # explicit kernel matches the canonical operator on transverse pairs
    bad = 0
    count = 0
    for m in labels:
        for l in labels:
            if not in_general_position(m, l):
                continue
            count += 1
            kern = ansatz_kernel(tr.model(m), tr.model(l))
            if not linalg.cyc_mat_eq(kernel_matrix(kern).mat,
                                     tr.operator(m, l).mat):
                bad += 1
    checks.append(_check(
        f"explicit kernel equals canonical operator on {count} transverse pairs",
        bad == 0))
    # convolution realizes composition
    n_triples = samples or 50
    bad = 0
    for _ in range(n_triples):
        n, m, l = (rng.choice(labels) for _ in range(3))
        k1 = kernel_of(tr.operator(n, m))
        k2 = kernel_of(tr.operator(m, l))
        lhs = kernel_matrix(kernel_convolve(k1, k2))
        rhs = tr.operator(n, m).compose(tr.operator(m, l))
        if not linalg.cyc_mat_eq(lhs.mat, rhs.mat):
            bad += 1
    checks.append(_check(
        f"convolution maps to composition on {n_triples} sampled triples",
        bad == 0))
    # kernel of the self-operator
    l0 = labels[0]
    kern = kernel_of(tr.operator(l0, l0))
    ok = True
    from .cyclotomic import psi
    for v in space.vectors():
        for z in range(p):
            val = kern.values[(v, z)]
            if l0.sub.contains(v):
                ok = ok and val == psi(z, p)
            else:
                ok = ok and val.is_zero()
    checks.append(_check("self-kernel is the character on Z.L", ok))
    return _report("kernels", p, dim, seed, checks)


# --------------------------------------------------------------- egorov

def suite_egorov(p: int, dim: int, seed: int = 0,
                 samples: int | None = None) -> dict:
    space = SymplecticSpace(p, dim // 2)
    can = CanonicalSpace(space)
    rep = WeilRepresentation(can)
    rng = random.Random(seed)
    checks = []
    if dim == 2 and p == 3:
        group = sp_enumerate(space)
        elements = heis_elements(space)
    elif dim == 2:
        group = [rng.choice(sp_enumerate(space)) for _ in range(samples or 40)]
        elements = heis_generators(space)
    else:
        group = sp_sample(space, samples or 20, rng)
        elements = heis_generators(space)
    bad = 0
    witness = None
    for g in group:
        rho = rep.matrix(g)
        for h in elements:
            lhs = linalg.cyc_mat_mul(rho, pi_matrix(can.base_model, h))
            rhs = linalg.cyc_mat_mul(
                pi_matrix(can.base_model, sp_act_heis(g, h)), rho)
            if not linalg.cyc_mat_eq(lhs, rhs):
                bad += 1
                if witness is None:
                    witness = {"g": [list(r) for r in g.mat],
                               "h": {"v": list(h.v), "z": h.z},
                               "lhs": _mat_json(lhs), "rhs": _mat_json(rhs)}
    checks.append(_check(
        f"covariance relation on {len(group)} group elements x "
        f"{len(elements)} translations", bad == 0, witness))
    return _report("egorov", p, dim, seed, checks)


# --------------------------------------------------------- homomorphism

def suite_homomorphism(p: int, dim: int, seed: int = 0,
                       samples: int | None = None) -> dict:
    space = SymplecticSpace(p, dim // 2)
    can = CanonicalSpace(space)
    rep = WeilRepresentation(can)
    rng = random.Random(seed)
    checks = []
    if dim == 2 and p == 3:
        group = sp_enumerate(space)
        pairs = [(g1, g2) for g1 in group for g2 in group]
        label = "all pairs in the full group"
    elif dim == 2:
        group = sp_enumerate(space)
        pairs = [(rng.choice(group), rng.choice(group))
                 for _ in range(samples or 200)]
        label = f"{len(pairs)} sampled pairs"
    else:
        words = sp_sample(space, 2 * (samples or 100), rng)
        pairs = list(zip(words[::2], words[1::2]))
        label = f"{len(pairs)} sampled word pairs"
    bad = 0
    witness = None
    for g1, g2 in pairs:
        lhs = linalg.cyc_mat_mul(rep.matrix(g1), rep.matrix(g2))
        rhs = rep.matrix(g1 * g2)
        if not linalg.cyc_mat_eq(lhs, rhs):
            bad += 1
            if witness is None:
                witness = {"g1": [list(r) for r in g1.mat],
                           "g2": [list(r) for r in g2.mat],
                           "lhs": _mat_json(lhs), "rhs": _mat_json(rhs)}
    checks.append(_check(f"linear representation on {label}", bad == 0, witness))
    ident = linalg.cyc_mat_eq(rep.matrix(SpElement.identity(space)),
                              linalg.cyc_identity(p, can.dim))
    checks.append(_check("identity maps to the identity matrix", ident))
    return _report("homomorphism", p, dim, seed, checks)


# ----------------------------------------------------------- idempotent

def suite_idempotent(p: int, dim: int, seed: int = 0,
                     samples: int | None = None) -> dict:
    space = SymplecticSpace(p, dim // 2)
    tr = Transport(space)
    checks = []
    total = total_idempotent(tr)
    size = len(total)
    square = linalg.cyc_mat_mul(total, total)
    checks.append(_check("total operator is idempotent",
                         linalg.cyc_mat_eq(square, total)))
    rank = linalg.cyc_rank(total)
    checks.append(_check(
        f"rank equals model dimension ({rank} of {size})",
        rank == p ** (dim // 2), {"rank": rank}))
    comp = linalg.cyc_mat_sub(linalg.cyc_identity(p, size), total)
    checks.append(_check(
        "complementary operator is idempotent",
        linalg.cyc_mat_eq(linalg.cyc_mat_mul(comp, comp), comp)))
    checks.append(_check(
        f"complementary rank ({size - rank})",
        linalg.cyc_rank(comp) == size - rank))
    if dim == 2:
        group = sp_enumerate(space)
    else:
        group = sp_sample(space, samples or 5, random.Random(seed))
    bad = 0
    for g in group:
        act = gamma_action(tr, g)
        if not linalg.cyc_mat_eq(linalg.cyc_mat_mul(act, total),
                                 linalg.cyc_mat_mul(total, act)):
            bad += 1
    checks.append(_check(
        f"idempotent commutes with the section action ({len(group)} elements)",
        bad == 0))
    return _report("idempotent", p, dim, seed, checks)


# --------------------------------------------------------------- lemmas

def _transverse_triples(labels):
    for n in labels:
        for m in labels:
            if not in_general_position(n, m):
                continue
            for l in labels:
                if in_general_position(m, l) and in_general_position(n, l):
                    yield n, m, l


def suite_lemmas(p: int, dim: int, seed: int = 0,
                 samples: int | None = None) -> dict:
    space = SymplecticSpace(p, dim // 2)
    n_half = space.n
    tr = Transport(space)
    labels = oriented_lagrangians(space)
    rng = random.Random(seed)
    checks = []
    if p == 3 and dim == 2:
        triples = list(_transverse_triples(labels))
        scope = f"all {len(triples)} transverse triples"
    else:
        pool = list(_transverse_triples(labels))
        triples = [pool[rng.randrange(len(pool))] for _ in range(samples or 200)]
        scope = f"{len(triples)} sampled transverse triples"
    bad_discr = bad_ident = bad_ac = bad_direct = bad_gauss = 0
    for n, m, l in triples:
        r = residue_map(m.sub, l.sub, n.sub)
        # symmetric form omega(r(x), y) on the middle Lagrangian
        form = tuple(tuple(space.omega(r.apply(x), y) for y in m.sub.basis)
                     for x in m.sub.basis)
        lhs = discriminant(form, p)
        rhs = legendre(pairing_det(r.images, m.sub.basis, space), p)
        if lhs != rhs:
            bad_discr += 1
        # three-pairing identity for the residue wedge
        rr = (pairing_det(r.images, m.sub.basis, space)
              * m.orient * m.orient) % p
        ident = ((-1) ** n_half
                 * wedge_pairing(m, n) * wedge_pairing(l, m)
                 * pow(wedge_pairing(l, n), -1, p)) % p
        if legendre(rr, p) != legendre(ident, p) or (rr - ident) % p != 0:
            bad_ident += 1
        # normalization cocycle inverts the composition scalar
        a = (normalization(n, m) * normalization(m, l)
             / normalization(n, l))
        models = (tr.model(n), tr.model(m), tr.model(l))
        closed, direct = cocycle(*models)
        if closed != direct:
            bad_direct += 1
        if cocycle_gauss_sum(*models) != direct:
            bad_gauss += 1
        if a * direct != 1:
            bad_ac += 1
    checks.append(_check(f"discriminant lemma on {scope}", bad_discr == 0))
    checks.append(_check(f"residue wedge identity on {scope}", bad_ident == 0))
    checks.append(_check(f"composition scalar closed form on {scope}",
                         bad_direct == 0))
    checks.append(_check(f"composition scalar as Gauss sum on {scope}",
                         bad_gauss == 0))
    checks.append(_check(f"normalization times scalar is one on {scope}",
                         bad_ac == 0))
    # general-pair variants through a transverse middle
    from .cyclotomic import psi
    from .symplectic import (orientation_decompose, quotient_reps,
                             wedge_pairing_quotient)
    if p == 3 and dim == 2:
        pairs = [(m, l) for m in labels for l in labels]
    else:
        pairs = [(rng.choice(labels), rng.choice(labels))
                 for _ in range(samples or 200)]
    bad_prop = bad_d2 = bad_i2 = 0
    counted = 0
    for m, l in pairs:
        mids = [s for s in labels
                if in_general_position(s, m) and in_general_position(s, l)]
        mid = mids[rng.randrange(len(mids))]
        inter = m.sub.intersect(l.sub)
        n_i = n_half - inter.dim
        if n_i == 0:
            continue
        counted += 1
        r = residue_map(m.sub, l.sub, mid.sub)
        iota_l, q_l = orientation_decompose(l, inter)
        iota_m, q_m = orientation_decompose(m, inter)
        basis = q_m.lifts
        det_nh = pairing_det(basis, [r.apply(w) for w in basis], space)
        # chained averaging is the quadratic sum times the direct averaging
        quad = CycNum.zero(p)
        for mbar in quotient_reps(m.sub, inter):
            quad = quad + psi((space.half * space.omega(mbar, r.apply(mbar))) % p, p)
        lhs_op = averaging(tr.model(m), tr.model(mid)).compose(
            averaging(tr.model(mid), tr.model(l)))
        scale = CycNum.from_rational(p, p ** inter.dim) * quad
        rhs_op = linalg.cyc_mat_scale(scale, averaging(tr.model(m), tr.model(l)).mat)
        if not linalg.cyc_mat_eq(lhs_op.mat, rhs_op):
            bad_prop += 1
        # the quadratic sum diagonalizes to a Gauss-sum power (half-free form)
        if quad != gauss_sum(p) ** n_i * legendre(det_nh, p):
            bad_d2 += 1
        # residue determinant against the orientation data, N = n reading
        wq = wedge_pairing_quotient(q_l, q_m, space)
        mixed = ((-1) ** n_half * iota_l * pow(iota_m, -1, p) * wq
                 * wedge_pairing(mid, m) * wedge_pairing(l, mid)) % p
        if legendre(det_nh, p) != legendre(mixed, p):
            bad_i2 += 1
    checks.append(_check(
        f"chained averaging proportional to direct on {counted} pairs",
        bad_prop == 0))
    checks.append(_check("general-pair quadratic sum diagonalizes", bad_d2 == 0))
    checks.append(_check("general-pair residue determinant identity", bad_i2 == 0))
    # discriminant via determinant equals congruence diagonalization
    bad = 0
    for _ in range(200):
        k = rng.randrange(1, 5)
        while True:
            form = [[0] * k for _ in range(k)]
            for i in range(k):
                form[i][i] = rng.randrange(p)
                for j in range(i + 1, k):
                    form[i][j] = form[j][i] = rng.randrange(p)
            if linalg.det(tuple(tuple(r) for r in form), p) != 0:
                break
        diag = diagonalize_symmetric(form, p)
        prod = 1
        for d in diag:
            prod = (prod * d) % p
        if discriminant(form, p) != legendre(prod, p):
            bad += 1
    checks.append(_check(
        "discriminant equals diagonalization route on 200 random forms",
        bad == 0))
    return _report("lemmas", p, dim, seed, checks)


# --------------------------------------------------------------- tensor

def suite_tensor(p: int, dim: int, seed: int = 0,
                 samples: int | None = None) -> dict:
    space = SymplecticSpace(p, 1)
    c1, c2 = CanonicalSpace(space), CanonicalSpace(space)
    ts = TensorStructure(c1, c2)
    alpha = ts.alpha()
    rng = random.Random(seed)
    checks = []
    checks.append(_check(
        "product model dimension is the product of dimensions",
        ts.product.dim == c1.dim * c2.dim))
    checks.append(_check("identification is invertible",
                         linalg.cyc_rank(alpha) == ts.product.dim))
    delta_img = linalg.cyc_mat_vec(alpha, ts.product.delta().value_at_base.values)
    expect = [CycNum.zero(p)] * (c1.dim * c2.dim)
    expect[0] = CycNum.from_rational(p, 1)
    checks.append(_check("delta maps to delta tensor delta",
                         all(x == e for x, e in zip(delta_img, expect))))
    group = sp_enumerate(space)
    rep1 = WeilRepresentation(c1)
    rep2 = WeilRepresentation(c2)
    rep_prod = WeilRepresentation(ts.product)
    bad = 0
    witness = None
    count = samples or 50
    for _ in range(count):
        g1, g2 = rng.choice(group), rng.choice(group)
        lhs = linalg.cyc_mat_mul(alpha, rep_prod.matrix(ts.pair_element(g1, g2)))
        rhs = linalg.cyc_mat_mul(
            linalg.cyc_kron(rep1.matrix(g1), rep2.matrix(g2)), alpha)
        if not linalg.cyc_mat_eq(lhs, rhs):
            bad += 1
            if witness is None:
                witness = {"g1": [list(r) for r in g1.mat],
                           "g2": [list(r) for r in g2.mat]}
    checks.append(_check(
        f"product action matches tensor action on {count} sampled pairs",
        bad == 0, witness))
    return _report("tensor", p, dim, seed, checks)


# -------------------------------------------------------------- duality

def suite_duality(p: int, dim: int, seed: int = 0,
                  samples: int | None = None) -> dict:
    from .canonical import DualityStructure
    space = SymplecticSpace(p, dim // 2)
    can = CanonicalSpace(space)
    du = DualityStructure(can)
    labels = oriented_lagrangians(space)
    rng = random.Random(seed)
    checks = []
    gram = du.gram_matrix()
    checks.append(_check("pairing matrix is invertible",
                         not linalg.cyc_det(gram).is_zero()))
    one = du.pairing(du.dual.delta(), can.delta())
    checks.append(_check("delta pairs with delta to one",
                         one == CycNum.from_rational(p, 1)))
    # base independence on random vectors
    bad = 0
    for _ in range(samples or 10):
        a = du.dual.vector([CycNum.from_rational(p, rng.randrange(5))
                            for _ in range(can.dim)])
        b = can.vector([CycNum.from_rational(p, rng.randrange(5))
                        for _ in range(can.dim)])
        values = {du.pairing(a, b, l).coeffs for l in labels}
        if len(values) != 1:
            bad += 1
    checks.append(_check("pairing independent of the evaluation Lagrangian",
                         bad == 0))
    # the flip intertwines the two transports (exhaustive at small scale)
    pairs = ([(m, l) for m in labels for l in labels] if p == 3 and dim == 2
             else [(rng.choice(labels), rng.choice(labels)) for _ in range(20)])
    bad = 0
    for m, l in pairs:
        tbar = du.dual.transport.operator(
            du.mirror_label(m), du.mirror_label(l)).mat
        tinv = du.inverse_char.operator(m, l).mat
        lhs = linalg.cyc_mat_mul(du.flip_matrix(m), tbar)
        rhs = linalg.cyc_mat_mul(tinv, du.flip_matrix(l))
        if not linalg.cyc_mat_eq(lhs, rhs):
            bad += 1
    checks.append(_check(
        f"central flip intertwines the two transports ({len(pairs)} pairs)",
        bad == 0))
    return _report("duality", p, dim, seed, checks)


# ------------------------------------------------------------ reduction

def suite_reduction(p: int, dim: int, seed: int = 0,
                    samples: int | None = None) -> dict:
    rng = random.Random(seed)
    checks = []
    if dim >= 4:
        space = SymplecticSpace(p, dim // 2)
        can = CanonicalSpace(space)
        iso = OrientedSubspace.from_rows(
            space, [tuple(1 if j == 0 else 0 for j in range(dim))])
        red = CanonicalReduction(can, iso)
        inv = red.invariant_basis()
        expect = p ** (dim // 2 - 1)
        checks.append(_check(
            f"invariant subspace has dimension {expect}",
            len(inv) == expect, {"dimension": len(inv)}))
        alpha = red.alpha_matrix()
        cols = [[row[i] for row in inv] for i in range(len(inv[0]))]
        rank = linalg.cyc_rank(linalg.cyc_mat_mul(alpha, cols))
        checks.append(_check(
            "identification is bijective on invariants", rank == expect))
        rep_v = WeilRepresentation(can)
        rep_r = WeilRepresentation(red.reduced)
        bad = 0
        for _ in range(samples or 6):
            g = SpElement.identity(space)
            for _ in range(8):
                u = tuple(rng.randrange(p) if j != space.n else 0
                          for j in range(dim))
                if not any(u):
                    continue
                g = g * SpElement.transvection(space, u, rng.randrange(1, p))
            gbar = red.geometry.induced_element(g)
            lhs = linalg.cyc_mat_mul(linalg.cyc_mat_mul(alpha, rep_v.matrix(g)), cols)
            rhs = linalg.cyc_mat_mul(linalg.cyc_mat_mul(rep_r.matrix(gbar), alpha), cols)
            if not linalg.cyc_mat_eq(lhs, rhs):
                bad += 1
        checks.append(_check(
            "stabilizer equivariance on sampled parabolic elements", bad == 0))
        # naturality under sampled symplectomorphisms
        bad = 0
        for _ in range(samples or 4):
            g = sp_sample(space, 1, rng)[0]
            iso_g = SymplecticIso.from_element(g)
            moved = iso_g.map_lagrangian(iso)
            red_j = CanonicalReduction(can, moved)
            pcols = [red_j.geometry.project(g.act_vec(w))
                     for w in red.geometry.section]
            k = len(pcols)
            mat = tuple(tuple(pcols[b][a] for b in range(k)) for a in range(k))
            f_i = SymplecticIso(red.geometry.reduced, red_j.geometry.reduced, mat)
            inv_j = red_j.invariant_basis()
            jcols = [[row[i] for row in inv_j] for i in range(len(inv_j[0]))]
            hf = quantization_matrix(iso_g, can, can)
            hfi = quantization_matrix(f_i, red_j.reduced, red.reduced)
            lhs = linalg.cyc_mat_mul(
                linalg.cyc_mat_mul(hfi, red_j.alpha_matrix()), jcols)
            rhs = linalg.cyc_mat_mul(
                linalg.cyc_mat_mul(red.alpha_matrix(), hf), jcols)
            if not linalg.cyc_mat_eq(lhs, rhs):
                bad += 1
        checks.append(_check(
            "naturality under sampled symplectomorphisms", bad == 0))
    else:
        space = SymplecticSpace(p, dim // 2)
        can = CanonicalSpace(space)
        for label in oriented_lagrangians(space)[:4]:
            inv = invariant_subspace(can, label.sub)
            checks.append(_check(
                f"Lagrangian invariants one-dimensional at {format_subspace(label)}",
                len(inv) == 1))
            vec = distinguished_vector(can, label)
            comp = vec.component(label)
            checks.append(_check(
                f"distinguished vector has delta component at {format_subspace(label)}",
                comp == delta_vector(can.transport.model(label))))
    return _report("reduction", p, dim, seed, checks)


# ------------------------------------------------------------- registry

_SUITE_FUNCS = {
    "gauss": suite_gauss,
    "svn": suite_svn,
    "multiplicativity": suite_multiplicativity,
    "kernels": suite_kernels,
    "egorov": suite_egorov,
    "homomorphism": suite_homomorphism,
    "idempotent": suite_idempotent,
    "lemmas": suite_lemmas,
    "tensor": suite_tensor,
    "duality": suite_duality,
    "reduction": suite_reduction,
}


def run_suite(name: str, p: int, dim: int, seed: int = 0,
              samples: int | None = None) -> dict:
    if name == "all":
        reports = [run_suite(s, p, dim, seed, samples) for s in SUITES]
        return {
            "kind": "verify-report",
            "suite": "all",
            "p": p,
            "dim": dim,
            "seed": seed,
            "checks": [c for r in reports for c in
                       ({"name": f"{r['suite']}: {c['name']}",
                         "passed": c["passed"],
                         **({"witness": c["witness"]} if "witness" in c else {})}
                        for c in r["checks"])],
            "total": sum(r["total"] for r in reports),
            "failed": sum(r["failed"] for r in reports),
            "passed": all(r["passed"] for r in reports),
        }
    func = _SUITE_FUNCS.get(name)
    if func is None:
        raise ValueError(f"unknown suite {name!r}")
    return func(p, dim, seed=seed, samples=samples)
