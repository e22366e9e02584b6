"""Closure structure of finitely generated subgroups of R^k.

The closure of such a group is a closed subgroup V + Lambda (a real subspace
plus a discrete lattice).  It is computed by character duality: after
re-coordinatizing so that a maximal independent generator subset becomes the
standard basis, the dual certificate is the lattice of integer vectors kappa
with kappa . u in Z for every generator u; the closure is exactly the set of
points x with kappa . x in Z for all such kappa.  Density questions, trace
kernels and discreteness tests all reduce to this single engine.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .domain import DomainElement, DomainSpec, q_coordinates
from .symfield import (
    K,
    delem_rows,
    field_kernel,
    field_rank,
    field_solve,
    independent_subset,
    kzero,
)


@dataclass
class EmbeddedGroup:
    """A finitely generated subgroup of R^k given by generator vectors."""

    spec: DomainSpec
    ambient_dim: int
    generators: list[list[DomainElement]]
    divisible: bool = False

    def __post_init__(self):
        if not self.generators:
            raise ValueError("at least one generator required")
        for v in self.generators:
            if len(v) != self.ambient_dim:
                raise ValueError("generator has wrong length")

    def element(self, coeffs: Sequence) -> list[DomainElement]:
        """The ambient vector of an integer/rational combination of generators."""
        out = [self.spec.zero() for _ in range(self.ambient_dim)]
        for c, v in zip(coeffs, self.generators):
            c = Fraction(c)
            if c == 0:
                continue
            if c.denominator != 1 and not self.divisible:
                raise ValueError("non-integer coefficients in a non-divisible group")
            for d in range(self.ambient_dim):
                out[d] = out[d] + v[d] * c
        return out


@dataclass
class ClosureDecomposition:
    """closure = span(divisible_basis) + Z-span(lattice_basis), in ambient
    coordinates; dual_lattice is the integer certificate in the reduced
    coordinates of ``basis_indices``."""

    group: EmbeddedGroup
    basis_indices: list[int]
    coords: list[list[K]]            # generator coordinates over the chosen basis
    dual_lattice: list[list[int]]    # K_bad basis, in reduced coordinates
    divisible_basis: list[list[DomainElement]]
    lattice_basis: list[list[DomainElement]]
    v_basis_reduced: list[list[Fraction]] = field(default_factory=list)
    lattice_reduced: list[list[Fraction]] = field(default_factory=list)

    @property
    def divisible_dim(self) -> int:
        return len(self.divisible_basis)

    @property
    def lattice_rank(self) -> int:
        return len(self.lattice_basis)

    def span_dim(self) -> int:
        return len(self.basis_indices)

    def is_dense(self) -> bool:
        return (
            self.span_dim() == self.group.ambient_dim and not self.dual_lattice
        )

    def is_discrete(self) -> bool:
        return self.divisible_dim == 0

    def is_real_subspace(self) -> bool:
        return self.lattice_rank == 0

    def lattice_coordinates(self, coords: list[K]) -> list[int]:
        """Integer coordinates (over the dual) of a point's lattice part."""
        out = []
        for kappa in self.dual_lattice:
            val = kzero(self.group.spec)
            for ki, ci in zip(kappa, coords):
                if ki:
                    val = val + K.of(self.group.spec, ki) * ci
            out.append(_exact_integer(val))
        return out

    def member_coords(self, point: list[K], budget: int = 256):
        """If the ambient point lies in the closure, return (real_part,
        integer_part) coordinates; otherwise None.

        real_part is the rational coordinate vector over v_basis_reduced and
        integer_part the integer vector over lattice_reduced.
        """
        spec = self.group.spec
        basis_vectors = [self.group.generators[i] for i in self.basis_indices]
        rows = [
            [K(basis_vectors[i][d]) for i in range(len(basis_vectors))]
            for d in range(self.group.ambient_dim)
        ]
        c = field_solve(rows, point)
        if c is None:
            return None
        # consistency: the solve only used span directions; verify exactly
        for d in range(self.group.ambient_dim):
            acc = kzero(spec)
            for i in range(len(basis_vectors)):
                acc = acc + rows[d][i] * c[i]
            if not (acc - point[d]).is_zero():
                return None
        ints = []
        for kappa in self.dual_lattice:
            val = kzero(spec)
            for ki, ci in zip(kappa, c):
                if ki:
                    val = val + K.of(spec, ki) * ci
            n = _try_exact_integer(val, budget)
            if n is None:
                return None
            ints.append(n)
        # subtract the lattice part; remainder must lie in V
        rem = list(c)
        for n, x in zip(ints, self.lattice_reduced):
            for i in range(len(rem)):
                rem[i] = rem[i] - K.of(spec, Fraction(n) * x[i])
        # rem must satisfy W rem = 0
        for kappa in self.dual_lattice:
            val = kzero(spec)
            for ki, ci in zip(kappa, rem):
                if ki:
                    val = val + K.of(spec, ki) * ci
            if not val.is_zero():
                return None
        return rem, ints


def _exact_integer(val: K) -> int:
    n = _try_exact_integer(val, 256)
    if n is None:
        raise AssertionError("expected an exact integer value")
    return n


def _try_exact_integer(val: K, budget: int):
    """The exact integer a field value equals, or None."""
    level = 0
    while level <= budget:
        enc = val.enclosure(level)
        if enc is not None and enc[1] - enc[0] < 1:
            lo_f = _floor(enc[0])
            hi_f = _floor(enc[1])
            candidates = {lo_f, hi_f, lo_f + 1}
            for n in sorted(candidates):
                if (val - K.of(val.spec(), n)).is_zero():
                    return n
            return None
        level += 1
    return None


def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator


# ---------------------------------------------------------------------------


def q_rank(g: EmbeddedGroup) -> int:
    """Rank of the abelian group generated (torsion-free, so the Q-rank)."""
    flat = []
    for v in g.generators:
        flat.append(v)
    _, rows = q_coordinates([e for v in flat for e in v])
    k = g.ambient_dim
    merged = []
    for i in range(len(g.generators)):
        row = []
        for d in range(k):
            row.extend(rows[i * k + d])
        merged.append(row)
    return linalg.rational_rank(merged)


def relation_lattice(
    forms: list[list[DomainElement]], g: EmbeddedGroup
) -> list[list[int]]:
    """Basis of {n in Z^m : phi(sum n_i v_i) = 0 for every functional phi}.

    Each form is a coefficient vector over the ambient coordinates.  The
    conditions split along the rational coordinates of the values phi(v_i),
    giving an integer kernel problem (saturated by construction).
    """
    spec = g.spec
    all_rows = []
    for phi in forms:
        values = []
        for v in g.generators:
            acc = spec.zero()
            for c, x in zip(phi, v):
                acc = acc + c * x
            values.append(acc)
        _, rows = q_coordinates(values)
        if not rows or not rows[0]:
            continue
        ncols = len(rows[0])
        for col in range(ncols):
            all_rows.append([rows[i][col] for i in range(len(values))])
    if not all_rows:
        return [
            [1 if i == j else 0 for j in range(len(g.generators))]
            for i in range(len(g.generators))
        ]
    return linalg.integer_kernel_of_rational(all_rows)


def closure_decomposition(g: EmbeddedGroup) -> ClosureDecomposition:
    spec = g.spec
    k = g.ambient_dim
    vec_rows = delem_rows(g.generators)  # one row per generator
    idx = independent_subset(vec_rows)
    r = len(idx)
    basis_vectors = [g.generators[i] for i in idx]
    # coordinates of every generator over the chosen basis
    solve_rows = [
        [K(basis_vectors[i][d]) for i in range(r)] for d in range(k)
    ]
    coords: list[list[K]] = []
    for j, v in enumerate(g.generators):
        if j in idx:
            e = [kzero(spec) for _ in range(r)]
            e[idx.index(j)] = K.of(spec, 1)
            coords.append(e)
        else:
            c = field_solve(solve_rows, [K(x) for x in v])
            assert c is not None, "generator outside the span of the basis"
            coords.append(c)

    if g.divisible:
        # rational scaling erases every integrality condition: the closure is
        # the full real span
        dual: list[list[int]] = []
    else:
        rest = [j for j in range(len(g.generators)) if j not in idx]
        sys_rows: list[list[Fraction]] = []
        ncols = r + len(rest)
        for pos, j in enumerate(rest):
            c = coords[j]
            dens = [ci.den for ci in c]
            # p_i = num_i * prod_{l != i} den_l ; q = prod den_l
            prod_all = spec.one()
            for d in dens:
                prod_all = prod_all * d
            ps = []
            for i in range(r):
                p = c[i].num
                for l in range(r):
                    if l != i:
                        p = p * dens[l]
                ps.append(p)
            _, qrows = q_coordinates(ps + [prod_all])
            width = len(qrows[0]) if qrows and qrows[0] else 0
            for col in range(width):
                row = [Fraction(0)] * ncols
                for i in range(r):
                    row[i] = qrows[i][col]
                row[r + pos] = -qrows[r][col]
                sys_rows.append(row)
        if sys_rows:
            sols = linalg.integer_kernel_of_rational(sys_rows)
        else:
            sols = [
                [1 if i == j else 0 for j in range(r)] for i in range(r)
            ]
        kappas = [s[:r] for s in sols]
        dual = linalg.lattice_basis([ka for ka in kappas if any(ka)])

    # V = kernel of the dual matrix, Lambda from a rational right inverse
    if dual:
        v_basis_red = linalg.rational_kernel(dual)
        W = [[Fraction(x) for x in row] for row in dual]
        Wt = [[W[i][j] for i in range(len(W))] for j in range(r)]
        WWt = linalg.mat_mul(W, Wt)
        lattice_red = []
        for t in range(len(dual)):
            rhs = [Fraction(1) if i == t else Fraction(0) for i in range(len(dual))]
            y = linalg.rational_solve(WWt, rhs)
            x = linalg.mat_vec(Wt, y)
            lattice_red.append(x)
    else:
        v_basis_red = [
            [Fraction(1) if i == j else Fraction(0) for j in range(r)]
            for i in range(r)
        ]
        lattice_red = []

    def to_ambient(rational_vec):
        out = [spec.zero() for _ in range(k)]
        for ci, bv in zip(rational_vec, basis_vectors):
            if ci:
                for d in range(k):
                    out[d] = out[d] + bv[d] * ci
        return out

    divisible_basis = [to_ambient(v) for v in v_basis_red]
    lattice_basis = [to_ambient(x) for x in lattice_red]
    return ClosureDecomposition(
        group=g,
        basis_indices=idx,
        coords=coords,
        dual_lattice=dual,
        divisible_basis=divisible_basis,
        lattice_basis=lattice_basis,
        v_basis_reduced=v_basis_red,
        lattice_reduced=lattice_red,
    )


@dataclass
class DensityVerdict:
    dense: bool
    witness: list[K] | None = None  # dual functional with integer values
    witness_values: list[int] | None = None

    def __bool__(self):
        return self.dense


def density_test(g: EmbeddedGroup) -> DensityVerdict:
    """Dense, or a dual witness w with w . v_i in Z exactly for every
    generator."""
    spec = g.spec
    dec = closure_decomposition(g)
    if dec.is_dense():
        return DensityVerdict(True)
    k = g.ambient_dim
    basis_vectors = [g.generators[i] for i in dec.basis_indices]
    if dec.span_dim() < k:
        # a nonzero functional annihilating the span: w . v_i = 0 for all i
        rows = [[K(bv[d]) for d in range(k)] for bv in basis_vectors]
        w = field_kernel(rows)[0]
        values = [0] * len(g.generators)
        return DensityVerdict(False, witness=w, witness_values=values)
    kappa = dec.dual_lattice[0]
    # solve w^T B = kappa; unique since the basis spans R^k
    rows = [
        [K(basis_vectors[i][d]) for d in range(k)] for i in range(len(basis_vectors))
    ]
    w = field_solve(rows, [K.of(spec, x) for x in kappa])
    values = []
    for c in dec.coords:
        val = kzero(spec)
        for ki, ci in zip(kappa, c):
            if ki:
                val = val + K.of(spec, ki) * ci
        values.append(_exact_integer(val))
    return DensityVerdict(False, witness=w, witness_values=values)


def verify_dual_witness(g: EmbeddedGroup, w: list[K], budget: int = 256) -> bool:
    """Re-check a NotDense certificate: w . v_i must be an exact integer."""
    for v in g.generators:
        acc = kzero(g.spec)
        for wi, x in zip(w, v):
            acc = acc + wi * K(x)
        if _try_exact_integer(acc, budget) is None:
            return False
    return True


def approximate_element(
    g: EmbeddedGroup,
    target: Sequence,
    eps,
    height_bound: int = 10**6,
    budget: int = 64,
):
    """Integer combination n with |sum n_i v_i - target| < eps componentwise,
    or None (NotFoundWithinBound; not a refutation of density).

    Lattice-reduction guided: Babai's nearest plane on an LLL-reduced lifted
    basis, with the accuracy/height trade-off swept over a few scales.  The
    returned combination is verified exactly before being accepted.
    """
    eps = Fraction(eps)
    target = [Fraction(t) for t in target]
    k = g.ambient_dim
    m = len(g.generators)
    # rational midpoint approximations of the generator entries
    level = 24
    approx = []
    for v in g.generators:
        row = []
        for x in v:
            lo, hi = x.enclosure(level)
            row.append((lo + hi) / 2)
        approx.append(row)

    for scale_pow in (2, 4, 8, 12, 16, 20):
        C = Fraction(2**scale_pow) / eps
        basis = [
            [C * approx[i][d] for d in range(k)] + [Fraction(int(i == j)) for j in range(m)]
            for i in range(m)
        ]
        reduced = linalg.lll_reduce(basis)
        t_lift = [C * t for t in target] + [Fraction(0)] * m
        coeffs_red = linalg.babai_nearest(reduced, t_lift)
        point = [sum(c * reduced[i][d] for i, c in enumerate(coeffs_red)) for d in range(k + m)]
        n = [int(point[k + j]) for j in range(m)]
        if max((abs(x) for x in n), default=0) > height_bound:
            continue
        if _verify_approximation(g, n, target, eps, budget):
            return n
    return None


def _verify_approximation(g, n, target, eps, budget) -> bool:
    err = g.element(n)
    for d in range(g.ambient_dim):
        e = err[d] - g.spec.rational(target[d])
        try:
            if (e + g.spec.rational(eps)).sign(budget) <= 0:
                return False
            if (g.spec.rational(eps) - e).sign(budget) <= 0:
                return False
        except Exception:
            return False
    return True
