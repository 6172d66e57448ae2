"""Equivariant automorphisms of weighted affine space.

An endomorphism commuting with the weighted scalar action sends each
coordinate x^i_j to a polynomial that is weighted-homogeneous of weight m_i.
Such a component splits as (linear in group-i variables) + (polynomial in
strictly lower groups), which gives the block-linear part and the unipotent
part used below.

Conventions: ``compose(F, G)`` is F∘G, i.e. G is applied first. Linear
blocks act on column vectors, so x^i_j maps to sum_l g_i[j][l] x^i_l. The
conjugate of u by g is g∘u∘g⁻¹.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from . import linalg
from .errors import (
    FieldMismatchError,
    HomogeneityError,
    NotAutomorphismError,
    NotInvertibleError,
    SignatureError,
)
from .fields import Field, QQ
from .poly import GradedPolynomial, enumerate_monomials
from .signature import WeightSignature


def _var(sig, ring, k: int) -> GradedPolynomial:
    e = [0] * sig.nvars
    e[k] = 1
    return GradedPolynomial(sig, ring, {tuple(e): ring.one})


class EquivariantMap:
    """A table of components F^i_j, stored flat in variable order."""

    __slots__ = ("sig", "ring", "images")

    def __init__(self, sig: WeightSignature, ring: Field, images: Sequence[GradedPolynomial], check: bool = True):
        self.sig = sig
        self.ring = ring
        self.images = tuple(images)
        if check:
            self._validate()

    def _validate(self):
        if len(self.images) != self.sig.nvars:
            raise SignatureError(f"expected {self.sig.nvars} components, got {len(self.images)}")
        for (i, j), w, p in zip(self.sig.variables, self.sig.var_weights, self.images):
            if p.sig != self.sig:
                raise SignatureError(f"component x_{i}_{j} has signature {p.sig}")
            if p.ring != self.ring:
                raise FieldMismatchError(f"component x_{i}_{j} is over {p.ring}")
            if not p.is_weighted_homogeneous(w):
                raise HomogeneityError(
                    f"component for x_{i}_{j} is not homogeneous of weight {w}: {p} (degrees {sorted(p.degrees())})"
                )

    @classmethod
    def identity(cls, sig, ring=QQ):
        return cls(sig, ring, [_var(sig, ring, k) for k in range(sig.nvars)], check=False)

    @classmethod
    def from_table(cls, sig, ring, table) -> EquivariantMap:
        """Build from a table indexed [group][slot]; validates shape and homogeneity."""
        table = list(table)
        if len(table) != sig.t or any(len(row) != r for row, r in zip(table, sig.mults)):
            shape = [len(row) for row in table]
            raise SignatureError(f"table shape {shape} does not match multiplicities {list(sig.mults)}")
        return cls(sig, ring, [p for row in table for p in row])

    @property
    def components(self) -> list[list[GradedPolynomial]]:
        return [[self.images[k] for k in self.sig.group_slice(i)] for i in range(1, self.sig.t + 1)]

    def component(self, i: int, j: int) -> GradedPolynomial:
        return self.images[self.sig.var_index(i, j)]

    def __call__(self, other: EquivariantMap) -> EquivariantMap:
        return compose(self, other)

    def __eq__(self, other):
        return (
            isinstance(other, EquivariantMap)
            and self.sig == other.sig
            and self.ring == other.ring
            and self.images == other.images
        )

    def __hash__(self):
        return hash((self.sig, self.images))

    def is_identity(self) -> bool:
        return self == EquivariantMap.identity(self.sig, self.ring)

    def __repr__(self):
        body = ", ".join(str(p) for p in self.images)
        return f"EquivariantMap[{self.sig}]({body})"


def validate(sig: WeightSignature, ring: Field, table) -> EquivariantMap:
    return EquivariantMap.from_table(sig, ring, table)


def _same(F, G):
    if F.sig != G.sig:
        raise SignatureError(f"signature mismatch {F.sig} vs {G.sig}")
    if F.ring != G.ring:
        raise FieldMismatchError(f"coefficient mismatch {F.ring} vs {G.ring}")


def compose(F: EquivariantMap, G: EquivariantMap) -> EquivariantMap:
    """F∘G; the result is re-validated."""
    _same(F, G)
    return EquivariantMap(F.sig, F.ring, [p.substitute(G.images) for p in F.images])


@dataclass(frozen=True)
class BlockLinear:
    """One square matrix per weight group."""

    sig: WeightSignature
    ring: Field
    blocks: tuple

    def __post_init__(self):
        blocks = tuple(tuple(tuple(row) for row in b) for b in self.blocks)
        if len(blocks) != self.sig.t:
            raise SignatureError(f"need {self.sig.t} blocks")
        for b, r in zip(blocks, self.sig.mults):
            if len(b) != r or any(len(row) != r for row in b):
                raise SignatureError(f"block of wrong size, expected {r}x{r}")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def identity(cls, sig, ring=QQ):
        return cls(sig, ring, [linalg.identity(ring, r) for r in sig.mults])

    @classmethod
    def diagonal(cls, sig, ring, scalars):
        """Blocks lambda_i * I; one scalar per weight group."""
        blocks = []
        for lam, r in zip(scalars, sig.mults):
            lam = ring.coerce(lam)
            blocks.append([[lam if a == b else ring.zero for b in range(r)] for a in range(r)])
        return cls(sig, ring, blocks)

    def __mul__(self, other: BlockLinear) -> BlockLinear:
        _same(self, other)
        return BlockLinear(self.sig, self.ring, [linalg.matmul(a, b, self.ring) for a, b in zip(self.blocks, other.blocks)])

    def determinants(self) -> list:
        return [linalg.det([list(r) for r in b], self.ring) for b in self.blocks]

    def is_invertible(self) -> bool:
        return all(self.ring.is_unit(d) for d in self.determinants())

    def inverse(self) -> BlockLinear:
        try:
            return BlockLinear(self.sig, self.ring, [linalg.inverse([list(r) for r in b], self.ring) for b in self.blocks])
        except NotInvertibleError as exc:
            raise NotAutomorphismError(f"not an automorphism: singular linear block ({exc})") from None

    def as_map(self) -> EquivariantMap:
        sig, ring = self.sig, self.ring
        images = []
        for i in range(1, sig.t + 1):
            block = self.blocks[i - 1]
            idx = list(sig.group_slice(i))
            for j in range(len(idx)):
                terms = {}
                for l, k in enumerate(idx):
                    e = [0] * sig.nvars
                    e[k] = 1
                    terms[tuple(e)] = block[j][l]
                images.append(GradedPolynomial(sig, ring, terms))
        return EquivariantMap(sig, ring, images, check=False)

    def is_identity(self) -> bool:
        return self == BlockLinear.identity(self.sig, self.ring)


def linear_part(F: EquivariantMap) -> BlockLinear:
    """Coefficients of the own-group linear terms, block by block."""
    sig = F.sig
    blocks = []
    for i in range(1, sig.t + 1):
        idx = list(sig.group_slice(i))
        rows = []
        for k in idx:
            p = F.images[k]
            row = []
            for l in idx:
                e = [0] * sig.nvars
                e[l] = 1
                row.append(p.coefficient(tuple(e)))
            rows.append(row)
        blocks.append(rows)
    return BlockLinear(sig, F.ring, blocks)


def is_automorphism(F: EquivariantMap) -> bool:
    return linear_part(F).is_invertible()


class Unipotent:
    """The map x^i_j -> x^i_j + P^i_j, stored as the shift table P (flat)."""

    __slots__ = ("sig", "ring", "shifts")

    def __init__(self, sig: WeightSignature, ring: Field, shifts: Sequence[GradedPolynomial]):
        self.sig, self.ring = sig, ring
        self.shifts = tuple(shifts)
        if len(self.shifts) != sig.nvars:
            raise SignatureError("one shift per variable required")
        for k, p in enumerate(self.shifts):
            i = sig.var_groups[k]
            if not p.is_weighted_homogeneous(sig.var_weights[k]):
                raise HomogeneityError(f"shift of x_{i}_{sig.variables[k][1]} is not homogeneous")
            if any(g >= i for g in p.groups_used()):
                raise HomogeneityError(f"shift of group {i} uses variables of group >= {i}")

    @classmethod
    def identity(cls, sig, ring=QQ):
        return cls(sig, ring, [GradedPolynomial.zero(sig, ring)] * sig.nvars)

    @classmethod
    def from_map(cls, F: EquivariantMap) -> Unipotent:
        if not linear_part(F).is_identity():
            raise ValueError("map has a non-identity linear part")
        return cls(F.sig, F.ring, [p - _var(F.sig, F.ring, k) for k, p in enumerate(F.images)])

    @classmethod
    def from_level(cls, sig, ring, a: int, polys) -> Unipotent:
        """Element of U_a: shifts only in group a, one polynomial per slot."""
        shifts = [GradedPolynomial.zero(sig, ring)] * sig.nvars
        for k, p in zip(sig.group_slice(a), polys):
            shifts[k] = p
        return cls(sig, ring, shifts)

    @classmethod
    def from_coordinates(cls, sig, ring, a: int, coords) -> Unipotent:
        """Element of U_a from coordinates in the monomial basis, slot-major."""
        basis = level_basis(sig, a)
        coords = list(coords)
        r = sig.mults[a - 1]
        if len(coords) != r * len(basis):
            raise ValueError(f"U_{a} has dimension {r * len(basis)}")
        polys = []
        for j in range(r):
            chunk = coords[j * len(basis):(j + 1) * len(basis)]
            polys.append(GradedPolynomial(sig, ring, {e: ring.coerce(c) for e, c in zip(basis, chunk)}))
        return cls.from_level(sig, ring, a, polys)

    def coordinates(self, a: int) -> list:
        basis = level_basis(self.sig, a)
        return [self.shifts[k].coefficient(e) for k in self.sig.group_slice(a) for e in basis]

    def levels(self) -> list[int]:
        return sorted({self.sig.var_groups[k] for k, p in enumerate(self.shifts) if p})

    def shift_table(self) -> list[list[GradedPolynomial]]:
        return [[self.shifts[k] for k in self.sig.group_slice(i)] for i in range(1, self.sig.t + 1)]

    def as_map(self) -> EquivariantMap:
        return EquivariantMap(
            self.sig, self.ring, [_var(self.sig, self.ring, k) + p for k, p in enumerate(self.shifts)], check=False
        )

    def inverse(self) -> Unipotent:
        """Solve group by group from the lowest weight up.

        With v the inverse, v^i = x^i - P^i(v restricted to lower groups); the
        recursion closes after t-1 steps since P^i only sees lower groups.
        """
        sig, ring = self.sig, self.ring
        images = [_var(sig, ring, k) for k in range(sig.nvars)]
        for i in range(2, sig.t + 1):
            for k in sig.group_slice(i):
                p = self.shifts[k]
                if p:
                    images[k] = _var(sig, ring, k) - p.substitute(images)
        return Unipotent.from_map(EquivariantMap(sig, ring, images, check=False))

    def __eq__(self, other):
        return isinstance(other, Unipotent) and self.sig == other.sig and self.ring == other.ring and self.shifts == other.shifts

    def __hash__(self):
        return hash((self.sig, self.shifts))

    def __repr__(self):
        return f"Unipotent[{self.sig}](" + ", ".join(str(p) for p in self.shifts) + ")"


def level_basis(sig: WeightSignature, a: int):
    """Monomials of weight m_a in groups < a, the coordinate basis of U_a."""
    return enumerate_monomials(sig, sig.weight_of_group(a), below_group=a)


def _as_map(x) -> EquivariantMap:
    if isinstance(x, EquivariantMap):
        return x
    if isinstance(x, (Unipotent, BlockLinear)):
        return x.as_map()
    raise TypeError(f"cannot treat {type(x).__name__} as an equivariant map")


def invert(F) -> EquivariantMap:
    """Inverse as ℓ⁻¹∘u⁻¹ where F = u∘ℓ."""
    F = _as_map(F)
    u, ell = decompose(F)
    return compose(ell.inverse().as_map(), u.inverse().as_map())


def decompose(F) -> tuple[Unipotent, BlockLinear]:
    """Split F = u∘ℓ with ℓ the linear part (applied first) and u unipotent."""
    F = _as_map(F)
    ell = linear_part(F)
    if not ell.is_invertible():
        raise NotAutomorphismError("not an automorphism: singular linear block")
    u = Unipotent.from_map(compose(F, ell.inverse().as_map()))
    return u, ell


def unipotent_factorize(u) -> list[Unipotent]:
    """Factors u_a in U_a, lowest level first, with u = u_t∘...∘u_2.

    Identity factors are omitted. At each step the lowest nontrivial level of
    the remainder is read off and cancelled on the right.
    """
    if isinstance(u, EquivariantMap):
        u = Unipotent.from_map(u)
    factors = []
    rest = u
    for a in range(2, u.sig.t + 1):
        polys = [rest.shifts[k] for k in u.sig.group_slice(a)]
        if not any(polys):
            continue
        ua = Unipotent.from_level(u.sig, u.ring, a, polys)
        factors.append(ua)
        rest = Unipotent.from_map(compose(rest.as_map(), ua.inverse().as_map()))
    if any(rest.shifts):
        raise AssertionError("factorization left a nontrivial remainder")
    return factors


def recompose(factors: Sequence[Unipotent], sig, ring) -> EquivariantMap:
    out = EquivariantMap.identity(sig, ring)
    for f in factors:
        out = compose(f.as_map(), out)
    return out


def conj(g, u) -> Unipotent:
    """g∘u∘g⁻¹, which again has identity linear part."""
    g = _as_map(g)
    u = _as_map(u)
    return Unipotent.from_map(compose(compose(g, u), invert(g)))


def scalar(sig: WeightSignature, lam, ring: Field = QQ) -> EquivariantMap:
    """The weighted scalar action x^i_j -> lam^{m_i} x^i_j."""
    lam = ring.coerce(lam)
    if not ring.is_unit(lam):
        raise NotInvertibleError("scalar must be a unit")
    return BlockLinear.diagonal(sig, ring, [lam ** m for m in sig.weights]).as_map()


# -- random elements, for tests and demonstrations ---------------------------


def random_coefficient(ring: Field, rng: random.Random, nonzero: bool = False):
    while True:
        if ring == QQ:
            c = ring.coerce(rng.randint(-9, 9)) / rng.randint(1, 4)
        else:
            c = ring.coerce(rng.randrange(ring.p))
        if c or not nonzero:
            return c


def random_unipotent(sig, ring, rng: random.Random, density: float = 0.7) -> Unipotent:
    shifts = []
    for k in range(sig.nvars):
        i = sig.var_groups[k]
        basis = enumerate_monomials(sig, sig.var_weights[k], below_group=i)
        terms = {e: random_coefficient(ring, rng) for e in basis if rng.random() < density}
        shifts.append(GradedPolynomial(sig, ring, terms))
    return Unipotent(sig, ring, shifts)


def random_block_linear(sig, ring, rng: random.Random) -> BlockLinear:
    blocks = []
    for r in sig.mults:
        while True:
            m = [[random_coefficient(ring, rng) for _ in range(r)] for _ in range(r)]
            if linalg.det(m, ring):
                break
        blocks.append(m)
    return BlockLinear(sig, ring, blocks)


def random_automorphism(sig, ring, rng: random.Random) -> EquivariantMap:
    return compose(random_unipotent(sig, ring, rng).as_map(), random_block_linear(sig, ring, rng).as_map())


def random_endomorphism(sig, ring, rng: random.Random) -> EquivariantMap:
    """Random homogeneous table; the linear blocks may be singular."""
    images = []
    for k in range(sig.nvars):
        basis = enumerate_monomials(sig, sig.var_weights[k])
        terms = {e: random_coefficient(ring, rng) for e in basis if rng.random() < 0.7}
        images.append(GradedPolynomial(sig, ring, terms))
    return EquivariantMap(sig, ring, images)
