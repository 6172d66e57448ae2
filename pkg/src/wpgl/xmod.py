"""Crossed modules, validation reports, and central extensions of finite groups."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .errors import InvalidStructureError, MalformedError
from .groups import FiniteGroup, extend_on_generators, hom_violations


@dataclass(frozen=True)
class Violation:
    """One failed axiom instance.

    ``map`` names the map the witness is read against and ``elements`` are
    the elements of that map's domain involved. Axioms relating two maps list
    the other table cells in ``also``; ``entries`` is the union, as
    (map, index) pairs.
    """

    axiom: str
    message: str
    witness: dict
    map: str | None = None
    elements: tuple[int, ...] = ()
    also: tuple[tuple[str, int], ...] = ()

    @property
    def entries(self) -> tuple[tuple[str, int], ...]:
        own = tuple((self.map, e) for e in self.elements) if self.map else ()
        return tuple(dict.fromkeys(own + tuple(self.also)))

    def to_json(self) -> dict:
        out = {"axiom": self.axiom, "message": self.message, "witness": dict(sorted(self.witness.items()))}
        if self.map is not None:
            out["map"] = self.map
        if self.entries:
            out["entries"] = [list(e) for e in self.entries]
        return out


@dataclass
class ValidationReport:
    kind: str
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, v: Violation):
        self.violations.append(v)

    def extend(self, other: ValidationReport):
        self.violations.extend(other.violations)

    def axioms(self) -> list[str]:
        return sorted({v.axiom for v in self.violations})

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "valid": self.ok,
            "violated_axioms": self.axioms(),
            "violations": [v.to_json() for v in self.violations],
        }


def _check_table(values, dom: FiniteGroup, cod: FiniteGroup, name: str):
    if len(values) != dom.order:
        raise MalformedError(f"{name}: expected {dom.order} entries, got {len(values)}")
    for v in values:
        if not isinstance(v, int) or not 0 <= v < cod.order:
            raise MalformedError(f"{name}: entry {v!r} outside 0..{cod.order - 1}")


def check_hom(report: ValidationReport, values, dom, cod, name: str, limit: int = 4):
    for a, b in hom_violations(dom, cod, values, limit=limit):
        ab = dom.table[a][b]
        report.add(Violation(
            "HOM",
            f"{name} is not a homomorphism: {name}({a}*{b}) != {name}({a})*{name}({b})",
            {"a": a, "b": b},
            map=name,
            elements=(a, b, ab),
        ))


class RightAction:
    """Table ``act[g1][g0]`` = g1 acted on by g0 (exponent notation g1^g0)."""

    def __init__(self, acted: FiniteGroup, acting: FiniteGroup, table: Sequence[Sequence[int]]):
        rows = [list(map(int, r)) for r in table]
        if len(rows) != acted.order or any(len(r) != acting.order for r in rows):
            raise MalformedError("action table must be |G1| x |G0|")
        if any(not 0 <= x < acted.order for r in rows for x in r):
            raise MalformedError("action table has entries outside G1")
        self.acted, self.acting = acted, acting
        self.table = tuple(tuple(r) for r in rows)

    def __call__(self, beta: int, a: int) -> int:
        return self.table[beta][a]

    @classmethod
    def trivial(cls, acted, acting):
        return cls(acted, acting, [[b] * acting.order for b in range(acted.order)])

    @classmethod
    def conjugation(cls, g: FiniteGroup):
        return cls(g, g, [[g.conj(a, b) for a in range(g.order)] for b in range(g.order)])

    @classmethod
    def through(cls, acted, acting, hom_values, auts):
        """Action via a homomorphism to a group acting by ``auts[k][beta]``."""
        return cls(acted, acting, [[auts[hom_values[a]][b] for a in range(acting.order)] for b in range(acted.order)])

    def violations(self, name: str = "action") -> list[Violation]:
        g1, g0, t = self.acted, self.acting, self.table
        out = []
        for b in range(g1.order):
            if t[b][0] != b:
                out.append(Violation("ACT", "identity does not act trivially", {"beta": b}, map=name))
        for a in range(g0.order):
            col = [t[b][a] for b in range(g1.order)]
            if len(set(col)) != g1.order:
                out.append(Violation("ACT", f"element {a} does not act bijectively", {"a": a}, map=name))
                continue
            for b1 in range(g1.order):
                for b2 in range(g1.order):
                    if t[g1.table[b1][b2]][a] != g1.table[col[b1]][col[b2]]:
                        out.append(Violation("ACT", f"element {a} does not act by a homomorphism",
                                             {"a": a, "beta1": b1, "beta2": b2}, map=name))
                        break
                else:
                    continue
                break
        for b in range(g1.order):
            for a1 in range(g0.order):
                for a2 in range(g0.order):
                    if t[t[b][a1]][a2] != t[b][g0.table[a1][a2]]:
                        out.append(Violation("ACT", "(beta^a)^b != beta^(ab)", {"beta": b, "a": a1, "b": a2}, map=name))
                        return out
        return out


class CrossedModule:
    """[boundary: G1 -> G0] with a right action of G0 on G1.

    Constructed without validation so invalid inputs can still be reported;
    call :func:`check_crossed_module` or :meth:`validate`.
    """

    def __init__(self, g1: FiniteGroup, g0: FiniteGroup, boundary: Sequence[int], action: RightAction | Sequence[Sequence[int]]):
        boundary = [int(x) for x in boundary]
        _check_table(boundary, g1, g0, "boundary")
        if not isinstance(action, RightAction):
            action = RightAction(g1, g0, action)
        if action.acted != g1 or action.acting != g0:
            raise MalformedError("action groups do not match the crossed module")
        self.g1, self.g0, self.boundary, self.action = g1, g0, tuple(boundary), action

    def validate(self) -> CrossedModule:
        report = check_crossed_module(self)
        if not report.ok:
            raise InvalidStructureError("not a crossed module", report)
        return self

    @classmethod
    def from_normal_subgroup(cls, g0: FiniteGroup, normal) -> CrossedModule:
        """[N -> G] inclusion of a normal subgroup, G acting by conjugation."""
        sub, emb = g0.subgroup(normal)
        index = {e: i for i, e in enumerate(emb)}
        table = [[index[g0.conj(a, emb[b])] for a in range(g0.order)] for b in range(sub.order)]
        return cls(sub, g0, emb, table)

    @classmethod
    def identity(cls, g: FiniteGroup) -> CrossedModule:
        return cls(g, g, list(range(g.order)), RightAction.conjugation(g))

    @classmethod
    def trivial_boundary(cls, g1: FiniteGroup, g0: FiniteGroup) -> CrossedModule:
        """[A -> G] with trivial boundary and trivial action; valid iff A is abelian."""
        return cls(g1, g0, [0] * g1.order, RightAction.trivial(g1, g0))


def check_crossed_module(xm: CrossedModule, name: str = "") -> ValidationReport:
    """Enumerate every instance of the two crossed-module axioms.

    CM1: boundary(beta^a) = a⁻¹ boundary(beta) a.
    CM2: beta^boundary(alpha) = alpha⁻¹ beta alpha.
    """
    report = ValidationReport("crossed_module")
    g1, g0, d, act = xm.g1, xm.g0, xm.boundary, xm.action
    prefix = f"{name}." if name else ""
    check_hom(report, d, g1, g0, prefix + "boundary")
    for v in act.violations(prefix + "action"):
        report.add(v)
    for b in range(g1.order):
        for a in range(g0.order):
            if d[act(b, a)] != g0.conj(a, d[b]):
                report.add(Violation("CM1", f"{prefix}boundary(beta^a) != a^-1 boundary(beta) a",
                                     {"beta": b, "a": a}, map=prefix + "boundary", elements=(b,)))
    for al in range(g1.order):
        for b in range(g1.order):
            if act(b, d[al]) != g1.conj(al, b):
                report.add(Violation("CM2", f"{prefix}beta^boundary(alpha) != alpha^-1 beta alpha",
                                     {"alpha": al, "beta": b}, map=prefix + "boundary", elements=(al,)))
    return report


def _require_valid(xm: CrossedModule):
    report = check_crossed_module(xm)
    if not report.ok:
        raise InvalidStructureError("not a crossed module", report)


def pi1(xm: CrossedModule) -> tuple[FiniteGroup, list[int]]:
    """Kernel of the boundary, with its embedding into G1; checked central."""
    _require_valid(xm)
    ker = [b for b in range(xm.g1.order) if xm.boundary[b] == 0]
    if not xm.g1.is_central(ker):
        raise AssertionError("kernel of the boundary is not central")
    return xm.g1.subgroup(ker)


def pi0(xm: CrossedModule) -> tuple[FiniteGroup, list[int]]:
    """Cokernel G0 / im(boundary), with the projection from G0."""
    _require_valid(xm)
    image = sorted(set(xm.boundary))
    if not xm.g0.is_normal(image):
        raise AssertionError("image of the boundary is not normal")
    return xm.g0.quotient(image)


# -- extensions ---------------------------------------------------------------


class CentralExtension:
    """1 -> C -> E -> H -> 1 given by an embedding and a projection."""

    def __init__(self, c: FiniteGroup, e: FiniteGroup, h: FiniteGroup, embed: Sequence[int], proj: Sequence[int]):
        embed, proj = [int(x) for x in embed], [int(x) for x in proj]
        _check_table(embed, c, e, "embed")
        _check_table(proj, e, h, "proj")
        self.c, self.e, self.h = c, e, h
        self.embed, self.proj = tuple(embed), tuple(proj)

    @classmethod
    def from_central_subgroup(cls, e: FiniteGroup, central) -> CentralExtension:
        c, emb = e.subgroup(central)
        h, proj = e.quotient(central)
        return cls(c, e, h, emb, proj)

    def validate(self) -> CentralExtension:
        report = check_extension(self)
        if not report.ok:
            raise InvalidStructureError("not a central extension", report)
        return self


def check_extension(ext: CentralExtension, central: bool = True) -> ValidationReport:
    report = ValidationReport("central_extension" if central else "extension")
    check_hom(report, ext.embed, ext.c, ext.e, "embed")
    check_hom(report, ext.proj, ext.e, ext.h, "proj")
    if len(set(ext.embed)) != ext.c.order:
        report.add(Violation("EXT", "embedding is not injective", {}, map="embed"))
    if len(set(ext.proj)) != ext.h.order:
        missing = min(set(range(ext.h.order)) - set(ext.proj))
        report.add(Violation("EXT", "projection is not surjective", {"h": missing}, map="proj"))
    image = set(ext.embed)
    kernel = {x for x in range(ext.e.order) if ext.proj[x] == 0}
    for x in sorted(image ^ kernel):
        report.add(Violation("EXT", "image of the embedding differs from the kernel of the projection", {"x": x}))
    if central:
        z = set(ext.e.center())
        for x in sorted(image - z):
            report.add(Violation("EXT", "embedded element is not central", {"x": x}))
    return report


def find_sections(e: FiniteGroup, h: FiniteGroup, proj: Sequence[int], method: str = "generators", limit: int | None = 1):
    """Homomorphic sections s: H -> E of a surjection, up to ``limit`` of them.

    ``generators``: choose a lift for each generator of H and extend along
    the Cayley graph, rejecting as soon as a relation fails.
    ``exhaustive``: try every set-theoretic section; only for tiny inputs.
    """
    fibers = [[x for x in range(e.order) if proj[x] == y] for y in range(h.order)]
    if any(not f for f in fibers):
        raise MalformedError("projection is not surjective")
    found = []
    if method == "generators":
        gens = h.generators
        for lifts in itertools.product(*(fibers[g] for g in gens)):
            values = extend_on_generators(h, gens, lifts, e)
            if values is not None:
                found.append(values)
                if limit is not None and len(found) >= limit:
                    break
    elif method == "exhaustive":
        for values in itertools.product(*fibers):
            if not hom_violations(h, e, values, limit=1):
                found.append(list(values))
                if limit is not None and len(found) >= limit:
                    break
    else:
        raise ValueError(f"unknown method {method!r}")
    for s in found:
        assert all(proj[s[y]] == y for y in range(h.order))
    return found


def is_split_extension(ext: CentralExtension, method: str = "generators") -> list[int] | None:
    """A homomorphic section of the projection, or None if there is none."""
    ext.validate()
    found = find_sections(ext.e, ext.h, ext.proj, method=method, limit=1)
    return found[0] if found else None
