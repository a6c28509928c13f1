"""The graded path algebra of a covering quiver over Q(zeta_L).

A path is determined by its start vertex and the sequence of arrow-family
indices traversed, because exactly one arrow of each family leaves every
vertex of a covering quiver.  Elements are finite Cyc-linear combinations
of paths; homogeneous two-sided ideals are handled degree by degree with
exact row reduction.

Multiplication composes right-to-left: x * y means "apply y first", so the
product of paths p * q is defined when q ends where p starts.

Ideal components split by start vertex (right multiplication by the
trivial path v_s projects an ideal element back into the ideal), so each
degree is row reduced in |G| independent blocks of width |W|^d.
"""

from __future__ import annotations

import itertools
from typing import Dict, Iterable, Optional, Sequence

from .cyclotomic import Cyc
from .groups import GroupElt
from .linalg import EchelonBasis
from .quiver import Arrow, CoveringQuiver


class NotNilpotentWithinBound(Exception):
    """The arrow-ideal powers did not land in the ideal by the bound."""

    def __init__(self, bound: int, dims: list[int]):
        super().__init__(
            f"quotient still has dimension {dims[-1]} in degree {len(dims) - 1}; "
            f"no nilpotency degree found up to bound {bound}"
        )
        self.bound = bound
        self.dims = dims


class Path:
    """A path: start vertex plus the tuple of arrow families traversed."""

    __slots__ = ("quiver", "start", "fams", "end", "_hash")

    def __init__(self, quiver: CoveringQuiver, start: GroupElt, fams: Sequence[int]):
        fams = tuple(fams)
        end = start
        for f in fams:
            end = quiver.weights[f] * end
        self.quiver = quiver
        self.start = start
        self.fams = fams
        self.end = end
        self._hash = hash((start.exps, fams))

    @staticmethod
    def _make(quiver, start, fams, end) -> "Path":
        p = object.__new__(Path)
        p.quiver = quiver
        p.start = start
        p.fams = fams
        p.end = end
        p._hash = hash((start.exps, fams))
        return p

    @property
    def length(self) -> int:
        return len(self.fams)

    def extended(self, fam: int) -> "Path":
        """The path followed by one more arrow (of the given family)."""
        return Path._make(
            self.quiver,
            self.start,
            self.fams + (fam,),
            self.quiver.weights[fam] * self.end,
        )

    def prefixed(self, fam: int) -> "Path":
        """One arrow of the given family, then this path, starting one
        vertex earlier."""
        new_start = self.quiver.weights[fam].inv() * self.start
        return Path._make(self.quiver, new_start, (fam,) + self.fams, self.end)

    def arrows(self) -> list[Arrow]:
        out = []
        v = self.start
        for f in self.fams:
            a = self.quiver.arrow_from(v, f)
            out.append(a)
            v = a.target
        return out

    def translated(self, g: GroupElt) -> "Path":
        """Left translation g . p (all vertices move by right mult g^-1)."""
        ginv = g.inv()
        return Path._make(
            self.quiver, self.start * ginv, self.fams, self.end * ginv
        )

    def sort_key(self):
        return (len(self.fams), self.start.exps, self.fams)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Path)
            and self.start == other.start
            and self.fams == other.fams
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        if not self.fams:
            return f"e{self.start}"
        return f"p{self.start}" + "".join(f"a{f + 1}" for f in self.fams)


def path_order(p: Path):
    return p.sort_key()


def paths_of_length(quiver: CoveringQuiver, d: int) -> list[Path]:
    """All |G| * |W|^d paths of length d, in canonical order."""
    if d < 0:
        raise ValueError("path length must be nonnegative")
    nf = quiver.n_families
    out = []
    for v in quiver.vertices:
        for fams in itertools.product(range(nf), repeat=d):
            out.append(Path(quiver, v, fams))
    return out


class Elem:
    """Finite Cyc-linear combination of paths, zero coefficients absent."""

    __slots__ = ("quiver", "terms")

    def __init__(self, quiver: CoveringQuiver, terms: Optional[Dict[Path, Cyc]] = None):
        self.quiver = quiver
        self.terms = {p: c for p, c in (terms or {}).items() if not c.is_zero()}

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(quiver: CoveringQuiver) -> "Elem":
        return Elem(quiver)

    @staticmethod
    def from_path(quiver: CoveringQuiver, path: Path, L: int) -> "Elem":
        return Elem(quiver, {path: Cyc.one(L)})

    @staticmethod
    def vertex(quiver: CoveringQuiver, v: GroupElt, L: int) -> "Elem":
        return Elem(quiver, {Path(quiver, v, ()): Cyc.one(L)})

    @staticmethod
    def identity(quiver: CoveringQuiver, L: int) -> "Elem":
        one = Cyc.one(L)
        return Elem(quiver, {Path(quiver, v, ()): one for v in quiver.vertices})

    @staticmethod
    def arrow(quiver: CoveringQuiver, a: Arrow, L: int) -> "Elem":
        return Elem(quiver, {Path(quiver, a.source, (a.family,)): Cyc.one(L)})

    # -- linear structure ------------------------------------------------

    def __add__(self, other: "Elem") -> "Elem":
        out = dict(self.terms)
        for p, c in other.terms.items():
            cur = out.get(p)
            s = c if cur is None else cur + c
            if s.is_zero():
                out.pop(p, None)
            else:
                out[p] = s
        return Elem(self.quiver, out)

    def __sub__(self, other: "Elem") -> "Elem":
        return self + (-other)

    def __neg__(self) -> "Elem":
        return Elem(self.quiver, {p: -c for p, c in self.terms.items()})

    def scaled(self, c: Cyc) -> "Elem":
        if c.is_zero():
            return Elem(self.quiver)
        return Elem(self.quiver, {p: c * v for p, v in self.terms.items()})

    # -- multiplicative structure -----------------------------------------

    def __mul__(self, other: "Elem") -> "Elem":
        """Bilinear extension of path concatenation (other acts first)."""
        out: Dict[Path, Cyc] = {}
        for q, cq in other.terms.items():
            end = q.end
            for p, cp in self.terms.items():
                if p.start == end:
                    new = Path._make(
                        self.quiver, q.start, q.fams + p.fams, p.end
                    )
                    c = cp * cq
                    cur = out.get(new)
                    s = c if cur is None else cur + c
                    if s.is_zero():
                        out.pop(new, None)
                    else:
                        out[new] = s
        return Elem(self.quiver, out)

    def __pow__(self, n: int) -> "Elem":
        if n < 0:
            raise ValueError("negative powers are not defined in a path algebra")
        if n == 0:
            raise ValueError("use Elem.identity for the unit")
        out = self
        for _ in range(n - 1):
            out = out * self
        return out

    # -- grading -----------------------------------------------------------

    def degrees(self) -> list[int]:
        return sorted({p.length for p in self.terms})

    def degree_component(self, d: int) -> "Elem":
        return Elem(self.quiver, {p: c for p, c in self.terms.items() if p.length == d})

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> Optional[int]:
        ds = self.degrees()
        if len(ds) != 1:
            return None
        return ds[0]

    def is_zero(self) -> bool:
        return not self.terms

    def start_component(self, s: GroupElt) -> "Elem":
        return Elem(self.quiver, {p: c for p, c in self.terms.items() if p.start == s})

    def translated(self, g: GroupElt) -> "Elem":
        """Left translation g . x, an algebra automorphism."""
        return Elem(self.quiver, {p.translated(g): c for p, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, Elem) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for p in sorted(self.terms, key=path_order):
            bits.append(f"({self.terms[p]})*{p!r}")
        return " + ".join(bits)

    def to_json(self) -> list:
        out = []
        for p in sorted(self.terms, key=path_order):
            out.append(
                {
                    "path": [list(p.start.exps), [f + 1 for f in p.fams]],
                    "coeff": self.terms[p].to_json(),
                }
            )
        return out


class QuotientBasis:
    """Per-degree complement of an admissible ideal inside the path algebra."""

    def __init__(self, dims: list[int], basis: list[list[Path]], nilpotency_degree: int):
        self.dims = dims
        self.basis = basis
        self.nilpotency_degree = nilpotency_degree
        self.dimension = sum(dims)

    def all_paths(self) -> list[Path]:
        return [p for level in self.basis for p in level]

    def __repr__(self) -> str:
        return (
            f"QuotientBasis(dims={self.dims}, N={self.nilpotency_degree}, "
            f"dim={self.dimension})"
        )


class GradedIdeal:
    """Homogeneous two-sided ideal with per-degree row-reduced bases.

    Generators must be homogeneous of degree >= 1.  Bases are cached per
    (degree, start vertex); all queries are exact.
    """

    def __init__(
        self,
        quiver: CoveringQuiver,
        generators: Iterable[Elem],
        conductor: Optional[int] = None,
    ):
        self.quiver = quiver
        self.generators = []
        for g in generators:
            if g.is_zero():
                continue
            if g.quiver is not quiver:
                raise ValueError("generator from a different quiver")
            if not g.is_homogeneous():
                raise ValueError("generators must be homogeneous")
            if g.degree() == 0:
                raise ValueError("degree-0 generators are not allowed")
            for c in g.terms.values():
                if conductor is None:
                    conductor = c.conductor.L
                elif c.conductor.L != conductor:
                    raise ValueError("generator coefficients at mixed conductors")
            self.generators.append(g)
        self.conductor = conductor if conductor is not None else 1
        self._gens_by_degree: Dict[int, list[Elem]] = {}
        for g in self.generators:
            self._gens_by_degree.setdefault(g.degree(), []).append(g)
        # blocks[d][start] is the echelon basis of I_d . v_start
        self._blocks: Dict[int, Dict[GroupElt, EchelonBasis]] = {}
        self._quotient: Optional[QuotientBasis] = None

    @property
    def max_generator_degree(self) -> int:
        return max((g.degree() for g in self.generators), default=1)

    def default_degree_bound(self) -> int:
        return 2 * self.max_generator_degree + self.quiver.group.exponent

    # -- degree-by-degree construction ----------------------------------

    def _degree_blocks(self, d: int) -> Dict[GroupElt, EchelonBasis]:
        cached = self._blocks.get(d)
        if cached is not None:
            return cached
        blocks = {v: EchelonBasis(path_order) for v in self.quiver.vertices}
        if d >= 1:
            prev = self._degree_blocks(d - 1)
            weights = self.quiver.weights
            for s in self.quiver.vertices:
                basis = blocks[s]
                for gen in self._gens_by_degree.get(d, ()):
                    comp = gen.start_component(s)
                    if comp.terms:
                        basis.insert(dict(comp.terms))
                # Append one arrow after each end vertex of each row.
                for row in prev[s].sorted_rows():
                    by_end: Dict[GroupElt, list] = {}
                    for p, c in row.items():
                        by_end.setdefault(p.end, []).append((p, c))
                    for end in sorted(by_end, key=lambda e: e.exps):
                        part = by_end[end]
                        for fam in range(len(weights)):
                            basis.insert({p.extended(fam): c for p, c in part})
                # Prepend the arrow s -> w_fam s to rows starting there.
                for fam, w in enumerate(weights):
                    for row in prev[w * s].sorted_rows():
                        basis.insert({p.prefixed(fam): c for p, c in row.items()})
        self._blocks[d] = blocks
        return blocks

    def degree_basis(self, d: int) -> list["Elem"]:
        """Row-reduced basis of the degree-d component, canonical order."""
        blocks = self._degree_blocks(d)
        out = []
        for s in self.quiver.vertices:
            for row in blocks[s].sorted_rows():
                out.append(Elem(self.quiver, row))
        return out

    def degree_rank(self, d: int) -> int:
        return sum(b.rank for b in self._degree_blocks(d).values())

    # -- membership -------------------------------------------------------

    def reduce(self, x: Elem) -> Elem:
        """Canonical residue of x modulo the ideal (componentwise)."""
        out: Dict[Path, Cyc] = {}
        for d in x.degrees():
            comp = x.degree_component(d)
            blocks = self._degree_blocks(d)
            by_start: Dict[GroupElt, Dict[Path, Cyc]] = {}
            for p, c in comp.terms.items():
                by_start.setdefault(p.start, {})[p] = c
            for s, vec in by_start.items():
                out.update(blocks[s].reduce(vec))
        return Elem(self.quiver, out)

    def contains(self, x: Elem) -> bool:
        return self.reduce(x).is_zero()

    def path_residue(self, p: Path) -> Dict[Path, Cyc]:
        """Residue of a single path in canonical quotient coordinates."""
        blocks = self._degree_blocks(p.length)
        return blocks[p.start].reduce({p: Cyc.one(self.conductor)})

    # -- quotient ----------------------------------------------------------

    def quotient_basis(self, degree_bound: Optional[int] = None) -> QuotientBasis:
        """Per-degree complements and the nilpotency degree N.

        Raises NotNilpotentWithinBound when no degree <= bound has the
        ideal filling the whole path space.
        """
        if self._quotient is not None:
            return self._quotient
        bound = degree_bound if degree_bound is not None else self.default_degree_bound()
        if bound < 2:
            raise ValueError("degree bound must be at least 2")
        nf = self.quiver.n_families
        dims: list[int] = []
        basis: list[list[Path]] = []
        d = 0
        while True:
            blocks = self._degree_blocks(d)
            level = []
            for s in self.quiver.vertices:
                pivots = blocks[s].rows
                for fams in itertools.product(range(nf), repeat=d):
                    p = Path(self.quiver, s, fams)
                    if p not in pivots:
                        level.append(p)
            if not level:
                qb = QuotientBasis(dims, basis, d)
                self._quotient = qb
                return qb
            dims.append(len(level))
            basis.append(level)
            d += 1
            if d > bound:
                raise NotNilpotentWithinBound(bound, dims)

    def is_admissible(self, degree_bound: Optional[int] = None) -> bool:
        """Generators inside the square of the arrow ideal, finite quotient."""
        if not self.generators:
            return False
        if any(g.degree() < 2 for g in self.generators):
            return False
        try:
            self.quotient_basis(degree_bound)
        except NotNilpotentWithinBound:
            return False
        return True
