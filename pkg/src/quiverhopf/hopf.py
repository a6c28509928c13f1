"""Hopf structure on a covering-quiver path algebra.

An allowable bimodule structure is fixed by one character of the group per
arrow family: the left action is pure translation, u . (a_i, s) = (a_i, us),
while the right action twists translation by the family character,
(a_i, s) . u = chi_i(u) (a_i, su).  Vertices translate on both sides.

The comultiplication is defined on vertices and arrows,

    Delta(v_h) = sum_g v_{h g^-1} (x) v_g,
    Delta(x)   = sum_g (g.x (x) v_g  +  v_g (x) x.g),

and extended multiplicatively to longer paths; the antipode sends v_h to
v_{h^-1} and an arrow x from v_d to v_f to -f.x.d, extended as an algebra
anti-homomorphism.  Nothing beyond these generator formulas is assumed:
the axioms are verified by exact evaluation.

Every tensor term (p (x) q) of Delta applied to a path from u to v
satisfies start(p)*start(q) = u and end(p)*end(q) = v, so extending a path
by one arrow sends each tensor term to exactly two successors (the arrow
joins the left or the right factor, the latter picking up a character
value).  Delta of a path therefore unfolds with no composability searches.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from .cyclotomic import Cyc
from .groups import Character, GroupElt
from .linalg import EchelonBasis
from .path_algebra import Elem, GradedIdeal, Path, path_order, paths_of_length
from .quiver import CoveringQuiver

TensorTerms = Dict[Tuple[Path, Path], Cyc]


class BimoduleAction:
    """Right-action characters, one per arrow family; left action is
    translation."""

    def __init__(self, quiver: CoveringQuiver, characters):
        characters = tuple(characters)
        if len(characters) != quiver.n_families:
            raise ValueError("need one character per arrow family")
        for chi in characters:
            if chi.group is not quiver.group:
                raise ValueError("character on the wrong group")
        self.quiver = quiver
        self.characters = characters
        self.conductor = characters[0].conductor.L if characters else 1

    def validate(self) -> list[str]:
        """Allowability diagnostics; empty when the data is a genuine
        character tuple (values of the right orders, multiplicative)."""
        problems = []
        group = self.quiver.group
        for i, chi in enumerate(self.characters):
            for v, n in zip(chi.values, group.orders):
                if not (v ** n).is_one():
                    problems.append(
                        f"family {i + 1}: value {v} does not have order dividing {n}"
                    )
            for a in group.elements():
                for b in group.elements():
                    if chi(a * b) != chi(a) * chi(b):
                        problems.append(
                            f"family {i + 1}: not multiplicative at {a}, {b}"
                        )
                        break
                else:
                    continue
                break
        return problems

    def right_scalar(self, path: Path, u: GroupElt) -> Cyc:
        out = Cyc.one(self.conductor)
        for f in path.fams:
            out = out * self.characters[f](u)
        return out

    def right_translate(self, x: Elem, u: GroupElt) -> Elem:
        """The right action x . u (translation twisted by the characters)."""
        out: Dict[Path, Cyc] = {}
        for p, c in x.terms.items():
            out[p.translated(u)] = c * self.right_scalar(p, u)
        return Elem(x.quiver, out)


class HopfStructure:
    """Comultiplication, counit and antipode induced by an allowable
    bimodule action."""

    def __init__(self, quiver: CoveringQuiver, action: BimoduleAction):
        if action.quiver is not quiver:
            raise ValueError("action built on a different quiver")
        self.quiver = quiver
        self.action = action
        self.conductor = action.conductor
        self._one = Cyc.one(self.conductor)
        self._delta_cache: Dict[Path, TensorTerms] = {}
        self._antipode_cache: Dict[Path, Elem] = {}

    # -- structure maps ---------------------------------------------------

    def delta_path(self, p: Path) -> TensorTerms:
        cached = self._delta_cache.get(p)
        if cached is not None:
            return cached
        quiver = self.quiver
        if not p.fams:
            u = p.start
            out = {}
            for g in quiver.vertices:
                left = Path(quiver, u * g.inv(), ())
                right = Path(quiver, g, ())
                out[(left, right)] = self._one
            self._delta_cache[p] = out
            return out
        prefix = Path._make(
            quiver, p.start, p.fams[:-1], quiver.weights[p.fams[-1]].inv() * p.end
        )
        fam = p.fams[-1]
        chi = self.action.characters[fam]
        base = self.delta_path(prefix)
        out = {}
        for (a, b), c in base.items():
            # Arrow joins the left tensor factor (left translation, no
            # scalar) or the right factor (right action scalar).
            ka = (a.extended(fam), b)
            cur = out.get(ka)
            out[ka] = c if cur is None else cur + c
            kb = (a, b.extended(fam))
            cb = c * chi(a.end)
            cur = out.get(kb)
            out[kb] = cb if cur is None else cur + cb
        out = {k: v for k, v in out.items() if not v.is_zero()}
        self._delta_cache[p] = out
        return out

    def delta(self, x: Elem) -> TensorTerms:
        out: TensorTerms = {}
        for p, c in x.terms.items():
            for k, v in self.delta_path(p).items():
                cur = out.get(k)
                s = c * v if cur is None else cur + c * v
                if s.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = s
        return out

    def counit(self, x: Elem) -> Cyc:
        c = x.terms.get(Path(self.quiver, self.quiver.group.identity(), ()))
        return c if c is not None else Cyc.zero(self.conductor)

    def antipode_path(self, p: Path) -> Elem:
        """S on a single path, as the anti-multiplicative extension of
        S(v_h) = v_{h^-1} and S(arrow from v_d to v_f) = -f.arrow.d."""
        cached = self._antipode_cache.get(p)
        if cached is not None:
            return cached
        quiver = self.quiver
        out = Elem.vertex(quiver, p.start.inv(), self.conductor)
        v = p.start
        for f in p.fams:
            w = quiver.weights[f]
            img_start = v.inv() * w.inv()
            img = Elem(
                quiver,
                {Path(quiver, img_start, (f,)): -self.action.characters[f](v)},
            )
            out = out * img
            v = w * v
        self._antipode_cache[p] = out
        return out

    def antipode(self, x: Elem) -> Elem:
        out = Elem.zero(self.quiver)
        for p, c in x.terms.items():
            out = out + self.antipode_path(p).scaled(c)
        return out

    def grouplike(self, chi: Character) -> Elem:
        """e_chi = sum_g chi(g) v_g; a group-like element."""
        return Elem(
            self.quiver,
            {Path(self.quiver, g, ()): chi(g) for g in self.quiver.vertices},
        )

    def family_sum(self, fam: int) -> Elem:
        """Sum of all arrows of one family (the lift of a free generator)."""
        out = {}
        for a in self.quiver.arrows:
            if a.family == fam:
                out[Path(self.quiver, a.source, (a.family,))] = self._one
        return Elem(self.quiver, out)

    def one(self) -> Elem:
        return Elem.identity(self.quiver, self.conductor)


def tensor_mult(t1: TensorTerms, t2: TensorTerms) -> TensorTerms:
    """Product in A (x) A; t2 acts first in both factors."""
    # Bucket t1 by the start vertices both factors need to match.
    buckets: Dict[Tuple[GroupElt, GroupElt], list] = {}
    for (a1, b1), c1 in t1.items():
        buckets.setdefault((a1.start, b1.start), []).append((a1, b1, c1))
    out: TensorTerms = {}
    for (a2, b2), c2 in t2.items():
        hits = buckets.get((a2.end, b2.end))
        if not hits:
            continue
        for a1, b1, c1 in hits:
            key = (
                Path._make(a2.quiver, a2.start, a2.fams + a1.fams, a1.end),
                Path._make(b2.quiver, b2.start, b2.fams + b1.fams, b1.end),
            )
            c = c1 * c2
            cur = out.get(key)
            s = c if cur is None else cur + c
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
    return out


def tensor_bidegree(t: TensorTerms, i: int, j: int) -> TensorTerms:
    return {
        (a, b): c for (a, b), c in t.items() if a.length == i and b.length == j
    }


@dataclass
class CheckReport:
    """Outcome of an axiom or ideal verification run."""

    passed: bool
    failures: list = field(default_factory=list)
    checked: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed

    def first_failure(self):
        return self.failures[0] if self.failures else None


def verify_hopf_axioms(
    H: HopfStructure, degree_bound: Optional[int] = None, rng_seed: int = 0
) -> CheckReport:
    """Exact verification of the Hopf axioms up to a path-degree bound.

    Checks, on every path of degree <= bound: coassociativity, both counit
    laws, and both antipode laws.  Comultiplication and counit are checked
    to be algebra maps against all degree <= 1 right factors (which
    determine an algebra map out of a path algebra) plus a seeded random
    sample of longer products.  The allowability of the action is checked
    first and failures there short-circuit the run.
    """
    failures = []
    problems = H.action.validate()
    if problems:
        return CheckReport(False, [{"check": "allowability", "detail": p} for p in problems])
    if degree_bound is None:
        degree_bound = 4
    quiver = H.quiver
    L = H.conductor
    one_elem = H.one()
    paths: list[Path] = []
    for d in range(degree_bound + 1):
        paths.extend(paths_of_length(quiver, d))

    def delta_of_path_as_triple_left(p):
        out = {}
        for (a, b), c in H.delta_path(p).items():
            for (a1, a2), ca in H.delta_path(a).items():
                key = (a1, a2, b)
                cur = out.get(key)
                s = c * ca if cur is None else cur + c * ca
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return out

    def delta_of_path_as_triple_right(p):
        out = {}
        for (a, b), c in H.delta_path(p).items():
            for (b1, b2), cb in H.delta_path(b).items():
                key = (a, b1, b2)
                cur = out.get(key)
                s = c * cb if cur is None else cur + c * cb
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return out

    identity = quiver.group.identity()
    for p in paths:
        dp = H.delta_path(p)
        # counit laws
        left = Elem(quiver, {})
        right = Elem(quiver, {})
        lacc: Dict[Path, Cyc] = {}
        racc: Dict[Path, Cyc] = {}
        for (a, b), c in dp.items():
            if not a.fams and a.start == identity:
                cur = lacc.get(b)
                lacc[b] = c if cur is None else cur + c
            if not b.fams and b.start == identity:
                cur = racc.get(a)
                racc[a] = c if cur is None else cur + c
        p_elem = Elem.from_path(quiver, p, L)
        if Elem(quiver, lacc) != p_elem:
            failures.append({"check": "counit-left", "path": repr(p)})
        if Elem(quiver, racc) != p_elem:
            failures.append({"check": "counit-right", "path": repr(p)})
        # coassociativity
        if delta_of_path_as_triple_left(p) != delta_of_path_as_triple_right(p):
            failures.append({"check": "coassociativity", "path": repr(p)})
        # antipode laws
        eps_p = H.counit(p_elem)
        target = one_elem.scaled(eps_p)
        acc_l: Dict[Path, Cyc] = {}
        acc_r: Dict[Path, Cyc] = {}
        for (a, b), c in dp.items():
            for sp, sc in H.antipode_path(a).terms.items():
                if sp.start == b.end:
                    key = Path._make(quiver, b.start, b.fams + sp.fams, sp.end)
                    v = c * sc
                    cur = acc_l.get(key)
                    s = v if cur is None else cur + v
                    if s.is_zero():
                        acc_l.pop(key, None)
                    else:
                        acc_l[key] = s
            for sp, sc in H.antipode_path(b).terms.items():
                if a.start == sp.end:
                    key = Path._make(quiver, sp.start, sp.fams + a.fams, a.end)
                    v = c * sc
                    cur = acc_r.get(key)
                    s = v if cur is None else cur + v
                    if s.is_zero():
                        acc_r.pop(key, None)
                    else:
                        acc_r[key] = s
        if Elem(quiver, acc_l) != target:
            failures.append({"check": "antipode-left", "path": repr(p)})
        if Elem(quiver, acc_r) != target:
            failures.append({"check": "antipode-right", "path": repr(p)})
        if failures:
            break

    # Delta and counit as algebra maps: generator-level products, plus a
    # random sample of longer ones.
    if not failures:
        one_tensor = {
            (Path(quiver, u, ()), Path(quiver, v, ())): H._one
            for u in quiver.vertices
            for v in quiver.vertices
        }
        if H.delta(one_elem) != one_tensor:
            failures.append({"check": "delta-unit"})
        if not H.counit(one_elem).is_one():
            failures.append({"check": "counit-unit"})
    if not failures:
        short = paths_of_length(quiver, 0) + paths_of_length(quiver, 1)
        rng = random.Random(rng_seed)
        sample = [
            (rng.choice(paths), rng.choice(paths)) for _ in range(30)
        ]
        pairs = [(p, w) for p in paths for w in short if p.length + w.length <= degree_bound]
        pairs += [(w, p) for p in paths for w in short if p.length + w.length <= degree_bound]
        pairs += [pw for pw in sample if pw[0].length + pw[1].length <= 2 * degree_bound]
        for x, y in pairs:
            ex = Elem.from_path(quiver, x, L)
            ey = Elem.from_path(quiver, y, L)
            prod = ex * ey
            lhs = H.delta(prod)
            rhs = tensor_mult(H.delta(ex), H.delta(ey))
            if lhs != rhs:
                failures.append(
                    {"check": "delta-multiplicative", "x": repr(x), "y": repr(y)}
                )
                break
            if H.counit(prod) != H.counit(ex) * H.counit(ey):
                failures.append(
                    {"check": "counit-multiplicative", "x": repr(x), "y": repr(y)}
                )
                break

    return CheckReport(
        not failures,
        failures,
        {"paths_checked": len(paths), "degree_bound": degree_bound},
    )


def commutation_check(H: HopfStructure) -> CheckReport:
    """Move each family sum past each family group-like.

    For X_i the sum of family-i arrows and e_j the group-like of the
    family-j character, X_i e_j = chi_j(w_i)^-1 e_j X_i holds in the path
    algebra; the report records each identity with its scalar.
    """
    failures = []
    checked = {}
    for i, w in enumerate(H.quiver.weights):
        Xi = H.family_sum(i)
        for j, chi in enumerate(H.action.characters):
            e = H.grouplike(chi)
            scalar = chi(w).inv()
            lhs = Xi * e
            rhs = (e * Xi).scaled(scalar)
            key = f"X{i + 1}*e{j + 1}"
            checked[key] = str(scalar)
            if lhs != rhs:
                failures.append({"check": "commutation", "identity": key})
    return CheckReport(not failures, failures, checked)


def delta_mod_reduce(
    H: HopfStructure, I: GradedIdeal, r: Elem, bidegree: Tuple[int, int]
) -> TensorTerms:
    """Residue of the (i, j) component of Delta(r) modulo
    I_i (x) A_j + A_i (x) I_j.

    Both tensor factors are reduced to canonical quotient coordinates; the
    factorwise reduction has exactly the span above as kernel, so a zero
    residue is equivalent to row-reduction membership in that span.
    """
    i, j = bidegree
    deg = r.degree()
    if deg is None:
        raise ValueError("element must be homogeneous")
    if i + j != deg:
        return {}
    out: TensorTerms = {}
    cache = _residue_cache(I)
    for (a, b), c in H.delta(r).items():
        if a.length != i:
            continue
        ra = cache(a)
        if not ra:
            continue
        rb = cache(b)
        if not rb:
            continue
        for pa, ca in ra.items():
            cca = c * ca
            for pb, cb in rb.items():
                key = (pa, pb)
                v = cca * cb
                cur = out.get(key)
                s = v if cur is None else cur + v
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
    return out


def _residue_cache(I: GradedIdeal):
    cache = getattr(I, "_residue_memo", None)
    if cache is None:
        cache = {}
        I._residue_memo = cache

    def lookup(p: Path):
        r = cache.get(p)
        if r is None:
            r = I.path_residue(p)
            cache[p] = r
        return r

    return lookup


def is_hopf_ideal(
    H: HopfStructure,
    I: GradedIdeal,
    degree_bound: Optional[int] = None,
    early_exit: bool = True,
) -> CheckReport:
    """Decide whether the admissible graded ideal is a Hopf ideal.

    Checks, for every generator r: counit(r) = 0, S(r) in I, and the
    residue of every bidegree component of Delta(r) modulo
    I (x) A + A (x) I.  Generator-level checks suffice: Delta is an
    algebra map and I (x) A + A (x) I is an ideal of A (x) A, so the
    conditions propagate from generators to the whole ideal.
    """
    if not I.is_admissible(degree_bound):
        raise ValueError("ideal is not admissible")
    failures = []
    for gi, r in enumerate(sorted(I.generators, key=lambda g: g.degree())):
        if not H.counit(r).is_zero():
            failures.append({"check": "counit", "generator": gi})
            if early_exit:
                return CheckReport(False, failures)
        d = r.degree()
        for i in range(d + 1):
            res = delta_mod_reduce(H, I, r, (i, d - i))
            if res:
                witness = next(iter(sorted(res, key=lambda k: (path_order(k[0]), path_order(k[1])))))
                failures.append(
                    {
                        "check": "coproduct",
                        "generator": gi,
                        "bidegree": (i, d - i),
                        "witness": (repr(witness[0]), repr(witness[1])),
                        "residue": str(res[witness]),
                    }
                )
                if early_exit:
                    return CheckReport(False, failures)
        if not I.contains(H.antipode(r)):
            failures.append({"check": "antipode", "generator": gi})
            if early_exit:
                return CheckReport(False, failures)
    return CheckReport(not failures, failures)


def g_stability(
    H: HopfStructure, I: GradedIdeal, degree_bound: Optional[int] = None
) -> bool:
    """Left and right G-translation stability of every graded component
    up to the nilpotency degree."""
    qb = I.quotient_basis(degree_bound)
    for d in range(1, qb.nilpotency_degree):
        basis = I.degree_basis(d)
        for g in H.quiver.group.elements():
            for row in basis:
                if not I.contains(row.translated(g)):
                    return False
                if not I.contains(H.action.right_translate(row, g)):
                    return False
    return True
