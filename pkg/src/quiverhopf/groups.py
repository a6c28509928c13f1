"""Finite abelian groups as products of cyclic factors.

Elements are reduced exponent vectors against the distinguished generators.
Characters store one root-of-unity value per distinguished generator and
evaluate multiplicatively.  Weight sequences are checked against the
general conjugation-stability definition even though it is automatic for
the abelian groups supported here.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Optional, Sequence

from .cyclotomic import Conductor, Cyc, root_of_unity


class FinAbGroup:
    """Direct product Z_{n_1} x ... x Z_{n_k} with distinguished generators."""

    __slots__ = ("orders", "_elements")

    _instances: dict[tuple[int, ...], "FinAbGroup"] = {}

    def __new__(cls, orders: Sequence[int]) -> "FinAbGroup":
        key = tuple(int(n) for n in orders)
        inst = cls._instances.get(key)
        if inst is not None:
            return inst
        if not key or any(n < 1 for n in key):
            raise ValueError("factor orders must be positive integers")
        inst = object.__new__(cls)
        inst.orders = key
        inst._elements = None
        cls._instances[key] = inst
        return inst

    @staticmethod
    def parse(text: str) -> "FinAbGroup":
        """Parse group names of the form 'Z4' or 'Z2xZ4'."""
        parts = text.strip().split("x")
        orders = []
        for p in parts:
            m = re.fullmatch(r"[Zz](\d+)", p.strip())
            if not m:
                raise ValueError(f"cannot parse group factor {p!r}")
            orders.append(int(m.group(1)))
        return FinAbGroup(orders)

    @property
    def order(self) -> int:
        return math.prod(self.orders)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.orders)

    @property
    def rank(self) -> int:
        return len(self.orders)

    def identity(self) -> "GroupElt":
        return GroupElt(self, (0,) * len(self.orders))

    def element(self, exps: Sequence[int]) -> "GroupElt":
        return GroupElt(self, exps)

    def generator(self, i: int) -> "GroupElt":
        exps = [0] * len(self.orders)
        exps[i] = 1
        return GroupElt(self, exps)

    def elements(self) -> list["GroupElt"]:
        """All elements in lexicographic exponent order."""
        if self._elements is None:
            out = []
            exps = [0] * len(self.orders)
            while True:
                out.append(GroupElt(self, exps))
                for i in range(len(exps) - 1, -1, -1):
                    exps[i] += 1
                    if exps[i] < self.orders[i]:
                        break
                    exps[i] = 0
                else:
                    break
            out.sort(key=lambda e: e.exps)
            self._elements = out
        return self._elements

    def characters(self, conductor: int) -> list["Character"]:
        """All characters, with values embedded at the given conductor.

        The conductor must be divisible by every factor order.
        """
        for n in self.orders:
            if conductor % n != 0:
                raise ValueError(
                    f"conductor {conductor} does not admit order-{n} values"
                )
        out = []
        for elt in self.elements():
            values = [
                root_of_unity(conductor, (conductor // n) * k)
                for n, k in zip(self.orders, elt.exps)
            ]
            out.append(Character(self, values))
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, FinAbGroup) and self.orders == other.orders

    def __hash__(self) -> int:
        return hash(self.orders)

    def __repr__(self) -> str:
        return "x".join(f"Z{n}" for n in self.orders)


class GroupElt:
    """Element of a FinAbGroup as a reduced exponent vector."""

    __slots__ = ("group", "exps", "_hash")

    def __init__(self, group: FinAbGroup, exps: Sequence[int]):
        if len(exps) != len(group.orders):
            raise ValueError("exponent vector length mismatch")
        self.group = group
        self.exps = tuple(e % n for e, n in zip(exps, group.orders))
        self._hash = hash((group.orders, self.exps))

    @staticmethod
    def parse(group: FinAbGroup, text: str) -> "GroupElt":
        """Parse exponent tuples of the form '(1,0)' or '(2)'."""
        m = re.fullmatch(r"\(([^)]*)\)", text.strip())
        if not m:
            raise ValueError(f"cannot parse group element {text!r}")
        body = m.group(1).strip()
        exps = [int(t) for t in body.split(",")] if body else []
        return GroupElt(group, exps)

    def _check(self, other: "GroupElt") -> None:
        if self.group is not other.group:
            raise ValueError("elements of different groups")

    def __mul__(self, other: "GroupElt") -> "GroupElt":
        self._check(other)
        return GroupElt(self.group, [a + b for a, b in zip(self.exps, other.exps)])

    def inv(self) -> "GroupElt":
        return GroupElt(self.group, [-a for a in self.exps])

    def __pow__(self, n: int) -> "GroupElt":
        return GroupElt(self.group, [a * n for a in self.exps])

    def order(self) -> int:
        return math.lcm(
            *[n // math.gcd(n, e) if e else 1 for e, n in zip(self.exps, self.group.orders)]
        )

    def is_identity(self) -> bool:
        return not any(self.exps)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupElt)
            and self.group is other.group
            and self.exps == other.exps
        )

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "GroupElt") -> bool:
        self._check(other)
        return self.exps < other.exps

    def __repr__(self) -> str:
        return "(" + ",".join(str(e) for e in self.exps) + ")"


def subgroup_generated(
    group: FinAbGroup, elts: Iterable[GroupElt]
) -> tuple[list[GroupElt], list[GroupElt]]:
    """Closure of the given elements, plus coset representatives.

    Returns (members of the subgroup N, coset representatives of G/N),
    both sorted; the identity represents N itself.
    """
    gens = list(elts)
    for g in gens:
        if g.group is not group:
            raise ValueError("generator outside the ambient group")
    members = {group.identity()}
    frontier = [group.identity()]
    while frontier:
        cur = frontier.pop()
        for g in gens:
            for nxt in (cur * g, cur * g.inv()):
                if nxt not in members:
                    members.add(nxt)
                    frontier.append(nxt)
    subgroup = sorted(members)
    seen: set[GroupElt] = set()
    reps = []
    for e in group.elements():
        if e in seen:
            continue
        reps.append(e)
        for n in subgroup:
            seen.add(e * n)
    return subgroup, reps


def is_weight_sequence(group: FinAbGroup, weights: Sequence[GroupElt]) -> bool:
    """Conjugation-permutation stability of the sequence.

    For each g the conjugated sequence must agree with the original up to
    a permutation; over an abelian group this always holds, but the check
    follows the general definition.
    """
    base = sorted(weights)
    for g in group.elements():
        conj = sorted(g * w * g.inv() for w in weights)
        if conj != base:
            return False
    return True


def parse_weights(group: FinAbGroup, text: str) -> tuple[GroupElt, ...]:
    """Parse weight sequences like '(1,0),(0,1)'."""
    parts = re.findall(r"\([^)]*\)", text)
    if not parts:
        raise ValueError(f"cannot parse weights {text!r}")
    return tuple(GroupElt.parse(group, p) for p in parts)


class Character:
    """Group homomorphism into the roots of unity of Q(zeta_L)."""

    __slots__ = ("group", "values", "conductor", "_powers")

    def __init__(self, group: FinAbGroup, values: Sequence[Cyc], check: bool = True):
        if len(values) != group.rank:
            raise ValueError("need one value per distinguished generator")
        cond = values[0].conductor if values else Conductor(1)
        self.group = group
        self.values = tuple(values)
        self.conductor = cond
        if check:
            for v, n in zip(self.values, group.orders):
                if v.conductor is not cond:
                    raise ValueError("character values at mixed conductors")
                if not (v ** n).is_one():
                    raise ValueError(
                        f"value {v} is not an order-{n} root of unity"
                    )
        # Power tables make evaluation a few lookups and multiplies.
        self._powers = []
        for v, n in zip(self.values, group.orders):
            row = [Cyc.one(cond.L)]
            for _ in range(n - 1):
                row.append(row[-1] * v)
            self._powers.append(row)

    @staticmethod
    def from_weight_values(
        group: FinAbGroup,
        weights: Sequence[GroupElt],
        values: Sequence[Cyc],
    ) -> "Character":
        """Character determined by its values on a generating weight pair.

        Raises if the assignment is inconsistent with the relations among
        the weights, or if the weights do not generate the group.
        """
        if len(weights) != len(values):
            raise ValueError("need one value per weight")
        table: dict[GroupElt, Cyc] = {}
        ranges = [range(w.order()) for w in weights]

        def fill(idx: int, elt: GroupElt, val: Cyc) -> None:
            if idx == len(weights):
                prev = table.get(elt)
                if prev is None:
                    table[elt] = val
                elif prev != val:
                    raise ValueError(
                        "values are inconsistent with the relations among the weights"
                    )
                return
            cur_e = elt
            cur_v = val
            for _ in ranges[idx]:
                fill(idx + 1, cur_e, cur_v)
                cur_e = cur_e * weights[idx]
                cur_v = cur_v * values[idx]

        one = Cyc.one(values[0].conductor.L) if values else Cyc.one(1)
        fill(0, group.identity(), one)
        if len(table) != group.order:
            raise ValueError("weights do not generate the group")
        gen_values = [table[group.generator(i)] for i in range(group.rank)]
        return Character(group, gen_values)

    def __call__(self, g: GroupElt) -> Cyc:
        if g.group is not self.group:
            raise ValueError("element outside the character's group")
        out = Cyc.one(self.conductor.L)
        for i, e in enumerate(g.exps):
            if e:
                out = out * self._powers[i][e]
        return out

    def __mul__(self, other: "Character") -> "Character":
        if other.group is not self.group:
            raise ValueError("characters on different groups")
        return Character(
            self.group, [a * b for a, b in zip(self.values, other.values)], check=False
        )

    def inv(self) -> "Character":
        return Character(self.group, [v.inv() for v in self.values], check=False)

    def is_trivial(self) -> bool:
        return all(v.is_one() for v in self.values)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Character)
            and self.group is other.group
            and self.values == other.values
        )

    def __hash__(self) -> int:
        return hash((self.group.orders, self.values))

    def __repr__(self) -> str:
        return "Character(" + ", ".join(str(v) for v in self.values) + ")"
