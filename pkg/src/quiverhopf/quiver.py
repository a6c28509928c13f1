"""Covering quivers of finite abelian groups.

For a group G and weight sequence W = (w_1, ..., w_n) the covering quiver
has a vertex v_g for every g in G and arrows (a_i, g): v_{g^-1} ->
v_{w_i g^-1}.  Vertex and arrow orderings are fixed (exponent-vector
lexicographic, then family index) so every downstream matrix layout is
reproducible.
"""

from __future__ import annotations

import json
from typing import Optional, Sequence

from .groups import FinAbGroup, GroupElt, is_weight_sequence


class Arrow:
    """The arrow (a_i, g), where i is the weight-family index."""

    __slots__ = ("family", "shift", "source", "target", "_hash")

    def __init__(self, family: int, shift: GroupElt, weight: GroupElt):
        self.family = family
        self.shift = shift
        self.source = shift.inv()
        self.target = weight * self.source
        self._hash = hash((family, shift))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Arrow)
            and self.family == other.family
            and self.shift == other.shift
        )

    def __hash__(self) -> int:
        return self._hash

    def label(self) -> str:
        return f"(a{self.family + 1}, {self.shift})"

    def __repr__(self) -> str:
        return f"Arrow{self.label()}"


class CoveringQuiver:
    """Covering quiver of (group, weights) with deterministic orderings."""

    def __init__(self, group: FinAbGroup, weights: Sequence[GroupElt]):
        if not is_weight_sequence(group, weights):
            raise ValueError("weights are not conjugation-stable")
        for w in weights:
            if w.group is not group:
                raise ValueError("weight outside the group")
        self.group = group
        self.weights = tuple(weights)
        self.vertices = group.elements()
        self.vertex_index = {v: i for i, v in enumerate(self.vertices)}
        self.arrows = [
            Arrow(i, shift, w)
            for i, w in enumerate(self.weights)
            for shift in self.vertices
        ]
        # One arrow of each family leaves every vertex: for source u take
        # shift u^-1.  Cache the lookup both ways.
        self._out: dict[tuple[GroupElt, int], Arrow] = {}
        self._in: dict[tuple[GroupElt, int], Arrow] = {}
        for a in self.arrows:
            self._out[(a.source, a.family)] = a
            self._in[(a.target, a.family)] = a

    @property
    def n_families(self) -> int:
        return len(self.weights)

    def arrow_from(self, vertex: GroupElt, family: int) -> Arrow:
        return self._out[(vertex, family)]

    def arrow_into(self, vertex: GroupElt, family: int) -> Arrow:
        return self._in[(vertex, family)]

    def out_degree(self, vertex: GroupElt) -> int:
        return sum(1 for a in self.arrows if a.source == vertex)

    def in_degree(self, vertex: GroupElt) -> int:
        return sum(1 for a in self.arrows if a.target == vertex)

    def connected_components(self) -> tuple[list[list[GroupElt]], int]:
        """Connected components (as sorted vertex lists) of the underlying
        graph, plus the index of the component containing the identity
        vertex."""
        seen: set[GroupElt] = set()
        components: list[list[GroupElt]] = []
        for start in self.vertices:
            if start in seen:
                continue
            comp = []
            stack = [start]
            seen.add(start)
            while stack:
                v = stack.pop()
                comp.append(v)
                for i, w in enumerate(self.weights):
                    for nxt in (w * v, w.inv() * v):
                        if nxt not in seen:
                            seen.add(nxt)
                            stack.append(nxt)
            components.append(sorted(comp))
        components.sort(key=lambda c: c[0].exps)
        identity = self.group.identity()
        principal = next(
            i for i, comp in enumerate(components) if identity in comp
        )
        return components, principal

    def translate_vertex(self, vertex: GroupElt, g: GroupElt) -> GroupElt:
        """Left action on vertices: g . v_f = v_{f g^-1}."""
        return vertex * g.inv()

    def to_dot(self) -> str:
        lines = ["digraph covering_quiver {"]
        for v in self.vertices:
            lines.append(f'  "v{v}";')
        for a in self.arrows:
            lines.append(
                f'  "v{a.source}" -> "v{a.target}" [label="{a.label()}"];'
            )
        lines.append("}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "group": repr(self.group),
            "weights": [repr(w) for w in self.weights],
            "vertices": [repr(v) for v in self.vertices],
            "arrows": [
                {
                    "family": a.family + 1,
                    "shift": repr(a.shift),
                    "source": repr(a.source),
                    "target": repr(a.target),
                }
                for a in self.arrows
            ],
        }


def build_covering_quiver(
    group: FinAbGroup, weights: Sequence[GroupElt]
) -> CoveringQuiver:
    return CoveringQuiver(group, weights)
