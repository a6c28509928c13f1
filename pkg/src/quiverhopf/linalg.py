"""Exact incremental Gauss-Jordan elimination over Q(zeta_L).

Vectors are sparse dicts mapping hashable column keys to nonzero Cyc
scalars.  An :class:`EchelonBasis` keeps a fully reduced row set: each row
has pivot coefficient 1, and no row's support contains another row's pivot.
Pivots are chosen as the earliest column in a caller-supplied total order,
so the non-pivot columns form the canonical (order-greedy) complement and
``reduce`` returns the canonical residue of a vector modulo the row space.
"""

from __future__ import annotations

from typing import Callable, Dict, Hashable, Iterable, Optional

from .cyclotomic import Cyc

Vec = Dict[Hashable, Cyc]


def vec_add_scaled(dst: Vec, src: Vec, scale: Cyc) -> None:
    """dst += scale * src, dropping cancelled entries."""
    if scale.is_zero():
        return
    for k, v in src.items():
        cur = dst.get(k)
        if cur is None:
            dst[k] = scale * v
        else:
            s = cur + scale * v
            if s.is_zero():
                del dst[k]
            else:
                dst[k] = s


def vec_scale(vec: Vec, scale: Cyc) -> Vec:
    return {k: scale * v for k, v in vec.items()}


class EchelonBasis:
    """Row space of inserted vectors, kept in reduced echelon form."""

    def __init__(self, order: Callable[[Hashable], object]):
        self._order = order
        self.rows: Dict[Hashable, Vec] = {}
        self._cols: Dict[Hashable, set] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> Iterable[Hashable]:
        return self.rows.keys()

    def reduce(self, vec: Vec) -> Vec:
        """Canonical residue of vec modulo the current row space."""
        out = dict(vec)
        hits = [k for k in out if k in self.rows]
        for k in hits:
            c = out.get(k)
            if c is None:
                continue
            del out[k]
            row = self.rows[k]
            for col, v in row.items():
                if col == k:
                    continue
                cur = out.get(col)
                nv = (cur - c * v) if cur is not None else -c * v
                if nv.is_zero():
                    out.pop(col, None)
                else:
                    out[col] = nv
        return out

    def insert(self, vec: Vec) -> Optional[Hashable]:
        """Add vec to the span; return its new pivot key, or None if
        already in the span."""
        res = self.reduce(vec)
        if not res:
            return None
        pivot = min(res, key=self._order)
        inv = res[pivot].inv()
        row = {k: v * inv for k, v in res.items()}
        # Jordan step: clear the new pivot column from stored rows.
        touched = self._cols.get(pivot)
        if touched:
            for rp in list(touched):
                other = self.rows[rp]
                c = other.pop(pivot)
                for col, v in row.items():
                    if col == pivot:
                        continue
                    cur = other.get(col)
                    nv = (cur - c * v) if cur is not None else -c * v
                    if nv.is_zero():
                        if col in other:
                            del other[col]
                            self._cols[col].discard(rp)
                    else:
                        if col not in other:
                            self._cols.setdefault(col, set()).add(rp)
                        other[col] = nv
            del self._cols[pivot]
        self.rows[pivot] = row
        for col in row:
            if col != pivot:
                self._cols.setdefault(col, set()).add(pivot)
        return pivot

    def contains(self, vec: Vec) -> bool:
        return not self.reduce(vec)

    def sorted_rows(self) -> list[Vec]:
        return [dict(self.rows[p]) for p in sorted(self.rows, key=self._order)]
