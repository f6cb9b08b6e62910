"""Incremental sparse Gaussian elimination over Q or GF(p).

Vectors are dicts mapping column keys to coefficients.  Column keys can be
anything hashable; a `sort_key` callable supplies the total order used for
pivot selection (largest key is the pivot).  Basis rows are kept monic with
the pivot as their largest column, so reduction strictly decreases the
leading key and terminates.

Over Q the coefficients are Fractions; with `prime=p` set, all arithmetic
is done mod p (basis rows store ints in [0, p)).
"""

from __future__ import annotations

import heapq
from fractions import Fraction


class TriangularBasis:
    """Row-reduced spanning set supporting rank queries, membership
    reduction and (over Q) provenance tracking for exact certificates."""

    def __init__(self, sort_key, prime=None, track=False):
        self.sort_key = sort_key
        self.prime = prime
        self.track = track
        self.rows: dict = {}  # pivot column -> {column: coeff}, monic at pivot
        self.prov: dict = {}  # pivot column -> {tag: coeff over original inserts}
        self._keys: dict = {}  # memoized sort keys

    # -- ordering helpers ----------------------------------------------------

    def _key(self, col):
        k = self._keys.get(col)
        if k is None:
            k = self._keys[col] = self.sort_key(col)
        return k

    def _negkey(self, col):
        k = self._key(col)
        if isinstance(k, tuple):
            return tuple(-x if isinstance(x, int) else tuple(-y for y in x) for x in k)
        return -k

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self):
        return self.rows.keys()

    # -- core reduction --------------------------------------------------------

    def reduce(self, vec):
        """Fully reduce `vec` against the basis.

        Returns (residual, combo): residual is a dict free of pivot columns,
        combo maps pivot -> coefficient with vec = residual + sum(combo * row).
        """
        p = self.prime
        if p is not None:
            work = {}
            for col, v in vec.items():
                v %= p
                if v:
                    work[col] = v
        else:
            work = {col: v for col, v in vec.items() if v}
        heap = [(self._negkey(col), col) for col in work]
        heapq.heapify(heap)
        residual: dict = {}
        combo: dict = {}
        while heap:
            _, col = heapq.heappop(heap)
            c = work.pop(col, 0)
            if not c:
                continue
            row = self.rows.get(col)
            if row is None:
                residual[col] = c
                continue
            combo[col] = c
            # row is monic at col; subtracting c*row cancels the popped entry
            for col2, v in row.items():
                if col2 == col:
                    continue
                if p is not None:
                    nv = (work.get(col2, 0) - c * v) % p
                else:
                    nv = work.get(col2, 0) - c * v
                if nv:
                    if col2 not in work:
                        heapq.heappush(heap, (self._negkey(col2), col2))
                    work[col2] = nv
                else:
                    work.pop(col2, None)
        return residual, combo

    def contains(self, vec) -> bool:
        residual, _ = self.reduce(vec)
        return not residual

    def insert(self, vec, tag=None) -> bool:
        """Add `vec` to the span.  Returns True if it was independent."""
        residual, combo = self.reduce(vec)
        if not residual:
            return False
        pivot = max(residual, key=self._key)
        lead = residual[pivot]
        p = self.prime
        if p is not None:
            inv = pow(lead, -1, p)
            row = {col: (v * inv) % p for col, v in residual.items()}
        else:
            lead = Fraction(lead)
            row = {col: Fraction(v) / lead for col, v in residual.items()}
        self.rows[pivot] = row
        if self.track:
            if p is not None:
                raise ValueError("provenance tracking requires exact mode")
            prov = {tag: Fraction(1) / lead}
            for piv, c in combo.items():
                for t, pc in self.prov[piv].items():
                    nv = prov.get(t, 0) - Fraction(c) * pc / lead
                    if nv:
                        prov[t] = nv
                    else:
                        prov.pop(t, None)
            self.prov[pivot] = prov
        return True

    # -- certificates ------------------------------------------------------------

    def provenance_of(self, combo) -> dict:
        """Expand a reduce() combo into coefficients over original insert tags."""
        out: dict = {}
        for piv, c in combo.items():
            for t, pc in self.prov[piv].items():
                nv = out.get(t, 0) + c * pc
                if nv:
                    out[t] = nv
                else:
                    out.pop(t, None)
        return out

    def annihilator(self, free_column) -> dict:
        """Linear functional vanishing on the row span with value 1 on
        `free_column` (which must not be a pivot).  Exact mode only."""
        if self.prime is not None:
            raise ValueError("annihilator requires exact mode")
        if free_column in self.rows:
            raise ValueError("column lies under a pivot")
        lam: dict = {free_column: Fraction(1)}
        for piv in sorted(self.rows, key=self._key):
            row = self.rows[piv]
            s = Fraction(0)
            for col, v in row.items():
                if col != piv and col in lam:
                    s += v * lam[col]
            if s:
                lam[piv] = -s
        return lam


def apply_functional(lam: dict, vec: dict):
    total = Fraction(0)
    for col, v in vec.items():
        c = lam.get(col)
        if c is not None:
            total += c * v
    return total
