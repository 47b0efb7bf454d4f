"""Exact sparse linear algebra over the rationals.

Rows are reduced fraction-free: every stored row is a primitive integer
vector (content 1, positive pivot), so coefficient growth stays bounded by
the gcd normalisation instead of by accumulated denominators.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, List, Mapping, Optional

Rational = Fraction


class SparseVector:
    """Index -> Fraction map of fixed dimension with no stored zeros."""

    __slots__ = ("entries", "dim")

    def __init__(self, entries: Optional[Mapping[int, object]] = None, dim: int = 0):
        self.dim = dim
        self.entries: Dict[int, Fraction] = {}
        if entries:
            for k, v in entries.items():
                if not 0 <= k < dim:
                    raise IndexError(f"index {k} outside dimension {dim}")
                if v:
                    self.entries[k] = Fraction(v)

    @classmethod
    def from_list(cls, values: Iterable) -> "SparseVector":
        values = list(values)
        return cls({i: v for i, v in enumerate(values) if v}, len(values))

    def to_list(self) -> List[Fraction]:
        out = [Fraction(0)] * self.dim
        for k, v in self.entries.items():
            out[k] = v
        return out

    def is_zero(self) -> bool:
        return not self.entries

    def __getitem__(self, i: int) -> Fraction:
        return self.entries.get(i, Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, SparseVector):
            return NotImplemented
        return self.dim == other.dim and self.entries == other.entries

    def __repr__(self):
        return f"SparseVector({dict(sorted(self.entries.items()))}, dim={self.dim})"


class SparseMatrix:
    """Row-major sparse matrix with Fraction entries."""

    def __init__(self, nrows: int, ncols: int, rows: Optional[Mapping[int, Mapping[int, object]]] = None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows: Dict[int, Dict[int, Fraction]] = {}
        if rows:
            for r, row in rows.items():
                for c, v in row.items():
                    self[r, c] = v

    @classmethod
    def from_dense(cls, data) -> "SparseMatrix":
        data = [list(r) for r in data]
        ncols = len(data[0]) if data else 0
        m = cls(len(data), ncols)
        for i, r in enumerate(data):
            if len(r) != ncols:
                raise ValueError("ragged matrix")
            for j, v in enumerate(r):
                if v:
                    m[i, j] = v
        return m

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, {i: {i: 1} for i in range(n)})

    def __setitem__(self, key, value):
        r, c = key
        if not (0 <= r < self.nrows and 0 <= c < self.ncols):
            raise IndexError(f"entry {key} outside {self.nrows}x{self.ncols}")
        value = Fraction(value)
        row = self.rows.setdefault(r, {})
        if value:
            row[c] = value
        else:
            row.pop(c, None)
            if not row:
                del self.rows[r]

    def __getitem__(self, key) -> Fraction:
        r, c = key
        return self.rows.get(r, {}).get(c, Fraction(0))

    def apply(self, v: SparseVector) -> SparseVector:
        if v.dim != self.ncols:
            raise ValueError(f"dimension mismatch: {self.ncols} columns, vector of dim {v.dim}")
        out = {}
        for r, row in self.rows.items():
            s = sum((c * v.entries[k] for k, c in row.items() if k in v.entries), Fraction(0))
            if s:
                out[r] = s
        return SparseVector(out, self.nrows)


def _primitive(row: Dict[int, int]) -> Dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g != 1:
        row = {k: v // g for k, v in row.items()}
    return row


def _integral(row: Mapping[int, object]) -> Dict[int, int]:
    """Scale a rational row to a primitive integer row."""
    fr = {k: Fraction(v) for k, v in row.items() if v}
    if not fr:
        return {}
    den = 1
    for v in fr.values():
        den = lcm(den, v.denominator)
    return _primitive({k: int(v * den) for k, v in fr.items()})


class Echelon:
    """Incremental fraction-free row echelon form with leftmost pivots.

    Rows are added one at a time; ``add`` returns True when the row was
    independent of the rows already present.
    """

    def __init__(self):
        self.pivots: Dict[int, Dict[int, int]] = {}

    def reduce(self, row: Dict[int, int]) -> Dict[int, int]:
        row = dict(row)
        while row:
            c = min(row)
            p = self.pivots.get(c)
            if p is None:
                return row
            a, b = row[c], p[c]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {k: b * v for k, v in row.items()}
            for k, v in p.items():
                w = new.get(k, 0) - a * v
                if w:
                    new[k] = w
                else:
                    new.pop(k, None)
            row = _primitive(new) if new else new
        return row

    def add(self, row: Mapping[int, object]) -> bool:
        r = self.reduce(_integral(row))
        if not r:
            return False
        r = _primitive(r)
        self.pivots[min(r)] = r
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduced_rows(self) -> Dict[int, Dict[int, Fraction]]:
        """Reduced row echelon form, pivot entry 1, keyed by pivot column."""
        cols = sorted(self.pivots, reverse=True)
        done: Dict[int, Dict[int, Fraction]] = {}
        for c in cols:
            row = {k: Fraction(v, self.pivots[c][c]) for k, v in self.pivots[c].items()}
            for c2 in list(row):
                if c2 != c and c2 in done:
                    f = row[c2]
                    for k, v in done[c2].items():
                        w = row.get(k, 0) - f * v
                        if w:
                            row[k] = w
                        else:
                            row.pop(k, None)
            done[c] = row
        return done


def _echelon_of(M: SparseMatrix) -> Echelon:
    ech = Echelon()
    for r in sorted(M.rows):
        ech.add(M.rows[r])
    return ech


def rank(M: SparseMatrix) -> int:
    return _echelon_of(M).rank


def nullspace(M: SparseMatrix) -> List[SparseVector]:
    """Kernel basis in reduced echelon form, one vector per free column.

    The vector attached to free column ``f`` has a 1 at ``f`` and zeros at
    every other free column.
    """
    rref = _echelon_of(M).reduced_rows()
    pivot_cols = set(rref)
    basis = []
    for f in range(M.ncols):
        if f in pivot_cols:
            continue
        v = {f: Fraction(1)}
        for c, row in rref.items():
            if f in row:
                v[c] = -row[f]
        basis.append(SparseVector(v, M.ncols))
    return basis


def nullspace_rows(rows: Iterable[Mapping[int, object]], ncols: int) -> List[Dict[int, Fraction]]:
    """Kernel of the matrix whose rows are given as sparse dicts; returns dicts."""
    ech = Echelon()
    for r in rows:
        if r:
            ech.add(r)
    rref = ech.reduced_rows()
    basis = []
    for f in range(ncols):
        if f in rref:
            continue
        v = {f: Fraction(1)}
        for c, row in rref.items():
            if f in row:
                v[c] = -row[f]
        basis.append(v)
    return basis


def in_span(v: SparseVector, basis: List[SparseVector]) -> bool:
    for b in basis:
        if b.dim != v.dim:
            raise ValueError(f"dimension mismatch: {b.dim} vs {v.dim}")
    if v.is_zero():
        return True
    ech = Echelon()
    for b in basis:
        ech.add(b.entries)
    return not ech.reduce(_integral(v.entries))


def span_rank(vectors: Iterable[Mapping[int, object]]) -> int:
    ech = Echelon()
    for v in vectors:
        if v:
            ech.add(v)
    return ech.rank
