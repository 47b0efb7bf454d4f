"""Singular vectors in generalized Verma modules.

A vector is singular when every element of L_1 kills it.  L_1 has a basis
of weight vectors, so the kernel splits over weight blocks of T^p(V); each
block is solved separately with exact elimination.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .e510 import Element, l1_spanning, l2_spanning
from .exact import nullspace_rows
from .sl5rep import Weight, as_weight
from .verma import VermaError, VermaModule, VermaVector, format_vector

DEFAULT_DEGREE_CAP = 4


@dataclass
class SingularReport:
    lam: Weight
    degree: int
    weight_filter: Optional[Weight]
    basis: List[VermaVector] = field(default_factory=list)
    per_weight: Dict[Weight, int] = field(default_factory=dict)
    weights: List[Weight] = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def to_json_obj(self, labels=None) -> dict:
        return {
            "highest_weight": list(self.lam),
            "degree": self.degree,
            "weight_filter": list(self.weight_filter) if self.weight_filter else None,
            "dimension": self.dimension,
            "per_weight": [{"weight": list(w), "dim": d} for w, d in sorted(self.per_weight.items())],
            "basis": [{"weight": list(w), "vector": v.to_json_obj(), "text": format_vector(v, labels)}
                      for w, v in zip(self.weights, self.basis)],
        }

    def to_json(self, labels=None) -> str:
        return json.dumps(self.to_json_obj(labels), indent=2)


def _block_kernel(module: VermaModule, keys: Sequence, ys: Sequence[Element]) -> List[VermaVector]:
    col = {k: i for i, k in enumerate(keys)}
    rows: Dict[tuple, Dict[int, object]] = {}
    for k in keys:
        src = VermaVector({k: 1})
        for t, y in enumerate(ys):
            img = module.act(y, src)
            for key, c in img.terms.items():
                rows.setdefault((t, key), {})[col[k]] = c
    kernel = nullspace_rows(rows.values(), len(keys))
    out = []
    for vec in kernel:
        out.append(VermaVector({keys[i]: (int(c) if c.denominator == 1 else c) for i, c in sorted(vec.items())}))
    return out


def find_singular(lam, p: int, weight_filter=None, module: Optional[VermaModule] = None,
                  spanning: Optional[Sequence[Element]] = None,
                  degree_cap: int = DEFAULT_DEGREE_CAP) -> SingularReport:
    """Exact basis of the singular vectors of degree p (optionally of one weight)."""
    module = module if module is not None else VermaModule(lam)
    lam = module.lam
    if p < 0:
        raise VermaError("degree must be nonnegative")
    wf = as_weight(weight_filter) if weight_filter is not None else None
    if wf is None and p > degree_cap:
        raise VermaError(f"degree {p} exceeds the full-search cap {degree_cap}; pass a weight filter")
    ys = list(spanning) if spanning is not None else l1_spanning()
    blocks = module.basis_by_weight(p)
    if wf is not None:
        blocks = {wf: blocks.get(wf, [])}
    report = SingularReport(lam, p, wf)
    for w in sorted(blocks):
        ker = _block_kernel(module, blocks[w], ys) if blocks[w] else []
        report.per_weight[w] = len(ker)
        report.basis.extend(ker)
        report.weights.extend([w] * len(ker))
    return report


def _killed_by(module: VermaModule, v: VermaVector, ys) -> bool:
    return all(module.act(y, v).is_zero() for y in ys)


def is_singular(module: VermaModule, v: VermaVector) -> bool:
    return _killed_by(module, v, l1_spanning())


def is_S5_singular(module: VermaModule, v: VermaVector) -> bool:
    """Annihilated by L_2 (which generates the positive part of S(5))."""
    return _killed_by(module, v, l2_spanning())


def in_kernel_span(v: VermaVector, basis: Sequence[VermaVector]) -> bool:
    from .exact import Echelon, _integral

    index: Dict = {}

    def row(u: VermaVector):
        r = {}
        for k, c in u.terms.items():
            if k not in index:
                index[k] = len(index)
            r[index[k]] = c
        return r

    ech = Echelon()
    for b in basis:
        ech.add(row(b))
    return not ech.reduce(_integral(row(v)))
