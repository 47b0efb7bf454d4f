"""Finite-dimensional representations of sl_n (n = 5 by default).

Weights are tuples of fundamental-weight coordinates ``(a1, ..., a_{n-1})``.
Internally the Weyl group (the symmetric group) is handled through
epsilon coordinates ``e_k = a_k + ... + a_{n-1}``, so reflecting a weight
is just permuting a tuple.

Matrix conventions: ``E[i][j]`` is the matrix unit with 0-based indices,
the Borel subalgebra is upper triangular and the Cartan generators are
``h_k = E_kk - E_{k+1,k+1}``.  The fundamental coordinates of a weight are
its eigenvalues on ``h_1, ..., h_{n-1}``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import comb
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .exact import Echelon, nullspace_rows

Weight = Tuple[int, ...]

RANK = 4  # sl_5


class RepresentationError(ValueError):
    pass


def as_weight(w: Iterable[int], rank: int = RANK) -> Weight:
    w = tuple(int(a) for a in w)
    if len(w) != rank:
        raise RepresentationError(f"weight {w} must have {rank} coordinates")
    return w


def is_dominant(w: Weight) -> bool:
    return all(a >= 0 for a in w)


def _check_dominant(w: Weight) -> Weight:
    w = tuple(int(a) for a in w)
    if not is_dominant(w):
        raise RepresentationError(f"weight {list(w)} is not dominant")
    return w


def fundamental(i: int, rank: int = RANK) -> Weight:
    """omega_i, with omega_0 the zero weight."""
    return tuple(1 if k == i - 1 else 0 for k in range(rank))


def to_eps(w: Weight) -> Tuple[int, ...]:
    out = [0] * (len(w) + 1)
    for k in range(len(w) - 1, -1, -1):
        out[k] = out[k + 1] + w[k]
    return tuple(out)


def from_eps(e: Sequence[int]) -> Weight:
    return tuple(e[k] - e[k + 1] for k in range(len(e) - 1))


def add(u: Weight, v: Weight) -> Weight:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Weight, v: Weight) -> Weight:
    return tuple(a - b for a, b in zip(u, v))


def dual_weight(w: Weight) -> Weight:
    return tuple(reversed(tuple(w)))


def weyl_dim(w: Weight) -> int:
    w = _check_dominant(w)
    n = len(w) + 1
    num, den = 1, 1
    for i in range(n - 1):
        s = 0
        for j in range(i + 1, n):
            s += w[j - 1] + 1
            num *= s
            den *= j - i
    return num // den


def _inner(u: Weight, v: Weight) -> Fraction:
    # (omega_i, omega_j) = i (n - j) / n for i <= j, 1-based
    n = len(u) + 1
    total = 0
    for i, a in enumerate(u, start=1):
        if not a:
            continue
        for j, b in enumerate(v, start=1):
            if b:
                lo, hi = min(i, j), max(i, j)
                total += a * b * lo * (n - hi)
    return Fraction(total, n)


def height(w: Weight) -> Fraction:
    """(w, 2 rho); strictly increases along positive roots."""
    return 2 * _inner(w, tuple(1 for _ in w))


@lru_cache(maxsize=None)
def positive_roots(rank: int = RANK) -> Tuple[Weight, ...]:
    simple = []
    for i in range(rank):
        a = [0] * rank
        a[i] = 2
        if i > 0:
            a[i - 1] = -1
        if i < rank - 1:
            a[i + 1] = -1
        simple.append(tuple(a))
    roots = []
    for i in range(rank):
        acc = tuple(0 for _ in range(rank))
        for j in range(i, rank):
            acc = add(acc, simple[j])
            roots.append(acc)
    return tuple(roots)


def dominant_rep(w: Weight) -> Weight:
    return from_eps(sorted(to_eps(w), reverse=True))


def _sort_key(w: Weight):
    return (height(w), w)


class Character(dict):
    """Finitely supported weight -> multiplicity map."""

    def mass(self) -> int:
        return sum(self.values())

    def times(self, other: "Character") -> "Character":
        out = Character()
        for u, m in self.items():
            for v, n in other.items():
                w = add(u, v)
                out[w] = out.get(w, 0) + m * n
        return out.clean()

    def plus(self, other: Mapping[Weight, int], scale: int = 1) -> "Character":
        out = Character(self)
        for w, m in other.items():
            out[w] = out.get(w, 0) + scale * m
        return out.clean()

    def clean(self) -> "Character":
        for w in [w for w, m in self.items() if m == 0]:
            del self[w]
        return self

    def is_weyl_symmetric(self) -> bool:
        for w, m in self.items():
            e = to_eps(w)
            for i in range(len(e) - 1):
                e2 = list(e)
                e2[i], e2[i + 1] = e2[i + 1], e2[i]
                if self.get(from_eps(e2), 0) != m:
                    return False
        return True


class Decomposition(dict):
    """Dominant weight -> positive multiplicity."""

    def dim(self) -> int:
        return sum(m * weyl_dim(w) for w, m in self.items())

    def support(self) -> List[Weight]:
        return sorted(self)

    def character(self) -> Character:
        out = Character()
        for w, m in self.items():
            out = out.plus(irr_character(w), m)
        return out

    def to_json_obj(self) -> list:
        return [{"weight": list(w), "mult": m} for w, m in sorted(self.items())]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json(cls, text) -> "Decomposition":
        obj = json.loads(text) if isinstance(text, str) else text
        return cls({tuple(e["weight"]): int(e["mult"]) for e in obj})

    def dual(self) -> "Decomposition":
        return Decomposition({dual_weight(w): m for w, m in self.items()})


def _dominant_weights(hw: Weight) -> List[Weight]:
    roots = positive_roots(len(hw))
    seen = {hw}
    stack = [hw]
    while stack:
        w = stack.pop()
        for r in roots:
            u = sub(w, r)
            if is_dominant(u) and u not in seen:
                seen.add(u)
                stack.append(u)
    return sorted(seen, key=_sort_key, reverse=True)


@lru_cache(maxsize=None)
def _dominant_multiplicities(hw: Weight) -> Tuple[Tuple[Weight, int], ...]:
    """Freudenthal's recursion over the dominant weights of V(hw)."""
    rank = len(hw)
    roots = positive_roots(rank)
    rho = tuple(1 for _ in range(rank))
    hr = add(hw, rho)
    top = _inner(hr, hr)
    mult: Dict[Weight, int] = {}
    for mu in _dominant_weights(hw):
        if mu == hw:
            mult[mu] = 1
            continue
        acc = Fraction(0)
        for a in roots:
            nu = add(mu, a)
            while True:
                m = mult.get(dominant_rep(nu), 0)
                if not m:
                    break
                acc += m * _inner(nu, a)
                nu = add(nu, a)
        mr = add(mu, rho)
        val = 2 * acc / (top - _inner(mr, mr))
        if val.denominator != 1:
            raise RepresentationError(f"non-integral multiplicity at {mu}")
        if val:
            mult[mu] = int(val)
    return tuple(sorted(mult.items()))


def _orbit(w: Weight) -> List[Weight]:
    return [from_eps(p) for p in set(permutations(to_eps(w)))]


@lru_cache(maxsize=None)
def _irr_character(hw: Weight) -> Tuple[Tuple[Weight, int], ...]:
    out = {}
    for mu, m in _dominant_multiplicities(hw):
        for w in _orbit(mu):
            out[w] = m
    return tuple(sorted(out.items()))


def irr_character(hw: Weight) -> Character:
    return Character(_irr_character(_check_dominant(hw)))


def _reflect_to_dominant(w: Weight) -> Tuple[int, Optional[Weight]]:
    """Dot-action straightening: sign and dominant weight of w + rho."""
    n = len(w) + 1
    e = [x + (n - 1 - k) for k, x in enumerate(to_eps(w))]
    if len(set(e)) < n:
        return 0, None
    # sign of the sorting permutation
    sign = 1
    for i in range(n):
        for j in range(i + 1, n):
            if e[i] < e[j]:
                sign = -sign
    e.sort(reverse=True)
    return sign, from_eps([x - (n - 1 - k) for k, x in enumerate(e)])


def tensor_decompose(lam: Weight, mu: Weight) -> Decomposition:
    """Brauer-Klimyk: reflect lam + (weights of mu) into the dominant chamber."""
    lam, mu = _check_dominant(lam), _check_dominant(mu)
    if weyl_dim(lam) < weyl_dim(mu):
        lam, mu = mu, lam
    acc: Dict[Weight, int] = {}
    for nu, m in _irr_character(mu):
        sign, w = _reflect_to_dominant(add(lam, nu))
        if sign:
            acc[w] = acc.get(w, 0) + sign * m
    if any(m < 0 for m in acc.values()):
        raise RepresentationError("negative multiplicity in Brauer-Klimyk sum")
    return Decomposition({w: m for w, m in acc.items() if m})


def decompose_character(c: Mapping[Weight, int]) -> Decomposition:
    """Peel off irreducible characters, highest weight first.

    The highest weight is chosen by height with lexicographic tie-break.
    """
    rest = Character(c).clean()
    out = Decomposition()
    while rest:
        top = max(rest, key=_sort_key)
        m = rest[top]
        if m < 0 or not is_dominant(top):
            raise RepresentationError(f"not a character: remainder has {m} at {list(top)}")
        out[top] = m
        rest = rest.plus(irr_character(top), -m)
    return out


def character_of_weights(weights: Mapping[Weight, int]) -> Character:
    return Character({w: m for w, m in weights.items() if m})


def exterior_power_character(c: Mapping[Weight, int], k: int) -> Character:
    """Degree-k elementary symmetric function of the weight multiset."""
    layers: List[Dict[Weight, int]] = [{tuple(0 for _ in next(iter(c))): 1}] + [{} for _ in range(k)]
    for w, m in sorted(c.items()):
        new = [dict(layer) for layer in layers]
        for j in range(1, m + 1):
            coeff = comb(m, j)
            shift = tuple(j * a for a in w)
            for d in range(k - j, -1, -1):
                for u, cnt in layers[d].items():
                    key = add(u, shift)
                    new[d + j][key] = new[d + j].get(key, 0) + coeff * cnt
        layers = new
    return Character(layers[k]).clean()


@lru_cache(maxsize=None)
def _exterior_power(lam: Weight, k: int) -> Tuple[Tuple[Weight, int], ...]:
    ch = exterior_power_character(irr_character(lam), k)
    return tuple(sorted(decompose_character(ch).items()))


def exterior_power_decompose(lam: Weight, k: int) -> Decomposition:
    lam = _check_dominant(lam)
    d = weyl_dim(lam)
    if not 0 <= k <= d:
        raise RepresentationError(f"exterior power {k} out of range 0..{d}")
    return Decomposition(_exterior_power(lam, k))


def contains(d: Mapping[Weight, int], lam: Weight) -> bool:
    return d.get(tuple(lam), 0) >= 1


# ---------------------------------------------------------------------------
# explicit matrices


def _wedge_act(i: int, j: int, S: Tuple[int, ...]):
    """E_ij on the basis vector u_S of an exterior power; returns (sign, T)."""
    if j not in S:
        return 0, None
    if i == j:
        return 1, S
    if i in S:
        return 0, None
    rest = [s for s in S if s != j]
    T = tuple(sorted(rest + [i]))
    # sign of moving i into the slot previously holding j
    pos_j = S.index(j)
    pos_i = T.index(i)
    sign = -1 if (pos_j - pos_i) % 2 else 1
    return sign, T


@dataclass
class RepMatrices:
    """Explicit sl_n module: weight basis plus matrices of E_ij (i != j).

    ``ops[(i, j)]`` is stored column-wise: ``{col: {row: value}}``.
    ``weights[b]`` are fundamental coordinates of basis vector b.
    """

    highest_weight: Weight
    dim: int
    weights: List[Weight]
    ops: Dict[Tuple[int, int], Dict[int, Dict[int, Fraction]]]
    labels: Optional[List[str]] = None
    n: int = field(default=RANK + 1)

    def e(self, i: int, j: int) -> Dict[int, Dict[int, Fraction]]:
        """Matrix of E_ij; the diagonal units use rho(E_nn) := 0."""
        if i != j:
            return self.ops.get((i, j), {})
        out = {}
        for b, w in enumerate(self.weights):
            val = sum(w[i:])
            if val:
                out[b] = {b: val}
        return out

    def h(self, k: int) -> Dict[int, Dict[int, Fraction]]:
        """Matrix of h_{k+1} (0-based k)."""
        return {b: {b: w[k]} for b, w in enumerate(self.weights) if w[k]}

    def apply(self, mat: Dict[int, Dict[int, Fraction]], vec: Mapping[int, Fraction]) -> Dict[int, Fraction]:
        out: Dict[int, Fraction] = {}
        for b, c in vec.items():
            for r, v in mat.get(b, {}).items():
                out[r] = out.get(r, 0) + c * v
        return {k: v for k, v in out.items() if v}

    def apply_gl(self, matrix: Mapping[Tuple[int, int], object], vec: Mapping[int, Fraction]) -> Dict[int, Fraction]:
        """Apply sum M_ij rho(E_ij) for a (not necessarily traceless) M."""
        out: Dict[int, Fraction] = {}
        for (i, j), m in matrix.items():
            if not m:
                continue
            for r, v in self.apply(self.e(i, j), vec).items():
                out[r] = out.get(r, 0) + m * v
        return {k: v for k, v in out.items() if v}

    def _dense(self, mat):
        return {(r, c): v for c, col in mat.items() for r, v in col.items() if v}

    def check_relations(self) -> bool:
        """[E_ij, E_kl] = d_jk E_il - d_li E_kj for all off-diagonal pairs."""
        n = self.n
        off = [(i, j) for i in range(n) for j in range(n) if i != j]
        dense = {p: self._dense(self.e(*p)) for p in off}
        diag = {i: self._dense(self.e(i, i)) for i in range(n)}

        def mul(A, B):
            out = {}
            Bcols = {}
            for (r, c), v in B.items():
                Bcols.setdefault(r, []).append((c, v))
            for (r, c), v in A.items():
                for c2, w in Bcols.get(c, []):
                    out[(r, c2)] = out.get((r, c2), 0) + v * w
            return out

        def comb_(*terms):
            out = {}
            for s, M in terms:
                for k, v in M.items():
                    out[k] = out.get(k, 0) + s * v
            return {k: v for k, v in out.items() if v}

        def unit(i, j):
            return dense[(i, j)] if i != j else diag[i]

        for (i, j) in off:
            for (k, l) in off:
                lhs = comb_((1, mul(dense[(i, j)], dense[(k, l)])), (-1, mul(dense[(k, l)], dense[(i, j)])))
                terms = []
                if j == k:
                    terms.append((1, unit(i, l)))
                if l == i:
                    terms.append((-1, unit(k, j)))
                if lhs != comb_(*terms):
                    return False
        return True

    def weight_multiplicities(self) -> Character:
        out = Character()
        for w in self.weights:
            out[w] = out.get(w, 0) + 1
        return out


def _exterior_factor(k: int, n: int):
    return list(combinations(range(n), k))


def build_irrep(hw: Weight, budget: int = 5000) -> RepMatrices:
    """Cyclic highest-weight module inside a tensor product of exterior powers."""
    hw = _check_dominant(hw)
    n = len(hw) + 1
    d = weyl_dim(hw)
    if d > budget:
        raise RepresentationError(f"dim V({list(hw)}) = {d} exceeds budget {budget}")
    factors: List[int] = []
    for k, a in enumerate(hw, start=1):
        factors.extend([k] * a)
    top = tuple(tuple(range(k)) for k in factors)

    index: Dict[tuple, int] = {}

    def idx(t):
        if t not in index:
            index[t] = len(index)
        return index[t]

    def act(i, j, vec: Dict[int, Fraction]) -> Dict[int, Fraction]:
        out: Dict[int, Fraction] = {}
        for b, c in vec.items():
            t = rev[b]
            for pos, S in enumerate(t):
                s, T = _wedge_act(i, j, S)
                if s:
                    nt = t[:pos] + (T,) + t[pos + 1:]
                    k = idx(nt)
                    if k >= len(rev):
                        rev.append(nt)
                    out[k] = out.get(k, 0) + s * c
        return {k: v for k, v in out.items() if v}

    rev: List[tuple] = [top]
    index[top] = 0

    def wt(t) -> Weight:
        e = [0] * n
        for S in t:
            for s in S:
                e[s] += 1
        return from_eps(e)

    spaces: Dict[Weight, Echelon] = {hw: Echelon()}
    spaces[hw].add({0: 1})
    frontier = [{0: Fraction(1)}]
    while frontier:
        new_frontier = []
        for vec in frontier:
            for k in range(n - 1):
                img = act(k + 1, k, vec)
                if not img:
                    continue
                w = wt(rev[next(iter(img))])
                ech = spaces.setdefault(w, Echelon())
                if ech.add(img):
                    new_frontier.append(img)
        frontier = new_frontier

    ordered = sorted(spaces, key=_sort_key, reverse=True)
    basis: List[Dict[int, Fraction]] = []
    weights: List[Weight] = []
    pivots: Dict[Weight, List[Tuple[int, int]]] = {}
    for w in ordered:
        rows = spaces[w].reduced_rows()
        pivots[w] = []
        for c in sorted(rows):
            pivots[w].append((c, len(basis)))
            basis.append(rows[c])
            weights.append(w)
    if len(basis) != d:
        raise RepresentationError(f"built dimension {len(basis)} != Weyl dimension {d} for {list(hw)}")

    ops: Dict[Tuple[int, int], Dict[int, Dict[int, Fraction]]] = {}
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            col_map: Dict[int, Dict[int, Fraction]] = {}
            for b, vec in enumerate(basis):
                img = act(i, j, vec)
                if not img:
                    continue
                w = add(weights[b], _eps_root(i, j, n))
                coords = {}
                recon: Dict[int, Fraction] = {}
                for c, target in pivots.get(w, []):
                    val = img.get(c, 0)
                    if val:
                        coords[target] = Fraction(val)
                        for kk, vv in basis[target].items():
                            recon[kk] = recon.get(kk, 0) + val * vv
                diff = {kk: img.get(kk, 0) - recon.get(kk, 0) for kk in set(img) | set(recon)}
                if any(diff.values()):
                    raise RepresentationError("image left the cyclic submodule")
                if coords:
                    col_map[b] = coords
            ops[(i, j)] = col_map
    return RepMatrices(hw, d, weights, ops, n=n)


def _eps_root(i: int, j: int, n: int) -> Weight:
    e = [0] * n
    e[i] += 1
    e[j] -= 1
    return from_eps(e)


def rep_from_action(hw: Weight, weights: List[Weight],
                    ops: Dict[Tuple[int, int], Dict[int, Dict[int, object]]],
                    labels: Optional[List[str]] = None) -> RepMatrices:
    n = len(hw) + 1
    clean = {}
    for key, cols in ops.items():
        clean[key] = {b: {r: Fraction(v) for r, v in col.items() if v} for b, col in cols.items()}
        clean[key] = {b: col for b, col in clean[key].items() if col}
    return RepMatrices(tuple(hw), len(weights), list(weights), clean, labels=labels, n=n)


def intertwiner(src: RepMatrices, dst: RepMatrices) -> List[Dict[Tuple[int, int], Fraction]]:
    """Basis of sl_n-module maps src -> dst, as sparse {(row, col): value} matrices."""
    d1, d2 = src.dim, dst.dim
    n = src.n

    def var(r, c):
        return r * d1 + c

    rows = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            A = src.e(i, j)
            B = dst.e(i, j)
            # (X A - B X)[r, c] = sum_k X[r,k] A[k,c] - sum_k B[r,k] X[k,c]
            for r in range(d2):
                for c in range(d1):
                    eq: Dict[int, Fraction] = {}
                    for k, v in A.get(c, {}).items():
                        eq[var(r, k)] = eq.get(var(r, k), 0) + v
                    for k in range(d2):
                        v = B.get(k, {}).get(r, 0)
                        if v:
                            eq[var(k, c)] = eq.get(var(k, c), 0) - v
                    eq = {a: b for a, b in eq.items() if b}
                    if eq:
                        rows.append(eq)
    sols = nullspace_rows(rows, d1 * d2)
    return [{(k // d1, k % d1): v for k, v in s.items()} for s in sols]
