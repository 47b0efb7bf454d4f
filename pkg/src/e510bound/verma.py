"""Generalized Verma modules T(V) = U(L_-) (x) V over E(5,10).

PBW basis: divided powers ``d^(I)`` of ``d_1..d_5`` followed by an ordered
square-free product ``xi^K`` (K a sorted tuple of xi indices 0..9), tensored
with a basis vector of V.  A basis key is ``(I, K, b)``.

Straightening of ``y . d^(I) xi^K (x) v`` for a term ``y = c x^a g``:

* ``y d^(I) = sum_J d^(I-J) y_J`` with ``y_J = (-1)^|J| C(a, J) x^(a-J) g``,
  exact because the d's commute and only differentiate coefficients;
* ``y' xi_k X = [y', xi_k] X + (-1)^|y'| xi_k (y' X)``, recursively, ending
  with left multiplication (negative degree), the L_0 matrix on V (degree 0)
  or zero (positive degree on ``1 (x) v``).

The xi recursion does not depend on V; results are cached as symbolic
operators ``{None: scalar, (i, j): coefficient of rho(E_ij)}``.
"""
from __future__ import annotations

import json
import os
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import comb
from typing import Dict, Iterable, List, Optional, Tuple

from .e510 import (N, XI_PAIRS, ZERO, E510Error, Element, _term_bracket,
                   _unit, grading_degree, is_odd_gen, term_degree)
from .sl5rep import RepMatrices, Weight, add, as_weight, build_irrep, from_eps, weyl_dim

NXI = len(XI_PAIRS)
DEFAULT_BUDGET = 200_000
BUDGET_ENV = "E510BOUND_BUDGET"

Key = Tuple[Tuple[int, ...], Tuple[int, ...], int]


class BudgetExceeded(RuntimeError):
    pass


class VermaError(ValueError):
    pass


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw:
        try:
            val = int(raw)
        except ValueError:
            raise VermaError(f"{BUDGET_ENV} must be an integer, got {raw!r}")
        if val <= 0:
            raise VermaError(f"{BUDGET_ENV} must be positive")
        return val
    return DEFAULT_BUDGET


def _frac(c):
    c = Fraction(c)
    return int(c) if c.denominator == 1 else c


# PBW indices -----------------------------------------------------------------

def compositions(n: int, parts: int = N) -> List[Tuple[int, ...]]:
    """Exponent vectors of total n, in decreasing lexicographic order."""
    if parts == 1:
        return [(n,)]
    out = []
    for first in range(n, -1, -1):
        for rest in compositions(n - first, parts - 1):
            out.append((first,) + rest)
    return out


def bidegree(key: Key) -> Tuple[int, int]:
    I, K, _ = key
    return sum(I), len(K)


def pbw_degree(key: Key) -> int:
    n, m = bidegree(key)
    return 2 * n + m


def xi_label(K: Iterable[int]) -> str:
    return "".join(f"xi{XI_PAIRS[k][0] + 1}{XI_PAIRS[k][1] + 1}" for k in K)


def pbw_weight_eps(I, K) -> List[int]:
    e = [0] * N
    for i, p in enumerate(I):
        e[i] -= p
    for k in K:
        a, b = XI_PAIRS[k]
        e[a] += 1
        e[b] += 1
    return e


# symbolic straightening ------------------------------------------------------

@lru_cache(maxsize=None)
def _insert(a: int, K: Tuple[int, ...]):
    """xi_a * xi^K in PBW order: tuple of (coef, d-index or None, K')."""
    if not K:
        return ((1, None, (a,)),)
    k1 = K[0]
    if a < k1:
        return ((1, None, (a,) + K),)
    if a == k1:
        return ()
    out = []
    # xi_a xi_k1 = -xi_k1 xi_a + [xi_a, xi_k1], the bracket is central in L_-
    for (g, m), c in _term_bracket(N + a, ZERO, N + k1, ZERO):
        out.append((c, g, K[1:]))
    for c, dl, K2 in _insert(a, K[1:]):
        out.append((-c, dl, (k1,) + K2))
    return tuple(out)


def _acc(table, key, op, scale):
    slot = table.setdefault(key, {})
    for o, v in op:
        w = slot.get(o, 0) + scale * v
        if w:
            slot[o] = w
        else:
            slot.pop(o, None)
    if not slot:
        del table[key]


_ID = ((None, 1),)


@lru_cache(maxsize=None)
def _act_xi(g: int, m: Tuple[int, ...], K: Tuple[int, ...]):
    """Term x^m g applied to xi^K (x) (.), as ((I', K'), op) pairs."""
    deg = term_degree(g, m)
    table: Dict = {}
    if deg < 0:
        if not is_odd_gen(g):
            _acc(table, (_unit(g), K), _ID, 1)
        else:
            for c, dl, K2 in _insert(g - N, K):
                I2 = ZERO if dl is None else _unit(dl)
                _acc(table, (I2, K2), _ID, c)
    elif not K:
        if deg == 0:
            (i,) = [k for k in range(N) if m[k]]
            _acc(table, (ZERO, ()), (((i, g), 1),), 1)
    else:
        k1, rest = K[0], K[1:]
        for (g2, m2), c in _term_bracket(g, m, N + k1, ZERO):
            for key, op in _act_xi(g2, m2, rest):
                _acc(table, key, op, c)
        sign = -1 if is_odd_gen(g) else 1
        for (I2, K2), op in _act_xi(g, m, rest):
            for c, dl, K3 in _insert(k1, K2):
                if dl is None:
                    _acc(table, (I2, K3), op, sign * c)
                else:
                    I3 = I2[:dl] + (I2[dl] + 1,) + I2[dl + 1:]
                    _acc(table, (I3, K3), op, sign * c * I3[dl])
    return tuple((key, tuple(op.items())) for key, op in sorted(table.items(), key=lambda kv: repr(kv[0])))


def _sub_exponents(I, a):
    """All J <= min(I, a) componentwise."""
    ranges = [range(min(x, y) + 1) for x, y in zip(I, a)]
    return product(*ranges)


@lru_cache(maxsize=None)
def _act_term_pbw(g: int, m: Tuple[int, ...], I: Tuple[int, ...], K: Tuple[int, ...]):
    """x^m g . d^(I) xi^K (x) (.) as ((I', K'), op) pairs, all coefficients folded."""
    table: Dict = {}
    for J in _sub_exponents(I, m):
        cJ = (-1) ** sum(J)
        for a, j in zip(m, J):
            cJ *= comb(a, j)
        mJ = tuple(a - j for a, j in zip(m, J))
        IJ = tuple(x - j for x, j in zip(I, J))
        for (I2, K2), op in _act_xi(g, mJ, K):
            I3 = tuple(x + y for x, y in zip(IJ, I2))
            f = cJ
            for x, y in zip(I3, I2):
                f *= comb(x, y)
            _acc(table, (I3, K2), op, f)
    return tuple((key, tuple(op.items())) for key, op in table.items())


# vectors ---------------------------------------------------------------------

class VermaVector:
    """Sparse rational combination of basis keys ``(I, K, b)``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Key, object]] = None):
        self.terms: Dict[Key, object] = {}
        if terms:
            for k, v in terms.items():
                if v:
                    self.terms[k] = v

    def __add__(self, other: "VermaVector") -> "VermaVector":
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return VermaVector(out)

    def __neg__(self):
        return VermaVector({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        return VermaVector({k: c * v for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, VermaVector):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        return f"VermaVector({format_vector(self)})"

    def degrees(self) -> set:
        return {pbw_degree(k) for k in self.terms}

    def to_json_obj(self) -> list:
        out = []
        for (I, K, b), c in sorted(self.terms.items()):
            out.append({"I": list(I), "K": [[XI_PAIRS[k][0] + 1, XI_PAIRS[k][1] + 1] for k in K],
                        "v": b, "c": f"{Fraction(c).numerator}/{Fraction(c).denominator}"})
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, data) -> "VermaVector":
        pair_index = {p: k for k, p in enumerate(XI_PAIRS)}
        terms: Dict[Key, object] = {}
        for t in data:
            K = [pair_index[(a - 1, b - 1)] for a, b in t["K"]]
            if sorted(K) != K or len(set(K)) != len(K):
                raise VermaError(f"xi indices must be increasing: {t['K']}")
            key = (tuple(t["I"]), tuple(K), int(t["v"]))
            terms[key] = terms.get(key, 0) + _frac(Fraction(t["c"]))
        return cls(terms)

    @classmethod
    def from_json(cls, text: str) -> "VermaVector":
        return cls.from_json_obj(json.loads(text))


def format_vector(v: VermaVector, labels: Optional[List[str]] = None) -> str:
    if not v.terms:
        return "0"
    parts = []
    for (I, K, b), c in sorted(v.terms.items()):
        mon = []
        for i, p in enumerate(I):
            if p == 1:
                mon.append(f"d{i + 1}")
            elif p > 1:
                mon.append(f"d{i + 1}^({p})")
        if K:
            mon.append(xi_label(K))
        vb = labels[b] if labels else f"v{b}"
        body = ("*".join(mon) if mon else "1") + f"(x){vb}"
        c = Fraction(c)
        parts.append(("-" if c < 0 else "+", body if abs(c) == 1 else f"{abs(c)}*{body}"))
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


def basis_vector(I=ZERO, K=(), b=0) -> VermaVector:
    return VermaVector({(tuple(I), tuple(K), b): 1})


def xi_index(i: int, j: int) -> int:
    """0-based position of xi_ij (1-based, i < j) in the PBW order."""
    return XI_PAIRS.index((i - 1, j - 1))


def bidegree_component(v: VermaVector, n: int, m: int) -> VermaVector:
    return VermaVector({k: c for k, c in v.terms.items() if bidegree(k) == (n, m)})


def degree_component(v: VermaVector, p: int) -> VermaVector:
    return VermaVector({k: c for k, c in v.terms.items() if pbw_degree(k) == p})


def top_odd_level(v: VermaVector) -> int:
    if not v.terms:
        raise VermaError("top odd level of the zero vector is undefined")
    return max(len(K) for _, K, _ in v.terms)


# the module ------------------------------------------------------------------

class VermaModule:
    """T(V(lambda)) with an explicit realization of V."""

    def __init__(self, lam, rep: Optional[RepMatrices] = None, budget: Optional[int] = None):
        self.lam: Weight = as_weight(lam)
        self.rep = rep if rep is not None else build_irrep(self.lam)
        if tuple(self.rep.highest_weight) != self.lam:
            raise VermaError(f"representation has highest weight {self.rep.highest_weight}, not {self.lam}")
        self.budget = budget if budget is not None else default_budget()
        self._diag = [self.rep.e(i, i) for i in range(N)]
        self._basis_cache: Dict[int, List[Key]] = {}

    @property
    def dimV(self) -> int:
        return self.rep.dim

    # enumeration ---------------------------------------------------------
    def block_dim(self, n: int, m: int) -> int:
        if n < 0 or not 0 <= m <= NXI:
            return 0
        return comb(n + 4, 4) * comb(NXI, m) * self.dimV

    def degree_dim(self, p: int) -> int:
        return sum(self.block_dim(n, p - 2 * n) for n in range(p // 2 + 1))

    def enumerate_basis(self, p: int) -> List[Key]:
        if p < 0:
            raise VermaError("degree must be nonnegative")
        if p in self._basis_cache:
            return self._basis_cache[p]
        total = self.degree_dim(p)
        if total > self.budget:
            raise BudgetExceeded(f"degree {p} block has {total} basis elements, budget {self.budget}")
        out: List[Key] = []
        for n in range(p // 2 + 1):
            m = p - 2 * n
            if m > NXI:
                continue
            for I in compositions(n):
                for K in combinations(range(NXI), m):
                    for b in range(self.dimV):
                        out.append((I, K, b))
        self._basis_cache[p] = out
        return out

    def basis_by_weight(self, p: int) -> Dict[Weight, List[Key]]:
        out: Dict[Weight, List[Key]] = {}
        for key in self.enumerate_basis(p):
            out.setdefault(self.key_weight(key), []).append(key)
        return out

    def key_weight(self, key: Key) -> Weight:
        I, K, b = key
        return add(from_eps(pbw_weight_eps(I, K)), self.rep.weights[b])

    def weight_of(self, v: VermaVector) -> Weight:
        ws = {self.key_weight(k) for k in v.terms}
        if len(ws) != 1:
            raise VermaError("vector is not a weight vector" if ws else "zero vector has no weight")
        return ws.pop()

    # operator application ---------------------------------------------
    def _apply_op(self, op, b: int) -> Dict[int, object]:
        out: Dict[int, object] = {}
        for o, c in op:
            if o is None:
                out[b] = out.get(b, 0) + c
                continue
            i, j = o
            col = (self._diag[i] if i == j else self.rep.ops.get((i, j), {})).get(b)
            if col:
                for r, val in col.items():
                    out[r] = out.get(r, 0) + c * val
        return out

    def act(self, y: Element, v: VermaVector) -> VermaVector:
        """Action of a homogeneous element of L_0, L_1 or L_2."""
        if y.is_zero() or v.is_zero():
            return VermaVector()
        deg = grading_degree(y)
        if deg not in (0, 1, 2):
            raise VermaError(f"action of degree {deg} elements is not supported (use 0, 1 or 2)")
        return self._act_terms(y, v)

    def _act_terms(self, y: Element, v: VermaVector) -> VermaVector:
        out: Dict[Key, object] = {}
        for (I, K, b), cv in v.terms.items():
            for (g, m), cy in y.terms.items():
                for (I2, K2), op in _act_term_pbw(g, m, I, K):
                    for b2, c in self._apply_op(op, b).items():
                        if c:
                            key = (I2, K2, b2)
                            w = out.get(key, 0) + cv * cy * c
                            if w:
                                out[key] = w
                            else:
                                out.pop(key, None)
        return VermaVector(out)

    def multiply(self, u: Element, v: VermaVector) -> VermaVector:
        """Left multiplication by a constant element of L_- = L_-2 + L_-1."""
        for (g, m) in u.terms:
            if any(m):
                raise VermaError(f"{u} is not in L_-")
        return self._act_terms(u, v)

    def multiply_xi(self, xi_elt: Element, v: VermaVector) -> VermaVector:
        if not xi_elt.is_zero() and (xi_elt.parity != 1 or grading_degree(xi_elt) != -1):
            raise VermaError(f"{xi_elt} is not a constant odd element")
        return self.multiply(xi_elt, v)

    # random data ------------------------------------------------------
    def random_vector(self, p: int, rng, nterms: int = 6, coeff_range: int = 5) -> VermaVector:
        basis = self.enumerate_basis(p)
        v = VermaVector()
        for _ in range(nterms):
            c = rng.randint(-coeff_range, coeff_range)
            v = v + VermaVector({rng.choice(basis): c})
        return v


# Gamma filtration quotients --------------------------------------------------

class QuotientClass:
    """Element of Gamma_m / Gamma_{m-1}, stored on keys (I, K, b) with |K| = m."""

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms: Optional[Dict[Key, object]] = None):
        self.m = m
        self.terms: Dict[Key, object] = {}
        for k, c in (terms or {}).items():
            if len(k[1]) != m:
                raise VermaError(f"key {k} does not have odd level {m}")
            if c:
                self.terms[k] = c

    def __eq__(self, other):
        if not isinstance(other, QuotientClass):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def __repr__(self):
        return f"QuotientClass(m={self.m}, {format_vector(VermaVector(self.terms))})"

    def is_zero(self) -> bool:
        return not self.terms

    def lift(self) -> VermaVector:
        return VermaVector(dict(self.terms))


def project_to_quotient(v: VermaVector, m: int) -> QuotientClass:
    if v.terms and top_odd_level(v) > m:
        raise VermaError(f"vector has odd level {top_odd_level(v)} > {m}, not in Gamma_{m}")
    return QuotientClass(m, {k: c for k, c in v.terms.items() if len(k[1]) == m})


def _wedge_sort(seq: List[int]):
    """Sign and sorted tuple of a list of xi indices, or (0, None) on repeats."""
    if len(set(seq)) < len(seq):
        return 0, None
    sign = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(len(seq) - 1 - i):
            if seq[j] > seq[j + 1]:
                seq[j], seq[j + 1] = seq[j + 1], seq[j]
                sign = -sign
    return sign, tuple(seq)


def _l0_on_wedge(i: int, g: int, K: Tuple[int, ...]) -> List[Tuple[int, Tuple[int, ...]]]:
    """The field x_i d_g acting as a derivation of Lambda(s) on xi^K."""
    out = []
    for p, k in enumerate(K):
        for (g2, m2), c in _term_bracket(g, _unit(i), N + k, ZERO):
            seq = list(K)
            seq[p] = g2 - N
            s, K2 = _wedge_sort(seq)
            if s:
                out.append((s * c, K2))
    return out


def quotient_act_L2(module: VermaModule, y: Element, c: QuotientClass) -> QuotientClass:
    """Action of y in L_2 on Gamma_m/Gamma_{m-1} = U(d) (x) (Lambda^m(s) (x) V).

    Only the differentiation of the coefficients of y by the d's survives:
    first derivatives are L_0 elements acting on Lambda^m(s) (x) V, second
    derivatives are constant fields multiplying U(d).
    """
    if not y.is_zero() and (y.parity != 0 or grading_degree(y) != 2):
        raise VermaError(f"{y} is not in L_2")
    out: Dict[Key, object] = {}

    def put(key, val):
        w = out.get(key, 0) + val
        if w:
            out[key] = w
        else:
            out.pop(key, None)

    for (I, K, b), cv in c.terms.items():
        for (g, mono), cy in y.terms.items():
            for J in _sub_exponents(I, mono):
                if sum(J) not in (1, 2):
                    continue
                cJ = (-1) ** sum(J)
                for a, j in zip(mono, J):
                    cJ *= comb(a, j)
                IJ = tuple(x - j for x, j in zip(I, J))
                rest = tuple(a - j for a, j in zip(mono, J))
                coef = cv * cy * cJ
                if sum(J) == 2:
                    # constant field d_g: d^(I-J) d_g = (I-J+e_g)_g d^(I-J+e_g)
                    I2 = IJ[:g] + (IJ[g] + 1,) + IJ[g + 1:]
                    put((I2, K, b), coef * I2[g])
                    continue
                (i,) = [k for k in range(N) if rest[k]]
                for s, K2 in _l0_on_wedge(i, g, K):
                    put((IJ, K2, b), coef * s)
                col = (module._diag[i] if i == g else module.rep.ops.get((i, g), {})).get(b, {})
                for b2, val in col.items():
                    put((IJ, K, b2), coef * val)
    return QuotientClass(c.m, out)


def random_quotient_class(module: VermaModule, m: int, max_n: int, rng, nterms: int = 4) -> QuotientClass:
    terms: Dict[Key, object] = {}
    for _ in range(nterms):
        n = rng.randint(0, max_n)
        I = rng.choice(compositions(n))
        K = tuple(sorted(rng.sample(range(NXI), m)))
        b = rng.randrange(module.dimV)
        terms[(I, K, b)] = terms.get((I, K, b), 0) + rng.choice([-3, -2, -1, 1, 2, 3])
    return QuotientClass(m, terms)
