"""Finite checks for the pseudoalgebras W(d), S(d) with d abelian of rank 5.

H = U(d) with divided-power basis d^(I); X = H* with dual basis x_I, which
multiplies as x_I x_J = x_{I+J}, so X is a polynomial ring in x^1..x^5 and
d_i acts on it (on either side) as -d/dx^i.  Only finitely supported
elements of X are used.

The annihilation algebra of W(d) is X (x) d; its elements are stored as maps
``(I, k) -> coefficient`` for ``x_I (x) d_k``.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import product
from math import comb
from typing import Dict, Iterable, List, Optional, Tuple

RANK = 5
Multi = Tuple[int, ...]
ZERO: Multi = (0,) * RANK


def unit(i: int) -> Multi:
    return tuple(1 if k == i else 0 for k in range(RANK))


def _madd(a: Multi, b: Multi) -> Multi:
    return tuple(x + y for x, y in zip(a, b))


def _msub(a: Multi, b: Multi) -> Optional[Multi]:
    d = tuple(x - y for x, y in zip(a, b))
    return d if min(d) >= 0 else None


def mcomb(a: Multi, b: Multi) -> int:
    out = 1
    for x, y in zip(a, b):
        out *= comb(x, y)
    return out


def splittings(I: Multi) -> Iterable[Tuple[Multi, Multi]]:
    for J in product(*[range(k + 1) for k in I]):
        yield J, tuple(x - y for x, y in zip(I, J))


def _put(d: dict, key, val):
    w = d.get(key, 0) + val
    if w:
        d[key] = w
    else:
        d.pop(key, None)


class _Sparse:
    __slots__ = ("c",)

    def __init__(self, c=None):
        self.c = {k: v for k, v in (c or {}).items() if v}

    def __add__(self, other):
        out = dict(self.c)
        for k, v in other.c.items():
            _put(out, k, v)
        return type(self)(out)

    def __neg__(self):
        return type(self)({k: -v for k, v in self.c.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        return type(self)({k: s * v for k, v in self.c.items()})

    def __eq__(self, other):
        return type(self) is type(other) and self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def __repr__(self):
        return f"{type(self).__name__}({dict(sorted(self.c.items()))})"


# Hopf algebra H -------------------------------------------------------------

class HElement(_Sparse):
    """Element of U(d) in the divided-power basis."""

    @classmethod
    def basis(cls, I: Multi) -> "HElement":
        return cls({tuple(I): 1})

    @classmethod
    def d(cls, i: int) -> "HElement":
        return cls({unit(i): 1})

    @classmethod
    def one(cls) -> "HElement":
        return cls({ZERO: 1})

    def __mul__(self, other: "HElement") -> "HElement":
        out: Dict[Multi, object] = {}
        for I, a in self.c.items():
            for J, b in other.c.items():
                K = _madd(I, J)
                _put(out, K, a * b * mcomb(K, I))
        return HElement(out)


def coproduct(h: HElement) -> List[Tuple[HElement, HElement]]:
    out = []
    for I, c in sorted(h.c.items()):
        for J, K in splittings(I):
            out.append((HElement({J: c}), HElement.basis(K)))
    return out


def coproduct_dict(h: HElement) -> Dict[Tuple[Multi, Multi], object]:
    out: Dict[Tuple[Multi, Multi], object] = {}
    for I, c in h.c.items():
        for J, K in splittings(I):
            _put(out, (J, K), c)
    return out


def counit(h: HElement):
    return h.c.get(ZERO, 0)


def antipode(h: HElement) -> HElement:
    return HElement({I: (-1) ** sum(I) * c for I, c in h.c.items()})


# dual X ----------------------------------------------------------------------

class XElement(_Sparse):
    """Finitely supported element of X in the basis x_I."""

    @classmethod
    def basis(cls, I: Multi) -> "XElement":
        return cls({tuple(I): 1})

    def __mul__(self, other: "XElement") -> "XElement":
        out: Dict[Multi, object] = {}
        for I, a in self.c.items():
            for J, b in other.c.items():
                _put(out, _madd(I, J), a * b)
        return XElement(out)

    def partial(self, i: int) -> "XElement":
        """d/dx^i."""
        out = {}
        for I, a in self.c.items():
            if I[i]:
                _put(out, _msub(I, unit(i)), a * I[i])
        return XElement(out)

    def min_degree(self) -> int:
        return min(sum(I) for I in self.c)


def pair(x: XElement, h: HElement):
    return sum((a * h.c.get(I, 0) for I, a in x.c.items()), 0)


def h_actions_on_X(h: HElement, x: XElement, side: str = "left") -> XElement:
    """<hx, f> = <x, S(h) f> and <xh, f> = <x, f S(h)>; equal since H is commutative."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    out: Dict[Multi, object] = {}
    for A, a in h.c.items():
        s = (-1) ** sum(A)
        for B, b in x.c.items():
            C = _msub(B, A)
            if C is not None:
                _put(out, C, s * a * b * mcomb(B, A))
    return XElement(out)


# W(d) and pseudotensors ------------------------------------------------------

class WdElement:
    """sum_k h_k (x) d_k in H (x) d."""

    __slots__ = ("h",)

    def __init__(self, h: Optional[List[HElement]] = None):
        self.h = list(h) if h is not None else [HElement() for _ in range(RANK)]
        if len(self.h) != RANK:
            raise ValueError(f"expected {RANK} components")

    @classmethod
    def gen(cls, k: int, f: Optional[HElement] = None) -> "WdElement":
        h = [HElement() for _ in range(RANK)]
        h[k] = f if f is not None else HElement.one()
        return cls(h)

    def __add__(self, other):
        return WdElement([a + b for a, b in zip(self.h, other.h)])

    def __neg__(self):
        return WdElement([-a for a in self.h])

    def __sub__(self, other):
        return self + (-other)

    def lmul(self, f: HElement) -> "WdElement":
        return WdElement([f * a for a in self.h])

    def __eq__(self, other):
        return isinstance(other, WdElement) and all(a == b for a, b in zip(self.h, other.h))

    def is_zero(self):
        return all(a.is_zero() for a in self.h)

    def __repr__(self):
        return "WdElement(" + ", ".join(f"{k}:{a.c}" for k, a in enumerate(self.h) if a.c) + ")"


def div_pseudo(w: WdElement) -> HElement:
    out = HElement()
    for k, hk in enumerate(w.h):
        out = out + hk * HElement.d(k)
    return out


def sab(a: int, b: int) -> WdElement:
    """s_ab = a (x) b - b (x) a for basis vectors d_a, d_b (abelian d)."""
    return WdElement.gen(b, HElement.d(a)) - WdElement.gen(a, HElement.d(b))


class PseudoTensor(_Sparse):
    """Element of (H (x) H) (x)_H W(d), stored as (A, B, i) -> c for
    (d^(A) (x) d^(B)) (x)_H (1 (x) d_i); unique because W(d) is free."""

    @classmethod
    def make(cls, f: HElement, g: HElement, target: WdElement) -> "PseudoTensor":
        """(f (x) g) (x)_H target, pushing the H-coefficients of target across."""
        out: Dict = {}
        for i, hi in enumerate(target.h):
            for (J, K), c in coproduct_dict(hi).items():
                for A, a in f.c.items():
                    for B, b in g.c.items():
                        A2, B2 = _madd(A, J), _madd(B, K)
                        _put(out, (A2, B2, i), c * a * b * mcomb(A2, A) * mcomb(B2, B))
        return cls(out)

    def sigma(self) -> "PseudoTensor":
        return PseudoTensor({(B, A, i): c for (A, B, i), c in self.c.items()})

    def times(self, f: HElement, g: HElement) -> "PseudoTensor":
        """((f (x) g) (x)_H 1) applied to self."""
        out: Dict = {}
        for (A, B, i), c in self.c.items():
            for F, a in f.c.items():
                for G, b in g.c.items():
                    A2, B2 = _madd(A, F), _madd(B, G)
                    _put(out, (A2, B2, i), c * a * b * mcomb(A2, A) * mcomb(B2, B))
        return PseudoTensor(out)

    def right_normalized(self) -> Dict[Tuple[Multi, Multi, int], object]:
        """Coordinates (A, B, i) of (d^(A) (x) 1) (x)_H d^(B) d_i, via
        (f (x) g) (x)_H e = (f S(g_(1)) (x) 1) (x)_H g_(2) e."""
        out: Dict = {}
        for (A, B, i), c in self.c.items():
            for J, K in splittings(B):
                A2 = _madd(A, J)
                _put(out, (A2, K, i), c * (-1) ** sum(J) * mcomb(A2, A))
        return out

    @classmethod
    def from_right_normalized(cls, coords: Dict[Tuple[Multi, Multi, int], object]) -> "PseudoTensor":
        out = PseudoTensor()
        for (A, B, i), c in coords.items():
            out = out + cls.make(HElement({A: c}), HElement.one(), WdElement.gen(i, HElement.basis(B)))
        return out


def wd_pseudobracket(u: WdElement, v: WdElement) -> PseudoTensor:
    """[(f (x) a) * (g (x) b)] = -(f (x) g a) (x)_H (1 (x) b) + (f b (x) g) (x)_H (1 (x) a)."""
    out = PseudoTensor()
    for a, f in enumerate(u.h):
        if f.is_zero():
            continue
        for b, g in enumerate(v.h):
            if g.is_zero():
                continue
            out = out - PseudoTensor.make(f, g * HElement.d(a), WdElement.gen(b))
            out = out + PseudoTensor.make(f * HElement.d(b), g, WdElement.gen(a))
    return out


# annihilation algebra --------------------------------------------------------

class AnnElement(_Sparse):
    """Element of X (x) d: (I, k) -> c for x_I (x) d_k."""

    @classmethod
    def make(cls, x: XElement, k: int) -> "AnnElement":
        return cls({(I, k): c for I, c in x.c.items()})

    def component(self, k: int) -> XElement:
        return XElement({I: c for (I, kk), c in self.c.items() if kk == k})

    def components(self) -> List[XElement]:
        return [self.component(k) for k in range(RANK)]


def ann_of(x: XElement, a: WdElement) -> AnnElement:
    """x (x)_H a in X (x) d: x (x)_H (h (x) d_k) = x h (x) d_k."""
    out = AnnElement()
    for k, hk in enumerate(a.h):
        if not hk.is_zero():
            out = out + AnnElement.make(h_actions_on_X(hk, x, "right"), k)
    return out


def annihilation_bracket(A: AnnElement, B: AnnElement) -> AnnElement:
    """[x (x) a, y (x) b] = -x(y a) (x) b + (x b) y (x) a  (d abelian)."""
    out = AnnElement()
    Ac, Bc = A.components(), B.components()
    for a in range(RANK):
        if Ac[a].is_zero():
            continue
        for b in range(RANK):
            if Bc[b].is_zero():
                continue
            x, y = Ac[a], Bc[b]
            ya = h_actions_on_X(HElement.d(a), y, "right")
            xb = h_actions_on_X(HElement.d(b), x, "right")
            out = out - AnnElement.make(x * ya, b) + AnnElement.make(xb * y, a)
    return out


def annihilation_from_pseudo(x: XElement, u: WdElement, y: XElement, v: WdElement) -> AnnElement:
    """[x (x)_H u, y (x)_H v] = sum (x f_i)(y g_i) (x)_H l_i over [u * v]."""
    out = AnnElement()
    for (F, G, i), c in wd_pseudobracket(u, v).c.items():
        xf = h_actions_on_X(HElement.basis(F), x, "right")
        yg = h_actions_on_X(HElement.basis(G), y, "right")
        out = out + AnnElement.make((xf * yg).scale(c), i)
    return out


def ann_div(A: AnnElement) -> XElement:
    out = XElement()
    for k, y in enumerate(A.components()):
        if not y.is_zero():
            out = out + h_actions_on_X(HElement.d(k), y, "right")
    return out


def act_on_X(A: AnnElement, y: XElement) -> XElement:
    """(x (x) a) y = -x (y a)."""
    out = XElement()
    for k, x in enumerate(A.components()):
        if not x.is_zero():
            out = out - x * h_actions_on_X(HElement.d(k), y, "right")
    return out


def iota(x: XElement, a: int, b: int) -> AnnElement:
    """iota(x (x)_H s_ab) = x d_a (x) d_b - x d_b (x) d_a."""
    return ann_of(x, sab(a, b))


def filtration_degree(A: AnnElement, algebra: str = "W") -> int:
    """Largest p with A in W_p = F_p X (x) d (F_p X = span{x_I : |I| > p}).

    For S the element must be divergence free; S_p corresponds to
    S-bar intersected with W_p.
    """
    if A.is_zero():
        raise ValueError("filtration degree of 0 is undefined")
    if algebra not in ("W", "S"):
        raise ValueError(f"unknown algebra {algebra!r}")
    if algebra == "S" and not ann_div(A).is_zero():
        raise ValueError("element is not divergence free, so not in the image of S")
    return min(sum(I) for (I, _) in A.c) - 1


def s_generator_degree(x: XElement) -> int:
    """Filtration degree of x (x)_H s_ab in S, read from x: S_p = F_{p+1} X (x)_H L_0."""
    return x.min_degree() - 2


# polynomial vector fields in t ---------------------------------------------------

class TField(_Sparse):
    """Polynomial vector field sum f_i d/dt_i: (i, mono) -> c."""

    def truncate(self, degree: int) -> "TField":
        return TField({k: v for k, v in self.c.items() if sum(k[1]) <= degree})

    def min_degree(self) -> int:
        return min(sum(m) for (_, m) in self.c)


def field_bracket(U: TField, V: TField) -> TField:
    out: Dict = {}
    for (i, m1), a in U.c.items():
        for (j, m2), b in V.c.items():
            if m2[i]:
                _put(out, (j, _madd(m1, _msub(m2, unit(i)))), a * b * m2[i])
            if m1[j]:
                _put(out, (i, _madd(m2, _msub(m1, unit(j)))), -a * b * m1[j])
    return TField(out)


def phi(A: AnnElement, truncation: Optional[int] = None) -> TField:
    """Realization by derivations of O_5 = C[[t]] under x^i = -t_i.

    x_I (x) d_k acts on X as x_I d/dx^k, which becomes (-1)^(|I|+1) t^I d/dt_k.
    """
    out = TField({(k, I): (-1) ** (sum(I) + 1) * c for (I, k), c in A.c.items()})
    return out.truncate(truncation) if truncation is not None else out


def in_FpW(F: TField, p: int) -> bool:
    """F_p W(n): coefficients of degree >= p + 1."""
    return F.is_zero() or F.min_degree() >= p + 1


# conformal correspondence ---------------------------------------------------

def pseudoaction_on_H(a: WdElement, g: HElement) -> List[Tuple[HElement, HElement]]:
    """(f (x) d_k) * g = -(f (x) g d_k) (x)_H 1, as a list of (f_i, g_i) with v_i = 1."""
    out = []
    for k, hk in enumerate(a.h):
        if not hk.is_zero():
            out.append((-hk, g * HElement.d(k)))
    return out


def conformal_action(x: XElement, a: WdElement, g: HElement) -> HElement:
    """(x (x)_H a) g = sum <x, S(f_i g_i(-1))> g_i(2) . 1 for the module H."""
    out = HElement()
    for f, G in pseudoaction_on_H(a, g):
        for (J, K), c in coproduct_dict(G).items():
            # S(f S(d^(J))) = S(f) d^(J)
            val = pair(x, antipode(f) * HElement.basis(J))
            if val:
                out = out + HElement({K: c * val})
    return out


def conformal_action_ann(A: AnnElement, g: HElement) -> HElement:
    out = HElement()
    for k, x in enumerate(A.components()):
        if not x.is_zero():
            out = out + conformal_action(x, WdElement.gen(k), g)
    return out


def contragredient_check(A: AnnElement, y: XElement, g: HElement) -> bool:
    """<y, A.g> = <-A.y + div(A) y, g>: the action on H is the div-twisted dual
    of the action on X."""
    lhs = pair(y, conformal_action_ann(A, g))
    rhs = pair(act_on_X(A, y).scale(-1) + ann_div(A) * y, g)
    return lhs == rhs


# random samplers ---------------------------------------------------------------

def random_multi(rng: random.Random, max_deg: int) -> Multi:
    d = rng.randint(0, max_deg)
    m = [0] * RANK
    for _ in range(d):
        m[rng.randrange(RANK)] += 1
    return tuple(m)


def random_x(rng, max_deg: int, nterms: int = 3, min_deg: int = 0) -> XElement:
    out = {}
    for _ in range(nterms):
        m = random_multi(rng, max_deg)
        while sum(m) < min_deg:
            m = list(m)
            m[rng.randrange(RANK)] += 1
            m = tuple(m)
        _put(out, m, Fraction(rng.randint(-4, 4)))
    return XElement(out)


def random_h(rng, max_deg: int, nterms: int = 2) -> HElement:
    out = {}
    for _ in range(nterms):
        _put(out, random_multi(rng, max_deg), Fraction(rng.randint(-3, 3)))
    return HElement(out)


def random_wd(rng, max_deg: int) -> WdElement:
    return WdElement([random_h(rng, max_deg, 1) for _ in range(RANK)])


def random_ann(rng, max_deg: int, nterms: int = 3, min_deg: int = 0) -> AnnElement:
    out = AnnElement()
    for _ in range(nterms):
        out = out + AnnElement.make(random_x(rng, max_deg, 1, min_deg), rng.randrange(RANK))
    return out


def multis_up_to(d: int) -> List[Multi]:
    out = []
    for I in product(range(d + 1), repeat=RANK):
        if sum(I) <= d:
            out.append(I)
    return sorted(out, key=lambda I: (sum(I), tuple(-v for v in I)))
