"""The Lie superalgebra E(5,10) with polynomial coefficients.

Even part: divergence-free vector fields ``sum f_i d_i``.  Odd part: closed
2-forms ``sum f_ij xi_ij`` with ``xi_ij = dx_i ^ dx_j``.  Elements are sparse
maps ``(generator, monomial) -> coefficient`` where generators ``0..4`` are
``d_1..d_5`` and ``5..14`` are ``xi_12, xi_13, ..., xi_45`` in lexicographic
order.  Monomials are exponent 5-tuples.

Indices in the public helpers (``d(i)``, ``xi(i, j)``, ``complement_index``)
are 1-based to match the usual notation; everything internal is 0-based.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Dict, Iterable, List, Optional, Tuple

from .sl5rep import RepMatrices, Weight, from_eps, rep_from_action

N = 5
XI_PAIRS: Tuple[Tuple[int, int], ...] = tuple(combinations(range(N), 2))
XI_GEN = {p: N + k for k, p in enumerate(XI_PAIRS)}
ZERO = (0,) * N

# Divergence / closedness checks on construction of brackets; switch off in
# tight loops once inputs are known to be well formed.
VALIDATE = True

Mono = Tuple[int, ...]
Term = Tuple[int, Mono]


class E510Error(ValueError):
    pass


def is_odd_gen(g: int) -> bool:
    return g >= N


def _mono_add(a: Mono, b: Mono) -> Mono:
    return tuple(x + y for x, y in zip(a, b))


def _unit(k: int) -> Mono:
    return tuple(1 if i == k else 0 for i in range(N))


def _mono_diff(m: Mono, k: int):
    """d/dx_k of x^m as (coefficient, monomial)."""
    if m[k] == 0:
        return 0, None
    return m[k], m[:k] + (m[k] - 1,) + m[k + 1:]


def term_degree(g: int, m: Mono) -> int:
    return 2 * sum(m) - (1 if is_odd_gen(g) else 2)


def wedge2(p: int, q: int):
    """dx_p ^ dx_q as (sign, generator) or (0, None)."""
    if p == q:
        return 0, None
    if p < q:
        return 1, XI_GEN[(p, q)]
    return -1, XI_GEN[(q, p)]


def _perm_sign(seq) -> int:
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def complement_index(i: int, j: int, h: int, k: int) -> Tuple[int, int]:
    """(l, sign of the permutation (i j h k l)) or (0, 0) on a repeated index.

    1-based indices.
    """
    for a in (i, j, h, k):
        if not 1 <= a <= N:
            raise E510Error(f"index {a} out of range 1..{N}")
    s = {i, j, h, k}
    if len(s) < 4:
        return 0, 0
    (l,) = set(range(1, N + 1)) - s
    return l, _perm_sign((i, j, h, k, l))


class Element:
    """Sparse element of E(5,10) (or of the ambient fields + 2-forms)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Term, object]] = None):
        self.terms: Dict[Term, object] = {}
        if terms:
            for k, v in terms.items():
                if v:
                    self.terms[k] = v

    # arithmetic -----------------------------------------------------------
    def __add__(self, other: "Element") -> "Element":
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return Element(out)

    def __neg__(self) -> "Element":
        return Element({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __mul__(self, c) -> "Element":
        if isinstance(c, Element):
            return NotImplemented
        return Element({k: c * v for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        return f"Element({format_element(self)!r})"

    def __str__(self):
        return format_element(self)

    # structure ------------------------------------------------------------
    @property
    def parity(self) -> Optional[int]:
        ps = {1 if is_odd_gen(g) else 0 for g, _ in self.terms}
        if len(ps) == 1:
            return ps.pop()
        return 0 if not ps else None

    def degrees(self) -> set:
        return {term_degree(g, m) for g, m in self.terms}

    def even_part(self) -> "Element":
        return Element({k: v for k, v in self.terms.items() if not is_odd_gen(k[0])})

    def odd_part(self) -> "Element":
        return Element({k: v for k, v in self.terms.items() if is_odd_gen(k[0])})

    def component(self, deg: int) -> "Element":
        return Element({k: v for k, v in self.terms.items() if term_degree(*k) == deg})

    def field_coeffs(self) -> List[Dict[Mono, object]]:
        out: List[Dict[Mono, object]] = [{} for _ in range(N)]
        for (g, m), c in self.terms.items():
            if not is_odd_gen(g):
                out[g][m] = c
        return out

    def form_coeffs(self) -> Dict[Tuple[int, int], Dict[Mono, object]]:
        out: Dict[Tuple[int, int], Dict[Mono, object]] = {}
        for (g, m), c in self.terms.items():
            if is_odd_gen(g):
                out.setdefault(XI_PAIRS[g - N], {})[m] = c
        return out


def grading_degree(a: Element) -> int:
    degs = a.degrees()
    if len(degs) != 1:
        raise E510Error(f"element {a} is not Z-homogeneous (degrees {sorted(degs)})")
    return degs.pop()


# construction helpers ----------------------------------------------------

def d(i: int, mono: Mono = ZERO, c=1) -> Element:
    return Element({(i - 1, tuple(mono)): c})


def xi(i: int, j: int, mono: Mono = ZERO, c=1) -> Element:
    s, g = wedge2(i - 1, j - 1)
    if not s:
        return Element()
    return Element({(g, tuple(mono)): s * c})


def xvar(*idx: int) -> Mono:
    """Monomial x_{i1} x_{i2} ... (1-based, repeats allowed)."""
    m = [0] * N
    for i in idx:
        m[i - 1] += 1
    return tuple(m)


# divergence and exterior derivative -------------------------------------

def divergence(a: Element) -> Dict[Mono, object]:
    out: Dict[Mono, object] = {}
    for (g, m), c in a.terms.items():
        if is_odd_gen(g):
            continue
        k, mm = _mono_diff(m, g)
        if k:
            out[mm] = out.get(mm, 0) + k * c
    return {k: v for k, v in out.items() if v}


def exterior_derivative(a: Element) -> Dict[Tuple[int, int, int], Dict[Mono, object]]:
    """d of the odd part, as 3-form coefficients over sorted triples."""
    out: Dict[Tuple[int, int, int], Dict[Mono, object]] = {}
    for (g, m), c in a.terms.items():
        if not is_odd_gen(g):
            continue
        p, q = XI_PAIRS[g - N]
        for k in range(N):
            if k in (p, q):
                continue
            kk, mm = _mono_diff(m, k)
            if not kk:
                continue
            trip = (k, p, q)
            key = tuple(sorted(trip))
            s = _perm_sign(trip)
            slot = out.setdefault(key, {})
            slot[mm] = slot.get(mm, 0) + s * kk * c
    cleaned = {}
    for key, poly in out.items():
        poly = {m: v for m, v in poly.items() if v}
        if poly:
            cleaned[key] = poly
    return cleaned


def is_divergence_free(a: Element) -> bool:
    return not divergence(a)


def is_closed(a: Element) -> bool:
    return not exterior_derivative(a)


def is_in_L(a: Element) -> bool:
    return is_divergence_free(a) and is_closed(a)


# brackets ------------------------------------------------------------------

@lru_cache(maxsize=None)
def _term_bracket(g1: int, m1: Mono, g2: int, m2: Mono) -> Tuple[Tuple[Term, int], ...]:
    out: Dict[Term, int] = {}

    def put(g, m, c):
        if c:
            key = (g, m)
            v = out.get(key, 0) + c
            if v:
                out[key] = v
            else:
                out.pop(key, None)

    odd1, odd2 = is_odd_gen(g1), is_odd_gen(g2)
    if not odd1 and not odd2:
        k, mm = _mono_diff(m2, g1)
        if k:
            put(g2, _mono_add(m1, mm), k)
        k, mm = _mono_diff(m1, g2)
        if k:
            put(g1, _mono_add(m2, mm), -k)
    elif not odd1 and odd2:
        for (g, m), c in _lie_derivative_term(g1, m1, g2, m2):
            put(g, m, c)
    elif odd1 and not odd2:
        for (g, m), c in _lie_derivative_term(g2, m2, g1, m1):
            put(g, m, -c)
    else:
        i, j = XI_PAIRS[g1 - N]
        h, k = XI_PAIRS[g2 - N]
        l, s = complement_index(i + 1, j + 1, h + 1, k + 1)
        if s:
            put(l - 1, _mono_add(m1, m2), s)
    return tuple(sorted(out.items()))


def _lie_derivative_term(i: int, m1: Mono, g: int, m2: Mono):
    """L_{x^m1 d_i} (x^m2 dx_a ^ dx_b) for the term-level (Leibniz) formula."""
    a, b = XI_PAIRS[g - N]
    res: List[Tuple[Term, int]] = []
    k, mm = _mono_diff(m2, i)
    if k:
        res.append(((g, _mono_add(m1, mm)), k))
    if i in (a, b):
        for kvar in range(N):
            kk, mm = _mono_diff(m1, kvar)
            if not kk:
                continue
            if i == a:
                s, gg = wedge2(kvar, b)
            else:
                s, gg = wedge2(a, kvar)
            if s:
                res.append(((gg, _mono_add(m2, mm)), s * kk))
    return res


def _bracket(a: Element, b: Element) -> Element:
    out: Dict[Term, object] = {}
    for (g1, m1), c1 in a.terms.items():
        for (g2, m2), c2 in b.terms.items():
            for key, c in _term_bracket(g1, m1, g2, m2):
                v = out.get(key, 0) + c1 * c2 * c
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
    return Element(out)


def super_bracket(a: Element, b: Element) -> Element:
    """Graded bracket, dispatching term by term on parity."""
    return _bracket(a, b)


def _require(cond: bool, msg: str):
    if VALIDATE and not cond:
        raise E510Error(msg)


def bracket_even_even(D1: Element, D2: Element) -> Element:
    _require(D1.parity in (0,) and D2.parity in (0,), "even fields expected")
    _require(is_divergence_free(D1) and is_divergence_free(D2), "fields must be divergence free")
    return _bracket(D1, D2)


def bracket_even_odd(D: Element, w: Element) -> Element:
    _require(D.parity == 0 and w.parity in (1, 0), "even field and 2-form expected")
    _require(is_divergence_free(D), "field must be divergence free")
    _require(is_closed(w), "form must be closed")
    return _bracket(D, w)


def bracket_odd_odd(w1: Element, w2: Element) -> Element:
    _require(w1.parity in (1, 0) and w2.parity in (1, 0), "2-forms expected")
    _require(is_closed(w1) and is_closed(w2), "forms must be closed")
    return _bracket(w1, w2)


def bracket_odd_odd_wedge(w1: Element, w2: Element) -> Element:
    """Odd bracket through the volume form: iota_D(dx_1^...^dx_5) = w1 ^ w2."""
    four: Dict[Tuple[int, ...], Dict[Mono, object]] = {}
    for (g1, m1), c1 in w1.terms.items():
        p, q = XI_PAIRS[g1 - N]
        for (g2, m2), c2 in w2.terms.items():
            r, s = XI_PAIRS[g2 - N]
            idx = (p, q, r, s)
            if len(set(idx)) < 4:
                continue
            key = tuple(sorted(idx))
            slot = four.setdefault(key, {})
            m = _mono_add(m1, m2)
            slot[m] = slot.get(m, 0) + _perm_sign(idx) * c1 * c2
    out: Dict[Term, object] = {}
    for key, poly in four.items():
        (l,) = set(range(N)) - set(key)
        # iota_{d_l} vol = (-1)^l dx_{key}
        sign = -1 if l % 2 else 1
        for m, c in poly.items():
            if c:
                out[(l, m)] = out.get((l, m), 0) + sign * c
    return Element(out)


def interior(D: Element, w: Element) -> Dict[int, Dict[Mono, object]]:
    """iota_D of a 2-form, as 1-form coefficients per dx_k."""
    out: Dict[int, Dict[Mono, object]] = {}
    for (i, m1), c1 in D.terms.items():
        if is_odd_gen(i):
            continue
        for (g, m2), c2 in w.terms.items():
            if not is_odd_gen(g):
                continue
            a, b = XI_PAIRS[g - N]
            if i == a:
                k, s = b, 1
            elif i == b:
                k, s = a, -1
            else:
                continue
            slot = out.setdefault(k, {})
            m = _mono_add(m1, m2)
            slot[m] = slot.get(m, 0) + s * c1 * c2
    return out


def d_of_one_form(alpha: Dict[int, Dict[Mono, object]]) -> Element:
    out: Dict[Term, object] = {}
    for k, poly in alpha.items():
        for m, c in poly.items():
            for j in range(N):
                kk, mm = _mono_diff(m, j)
                if not kk:
                    continue
                s, g = wedge2(j, k)
                if s:
                    out[(g, mm)] = out.get((g, mm), 0) + s * kk * c
    return Element(out)


def lie_derivative_cartan(D: Element, w: Element) -> Element:
    """d(iota_D w): the even-odd bracket on closed forms, via Cartan's formula."""
    return d_of_one_form(interior(D, w))


# sl_5 identification ---------------------------------------------------------

def sl5_of(z: Element) -> List[List[object]]:
    """Matrix of a degree-0 field: x_i d_j goes to the matrix unit E_ij.

    This is the matrix of the field acting on span{x_1, ..., x_5}; it is a Lie
    algebra isomorphism L_0 -> sl_5 (see the decisions ledger for the sign
    relative to the e^i_j notation).
    """
    if z.is_zero():
        return [[0] * N for _ in range(N)]
    if z.parity != 0 or grading_degree(z) != 0:
        raise E510Error(f"{z} is not in L_0")
    if not is_divergence_free(z):
        raise E510Error(f"{z} has nonzero divergence")
    M = [[0] * N for _ in range(N)]
    for (j, m), c in z.terms.items():
        (i,) = [k for k in range(N) if m[k]]
        M[i][j] += c
    return M


def element_of_sl5(M) -> Element:
    out: Dict[Term, object] = {}
    for i in range(N):
        for j in range(N):
            if M[i][j]:
                out[(j, _unit(i))] = M[i][j]
    return Element(out)


def matrix_unit_element(i: int, j: int) -> Element:
    """The field x_i d_j (0-based), i.e. the preimage of E_ij (for i != j)."""
    return Element({(j, _unit(i)): 1})


# graded bases ---------------------------------------------------------------

def lm2_basis() -> List[Element]:
    return [d(i) for i in range(1, N + 1)]


def lm1_basis() -> List[Element]:
    return [Element({(N + k, ZERO): 1}) for k in range(len(XI_PAIRS))]


def l0_basis() -> List[Element]:
    out = []
    for i in range(N):
        for j in range(N):
            if i != j:
                out.append(matrix_unit_element(i, j))
    for i in range(N - 1):
        out.append(matrix_unit_element(i, i) - matrix_unit_element(i + 1, i + 1))
    return out


def _normalize(e: Element) -> Element:
    lead = min(e.terms)
    return e * Fraction(1, 1) * (Fraction(1) / Fraction(e.terms[lead]))


def _independent(elements: Iterable[Element]) -> List[Element]:
    from .exact import Echelon

    index: Dict[Term, int] = {}
    ech = Echelon()
    out = []
    for e in elements:
        row = {}
        for k, v in e.terms.items():
            if k not in index:
                index[k] = len(index)
            row[index[k]] = v
        if ech.add(row):
            out.append(e)
    return out


@lru_cache(maxsize=None)
def _l1_basis() -> Tuple[Element, ...]:
    gens = []
    for h, k, l in product(range(1, N + 1), repeat=3):
        y = xi(k, l, xvar(h)) + xi(h, l, xvar(k))
        if y:
            gens.append(_clean_fraction(_normalize(y)))
    # simple (single-term) elements first so x1 xi12 and x5 xi45 are kept
    gens.sort(key=lambda e: (len(e.terms), sorted(e.terms)))
    return tuple(_independent(gens))


def _clean_fraction(e: Element) -> Element:
    return Element({k: (int(v) if Fraction(v).denominator == 1 else Fraction(v)) for k, v in e.terms.items()})


def l1_spanning() -> List[Element]:
    """Basis of L_1 made of elements x_h xi_kl + x_k xi_hl (normalised)."""
    return list(_l1_basis())


@lru_cache(maxsize=None)
def _l2_basis() -> Tuple[Element, ...]:
    out = []
    # x^a d_j with x_j absent from x^a
    for j in range(N):
        others = [k for k in range(N) if k != j]
        for a, b in sorted(set(tuple(sorted(t)) for t in product(others, repeat=2))):
            out.append(Element({(j, _mono_add(_unit(a), _unit(b))): 1}))
    # divergence cancellations x_b x_j0 d_j0 - x_b x_j d_j, x_b^2 d_b - 2 x_b x_j0 d_j0
    for b in range(N):
        rest = [j for j in range(N) if j != b]
        j0 = rest[0]
        base = Element({(j0, _mono_add(_unit(b), _unit(j0))): 1})
        for j in rest[1:]:
            out.append(base - Element({(j, _mono_add(_unit(b), _unit(j))): 1}))
        out.append(Element({(b, _mono_add(_unit(b), _unit(b))): 1}) - 2 * base)
    return tuple(out)


def l2_spanning() -> List[Element]:
    """Basis of L_2: divergence-free fields with quadratic coefficients."""
    return list(_l2_basis())


def _monomials(deg: int) -> List[Mono]:
    return [m for m in product(range(deg + 1), repeat=N) if sum(m) == deg]


@lru_cache(maxsize=None)
def _generic_basis(j: int) -> Tuple[Element, ...]:
    """Basis of L_j from scratch: kernel of div on fields, or d of 1-forms."""
    from .exact import nullspace_rows

    if j % 2 == 0:
        r = (j + 2) // 2
        cols = [(g, m) for g in range(N) for m in _monomials(r)]
        rows: Dict[Mono, Dict[int, object]] = {}
        for c, (g, m) in enumerate(cols):
            k, mm = _mono_diff(m, g)
            if k:
                rows.setdefault(mm, {})[c] = k
        if r == 0:
            return tuple(Element({t: 1}) for t in cols)
        out = []
        for vec in nullspace_rows(rows.values(), len(cols)):
            out.append(_clean_fraction(Element({cols[c]: v for c, v in vec.items()})))
        return tuple(out)
    r = (j + 1) // 2
    gens = [d_of_one_form({k: {m: 1}}) for k in range(N) for m in _monomials(r + 1)]
    gens = [g for g in gens if g]
    return tuple(_clean_fraction(_normalize(g)) for g in _independent(gens))


def graded_basis(j: int) -> List[Element]:
    """Basis of L_j; the named bases for j <= 2, a generic construction above."""
    named = {-2: lm2_basis, -1: lm1_basis, 0: l0_basis, 1: l1_spanning, 2: l2_spanning}
    if j in named:
        return named[j]()
    if j < -2:
        return []
    return list(_generic_basis(j))


# L_0-modules inside L ------------------------------------------------------

def _coords(e: Element, basis_terms: Dict[Term, int]) -> Dict[int, object]:
    out = {}
    for k, v in e.terms.items():
        if k not in basis_terms:
            raise E510Error(f"{e} leaves the monomial component")
        out[basis_terms[k]] = v
    return out


def component_module(j: int) -> RepMatrices:
    """L_j for j in {-2, -1} as an explicit sl_5-module (basis d_i or xi_ab).

    E_ij acts as ad(x_i d_j).
    """
    if j == -2:
        basis = lm2_basis()
    elif j == -1:
        basis = lm1_basis()
    else:
        raise E510Error("only the monomial components L_-2, L_-1 are supported")
    terms = {next(iter(b.terms)): k for k, b in enumerate(basis)}
    ops = {}
    for i in range(N):
        for jj in range(N):
            if i == jj:
                continue
            z = matrix_unit_element(i, jj)
            cols = {}
            for k, b in enumerate(basis):
                img = _bracket(z, b)
                if img:
                    cols[k] = _coords(img, terms)
            ops[(i, jj)] = cols
    weights = []
    for b in basis:
        e = [0] * N
        for i in range(N):
            img = _bracket(matrix_unit_element(i, i), b)
            e[i] = img.terms.get(next(iter(b.terms)), 0) if img else 0
        weights.append(from_eps(e))
    hw = None
    for k, b in enumerate(basis):
        if all(k not in ops[(i, jj)] for i in range(N) for jj in range(N) if i < jj):
            hw = weights[k]
    labels = [format_element(b) for b in basis]
    return rep_from_action(hw, weights, ops, labels=labels)


def weight_of_element(e: Element) -> Weight:
    """sl_5 weight of a weight vector of L (eps-contributions x_i: +1, d_i: -1)."""
    ws = set()
    for (g, m) in e.terms:
        eps = list(m)
        if is_odd_gen(g):
            a, b = XI_PAIRS[g - N]
            eps[a] += 1
            eps[b] += 1
        else:
            eps[g] -= 1
        ws.add(from_eps(eps))
    if len(ws) != 1:
        raise E510Error(f"{e} is not a weight vector")
    return ws.pop()


# super-Jacobi ----------------------------------------------------------------

def jacobiator(a: Element, b: Element, c: Element) -> Element:
    """[a,[b,c]] - [[a,b],c] - (-1)^{|a||b|} [b,[a,c]] for homogeneous a, b."""
    s = -1 if (a.parity == 1 and b.parity == 1) else 1
    return _bracket(a, _bracket(b, c)) - _bracket(_bracket(a, b), c) - s * _bracket(b, _bracket(a, c))


# text format ------------------------------------------------------------------

def _gen_name(g: int) -> str:
    if is_odd_gen(g):
        a, b = XI_PAIRS[g - N]
        return f"xi{a + 1}{b + 1}"
    return f"d{g + 1}"


def _fmt_coeff(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_element(e: Element) -> str:
    if not e.terms:
        return "0"
    parts = []
    for (g, m), c in sorted(e.terms.items(), key=lambda kv: (kv[0][0], tuple(-x for x in kv[0][1]))):
        factors = []
        for k, p in enumerate(m):
            if p == 1:
                factors.append(f"x{k + 1}")
            elif p > 1:
                factors.append(f"x{k + 1}^{p}")
        factors.append(_gen_name(g))
        body = "*".join(factors)
        c = Fraction(c)
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        text = body if mag == 1 else f"{_fmt_coeff(mag)}*{body}"
        parts.append((sign, text))
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, text in parts[1:]:
        s += f" {sign} {text}"
    return s


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse_element(text: str) -> Element:
    """Parse e.g. ``"x1*d2 - 1/2*x3^2*xi45 + d5"``."""
    text = text.strip()
    if text == "0":
        return Element()
    pos = 0
    out = Element()
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise E510Error(f"cannot parse {text!r} at {pos}")
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        coeff = Fraction(sign)
        mono = [0] * N
        gen = None
        for f in m.group(2).strip().split("*"):
            f = f.strip()
            if re.fullmatch(r"\d+(/\d+)?", f):
                coeff *= Fraction(f)
            elif re.fullmatch(r"x[1-5](\^\d+)?", f):
                k = int(f[1]) - 1
                mono[k] += int(f[3:]) if "^" in f else 1
            elif re.fullmatch(r"d[1-5]", f):
                if gen is not None:
                    raise E510Error(f"two generators in term {m.group(2)!r}")
                gen = int(f[1]) - 1
            elif re.fullmatch(r"xi[1-5][1-5]", f):
                if gen is not None:
                    raise E510Error(f"two generators in term {m.group(2)!r}")
                s, g = wedge2(int(f[2]) - 1, int(f[3]) - 1)
                if not s:
                    gen = ("zero",)
                else:
                    coeff *= s
                    gen = g
            else:
                raise E510Error(f"unknown factor {f!r}")
        if gen is None:
            raise E510Error(f"term {m.group(2)!r} has no generator")
        if gen == ("zero",):
            continue
        c = coeff if coeff.denominator != 1 else int(coeff)
        out = out + Element({(gen, tuple(mono)): c})
    return out
