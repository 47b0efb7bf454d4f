"""Property suites shared by the command line and the test-suite.

Each suite returns a list of CheckResult; a failed check carries a small
counterexample description.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product
from typing import Callable, Dict, List, Optional

from . import e510, pseudo, verma
from .sl5rep import Weight


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int = 0
    seconds: float = 0.0
    counterexample: Optional[str] = None

    def to_json_obj(self) -> dict:
        d = {"name": self.name, "passed": self.passed, "cases": self.cases, "seconds": round(self.seconds, 3)}
        if self.counterexample:
            d["counterexample"] = self.counterexample
        return d


def _run(name: str, fn: Callable[[], tuple]) -> CheckResult:
    t = time.perf_counter()
    try:
        ok, cases, cex = fn()
    except Exception as exc:  # a crash is a failed check, reported with its message
        ok, cases, cex = False, 0, f"{type(exc).__name__}: {exc}"
    return CheckResult(name, ok, cases, time.perf_counter() - t, cex)


# E(5,10) ----------------------------------------------------------------------

def graded_bases() -> Dict[int, List[e510.Element]]:
    return {j: e510.graded_basis(j) for j in range(-2, 3)}


def coefficient_degree_range(max_coeff_degree: int) -> List[int]:
    """Grading degrees whose elements have coefficients of degree <= max_coeff_degree."""
    return [j for j in range(-2, 2 * max_coeff_degree) if (j + 2 - j % 2) // 2 <= max_coeff_degree]


def check_super_jacobi(max_coeff_degree: int = 2):
    """Jacobiator on every multiset {a, b, c} of basis elements.

    Under a transposition of two arguments the jacobiator only changes by a
    sign (given graded skew-symmetry), so one ordering per multiset suffices.
    """
    basis = [e for j in coefficient_degree_range(max_coeff_degree) for e in e510.graded_basis(j)]
    cases = 0
    for a, b, c in combinations_with_replacement(basis, 3):
        cases += 1
        if e510.jacobiator(a, b, c):
            return False, cases, f"({a}, {b}, {c})"
    return True, cases, None


def check_graded_skew(max_coeff_degree: int = 2):
    basis = [e for j in coefficient_degree_range(max_coeff_degree) for e in e510.graded_basis(j)]
    n = 0
    for a, b in combinations_with_replacement(basis, 2):
        n += 1
        s = -1 if (a.parity == 1 and b.parity == 1) else 1
        if e510.super_bracket(a, b) != e510.super_bracket(b, a) * (-s):
            return False, n, f"[{a}, {b}]"
    return True, n, None


def check_odd_symmetry():
    odd = e510.graded_basis(-1) + e510.graded_basis(1)
    n = 0
    for a in odd:
        for b in odd:
            n += 1
            if e510.super_bracket(a, b) != e510.super_bracket(b, a):
                return False, n, f"[{a}, {b}]"
    return True, n, None


def _monomial_forms(max_deg: int):
    out = []
    for d in range(max_deg + 1):
        for m in product(range(d + 1), repeat=e510.N):
            if sum(m) == d:
                for g in range(e510.N, e510.N + len(e510.XI_PAIRS)):
                    out.append(e510.Element({(g, m): 1}))
    return out


def check_wedge_route(max_deg: int = 2):
    """Formula route against the volume-form route on all monomial 2-form pairs."""
    forms = _monomial_forms(max_deg)
    n = 0
    for a in forms:
        for b in forms:
            n += 1
            if e510.super_bracket(a, b) != e510.bracket_odd_odd_wedge(a, b):
                return False, n, f"[{a}, {b}]"
    return True, n, None


def check_cartan_route():
    B = graded_bases()
    n = 0
    for D in B[-2] + B[0] + B[2]:
        for w in B[-1] + B[1]:
            n += 1
            if e510.super_bracket(D, w) != e510.lie_derivative_cartan(D, w):
                return False, n, f"[{D}, {w}]"
    return True, n, None


def _matmul(A, B):
    n = len(A)
    return [[sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def check_sl5_homomorphism():
    L0 = e510.l0_basis()
    n = 0
    for a in L0:
        for b in L0:
            n += 1
            A, Bm = e510.sl5_of(a), e510.sl5_of(b)
            AB, BA = _matmul(A, Bm), _matmul(Bm, A)
            comm = [[AB[i][j] - BA[i][j] for j in range(5)] for i in range(5)]
            if e510.sl5_of(e510.super_bracket(a, b)) != comm:
                return False, n, f"[{a}, {b}]"
    return True, n, None


def check_degree_additivity():
    B = graded_bases()
    n = 0
    for i, j in product(range(-2, 3), repeat=2):
        for a in B[i]:
            for b in B[j]:
                c = e510.super_bracket(a, b)
                n += 1
                if c and e510.grading_degree(c) != i + j:
                    return False, n, f"[{a}, {b}] = {c}"
    return True, n, None


def check_component_weights():
    hw2 = e510.component_module(-2).highest_weight
    hw1 = e510.component_module(-1).highest_weight
    ok = hw2 == (0, 0, 0, 1) and hw1 == (0, 1, 0, 0)
    return ok, 2, None if ok else f"L_-2: {hw2}, L_-1: {hw1}"


def e510_suite(include_jacobi: bool = True) -> List[CheckResult]:
    out = []
    if include_jacobi:
        out.append(_run("e510.super_jacobi", check_super_jacobi))
    out += [
        _run("e510.graded_skew_symmetry", check_graded_skew),
        _run("e510.odd_symmetry", check_odd_symmetry),
        _run("e510.wedge_route", check_wedge_route),
        _run("e510.cartan_route", check_cartan_route),
        _run("e510.sl5_homomorphism", check_sl5_homomorphism),
        _run("e510.degree_additivity", check_degree_additivity),
        _run("e510.component_highest_weights", check_component_weights),
    ]
    return out


# Verma modules ----------------------------------------------------------------

SAMPLE_WEIGHTS: List[Weight] = [(0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 1), (1, 0, 0, 1)]


def example_vector():
    """The sum of xi_1i (x) d_i in T(L_-2), with L_-2 realized by its d-basis."""
    rep = e510.component_module(-2)
    M = verma.VermaModule((0, 0, 0, 1), rep=rep)
    v = verma.VermaVector()
    for i in range(2, 6):
        v = v + verma.basis_vector(K=(verma.xi_index(1, i),), b=i - 1)
    return M, v


def check_representation(seed: int, samples: int = 50, max_degree: int = 4):
    rng = random.Random(seed)
    modules = {w: verma.VermaModule(w) for w in SAMPLE_WEIGHTS}
    l0, l1 = e510.l0_basis(), e510.l1_spanning()
    n = 0
    for _ in range(samples):
        M = modules[rng.choice(SAMPLE_WEIGHTS)]
        v = M.random_vector(rng.randint(0, max_degree), rng)
        for a, b in ((rng.choice(l0), rng.choice(l1)), (rng.choice(l1), rng.choice(l1))):
            n += 1
            s = -1 if (a.parity == 1 and b.parity == 1) else 1
            lhs = M.act(a, M.act(b, v)) - s * M.act(b, M.act(a, v))
            if lhs != M.act(e510.super_bracket(a, b), v):
                return False, n, f"lambda={M.lam}, y1={a}, y2={b}, v={verma.format_vector(v)}"
    return True, n, None


def check_degree_shift(seed: int, samples: int = 20):
    rng = random.Random(seed)
    n = 0
    for _ in range(samples):
        M = verma.VermaModule(rng.choice(SAMPLE_WEIGHTS))
        p = rng.randint(0, 4)
        v = M.random_vector(p, rng)
        j = rng.choice([0, 1, 2])
        y = rng.choice(e510.graded_basis(j))
        w = M.act(y, v)
        n += 1
        if w and w.degrees() != {p - j}:
            return False, n, f"{y} on degree {p} gave degrees {sorted(w.degrees())}"
    return True, n, None


def check_even_keeps_level(seed: int, samples: int = 20):
    rng = random.Random(seed)
    n = 0
    for _ in range(samples):
        M = verma.VermaModule(rng.choice(SAMPLE_WEIGHTS))
        v = M.random_vector(rng.randint(1, 4), rng)
        y = rng.choice(e510.graded_basis(rng.choice([0, 2])))
        w = M.act(y, v)
        n += 1
        if v and w and verma.top_odd_level(w) > verma.top_odd_level(v):
            return False, n, f"{y} raised the odd level of {verma.format_vector(v)}"
    return True, n, None


def check_quotient(seed: int, per_level: int = 20):
    rng = random.Random(seed)
    modules = [verma.VermaModule(w) for w in SAMPLE_WEIGHTS[:4]]
    l2 = e510.l2_spanning()
    n = 0
    for m in range(1, 11):
        for _ in range(per_level):
            M = rng.choice(modules)
            c = verma.random_quotient_class(M, m, 3, rng)
            y = rng.choice(l2)
            n += 1
            lhs = verma.quotient_act_L2(M, y, c)
            rhs = verma.project_to_quotient(M.act(y, c.lift()), m)
            if lhs != rhs:
                return False, n, f"m={m}, y={y}, class={c}"
    return True, n, None


def check_cartan_weights(seed: int, samples: int = 10):
    rng = random.Random(seed)
    n = 0
    for _ in range(samples):
        M = verma.VermaModule(rng.choice(SAMPLE_WEIGHTS))
        p = rng.randint(0, 3)
        blocks = M.basis_by_weight(p)
        wt = rng.choice(sorted(blocks))
        keys = blocks[wt]
        v = verma.VermaVector({rng.choice(keys): 1, rng.choice(keys): 2})
        for k in range(4):
            h = e510.matrix_unit_element(k, k) - e510.matrix_unit_element(k + 1, k + 1)
            n += 1
            if M.act(h, v) != v * wt[k]:
                return False, n, f"h_{k + 1} on weight {wt}"
    return True, n, None


def check_example_vector():
    from .singular import is_singular
    M, v = example_vector()
    ok = is_singular(M, v) and M.weight_of(v) == (1, 0, 0, 0)
    return ok, 1, None if ok else "example vector is not singular"


def verma_suite(seed: int = 0) -> List[CheckResult]:
    return [
        _run("verma.example_vector_singular", check_example_vector),
        _run("verma.representation_property", lambda: check_representation(seed)),
        _run("verma.degree_shift", lambda: check_degree_shift(seed)),
        _run("verma.even_action_keeps_odd_level", lambda: check_even_keeps_level(seed)),
        _run("verma.cartan_weights", lambda: check_cartan_weights(seed)),
        _run("verma.quotient_action", lambda: check_quotient(seed)),
    ]


# pseudoalgebras --------------------------------------------------------------

def check_hopf(max_support: int = 3):
    H = pseudo.HElement
    n = 0
    for I in pseudo.multis_up_to(max_support):
        h = H.basis(I)
        n += 1
        # coassociativity: (D x id) D = (id x D) D
        left: Dict = {}
        right: Dict = {}
        for (J, K), c in pseudo.coproduct_dict(h).items():
            for (J1, J2), c1 in pseudo.coproduct_dict(H.basis(J)).items():
                pseudo._put(left, (J1, J2, K), c * c1)
            for (K1, K2), c2 in pseudo.coproduct_dict(H.basis(K)).items():
                pseudo._put(right, (J, K1, K2), c * c2)
        if left != right:
            return False, n, f"coassociativity at {I}"
        # counit and antipode
        e_left = H()
        e_right = H()
        s_left = H()
        for a, b in pseudo.coproduct(h):
            e_left = e_left + b.scale(pseudo.counit(a))
            e_right = e_right + a.scale(pseudo.counit(b))
            s_left = s_left + pseudo.antipode(a) * b
        if e_left != h or e_right != h:
            return False, n, f"counit at {I}"
        if s_left != H.one().scale(pseudo.counit(h)):
            return False, n, f"antipode at {I}"
    return True, n, None


def check_pairings(max_support: int = 2):
    """<h x, f> = <x, S(h) f> and <x h, f> = <x, f S(h)> on basis elements."""
    H, X = pseudo.HElement, pseudo.XElement
    basis = pseudo.multis_up_to(max_support)
    big = pseudo.multis_up_to(2 * max_support)
    n = 0
    for A in basis:
        h = H.basis(A)
        for B in big:
            x = X.basis(B)
            for F in basis:
                f = H.basis(F)
                n += 1
                l = pseudo.pair(pseudo.h_actions_on_X(h, x, "left"), f)
                r = pseudo.pair(pseudo.h_actions_on_X(h, x, "right"), f)
                if l != pseudo.pair(x, pseudo.antipode(h) * f) or r != pseudo.pair(x, f * pseudo.antipode(h)):
                    return False, n, f"h={A}, x={B}, f={F}"
    return True, n, None


def check_pseudobracket_axioms(seed: int, samples: int = 10):
    rng = random.Random(seed)
    n = 0
    for _ in range(samples):
        u, v = pseudo.random_wd(rng, 2), pseudo.random_wd(rng, 2)
        f, g = pseudo.random_h(rng, 2), pseudo.random_h(rng, 2)
        n += 1
        P = pseudo.wd_pseudobracket(u, v)
        if pseudo.wd_pseudobracket(v, u) != -P.sigma():
            return False, n, f"skew-commutativity for {u}, {v}"
        if pseudo.wd_pseudobracket(u.lmul(f), v.lmul(g)) != P.times(f, g):
            return False, n, f"H-bilinearity for {u}, {v}, f={f}, g={g}"
        if pseudo.PseudoTensor.from_right_normalized(P.right_normalized()) != P:
            return False, n, "normal form round trip"
    return True, n, None


def check_sab(max_support: int = 2):
    n = 0
    for a, b in product(range(pseudo.RANK), repeat=2):
        n += 1
        s = pseudo.sab(a, b)
        if not pseudo.div_pseudo(s).is_zero():
            return False, n, f"div s_{a + 1}{b + 1} != 0"
        if a == b and not s.is_zero():
            return False, n, "s_aa != 0"
    return True, n, None


def check_bracket_vs_pseudo(seed: int, samples: int = 20):
    rng = random.Random(seed)
    n = 0
    for _ in range(samples):
        x, y = pseudo.random_x(rng, 3), pseudo.random_x(rng, 3)
        u, v = pseudo.random_wd(rng, 2), pseudo.random_wd(rng, 2)
        n += 1
        lhs = pseudo.annihilation_from_pseudo(x, u, y, v)
        rhs = pseudo.annihilation_bracket(pseudo.ann_of(x, u), pseudo.ann_of(y, v))
        if lhs != rhs:
            return False, n, f"x={x}, u={u}, y={y}, v={v}"
    return True, n, None


@lru_cache(maxsize=None)
def _basis_bracket(I, a, J, b):
    X = pseudo.XElement
    r = pseudo.annihilation_bracket(pseudo.AnnElement.make(X.basis(I), a), pseudo.AnnElement.make(X.basis(J), b))
    return tuple(r.c.items())


def _bracket_basis_elt(I, a, E: Dict):
    out: Dict = {}
    for (J, b), c in E.items():
        for key, v in _basis_bracket(I, a, J, b):
            pseudo._put(out, key, c * v)
    return out


def check_ann_jacobi(max_support: int = 2):
    """Cyclic Jacobi sum on all distinct basis triples x_I (x) d_a, |I| <= max_support."""
    basis = [(I, a) for I in pseudo.multis_up_to(max_support) for a in range(pseudo.RANK)]
    n = 0
    for p, q, r in combinations(basis, 3):
        n += 1
        total: Dict = {}
        for (A, B, C) in ((p, q, r), (q, r, p), (r, p, q)):
            inner = dict(_basis_bracket(*B, *C))
            for key, v in _bracket_basis_elt(*A, inner).items():
                pseudo._put(total, key, v)
        if total:
            return False, n, f"triple {p}, {q}, {r}"
    return True, n, None


def check_ann_skew(max_support: int = 2):
    basis = [(I, a) for I in pseudo.multis_up_to(max_support) for a in range(pseudo.RANK)]
    n = 0
    for p in basis:
        for q in basis:
            n += 1
            pq = dict(_basis_bracket(*p, *q))
            qp = dict(_basis_bracket(*q, *p))
            if pq != {k: -v for k, v in qp.items()}:
                return False, n, f"{p}, {q}"
    return True, n, None


def check_div_leibniz(seed: int, samples: int = 20, max_support: int = 3):
    rng = random.Random(seed)
    n = 0
    for _ in range(samples):
        A, B = pseudo.random_ann(rng, max_support), pseudo.random_ann(rng, max_support)
        n += 1
        lhs = pseudo.ann_div(pseudo.annihilation_bracket(A, B))
        rhs = pseudo.act_on_X(A, pseudo.ann_div(B)) - pseudo.act_on_X(B, pseudo.ann_div(A))
        if lhs != rhs:
            return False, n, f"A={A}, B={B}"
    return True, n, None


def check_act_derivation(seed: int, samples: int = 20):
    rng = random.Random(seed)
    n = 0
    for _ in range(samples):
        A = pseudo.random_ann(rng, 2)
        y, z = pseudo.random_x(rng, 2), pseudo.random_x(rng, 2)
        B = pseudo.random_ann(rng, 2)
        n += 1
        if pseudo.act_on_X(A, y * z) != pseudo.act_on_X(A, y) * z + y * pseudo.act_on_X(A, z):
            return False, n, f"Leibniz for {A} on {y}, {z}"
        C = pseudo.annihilation_bracket(A, B)
        if pseudo.act_on_X(C, y) != pseudo.act_on_X(A, pseudo.act_on_X(B, y)) - pseudo.act_on_X(B, pseudo.act_on_X(A, y)):
            return False, n, f"representation property for {A}, {B}"
    return True, n, None


def check_iota_image(max_support: int = 3):
    """iota(x (x)_H s_ab) is divergence free and these span every divergence
    free element with homogeneous coefficients of degree d, d < max_support."""
    from math import comb

    from .exact import span_rank
    n = 0
    for d in range(max_support):
        rows = []
        index: Dict = {}
        for I in pseudo.multis_up_to(d + 1):
            if sum(I) != d + 1:
                continue
            for a, b in combinations(range(pseudo.RANK), 2):
                A = pseudo.iota(pseudo.XElement.basis(I), a, b)
                n += 1
                if not pseudo.ann_div(A).is_zero():
                    return False, n, f"div iota(x_{I} s_{a + 1}{b + 1}) != 0"
                row = {}
                for key, c in A.c.items():
                    row[index.setdefault(key, len(index))] = c
                rows.append(row)
        expected = pseudo.RANK * comb(d + 4, 4) - (comb(d + 3, 4) if d >= 1 else 0)
        got = span_rank(rows)
        if got != expected:
            return False, n, f"coefficient degree {d}: rank {got}, expected {expected}"
    return True, n, None


def check_phi(seed: int, samples: int = 10, truncation: int = 4):
    rng = random.Random(seed)
    n = 0
    X, Ann = pseudo.XElement, pseudo.AnnElement
    for k in range(pseudo.RANK):
        n += 1
        lead = pseudo.phi(Ann.make(X.basis(pseudo.ZERO), k))
        if lead != pseudo.TField({(k, pseudo.ZERO): -1}):
            return False, n, f"phi(1 (x) d_{k + 1}) = {lead}"
    for _ in range(samples):
        A, B = pseudo.random_ann(rng, 2), pseudo.random_ann(rng, 2)
        n += 1
        lhs = pseudo.phi(pseudo.annihilation_bracket(A, B), truncation)
        rhs = pseudo.field_bracket(pseudo.phi(A), pseudo.phi(B)).truncate(truncation)
        if lhs != rhs:
            return False, n, f"phi bracket for {A}, {B}"
        p = pseudo.filtration_degree(A)
        if not pseudo.in_FpW(pseudo.phi(A), p):
            return False, n, f"phi({A}) not in F_{p}W"
    for _ in range(samples):
        A = pseudo.random_ann(rng, 3, min_deg=1)
        n += 1
        if not pseudo.in_FpW(pseudo.phi(A), 0):
            return False, n, f"phi of W_0 element {A} not in F_0W"
    return True, n, None


def check_filtration_shift(seed: int, samples: int = 30):
    rng = random.Random(seed)
    n = 0
    for _ in range(samples):
        A, B = pseudo.random_ann(rng, 3), pseudo.random_ann(rng, 3)
        if A.is_zero() or B.is_zero():
            continue
        C = pseudo.annihilation_bracket(A, B)
        n += 1
        if C and pseudo.filtration_degree(C) < pseudo.filtration_degree(A) + pseudo.filtration_degree(B):
            return False, n, f"W shift for {A}, {B}"
        # S: brackets of iota-images
        x, y = pseudo.random_x(rng, 3, 1, 1), pseudo.random_x(rng, 3, 1, 1)
        a, b = rng.sample(range(pseudo.RANK), 2)
        c, d = rng.sample(range(pseudo.RANK), 2)
        SA, SB = pseudo.iota(x, a, b), pseudo.iota(y, c, d)
        if SA.is_zero() or SB.is_zero():
            continue
        SC = pseudo.annihilation_bracket(SA, SB)
        if SC and pseudo.filtration_degree(SC, "S") < pseudo.filtration_degree(SA, "S") + pseudo.filtration_degree(SB, "S"):
            return False, n, f"S shift for {SA}, {SB}"
    return True, n, None


def check_conformal(seed: int, samples: int = 20, max_support: int = 2):
    rng = random.Random(seed)
    n = 0
    for _ in range(samples):
        A = pseudo.random_ann(rng, max_support)
        B = pseudo.random_ann(rng, max_support)
        y = pseudo.random_x(rng, max_support + 1)
        g = pseudo.random_h(rng, max_support + 1)
        n += 1
        if not pseudo.contragredient_check(A, y, g):
            return False, n, f"duality for A={A}, y={y}, g={g}"
        C = pseudo.annihilation_bracket(A, B)
        lhs = pseudo.conformal_action_ann(C, g)
        rhs = pseudo.conformal_action_ann(A, pseudo.conformal_action_ann(B, g)) - \
            pseudo.conformal_action_ann(B, pseudo.conformal_action_ann(A, g))
        if lhs != rhs:
            return False, n, f"representation property for A={A}, B={B}, g={g}"
    return True, n, None


def pseudo_suite(max_support: int = 2, samples: int = 20, seed: int = 0) -> List[CheckResult]:
    return [
        _run("pseudo.hopf_axioms", lambda: check_hopf(max_support + 1)),
        _run("pseudo.pairing_identities", lambda: check_pairings(max_support)),
        _run("pseudo.pseudobracket_axioms", lambda: check_pseudobracket_axioms(seed, max(10, samples // 2))),
        _run("pseudo.sab_divergence", lambda: check_sab(max_support)),
        _run("pseudo.bracket_from_pseudobracket", lambda: check_bracket_vs_pseudo(seed, samples)),
        _run("pseudo.annihilation_skew", lambda: check_ann_skew(max_support)),
        _run("pseudo.annihilation_jacobi", lambda: check_ann_jacobi(max_support)),
        _run("pseudo.div_leibniz", lambda: check_div_leibniz(seed, samples, max_support + 1)),
        _run("pseudo.action_on_X", lambda: check_act_derivation(seed, samples)),
        _run("pseudo.iota_image", lambda: check_iota_image(max_support + 1)),
        _run("pseudo.phi", lambda: check_phi(seed, samples)),
        _run("pseudo.filtration_shift", lambda: check_filtration_shift(seed, max(30, samples))),
        _run("pseudo.conformal_vs_action_on_X", lambda: check_conformal(seed, samples, max_support)),
    ]


SUITES = {
    "e510": lambda seed: e510_suite(),
    "verma": lambda seed: verma_suite(seed),
    "pseudo": lambda seed: pseudo_suite(seed=seed),
}
