"""Characterization identities for Schubert-like polynomial families.

Three families of checks:

* signed convolution: sum over reduced factorizations w = u * v of
  (-1)^len(v) S_{v^-1}(x) Schub_u(x), which is delta_{w,id} exactly when
  S_w is the Schubert family;
* triple convolution in three alphabets, sum over w = a * b * c of
  S_c(x,t) S_b(t,y) S_a(y,x), again delta_{w,id};
* substitution vanishing: S_w(x, w'x) = 0, swept over Bruhat-comparable
  pairs (gated) and over all length-comparable pairs (reported).

Families are pluggable so the pipe-dream and bumpless sums can be run
through the same identities as the Demazure ground truth.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .bpd import bpd_weight_double, bpd_weight_single, enumerate_bpds
from .perm import (
    Permutation,
    all_permutations,
    bruhat_leq,
    reduced_factorizations,
    triple_reduced_factorizations,
)
from .pipedream import enumerate_pds, pd_weight_double, pd_weight_single
from .poly import Polynomial
from .schubert import schubert_double, schubert_single

__all__ = [
    "PolynomialFamily",
    "demazure_family",
    "pd_family",
    "bpd_family",
    "perturbed_family",
    "convolution",
    "verify_chofsch",
    "triple_convolution",
    "verify_triple_convolution",
    "vanishing_check",
    "vanishing_sweep",
    "verify_chofsch2_hypotheses",
]

# Third alphabet t_j realized as y_{STRIDE + j}; larger than any index in
# play at desk scale (n <= 6).
T_STRIDE = 8


@dataclass(frozen=True)
class PolynomialFamily:
    """A polynomial per permutation, with single and double evaluators."""

    source: str
    single: Callable[[Permutation], Polynomial]
    double: Callable[[Permutation, int], Polynomial]


def demazure_family() -> PolynomialFamily:
    return PolynomialFamily("demazure", schubert_single, schubert_double)


def pd_family() -> PolynomialFamily:
    def single(w: Permutation) -> Polynomial:
        return sum((pd_weight_single(p) for p in enumerate_pds(w)), Polynomial.zero())

    def double(w: Permutation, n: int) -> Polynomial:
        return sum((pd_weight_double(p) for p in enumerate_pds(w)), Polynomial.zero())

    return PolynomialFamily("pd", single, double)


def bpd_family() -> PolynomialFamily:
    def single(w: Permutation) -> Polynomial:
        return sum((bpd_weight_single(b) for b in enumerate_bpds(w)), Polynomial.zero())

    def double(w: Permutation, n: int) -> Polynomial:
        return sum(
            (bpd_weight_double(b) for b in enumerate_bpds(w, n)), Polynomial.zero()
        )

    return PolynomialFamily("bpd", single, double)


FAMILIES = {"demazure": demazure_family, "pd": pd_family, "bpd": bpd_family}


def perturbed_family(base: PolynomialFamily, at: Permutation, delta: Polynomial) -> PolynomialFamily:
    """Negative control: add ``delta`` to the family member at ``at``."""

    def single(w: Permutation) -> Polynomial:
        f = base.single(w)
        return f + delta if w == at else f

    def double(w: Permutation, n: int) -> Polynomial:
        f = base.double(w, n)
        return f + delta if w == at else f

    return PolynomialFamily(base.source + "+perturbation", single, double)


def convolution(w: Permutation, family: PolynomialFamily, invert_v: bool = True) -> Polynomial:
    """Signed convolution over reduced factorizations w = u * v.

    sum (-1)^len(v) S_{v^-1}(x) Schub_u(x), with S from ``family`` and
    Schub_u always from the Demazure ground truth.  ``invert_v=False``
    evaluates the family at v instead of v^-1 (the reading under which the
    identity fails; kept to make the discrepancy visible).
    """
    total = Polynomial.zero()
    for u, v in reduced_factorizations(w):
        sv = family.single(v.inverse() if invert_v else v)
        term = sv * schubert_single(u)
        total = total + (term if v.length() % 2 == 0 else -term)
    return total


def verify_chofsch(n: int, family: PolynomialFamily, invert_v: bool = True) -> list[dict]:
    """convolution(w) = 1 for w = id and 0 otherwise, over all of S_n."""
    rows = []
    for w in sorted(all_permutations(n), key=lambda p: (p.length(), p.one_line)):
        got = convolution(w, family, invert_v)
        expected = Polynomial.const(1) if w.is_identity() else Polynomial.zero()
        ok = got == expected
        rows.append(
            {
                "w": w.to_json(),
                "check": "signed-convolution",
                "status": "pass" if ok else "fail",
                "witness": None if ok else str(got),
            }
        )
    return rows


def _triple_factors(a: Permutation, b: Permutation, c: Permutation, n: int):
    """S_c(x,t) * S_b(t,y) * S_a(y,x), with t_j = y_{T_STRIDE+j}."""
    sc = schubert_double(c, n).rename_variables(y_map=lambda j: ("y", T_STRIDE + j))
    sb = schubert_double(b, n).rename_variables(x_map=lambda j: ("y", T_STRIDE + j))
    sa = schubert_double(a, n).rename_variables(
        x_map=lambda j: ("y", j), y_map=lambda j: ("x", j)
    )
    return sc * sb * sa


def triple_convolution(w: Permutation) -> Polynomial:
    """Sum over reduced triples w = a*b*c of S_c(x,t) S_b(t,y) S_a(y,x)."""
    n = max(w.size, 1)
    total = Polynomial.zero()
    for a, b, c in triple_reduced_factorizations(w):
        total = total + _triple_factors(a, b, c, n)
    return total


def verify_triple_convolution(n: int) -> list[dict]:
    rows = []
    for w in sorted(all_permutations(n), key=lambda p: (p.length(), p.one_line)):
        got = triple_convolution(w)
        expected = Polynomial.const(1) if w.is_identity() else Polynomial.zero()
        ok = got == expected
        rows.append(
            {
                "w": w.to_json(),
                "check": "triple-convolution",
                "status": "pass" if ok else "fail",
                "witness": None if ok else str(got),
            }
        )
    return rows


def vanishing_check(
    w: Permutation,
    wp: Permutation,
    family: PolynomialFamily,
    inverse_convention: bool = False,
) -> bool:
    """True iff the family's double polynomial vanishes at y = w'x.

    Canonical substitution is y_j -> x_{w'(j)}; the alternative
    y_j -> x_{w'^-1(j)} sits behind ``inverse_convention``.
    """
    n = max(w.size, wp.size, 1)
    f = family.double(w, n)
    return f.substitute_y_by_permuted_x(wp, inverse=inverse_convention).is_zero()


def vanishing_sweep(
    n: int,
    family: PolynomialFamily,
    restrict: str = "bruhat",
    inverse_convention: bool = False,
) -> list[dict]:
    """Vanishing of S_w(x, w'x) over pairs in S_n.

    restrict="bruhat": pairs with w' < w in Bruhat order (expected to
    vanish; gated).  restrict="length": the broader sweep over
    len(w') < len(w), whose outcome is reported rather than asserted.
    """
    if restrict not in ("bruhat", "length"):
        raise ValueError(f"unknown restriction {restrict!r}")
    perms = sorted(all_permutations(n), key=lambda p: (p.length(), p.one_line))
    rows = []
    for w in perms:
        for wp in perms:
            if restrict == "bruhat":
                if not (bruhat_leq(wp, w) and wp != w):
                    continue
            else:
                if not wp.length() < w.length():
                    continue
            vanishes = vanishing_check(w, wp, family, inverse_convention)
            if restrict == "bruhat":
                status = "pass" if vanishes else "fail"
            else:
                status = "vanishes" if vanishes else "nonzero"
            rows.append(
                {
                    "w": w.to_json(),
                    "wp": wp.to_json(),
                    "check": f"vanishing-{restrict}",
                    "status": status,
                    "witness": None,
                }
            )
    return rows


def verify_chofsch2_hypotheses(n: int, family: PolynomialFamily) -> list[dict]:
    """The three hypotheses forcing a double family to be Schubert:

    degree: deg S_w = length(w); specialization: S_w(x, 0) equals the single
    Schubert polynomial; vanishing: S_w(x, w'x) = 0 for w' < w in Bruhat
    order.
    """
    rows = []
    for w in sorted(all_permutations(n), key=lambda p: (p.length(), p.one_line)):
        f = family.double(w, n)
        deg_ok = f.degree() == w.length() or (f.is_zero() and w.length() == 0)
        rows.append(
            {
                "w": w.to_json(),
                "check": "degree",
                "status": "pass" if deg_ok else "fail",
                "witness": None if deg_ok else str(f.degree()),
            }
        )
        spec_ok = f.subs_y_zero() == schubert_single(w)
        rows.append(
            {
                "w": w.to_json(),
                "check": "y=0-specialization",
                "status": "pass" if spec_ok else "fail",
                "witness": None if spec_ok else str(f.subs_y_zero()),
            }
        )
        bad = [
            wp
            for wp in all_permutations(n)
            if wp != w and bruhat_leq(wp, w) and not vanishing_check(w, wp, family)
        ]
        rows.append(
            {
                "w": w.to_json(),
                "check": "bruhat-vanishing",
                "status": "pass" if not bad else "fail",
                "witness": None if not bad else [b.to_json() for b in bad],
            }
        )
    return rows
