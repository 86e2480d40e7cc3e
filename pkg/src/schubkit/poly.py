"""Sparse exact multivariate polynomials over the integers.

Two variable families, x1, x2, ... and y1, y2, ...  A term is keyed by a
pair of exponent tuples (trailing zeros trimmed); coefficients are Python
ints, so everything is exact.  Includes the Demazure (divided-difference)
operator, variable swaps and the substitutions needed elsewhere.

>>> f = (x(1) - y(1)) * (x(1) + y(1))
>>> print(f)
x1^2 - y1^2
>>> print(x(1).demazure(1))
1
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping, Sequence

__all__ = ["Polynomial", "x", "y", "zero", "one", "const"]

Exps = tuple[int, ...]
Key = tuple[Exps, Exps]


def _trim(exps: Iterable[int]) -> Exps:
    out = list(exps)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _get(exps: Exps, i: int) -> int:
    """Exponent of the i-th variable, 1-based."""
    return exps[i - 1] if i <= len(exps) else 0


def _set(exps: Exps, i: int, value: int) -> Exps:
    out = list(exps) + [0] * max(0, i - len(exps))
    out[i - 1] = value
    return _trim(out)


class Polynomial:
    """Immutable sparse polynomial in x and y families over Z."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Key, int] | None = None):
        clean: dict[Key, int] = {}
        if terms:
            for (xe, ye), c in terms.items():
                if c:
                    clean[(_trim(xe), _trim(ye))] = c
        object.__setattr__(self, "_terms", clean)

    # -- constructors --------------------------------------------------

    @staticmethod
    def zero() -> "Polynomial":
        return Polynomial()

    @staticmethod
    def const(c: int) -> "Polynomial":
        return Polynomial({((), ()): int(c)})

    @staticmethod
    def x(i: int) -> "Polynomial":
        if i < 1:
            raise ValueError(f"variable index must be >= 1: {i}")
        return Polynomial({(_set((), i, 1), ()): 1})

    @staticmethod
    def y(j: int) -> "Polynomial":
        if j < 1:
            raise ValueError(f"variable index must be >= 1: {j}")
        return Polynomial({((), _set((), j, 1)): 1})

    # -- ring operations -------------------------------------------------

    def __add__(self, other: "Polynomial | int") -> "Polynomial":
        other = _coerce(other)
        terms = dict(self._terms)
        for k, c in other._terms.items():
            terms[k] = terms.get(k, 0) + c
        return Polynomial(terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "Polynomial | int") -> "Polynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other: "Polynomial | int") -> "Polynomial":
        return _coerce(other) + (-self)

    def __mul__(self, other: "Polynomial | int") -> "Polynomial":
        other = _coerce(other)
        terms: dict[Key, int] = {}
        for (xa, ya), ca in self._terms.items():
            for (xb, yb), cb in other._terms.items():
                k = (_add_exps(xa, xb), _add_exps(ya, yb))
                terms[k] = terms.get(k, 0) + ca * cb
        return Polynomial(terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative powers are not defined")
        result = Polynomial.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Total degree counting x and y; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(xe) + sum(ye) for xe, ye in self._terms)

    # -- variable operations ----------------------------------------------

    def swap_x(self, i: int) -> "Polynomial":
        """Exchange x_i and x_{i+1} in every term (an involution)."""
        terms: dict[Key, int] = {}
        for (xe, ye), c in self._terms.items():
            a, b = _get(xe, i), _get(xe, i + 1)
            k = (_set(_set(xe, i, b), i + 1, a), ye)
            terms[k] = terms.get(k, 0) + c
        return Polynomial(terms)

    def demazure(self, i: int) -> "Polynomial":
        """Divided difference (f - s_i f)/(x_i - x_{i+1}), exactly.

        Computed term-by-term from the closed form
        (x^a y^b - x^b y^a)/(x - y) = +-(complete homogeneous sum), so the
        division is exact by construction.

        >>> print(Polynomial.x(1).__pow__(2).demazure(1))
        x1 + x2
        >>> (Polynomial.x(1) * Polynomial.x(2)).demazure(1).is_zero()
        True
        """
        terms: dict[Key, int] = {}
        for (xe, ye), c in self._terms.items():
            a, b = _get(xe, i), _get(xe, i + 1)
            if a == b:
                continue
            if a > b:
                for t in range(a - b):
                    k = (_set(_set(xe, i, a - 1 - t), i + 1, b + t), ye)
                    terms[k] = terms.get(k, 0) + c
            else:
                for t in range(b - a):
                    k = (_set(_set(xe, i, a + t), i + 1, b - 1 - t), ye)
                    terms[k] = terms.get(k, 0) - c
        return Polynomial(terms)

    def subs_y_zero(self) -> "Polynomial":
        """Set every y_j to 0."""
        terms: dict[Key, int] = {}
        for (xe, ye), c in self._terms.items():
            if not ye:
                terms[(xe, ye)] = terms.get((xe, ye), 0) + c
        return Polynomial(terms)

    def substitute_y_by_permuted_x(self, wp, inverse: bool = False) -> "Polynomial":
        """Replace y_j by x_{wp(j)} (or x_{wp^-1(j)} when inverse=True).

        ``wp`` is a Permutation acting as the identity beyond its support.
        """
        action = wp.inverse() if inverse else wp
        terms: dict[Key, int] = {}
        for (xe, ye), c in self._terms.items():
            new_x = list(xe)
            for j, e in enumerate(ye, start=1):
                if e:
                    tgt = action(j)
                    if tgt > len(new_x):
                        new_x.extend([0] * (tgt - len(new_x)))
                    new_x[tgt - 1] += e
            k = (_trim(new_x), ())
            terms[k] = terms.get(k, 0) + c
        return Polynomial(terms)

    def rename_variables(
        self,
        x_map: Callable[[int], tuple[str, int]] | None = None,
        y_map: Callable[[int], tuple[str, int]] | None = None,
    ) -> "Polynomial":
        """Send each variable to another variable, e.g. x_j -> y_{8+j}.

        Maps return a (family, index) pair with family "x" or "y".  Useful
        for realizing a third alphabet by index offset.
        """
        terms: dict[Key, int] = {}
        for (xe, ye), c in self._terms.items():
            nx: dict[int, int] = {}
            ny: dict[int, int] = {}
            for fam, exps, mapping in (("x", xe, x_map), ("y", ye, y_map)):
                for j, e in enumerate(exps, start=1):
                    if not e:
                        continue
                    tf, ti = (fam, j) if mapping is None else mapping(j)
                    bucket = nx if tf == "x" else ny
                    bucket[ti] = bucket.get(ti, 0) + e
            k = (_from_dict(nx), _from_dict(ny))
            terms[k] = terms.get(k, 0) + c
        return Polynomial(terms)

    def evaluate(self, x_values: Sequence[int], y_values: Sequence[int] = ()) -> int:
        """Exact integer evaluation; missing variables default to 0."""
        total = 0
        for (xe, ye), c in self._terms.items():
            v = c
            for j, e in enumerate(xe):
                if e:
                    base = x_values[j] if j < len(x_values) else 0
                    v *= base**e
            for j, e in enumerate(ye):
                if e:
                    base = y_values[j] if j < len(y_values) else 0
                    v *= base**e
            total += v
        return total

    def max_index(self) -> tuple[int, int]:
        """Largest x index and y index appearing (0 if family absent)."""
        mx = my = 0
        for xe, ye in self._terms:
            mx = max(mx, len(xe))
            my = max(my, len(ye))
        return mx, my

    # -- presentation -----------------------------------------------------

    def sorted_terms(self) -> list[tuple[Key, int]]:
        """Graded order (degree descending), then descending lex on exponents."""
        return sorted(
            self._terms.items(),
            key=lambda kv: (sum(kv[0][0]) + sum(kv[0][1]), kv[0]),
            reverse=True,
        )

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for (xe, ye), c in self.sorted_terms():
            factors = [
                f"{name}{j}" + (f"^{e}" if e > 1 else "")
                for name, exps in (("x", xe), ("y", ye))
                for j, e in enumerate(exps, start=1)
                if e
            ]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            pieces.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(pieces)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"Polynomial({self!s})"

    def to_json(self) -> list[dict]:
        return [
            {"coeff": c, "x_exps": list(xe), "y_exps": list(ye)}
            for (xe, ye), c in self.sorted_terms()
        ]

    @staticmethod
    def from_json(data: Iterable[Mapping]) -> "Polynomial":
        terms: dict[Key, int] = {}
        for t in data:
            k = (_trim(t.get("x_exps", ())), _trim(t.get("y_exps", ())))
            terms[k] = terms.get(k, 0) + int(t["coeff"])
        return Polynomial(terms)


def _coerce(v: "Polynomial | int") -> Polynomial:
    return v if isinstance(v, Polynomial) else Polynomial.const(v)


def _add_exps(a: Exps, b: Exps) -> Exps:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, e in enumerate(b):
        out[i] += e
    return _trim(out)


def _from_dict(d: dict[int, int]) -> Exps:
    if not d:
        return ()
    out = [0] * max(d)
    for i, e in d.items():
        out[i - 1] = e
    return _trim(out)


# Convenience aliases used throughout the package and tests.
x = Polynomial.x
y = Polynomial.y
zero = Polynomial.zero
one = Polynomial.const(1)
const = Polynomial.const


if __name__ == "__main__":
    import doctest

    doctest.testmod()
