"""Exact normal-ordered calculus for two operators with  p q - q p = c.

Elements are finite sums  sum  coeff(a,b) * q^a p^b  with coefficients in
CPoly (polynomials in the central symbol c over the Gaussian rationals).
Normal order keeps every q to the left of every p; products are reduced
with the single rewrite rule

    p^b q^a = sum_k  k! C(b,k) C(a,k) c^k  q^(a-k) p^(b-k),

which follows from p q = q p + c by induction.  Since c stays formal, an
identity established here holds for every numeric value of c at once;
``subst_c`` specializes when a statement is only true at a particular value
(the harmonic-oscillator conventions use c = -i, where q p - p q = i).

Bracket conventions:

    commutator        [x, y]   = x y - y x
    anticommutator    {x, y}   = x y + y x
    nested, right     [x, y]_n = [[x, y]_(n-1), y],   [x, y]_0 = x
                      {x, y}_n = {{x, y}_(n-1), y},   {x, y}_0 = x
    nested, left      ad_power(x, w, n) = [x, [x, ... [x, w]]]

``exp_conjugate(x, w)`` sums the Hadamard series  e^x w e^-x =
sum ad_power(x, w, n) / n!  and is exact whenever ad_x is nilpotent on w;
otherwise it raises NonTerminatingSeries.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Union

from .scalars import CPoly, CPolyLike, GaussianRational, NonDivisible, parse_cpoly
from .sequences import RatPoly

Key = tuple[int, int]  # (a, b) <-> q^a p^b

ElementLike = Union[int, Fraction, GaussianRational, CPoly, "WeylElement"]


class NonTerminatingSeries(ArithmeticError):
    """A conjugation series did not terminate within the term cap."""


class WeylElement:
    """Normal-ordered element of the algebra generated by q and p.

    ``terms`` maps (a, b) to the CPoly coefficient of q^a p^b and never
    stores zero coefficients, so equality is structural.  Immutable.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Key, CPolyLike] | None = None):
        clean: dict[Key, CPoly] = {}
        if terms:
            for (a, b), v in terms.items():
                if a < 0 or b < 0:
                    raise ValueError("negative operator exponent")
                cp = CPoly.of(v)
                if cp:
                    clean[(a, b)] = cp
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("WeylElement is immutable")

    @staticmethod
    def of(v: ElementLike) -> "WeylElement":
        if isinstance(v, WeylElement):
            return v
        return WeylElement({(0, 0): CPoly.of(v)})

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = WeylElement.of(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, CPoly()) + v
        return WeylElement(out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-WeylElement.of(other))

    def __rsub__(self, other):
        return WeylElement.of(other) + (-self)

    def __neg__(self):
        return WeylElement({k: -v for k, v in self.terms.items()})

    def __mul__(self, other):
        other = WeylElement.of(other)
        out: dict[Key, CPoly] = {}
        for (a1, b1), v1 in self.terms.items():
            for (a2, b2), v2 in other.terms.items():
                coeff = v1 * v2
                # p^b1 q^a2 -> sum over contractions
                for k in range(min(b1, a2) + 1):
                    w = coeff * CPoly.c_power(k, factorial(k) * comb(b1, k) * comb(a2, k))
                    key = (a1 + a2 - k, b1 + b2 - k)
                    out[key] = out.get(key, CPoly()) + w
        return WeylElement(out)

    def __rmul__(self, other):
        # scalars commute with everything, so reuse __mul__
        return WeylElement.of(other) * self

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = WeylElement.of(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational, CPoly)):
            other = WeylElement.of(other)
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- structure -------------------------------------------------------

    def coefficient(self, a: int, b: int) -> CPoly:
        return self.terms.get((a, b), CPoly())

    def support(self) -> list[Key]:
        return sorted(self.terms)

    def subst_c(self, v) -> "WeylElement":
        """Specialize the central symbol: c -> v (a ring homomorphism)."""
        return WeylElement({k: CPoly.of(cp.subst(v)) for k, cp in self.terms.items()})

    def div_c(self, k: int = 1) -> "WeylElement":
        """Exact division of every coefficient by c^k (NonDivisible if not)."""
        return WeylElement({key: cp.div_c(k) for key, cp in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b) in sorted(self.terms):
            mono = " ".join(
                tok
                for tok in (
                    "" if a == 0 else ("q" if a == 1 else f"q^{a}"),
                    "" if b == 0 else ("p" if b == 1 else f"p^{b}"),
                )
                if tok
            )
            coeff = f"({self.terms[(a, b)]})"
            parts.append(f"{coeff} * {mono}" if mono else coeff)
        return " + ".join(parts)

    def __repr__(self):
        return f"<WeylElement {self}>"


# -- factories -------------------------------------------------------------


def q_op(a: int = 1) -> WeylElement:
    return WeylElement({(a, 0): 1})


def p_op(b: int = 1) -> WeylElement:
    return WeylElement({(0, b): 1})


def scalar(v: CPolyLike) -> WeylElement:
    return WeylElement.of(CPoly.of(v))


def monomial(a: int, b: int, coeff: CPolyLike = 1) -> WeylElement:
    return WeylElement({(a, b): coeff})


def hamiltonian() -> WeylElement:
    """H = (p^2 + q^2) / 2, with [q, H] = -c p and [p, H] = c q."""
    return WeylElement({(2, 0): Fraction(1, 2), (0, 2): Fraction(1, 2)})


# -- brackets ---------------------------------------------------------------


def commutator(x: ElementLike, y: ElementLike) -> WeylElement:
    x, y = WeylElement.of(x), WeylElement.of(y)
    return x * y - y * x


def anticommutator(x: ElementLike, y: ElementLike) -> WeylElement:
    x, y = WeylElement.of(x), WeylElement.of(y)
    return x * y + y * x


def nested_commutator(x: ElementLike, y: ElementLike, n: int) -> WeylElement:
    """[x, y]_n = [[x, y]_(n-1), y] with [x, y]_0 = x."""
    if n < 0:
        raise ValueError("negative nesting depth")
    out = WeylElement.of(x)
    y = WeylElement.of(y)
    for _ in range(n):
        out = commutator(out, y)
    return out


def nested_anticommutator(x: ElementLike, y: ElementLike, n: int) -> WeylElement:
    """{x, y}_n = {{x, y}_(n-1), y} with {x, y}_0 = x."""
    if n < 0:
        raise ValueError("negative nesting depth")
    out = WeylElement.of(x)
    y = WeylElement.of(y)
    for _ in range(n):
        out = anticommutator(out, y)
    return out


def shifted_nested_anticomm(a: CPolyLike, n: int) -> WeylElement:
    """The symbolic binomial  ({q,H} + a)_n = sum_k C(n,k) a^(n-k) {q,H}_k.

    Convention {q,H}_0 = q.  For a central a this equals {q, H + a/2}_n,
    which is what makes the symmetrized power identities tractable.
    """
    acc = WeylElement()
    a = CPoly.of(a)
    term = q_op()
    h = hamiltonian()
    for k in range(n + 1):
        acc = acc + scalar(a ** (n - k) * comb(n, k)) * term
        term = anticommutator(term, h)
    return acc


def left_nested_commutator(h: ElementLike, x: ElementLike, n: int) -> WeylElement:
    """Left-iterated bracket  [x, [x, ... [x, h]]]  (n brackets)."""
    if n < 0:
        raise ValueError("negative nesting depth")
    x = WeylElement.of(x)
    out = WeylElement.of(h)
    for _ in range(n):
        out = commutator(x, out)
    return out


def hadamard_conjugate(
    x: ElementLike, w: ElementLike, t: Fraction | int = 1, max_terms: int = 64
) -> WeylElement:
    """e^(t x) w e^(-t x) = sum_n t^n/n! [x,[x,...[x,w]]], exact when finite.

    Raises NonTerminatingSeries if ad_x is not nilpotent on w within
    ``max_terms`` brackets.
    """
    x = WeylElement.of(x)
    t = Fraction(t)
    term = WeylElement.of(w)
    acc = term
    for n in range(1, max_terms + 1):
        term = commutator(x, term)
        if not term:
            return acc
        acc = acc + scalar(t**n / factorial(n)) * term
    raise NonTerminatingSeries(
        f"conjugation series still has nonzero terms after {max_terms} brackets"
    )


def poly_of_element(poly: RatPoly, w: ElementLike) -> WeylElement:
    """Evaluate a rational polynomial at an algebra element."""
    w = WeylElement.of(w)
    acc = WeylElement()
    for k, coeff in poly.coeffs.items():
        acc = acc + scalar(coeff) * w**k
    return acc


# -- rendering / parsing ----------------------------------------------------

_TERM_RE = re.compile(
    r"^\((?P<coeff>.+)\)(?: \* (?:(?P<qm>q(?:\^\d+)?))?\s*(?:(?P<pm>p(?:\^\d+)?))?)?$"
)


def _split_top(s: str, sep: str = " + ") -> Iterable[str]:
    # split on sep at paren depth 0 only
    depth = 0
    start = 0
    i = 0
    while i < len(s):
        ch = s[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and s.startswith(sep, i):
            yield s[start:i]
            i += len(sep)
            start = i
            continue
        i += 1
    yield s[start:]


def _parse_exp(tok: str | None) -> int:
    if not tok:
        return 0
    return 1 if "^" not in tok else int(tok.split("^")[1])


def parse_element(text: str) -> WeylElement:
    """Inverse of str(): parse "(coeff) * q^a p^b" terms joined by " + "."""
    s = text.strip()
    if s == "0":
        return WeylElement()
    out: dict[Key, CPoly] = {}
    for piece in _split_top(s):
        m = _TERM_RE.match(piece.strip())
        if m is None:
            raise ValueError(f"bad element term: {piece!r}")
        key = (_parse_exp(m.group("qm")), _parse_exp(m.group("pm")))
        coeff = parse_cpoly(m.group("coeff"))
        out[key] = out.get(key, CPoly()) + coeff
    return WeylElement(out)
