"""Independent torus-knot side: exact Alexander polynomials, resultants,
and the homology of cyclic branched coverings.

Everything here is computed from (p, q) alone, with no reference to any
diagram, so it can serve as a cross-check for the diagram pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .presentation import (
    AbelianInvariants,
    IntMatrix,
    Presentation,
    _det_bareiss,
    homology_of_matrix,
)
from .words import FreeWord


@dataclass(frozen=True)
class TorusKnotSpec:
    """The torus knot t(p, q); q == +-1 gives the unknot (degenerate)."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 2:
            raise ValueError("p must be at least 2")
        if self.q < 1:
            raise ValueError("q must be at least 1")
        if gcd(self.p, self.q) != 1:
            raise ValueError("p and q must be coprime")

    @property
    def degenerate(self) -> bool:
        return self.q == 1

    def __str__(self) -> str:
        return f"t({self.p}, {self.q})"


def torus_knot_group(spec: TorusKnotSpec) -> Presentation:
    """The standard two-generator presentation <x, y | x^q y^-p>."""
    relator = (FreeWord.generator(0, 1) ** spec.q) * (FreeWord.generator(1, 1) ** -spec.p)
    return Presentation(2, (relator,), ("x", "y"))


# ---------------------------------------------------------------------------
# Closed forms for the diagram relator words (alpha = generator 0,
# gamma = generator 1).
# ---------------------------------------------------------------------------


def _check_family_input(p: int, m: int, sign: int) -> None:
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if p < 2:
        raise ValueError("p must be at least 2")
    if sign == 1 and m < 1:
        raise ValueError("m must be at least 1 for sign +")
    if sign == -1 and m < 2:
        raise ValueError("m must be at least 2 for sign -")


def closed_form_word(p: int, m: int, sign: int) -> FreeWord:
    """a^(m(p-1)+-1) (g^-1 a^-m)^(p-1) g^-1, the expected diagram relator."""
    _check_family_input(p, m, sign)
    alpha = FreeWord.generator(0, 1)
    gamma_inv = FreeWord.generator(1, -1)
    word = alpha ** (m * (p - 1) + sign)
    for _ in range(p - 1):
        word = word * gamma_inv * (alpha ** -m)
    return word * gamma_inv


def conjugate_power_form(p: int, m: int, sign: int) -> FreeWord:
    """A conjugate of closed_form_word that substitution carries to x^(mp+-1) y^-p.

    For sign +, this is a^(mp+1) (g^-1 a^-m)^p, conjugate to the closed form
    by a^m.  For sign -, a^(mp-1) (a^-m g^-1)^p reduces to the closed form
    as it stands.
    """
    _check_family_input(p, m, sign)
    alpha = FreeWord.generator(0, 1)
    gamma_inv = FreeWord.generator(1, -1)
    word = alpha ** (m * p + sign)
    if sign == 1:
        for _ in range(p):
            word = word * gamma_inv * (alpha ** -m)
    else:
        for _ in range(p):
            word = word * (alpha ** -m) * gamma_inv
    return word


# ---------------------------------------------------------------------------
# Exact integer polynomials in one variable t.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficient i belonging to t^i."""

    coeffs: tuple[int, ...]

    @staticmethod
    def from_coeffs(values) -> "IntPolynomial":
        coeffs = [int(v) for v in values]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return IntPolynomial(tuple(coeffs))

    @staticmethod
    def monomial(degree: int, coeff: int = 1) -> "IntPolynomial":
        return IntPolynomial.from_coeffs([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        out = [0] * n
        for i, c in enumerate(self.coeffs):
            out[i] += c
        for i, c in enumerate(other.coeffs):
            out[i] += c
        return IntPolynomial.from_coeffs(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial.from_coeffs(out)

    def exact_div(self, divisor: "IntPolynomial") -> "IntPolynomial":
        """Exact polynomial division over Z; raises if it does not divide."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        lead = divisor.coeffs[-1]
        dd = divisor.degree
        out = [0] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            if rem[i] == 0:
                continue
            q, r = divmod(rem[i], lead)
            if r:
                raise ValueError("polynomial division is not exact")
            out[i - dd] = q
            for j, c in enumerate(divisor.coeffs):
                rem[i - dd + j] -= q * c
        if any(rem):
            raise ValueError("polynomial division is not exact")
        return IntPolynomial.from_coeffs(out)

    def reduce_mod_cyclotomic(self, n: int) -> tuple[int, ...]:
        """Coefficients of this polynomial modulo t^n - 1."""
        if n < 1:
            raise ValueError("n must be positive")
        out = [0] * n
        for i, c in enumerate(self.coeffs):
            out[i % n] += c
        return tuple(out)

    def evaluate(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __str__(self) -> str:
        """Ascending-degree rendering: c0 + c1*t + c2*t^2 + ..."""
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                t_part = "t" if i == 1 else f"t^{i}"
                body = t_part if mag == 1 else f"{mag}*{t_part}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'-' if c < 0 else '+'} {body}")
        return " ".join(parts)


def alexander_polynomial(spec: TorusKnotSpec) -> IntPolynomial:
    """(t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)), computed by exact division."""
    p, q = spec.p, abs(spec.q)
    if q == 1:
        return IntPolynomial((1,))
    one = IntPolynomial((1,))
    numerator = (IntPolynomial.monomial(p * q) - one) * (IntPolynomial.monomial(1) - one)
    denominator = (IntPolynomial.monomial(p) - one) * (IntPolynomial.monomial(q) - one)
    return numerator.exact_div(denominator)


def relator_polynomial(base: FreeWord, n: int) -> IntPolynomial:
    """f(t) = sum over generators x_j of (exponent sum of x_j) * t^j.

    This is the polynomial attached to a cyclic presentation whose relators
    are the n shift images of ``base``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    coeffs = [0] * n
    for g, s in base.letters:
        if not 0 <= g < n:
            raise ValueError(f"generator index {g} out of range for n={n}")
        coeffs[g] += s
    return IntPolynomial.from_coeffs(coeffs)


def resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    """Res(f, g) via the Sylvester matrix and a fraction-free determinant."""
    if f.is_zero() or g.is_zero():
        return 0
    df, dg = f.degree, g.degree
    if df == 0:
        return f.coeffs[0] ** dg
    if dg == 0:
        return g.coeffs[0] ** df
    size = df + dg
    matrix: IntMatrix = [[0] * size for _ in range(size)]
    fr = list(reversed(f.coeffs))
    gr = list(reversed(g.coeffs))
    for i in range(dg):
        for j, c in enumerate(fr):
            matrix[i][i + j] = c
    for i in range(df):
        for j, c in enumerate(gr):
            matrix[dg + i][i + j] = c
    return _det_bareiss(matrix)


def branched_cover_homology(spec: TorusKnotSpec, n: int) -> AbelianInvariants:
    """H1 of the n-fold cyclic branched covering of S^3 over t(p, q).

    The Alexander module of a torus knot is cyclic, so H1 is presented by
    the n x n circulant whose rows are t^i * Delta(t) reduced mod t^n - 1.
    The group order is cross-checked against |Res(Delta, t^n - 1)|.
    """
    if n < 2:
        raise ValueError("covering degree n must be at least 2")
    delta = alexander_polynomial(spec)
    shifted = delta
    matrix: IntMatrix = []
    for _ in range(n):
        matrix.append(list(shifted.reduce_mod_cyclotomic(n)))
        shifted = shifted * IntPolynomial.monomial(1)
    invariants = homology_of_matrix(matrix, n)
    modulus = IntPolynomial.monomial(n) - IntPolynomial((1,))
    res = abs(resultant(delta, modulus))
    if invariants.order() != res:
        raise AssertionError(
            f"branched cover homology order {invariants.order()} "
            f"disagrees with |resultant| {res} for {spec}, n={n}"
        )
    return invariants
