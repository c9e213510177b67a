"""Finite presentations, exact integer Smith normal form, and first homology.

All matrix work is done with Python integers, so there is no overflow and
no floating point.  smith_normal_form returns the diagonal together with
the unimodular transforms and re-verifies the factorization U*M*V == D on
every call; homology reads the invariant factors off that certified form.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .words import (
    INDEXED,
    Alphabet,
    FreeWord,
    cyclic_normal_form,
    format_word,
    parse_word,
)

IntMatrix = list[list[int]]

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class Presentation:
    """A finite presentation with ``generator_count`` generators."""

    generator_count: int
    relators: tuple[FreeWord, ...]
    alphabet: Alphabet = ("a", "g")

    def __post_init__(self):
        for rel in self.relators:
            bad = [g for g in rel.generators() if not 0 <= g < self.generator_count]
            if bad:
                raise ValueError(f"relator uses undefined generators {sorted(bad)}")

    def to_text(self) -> str:
        parts = [f"gens={self.generator_count}"]
        parts.extend(f"rel={format_word(rel, self.alphabet)}" for rel in self.relators)
        return "; ".join(parts)

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "generators": self.generator_count,
            "alphabet": "x" if self.alphabet == INDEXED else list(self.alphabet),
            "relators": [format_word(rel, self.alphabet) for rel in self.relators],
        }


def presentation_from_text(text: str) -> Presentation:
    """Parse the ``gens=n; rel=...; rel=...`` format."""
    fields = [f.strip() for f in text.strip().rstrip(";").split(";") if f.strip()]
    if not fields or not fields[0].startswith("gens="):
        raise ValueError(f"presentation text must start with gens=<n>: {text!r}")
    count = int(fields[0][len("gens="):])
    words = []
    uses_indexed = False
    for f in fields[1:]:
        if not f.startswith("rel="):
            raise ValueError(f"expected rel=<word>, got {f!r}")
        body = f[len("rel="):]
        uses_indexed = uses_indexed or "x" in body.lower()
        words.append(body)
    alphabet: Alphabet = INDEXED if uses_indexed else ("a", "g")
    relators = tuple(parse_word(w, alphabet) for w in words)
    return Presentation(count, relators, alphabet)


def presentation_from_json(doc: dict) -> Presentation:
    alphabet: Alphabet = INDEXED if doc["alphabet"] == "x" else tuple(doc["alphabet"])
    relators = tuple(parse_word(w, alphabet) for w in doc["relators"])
    return Presentation(doc["generators"], relators, alphabet)


def abelianization_matrix(pres: Presentation) -> IntMatrix:
    """Row i holds the exponent sums of relator i over all generators."""
    return [
        [rel.exponent_sum(g) for g in range(pres.generator_count)]
        for rel in pres.relators
    ]


# ---------------------------------------------------------------------------
# Exact Smith normal form with unimodular transforms.
# ---------------------------------------------------------------------------


def _identity(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _mat_mul(A: IntMatrix, B: IntMatrix) -> IntMatrix:
    rows, inner, cols = len(A), len(B), len(B[0]) if B else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        for k in range(inner):
            a = A[i][k]
            if a:
                for j in range(cols):
                    out[i][j] += a * B[k][j]
    return out


def _det_bareiss(M: IntMatrix) -> int:
    """Exact determinant by fraction-free Gaussian elimination."""
    n = len(M)
    if n == 0:
        return 1
    m = [row[:] for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class SmithForm:
    """Certified decomposition U*M*V == D with U, V unimodular."""

    D: IntMatrix
    U: IntMatrix
    V: IntMatrix

    def __iter__(self):
        # Allows D, U, V = smith_normal_form(M).
        return iter((self.D, self.U, self.V))

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[k][k] for k in range(min(len(self.D), len(self.D[0]) if self.D else 0)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def smith_normal_form(M: IntMatrix) -> SmithForm:
    """Diagonalize an integer matrix by unimodular row and column moves.

    The diagonal entries are nonnegative and each divides the next.  The
    transforms are accumulated alongside and the identity U*M*V == D plus
    det(U), det(V) == +-1 are rechecked before returning; a failure there
    would be an implementation bug, not bad input.
    """
    rows = len(M)
    cols = len(M[0]) if rows else 0
    for row in M:
        if len(row) != cols:
            raise ValueError("matrix rows have unequal lengths")
    A = [[int(x) for x in row] for row in M]
    U = _identity(rows)
    V = _identity(cols)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):
        # row dst += q * row src
        for j in range(cols):
            A[dst][j] += q * A[src][j]
        for j in range(rows):
            U[dst][j] += q * U[src][j]

    def add_col(src, dst, q):
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    def negate_row(i):
        A[i] = [-x for x in A[i]]
        U[i] = [-x for x in U[i]]

    t = 0
    limit = min(rows, cols)
    while t < limit:
        # Locate a pivot of least absolute value in the working submatrix.
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if A[i][j] != 0 and (pivot is None or abs(A[i][j]) < abs(A[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, rows):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    add_row(t, i, -q)
                    if A[i][t]:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, cols):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    add_col(t, j, -q)
                    if A[t][j]:
                        swap_cols(t, j)
                        dirty = True
        if A[t][t] < 0:
            negate_row(t)
        t += 1

    # Enforce the divisibility chain d_i | d_{i+1}.
    changed = True
    while changed:
        changed = False
        for i in range(t - 1):
            if A[i + 1][i + 1] % A[i][i] != 0:
                # Fold entry (i+1, i+1) into column i, then re-clear.
                add_col(i + 1, i, 1)
                while A[i + 1][i]:
                    q = A[i][i] // A[i + 1][i]
                    add_row(i + 1, i, -q)
                    A[i], A[i + 1] = A[i + 1], A[i]
                    U[i], U[i + 1] = U[i + 1], U[i]
                q = A[i][i + 1] // A[i][i]
                add_col(i, i + 1, -q)
                if A[i][i] < 0:
                    negate_row(i)
                if A[i + 1][i + 1] < 0:
                    negate_row(i + 1)
                changed = True

    form = SmithForm(A, U, V)
    _verify_smith(M, form, rows, cols)
    return form


def _verify_smith(M: IntMatrix, form: SmithForm, rows: int, cols: int) -> None:
    product = _mat_mul(_mat_mul(form.U, [[int(x) for x in row] for row in M]), form.V)
    for i in range(rows):
        for j in range(cols):
            if product[i][j] != form.D[i][j]:
                raise AssertionError("Smith normal form certificate U*M*V == D failed")
            if i != j and form.D[i][j] != 0:
                raise AssertionError("Smith normal form result is not diagonal")
    if abs(_det_bareiss(form.U)) != 1 or abs(_det_bareiss(form.V)) != 1:
        raise AssertionError("Smith normal form transform is not unimodular")
    nonzero = [d for d in form.diagonal if d != 0]
    for a, b in zip(nonzero, nonzero[1:]):
        if b % a != 0:
            raise AssertionError("Smith normal form divisibility chain failed")
    if any(d < 0 for d in form.diagonal):
        raise AssertionError("Smith normal form diagonal must be nonnegative")


# ---------------------------------------------------------------------------
# First homology.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AbelianInvariants:
    """H1 as a free rank plus a divisibility chain of torsion orders."""

    free_rank: int
    torsion: tuple[int, ...]

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def order(self) -> int:
        """Group order; 0 stands for infinite."""
        if self.free_rank:
            return 0
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def __str__(self) -> str:
        if self.is_trivial:
            return "trivial"
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts)


def homology(pres: Presentation) -> AbelianInvariants:
    """First homology of the presented group from the certified Smith form."""
    matrix = abelianization_matrix(pres)
    if not matrix:
        return AbelianInvariants(pres.generator_count, ())
    form = smith_normal_form(matrix)
    torsion = tuple(d for d in form.diagonal if d > 1)
    return AbelianInvariants(pres.generator_count - form.rank, torsion)


def homology_of_matrix(matrix: IntMatrix, generator_count: int) -> AbelianInvariants:
    """H1 of the cokernel of a relation matrix (rows are relations)."""
    if not matrix:
        return AbelianInvariants(generator_count, ())
    form = smith_normal_form(matrix)
    torsion = tuple(d for d in form.diagonal if d > 1)
    return AbelianInvariants(generator_count - form.rank, torsion)


# ---------------------------------------------------------------------------
# Cyclic presentations and the two-generator lens space check.
# ---------------------------------------------------------------------------


def shift_word(word: FreeWord, k: int, n: int) -> FreeWord:
    """Apply the generator rotation x_i -> x_{i+k mod n}."""
    return FreeWord([((g + k) % n, s) for g, s in word.letters])


def is_cyclic_presentation(pres: Presentation) -> Optional[FreeWord]:
    """Return the base word when the relators are the shift orbit of one word.

    The relators, up to cyclic rotation of each word, must coincide as a
    multiset with the n shifts of relator 0 under x_i -> x_{i+1 mod n}.
    Returns None otherwise.
    """
    n = pres.generator_count
    if len(pres.relators) != n or n == 0:
        return None
    base = pres.relators[0]
    expected = sorted(
        cyclic_normal_form(shift_word(base, k, n)).letters for k in range(n)
    )
    actual = sorted(cyclic_normal_form(rel).letters for rel in pres.relators)
    if expected != actual:
        return None
    return base


def lens_space_check(pres: Presentation) -> tuple[int, bool]:
    """Order of H1 for a two-generator presentation whose second relator
    is a single generator.

    Killing that generator collapses the first relator to a power e of the
    remaining one, so the group is cyclic of order |e| (0 means infinite).
    Returns (h1_order, trivial_pi1).
    """
    if pres.generator_count != 2 or len(pres.relators) != 2:
        raise ValueError("expected two generators and two relators")
    second = pres.relators[1]
    if len(second) != 1:
        raise ValueError("second relator must be a single generator letter")
    killed = second.letters[0][0]
    survivor = 1 - killed
    e = pres.relators[0].exponent_sum(survivor)
    return abs(e), abs(e) == 1
