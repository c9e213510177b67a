"""Words in a finitely generated free group.

Generators are integer ids.  A letter is a pair ``(gen, sign)`` with sign
+1 or -1, and a word is a sequence of letters that is kept freely reduced
at all times, so two words represent the same group element exactly when
their letter tuples are equal.  Names such as ``a``/``g`` or ``x0``/``x1``
live in a presentation-level alphabet; words themselves never carry names.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence, Union

Letter = tuple[int, int]

# Alphabets map generator ids to display names.  A tuple of names covers
# ids 0..len-1; the sentinel "x" means the indexed alphabet x0, x1, ...
Alphabet = Union[Sequence[str], str]

DEFAULT_ALPHABET: tuple[str, str] = ("a", "g")
INDEXED = "x"


def _reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    """Freely reduce a letter sequence with a single stack pass."""
    stack: list[Letter] = []
    for gen, sign in letters:
        if sign not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {sign!r}")
        if stack and stack[-1][0] == gen and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((gen, sign))
    return tuple(stack)


class FreeWord:
    """An immutable, always freely reduced word."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()):
        object.__setattr__(self, "letters", _reduce(letters))

    def __setattr__(self, name, value):
        raise AttributeError("FreeWord is immutable")

    @classmethod
    def identity(cls) -> "FreeWord":
        return cls()

    @classmethod
    def generator(cls, gen: int, sign: int = 1) -> "FreeWord":
        return cls([(gen, sign)])

    @classmethod
    def from_syllables(cls, syllables: Iterable[tuple[int, int]]) -> "FreeWord":
        """Build a word from (generator, exponent) pairs."""
        letters: list[Letter] = []
        for gen, exp in syllables:
            sign = 1 if exp > 0 else -1
            letters.extend((gen, sign) for _ in range(abs(exp)))
        return cls(letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, FreeWord) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(self.letters + other.letters)

    def __invert__(self) -> "FreeWord":
        return FreeWord([(g, -s) for g, s in reversed(self.letters)])

    def __pow__(self, n: int) -> "FreeWord":
        if n == 0:
            return FreeWord()
        base = self if n > 0 else ~self
        out = FreeWord()
        for _ in range(abs(n)):
            out = out * base
        return out

    def __repr__(self) -> str:
        return f"FreeWord({format_word(self)!r})"

    def __str__(self) -> str:
        return format_word(self)

    def exponent_sum(self, gen: int) -> int:
        return sum(s for g, s in self.letters if g == gen)

    def generators(self) -> set[int]:
        return {g for g, _ in self.letters}

    def syllables(self) -> list[tuple[int, int]]:
        """Collapse runs of one generator into (generator, exponent) pairs."""
        out: list[tuple[int, int]] = []
        for gen, sign in self.letters:
            if out and out[-1][0] == gen:
                out[-1] = (gen, out[-1][1] + sign)
            else:
                out.append((gen, sign))
        return out


def reduce_word(letters: Iterable[Letter]) -> FreeWord:
    """Freely reduce an arbitrary letter sequence into a FreeWord."""
    return FreeWord(letters)


def free_equal(u: FreeWord, v: FreeWord) -> bool:
    """Equality in the free group; trivial because words stay reduced."""
    return u.letters == v.letters


def _cyclic_reduce(w: FreeWord) -> FreeWord:
    letters = list(w.letters)
    while len(letters) >= 2 and letters[0][0] == letters[-1][0] \
            and letters[0][1] == -letters[-1][1]:
        letters = letters[1:-1]
    word = FreeWord(letters)
    # Freely reduced input stripped symmetrically stays reduced.
    if len(word) != len(letters):
        raise AssertionError("cyclic reduction produced an unreduced word")
    return word


def _letter_key(letter: Letter) -> tuple[int, int]:
    gen, sign = letter
    return (gen, 0 if sign > 0 else 1)


def cyclic_normal_form(w: FreeWord, include_inversion: bool = False) -> FreeWord:
    """Canonical representative of a word up to cyclic rotation.

    The word is cyclically reduced first; among all rotations (and, when
    ``include_inversion`` is set, rotations of the inverse as well) the
    lexicographically least letter sequence wins, ordering letters by
    generator id and then by sign with + before -.
    """
    core = _cyclic_reduce(w)
    if not core:
        return core
    candidates = [core.letters]
    n = len(core.letters)
    for k in range(1, n):
        candidates.append(core.letters[k:] + core.letters[:k])
    if include_inversion:
        inv = (~core).letters
        for k in range(n):
            candidates.append(inv[k:] + inv[:k])
    best = min(candidates, key=lambda ls: tuple(_letter_key(l) for l in ls))
    return FreeWord(best)


def cyclically_equal(u: FreeWord, v: FreeWord, include_inversion: bool = False) -> bool:
    return cyclic_normal_form(u, include_inversion) == cyclic_normal_form(v, include_inversion)


@dataclass(frozen=True)
class Substitution:
    """A homomorphism of free groups given by generator images.

    ``inverse_witness`` optionally carries the images of an inverse map;
    verify_automorphism uses it to certify that the substitution is an
    automorphism.
    """

    images: dict[int, FreeWord]
    inverse_witness: Optional[dict[int, FreeWord]] = None

    def __call__(self, word: FreeWord) -> FreeWord:
        return substitute(word, self)


def substitute(word: FreeWord, sub: Substitution) -> FreeWord:
    """Apply a substitution letter by letter and reduce."""
    letters: list[Letter] = []
    for gen, sign in word.letters:
        if gen not in sub.images:
            raise ValueError(f"substitution has no image for generator {gen}")
        image = sub.images[gen]
        if sign > 0:
            letters.extend(image.letters)
        else:
            letters.extend((~image).letters)
    return FreeWord(letters)


def verify_automorphism(sub: Substitution) -> bool:
    """Certify that ``sub`` is an automorphism via its inverse witness.

    Both compositions must fix every generator on the nose.  Without a
    witness the claim is unverifiable and the answer is False.
    """
    if sub.inverse_witness is None:
        return False
    inverse = Substitution(sub.inverse_witness)
    try:
        for gen, image in sub.images.items():
            if substitute(image, inverse) != FreeWord.generator(gen):
                return False
        for gen, image in sub.inverse_witness.items():
            if substitute(image, sub) != FreeWord.generator(gen):
                return False
    except ValueError:
        return False
    return True


# ---------------------------------------------------------------------------
# Text syntax.
#
# Lower case letters are generators, upper case their inverses, and ^k is a
# power (k may be negative).  Two-generator words use the presentation
# alphabet, by default a/g; the indexed alphabet writes x0, x1, ... with X0
# for an inverse.  "1" is the empty word.  Tokens may be space separated.
# ---------------------------------------------------------------------------


def _name_table(alphabet: Alphabet) -> dict[str, int]:
    if alphabet == INDEXED:
        return {}
    return {name: gen for gen, name in enumerate(alphabet)}


def parse_word(text: str, alphabet: Alphabet = DEFAULT_ALPHABET) -> FreeWord:
    """Parse word text such as ``a^2 G A G`` or ``x0^2 X1``."""
    table = _name_table(alphabet)
    stripped = text.strip()
    if stripped in ("", "1"):
        return FreeWord()
    syllables: list[tuple[int, int]] = []
    i, n = 0, len(stripped)
    while i < n:
        ch = stripped[i]
        if ch.isspace():
            i += 1
            continue
        low = ch.lower()
        sign = 1 if ch.islower() else -1
        i += 1
        if low in table:
            gen = table[low]
        elif low == "x":
            j = i
            while j < n and stripped[j].isdigit():
                j += 1
            if j == i:
                raise ValueError(f"expected generator index after {ch!r} in {text!r}")
            gen = int(stripped[i:j])
            i = j
        else:
            raise ValueError(f"unknown generator letter {ch!r} in {text!r}")
        exp = 1
        if i < n and stripped[i] == "^":
            i += 1
            j = i
            if j < n and stripped[j] in "+-":
                j += 1
            while j < n and stripped[j].isdigit():
                j += 1
            if j == i or not stripped[i:j].lstrip("+-"):
                raise ValueError(f"bad exponent in {text!r}")
            exp = int(stripped[i:j])
            i = j
        syllables.append((gen, sign * exp))
    return FreeWord.from_syllables(syllables)


def format_word(word: FreeWord, alphabet: Alphabet = DEFAULT_ALPHABET) -> str:
    """Render a word in the text syntax; the identity prints as ``1``."""
    if not word:
        return "1"
    parts = []
    for gen, exp in word.syllables():
        if alphabet == INDEXED:
            name = f"x{gen}" if exp > 0 else f"X{gen}"
        else:
            if gen >= len(alphabet):
                raise ValueError(f"alphabet has no name for generator {gen}")
            name = alphabet[gen] if exp > 0 else alphabet[gen].upper()
        parts.append(name if abs(exp) == 1 else f"{name}^{abs(exp)}")
    return " ".join(parts)
