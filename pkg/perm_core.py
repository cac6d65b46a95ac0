"""
Permutation values, notation parsing/printing, group arithmetic, the named
generators s_i, t_m, u_2r, v_2r, and permutation statistics.

Points are 1-based throughout. Products are taken left to right:
compose(a, b)(x) = b(a(x)), so the left factor acts first.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache, reduce
from typing import FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from errors import DegreeError, IndexRangeError, ParseError


class Parity(str, Enum):
    EVEN = "even"
    ODD = "odd"

    def __xor__(self, other: "Parity") -> "Parity":
        return Parity.EVEN if self is other else Parity.ODD


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}, stored as its one-line image table."""

    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if not images:
            raise DegreeError("Permutation degree must be at least 1.")
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ParseError(f"Image table {list(images)} is not a permutation of 1..{len(images)}.")

    @classmethod
    def _trusted(cls, images: Tuple[int, ...]) -> "Permutation":
        # Skips validation; only for image tables built by this module.
        obj = object.__new__(cls)
        object.__setattr__(obj, "images", images)
        return obj

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, k: int) -> "Permutation":
        return power(self, k)

    def __str__(self) -> str:
        return format_one_line(self)


@dataclass(frozen=True)
class CycleDecomposition:
    """Disjoint cycles of a permutation, fixed points omitted.

    Normalized: each cycle starts with its largest point, and cycles are
    sorted by that point in descending order.
    """

    degree: int
    cycles: Tuple[Tuple[int, ...], ...]

    def to_permutation(self) -> Permutation:
        images = list(range(1, self.degree + 1))
        for cycle in self.cycles:
            for pos, point in enumerate(cycle):
                images[point - 1] = cycle[(pos + 1) % len(cycle)]
        return Permutation(tuple(images))

    def __str__(self) -> str:
        if not self.cycles:
            return "()"
        return "".join("(" + ",".join(str(x) for x in cycle) + ")" for cycle in self.cycles)


class Symbol(str, Enum):
    S = "s"
    T = "t"
    U = "u"
    V = "v"


class Letter(NamedTuple):
    symbol: Symbol
    index: int
    exponent: int = 1


def _check_letter_index(symbol: Symbol, index: int, n: int) -> None:
    if symbol is Symbol.S:
        ok = 1 <= index <= n - 1
        expected = f"1 <= i <= {n - 1}"
    elif symbol is Symbol.T:
        ok = 2 <= index <= n
        expected = f"2 <= m <= {n}"
    else:
        ok = index % 2 == 0 and 4 <= index <= n
        expected = f"even 4 <= 2r <= {n}"
    if not ok:
        raise IndexRangeError(f"Generator {symbol.value}{index} out of range for degree {n} ({expected}).")


@dataclass(frozen=True)
class GeneratorWord:
    """A product of generator powers, read left to right."""

    degree: int
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.degree < 1:
            raise DegreeError("Word degree must be at least 1.")
        letters = tuple(Letter(Symbol(sym), int(idx), int(exp)) for sym, idx, exp in self.letters)
        object.__setattr__(self, "letters", letters)
        for letter in letters:
            _check_letter_index(letter.symbol, letter.index, self.degree)

    def __mul__(self, other: "GeneratorWord") -> "GeneratorWord":
        if self.degree != other.degree:
            raise DegreeError(f"Cannot concatenate words of degree {self.degree} and {other.degree}.")
        return GeneratorWord(self.degree, self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_word(self)


def word(n: int, *letters: Tuple[str, int, int]) -> GeneratorWord:
    """Shorthand: word(4, ("t", 3, 1), ("t", 4, 1))."""
    return GeneratorWord(n, tuple(Letter(Symbol(s), i, e) for s, i, e in letters))


# --- Group arithmetic ---


def identity(n: int) -> Permutation:
    """The identity of S_n."""
    if n < 1:
        raise DegreeError("Degree must be at least 1.")
    return Permutation._trusted(tuple(range(1, n + 1)))


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Left-to-right product: (a*b)(x) = b(a(x))."""
    if a.degree != b.degree:
        raise DegreeError(f"Degree mismatch: {a.degree} vs {b.degree}.")
    bi = b.images
    return Permutation._trusted(tuple(bi[x - 1] for x in a.images))


def compose_all(perms: Iterable[Permutation], n: int) -> Permutation:
    """Left-to-right product of perms; the identity when empty."""
    return reduce(compose, perms, identity(n))


def inverse(p: Permutation) -> Permutation:
    """The permutation undoing p."""
    inv = [0] * p.degree
    for x, y in enumerate(p.images, 1):
        inv[y - 1] = x
    return Permutation._trusted(tuple(inv))


def power(p: Permutation, k: int) -> Permutation:
    """p**k for any integer k, computed cycle by cycle."""
    images = list(range(1, p.degree + 1))
    for cycle in _raw_cycles(p):
        length = len(cycle)
        for pos, point in enumerate(cycle):
            images[point - 1] = cycle[(pos + k) % length]
    return Permutation._trusted(tuple(images))


def embed(p: Permutation, n: int) -> Permutation:
    """Extend p to degree n by fixing the new points."""
    if n < p.degree:
        raise DegreeError(f"Cannot embed degree {p.degree} into degree {n}.")
    return Permutation._trusted(p.images + tuple(range(p.degree + 1, n + 1)))


def _raw_cycles(p: Permutation) -> List[Tuple[int, ...]]:
    seen = [False] * (p.degree + 1)
    result = []
    for start in range(1, p.degree + 1):
        if seen[start]:
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = True
            cycle.append(x)
            x = p.images[x - 1]
        if len(cycle) > 1:
            result.append(tuple(cycle))
    return result


def cycles(p: Permutation) -> CycleDecomposition:
    """Nontrivial cycles, each led by its largest point, largest first."""
    normalized = []
    for cycle in _raw_cycles(p):
        top = cycle.index(max(cycle))
        normalized.append(cycle[top:] + cycle[:top])
    normalized.sort(key=lambda c: c[0], reverse=True)
    return CycleDecomposition(p.degree, tuple(normalized))


def cycle_type(p: Permutation) -> Tuple[int, ...]:
    """Lengths of the nontrivial cycles, descending."""
    return tuple(sorted((len(c) for c in _raw_cycles(p)), reverse=True))


def support(p: Permutation) -> FrozenSet[int]:
    """Points moved by p."""
    return frozenset(x for x in range(1, p.degree + 1) if p(x) != x)


def parity(p: Permutation) -> Parity:
    """Even or odd, from the cycle type."""
    transpositions = sum(length - 1 for length in cycle_type(p))
    return Parity.EVEN if transpositions % 2 == 0 else Parity.ODD


def order(p: Permutation) -> int:
    """Least k >= 1 with p**k the identity."""
    return reduce(math.lcm, cycle_type(p), 1)


# --- Named generators ---
# Degenerate indices (t_0, t_1, u below 4, v below 4) are the identity, so the
# case formulas of the exchange laws stay total.


def _require_degree(n: int) -> None:
    if n < 1:
        raise DegreeError("Degree must be at least 1.")


@lru_cache(maxsize=None)
def s(i: int, n: int) -> Permutation:
    """The adjacent transposition (i, i+1)."""
    _require_degree(n)
    if not 1 <= i <= n - 1:
        raise IndexRangeError(f"s_{i} requires 1 <= i <= {n - 1}.")
    images = list(range(1, n + 1))
    images[i - 1], images[i] = i + 1, i
    return Permutation._trusted(tuple(images))


@lru_cache(maxsize=None)
def t(m: int, n: int) -> Permutation:
    """t_m = s_1*s_2*...*s_(m-1) = [m;1;...;m-1], the cycle (m, m-1, ..., 1)."""
    _require_degree(n)
    if not 0 <= m <= n:
        raise IndexRangeError(f"t_{m} requires m <= {n}.")
    if m <= 1:
        return identity(n)
    return Permutation._trusted((m,) + tuple(range(1, m)) + tuple(range(m + 1, n + 1)))


def _check_even_index(name: str, index: int, n: int) -> None:
    if index % 2 or not 0 <= index <= n:
        raise IndexRangeError(f"{name}_{index} requires an even index <= {n}.")


@lru_cache(maxsize=None)
def u(index: int, n: int) -> Permutation:
    """u_2r = t_(2r-2) * s_(2r-1)."""
    _require_degree(n)
    _check_even_index("u", index, n)
    if index < 4:
        return identity(n)
    return compose(t(index - 2, n), s(index - 1, n))


@lru_cache(maxsize=None)
def v(index: int, n: int) -> Permutation:
    """v_2r = t_2r squared."""
    _require_degree(n)
    _check_even_index("v", index, n)
    if index < 4:
        return identity(n)
    return power(t(index, n), 2)


_GENERATORS = {Symbol.S: s, Symbol.T: t, Symbol.U: u, Symbol.V: v}


@lru_cache(maxsize=4096)
def generator_power(symbol: Symbol, index: int, exponent: int, n: int) -> Permutation:
    """symbol_index ** exponent in degree n."""
    return power(_GENERATORS[Symbol(symbol)](index, n), exponent)


def evaluate(w: GeneratorWord) -> Permutation:
    """Left-to-right product of the letters; negative exponents invert."""
    return compose_all(
        (generator_power(letter.symbol, letter.index, letter.exponent, w.degree) for letter in w.letters), w.degree
    )


# --- Statistics ---


def descent_set(p: Permutation) -> FrozenSet[int]:
    """Positions x < n with p(x) > p(x + 1)."""
    im = p.images
    return frozenset(x for x in range(1, p.degree) if im[x - 1] > im[x])


def major_index(p: Permutation) -> int:
    """Sum of the descent positions."""
    return sum(descent_set(p))


def inversion_length(p: Permutation) -> int:
    """Number of pairs x < y with p(x) > p(y)."""
    im = p.images
    n = len(im)
    return sum(1 for a in range(n) for b in range(a + 1, n) if im[a] > im[b])


# --- Text notations ---
# one-line = "[" int (";" int)* "]"
# cycles   = ("(" int ("," int)* ")")+ | "()"
# word     = term ("*" term)*, term = ("s"|"t"|"u"|"v") int ("^" signed-int)?

_ONE_LINE_RE = re.compile(r"\s*\[\s*\d+(?:\s*;\s*\d+)*\s*\]\s*")
_CYCLES_RE = re.compile(r"\s*(?:\(\s*\)|(?:\(\s*\d+(?:\s*,\s*\d+)*\s*\)\s*)+)\s*")
_CYCLE_BODY_RE = re.compile(r"\(([^)]*)\)")
_TERM_RE = re.compile(r"\s*([stuv])\s*(\d+)\s*(?:\^\s*([+-]?\s*\d+))?\s*")


def parse_one_line(text: str, n: Optional[int] = None) -> Permutation:
    """Parse "[3;1;2]"; n, when given, must match the entry count."""
    if not _ONE_LINE_RE.fullmatch(text):
        raise ParseError(f"Malformed one-line notation: {text!r}.")
    images = tuple(int(x) for x in re.findall(r"\d+", text))
    if n is not None and len(images) != n:
        raise ParseError(f"One-line notation has {len(images)} entries, expected {n}.")
    for x in images:
        if not 1 <= x <= len(images):
            raise ParseError(f"Point {x} out of range 1..{len(images)}.")
    if len(set(images)) != len(images):
        raise ParseError(f"Duplicate point in {text!r}.")
    return Permutation(images)


def format_one_line(p: Permutation) -> str:
    """"[p(1);...;p(n)]"."""
    return "[" + ";".join(str(x) for x in p.images) + "]"


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse "(1,3)(2,4,5)" or "()" as a permutation of degree n."""
    _require_degree(n)
    if not _CYCLES_RE.fullmatch(text):
        raise ParseError(f"Malformed cycle notation: {text!r}.")
    seen = set()
    parsed = []
    for body in _CYCLE_BODY_RE.findall(text):
        points = tuple(int(x) for x in re.findall(r"\d+", body))
        for x in points:
            if not 1 <= x <= n:
                raise ParseError(f"Point {x} out of range 1..{n}.")
            if x in seen:
                raise ParseError(f"Duplicate point {x} in {text!r}.")
            seen.add(x)
        if len(points) > 1:
            parsed.append(points)
    return CycleDecomposition(n, tuple(parsed)).to_permutation()


def format_cycles(p: Permutation) -> str:
    """Normalized cycle text, "()" for the identity."""
    return str(cycles(p))


def parse_permutation(text: str, n: int) -> Permutation:
    """One-line or cycle notation, chosen by the opening bracket."""
    stripped = text.strip()
    if stripped.startswith("["):
        return parse_one_line(stripped, n)
    if stripped.startswith("("):
        return parse_cycles(stripped, n)
    raise ParseError(f"Expected one-line '[...]' or cycle '(...)' notation, got {text!r}.")


def parse_word(text: str, n: int) -> GeneratorWord:
    """Parse a generator word; "e" or blank text is the empty word."""
    _require_degree(n)
    if text.strip() in ("", "e"):
        return GeneratorWord(n)
    letters = []
    for term in text.split("*"):
        match = _TERM_RE.fullmatch(term)
        if not match:
            raise ParseError(f"Malformed word term: {term.strip()!r}.")
        sym, index, exponent = match.groups()
        exp = int(exponent.replace(" ", "")) if exponent is not None else 1
        letters.append(Letter(Symbol(sym), int(index), exp))
    try:
        return GeneratorWord(n, tuple(letters))
    except IndexRangeError as e:
        raise ParseError(str(e)) from e


def format_word(w: GeneratorWord) -> str:
    """"t3^1 * u4^2", or "e" for the empty word."""
    if not w.letters:
        return "e"
    return " * ".join(f"{letter.symbol.value}{letter.index}^{letter.exponent}" for letter in w.letters)


def format_point_set(points: Sequence[int]) -> str:
    return "{" + ",".join(str(x) for x in sorted(points)) + "}"
