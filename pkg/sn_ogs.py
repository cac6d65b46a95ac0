"""
OGS canonical form of S_n: every permutation is uniquely
t_2^i_2 * t_3^i_3 * ... * t_n^i_n with 0 <= i_k < k.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

from errors import BoundsError, DegreeError, IndexRangeError, InternalError, ParseError
from perm_core import (
    GeneratorWord,
    Letter,
    Permutation,
    Symbol,
    compose,
    evaluate,
    generator_power,
    identity,
    parse_word,
)

logger = logging.getLogger(__name__)

Factor = Tuple[int, int]


@dataclass(frozen=True)
class SnCanonicalForm:
    """Exponent vector (i_2, ..., i_n)."""

    degree: int
    exponents: Tuple[int, ...]

    def __post_init__(self):
        exponents = tuple(int(e) for e in self.exponents)
        object.__setattr__(self, "exponents", exponents)
        if self.degree < 1:
            raise DegreeError("Degree must be at least 1.")
        if len(exponents) != self.degree - 1:
            raise BoundsError(f"Expected {self.degree - 1} exponents (i_2..i_{self.degree}), got {len(exponents)}.")
        for k, e in zip(range(2, self.degree + 1), exponents):
            if not 0 <= e < k:
                raise BoundsError(f"Exponent i_{k}={e} out of bounds 0 <= i_{k} < {k}.")

    def exponent(self, k: int) -> int:
        return self.exponents[k - 2]

    def to_word(self) -> GeneratorWord:
        letters = tuple(
            Letter(Symbol.T, k, e) for k, e in zip(range(2, self.degree + 1), self.exponents) if e
        )
        return GeneratorWord(self.degree, letters)

    def __str__(self) -> str:
        return format_sn_form(self)


@dataclass(frozen=True)
class TPowerProduct:
    """A product of t-powers with identity factors dropped and neighbours merged."""

    degree: int
    factors: Tuple[Factor, ...]

    @classmethod
    def reduced(cls, degree: int, factors: Sequence[Factor]) -> "TPowerProduct":
        return cls(degree, tuple(reduce_factors(factors)))

    def to_word(self) -> GeneratorWord:
        return GeneratorWord(self.degree, tuple(Letter(Symbol.T, m, e) for m, e in self.factors))

    def evaluate(self) -> Permutation:
        return evaluate(self.to_word())

    def __str__(self) -> str:
        return str(self.to_word())


def reduce_factors(factors: Sequence[Factor]) -> List[Factor]:
    """Drop t_m with m <= 1 or exponent = 0 mod m, merge equal neighbours mod m."""
    stack: List[Factor] = []
    for m, e in factors:
        if m <= 1:
            continue
        e %= m
        if e == 0:
            continue
        if stack and stack[-1][0] == m:
            e = (stack.pop()[1] + e) % m
            if e == 0:
                continue
        stack.append((m, e))
    return stack


def sn_bounds(n: int) -> Tuple[int, ...]:
    """Exponent bounds (2, ..., n): i_k ranges over 0..k-1."""
    return tuple(range(2, n + 1))


def iter_sn_forms(n: int) -> Iterator[SnCanonicalForm]:
    """All canonical forms of degree n, lexicographic in (i_2, ..., i_n)."""
    for exponents in itertools.product(*(range(k) for k in sn_bounds(n))):
        yield SnCanonicalForm(n, exponents)


def decode_sn(c: SnCanonicalForm) -> Permutation:
    """Multiply out t_2^i_2 * ... * t_n^i_n."""
    result = identity(c.degree)
    for k, e in zip(range(2, c.degree + 1), c.exponents):
        if e:
            result = compose(result, generator_power(Symbol.T, k, e, c.degree))
    return result


def encode_sn(p: Permutation) -> SnCanonicalForm:
    """Coset peeling: t_m^i sends m to m - i, and the remaining prefix fixes m."""
    n = p.degree
    g = p
    exponents = [0] * (n - 1)
    for m in range(n, 1, -1):
        i = (m - g(m)) % m
        exponents[m - 2] = i
        if i:
            g = compose(g, generator_power(Symbol.T, m, -i, n))
    return SnCanonicalForm(n, tuple(exponents))


def maj_of_form(c: SnCanonicalForm) -> int:
    """Sum of the exponents."""
    return sum(c.exponents)


# --- Exchange law ---


def _check_exchange_args(q: int, i_q: int, p: int, i_p: int, n: int) -> None:
    if not 2 <= p < q <= n:
        raise IndexRangeError(f"Exchange requires 2 <= p < q <= n, got p={p}, q={q}, n={n}.")
    if not 1 <= i_q < q:
        raise IndexRangeError(f"Exchange requires 1 <= i_q < q, got i_q={i_q}, q={q}.")
    if not 1 <= i_p < p:
        raise IndexRangeError(f"Exchange requires 1 <= i_p < p, got i_p={i_p}, p={p}.")


def exchange_conditions(q: int, i_q: int, p: int, i_p: int) -> Tuple[int, ...]:
    """Every case whose condition holds for t_q^i_q * t_p^i_p."""
    gap = q - i_q
    cases = []
    if gap >= p:
        cases.append(1)
    if i_p <= gap <= p:
        cases.append(2)
    if gap <= i_p:
        cases.append(3)
    return tuple(cases)


def exchange_case(q: int, i_q: int, p: int, i_p: int) -> int:
    """The case used for t_q^i_q * t_p^i_p: the first whose condition holds."""
    return exchange_conditions(q, i_q, p, i_p)[0]


def exchange_case_factors(case: int, q: int, i_q: int, p: int, i_p: int) -> List[Factor]:
    """Unreduced right-hand side of the given case."""
    if case == 1:
        return [(i_q + i_p, i_q), (p + i_q, i_p), (q, i_q)]
    if case == 2:
        return [(i_q, p + i_q - q), (i_q + i_p, q - p), (q, i_q + i_p)]
    if case == 3:
        return [(p + i_q - q, i_q + i_p - q), (i_q, p - i_p), (q, i_q + i_p - p)]
    raise IndexRangeError(f"Unknown exchange case {case}.")


def exchange_sn_case(case: int, q: int, i_q: int, p: int, i_p: int, n: int) -> TPowerProduct:
    """Apply one exchange case formula, whether or not it is the one selected."""
    _check_exchange_args(q, i_q, p, i_p, n)
    return TPowerProduct.reduced(n, exchange_case_factors(case, q, i_q, p, i_p))


def exchange_sn(q: int, i_q: int, p: int, i_p: int, n: int) -> TPowerProduct:
    """Rewrite t_q^i_q * t_p^i_p (p < q) as an ordered product of t-powers."""
    _check_exchange_args(q, i_q, p, i_p, n)
    return exchange_sn_case(exchange_case(q, i_q, p, i_p), q, i_q, p, i_p, n)


# --- Normalization ---


def _rightmost_descent(factors: Sequence[Factor]) -> int:
    for pos in range(len(factors) - 2, -1, -1):
        if factors[pos][0] > factors[pos + 1][0]:
            return pos
    return -1


def rewrite_budget(w: GeneratorWord) -> int:
    """Most rewrites normalize_sn may spend on w."""
    return 10 * max(len(w), 1) * w.degree * w.degree


def normalize_sn(w: GeneratorWord, check: bool = True) -> SnCanonicalForm:
    """Bring a word in the t_m into canonical form using only exchange laws.

    Repeatedly rewrites the rightmost adjacent pair with decreasing
    subscripts, merging equal neighbours after each rewrite.
    """
    n = w.degree
    for letter in w.letters:
        if letter.symbol is not Symbol.T:
            raise ParseError(f"normalize_sn accepts only t letters, got {letter.symbol.value}{letter.index}.")
    factors = reduce_factors([(letter.index, letter.exponent) for letter in w.letters])
    budget = rewrite_budget(w)
    rewrites = 0
    pos = _rightmost_descent(factors)
    while pos >= 0:
        if rewrites >= budget:
            raise InternalError(f"Normalizer exceeded its budget of {budget} rewrites on {w}.")
        (q, i_q), (p, i_p) = factors[pos], factors[pos + 1]
        replacement = exchange_sn(q, i_q, p, i_p, n).factors
        logger.debug("rewrite t%d^%d*t%d^%d -> %s", q, i_q, p, i_p, replacement)
        factors = reduce_factors(factors[:pos] + list(replacement) + factors[pos + 2:])
        rewrites += 1
        pos = _rightmost_descent(factors)

    exponents = [0] * (n - 1)
    for m, e in factors:
        exponents[m - 2] = e
    result = SnCanonicalForm(n, tuple(exponents))
    if check:
        expected = encode_sn(evaluate(w))
        if result != expected:
            raise InternalError(f"Normalizer produced {result} for {w}, expected {expected}.")
    return result


# --- Text ---


def format_sn_form(c: SnCanonicalForm) -> str:
    """Word text of the form, dropping zero exponents."""
    return str(c.to_word())


def parse_sn_form(text: str, n: int) -> SnCanonicalForm:
    """Parse word text into a form; factors must be increasing t letters."""
    w = parse_word(text, n)
    exponents = [0] * (n - 1)
    last = 1
    for letter in w.letters:
        if letter.symbol is not Symbol.T:
            raise ParseError(f"S_n canonical forms use only t letters, got {letter.symbol.value}{letter.index}.")
        if letter.index <= last:
            raise ParseError("Canonical-form factors must appear in increasing subscript order.")
        last = letter.index
        exponents[letter.index - 2] = letter.exponent
    return SnCanonicalForm(n, tuple(exponents))
