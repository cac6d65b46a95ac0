"""
OGS canonical form of Alt_n over the ordered generators
t_3, u_4, v_4, t_5, u_6, v_6, t_7, ...  (truncated at index n),
with the v-exchange law, the Alt_4 exchange table and the relation
identities between t, u and v.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple

from errors import BoundsError, DegreeError, IndexRangeError, InternalError, ParityError, ParseError
from perm_core import (
    GeneratorWord,
    Letter,
    Parity,
    Permutation,
    Symbol,
    compose,
    evaluate,
    generator_power,
    identity,
    parity,
    parse_word,
    word,
)
from sn_ogs import exchange_case, exchange_sn

logger = logging.getLogger(__name__)


class AltBlock(NamedTuple):
    """Exponents of u_2r, v_2r and (when 2r+1 <= n) t_(2r+1)."""

    j: int
    k: int
    i_odd: Optional[int] = None


class Slot(NamedTuple):
    symbol: Symbol
    index: int
    bound: int


def alt_slots(n: int) -> Tuple[Slot, ...]:
    """Generators of the Alt_n form in multiplication order, with exponent bounds."""
    if n < 3:
        raise DegreeError(f"Alt_n canonical forms need degree >= 3, got {n}.")
    slots = [Slot(Symbol.T, 3, 3)]
    for r in range(2, n // 2 + 1):
        slots.append(Slot(Symbol.U, 2 * r, 2))
        slots.append(Slot(Symbol.V, 2 * r, r))
        if 2 * r + 1 <= n:
            slots.append(Slot(Symbol.T, 2 * r + 1, 2 * r + 1))
    return tuple(slots)


@dataclass(frozen=True)
class AltCanonicalForm:
    degree: int
    i3: int
    blocks: Tuple[AltBlock, ...] = ()

    def __post_init__(self):
        n = self.degree
        if n < 3:
            raise DegreeError(f"Alt_n canonical forms need degree >= 3, got {n}.")
        blocks = tuple(AltBlock(*b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if len(blocks) != n // 2 - 1:
            raise BoundsError(f"Degree {n} needs {n // 2 - 1} blocks, got {len(blocks)}.")
        if not 0 <= self.i3 < 3:
            raise BoundsError(f"Exponent i_3={self.i3} out of bounds 0 <= i_3 < 3.")
        for r, block in enumerate(blocks, 2):
            if not 0 <= block.j < 2:
                raise BoundsError(f"Exponent j_{2 * r}={block.j} out of bounds 0 <= j < 2.")
            if not 0 <= block.k < r:
                raise BoundsError(f"Exponent k_{2 * r}={block.k} out of bounds 0 <= k < {r}.")
            if 2 * r + 1 <= n:
                if block.i_odd is None or not 0 <= block.i_odd < 2 * r + 1:
                    raise BoundsError(
                        f"Exponent i_{2 * r + 1}={block.i_odd} out of bounds 0 <= i < {2 * r + 1}."
                    )
            elif block.i_odd is not None:
                raise BoundsError(f"Degree {n} has no t_{2 * r + 1} factor.")

    @classmethod
    def from_exponents(cls, n: int, exponents: Sequence[int]) -> "AltCanonicalForm":
        """Build from the flat exponent tuple in slot order (see alt_slots)."""
        slots = alt_slots(n)
        if len(exponents) != len(slots):
            raise BoundsError(f"Degree {n} needs {len(slots)} exponents, got {len(exponents)}.")
        exps = list(exponents)
        blocks = []
        pos = 1
        for r in range(2, n // 2 + 1):
            j, k = exps[pos], exps[pos + 1]
            pos += 2
            i_odd = None
            if 2 * r + 1 <= n:
                i_odd = exps[pos]
                pos += 1
            blocks.append(AltBlock(j, k, i_odd))
        return cls(n, exps[0], tuple(blocks))

    @property
    def exponents(self) -> Tuple[int, ...]:
        flat = [self.i3]
        for block in self.blocks:
            flat.extend((block.j, block.k))
            if block.i_odd is not None:
                flat.append(block.i_odd)
        return tuple(flat)

    def to_word(self) -> GeneratorWord:
        letters = tuple(
            Letter(slot.symbol, slot.index, e)
            for slot, e in zip(alt_slots(self.degree), self.exponents)
            if e
        )
        return GeneratorWord(self.degree, letters)

    def __str__(self) -> str:
        return format_alt_form(self)


def iter_alt_forms(n: int) -> Iterator[AltCanonicalForm]:
    """All canonical forms of degree n, lexicographic in slot order."""
    for exponents in itertools.product(*(range(slot.bound) for slot in alt_slots(n))):
        yield AltCanonicalForm.from_exponents(n, exponents)


def decode_alt(c: AltCanonicalForm) -> Permutation:
    """Multiply out the form over its slots in order."""
    result = identity(c.degree)
    for slot, e in zip(alt_slots(c.degree), c.exponents):
        if e:
            result = compose(result, generator_power(slot.symbol, slot.index, e, c.degree))
    return result


def encode_alt(p: Permutation) -> AltCanonicalForm:
    """Peel the top generator block off using the image of the top point."""
    n = p.degree
    if n < 3:
        raise DegreeError(f"Alt_n canonical forms need degree >= 3, got {n}.")
    if parity(p) is not Parity.EVEN:
        raise ParityError(f"{p} is not an even permutation.")
    g = p
    found = {}
    for m in range(n, 3, -1):
        image = g(m)
        if m % 2:
            i = (m - image) % m
            found[(Symbol.T, m)] = i
            if i:
                g = compose(g, generator_power(Symbol.T, m, -i, n))
            continue
        if image % 2 == 0:
            j, k = 0, (m - image) // 2
        else:
            j, k = 1, (m - 1 - image) // 2
        found[(Symbol.U, m)] = j
        found[(Symbol.V, m)] = k
        if k:
            g = compose(g, generator_power(Symbol.V, m, -k, n))
        if j:
            g = compose(g, generator_power(Symbol.U, m, -j, n))
    found[(Symbol.T, 3)] = (3 - g(3)) % 3
    return AltCanonicalForm.from_exponents(n, [found[(slot.symbol, slot.index)] for slot in alt_slots(n)])


def normalize_alt(w: GeneratorWord) -> AltCanonicalForm:
    """Canonical form of a word over t, u and v."""
    return encode_alt(evaluate(w))


def top_image(c: AltCanonicalForm) -> int:
    """Image of the point n under decode_alt(c), read off the top block alone."""
    n = c.degree
    if n == 3:
        return 3 - c.i3
    top = c.blocks[-1]
    if n % 2:
        return n - top.i_odd
    return n - 2 * top.k if top.j == 0 else n - 1 - 2 * top.k


# --- v-exchange ---


@dataclass(frozen=True)
class VPowerProduct:
    """A product of v-powers as (even subscript, exponent) pairs."""

    degree: int
    factors: Tuple[Tuple[int, int], ...]

    @classmethod
    def reduced(cls, degree: int, factors: Sequence[Tuple[int, int]]) -> "VPowerProduct":
        stack: List[Tuple[int, int]] = []
        for index, e in factors:
            if index < 4:
                continue
            half = index // 2
            e %= half
            if e == 0:
                continue
            if stack and stack[-1][0] == index:
                e = (stack.pop()[1] + e) % half
                if e == 0:
                    continue
            stack.append((index, e))
        return cls(degree, tuple(stack))

    def to_word(self) -> GeneratorWord:
        return GeneratorWord(self.degree, tuple(Letter(Symbol.V, m, e) for m, e in self.factors))

    def evaluate(self) -> Permutation:
        return evaluate(self.to_word())

    def __str__(self) -> str:
        return str(self.to_word())


def _check_v_exchange_args(q: int, k_q: int, p: int, k_p: int, n: int) -> None:
    if not 2 <= p < q or 2 * q > n:
        raise IndexRangeError(f"v-exchange requires 2 <= p < q <= n/2, got p={p}, q={q}, n={n}.")
    if not 1 <= k_q < q:
        raise IndexRangeError(f"v-exchange requires 1 <= k_2q < q, got {k_q}.")
    if not 1 <= k_p < p:
        raise IndexRangeError(f"v-exchange requires 1 <= k_2p < p, got {k_p}.")


def v_exchange(q: int, k_q: int, p: int, k_p: int, n: int) -> VPowerProduct:
    """Rewrite v_2q^k_2q * v_2p^k_2p via the S_n exchange law, since v_2r = t_2r^2."""
    _check_v_exchange_args(q, k_q, p, k_p, n)
    doubled = exchange_sn(2 * q, 2 * k_q, 2 * p, 2 * k_p, n)
    halved = []
    for m, e in doubled.factors:
        if m % 2 or e % 2:
            raise InternalError(f"Doubled exchange produced t_{m}^{e}, which is not a power of a v.")
        halved.append((m, e // 2))
    return VPowerProduct.reduced(n, halved)


def v_exchange_case_factors(case: int, q: int, k_q: int, p: int, k_p: int) -> List[Tuple[int, int]]:
    """(subscript, exponent) pairs for one v-exchange case."""
    if case == 1:
        return [(2 * k_q + 2 * k_p, k_q), (2 * p + 2 * k_q, k_p), (2 * q, k_q)]
    if case == 2:
        return [(2 * k_q, p + k_q - q), (2 * k_q + 2 * k_p, q - p), (2 * q, k_q + k_p)]
    if case == 3:
        return [(2 * p + 2 * k_q - 2 * q, k_q + k_p - q), (2 * k_q, p - k_p), (2 * q, k_q + k_p - p)]
    raise IndexRangeError(f"Unknown exchange case {case}.")


def v_exchange_direct(q: int, k_q: int, p: int, k_p: int, n: int, case: Optional[int] = None) -> VPowerProduct:
    """The v-exchange case formulas written out directly."""
    _check_v_exchange_args(q, k_q, p, k_p, n)
    if case is None:
        case = exchange_case(q, k_q, p, k_p)
    return VPowerProduct.reduced(n, v_exchange_case_factors(case, q, k_q, p, k_p))


# --- Identities ---


class IdentityPair(NamedTuple):
    label: str
    left: GeneratorWord
    right: GeneratorWord

    def holds(self) -> bool:
        return evaluate(self.left) == evaluate(self.right)


def _pair(left: GeneratorWord, right: GeneratorWord) -> IdentityPair:
    return IdentityPair(f"{left} = {right}", left, right)


def alt4_exchange_table() -> Tuple[IdentityPair, ...]:
    """The five exchange laws of Alt_4, left side then right side."""
    n = 4
    return (
        _pair(word(n, ("u", 4, 1), ("t", 3, 1)), word(n, ("t", 3, 1), ("v", 4, 1))),
        _pair(word(n, ("u", 4, 1), ("t", 3, 2)), word(n, ("t", 3, 2), ("u", 4, 1), ("v", 4, 1))),
        _pair(word(n, ("v", 4, 1), ("t", 3, 1)), word(n, ("t", 3, 1), ("u", 4, 1), ("v", 4, 1))),
        _pair(word(n, ("v", 4, 1), ("t", 3, 2)), word(n, ("t", 3, 2), ("u", 4, 1))),
        _pair(word(n, ("v", 4, 1), ("u", 4, 1)), word(n, ("u", 4, 1), ("v", 4, 1))),
    )


def rel_tt_step(r: int, n: int) -> Tuple[IdentityPair, IdentityPair]:
    """t_2r^-1 * t_2r+2 = t_2r+1^-1 * u_2r+2 and t_2r * t_2r+2 = v_2r * t_2r+1^-1 * u_2r+2."""
    if r < 2 or 2 * r + 2 > n:
        raise IndexRangeError(f"rel_tt_step requires 2 <= r and 2r+2 <= n, got r={r}, n={n}.")
    tail = (("t", 2 * r + 1, -1), ("u", 2 * r + 2, 1))
    return (
        _pair(word(n, ("t", 2 * r, -1), ("t", 2 * r + 2, 1)), word(n, *tail)),
        _pair(word(n, ("t", 2 * r, 1), ("t", 2 * r + 2, 1)), word(n, ("v", 2 * r, 1), *tail)),
    )


def rel_tt_general(r: int, r2: int, n: int, form: str = "inverse") -> Tuple[IdentityPair, IdentityPair]:
    """t_2r^-1 * t_2r' and t_2r * t_2r' as products of t_m^-1 * u_m+1 over odd m in [2r+1, 2r'-1].

    form="printed" drops the inverse on t_m; that variant is not an identity
    once r' > r + 1 and is kept so the oracle can demonstrate it.
    """
    if r < 2 or r2 <= r or 2 * r2 > n:
        raise IndexRangeError(f"rel_tt_general requires 2 <= r < r' and 2r' <= n, got r={r}, r'={r2}, n={n}.")
    if form not in ("inverse", "printed"):
        raise IndexRangeError(f"Unknown rel_tt_general form {form!r}.")
    t_exp = -1 if form == "inverse" else 1
    chain = []
    for m in range(2 * r + 1, 2 * r2, 2):
        chain.extend((("t", m, t_exp), ("u", m + 1, 1)))
    return (
        _pair(word(n, ("t", 2 * r, -1), ("t", 2 * r2, 1)), word(n, *chain)),
        _pair(word(n, ("t", 2 * r, 1), ("t", 2 * r2, 1)), word(n, ("v", 2 * r, 1), *chain)),
    )


def rel_vu(r: int, n: int) -> IdentityPair:
    """v_2r * u_2r = prod_{i=2}^{r-1} (u_2i * t_2i+1^-1) * u_2r * v_2r, r >= 3."""
    if r < 3 or 2 * r > n:
        raise IndexRangeError(f"rel_vu requires r >= 3 and 2r <= n, got r={r}, n={n}.")
    right = []
    for i in range(2, r):
        right.extend((("u", 2 * i, 1), ("t", 2 * i + 1, -1)))
    right.extend((("u", 2 * r, 1), ("v", 2 * r, 1)))
    return _pair(word(n, ("v", 2 * r, 1), ("u", 2 * r, 1)), word(n, *right))


def rel_t_odd(r: int, r2: int, n: int) -> IdentityPair:
    """t_2r'-1 * t_2r-1 = prod_{i=2}^{r} (t_2i-1^-1 * u_2i) * t_2r'-1, r' > r >= 2."""
    if r < 2 or r2 <= r or 2 * r2 - 1 > n:
        raise IndexRangeError(f"rel_t_odd requires r' > r >= 2 and 2r'-1 <= n, got r={r}, r'={r2}, n={n}.")
    right = []
    for i in range(2, r + 1):
        right.extend((("t", 2 * i - 1, -1), ("u", 2 * i, 1)))
    right.append(("t", 2 * r2 - 1, 1))
    return _pair(word(n, ("t", 2 * r2 - 1, 1), ("t", 2 * r - 1, 1)), word(n, *right))


# --- Text ---


def format_alt_form(c: AltCanonicalForm) -> str:
    """Word text of the form, dropping zero exponents."""
    return str(c.to_word())


def parse_alt_form(text: str, n: int) -> AltCanonicalForm:
    """Parse word text into a form; letters must follow slot order."""
    slots = alt_slots(n)
    position = {(slot.symbol, slot.index): pos for pos, slot in enumerate(slots)}
    exponents = [0] * len(slots)
    last = -1
    for letter in parse_word(text, n).letters:
        pos = position.get((letter.symbol, letter.index))
        if pos is None:
            raise ParseError(f"{letter.symbol.value}{letter.index} is not a generator of the Alt_{n} form.")
        if pos <= last:
            raise ParseError("Canonical-form factors must appear in decode order.")
        last = pos
        exponents[pos] = letter.exponent
    return AltCanonicalForm.from_exponents(n, exponents)
