"""
Ground-truth machinery: group enumeration, uniqueness certification of both
canonical forms, the exchange-law and relation identity suites, the
conventions oracle and the seeded normalizer fuzzer.

Every check lands in a VerificationReport; failures never abort a suite.
"""
from __future__ import annotations

import itertools
import logging
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import config
from alt_ogs import (
    IdentityPair,
    VPowerProduct,
    alt4_exchange_table,
    alt_slots,
    decode_alt,
    encode_alt,
    format_alt_form,
    iter_alt_forms,
    parse_alt_form,
    rel_t_odd,
    rel_tt_general,
    rel_tt_step,
    rel_vu,
    top_image,
    v_exchange,
    v_exchange_case_factors,
    v_exchange_direct,
)
from errors import BudgetError, DegreeError, IndexRangeError, InternalError, OGSError
from perm_core import (
    GeneratorWord,
    Letter,
    Parity,
    Permutation,
    Symbol,
    compose,
    embed,
    evaluate,
    format_cycles,
    format_one_line,
    generator_power,
    identity,
    major_index,
    order,
    parity,
    parse_cycles,
    parse_one_line,
    t,
    u,
    v,
)
from sn_ogs import (
    decode_sn,
    encode_sn,
    exchange_case_factors,
    exchange_conditions,
    exchange_sn,
    format_sn_form,
    iter_sn_forms,
    maj_of_form,
    normalize_sn,
    parse_sn_form,
    reduce_factors,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Failure:
    case: str
    expected: str
    actual: str

    def __str__(self) -> str:
        return f"{self.case}: expected {self.expected}, got {self.actual}"


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    checked: int
    passed: int
    first_failure: Optional[Failure] = None
    elapsed: float = 0.0

    def __post_init__(self):
        if not 0 <= self.passed <= self.checked:
            raise InternalError(f"Report {self.suite}: passed={self.passed} checked={self.checked}.")
        if (self.first_failure is not None) != (self.passed < self.checked):
            raise InternalError(f"Report {self.suite}: first_failure must be present iff a check failed.")

    @property
    def ok(self) -> bool:
        return self.passed == self.checked

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(
            suite=self.suite,
            checked=self.checked + other.checked,
            passed=self.passed + other.passed,
            first_failure=self.first_failure or other.first_failure,
            elapsed=self.elapsed + other.elapsed,
        )

    def to_tsv(self, timing: bool = True) -> str:
        elapsed_ms = int(round(self.elapsed * 1000)) if timing else 0
        failure = str(self.first_failure).replace("\t", " ") if self.first_failure else "-"
        return f"{self.suite}\t{self.checked}\t{self.passed}\t{elapsed_ms}\t{failure}"


class _Tally:
    """Accumulates checks for one suite."""

    def __init__(self, suite: str):
        self.suite = suite
        self.checked = 0
        self.passed = 0
        self.failure: Optional[Failure] = None
        self._started = time.perf_counter()

    def check(self, ok: bool, describe: Callable[[], Tuple[object, object, object]]) -> bool:
        # describe() is only called for the first failure.
        self.checked += 1
        if ok:
            self.passed += 1
        elif self.failure is None:
            case, expected, actual = describe()
            self.failure = Failure(str(case), str(expected), str(actual))
        return ok

    def report(self) -> VerificationReport:
        result = VerificationReport(
            self.suite, self.checked, self.passed, self.failure, time.perf_counter() - self._started
        )
        log = logger.info if result.ok else logger.warning
        log("suite %s: %d/%d passed", self.suite, self.passed, self.checked)
        return result


def merge_reports(reports: Iterable[VerificationReport]) -> VerificationReport:
    reports = list(reports)
    if not reports:
        raise InternalError("Nothing to merge.")
    merged = reports[0]
    for other in reports[1:]:
        merged = merged.merge(other)
    return merged


# --- Enumeration ---


def group_order(n: int, alternating: bool) -> int:
    return math.factorial(n) // 2 if alternating else math.factorial(n)


def enumerate_group(n: int, alternating: bool = False) -> Iterator[Permutation]:
    """Every element of S_n (or Alt_n) once, lexicographic in one-line notation."""
    if n < 1 or (alternating and n < 3):
        raise DegreeError(f"Cannot enumerate {'Alt' if alternating else 'S'}_{n}.")
    for images in itertools.permutations(range(1, n + 1)):
        p = Permutation(images)
        if not alternating or parity(p) is Parity.EVEN:
            yield p


def _check_budget(n: int, alternating: bool, force: bool) -> None:
    if alternating:
        limit = config.ALT_FORCE_NMAX if force else config.ALT_NMAX
        if n < 3:
            raise DegreeError(f"Alt_n certification needs n >= 3, got {n}.")
    else:
        limit = None if force else config.SYM_NMAX
        if n < 1:
            raise DegreeError(f"S_n certification needs n >= 1, got {n}.")
    if limit is not None and n > limit:
        raise BudgetError(f"Degree {n} exceeds the certification budget {limit}; use --force.")


def certify_uniqueness(n: int, alternating: bool, force: bool = False) -> VerificationReport:
    """Decode every in-bounds tuple; all results must be distinct (and even) and round-trip."""
    _check_budget(n, alternating, force)
    group = "alt" if alternating else "sym"
    tally = _Tally(f"uniqueness/{group}/n={n}")
    forms = iter_alt_forms(n) if alternating else iter_sn_forms(n)
    decode = decode_alt if alternating else decode_sn
    encode = encode_alt if alternating else encode_sn
    seen = set()
    for c in forms:
        p = decode(c)
        distinct = p.images not in seen
        seen.add(p.images)
        even = not alternating or parity(p) is Parity.EVEN
        if not even:
            tally.check(False, lambda: (c, "even permutation", format_one_line(p)))
            continue
        back = encode(p)
        tally.check(
            distinct and back == c,
            lambda: (c, f"distinct element, encode = {c}", f"{format_one_line(p)} distinct={distinct} encode={back}"),
        )
    expected = group_order(n, alternating)
    if len(seen) != expected:
        tally.check(False, lambda: ("group order", expected, len(seen)))
    return tally.report()


def check_enumeration(n_max: int) -> VerificationReport:
    """Decoded canonical forms against the lexicographic enumerator; parity partition exact."""
    tally = _Tally("enumeration")
    for n in range(1, n_max + 1):
        full = set(p.images for p in enumerate_group(n))
        decoded = set(decode_sn(c).images for c in iter_sn_forms(n))
        tally.check(full == decoded and len(full) == math.factorial(n),
                    lambda: (f"S_{n}", math.factorial(n), len(decoded)))
        if n < 3:
            continue
        evens = set(p.images for p in enumerate_group(n, alternating=True))
        odds = full - evens
        alt_decoded = set(decode_alt(c).images for c in iter_alt_forms(n))
        partition_ok = len(evens) == len(odds) == group_order(n, True)
        tally.check(evens == alt_decoded and partition_ok,
                    lambda: (f"Alt_{n}", group_order(n, True), f"{len(alt_decoded)} decoded, {len(evens)} even"))
    return tally.report()


def check_coset_law(n_max: int) -> VerificationReport:
    """The top block of an Alt_n form is read off from the image of n."""
    tally = _Tally("coset_law")
    for n in range(3, n_max + 1):
        for c in iter_alt_forms(n):
            image = decode_alt(c)(n)
            tally.check(image == top_image(c), lambda: (f"{c} (n={n})", top_image(c), image))
    return tally.report()


def check_restriction(n_max: int) -> VerificationReport:
    """Embedding Alt_n into Alt_(n+1) extends the form by a zero top block."""
    tally = _Tally("restriction")
    for n in range(3, n_max):
        extra = len(alt_slots(n + 1)) - len(alt_slots(n))
        for c in iter_alt_forms(n):
            lifted = encode_alt(embed(decode_alt(c), n + 1))
            expected = c.exponents + (0,) * extra
            tally.check(lifted.exponents == expected, lambda: (f"{c} into degree {n + 1}", expected, lifted.exponents))
    return tally.report()


# --- Generator facts ---


def check_generators(n_max: int) -> VerificationReport:
    tally = _Tally("generators")
    for n in range(2, n_max + 1):
        for m in range(2, n + 1):
            tm = t(m, n)
            expected_parity = Parity.EVEN if m % 2 else Parity.ODD
            tally.check(parity(tm) is expected_parity, lambda: (f"parity t_{m} (n={n})", expected_parity.value,
                                                                parity(tm).value))
            product = evaluate(GeneratorWord(n, tuple(Letter(Symbol.S, j, 1) for j in range(1, m))))
            tally.check(product == tm, lambda: (f"t_{m} = s_1...s_{m - 1} (n={n})", format_one_line(tm),
                                                format_one_line(product)))
        for index in range(4, n + 1, 2):
            r = index // 2
            uu, vv = u(index, n), v(index, n)
            tally.check(order(uu) == 2 * r - 2, lambda: (f"|u_{index}| (n={n})", 2 * r - 2, order(uu)))
            tally.check(order(vv) == r, lambda: (f"|v_{index}| (n={n})", r, order(vv)))
            square = compose(uu, uu)
            expected = v(index - 2, n) if r >= 3 else identity(n)
            tally.check(square == expected, lambda: (f"u_{index}^2 (n={n})", format_one_line(expected),
                                                     format_one_line(square)))
            tally.check(parity(uu) is Parity.EVEN and parity(vv) is Parity.EVEN,
                        lambda: (f"u_{index}, v_{index} even (n={n})", "even", f"{parity(uu)}, {parity(vv)}"))
    return tally.report()


# --- Exchange laws ---


def _t_power_word(n: int, factors: Sequence[Tuple[int, int]]) -> GeneratorWord:
    return GeneratorWord(n, tuple(Letter(Symbol.T, m, e) for m, e in factors))


def _exchange_params(q_max: int) -> Iterator[Tuple[int, int, int, int]]:
    for q in range(3, q_max + 1):
        for i_q in range(1, q):
            for p in range(2, q):
                for i_p in range(1, p):
                    yield q, i_q, p, i_p


def check_exchange_sn(q_max: int) -> VerificationReport:
    tally = _Tally("exchange_sn")
    n = q_max
    for q, i_q, p, i_p in _exchange_params(q_max):
        lhs = compose(generator_power(Symbol.T, q, i_q, n), generator_power(Symbol.T, p, i_p, n))
        result = exchange_sn(q, i_q, p, i_p, n)
        rhs = result.evaluate()
        ordered = all(a[0] < b[0] for a, b in zip(result.factors, result.factors[1:]))
        tally.check(lhs == rhs and ordered,
                    lambda: (f"t{q}^{i_q} * t{p}^{i_p}", format_one_line(lhs), f"{result} = {format_one_line(rhs)}"))
    return tally.report()


def check_exchange_sn_overlap(q_max: int) -> VerificationReport:
    """Where several case conditions hold, every applicable formula agrees."""
    tally = _Tally("exchange_sn_overlap")
    n = q_max
    for q, i_q, p, i_p in _exchange_params(q_max):
        cases = exchange_conditions(q, i_q, p, i_p)
        if len(cases) < 2:
            continue
        values = {c: evaluate(_t_power_word(n, reduce_factors(exchange_case_factors(c, q, i_q, p, i_p))))
                  for c in cases}
        tally.check(len(set(values.values())) == 1,
                    lambda: (f"t{q}^{i_q} * t{p}^{i_p} cases {cases}", "equal values",
                             {c: format_one_line(val) for c, val in values.items()}))
    return tally.report()


def check_v_exchange(n_max: int) -> VerificationReport:
    """Delegating v-exchange, direct formulas and their overlaps, for 2q <= n_max."""
    tally = _Tally("v_exchange")
    n = n_max
    for q in range(3, n_max // 2 + 1):
        for k_q in range(1, q):
            for p in range(2, q):
                for k_p in range(1, p):
                    lhs = compose(generator_power(Symbol.V, 2 * q, k_q, n), generator_power(Symbol.V, 2 * p, k_p, n))
                    delegated = v_exchange(q, k_q, p, k_p, n)
                    direct = v_exchange_direct(q, k_q, p, k_p, n)
                    tally.check(delegated.evaluate() == lhs and direct.evaluate() == lhs,
                                lambda: (f"v{2 * q}^{k_q} * v{2 * p}^{k_p}", format_one_line(lhs),
                                         f"delegated {delegated}, direct {direct}"))
                    for case in exchange_conditions(q, k_q, p, k_p):
                        value = VPowerProduct.reduced(n, v_exchange_case_factors(case, q, k_q, p, k_p)).evaluate()
                        tally.check(value == lhs, lambda: (f"v{2 * q}^{k_q} * v{2 * p}^{k_p} case {case}",
                                                           format_one_line(lhs), format_one_line(value)))
    return tally.report()


# --- Relation identities ---


def _check_pairs(tally: _Tally, pairs: Iterable[IdentityPair], where: str) -> None:
    for pair in pairs:
        left, right = evaluate(pair.left), evaluate(pair.right)
        tally.check(left == right, lambda: (f"{pair.label} ({where})", format_one_line(left), format_one_line(right)))


def check_alt4_table() -> VerificationReport:
    """Both sides of every Alt_4 exchange law agree."""
    tally = _Tally("alt4")
    _check_pairs(tally, alt4_exchange_table(), "n=4")
    return tally.report()


def check_rel_tt_step(n_max: int) -> VerificationReport:
    """Both t_2r * t_2r+2 step relations for every valid r and n."""
    tally = _Tally("rel_tt_step")
    for n in range(6, n_max + 1):
        for r in range(2, (n - 2) // 2 + 1):
            _check_pairs(tally, rel_tt_step(r, n), f"r={r}, n={n}")
    return tally.report()


def _rel_tt_general_params(n_max: int, min_gap: int = 1) -> Iterator[Tuple[int, int, int]]:
    for n in range(6, n_max + 1):
        for r in range(2, n // 2):
            for r2 in range(r + min_gap, n // 2 + 1):
                yield r, r2, n


def check_rel_tt_general(n_max: int, form: str = "inverse") -> VerificationReport:
    # The printed form is only claimed beyond the step identity, so it starts at r' = r + 2.
    suite = "rel_tt_general" if form == "inverse" else "rel_tt_general_printed"
    tally = _Tally(suite)
    for r, r2, n in _rel_tt_general_params(n_max, 1 if form == "inverse" else 2):
        _check_pairs(tally, rel_tt_general(r, r2, n, form), f"r={r}, r'={r2}, n={n}")
    return tally.report()


def check_rel_vu(n_max: int) -> VerificationReport:
    """v_2r * u_2r relation for every valid r and n."""
    tally = _Tally("rel_vu")
    for n in range(6, n_max + 1):
        for r in range(3, n // 2 + 1):
            _check_pairs(tally, [rel_vu(r, n)], f"r={r}, n={n}")
    return tally.report()


def check_rel_t_odd(n_max: int) -> VerificationReport:
    tally = _Tally("rel_t_odd")
    for n in range(5, n_max + 1):
        for r2 in range(3, (n + 1) // 2 + 1):
            for r in range(2, r2):
                _check_pairs(tally, [rel_t_odd(r, r2, n)], f"r={r}, r'={r2}, n={n}")
    return tally.report()


def run_identity_suites(n_max: int) -> List[VerificationReport]:
    """One report per exchange law / relation, exhaustive at degree <= n_max."""
    if n_max < 6:
        raise IndexRangeError(f"Identity suites need n_max >= 6, got {n_max}.")
    return [
        check_exchange_sn(n_max),
        check_exchange_sn_overlap(n_max),
        check_v_exchange(n_max),
        check_alt4_table(),
        check_rel_tt_step(n_max),
        check_rel_tt_general(n_max),
        check_rel_vu(n_max),
        check_rel_t_odd(n_max),
    ]


# --- Major index and conventions ---


def decode_sn_right_to_left(c) -> Permutation:
    """The same exponent tuple multiplied right to left (a*b = a after b)."""
    result = identity(c.degree)
    for k, e in zip(range(2, c.degree + 1), c.exponents):
        result = compose(generator_power(Symbol.T, k, e, c.degree), result)
    return result


_MAJ_CANDIDATES: Dict[str, Callable] = {
    "left-to-right": decode_sn,
    "right-to-left": decode_sn_right_to_left,
}


def check_major_index(n_max: int, convention: Optional[str] = None) -> VerificationReport:
    """maj(g) equals the exponent sum of g's S_n form."""
    convention = convention or config.MAJ_CONVENTION
    decode = _MAJ_CANDIDATES[convention]
    tally = _Tally(f"major_index/{convention}")
    for n in range(1, n_max + 1):
        for c in iter_sn_forms(n):
            g = decode(c)
            tally.check(major_index(g) == maj_of_form(c),
                        lambda: (f"{c} -> {format_one_line(g)}", maj_of_form(c), major_index(g)))
    return tally.report()


@dataclass(frozen=True)
class ConventionsResult:
    maj_convention: Optional[str]
    rel_tt_general_form: Optional[str]
    report: VerificationReport
    candidates: Tuple[VerificationReport, ...] = field(default=())

    @property
    def printed_counterexample(self) -> Optional[Failure]:
        """Where the printed rel_tt_general form breaks, if it does."""
        for rep in self.candidates:
            if rep.suite == "rel_tt_general_printed":
                return rep.first_failure
        return None


def _only(names: Sequence[str]) -> Optional[str]:
    return names[0] if len(names) == 1 else None


def resolve_conventions(n_max: int = 6) -> ConventionsResult:
    """Decide the maj composition direction and the rel_tt_general form by exhaustion."""
    # Both directions agree below n = 3.
    maj_n = max(n_max, 3)
    maj_reports = {name: check_major_index(maj_n, name) for name in _MAJ_CANDIDATES}
    rel_n = max(n_max, 8)
    rel_reports = {form: check_rel_tt_general(rel_n, form) for form in ("inverse", "printed")}
    maj_hold = [name for name, rep in maj_reports.items() if rep.ok]
    rel_hold = [form for form, rep in rel_reports.items() if rep.ok]
    if not maj_hold or not rel_hold:
        raise InternalError("No candidate convention holds universally; permutation arithmetic is broken.")
    maj, rel = _only(maj_hold), _only(rel_hold)
    printed = rel_reports["printed"]
    logger.info("conventions: maj holds under %s; rel_tt_general holds in %s form", maj_hold, rel_hold)
    if printed.first_failure is not None:
        logger.info("conventions: printed rel_tt_general refuted at %s", printed.first_failure)

    tally = _Tally("conventions")
    tally.check(maj is not None, lambda: (f"maj direction at n<={maj_n}", "exactly one", ", ".join(maj_hold)))
    tally.check(maj == config.MAJ_CONVENTION, lambda: ("maj convention", config.MAJ_CONVENTION, maj))
    tally.check(not printed.ok,
                lambda: (f"printed rel_tt_general refuted at n<={rel_n}", "a counterexample", "none"))
    tally.check(rel == config.REL_TT_GENERAL_FORM,
                lambda: ("rel_tt_general form", config.REL_TT_GENERAL_FORM, rel or ", ".join(rel_hold)))
    return ConventionsResult(maj, rel, tally.report(), tuple(maj_reports.values()) + tuple(rel_reports.values()))


# --- Normalizer fuzzing ---

_FUZZ_CHUNK = 1000


def random_t_word(rng: random.Random, n: int, max_len: int) -> GeneratorWord:
    length = rng.randint(0, max_len)
    letters = tuple(Letter(Symbol.T, rng.randint(2, n), rng.randint(-n, n)) for _ in range(length))
    return GeneratorWord(n, letters)


def _fuzz_chunk(n: int, chunk: int, count: int, max_len: int, seed: int) -> VerificationReport:
    # Sub-seed derived from (seed, n, chunk) so results do not depend on worker count.
    rng = random.Random(f"{seed}:{n}:{chunk}")
    tally = _Tally(f"normalizer/n={n}")
    for _ in range(count):
        w = random_t_word(rng, n, max_len)
        expected = encode_sn(evaluate(w))
        try:
            got = normalize_sn(w, check=False)
        except OGSError as e:
            tally.check(False, lambda: (w, expected, f"error: {e}"))
            continue
        tally.check(got == expected, lambda: (w, expected, got))
    return tally.report()


def fuzz_normalizer(n: int, trials: int, max_len: int, seed: int, workers: int = 1) -> VerificationReport:
    """Seeded random t-words: normalize_sn must equal encode_sn of the evaluated word."""
    if n < 4:
        raise DegreeError(f"Normalizer fuzzing needs n >= 4, got {n}.")
    started = time.perf_counter()
    jobs = [(n, chunk, min(_FUZZ_CHUNK, trials - start), max_len, seed)
            for chunk, start in enumerate(range(0, trials, _FUZZ_CHUNK))]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_fuzz_chunk, *zip(*jobs)))
    else:
        parts = [_fuzz_chunk(*job) for job in jobs]
    merged = merge_reports(parts) if parts else VerificationReport(f"normalizer/n={n}", 0, 0)
    return VerificationReport(merged.suite, merged.checked, merged.passed, merged.first_failure,
                              time.perf_counter() - started)


# --- Text round trip ---


def check_text_roundtrip(n_max: int) -> VerificationReport:
    """Forms and both permutation notations survive print -> parse, and encode/decode through text."""
    tally = _Tally("text_roundtrip")
    for n in range(2, n_max + 1):
        for c in iter_sn_forms(n):
            text = format_sn_form(c)
            p = decode_sn(parse_sn_form(text, n))
            again = format_sn_form(encode_sn(parse_one_line(format_one_line(p), n)))
            same_cycles = parse_cycles(format_cycles(p), n) == p
            tally.check(again == text and same_cycles, lambda: (f"sym n={n} {text}", text, again))
        if n < 3:
            continue
        for c in iter_alt_forms(n):
            text = format_alt_form(c)
            p = decode_alt(parse_alt_form(text, n))
            again = format_alt_form(encode_alt(parse_cycles(format_cycles(p), n)))
            tally.check(again == text, lambda: (f"alt n={n} {text}", text, again))
    return tally.report()


# --- Suite registry ---


@dataclass(frozen=True)
class SuiteOptions:
    n_max: Optional[int] = None
    group: Optional[str] = None
    seed: int = config.SEED
    trials: int = config.FUZZ_TRIALS
    max_len: int = config.FUZZ_MAX_LEN
    force: bool = False
    workers: int = config.WORKERS

    def bound(self, default: int) -> int:
        return self.n_max if self.n_max is not None else default


def _certification_top(opts: SuiteOptions, alternating: bool) -> int:
    if alternating:
        default, limit = config.ALT_NMAX, config.ALT_FORCE_NMAX if opts.force else config.ALT_NMAX
    else:
        default, limit = config.SYM_NMAX, None if opts.force else config.SYM_NMAX
    top = opts.bound(default)
    if limit is not None and top > limit:
        logger.warning("uniqueness: %s capped at n=%d (asked for %d)", "alt" if alternating else "sym", limit, top)
        top = limit
    return top


def _suite_uniqueness(opts: SuiteOptions) -> List[VerificationReport]:
    reports = []
    if opts.group in (None, "sym"):
        top = _certification_top(opts, False)
        reports.extend(certify_uniqueness(n, False, opts.force) for n in range(2, top + 1))
    if opts.group in (None, "alt"):
        top = _certification_top(opts, True)
        reports.extend(certify_uniqueness(n, True, opts.force) for n in range(3, top + 1))
    return reports


def _suite_normalizer(opts: SuiteOptions) -> List[VerificationReport]:
    top = opts.bound(config.SYM_NMAX)
    return [fuzz_normalizer(n, opts.trials, opts.max_len, opts.seed, opts.workers) for n in range(4, top + 1)]


def _identity_bound(opts: SuiteOptions) -> int:
    return max(6, opts.bound(config.IDENTITY_NMAX))


SUITES: Dict[str, Callable[[SuiteOptions], List[VerificationReport]]] = {
    "uniqueness": _suite_uniqueness,
    "enumeration": lambda o: [check_enumeration(o.bound(config.MAJ_NMAX))],
    "coset_law": lambda o: [check_coset_law(o.bound(config.SYM_NMAX))],
    "restriction": lambda o: [check_restriction(o.bound(config.SYM_NMAX))],
    "generators": lambda o: [check_generators(o.bound(config.GENERATOR_NMAX))],
    "exchange": lambda o: [check_exchange_sn(o.bound(config.SYM_NMAX)),
                           check_exchange_sn_overlap(o.bound(config.SYM_NMAX))],
    "v_exchange": lambda o: [check_v_exchange(_identity_bound(o))],
    "alt4": lambda o: [check_alt4_table()],
    "rel_tt_step": lambda o: [check_rel_tt_step(_identity_bound(o))],
    "rel_tt_general": lambda o: [check_rel_tt_general(_identity_bound(o))],
    "rel_tt_general_printed": lambda o: [check_rel_tt_general(_identity_bound(o), "printed")],
    "rel_vu": lambda o: [check_rel_vu(_identity_bound(o))],
    "rel_t_odd": lambda o: [check_rel_t_odd(_identity_bound(o))],
    "identities": lambda o: run_identity_suites(_identity_bound(o)),
    "major_index": lambda o: [check_major_index(o.bound(config.MAJ_NMAX))],
    "normalizer": _suite_normalizer,
    "text_roundtrip": lambda o: [check_text_roundtrip(o.bound(config.TEXT_ROUNDTRIP_NMAX))],
    "conventions": lambda o: [resolve_conventions(o.bound(6)).report],
}

# What `verify --all` runs. The printed rel_tt_general form is excluded: it is
# expected to fail and is only selectable by name.
DEFAULT_SUITES = (
    "conventions",
    "generators",
    "uniqueness",
    "enumeration",
    "coset_law",
    "restriction",
    "exchange",
    "v_exchange",
    "alt4",
    "rel_tt_step",
    "rel_tt_general",
    "rel_vu",
    "rel_t_odd",
    "major_index",
    "normalizer",
    "text_roundtrip",
)


def run_suites(names: Sequence[str], options: SuiteOptions) -> List[VerificationReport]:
    """Run the named suites in order, concatenating their reports."""
    reports: List[VerificationReport] = []
    for name in names:
        if name not in SUITES:
            raise IndexRangeError(f"Unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}.")
        logger.info("running suite %s", name)
        reports.extend(SUITES[name](options))
    return reports
