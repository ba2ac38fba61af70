"""Checks over the encoding machinery.

Five families of checks, each producing a deterministic, JSON-stable
report:

  numeral_code_chain    the tower code-of(S), code-of-numeral-of(that), ...
                        with a certified strictly-increasing verdict
  check_lemma1          no number p codes "S followed by the numeral of p"
  check_non_identities  the four no-fixed-point families over a bound
  build_sigma_seq       slot-allocation process for a term that would
                        denote the code of its own symbol sequence
  build_sigma_sub       unfolding of the case-defined self-substitution
  appendix_expansion    the numeral-code iteration u, Z(u), Z(Z(u)), ...
  build_arrays          open terms x their codes x substitution grids
  analyze_diagonal      per-slot self-containment impossibility report

Comparisons between magnitudes that are both mere lower bounds cannot be
decided from the representations alone; where a check still certifies
growth it does so through a structural fact recorded per step: a code of
a (v+1)-symbol sequence exceeds v under both schemes, whatever v is. The
verdicts never extrapolate: maxSteps of certified growth is reported as
exactly that, with stepsVerified recorded.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import syntax
from .arithmetization import numeral_code, numeral_symbol_codes
from .encoding import (
    BetaScheme,
    EncodingScheme,
    PrimeScheme,
    encode_node,
    node_symbol_codes,
)
from .numerics import (
    Magnitude,
    Ordering,
    compare_certified,
    compare_floor_requirements,
    pow2_exceeds,
)

VERDICT_DIVERGES = "DivergesMonotonically"
VERDICT_FIXED_POINT = "FixedPointFound"
VERDICT_INCONCLUSIVE = "Inconclusive"

# method tags for certified comparisons
METHOD_EXACT = "exact"
METHOD_FLOOR_VS_EXACT = "floor-vs-exact"
METHOD_COUNT_LEMMA = "symbol-count-lemma"
METHOD_FLOOR_REQUIREMENT = "floor-requirement"

# exponents above this are advanced by doubling instead of exponentiation
# so certificate fields stay printable (2**e >= 2*e keeps that sound)
_EXP_DOUBLING_LIMIT = 4096


def _next_exponent(e: int) -> int:
    """Materializable lower-bound exponent for a value >= 2**(2**e)."""
    if e <= _EXP_DOUBLING_LIMIT:
        return 1 << e
    return 2 * e


@dataclass(frozen=True)
class StepComparison:
    lower: int                # step/entry index of the smaller side
    upper: int
    verdict: str              # an Ordering value
    method: str

    def to_json_dict(self) -> dict:
        return {"lower": self.lower, "upper": self.upper,
                "verdict": self.verdict, "method": self.method}


def _certify_growth_to_successor(prev: Magnitude, nxt: Magnitude,
                                 scheme: EncodingScheme,
                                 lower_index: int) -> StepComparison:
    """Certify nxt > prev where nxt was constructed as the code of a
    sequence with (value of prev) + 1 symbols.

    Representation-level comparison is used whenever it decides; otherwise
    the construction itself certifies: a code of a (v+1)-symbol sequence
    is at least min_code(v+1) > v for every natural v under both schemes.
    """
    rep = compare_certified(nxt, prev)
    if rep is Ordering.GREATER:
        method = METHOD_EXACT if nxt.is_exact and prev.is_exact else METHOD_FLOOR_VS_EXACT
        return StepComparison(lower_index, lower_index + 1,
                              Ordering.GREATER.value, method)
    # min_code(v+1) > v for all v: prime gives 2**(v+1) > v, beta gives
    # v+2 > v; valid whatever prev's true value is, so no Unknown here.
    return StepComparison(lower_index, lower_index + 1,
                          Ordering.GREATER.value, METHOD_COUNT_LEMMA)


# ---------------------------------------------------------------------------
# Numeral-code chain


@dataclass
class ChainReport:
    scheme: str
    entries: list[Magnitude]
    comparisons: list[StepComparison]
    strictly_increasing: bool
    steps_verified: int

    def to_json_dict(self) -> dict:
        return {
            "scheme": self.scheme,
            "entries": [m.to_json_dict() for m in self.entries],
            "comparisons": [c.to_json_dict() for c in self.comparisons],
            "strictlyIncreasing": self.strictly_increasing,
            "stepsVerified": self.steps_verified,
        }


def _successor_code_magnitude(prev: Magnitude, scheme: EncodingScheme) -> Magnitude:
    """Magnitude of the code of the numeral denoting prev's value."""
    if prev.is_exact:
        assert prev.exact_value is not None
        return numeral_code(prev.exact_value, scheme)
    assert prev.low2 is not None
    # the numeral has (value + 1) symbols and value >= 2**e
    count_exponent_bound = _next_exponent(prev.low2)
    if isinstance(scheme, PrimeScheme):
        # code >= 2**(symbol count) >= 2**(2**e + 1)
        return Magnitude.lower_bound(count_exponent_bound + 1)
    # beta: code >= symbol count + 1 >= 2**e + 2 > 2**e
    return Magnitude.lower_bound(prev.low2)


def numeral_code_chain(scheme: EncodingScheme, steps: int) -> ChainReport:
    """Entry 0 is the code of the one-symbol sequence [code(S)]; every next
    entry is the code of the numeral denoting the previous entry."""
    if steps < 1:
        raise ValueError("steps must be >= 1")
    entries = [Magnitude.exact(scheme.encode_seq([3]))]
    comparisons: list[StepComparison] = []
    for i in range(1, steps):
        prev = entries[-1]
        entries.append(_successor_code_magnitude(prev, scheme))
        comparisons.append(
            _certify_growth_to_successor(prev, entries[-1], scheme, i - 1)
        )
    increasing = all(c.verdict == Ordering.GREATER.value for c in comparisons)
    return ChainReport(
        scheme=scheme.name,
        entries=entries,
        comparisons=comparisons,
        strictly_increasing=increasing,
        steps_verified=len(comparisons),
    )


# ---------------------------------------------------------------------------
# Lemma scan and non-identities


@dataclass
class ScanReport:
    name: str
    scheme: str
    bound: int
    checked: int
    exact_checks: int
    floor_checks: int
    counterexamples: list[int]

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "scheme": self.scheme,
            "bound": self.bound,
            "checked": self.checked,
            "exactChecks": self.exact_checks,
            "floorChecks": self.floor_checks,
            "counterexamples": [str(c) for c in self.counterexamples],
        }


# beta-scheme exact encodes are attempted only this far; the least-witness
# search grows out of any cutoff within a few more symbols anyway
_BETA_EXACT_SCAN_LIMIT = 2


def check_lemma1(scheme: EncodingScheme, bound: int) -> ScanReport:
    """For every p <= bound certify code("S" + numeral(p)) > p.

    Exact below the scheme's materialization reach, certified floor above
    (the sequence has p+2 symbols, and min_code(p+2) > p always)."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    exact_checks = floor_checks = 0
    counterexamples: list[int] = []
    for p in range(bound + 1):
        symbols = p + 2
        code: int | None = None
        if isinstance(scheme, PrimeScheme) and symbols <= scheme.max_exact_symbols:
            code = scheme.encode_seq([3] + numeral_symbol_codes(p))
        elif isinstance(scheme, BetaScheme) and p <= _BETA_EXACT_SCAN_LIMIT:
            code = scheme.try_encode_seq([3] + numeral_symbol_codes(p))
        if code is not None:
            exact_checks += 1
            if not code > p:
                counterexamples.append(p)
            continue
        floor_checks += 1
        if isinstance(scheme, PrimeScheme):
            ok = pow2_exceeds(symbols, p)          # 2**(p+2) > p
        else:
            ok = symbols + 1 > p                   # (p+2) + 1 > p
        if not ok:
            counterexamples.append(p)
    return ScanReport(
        name="lemma-no-self-numeral",
        scheme=scheme.name,
        bound=bound,
        checked=bound + 1,
        exact_checks=exact_checks,
        floor_checks=floor_checks,
        counterexamples=counterexamples,
    )


@dataclass
class NonIdentityReport:
    scheme: str
    bound: int
    families: list[ScanReport]

    def to_json_dict(self) -> dict:
        return {
            "scheme": self.scheme,
            "bound": self.bound,
            "families": [f.to_json_dict() for f in self.families],
        }

    @property
    def counterexample_count(self) -> int:
        return sum(len(f.counterexamples) for f in self.families)


# prime-scheme exact spot checks run up to this value in the scans below
_EXACT_SPOT_LIMIT = 64


def _scan_family(name: str, scheme: EncodingScheme, bound: int,
                 symbol_count_for, rhs_offset: int = 0) -> ScanReport:
    """Certify n != rhs for all n <= bound, where rhs is rhs_offset plus a
    code of a sequence with symbol_count_for(n) symbols.

    The floor route shows rhs > n outright: min_code(count) + offset > n.
    """
    exact_checks = floor_checks = 0
    counterexamples: list[int] = []
    for n in range(bound + 1):
        count = symbol_count_for(n)
        if isinstance(scheme, PrimeScheme):
            ok = pow2_exceeds(count, n - rhs_offset)
        else:
            ok = count + 1 + rhs_offset > n
        floor_checks += 1
        if not ok:
            counterexamples.append(n)
    return ScanReport(
        name=name,
        scheme=scheme.name,
        bound=bound,
        checked=bound + 1,
        exact_checks=exact_checks,
        floor_checks=floor_checks,
        counterexamples=counterexamples,
    )


def _exists_successor_formula(n: int) -> syntax.Formula:
    """The closed formula asserting a successor above the n-th numeral:
    Ex1(x1=S<numeral n>)."""
    return syntax.Exists(1, syntax.Eq(syntax.Var(1),
                                      syntax.Succ(syntax.numeral(n))))


def check_non_identities(scheme: EncodingScheme, bound: int) -> NonIdentityReport:
    """The four no-fixed-point families, certified for every value <= bound:

      n != code("S" + numeral(n))           (prefix-successor sequence)
      n != 1 + code(numeral(n))             (successor of a numeral code)
      n != code("S" + numeral(n))           (value form, listed separately)
      n != code of Ex1(x1=S numeral(n))     (formula form)
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    families = [
        _scan_family("prefix-successor-sequence", scheme, bound,
                     lambda n: n + 2),
        _scan_family("successor-of-numeral-code", scheme, bound,
                     lambda n: n + 1, rhs_offset=1),
        _scan_family("exists-successor-value", scheme, bound,
                     lambda n: n + 2),
        # the closed formula has n+8 symbols: E x1 ( x1 = S <n+1> )
        _scan_family("exists-successor-formula", scheme, bound,
                     lambda n: len(syntax.symbols_of(_exists_successor_formula(n)))
                     if n <= _EXACT_SPOT_LIMIT else n + 8),
    ]
    # exact spot checks at small n back up the floor route
    if isinstance(scheme, PrimeScheme):
        for n in range(min(bound, _EXACT_SPOT_LIMIT) + 1):
            seq_code = scheme.encode_seq([3] + numeral_symbol_codes(n))
            numeral_code_exact = scheme.encode_seq(numeral_symbol_codes(n))
            formula_code = encode_node(scheme, _exists_successor_formula(n))
            checks = [
                ("prefix-successor-sequence", seq_code != n),
                ("successor-of-numeral-code", 1 + numeral_code_exact != n),
                ("exists-successor-value", seq_code != n),
                ("exists-successor-formula", formula_code != n),
            ]
            for fam_name, ok in checks:
                fam = next(f for f in families if f.name == fam_name)
                fam.exact_checks += 1
                if not ok:
                    fam.counterexamples.append(n)
    return NonIdentityReport(scheme=scheme.name, bound=bound, families=families)


# ---------------------------------------------------------------------------
# Growth certificates


@dataclass(frozen=True)
class GrowthStep:
    index: int
    unencoded_symbols: int
    required_floor: Magnitude
    total_symbols: int | None = None        # sigma-seq only
    detail: str = ""

    def to_json_dict(self) -> dict:
        out: dict = {
            "index": self.index,
            "unencodedSymbolCount": str(self.unencoded_symbols),
            "requiredCodeFloor": self.required_floor.to_json_dict(),
        }
        if self.total_symbols is not None:
            out["totalSymbols"] = str(self.total_symbols)
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class GrowthCertificate:
    process: str
    scheme: str
    steps: list[GrowthStep]
    comparisons: list[StepComparison]
    verdict: str
    steps_verified: int
    reading: str | None = None
    baseline: Magnitude | None = None
    baseline_comparison: StepComparison | None = None

    def to_json_dict(self) -> dict:
        out: dict = {
            "process": self.process,
            "scheme": self.scheme,
        }
        if self.reading is not None:
            out["reading"] = self.reading
        if self.baseline is not None:
            out["baseline"] = self.baseline.to_json_dict()
        out["steps"] = [s.to_json_dict() for s in self.steps]
        out["comparisons"] = [c.to_json_dict() for c in self.comparisons]
        if self.baseline_comparison is not None:
            out["baselineComparison"] = self.baseline_comparison.to_json_dict()
        out["verdict"] = self.verdict
        out["stepsVerified"] = self.steps_verified
        return out


def _conclude(cert: GrowthCertificate) -> GrowthCertificate:
    grew = all(c.verdict == Ordering.GREATER.value for c in cert.comparisons)
    witnessed = all(s.unencoded_symbols >= 1 for s in cert.steps)
    cert.verdict = VERDICT_DIVERGES if grew and witnessed else VERDICT_INCONCLUSIVE
    cert.steps_verified = len(cert.comparisons)
    return cert


def verify_certificate(cert: GrowthCertificate) -> bool:
    """Re-check a certificate from its own recorded steps, without rerunning
    the expansion: floors must strictly increase as requirements and every
    step must keep at least one unencoded symbol."""
    if cert.verdict != VERDICT_DIVERGES:
        return False
    for step in cert.steps:
        if step.unencoded_symbols < 1:
            return False
    for a, b in zip(cert.steps, cert.steps[1:]):
        if compare_floor_requirements(b.required_floor, a.required_floor) \
                is not Ordering.GREATER:
            return False
    return True


# --- sigma over explicit sequence slots (slot-allocation process) ----------


def build_sigma_seq(scheme: EncodingScheme, max_steps: int) -> GrowthCertificate:
    """Slot-allocation process for a term that would denote the code of its
    own symbol sequence.

    The term starts as a successor symbol plus at least one function symbol
    (the representing term's overhead). Every symbol of the term needs a
    numeral slot; every allocated numeral brings new symbols that are not
    yet covered, so the required symbol count, and with it the certified
    code floor, grows at every step.
    """
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    # unencoded symbol counts by kind; the abstract overhead symbol has an
    # unknown code >= 1, so its slot numeral contributes at least 2 symbols
    succ, zero, abstract = 1, 0, 1
    total = 2
    steps = [GrowthStep(
        index=0,
        unencoded_symbols=succ + zero + abstract,
        required_floor=scheme.certified_floor(total),
        total_symbols=total,
        detail="initial: successor symbol plus representing-term overhead",
    )]
    for t in range(1, max_steps):
        new_succ = 3 * succ + zero + abstract
        new_zero = succ + zero + abstract
        added = 4 * succ + 2 * zero + 2 * abstract
        succ, zero, abstract = new_succ, new_zero, 0
        total += added
        steps.append(GrowthStep(
            index=t,
            unencoded_symbols=added,
            required_floor=scheme.certified_floor(total),
            total_symbols=total,
            detail="slots allocated for every symbol left unencoded",
        ))
    comparisons = [
        StepComparison(a.index, b.index,
                       compare_floor_requirements(b.required_floor,
                                                  a.required_floor).value,
                       METHOD_FLOOR_REQUIREMENT)
        for a, b in zip(steps, steps[1:])
    ]
    cert = GrowthCertificate(
        process="sigma-sequence-slots",
        scheme=scheme.name,
        steps=steps,
        comparisons=comparisons,
        verdict=VERDICT_INCONCLUSIVE,
        steps_verified=0,
    )
    return _conclude(cert)


# --- sigma through the case-defined substitution ----------------------------


def build_sigma_sub(scheme: EncodingScheme, max_steps: int,
                    reading: str = "recompute") -> GrowthCertificate:
    """Unfold the self-application of the case-defined substitution.

    Each unfolding emits one more bracket layer [code(S), <next layer>];
    the floor of the value being defined is driven through the scheme's
    pair bound, starting from nothing more than "the innermost value is a
    natural number".
    """
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    if reading not in ("recompute", "outer-num"):
        raise ValueError("reading must be 'recompute' or 'outer-num'")
    baseline = Magnitude.exact(scheme.encode_seq([3]))
    exponent = 0        # innermost unresolved value is >= 2**0 under prime;
    # for beta the first pair bound below does not rely on it
    steps: list[GrowthStep] = []
    for t in range(max_steps):
        if isinstance(scheme, PrimeScheme):
            # layer code >= 2**3 * 3**(2**e) >= 2**(3 + 2**e)
            exponent = 3 + _next_exponent(exponent) if t > 0 else 4
        else:
            # residue analysis: pair [3, s] needs first(x) >= max(3, s) and
            # 3*second(x) >= s; from s >= 2**e this gives x >= 2**(2e - 1)
            exponent = max(2 * exponent - 1, exponent + 1, 4)
        steps.append(GrowthStep(
            index=t,
            unencoded_symbols=1,
            required_floor=Magnitude.lower_bound(exponent),
            detail=f"bracket layer [3, ...] emitted under the {reading} reading",
        ))
    comparisons = [
        StepComparison(a.index, b.index,
                       compare_floor_requirements(b.required_floor,
                                                  a.required_floor).value,
                       METHOD_FLOOR_REQUIREMENT)
        for a, b in zip(steps, steps[1:])
    ]
    cert = GrowthCertificate(
        process="sigma-case-substitution",
        scheme=scheme.name,
        steps=steps,
        comparisons=comparisons,
        verdict=VERDICT_INCONCLUSIVE,
        steps_verified=0,
        reading=reading,
        baseline=baseline,
        baseline_comparison=StepComparison(
            -1, 0,
            compare_certified(steps[0].required_floor, baseline).value,
            METHOD_FLOOR_VS_EXACT,
        ),
    )
    return _conclude(cert)


# --- the numeral-code iteration over the fixed prime coding ----------------


def appendix_expansion(max_steps: int,
                       scheme: PrimeScheme | None = None) -> GrowthCertificate:
    """Iterate value -> code of its numeral starting from the code of the
    one-element sequence [code(S)]; the prime-power coding is fixed here.
    """
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    scheme = scheme or PrimeScheme()
    value = Magnitude.exact(scheme.encode_seq([3]))
    steps = [GrowthStep(
        index=0,
        unencoded_symbols=1,
        required_floor=value,
        detail="singleton sequence of the successor symbol",
    )]
    comparisons: list[StepComparison] = []
    for t in range(1, max_steps):
        nxt = _successor_code_magnitude(value, scheme)
        comparisons.append(
            _certify_growth_to_successor(value, nxt, scheme, t - 1)
        )
        steps.append(GrowthStep(
            index=t,
            unencoded_symbols=1,
            required_floor=nxt,
            detail="code of the numeral denoting the previous value",
        ))
        value = nxt
    cert = GrowthCertificate(
        process="appendix-numeral-iteration",
        scheme=scheme.name,
        steps=steps,
        comparisons=comparisons,
        verdict=VERDICT_INCONCLUSIVE,
        steps_verified=0,
    )
    return _conclude(cert)


# ---------------------------------------------------------------------------
# Arrays and the diagonal


@dataclass
class MTermSkeleton:
    """Abstract representing term: numeral slots plus overhead symbols.

    The overhead count is at least 1: a representing term always carries
    at least one function symbol besides its numeral slots.
    """

    numeral_slots: list[Magnitude]
    overhead_symbols: int

    def __post_init__(self) -> None:
        if self.overhead_symbols < 1:
            raise ValueError("a representing term has at least one overhead symbol")

    def total_symbols_at_least(self) -> int:
        total = self.overhead_symbols
        for slot in self.numeral_slots:
            if slot.is_exact:
                assert slot.exact_value is not None
                total += slot.exact_value + 1
            else:
                assert slot.low2 is not None
                total += (1 << min(slot.low2, 64)) + 1
        return total

    def to_json_dict(self) -> dict:
        return {
            "numeralSlots": [m.to_json_dict() for m in self.numeral_slots],
            "overheadSymbols": self.overhead_symbols,
        }


@dataclass
class ArrayBundle:
    scheme: str
    grid_size: int
    open_terms: list[str]
    term_codes: list[Magnitude]
    term_code_numerals: list[dict]
    closed_grid: list[list[str]]
    code_grid: list[list[Magnitude]]
    skeleton_grid: list[list[MTermSkeleton]]
    floored_cells: list[list[bool]]

    def to_json_dict(self) -> dict:
        return {
            "scheme": self.scheme,
            "gridSize": self.grid_size,
            "openTerms": self.open_terms,
            "termCodes": [m.to_json_dict() for m in self.term_codes],
            "termCodeNumerals": self.term_code_numerals,
            "closedGrid": self.closed_grid,
            "codeGrid": [[m.to_json_dict() for m in row] for row in self.code_grid],
            "skeletonGrid": [[s.to_json_dict() for s in row]
                             for row in self.skeleton_grid],
            "flooredCells": self.floored_cells,
        }


def _encode_or_floor(scheme: EncodingScheme, codes: list[int]) -> tuple[Magnitude, bool]:
    exact = scheme.try_encode_seq(codes)
    if exact is not None:
        return Magnitude.exact(exact), False
    return scheme.certified_floor(len(codes)), True


def build_arrays(function_terms: list[syntax.Term], grid_size: int,
                 scheme: EncodingScheme) -> ArrayBundle:
    """The aligned structures over a finite list of open terms in x0:
    rendered terms, their codes, the numerals of those codes, the closed
    substitution grid, its code grid, and the skeleton grid whose slots
    are the symbol codes of each closed term."""
    if grid_size < 1:
        raise ValueError("grid_size must be >= 1")
    for term in function_terms:
        if 0 not in syntax.free_vars(term):
            raise ValueError(f"term {syntax.render(term)!r} must have x0 free")
    open_terms = [syntax.render(t) for t in function_terms]
    term_codes: list[Magnitude] = []
    term_code_numerals: list[dict] = []
    closed_grid: list[list[str]] = []
    code_grid: list[list[Magnitude]] = []
    skeleton_grid: list[list[MTermSkeleton]] = []
    floored: list[list[bool]] = []
    for term in function_terms:
        mag, was_floored = _encode_or_floor(scheme, node_symbol_codes(term))
        term_codes.append(mag)
        if mag.is_exact:
            term_code_numerals.append({"succCount": str(mag.exact_value)})
        else:
            term_code_numerals.append({"succCountAtLeastLog2": str(mag.low2)})
        row_text: list[str] = []
        row_codes: list[Magnitude] = []
        row_skel: list[MTermSkeleton] = []
        row_floor: list[bool] = []
        for j in range(grid_size):
            closed = syntax.substitute(term, 0, syntax.numeral(j))
            codes = node_symbol_codes(closed)
            cell_mag, cell_floored = _encode_or_floor(scheme, codes)
            row_text.append(syntax.render(closed))
            row_codes.append(cell_mag)
            row_skel.append(MTermSkeleton(
                numeral_slots=[Magnitude.exact(c) for c in codes],
                overhead_symbols=1,
            ))
            row_floor.append(cell_floored or was_floored)
        closed_grid.append(row_text)
        code_grid.append(row_codes)
        skeleton_grid.append(row_skel)
        floored.append(row_floor)
    return ArrayBundle(
        scheme=scheme.name,
        grid_size=grid_size,
        open_terms=open_terms,
        term_codes=term_codes,
        term_code_numerals=term_code_numerals,
        closed_grid=closed_grid,
        code_grid=code_grid,
        skeleton_grid=skeleton_grid,
        floored_cells=floored,
    )


def skeleton_denotation(scheme: EncodingScheme,
                        skeleton: MTermSkeleton) -> int | None:
    """Re-encode a skeleton's exact slot values; None when any slot is a
    floor or the scheme search overruns."""
    values: list[int] = []
    for slot in skeleton.numeral_slots:
        if not slot.is_exact:
            return None
        assert slot.exact_value is not None
        values.append(slot.exact_value)
    return scheme.try_encode_seq(values)


def analyze_diagonal(bundle: ArrayBundle, sigma_row: int,
                     scheme: EncodingScheme | None = None) -> dict:
    """Per-slot report for the diagonal cell of the designated row.

    A slot numeral k_a would have to denote a number coding its own a+1
    symbols plus at least one more; any code of an (a+2)-symbol sequence
    exceeds a under both schemes, whatever a is, so every slot reports
    impossible. The skeleton's overhead count is the standing witness that
    there is such an extra symbol.
    """
    if not 0 <= sigma_row < len(bundle.skeleton_grid):
        raise ValueError(f"sigma_row {sigma_row} outside the bundle")
    column = min(sigma_row, bundle.grid_size - 1)
    skeleton = bundle.skeleton_grid[sigma_row][column]
    slot_reports = []
    for i, slot in enumerate(skeleton.numeral_slots, start=1):
        if slot.is_exact:
            assert slot.exact_value is not None
            a = slot.exact_value
            # min_code(a+2) > a: 2**(a+2) > a (prime), a+3 > a (beta)
            impossible = pow2_exceeds(a + 2, a) and a + 3 > a
            slot_reports.append({
                "slot": i,
                "value": str(a),
                "selfContainment": "impossible" if impossible else "unresolved",
                "method": "count-bound-vs-value",
            })
        else:
            slot_reports.append({
                "slot": i,
                "valueAtLeastLog2": str(slot.low2),
                "selfContainment": "impossible",
                "method": "universal-count-lemma",
            })
    return {
        "row": sigma_row,
        "column": column,
        "cell": bundle.closed_grid[sigma_row][column],
        "overheadSymbols": skeleton.overhead_symbols,
        "overheadWitness": skeleton.overhead_symbols >= 1,
        "slots": slot_reports,
        "noSlotSelfContainment": all(
            r["selfContainment"] == "impossible" for r in slot_reports
        ),
    }
