"""Numeral codes and substitution at the level of codes.

numeral_code(n) is the code of the term S...S0 with n successors. Because
that code grows hyper-exponentially under iteration, results are
magnitudes: exact while materializable, certified floors beyond.

sub_with_numeral implements the three-case substitution-into-self
recursion literally: a variable code maps to the numeral code of the
argument, a canonical 2-sequence code recurses on its tail, anything else
is fixed. The printed definition is ambiguous about whether the numeral
argument of the inner call is recomputed from the inner argument or
passed down from the outer one, so both readings are provided and every
trace records which one produced it.

splice_element / free_position / free_count / substitute_code are the
classic code-level editing operators over prime-power codes: replace one
element by a whole sequence, locate or count free occurrences of a
variable (using the AST as ground truth for freeness), and substitute a
sequence for every free occurrence of a variable, rightmost first.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import syntax
from .encoding import (
    BetaScheme,
    EncodingScheme,
    InvalidCodeError,
    OutOfRangeError,
    PrimeScheme,
    SearchLimitExceeded,
    beta,
    code_to_symbol,
    codes_to_text,
    node_symbol_codes,
    prime_decode,
    prime_encode,
    seq_number,
)
from .numerics import Magnitude, is_prime, nth_prime


class RecursionLimitExceeded(RuntimeError):
    """The case-2 recursion passed its configured depth without resolving."""


DEFAULT_SUB_DEPTH_LIMIT = 256


def is_variable_code(x: int) -> bool:
    """Variable codes are exactly the primes above 13."""
    return x > 13 and is_prime(x)


def numeral_symbol_codes(n: int) -> list[int]:
    return [3] * n + [1]


# least-witness searches for numerals longer than this never land within a
# desk-scale cutoff, so the beta scheme does not attempt them
_BETA_EXACT_NUMERAL_LIMIT = 4


def numeral_code(n: int, scheme: EncodingScheme) -> Magnitude:
    """Code of the numeral with n successors, exact while materializable.

    Prime scheme: exact up to the scheme's max_exact_symbols positions.
    Beta scheme: exact when the least-witness search succeeds within its
    cutoff. Otherwise: the certified floor for n + 1 symbols.
    """
    if n < 0:
        raise ValueError("numeral argument must be nonnegative")
    if isinstance(scheme, PrimeScheme) and n + 1 <= scheme.max_exact_symbols:
        return Magnitude.exact(prime_encode(numeral_symbol_codes(n)))
    if isinstance(scheme, BetaScheme) and n <= _BETA_EXACT_NUMERAL_LIMIT:
        exact = scheme.try_encode_seq(numeral_symbol_codes(n))
        if exact is not None:
            return Magnitude.exact(exact)
    return scheme.certified_floor(n + 1)


# ---------------------------------------------------------------------------
# Case-defined substitution into self


@dataclass(frozen=True)
class SubStep:
    case: str                      # "variable" | "pair" | "otherwise"
    argument: int
    detail: str = ""

    def to_json_dict(self) -> dict[str, str]:
        return {"case": self.case, "argument": str(self.argument),
                "detail": self.detail}


@dataclass
class SubResult:
    value: Magnitude
    reading: str
    steps: list[SubStep] = field(default_factory=list)
    divergence_pending: bool = False

    def to_json_dict(self) -> dict:
        return {
            "value": self.value.to_json_dict(),
            "reading": self.reading,
            "steps": [s.to_json_dict() for s in self.steps],
            "divergencePending": self.divergence_pending,
        }


def _as_canonical_pair(x: int, scheme: EncodingScheme) -> tuple[int, int] | None:
    """The components (a)_0, (a)_1 when x is the canonical 2-sequence code."""
    if isinstance(scheme, PrimeScheme):
        try:
            seq = prime_decode(x)
        except InvalidCodeError:
            return None
        if len(seq) == 2:
            return seq[0], seq[1]
        return None
    assert isinstance(scheme, BetaScheme)
    if beta(x, 0) != 2:
        return None
    head, tail = beta(x, 1), beta(x, 2)
    if x > scheme.mu_cutoff:
        raise SearchLimitExceeded(
            f"cannot verify pair canonicity of {x} within cutoff {scheme.mu_cutoff}"
        )
    # the bracket code is the least witness, so x must equal the re-encode;
    # x itself matches the projections, so the search always terminates here
    found = seq_number([head, tail], cutoff=x + 1)
    return (head, tail) if found == x else None


def _assemble_pair(scheme: EncodingScheme, head: int,
                   tail: Magnitude) -> tuple[Magnitude, bool]:
    """Code of the 2-sequence [head, tail]; floor when it cannot materialize.

    Returns the magnitude and whether it had to fall back to a floor.
    """
    floor = scheme.pair_floor(head, tail)
    return floor, not floor.is_exact


def sub_with_numeral(x: int, scheme: EncodingScheme, reading: str = "recompute",
                     depth_limit: int = DEFAULT_SUB_DEPTH_LIMIT) -> SubResult:
    """The three-case recursion applied to a concrete code x.

    reading="recompute": the inner call re-derives its numeral argument
    from the inner code (unary self-application at every level).
    reading="outer-num": the numeral code of the outermost argument is
    passed down unchanged (binary reading).
    """
    if reading not in ("recompute", "outer-num"):
        raise ValueError("reading must be 'recompute' or 'outer-num'")
    result = SubResult(value=Magnitude.exact(0), reading=reading)
    outer_num: Magnitude | None = None
    if reading == "outer-num":
        outer_num = numeral_code(x, scheme)

    def recurse(arg: int, depth: int) -> Magnitude:
        if depth > depth_limit:
            raise RecursionLimitExceeded(
                f"case-2 recursion exceeded depth {depth_limit}"
            )
        if is_variable_code(arg):
            result.steps.append(SubStep("variable", arg))
            if reading == "outer-num":
                assert outer_num is not None
                return outer_num
            return numeral_code(arg, scheme)
        pair = _as_canonical_pair(arg, scheme)
        if pair is not None:
            head, tail = pair
            result.steps.append(SubStep("pair", arg, detail=f"head={head}"))
            inner = recurse(tail, depth + 1)
            assembled, floored = _assemble_pair(scheme, head, inner)
            if floored:
                result.divergence_pending = True
            return assembled
        result.steps.append(SubStep("otherwise", arg))
        return Magnitude.exact(arg)

    result.value = recurse(x, 0)
    return result


# ---------------------------------------------------------------------------
# Code-level editing over prime-power codes


def splice_element(x: int, n: int, y: int) -> int:
    """Replace the n-th element of x's sequence with the whole sequence of y.

    The result also satisfies the classical size bound
    nth_prime(l(x)+l(y)) ** (x+y), which is asserted, never searched.
    """
    seq = prime_decode(x)
    if not 1 <= n <= len(seq):
        raise OutOfRangeError(f"position {n} outside sequence of length {len(seq)}")
    inserted = prime_decode(y)
    out = seq[:n - 1] + inserted + seq[n:]
    z = prime_encode(out)
    assert _within_splice_bound(z, x, y, len(seq), len(inserted))
    return z


def _within_splice_bound(z: int, x: int, y: int, lx: int, ly: int) -> bool:
    # z <= Pr(l(x)+l(y)) ** (x+y) certified without materializing the bound:
    # the base is >= 2, so it is enough that z has at most x+y bits.
    if z.bit_length() <= x + y:
        return True
    return z <= nth_prime(lx + ly) ** (x + y)


def _decode_to_node(x: int) -> syntax.Node:
    return syntax.parse(codes_to_text(prime_decode(x)))


def free_count(v: int, x: int) -> int:
    """Number of free occurrences of the variable coded v in the expression
    coded x. Freeness is read off the parsed tree, not guessed numerically."""
    sym = code_to_symbol(v)
    if sym.kind != syntax.VAR:
        raise InvalidCodeError(f"{v} is not a variable code")
    node = _decode_to_node(x)
    return len(syntax.free_positions(node, sym.index))


def free_position(k: int, v: int, x: int) -> int:
    """1-indexed position from the left of the (k+1)-th free occurrence of
    the variable coded v, counted from the right end of x's sequence."""
    sym = code_to_symbol(v)
    if sym.kind != syntax.VAR:
        raise InvalidCodeError(f"{v} is not a variable code")
    node = _decode_to_node(x)
    positions = syntax.free_positions(node, sym.index)
    if k >= len(positions):
        raise OutOfRangeError(
            f"only {len(positions)} free occurrences, requested index {k}"
        )
    return positions[len(positions) - 1 - k]


def substitute_code(x: int, v: int, y: int) -> int:
    """Replace every free occurrence of the variable coded v in x's sequence
    with y's whole sequence.

    Iterates the one-place splice once per occurrence, rightmost first, so
    positions computed on the original x stay valid throughout.
    """
    count = free_count(v, x)
    z = x
    for k in range(count):
        z = splice_element(z, free_position(k, v, x), y)
    return z


def diagonal_code(x: int, v: int, scheme: EncodingScheme) -> Magnitude:
    """Code of the expression obtained by substituting the numeral of x
    itself for the variable coded v inside the expression coded x.

    Exact only when the numeral code of x materializes AND the spliced
    result stays within exact range; otherwise a certified floor derived
    from the symbol count of the substituted expression:
    original length - occurrences + occurrences * (x + 1).
    """
    sym = code_to_symbol(v)
    if sym.kind != syntax.VAR:
        raise InvalidCodeError(f"{v} is not a variable code")
    codes = scheme.decode_seq(x)
    node = syntax.parse(codes_to_text(codes))
    positions = set(syntax.free_positions(node, sym.index))
    count = len(positions)
    if count == 0:
        return Magnitude.exact(x)
    new_length = len(codes) - count + count * (x + 1)
    if isinstance(scheme, PrimeScheme) and new_length <= scheme.max_exact_symbols:
        numeral_mag = numeral_code(x, scheme)
        assert numeral_mag.is_exact and numeral_mag.exact_value is not None
        return Magnitude.exact(substitute_code(x, v, numeral_mag.exact_value))
    if isinstance(scheme, BetaScheme) and new_length <= 64:
        out: list[int] = []
        for pos, c in enumerate(codes, start=1):
            if pos in positions:
                out.extend(numeral_symbol_codes(x))
            else:
                out.append(c)
        exact = scheme.try_encode_seq(out)
        if exact is not None:
            return Magnitude.exact(exact)
    return scheme.certified_floor(new_length)
