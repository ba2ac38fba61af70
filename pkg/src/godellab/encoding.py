"""Two sequence encodings behind one interface, plus the sequence algebra.

Prime-power scheme: a sequence n_1, ..., n_k is carried by the single
natural 2**n_1 * 3**n_2 * ... * p_k**n_k. The classic element/length/
concatenation operators on such codes live here as element_at, seq_len
and concat_codes, together with single_code for one-element sequences.

Beta scheme: a sequence a_1, ..., a_n is carried by the least x whose
projections match, i.e. beta(x, 0) == n and beta(x, i) == a_i, where
beta(x, i) = first(x) mod (1 + (i+1)*second(x)) over the Cantor unpairing
of x. The least-witness search is exhaustive from 0 and therefore needs a
cutoff; a constructive (far larger) witness is available without a search
as seq_witness.

Symbol codes: fixed basic symbols get the small odd codes, extension
symbols get odd composites, and variables get the primes above 13, so
"is a variable code" is a primality test.
"""

from __future__ import annotations

from dataclasses import dataclass, field

try:
    import gmpy2
    _HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - exercised via force_pure flag
    _HAVE_GMPY2 = False

from . import kernels, syntax
from .numerics import Magnitude, nth_prime, prime_index, saturating_pow2
from .syntax import Symbol

DEFAULT_MU_CUTOFF = 5_000_000
DEFAULT_MAX_EXACT_SYMBOLS = 4096

_ONE = gmpy2.mpz(1) if _HAVE_GMPY2 else 1


class InvalidCodeError(ValueError):
    """The number is not a code of the expected shape."""


class OutOfRangeError(IndexError):
    """Position outside the coded sequence."""


class SearchLimitExceeded(RuntimeError):
    """The exhaustive least-witness search passed its configured cutoff."""


# ---------------------------------------------------------------------------
# Symbol codes

_BASE_CODES = {
    syntax.ZERO: 1,
    syntax.SUCC: 3,
    syntax.NOT: 5,
    syntax.OR: 7,
    syntax.EXISTS: 9,
    syntax.LPAREN: 11,
    syntax.RPAREN: 13,
    syntax.EQ: 15,
    syntax.PLUS: 21,
    syntax.TIMES: 25,
}
_CODE_TO_KIND = {code: kind for kind, code in _BASE_CODES.items()}

# first 6 primes are 2..13; variable i takes the (i+1)-th prime above 13
_VARIABLE_PRIME_OFFSET = 6


def symbol_code(sym: Symbol) -> int:
    if sym.kind == syntax.VAR:
        return nth_prime(_VARIABLE_PRIME_OFFSET + 1 + sym.index)
    return _BASE_CODES[sym.kind]


def code_to_symbol(code: int) -> Symbol:
    kind = _CODE_TO_KIND.get(code)
    if kind is not None:
        return Symbol(kind)
    if code > 13:
        try:
            idx = prime_index(code)
        except ValueError:
            raise InvalidCodeError(f"{code} is not a symbol code") from None
        return syntax.var_symbol(idx - _VARIABLE_PRIME_OFFSET - 1)
    raise InvalidCodeError(f"{code} is not a symbol code")


def node_symbol_codes(node: syntax.Node) -> list[int]:
    return [symbol_code(s) for s in syntax.symbols_of(node)]


def codes_to_text(codes: list[int]) -> str:
    return "".join(code_to_symbol(c).text() for c in codes)


# ---------------------------------------------------------------------------
# Prime-power sequence algebra

# _POW_ROWS[i][c] == nth_prime(i+1) ** c, grown on demand; list indexing
# keeps the exhaustive round-trip suites fast
_POW_ROWS: list[list] = []
_POW_EXP_CACHE_LIMIT = 64


def _pow_row(position: int) -> list:
    while len(_POW_ROWS) < position:
        base = nth_prime(len(_POW_ROWS) + 1)
        _POW_ROWS.append([gmpy2.mpz(1) if _HAVE_GMPY2 else 1,
                          gmpy2.mpz(base) if _HAVE_GMPY2 else base])
    return _POW_ROWS[position - 1]


def _prime_power(position: int, exponent: int):
    row = _pow_row(position)
    if exponent < len(row):
        return row[exponent]
    if exponent <= _POW_EXP_CACHE_LIMIT:
        base = row[1]
        while len(row) <= exponent:
            row.append(row[-1] * base)
        return row[exponent]
    return row[1] ** exponent


def prime_encode(codes: list[int]) -> int:
    """Product of nth_prime(i)**codes[i-1] over 1-indexed positions."""
    n = len(codes)
    if n:
        _pow_row(n)
    x = _ONE
    rows = _POW_ROWS
    for i, c in enumerate(codes):
        if c < 1:
            raise InvalidCodeError("sequence elements must be >= 1 under the prime scheme")
        row = rows[i]
        x *= row[c] if c < len(row) else _prime_power(i + 1, c)
    return int(x)


def prime_decode(x: int) -> list[int]:
    """Exponent sequence of x; the prime support must be an initial segment."""
    if x < 1:
        raise InvalidCodeError("codes are positive")
    out: list[int] = []
    i = 1
    if _HAVE_GMPY2:
        rem = gmpy2.mpz(x)
        _remove = gmpy2.remove
        while rem > 1:
            rem, e = _remove(rem, _pow_row(i)[1])
            if e == 0:
                raise InvalidCodeError(
                    f"prime support of {x} skips prime {nth_prime(i)}"
                )
            out.append(int(e))
            i += 1
        return out
    rem = x
    while rem > 1:
        p = nth_prime(i)
        e = 0
        while rem % p == 0:
            rem //= p
            e += 1
        if e == 0:
            raise InvalidCodeError(f"prime support of {x} skips prime {p}")
        out.append(e)
        i += 1
    return out


def seq_len(x: int) -> int:
    return len(prime_decode(x))


def element_at(n: int, x: int) -> int:
    """n-th element (1-indexed) of the sequence coded by x."""
    seq = prime_decode(x)
    if not 1 <= n <= len(seq):
        raise OutOfRangeError(f"position {n} outside sequence of length {len(seq)}")
    return seq[n - 1]


def concat_codes(x: int, y: int) -> int:
    return prime_encode(prime_decode(x) + prime_decode(y))


def single_code(c: int) -> int:
    """Code of the one-element sequence [c]; equals 2**c."""
    return prime_encode([c])


# ---------------------------------------------------------------------------
# Beta function and sequence numbers

cantor_pair = kernels.cantor_pair
cantor_unpair = kernels.cantor_unpair


def beta(x: int, i: int) -> int:
    """Remainder projection; beta(x, i) <= max(x - 1, 0) for every x, i."""
    u, v = cantor_unpair(x)
    return u % (1 + (i + 1) * v)


def seq_number(entries: list[int], cutoff: int = DEFAULT_MU_CUTOFF) -> int:
    """Least x with beta(x, 0) == len(entries) and beta(x, i) == entries[i-1].

    The search is exhaustive from 0 upward; passing the cutoff raises
    SearchLimitExceeded and never returns a wrong witness.
    """
    targets = [len(entries)] + list(entries)
    found = kernels.mu_search(targets, cutoff)
    if found < 0:
        raise SearchLimitExceeded(
            f"no sequence number below {cutoff} for {entries!r}"
        )
    return found


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def seq_witness(entries: list[int]) -> int:
    """A (generally non-least) x with the same projections as seq_number.

    Built by remainder combination: with v a factorial past every target,
    the moduli 1 + (i+1)v are pairwise coprime and large enough, so a u
    matching all residues exists; no search is involved, so this scales
    past the mu cutoff.
    """
    targets = [len(entries)] + list(entries)
    bound = max(targets + [len(targets)]) + 1
    v = 1
    for k in range(2, bound + 1):
        v *= k
    moduli = [1 + (i + 1) * v for i in range(len(targets))]
    u, m = 0, 1
    for r_i, m_i in zip(targets, moduli):
        g, p, _ = _ext_gcd(m, m_i)
        assert g == 1, "moduli must be pairwise coprime"
        u = (u + (r_i - u) * p % m_i * m) % (m * m_i)
        m *= m_i
    x = cantor_pair(u, v)
    for i, t in enumerate(targets):
        assert beta(x, i) == t, "witness construction is broken"
    return x


# ---------------------------------------------------------------------------
# Scheme interface


@dataclass
class EncodingScheme:
    """Common surface over the two sequence encodings."""

    name: str = field(init=False, default="")

    def encode_seq(self, entries: list[int]) -> int:
        raise NotImplementedError

    def decode_seq(self, x: int) -> list[int]:
        raise NotImplementedError

    def seq_len(self, x: int) -> int:
        raise NotImplementedError

    def element_at(self, n: int, x: int) -> int:
        raise NotImplementedError

    def concat(self, x: int, y: int) -> int:
        raise NotImplementedError

    def singleton(self, c: int) -> int:
        raise NotImplementedError

    def floor_log2_for_length(self, symbol_count: int) -> int:
        """Exponent e with: every code of a symbol_count-long sequence >= 2**e."""
        raise NotImplementedError

    def certified_floor(self, symbol_count: int) -> Magnitude:
        """Magnitude lower bound for any code of a sequence of that length,
        computable without materializing the code itself."""
        if symbol_count < 0:
            raise ValueError("symbol count must be nonnegative")
        return Magnitude.lower_bound(self.floor_log2_for_length(symbol_count))

    def min_code_for_length(self, symbol_count: int) -> int:
        """Exact integer lower bound on codes of sequences of that length.

        Only valid when the bound itself is materializable; used for
        value-level certified comparisons at desk scale.
        """
        raise NotImplementedError

    def pair_floor(self, first: int, second: Magnitude) -> Magnitude:
        """Lower bound for the code of the 2-sequence [first, x] where x is
        only known through the given magnitude."""
        raise NotImplementedError

    def try_encode_seq(self, entries: list[int]) -> int | None:
        """encode_seq, with search/materialization overruns mapped to None."""
        try:
            return self.encode_seq(entries)
        except SearchLimitExceeded:
            return None


@dataclass
class PrimeScheme(EncodingScheme):
    """Prime-power encoding; exact up to max_exact_symbols positions."""

    max_exact_symbols: int = DEFAULT_MAX_EXACT_SYMBOLS

    def __post_init__(self) -> None:
        self.name = "prime"

    def encode_seq(self, entries: list[int]) -> int:
        return prime_encode(entries)

    def decode_seq(self, x: int) -> list[int]:
        return prime_decode(x)

    def seq_len(self, x: int) -> int:
        return seq_len(x)

    def element_at(self, n: int, x: int) -> int:
        return element_at(n, x)

    def concat(self, x: int, y: int) -> int:
        return concat_codes(x, y)

    def singleton(self, c: int) -> int:
        return single_code(c)

    def floor_log2_for_length(self, symbol_count: int) -> int:
        # every position contributes a prime >= 2 with exponent >= 1
        return symbol_count

    def min_code_for_length(self, symbol_count: int) -> int:
        return 1 << symbol_count

    def pair_floor(self, first: int, second: Magnitude) -> Magnitude:
        if second.is_exact:
            assert second.exact_value is not None
            v = second.exact_value
            if 1 <= v <= (1 << 22):
                return Magnitude.exact(prime_encode([first, v]))
            # elements are >= 1 under this scheme, so v = 0 still gives 3**1
            return Magnitude.lower_bound(first + max(v, 1))  # 3**v >= 2**v
        assert second.low2 is not None
        return Magnitude.lower_bound(first + saturating_pow2(second.low2))


@dataclass
class BetaScheme(EncodingScheme):
    """Least-witness beta encoding; searches are bounded by mu_cutoff."""

    mu_cutoff: int = DEFAULT_MU_CUTOFF

    def __post_init__(self) -> None:
        self.name = "beta"

    def encode_seq(self, entries: list[int]) -> int:
        return seq_number(entries, self.mu_cutoff)

    def decode_seq(self, x: int) -> list[int]:
        n = beta(x, 0)
        return [beta(x, i) for i in range(1, n + 1)]

    def seq_len(self, x: int) -> int:
        return beta(x, 0)

    def element_at(self, n: int, x: int) -> int:
        if not 1 <= n <= beta(x, 0):
            raise OutOfRangeError(
                f"position {n} outside sequence of length {beta(x, 0)}"
            )
        return beta(x, n)

    def concat(self, x: int, y: int) -> int:
        return self.encode_seq(self.decode_seq(x) + self.decode_seq(y))

    def singleton(self, c: int) -> int:
        return self.encode_seq([c])

    def floor_log2_for_length(self, symbol_count: int) -> int:
        # beta(x, 0) = n forces x >= n + 1 because beta(x, i) <= x - 1
        return (symbol_count + 1).bit_length() - 1

    def min_code_for_length(self, symbol_count: int) -> int:
        return symbol_count + 1

    def _pair_floor_value(self, first: int, second_at_least: int) -> int:
        # a residue is at most the dividend and below the divisor, so
        # beta(x,0)=2, beta(x,1)=first, beta(x,2)=s force
        #   first(x) >= max(2, first, s)
        #   second(x) >= max(2, first/2, s/3)
        # and the Cantor pair of those component floors bounds x below.
        s = second_at_least
        u_min = max(2, first, s)
        v_min = max(2, -(-first // 2), -(-s // 3))
        return cantor_pair(u_min, v_min)

    def pair_floor(self, first: int, second: Magnitude) -> Magnitude:
        if second.is_exact:
            assert second.exact_value is not None
            v = second.exact_value
            exact = None
            if v <= self.mu_cutoff:
                try:
                    exact = self.encode_seq([first, v])
                except SearchLimitExceeded:
                    exact = None
            if exact is not None:
                return Magnitude.exact(exact)
            bound = self._pair_floor_value(first, v)
            return Magnitude.lower_bound(bound.bit_length() - 1)
        assert second.low2 is not None
        e = second.low2
        # second >= 2**e, so x >= pair(2**e, 2**e/3) >= 2**(2e - 1)
        return Magnitude.lower_bound(max(2 * e - 1, e + 1, 1))


def get_scheme(name: str, *, mu_cutoff: int | None = None,
               max_exact_symbols: int | None = None) -> EncodingScheme:
    if name == "prime":
        return PrimeScheme(max_exact_symbols or DEFAULT_MAX_EXACT_SYMBOLS)
    if name == "beta":
        return BetaScheme(mu_cutoff or DEFAULT_MU_CUTOFF)
    raise ValueError(f"unknown scheme {name!r}; expected 'prime' or 'beta'")


# ---------------------------------------------------------------------------
# Node-level encoding


def encode_node(scheme: EncodingScheme, node: syntax.Node) -> int:
    """Scheme code of the node's symbol flattening."""
    return scheme.encode_seq(node_symbol_codes(node))


def decode_node(scheme: EncodingScheme, x: int) -> syntax.Node:
    return syntax.parse(codes_to_text(scheme.decode_seq(x)))


def certified_floor(scheme: EncodingScheme, symbol_count: int) -> Magnitude:
    return scheme.certified_floor(symbol_count)
