"""Terms and formulas of a small first-order language of arithmetic.

The object language has the constant 0, the successor prefix S, binary +
and *, equality, negation ~, disjunction |, and existential quantification
E over indexed variables x0, x1, ...  Rendering is canonical: binary
operators (including equality) are fully parenthesized, there is no
whitespace, and variables print as "x" followed by the decimal index.
Under that convention parse(render(node)) == node and the symbol
flattening of a node matches its rendered text one symbol per token.
"""

from __future__ import annotations

from dataclasses import dataclass


class ParseError(ValueError):
    """Malformed input text; carries the 0-based offset of the failure."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


# ---------------------------------------------------------------------------
# Symbols

ZERO = "zero"
SUCC = "succ"
NOT = "not"
OR = "or"
EXISTS = "exists"
LPAREN = "lparen"
RPAREN = "rparen"
EQ = "eq"
PLUS = "plus"
TIMES = "times"
VAR = "var"

_SYMBOL_TEXT = {
    ZERO: "0",
    SUCC: "S",
    NOT: "~",
    OR: "|",
    EXISTS: "E",
    LPAREN: "(",
    RPAREN: ")",
    EQ: "=",
    PLUS: "+",
    TIMES: "*",
}


@dataclass(frozen=True, order=True)
class Symbol:
    """One token of the object language; index is meaningful only for VAR."""

    kind: str
    index: int = -1

    def text(self) -> str:
        if self.kind == VAR:
            return f"x{self.index}"
        return _SYMBOL_TEXT[self.kind]


def var_symbol(index: int) -> Symbol:
    if index < 0:
        raise ValueError("variable index must be nonnegative")
    return Symbol(VAR, index)


# ---------------------------------------------------------------------------
# Abstract syntax


@dataclass(frozen=True)
class Term:
    pass


@dataclass(frozen=True)
class Zero(Term):
    pass


@dataclass(frozen=True)
class Succ(Term):
    child: Term


@dataclass(frozen=True)
class Var(Term):
    index: int


@dataclass(frozen=True)
class Plus(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Times(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Formula:
    pass


@dataclass(frozen=True)
class Eq(Formula):
    left: Term
    right: Term


@dataclass(frozen=True)
class Not(Formula):
    child: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Exists(Formula):
    var_index: int
    body: Formula


Node = Term | Formula


def numeral(n: int) -> Term:
    """The term with n successor symbols applied to 0 (n + 1 symbols)."""
    if n < 0:
        raise ValueError("numeral argument must be nonnegative")
    t: Term = Zero()
    for _ in range(n):
        t = Succ(t)
    return t


def succ_count(t: Term) -> int:
    """Number of leading successors; only valid on numerals."""
    n = 0
    while isinstance(t, Succ):
        t = t.child
        n += 1
    if not isinstance(t, Zero):
        raise ValueError("not a numeral")
    return n


# ---------------------------------------------------------------------------
# Rendering and flattening


def render(node: Node) -> str:
    match node:
        case Zero():
            return "0"
        case Succ(child):
            return "S" + render(child)
        case Var(index):
            return f"x{index}"
        case Plus(left, right):
            return f"({render(left)}+{render(right)})"
        case Times(left, right):
            return f"({render(left)}*{render(right)})"
        case Eq(left, right):
            return f"({render(left)}={render(right)})"
        case Not(child):
            return "~" + render(child)
        case Or(left, right):
            return f"({render(left)}|{render(right)})"
        case Exists(var_index, body):
            return f"Ex{var_index}{render(body)}"
    raise TypeError(f"not a term or formula: {node!r}")


def symbols_of(node: Node) -> list[Symbol]:
    """Left-to-right token flattening, one Symbol per token of render()."""
    out: list[Symbol] = []

    def walk(n: Node) -> None:
        match n:
            case Zero():
                out.append(Symbol(ZERO))
            case Succ(child):
                out.append(Symbol(SUCC))
                walk(child)
            case Var(index):
                out.append(var_symbol(index))
            case Plus(left, right):
                out.append(Symbol(LPAREN))
                walk(left)
                out.append(Symbol(PLUS))
                walk(right)
                out.append(Symbol(RPAREN))
            case Times(left, right):
                out.append(Symbol(LPAREN))
                walk(left)
                out.append(Symbol(TIMES))
                walk(right)
                out.append(Symbol(RPAREN))
            case Eq(left, right):
                out.append(Symbol(LPAREN))
                walk(left)
                out.append(Symbol(EQ))
                walk(right)
                out.append(Symbol(RPAREN))
            case Not(child):
                out.append(Symbol(NOT))
                walk(child)
            case Or(left, right):
                out.append(Symbol(LPAREN))
                walk(left)
                out.append(Symbol(OR))
                walk(right)
                out.append(Symbol(RPAREN))
            case Exists(var_index, body):
                out.append(Symbol(EXISTS))
                out.append(var_symbol(var_index))
                walk(body)
            case _:
                raise TypeError(f"not a term or formula: {n!r}")

    walk(node)
    return out


# ---------------------------------------------------------------------------
# Parsing


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> None:
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def var_index(self) -> int:
        self.take("x")
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected variable index digits", self.pos)
        return int(self.text[start:self.pos])

    def term(self) -> Term:
        ch = self.peek()
        if ch == "0":
            self.pos += 1
            return Zero()
        if ch == "S":
            self.pos += 1
            return Succ(self.term())
        if ch == "x":
            return Var(self.var_index())
        if ch == "(":
            self.pos += 1
            left = self.term()
            op = self.peek()
            if op == "+":
                self.pos += 1
                right = self.term()
                self.take(")")
                return Plus(left, right)
            if op == "*":
                self.pos += 1
                right = self.term()
                self.take(")")
                return Times(left, right)
            raise ParseError("expected '+' or '*'", self.pos)
        raise ParseError("expected a term", self.pos)

    def formula(self) -> Formula:
        ch = self.peek()
        if ch == "~":
            self.pos += 1
            return Not(self.formula())
        if ch == "E":
            self.pos += 1
            index = self.var_index()
            return Exists(index, self.formula())
        if ch == "(":
            # "(" opens either an equality over terms or a disjunction over
            # formulas; try the equality reading first and backtrack.
            saved = self.pos
            self.pos += 1
            try:
                left = self.term()
                self.take("=")
                right = self.term()
                self.take(")")
                return Eq(left, right)
            except ParseError as eq_err:
                self.pos = saved
                self.pos += 1
                try:
                    fleft = self.formula()
                    self.take("|")
                    fright = self.formula()
                    self.take(")")
                    return Or(fleft, fright)
                except ParseError as or_err:
                    # report whichever reading got further through the input
                    raise (eq_err if eq_err.position >= or_err.position
                           else or_err) from None
        raise ParseError("expected a formula", self.pos)


def parse(text: str) -> Node:
    """Parse canonical text into the unique Term or Formula it denotes."""
    term_err: ParseError | None = None
    parser = _Parser(text)
    try:
        node: Node = parser.term()
        if parser.pos == len(text):
            return node
        term_err = ParseError("trailing input after term", parser.pos)
    except ParseError as exc:
        term_err = exc
    parser = _Parser(text)
    try:
        node = parser.formula()
        if parser.pos == len(text):
            return node
        raise ParseError("trailing input after formula", parser.pos)
    except ParseError as formula_err:
        # Report whichever reading got further through the input.
        if term_err is not None and term_err.position >= formula_err.position:
            raise term_err from None
        raise


def parse_term(text: str) -> Term:
    node = parse(text)
    if not isinstance(node, Term):
        raise ParseError("expected a term, got a formula", 0)
    return node


# ---------------------------------------------------------------------------
# Variables and substitution


def free_vars(node: Node) -> set[int]:
    match node:
        case Zero():
            return set()
        case Succ(child):
            return free_vars(child)
        case Var(index):
            return {index}
        case Plus(left, right) | Times(left, right) | Eq(left, right) | Or(left, right):
            return free_vars(left) | free_vars(right)
        case Not(child):
            return free_vars(child)
        case Exists(var_index, body):
            return free_vars(body) - {var_index}
    raise TypeError(f"not a term or formula: {node!r}")


def substitute(node: Node, var_index: int, replacement: Term) -> Node:
    """Replace every free occurrence of the variable with the given term.

    When node is a formula the replacement must be closed, so no capture
    can arise.
    """
    if isinstance(node, Formula) and free_vars(replacement):
        raise ValueError("replacement must be closed when substituting into a formula")

    def walk(n: Node, bound: frozenset[int]) -> Node:
        match n:
            case Zero():
                return n
            case Succ(child):
                return Succ(walk(child, bound))
            case Var(index):
                if index == var_index and index not in bound:
                    return replacement
                return n
            case Plus(left, right):
                return Plus(walk(left, bound), walk(right, bound))
            case Times(left, right):
                return Times(walk(left, bound), walk(right, bound))
            case Eq(left, right):
                return Eq(walk(left, bound), walk(right, bound))
            case Not(child):
                return Not(walk(child, bound))
            case Or(left, right):
                return Or(walk(left, bound), walk(right, bound))
            case Exists(vi, body):
                return Exists(vi, walk(body, bound | {vi}))
        raise TypeError(f"not a term or formula: {n!r}")

    return walk(node, frozenset())


def free_positions(node: Node, var_index: int) -> list[int]:
    """1-indexed positions (in symbols_of order) of free occurrences.

    The variable token right after an E binder belongs to the quantifier
    prefix and is never counted as an occurrence.
    """
    positions: list[int] = []

    def walk(n: Node, bound: frozenset[int], pos: int) -> int:
        match n:
            case Zero():
                return pos + 1
            case Succ(child):
                return walk(child, bound, pos + 1)
            case Var(index):
                if index == var_index and index not in bound:
                    positions.append(pos)
                return pos + 1
            case Plus(left, right) | Times(left, right) | Eq(left, right) | Or(left, right):
                pos = walk(left, bound, pos + 1)       # skip "("
                pos = walk(right, bound, pos + 1)      # skip operator
                return pos + 1                         # skip ")"
            case Not(child):
                return walk(child, bound, pos + 1)
            case Exists(vi, body):
                return walk(body, bound | {vi}, pos + 2)   # skip "E" and binder
        raise TypeError(f"not a term or formula: {n!r}")

    walk(node, frozenset(), 1)
    return positions
