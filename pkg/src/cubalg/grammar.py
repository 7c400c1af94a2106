"""Text grammar and JSON rendering for cells and chains.

    factor   := ("p" | "s" | "i") "@" int
    cell     := "[" factor ("," factor)* "]"
    term     := [rational "*"] cell
    chain    := ["-"] term (("+" | "-") term)*
    rational := int | int "/" int

A bare cell is a term with coefficient 1.  Whitespace may appear between
tokens.  Parse errors carry the offending position.

Canonical form: terms sorted by per-axis (coordinate, kind) keys, each
rational in lowest terms, integers printed without a denominator, unit
coefficients omitted.
"""

from __future__ import annotations

from fractions import Fraction

from .cells import CHAR_KINDS, KIND_CHARS, Cell, Factor, make_cell
from .chain import Chain
from .lattice import LatticeSpec


class ChainParseError(ValueError):
    """Syntax error in the chain grammar, annotated with its position."""

    def __init__(self, message: str, text: str, pos: int):
        self.message = message
        self.text = text
        self.pos = pos
        caret = " " * pos + "^"
        super().__init__(f"{message} at position {pos}\n  {text}\n  {caret}")


class _Parser:
    def __init__(self, text: str, lattice: LatticeSpec):
        self.text = text
        self.lattice = lattice
        self.pos = 0

    def error(self, message: str) -> ChainParseError:
        return ChainParseError(message, self.text, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def parse_int(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.peek() in "+-":
            self.pos += 1
        if not self.peek().isdigit():
            self.pos = start
            raise self.error("expected an integer")
        while self.peek().isdigit():
            self.pos += 1
        return int(self.text[start : self.pos])

    def parse_rational(self) -> Fraction:
        num = self.parse_int()
        self.skip_ws()
        if self.peek() == "/":
            self.pos += 1
            den = self.parse_int()
            if den == 0:
                raise self.error("zero denominator")
            return Fraction(num, den)
        return Fraction(num)

    def parse_factor(self) -> Factor:
        self.skip_ws()
        ch = self.peek()
        if ch not in CHAR_KINDS:
            raise self.error("expected factor kind 'p', 's' or 'i'")
        self.pos += 1
        self.skip_ws()
        self.expect("@")
        coord = self.parse_int()
        return Factor(CHAR_KINDS[ch], coord)

    def parse_cell(self) -> Cell:
        self.skip_ws()
        self.expect("[")
        factors = [self.parse_factor()]
        self.skip_ws()
        while self.peek() == ",":
            self.pos += 1
            factors.append(self.parse_factor())
            self.skip_ws()
        self.expect("]")
        if len(factors) != self.lattice.d:
            raise self.error(
                f"cell has {len(factors)} factors, lattice has dimension {self.lattice.d}"
            )
        return make_cell(factors, self.lattice)

    def parse_term(self, sign: int) -> tuple[Cell, Fraction]:
        self.skip_ws()
        if self.peek() == "[":
            return self.parse_cell(), Fraction(sign)
        coef = self.parse_rational()
        self.skip_ws()
        self.expect("*")
        return self.parse_cell(), sign * coef

    def parse_chain(self) -> Chain:
        terms: dict[Cell, Fraction] = {}
        self.skip_ws()
        sign = 1
        if self.peek() == "-":
            self.pos += 1
            sign = -1
        elif self.peek() == "+":
            self.pos += 1
        cell, coef = self.parse_term(sign)
        terms[cell] = terms.get(cell, Fraction(0)) + coef
        while True:
            self.skip_ws()
            ch = self.peek()
            if ch == "":
                break
            if ch not in "+-":
                raise self.error("expected '+', '-' or end of input")
            self.pos += 1
            cell, coef = self.parse_term(1 if ch == "+" else -1)
            terms[cell] = terms.get(cell, Fraction(0)) + coef
        return Chain(self.lattice, terms)


def parse_cell(text: str, lattice: LatticeSpec) -> Cell:
    p = _Parser(text, lattice)
    cell = p.parse_cell()
    p.skip_ws()
    if p.pos != len(text):
        raise p.error("trailing input after cell")
    return cell


def parse_chain(text: str, lattice: LatticeSpec) -> Chain:
    return _Parser(text, lattice).parse_chain()


# -- formatting ---------------------------------------------------------------


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_cell(cell: Cell) -> str:
    return str(cell)


def format_chain(chain: Chain) -> str:
    if chain.is_zero():
        return "0"
    parts: list[str] = []
    for cell in sorted(chain.cells(), key=Cell.sort_key):
        coef = chain.coefficient(cell)
        mag = abs(coef)
        body = format_cell(cell) if mag == 1 else f"{format_rational(mag)}*{format_cell(cell)}"
        if not parts:
            parts.append(body if coef > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if coef > 0 else '-'} {body}")
    return " ".join(parts)


def chain_to_json_dict(chain: Chain) -> dict:
    """Canonical JSON rendering with sorted terms."""
    terms = []
    for cell in sorted(chain.cells(), key=Cell.sort_key):
        terms.append(
            {
                "cell": [[KIND_CHARS[f.kind], f.coord] for f in cell.factors],
                "coef": format_rational(chain.coefficient(cell)),
            }
        )
    return {"lattice": {"periods": list(chain.lattice.periods)}, "terms": terms}


def chain_from_json_dict(data: dict) -> Chain:
    lattice = LatticeSpec(tuple(data["lattice"]["periods"]))
    terms: dict[Cell, Fraction] = {}
    for entry in data["terms"]:
        factors = [Factor(CHAR_KINDS[k], int(c)) for k, c in entry["cell"]]
        cell = make_cell(factors, lattice)
        terms[cell] = terms.get(cell, Fraction(0)) + Fraction(entry["coef"])
    return Chain(lattice, terms)
