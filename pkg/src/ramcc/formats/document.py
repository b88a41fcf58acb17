"""
The .ramcc input format: line-oriented, INI-like named sections with `key = value` lines and `#` comments.

    [field]            p = 3, precision = 40 (optional)
    [extension]        n = 1, a0 = -x, a1 = -t^2, ..., conjugates = h; h + t; h - t (optional)
    [representation]   preset = wild|faithful|regular|induced,
                       character = m * [e_1, ..., e_#G]                   (repeatable)
                       induced   = m * ind([subgroup]; [e_1, ..., e_#H])  (repeatable)
    [triple]           delta, rank, psi0, horizontal = degree, swan, rank (repeatable),
                       vertical = deligne V | cc SW RANK | unramified SW RANK (repeatable)
    [abstract]         n, invariants = k_1, ..., a0 (in x), hbar (in u), da0 (in x),
                       element = c_1,...,c_k : jump J : unit U (repeatable), conductor

Character exponents are powers of ζ_q, q the exponent of G, listed over the group in the order reports print it.

Values are parsed by a small recursive-descent parser for the BNF
    expr  ::= term (('+'|'-') term)*
    term  ::= unary (('*'|'/') unary)*
    unary ::= '-' unary | power
    power ::= atom ('^' '-'? INT)?
    atom  ::= INT | NAME | '(' expr ')' | 'O' '(' 't' ('^' INT)? ')'
whose NAMEs and division rules depend on the algebra the value lives in.
"""
from typing import Dict, List, Tuple, Optional, TypeVar, Generic, Iterator
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from pathlib import Path

import re

from ..algebra.ratfun import RationalFunction
from ..fields.laurent import LaurentSeries
from ..fields.extension import ExtensionSpec, OrderElement
from ..ramification.data import AbstractExtensionData
from ..errors import ParseError, DivisionByZero

SECTIONS = ("field", "extension", "representation", "triple", "abstract")
REPEATABLE = {"character", "induced", "horizontal", "vertical", "element"}
PRESETS = ("wild", "faithful", "regular", "induced")
VERTICAL_KINDS = ("deligne", "cc", "unramified")

V = TypeVar("V")


class ExpressionAlgebra(ABC, Generic[V]):
    """
    Where the values of an expression live. Methods raise a ValueError whose message says what would have been
    acceptable; the parser turns it into a positioned ParseError.
    """

    @abstractmethod
    def integer(self, k: int) -> V:
        pass

    @abstractmethod
    def variable(self, name: str) -> V:
        pass

    @abstractmethod
    def divide(self, a: V, b: V) -> V:
        pass

    def bigO(self, N: int) -> V:
        raise ValueError("a value without O-terms")

    def power(self, a: V, k: int) -> V:
        if k >= 0:
            return a ** k
        return self.divide(self.integer(1), a ** (-k))


class SeriesAlgebra(ExpressionAlgebra[LaurentSeries]):
    """Laurent series in t over F_p(x). Only monomials c·t^k can be divided by."""

    def __init__(self, p: int):
        self.p = p

    def integer(self, k: int) -> LaurentSeries:
        return LaurentSeries.constant(k, self.p)

    def variable(self, name: str) -> LaurentSeries:
        if name == "x":
            return LaurentSeries.constant(RationalFunction.generator(self.p, "x"), self.p)
        if name == "t":
            return LaurentSeries.monomial(1, 1, self.p)
        raise ValueError("'x' or 't'")

    def divide(self, a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
        if not b.terms:
            raise DivisionByZero("a nonzero divisor")
        if len(b.terms) != 1 or not b.isExact():
            raise ValueError("a monomial divisor c*t^k")
        k, c = b.terms[0]
        return a.scaled(c.inverse()).shift(-k)

    def bigO(self, N: int) -> LaurentSeries:
        return LaurentSeries.zero(self.p, N)


class FunctionAlgebra(ExpressionAlgebra[RationalFunction]):
    """Rational functions in one variable over F_p."""

    def __init__(self, p: int, name: str="x"):
        self.p = p
        self.name = name

    def integer(self, k: int) -> RationalFunction:
        return RationalFunction.constant(k, self.p, self.name)

    def variable(self, name: str) -> RationalFunction:
        if name != self.name:
            raise ValueError(f"'{self.name}'")
        return RationalFunction.generator(self.p, self.name)

    def divide(self, a: RationalFunction, b: RationalFunction) -> RationalFunction:
        if b.isZero():
            raise DivisionByZero("a nonzero divisor")
        return a / b


class OrderAlgebra(ExpressionAlgebra[OrderElement]):
    """Elements of O_L = O_K[h], e.g. explicit conjugates h + t."""

    def __init__(self, spec: ExtensionSpec):
        self.spec = spec
        self._series = SeriesAlgebra(spec.p)

    def integer(self, k: int) -> OrderElement:
        return self.spec.fromSeries(self._series.integer(k))

    def variable(self, name: str) -> OrderElement:
        if name == "h":
            return self.spec.h()
        try:
            return self.spec.fromSeries(self._series.variable(name))
        except ValueError:
            raise ValueError("'h', 'x' or 't'")

    def divide(self, a: OrderElement, b: OrderElement) -> OrderElement:
        if any(not c.isEmpty() for c in b.coordinates[1:]):
            raise ValueError("a divisor in K")
        one = self._series.integer(1)
        return a * self._series.divide(one, b.coordinates[0])

    def bigO(self, N: int) -> OrderElement:
        return self.spec.fromSeries(self._series.bigO(N))


########################################################################################################################


TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/^()]))")


@dataclass
class Token:
    kind: str  # "int", "name", "op" or "end".
    text: str
    col: int


def tokenize(text: str, line: int, col: int) -> Iterator[Token]:
    position = 0
    while position < len(text):
        if not text[position:].strip():
            break
        match = TOKEN.match(text, position)
        if match is None:
            bad = text[position:].lstrip()
            raise ParseError(line, col + len(text) - len(bad), "a number, a variable or an operator", bad[0])
        kind = match.lastgroup
        yield Token(kind, match.group(kind), col + match.start(kind))
        position = match.end()
    yield Token("end", "", col + len(text.rstrip()))


class ExpressionParser(Generic[V]):

    def __init__(self, text: str, algebra: ExpressionAlgebra[V], line: int=1, col: int=1):
        self.algebra = algebra
        self.line = line
        self.tokens = list(tokenize(text, line, col))
        self.index = 0

    def parse(self) -> V:
        value = self._expression()
        self._expect("end", "end of the value")
        return value

    def _peek(self) -> Token:
        return self.tokens[self.index]

    def _take(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _expect(self, kind: str, expected: str, text: Optional[str]=None) -> Token:
        token = self._peek()
        if token.kind != kind or (text is not None and token.text != text):
            raise ParseError(self.line, token.col, expected, token.text)
        return self._take()

    def _apply(self, token: Token, operation, *arguments) -> V:
        try:
            return operation(*arguments)
        except ParseError:
            raise
        except ValueError as e:
            raise ParseError(self.line, token.col, str(e), token.text)

    def _isOp(self, *texts: str) -> bool:
        token = self._peek()
        return token.kind == "op" and token.text in texts

    def _expression(self) -> V:
        value = self._term()
        while self._isOp("+", "-"):
            op = self._take()
            right = self._term()
            value = value + right if op.text == "+" else value - right
        return value

    def _term(self) -> V:
        value = self._unary()
        while self._isOp("*", "/"):
            op = self._take()
            right = self._unary()
            value = value * right if op.text == "*" else self._apply(op, self.algebra.divide, value, right)
        return value

    def _unary(self) -> V:
        if self._isOp("-"):
            self._take()
            return -self._unary()
        return self._power()

    def _power(self) -> V:
        base = self._atom()
        if not self._isOp("^"):
            return base
        op = self._take()
        sign = 1
        if self._isOp("-"):
            self._take()
            sign = -1
        exponent = int(self._expect("int", "an integer exponent").text)
        return self._apply(op, self.algebra.power, base, sign*exponent)

    def _atom(self) -> V:
        token = self._peek()
        if token.kind == "int":
            self._take()
            return self.algebra.integer(int(token.text))
        if token.kind == "name" and token.text == "O":
            self._take()
            self._expect("op", "'(' after O", "(")
            self._expect("name", "'t' inside O(...)", "t")
            precision = 1
            if self._isOp("^"):
                self._take()
                sign = 1
                if self._isOp("-"):
                    self._take()
                    sign = -1
                precision = sign * int(self._expect("int", "an integer precision").text)
            self._expect("op", "')'", ")")
            return self._apply(token, self.algebra.bigO, precision)
        if token.kind == "name":
            self._take()
            return self._apply(token, self.algebra.variable, token.text)
        if self._isOp("("):
            self._take()
            value = self._expression()
            self._expect("op", "')'", ")")
            return value
        raise ParseError(self.line, token.col, "a number, a variable or '('", token.text or "end of line")


def parseValue(text: str, algebra: ExpressionAlgebra[V], line: int=1, col: int=1) -> V:
    return ExpressionParser(text, algebra, line, col).parse()


def parseLaurent(text: str, p: int) -> LaurentSeries:
    return parseValue(text, SeriesAlgebra(p))


########################################################################################################################


@dataclass
class Entry:
    key: str
    value: str
    line: int
    col: int  # Column of the first character of the value.


@dataclass
class ExtensionBlock:
    n: int
    coefficients: Tuple[LaurentSeries, ...]  # a_0, ..., a_{p^n - 1}.
    conjugates: Tuple[str, ...] = ()
    conjugates_at: Tuple[int, int] = field(default=(0, 0), compare=False)

    def spec(self, p: int, precision: Optional[int]=None) -> ExtensionSpec:
        return ExtensionSpec.create(p, self.n, self.coefficients, precision)

    def conjugateElements(self, spec: ExtensionSpec) -> List[OrderElement]:
        line, col = self.conjugates_at
        algebra = OrderAlgebra(spec)
        return [parseValue(text, algebra, line, col) for text in self.conjugates]


@dataclass
class RepresentationBlock:
    preset: Optional[str] = None
    characters: Tuple[Tuple[int, Tuple[int, ...]], ...] = ()
    induced: Tuple[Tuple[int, Tuple[int, ...], Tuple[int, ...]], ...] = ()


@dataclass
class VerticalLine:
    kind: str
    values: Tuple[int, ...]


@dataclass
class TripleBlock:
    delta: int
    rank: int
    psi0: int
    horizontal: Tuple[Tuple[int, int, int], ...] = ()
    vertical: Tuple[VerticalLine, ...] = ()


@dataclass
class AbstractBlock:
    n: int
    invariants: Tuple[int, ...]
    a0: RationalFunction
    elements: Tuple[Tuple[Tuple[int, ...], int, RationalFunction], ...]
    hbar: Optional[RationalFunction] = None
    da0: Optional[RationalFunction] = None
    conductor: Optional[int] = None

    def data(self, p: int) -> AbstractExtensionData:
        return AbstractExtensionData(
            p=p, n=self.n, invariants=self.invariants,
            elements={coordinates: (jump, unit) for coordinates, jump, unit in self.elements},
            abar0=self.a0, hbar=self.hbar, abar0_derivative=self.da0, declared_conductor=self.conductor
        )


@dataclass
class InputDocument:
    p: int
    precision: Optional[int] = None
    extension: Optional[ExtensionBlock] = None
    representation: Optional[RepresentationBlock] = None
    triple: Optional[TripleBlock] = None
    abstract: Optional[AbstractBlock] = None
    source: str = field(default="", compare=False)

    def require(self, section: str):
        if getattr(self, section) is None:
            raise ParseError(1, 1, f"a [{section}] section")
        return getattr(self, section)


########################################################################################################################


def _sections(text: str) -> Tuple[Dict[str, List[Entry]], Dict[str, int]]:
    entries: Dict[str, List[Entry]] = dict()
    headers: Dict[str, int] = dict()
    current = None
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        stripped = line.strip()
        if not stripped:
            continue
        indent = len(line) - len(line.lstrip()) + 1
        if stripped.startswith("["):
            if not stripped.endswith("]"):
                raise ParseError(line_number, indent + len(stripped), "']'", stripped[-1])
            name = stripped[1:-1].strip()
            if name not in SECTIONS:
                raise ParseError(line_number, indent + 1, "one of " + ", ".join(SECTIONS), name)
            if name in headers:
                raise ParseError(line_number, indent, f"[{name}] only once", stripped)
            headers[name] = line_number
            entries[name] = []
            current = name
            continue

        if current is None:
            raise ParseError(line_number, indent, "a [section] header", stripped)
        if "=" not in stripped:
            raise ParseError(line_number, indent, "'key = value'", stripped)
        key, value = line.split("=", 1)
        key = key.strip()
        if not key:
            raise ParseError(line_number, indent, "a key before '='", "=")
        col = len(line) - len(value) + 1 + (len(value) - len(value.lstrip()))
        if key not in REPEATABLE and any(e.key == key for e in entries[current]):
            raise ParseError(line_number, indent, f"'{key}' only once in [{current}]", key)
        entries[current].append(Entry(key, value.strip(), line_number, col))
    return entries, headers


def _single(entries: List[Entry], key: str) -> Optional[Entry]:
    for e in entries:
        if e.key == key:
            return e
    return None


def _integer(entry: Entry, minimum: Optional[int]=None) -> int:
    try:
        value = int(entry.value)
    except ValueError:
        raise ParseError(entry.line, entry.col, "an integer", entry.value)
    if minimum is not None and value < minimum:
        raise ParseError(entry.line, entry.col, f"an integer ≥ {minimum}", entry.value)
    return value


def _required(entries: List[Entry], key: str, section: str, line: int) -> Entry:
    entry = _single(entries, key)
    if entry is None:
        raise ParseError(line, 1, f"'{key}' in [{section}]")
    return entry


def _integerList(text: str, line: int, col: int, separator: str=",") -> Tuple[int, ...]:
    values = []
    offset = 0
    for part in text.split(separator):
        stripped = part.strip()
        try:
            values.append(int(stripped))
        except ValueError:
            raise ParseError(line, col + offset + len(part) - len(part.lstrip()), "an integer", stripped or separator)
        offset += len(part) + len(separator)
    return tuple(values)


def _unknownKeys(entries: List[Entry], allowed, section: str):
    for e in entries:
        if e.key not in allowed and not (section == "extension" and re.fullmatch(r"a\d+", e.key)):
            raise ParseError(e.line, 1, f"a key of [{section}]", e.key)


MULTIPLIED = re.compile(r"^\s*(?:(?P<m>-?\d+)\s*\*\s*)?(?P<body>.*)$")
LIST       = re.compile(r"^\[(?P<inside>[^\]]*)\]$")
INDUCED    = re.compile(r"^ind\(\s*\[(?P<subgroup>[^\]]*)\]\s*;\s*\[(?P<exponents>[^\]]*)\]\s*\)$")


def _multiplied(entry: Entry) -> Tuple[int, str, int]:
    match = MULTIPLIED.match(entry.value)
    m = int(match.group("m")) if match.group("m") is not None else 1
    return m, match.group("body").strip(), entry.col + match.start("body")


def _parseField(entries: List[Entry], line: int) -> Tuple[int, Optional[int]]:
    _unknownKeys(entries, {"p", "precision"}, "field")
    p = _integer(_required(entries, "p", "field", line), minimum=2)
    precision = _single(entries, "precision")
    return p, (_integer(precision, minimum=1) if precision else None)


def _parseExtension(entries: List[Entry], line: int, p: int) -> ExtensionBlock:
    _unknownKeys(entries, {"n", "conjugates"}, "extension")
    n = _integer(_required(entries, "n", "extension", line), minimum=1)
    degree = p**n
    _required(entries, "a0", "extension", line)

    algebra = SeriesAlgebra(p)
    coefficients = [LaurentSeries.zero(p) for _ in range(degree)]
    for e in entries:
        if not re.fullmatch(r"a\d+", e.key):
            continue
        i = int(e.key[1:])
        if i >= degree:
            raise ParseError(e.line, 1, f"a coefficient a_i with i < {degree}", e.key)
        coefficients[i] = parseValue(e.value, algebra, e.line, e.col)

    conjugates = ()
    at = (0, 0)
    entry = _single(entries, "conjugates")
    if entry is not None:
        conjugates = tuple(part.strip() for part in entry.value.split(";"))
        at = (entry.line, entry.col)
        if len(conjugates) != degree or not all(conjugates):
            raise ParseError(entry.line, entry.col, f"{degree} conjugates separated by ';'", entry.value)
    return ExtensionBlock(n, tuple(coefficients), conjugates, at)


def _parseRepresentation(entries: List[Entry]) -> RepresentationBlock:
    _unknownKeys(entries, {"preset", "character", "induced"}, "representation")
    preset = _single(entries, "preset")
    if preset is not None and preset.value not in PRESETS:
        raise ParseError(preset.line, preset.col, "one of " + ", ".join(PRESETS), preset.value)

    characters = []
    induced = []
    for e in entries:
        if e.key == "character":
            m, body, col = _multiplied(e)
            match = LIST.match(body)
            if match is None:
                raise ParseError(e.line, col, "'[e_1, ..., e_k]'", body)
            characters.append((m, _integerList(match.group("inside"), e.line, col + 1)))
        elif e.key == "induced":
            m, body, col = _multiplied(e)
            match = INDUCED.match(body)
            if match is None:
                raise ParseError(e.line, col, "'ind([subgroup]; [exponents])'", body)
            subgroup  = _integerList(match.group("subgroup"), e.line, col + match.start("subgroup"))
            exponents = _integerList(match.group("exponents"), e.line, col + match.start("exponents"))
            if len(subgroup) != len(exponents):
                raise ParseError(e.line, col + match.start("exponents"), f"{len(subgroup)} exponents", match.group("exponents"))
            induced.append((m, subgroup, exponents))
    return RepresentationBlock(preset.value if preset else None, tuple(characters), tuple(induced))


def _parseTriple(entries: List[Entry], line: int) -> TripleBlock:
    _unknownKeys(entries, {"delta", "rank", "psi0", "horizontal", "vertical"}, "triple")
    delta = _integer(_required(entries, "delta", "triple", line), minimum=0)
    rank  = _integer(_required(entries, "rank",  "triple", line), minimum=0)
    psi0  = _integer(_required(entries, "psi0",  "triple", line), minimum=0)

    horizontal = []
    vertical = []
    for e in entries:
        if e.key == "horizontal":
            values = _integerList(e.value, e.line, e.col)
            if len(values) != 3 or values[0] < 1 or min(values) < 0:
                raise ParseError(e.line, e.col, "'degree ≥ 1, swan ≥ 0, rank ≥ 0'", e.value)
            horizontal.append(values)
        elif e.key == "vertical":
            kind, _, rest = e.value.partition(" ")
            if kind not in VERTICAL_KINDS:
                raise ParseError(e.line, e.col, "one of " + ", ".join(VERTICAL_KINDS), kind)
            try:
                values = tuple(int(v) for v in rest.split())
            except ValueError:
                raise ParseError(e.line, e.col + len(kind) + 1, "integers", rest.strip())
            if len(values) != (1 if kind == "deligne" else 2):
                raise ParseError(e.line, e.col, "'deligne V'" if kind == "deligne" else f"'{kind} SW RANK'", e.value)
            vertical.append(VerticalLine(kind, values))
    return TripleBlock(delta, rank, psi0, tuple(horizontal), tuple(vertical))


def _parseAbstract(entries: List[Entry], line: int, p: int) -> AbstractBlock:
    _unknownKeys(entries, {"n", "invariants", "a0", "hbar", "da0", "element", "conductor"}, "abstract")
    n = _integer(_required(entries, "n", "abstract", line), minimum=1)
    invariants_entry = _required(entries, "invariants", "abstract", line)
    invariants = _integerList(invariants_entry.value, invariants_entry.line, invariants_entry.col)

    in_x = FunctionAlgebra(p, "x")
    in_u = FunctionAlgebra(p, "u")
    a0_entry = _required(entries, "a0", "abstract", line)
    a0 = parseValue(a0_entry.value, in_x, a0_entry.line, a0_entry.col)
    hbar_entry = _single(entries, "hbar")
    hbar = parseValue(hbar_entry.value, in_u, hbar_entry.line, hbar_entry.col) if hbar_entry else None
    da0_entry = _single(entries, "da0")
    da0 = parseValue(da0_entry.value, in_x, da0_entry.line, da0_entry.col) if da0_entry else None
    conductor_entry = _single(entries, "conductor")
    conductor = _integer(conductor_entry, minimum=1) if conductor_entry else None

    elements = []
    for e in entries:
        if e.key != "element":
            continue
        parts = e.value.split(":")
        if len(parts) != 3:
            raise ParseError(e.line, e.col, "'coordinates : jump J : unit U'", e.value)
        coordinates = _integerList(parts[0], e.line, e.col)
        jump_text = parts[1].strip()
        unit_text = parts[2].strip()
        jump_col = e.col + len(parts[0]) + 1
        unit_col = jump_col + len(parts[1]) + 1
        if not jump_text.startswith("jump "):
            raise ParseError(e.line, jump_col, "'jump J'", jump_text)
        if not unit_text.startswith("unit "):
            raise ParseError(e.line, unit_col, "'unit U'", unit_text)
        try:
            jump = int(jump_text[5:])
        except ValueError:
            raise ParseError(e.line, jump_col, "an integer jump", jump_text[5:])
        unit_offset = parts[2].index("unit ") + 5
        unit = parseValue(unit_text[5:], in_u, e.line, unit_col + unit_offset)
        elements.append((coordinates, jump, unit))
    return AbstractBlock(n, invariants, a0, tuple(elements), hbar, da0, conductor)


def parseDocument(text: str, source: str="") -> InputDocument:
    entries, headers = _sections(text)
    if "field" not in headers:
        raise ParseError(1, 1, "a [field] section")

    p, precision = _parseField(entries["field"], headers["field"])
    document = InputDocument(p=p, precision=precision, source=source)
    if "extension" in headers:
        document.extension = _parseExtension(entries["extension"], headers["extension"], p)
    if "representation" in headers:
        document.representation = _parseRepresentation(entries["representation"])
    if "triple" in headers:
        document.triple = _parseTriple(entries["triple"], headers["triple"])
    if "abstract" in headers:
        document.abstract = _parseAbstract(entries["abstract"], headers["abstract"], p)
    return document


def readDocument(path: Path) -> InputDocument:
    with open(path, "r", encoding="utf-8") as handle:
        return parseDocument(handle.read(), source=path.name)


########################################################################################################################


def _list(values) -> str:
    return "[" + ", ".join(map(str, values)) + "]"


def formatDocument(document: InputDocument) -> str:
    """Inverse of parseDocument: parseDocument(formatDocument(d)) == d."""
    lines = ["[field]", f"p = {document.p}"]
    if document.precision is not None:
        lines.append(f"precision = {document.precision}")

    if document.extension is not None:
        block = document.extension
        lines += ["", "[extension]", f"n = {block.n}"]
        for i, a in enumerate(block.coefficients):
            if i == 0 or a.terms or not a.isExact():
                lines.append(f"a{i} = {a.toString()}")
        if block.conjugates:
            lines.append("conjugates = " + "; ".join(block.conjugates))

    if document.representation is not None:
        block = document.representation
        lines += ["", "[representation]"]
        if block.preset is not None:
            lines.append(f"preset = {block.preset}")
        for m, exponents in block.characters:
            lines.append(f"character = {m} * {_list(exponents)}")
        for m, subgroup, exponents in block.induced:
            lines.append(f"induced = {m} * ind({_list(subgroup)}; {_list(exponents)})")

    if document.triple is not None:
        block = document.triple
        lines += ["", "[triple]", f"delta = {block.delta}", f"rank = {block.rank}", f"psi0 = {block.psi0}"]
        for values in block.horizontal:
            lines.append("horizontal = " + ", ".join(map(str, values)))
        for vertical in block.vertical:
            lines.append(f"vertical = {vertical.kind} " + " ".join(map(str, vertical.values)))

    if document.abstract is not None:
        block = document.abstract
        lines += ["", "[abstract]", f"n = {block.n}", "invariants = " + ", ".join(map(str, block.invariants)),
                  f"a0 = {block.a0.toString()}"]
        if block.hbar is not None:
            lines.append(f"hbar = {block.hbar.toString()}")
        if block.da0 is not None:
            lines.append(f"da0 = {block.da0.toString()}")
        for coordinates, jump, unit in block.elements:
            lines.append("element = " + ",".join(map(str, coordinates)) + f" : jump {jump} : unit {unit.toString()}")
        if block.conductor is not None:
            lines.append(f"conductor = {block.conductor}")
    return "\n".join(lines) + "\n"
