"""A small text language for rings, modules and elements.

    ring    := "Z" | "Z/" INT | ring "x" ring | "TE(" ring "," module ")" | "(" ring ")"
    module  := "Z/" INT | module "x" module
    element := INT | "(" element "," element ("," element)* ")"

Products associate to the left. Parsing builds an AST; :func:`elaborate`
turns it into a ring object and enforces divisibility constraints, so
``TE(Z/4, Z/3)`` parses fine but fails to elaborate.
"""

import re
from dataclasses import dataclass

from .errors import InvalidElement, InvalidModule, ParseError, Unsupported
from .finite_module import make_module
from .finite_ring import Integers, make_product_ring, make_residue_ring
from .trivial_extension import make_trivial_extension
from .z_layer import Z, ZTrivialExtension


# AST --------------------------------------------------------------------------

@dataclass(frozen=True)
class IntegersExpr:
    def __str__(self):
        return "Z"


@dataclass(frozen=True)
class ResidueExpr:
    n: int

    def __str__(self):
        return f"Z/{self.n}"


@dataclass(frozen=True)
class ProductExpr:
    left: object
    right: object

    def __str__(self):
        right = f"({self.right})" if isinstance(self.right, ProductExpr) else str(self.right)
        return f"{self.left} x {right}"


@dataclass(frozen=True)
class ModuleExpr:
    factors: tuple[int, ...]

    def __str__(self):
        return " x ".join(f"Z/{d}" for d in self.factors)


@dataclass(frozen=True)
class ExtensionExpr:
    base: object
    module: ModuleExpr

    def __str__(self):
        return f"TE({self.base}, {self.module})"


# tokenizer and parser -------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(TE\()|(Z/)|(Z)|(-?\d+)|([x(),]))")


def _tokenize(text: str):
    pos, out = 0, []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", text, start)
        kind = ("TE(", "Z/", "Z", "INT", "PUNCT")[m.lastindex - 1]
        value = m.group(m.lastindex)
        out.append((kind, value, m.start(m.lastindex)))
        pos = m.end()
    out.append(("EOF", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok[2])

    def expect(self, value):
        tok = self.peek()
        if tok[1] != value:
            self.error(f"expected {value!r}, found {tok[1] or 'end of input'!r}")
        self.i += 1
        return tok

    def integer(self, minimum):
        tok = self.peek()
        if tok[0] != "INT":
            self.error("expected an integer")
        n = int(tok[1])
        if n < minimum:
            self.error(f"modulus must be >= {minimum}")
        self.i += 1
        return n

    def done(self):
        if self.peek()[0] != "EOF":
            self.error(f"unexpected {self.peek()[1]!r}")

    # ring := atom ("x" atom)*
    def ring(self):
        node = self.ring_atom()
        while self.peek()[1] == "x":
            self.i += 1
            node = ProductExpr(node, self.ring_atom())
        return node

    def ring_atom(self):
        kind, value, _ = self.peek()
        if kind == "Z":
            self.i += 1
            return IntegersExpr()
        if kind == "Z/":
            self.i += 1
            return ResidueExpr(self.integer(1))
        if kind == "TE(":
            self.i += 1
            base = self.ring()
            self.expect(",")
            module = self.module()
            self.expect(")")
            return ExtensionExpr(base, module)
        if value == "(":
            self.i += 1
            node = self.ring()
            self.expect(")")
            return node
        self.error("expected a ring")

    def module(self):
        factors = [self.module_factor()]
        while self.peek()[1] == "x":
            self.i += 1
            factors.append(self.module_factor())
        return ModuleExpr(tuple(factors))

    def module_factor(self):
        if self.peek()[0] != "Z/":
            self.error("expected a module factor Z/d")
        self.i += 1
        return self.integer(1)

    def element(self):
        kind, value, _ = self.peek()
        if kind == "INT":
            self.i += 1
            return int(value)
        if value == "(":
            self.i += 1
            items = [self.element()]
            self.expect(",")
            items.append(self.element())
            while self.peek()[1] == ",":
                self.i += 1
                items.append(self.element())
            self.expect(")")
            return tuple(items)
        self.error("expected an element")

    def element_list(self):
        out = []
        if self.peek()[0] == "EOF":
            return out
        out.append(self.element())
        while self.peek()[1] == ",":
            self.i += 1
            out.append(self.element())
        return out


def parse_ring_expr(text: str):
    p = _Parser(text)
    node = p.ring()
    p.done()
    return node


def parse_module_expr(text: str) -> ModuleExpr:
    p = _Parser(text)
    node = p.module()
    p.done()
    return node


def parse_elements(text: str) -> list:
    """Comma separated element literals; the empty string gives []."""
    p = _Parser(text)
    out = p.element_list()
    p.done()
    return out


def canonical(text: str) -> str:
    return str(parse_ring_expr(text))


# elaboration ---------------------------------------------------------------------

def elaborate(node, limit: int | None = None):
    """Build the ring described by an AST node."""
    if isinstance(node, IntegersExpr):
        return Z
    if isinstance(node, ResidueExpr):
        return make_residue_ring(node.n, limit)
    if isinstance(node, ProductExpr):
        return make_product_ring(elaborate(node.left, limit), elaborate(node.right, limit), limit)
    if isinstance(node, ExtensionExpr):
        base = elaborate(node.base, limit)
        if isinstance(base, Integers):
            return ZTrivialExtension(make_module(Z, list(node.module.factors)))
        if not hasattr(base, "n"):
            raise Unsupported(f"trivial extensions over {base} are not supported; use Z or Z/n as base")
        M = make_module(base, list(node.module.factors))
        return make_trivial_extension(base, M, limit)
    raise TypeError(f"not a ring expression: {node!r}")


def ring_from_text(text: str, limit: int | None = None):
    return elaborate(parse_ring_expr(text), limit)


def normalize_element(ring, value):
    """Reduce a parsed literal into ``ring``; integers stay unreduced over Z."""
    if isinstance(ring, Integers):
        if isinstance(value, tuple):
            raise InvalidElement(f"{value!r} is not an integer")
        return int(value)
    try:
        return ring.normalize(value)
    except (InvalidElement, InvalidModule):
        raise
    except (TypeError, IndexError, ValueError) as exc:
        raise InvalidElement(f"{value!r} does not match the shape of {ring}") from exc


def elements_from_text(ring, text: str) -> list:
    return [normalize_element(ring, v) for v in parse_elements(text)]
