"""Text descriptors of test functions.

    poly n=2 {(2,0):1.0, (1,1):-0.5i}
    kernel n=2 a=(0.5,0) s=3.5 scale=1
"""
import re

from ..core.errors import DescriptorError, ParameterError
from .kernel_power import KernelPower
from .polynomial import Polynomial

_NUMBER = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?(?:[+-](?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?[ij])?[ij]?")
_WORD = re.compile(r"[A-Za-z_]+")
_INTEGER = re.compile(r"\d+")


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, message, position=None):
        return DescriptorError(message, self.text, self.pos if position is None else position)

    def skip_space(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self):
        self.skip_space()
        return self.pos >= len(self.text)

    def peek(self):
        self.skip_space()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char):
        if self.peek() != char:
            found = self.peek() or "end of input"
            raise self.error(f"Expected {char!r}, found {found!r}")
        self.pos += 1

    def match(self, pattern, what):
        self.skip_space()
        found = pattern.match(self.text, self.pos)
        if not found:
            raise self.error(f"Expected {what}")
        self.pos = found.end()
        return found.group(0)

    def number(self) -> complex:
        start = self.pos
        token = self.match(_NUMBER, "a number")
        try:
            return complex(token.replace("i", "j"))
        except ValueError:
            raise self.error(f"Invalid number {token!r}", start)

    def integer(self) -> int:
        return int(self.match(_INTEGER, "an integer"))

    def keyword(self, name):
        start = self.pos
        word = self.match(_WORD, f"keyword {name!r}")
        if word != name:
            raise self.error(f"Expected keyword {name!r}, found {word!r}", start)
        self.expect("=")

    def point(self):
        self.expect("(")
        coords = [self.number()]
        while self.peek() == ",":
            self.pos += 1
            if self.peek() == ")":
                break
            coords.append(self.number())
        self.expect(")")
        return coords

    def index(self):
        self.expect("(")
        entries = [self.integer()]
        while self.peek() == ",":
            self.pos += 1
            if self.peek() == ")":
                break
            entries.append(self.integer())
        self.expect(")")
        return tuple(entries)


def _parse_poly(scanner: _Scanner):
    scanner.keyword("n")
    n = scanner.integer()
    scanner.expect("{")
    coefficients = {}
    if scanner.peek() != "}":
        while True:
            start = scanner.pos
            index = scanner.index()
            if len(index) != n:
                raise scanner.error(f"Multi-index {index} does not have n={n} entries", start)
            scanner.expect(":")
            coefficients[index] = coefficients.get(index, 0) + scanner.number()
            if scanner.peek() != ",":
                break
            scanner.pos += 1
    scanner.expect("}")
    return Polynomial(coefficients, n)


def _parse_kernel(scanner: _Scanner):
    scanner.keyword("n")
    n = scanner.integer()
    start = scanner.pos
    scanner.keyword("a")
    center = scanner.point()
    if len(center) != n:
        raise scanner.error(f"Center has {len(center)} coordinates, expected {n}", start)
    scanner.keyword("s")
    exponent = scanner.number()
    scale = 1.0
    if not scanner.at_end():
        scanner.keyword("scale")
        scale = scanner.number()
    if exponent.imag != 0:
        raise scanner.error("Kernel exponent must be real")
    try:
        return KernelPower(center, exponent.real, scale)
    except (ParameterError, ValueError) as e:
        raise scanner.error(str(e), start)


_PARSERS = {"poly": _parse_poly, "kernel": _parse_kernel}


def parse_function(text: str):
    scanner = _Scanner(text)
    start = scanner.pos
    kind = scanner.match(_WORD, "a function kind")
    if kind not in _PARSERS:
        raise scanner.error(f"Unknown function kind {kind!r}; expected one of {sorted(_PARSERS)}", start)
    function = _PARSERS[kind](scanner)
    if not scanner.at_end():
        raise scanner.error("Unexpected trailing text")
    return function
