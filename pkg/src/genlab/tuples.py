"""Tuples of real (or complex) numbers given by exact expressions.

A tuple is the basic input object for the diophantine probes: entries
are expression strings (see expr), carried with a working precision and
an optional label.  Entries are re-evaluated to intervals at whatever
precision a computation needs, so nothing is ever rounded at parse time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import InvalidConfig
from .expr import Node, eval_interval, exact_rational, parse_expression
from .numeric import (
    ComplexIV,
    is_exact_zero,
    make_ctx,
    run_escalating,
    straddles_zero,
)

MIN_PRECISION_BITS = 64


@dataclass(frozen=True)
class RealTuple:
    """An ordered tuple of numbers defined by expressions.

    imag_expressions, when present, makes the tuple complex: entry j is
    expressions[j] + i*imag_expressions[j].
    """

    expressions: tuple[str, ...]
    precision_bits: int = 128
    label: str = ""
    imag_expressions: Optional[tuple[str, ...]] = None
    _nodes: tuple[Node, ...] = field(init=False, repr=False, compare=False)
    _imag_nodes: Optional[tuple[Node, ...]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.expressions:
            raise InvalidConfig("a tuple needs at least one entry")
        if self.precision_bits < MIN_PRECISION_BITS:
            raise InvalidConfig(
                f"precision_bits must be >= {MIN_PRECISION_BITS}, got {self.precision_bits}"
            )
        object.__setattr__(
            self, "expressions", tuple(str(s) for s in self.expressions)
        )
        object.__setattr__(
            self, "_nodes", tuple(parse_expression(s) for s in self.expressions)
        )
        if self.imag_expressions is not None:
            imag = tuple(str(s) for s in self.imag_expressions)
            if len(imag) != len(self.expressions):
                raise InvalidConfig("imaginary part list must match the tuple length")
            object.__setattr__(self, "imag_expressions", imag)
            object.__setattr__(
                self, "_imag_nodes", tuple(parse_expression(s) for s in imag)
            )
        else:
            object.__setattr__(self, "_imag_nodes", None)

    def __len__(self) -> int:
        return len(self.expressions)

    @property
    def is_complex(self) -> bool:
        return self._imag_nodes is not None

    def exact_values(self) -> Optional[tuple[Fraction, ...]]:
        """All entries as exact rationals, or None if any entry is irrational
        or has a not-identically-zero imaginary part."""
        if self._imag_nodes is not None:
            for node in self._imag_nodes:
                v = exact_rational(node)
                if v is None or v != 0:
                    return None
        values = []
        for node in self._nodes:
            v = exact_rational(node)
            if v is None:
                return None
            values.append(v)
        return tuple(values)

    def real_enclosures(self, bits: int):
        """Interval enclosures of the real parts at the given precision."""
        ctx = make_ctx(bits)
        return ctx, [eval_interval(ctx, node) for node in self._nodes]

    def complex_enclosures(self, bits: int):
        """ComplexIV enclosures at the given precision (imag 0 if real)."""
        ctx = make_ctx(bits)
        out = []
        for j, node in enumerate(self._nodes):
            re = eval_interval(ctx, node)
            if self._imag_nodes is None:
                im = re * 0
            else:
                im = eval_interval(ctx, self._imag_nodes[j])
            out.append(ComplexIV(re, im))
        return ctx, out

    def validate_nonzero(self) -> None:
        """Certify every entry is nonzero, escalating precision as needed."""
        exact = self.exact_values()
        if exact is not None:
            for j, v in enumerate(exact):
                if v == 0:
                    raise InvalidConfig(f"tuple entry {j} is zero")
            return

        def attempt(bits: int) -> None:
            from .numeric import NeedsBits

            ctx, encl = self.complex_enclosures(bits)
            for j, z in enumerate(encl):
                if z.is_exact_zero():
                    raise InvalidConfig(f"tuple entry {j} is zero")
                a2 = z.abs2()
                if is_exact_zero(a2):
                    raise InvalidConfig(f"tuple entry {j} is zero")
                if straddles_zero(a2):
                    raise NeedsBits

        run_escalating(attempt, self.precision_bits)


def load_expressions(path: str) -> list[str]:
    """Tuple file format: one expression per line; blank lines and lines
    starting with '#' are skipped."""
    entries = []
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            entries.append(line)
    if not entries:
        raise InvalidConfig(f"no expressions found in {path}")
    return entries
