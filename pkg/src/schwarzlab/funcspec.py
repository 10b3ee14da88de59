"""Textual specs for the fixed function families.

Grammar (whitespace-insensitive)::

    spec   := family | family "(" pair ("," pair)* ")"
    pair   := key "=" value
    value  := float | "pi/" int | "-pi/" int | signed int
            | "[" complex ("," complex)* "]"

Families and their keys:

    identity                the map z -> z
    f0(alpha=...)           member generated by omega = z
    fz0p(alpha=..., z0=...) extremal member peaking at z0
    robertson(alpha=..., p=..., b=...)
                            member generated by the degree-2 Blaschke
                            product p*z*(z-b)/(1-b*z)
    series(coeffs=[...])    series-backed function from raw coefficients

Angles are radians, either decimal or exact fractions "pi/k"; degrees
are not accepted.  Parse errors carry the byte offset of the offending
character; domain errors carry the violated bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .disk_functions import Blaschke2, DiskFunction, SeriesFunction, identity_map
from .errors import SchwarzlabError
from .power_series import DEFAULT_ORDER, TaylorSeries
from .robertson import ConditionViolation, extremal_f0, extremal_fz0p, robertson_from_omega


class ParseError(SchwarzlabError):
    """Malformed spec text; offset is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"{message} (at offset {offset})")


class DomainError(SchwarzlabError):
    """A parameter violates its admissible range."""


_FAMILY_KEYS = {
    "identity": (),
    "f0": ("alpha",),
    "fz0p": ("alpha", "z0"),
    "robertson": ("alpha", "p", "b"),
    "series": ("coeffs",),
}


@dataclass(frozen=True)
class FunctionSpec:
    family: str
    params: dict = field(default_factory=dict)

    def canonical(self) -> str:
        """Canonical text form; parsing it reproduces this spec."""
        keys = _FAMILY_KEYS[self.family]
        if not keys:
            return self.family
        parts = []
        for k in keys:
            v = self.params[k]
            if k == "coeffs":
                parts.append(f"{k}=[{','.join(_format_complex(c) for c in v)}]")
            elif k == "p":
                parts.append(f"{k}={v:d}")
            else:
                parts.append(f"{k}={_format_number(v)}")
        return f"{self.family}({','.join(parts)})"

    @property
    def alpha(self) -> float | None:
        return self.params.get("alpha")


def _format_number(x: float) -> str:
    return f"{float(x):.17g}"


def _format_complex(z: complex) -> str:
    z = complex(z)
    return f"{z.real:.17g}{z.imag:+.17g}j"


def parse_angle(text: str) -> float:
    """Radians from a decimal literal or an exact 'pi/k' fraction."""
    t = "".join(text.split())
    sign = 1.0
    if t.startswith(("-", "+")):
        if t[0] == "-":
            sign = -1.0
        t = t[1:]
    if t.startswith("pi/"):
        k = int(t[3:])
        if k == 0:
            raise ValueError("zero denominator in pi fraction")
        return sign * math.pi / k
    if t == "pi":
        return sign * math.pi
    return sign * float(t)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        self.skip_ws()
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def ident(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected an identifier", start)
        return self.text[start:self.pos]

    def until(self, stops: str) -> tuple[str, int]:
        """Raw token up to (not including) any stop character."""
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] not in stops:
            self.pos += 1
        return self.text[start:self.pos], start


def parse_spec(text: str) -> FunctionSpec:
    """Parse and domain-validate a function spec."""
    sc = _Scanner(text)
    family = sc.ident()
    if family not in _FAMILY_KEYS:
        raise ParseError(f"unknown family {family!r}", 0)
    params: dict = {}
    if sc.peek() == "(":
        sc.expect("(")
        if sc.peek() != ")":
            while True:
                key_start = sc.pos
                sc.skip_ws()
                key_start = sc.pos
                key = sc.ident()
                if key not in _FAMILY_KEYS[family]:
                    raise ParseError(f"unknown key {key!r} for family {family!r}", key_start)
                if key in params:
                    raise ParseError(f"duplicate key {key!r}", key_start)
                sc.expect("=")
                params[key] = _parse_value(sc, key)
                if sc.peek() == ",":
                    sc.expect(",")
                    continue
                break
        sc.expect(")")
    sc.skip_ws()
    if sc.pos != len(sc.text):
        raise ParseError("trailing characters after spec", sc.pos)
    missing = [k for k in _FAMILY_KEYS[family] if k not in params]
    if missing:
        raise ParseError(f"missing keys for {family!r}: {', '.join(missing)}", len(text))
    _validate_domains(family, params)
    return FunctionSpec(family, params)


def _parse_value(sc: _Scanner, key: str):
    if sc.peek() == "[":
        sc.expect("[")
        coeffs = []
        while True:
            tok, off = sc.until(",]")
            t = "".join(tok.split())
            if not t:
                raise ParseError("empty list element", off)
            try:
                coeffs.append(complex(t))
            except ValueError:
                raise ParseError(f"bad complex literal {t!r}", off) from None
            if sc.peek() == ",":
                sc.expect(",")
                continue
            break
        sc.expect("]")
        return coeffs
    tok, off = sc.until(",)")
    t = "".join(tok.split())
    if not t:
        raise ParseError("empty value", off)
    if key == "p":
        if t not in ("1", "+1", "-1"):
            raise DomainError(f"p must be +1 or -1, got {t!r}")
        return int(t)
    try:
        return parse_angle(t) if key == "alpha" else float(t)
    except ValueError:
        raise ParseError(f"bad numeric literal {t!r}", off) from None


def _validate_domains(family: str, params: dict) -> None:
    alpha = params.get("alpha")
    if alpha is not None and not -math.pi / 2 < alpha < math.pi / 2:
        raise DomainError(f"alpha must lie in (-pi/2, pi/2), got {alpha!r}")
    z0 = params.get("z0")
    if z0 is not None and not -1.0 < z0 < 1.0:
        raise DomainError(f"z0 must lie in (-1, 1), got {z0!r}")
    b = params.get("b")
    if b is not None and not -1.0 < b < 1.0:
        raise DomainError(f"b must lie in (-1, 1), got {b!r}")
    if family == "series":
        coeffs = params.get("coeffs", [])
        if len(coeffs) == 0:
            raise DomainError("series needs at least one coefficient")


def build_function(spec: FunctionSpec, order: int = DEFAULT_ORDER) -> DiskFunction:
    """Materialize the function a spec names.

    Constraints that only bind at construction time (such as the
    extremal-existence condition on (alpha, z0)) surface here as
    DomainError.
    """
    p = spec.params
    if spec.family == "identity":
        return identity_map()
    if spec.family == "f0":
        return extremal_f0(p["alpha"], order)
    if spec.family == "fz0p":
        try:
            return extremal_fz0p(p["alpha"], p["z0"], order)
        except ConditionViolation as exc:
            raise DomainError(str(exc)) from exc
    if spec.family == "robertson":
        return robertson_from_omega(p["alpha"], Blaschke2(p["p"], p["b"]), order)
    if spec.family == "series":
        return SeriesFunction(TaylorSeries(p["coeffs"]))
    raise DomainError(f"unknown family {spec.family!r}")
