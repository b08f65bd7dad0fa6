"""The run-length abbreviated notation for coefficient vectors.

Coefficients are listed ascending; a digit optionally followed by ``^k`` or
``^{k}`` stands for k consecutive copies.  ``101^3`` is the vector
[1, 0, 1, 1, 1], i.e. 1 + x^2 + x^3 + x^4 over F_2.  As in the TeX the
notation comes from, an unbraced exponent binds one digit (``1^30`` is a
run of three followed by a zero); longer run lengths need braces.
Emission is canonical: runs of length one print the bare digit, longer
runs use braced exponents.
"""

from __future__ import annotations

import re

_TOKEN = re.compile(r"(\d)(?:\^(?:\{(\d+)\}|(\d)))?")


class ParseError(ValueError):
    """Malformed abbreviated-notation text."""


def parse_abbrev(text: str, p: int) -> list[int]:
    """Expand abbreviated notation into an ascending coefficient list."""
    s = "".join(text.split())
    if not s:
        raise ParseError("empty polynomial text")
    out: list[int] = []
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            raise ParseError(f"malformed token at position {pos} in {text!r}")
        digit = int(m.group(1))
        if digit >= p:
            raise ParseError(f"digit {digit} is not a coefficient mod {p}")
        run_text = m.group(2) or m.group(3)
        run = int(run_text) if run_text is not None else 1
        if run < 1:
            raise ParseError(f"run length must be positive, got {run} in {text!r}")
        out.extend([digit] * run)
        pos = m.end()
    return out


def emit_abbrev(coeffs) -> str:
    """Canonical abbreviated form: bare digit for runs of 1, ``d^{k}`` otherwise."""
    vals = [int(c) for c in coeffs]
    if not vals:
        return ""
    parts: list[str] = []
    run_val = vals[0]
    run_len = 1
    for v in vals[1:]:
        if v == run_val:
            run_len += 1
            continue
        parts.append(str(run_val) if run_len == 1 else f"{run_val}^{{{run_len}}}")
        run_val, run_len = v, 1
    parts.append(str(run_val) if run_len == 1 else f"{run_val}^{{{run_len}}}")
    return "".join(parts)
