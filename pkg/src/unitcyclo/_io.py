"""Decimal-string conversion for integers of any size.

Python 3.10.7+ refuses int<->str conversions above 4300 digits unless the
limit is lifted; indices and moduli here routinely exceed that.
"""

from __future__ import annotations

import hashlib
import json
import os
import sys
import tempfile
from fractions import Fraction
from pathlib import Path


def _lift_digit_limit() -> None:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)


def parse_int(text: str | int) -> int:
    if isinstance(text, int):
        return text
    _lift_digit_limit()
    text = text.strip()
    if not text.lstrip("+-").isdigit():
        raise ValueError(f"not a decimal integer: {text[:40]!r}")
    return int(text)


def int_str(n: int) -> str:
    _lift_digit_limit()
    return str(n)


def fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(text: str | float | Fraction) -> Fraction:
    if isinstance(text, Fraction):
        return text
    # str() first so 0.05 becomes 1/20, not the nearest binary float
    return Fraction(str(text))


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=path.suffix)
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
