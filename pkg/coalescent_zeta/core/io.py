#!/usr/bin/env python3

"""Output records and their text, JSON and CSV renderings; raw sample files."""

import csv
import io
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

import coalescent_zeta.core.logging as logging
import mpmath
import numpy as np
import simplejson
from coalescent_zeta.algebra.numeric import eval_numeric, mpf_to_decimal
from coalescent_zeta.algebra.polynomial import ZetaPolynomial, to_pi_form
from coalescent_zeta.algebra.rational import format_rational
from coalescent_zeta.core.config import cfg

__all__ = [
    "OutputRecord",
    "render",
    "write_samples_csv",
    "read_samples_csv",
]


logger = logging.get_logger(__name__)


_FORM_COLUMNS = {
    "zeta": ["quantity", "index", "zeta"],
    "pi": ["quantity", "index", "pi"],
    "numeric": ["quantity", "index", "numeric"],
    "all": ["quantity", "index", "zeta", "pi", "numeric"],
}


def _format_index(index):
    if isinstance(index, dict):
        return ",".join("{}={}".format(k, v) for k, v in index.items())
    return str(index)


@dataclass
class OutputRecord(object):
    """One computed value in every representation it supports.

    exact holds the JSON object of the exact value when there is one; numeric is
    always eval_numeric(exact) at the requested digits in that case.
    """

    quantity: str
    index: Any
    zeta: Optional[str] = None
    pi: Optional[str] = None
    numeric: Optional[str] = None
    exact: Optional[dict] = None
    extra: dict = field(default_factory=dict)

    @classmethod
    def from_value(cls, quantity, index, value, digits=None):
        """Builds a record from a polynomial, rational, float or symbolic value."""
        digits = cfg.NUMERIC.DIGITS if digits is None else digits
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            poly = ZetaPolynomial.constant(value)
            text = format_rational(Fraction(value))
            numeric = eval_numeric(poly, digits)
            return cls(quantity, index, text, text, numeric, poly.to_json_obj())
        if isinstance(value, ZetaPolynomial):
            return cls(
                quantity,
                index,
                value.to_string(),
                to_pi_form(value).to_string(),
                eval_numeric(value, digits),
                value.to_json_obj(),
            )
        if hasattr(value, "evaluate"):
            dps = digits + cfg.NUMERIC.GUARD_DIGITS
            numeric = mpf_to_decimal(value.evaluate(dps), digits)
            return cls(quantity, index, str(value), None, format(numeric, "f"))
        if isinstance(value, (float, np.floating, mpmath.mpf)):
            numeric = format(mpf_to_decimal(value, digits), "f")
            return cls(quantity, index, numeric=numeric)
        return cls(quantity, index, zeta=str(value))

    def exact_value(self):
        """The exact value parsed back from its JSON form (None if not exact)."""
        return None if self.exact is None else ZetaPolynomial.from_json(self.exact)

    def to_dict(self, form="all"):
        data = {c: getattr(self, c) for c in _FORM_COLUMNS[form]}
        data["index"] = self.index
        if self.exact is not None:
            data["exact"] = self.exact
        data.update(self.extra)
        return data

    def to_text(self, form="all"):
        cells = [getattr(self, c) for c in _FORM_COLUMNS[form][2:]]
        cells = [c for c in cells if c is not None]
        cells += ["{}={}".format(k, v) for k, v in self.extra.items()]
        head = "{}[{}]".format(self.quantity, _format_index(self.index))
        return "{}: {}".format(head, " | ".join(cells))


def _render_json(records, form):
    return simplejson.dumps(
        [r.to_dict(form) for r in records], use_decimal=True, ensure_ascii=False
    )


def _render_csv(records, form):
    columns = _FORM_COLUMNS[form]
    extra = sorted({k for r in records for k in r.extra})
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns + extra)
    for r in records:
        row = [getattr(r, c) for c in columns]
        row[1] = _format_index(r.index)
        writer.writerow(row + [r.extra.get(k, "") for k in extra])
    return buf.getvalue().rstrip("\n")


def _render_text(records, form):
    return "\n".join(r.to_text(form) for r in records)


# Supported output formats
_renderers = {"text": _render_text, "json": _render_json, "csv": _render_csv}


def render(records, form=None, fmt=None):
    """Renders records as text, JSON or CSV."""
    form = cfg.OUTPUT.FORM if form is None else form
    fmt = cfg.OUTPUT.FORMAT if fmt is None else fmt
    err_str = "Output format '{}' not supported"
    assert fmt in _renderers.keys(), err_str.format(fmt)
    err_str = "Output form '{}' not supported"
    assert form in _FORM_COLUMNS.keys(), err_str.format(form)
    return _renderers[fmt](list(records), form)


def write_samples_csv(path, values, statistic, seed, n):
    """Writes one value per line below a header naming the statistic, seed and n."""
    out_dir = os.path.dirname(path)
    if out_dir:
        os.makedirs(out_dir, exist_ok=True)
    header = "statistic={} seed={} n={}".format(statistic, seed, n)
    np.savetxt(path, np.asarray(values, dtype=np.float64), fmt="%.17g", header=header)
    logger.info("Wrote {} samples to {}".format(len(values), path))
    return path


def read_samples_csv(path):
    """Reads a file written by write_samples_csv as (values, header fields)."""
    with open(path, "r") as f:
        header = f.readline().lstrip("#").split()
    fields = dict(item.split("=", 1) for item in header)
    return np.loadtxt(path, comments="#", ndmin=1), fields
