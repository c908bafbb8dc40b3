# MIT License
#
# Copyright 2018-2019 IBM
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

from kparallel import constants
from kparallel import linalg

import logging
from pathlib import Path

from jinja2 import Environment, FileSystemLoader

logger = logging.getLogger(constants.LOGGER_NAME)

jinja_env = Environment(
    loader=FileSystemLoader(searchpath=str(Path(__file__).parent / "templates")),
    trim_blocks=True,
    lstrip_blocks=True,
)


def _jinja_filter_subspace(val: linalg.Subspace) -> str:
    if val.q <= 10:
        return "<" + ",".join("".join(str(c) for c in row) for row in val.rows) + ">"
    return "<" + ",".join(" ".join(str(c) for c in row) for row in val.rows) + ">"


def _jinja_filter_counterexample(val) -> str:
    if isinstance(val, linalg.Subspace):
        return _jinja_filter_subspace(val)
    if isinstance(val, dict):
        return ", ".join("{}={}".format(key, _jinja_filter_counterexample(value)) for key, value in val.items())
    if isinstance(val, (list, tuple)) and val and all(isinstance(v, linalg.Subspace) for v in val):
        return " ".join(_jinja_filter_subspace(v) for v in val)
    if isinstance(val, tuple) and all(isinstance(v, int) for v in val):
        return "(" + ",".join(str(v) for v in val) + ")"
    return str(val)


def _jinja_filter_seconds(val: float) -> str:
    return "{:.3f}s".format(val)


def _term(coefficient: int, degree: int) -> str:
    monomial = "" if degree == 0 else "x" if degree == 1 else "x^{}".format(degree)
    return (str(coefficient) if coefficient != 1 or degree == 0 else "") + monomial


def _jinja_filter_field(val) -> str:
    modulus = " + ".join(_term(c, i) for i, c in reversed(list(enumerate(val.modulus))) if c)
    return "GF({}) with modulus {} and alpha {}".format(val.order, modulus, val.alpha)


jinja_env.filters["subspace"] = _jinja_filter_subspace
jinja_env.filters["counterexample"] = _jinja_filter_counterexample
jinja_env.filters["seconds"] = _jinja_filter_seconds
jinja_env.filters["field"] = _jinja_filter_field


def render(template_name: str, **context) -> str:
    return jinja_env.get_template(template_name).render(**context)


def verification(report) -> str:
    return render("report.txt", report=report)


def family_summary(family, path: Path = None) -> str:
    pg_n, pg_k = linalg.to_projective(family.n, family.k)
    return render("family.txt", family=family, pg={"n": pg_n, "k": pg_k}, path=path)


def census(q: int, k: int, found, expected) -> str:
    return render("census.txt", q=q, k=k, census=found, expected=expected, total=linalg.gaussian_binomial(2 * k, k, q))


def enumeration(q: int, n: int, k: int, subspaces: list, count: int) -> str:
    return render("enumerate.txt", q=q, n=n, k=k, subspaces=subspaces, count=count, expected=linalg.gaussian_binomial(n, k, q))


def design_summary(design, path: Path = None) -> str:
    return render("std.txt", design=design, path=path)


def search_summary(q: int, n: int, k: int, result, constructed: int = None) -> str:
    return render("search.txt", q=q, n=n, k=k, result=result, constructed=constructed)


def info(q: int, n: int, k: int, family_size: int, types) -> str:
    pg_n, pg_k = linalg.to_projective(n, k)
    spreads = n % k == 0
    return render("info.txt", q=q, n=n, k=k, pg={"n": pg_n, "k": pg_k},
                  grassmannian=linalg.gaussian_binomial(n, k, q),
                  spreads=spreads,
                  spread_size=(q ** n - 1) // (q ** k - 1) if spreads else None,
                  family_size=family_size,
                  liftable=k <= n - k,
                  classes=q ** ((n - k) * (k - 1)),
                  types=types)
