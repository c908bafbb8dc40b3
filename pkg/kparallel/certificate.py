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

"""Self-contained JSON certificates for spread families and transversal designs.

A certificate lists every subspace as the rows of its RREF basis, field
elements as integers in [0, q). The digest is the SHA-256 of the body with
every list of subspaces sorted, so reordering spreads or members does not
change it. check_certificate re-verifies a file with the oracles alone.
"""

from kparallel import constants
from kparallel import gf
from kparallel import linalg
from kparallel import oracle

import hashlib
import json
import logging
from collections import namedtuple
from pathlib import Path

import numpy as np

logger = logging.getLogger(constants.LOGGER_NAME)

SPREAD_FAMILY = "spread-family"
STD = "std"

DesignView = namedtuple("DesignView", ["field", "n", "k", "t", "groups", "blocks", "classes"])


class CertificateError(Exception):
    """Base class for exceptions."""
    pass


class MalformedCertificateError(CertificateError):
    """The file is not a readable certificate."""
    pass


def _canonical(body: dict) -> dict:
    canonical = dict(body)
    for key in ("spreads", "classes"):
        if key in canonical:
            canonical[key] = sorted(sorted(group) for group in canonical[key])
    if "groups" in canonical:
        canonical["groups"] = sorted(canonical["groups"])
    return canonical


def body_digest(body: dict) -> str:
    text = json.dumps(_canonical(body), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode(constants.FILE_ENCODING)).hexdigest()


class Certificate:

    def __init__(self, kind: str, header: dict, body: dict, digest: str = None):
        self.kind = kind
        self.header = header
        self.body = body
        self.digest = digest if digest is not None else body_digest(body)

    def to_dict(self) -> dict:
        return {
            "format": constants.CERTIFICATE_FORMAT,
            "version": constants.CERTIFICATE_VERSION,
            "kind": self.kind,
            "header": self.header,
            "body": self.body,
            "digest": self.digest,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=1)

    def write(self, path: Path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding=constants.FILE_ENCODING) as f:
            f.write(self.dumps())
        logger.info("Wrote %s certificate to %s", self.kind, path)
        return path


def _header(field: gf.FieldSpec, n: int, k: int, construction: str, metadata: dict) -> dict:
    pg_n, pg_k = linalg.to_projective(n, k)
    return {
        "field": field.describe(),
        "q": field.order,
        "n": n,
        "k": k,
        "construction": construction,
        "metadata": metadata,
        "pg": {"n": pg_n, "k": pg_k},
    }


def _subspaces(members) -> list:
    return [y.to_list() for y in sorted(members)]


def family_certificate(family) -> Certificate:
    """Certificate of a SpreadFamily; spreads keep their construction order."""
    header = _header(family.field, family.n, family.k, family.construction, dict(family.metadata))
    return Certificate(SPREAD_FAMILY, header, {"spreads": [_subspaces(spread) for spread in family]})


def design_certificate(design) -> Certificate:
    header = _header(design.field, design.n, design.k, "std", {"t": design.t, "m": design.m})
    body = {
        "t": design.t,
        "groups": [list(group.point) for group in design.groups],
        "classes": [_subspaces(members) for members in design.classes],
    }
    return Certificate(STD, header, body)


def emit_certificate(subject, path: Path = None) -> Certificate:
    """Certificate of a SpreadFamily or a SubspaceTransversalDesign, written to `path` if given."""
    certificate = design_certificate(subject) if hasattr(subject, "classes") else family_certificate(subject)
    if path is not None:
        certificate.write(path)
    return certificate


def _require(condition: bool, message: str):
    if not condition:
        raise MalformedCertificateError(message)


def _int(value, name: str) -> int:
    _require(isinstance(value, int) and not isinstance(value, bool), "{} must be an integer".format(name))
    return value


def load_certificate(path: Path) -> Certificate:
    try:
        with open(path, "r", encoding=constants.FILE_ENCODING) as f:
            data = json.load(f)
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as err:
        raise MalformedCertificateError("cannot read {}: {}".format(path, err)) from err
    _require(isinstance(data, dict), "certificate must be a JSON object")
    _require(data.get("format") == constants.CERTIFICATE_FORMAT, "unknown format {!r}".format(data.get("format")))
    _require(data.get("version") == constants.CERTIFICATE_VERSION, "unsupported version {!r}".format(data.get("version")))
    _require(data.get("kind") in (SPREAD_FAMILY, STD), "unknown kind {!r}".format(data.get("kind")))
    for key in ("header", "body"):
        _require(isinstance(data.get(key), dict), "missing {}".format(key))
    _require(isinstance(data.get("digest"), str), "missing digest")
    return Certificate(data["kind"], data["header"], data["body"], data["digest"])


def _field(header: dict) -> gf.FieldSpec:
    description = header.get("field")
    _require(isinstance(description, dict), "missing field description")
    modulus = description.get("modulus")
    _require(isinstance(modulus, list), "field modulus must be a list")
    try:
        field = gf.field_new(_int(description.get("p"), "p"), _int(description.get("e"), "e"), [_int(c, "modulus") for c in modulus])
    except gf.FieldError as err:
        raise MalformedCertificateError("bad field: {}".format(err)) from err
    _require(_int(header.get("q"), "q") == field.order, "q does not match the field")
    return field


def _matrix_list(value, name: str) -> list:
    _require(isinstance(value, list) and all(isinstance(m, list) for m in value), "{} must be a list of matrices".format(name))
    return value


def _parse_subspaces(field: gf.FieldSpec, n: int, k: int, matrices: list, where: str, report_bad: list) -> list:
    members = []
    for j, rows in enumerate(matrices):
        _require(isinstance(rows, list), "{} member {}: must be a list of rows".format(where, j))
        _require(all(isinstance(row, list) and len(row) == n for row in rows), "{} member {}: rows must have length {}".format(where, j, n))
        _require(all(isinstance(c, int) and not isinstance(c, bool) and 0 <= c < field.order for row in rows for c in row),
                 "{} member {}: entries must lie in [0, {})".format(where, j, field.order))
        data = np.array(rows, dtype=np.int64).reshape(len(rows), n)
        reduced, rank = linalg.rref(field.gf(data))
        if len(rows) != k or rank != k or reduced.view(np.ndarray).tolist() != rows:
            report_bad.append({"where": "{} member {}".format(where, j), "matrix": rows})
        members.append(linalg.subspace_from_generators(data, field, n))
    return members


def _group_points(value, field: gf.FieldSpec, k: int) -> list:
    _require(isinstance(value, list), "groups must be a list")
    for g in value:
        _require(isinstance(g, list) and len(g) == k, "groups must be points of F_q^{}".format(k))
        _require(all(isinstance(c, int) and not isinstance(c, bool) and 0 <= c < field.order for c in g),
                 "group entries must lie in [0, {})".format(field.order))
    return [linalg.GroupLabel(tuple(g)) for g in value]


def check_certificate(path: Path) -> oracle.VerificationReport:
    """Re-verify a certificate file; raises MalformedCertificateError when it cannot be read.

    The body is parsed and validated before its digest is taken.
    """
    certificate = load_certificate(path)
    header = certificate.header
    field = _field(header)
    n = _int(header.get("n"), "n")
    k = _int(header.get("k"), "k")
    _require(1 <= k <= n, "need 1 <= k <= n")
    _require(field.order ** n <= constants.MAX_ENUMERATION, "F_{}^{} has more than {} vectors".format(field.order, n, constants.MAX_ENUMERATION))

    bad = []
    body = certificate.body
    if certificate.kind == SPREAD_FAMILY:
        spreads = [_parse_subspaces(field, n, k, m, "spread {}".format(i), bad)
                   for i, m in enumerate(_matrix_list(body.get("spreads"), "spreads"))]
    else:
        t = _int(body.get("t"), "t")
        _require(1 <= t <= k, "need 1 <= t <= k, got t={}".format(t))
        groups = _group_points(body.get("groups"), field, k)
        classes = [_parse_subspaces(field, n, k, m, "class {}".format(i), bad)
                   for i, m in enumerate(_matrix_list(body.get("classes"), "classes"))]

    report = oracle.VerificationReport("certificate {}".format(Path(path).name))
    report.run("digest", lambda: (body_digest(body) == certificate.digest, {"stored": certificate.digest}))
    report.add("canonical matrices", not bad, bad[:1])
    if certificate.kind == SPREAD_FAMILY:
        for i, members in enumerate(spreads):
            report.extend(oracle.is_spread(members, n, field.order, k), prefix="spread {}".format(i))
        report.extend(oracle.pairwise_disjoint(spreads))
    else:
        design = DesignView(field, n, k, t, groups, [y for members in classes for y in members], classes)
        report.extend(oracle.verify_std(design))
    logger.info("Checked %s: %s", path, "PASS" if report.passed else "FAIL")
    return report
