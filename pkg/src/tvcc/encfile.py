"""Plain-text encoder files.

Format (``#`` starts a comment, blank lines are ignored)::

    p k n
    <k lines of n binary polynomials for constituent 1>
    ...
    <k lines of n binary polynomials for constituent p>
    den <binary polynomial>          # optional, rational encoders only

Polynomials are little-endian by degree, so ``11 101`` is [1+D, 1+D^2].
"""

from __future__ import annotations

from pathlib import Path

from .encoder import PeriodicEncoder, RationalPeriodicEncoder, TimeInvariantEncoder
from .gf2poly import format_poly, parse_poly
from .polymatrix import PolyMatrix

__all__ = ["EncoderFileError", "parse_encoder", "format_encoder", "load_encoder", "save_encoder"]


class EncoderFileError(ValueError):
    def __init__(self, msg: str, line: int | None = None, col: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {col}" if col is not None else "") + ": "
        super().__init__(where + msg)
        self.line = line
        self.col = col


def _tokens(raw: str):
    """(token, column) pairs of one line, comments stripped; columns are 1-based."""
    body = raw.split("#", 1)[0]
    out, i = [], 0
    while i < len(body):
        if body[i].isspace():
            i += 1
            continue
        j = i
        while j < len(body) and not body[j].isspace():
            j += 1
        out.append((body[i:j], i + 1))
        i = j
    return out


def parse_encoder(text: str) -> PeriodicEncoder | RationalPeriodicEncoder:
    lines = [(no, toks) for no, raw in enumerate(text.splitlines(), 1) if (toks := _tokens(raw))]
    if not lines:
        raise EncoderFileError("empty encoder file")

    no, head = lines[0]
    if len(head) != 3:
        raise EncoderFileError(f"header must be 'p k n', got {len(head)} fields", no)
    dims = []
    for tok, col in head:
        if not tok.isdigit() or int(tok) < 1:
            raise EncoderFileError(f"expected a positive integer, got {tok!r}", no, col)
        dims.append(int(tok))
    p, k, n = dims
    if k >= n:
        raise EncoderFileError(f"rate k/n needs k < n, got k={k}, n={n}", no)

    body = lines[1:]
    need = p * k
    if len(body) < need:
        raise EncoderFileError(f"expected {need} matrix rows, found {len(body)}")

    def poly(tok, line, col):
        try:
            return parse_poly(tok)
        except ValueError as exc:
            raise EncoderFileError(str(exc), line, col) from None

    matrices = []
    for i in range(p):
        rows = []
        for r in range(k):
            no, toks = body[i * k + r]
            if toks[0][0] == "den":
                raise EncoderFileError("'den' line before all constituent rows", no)
            if len(toks) != n:
                raise EncoderFileError(
                    f"constituent {i + 1} row {r + 1} has {len(toks)} entries, expected n={n}", no
                )
            rows.append([poly(tok, no, col) for tok, col in toks])
        matrices.append(PolyMatrix.from_rows(rows))
    enc = PeriodicEncoder(tuple(TimeInvariantEncoder(g) for g in matrices))

    rest = body[need:]
    if not rest:
        return enc
    no, toks = rest[0]
    if toks[0][0] != "den" or len(toks) != 2:
        raise EncoderFileError("unexpected content after the constituent rows", no, toks[0][1])
    if len(rest) > 1:
        raise EncoderFileError("unexpected content after the den line", rest[1][0])
    den = poly(*toks[1], no)
    if den.coeff(0) != 1:
        raise EncoderFileError(
            f"denominator {toks[1][0]} has no constant term (not realizable)", no, toks[1][1]
        )
    return RationalPeriodicEncoder(enc, den)


def format_encoder(e: PeriodicEncoder | RationalPeriodicEncoder) -> str:
    base = e.base if isinstance(e, RationalPeriodicEncoder) else e
    lines = [f"{base.p} {base.k} {base.n}"]
    for c in base.constituents:
        for i in range(c.k):
            lines.append(" ".join(format_poly(x) for x in c.g.row(i)))
    if isinstance(e, RationalPeriodicEncoder):
        lines.append(f"den {format_poly(e.den)}")
    return "\n".join(lines) + "\n"


def load_encoder(path) -> PeriodicEncoder | RationalPeriodicEncoder:
    return parse_encoder(Path(path).read_text())


def save_encoder(e, path) -> None:
    Path(path).write_text(format_encoder(e))
