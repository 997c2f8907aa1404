"""Text formats: the input grammar for polynomials and forms, JSON, CSV and SVG output."""

from __future__ import annotations

import csv
import io
import re
from fractions import Fraction

from .algebra import Poly
from .errors import ParseError
from .forms import QuadForm
from .jacobian import MumfordDiv

# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|(x)|(\^)|(\*)|(/)|(\+)|(-)|(\()|(\)))", re.IGNORECASE)


def _tokens(text: str):
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r} in {text!r}")
        kind = m.lastindex
        out.append((kind, m.group(kind)))
        pos = m.end()
    return out


class _Parser:
    """expr := term (('+'|'-') term)* ; term := ['-'|'+'] factor ('*' factor)* ;
    factor := atom ['^' int] ; atom := int ['/' int] | 'x' | '(' expr ')'"""

    def __init__(self, text: str):
        self.text = text
        self.toks = _tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def take(self, kind):
        if self.peek() != kind:
            raise ParseError(f"malformed expression {self.text!r}")
        tok = self.toks[self.i][1]
        self.i += 1
        return tok

    def parse(self) -> Poly:
        if not self.toks:
            raise ParseError("empty expression")
        p = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input in {self.text!r}")
        return p

    def expr(self) -> Poly:
        p = self.term()
        while self.peek() in (6, 7):
            sign = self.take(self.peek())
            t = self.term()
            p = p + t if sign == "+" else p - t
        return p

    def term(self) -> Poly:
        neg = False
        while self.peek() in (6, 7):
            neg ^= self.take(self.peek()) == "-"
        p = self.factor()
        while self.peek() == 4:
            self.take(4)
            p = p * self.factor()
        return -p if neg else p

    def factor(self) -> Poly:
        p = self.atom()
        if self.peek() == 3:
            self.take(3)
            p = p ** int(self.take(1))
        return p

    def atom(self) -> Poly:
        kind = self.peek()
        if kind == 1:
            num = int(self.take(1))
            if self.peek() == 5:
                self.take(5)
                den = int(self.take(1))
                if den == 0:
                    raise ParseError("zero denominator")
                return Poly(Fraction(num, den))
            return Poly(num)
        if kind == 2:
            self.take(2)
            return Poly.x()
        if kind == 8:
            self.take(8)
            p = self.expr()
            self.take(9)
            return p
        raise ParseError(f"malformed expression {self.text!r}")


def parse_poly(text: str) -> Poly:
    """Parse expressions such as ``x^3 - x + 9`` or ``-1/36 + x``."""
    return _Parser(text).parse()


def parse_number(text: str):
    p = parse_poly(text)
    if p.deg > 0:
        raise ParseError(f"{text!r} is not a number")
    c = p[0]
    return int(c) if c.denominator == 1 else c


def _split_triple(text: str) -> list[str]:
    sep = ";" if ";" in text else ","
    parts = text.split(sep)
    if len(parts) != 3:
        raise ParseError(f"expected three coefficients in {text!r}")
    return parts


def parse_form(text: str) -> QuadForm:
    return QuadForm(*(parse_number(p) for p in _split_triple(text)))


def parse_poly_form(text: str) -> QuadForm:
    return QuadForm(*(parse_poly(p) for p in text.split(";")) if text.count(";") == 2 else _bad(text))


def _bad(text):
    raise ParseError(f"expected a;b;c in {text!r}")


def parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(t) for t in text.split(":"))
    except ValueError as exc:
        raise ParseError(f"expected lo:hi, got {text!r}") from exc
    if lo > hi:
        raise ParseError(f"empty range {text!r}")
    return lo, hi


def parse_primes(text: str | None) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError as exc:
        raise ParseError(f"bad prime list {text!r}") from exc


# ---------------------------------------------------------------------------
# JSON


def num_to_json(x) -> str:
    return str(Fraction(x))


def num_from_json(s: str):
    x = Fraction(s)
    return int(x) if x.denominator == 1 else x


def poly_to_json(p: Poly) -> list[str]:
    return [num_to_json(c) for c in p.coeffs]


def poly_from_json(cs) -> Poly:
    return Poly(Fraction(c) for c in cs)


def form_to_json(q: QuadForm) -> list:
    if q.is_poly:
        return [poly_to_json(v) for v in q]
    return [num_to_json(v) for v in q]


def form_from_json(data) -> QuadForm:
    if any(isinstance(v, list) for v in data):
        return QuadForm(*(poly_from_json(v) for v in data))
    return QuadForm(*(num_from_json(v) for v in data))


def mumford_to_json(d: MumfordDiv) -> dict:
    return {"u": poly_to_json(d.u), "v": poly_to_json(d.v)}


def mumford_from_json(data) -> MumfordDiv:
    return MumfordDiv(poly_from_json(data["u"]), poly_from_json(data["v"]))


def certificate_to_json(cert) -> list[dict]:
    return [{"epsilon": w.epsilon, "p": w.p, "r": w.r} for w in cert.witnesses]


def chain_to_text(chain) -> str:
    return ";".join(f"{m.alpha},{m.beta},{m.gamma},{m.delta}" for m in chain)


def witness_text(cell) -> str:
    if cell.witness is None:
        return ""
    if isinstance(cell.witness, int):
        return f"genus-rep={cell.witness}"
    return chain_to_text(cell.witness)


def cell_to_json(cell, with_witness: bool = False) -> dict:
    out = {
        "n": cell.n,
        "f_of_n": num_to_json(cell.f_of_n),
        "classification": cell.classification.value,
        "method": cell.method.value,
    }
    if with_witness:
        out["witness"] = witness_text(cell)
    return out


# ---------------------------------------------------------------------------
# CSV and SVG


def cells_to_csv(cells) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "f_of_n", "classification", "method", "witness"])
    for c in cells:
        w.writerow([c.n, num_to_json(c.f_of_n), c.classification.value, c.method.value, witness_text(c)])
    return buf.getvalue()


CELL = 48
FILLS = {
    "Trivial": "url(#hatch)",
    "NonTrivial": "#f5d327",
    "DegenerateSquare": "url(#grid)",
    "RootOfF": "#222222",
    "Unknown": "#b0b0b0",
}

_DEFS = """<defs>
<pattern id="hatch" width="8" height="8" patternUnits="userSpaceOnUse" patternTransform="rotate(45)">
<rect width="8" height="8" fill="#d7301f"/><line x1="0" y1="0" x2="0" y2="8" stroke="#7f0000" stroke-width="3"/>
</pattern>
<pattern id="grid" width="8" height="8" patternUnits="userSpaceOnUse">
<rect width="8" height="8" fill="#4a90d9"/><path d="M 8 0 L 0 0 0 8" fill="none" stroke="#123c69" stroke-width="1.5"/>
</pattern>
</defs>"""


def sieve_svg(cells, lo: int, hi: int) -> str:
    """Five-column grid: cell n sits at row (n - lo) // 5, column (n - lo) % 5."""
    by_n = {c.n: c for c in cells}
    rows = -(-(hi - lo + 1) // 5)
    legend_h = 24 * len(FILLS) + 8
    width, height = 5 * CELL + 2, rows * CELL + legend_h + 2
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif">',
        _DEFS,
    ]
    for n in range(lo, hi + 1):
        i, j = divmod(n - lo, 5)
        x, y = 1 + j * CELL, 1 + i * CELL
        cell = by_n.get(n)
        fill = FILLS[cell.classification.value] if cell else "#ffffff"
        out.append(f'<rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" fill="{fill}" stroke="#000"/>')
        out.append(
            f'<text x="{x + CELL // 2}" y="{y + CELL // 2 + 5}" text-anchor="middle" font-size="14" '
            f'fill="#000" stroke="#fff" stroke-width="3" paint-order="stroke">{n}</text>'
        )
    y0 = rows * CELL + 8
    for k, (name, fill) in enumerate(FILLS.items()):
        y = y0 + 24 * k
        out.append(f'<rect x="1" y="{y}" width="18" height="18" fill="{fill}" stroke="#000"/>')
        out.append(f'<text x="26" y="{y + 14}" font-size="13">{name}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
