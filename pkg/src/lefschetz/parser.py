"""Text formats: polynomials, ideal files and Hilbert function lists.

Polynomial grammar (whitespace is ignored)::

    poly  := [sign] term { sign term }
    term  := coeff | coeff "*" monos | monos
    monos := var ["^" nat] { "*" var ["^" nat] }
    coeff := integer | integer "/" positive-integer

Ideal files::

    # comment
    ring 3 0
    vars x1 x2 x3
    gen x1^2
    gen x1*x2 - 3/2*x3^2
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .polynomial import Polynomial
from .ring import Ring

MAX_EXPONENT = 1 << 16


class ParseError(ValueError):
    def __init__(self, message: str, position: int | None = None, line: int | None = None):
        self.message = message
        self.position = position
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if position is not None:
            where.append(f"column {position + 1}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self._skip()

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            self._skip()
            return True
        return False

    def expect(self, ch: str):
        if not self.take(ch):
            found = self.peek() or "end of input"
            raise ParseError(f"expected {ch!r}, found {found!r}", self.pos)

    def digits(self) -> tuple[int, int]:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected a number", start)
        value = int(self.text[start:self.pos])
        self._skip()
        return value, start

    def name(self) -> tuple[str, int]:
        start = self.pos
        t = self.text
        if self.pos < len(t) and (t[self.pos].isalpha() or t[self.pos] == "_"):
            self.pos += 1
            while self.pos < len(t) and (t[self.pos].isalnum() or t[self.pos] == "_"):
                self.pos += 1
        if start == self.pos:
            found = self.peek() or "end of input"
            raise ParseError(f"expected a variable, found {found!r}", start)
        value = t[start:self.pos]
        self._skip()
        return value, start

    def at_end(self) -> bool:
        return self.pos >= len(self.text)


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    """Parse ``text`` into a polynomial of ``ring``."""
    sc = _Scanner(text)
    index = {name: k for k, name in enumerate(ring.var_names)}
    N = ring.num_vars
    terms: dict = {}
    if sc.at_end():
        raise ParseError("empty polynomial", 0)

    first = True
    while True:
        sign = 1
        if sc.take("-"):
            sign = -1
        elif sc.take("+"):
            pass
        elif not first:
            found = sc.peek()
            raise ParseError(f"expected '+' or '-', found {found!r}", sc.pos)
        first = False

        coeff = Fraction(1)
        exps = [0] * N
        if sc.peek().isdigit():
            num, _ = sc.digits()
            coeff = Fraction(num)
            if sc.take("/"):
                den, at = sc.digits()
                if den == 0:
                    raise ParseError("zero denominator", at)
                coeff = Fraction(num, den)
            if sc.take("*"):
                _monos(sc, index, exps)
        else:
            _monos(sc, index, exps)
        m = tuple(exps)
        terms[m] = terms.get(m, 0) + sign * coeff
        if sc.at_end():
            break
    return Polynomial(ring, terms)


def _monos(sc: _Scanner, index: dict, exps: list):
    while True:
        name, at = sc.name()
        if name not in index:
            raise ParseError(f"unknown variable {name!r}", at)
        e = 1
        if sc.take("^"):
            e, at_e = sc.digits()
            if e > MAX_EXPONENT:
                raise ParseError(f"exponent {e} exceeds {MAX_EXPONENT}", at_e)
        exps[index[name]] += e
        if exps[index[name]] > MAX_EXPONENT:
            raise ParseError(f"exponent of {name} exceeds {MAX_EXPONENT}", at)
        if sc.peek() == "*":
            sc.take("*")
            continue
        break


def parse_hf(text: str) -> tuple[int, ...]:
    """Parse a comma-separated Hilbert function such as ``1,3,3,1``."""
    try:
        values = tuple(int(v) for v in text.replace(" ", "").split(",") if v != "")
    except ValueError:
        raise ParseError(f"not a comma-separated integer list: {text!r}") from None
    if not values:
        raise ParseError("empty Hilbert function")
    return values


def format_hf(h) -> str:
    return ",".join(str(v) for v in h)


def parse_ideal_text(text: str) -> tuple[Ring, list[Polynomial]]:
    """Parse an ideal file; returns the ring and the generator list."""
    num_vars = char = None
    names = None
    pending: list[tuple[int, str]] = []
    ring = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "ring":
            if num_vars is not None:
                raise ParseError("duplicate 'ring' line", line=lineno)
            fields = rest.split()
            if len(fields) != 2:
                raise ParseError("expected 'ring N CHAR'", line=lineno)
            try:
                num_vars, char = int(fields[0]), int(fields[1])
            except ValueError:
                raise ParseError("ring size and characteristic must be integers", line=lineno) from None
        elif key == "vars":
            if num_vars is None:
                raise ParseError("'vars' must follow 'ring'", line=lineno)
            if names is not None or pending:
                raise ParseError("'vars' must precede all 'gen' lines", line=lineno)
            names = rest.split()
        elif key == "gen":
            if num_vars is None:
                raise ParseError("'gen' before 'ring'", line=lineno)
            pending.append((lineno, rest))
        else:
            raise ParseError(f"unknown directive {key!r}", line=lineno)
    if num_vars is None:
        raise ParseError("missing 'ring' line")
    try:
        ring = Ring(num_vars, char, names)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    gens = []
    for lineno, body in pending:
        try:
            gens.append(parse_polynomial(body, ring))
        except ParseError as exc:
            raise ParseError(exc.message, exc.position, lineno) from None
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(str(exc), line=lineno) from None
    return ring, gens


def read_ideal_file(path) -> tuple[Ring, list[Polynomial]]:
    return parse_ideal_text(Path(path).read_text())


def format_ideal_text(ring: Ring, gens, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"ring {ring.num_vars} {ring.characteristic}")
    lines.append("vars " + " ".join(ring.var_names))
    for g in gens:
        if g:
            lines.append(f"gen {g}")
    return "\n".join(lines) + "\n"
