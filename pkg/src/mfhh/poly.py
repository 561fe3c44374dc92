"""Invertible polynomials: parsing, validation, transpose and weight systems.

An invertible polynomial in n variables is a sum of exactly n monomials with
unit coefficients whose n-by-n exponent matrix has nonzero determinant and
splits, after a simultaneous permutation of monomials and variables, into
Fermat (x^a), chain (x1^a1 x2 + ... + xm^am) and loop
(x1^a1 x2 + ... + xm^am x1) pieces.

Grammar accepted by parse():

    poly    := term ("+" term)* ;
    term    := factor ("*" factor)* ;
    factor  := var ("^" nat)? ;
    var     := "x" nat ;
    nat     := [1-9][0-9]* ;

Whitespace is ignored.  Serialized form: {"vars": n, "rows": [[a11,...],...]}.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from . import lattice
from .errors import CoefficientError, NoPositiveSolution, NotInvertible, PolySyntaxError

_TOKEN = re.compile(r"x[1-9][0-9]*|\^|\*|\+|[0-9]+|\S")


def _tokenize(text):
    out = []
    for tok in _TOKEN.findall(text):
        if tok == "x" or not (tok[0] == "x" or tok in "^*+" or tok.isdigit()):
            raise PolySyntaxError(f"bad token {tok!r}")
        out.append(tok)
    return out


@dataclass(frozen=True)
class WeightSystem:
    d: tuple  # positive integer weights d_1..d_n
    h: int  # common weighted degree of every monomial
    d0: int  # h - sum(d)


@dataclass(frozen=True)
class InvertiblePolynomial:
    matrix: tuple  # rows = monomials, columns = variables
    varnames: tuple = field(default=())

    def __post_init__(self):
        if not self.varnames:
            object.__setattr__(
                self, "varnames", tuple(f"x{i + 1}" for i in range(self.nvars))
            )

    @property
    def nvars(self):
        return len(self.matrix)

    def det(self):
        return lattice.det(self.matrix)

    def transpose(self):
        return InvertiblePolynomial(tuple(zip(*self.matrix)), self.varnames)

    def weights(self):
        return weights(self)

    def __str__(self):
        terms = []
        for row in self.matrix:
            factors = []
            for j, e in enumerate(row):
                if e == 1:
                    factors.append(self.varnames[j])
                elif e > 1:
                    factors.append(f"{self.varnames[j]}^{e}")
            terms.append("*".join(factors) if factors else "1")
        return " + ".join(terms)

    def to_json(self):
        return {"vars": self.nvars, "rows": [list(row) for row in self.matrix]}

    @classmethod
    def from_json(cls, obj, validate=True):
        rows = tuple(tuple(int(x) for x in row) for row in obj["rows"])
        if validate:
            _validate(rows)
        return cls(rows)


def _atomic_shape_ok(rows):
    """Can the monomials be matched to distinct 'tail' variables so that the
    head pointers form disjoint chains and loops?"""
    n = len(rows)
    options = []
    for row in rows:
        nz = [(j, e) for j, e in enumerate(row) if e]
        if len(nz) == 1:
            j, e = nz[0]
            if e < 2:
                return False  # a bare linear monomial is not an atom
            options.append([(j, None)])
        elif len(nz) == 2:
            (j1, e1), (j2, e2) = nz
            opts = []
            if e2 == 1:
                opts.append((j1, j2))
            if e1 == 1:
                opts.append((j2, j1))
            if not opts:
                return False
            options.append(opts)
        else:
            return False

    used = [False] * n
    head_seen = [False] * n

    def assign(i):
        if i == n:
            return True
        for tail, head in options[i]:
            if used[tail]:
                continue
            if head is not None and head_seen[head]:
                continue
            used[tail] = True
            if head is not None:
                head_seen[head] = True
            if assign(i + 1):
                return True
            used[tail] = False
            if head is not None:
                head_seen[head] = False
        return False

    return assign(0)


def _validate(rows, allow_nonstandard=False):
    n = len(rows)
    if n == 0:
        raise NotInvertible("empty polynomial")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise NotInvertible("ragged exponent matrix")
    if any(e < 0 for r in rows for e in r):
        raise NotInvertible("negative exponent")
    if width != n:
        raise NotInvertible(
            f"{n} monomials but {width} variables; an invertible polynomial is square"
        )
    for j in range(n):
        if all(r[j] == 0 for r in rows):
            raise NotInvertible(f"variable x{j + 1} does not occur")
    if lattice.det(rows) == 0:
        raise NotInvertible("exponent matrix is singular")
    if not _atomic_shape_ok(rows):
        msg = "polynomial is not a sum of Fermat/chain/loop atoms"
        if allow_nonstandard:
            warnings.warn(msg)
        else:
            raise NotInvertible(msg)


def parse(text, allow_nonstandard=False):
    """Parse the grammar above into an InvertiblePolynomial.

    Monomial order in the matrix is input order.  Coefficients other than +1
    are rejected; repeated variables inside one term multiply out (exponents
    add).
    """
    toks = _tokenize(text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else None

    def take():
        nonlocal pos
        tok = toks[pos] if pos < len(toks) else None
        pos += 1
        return tok

    def parse_factor(exps):
        tok = take()
        if tok is None:
            raise PolySyntaxError("unexpected end of input")
        if tok.isdigit():
            raise CoefficientError(f"coefficient {tok} is not allowed; monomials are monic")
        if tok[0] != "x":
            raise PolySyntaxError(f"expected a variable, got {tok!r}")
        var = int(tok[1:])
        exp = 1
        if peek() == "^":
            take()
            etok = take()
            if etok is None or not etok.isdigit() or etok.startswith("0"):
                raise PolySyntaxError("expected a positive exponent after '^'")
            exp = int(etok)
        exps[var] = exps.get(var, 0) + exp

    def parse_term():
        exps = {}
        parse_factor(exps)
        while peek() == "*":
            take()
            parse_factor(exps)
        return exps

    terms = [parse_term()]
    while peek() == "+":
        take()
        terms.append(parse_term())
    if pos != len(toks):
        raise PolySyntaxError(f"unexpected token {toks[pos]!r}")

    width = max(v for t in terms for v in t)
    rows = tuple(tuple(t.get(j + 1, 0) for j in range(width)) for t in terms)
    if len(set(rows)) != len(rows):
        raise NotInvertible("repeated monomial")
    _validate(rows, allow_nonstandard=allow_nonstandard)
    return InvertiblePolynomial(rows)


def transpose(p):
    return p.transpose()


def weights(p):
    """The primitive positive solution of A*d = h*(1,..,1), plus d0 = h - sum d.

    Solved exactly over the rationals; gcd(d_1,..,d_n,h) = 1 by construction.
    """
    n = p.nvars
    aug = [[Fraction(e) for e in row] + [Fraction(1)] for row in p.matrix]
    # Gaussian elimination; the matrix is nonsingular so this cannot fail
    for col in range(n):
        piv = next(i for i in range(col, n) if aug[i][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    x = [aug[i][n] for i in range(n)]  # x_i = d_i / h
    h = 1
    for xi in x:
        h = h * xi.denominator // gcd(h, xi.denominator)
    d = [int(xi * h) for xi in x]
    g = h
    for di in d:
        g = gcd(g, di)
    d = [di // g for di in d]
    h //= g
    if h <= 0 or any(di <= 0 for di in d):
        raise NoPositiveSolution(f"weight system {tuple(d)};{h} is not positive")
    return WeightSystem(tuple(d), h, h - sum(d))
