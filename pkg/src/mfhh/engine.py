"""Enumerate contributions to the bigraded cohomology table.

Every group element gamma in ker(chi) owns a set of formal monomials built
from a basis of the Jacobian ring of the restriction of w to gamma's fixed
variables, decorated with dual markers (exponent -1) on the unfixed ones:

  kind A  x0^beta * p * (duals of unfixed x_j),          x0 fixed, beta >= 0
  kind B  x0^beta * x0-dual * p * (duals of unfixed x_j), x0 fixed, beta >= 0
  kind C  x0-dual * p * (duals of unfixed x_j),          x0 not fixed

A pair (gamma, m) contributes one dimension in degree 2u + n - k + 1 (kind A)
or 2u + n - k + 2 (kinds B, C), where k counts gamma's fixed variables among
x_1..x_{n+1} and u is the unique integer with  b(m) - u*(1,..,1)  in the
relation lattice, when it exists.  The second grading of a contribution is
the total x0-exponent b0.

For kinds A and B the solutions (b0, u) form an affine line; its step has
nonzero u-component exactly when d0 != 0, which makes the enumeration of any
finite degree window provably complete.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import NonterminatingFamily
from .jacobian import monomial_basis, restrict
from .symmetry import SymmetryContext


@dataclass(frozen=True)
class GammaMonomial:
    kind: str  # 'A' | 'B' | 'C'
    beta: int | None  # x0 exponent for kinds A/B; None for C
    b: tuple  # total exponents (b0, .., b_{n+1}); dual markers count -1

    @property
    def weight(self):
        return self.b[0]

    def pattern(self, varnames=None):
        n1 = len(self.b) - 1
        names = ["x0"] + (
            list(varnames) if varnames else [f"x{i}" for i in range(1, n1 + 1)]
        )
        factors = []
        if self.kind in ("A", "B"):
            if self.beta == 1:
                factors.append(names[0])
            elif self.beta > 1:
                factors.append(f"{names[0]}^{self.beta}")
            if self.kind == "B":
                factors.append(f"{names[0]}^∨")
        else:
            factors.append(f"{names[0]}^∨")
        for j in range(1, n1 + 1):
            e = self.b[j]
            if e == 1:
                factors.append(names[j])
            elif e > 1:
                factors.append(f"{names[j]}^{e}")
            elif e == -1:
                factors.append(f"{names[j]}^∨")
        return "*".join(factors) if factors else "1"


@dataclass(frozen=True)
class Contribution:
    gamma: object  # GroupElement
    monomial: GammaMonomial
    u: int
    degree: int

    @property
    def weight(self):
        return self.monomial.weight


class BigradedTable:
    """Dimensions indexed by (degree, weight) inside a finite degree window.

    The enumeration is provably complete for every degree in the window, so
    complete(d) is simply window membership.
    """

    def __init__(self, dmin, dmax, cells):
        self.dmin = dmin
        self.dmax = dmax
        self.cells = {dw: dim for dw, dim in cells.items() if dim}

    @property
    def window(self):
        return (self.dmin, self.dmax)

    def complete(self, d):
        return self.dmin <= d <= self.dmax

    def dim(self, d):
        return sum(dim for (dd, _), dim in self.cells.items() if dd == d)

    def weights(self, d):
        """Weight multiset in degree d, sorted, with multiplicity."""
        out = []
        for (dd, q), dim in self.cells.items():
            if dd == d:
                out.extend([q] * dim)
        return tuple(sorted(out))

    def restrict(self, dmin, dmax):
        assert self.dmin <= dmin and dmax <= self.dmax
        return BigradedTable(
            dmin, dmax, {(d, q): v for (d, q), v in self.cells.items() if dmin <= d <= dmax}
        )

    def total(self):
        return sum(self.cells.values())

    def cell_list(self):
        return [
            {"d": d, "q": q, "dim": self.cells[(d, q)]}
            for d, q in sorted(self.cells)
        ]

    def __eq__(self, other):
        return (
            isinstance(other, BigradedTable)
            and self.window == other.window
            and self.cells == other.cells
        )

    def __repr__(self):
        return f"BigradedTable({self.dmin}, {self.dmax}, {len(self.cells)} cells)"


def _ceil_div(a, b):
    return -((-a) // b)


def _floor_div(a, b):
    return a // b


def _line_t_range(c0, u0, dc, du, cmin, off, dmin, dmax):
    """All t with c(t) = c0 + t*dc >= cmin and 2*u(t) + off in [dmin, dmax].

    dc > 0.  Raises NonterminatingFamily when du == 0 and the (constant)
    degree sits inside the window: the family would contribute infinitely
    often, which only happens in the excluded d0 = 0 regime.
    """
    tlo = _ceil_div(cmin - c0, dc)
    d_const = 2 * u0 + off
    if du == 0:
        if dmin <= d_const <= dmax:
            raise NonterminatingFamily(
                "a monomial family never leaves the degree window (d0 = 0)"
            )
        return range(0)
    # dmin <= 2*(u0 + t*du) + off <= dmax
    lo_num = dmin - off - 2 * u0
    hi_num = dmax - off - 2 * u0
    if du > 0:
        t1 = _ceil_div(lo_num, 2 * du)
        t2 = _floor_div(hi_num, 2 * du)
    else:
        t1 = _ceil_div(hi_num, 2 * du)
        t2 = _floor_div(lo_num, 2 * du)
    return range(max(tlo, t1), t2 + 1)


def _class_contributions(ctx, fixed, window, order):
    """Contributions shared by every gamma with the given fixed set."""
    dmin, dmax = window
    n = ctx.n
    n1 = n + 1
    fixed_vars = tuple(sorted(v for v in fixed if v >= 1))
    k = len(fixed_vars)
    basis = monomial_basis(restrict(ctx.poly, fixed_vars), order)
    out = []
    if 0 in fixed:
        dc, du = ctx.family_step
        for mono in basis.monomials:
            exps = dict(zip(basis.variables, mono))
            base = tuple(
                [0] + [exps.get(j, 0) if j in fixed else -1 for j in range(1, n1 + 1)]
            )
            line = ctx.family_line(base)
            if line is None:
                continue
            c0, u0 = line
            for t in _line_t_range(c0, u0, dc, du, 0, n - k + 1, dmin, dmax):
                c, u = c0 + t * dc, u0 + t * du
                b = (c,) + base[1:]
                out.append(
                    Contribution(None, GammaMonomial("A", c, b), u, 2 * u + n - k + 1)
                )
            for t in _line_t_range(c0, u0, dc, du, -1, n - k + 2, dmin, dmax):
                c, u = c0 + t * dc, u0 + t * du
                b = (c,) + base[1:]
                out.append(
                    Contribution(None, GammaMonomial("B", c + 1, b), u, 2 * u + n - k + 2)
                )
    else:
        for mono in basis.monomials:
            exps = dict(zip(basis.variables, mono))
            b = tuple(
                [-1] + [exps.get(j, 0) if j in fixed else -1 for j in range(1, n1 + 1)]
            )
            u = ctx.chi_power(b)
            if u is None:
                continue
            d = 2 * u + n - k + 2
            if dmin <= d <= dmax:
                out.append(Contribution(None, GammaMonomial("C", None, b), u, d))
    return out


def contributions_for(ctx, gamma, window, order="grevlex"):
    """All contributions of one group element inside the window.

    Elements with the same fixed set carry identical monomial families, so
    this is the per-class computation stamped with the given gamma.
    """
    return [
        Contribution(gamma, con.monomial, con.u, con.degree)
        for con in _class_contributions(ctx, gamma.fixed, window, order)
    ]


def _resolve_threads(threads):
    if threads is None:
        threads = int(os.environ.get("HH_THREADS", "1"))
    return max(1, threads)


def compute_table(p, window, order="grevlex", threads=None, ctx=None):
    """The bigraded dimension table of p over a finite degree window.

    Work is split per fixed-variable class of ker(chi); the merge is a plain
    counter sum, so any parallel schedule produces the identical table.
    """
    dmin, dmax = window
    if dmin > dmax:
        raise ValueError("empty degree window")
    if ctx is None:
        ctx = SymmetryContext(p)
    census = ctx.fixed_census()
    classes = sorted(census.items(), key=lambda kv: tuple(sorted(kv[0])))
    threads = _resolve_threads(threads)

    def work(item):
        fixed, count = item
        return _class_contributions(ctx, fixed, window, order), count

    if threads > 1 and len(classes) > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            results = list(ex.map(work, classes))
    else:
        results = [work(item) for item in classes]

    cells = Counter()
    for contribs, count in results:
        for con in contribs:
            cells[(con.degree, con.weight)] += count
    return BigradedTable(dmin, dmax, dict(cells))


def hh2_vanishes(p, order="grevlex", ctx=None):
    """True iff the degree-2 part of the table is empty."""
    return compute_table(p, (2, 2), order=order, ctx=ctx).total() == 0


def list_contributions(p, window, order="grevlex", ctx=None):
    """The flat, deterministic (gamma, monomial) listing behind the table."""
    if ctx is None:
        ctx = SymmetryContext(p)
    by_class = {}
    out = []
    for gamma in ctx.ker_chi():
        if gamma.fixed not in by_class:
            by_class[gamma.fixed] = _class_contributions(ctx, gamma.fixed, window, order)
        for con in by_class[gamma.fixed]:
            out.append(Contribution(gamma, con.monomial, con.u, con.degree))
    out.sort(
        key=lambda c: (-c.degree, c.monomial.kind, c.monomial.b, c.gamma.phases)
    )
    return out


def aggregate_contributions(contribs, varnames=None):
    """Collapse a flat listing into (pattern, kind, degree, weight, count) rows."""
    counts = Counter(
        (c.monomial.pattern(varnames), c.monomial.kind, c.degree, c.weight)
        for c in contribs
    )
    rows = [
        {"monomial": m, "type": kind, "d": d, "q": q, "count": n}
        for (m, kind, d, q), n in counts.items()
    ]
    rows.sort(key=lambda r: (-r["d"], r["type"], r["q"], r["monomial"]))
    return rows
