"""Dense exact linear algebra over any of the package's field elements.

Vectors are Python lists of field elements; everything is plain Gaussian
elimination with first-nonzero pivoting, so results are deterministic for a
fixed column order.  No floating point, no pivot-size heuristics.
"""

from __future__ import annotations


class Span:
    """Incrementally maintained row space in reduced echelon form."""

    def __init__(self, field, ncols):
        self.field = field
        self.ncols = ncols
        self.rows = []     # reduced rows, each normalized to pivot 1
        self.pivots = []   # pivot column per row, strictly increasing order kept

    def _reduce(self, vec):
        vec = list(vec)
        for row, piv in zip(self.rows, self.pivots):
            c = vec[piv]
            if not c.is_zero():
                for j in range(piv, self.ncols):
                    vec[j] = vec[j] - c * row[j]
        return vec

    def add(self, vec):
        """Insert the vector; True when it enlarged the span."""
        vec = self._reduce(vec)
        piv = None
        for j, c in enumerate(vec):
            if not c.is_zero():
                piv = j
                break
        if piv is None:
            return False
        inv = self.field.one / vec[piv]
        vec = [c * inv for c in vec]
        # back-substitute into existing rows to keep the reduced form
        for i, row in enumerate(self.rows):
            c = row[piv]
            if not c.is_zero():
                self.rows[i] = [a - c * b for a, b in zip(row, vec)]
        # keep rows ordered by pivot column
        at = 0
        while at < len(self.pivots) and self.pivots[at] < piv:
            at += 1
        self.rows.insert(at, vec)
        self.pivots.insert(at, piv)
        return True

    def contains(self, vec):
        return all(c.is_zero() for c in self._reduce(vec))

    @property
    def dim(self):
        return len(self.rows)


def rref(field, rows):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    sp = Span(field, len(rows[0]) if rows else 0)
    for r in rows:
        sp.add(r)
    return sp.rows, sp.pivots


def kernel(field, rows, ncols):
    """Basis of the right kernel of the matrix given by `rows`."""
    red, pivots = rref(field, rows) if rows else ([], [])
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        vec = [field.zero] * ncols
        vec[free] = field.one
        for row, piv in zip(red, pivots):
            vec[piv] = -row[free]
        basis.append(vec)
    return basis


def solve(field, rows, rhs):
    """One solution of A x = b with free variables set to zero, or None.

    Deterministic: the returned solution is the one produced by reduced
    echelon form under the given column order.
    """
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    sp = Span(field, ncols + 1)
    for r in aug:
        sp.add(r)
    x = [field.zero] * ncols
    for row, piv in zip(sp.rows, sp.pivots):
        if piv == ncols:
            return None  # inconsistent
        x[piv] = row[ncols]
    return x


def solve_all(field, rows, rhs):
    """(particular solution or None, kernel basis) of A x = b."""
    part = solve(field, rows, rhs)
    ncols = len(rows[0]) if rows else 0
    return part, kernel(field, rows, ncols)
