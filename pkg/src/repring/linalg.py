""" Integer and rational linear algebra on top of `sympy.polys.matrices`.

Matrices are passed around as lists of integer *columns*. Every lattice in this package is spanned by the columns
of a generator matrix, which matches the column-style Hermite normal form computed by
#sympy.polys.matrices.normalforms.hermite_normal_form.
"""

from __future__ import annotations

import typing as t
from fractions import Fraction

Column = t.List[int]


def _to_domain_matrix(columns: t.Sequence[t.Sequence[int]], nrows: int) -> t.Any:
  from sympy.polys.domains import ZZ
  from sympy.polys.matrices import DomainMatrix

  rows = [[ZZ(int(col[i])) for col in columns] for i in range(nrows)]
  return DomainMatrix(rows, (nrows, len(columns)), ZZ)


def _columns_of(matrix: t.Any) -> list[Column]:
  rows = matrix.to_list()
  nrows, ncols = matrix.shape
  return [[int(rows[i][j]) for i in range(nrows)] for j in range(ncols)]


class HermiteBasis(t.NamedTuple):
  """ A lattice basis in column Hermite normal form. Column `k` has its pivot (a positive entry) in row `pivots[k]`
  and zeros below it; pivot rows increase from left to right. """

  nrows: int
  columns: list[Column]
  pivots: list[int]

  @property
  def rank(self) -> int:
    return len(self.columns)

  def solve(self, vector: t.Sequence[int]) -> list[int] | None:
    """ Returns the integer coordinates of *vector* against the basis columns, or `None` if the vector is not in
    the lattice. """

    residual = [int(x) for x in vector]
    coords = [0] * self.rank
    for k in range(self.rank - 1, -1, -1):
      column, row = self.columns[k], self.pivots[k]
      quotient, remainder = divmod(residual[row], column[row])
      if remainder:
        return None
      if quotient:
        coords[k] = quotient
        for i in range(row + 1):
          residual[i] -= quotient * column[i]
    if any(residual):
      return None
    return coords

  def combine(self, coords: t.Sequence[int]) -> Column:
    result = [0] * self.nrows
    for c, column in zip(coords, self.columns):
      if c:
        for i, x in enumerate(column):
          result[i] += c * x
    return result


def hermite_basis(columns: t.Sequence[t.Sequence[int]], nrows: int) -> HermiteBasis:
  """ Compute the column Hermite normal form of the lattice spanned by *columns*. """

  from sympy.polys.matrices.normalforms import hermite_normal_form

  if not columns:
    return HermiteBasis(nrows, [], [])
  hnf = _columns_of(hermite_normal_form(_to_domain_matrix(columns, nrows)))
  hnf = [c for c in hnf if any(c)]
  pivots = [max(i for i, x in enumerate(c) if x) for c in hnf]
  return HermiteBasis(nrows, hnf, pivots)


def invariant_factors(columns: t.Sequence[t.Sequence[int]], nrows: int) -> list[int]:
  """ The Smith normal form diagonal of the matrix with the given *columns*, padded with zeros up to *nrows*
  entries so that a rank deficiency shows up as an infinite cyclic factor. """

  from sympy.polys.matrices.normalforms import invariant_factors as _invariant_factors

  if nrows == 0:
    return []
  if not columns:
    return [0] * nrows
  factors = [abs(int(x)) for x in _invariant_factors(_to_domain_matrix(columns, nrows))]
  factors += [0] * (nrows - len(factors))
  return sorted(factors, key=lambda x: (x == 0, x))


def solve_rational(columns: t.Sequence[t.Sequence[int]], vector: t.Sequence[int]) -> list[Fraction] | None:
  """ Solve `sum(x[j] * columns[j]) == vector` over the rationals. Returns one solution (free variables set to
  zero) or `None` if the system is inconsistent. """

  from sympy.polys.domains import QQ
  from sympy.polys.matrices import DomainMatrix

  nrows = len(vector)
  ncols = len(columns)
  rows = [[QQ(int(col[i])) for col in columns] + [QQ(int(vector[i]))] for i in range(nrows)]
  if nrows == 0:
    return [Fraction(0)] * ncols
  reduced, pivots = DomainMatrix(rows, (nrows, ncols + 1), QQ).rref()
  if ncols in pivots:
    return None
  entries = reduced.to_list()
  solution = [Fraction(0)] * ncols
  for row, col in enumerate(pivots):
    value = entries[row][ncols]
    solution[col] = Fraction(int(value.numerator), int(value.denominator))
  return solution


def rank(columns: t.Sequence[t.Sequence[int]], nrows: int) -> int:
  return hermite_basis(columns, nrows).rank
