
from fractions import Fraction

from repring.linalg import hermite_basis, invariant_factors, rank, solve_rational


def test_hermite_basis_membership() -> None:
  # The lattice spanned by (2, 0) and (1, 1) has index 2 in Z^2.
  basis = hermite_basis([[2, 0], [1, 1]], 2)
  assert basis.rank == 2
  assert basis.solve([1, 1]) is not None
  assert basis.solve([0, 2]) is not None
  assert basis.solve([1, 0]) is None
  coords = basis.solve([3, 1])
  assert coords is not None
  assert basis.combine(coords) == [3, 1]


def test_hermite_basis_drops_dependent_columns() -> None:
  basis = hermite_basis([[1, 2, 3], [2, 4, 6], [0, 0, 1]], 3)
  assert basis.rank == 2
  assert rank([[1, 2, 3], [2, 4, 6]], 3) == 1
  assert basis.solve([0, 1, 0]) is None


def test_hermite_basis_empty() -> None:
  basis = hermite_basis([], 3)
  assert basis.rank == 0
  assert basis.solve([0, 0, 0]) == []
  assert basis.solve([1, 0, 0]) is None


def test_invariant_factors() -> None:
  assert invariant_factors([[2, 0], [1, 1]], 2) == [1, 2]
  assert invariant_factors([[1, 0, 0], [0, 1, 0]], 3) == [1, 1, 0]
  assert invariant_factors([], 2) == [0, 0]


def test_solve_rational() -> None:
  assert solve_rational([[2, 0], [0, 3]], [1, 1]) == [Fraction(1, 2), Fraction(1, 3)]
  assert solve_rational([[1, 1]], [1, 2]) is None
