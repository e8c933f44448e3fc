
import pytest

from repring.cyclotomic import (
  CycInt, GaloisElt, NotInSubring, OrderMismatch, contract, cyclotomic_polynomial, embed, euler_phi, galois,
  is_orthogonal, root, signed_root_decompose, signed_roots, units_mod)


def test_cyclotomic_polynomials() -> None:
  assert cyclotomic_polynomial(1) == (-1, 1)
  assert cyclotomic_polynomial(2) == (1, 1)
  assert cyclotomic_polynomial(3) == (1, 1, 1)
  assert cyclotomic_polynomial(4) == (1, 0, 1)
  assert cyclotomic_polynomial(6) == (1, -1, 1)
  assert euler_phi(12) == 4
  assert units_mod(6) == (1, 5)


def test_roots_reduce() -> None:
  assert root(3, 3) == CycInt.one(3)
  # 1 + ζ + ζ² = 0
  assert CycInt.one(3) + root(3, 1) + root(3, 2) == CycInt.zero(3)
  assert root(4, 2) == CycInt.integer(4, -1)
  assert root(1, 5) == CycInt.one(1)


def test_arithmetic() -> None:
  z = root(4, 1)
  assert z * z == -CycInt.one(4)
  assert (1 + z) * (1 - z) == CycInt.integer(4, 2)
  assert z ** 4 == CycInt.one(4)
  assert z ** -1 == root(4, 3)
  assert z.inverse() * z == CycInt.one(4)
  assert 3 * z == z + z + z


def test_mixed_orders_raise() -> None:
  with pytest.raises(OrderMismatch):
    root(3, 1) + root(4, 1)


def test_galois_and_dual() -> None:
  z = root(6, 1)
  assert galois(GaloisElt(6, 5), z) == root(6, 5)
  assert z.dual() == root(6, 5)
  assert GaloisElt(6, 5).inverse() == GaloisElt(6, 5)
  with pytest.raises(ValueError):
    GaloisElt(6, 2)


def test_embed_and_contract() -> None:
  w = root(3, 1)
  lifted = embed(w, 6)
  assert lifted == root(6, 2)
  assert contract(lifted, 3) == w
  assert contract(CycInt.integer(12, 5), 1) == CycInt.integer(1, 5)
  assert contract(root(6, 1), 3) == CycInt(3, (1, 1))
  with pytest.raises(NotInSubring):
    contract(root(4, 1), 2)
  with pytest.raises(OrderMismatch):
    embed(root(4, 1), 6)


def test_signed_roots() -> None:
  assert len(signed_roots(3)) == 6
  assert len(signed_roots(4)) == 4
  assert len(signed_roots(1)) == 2
  assert signed_root_decompose(-root(3, 2)) == (-1, 2)
  assert signed_root_decompose(CycInt.integer(3, 2)) is None
  assert all(is_orthogonal(z) for z in signed_roots(6))
  assert not is_orthogonal(CycInt.integer(1, 2))


def test_exact_divide() -> None:
  assert CycInt.integer(3, 6).exact_divide(3) == CycInt.integer(3, 2)
  with pytest.raises(ArithmeticError):
    root(3, 1).exact_divide(2)


def test_render() -> None:
  assert CycInt.zero(4).render() == '0'
  assert (CycInt.integer(4, 2) - root(4, 1)).render() == '2 - z'
