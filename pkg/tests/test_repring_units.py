
import pytest

from repring.ghost import GhostMismatch
from repring.gsets import VirtualBiset
from repring.library import NamedBisetResolver, named_group
from repring.lattices import lattice
from repring.units import (
  EnumerationCapExceeded, UnitElement, apply_unit_functor, brauer_lift, brauer_lift_ghost, ghost_torsion_units,
  orthbra_set, orthogonal_units, yamauchi_set)


def test_ghost_torsion_units() -> None:
  C2 = named_group('C2')
  assert ghost_torsion_units('B', C2).order == 4
  assert ghost_torsion_units('T', C2, 2).order == 4
  units = ghost_torsion_units('RK', named_group('C3'))
  assert units.order == 12
  assert units.exponent == 6
  assert all(u.ghost.validate() for u in units)
  assert len(units.table) == 12


def test_enumeration_cap() -> None:
  with pytest.raises(EnumerationCapExceeded):
    ghost_torsion_units('RK', named_group('C3'), cap=5)


def test_orthogonal_units_burnside_C2() -> None:
  units = orthogonal_units('B', named_group('C2'))
  assert units.order == 4
  assert units.is_elementary_abelian_2()
  u = UnitElement(units.ring.vector([1, -1]))
  assert u in units
  assert (u * u).ghost == units.ring.one()
  assert u.order == 2
  assert u.inverse() == u


def test_orthogonal_units_character_rings() -> None:
  S3 = named_group('S3')
  units = orthogonal_units('RK', S3)
  assert units.order == 4
  assert units.as_set() == yamauchi_set(S3).as_set()
  assert all(u.is_orthogonal() for u in units)
  C3 = named_group('C3')
  assert orthogonal_units('RK', C3).as_set() == yamauchi_set(C3).as_set()
  assert yamauchi_set(C3).order == 6
  assert yamauchi_set(named_group('C2')).order == 4


def test_orthogonal_units_brauer_rings() -> None:
  S3 = named_group('S3')
  reference = orthbra_set(S3, 3)
  assert reference.order == 4
  assert orthogonal_units('RF', S3, 3).as_set() == reference.as_set()
  assert orthbra_set(named_group('C2'), 2).order == 2
  assert orthbra_set(named_group('C3'), 2).order == yamauchi_set(named_group('C3')).order


@pytest.mark.parametrize('tag', ['B', 'T', 'RK', 'RF'])
def test_trivial_group_units(tag: str) -> None:
  assert orthogonal_units(tag, named_group('1'), 2).order == 2


def test_unit_group_table_is_closed() -> None:
  units = yamauchi_set(named_group('S3'))
  table = units.table
  one = units.index(UnitElement(units.ring.one()))
  for i in range(units.order):
    assert one in table[i]


def test_brauer_lift() -> None:
  S3 = named_group('S3')
  from repring.ghost import tilde_d
  for u in orthbra_set(S3, 3):
    lifted = brauer_lift_ghost(u.ghost)
    assert tilde_d(lifted, 3) == u.ghost
    assert brauer_lift_ghost(u.ghost.dual()) == lifted.dual()
    assert brauer_lift(u.element()).lattice is lattice('RK', S3)
  with pytest.raises(ValueError):
    brauer_lift_ghost(yamauchi_set(S3).elements[0].ghost)


def test_apply_unit_functor() -> None:
  U = NamedBisetResolver().ind('C2', 'C4')
  sign = next(u for u in orthogonal_units('RK', U.right) if u.ghost[1] == -u.ghost.ring.one()[1] and
    u.ghost[0] == u.ghost.ring.one()[0])
  image = apply_unit_functor(VirtualBiset.of(U), sign)
  assert image.ghost == image.ghost.ring.vector([1, -1, 1, -1])
  assert image.lattice is not None
  assert image.is_orthogonal()
  inverse = apply_unit_functor(-VirtualBiset.of(U), sign)
  assert (image * inverse).ghost == image.ghost.ring.one()
  assert apply_unit_functor(VirtualBiset.of(U), sign, 'RK') == image
  with pytest.raises(GhostMismatch):
    apply_unit_functor(VirtualBiset.of(U), sign, 'RF')


CORPUS = ['1', 'C2', 'C3', 'C4', 'C6', 'V4', 'S3', 'D8', 'Q8', 'A4']


@pytest.mark.parametrize('name', CORPUS)
def test_character_ring_units_are_signed_linear_characters(name: str) -> None:
  G = named_group(name)
  units = orthogonal_units('RK', G)
  assert units.as_set() == yamauchi_set(G).as_set()
  assert units.order == 2 * G.order // G.derived_subgroup.order


@pytest.mark.parametrize('name', CORPUS)
@pytest.mark.parametrize('p', [2, 3])
def test_brauer_ring_units_are_restricted_characters(name: str, p: int) -> None:
  G = named_group(name)
  units = orthogonal_units('RF', G, p)
  assert units.as_set() == orthbra_set(G, p).as_set()
  assert all(u.is_orthogonal() for u in units)
  table = units.table
  assert all(sorted(row) == list(range(units.order)) for row in table)
