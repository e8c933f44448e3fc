
import random

import pytest

from repring.cyclotomic import CycInt, NotInSubring, root
from repring.ghost import GhostMismatch, dual, ghost_ring, tilde_b, tilde_c, tilde_d, tilde_l, validate_invariance
from repring.gsets import GSet, fixed_points
from repring.lattices import marks
from repring.library import named_group


def test_ghost_ring_shapes() -> None:
  S3 = named_group('S3')
  B = ghost_ring('B', S3)
  assert (B.size, B.rank, B.value_order) == (6, 4, 1)
  RK = ghost_ring('RK', S3)
  assert (RK.size, RK.rank, RK.value_order, RK.coordinate_count) == (6, 3, 6, 6)
  RF = ghost_ring('RF', S3, 3)
  assert (RF.size, RF.rank, RF.value_order) == (4, 2, 2)
  T = ghost_ring('T', S3, 3)
  assert (T.size, T.rank, T.value_order) == (6, 4, 2)
  T2 = ghost_ring('T', S3, 2)
  assert (T2.size, T2.rank, T2.value_order) == (6, 3, 3)


def test_ghost_ring_identity() -> None:
  S3 = named_group('S3')
  assert ghost_ring('RK', S3) is ghost_ring('RK', S3, 5, 6)
  assert ghost_ring('B', S3) is ghost_ring('B', S3, None, 12)
  assert ghost_ring('T', S3, 3) is not ghost_ring('T', S3, 3, 12)
  with pytest.raises(GhostMismatch):
    ghost_ring('RK', S3, None, 4)
  with pytest.raises(GhostMismatch):
    ghost_ring('T', S3)


def test_vector_construction() -> None:
  C3 = named_group('C3')
  ring = ghost_ring('RK', C3)
  with pytest.raises(GhostMismatch):
    ring.vector([1, 1])
  with pytest.raises(GhostMismatch):
    ring.vector([CycInt.one(6)] * 3)
  assert ring.one() * ring.one() == ring.one()
  assert (ring.constant(2) - ring.one()) == ring.one()
  assert (-ring.one()).dual() == -ring.one()
  with pytest.raises(GhostMismatch):
    ring.one() + ghost_ring('RK', named_group('S3')).one()


def test_validate_invariance() -> None:
  C3 = named_group('C3')
  ring = ghost_ring('RK', C3)
  chi = ring.vector([CycInt.one(3), root(3, 1), root(3, 2)])
  assert validate_invariance(chi)
  assert not ring.vector([CycInt.one(3), root(3, 1), root(3, 1)]).validate()
  S3 = named_group('S3')
  B = ghost_ring('B', S3)
  C2 = next(S for S in S3.subgroups if S.order == 2)
  report = B.validate(B.from_function(lambda k: int(k == C2.index)))
  assert not report.ok
  assert report.witness


def test_galois_blocks_and_extend() -> None:
  C3 = named_group('C3')
  ring = ghost_ring('RK', C3)
  blocks = ring.galois_blocks
  assert len(blocks) == 2
  assert blocks[0].stabilizer == (1, 2)
  assert blocks[1].stabilizer == (1,)
  chi = ring.extend({0: CycInt.one(3), 1: root(3, 1)})
  assert chi == ring.vector([CycInt.one(3), root(3, 1), root(3, 2)])
  assert chi * chi.dual() == ring.one()
  assert dual(chi) == chi ** 2


def test_ambient_generators_are_invariant() -> None:
  for tag, name, p in [('B', 'S3', None), ('RK', 'C3', None), ('RK', 'S3', None), ('T', 'S3', 2), ('RF', 'D8', 3)]:
    ring = ghost_ring(tag, named_group(name), p)
    assert ring.ambient_generators
    assert all(v.validate() for v in ring.ambient_generators)
    rng = random.Random(0)
    for _ in range(3):
      v = ring.random_vector(rng)
      assert v.validate()
      assert ring.from_coordinates(ring.coordinates(v)) == v


def test_connecting_maps_give_permutation_characters() -> None:
  S3 = named_group('S3')
  X = GSet.natural(S3)
  a = marks(X)
  chi = tilde_c(tilde_l(a, 3))
  assert chi.ring is ghost_ring('RK', S3)
  for x in range(S3.order):
    cyclic = S3.subgroups.lookup(S3.cyclic_subgroups[x])
    assert chi[x] == CycInt.integer(6, len(fixed_points(X, cyclic)))
  assert tilde_b(tilde_l(a, 3)) == tilde_d(chi, 3)
  assert tilde_l(ghost_ring('B', S3).one(), 2) == ghost_ring('T', S3, 2).one()
  assert dual(a) is a


def test_connecting_maps_check_tags() -> None:
  S3 = named_group('S3')
  with pytest.raises(GhostMismatch):
    tilde_b(ghost_ring('B', S3).one())
  with pytest.raises(GhostMismatch):
    tilde_d(ghost_ring('T', S3, 3).one(), 3)


def test_tilde_d_requires_subring_values() -> None:
  C6 = named_group('C6')
  ring = ghost_ring('RK', C6)
  involution = next(x for x in range(6) if C6.element_orders[x] == 2)
  v = ring.from_function(lambda x: root(6, 1) if x == involution else CycInt.one(6))
  with pytest.raises(NotInSubring):
    tilde_d(v, 3)


def test_to_json() -> None:
  ring = ghost_ring('T', named_group('S3'), 3)
  data = ring.one().to_json()
  assert (data['tag'], data['group'], data['p'], data['e']) == ('T', 'S3', 3, 2)
  assert len(data['entries']) == 6
  assert set(data['entries'][0]['index']) == {'E', 's'}
  assert data['entries'][0]['value'] == [1]


@pytest.mark.parametrize('name', ['1', 'C2', 'C3', 'C4', 'C6', 'V4', 'S3', 'D8', 'Q8', 'A4'])
@pytest.mark.parametrize('p', [2, 3])
def test_decomposition_of_character_is_brauer_character(name: str, p: int) -> None:
  ring = ghost_ring('T', named_group(name), p)
  rng = random.Random(p)
  for _ in range(10):
    v = ring.random_vector(rng)
    assert tilde_d(tilde_c(v), p) == tilde_b(v)
