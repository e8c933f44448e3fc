import math

import pytest

from repring.cyclotomic import CycInt
from repring.ghost import GhostMismatch, ghost_ring
from repring.groups import linear_characters
from repring.gsets import GSet
from repring.lattices import (
  Lattice, RankDeficiency, TheoryViolation, brauer_lattice_RF, burnside_lattice, character_lattice_RK, connect,
  induced_character, lattice, left_coset_representatives, marks, monomial_ghost_T, table_of_marks,
  trivial_source_lattice)
from repring.library import named_group


def _subgroup(G, order):
  return next(S for S in G.subgroups if S.order == order)


def _sign(S):
  return next(psi for psi in linear_characters(S, S.parent.exponent) if not psi.is_trivial())


def test_burnside_C2() -> None:
  C2 = named_group('C2')
  L = burnside_lattice(C2)
  ring = L.ring
  assert L.rank == 2
  assert [v.values for v in L.generators] == [ring.vector([2, 0]).values, ring.vector([1, 1]).values]
  assert L.cokernel_invariants() == [1, 2]
  v = ring.vector([1, -1])
  assert v in L
  assert L.generator_coordinates(v) == [1, -1]
  assert L.membership(ring.vector([1, 0])) is None
  with pytest.raises(TheoryViolation):
    L.element(ring.vector([1, 0]))
  for k, generator in enumerate(L.generators):
    assert L.generator_coordinates(generator) == [int(i == k) for i in range(2)]


def test_table_of_marks_S3() -> None:
  reps, rows = table_of_marks(named_group('S3'))
  assert [S.order for S in reps] == [1, 2, 3, 6]
  assert rows == [[6, 0, 0, 0], [3, 1, 0, 0], [2, 0, 2, 0], [1, 1, 1, 1]]


def test_ring_elements() -> None:
  S3 = named_group('S3')
  L = burnside_lattice(S3)
  X = L.element(marks(GSet.cosets(S3, _subgroup(S3, 2))))
  assert (X * X).ghost == marks(GSet.cosets(S3, _subgroup(S3, 2)) * GSet.cosets(S3, _subgroup(S3, 2)))
  assert (X - X).ghost.is_zero()
  assert (X + L.one() - L.one()) == X
  assert X.dual() == X
  with pytest.raises(GhostMismatch):
    X + burnside_lattice(named_group('C2')).one()


def test_rank_deficiency() -> None:
  S3 = named_group('S3')
  ring = ghost_ring('B', S3)
  generators = [marks(GSet.regular(S3))]
  with pytest.raises(RankDeficiency) as excinfo:
    Lattice(ring, generators)
  assert (excinfo.value.expected, excinfo.value.actual) == (4, 1)
  assert Lattice(ring, generators, check_rank=False).rank == 1


def test_left_coset_representatives() -> None:
  S3 = named_group('S3')
  reps = left_coset_representatives(S3, _subgroup(S3, 2))
  assert len(reps) == 3
  assert reps[0] == 0


def test_monomial_ghost_T() -> None:
  C2 = named_group('C2')
  trivial = linear_characters(C2.trivial, 2)[0]
  assert monomial_ghost_T(C2, 2, C2.trivial, trivial) == ghost_ring('T', C2, 2).vector([2, 0])
  psi = linear_characters(C2.whole, 2)[0]
  assert monomial_ghost_T(C2, 2, C2.whole, psi) == ghost_ring('T', C2, 2).one()
  with pytest.raises(ValueError):
    monomial_ghost_T(C2, 2, C2.whole, _sign(C2.whole))

  S3 = named_group('S3')
  S = _subgroup(S3, 2)
  t = S.elems[1]
  v = monomial_ghost_T(S3, 3, S, _sign(S))
  ring = v.ring
  assert v[ring.pairs.lookup(S, t)] == -CycInt.one(ring.value_order)
  assert v.validate()


def test_trivial_source_lattices() -> None:
  L = trivial_source_lattice(named_group('C2'), 2)
  assert L.rank == 2
  assert all(2 % d == 0 for d in L.cokernel_invariants())
  L = trivial_source_lattice(named_group('S3'), 3)
  assert L.rank == 4
  factors = L.cokernel_invariants()
  assert len(factors) == 4
  assert all(d and 6 % d == 0 for d in factors)


def test_induced_character() -> None:
  S3 = named_group('S3')
  S = _subgroup(S3, 2)
  chi = induced_character(S3, S, _sign(S))
  t = S.elems[1]
  c = next(x for x in range(6) if S3.element_orders[x] == 3)
  assert (chi[0], chi[t], chi[c]) == (CycInt.integer(6, 3), CycInt.integer(6, -1), CycInt.zero(6))
  regular = induced_character(S3, S3.trivial, linear_characters(S3.trivial, 6)[0])
  assert regular == ghost_ring('RK', S3).from_function(lambda x: 6 if x == 0 else 0)


def test_character_lattices() -> None:
  C2 = named_group('C2')
  L = character_lattice_RK(C2)
  assert L.rank == 2
  assert L.ring.vector([2, 0]) in L
  assert L.ring.vector([1, 0]) not in L
  assert character_lattice_RK(named_group('S3')).rank == 3
  assert brauer_lattice_RF(named_group('S3'), 3).rank == 2
  assert brauer_lattice_RF(named_group('C3'), 2).rank == 3
  assert brauer_lattice_RF(C2, 2).rank == 1


@pytest.mark.parametrize('tag', ['B', 'T', 'RK', 'RF'])
def test_trivial_group(tag: str) -> None:
  L = lattice(tag, named_group('1'), 2)
  assert L.rank == 1
  assert L.cokernel_invariants() == [1]


def test_lattice_dispatch() -> None:
  S3 = named_group('S3')
  assert lattice('T', S3, 3) is lattice('T', S3, 3, 6)
  assert lattice('RK', S3, 3) is character_lattice_RK(S3, 6)
  with pytest.raises(GhostMismatch):
    lattice('T', S3)
  with pytest.raises(GhostMismatch):
    lattice('X', S3, 3)


def test_connect() -> None:
  S3 = named_group('S3')
  x = burnside_lattice(S3).element(marks(GSet.natural(S3)))
  y = connect('l', x, 3)
  assert y.lattice is lattice('T', S3, 3)
  z = connect('c', y)
  assert z.lattice is lattice('RK', S3)
  assert connect('d', z, 3) == connect('b', y)
  with pytest.raises(GhostMismatch):
    connect('b', x, 3)
  with pytest.raises(ValueError):
    connect('q', x, 3)


def test_to_json() -> None:
  data = burnside_lattice(named_group('C2')).to_json()
  assert (data['tag'], data['group'], data['rank']) == ('B', 'C2', 2)
  assert len(data['basis']) == 2


CORPUS = ['1', 'C2', 'C3', 'C4', 'C6', 'V4', 'S3', 'D8', 'Q8', 'A4']


@pytest.mark.parametrize('name', CORPUS)
def test_burnside_cokernel_is_product_of_normalizer_indices(name: str) -> None:
  G = named_group(name)
  reps = G.subgroups.representatives
  L = burnside_lattice(G)
  assert L.rank == len(reps)
  assert math.prod(L.cokernel_invariants()) == math.prod(S.normalizer.order // S.order for S in reps)


@pytest.mark.parametrize('name', CORPUS)
@pytest.mark.parametrize('p', [2, 3])
def test_lattice_ranks(name: str, p: int) -> None:
  G = named_group(name)
  assert character_lattice_RK(G).rank == len(G.conjugacy_classes)
  regular_classes = {G.class_of[x] for x in range(G.order) if G.element_orders[x] % p}
  assert brauer_lattice_RF(G, p).rank == len(regular_classes)
  T = trivial_source_lattice(G, p)
  assert T.rank == len(G.hypo_pairs(p).orbits)
  assert all(d and G.order % d == 0 for d in T.cokernel_invariants())
