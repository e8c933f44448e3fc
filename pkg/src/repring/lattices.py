""" Representation rings as full-rank lattices inside their ghost rings.

Each ring is given by a family of generators: the table of marks for B, monomial trivial source modules for T,
characters induced from elementary subgroups for R_K and their restrictions to p-regular elements for R_F. A
lattice whose rank falls short of the rank of its ghost ring raises #RankDeficiency.
"""

from __future__ import annotations

import dataclasses
import functools
import logging
import typing as t

from repring.cyclotomic import CycInt
from repring.ghost import GhostMismatch, GhostRing, GhostVector, ghost_ring, tilde_b, tilde_c, tilde_d, tilde_l
from repring.groups import Group, LinearCharacter, Subgroup, linear_characters
from repring.gsets import GSet
from repring.linalg import HermiteBasis, hermite_basis, invariant_factors, solve_rational

logger = logging.getLogger(__name__)


class TheoryViolation(RuntimeError):
  """ Raised when a computed object contradicts a statement that holds for every finite group. The *witness*
  describes the offending input. """

  def __init__(self, statement: str, witness: t.Any = None) -> None:
    super().__init__(statement)
    self.statement = statement
    self.witness = witness

  def __str__(self) -> str:
    if self.witness is None:
      return self.statement
    return f'{self.statement} (witness: {self.witness})'


class RankDeficiency(TheoryViolation):

  def __init__(self, tag: str, expected: int, actual: int, witness: t.Any = None) -> None:
    super().__init__(f'the {tag} generators span rank {actual}, expected {expected}', witness)
    self.tag = tag
    self.expected = expected
    self.actual = actual


class Lattice:
  """ The Z-span of a list of invariant ghost vectors. """

  def __init__(self, ring: GhostRing, generators: t.Sequence[GhostVector], labels: t.Sequence[str] | None = None,
      check_rank: bool = True) -> None:
    for v in generators:
      ring.check(v)
    self.ring = ring
    self.generators = list(generators)
    self.labels = list(labels) if labels is not None else [str(i) for i in range(len(self.generators))]
    self._columns = [ring.coordinates(v) for v in self.generators]
    self.hnf: HermiteBasis = hermite_basis(self._columns, ring.coordinate_count)
    if check_rank and self.hnf.rank != ring.rank:
      raise RankDeficiency(ring.tag, ring.rank, self.hnf.rank, witness=repr(ring))
    logger.debug('built lattice of rank %d in %r from %d generators', self.rank, ring, len(self.generators))

  def __repr__(self) -> str:
    return f'Lattice({self.ring!r}, rank={self.rank})'

  @property
  def tag(self) -> str:
    return self.ring.tag

  @property
  def group(self) -> Group:
    return self.ring.group

  @property
  def rank(self) -> int:
    return self.hnf.rank

  def membership(self, v: GhostVector) -> list[int] | None:
    """ Coordinates of *v* against the Hermite basis, or `None` if *v* is not in the lattice. """

    self.ring.check(v)
    if not self.ring.validate(v):
      return None
    return self.hnf.solve(self.ring.coordinates(v))

  def __contains__(self, v: GhostVector) -> bool:
    return self.membership(v) is not None

  def generator_coordinates(self, v: GhostVector) -> list[int] | None:
    """ Integer coordinates of *v* against the generators. Only available when the generators are independent. """

    if len(self.generators) != self.rank:
      raise ValueError(f'{self!r} has {len(self.generators)} dependent generators')
    if self.membership(v) is None:
      return None
    solution = solve_rational(self._columns, self.ring.coordinates(v))
    assert solution is not None and all(x.denominator == 1 for x in solution), solution
    return [int(x) for x in solution]

  def element(self, v: GhostVector) -> RingElement:
    coords = self.membership(v)
    if coords is None:
      raise TheoryViolation(f'vector is not in the {self.tag} lattice of {self.group.name}', witness=v.render())
    return RingElement(self, v, tuple(coords))

  def basis(self) -> list[GhostVector]:
    """ The Hermite basis as ghost vectors. """

    return [self.ring.from_coordinates(c) for c in self.hnf.columns]

  def one(self) -> RingElement:
    return self.element(self.ring.one())

  def zero(self) -> RingElement:
    return self.element(self.ring.zero())

  @functools.cached_property
  def ambient(self) -> HermiteBasis:
    """ The lattice of all invariant vectors of the ghost ring. """

    return hermite_basis([self.ring.coordinates(v) for v in self.ring.ambient_generators], self.ring.coordinate_count)

  def cokernel_invariants(self) -> list[int]:
    """ The invariant factors of this lattice inside the lattice of invariant ghost vectors. """

    columns = []
    for column in self._columns:
      coords = self.ambient.solve(column)
      if coords is None:
        raise TheoryViolation(f'a generator of the {self.tag} lattice is not invariant', witness=column)
      columns.append(coords)
    return invariant_factors(columns, self.ambient.rank)

  def to_json(self) -> dict[str, t.Any]:
    return {
      'tag': self.tag,
      'group': self.group.name,
      'p': self.ring.p,
      'e': self.ring.value_order,
      'rank': self.rank,
      'basis': [v.to_json()['entries'] for v in self.basis()],
    }


@dataclasses.dataclass(frozen=True)
class RingElement:
  """ A lattice member together with its coordinates against the Hermite basis. """

  lattice: Lattice = dataclasses.field(compare=False)
  ghost: GhostVector
  coordinates: tuple[int, ...] = dataclasses.field(compare=False)

  def _other(self, other: RingElement) -> GhostVector:
    if other.lattice is not self.lattice:
      raise GhostMismatch(f'elements of {self.lattice!r} and {other.lattice!r} do not mix')
    return other.ghost

  def __add__(self, other: RingElement) -> RingElement:
    return self.lattice.element(self.ghost + self._other(other))

  def __sub__(self, other: RingElement) -> RingElement:
    return self.lattice.element(self.ghost - self._other(other))

  def __neg__(self) -> RingElement:
    return self.lattice.element(-self.ghost)

  def __mul__(self, other: RingElement) -> RingElement:
    return self.lattice.element(self.ghost * self._other(other))

  def dual(self) -> RingElement:
    return self.lattice.element(self.ghost.dual())


def marks(X: GSet) -> GhostVector:
  """ `[X] ↦ (|X^S|)_S`. """

  return ghost_ring('B', X.group).vector(X.mark_vector)


def table_of_marks(G: Group) -> tuple[list[Subgroup], list[list[int]]]:
  """ Returns the subgroup class representatives and the matrix `|(G/S)^T|` with rows `S` and columns `T`. """

  reps = G.subgroups.representatives
  rows = []
  for S in reps:
    vector = GSet.cosets(G, S).mark_vector
    rows.append([vector[T.index] for T in reps])
  return reps, rows


@functools.lru_cache(maxsize=None)
def burnside_lattice(G: Group) -> Lattice:
  reps = G.subgroups.representatives
  return Lattice(ghost_ring('B', G), [marks(GSet.cosets(G, S)) for S in reps], [f'{G.name}/{S.name}' for S in reps])


def left_coset_representatives(G: Group, S: Subgroup) -> list[int]:
  seen: set[int] = set()
  reps = []
  for g in range(G.order):
    if g not in seen:
      seen.update(G.mult[g][s] for s in S.elems)
      reps.append(g)
  return reps


def monomial_ghost_T(G: Group, p: int, S: Subgroup, psi: LinearCharacter, e: int | None = None) -> GhostVector:
  """ The ghost vector of the monomial module `Ind_S^G(F_ψ)`: at `(E, t·O_p(E))` the sum of `ψ(g⁻¹tg)` over the
  cosets `gS` fixed by E. """

  if psi.order % p == 0:
    raise ValueError(f'the linear character of {S.name} has order {psi.order}, divisible by p={p}')
  ring = ghost_ring('T', G, p, e)
  h = ring.value_order
  cosets = left_coset_representatives(G, S)

  def value(position: int) -> CycInt:
    pair = ring.pairs[position]
    total = CycInt.zero(h)
    for g in cosets:
      g_inv = G.inverse(g)
      if all(G.mul(g_inv, x, g) in S for x in pair.E.generators):
        total = total + psi.value(G.mul(g_inv, pair.s, g), h)
    return total

  return ring.from_function(value)


@functools.lru_cache(maxsize=None)
def trivial_source_lattice(G: Group, p: int, e: int | None = None) -> Lattice:
  ring = ghost_ring('T', G, p, e)
  generators, labels = [], []
  for S in G.subgroups.representatives:
    for k, psi in enumerate(linear_characters(S, ring.e)):
      if psi.order % p:
        generators.append(monomial_ghost_T(G, p, S, psi, ring.e))
        labels.append(f'{S.name}:ψ{k}')
  return Lattice(ring, generators, labels)


def induced_character(G: Group, S: Subgroup, psi: LinearCharacter, e: int | None = None) -> GhostVector:
  """ `Ind_S^G ψ` as an R_K ghost vector. """

  ring = ghost_ring('RK', G, None, e)

  def value(x: int) -> CycInt:
    total = CycInt.zero(ring.value_order)
    for g in range(G.order):
      y = G.mul(G.inverse(g), x, g)
      if y in S:
        total = total + psi.value(y, ring.value_order)
    return total.exact_divide(S.order)

  return ring.from_function(value)


@functools.lru_cache(maxsize=None)
def character_lattice_RK(G: Group, e: int | None = None) -> Lattice:
  ring = ghost_ring('RK', G, None, e)
  generators, labels = [], []
  for S in G.subgroups.representatives:
    if S.is_elementary():
      for k, psi in enumerate(linear_characters(S, ring.e)):
        generators.append(induced_character(G, S, psi, ring.e))
        labels.append(f'{S.name}:ψ{k}')
  return Lattice(ring, generators, labels)


@functools.lru_cache(maxsize=None)
def brauer_lattice_RF(G: Group, p: int, e: int | None = None) -> Lattice:
  source = character_lattice_RK(G, G.exponent if e is None else e)
  ring = ghost_ring('RF', G, p, source.ring.e)
  return Lattice(ring, [tilde_d(v, p) for v in source.generators], source.labels)


def lattice(tag: str, G: Group, p: int | None = None, e: int | None = None) -> Lattice:
  """ The lattice of one ring. Equal parameters give the identical lattice, with *e* defaulting to the exponent. """

  e = G.exponent if e is None else e
  if tag == 'B':
    return burnside_lattice(G)
  if tag == 'RK':
    return character_lattice_RK(G, e)
  if p is None:
    raise GhostMismatch(f'the {tag} lattice needs a prime')
  if tag == 'T':
    return trivial_source_lattice(G, p, e)
  if tag == 'RF':
    return brauer_lattice_RF(G, p, e)
  raise GhostMismatch(f'unknown ring tag {tag!r}')


def lattice_of(ring: GhostRing) -> Lattice:
  return lattice(ring.tag, ring.group, ring.p, ring.e)


CONNECTING_MAPS = {'l': ('B', 'T'), 'b': ('T', 'RF'), 'c': ('T', 'RK'), 'd': ('RK', 'RF')}


def connect(map_tag: str, x: RingElement, p: int | None = None) -> RingElement:
  """ Apply one of the maps `l: B → T`, `b: T → R_F`, `c: T → R_K` or `d: R_K → R_F` to a ring element. The image
  is checked for membership in the codomain lattice. """

  if map_tag not in CONNECTING_MAPS:
    raise ValueError(f'unknown connecting map {map_tag!r}')
  source_tag, target_tag = CONNECTING_MAPS[map_tag]
  ring = x.lattice.ring
  if ring.tag != source_tag:
    raise GhostMismatch(f'{map_tag} expects a {source_tag} element, got {ring.tag}')
  p = ring.p if p is None else p
  if p is None:
    raise GhostMismatch(f'the map {map_tag} needs a prime')
  if map_tag == 'l':
    image = tilde_l(x.ghost, p)
  elif map_tag == 'b':
    image = tilde_b(x.ghost)
  elif map_tag == 'c':
    image = tilde_c(x.ghost)
  else:
    image = tilde_d(x.ghost, p)
  return lattice(target_tag, ring.group, p, ring.e).element(image)
