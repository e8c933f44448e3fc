""" Torsion units of the ghost rings and orthogonal units of the representation rings. """

from __future__ import annotations

import dataclasses
import functools
import itertools
import logging
import math
import typing as t

from repring.config import current_settings
from repring.cyclotomic import CycInt, GaloisElt, embed, galois, signed_roots
from repring.ghost import GhostMismatch, GhostRing, GhostVector, ghost_ring, tilde_d
from repring.groups import Group, linear_characters, p_parts
from repring.lattices import Lattice, RingElement, TheoryViolation, lattice
from repring.teninduct import tilde_U

if t.TYPE_CHECKING:
  from repring.gsets import VirtualBiset

logger = logging.getLogger(__name__)


class EnumerationCapExceeded(RuntimeError):

  def __init__(self, cap: int, count: int) -> None:
    self.cap = cap
    self.count = count

  def __str__(self) -> str:
    return f'{self.count} unit candidates exceed the enumeration cap of {self.cap}'


@dataclasses.dataclass(frozen=True)
class UnitElement:
  """ A ghost vector of signed roots of unity. *lattice* is set when the vector is known to lie in the lattice of
  its ring; equality only looks at the ghost vector. """

  ghost: GhostVector
  lattice: Lattice | None = dataclasses.field(default=None, compare=False, repr=False)

  def __mul__(self, other: UnitElement) -> UnitElement:
    return UnitElement(self.ghost * other.ghost, self.lattice)

  def inverse(self) -> UnitElement:
    return UnitElement(self.ghost.inverse(), self.lattice)

  def dual(self) -> UnitElement:
    return UnitElement(self.ghost.dual(), self.lattice)

  def is_orthogonal(self) -> bool:
    """ True if `u · u° = 1`. """

    return self.ghost * self.ghost.dual() == self.ghost.ring.one()

  @property
  def order(self) -> int:
    one = self.ghost.ring.one()
    power, n = self.ghost, 1
    while power != one:
      power = power * self.ghost
      n += 1
    return n

  def element(self) -> RingElement:
    if self.lattice is None:
      raise ValueError('the unit is not attached to a lattice')
    return self.lattice.element(self.ghost)

  def to_json(self) -> dict[str, t.Any]:
    return {**self.ghost.to_json(), 'order': self.order, 'orthogonal': self.is_orthogonal()}


class UnitGroup:
  """ A finite group of units, closed under multiplication. """

  def __init__(self, ring: GhostRing, elements: t.Sequence[UnitElement], lattice: Lattice | None = None) -> None:
    self.ring = ring
    self.elements = list(elements)
    self.lattice = lattice
    self._index = {u.ghost: i for i, u in enumerate(self.elements)}

  def __repr__(self) -> str:
    where = 'lattice' if self.lattice is not None else 'ghost ring'
    return f'UnitGroup({self.ring!r}, {where}, order={self.order})'

  def __len__(self) -> int:
    return len(self.elements)

  def __iter__(self) -> t.Iterator[UnitElement]:
    return iter(self.elements)

  def __contains__(self, u: UnitElement) -> bool:
    return u.ghost in self._index

  @property
  def order(self) -> int:
    return len(self.elements)

  def index(self, u: UnitElement) -> int:
    return self._index[u.ghost]

  @functools.cached_property
  def table(self) -> list[list[int]]:
    """ The multiplication table by element index. Raises #TheoryViolation if the set is not closed. """

    table = []
    for a in self.elements:
      row = []
      for b in self.elements:
        product = (a * b).ghost
        if product not in self._index:
          raise TheoryViolation(f'{self!r} is not closed under multiplication', witness=product.render())
        row.append(self._index[product])
      table.append(row)
    return table

  def element_order(self, u: UnitElement) -> int:
    return u.order

  @property
  def exponent(self) -> int:
    return functools.reduce(math.lcm, (u.order for u in self.elements), 1)

  def is_elementary_abelian_2(self) -> bool:
    one = self.ring.one()
    return all((u * u).ghost == one for u in self.elements)

  def as_set(self) -> frozenset[GhostVector]:
    return frozenset(self._index)

  def to_json(self) -> dict[str, t.Any]:
    return {
      'tag': self.ring.tag,
      'group': self.ring.group.name,
      'p': self.ring.p,
      'order': self.order,
      'exponent': self.exponent,
      'units': [u.to_json() for u in self.elements],
    }


def _candidates(ring: GhostRing) -> list[list[CycInt]]:
  m = ring.value_order
  result = []
  for block in ring.galois_blocks:
    result.append([z for z in signed_roots(m) if all(galois(GaloisElt(m, i), z) == z for i in block.stabilizer)])
  return result


def ghost_torsion_units(tag: str, G: Group, p: int | None = None, e: int | None = None,
    cap: int | None = None) -> UnitGroup:
  """ All invariant vectors of signed roots of unity, enumerated block by block over the Galois orbits of
  conjugation orbits. """

  ring = ghost_ring(tag, G, p, e)
  cap = current_settings().enumeration_cap if cap is None else cap
  candidates = _candidates(ring)
  count = math.prod(len(c) for c in candidates)
  if count > cap:
    raise EnumerationCapExceeded(cap, count)
  logger.debug('enumerating %d torsion unit candidates of %r', count, ring)
  blocks = [block.orbit for block in ring.galois_blocks]
  elements = [UnitElement(ring.extend(dict(zip(blocks, choice)))) for choice in itertools.product(*candidates)]
  return UnitGroup(ring, elements)


def orthogonal_units(tag: str, G: Group, p: int | None = None, e: int | None = None,
    cap: int | None = None) -> UnitGroup:
  """ The torsion units of the representation ring: the torsion units of the ghost ring that lie in the lattice.
  Every one of them is checked to be orthogonal. """

  units = ghost_torsion_units(tag, G, p, e, cap)
  L = lattice(tag, G, units.ring.p, units.ring.e)
  elements = []
  for u in units:
    if L.membership(u.ghost) is None:
      continue
    if not u.is_orthogonal():
      raise TheoryViolation('a torsion unit of finite order is not orthogonal', witness=u.ghost.render())
    elements.append(UnitElement(u.ghost, L))
  return UnitGroup(units.ring, elements, L)


def yamauchi_set(G: Group, e: int | None = None) -> UnitGroup:
  """ `{±χ : χ a linear character of G}` in the character ring. """

  ring = ghost_ring('RK', G, None, e)
  L = lattice('RK', G, None, ring.e)
  elements = []
  for sign in (1, -1):
    for chi in linear_characters(G, ring.e):
      v = ring.from_function(lambda x: chi.value(x, ring.value_order) * sign)
      elements.append(UnitElement(v, L))
  return UnitGroup(ring, elements, L)


def orthbra_set(G: Group, p: int, e: int | None = None) -> UnitGroup:
  """ The restrictions of `±χ` to p-regular elements, without repetitions. """

  source = yamauchi_set(G, e)
  ring = ghost_ring('RF', G, p, source.ring.e)
  L = lattice('RF', G, p, ring.e)
  elements: list[UnitElement] = []
  for u in source:
    v = UnitElement(tilde_d(u.ghost, p), L)
    if v not in elements:
      elements.append(v)
  return UnitGroup(ring, elements, L)


def brauer_lift_ghost(a: GhostVector) -> GhostVector:
  """ `m_G(ψ)(x) = ψ(x_{p'})`. """

  ring = a.ring
  if ring.tag != 'RF':
    raise ValueError(f'expected an RF vector, got {ring.tag}')
  G, p = ring.group, ring.p
  assert p is not None
  target = ghost_ring('RK', G, None, ring.e)
  return target.from_function(
    lambda x: embed(a[ring.position_of[p_parts(G, x, p)[1]]], target.value_order))


def brauer_lift(a: RingElement) -> RingElement:
  ring = a.lattice.ring
  return lattice('RK', ring.group, None, ring.e).element(brauer_lift_ghost(a.ghost))


def apply_unit_functor(a: VirtualBiset, u: UnitElement, tag: str | None = None) -> UnitElement:
  """ `R(a)^×(u) = R(U)(u) · R(U')(u)^{-1}` for `a = [U] - [U']`. If *u* lies in its lattice, so must the image.
  The ring is that of *u*; passing *tag* asserts which ring that is. """

  if tag is not None and tag != u.ghost.ring.tag:
    raise GhostMismatch(f'expected a {tag} unit, got {u.ghost.ring.tag}')
  plus = tilde_U(a.plus, u.ghost)
  minus = tilde_U(a.minus, u.ghost)
  image = plus * minus.inverse()
  if u.lattice is None:
    return UnitElement(image)
  ring = image.ring
  target = lattice(ring.tag, ring.group, ring.p, ring.e)
  if target.membership(image) is None:
    raise TheoryViolation(f'the unit functor left the {ring.tag} lattice of {ring.group.name}',
      witness=image.render())
  return UnitElement(image, target)
