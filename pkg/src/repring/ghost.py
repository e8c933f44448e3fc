""" Ghost rings: products of cyclotomic integer rings over an index family, restricted to the vectors invariant
under conjugation and the Galois action.

| Tag  | Index family                   | Values         |
| ---- | ------------------------------ | -------------- |
| `B`  | subgroups                      | Z              |
| `T`  | p-hypo-elementary pairs (E, c) | Z[ζ_h]         |
| `RK` | elements                       | Z[ζ_e]         |
| `RF` | p-regular elements             | Z[ζ_h]         |

Here `e` is a multiple of the group exponent and `h` its p'-part. A ghost vector holds a value for every index,
not just for orbit representatives.
"""

from __future__ import annotations

import dataclasses
import functools
import logging
import random
import typing as t

from repring.cyclotomic import CycInt, GaloisElt, contract, embed, euler_phi, galois, root, units_mod
from repring.groups import Group, p_part

logger = logging.getLogger(__name__)

TAGS = ('B', 'T', 'RK', 'RF')


class GhostMismatch(ValueError):
  pass


class InvarianceReport(t.NamedTuple):
  ok: bool
  witness: str | None = None

  def __bool__(self) -> bool:
    return self.ok


class GaloisBlock(t.NamedTuple):

  #: The conjugation orbit representing the block.
  orbit: int

  #: The units `i` with `k^i` in the same conjugation orbit as `k`.
  stabilizer: tuple[int, ...]

  #: Maps every unit `i` to the conjugation orbit of `k^i`.
  targets: t.Mapping[int, int]


class GhostRing:
  """ The ghost ring of one tag over a group, for a fixed prime *p* (T and RF only) and cyclotomic order *e*.
  Obtain instances through #ghost_ring() so that equal parameters give the identical object. """

  def __init__(self, tag: str, group: Group, p: int | None, e: int) -> None:
    if tag not in TAGS:
      raise GhostMismatch(f'unknown ring tag {tag!r}')
    if tag in ('T', 'RF') and p is None:
      raise GhostMismatch(f'the {tag} ghost ring needs a prime')
    if e % group.exponent:
      raise GhostMismatch(f'e={e} is not a multiple of the exponent {group.exponent} of {group.name}')
    self.tag = tag
    self.group = group
    self.p = p
    self.e = e

    #: The order of the cyclotomic ring the values live in.
    self.value_order = 1 if tag == 'B' else e if tag == 'RK' else e // p_part(e, p)  # type: ignore

    if tag == 'B':
      self.size = len(group.subgroups)
      orbits = [list(cls) for cls in group.subgroups.classes]
    elif tag == 'RK':
      self.size = group.order
      orbits = [list(cls) for cls in group.conjugacy_classes]
    elif tag == 'RF':
      self.elements = group.p_regular_elements(p)  # type: ignore
      self.position_of = {y: i for i, y in enumerate(self.elements)}
      self.size = len(self.elements)
      orbits = [[self.position_of[y] for y in cls] for cls in group.conjugacy_classes if cls[0] in self.position_of]
    else:
      self.pairs = group.hypo_pairs(p)  # type: ignore
      self.size = len(self.pairs)
      orbits = [list(o) for o in self.pairs.orbits]

    #: Conjugation orbits of index positions, ordered by their smallest position.
    self.orbits: list[list[int]] = sorted(orbits)
    self.orbit_of: list[int] = [0] * self.size
    for i, orbit in enumerate(self.orbits):
      for k in orbit:
        self.orbit_of[k] = i

  def __repr__(self) -> str:
    p = f', p={self.p}' if self.p is not None else ''
    return f'GhostRing({self.tag}, {self.group.name}{p}, e={self.e})'

  @property
  def rank(self) -> int:
    return len(self.orbits)

  @property
  def galois_units(self) -> tuple[int, ...]:
    return units_mod(self.value_order)

  # Index family

  def conjugate(self, position: int, g: int) -> int:
    G = self.group
    if self.tag == 'B':
      return G.subgroups[position].conjugate(g).index
    if self.tag == 'RK':
      return G.conj(g, position)
    if self.tag == 'RF':
      return self.position_of[G.conj(g, self.elements[position])]
    return self.pairs.conjugate(position, g)

  def power(self, position: int, i: int) -> int:
    """ The index `k^i` of the Galois action: `S` for subgroups, `x^i` for elements, `(E, c^i)` for pairs. """

    G = self.group
    if self.tag == 'B':
      return position
    if self.tag == 'RK':
      return G.power(position, i)
    if self.tag == 'RF':
      return self.position_of[G.power(self.elements[position], i)]
    return self.pairs.power(position, i)

  def render_index(self, position: int) -> str:
    G = self.group
    if self.tag == 'B':
      return G.subgroups[position].name
    if self.tag == 'RK':
      return G.render(position)
    if self.tag == 'RF':
      return G.render(self.elements[position])
    return self.pairs[position].render()

  def index_key(self, position: int) -> t.Any:
    """ A JSON compatible description of an index. """

    if self.tag == 'B':
      return list(self.group.subgroups[position].elems)
    if self.tag == 'RK':
      return position
    if self.tag == 'RF':
      return self.elements[position]
    pair = self.pairs[position]
    return {'E': list(pair.E.elems), 's': pair.s}

  # Vectors

  def vector(self, values: t.Iterable[CycInt | int]) -> GhostVector:
    m = self.value_order
    converted = tuple(CycInt.integer(m, v) if isinstance(v, int) else v for v in values)
    if len(converted) != self.size:
      raise GhostMismatch(f'{self!r} needs {self.size} values, got {len(converted)}')
    for v in converted:
      if v.e != m:
        raise GhostMismatch(f'{self!r} stores values over e={m}, got e={v.e}')
    return GhostVector(self, converted)

  def from_function(self, func: t.Callable[[int], CycInt | int]) -> GhostVector:
    return self.vector(func(k) for k in range(self.size))

  def constant(self, n: int) -> GhostVector:
    return self.vector([n] * self.size)

  def zero(self) -> GhostVector:
    return self.constant(0)

  def one(self) -> GhostVector:
    return self.constant(1)

  # Coordinates

  @property
  def coordinate_count(self) -> int:
    return self.rank * euler_phi(self.value_order)

  def coordinates(self, v: GhostVector) -> list[int]:
    """ Flattened integer coordinates: the coefficients of the value at the first index of every orbit. """

    self.check(v)
    result: list[int] = []
    for orbit in self.orbits:
      result.extend(v.values[orbit[0]].coeffs)
    return result

  def from_coordinates(self, coords: t.Sequence[int]) -> GhostVector:
    width = euler_phi(self.value_order)
    values: list[CycInt] = [CycInt.zero(self.value_order)] * self.size
    for i, orbit in enumerate(self.orbits):
      value = CycInt(self.value_order, tuple(int(c) for c in coords[i * width:(i + 1) * width]))
      for k in orbit:
        values[k] = value
    return GhostVector(self, tuple(values))

  @functools.cached_property
  def galois_blocks(self) -> list[GaloisBlock]:
    """ The Galois orbits of conjugation orbits. An invariant vector is determined by its values at the block
    representatives, and each such value is fixed by the block's stabilizer. """

    units = self.galois_units
    blocks = []
    handled: set[int] = set()
    for o, orbit in enumerate(self.orbits):
      if o in handled:
        continue
      targets = {i: self.orbit_of[self.power(orbit[0], i)] for i in units}
      handled.update(targets.values())
      blocks.append(GaloisBlock(o, tuple(i for i in units if targets[i] == o), targets))
    return blocks

  def extend(self, values: t.Mapping[int, CycInt]) -> GhostVector:
    """ The invariant vector with the given values at the representatives of the Galois blocks. """

    m = self.value_order
    result = [CycInt.zero(m)] * self.size
    for block in self.galois_blocks:
      w = values[block.orbit]
      by_orbit: dict[int, CycInt] = {}
      for i, target in block.targets.items():
        by_orbit.setdefault(target, galois(GaloisElt(m, i), w))
      for target, value in by_orbit.items():
        for position in self.orbits[target]:
          result[position] = value
    return GhostVector(self, tuple(result))

  @functools.cached_property
  def ambient_generators(self) -> list[GhostVector]:
    """ A Z-spanning set of the invariant vectors: for every Galois block, the extensions of the Galois orbit sums
    of roots of unity under the block's stabilizer. """

    m = self.value_order
    generators = []
    for block in self.galois_blocks:
      sums: list[CycInt] = []
      for j in range(m):
        w = CycInt.zero(m)
        for x in sorted({(j * i) % m for i in block.stabilizer}):
          w = w + root(m, x)
        if w not in sums:
          sums.append(w)
      zeros = {other.orbit: CycInt.zero(m) for other in self.galois_blocks}
      for w in sums:
        generators.append(self.extend({**zeros, block.orbit: w}))
    return generators

  def random_vector(self, rng: random.Random, bound: int = 2) -> GhostVector:
    """ A random invariant vector: a combination of the ambient generators with coefficients in `[-bound, bound]`. """

    result = self.zero()
    for generator in self.ambient_generators:
      c = rng.randint(-bound, bound)
      if c:
        result = result + generator * c
    return result

  # Invariance

  def check(self, v: GhostVector) -> None:
    if v.ring is not self:
      raise GhostMismatch(f'vector of {v.ring!r} used with {self!r}')

  def validate(self, v: GhostVector) -> InvarianceReport:
    """ Exact check of the conjugation and Galois invariance `v[k^i] = γ_i(v[k])`. """

    self.check(v)
    m = self.value_order
    for k, value in enumerate(v.values):
      if value.e != m:
        return InvarianceReport(False, f'value at {self.render_index(k)} has order {value.e}, expected {m}')
      for g in self.group.generators:
        other = self.conjugate(k, g)
        if v.values[other] != value:
          return InvarianceReport(False, f'values at {self.render_index(k)} and its conjugate '
            f'{self.render_index(other)} differ')
      for i in self.galois_units:
        other = self.power(k, i)
        if v.values[other] != galois(GaloisElt(m, i), value):
          return InvarianceReport(False, f'value at {self.render_index(other)} is not γ_{i} of the value at '
            f'{self.render_index(k)}')
    return InvarianceReport(True)


def ghost_ring(tag: str, group: Group, p: int | None = None, e: int | None = None) -> GhostRing:
  """ The ghost ring for the given parameters. Equal parameters, after dropping *p* for B and RK and defaulting *e*
  to the group exponent, give the identical object. The Burnside ghost ring always has `e = exp(G)`. """

  if e is None or tag == 'B':
    e = group.exponent
  return _ghost_ring(tag, group, None if tag in ('B', 'RK') else p, e)


@functools.lru_cache(maxsize=None)
def _ghost_ring(tag: str, group: Group, p: int | None, e: int) -> GhostRing:
  return GhostRing(tag, group, p, e)


@dataclasses.dataclass(frozen=True)
class GhostVector:
  """ An element of a ghost ring, one value per index position. """

  ring: GhostRing
  values: tuple[CycInt, ...]

  def __getitem__(self, position: int) -> CycInt:
    return self.values[position]

  def __len__(self) -> int:
    return len(self.values)

  def _other(self, other: GhostVector) -> GhostVector:
    if not isinstance(other, GhostVector) or other.ring is not self.ring:
      raise GhostMismatch(f'can not combine vectors of {self.ring!r} and {getattr(other, "ring", other)!r}')
    return other

  def __add__(self, other: GhostVector) -> GhostVector:
    other = self._other(other)
    return GhostVector(self.ring, tuple(a + b for a, b in zip(self.values, other.values)))

  def __sub__(self, other: GhostVector) -> GhostVector:
    other = self._other(other)
    return GhostVector(self.ring, tuple(a - b for a, b in zip(self.values, other.values)))

  def __neg__(self) -> GhostVector:
    return GhostVector(self.ring, tuple(-a for a in self.values))

  def __mul__(self, other: GhostVector | int) -> GhostVector:
    if isinstance(other, int):
      return GhostVector(self.ring, tuple(a * other for a in self.values))
    other = self._other(other)
    return GhostVector(self.ring, tuple(a * b for a, b in zip(self.values, other.values)))

  __rmul__ = __mul__

  def __pow__(self, n: int) -> GhostVector:
    return GhostVector(self.ring, tuple(a ** n for a in self.values))

  def inverse(self) -> GhostVector:
    """ The inverse of a vector of signed roots of unity. """

    return GhostVector(self.ring, tuple(a.inverse() for a in self.values))

  def dual(self) -> GhostVector:
    return dual(self)

  def is_zero(self) -> bool:
    return not any(self.values)

  def validate(self) -> InvarianceReport:
    return self.ring.validate(self)

  def to_json(self) -> dict[str, t.Any]:
    ring = self.ring
    return {
      'tag': ring.tag,
      'group': ring.group.name,
      'p': ring.p,
      'e': ring.value_order,
      'entries': [{'index': ring.index_key(k), 'value': list(v.coeffs)} for k, v in enumerate(self.values)],
    }

  def render(self) -> str:
    return ', '.join(f'{self.ring.render_index(k)}: {v.render()}' for k, v in enumerate(self.values))


def validate_invariance(v: GhostVector) -> InvarianceReport:
  return v.ring.validate(v)


def dual(v: GhostVector) -> GhostVector:
  """ Coefficientwise `γ_{-1}`; the identity on B. """

  if v.ring.tag == 'B':
    return v
  return GhostVector(v.ring, tuple(a.dual() for a in v.values))


def _require(v: GhostVector, tag: str) -> None:
  if v.ring.tag != tag:
    raise GhostMismatch(f'expected a {tag} vector, got {v.ring.tag}')


def tilde_l(a: GhostVector, p: int, e: int | None = None) -> GhostVector:
  """ `(n_S) ↦ (n_E)_{(E, c)}` from B̃ to T̃. The target order *e* defaults to the exponent of the group. """

  _require(a, 'B')
  target = ghost_ring('T', a.ring.group, p, a.ring.e if e is None else e)
  h = target.value_order
  return target.vector(embed(a.values[pair.E.index], h) for pair in target.pairs)


def tilde_b(a: GhostVector) -> GhostVector:
  """ `(z_{(E, c)}) ↦ (z_{(<y>, y)})_y` from T̃ to R̃_F. """

  _require(a, 'T')
  G = a.ring.group
  target = ghost_ring('RF', G, a.ring.p, a.ring.e)
  pairs = a.ring.pairs
  return target.vector(
    a.values[pairs.lookup(G.subgroups.lookup(G.cyclic_subgroups[y]), y)] for y in target.elements)


def tilde_c(a: GhostVector) -> GhostVector:
  """ `(z_{(E, c)}) ↦ (z_{(<x>, x<x_p>)})_x` from T̃ to R̃_K. """

  _require(a, 'T')
  G = a.ring.group
  target = ghost_ring('RK', G, None, a.ring.e)
  pairs = a.ring.pairs
  return target.vector(
    embed(a.values[pairs.lookup(G.subgroups.lookup(G.cyclic_subgroups[x]), x)], target.value_order)
    for x in range(G.order))


def tilde_d(a: GhostVector, p: int) -> GhostVector:
  """ Restriction to p-regular elements, from R̃_K to R̃_F. Raises #repring.cyclotomic.NotInSubring if a value
  at a p-regular element does not lie in Z[ζ_h]. """

  _require(a, 'RK')
  target = ghost_ring('RF', a.ring.group, p, a.ring.e)
  return target.vector(contract(a.values[y], target.value_order) for y in target.elements)
