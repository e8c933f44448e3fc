""" Finite groups given by multiplication tables, their subgroups and the index families for the ghost rings.

Groups are built from permutation generators; elements are numbered in breadth-first order over words in the
generators, so the identity always has index 0. Subgroups are stored as sorted tuples of element indices and are
unique per group: every #Subgroup instance comes out of the group's #SubgroupTable.
"""

from __future__ import annotations

import dataclasses
import functools
import itertools
import logging
import math
import random
import typing as t

from repring.cyclotomic import CycInt, OrderMismatch, root

logger = logging.getLogger(__name__)

#: A permutation of `range(degree)` as the tuple of images.
Permutation = t.Tuple[int, ...]

#: Groups up to this order have associativity checked on all triples.
FULL_ASSOCIATIVITY_CHECK = 64


class GroupOrderCapExceeded(ValueError):

  def __init__(self, cap: int, reached: int) -> None:
    self.cap = cap
    self.reached = reached

  def __str__(self) -> str:
    return f'group order exceeds the cap of {self.cap} (reached {self.reached} elements); raise it with --cap ' \
      'or REPRING_CAP'


class InvalidPermutation(ValueError):
  pass


def permutation_from_cycles(degree: int, cycles: t.Sequence[t.Sequence[int]]) -> Permutation:
  """ Convert 1-based cycles into a 0-based image tuple. Cycles must be disjoint. """

  images = list(range(degree))
  seen: set[int] = set()
  for cycle in cycles:
    for point in cycle:
      if not 1 <= point <= degree:
        raise InvalidPermutation(f'point {point} is outside of 1..{degree}')
      if point in seen:
        raise InvalidPermutation(f'point {point} appears twice in {cycles!r}')
      seen.add(point)
    for a, b in zip(cycle, list(cycle[1:]) + list(cycle[:1])):
      images[a - 1] = b - 1
  return tuple(images)


def render_permutation(perm: Permutation) -> str:
  seen: set[int] = set()
  cycles = []
  for start in range(len(perm)):
    if start in seen or perm[start] == start:
      continue
    cycle, point = [], start
    while point not in seen:
      seen.add(point)
      cycle.append(point + 1)
      point = perm[point]
    cycles.append('(' + ' '.join(map(str, cycle)) + ')')
  return ''.join(cycles) or '()'


def p_part(n: int, p: int) -> int:
  """ The largest power of *p* dividing *n*. """

  result = 1
  while n % p == 0:
    n //= p
    result *= p
  return result


def _closure(mult: t.Sequence[t.Sequence[int]], start: t.Iterable[int], gens: t.Sequence[int]) -> frozenset[int]:
  elements = set(start) | {0}
  frontier = list(elements)
  while frontier:
    following = []
    for a in frontier:
      for g in gens:
        b = mult[a][g]
        if b not in elements:
          elements.add(b)
          following.append(b)
    frontier = following
  return frozenset(elements)


class Group:
  """ A finite group as a multiplication table. `mult[a][b]` is the index of the product `a·b`. """

  def __init__(
    self,
    name: str,
    mult: t.Sequence[t.Sequence[int]],
    generators: t.Sequence[int] | None = None,
    perms: t.Sequence[Permutation] | None = None,
    parent: Group | None = None,
    embedding: t.Sequence[int] | None = None,
  ) -> None:
    self.name = name
    self.mult: tuple[tuple[int, ...], ...] = tuple(tuple(row) for row in mult)
    self.order = len(self.mult)

    #: The identity is always the element with index 0.
    self.identity = 0

    inv = [0] * self.order
    for a in range(self.order):
      row = self.mult[a]
      inv[a] = row.index(0)
    self.inv: tuple[int, ...] = tuple(inv)

    #: The permutations realizing the elements, if the group was built from permutations.
    self.perms: tuple[Permutation, ...] | None = tuple(perms) if perms is not None else None

    #: For groups realizing a subgroup or quotient of another group, that group and the map into/from it.
    self.parent = parent
    self.embedding: tuple[int, ...] | None = tuple(embedding) if embedding is not None else None

    if generators is None:
      generators = self._minimal_generators(range(self.order))
    self.generators: tuple[int, ...] = tuple(generators)

    self._realizations: dict[tuple[int, ...], Group] = {}
    self._quotients: dict[tuple[int, ...], tuple[Group, tuple[int, ...]]] = {}
    self._hypo_tables: dict[int, HypoPairTable] = {}
    self._validate()

  def __repr__(self) -> str:
    return f'Group({self.name!r}, order={self.order})'

  def _validate(self) -> None:
    if any(self.mult[0][a] != a or self.mult[a][0] != a for a in range(self.order)):
      raise ValueError(f'element 0 of {self.name} is not the identity')
    if self.order <= FULL_ASSOCIATIVITY_CHECK:
      triples: t.Iterable[tuple[int, int, int]] = itertools.product(range(self.order), repeat=3)
    else:
      rng = random.Random(self.order)
      triples = [tuple(rng.randrange(self.order) for _ in range(3)) for _ in range(4096)]  # type: ignore
    mult = self.mult
    for a, b, c in triples:
      if mult[mult[a][b]][c] != mult[a][mult[b][c]]:
        raise ValueError(f'multiplication table of {self.name} is not associative at {(a, b, c)}')

  def _minimal_generators(self, elements: t.Iterable[int]) -> list[int]:
    gens: list[int] = []
    current = frozenset([0])
    for x in sorted(elements):
      if x not in current:
        gens.append(x)
        current = _closure(self.mult, current, gens)
    return gens

  # Element arithmetic

  def mul(self, *elements: int) -> int:
    result = 0
    for x in elements:
      result = self.mult[result][x]
    return result

  def inverse(self, x: int) -> int:
    return self.inv[x]

  def power(self, x: int, k: int) -> int:
    if k < 0:
      x, k = self.inv[x], -k
    k %= self.element_orders[x]
    result = 0
    for _ in range(k):
      result = self.mult[result][x]
    return result

  def conj(self, g: int, x: int) -> int:
    """ The left conjugate `g·x·g⁻¹`. """

    return self.mult[self.mult[g][x]][self.inv[g]]

  def generated(self, gens: t.Iterable[int]) -> frozenset[int]:
    return _closure(self.mult, [0], list(gens))

  def render(self, x: int) -> str:
    if self.perms is not None:
      return render_permutation(self.perms[x])
    return f'g{x}'

  @functools.cached_property
  def element_orders(self) -> tuple[int, ...]:
    orders = []
    for x in range(self.order):
      k, y = 1, x
      while y != 0:
        y = self.mult[y][x]
        k += 1
      orders.append(k)
    return tuple(orders)

  @functools.cached_property
  def exponent(self) -> int:
    return functools.reduce(math.lcm, self.element_orders, 1)

  @functools.cached_property
  def conjugacy_classes(self) -> tuple[tuple[int, ...], ...]:
    """ Conjugacy classes of elements, each sorted, ordered by their smallest element. """

    seen: set[int] = set()
    classes = []
    for x in range(self.order):
      if x in seen:
        continue
      orbit = {x}
      frontier = [x]
      while frontier:
        following = []
        for y in frontier:
          for g in self.generators:
            z = self.conj(g, y)
            if z not in orbit:
              orbit.add(z)
              following.append(z)
        frontier = following
      seen |= orbit
      classes.append(tuple(sorted(orbit)))
    return tuple(classes)

  def centralizer(self, x: int) -> Subgroup:
    return self.subgroups.lookup(g for g in range(self.order) if self.mult[g][x] == self.mult[x][g])

  @functools.cached_property
  def class_of(self) -> tuple[int, ...]:
    result = [0] * self.order
    for i, cls in enumerate(self.conjugacy_classes):
      for x in cls:
        result[x] = i
    return tuple(result)

  @functools.cached_property
  def cyclic_subgroups(self) -> tuple[frozenset[int], ...]:
    return tuple(self.generated([x]) for x in range(self.order))

  @functools.cached_property
  def subgroups(self) -> SubgroupTable:
    return SubgroupTable(self)

  @property
  def whole(self) -> Subgroup:
    return self.subgroups.whole

  @property
  def trivial(self) -> Subgroup:
    return self.subgroups.trivial

  @functools.cached_property
  def derived_subgroup(self) -> Subgroup:
    commutators = {self.mul(a, b, self.inv[a], self.inv[b]) for a in range(self.order) for b in self.generators}
    # The normal closure of the commutators of generators is G'.
    closure = self.generated(commutators)
    while True:
      bigger = self.generated(set(closure) | {self.conj(g, x) for g in self.generators for x in closure})
      if bigger == closure:
        break
      closure = bigger
    return self.subgroups.lookup(closure)

  def hypo_pairs(self, p: int) -> HypoPairTable:
    if p not in self._hypo_tables:
      self._hypo_tables[p] = HypoPairTable(self, p)
    return self._hypo_tables[p]

  def p_regular_elements(self, p: int) -> tuple[int, ...]:
    return tuple(x for x in range(self.order) if self.element_orders[x] % p != 0)

  def quotient(self, normal: Subgroup) -> tuple[Group, tuple[int, ...]]:
    """ The factor group by a normal subgroup together with the projection (element index to coset index). """

    if normal.parent is not self:
      raise ValueError('subgroup belongs to another group')
    if not normal.is_normal():
      raise ValueError(f'{normal} is not normal in {self.name}')
    if normal.elems not in self._quotients:
      key_of: dict[int, int] = {}
      cosets: list[int] = []
      for x in range(self.order):
        if x in key_of:
          continue
        index = len(cosets)
        cosets.append(x)
        for n in normal.elems:
          key_of[self.mult[x][n]] = index
      mult = [[key_of[self.mult[a][b]] for b in cosets] for a in cosets]
      projection = tuple(key_of[x] for x in range(self.order))
      name = f'{self.name}/{normal.name}'
      quotient = Group(name, mult, generators=sorted({projection[g] for g in self.generators} - {0}), parent=self)
      self._quotients[normal.elems] = (quotient, projection)
    return self._quotients[normal.elems]

  def realize(self, subgroup: Subgroup, name: str | None = None) -> Group:
    """ The subgroup as a group in its own right, with #Group.embedding mapping back into this group. The same
    instance is returned on every call. """

    if subgroup.elems not in self._realizations:
      local = {x: i for i, x in enumerate(subgroup.elems)}
      mult = [[local[self.mult[a][b]] for b in subgroup.elems] for a in subgroup.elems]
      perms = [self.perms[x] for x in subgroup.elems] if self.perms is not None else None
      gens = [local[g] for g in subgroup.generators]
      self._realizations[subgroup.elems] = Group(
        name or subgroup.name, mult, generators=gens, perms=perms, parent=self, embedding=subgroup.elems)
    return self._realizations[subgroup.elems]


@dataclasses.dataclass(frozen=True)
class Subgroup:
  """ A subgroup, identified by its sorted element list. """

  parent: Group = dataclasses.field(compare=False, repr=False)
  elems: tuple[int, ...]

  #: Position in the parent's #SubgroupTable.
  index: int = dataclasses.field(compare=False, default=-1)

  def __contains__(self, x: object) -> bool:
    return x in self.elem_set

  def __iter__(self) -> t.Iterator[int]:
    return iter(self.elems)

  def __len__(self) -> int:
    return len(self.elems)

  def __le__(self, other: Subgroup) -> bool:
    return self.elem_set <= other.elem_set

  @property
  def order(self) -> int:
    return len(self.elems)

  @property
  def name(self) -> str:
    if self.order == 1:
      return '1'
    if self.order == self.parent.order:
      return self.parent.name
    return f'{self.parent.name}:S{self.index}'

  @functools.cached_property
  def elem_set(self) -> frozenset[int]:
    return frozenset(self.elems)

  @functools.cached_property
  def generators(self) -> tuple[int, ...]:
    return tuple(self.parent._minimal_generators(self.elems))

  def conjugate(self, g: int) -> Subgroup:
    """ The subgroup `g·S·g⁻¹`. """

    return self.parent.subgroups.lookup(self.parent.conj(g, x) for x in self.elems)

  @functools.cached_property
  def normalizer(self) -> Subgroup:
    G = self.parent
    return G.subgroups.lookup(g for g in range(G.order) if self.conjugate(g) == self)

  def is_normal(self) -> bool:
    return all(self.conjugate(g) == self for g in self.parent.generators)

  @functools.cached_property
  def center(self) -> tuple[int, ...]:
    mult = self.parent.mult
    return tuple(z for z in self.elems if all(mult[z][g] == mult[g][z] for g in self.generators))

  def is_p_group(self, p: int) -> bool:
    return p_part(self.order, p) == self.order

  def subgroups(self) -> list[Subgroup]:
    """ All subgroups of this subgroup, in the parent's canonical order. """

    return [T for T in self.parent.subgroups.all if T.elem_set <= self.elem_set]

  def intersection(self, other: Subgroup) -> Subgroup:
    return self.parent.subgroups.lookup(self.elem_set & other.elem_set)

  def is_elementary(self) -> bool:
    """ True if the subgroup is q-elementary for some prime q, i.e. the direct product of a cyclic q'-group and a
    q-group. """

    from sympy import primefactors

    if self.order == 1:
      return True
    orders = self.parent.element_orders
    for q in primefactors(self.order):
      sylow_order = p_part(self.order, q)
      sylows = [T for T in self.subgroups() if T.order == sylow_order]
      if len(sylows) != 1:
        continue
      if any(orders[z] == self.order // sylow_order for z in self.center):
        return True
    return False

  def as_group(self) -> Group:
    return self.parent.realize(self)


class SubgroupTable:
  """ All subgroups of a group, enumerated by layered closure and partitioned into conjugacy classes. """

  def __init__(self, group: Group) -> None:
    self.group = group
    mult = group.mult
    found: dict[frozenset[int], None] = {frozenset([0]): None}
    queue = [frozenset([0])]
    while queue:
      S = queue.pop(0)
      S_gens = group._minimal_generators(S)
      tried: set[frozenset[int]] = set()
      for x in range(group.order):
        cyclic = group.cyclic_subgroups[x]
        if x in S or cyclic in tried:
          continue
        tried.add(cyclic)
        T = _closure(mult, S, S_gens + [x])
        if T not in found:
          found[T] = None
          queue.append(T)

    ordered = sorted((tuple(sorted(T)) for T in found), key=lambda elems: (len(elems), elems))
    self.all: list[Subgroup] = [Subgroup(group, elems, i) for i, elems in enumerate(ordered)]
    self._by_elems = {S.elems: S for S in self.all}

    self.class_of: list[int] = [-1] * len(self.all)
    self.classes: list[list[int]] = []
    for S in self.all:
      if self.class_of[S.index] >= 0:
        continue
      members = {S.index}
      frontier = [S]
      while frontier:
        following = []
        for T in frontier:
          for g in group.generators:
            C = self.lookup(group.conj(g, x) for x in T.elems)
            if C.index not in members:
              members.add(C.index)
              following.append(C)
        frontier = following
      for i in members:
        self.class_of[i] = len(self.classes)
      self.classes.append(sorted(members))

    logger.debug('%s has %d subgroups in %d classes', group.name, len(self.all), len(self.classes))

  def __len__(self) -> int:
    return len(self.all)

  def __iter__(self) -> t.Iterator[Subgroup]:
    return iter(self.all)

  def __getitem__(self, index: int) -> Subgroup:
    return self.all[index]

  def lookup(self, elems: t.Iterable[int]) -> Subgroup:
    key = tuple(sorted(set(elems)))
    try:
      return self._by_elems[key]
    except KeyError:
      raise ValueError(f'{key} is not a subgroup of {self.group.name}')

  @property
  def trivial(self) -> Subgroup:
    return self.all[0]

  @property
  def whole(self) -> Subgroup:
    return self.all[-1]

  @property
  def representatives(self) -> list[Subgroup]:
    return [self.all[cls[0]] for cls in self.classes]


def group_from_permutations(
  degree: int,
  generators: t.Sequence[str | Permutation | t.Sequence[t.Sequence[int]]],
  name: str | None = None,
  cap: int | None = None,
) -> Group:
  """ Build the group generated by permutations of `1..degree`. Generators may be given in cycle notation (a
  string like `(1 2)(3 4)` or a list of 1-based cycles) or as 0-based image tuples.

  Elements are numbered in breadth-first order over words in the generators, multiplying generators on the
  right in the given order. """

  from repring.config import current_settings
  from repring.parsing import parse_cycles

  if cap is None:
    cap = current_settings().order_cap

  perms: list[Permutation] = []
  for gen in generators:
    if isinstance(gen, str):
      perm = permutation_from_cycles(degree, parse_cycles(gen))
    elif gen and isinstance(gen[0], int):
      perm = tuple(gen)  # type: ignore
      if sorted(perm) != list(range(degree)):
        raise InvalidPermutation(f'{gen!r} is not a permutation of 0..{degree - 1}')
    else:
      perm = permutation_from_cycles(degree, gen)  # type: ignore
    perms.append(perm)

  identity = tuple(range(degree))
  elements: list[Permutation] = [identity]
  index = {identity: 0}
  position = 0
  while position < len(elements):
    current = elements[position]
    position += 1
    for gen in perms:
      product = tuple(current[gen[i]] for i in range(degree))
      if product not in index:
        if len(elements) >= cap:
          raise GroupOrderCapExceeded(cap, len(elements) + 1)
        index[product] = len(elements)
        elements.append(product)

  mult = [[index[tuple(a[b[i]] for i in range(degree))] for b in elements] for a in elements]
  gen_indices = [index[p] for p in perms if index[p] != 0]
  group = Group(name or f'<{", ".join(render_permutation(p) for p in perms)}>', mult, gen_indices, elements)
  logger.debug('Built group <fg=cyan>%s</fg> of order %d', group.name, group.order)
  return group


def all_subgroups(G: Group) -> SubgroupTable:
  return G.subgroups


def p_core(E: Subgroup, p: int) -> Subgroup:
  """ O_p(E), the intersection of the Sylow p-subgroups of *E*. """

  sylow_order = p_part(E.order, p)
  common = E.elem_set
  for T in E.subgroups():
    if T.order == sylow_order:
      common = common & T.elem_set
  return E.parent.subgroups.lookup(common)


def p_parts(G: Group, x: int, p: int) -> tuple[int, int]:
  """ The decomposition `x = x_p · x_{p'}` into commuting powers of *x*. """

  from sympy.ntheory.modular import crt

  n = G.element_orders[x]
  n_p = p_part(n, p)
  m = n // n_p
  if n_p == 1:
    return 0, x
  if m == 1:
    return x, 0
  a = int(crt([n_p, m], [1, 0])[0])
  b = int(crt([n_p, m], [0, 1])[0])
  return G.power(x, a), G.power(x, b)


def p_regular_elements(G: Group, p: int) -> tuple[int, ...]:
  return G.p_regular_elements(p)


@dataclasses.dataclass(frozen=True)
class HypoPair:
  """ A pair `(E, c)` with `E/O_p(E)` a cyclic p'-group generated by `c = s·O_p(E)`. """

  E: Subgroup

  #: The p-regular representative of `c` with the smallest element index.
  s: int

  #: The p-core O_p(E).
  core: Subgroup = dataclasses.field(compare=False, repr=False)

  def render(self) -> str:
    return f'({self.E.name}, {self.E.parent.render(self.s)})'


class HypoPairTable:
  """ All p-hypo-elementary pairs of a group with their conjugation orbits and the Galois action `c ↦ c^i`. """

  def __init__(self, group: Group, p: int) -> None:
    self.group = group
    self.p = p
    self.pairs: list[HypoPair] = []
    self._lookup: dict[tuple[int, int], int] = {}
    mult = group.mult
    orders = group.element_orders

    for E in group.subgroups:
      core = p_core(E, p)
      quotient_order = E.order // core.order
      if quotient_order % p == 0:
        continue
      cosets: dict[int, list[int]] = {}
      for x in E.elems:
        key = min(mult[x][a] for a in core.elems)
        cosets.setdefault(key, []).append(x)
      generating = []
      for members in cosets.values():
        x, k, y = members[0], 1, members[0]
        while y not in core:
          y = mult[y][x]
          k += 1
        if k == quotient_order:
          generating.append(members)
      if not generating:
        continue
      for members in sorted(generating, key=lambda ms: min(y for y in ms if orders[y] % p)):
        s = min(y for y in members if orders[y] % p)
        position = len(self.pairs)
        self.pairs.append(HypoPair(E, s, core))
        for y in members:
          self._lookup[(E.index, y)] = position

    self.orbit_of: list[int] = [-1] * len(self.pairs)
    self.orbits: list[list[int]] = []
    for start in range(len(self.pairs)):
      if self.orbit_of[start] >= 0:
        continue
      members = {start}
      frontier = [start]
      while frontier:
        following = []
        for k in frontier:
          for g in group.generators:
            c = self.conjugate(k, g)
            if c not in members:
              members.add(c)
              following.append(c)
        frontier = following
      for k in members:
        self.orbit_of[k] = len(self.orbits)
      self.orbits.append(sorted(members))

    logger.debug('%s has %d %d-hypo-elementary pairs in %d orbits', group.name, len(self.pairs), p,
      len(self.orbits))

  def __len__(self) -> int:
    return len(self.pairs)

  def __getitem__(self, index: int) -> HypoPair:
    return self.pairs[index]

  def lookup(self, E: Subgroup, t: int) -> int:
    """ The position of the pair `(E, t·O_p(E))`; *t* may be any element of the coset. """

    try:
      return self._lookup[(E.index, t)]
    except KeyError:
      raise ValueError(f'({E.name}, {self.group.render(t)}) is not a {self.p}-hypo-elementary pair')

  def conjugate(self, position: int, g: int) -> int:
    pair = self.pairs[position]
    return self.lookup(pair.E.conjugate(g), self.group.conj(g, pair.s))

  def power(self, position: int, i: int) -> int:
    """ The position of `(E, c^i)` for *i* coprime to the order of `c`. """

    pair = self.pairs[position]
    return self.lookup(pair.E, self.group.power(pair.s, i))

  @property
  def representatives(self) -> list[int]:
    return [orbit[0] for orbit in self.orbits]


def hypo_pairs(G: Group, p: int) -> HypoPairTable:
  return G.hypo_pairs(p)


@dataclasses.dataclass(frozen=True)
class LinearCharacter:
  """ A homomorphism into the roots of unity of order *e*, stored as exponents: the value at `g` is
  `ζ_e^exponents[g]`. The keys are element indices of the group the character is evaluated on. """

  e: int
  exponents: t.Mapping[int, int] = dataclasses.field(compare=False)
  key: tuple[tuple[int, int], ...] = dataclasses.field(init=False, repr=False)

  def __post_init__(self) -> None:
    object.__setattr__(self, 'key', tuple(sorted(self.exponents.items())))

  def __call__(self, g: int) -> CycInt:
    return root(self.e, self.exponents[g])

  def exponent(self, g: int) -> int:
    return self.exponents[g]

  def value(self, g: int, order: int) -> CycInt:
    """ The value at *g* as an element of Z[ζ_order]. Requires the value to be an `order`-th root of unity. """

    k = self.exponents[g] * order
    if k % self.e:
      raise OrderMismatch(f'ζ_{self.e}^{self.exponents[g]} is not a root of unity of order dividing {order}')
    return root(order, k // self.e)

  @property
  def order(self) -> int:
    return functools.reduce(math.lcm, (self.e // math.gcd(k, self.e) for k in self.exponents.values()), 1)

  def is_trivial(self) -> bool:
    return all(k % self.e == 0 for k in self.exponents.values())

  def __mul__(self, other: LinearCharacter) -> LinearCharacter:
    if self.e != other.e:
      raise OrderMismatch('linear characters over different orders')
    return LinearCharacter(self.e, {g: (k + other.exponents[g]) % self.e for g, k in self.exponents.items()})


def _abelian_basis(Q: Group) -> list[int]:
  """ A basis `x_1, ..., x_r` of an abelian group: Q is the internal direct product of the cyclic groups `<x_i>`. """

  basis: list[int] = []
  span = frozenset([0])
  while len(span) < Q.order:
    def relative_order(y: int) -> int:
      k, z = 1, y
      while z not in span:
        z = Q.mult[z][y]
        k += 1
      return k
    best = max(relative_order(y) for y in range(Q.order))
    for y in range(Q.order):
      if relative_order(y) != best:
        continue
      lift = next((x for x in (Q.mult[y][z] for z in span) if Q.element_orders[x] == best), None)
      if lift is not None:
        basis.append(lift)
        span = Q.generated(list(basis))
        break
    else:
      raise RuntimeError(f'failed to decompose the abelian group {Q.name}')
  return basis


def linear_characters(G: Group | Subgroup, e: int) -> list[LinearCharacter]:
  """ All linear characters with values in the e-th roots of unity. For a #Subgroup, the characters are keyed by
  element indices of the parent group. """

  if isinstance(G, Subgroup):
    realized = G.as_group()
    assert realized.embedding is not None
    return [
      LinearCharacter(e, {realized.embedding[g]: k for g, k in chi.exponents.items()})
      for chi in linear_characters(realized, e)
    ]

  Q, projection = G.quotient(G.derived_subgroup)
  basis = _abelian_basis(Q)
  orders = [Q.element_orders[x] for x in basis]
  exp = functools.reduce(math.lcm, orders, 1)
  if e % exp:
    raise OrderMismatch(f'the exponent {exp} of {G.name}/{G.name}\' does not divide {e}')

  coordinates: dict[int, tuple[int, ...]] = {}
  for coeffs in itertools.product(*(range(n) for n in orders)):
    x = Q.mul(*(Q.power(b, c) for b, c in zip(basis, coeffs)))
    coordinates[x] = coeffs

  result = []
  for js in itertools.product(*(range(n) for n in orders)):
    exponents = {}
    for g in range(G.order):
      cs = coordinates[projection[g]]
      exponents[g] = sum((e // n) * j * c for n, j, c in zip(orders, js, cs)) % e
    result.append(LinearCharacter(e, exponents))
  return result
