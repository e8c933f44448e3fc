""" Finite G-sets, right-free bisets, the wreath product homomorphism and tensor induction of sets.

Actions are stored as explicit tables: `act[g][x]` is the image of point `x` under group element `g`. A biset
carries a left table `lact[g][u] = g·u` and a right table `ract[h][u] = u·h`. All right actions are free, which is
what makes the transport homomorphisms `φ_u` well defined.
"""

from __future__ import annotations

import dataclasses
import functools
import itertools
import logging
import typing as t

from repring.groups import Group, Subgroup

logger = logging.getLogger(__name__)

#: Largest number of right orbits for which all invariant subsets are enumerated.
MAX_INVARIANT_SUBSET_ORBITS = 12


class BisetError(ValueError):
  pass


class GSet:
  """ A finite left G-set. """

  def __init__(self, group: Group, act: t.Sequence[t.Sequence[int]], validate: bool = True) -> None:
    self.group = group
    self.act: tuple[tuple[int, ...], ...] = tuple(tuple(row) for row in act)
    self.size = len(self.act[0]) if self.act else 0
    if validate:
      self._validate()

  def __repr__(self) -> str:
    return f'GSet({self.group.name}, size={self.size})'

  def _validate(self) -> None:
    G = self.group
    if len(self.act) != G.order:
      raise ValueError(f'action table has {len(self.act)} rows, expected {G.order}')
    if list(self.act[0]) != list(range(self.size)):
      raise ValueError('the identity does not act trivially')
    for g in G.generators:
      for h in range(G.order):
        gh, row_g, row_h = self.act[G.mult[g][h]], self.act[g], self.act[h]
        if any(gh[x] != row_g[row_h[x]] for x in range(self.size)):
          raise ValueError(f'action table is not compatible with the multiplication of {G.name}')

  @staticmethod
  def cosets(group: Group, S: Subgroup) -> GSet:
    """ The transitive G-set `G/S` of left cosets. """

    key_of: dict[int, int] = {}
    reps: list[int] = []
    for x in range(group.order):
      if x not in key_of:
        for s in S.elems:
          key_of[group.mult[x][s]] = len(reps)
        reps.append(x)
    return GSet(group, [[key_of[group.mult[g][r]] for r in reps] for g in range(group.order)], validate=False)

  @staticmethod
  def point(group: Group) -> GSet:
    return GSet(group, [[0] for _ in range(group.order)], validate=False)

  @staticmethod
  def empty(group: Group) -> GSet:
    return GSet(group, [[] for _ in range(group.order)], validate=False)

  @staticmethod
  def regular(group: Group) -> GSet:
    return GSet.cosets(group, group.trivial)

  @staticmethod
  def natural(group: Group) -> GSet:
    """ The points permuted by a permutation group. """

    if group.perms is None:
      raise ValueError(f'{group.name} is not a permutation group')
    return GSet(group, group.perms, validate=False)

  def __mul__(self, other: GSet) -> GSet:
    return product(self, other)

  def __add__(self, other: GSet) -> GSet:
    return coproduct(self, other)

  def fixed_points(self, S: Subgroup) -> list[int]:
    return fixed_points(self, S)

  def orbits(self) -> list[list[int]]:
    seen: set[int] = set()
    result = []
    for x in range(self.size):
      if x in seen:
        continue
      orbit = sorted({row[x] for row in self.act})
      seen.update(orbit)
      result.append(orbit)
    return result

  @functools.cached_property
  def mark_vector(self) -> tuple[int, ...]:
    """ The numbers of fixed points `|X^S|` over all subgroups in canonical order. """

    return tuple(len(fixed_points(self, S)) for S in self.group.subgroups)


def fixed_points(X: GSet, S: Subgroup) -> list[int]:
  if S.parent is not X.group:
    raise ValueError(f'{S.name} is not a subgroup of {X.group.name}')
  rows = [X.act[g] for g in S.generators]
  return [x for x in range(X.size) if all(row[x] == x for row in rows)]


def product(X: GSet, Y: GSet) -> GSet:
  if X.group is not Y.group:
    raise ValueError('G-sets over different groups')
  n = Y.size
  return GSet(X.group, [[rx[x] * n + ry[y] for x in range(X.size) for y in range(n)]
    for rx, ry in zip(X.act, Y.act)], validate=False)


def coproduct(X: GSet, Y: GSet) -> GSet:
  if X.group is not Y.group:
    raise ValueError('G-sets over different groups')
  m = X.size
  return GSet(X.group, [list(rx) + [m + y for y in ry] for rx, ry in zip(X.act, Y.act)], validate=False)


def induce(X: GSet, group: Group) -> GSet:
  """ `Ind_K^G X = G ×_K X` for a G-set over a realized subgroup `K` of *group*. """

  K = X.group
  if K.parent is not group or K.embedding is None:
    raise ValueError(f'{K.name} is not a realized subgroup of {group.name}')
  local = {x: i for i, x in enumerate(K.embedding)}
  reps: list[int] = []
  coset_of: dict[int, int] = {}
  for x in range(group.order):
    if x not in coset_of:
      for k in K.embedding:
        coset_of[group.mult[x][k]] = len(reps)
      reps.append(x)
  act = []
  for g in range(group.order):
    row = []
    for i, r in enumerate(reps):
      gr = group.mult[g][r]
      j = coset_of[gr]
      k = local[group.mult[group.inv[reps[j]]][gr]]
      row.extend(j * X.size + X.act[k][x] for x in range(X.size))
    act.append(row)
  return GSet(group, act, validate=False)


def isomorphic(X: GSet, Y: GSet) -> bool:
  """ Two G-sets are isomorphic iff their mark vectors agree. """

  return X.group is Y.group and X.mark_vector == Y.mark_vector


@dataclasses.dataclass(frozen=True)
class WreathElement:
  """ An element `((h_1, ..., h_n); π)` of the wreath product `H ≀ S_n`. Permutations are 0-based image tuples. """

  group: Group = dataclasses.field(compare=False, repr=False)
  hs: tuple[int, ...]
  perm: tuple[int, ...]

  def __mul__(self, other: WreathElement) -> WreathElement:
    inverse = [0] * len(self.perm)
    for i, j in enumerate(self.perm):
      inverse[j] = i
    H = self.group
    hs = tuple(H.mult[self.hs[i]][other.hs[inverse[i]]] for i in range(len(self.hs)))
    return WreathElement(H, hs, tuple(self.perm[other.perm[i]] for i in range(len(self.perm))))


class Biset:
  """ A finite (G, H)-biset with a free right action. """

  def __init__(
    self,
    left: Group,
    right: Group,
    lact: t.Sequence[t.Sequence[int]],
    ract: t.Sequence[t.Sequence[int]],
    size: int | None = None,
    validate: bool = True,
  ) -> None:
    self.left = left
    self.right = right
    self.lact: tuple[tuple[int, ...], ...] = tuple(tuple(row) for row in lact)
    self.ract: tuple[tuple[int, ...], ...] = tuple(tuple(row) for row in ract)
    self.size = len(self.lact[0]) if size is None else size
    if validate:
      self._validate()

  def __repr__(self) -> str:
    return f'Biset({self.left.name}, {self.right.name}, size={self.size}, |U/H|={len(self.transversal)})'

  def _validate(self) -> None:
    GSet(self.left, self.lact)
    H = self.right
    for h in H.generators:
      for k in range(H.order):
        # (u·k)·h = u·(k·h)
        if any(self.ract[H.mult[k][h]][u] != self.ract[h][self.ract[k][u]] for u in range(self.size)):
          raise BisetError(f'right table is not an action of {H.name}')
    for g in self.left.generators:
      for h in H.generators:
        if any(self.lact[g][self.ract[h][u]] != self.ract[h][self.lact[g][u]] for u in range(self.size)):
          raise BisetError('left and right actions do not commute')
    for u in range(self.size):
      if len({self.ract[h][u] for h in range(H.order)}) != H.order:
        raise BisetError(f'the right action of {H.name} is not free at point {u}')

  @staticmethod
  def identity(group: Group) -> Biset:
    return Biset(group, group, group.mult, [[group.mult[u][h] for u in range(group.order)]
      for h in range(group.order)], validate=False)

  @staticmethod
  def empty(left: Group, right: Group) -> Biset:
    return Biset(left, right, [[] for _ in range(left.order)], [[] for _ in range(right.order)], 0, validate=False)

  def right_index(self, u: int) -> dict[int, int]:
    """ Maps each point `u·h` of the right orbit of *u* to `h`. """

    return self._right_indices[u]

  @functools.cached_property
  def _right_indices(self) -> list[dict[int, int]]:
    return [{self.ract[h][u]: h for h in range(self.right.order)} for u in range(self.size)]

  @functools.cached_property
  def transversal(self) -> tuple[int, ...]:
    """ The smallest point of every right orbit, sorted. """

    seen: set[int] = set()
    reps = []
    for u in range(self.size):
      if u not in seen:
        reps.append(u)
        seen.update(self.right_index(u))
    return tuple(reps)

  def phi(self, u: int, g: int) -> int:
    """ `φ_u(g)`: the unique `h` with `g·u = u·h`. """

    try:
      return self.right_index(u)[self.lact[g][u]]
    except KeyError:
      raise BisetError(f'φ_{u} is not defined at {self.left.render(g)}')

  def left_gset(self) -> GSet:
    return GSet(self.left, self.lact, validate=False)


def disjoint_union(U: Biset, V: Biset) -> Biset:
  if U.left is not V.left or U.right is not V.right:
    raise BisetError('disjoint union of bisets over different groups')
  m = U.size
  lact = [list(a) + [m + x for x in b] for a, b in zip(U.lact, V.lact)]
  ract = [list(a) + [m + x for x in b] for a, b in zip(U.ract, V.ract)]
  return Biset(U.left, U.right, lact, ract, U.size + V.size, validate=False)


def compose(U: Biset, V: Biset) -> Biset:
  """ `U ×_H V` for a (G, H)-biset *U* and an (H, K)-biset *V*. Points are pairs `(u_i, v)` with `u_i` running over
  the transversal of `U/H`. """

  if U.right is not V.left:
    raise BisetError(f'can not compose a ({U.left.name}, {U.right.name})-biset with a '
      f'({V.left.name}, {V.right.name})-biset')
  reps = U.transversal
  transport = Transversal(U, reps)
  m = V.size
  lact = []
  for g in range(U.left.order):
    perm, hs = transport.move(g)
    lact.append([perm[i] * m + V.lact[hs[i]][v] for i in range(len(reps)) for v in range(m)])
  ract = [[i * m + V.ract[k][v] for i in range(len(reps)) for v in range(m)] for k in range(V.right.order)]
  return Biset(U.left, V.right, lact, ract, len(reps) * m, validate=False)


def induction_biset(group: Group, H: Subgroup) -> Biset:
  """ `Ind_H^G`: G as a (G, H)-biset. """

  Hg = H.as_group()
  mult = group.mult
  return Biset(group, Hg, mult, [[mult[u][h] for u in range(group.order)] for h in H.elems], validate=False)


def restriction_biset(group: Group, H: Subgroup) -> Biset:
  """ `Res^G_H`: G as an (H, G)-biset. """

  Hg = H.as_group()
  mult = group.mult
  return Biset(Hg, group, [mult[h] for h in H.elems], [[mult[u][g] for u in range(group.order)]
    for g in range(group.order)], validate=False)


def inflation_biset(group: Group, N: Subgroup) -> Biset:
  """ `Inf^G_{G/N}`: G/N as a (G, G/N)-biset. """

  Q, projection = group.quotient(N)
  return Biset(group, Q, [Q.mult[projection[g]] for g in range(group.order)],
    [[Q.mult[q][k] for q in range(Q.order)] for k in range(Q.order)], validate=False)


def isomorphism_biset(group: Group, source: Group, phi: t.Sequence[int]) -> Biset:
  """ The graph biset of an isomorphism `φ: source → group`: G with `u·h = u·φ(h)`. """

  if len(phi) != source.order or sorted(phi) != list(range(group.order)):
    raise BisetError('φ is not a bijection')
  for a in source.generators:
    for b in range(source.order):
      if phi[source.mult[a][b]] != group.mult[phi[a]][phi[b]]:
        raise BisetError('φ is not a homomorphism')
  mult = group.mult
  return Biset(group, source, mult, [[mult[u][phi[h]] for u in range(group.order)] for h in range(source.order)],
    validate=False)


def elementary_biset(kind: str, group: Group, data: t.Any = None, source: Group | None = None) -> Biset:
  """ Build one of the elementary bisets `Ind`, `Res`, `Inf` or `Iso`. *data* is the subgroup for `Ind`/`Res`,
  the normal subgroup for `Inf` and the isomorphism as an image list for `Iso` (identity if omitted). """

  kind = kind.lower()
  if kind == 'ind':
    return induction_biset(group, data)
  if kind == 'res':
    return restriction_biset(group, data)
  if kind == 'inf':
    if not data.is_normal():
      raise BisetError(f'{data.name} is not normal in {group.name}')
    return inflation_biset(group, data)
  if kind == 'iso':
    if data is None:
      return Biset.identity(group)
    return isomorphism_biset(group, source or group, data)
  raise BisetError(f'unknown elementary biset {kind!r}')


class Transversal:
  """ An ordered transversal `u_1, ..., u_n` of `U/H` and the data `g·u_i = u_{π(i)}·h_i`. """

  def __init__(self, biset: Biset, reps: t.Sequence[int] | None = None) -> None:
    self.biset = biset
    self.reps = tuple(biset.transversal if reps is None else reps)
    self._locate: dict[int, tuple[int, int]] = {}
    for i, u in enumerate(self.reps):
      for v, h in biset.right_index(u).items():
        if v in self._locate:
          raise BisetError(f'points {self.reps[self._locate[v][0]]} and {u} lie in the same right orbit')
        self._locate[v] = (i, h)
    if len(self._locate) != biset.size:
      raise BisetError('the representatives do not cover every right orbit')

  def __len__(self) -> int:
    return len(self.reps)

  def locate(self, v: int) -> tuple[int, int]:
    """ Returns `(j, h)` with `v = u_j·h`. """

    return self._locate[v]

  @functools.lru_cache(maxsize=None)
  def move(self, g: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """ Returns `(π, (h_1, ..., h_n))` with `g·u_i = u_{π(i)}·h_i`. """

    perm, hs = [], []
    for u in self.reps:
      j, h = self._locate[self.biset.lact[g][u]]
      perm.append(j)
      hs.append(h)
    return tuple(perm), tuple(hs)

  def theta(self, g: int) -> WreathElement:
    """ `θ(g) = ((h_{π⁻¹(1)}, ..., h_{π⁻¹(n)}); π)`. """

    perm, hs = self.move(g)
    inverse = [0] * len(perm)
    for i, j in enumerate(perm):
      inverse[j] = i
    return WreathElement(self.biset.right, tuple(hs[inverse[i]] for i in range(len(perm))), perm)


def wreath_theta(U: Biset, reps: t.Sequence[int] | None = None) -> t.Callable[[int], WreathElement]:
  return Transversal(U, reps).theta


def double_cosets(S: Subgroup, U: Biset, T: Subgroup | None = None) -> list[int]:
  """ The smallest point of every `(S, T)`-orbit of *U*, sorted. *T* defaults to the whole right group. """

  if S.parent is not U.left:
    raise BisetError(f'{S.name} is not a subgroup of {U.left.name}')
  right_gens = U.right.generators if T is None else T.generators
  seen: set[int] = set()
  reps = []
  for u in range(U.size):
    if u in seen:
      continue
    reps.append(u)
    orbit = {u}
    frontier = [u]
    while frontier:
      following = []
      for v in frontier:
        for w in itertools.chain((U.lact[g][v] for g in S.generators), (U.ract[h][v] for h in right_gens)):
          if w not in orbit:
            orbit.add(w)
            following.append(w)
      frontier = following
    seen |= orbit
  return reps


class StabilizerTransport(t.NamedTuple):

  #: `S ∩ ^uH`, a subgroup of the left group.
  intersection: Subgroup

  #: `S^u = φ_u(S ∩ ^uH)`, a subgroup of the right group.
  image: Subgroup

  #: `φ_u` on `S ∩ ^uH`.
  phi: t.Mapping[int, int]


def stabilizer_transport(U: Biset, u: int, S: Subgroup) -> StabilizerTransport:
  index = U.right_index(u)
  phi = {g: index[U.lact[g][u]] for g in S.elems if U.lact[g][u] in index}
  return StabilizerTransport(
    U.left.subgroups.lookup(phi),
    U.right.subgroups.lookup(phi.values()),
    phi,
  )


def tensor_induce_set(U: Biset, X: GSet, transversal: Transversal | None = None) -> GSet:
  """ `s_U(X)`: the G-set `X^n`, `n = |U/H|`, with `g·(x_i) = (h_{π⁻¹(i)} x_{π⁻¹(i)})_i`. The tuple `(x_1, ..., x_n)`
  is encoded as `sum(x_i * |X|^i)`. """

  if X.group is not U.right:
    raise BisetError(f'{X!r} is not a set over {U.right.name}')
  transversal = transversal or Transversal(U)
  n, m = len(transversal), X.size
  weights = [m ** i for i in range(n)]
  digits = [[(index // w) % m for w in weights] for index in range(m ** n)]
  act = []
  for g in range(U.left.order):
    perm, hs = transversal.move(g)
    rows = [X.act[h] for h in hs]
    act.append([sum(rows[i][xs[i]] * weights[perm[i]] for i in range(n)) for xs in digits])
  return GSet(U.left, act, validate=False)


@dataclasses.dataclass(frozen=True)
class InvariantSubset:
  """ An H-invariant subset `V ⊆_H U`, given as a set of right orbits, with its stabilizer `G_V`. """

  #: Indices into the biset's transversal.
  orbits: frozenset[int]
  points: frozenset[int]
  stabilizer: Subgroup

  #: Index of the G-orbit of invariant subsets this subset belongs to.
  orbit_id: int


def invariant_subsets(U: Biset) -> list[InvariantSubset]:
  """ All H-invariant subsets of *U*, grouped by G-orbit (subsets of one orbit are adjacent). """

  transversal = Transversal(U)
  n = len(transversal)
  if n > MAX_INVARIANT_SUBSET_ORBITS:
    raise BisetError(f'{n} right orbits exceed the limit of {MAX_INVARIANT_SUBSET_ORBITS} for subset enumeration')
  G = U.left
  perms = [transversal.move(g)[0] for g in range(G.order)]
  orbit_points = [frozenset(U.right_index(u)) for u in transversal.reps]

  def image(g: int, subset: frozenset[int]) -> frozenset[int]:
    return frozenset(perms[g][i] for i in subset)

  result: list[InvariantSubset] = []
  assigned: set[frozenset[int]] = set()
  for size in range(n + 1):
    for combo in itertools.combinations(range(n), size):
      subset = frozenset(combo)
      if subset in assigned:
        continue
      orbit_id = len({r.orbit_id for r in result})
      members = sorted({image(g, subset) for g in range(G.order)}, key=sorted)
      for member in members:
        assigned.add(member)
        stabilizer = G.subgroups.lookup(g for g in range(G.order) if image(g, member) == member)
        points = frozenset().union(*(orbit_points[i] for i in member)) if member else frozenset()
        result.append(InvariantSubset(member, points, stabilizer, orbit_id))
  return result


def restrict_biset(U: Biset, points: t.Iterable[int], stabilizer: Subgroup) -> Biset:
  """ The H-invariant, `stabilizer`-invariant subset *points* of *U* as a `(G_V, H)`-biset. """

  points = sorted(points)
  local = {u: i for i, u in enumerate(points)}
  GV = stabilizer.as_group()
  assert GV.embedding is not None
  try:
    lact = [[local[U.lact[g][u]] for u in points] for g in GV.embedding]
    ract = [[local[U.ract[h][u]] for u in points] for h in range(U.right.order)]
  except KeyError:
    raise BisetError('the subset is not invariant under the given stabilizer')
  return Biset(GV, U.right, lact, ract, len(points), validate=False)


@dataclasses.dataclass(frozen=True)
class VirtualBiset:
  """ A formal difference `[plus] - [minus]` of right-free bisets. """

  plus: Biset
  minus: Biset

  def __post_init__(self) -> None:
    if self.plus.left is not self.minus.left or self.plus.right is not self.minus.right:
      raise BisetError('both parts of a virtual biset must be over the same groups')

  @staticmethod
  def of(U: Biset) -> VirtualBiset:
    return VirtualBiset(U, Biset.empty(U.left, U.right))

  @property
  def left(self) -> Group:
    return self.plus.left

  @property
  def right(self) -> Group:
    return self.plus.right

  def __add__(self, other: VirtualBiset) -> VirtualBiset:
    return VirtualBiset(disjoint_union(self.plus, other.plus), disjoint_union(self.minus, other.minus))

  def __neg__(self) -> VirtualBiset:
    return VirtualBiset(self.minus, self.plus)

  def __sub__(self, other: VirtualBiset) -> VirtualBiset:
    return self + (-other)

  def compose(self, other: VirtualBiset) -> VirtualBiset:
    """ `(U - U')∘(V - V') = [U×V ⊔ U'×V'] - [U×V' ⊔ U'×V]`. """

    return VirtualBiset(
      disjoint_union(compose(self.plus, other.plus), compose(self.minus, other.minus)),
      disjoint_union(compose(self.plus, other.minus), compose(self.minus, other.plus)),
    )


def biset_as_gset(U: Biset) -> GSet:
  """ *U* as a left `G × H`-set via `(g, h)·u = g·u·h⁻¹`; elements of the product are numbered `g * |H| + h`. """

  G, H = U.left, U.right
  n = H.order
  mult = [[G.mult[a // n][b // n] * n + H.mult[a % n][b % n] for b in range(G.order * n)]
    for a in range(G.order * n)]
  product_group = Group(f'{G.name}x{H.name}', mult)
  act = [[U.lact[gh // n][U.ract[H.inv[gh % n]][u]] for u in range(U.size)] for gh in range(G.order * n)]
  return GSet(product_group, act, validate=False)


def bisets_isomorphic(U: Biset, V: Biset) -> bool:
  """ Compare two bisets over the same groups by the marks of their `G × H`-sets. """

  if U.left is not V.left or U.right is not V.right or U.size != V.size:
    return False
  X, Y = biset_as_gset(U), biset_as_gset(V)
  # Both product groups have the same table, so their subgroups line up position by position.
  return all(
    len([x for x in range(X.size) if all(X.act[g][x] == x for g in S.generators)]) ==
    len([y for y in range(Y.size) if all(Y.act[g][y] == y for g in S.generators)])
    for S in X.group.subgroups
  )
