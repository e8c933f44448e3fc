""" Tensor induction along a right-free (G, H)-biset U, on G-sets, on ghost rings and on representation rings.

All ghost level maps are products over double coset representatives `u ∈ S\\U/H` of values of the input at
transported indices. The output cyclotomic order is `lcm(e_input, exp G)`, and input values are embedded into it.
"""

from __future__ import annotations

import itertools
import logging
import math
import typing as t

from repring.cyclotomic import CycInt, embed
from repring.ghost import GhostMismatch, GhostRing, GhostVector, ghost_ring
from repring.groups import Group, LinearCharacter, Subgroup
from repring.gsets import (
  Biset, GSet, Transversal, double_cosets, fixed_points, induce, invariant_subsets, restrict_biset,
  stabilizer_transport, tensor_induce_set)
from repring.lattices import (
  RingElement, TheoryViolation, burnside_lattice, lattice, left_coset_representatives, marks)

logger = logging.getLogger(__name__)


class TransportResult(t.NamedTuple):

  #: `E^u = φ_u(E ∩ ^uH)`, a subgroup of H.
  Eu: Subgroup

  #: The canonical p-regular representative of `c^u`.
  cu: int

  #: Position of `(E^u, c^u)` in the pair table of H.
  position: int

  e_u: int
  f_u: int


def _output_order(U: Biset, ring: GhostRing) -> int:
  if ring.group is not U.right:
    raise GhostMismatch(f'expected a vector over {U.right.name}, got one over {ring.group.name}')
  return math.lcm(ring.e, U.left.exponent)


def pair_transport(U: Biset, u: int, position: int, p: int) -> TransportResult:
  """ Transport the p-hypo-elementary pair at *position* of G's table along the point *u* of *U*. With
  `c = s·O_p(E)`, write `s^{e_u} = a·x` with `a ∈ O_p(E)` and `x ∈ E ∩ ^uH`; then `c^u` is the coset of
  `φ_u(x)^{f_u}`. """

  G, H = U.left, U.right
  pair = G.hypo_pairs(p)[position]
  E, s, core = pair.E, pair.s, pair.core
  transport = stabilizer_transport(U, u, E)
  I = transport.intersection
  core_I = core.intersection(I)
  product = {G.mul(a, x) for a in core.elems for x in I.elems}
  e_u = E.order // len(product)
  f_u = core.order // core_I.order
  if f_u * I.order != len(product):
    raise TheoryViolation('the two expressions for f_u differ', witness=(pair.render(), u))

  target = G.power(s, e_u)
  for a in core.elems:
    x = G.mul(G.inverse(a), target)
    if x in I:
      break
  else:
    raise TheoryViolation(f's^{e_u} does not decompose over O_p(E)(E ∩ ^uH)', witness=(pair.render(), u))

  h = H.power(transport.phi[x], f_u)
  table = H.hypo_pairs(p)
  Eu = transport.image
  position_u = table.lookup(Eu, h)
  return TransportResult(Eu, table[position_u].s, position_u, e_u, f_u)


def tilde_B_U(U: Biset, a: GhostVector) -> GhostVector:
  """ `(n_T)_T ↦ (∏_{u ∈ S\\U/H} n_{S^u})_S`. """

  if a.ring.tag != 'B':
    raise GhostMismatch(f'expected a B vector, got {a.ring.tag}')
  _output_order(U, a.ring)
  ring = ghost_ring('B', U.left)

  def value(position: int) -> CycInt:
    S = U.left.subgroups[position]
    result = CycInt.one(1)
    for u in double_cosets(S, U):
      result = result * a[stabilizer_transport(U, u, S).image.index]
    return result

  return ring.from_function(value)


def B_U(U: Biset, x: RingElement) -> RingElement:
  """ The tensor induction `B(H) → B(G)`, evaluated in the ghost ring and pulled back by membership. """

  return burnside_lattice(U.left).element(tilde_B_U(U, x.ghost))


def tilde_T_U(U: Biset, a: GhostVector) -> GhostVector:
  """ `(z_{(D, d)}) ↦ (∏_{u ∈ E\\U/H} z_{(E^u, c^u)})_{(E, c)}`. """

  if a.ring.tag != 'T':
    raise GhostMismatch(f'expected a T vector, got {a.ring.tag}')
  p = a.ring.p
  assert p is not None
  ring = ghost_ring('T', U.left, p, _output_order(U, a.ring))
  h = ring.value_order

  def value(position: int) -> CycInt:
    result = CycInt.one(h)
    for u in double_cosets(ring.pairs[position].E, U):
      result = result * embed(a[pair_transport(U, u, position, p).position], h)
    return result

  return ring.from_function(value)


def _cyclic_transport(U: Biset, x: int) -> list[int]:
  """ The elements `φ_u(x^{n_u})` for `u ∈ <x>\\U/H`, where `n_u` is the least `n` with `x^n·u ∈ u·H`. """

  G = U.left
  result = []
  for u in double_cosets(G.subgroups.lookup(G.cyclic_subgroups[x]), U):
    index = U.right_index(u)
    y = x
    while U.lact[y][u] not in index:
      y = G.mul(x, y)
    result.append(index[U.lact[y][u]])
  return result


def tilde_RK_U(U: Biset, a: GhostVector) -> GhostVector:
  """ `χ ↦ χ^U` with `χ^U(x) = ∏_{u ∈ <x>\\U/H} χ(φ_u(x^{n_u}))`. """

  if a.ring.tag != 'RK':
    raise GhostMismatch(f'expected an RK vector, got {a.ring.tag}')
  ring = ghost_ring('RK', U.left, None, _output_order(U, a.ring))
  m = ring.value_order

  def value(x: int) -> CycInt:
    result = CycInt.one(m)
    for y in _cyclic_transport(U, x):
      result = result * embed(a[y], m)
    return result

  return ring.from_function(value)


def tilde_RF_U(U: Biset, a: GhostVector) -> GhostVector:
  """ `ψ ↦ ψ^U`, the same product formula over p-regular elements. """

  if a.ring.tag != 'RF':
    raise GhostMismatch(f'expected an RF vector, got {a.ring.tag}')
  ring = ghost_ring('RF', U.left, a.ring.p, _output_order(U, a.ring))
  m = ring.value_order

  def value(position: int) -> CycInt:
    result = CycInt.one(m)
    for y in _cyclic_transport(U, ring.elements[position]):
      result = result * embed(a[a.ring.position_of[y]], m)
    return result

  return ring.from_function(value)


TILDE_MAPS: dict[str, t.Callable[[Biset, GhostVector], GhostVector]] = {
  'B': tilde_B_U,
  'T': tilde_T_U,
  'RK': tilde_RK_U,
  'RF': tilde_RF_U,
}


def tilde_U(U: Biset, a: GhostVector) -> GhostVector:
  """ The ghost level tensor induction for the tag of *a*. """

  return TILDE_MAPS[a.ring.tag](U, a)


def apply_tensor(U: Biset, x: RingElement, tag: str | None = None) -> RingElement:
  """ Tensor induction on a representation ring element, checked for membership in the codomain lattice. The ring
  is the one *x* belongs to; passing *tag* asserts which ring that is. """

  if tag is not None and tag != x.ghost.ring.tag:
    raise GhostMismatch(f'expected a {tag} element, got {x.ghost.ring.tag}')
  image = tilde_U(U, x.ghost)
  ring = image.ring
  target = lattice(ring.tag, ring.group, ring.p, ring.e)
  try:
    return target.element(image)
  except TheoryViolation as exc:
    raise TheoryViolation(f'{ring.tag}(U) left the lattice for U = {U!r}', witness=exc.witness)


def T_U_monomial(U: Biset, S: Subgroup, psi: LinearCharacter, p: int) -> GhostVector:
  """ The ghost vector of `t_U(Ind_S^H F_ψ)` computed on the monomial module itself. Its underlying G-set is
  `s_U(H/S)`; a fixed tuple `(x_i)` contributes the product over the cycles of `π` of
  `ψ_{x_i}(h_{π^{l-1}(i)} ⋯ h_{π(i)} h_i)`, where `ψ_{gS}(k) = ψ(g⁻¹kg)`. """

  H = U.right
  if S.parent is not H:
    raise GhostMismatch(f'{S.name} is not a subgroup of {H.name}')
  if psi.order % p == 0:
    raise ValueError(f'the linear character of {S.name} has order {psi.order}, divisible by p={p}')
  ring = ghost_ring('T', U.left, p, math.lcm(psi.e, H.exponent, U.left.exponent))
  h = ring.value_order
  cosets = left_coset_representatives(H, S)
  X = GSet.cosets(H, S)
  transversal = Transversal(U)
  Y = tensor_induce_set(U, X, transversal)
  n, m = len(transversal), X.size

  def value(position: int) -> CycInt:
    pair = ring.pairs[position]
    perm, hs = transversal.move(pair.s)
    cycles = []
    seen: set[int] = set()
    for i in range(n):
      if i in seen:
        continue
      k, j = hs[i], perm[i]
      seen.add(i)
      while j != i:
        seen.add(j)
        k = H.mul(hs[j], k)
        j = perm[j]
      cycles.append((i, k))
    total = CycInt.zero(h)
    for index in fixed_points(Y, pair.E):
      term = CycInt.one(h)
      for i, k in cycles:
        g = cosets[(index // m ** i) % m]
        term = term * psi.value(H.mul(H.inverse(g), k, g), h)
      total = total + term
    return total

  return ring.from_function(value)


class Representation(t.NamedTuple):
  """ An explicit matrix representation with entries in Z[ζ_e]; `matrices[h]` is the matrix of `h`. """

  group: Group
  e: int
  matrices: list[list[list[CycInt]]]

  @property
  def dim(self) -> int:
    return len(self.matrices[0]) if self.matrices else 0

  def character(self) -> GhostVector:
    ring = ghost_ring('RK', self.group, None, math.lcm(self.e, self.group.exponent))
    return ring.from_function(lambda x: embed(sum((self.matrices[x][i][i] for i in range(self.dim)),
      CycInt.zero(self.e)), ring.value_order))


def linear_representation(psi: LinearCharacter, group: Group) -> Representation:
  return Representation(group, psi.e, [[[psi(h)]] for h in range(group.order)])


def augmentation_representation(X: GSet, e: int | None = None) -> Representation:
  """ The integral sum-zero submodule of the permutation module `Z[X]`, with basis `x_j - x_0` for `j >= 1`. """

  e = X.group.exponent if e is None else e
  d = X.size - 1
  matrices = []
  for row in X.act:
    matrix = [[CycInt.zero(e) for _ in range(d)] for _ in range(d)]
    for j in range(1, X.size):
      if row[j]:
        matrix[row[j] - 1][j - 1] = matrix[row[j] - 1][j - 1] + 1
      if row[0]:
        matrix[row[0] - 1][j - 1] = matrix[row[0] - 1][j - 1] - 1
    matrices.append(matrix)
  return Representation(X.group, e, matrices)


def tensor_induced_character(U: Biset, rep: Representation) -> GhostVector:
  """ The character of `t_U(M)` from the explicit action on `M^{⊗n}`:
  `g·(m_1 ⊗ ... ⊗ m_n) = ⊗_j h_{π⁻¹(j)} m_{π⁻¹(j)}`. The trace is summed over all basis tensors. """

  if rep.group is not U.right:
    raise GhostMismatch(f'the representation is not over {U.right.name}')
  ring = ghost_ring('RK', U.left, None, math.lcm(rep.e, rep.group.exponent, U.left.exponent))
  transversal = Transversal(U)
  n, d = len(transversal), rep.dim

  def value(g: int) -> CycInt:
    perm, hs = transversal.move(g)
    inverse = [0] * n
    for i, j in enumerate(perm):
      inverse[j] = i
    trace = CycInt.zero(rep.e)
    for basis in itertools.product(range(d), repeat=n):
      term = CycInt.one(rep.e)
      for j in range(n):
        term = term * rep.matrices[hs[inverse[j]]][basis[j]][basis[inverse[j]]]
        if not term:
          break
      trace = trace + term
    return embed(trace, ring.value_order)

  return ring.from_function(value)


def burnside_difference_expansion(U: Biset, X: GSet, Y: GSet) -> GhostVector:
  """ The marks of `⊔_{V ⊊_H U} Ind_{G_V}^G(s_V(X) × s_{U-V}(Y))` with V running over G-orbit representatives of
  the proper H-invariant subsets. Together with `s_U(X)` this decomposes `s_U(X ⊔ Y)`. """

  G = U.left
  n = len(U.transversal)
  total = ghost_ring('B', G).zero()
  seen: set[int] = set()
  for subset in invariant_subsets(U):
    if subset.orbit_id in seen or len(subset.orbits) == n:
      continue
    seen.add(subset.orbit_id)
    inside = restrict_biset(U, subset.points, subset.stabilizer)
    outside = restrict_biset(U, set(range(U.size)) - subset.points, subset.stabilizer)
    local = tensor_induce_set(inside, X) * tensor_induce_set(outside, Y)
    total = total + marks(induce(local, G))
  return total


def s_U_marks(U: Biset, X: GSet) -> GhostVector:
  return marks(tensor_induce_set(U, X))

