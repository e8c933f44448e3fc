
import pytest

from repring.gsets import (
  Biset, BisetError, GSet, Transversal, VirtualBiset, bisets_isomorphic, compose, disjoint_union, double_cosets,
  fixed_points, induce, invariant_subsets, isomorphic, isomorphism_biset, restrict_biset, stabilizer_transport,
  tensor_induce_set)
from repring.library import NamedBisetResolver, named_group


def _subgroup(G, order):
  return next(S for S in G.subgroups if S.order == order)


def test_cosets_and_marks() -> None:
  S3 = named_group('S3')
  X = GSet.cosets(S3, _subgroup(S3, 2))
  assert X.size == 3
  assert X.mark_vector == (3, 1, 1, 1, 0, 0)
  assert (X * X).mark_vector == (9, 1, 1, 1, 0, 0)
  assert (X + GSet.point(S3)).mark_vector == (4, 2, 2, 2, 1, 1)
  assert len(fixed_points(X, _subgroup(S3, 3))) == 0
  assert len(X.orbits()) == 1
  assert len((X * X).orbits()) == 2
  assert GSet.natural(S3).mark_vector == X.mark_vector
  assert isomorphic(GSet.natural(S3), X)


def test_gset_validation() -> None:
  S3 = named_group('S3')
  with pytest.raises(ValueError):
    GSet(S3, [[1, 0] for _ in range(S3.order)])


def test_induce() -> None:
  S3 = named_group('S3')
  C3 = _subgroup(S3, 3)
  induced = induce(GSet.point(C3.as_group()), S3)
  assert isomorphic(induced, GSet.cosets(S3, C3))
  induced = induce(GSet.regular(C3.as_group()), S3)
  assert isomorphic(induced, GSet.regular(S3))


def test_biset_basics() -> None:
  resolver = NamedBisetResolver()
  U = resolver.ind('C2', 'C4')
  assert len(U.transversal) == 2
  for u in range(U.size):
    for g in range(U.left.order):
      h = U.right_index(u).get(U.lact[g][u])
      if h is not None:
        assert U.phi(u, g) == h
  identity = Biset.identity(named_group('S3'))
  assert identity.transversal == (0,)
  assert double_cosets(identity.left.trivial, identity) == [0]


def test_transversal_theta_is_homomorphism() -> None:
  U = NamedBisetResolver().ind('C2', 'S3')
  theta = Transversal(U).theta
  G = U.left
  for a in range(G.order):
    for b in range(G.order):
      assert theta(G.mul(a, b)) == theta(a) * theta(b)


def test_tensor_induce_set() -> None:
  U = NamedBisetResolver().ind('C2', 'C4')
  H = U.right
  X = GSet.cosets(H, H.whole) + GSet.regular(H)
  Y = tensor_induce_set(U, X)
  assert Y.size == 9
  assert Y.mark_vector == (9, 1, 1)
  assert tensor_induce_set(U, GSet.regular(H)).mark_vector == (4, 0, 0)
  with pytest.raises(BisetError):
    tensor_induce_set(U, GSet.point(U.left))


def test_invariant_subsets() -> None:
  U = NamedBisetResolver().ind('C2', 'C4')
  subsets = invariant_subsets(U)
  assert len(subsets) == 4
  assert len({V.orbit_id for V in subsets}) == 3
  assert [V.stabilizer.order for V in subsets] == [4, 2, 2, 4]
  V = subsets[1]
  restricted = restrict_biset(U, V.points, V.stabilizer)
  assert restricted.left.order == 2
  assert restricted.size == 2
  with pytest.raises(BisetError):
    restrict_biset(U, V.points, U.left.whole)


def test_stabilizer_transport() -> None:
  U = NamedBisetResolver().ind('C2', 'S3')
  G = U.left
  result = stabilizer_transport(U, 0, G.whole)
  assert result.intersection.order == 2
  assert result.image == U.right.whole


def test_compose_and_isomorphism() -> None:
  resolver = NamedBisetResolver()
  U = resolver.ind('C2', 'C4')
  composed = compose(Biset.identity(U.left), U)
  assert composed.size == U.size
  assert bisets_isomorphic(composed, U)
  assert not bisets_isomorphic(disjoint_union(U, U), U)
  with pytest.raises(BisetError):
    compose(U, U)


def test_isomorphism_biset() -> None:
  C3 = named_group('C3')
  swap = [0, 2, 1]
  U = isomorphism_biset(C3, C3, swap)
  assert U.size == 3
  with pytest.raises(BisetError):
    isomorphism_biset(C3, C3, [1, 0, 2])


def test_virtual_biset() -> None:
  U = NamedBisetResolver().ind('C2', 'C4')
  v = VirtualBiset.of(U)
  assert v.minus.size == 0
  assert (-v).plus.size == 0
  assert (v - v).plus.size == U.size
  with pytest.raises(BisetError):
    VirtualBiset(U, Biset.empty(U.right, U.right))
