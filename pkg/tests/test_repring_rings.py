
import pytest

from repring.library import NamedBisetResolver, named_group
from repring.rings import BrauerCharacterRing, BurnsideRing, CharacterRing, Ring, TrivialSourceRing, load_ring
from repring.teninduct import tilde_RK_U


@pytest.mark.parametrize('tag,cls', [
  ('B', BurnsideRing), ('T', TrivialSourceRing), ('RK', CharacterRing), ('RF', BrauerCharacterRing)])
def test_load_ring(tag: str, cls: type[Ring]) -> None:
  ring = load_ring(tag)
  assert isinstance(ring, cls)
  assert ring.tag == tag


def test_load_unknown_ring() -> None:
  with pytest.raises(ValueError):
    load_ring('X')


def test_prime_handling() -> None:
  with pytest.raises(ValueError):
    TrivialSourceRing().check_prime(None)
  assert CharacterRing().check_prime(3) is None
  assert BrauerCharacterRing().check_prime(3) == 3


def test_ring_lattices() -> None:
  S3 = named_group('S3')
  assert BurnsideRing().lattice(S3, 3).rank == 4
  assert TrivialSourceRing().lattice(S3, 3).rank == 4
  assert CharacterRing().lattice(S3).rank == 3
  assert BrauerCharacterRing().lattice(S3, 3).rank == 2
  assert CharacterRing().ghost_ring(S3, 3).p is None


def test_tensor_induce() -> None:
  U = NamedBisetResolver().ind('C2', 'C4')
  ring = CharacterRing()
  a = ring.ghost_ring(U.right).one()
  assert ring.tensor_induce(U, a) == tilde_RK_U(U, a)
