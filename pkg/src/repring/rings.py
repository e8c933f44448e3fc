""" The representation rings as plugins. Each ring knows its ghost ring, its lattice and its ghost level tensor
induction; the command line resolves rings by tag through the `repring.rings` entrypoint group. """

from __future__ import annotations

import abc
import logging
import typing as t

from repring.ghost import GhostRing, GhostVector, ghost_ring
from repring.lattices import Lattice, lattice
from repring.teninduct import tilde_B_U, tilde_RF_U, tilde_RK_U, tilde_T_U

if t.TYPE_CHECKING:
  from repring.groups import Group
  from repring.gsets import Biset

logger = logging.getLogger(__name__)


class Ring(abc.ABC):
  """ Base class for the representation rings. """

  ENTRYPOINT = 'repring.rings'

  #: The tag of the ghost ring, one of `B`, `T`, `RK` and `RF`.
  tag: t.ClassVar[str]

  #: A human readable name.
  title: t.ClassVar[str]

  #: Whether the ring depends on a prime p.
  needs_prime: t.ClassVar[bool] = False

  def check_prime(self, p: int | None) -> int | None:
    if self.needs_prime and p is None:
      raise ValueError(f'the {self.title} ({self.tag}) needs a prime, pass --p')
    return p if self.needs_prime else None

  def ghost_ring(self, group: Group, p: int | None = None, e: int | None = None) -> GhostRing:
    return ghost_ring(self.tag, group, self.check_prime(p), e)

  def lattice(self, group: Group, p: int | None = None, e: int | None = None) -> Lattice:
    return lattice(self.tag, group, self.check_prime(p), e)

  @abc.abstractmethod
  def tensor_induce(self, U: Biset, a: GhostVector) -> GhostVector:
    """ The ghost level tensor induction along *U*. """


class BurnsideRing(Ring):
  tag = 'B'
  title = 'Burnside ring'

  def tensor_induce(self, U: Biset, a: GhostVector) -> GhostVector:
    return tilde_B_U(U, a)


class TrivialSourceRing(Ring):
  tag = 'T'
  title = 'trivial source ring'
  needs_prime = True

  def tensor_induce(self, U: Biset, a: GhostVector) -> GhostVector:
    return tilde_T_U(U, a)


class CharacterRing(Ring):
  tag = 'RK'
  title = 'character ring'

  def tensor_induce(self, U: Biset, a: GhostVector) -> GhostVector:
    return tilde_RK_U(U, a)


class BrauerCharacterRing(Ring):
  tag = 'RF'
  title = 'Brauer character ring'
  needs_prime = True

  def tensor_induce(self, U: Biset, a: GhostVector) -> GhostVector:
    return tilde_RF_U(U, a)


BUILTIN_RINGS: dict[str, type[Ring]] = {
  cls.tag: cls for cls in (BurnsideRing, TrivialSourceRing, CharacterRing, BrauerCharacterRing)
}


def load_ring(tag: str) -> Ring:
  """ Load the ring registered under *tag*. Falls back to the built-in rings when the package metadata is not
  available, e.g. when running from a source checkout. """

  from nr.util.plugins import NoSuchEntrypointError, load_entrypoint

  try:
    ring_cls: type[Ring] = load_entrypoint(Ring, tag)  # type: ignore
  except NoSuchEntrypointError:
    if tag not in BUILTIN_RINGS:
      raise ValueError(f'unknown ring {tag!r}, expected one of {", ".join(BUILTIN_RINGS)}')
    logger.debug('ring %r is not registered as an entrypoint, using the built-in class', tag)
    ring_cls = BUILTIN_RINGS[tag]
  return ring_cls()
