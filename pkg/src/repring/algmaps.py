""" Difference operators and sampled degree witnesses for maps between representation rings.

A map `f` is algebraic of degree at most `n` if every iterated difference `D_{a_1} ⋯ D_{a_{n+1}} f` vanishes,
where `D_a f(x) = f(x + a) - f(x)`. Universal statements over a lattice can not be checked exhaustively, so the
functions here evaluate differences on a seeded pool of samples and report witnesses.
"""

from __future__ import annotations

import dataclasses
import enum
import logging
import random
import typing as t

from repring.lattices import Lattice, RingElement

logger = logging.getLogger(__name__)

Evaluator = t.Callable[[RingElement], RingElement]


@dataclasses.dataclass(frozen=True)
class MapUnderTest:
  domain: Lattice
  codomain: Lattice
  evaluator: Evaluator
  name: str = 'f'

  def __call__(self, x: RingElement) -> RingElement:
    return self.evaluator(x)


def difference(f: MapUnderTest, a: RingElement) -> MapUnderTest:
  """ `D_a f: x ↦ f(x + a) - f(x)`. """

  return MapUnderTest(f.domain, f.codomain, lambda x: f(x + a) - f(x), f'D({f.name})')


def product(f: MapUnderTest, g: MapUnderTest) -> MapUnderTest:
  """ The pointwise product `x ↦ f(x)·g(x)`. """

  if f.domain is not g.domain or f.codomain is not g.codomain:
    raise ValueError('the maps of a product must share domain and codomain')
  return MapUnderTest(f.domain, f.codomain, lambda x: f(x) * g(x), f'{f.name}*{g.name}')


def sample_pool(domain: Lattice, seed: int = 0, count: int = 20, bound: int = 2) -> list[RingElement]:
  """ The generators of *domain* followed by *count* seeded combinations of them with coefficients in
  `[-bound, bound]`. """

  rng = random.Random(seed)
  pool = [domain.element(v) for v in domain.generators]
  for _ in range(count):
    v = domain.ring.zero()
    for generator in domain.generators:
      c = rng.randint(-bound, bound)
      if c:
        v = v + generator * c
    pool.append(domain.element(v))
  return pool


class Verdict(enum.Enum):
  #: All sampled (n+1)-fold differences vanish and some n-fold difference does not.
  CONSISTENT = 'consistent_with_degree_n'

  #: All sampled (n+1)-fold differences vanish, but so do all sampled n-fold differences.
  LOWER_DEGREE_VANISHES = 'refuted_below_n'

  #: Some (n+1)-fold difference is nonzero.
  INCONSISTENT = 'inconsistent'


@dataclasses.dataclass
class DegreeWitness:
  verdict: Verdict
  degree: int

  #: True if a nonzero n-fold difference was found, which refutes every degree below n.
  lower_degree_refuted: bool

  #: The differences `a_1, ..., a_k` and the point `x` of a nonzero difference, if any.
  witness: tuple[list[RingElement], RingElement] | None = None

  #: The number of difference evaluations performed.
  evaluations: int = 0

  def to_json(self) -> dict[str, t.Any]:
    return {
      'verdict': self.verdict.value,
      'degree': self.degree,
      'lower_degree_refuted': self.lower_degree_refuted,
      'witness': None if self.witness is None else {
        'differences': [a.ghost.to_json() for a in self.witness[0]],
        'point': self.witness[1].ghost.to_json(),
      },
      'evaluations': self.evaluations,
    }


def _iterated_difference(f: MapUnderTest, shifts: t.Sequence[RingElement], x: RingElement) -> RingElement:
  """ `D_{a_1} ⋯ D_{a_k} f (x)` as the alternating sum over subsets of the shifts. """

  k = len(shifts)
  total = f.codomain.zero()
  for mask in range(1 << k):
    point = x
    for i in range(k):
      if mask >> i & 1:
        point = point + shifts[i]
    value = f(point)
    total = total - value if (k - bin(mask).count('1')) % 2 else total + value
  return total


def _tuples(pool: t.Sequence[RingElement], k: int, rng: random.Random, limit: int) -> t.Iterator[
    tuple[list[RingElement], RingElement]]:
  zero = pool[0].lattice.zero()
  one = pool[0].lattice.one()
  yield [one] * k, zero
  for _ in range(limit):
    yield [rng.choice(pool) for _ in range(k)], rng.choice(pool)


def degree_witness(f: MapUnderTest, n: int, samples: t.Sequence[RingElement] | None = None, seed: int = 0,
    tuples: int = 20) -> DegreeWitness:
  """ Test whether *f* behaves like an algebraic map of degree exactly *n* on a sample pool. The tuple
  `(1, ..., 1; 0)` is always among the evaluated tuples. """

  pool = list(samples) if samples is not None else sample_pool(f.domain, seed)
  rng = random.Random(seed)
  evaluations = 0

  for shifts, x in _tuples(pool, n + 1, rng, tuples):
    evaluations += 1
    if not _iterated_difference(f, shifts, x).ghost.is_zero():
      logger.debug('%s: nonzero %d-fold difference', f.name, n + 1)
      return DegreeWitness(Verdict.INCONSISTENT, n, False, (shifts, x), evaluations)

  for shifts, x in _tuples(pool, n, rng, tuples):
    evaluations += 1
    if not _iterated_difference(f, shifts, x).ghost.is_zero():
      return DegreeWitness(Verdict.CONSISTENT, n, True, (shifts, x), evaluations)

  return DegreeWitness(Verdict.LOWER_DEGREE_VANISHES, n, False, None, evaluations)


def sampled_degree(f: MapUnderTest, max_degree: int, seed: int = 0) -> int | None:
  """ The least `n <= max_degree` such that every sampled `(n+1)`-fold difference vanishes. """

  pool = sample_pool(f.domain, seed)
  for n in range(max_degree + 1):
    if degree_witness(f, n, pool, seed).verdict != Verdict.INCONSISTENT:
      return n
  return None
