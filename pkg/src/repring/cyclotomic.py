""" Exact arithmetic in the cyclotomic integers Z[ζ_e].

An element is stored as its canonical coefficient vector modulo the cyclotomic polynomial Φ_e, lowest degree
first. The cyclotomic polynomials themselves are computed with `sympy` by dividing `x^e - 1` by all Φ_d for
proper divisors d of e; everything else is plain integer list arithmetic.
"""

from __future__ import annotations

import dataclasses
import functools
import math
import typing as t


class OrderMismatch(ValueError):
  """ Raised when two cyclotomic integers of different orders meet, or an embedding does not exist. """


class NotInSubring(ArithmeticError):
  """ Raised when a value can not be written over a smaller cyclotomic order. """

  def __init__(self, value: CycInt, order: int) -> None:
    self.value = value
    self.order = order

  def __str__(self) -> str:
    return f'{self.value.render()} (e={self.value.e}) does not lie in Z[ζ_{self.order}]'


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
  """ Coefficients of Φ_e, lowest degree first. """

  from sympy import Poly, Symbol
  from sympy.polys.domains import ZZ

  if e < 1:
    raise ValueError(f'cyclotomic order must be positive, got {e}')
  x = Symbol('x')
  poly = Poly(x ** e - 1, x, domain=ZZ)
  for d in range(1, e):
    if e % d == 0:
      poly = poly.exquo(Poly(list(reversed(cyclotomic_polynomial(d))), x, domain=ZZ))
  return tuple(int(c) for c in reversed(poly.all_coeffs()))


@functools.lru_cache(maxsize=None)
def euler_phi(e: int) -> int:
  return len(cyclotomic_polynomial(e)) - 1


@functools.lru_cache(maxsize=None)
def units_mod(e: int) -> tuple[int, ...]:
  """ Representatives of (Z/e)^× in `1..e`, that is, the exponents i of the Galois automorphisms γ_i. """

  if e == 1:
    return (1,)
  return tuple(i for i in range(1, e) if math.gcd(i, e) == 1)


def _reduce(e: int, coeffs: list[int]) -> tuple[int, ...]:
  phi = cyclotomic_polynomial(e)
  n = len(phi) - 1
  coeffs = list(coeffs)
  # Φ_e is monic.
  for k in range(len(coeffs) - 1, n - 1, -1):
    c = coeffs[k]
    if c:
      for j in range(n):
        coeffs[k - n + j] -= c * phi[j]
      coeffs[k] = 0
  coeffs = coeffs[:n]
  return tuple(coeffs + [0] * (n - len(coeffs)))


@functools.lru_cache(maxsize=None)
def _root_table(e: int) -> tuple[tuple[int, ...], ...]:
  table = []
  for k in range(e):
    coeffs = [0] * (k + 1)
    coeffs[k] = 1
    table.append(_reduce(e, coeffs))
  return tuple(table)


@dataclasses.dataclass(frozen=True)
class CycInt:
  """ An element of Z[ζ_e] in canonical form. """

  #: The order of the root of unity ζ_e.
  e: int

  #: Coefficients of the canonical representative of length φ(e).
  coeffs: tuple[int, ...]

  def __post_init__(self) -> None:
    if len(self.coeffs) != euler_phi(self.e):
      raise ValueError(f'CycInt over e={self.e} needs {euler_phi(self.e)} coefficients, got {len(self.coeffs)}')

  @staticmethod
  def from_poly(e: int, coeffs: t.Iterable[int]) -> CycInt:
    """ Reduce an arbitrary integer polynomial in ζ_e. """

    return CycInt(e, _reduce(e, [int(c) for c in coeffs]))

  @staticmethod
  def integer(e: int, n: int) -> CycInt:
    return CycInt(e, (int(n),) + (0,) * (euler_phi(e) - 1))

  @staticmethod
  def zero(e: int) -> CycInt:
    return CycInt.integer(e, 0)

  @staticmethod
  def one(e: int) -> CycInt:
    return CycInt.integer(e, 1)

  def _check(self, other: CycInt) -> None:
    if self.e != other.e:
      raise OrderMismatch(f'cyclotomic orders differ: {self.e} != {other.e}')

  def _coerce(self, other: t.Any) -> CycInt:
    if isinstance(other, int):
      return CycInt.integer(self.e, other)
    if isinstance(other, CycInt):
      self._check(other)
      return other
    return NotImplemented

  def __add__(self, other: CycInt | int) -> CycInt:
    other = self._coerce(other)
    if other is NotImplemented:
      return NotImplemented
    return CycInt(self.e, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

  __radd__ = __add__

  def __neg__(self) -> CycInt:
    return CycInt(self.e, tuple(-a for a in self.coeffs))

  def __sub__(self, other: CycInt | int) -> CycInt:
    other = self._coerce(other)
    if other is NotImplemented:
      return NotImplemented
    return CycInt(self.e, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

  def __rsub__(self, other: int) -> CycInt:
    return -self + other

  def __mul__(self, other: CycInt | int) -> CycInt:
    if isinstance(other, int):
      return CycInt(self.e, tuple(a * other for a in self.coeffs))
    other = self._coerce(other)
    if other is NotImplemented:
      return NotImplemented
    product = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
    for i, a in enumerate(self.coeffs):
      if a:
        for j, b in enumerate(other.coeffs):
          if b:
            product[i + j] += a * b
    return CycInt(self.e, _reduce(self.e, product))

  __rmul__ = __mul__

  def __pow__(self, n: int) -> CycInt:
    if n < 0:
      return self.inverse() ** (-n)
    result, base = CycInt.one(self.e), self
    while n:
      if n & 1:
        result = result * base
      base = base * base
      n >>= 1
    return result

  def __bool__(self) -> bool:
    return any(self.coeffs)

  def is_integer(self) -> bool:
    return not any(self.coeffs[1:])

  def as_integer(self) -> int:
    if not self.is_integer():
      raise NotInSubring(self, 1)
    return self.coeffs[0]

  def exact_divide(self, n: int) -> CycInt:
    """ Divide by a rational integer, requiring the quotient to be integral. """

    if any(c % n for c in self.coeffs):
      raise ArithmeticError(f'{self.render()} is not divisible by {n}')
    return CycInt(self.e, tuple(c // n for c in self.coeffs))

  def inverse(self) -> CycInt:
    """ The inverse of a signed root of unity. Other units are not supported. """

    decomposed = signed_root_decompose(self)
    if decomposed is None:
      raise ArithmeticError(f'{self.render()} is not a signed root of unity')
    sign, k = decomposed
    return root(self.e, -k) * sign

  def dual(self) -> CycInt:
    """ Complex conjugation, γ_{-1}. """

    return galois(GaloisElt(self.e, -1), self)

  def render(self, var: str = 'z') -> str:
    terms = []
    for k, c in enumerate(self.coeffs):
      if not c:
        continue
      mono = '1' if k == 0 else (var if k == 1 else f'{var}^{k}')
      if k == 0:
        body = str(abs(c))
      elif abs(c) == 1:
        body = mono
      else:
        body = f'{abs(c)}*{mono}'
      terms.append(('-' if c < 0 else '+', body))
    if not terms:
      return '0'
    text = ('-' if terms[0][0] == '-' else '') + terms[0][1]
    for sign, body in terms[1:]:
      text += f' {sign} {body}'
    return text

  def to_json(self) -> dict[str, t.Any]:
    return {'e': self.e, 'coeffs': list(self.coeffs)}

  def __repr__(self) -> str:
    return f'CycInt(e={self.e}, {self.render()})'


@dataclasses.dataclass(frozen=True)
class GaloisElt:
  """ The automorphism γ_i of Q(ζ_e) with γ_i(ζ_e) = ζ_e^i. """

  e: int
  i: int

  def __post_init__(self) -> None:
    i = self.i % self.e if self.e > 1 else 1
    if math.gcd(i, self.e) != 1:
      raise ValueError(f'γ_{self.i} is not a Galois automorphism of Q(ζ_{self.e})')
    object.__setattr__(self, 'i', i)

  def inverse(self) -> GaloisElt:
    """ γ_{i*} with i·i* ≡ 1 (mod e). """

    return GaloisElt(self.e, pow(self.i, -1, self.e) if self.e > 1 else 1)

  def __mul__(self, other: GaloisElt) -> GaloisElt:
    if self.e != other.e:
      raise OrderMismatch(f'Galois orders differ: {self.e} != {other.e}')
    return GaloisElt(self.e, self.i * other.i)

  def __call__(self, z: CycInt) -> CycInt:
    return galois(self, z)


def root(e: int, k: int) -> CycInt:
  """ ζ_e^k in canonical form. """

  return CycInt(e, _root_table(e)[k % e])


def galois(g: GaloisElt, z: CycInt) -> CycInt:
  if g.e != z.e:
    raise OrderMismatch(f'γ over e={g.e} applied to a value over e={z.e}')
  if g.i == 1:
    return z
  table = _root_table(z.e)
  result = [0] * len(z.coeffs)
  for k, c in enumerate(z.coeffs):
    if c:
      for j, x in enumerate(table[(g.i * k) % z.e]):
        result[j] += c * x
  return CycInt(z.e, tuple(result))


def embed(z: CycInt, e: int) -> CycInt:
  """ The image of *z* under ζ_{z.e} ↦ ζ_e^{e/z.e}. """

  if e % z.e:
    raise OrderMismatch(f'can not embed Z[ζ_{z.e}] into Z[ζ_{e}]')
  if e == z.e:
    return z
  step = e // z.e
  table = _root_table(e)
  result = [0] * euler_phi(e)
  for k, c in enumerate(z.coeffs):
    if c:
      for j, x in enumerate(table[(k * step) % e]):
        result[j] += c * x
  return CycInt(e, tuple(result))


@functools.lru_cache(maxsize=None)
def _embedding_columns(d: int, e: int) -> tuple[tuple[int, ...], ...]:
  return tuple(embed(root(d, j), e).coeffs for j in range(euler_phi(d)))


def contract(z: CycInt, d: int) -> CycInt:
  """ The inverse of #embed(): write *z* over the smaller order *d*. Raises #NotInSubring if impossible. """

  from repring.linalg import solve_rational

  if z.e % d:
    raise OrderMismatch(f'Z[ζ_{d}] is not a subring of Z[ζ_{z.e}]')
  if z.e == d:
    return z
  if z.is_integer():
    return CycInt.integer(d, z.coeffs[0])
  solution = solve_rational(_embedding_columns(d, z.e), z.coeffs)
  if solution is None or any(x.denominator != 1 for x in solution):
    raise NotInSubring(z, d)
  return CycInt(d, tuple(int(x) for x in solution))


@functools.lru_cache(maxsize=None)
def _signed_roots(e: int) -> dict[tuple[int, ...], tuple[int, int]]:
  lookup: dict[tuple[int, ...], tuple[int, int]] = {}
  for k in range(e):
    for sign in (1, -1):
      coeffs = tuple(sign * c for c in _root_table(e)[k])
      lookup.setdefault(coeffs, (sign, k))
  return lookup


def signed_root_decompose(z: CycInt) -> tuple[int, int] | None:
  """ Returns `(s, k)` with `z == s * ζ^k`, preferring the smallest `k` and then `s = +1`. """

  return _signed_roots(z.e).get(z.coeffs)


def signed_roots(e: int) -> list[CycInt]:
  """ All distinct values ±ζ_e^k in the order of #signed_root_decompose() preference. """

  items = sorted(_signed_roots(e).items(), key=lambda kv: (kv[1][1], -kv[1][0]))
  return [CycInt(e, coeffs) for coeffs, _ in items]


def is_orthogonal(z: CycInt) -> bool:
  """ True if `z * γ_{-1}(z) == 1`. """

  return z * z.dual() == CycInt.one(z.e)
