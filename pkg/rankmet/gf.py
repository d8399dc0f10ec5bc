"""Arithmetic in a field tower F_p ⊆ F_q ⊆ F_{q^m}.

Elements are galois FieldArrays over F_{p^{em}}; their integer value is the
canonical encoding sum(c_i * p^i) of the coefficient vector modulo the
defining polynomial. The subfield F_q sits inside as {0} ∪ {g^(i*stride)}.
"""

import functools
import logging
import re
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any

import galois
import numpy as np

from .config import MAX_FIELD_ORDER
from .errors import (
    FieldTooLarge,
    InvalidArgs,
    NotPrime,
    NotPrimitiveModulus,
    ParseError,
    Reducible,
)

logger = logging.getLogger(__name__)

Elem = int

_POWER_TOKEN = re.compile(r"^g\^(-?\d+)$")


@dataclass(frozen=True, eq=False)
class FieldCtx:
    """A tower F_p ⊆ F_q = F_{p^e} ⊆ F_{q^m} with a fixed F_q-basis of the top field."""

    p: int
    e: int
    m: int
    modulus: tuple[int, ...]
    GF: type[galois.FieldArray] = field(repr=False)
    antilog: np.ndarray = field(repr=False)
    log: np.ndarray = field(repr=False)
    gamma: galois.FieldArray = field(repr=False)
    expansion_matrix: galois.FieldArray = field(repr=False)
    default_gamma: bool = True

    @property
    def q(self) -> int:
        return self.p**self.e

    @property
    def degree(self) -> int:
        return self.e * self.m

    @property
    def order(self) -> int:
        return self.p**self.degree

    @property
    def subfield_stride(self) -> int:
        return (self.order - 1) // (self.q - 1)

    @functools.cached_property
    def prime_field(self) -> type[galois.FieldArray]:
        return galois.GF(self.p)

    @functools.cached_property
    def subfield_elements(self) -> np.ndarray:
        """Integer encodings of the embedded F_q, sorted ascending."""
        values = np.concatenate([[0], self.antilog[:: self.subfield_stride]])
        return np.sort(values.astype(np.int64))

    @functools.cached_property
    def subfield(self) -> galois.FieldArray:
        return self.GF(self.subfield_elements)

    @functools.cached_property
    def beta(self) -> galois.FieldArray:
        """The F_p-basis 1, h, ..., h^(e-1) of F_q, h = g^stride."""
        exponents = np.arange(self.e) * self.subfield_stride % (self.order - 1)
        return self.GF(self.antilog[exponents])

    @property
    def generator(self) -> galois.FieldArray:
        return self.power(1)

    def power(self, i: int) -> galois.FieldArray:
        """g^i for the primitive element g (the class of x)."""
        return self.GF(int(self.antilog[i % (self.order - 1)]))

    def elements(self, values: Any) -> galois.FieldArray:
        """Coerce ints, nested lists or foreign FieldArrays to this field."""
        if isinstance(values, self.GF):
            return values
        if isinstance(values, galois.FieldArray):
            values = values.view(np.ndarray)
        array = np.asarray(values, dtype=np.int64)
        if array.size and (array.min() < 0 or array.max() >= self.order):
            raise InvalidArgs(f"Element out of range for GF({self.order})")
        return self.GF(array)

    def label(self, x: Elem) -> str:
        x = int(x)
        return "0" if x == 0 else f"g^{int(self.log[x])}"

    def to_json(self) -> dict[str, Any]:
        spec: dict[str, Any] = {
            "p": self.p,
            "e": self.e,
            "m": self.m,
            "modulus": list(self.modulus),
        }
        if not self.default_gamma:
            spec["gamma"] = [int(x) for x in self.gamma]
        return spec


def build_field(
    p: int,
    e: int,
    m: int,
    modulus: Sequence[int] | None = None,
    gamma: Sequence[Any] | None = None,
    *,
    max_order: int = MAX_FIELD_ORDER,
) -> FieldCtx:
    """Build the tower F_p ⊆ F_{p^e} ⊆ F_{p^{em}}.

    `modulus` lists the coefficients c_0..c_{em} of the defining polynomial
    of F_{p^{em}} over F_p; by default the first primitive polynomial in
    galois' minimal order is used. `gamma` is the F_q-basis of the top field
    as integer encodings, defaulting to 1, g, ..., g^(m-1).
    """
    modulus_key = None if modulus is None else tuple(int(c) for c in modulus)
    gamma_key = None if gamma is None else tuple(int(x) for x in gamma)
    return _build_field(int(p), int(e), int(m), modulus_key, gamma_key, max_order)


@functools.lru_cache(maxsize=64)
def _build_field(
    p: int,
    e: int,
    m: int,
    modulus: tuple[int, ...] | None,
    gamma: tuple[int, ...] | None,
    max_order: int,
) -> FieldCtx:
    if not galois.is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if e < 1 or m < 1:
        raise InvalidArgs(f"Extension degrees must be positive, got e={e}, m={m}")
    degree = e * m
    order = p**degree
    if order > max_order:
        raise FieldTooLarge(f"GF({p}^{degree}) has {order} elements, cap is {max_order}")

    prime_field = galois.GF(p)
    if modulus is None:
        modulus = _default_modulus(p, degree)
    _validate_modulus(p, degree, modulus)

    if degree == 1:
        GF = prime_field
        g = (-modulus[0]) % p
    else:
        poly = galois.Poly(list(reversed(modulus)), field=prime_field)
        if not poly.is_irreducible():
            raise Reducible(f"{poly} is reducible over GF({p})")
        GF = galois.GF(order, irreducible_poly=poly)
        g = p

    exponents = np.arange(order - 1)
    antilog = (GF(np.full(order - 1, g, dtype=np.int64)) ** exponents).view(np.ndarray)
    antilog = antilog.astype(np.int64)
    if np.unique(antilog).size != order - 1:
        raise NotPrimitiveModulus(
            f"x is not a primitive element modulo {list(modulus)} over GF({p})"
        )
    log = np.full(order, -1, dtype=np.int64)
    log[antilog] = exponents

    if gamma is None:
        basis = GF(antilog[:m])
    else:
        if len(gamma) != m:
            raise InvalidArgs(f"Basis needs {m} elements, got {len(gamma)}")
        if any(not 0 <= x < order for x in gamma):
            raise InvalidArgs(f"Basis element out of range for GF({order})")
        basis = GF(np.array(gamma, dtype=np.int64))

    ctx = FieldCtx(
        p=p,
        e=e,
        m=m,
        modulus=modulus,
        GF=GF,
        antilog=antilog,
        log=log,
        gamma=basis,
        expansion_matrix=prime_field.Identity(degree),
        default_gamma=gamma is None or tuple(gamma) == tuple(antilog[:m].tolist()),
    )
    object.__setattr__(ctx, "expansion_matrix", _expansion_matrix(ctx))
    logger.debug("built GF(%d^%d) over GF(%d^%d), modulus %s", p, degree, p, e, modulus)
    return ctx


def _default_modulus(p: int, degree: int) -> tuple[int, ...]:
    if degree == 1:
        g = int(galois.primitive_root(p))
        return ((-g) % p, 1)
    poly = galois.primitive_poly(p, degree, method="min")
    return tuple(int(c) for c in poly.coeffs[::-1])


def _validate_modulus(p: int, degree: int, modulus: tuple[int, ...]) -> None:
    if len(modulus) != degree + 1:
        raise InvalidArgs(
            f"Modulus must have {degree + 1} coefficients, got {len(modulus)}"
        )
    if any(not 0 <= c < p for c in modulus):
        raise InvalidArgs(f"Modulus coefficients must lie in 0..{p - 1}")
    if modulus[-1] != 1:
        raise InvalidArgs("Modulus must be monic")
    if modulus[0] == 0:
        raise InvalidArgs("Modulus must have a nonzero constant term")


def _digits(values: np.ndarray, p: int, degree: int) -> np.ndarray:
    """Base-p digits (ascending) of integer encodings, on a new last axis."""
    powers = p ** np.arange(degree, dtype=np.int64)
    return (np.asarray(values, dtype=np.int64)[..., np.newaxis] // powers) % p


def _expansion_matrix(ctx: FieldCtx) -> galois.FieldArray:
    # Row j*e + t holds the F_p-coordinates of beta_t * gamma_j.
    products = ctx.gamma[:, np.newaxis] * ctx.beta[np.newaxis, :]
    rows = _digits(products.view(np.ndarray).reshape(-1), ctx.p, ctx.degree)
    matrix = ctx.prime_field(rows)
    if np.linalg.matrix_rank(matrix) != ctx.degree:
        raise InvalidArgs("Basis is not linearly independent over F_q")
    return np.linalg.inv(matrix)


def frobenius(ctx: FieldCtx, x: Any) -> galois.FieldArray:
    """x^q, elementwise."""
    return ctx.elements(x) ** ctx.q


def is_subfield_element(ctx: FieldCtx, x: Any) -> np.ndarray:
    return np.isin(ctx.elements(x).view(np.ndarray), ctx.subfield_elements)


def gamma_expand(ctx: FieldCtx, v: Any) -> galois.FieldArray:
    """Coordinates over F_q with respect to gamma, on a new last axis of size m.

    The coordinates are elements of the embedded F_q, so the result of a
    length-n vector is the n×m matrix Γ(v).
    """
    v = ctx.elements(v)
    shape = v.shape
    if v.size == 0:
        return ctx.GF.Zeros((*shape, ctx.m))
    digits = _digits(v.view(np.ndarray).reshape(-1), ctx.p, ctx.degree)
    coords = ctx.prime_field(digits) @ ctx.expansion_matrix
    coords = ctx.GF(coords.view(np.ndarray).reshape(*shape, ctx.m, ctx.e))
    if ctx.e == 1:
        return coords[..., 0]
    return (coords * ctx.beta).sum(axis=-1)


def gamma_reconstruct(ctx: FieldCtx, coords: Any) -> galois.FieldArray:
    """Inverse of gamma_expand: sum_j coords[..., j] * gamma_j."""
    coords = ctx.elements(coords)
    if coords.size == 0:
        return ctx.GF.Zeros(coords.shape[:-1])
    return (coords * ctx.gamma).sum(axis=-1)


def gamma_flatten(ctx: FieldCtx, vectors: Any) -> galois.FieldArray:
    """F_{q^m}^k -> F_q^{km}, coordinate i*m + j holding Γ(v)_{ij}."""
    vectors = ctx.elements(vectors)
    expanded = gamma_expand(ctx, vectors)
    return expanded.reshape(*vectors.shape[:-1], vectors.shape[-1] * ctx.m)


def gamma_unflatten(ctx: FieldCtx, flat: Any, k: int) -> galois.FieldArray:
    flat = ctx.elements(flat)
    return gamma_reconstruct(ctx, flat.reshape(*flat.shape[:-1], k, ctx.m))


def parse_element(ctx: FieldCtx, token: Any) -> Elem:
    """Accept an integer encoding, "0", or "g^i"."""
    if isinstance(token, bool):
        raise ParseError(f"Not a field element: {token!r}")
    if isinstance(token, int | np.integer):
        value = int(token)
    elif isinstance(token, str):
        text = token.strip()
        match = _POWER_TOKEN.match(text)
        if match:
            return int(ctx.power(int(match.group(1))))
        if not text.isdigit():
            raise ParseError(f"Not a field element: {token!r}")
        value = int(text)
    else:
        raise ParseError(f"Not a field element: {token!r}")
    if not 0 <= value < ctx.order:
        raise ParseError(f"Element {value} out of range for GF({ctx.order})")
    return value


def field_from_order(q: int, m: int, **kwargs: Any) -> FieldCtx:
    """The tower over F_q for a prime power q."""
    if q < 2 or not galois.is_prime_power(q):
        raise InvalidArgs(f"{q} is not a prime power")
    primes, exponents = galois.factors(q)
    return build_field(int(primes[0]), int(exponents[0]), m, **kwargs)


def field_info(ctx: FieldCtx) -> dict[str, Any]:
    return {
        **ctx.to_json(),
        "q": ctx.q,
        "order": ctx.order,
        "generator": int(ctx.generator),
        "subfield_stride": ctx.subfield_stride,
        "subfield": [int(x) for x in ctx.subfield_elements],
        "gamma_labels": [ctx.label(x) for x in ctx.gamma],
    }
