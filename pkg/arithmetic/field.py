"""Prime field arithmetic GF(p) with a field-operation counter."""

import logging
import threading
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np
from sympy import isprime
from sympy.ntheory import sqrt_mod

logger = logging.getLogger(__name__)

MAX_MODULUS = 2**63
# int64 arrays hold sums of this many products of reduced entries without overflow.
INT64_SAFE_TERMS = 4096


class UnsupportedCharacteristicError(ValueError):
    """Raised for characteristic 2."""


class FieldMismatchError(ValueError):
    """Raised when elements of different fields are combined."""


class FieldDivisionError(ZeroDivisionError):
    """Raised when inverting zero."""


class PrimeField:
    """
    The field GF(p) for an odd prime p.

    The field owns the operation counter. Scalar operations charge one step each; the numpy kernels in
    arithmetic.linalg charge their bulk cost through charge().
    """

    def __init__(self, modulus: int):
        modulus = int(modulus)
        if modulus == 2:
            logger.error("Rejected modulus 2")
            raise UnsupportedCharacteristicError("Characteristic 2 is not supported.")
        if modulus < 3 or modulus >= MAX_MODULUS or not isprime(modulus):
            logger.error("Rejected modulus %d", modulus)
            raise ValueError(f"Modulus must be an odd prime below 2**63, got {modulus}.")
        self._modulus = modulus
        self._ops = 0
        self._lock = threading.Lock()
        if (modulus - 1) ** 2 * INT64_SAFE_TERMS < 2**63:
            self._dtype = np.dtype(np.int64)
        else:
            self._dtype = np.dtype(object)

    @property
    def modulus(self) -> int:
        return self._modulus

    @property
    def dtype(self) -> np.dtype:
        """Array dtype for canonical representatives: int64 for small moduli, Python ints otherwise."""
        return self._dtype

    @property
    def uses_objects(self) -> bool:
        return self._dtype == np.dtype(object)

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.modulus == self._modulus

    def __hash__(self) -> int:
        return hash(("GF", self._modulus))

    def __repr__(self) -> str:
        return f"PrimeField({self._modulus})"

    # Counter

    def charge(self, count: int):
        """Add count field operations to the counter."""
        if count:
            with self._lock:
                self._ops += int(count)

    def op_count(self) -> int:
        with self._lock:
            return self._ops

    def reset_count(self):
        with self._lock:
            self._ops = 0

    # Elements

    def element(self, value: int) -> "FieldElement":
        return FieldElement(int(value) % self._modulus, self)

    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    def one(self) -> "FieldElement":
        return FieldElement(1, self)

    def random_element(self, rng: np.random.Generator) -> "FieldElement":
        return FieldElement(int(rng.integers(0, self._modulus)), self)

    def _check(self, *elements: "FieldElement"):
        for element in elements:
            if element.field != self:
                raise FieldMismatchError(f"Element of GF({element.field.modulus}) used in GF({self._modulus}).")

    def add(self, a: "FieldElement", b: "FieldElement") -> "FieldElement":
        self._check(a, b)
        self.charge(1)
        return FieldElement((a.value + b.value) % self._modulus, self)

    def sub(self, a: "FieldElement", b: "FieldElement") -> "FieldElement":
        self._check(a, b)
        self.charge(1)
        return FieldElement((a.value - b.value) % self._modulus, self)

    def neg(self, a: "FieldElement") -> "FieldElement":
        self._check(a)
        self.charge(1)
        return FieldElement(-a.value % self._modulus, self)

    def mul(self, a: "FieldElement", b: "FieldElement") -> "FieldElement":
        self._check(a, b)
        self.charge(1)
        return FieldElement(a.value * b.value % self._modulus, self)

    def inv(self, a: "FieldElement") -> "FieldElement":
        self._check(a)
        if a.value == 0:
            raise FieldDivisionError(f"Zero has no inverse in GF({self._modulus}).")
        self.charge(1)
        return FieldElement(pow(a.value, -1, self._modulus), self)

    def sqrt(self, value: int) -> Optional[int]:
        """A square root of value, or None for a non-residue. Not counted: only used for sampling points."""
        return sqrt_mod(int(value) % self._modulus, self._modulus)


@dataclass(frozen=True)
class FieldElement:
    """An element of GF(p) held as its canonical representative."""

    value: int
    field: PrimeField

    def __post_init__(self):
        if not 0 <= self.value < self.field.modulus:
            raise ValueError(f"{self.value} is not a canonical representative mod {self.field.modulus}.")

    def _coerce(self, other: Union["FieldElement", int]) -> "FieldElement":
        if isinstance(other, FieldElement):
            return other
        return self.field.element(other)

    def __add__(self, other):
        return self.field.add(self, self._coerce(other))

    def __radd__(self, other):
        return self.field.add(self._coerce(other), self)

    def __sub__(self, other):
        return self.field.sub(self, self._coerce(other))

    def __rsub__(self, other):
        return self.field.sub(self._coerce(other), self)

    def __mul__(self, other):
        return self.field.mul(self, self._coerce(other))

    def __rmul__(self, other):
        return self.field.mul(self._coerce(other), self)

    def __truediv__(self, other):
        return self.field.mul(self, self.field.inv(self._coerce(other)))

    def __neg__(self):
        return self.field.neg(self)

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} mod {self.field.modulus}"
