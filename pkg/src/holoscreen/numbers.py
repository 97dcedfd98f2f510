"""Arithmetic criteria that decide orders before any group is built.

Everything in this module is exact integer arithmetic.  The only piece of
shipped data is the table of orders of non-abelian finite simple groups
(``data/simple_orders.txt``, regenerated by ``scripts/gen_simple_orders.py``);
it is treated as an axiom and every other fact is computed on demand.

An order n is called *solvable* when every group of that order is solvable,
which happens exactly when no non-abelian simple group order divides n: a
non-solvable group has a non-abelian simple composition factor, and in the
other direction a simple group times a cyclic complement realizes any
multiple of its order.

Factorization-backed answers are honest about effort: past the trial bound
they fall back to Pollard rho and, when the budget runs out, report
``unknown`` instead of guessing.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from importlib import resources

from sympy import factorint, isprime, perfect_power, primerange
from sympy.ntheory import pollard_rho

__all__ = [
    "SimpleOrderTable",
    "default_table",
    "is_solvable_number",
    "nonsolvable_orders_up_to",
    "is_cube_free",
    "gl_is_solvable",
    "suzuki_order",
    "SuzukiExponentCheck",
    "suzuki_exponent_check",
    "square_free_status",
    "wieferich_scan",
    "mersenne_gcd_property",
    "DoublingFamilyConditions",
    "doubling_family_conditions",
    "doubling_family_base",
    "OrderClassification",
    "classify_order",
    "VERDICT_SOLVABLE",
    "VERDICT_DOUBLING",
    "VERDICT_CUBE_FREE",
    "VERDICT_SCREEN",
]

TRIAL_BOUND = 10**7
RHO_RETRIES = 16
WIEFERICH_CAP = 10**8

VERDICT_SOLVABLE = "trivial-solvable"
VERDICT_DOUBLING = "doubling-family"
VERDICT_CUBE_FREE = "cube-free"
VERDICT_SCREEN = "needs-screening"


@dataclass(frozen=True)
class SimpleOrderTable:
    """Sorted orders of non-abelian simple groups up to ``bound``."""

    bound: int
    orders: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.orders or self.orders[0] != 60:
            raise ValueError("table must start at 60, the order of A5")
        if any(a >= b for a, b in zip(self.orders, self.orders[1:])):
            raise ValueError("table must be strictly increasing")
        if self.orders[-1] > self.bound:
            raise ValueError("table entry exceeds the declared bound")

    @classmethod
    def load(cls, path=None) -> "SimpleOrderTable":
        if path is None:
            text = (
                resources.files("holoscreen") / "data" / "simple_orders.txt"
            ).read_text()
        else:
            with open(path) as handle:
                text = handle.read()
        bound = None
        orders = []
        for line in text.splitlines():
            line = line.strip()
            if line.startswith("# bound:"):
                bound = int(line.split(":", 1)[1])
            elif line and not line.startswith("#"):
                orders.append(int(line))
        if bound is None:
            raise ValueError("simple-order table has no '# bound:' line")
        return cls(bound=bound, orders=tuple(orders))

    def require(self, n: int) -> None:
        if n > self.bound:
            raise ValueError(f"{n} exceeds the simple-order table bound {self.bound}")

    def __contains__(self, n: int) -> bool:
        i = bisect_left(self.orders, n)
        return i < len(self.orders) and self.orders[i] == n

    def nonsolvable_witness(self, n: int) -> int | None:
        """Smallest simple group order dividing n, or None."""
        for d in self.orders:
            if d > n:
                break
            if n % d == 0:
                return d
        return None


_TABLE: SimpleOrderTable | None = None


def default_table() -> SimpleOrderTable:
    global _TABLE
    if _TABLE is None:
        _TABLE = SimpleOrderTable.load()
    return _TABLE


def is_solvable_number(n: int, table: SimpleOrderTable | None = None) -> bool:
    """Whether every group of order n is solvable."""
    if n < 1:
        raise ValueError("order must be positive")
    table = table or default_table()
    table.require(n)
    return table.nonsolvable_witness(n) is None


def nonsolvable_orders_up_to(limit: int, table: SimpleOrderTable | None = None) -> list[int]:
    """All non-solvable numbers up to ``limit``, ascending."""
    table = table or default_table()
    table.require(limit)
    marked = bytearray(limit + 1)
    for d in table.orders:
        if d > limit:
            break
        for k in range(d, limit + 1, d):
            marked[k] = 1
    return [n for n in range(1, limit + 1) if marked[n]]


def is_cube_free(n: int) -> bool:
    if n < 1:
        raise ValueError("order must be positive")
    p = 2
    while p * p * p <= n:
        if n % (p * p * p) == 0:
            return False
        p += 1 if p == 2 else 2
    return True


def gl_is_solvable(m: int, p: int) -> bool:
    """Solvability of the general linear group of degree m over p elements.

    The group is solvable exactly for degree 1, and degree 2 over 2 or 3
    elements; every other case contains a non-abelian simple section.
    """
    if m < 1:
        raise ValueError("degree must be at least 1")
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    return m == 1 or (m == 2 and p <= 3)


def suzuki_order(ell: int) -> int:
    """Order of the Suzuki group over the field with 2**ell elements.

    These groups exist for odd ell >= 3 and have order
    4**ell * (4**ell + 1) * (2**ell - 1).
    """
    if ell < 3 or ell % 2 == 0:
        raise ValueError(f"Suzuki groups need an odd exponent >= 3, got {ell}")
    q = 1 << (2 * ell)
    return q * (q + 1) * ((1 << ell) - 1)


def _rho_divisor(n: int) -> int | None:
    """A certified nontrivial divisor of composite n, or None on give-up."""
    for attempt in range(RHO_RETRIES):
        d = pollard_rho(n, a=attempt + 1, retries=2, seed=1234 + attempt)
        if d is not None and 1 < d < n and n % d == 0:
            return d
    return None


def square_free_status(
    n: int, *, trial_bound: int = TRIAL_BOUND
) -> tuple[bool | None, int | None]:
    """(status, witness) for square-freeness of n.

    status is True / False / None, with None meaning the factorization
    budget ran out before a decision.  When status is False the witness is
    a prime whose square divides n, when one was identified.
    """
    if n < 1:
        raise ValueError("argument must be positive")
    m = n
    for p in primerange(2, trial_bound + 1):
        if p * p > m:
            break
        if m % p == 0:
            m //= p
            if m % p == 0:
                return False, p
    if m == 1 or isprime(m):
        return True, None
    # m is composite with no prime factor below the trial bound.
    return _square_free_tail(m)


def _square_free_tail(m: int) -> tuple[bool | None, int | None]:
    power = perfect_power(m)
    if power:
        base = power[0]
        return False, base if isprime(base) else None
    d = _rho_divisor(m)
    if d is None:
        return None, None
    a, b = d, m // d
    g = math.gcd(a, b)
    if g > 1:
        return False, g if isprime(g) else None
    results = []
    for part in (a, b):
        if isprime(part):
            results.append((True, None))
        else:
            results.append(_square_free_tail(part))
    for status, witness in results:
        if status is False:
            return False, witness
    if any(status is None for status, _ in results):
        return None, None
    return True, None


def _split_four_power_plus_one(ell: int) -> tuple[int, int]:
    # For odd ell, 4**ell + 1 factors as the product of
    # 2**ell - 2**((ell+1)//2) + 1 and 2**ell + 2**((ell+1)//2) + 1,
    # two coprime odd numbers; splitting first keeps trial division cheap.
    h = 1 << ((ell + 1) // 2)
    return (1 << ell) - h + 1, (1 << ell) + h + 1


@dataclass(frozen=True)
class SuzukiExponentCheck:
    """Eligibility of an exponent for the doubling family of base orders."""

    ell: int
    status: str  # "eligible" | "ineligible" | "unknown"
    reason: str | None = None
    base_order: int | None = None


def suzuki_exponent_check(ell: int, *, trial_bound: int = TRIAL_BOUND) -> SuzukiExponentCheck:
    """Check whether 2**ell gives a usable Suzuki base order.

    The exponent qualifies when it is an odd prime and
    (4**ell + 1) * (2**ell - 1) is square-free.  A budget-limited
    factorization that cannot decide square-freeness yields status
    "unknown" rather than a guess.
    """
    if ell < 3:
        raise ValueError(f"exponent must be at least 3, got {ell}")
    if not isprime(ell):
        return SuzukiExponentCheck(ell, "ineligible", f"{ell} is not prime")
    lo, hi = _split_four_power_plus_one(ell)
    parts = [
        (f"4^{ell}+1", lo),
        (f"4^{ell}+1", hi),
        (f"2^{ell}-1", (1 << ell) - 1),
    ]
    # The three parts are pairwise coprime, so the product is square-free
    # exactly when each part is.
    for label, part in parts:
        status, witness = square_free_status(part, trial_bound=trial_bound)
        if status is False:
            if witness is not None:
                reason = f"{witness}^2 divides {label}"
            else:
                reason = f"{label} has a repeated prime factor"
            return SuzukiExponentCheck(ell, "ineligible", reason)
        if status is None:
            return SuzukiExponentCheck(
                ell, "unknown", f"could not finish factoring {label}"
            )
    return SuzukiExponentCheck(ell, "eligible", None, suzuki_order(ell))


def wieferich_scan(limit: int) -> list[int]:
    """Primes p <= limit with 2**(p-1) = 1 modulo p*p."""
    if limit > WIEFERICH_CAP:
        raise ValueError(f"scan limit capped at {WIEFERICH_CAP}")
    return [p for p in primerange(2, limit + 1) if pow(2, p - 1, p * p) == 1]


def mersenne_gcd_property(a: int, b: int) -> bool:
    """Check gcd(2**a - 1, 2**b - 1) == 2**gcd(a, b) - 1 for this pair."""
    if a < 1 or b < 1:
        raise ValueError("exponents must be positive")
    return math.gcd(2**a - 1, 2**b - 1) == 2 ** math.gcd(a, b) - 1


@dataclass(frozen=True)
class DoublingFamilyConditions:
    """Arithmetic side conditions for a doubling-family base order.

    Each flag is True / False / None, with None meaning the check ran past
    the simple-order table bound and is reported as unknown rather than
    assumed.  The group-theoretic condition on subgroups of 2-power index
    is out of scope here; it needs the group machinery, not arithmetic.
    """

    n0: int
    r_checked: int
    no_simple_doubled_order: bool | None
    half_solvable: bool | None
    prime_quotients_solvable: bool | None
    failure: str | None = None

    @property
    def all_hold(self) -> bool:
        return (
            self.no_simple_doubled_order is True
            and self.half_solvable is True
            and self.prime_quotients_solvable is True
        )


def doubling_family_conditions(
    n0: int,
    table: SimpleOrderTable | None = None,
    r_max: int | None = None,
) -> DoublingFamilyConditions:
    """Check the arithmetic conditions on the family 2**r * n0.

    Three checks: no 2**r * n0 (r >= 1) is the order of a simple group;
    n0/2 is a solvable number when n0 is even; and (2**r * n0)/p is a
    solvable number for every odd prime p dividing n0 and every r >= 0.
    The doubling exponent runs to ``r_max``, by default as far as the
    table bound allows.
    """
    if n0 < 2:
        raise ValueError("base order must be at least 2")
    table = table or default_table()
    table.require(n0)
    natural_max = 0
    while (n0 << (natural_max + 1)) <= table.bound:
        natural_max += 1
    if r_max is None:
        r_max = natural_max

    failure = None

    cond_simple: bool | None = True
    for r in range(1, r_max + 1):
        value = n0 << r
        if value > table.bound:
            cond_simple = None
            break
        if value in table:
            cond_simple = False
            failure = f"2^{r} * {n0} = {value} is the order of a simple group"
            break

    cond_half: bool | None = True
    if n0 % 2 == 0:
        cond_half = is_solvable_number(n0 // 2, table)
        if cond_half is False and failure is None:
            failure = f"{n0}/2 = {n0 // 2} is not a solvable number"

    odd_primes = sorted(p for p in factorint(n0) if p % 2 == 1)
    cond_quot: bool | None = True
    for r in range(0, r_max + 1):
        value = n0 << r
        stop = False
        for p in odd_primes:
            q = value // p
            if q > table.bound:
                if cond_quot is True:
                    cond_quot = None
                stop = True
                break
            if not is_solvable_number(q, table):
                cond_quot = False
                if failure is None:
                    failure = f"(2^{r} * {n0})/{p} = {q} is not a solvable number"
                stop = True
                break
        if stop:
            break

    return DoublingFamilyConditions(
        n0=n0,
        r_checked=r_max,
        no_simple_doubled_order=cond_simple,
        half_solvable=cond_half,
        prime_quotients_solvable=cond_quot,
        failure=failure,
    )


def doubling_family_base(n: int) -> tuple[int, int] | None:
    """Recognize n = 2**r * n0 for a recognized base order n0.

    The base orders are 60, 2448, and the Suzuki orders with an eligible
    exponent.  Returns (n0, r) or None.  The power of two inside n0 itself
    is accounted for, so for example 240 gives (60, 2).
    """
    if n < 1:
        raise ValueError("order must be positive")
    v = (n & -n).bit_length() - 1
    odd = n >> v
    if odd == 15 and v >= 2:
        return 60, v - 2
    if odd == 153 and v >= 4:
        return 2448, v - 4
    for ell in primerange(3, 2 * odd.bit_length() + 3):
        if ell % 2 == 0:
            continue
        part = ((1 << (2 * ell)) + 1) * ((1 << ell) - 1)
        if part > odd:
            break
        if part == odd and v >= 2 * ell:
            if suzuki_exponent_check(ell).status == "eligible":
                return suzuki_order(ell), v - 2 * ell
    return None


@dataclass(frozen=True)
class OrderClassification:
    """What is already known about an order before screening it."""

    n: int
    solvable_number: bool
    cube_free: bool
    doubling_family: tuple[int, int] | None
    verdict: str


def classify_order(n: int, table: SimpleOrderTable | None = None) -> OrderClassification:
    """Attribute an order to the cheapest criterion that settles it.

    Verdicts, in the order they are tried: ``trivial-solvable`` (every
    group of order n is solvable), ``doubling-family`` (n is 2**r times a
    recognized base order), ``cube-free``, and ``needs-screening`` when no
    criterion applies.  The only order matched by both the doubling and
    cube-free tests is 60; it is attributed to the family, which settles
    all of 60, 120, 240, ... at once.
    """
    if n < 1:
        raise ValueError("order must be positive")
    table = table or default_table()
    table.require(n)
    solvable = is_solvable_number(n, table)
    cube = is_cube_free(n)
    family = None if solvable else doubling_family_base(n)
    if solvable:
        verdict = VERDICT_SOLVABLE
    elif family is not None:
        verdict = VERDICT_DOUBLING
    elif cube:
        verdict = VERDICT_CUBE_FREE
    else:
        verdict = VERDICT_SCREEN
    return OrderClassification(
        n=n,
        solvable_number=solvable,
        cube_free=cube,
        doubling_family=family,
        verdict=verdict,
    )
