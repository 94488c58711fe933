"""Chain and homology modules of rank-selected partition lattices.

Two independent computation paths exist for both families and they are
cross-checked in the tests:

* the *chains* path evaluates the permutation character directly, counting
  maximal chains fixed by one permutation per cycle type, and applies the
  Frobenius characteristic;
* the *recurrence* path peels the lowest selected rank with a plethysm
  into the sum h_1 + h_2 + ... restricted to the right degree.

On top of these sit the classical numbers attached to the lattice: Euler
(zigzag) numbers, the simsun multiplicities decomposing the chain action
into orbits whose stabilizers are Young subgroups with blocks of size at
most two, the coefficients of the even-block-count homology, and the
(generalised) Whitehouse modules of the modular-deletion subposets.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import NamedTuple

from .classfunc import ClassFunction
from .errors import FeasibilityError, ModuleCheckError
from .partitions import partitions_of
from .poset import fixed_chain_count, rank_selected_view
from .symfunc import (
    SymFunc,
    homogeneous,
    plethysm_with_h_sum,
    positivity,
    powersum,
)

#: largest degree accepted by the recurrences (plethysm stays cheap well
#: beyond this; the bound keeps accidental huge requests from thrashing)
MAX_DEGREE = 16

#: chain-path character computations enumerate fixed chains per cycle type
MAX_CHAIN_DEGREE = 8


def _ranks_tuple(n: int, ranks) -> tuple[int, ...]:
    out = tuple(sorted(set(int(r) for r in ranks)))
    for r in out:
        if not 1 <= r <= n - 2:
            raise ValueError(f"rank {r} outside [1, {n - 2}] for ground size {n}")
    return out


def _check_degree(n: int) -> None:
    if n > MAX_DEGREE:
        raise FeasibilityError(f"degree {n} exceeds supported bound {MAX_DEGREE}")


_ALPHA_CACHE: dict[tuple[int, tuple[int, ...]], SymFunc] = {}
_BETA_CACHE: dict[tuple[int, tuple[int, ...]], SymFunc] = {}


def chain_characteristic(n: int, ranks, method: str = "recurrence") -> SymFunc:
    """Frobenius characteristic of the symmetric group action on the maximal
    chains of the rank-selected subposet (the alpha module of the rank set).

    The empty rank set gives the trivial module h_n (a single empty chain).
    """
    _check_degree(n)
    ranks = _ranks_tuple(n, ranks)
    if method == "recurrence":
        return _alpha_recurrence(n, ranks)
    if method == "chains":
        if n > MAX_CHAIN_DEGREE:
            raise FeasibilityError(f"chain path refused for n={n} > {MAX_CHAIN_DEGREE}")
        view = rank_selected_view(n, ranks)
        values = {
            mu: Fraction(fixed_chain_count(view, mu)) for mu in partitions_of(n)
        }
        return ClassFunction(n, values).characteristic()
    raise ValueError(f"unknown method {method!r} (use 'recurrence' or 'chains')")


def _alpha_recurrence(n: int, ranks: tuple[int, ...]) -> SymFunc:
    key = (n, ranks)
    cached = _ALPHA_CACHE.get(key)
    if cached is not None:
        return cached
    if not ranks:
        result = homogeneous(n).in_basis("p")
    else:
        s1 = ranks[0]
        inner = _alpha_recurrence(n - s1, tuple(r - s1 for r in ranks[1:]))
        result = plethysm_with_h_sum(inner, n)
    _ALPHA_CACHE[key] = result
    return result


def homology_characteristic(
    n: int, ranks, method: str = "recurrence", validate: bool = False
) -> SymFunc:
    """Frobenius characteristic of the action on the top homology of the
    rank-selected subposet (the beta module of the rank set).

    ``recurrence`` peels the lowest rank:
    beta(S) = beta(S - s1 inside degree n - s1) composed with the h-sum,
    minus beta(S without s1).  ``inclusion_exclusion`` sums signed chain
    modules over subsets of S (with alphas from the recurrence), and
    ``chains`` does the same on top of chain-counted alphas, making it
    fully independent of the recurrence.  With ``validate`` the Schur
    expansion is checked to be a genuine module.
    """
    _check_degree(n)
    ranks = _ranks_tuple(n, ranks)
    if method == "recurrence":
        result = _beta_recurrence(n, ranks)
    elif method in ("inclusion_exclusion", "chains"):
        alpha_method = "chains" if method == "chains" else "recurrence"
        result = _beta_inclusion_exclusion(n, ranks, alpha_method)
    else:
        raise ValueError(
            f"unknown method {method!r} (use 'recurrence', 'inclusion_exclusion' or 'chains')"
        )
    if validate:
        assert_genuine_module(result, f"beta({n}, {ranks})")
    return result


def _beta_recurrence(n: int, ranks: tuple[int, ...]) -> SymFunc:
    key = (n, ranks)
    cached = _BETA_CACHE.get(key)
    if cached is not None:
        return cached
    if not ranks:
        result = homogeneous(n).in_basis("p")
    else:
        s1 = ranks[0]
        inner = _beta_recurrence(n - s1, tuple(r - s1 for r in ranks[1:]))
        result = plethysm_with_h_sum(inner, n) - _beta_recurrence(n, ranks[1:])
    _BETA_CACHE[key] = result
    return result


def _beta_inclusion_exclusion(n, ranks, alpha_method) -> SymFunc:
    from itertools import combinations

    total = None
    for size in range(len(ranks) + 1):
        for subset in combinations(ranks, size):
            term = chain_characteristic(n, subset, method=alpha_method)
            if (len(ranks) - size) % 2:
                term = term * Fraction(-1)
            total = term if total is None else total + term
    return total


def assert_genuine_module(f: SymFunc, label: str = "") -> None:
    """Hard failure unless every Schur coefficient is a nonnegative integer."""
    cert = positivity(f, "s")
    if not cert.ok:
        bad = {
            lam: str(c)
            for lam, c in cert.coefficients.items()
            if c < 0 or c.denominator != 1
        }
        raise ModuleCheckError(f"{label or 'value'} is not a genuine module: {bad}")


# ---------------------------------------------------------------------------
# the top homology of the full lattice

@lru_cache(maxsize=None)
def _number_mobius(d: int) -> int:
    if d == 1:
        return 1
    out, m, p = 1, d, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1
    if m > 1:
        out = -out
    return out


@lru_cache(maxsize=None)
def lie_character(n: int) -> SymFunc:
    """Characteristic of the top homology of the full proper part: the sign
    twist of the induction of a faithful character of the cyclic group of
    order n, i.e. omega of (1/n) sum over d | n of moebius(d) p_d^(n/d)."""
    if n < 1:
        raise ValueError("n must be positive")
    terms = {}
    for d in range(1, n + 1):
        if n % d:
            continue
        mu = _number_mobius(d)
        if mu:
            terms[(d,) * (n // d)] = Fraction(mu, n)
    return SymFunc("p", terms).sign_twist()


# ---------------------------------------------------------------------------
# trivial-representation multiplicities

class Multiplicities(NamedTuple):
    """Orbit/multiplicity quadruple of one rank set: a (chain orbits),
    a' (chain orbits under the point stabilizer), b (trivial multiplicity
    in homology), b' (trivial multiplicity after restricting to the point
    stabilizer)."""

    a: int
    a_prime: int
    b: int
    b_prime: int


def _pair_trivial(f: SymFunc, n: int, restricted: bool) -> int:
    probe = homogeneous([n - 1, 1]) if restricted else homogeneous(n)
    val = f.inner(probe)
    if val.denominator != 1:
        raise ModuleCheckError(f"non-integer multiplicity {val}")
    return int(val)


def multiplicities(n: int, ranks) -> Multiplicities:
    ranks = _ranks_tuple(n, ranks)
    alpha = chain_characteristic(n, ranks)
    beta = homology_characteristic(n, ranks)
    return Multiplicities(
        a=_pair_trivial(alpha, n, False),
        a_prime=_pair_trivial(alpha, n, True),
        b=_pair_trivial(beta, n, False),
        b_prime=_pair_trivial(beta, n, True),
    )


# ---------------------------------------------------------------------------
# integer sequences

@lru_cache(maxsize=None)
def euler_number(n: int) -> int:
    """Zigzag number: alternating permutation count, tan + sec coefficients,
    computed by the boustrophedon (Entringer) recurrence."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    row = [1]
    for m in range(1, n + 1):
        prev = row
        row = [0]
        for k in range(1, m + 1):
            row.append(row[k - 1] + prev[m - k])
    return row[-1]


@lru_cache(maxsize=None)
def simsun(i: int, n: int) -> int:
    """Orbit multiplicities of the chain action: a_i(n+1) = i a_i(n) +
    (n - 2i + 2) a_{i-1}(n), seeded by a_0(1) = a_1(2) = 1."""
    if i < 0 or n < 1 or 2 * i > n:
        return 0
    if n == 1:
        return 1 if i == 0 else 0
    if i == 0:
        return 0
    return i * simsun(i, n - 1) + (n - 2 * i + 1) * simsun(i - 1, n - 1)


def _comb0(a: int, b: int) -> int:
    return comb(a, b) if 0 <= b <= a else 0


@lru_cache(maxsize=None)
def even_block_multiplicity(i: int, n: int) -> int:
    """Coefficient b_i(n) of the orbit h_2^i h_1^(2n-2i) in the top homology
    of the even-block-count subposet, from its double-sum recurrence with
    b_2(n) = 1.  The sums are finite: k stops where the inner index drops
    below 2 and the binomial kills r past i/2."""
    if i < 2 or i > n:
        return 0
    if i == 2:
        return 1
    total = 0
    for k in range(0, i - 1):
        outer = _comb0(2 * n - 2 * i + k, k)
        if not outer:
            continue
        inner = 0
        for r in range(1, i // 2 + 1):
            c = _comb0(i - k, i - 2 * r)
            if c:
                term = c * even_block_multiplicity(i - k, n - r)
                inner += -term if r % 2 == 0 else term
        total += outer * inner
    return total


def ek_number(k: int, n: int) -> int:
    """E_k(n) = sum_i b_i(n) C(n-i, k-i); appears in the rewriting of the
    even-block homology over h_2^i e_2^(n-i)."""
    return sum(
        even_block_multiplicity(i, n) * _comb0(n - i, k - i) for i in range(2, n + 1)
    )


def even_block_characteristic(n: int, validate: bool = True) -> SymFunc:
    """Top homology characteristic of the even-block-count subposet of the
    lattice on 2n points, assembled as sum_i b_i(n) h_2^i h_1^(2n-2i).

    With ``validate`` the result is compared against the homology module of
    the even rank selection computed by the plethystic recurrence; any
    mismatch is a hard failure.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    total = SymFunc("p", {})
    for i in range(2, n + 1):
        b = even_block_multiplicity(i, n)
        if b:
            total = total + homogeneous([2] * i + [1] * (2 * n - 2 * i)) * Fraction(b)
    if validate:
        other = homology_characteristic(2 * n, range(2, 2 * n - 1, 2))
        if total != other:
            raise ModuleCheckError(
                f"even-block characteristic for 2n={2 * n} disagrees with the "
                f"rank-selected homology recurrence"
            )
    return total


# ---------------------------------------------------------------------------
# Whitehouse modules

def whitehouse_module(n: int, k: int) -> SymFunc:
    """The (generalised) Whitehouse module: lie(k) h_1^(n-k) - lie(n).

    A true module for 2 <= k <= n-1; at k = n-1 its restriction one degree
    down is lie(n-1) again.
    """
    if not 2 <= k <= n - 1:
        raise ValueError(f"need 2 <= k <= n-1, got n={n}, k={k}")
    return lie_character(k) * powersum((1,) * (n - k)) - lie_character(n)
