"""Exact symmetric function arithmetic over the rationals.

Five bases: powersum ``p``, complete homogeneous ``h``, elementary ``e``,
Schur ``s`` and monomial ``m``.  A :class:`SymFunc` is a basis tag plus a
finite map from partitions to ``Fraction`` coefficients (zeros are never
stored); inhomogeneous values are allowed, with the degree of a term given
by the weight of its partition.

The powersum basis is canonical for arithmetic: products concatenate
indices and plethysm is a monomial substitution there.  The other bases
are reached by exact conversions:

* ``h_n`` and ``e_n`` expand into powersums by the classical class-size
  formulas; ``p_n`` expands back through Newton's identities.
* Schur conversions pair powersum coefficients against symmetric group
  characters (see :mod:`parthom.chartable`), so no floating point and no
  determinants are involved.
* Monomial conversions count assignments of powersum parts onto exponent
  vectors, inverting a triangular matrix per degree for the other
  direction.

All values are immutable after construction and every operation is a pure
function; the per-degree caches below are append-only dicts, safe for
concurrent readers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from numbers import Rational

from .chartable import character
from .errors import FeasibilityError
from .partitions import (
    canonical_sort_key,
    check_partition,
    partitions_of,
    zee,
)

BASES = ("p", "h", "e", "s", "m")

#: conversions through the character table are refused above this degree
SCHUR_DEGREE_LIMIT = 14

Terms = dict  # partition tuple -> Fraction


def _clean(terms) -> Terms:
    out = {}
    for lam, c in terms.items():
        c = Fraction(c)
        if c:
            out[check_partition(lam)] = c
    return out


def _merge_mul(a: Terms, b: Terms, max_degree: int | None = None) -> Terms:
    """Product in a multiplicative basis: indices concatenate and re-sort."""
    out: Terms = {}
    for lam, c in a.items():
        wl = sum(lam)
        for mu, d in b.items():
            if max_degree is not None and wl + sum(mu) > max_degree:
                continue
            key = tuple(sorted(lam + mu, reverse=True))
            v = out.get(key, 0) + c * d
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return out


def _scale(terms: Terms, c: Fraction) -> Terms:
    return {lam: v * c for lam, v in terms.items()} if c else {}


def _add_into(acc: Terms, terms: Terms, c: Fraction = Fraction(1)) -> None:
    for lam, v in terms.items():
        w = acc.get(lam, 0) + c * v
        if w:
            acc[lam] = w
        else:
            acc.pop(lam, None)


# ---------------------------------------------------------------------------
# single-generator expansions, memoized per degree

@lru_cache(maxsize=None)
def _h_in_p(n: int) -> tuple:
    # h_n = sum over lam |- n of p_lam / z_lam
    return tuple((lam, Fraction(1, zee(lam))) for lam in partitions_of(n))


@lru_cache(maxsize=None)
def _e_in_p(n: int) -> tuple:
    # e_n carries the class sign (-1)^(n - length)
    out = []
    for lam in partitions_of(n):
        sign = -1 if (n - len(lam)) % 2 else 1
        out.append((lam, Fraction(sign, zee(lam))))
    return tuple(out)


@lru_cache(maxsize=None)
def _p_in_h(n: int) -> tuple:
    # Newton: p_n = n h_n - sum_{i<n} h_{n-i} p_i
    acc: Terms = {(n,): Fraction(n)}
    for i in range(1, n):
        _add_into(acc, _merge_mul({(n - i,): Fraction(1)}, dict(_p_in_h(i))), Fraction(-1))
    return tuple(acc.items())


@lru_cache(maxsize=None)
def _p_in_e(n: int) -> tuple:
    # n e_n = sum_{i=1..n} (-1)^(i-1) p_i e_{n-i}, solved for p_n
    acc: Terms = {(n,): Fraction(n)}
    for i in range(1, n):
        sign = Fraction(-1 if (i - 1) % 2 else 1)
        _add_into(acc, _merge_mul({(n - i,): sign}, dict(_p_in_e(i))), Fraction(-1))
    if n % 2 == 0:
        acc = _scale(acc, Fraction(-1))
    return tuple(acc.items())


@lru_cache(maxsize=None)
def _s_in_p(lam: tuple) -> tuple:
    n = sum(lam)
    _check_schur_degree(n)
    out = []
    for mu in partitions_of(n):
        chi = character(lam, mu)
        if chi:
            out.append((mu, Fraction(chi, zee(mu))))
    return tuple(out)


@lru_cache(maxsize=None)
def _gen_product_in_p(basis: str, lam: tuple) -> tuple:
    """Basis element h_lam / e_lam / s_lam expanded in powersums."""
    if basis == "s":
        return _s_in_p(lam)
    gen = _h_in_p if basis == "h" else _e_in_p
    acc: Terms = {(): Fraction(1)}
    for part in lam:
        acc = _merge_mul(acc, dict(gen(part)))
    return tuple(acc.items())


@lru_cache(maxsize=None)
def _p_product_in(basis: str, lam: tuple) -> tuple:
    """Powersum monomial p_lam expanded in the h or e basis."""
    gen = _p_in_h if basis == "h" else _p_in_e
    acc: Terms = {(): Fraction(1)}
    for part in lam:
        acc = _merge_mul(acc, dict(gen(part)))
    return tuple(acc.items())


def _check_schur_degree(n: int) -> None:
    if n > SCHUR_DEGREE_LIMIT:
        raise FeasibilityError(
            f"character-table conversion refused for degree {n} > {SCHUR_DEGREE_LIMIT}"
        )


# ---------------------------------------------------------------------------
# monomial basis machinery

@lru_cache(maxsize=None)
def _assignment_count(parts: tuple, capacities: tuple) -> int:
    """Number of maps from the (ordered) list *parts* onto distinguishable
    bins with the given leftover capacities, filling every bin exactly.

    This is the coefficient of the monomial x^capacities in p_parts once
    the capacities are a sorted exponent vector.
    """
    if not parts:
        return 1 if not capacities else 0
    if sum(parts) != sum(capacities):
        return 0
    part = parts[0]
    rest = parts[1:]
    total = 0
    seen = set()
    caps = list(capacities)
    for idx, v in enumerate(caps):
        if v < part or v in seen:
            continue
        seen.add(v)
        nxt = caps[:idx] + caps[idx + 1 :]
        if v > part:
            nxt.append(v - part)
        mult = caps.count(v)
        total += mult * _assignment_count(rest, tuple(sorted(nxt, reverse=True)))
    return total


@lru_cache(maxsize=None)
def _p_in_m_row(mu: tuple) -> tuple:
    n = sum(mu)
    out = []
    for lam in partitions_of(n):
        c = _assignment_count(mu, lam)
        if c:
            out.append((lam, Fraction(c)))
    return tuple(out)


@lru_cache(maxsize=None)
def _m_in_p_table(n: int) -> dict:
    """m_kappa -> powersum expansion for every kappa |- n.

    The transition matrix (coefficient of m_lam in p_mu) is triangular with
    respect to decreasing lexicographic order, because merging parts of mu
    only moves up in dominance; back substitution inverts it exactly.
    """
    parts = list(partitions_of(n))
    index = {lam: i for i, lam in enumerate(parts)}
    rows = {mu: dict(_p_in_m_row(mu)) for mu in parts}
    table = {}
    for kappa in parts:
        # the expansion of m_kappa uses only p_mu with mu at or above kappa
        # in the decreasing-lex list, so substitute from kappa upward
        coeffs: Terms = {}
        for i in range(index[kappa], -1, -1):
            mu = parts[i]
            val = Fraction(1) if mu == kappa else Fraction(0)
            for mu2, c2 in coeffs.items():
                val -= c2 * rows[mu2].get(mu, 0)
            diag = rows[mu][mu]
            if val:
                coeffs[mu] = val / diag
        table[kappa] = tuple(coeffs.items())
    return table


# ---------------------------------------------------------------------------
# conversions between full term maps

def _to_p(basis: str, terms: Terms) -> Terms:
    if basis == "p":
        return dict(terms)
    acc: Terms = {}
    if basis == "m":
        for lam, c in terms.items():
            table = _m_in_p_table(sum(lam))
            _add_into(acc, dict(table[lam]), c)
        return acc
    for lam, c in terms.items():
        _add_into(acc, dict(_gen_product_in_p(basis, lam)), c)
    return acc


def _from_p(target: str, pterms: Terms) -> Terms:
    if target == "p":
        return dict(pterms)
    if target in ("h", "e"):
        acc: Terms = {}
        for lam, c in pterms.items():
            _add_into(acc, dict(_p_product_in(target, lam)), c)
        return acc
    if target == "s":
        out: Terms = {}
        for n in sorted({sum(lam) for lam in pterms}):
            _check_schur_degree(n)
            comp = {lam: c for lam, c in pterms.items() if sum(lam) == n}
            for lam in partitions_of(n):
                val = sum((c * character(lam, mu) for mu, c in comp.items()), Fraction(0))
                if val:
                    out[lam] = val
        return out
    if target == "m":
        acc = {}
        for mu, c in pterms.items():
            _add_into(acc, dict(_p_in_m_row(mu)), c)
        return acc
    raise ValueError(f"unknown basis {target!r}")


# ---------------------------------------------------------------------------

class SymFunc:
    """A symmetric function with exact rational coefficients in one basis."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms=None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}; expected one of {BASES}")
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "terms", _clean(terms or {}))

    def __setattr__(self, name, value):
        raise AttributeError("SymFunc values are immutable")

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> list[int]:
        return sorted({sum(lam) for lam in self.terms})

    def degree(self) -> int | None:
        """Top degree, or None for the zero function."""
        return max((sum(lam) for lam in self.terms), default=None)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_part(self, d: int) -> "SymFunc":
        return SymFunc(self.basis, {lam: c for lam, c in self.terms.items() if sum(lam) == d})

    def coefficient(self, lam) -> Fraction:
        """Coefficient of the basis element indexed by *lam* (current basis)."""
        return self.terms.get(check_partition(lam), Fraction(0))

    def terms_sorted(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: canonical_sort_key(kv[0]))

    def dimension(self) -> Fraction:
        """Character value at the identity: n! times the p_(1^n) coefficient,
        summed over homogeneous components (degree 0 contributes its constant)."""
        pt = self.in_basis("p").terms
        total = Fraction(0)
        for n in sorted({sum(lam) for lam in pt}):
            total += pt.get((1,) * n if n else (), 0) * factorial(n)
        return total

    # -- conversions ----------------------------------------------------------

    def in_basis(self, target: str) -> "SymFunc":
        if target == self.basis:
            return self
        return SymFunc(target, _from_p(target, _to_p(self.basis, self.terms)))

    # -- ring structure -------------------------------------------------------

    def _coerced(self, other: "SymFunc") -> Terms:
        return other.in_basis(self.basis).terms

    def __add__(self, other):
        if isinstance(other, SymFunc):
            acc = dict(self.terms)
            _add_into(acc, self._coerced(other))
            return SymFunc(self.basis, acc)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, SymFunc):
            acc = dict(self.terms)
            _add_into(acc, self._coerced(other), Fraction(-1))
            return SymFunc(self.basis, acc)
        return NotImplemented

    def __neg__(self):
        return SymFunc(self.basis, _scale(self.terms, Fraction(-1)))

    def __mul__(self, other):
        if isinstance(other, Rational):
            return SymFunc(self.basis, _scale(self.terms, Fraction(other)))
        if isinstance(other, SymFunc):
            if self.basis == other.basis and self.basis in ("p", "h", "e"):
                return SymFunc(self.basis, _merge_mul(self.terms, other.terms))
            a = _to_p(self.basis, self.terms)
            b = _to_p(other.basis, other.terms)
            return SymFunc("p", _merge_mul(a, b))
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, SymFunc):
            return _to_p(self.basis, self.terms) == _to_p(other.basis, other.terms)
        if isinstance(other, Rational):
            return _to_p(self.basis, self.terms) == ({(): Fraction(other)} if other else {})
        return NotImplemented

    __hash__ = None

    # -- the operations that act through the powersum expansion ---------------

    def inner(self, other: "SymFunc") -> Fraction:
        """Hall inner product; powersums are orthogonal with <p_lam, p_lam> = z_lam."""
        a = _to_p(self.basis, self.terms)
        b = _to_p(other.basis, other.terms)
        if len(b) < len(a):
            a, b = b, a
        return sum((c * b[lam] * zee(lam) for lam, c in a.items() if lam in b), Fraction(0))

    def skew(self, mu) -> "SymFunc":
        """Skew by the Schur function of *mu*: the adjoint of multiplication
        by s_mu, computed as a powersum differential operator (the adjoint of
        multiplying by p_k is k d/dp_k)."""
        mu = check_partition(mu)
        if not mu:
            return self.in_basis("p")
        acc: Terms = {}
        pterms = _to_p(self.basis, self.terms)
        for nu in partitions_of(sum(mu)):
            chi = character(mu, nu)
            if not chi:
                continue
            cur = pterms
            for part in nu:
                cur = _d_dpk(cur, part)
                if not cur:
                    break
            if cur:
                weight = Fraction(chi, zee(nu))
                for part in nu:
                    weight *= part
                _add_into(acc, cur, weight)
        return SymFunc("p", acc)

    def d_dp1(self) -> "SymFunc":
        """Formal partial derivative with respect to p_1 (restriction to the
        next smaller symmetric group)."""
        return SymFunc("p", _d_dpk(_to_p(self.basis, self.terms), 1))

    def sign_twist(self) -> "SymFunc":
        """The involution sending p_k to (-1)^(k-1) p_k, i.e. tensoring the
        underlying module with the sign representation."""
        pterms = _to_p(self.basis, self.terms)
        out = {}
        for lam, c in pterms.items():
            if (sum(lam) - len(lam)) % 2:
                c = -c
            out[lam] = c
        return SymFunc("p", out).in_basis(self.basis)

    # -- serialization ---------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [
                {"partition": list(lam), "coeff": str(c)}
                for lam, c in self.terms_sorted()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "SymFunc":
        terms = {
            tuple(t["partition"]): Fraction(t["coeff"]) for t in data["terms"]
        }
        return cls(data["basis"], terms)

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "SymFunc":
        return cls.from_json_dict(json.loads(text))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for lam, c in self.terms_sorted():
            name = f"{self.basis}[{','.join(map(str, lam))}]" if lam else "1"
            if c == 1 and lam:
                bits.append(name)
            elif c == -1 and lam:
                bits.append(f"-{name}")
            elif lam:
                bits.append(f"{c}*{name}")
            else:
                bits.append(str(c))
        return " + ".join(bits).replace("+ -", "- ")


def _d_dpk(pterms: Terms, k: int) -> Terms:
    out: Terms = {}
    for lam, c in pterms.items():
        m = lam.count(k)
        if not m:
            continue
        idx = lam.index(k)
        key = lam[:idx] + lam[idx + 1 :]
        v = out.get(key, 0) + m * c
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return out


# ---------------------------------------------------------------------------
# constructors

def _basis_elem(basis: str, spec, coeff=1) -> SymFunc:
    return SymFunc(basis, {check_partition(spec): Fraction(coeff)})


def powersum(spec, coeff=1) -> SymFunc:
    return _basis_elem("p", spec, coeff)


def homogeneous(spec, coeff=1) -> SymFunc:
    return _basis_elem("h", spec, coeff)


def elementary(spec, coeff=1) -> SymFunc:
    return _basis_elem("e", spec, coeff)


def schur(spec, coeff=1) -> SymFunc:
    return _basis_elem("s", spec, coeff)


def monomial(spec, coeff=1) -> SymFunc:
    return _basis_elem("m", spec, coeff)


P, H, E, S, M = powersum, homogeneous, elementary, schur, monomial


def zero(basis: str = "p") -> SymFunc:
    return SymFunc(basis, {})


def one(basis: str = "p") -> SymFunc:
    return SymFunc(basis, {(): Fraction(1)})


# ---------------------------------------------------------------------------
# plethysm

def plethysm(f: SymFunc, g: SymFunc, max_degree: int) -> SymFunc:
    """Plethysm f[g] truncated to total degree <= max_degree.

    In the powersum basis p_k[g] substitutes p_i -> p_{ik} throughout g, and
    the result extends multiplicatively and linearly in f.  g must have zero
    constant term, otherwise the substitution diverges.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    gp = _to_p(g.basis, g.terms)
    if gp.get((), 0):
        raise ValueError("plethysm into a series with nonzero constant term")
    fp = _to_p(f.basis, f.terms)

    def substitute(k: int) -> Terms:
        return {
            tuple(sorted((part * k for part in lam), reverse=True)): c
            for lam, c in gp.items()
            if sum(lam) * k <= max_degree
        }

    acc: Terms = {}
    for lam, c in fp.items():
        cur: Terms = {(): Fraction(1)}
        for part in lam:
            cur = _merge_mul(cur, substitute(part), max_degree)
            if not cur:
                break
        _add_into(acc, cur, c)
    return SymFunc("p", acc)


def plethysm_with_h_sum(f: SymFunc, n: int) -> SymFunc:
    """Degree-n component of f[h_1 + h_2 + ... + h_n].

    Truncating the series at h_n is harmless: higher terms cannot contribute
    to output of degree n.
    """
    acc: Terms = {}
    for i in range(1, n + 1):
        _add_into(acc, dict(_h_in_p(i)))
    g = SymFunc("p", acc)
    return plethysm(f, g, n).homogeneous_part(n)


# ---------------------------------------------------------------------------
# positivity certificates and hook Schur functions

@dataclass(frozen=True)
class Positivity:
    """Evidence for (non)positivity of a function in a given basis."""

    basis: str
    coefficients: dict
    nonnegative: bool
    integral: bool

    @property
    def ok(self) -> bool:
        return self.nonnegative and self.integral

    def to_json_dict(self) -> dict:
        return {
            "basis": self.basis,
            "nonnegative": self.nonnegative,
            "integral": self.integral,
            "coefficients": [
                {"partition": list(lam), "coeff": str(c)}
                for lam, c in sorted(self.coefficients.items(), key=lambda kv: canonical_sort_key(kv[0]))
            ],
        }


def positivity(f: SymFunc, basis: str) -> Positivity:
    """Report whether every coefficient of *f* in *basis* is a nonnegative
    integer, returning the full coefficient vector as evidence."""
    coeffs = f.in_basis(basis).terms
    return Positivity(
        basis=basis,
        coefficients=dict(coeffs),
        nonnegative=all(c >= 0 for c in coeffs.values()),
        integral=all(c.denominator == 1 for c in coeffs.values()),
    )


def hook_schur(n: int, k: int) -> SymFunc:
    """Schur function of the hook (n-k, 1^k) via the alternating sum
    of products h_{n-i} e_i for i = 0..k."""
    if not 0 <= k <= n - 1:
        raise ValueError(f"need 0 <= k <= n-1, got n={n}, k={k}")
    acc: Terms = {}
    for i in range(k + 1):
        sign = Fraction(-1 if (k - i) % 2 else 1)
        term = _merge_mul(dict(_h_in_p(n - i)), dict(_e_in_p(i)) if i else {(): Fraction(1)})
        _add_into(acc, term, sign)
    return SymFunc("p", acc)
