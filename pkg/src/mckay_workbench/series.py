"""Truncated multivariate series over Q with a Laurent variable ``q``.

A series lives in ``Q[q, q^-1][[z_1, ..., z_r]]`` truncated in two ways: total
``z``-degree at most ``trunc_z`` and ``q``-exponent inside ``[q_min, q_max]``
(either side may be open).  Cutting the ``q``-window is only consistent when
every factor stays on one side of it, e.g. all exponents ``<= 0`` together
with a lower cutoff; that is how the Betti series is expanded.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from ._rational import as_fraction, fmt
from .toric import DivisorClass, intersection

__all__ = [
    "TruncatedSeries",
    "PoincarePrediction",
    "YPolynomial",
    "ConventionViolation",
    "ConventionWarning",
    "adams",
    "plethystic_exp",
    "product_formula_oracle",
    "q_over_q_minus_one",
    "betti_series",
    "restricted_kac_generating",
]

Key = tuple  # (q exponent, z multidegree tuple)

CONVENTIONS = {
    "qinv": "expand_q_inverse",
    "expand_q_inverse": "expand_q_inverse",
    "q": "expand_q",
    "expand_q": "expand_q",
}


def _merge_bound(a, b, pick):
    if a is None:
        return b
    if b is None:
        return a
    return pick(a, b)


class TruncatedSeries:
    __slots__ = ("nvars", "trunc_z", "q_min", "q_max", "terms")

    def __init__(
        self,
        nvars: int,
        terms: Mapping[Key, object] | Iterable[tuple[Key, object]] = (),
        trunc_z: int = 6,
        q_min: int | None = None,
        q_max: int | None = None,
    ):
        self.nvars = nvars
        self.trunc_z = trunc_z
        self.q_min = q_min
        self.q_max = q_max
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Key, Fraction] = {}
        for (k, m), c in items:
            m = tuple(int(v) for v in m)
            if len(m) != nvars:
                raise ValueError(f"z-multidegree {m} has the wrong number of variables ({nvars})")
            if any(v < 0 for v in m):
                raise ValueError("z-exponents must be nonnegative")
            if self._keeps(int(k), m):
                key = (int(k), m)
                acc[key] = acc.get(key, Fraction(0)) + as_fraction(c)
        self.terms = {key: c for key, c in acc.items() if c != 0}

    def _keeps(self, k: int, m: tuple[int, ...]) -> bool:
        if sum(m) > self.trunc_z:
            return False
        if self.q_min is not None and k < self.q_min:
            return False
        if self.q_max is not None and k > self.q_max:
            return False
        return True

    # construction helpers
    def _like(self, terms, other: TruncatedSeries | None = None) -> TruncatedSeries:
        if other is None:
            return TruncatedSeries(self.nvars, terms, self.trunc_z, self.q_min, self.q_max)
        return TruncatedSeries(
            self.nvars,
            terms,
            min(self.trunc_z, other.trunc_z),
            _merge_bound(self.q_min, other.q_min, max),
            _merge_bound(self.q_max, other.q_max, min),
        )

    @classmethod
    def one(cls, nvars: int, **bounds) -> TruncatedSeries:
        return cls(nvars, {(0, (0,) * nvars): 1}, **bounds)

    @classmethod
    def monomial(cls, nvars: int, q: int = 0, z: Sequence[int] | None = None, coeff=1, **bounds) -> TruncatedSeries:
        z = tuple(z) if z is not None else (0,) * nvars
        return cls(nvars, {(q, z): coeff}, **bounds)

    @classmethod
    def variable(cls, nvars: int, index: int, **bounds) -> TruncatedSeries:
        """The series ``z_index`` (1-based)."""
        z = [0] * nvars
        z[index - 1] = 1
        return cls.monomial(nvars, 0, z, **bounds)

    def _compatible(self, other):
        if not isinstance(other, TruncatedSeries):
            return False
        if other.nvars != self.nvars:
            raise ValueError("series in different numbers of z-variables")
        return True

    # arithmetic
    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = self._like({(0, (0,) * self.nvars): as_fraction(other)})
        self._compatible(other)
        return self._like(list(self.terms.items()) + list(other.terms.items()), other)

    __radd__ = __add__

    def __neg__(self):
        return self._like({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            s = as_fraction(other)
            return self._like({k: s * c for k, c in self.terms.items()})
        self._compatible(other)
        out = self._like({}, other)
        T = out.trunc_z
        # bucket by z-degree so hopeless pairs are skipped wholesale
        left: dict[int, list] = {}
        for (k, m), c in self.terms.items():
            left.setdefault(sum(m), []).append((k, m, c))
        right: dict[int, list] = {}
        for (k, m), c in other.terms.items():
            right.setdefault(sum(m), []).append((k, m, c))
        acc: dict[Key, Fraction] = {}
        for da, la in left.items():
            for db, lb in right.items():
                if da + db > T:
                    continue
                for k1, m1, c1 in la:
                    for k2, m2, c2 in lb:
                        k = k1 + k2
                        if out.q_min is not None and k < out.q_min:
                            continue
                        if out.q_max is not None and k > out.q_max:
                            continue
                        key = (k, tuple(a + b for a, b in zip(m1, m2)))
                        acc[key] = acc.get(key, Fraction(0)) + c1 * c2
        out.terms = {key: c for key, c in acc.items() if c != 0}
        return out

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (1 / as_fraction(scalar))

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = TruncatedSeries.one(self.nvars, trunc_z=self.trunc_z, q_min=self.q_min, q_max=self.q_max)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def truncate(self, trunc_z=None, q_min=None, q_max=None) -> TruncatedSeries:
        return TruncatedSeries(
            self.nvars,
            self.terms,
            self.trunc_z if trunc_z is None else trunc_z,
            _merge_bound(self.q_min, q_min, max),
            _merge_bound(self.q_max, q_max, min),
        )

    # inspection
    def coefficient(self, q: int, z: Sequence[int]) -> Fraction:
        return self.terms.get((q, tuple(z)), Fraction(0))

    def z_coefficient(self, z: Sequence[int]) -> dict[int, Fraction]:
        z = tuple(z)
        return dict(sorted((k, c) for (k, m), c in self.terms.items() if m == z))

    def z_support(self) -> list[tuple[int, ...]]:
        return sorted({m for (_, m) in self.terms})

    def has_z_constant(self) -> bool:
        zero = (0,) * self.nvars
        return any(m == zero for (_, m) in self.terms)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def sorted_terms(self) -> list[tuple[Key, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0][1]), kv[0][1], kv[0][0]))

    def to_json(self, zkey: str = "z") -> list[dict]:
        return [{"q": k, zkey: list(m), "coeff": fmt(c)} for (k, m), c in self.sorted_terms()]

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (k, m), c in self.sorted_terms():
            mono = [f"q^{k}"] if k else []
            mono += [f"z{i + 1}^{e}" if e > 1 else f"z{i + 1}" for i, e in enumerate(m) if e]
            parts.append(f"{c}*{'*'.join(mono)}" if mono else str(c))
        return " + ".join(parts)


def adams(f: TruncatedSeries, n: int) -> TruncatedSeries:
    """Substitute ``v -> v^n`` for ``q`` and every ``z_i``."""
    if n < 1:
        raise ValueError(f"Adams operation needs n ≥ 1, got {n}")
    return f._like({(n * k, tuple(n * v for v in m)): c for (k, m), c in f.terms.items()})


def _exp(g: TruncatedSeries) -> TruncatedSeries:
    if g.has_z_constant():
        raise ValueError("Exp undefined: divergent constant part")
    result = TruncatedSeries.one(g.nvars, trunc_z=g.trunc_z, q_min=g.q_min, q_max=g.q_max)
    term = result
    for k in range(1, g.trunc_z + 1):
        term = term * g / k
        if not term.terms:
            break
        result = result + term
    return result


def plethystic_exp(f: TruncatedSeries) -> TruncatedSeries:
    """``Exp(f) = exp(sum_{n >= 1} psi_n(f) / n)``."""
    if f.has_z_constant():
        raise ValueError("Exp undefined: divergent constant part")
    log = f._like({})
    for n in range(1, f.trunc_z + 1):
        log = log + adams(f, n) / n
    return _exp(log)


def _binomial_neg(a: int, r: int) -> int:
    """Coefficient of ``x^r`` in ``(1 - x)^(-a)``."""
    num = 1
    for t in range(r):
        num *= a + t
    return num // math.factorial(r)


def product_formula_oracle(f: TruncatedSeries) -> TruncatedSeries:
    """Expand ``prod (1 - q^k z^m)^(-a_{k,m})`` factor by factor."""
    if not f.is_integral():
        raise ValueError("product formula needs integer coefficients")
    if f.has_z_constant():
        raise ValueError("Exp undefined: divergent constant part")
    result = TruncatedSeries.one(f.nvars, trunc_z=f.trunc_z, q_min=f.q_min, q_max=f.q_max)
    for (k, m), c in sorted(f.terms.items()):
        a = int(c)
        deg = sum(m)
        factor = f._like({(k * r, tuple(r * v for v in m)): _binomial_neg(a, r) for r in range(f.trunc_z // deg + 1)})
        result = result * factor
    return result


def q_over_q_minus_one(convention: str = "expand_q_inverse", window: int = 8, nvars: int = 0, trunc_z: int = 6) -> TruncatedSeries:
    """``q/(q-1)`` as ``sum_{n>=0} q^-n`` (default) or ``-sum_{n>=1} q^n``."""
    conv = CONVENTIONS.get(convention)
    if conv is None:
        raise ValueError(f"unknown expansion convention {convention!r}")
    zero = (0,) * nvars
    if conv == "expand_q_inverse":
        return TruncatedSeries(nvars, {(-n, zero): 1 for n in range(window + 1)}, trunc_z, q_min=-window)
    return TruncatedSeries(nvars, {(n, zero): -1 for n in range(1, window + 1)}, trunc_z, q_max=window)


class ConventionViolation(ValueError):
    """A Betti read-off produced a negative or non-integral number."""


class ConventionWarning(UserWarning):
    pass


@dataclass(frozen=True)
class PoincarePrediction:
    """Predicted ``dim H_{2i}^BM`` of the semistable stack with ``ch_1 = gamma``."""

    gamma: DivisorClass
    self_pairing: int
    betti: dict

    @property
    def admissible(self) -> bool:
        return all(c.denominator == 1 and c >= 0 for c in self.betti.values())

    def to_json(self) -> dict:
        return {
            "gamma": [int(v) for v in self.gamma.compact_vector],
            "self_pairing": self.self_pairing,
            "betti": {str(i): fmt(c) for i, c in sorted(self.betti.items())},
        }


def _root_sum(nvars: int, roots, trunc_z: int) -> TruncatedSeries:
    terms = {}
    for rho in roots:
        m = tuple(int(v) for v in rho.ch1_image.compact_vector)
        terms[(0, m)] = terms.get((0, m), 0) + 1
    return TruncatedSeries(nvars, terms, trunc_z)


def betti_series(N: int, roots, trunc_z: int = 3, trunc_q: int = 8, convention: str = "expand_q_inverse", strict: bool = True):
    """``Exp(q/(q-1) * sum_rho z^{ch_1(rho)})`` and the Betti numbers read off from it.

    For ``gamma = sum m_i C_i`` the coefficient of ``q^k z^gamma`` predicts
    ``dim H_{2i}`` with ``i = k + <gamma, gamma>/2``.  Any negative or
    fractional prediction raises :class:`ConventionViolation` (or warns when
    ``strict`` is false).
    """
    nvars = N - 1
    geometric = q_over_q_minus_one(convention, trunc_q, nvars, trunc_z)
    series = plethystic_exp(geometric * _root_sum(nvars, roots, trunc_z))
    predictions = []
    for m in series.z_support():
        if not any(m):
            continue
        gamma = DivisorClass.compact(m)
        pairing = intersection(gamma, gamma)
        if pairing.denominator != 1 or pairing % 2:
            raise ValueError(f"odd self-intersection {pairing} for gamma = {m}")
        pairing = int(pairing)
        betti = {k + pairing // 2: c for k, c in series.z_coefficient(m).items()}
        pred = PoincarePrediction(gamma, pairing, betti)
        if not pred.admissible:
            msg = f"expansion convention violated at gamma = {list(m)}"
            if strict:
                raise ConventionViolation(msg)
            warnings.warn(msg, ConventionWarning, stacklevel=2)
        predictions.append(pred)
    return series, predictions


@dataclass(frozen=True)
class YPolynomial:
    nvars: int
    coeffs: dict

    @property
    def term_count(self) -> int:
        """Number of terms counted with multiplicity."""
        return sum(self.coeffs.values())

    def __len__(self):
        return len(self.coeffs)

    def to_json(self) -> list[dict]:
        return [{"y": list(d), "coeff": fmt(c)} for d, c in sorted(self.coeffs.items())]


def restricted_kac_generating(N: int, roots) -> YPolynomial:
    """``sum_c sum_{rho} y^{d(rho)}`` over the positive roots of every chain."""
    coeffs: dict[tuple[int, ...], int] = {}
    for rho in roots:
        d = tuple(rho.dim_image)
        if len(d) != N:
            raise ValueError(f"dimension vector {d} does not have {N} entries")
        coeffs[d] = coeffs.get(d, 0) + 1
    return YPolynomial(N, coeffs)
