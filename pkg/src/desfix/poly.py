"""Sparse multivariate polynomials with exact integer coefficients.

A polynomial is stored as a map from exponent vectors to nonzero int
coefficients, together with an ordered tuple of variable names.  All
arithmetic is exact; there is no floating point anywhere.  Rational
intermediate values are handled one level up (see series.RatFn), which
keeps this layer free of normalization concerns.

Term order is graded lexicographic throughout: terms are compared first
by total degree, then lexicographically on the exponent vector.  This
single order drives exact division, the canonical string rendering, and
the JSON serialization, so equal polynomials always print identically.
"""

from __future__ import annotations

from typing import Mapping


def _grlex_key(exp: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    return (sum(exp), exp)


class MPoly:
    """An exact sparse polynomial in a fixed tuple of variables.

    >>> s = MPoly.var("s")
    >>> print((s - 1) * (s**3 + 2 * s**2))
    s^4 + s^3 - 2*s^2
    >>> print((s**4 + s**3 - 2 * s**2).exact_div(s - 1))
    s^3 + 2*s^2
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: tuple[str, ...], terms: Mapping[tuple[int, ...], int]):
        self.vars = tuple(vars)
        clean = {}
        for exp, coef in terms.items():
            if len(exp) != len(self.vars):
                raise ValueError(f"exponent arity {len(exp)} != {len(self.vars)} variables")
            if coef:
                clean[tuple(exp)] = int(coef)
        self.terms = clean

    # -- constructors ------------------------------------------------

    @classmethod
    def const(cls, c: int, vars: tuple[str, ...] = ()) -> "MPoly":
        if c == 0:
            return cls(vars, {})
        return cls(vars, {(0,) * len(vars): int(c)})

    @classmethod
    def var(cls, name: str, vars: tuple[str, ...] | None = None) -> "MPoly":
        if vars is None:
            vars = (name,)
        i = vars.index(name)
        exp = tuple(1 if j == i else 0 for j in range(len(vars)))
        return cls(vars, {exp: 1})

    @classmethod
    def monomial(cls, vars: tuple[str, ...], exp: tuple[int, ...], coef: int = 1) -> "MPoly":
        return cls(vars, {tuple(exp): coef})

    def with_vars(self, vars: tuple[str, ...]) -> "MPoly":
        """Embed into a larger variable tuple (must contain self.vars)."""
        if tuple(vars) == self.vars:
            return self
        pos = [vars.index(v) for v in self.vars]
        terms = {}
        for exp, coef in self.terms.items():
            new = [0] * len(vars)
            for p, e in zip(pos, exp):
                new[p] = e
            terms[tuple(new)] = coef
        return MPoly(vars, terms)

    # -- predicates and views ----------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self, name: str | None = None) -> int:
        """Total degree, or degree in one variable; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if name is None:
            return max(sum(e) for e in self.terms)
        i = self.vars.index(name)
        return max(e[i] for e in self.terms)

    def sorted_terms(self, reverse: bool = False) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=reverse)

    def leading(self) -> tuple[tuple[int, ...], int]:
        """Greatest term in graded-lex order.  Zero polynomial has none."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms, key=_grlex_key)
        return exp, self.terms[exp]

    def coefficient(self, name: str, power: int) -> "MPoly":
        """The coefficient of name**power, as a polynomial in the same vars."""
        i = self.vars.index(name)
        terms = {}
        for exp, coef in self.terms.items():
            if exp[i] == power:
                reduced = exp[:i] + (0,) + exp[i + 1:]
                terms[reduced] = coef
        return MPoly(self.vars, terms)

    def constant_term(self) -> int:
        return self.terms.get((0,) * len(self.vars), 0)

    # -- arithmetic --------------------------------------------------

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        if isinstance(other, int):
            return MPoly.const(other, self.vars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for exp, coef in other.terms.items():
            c = terms.get(exp, 0) + coef
            if c:
                terms[exp] = c
            else:
                terms.pop(exp, None)
        return MPoly(self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                c = terms.get(exp, 0) + c1 * c2
                if c:
                    terms[exp] = c
                else:
                    terms.pop(exp, None)
        return MPoly(self.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = MPoly.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def exact_div(self, divisor: "MPoly") -> "MPoly | None":
        """Exact quotient self/divisor, or None when it does not divide.

        Single-divisor polynomial division in graded-lex order.  When the
        divisor divides exactly, repeated cancellation of leading terms
        terminates with remainder zero; the first failed leading-term or
        integer-coefficient division proves non-divisibility.
        """
        divisor = self._coerce(divisor)
        if divisor.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        lexp, lcoef = divisor.leading()
        q_terms: dict[tuple[int, ...], int] = {}
        rem = self
        while not rem.is_zero:
            rexp, rcoef = rem.leading()
            qexp = tuple(a - b for a, b in zip(rexp, lexp))
            if any(e < 0 for e in qexp) or rcoef % lcoef:
                return None
            qcoef = rcoef // lcoef
            q_terms[qexp] = q_terms.get(qexp, 0) + qcoef
            rem = rem - MPoly.monomial(self.vars, qexp, qcoef) * divisor
        return MPoly(self.vars, q_terms)

    def subs(self, values: Mapping[str, int]) -> "MPoly":
        """Substitute integers for some variables (result keeps all vars)."""
        idx = {self.vars.index(k): v for k, v in values.items()}
        terms: dict[tuple[int, ...], int] = {}
        for exp, coef in self.terms.items():
            c = coef
            new = list(exp)
            for i, v in idx.items():
                c *= v ** exp[i]
                new[i] = 0
            if c:
                key = tuple(new)
                c0 = terms.get(key, 0) + c
                if c0:
                    terms[key] = c0
                else:
                    terms.pop(key, None)
        return MPoly(self.vars, terms)

    def evaluate(self, values: Mapping[str, int]) -> int:
        """Evaluate fully at integer points (every variable must be given)."""
        out = self.subs(values)
        if any(any(e) for e in out.terms):
            missing = [v for v in self.vars if v not in values]
            raise ValueError(f"unassigned variables: {missing}")
        return out.constant_term()

    # -- comparisons and rendering -----------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == MPoly.const(other, self.vars).terms
        if isinstance(other, MPoly):
            return self.vars == other.vars and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.vars, tuple(sorted(self.terms.items()))))

    def _term_str(self, exp: tuple[int, ...], coef: int) -> str:
        parts = []
        for name, e in zip(self.vars, exp):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        if not parts:
            return str(abs(coef))
        body = "*".join(parts)
        if abs(coef) == 1:
            return body
        return f"{abs(coef)}*{body}"

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for i, (exp, coef) in enumerate(self.sorted_terms(reverse=True)):
            term = self._term_str(exp, coef)
            if i == 0:
                chunks.append(term if coef > 0 else f"-{term}")
            else:
                chunks.append(f"+ {term}" if coef > 0 else f"- {term}")
        return " ".join(chunks)

    def __repr__(self):
        return f"MPoly({self.vars!r}, {self.terms!r})"


def poly_from_counter(vars: tuple[str, ...], counter: Mapping[tuple[int, ...], int]) -> MPoly:
    """Build a generating polynomial from a {exponent-tuple: count} map."""
    return MPoly(vars, counter)
