"""Sparse multivariate polynomials over Q(i).

A :class:`Poly` lives in a fixed ambient dimension ``N`` and maps exponent
tuples (monomials) to nonzero :class:`~rotpoly.arith.GaussianRational`
coefficients.  Variables are numbered ``1..N`` in the public API, matching
the text syntax ``x1, x2, ...``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from types import MappingProxyType

from .arith import ZERO, ONE, GaussianRational, as_scalar, format_rational

__all__ = [
    "MINUS_INFINITY",
    "Poly",
    "divmod_monic",
    "embed",
    "format_poly",
    "homogeneous_component",
    "homogeneous_components",
    "homogeneous_degree",
    "is_homogeneous",
    "monomials_of_degree",
    "parse_poly",
    "poly_from_dict",
    "poly_to_dict",
    "shift",
    "substitute_linear",
    "x_dot_x",
]


class _MinusInfinity:
    """Degree of the zero polynomial; absorbs addition of integers."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "MINUS_INFINITY"

    def __add__(self, other):
        if isinstance(other, (int, _MinusInfinity)):
            return self
        return NotImplemented

    __radd__ = __add__

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("-inf-degree")

    def __lt__(self, other):
        return isinstance(other, int)

    def __le__(self, other):
        return isinstance(other, int) or other is self

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self


MINUS_INFINITY = _MinusInfinity()


def _check_index(dim: int, j: int) -> int:
    if not isinstance(j, int) or not 1 <= j <= dim:
        raise IndexError(f"variable index {j} out of range 1..{dim}")
    return j - 1


class Poly:
    """Immutable sparse polynomial in ``dim`` indeterminates over Q(i)."""

    __slots__ = ("dim", "_terms")

    def __init__(self, dim: int, terms=None):
        if not isinstance(dim, int) or dim < 0:
            raise ValueError(f"dimension must be a non-negative integer, got {dim!r}")
        clean = {}
        if terms:
            for mono, c in dict(terms).items():
                mono = tuple(int(e) for e in mono)
                if len(mono) != dim:
                    raise ValueError(f"monomial {mono} does not have length {dim}")
                if any(e < 0 for e in mono):
                    raise ValueError(f"negative exponent in {mono}")
                c = as_scalar(c)
                if c:
                    prev = clean.get(mono)
                    c = c if prev is None else prev + c
                    if c:
                        clean[mono] = c
                    else:
                        del clean[mono]
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "_terms", clean)

    @classmethod
    def _wrap(cls, dim: int, terms: dict) -> "Poly":
        # terms must already be clean: correct lengths, no zero values
        p = object.__new__(cls)
        object.__setattr__(p, "dim", dim)
        object.__setattr__(p, "_terms", terms)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, dim: int) -> "Poly":
        return cls._wrap(dim, {})

    @classmethod
    def constant(cls, dim: int, c=1) -> "Poly":
        c = as_scalar(c)
        return cls._wrap(dim, {(0,) * dim: c} if c else {})

    @classmethod
    def one(cls, dim: int) -> "Poly":
        return cls.constant(dim, ONE)

    @classmethod
    def var(cls, dim: int, j: int) -> "Poly":
        """The indeterminate ``X_j`` (1-based)."""
        k = _check_index(dim, j)
        mono = tuple(1 if i == k else 0 for i in range(dim))
        return cls._wrap(dim, {mono: ONE})

    @classmethod
    def monomial(cls, exponents, c=1) -> "Poly":
        exponents = tuple(exponents)
        return cls(len(exponents), {exponents: c})

    @classmethod
    def linear(cls, coeffs) -> "Poly":
        """``sum_j coeffs[j] X_j``."""
        coeffs = [as_scalar(c) for c in coeffs]
        dim = len(coeffs)
        terms = {}
        for k, c in enumerate(coeffs):
            if c:
                terms[tuple(1 if i == k else 0 for i in range(dim))] = c
        return cls._wrap(dim, terms)

    # -- access -----------------------------------------------------------
    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def items(self):
        """Terms in canonical (graded lexicographic, descending) order."""
        return sorted(self._terms.items(), key=_grlex_key, reverse=True)

    def coeff(self, exponents) -> GaussianRational:
        return self._terms.get(tuple(exponents), ZERO)

    def constant_term(self) -> GaussianRational:
        return self._terms.get((0,) * self.dim, ZERO)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and (0,) * self.dim in self._terms)

    def degree(self):
        """Total degree; ``MINUS_INFINITY`` for the zero polynomial."""
        if not self._terms:
            return MINUS_INFINITY
        return max(sum(m) for m in self._terms)

    def degree_in(self, j: int):
        k = _check_index(self.dim, j)
        if not self._terms:
            return MINUS_INFINITY
        return max(m[k] for m in self._terms)

    def variables(self) -> set:
        """1-based indices of the indeterminates that actually occur."""
        used = set()
        for m in self._terms:
            used.update(i + 1 for i, e in enumerate(m) if e)
        return used

    # -- arithmetic -------------------------------------------------------
    def _same_dim(self, other: "Poly"):
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.dim == other.dim and self._terms == other._terms
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self == Poly.constant(self.dim, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.dim, frozenset(self._terms.items())))

    def __neg__(self):
        return Poly._wrap(self.dim, {m: -c for m, c in self._terms.items()})

    def __pos__(self):
        return self

    def __add__(self, other):
        if not isinstance(other, Poly):
            try:
                other = Poly.constant(self.dim, other)
            except TypeError:
                return NotImplemented
        self._same_dim(other)
        if len(self._terms) < len(other._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for m, c in small.items():
            prev = out.get(m)
            if prev is None:
                out[m] = c
            else:
                s = prev + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Poly._wrap(self.dim, out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Poly):
            try:
                other = Poly.constant(self.dim, other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Poly":
        c = c if isinstance(c, (int, GaussianRational)) else as_scalar(c)
        if not c:
            return Poly.zero(self.dim)
        if c == 1:
            return self
        return Poly._wrap(self.dim, {m: v * c for m, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        self._same_dim(other)
        a, b = self._terms, other._terms
        if not a or not b:
            return Poly.zero(self.dim)
        if len(a) < len(b):
            a, b = b, a
        out = {}
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = tuple([x + y for x, y in zip(ma, mb)])
                prev = get(m)
                out[m] = ca * cb if prev is None else prev + ca * cb
        return Poly._wrap(self.dim, {m: c for m, c in out.items() if c})

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, c):
        if isinstance(c, Poly):
            return NotImplemented
        return self.scale(ONE / as_scalar(c))

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers need a non-negative integer exponent")
        result, base = Poly.one(self.dim), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def mul_monomial(self, exponents, c=ONE) -> "Poly":
        """Multiply by ``c * X^exponents`` (cheap shift of every term)."""
        exponents = tuple(exponents)
        if len(exponents) != self.dim:
            raise ValueError("monomial length mismatch")
        c = as_scalar(c)
        if not c:
            return Poly.zero(self.dim)
        return Poly._wrap(
            self.dim,
            {tuple([x + y for x, y in zip(m, exponents)]): v * c for m, v in self._terms.items()},
        )

    def mul_xx(self) -> "Poly":
        """Multiply by ``X . X = X_1^2 + ... + X_N^2``."""
        out = {}
        get = out.get
        for m, c in self._terms.items():
            for k in range(self.dim):
                mm = list(m)
                mm[k] += 2
                mm = tuple(mm)
                prev = get(mm)
                out[mm] = c if prev is None else prev + c
        return Poly._wrap(self.dim, {m: c for m, c in out.items() if c})

    def conj(self) -> "Poly":
        return Poly._wrap(self.dim, {m: c.conj() for m, c in self._terms.items()})

    def evaluate(self, point):
        """Value at a point of Q(i)^N."""
        point = [as_scalar(x) for x in point]
        if len(point) != self.dim:
            raise ValueError("point has wrong length")
        total = ZERO
        for m, c in self._terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v = v * x**e
            total = total + v
        return total

    def __call__(self, *images):
        return substitute_linear(self, images)

    # -- text -------------------------------------------------------------
    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({self.dim}, {format_poly(self)!r})"


def _grlex_key(item):
    m = item[0]
    return (sum(m), m)


def x_dot_x(N: int) -> Poly:
    """``X_1^2 + ... + X_N^2``."""
    if not isinstance(N, int) or N < 1:
        raise ValueError("X.X needs N >= 1")
    terms = {}
    for k in range(N):
        terms[tuple(2 if i == k else 0 for i in range(N))] = ONE
    return Poly._wrap(N, terms)


def homogeneous_component(p: Poly, d: int) -> Poly:
    if d < 0:
        return Poly.zero(p.dim)
    return Poly._wrap(p.dim, {m: c for m, c in p._terms.items() if sum(m) == d})


def homogeneous_components(p: Poly) -> dict:
    """Map degree -> nonzero homogeneous component."""
    parts: dict = {}
    for m, c in p._terms.items():
        parts.setdefault(sum(m), {})[m] = c
    return {d: Poly._wrap(p.dim, t) for d, t in sorted(parts.items())}


def homogeneous_degree(p: Poly):
    """Common degree of all terms, ``MINUS_INFINITY`` for 0, ``None`` if mixed."""
    degs = {sum(m) for m in p._terms}
    if not degs:
        return MINUS_INFINITY
    if len(degs) == 1:
        return degs.pop()
    return None


def is_homogeneous(p: Poly) -> bool:
    return homogeneous_degree(p) is not None


def monomials_of_degree(N: int, d: int) -> list:
    """Exponent tuples of total degree ``d`` in ``N`` variables, descending lex."""
    if d < 0:
        return []
    if N == 0:
        return [()] if d == 0 else []
    out = []
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(N - 1, d - first):
            out.append((first,) + rest)
    return out


def embed(p: Poly, dim: int, positions=None) -> Poly:
    """Re-home ``p`` in a ring of ``dim`` variables.

    ``positions[k]`` (1-based) says where old variable ``k+1`` goes; by default
    the first ``p.dim`` variables are kept in place.
    """
    if positions is None:
        positions = list(range(1, p.dim + 1))
    if len(positions) != p.dim:
        raise ValueError("positions must list one target per variable")
    idx = [_check_index(dim, j) for j in positions]
    terms = {}
    for m, c in p._terms.items():
        mm = [0] * dim
        for k, e in zip(idx, m):
            mm[k] += e
        terms[tuple(mm)] = c
    return Poly._wrap(dim, terms)


def _coefficients_in(p: Poly, k: int) -> dict:
    """Split ``p`` as ``sum_e coeff_e * X_k^e`` (0-based k); coeff_e free of X_k."""
    out: dict = {}
    for m, c in p._terms.items():
        e = m[k]
        mm = m[:k] + (0,) + m[k + 1:]
        out.setdefault(e, {})[mm] = c
    return {e: Poly._wrap(p.dim, t) for e, t in out.items()}


def divmod_monic(p: Poly, d: Poly, var: int):
    """Divide ``p`` by ``d``, monic in ``X_var`` over the other variables.

    Returns ``(q, r)`` with ``p = d*q + r`` and ``deg_var(r) < deg_var(d)``.
    """
    p._same_dim(d)
    k = _check_index(p.dim, var)
    if not d:
        raise ZeroDivisionError("division by the zero polynomial")
    dcoef = _coefficients_in(d, k)
    top = max(dcoef)
    if dcoef[top] != Poly.one(p.dim):
        raise ValueError(f"divisor is not monic in x{var}")
    q_terms: dict = {}
    r = p
    while r:
        rcoef = _coefficients_in(r, k)
        e = max(rcoef)
        if e < top:
            break
        shift = [0] * p.dim
        shift[k] = e - top
        lead = rcoef[e].mul_monomial(shift)
        for m, c in lead._terms.items():
            prev = q_terms.get(m)
            q_terms[m] = c if prev is None else prev + c
        r = r - d * lead
    q = Poly._wrap(p.dim, {m: c for m, c in q_terms.items() if c})
    return q, r


def substitute_linear(p: Poly, images) -> Poly:
    """Replace ``X_j`` by ``images[j-1]``; result lives in the images' ring.

    Despite the name any polynomial images are accepted; the linear case
    is the orthogonal action ``p(XA)``.
    """
    images = list(images)
    if len(images) != p.dim:
        raise ValueError(f"need {p.dim} images, got {len(images)}")
    if not images:
        raise ValueError("cannot infer target dimension from zero images")
    dims = {g.dim for g in images}
    if len(dims) != 1:
        raise ValueError(f"images live in different dimensions: {sorted(dims)}")
    target = dims.pop()
    powers = [{0: Poly.one(target)} for _ in images]

    def power(k, e):
        cache = powers[k]
        if e not in cache:
            best = max(x for x in cache if x <= e)
            val = cache[best]
            for x in range(best + 1, e + 1):
                val = val * images[k]
                cache[x] = val
        return cache[e]

    total = Poly.zero(target)
    for m, c in p._terms.items():
        term = Poly.constant(target, c)
        for k, e in enumerate(m):
            if e:
                term = term * power(k, e)
        total = total + term
    return total


def shift(p: Poly, N: int = None) -> Poly:
    """``p(X + t)`` in variables ``(X_1..X_N, t_1..t_N)``; t occupies N+1..2N."""
    if N is None:
        N = p.dim
    if N != p.dim:
        raise ValueError(f"shift expects a polynomial in {N} variables, got {p.dim}")
    two = 2 * N
    images = [Poly.var(two, j) + Poly.var(two, N + j) for j in range(1, N + 1)]
    return substitute_linear(p, images)


# -- text syntax -----------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>x\d+)|(?P<i>i)|(?P<op>[-+*/^]))")


def _tokenize(text: str):
    pos, toks = 0, []
    while pos < len(text):
        if not text[pos:].strip():
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            bad = len(text[pos:]) - len(text[pos:].lstrip()) + pos
            raise ValueError(f"unexpected character {text[bad]!r} at position {bad}")
        kind = m.lastgroup
        start = m.start(kind)
        toks.append((kind, m.group(kind), start))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


def parse_poly(text: str, N: int) -> Poly:
    """Parse e.g. ``"3/2*x1^2*x2 - x3 + 1/2*i*x2^4"`` into a :class:`Poly`."""
    toks = _tokenize(text)
    pos = 0

    def peek():
        return toks[pos]

    def take(kind=None, value=None):
        nonlocal pos
        tok = toks[pos]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            raise ValueError(f"expected {want} at position {tok[2]}, found {tok[1]!r}")
        pos += 1
        return tok

    def factor(coef, mono):
        tok = peek()
        if tok[0] == "num":
            take()
            val = Fraction(int(tok[1]))
            if peek() == ("op", "/", peek()[2]):
                take()
                den = take("num")
                if int(den[1]) == 0:
                    raise ValueError(f"zero denominator at position {den[2]}")
                val /= int(den[1])
            return coef * val, mono
        if tok[0] == "i":
            take()
            return coef * GaussianRational(0, 1), mono
        if tok[0] == "var":
            take()
            j = int(tok[1][1:])
            if not 1 <= j <= N:
                raise ValueError(
                    f"variable index out of range: {tok[1]} at position {tok[2]} (N={N})"
                )
            e = 1
            if peek()[0] == "op" and peek()[1] == "^":
                take()
                e = int(take("num")[1])
            mono = list(mono)
            mono[j - 1] += e
            return coef, tuple(mono)
        raise ValueError(f"unexpected {tok[1] or 'end of input'!r} at position {tok[2]}")

    def term():
        coef, mono = factor(ONE, (0,) * N)
        while peek()[0] == "op" and peek()[1] == "*":
            take()
            coef, mono = factor(coef, mono)
        return coef, mono

    terms: dict = {}
    if peek()[0] == "end":
        raise ValueError("empty polynomial")
    sign = 1
    if peek()[0] == "op" and peek()[1] in "+-":
        sign = -1 if take()[1] == "-" else 1
    while True:
        coef, mono = term()
        c = coef * sign
        terms[mono] = terms.get(mono, ZERO) + c
        tok = peek()
        if tok[0] == "end":
            break
        if tok[0] == "op" and tok[1] in "+-":
            take()
            sign = -1 if tok[1] == "-" else 1
            continue
        raise ValueError(f"unexpected {tok[1]!r} at position {tok[2]}")
    return Poly(N, terms)


def _mono_text(m) -> str:
    parts = []
    for k, e in enumerate(m):
        if e == 1:
            parts.append(f"x{k + 1}")
        elif e:
            parts.append(f"x{k + 1}^{e}")
    return "*".join(parts)


def _term_text(c: Fraction, mono: str, imaginary: bool):
    """Signed pieces for one real or imaginary coefficient."""
    sign = "-" if c < 0 else "+"
    a = -c if c < 0 else c
    factors = []
    if a != 1 or (not imaginary and not mono):
        factors.append(format_rational(a))
    if imaginary:
        factors.append("i")
    if mono:
        factors.append(mono)
    return sign, "*".join(factors)


def format_poly(p: Poly) -> str:
    """Canonical text: graded-lex descending; complex coefficients split into
    a real term and an ``i`` term so that the output re-parses exactly."""
    pieces = []
    for m, c in p.items():
        mono = _mono_text(m)
        if c.re:
            pieces.append(_term_text(c.re, mono, False))
        if c.im:
            pieces.append(_term_text(c.im, mono, True))
    if not pieces:
        return "0"
    out = []
    for n, (sign, body) in enumerate(pieces):
        if n == 0:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


# -- machine format ----------------------------------------------------------

def poly_to_dict(p: Poly) -> dict:
    """JSON-ready form ``{dim, terms: [{exponents, re_num, re_den, im_num, im_den}]}``."""
    return {
        "dim": p.dim,
        "terms": [
            {
                "exponents": list(m),
                "re_num": c.re.numerator,
                "re_den": c.re.denominator,
                "im_num": c.im.numerator,
                "im_den": c.im.denominator,
            }
            for m, c in p.items()
        ],
    }


def poly_from_dict(data: dict) -> Poly:
    terms = {}
    for t in data["terms"]:
        c = GaussianRational(
            Fraction(t["re_num"], t["re_den"]), Fraction(t["im_num"], t["im_den"])
        )
        terms[tuple(t["exponents"])] = c
    return Poly(int(data["dim"]), terms)
