#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
tiedlinks/coeffs.py — exact coefficient fields for the bt-algebra invariants.

Two fields are in play:

    T-field   Q(u, a, b, x, y)(s),  s² = c = (a + (1−u)·b) / (a·u)
    V-field   Q(v, a, b, x, y)(r),  r² = d = (a + (1−v²)·b) / a

Polynomials are sympy `PolyElement`s of a `sympy.polys.rings.ring` over QQ
(arbitrary precision). On top of them:

    PolyFrac  num / den, normalized (content, sign, common monomial), NOT
              gcd-reduced; equality by cross-multiplication
    QuadExt   even + odd·s, the honest quadratic extension

Public API
----------
T_FIELD, V_FIELD                       the two field singletons
field.const(k), field.var("a"), field.radical(), field.frac(num, den)
qx_add, qx_sub, qx_neg, qx_mul, qx_inv, qx_pow, qx_eq
qx_subst(val, {"x": frac, ...})        only x and y may be bound
qx_collect(val, "y")                   {power: QuadExt}, var free in denominators
qx_render(val) / qx_parse(text, field) canonical text and its inverse
configure(cfg)                         apply `gcd_degree_threshold` to both fields
check_field_axioms(field, trials, seed) → Report

Design notes
------------
- Denominators met by the algebra kernel are monomials in u, a (or v, a);
  those add by monomial lcm. Other denominators try exact division before
  cross-multiplying, and get a gcd cancel once their degree grows past
  `gcd_degree_threshold` (config).
- Rendering always cancels first, so the string is canonical.
- Values are never mutated after construction.
"""

from __future__ import annotations

import random
from itertools import chain
from math import gcd
from typing import Any, Dict, Iterable, Mapping, Optional, Tuple

import sympy as sp
from sympy import QQ
from sympy.parsing.sympy_parser import parse_expr
from sympy.polys.rings import PolyElement, ring

from .checks import Report
from .config import DEFAULTS
from .errors import DomainError


MultiPoly = PolyElement

SUBSTITUTABLE = ("x", "y")


# --------------------------- Fields ---------------------------

class CoeffField:
    """One of the two coefficient fields; holds the ring and the radicand."""

    def __init__(self, tag: str, names: Tuple[str, ...], radical: str):
        self.tag = tag
        self.names = names
        self.radical_name = radical
        self.ring, *gens = ring(",".join(names), QQ)
        self.gens: Dict[str, PolyElement] = dict(zip(names, gens))
        self._zero = PolyFrac(self, self.ring.zero, self.ring.one)
        self._one = PolyFrac(self, self.ring.one, self.ring.one)
        self.radicand: PolyFrac = self._zero  # set by _build_fields
        self.gcd_threshold = int(DEFAULTS["gcd_degree_threshold"])

    def __repr__(self) -> str:
        return f"CoeffField({self.tag})"

    # ---- PolyFrac constructors ----
    def frac(self, num: PolyElement, den: Optional[PolyElement] = None) -> "PolyFrac":
        return PolyFrac.make(self, num, self.ring.one if den is None else den)

    def frac_const(self, k) -> "PolyFrac":
        if k == 0:
            return self._zero
        if k == 1:
            return self._one
        return PolyFrac.make(self, self.ring.ground_new(QQ.convert(k)), self.ring.one)

    def frac_var(self, name: str) -> "PolyFrac":
        if name not in self.gens:
            raise DomainError("coeffs", f"{name!r} is not a variable of the {self.tag}-field")
        return PolyFrac(self, self.gens[name], self.ring.one)

    # ---- QuadExt constructors ----
    def const(self, k) -> "QuadExt":
        return QuadExt(self, self.frac_const(k), self._zero)

    def var(self, name: str) -> "QuadExt":
        return QuadExt(self, self.frac_var(name), self._zero)

    def lift(self, f: "PolyFrac") -> "QuadExt":
        return QuadExt(self, f, self._zero)

    def radical(self) -> "QuadExt":
        return QuadExt(self, self._zero, self._one)

    def radical_pow(self, k: int) -> "QuadExt":
        """s^k for any integer k; negative powers are the only source of radicand denominators."""
        if k < 0:
            return qx_inv(self.radical_pow(-k))
        half = qx_pow(self.lift(self.radicand), k // 2)
        return qx_mul(half, self.radical()) if k % 2 else half

    def zero(self) -> "QuadExt":
        return QuadExt(self, self._zero, self._zero)

    def one(self) -> "QuadExt":
        return QuadExt(self, self._one, self._zero)


# --------------------------- PolyFrac ---------------------------

def _shift_down(R, p: PolyElement, mins: Tuple[int, ...]) -> PolyElement:
    return R.from_dict({tuple(e - m for e, m in zip(k, mins)): c for k, c in p.items()})


def _is_monomial(p: PolyElement) -> bool:
    return len(p) == 1


def _total_degree(p: PolyElement) -> int:
    return max((sum(m) for m in p.keys()), default=0)


class PolyFrac:
    """Normalized fraction of two polynomials of one field's ring."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field: CoeffField, num: PolyElement, den: PolyElement):
        # raw constructor; use PolyFrac.make unless (num, den) is already normal
        self.field = field
        self.num = num
        self.den = den

    @classmethod
    def make(cls, field: CoeffField, num: PolyElement, den: PolyElement) -> "PolyFrac":
        R = field.ring
        if not den:
            raise ZeroDivisionError("fraction with zero denominator")
        if not num:
            return field._zero

        mins: Optional[Tuple[int, ...]] = None
        for m in chain(num.keys(), den.keys()):
            mins = m if mins is None else tuple(map(min, mins, m))
        if mins is not None and any(mins):
            num = _shift_down(R, num, mins)
            den = _shift_down(R, den, mins)

        coeffs = list(chain(num.values(), den.values()))
        lcm_den = 1
        for c in coeffs:
            d = int(QQ.denom(c))
            lcm_den = lcm_den * d // gcd(lcm_den, d)
        g = 0
        for c in coeffs:
            g = gcd(g, int(QQ.numer(c * lcm_den)))
        scale = QQ(lcm_den, g)
        if den.LC < 0:
            scale = -scale
        if scale != 1:
            num = num.mul_ground(scale)
            den = den.mul_ground(scale)
        return cls(field, num, den)

    # ---- predicates ----
    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == self.den

    def has_var(self, name: str) -> bool:
        idx = self.field.names.index(name)
        return any(m[idx] for m in chain(self.num.keys(), self.den.keys()))

    # ---- arithmetic ----
    def _check(self, other: "PolyFrac") -> None:
        if other.field is not self.field:
            raise DomainError("coeffs", f"field mismatch: {self.field.tag} vs {other.field.tag}")

    def __add__(self, other: "PolyFrac") -> "PolyFrac":
        self._check(other)
        if not self.num:
            return other
        if not other.num:
            return self
        R = self.field.ring
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        if d1 == d2:
            return PolyFrac.make(self.field, n1 + n2, d1)
        if _is_monomial(d1) and _is_monomial(d2):
            (m1, c1), = d1.items()
            (m2, c2), = d2.items()
            top = tuple(map(max, m1, m2))
            f1 = (tuple(t - e for t, e in zip(top, m1)), QQ.one / c1)
            f2 = (tuple(t - e for t, e in zip(top, m2)), QQ.one / c2)
            return PolyFrac.make(self.field, n1.mul_term(f1) + n2.mul_term(f2), R.from_dict({top: QQ.one}))
        q, r = d2.div(d1)
        if not r:
            return self._reduced(n1 * q + n2, d2)
        q, r = d1.div(d2)
        if not r:
            return self._reduced(n1 + n2 * q, d1)
        return self._reduced(n1 * d2 + n2 * d1, d1 * d2)

    def _reduced(self, num: PolyElement, den: PolyElement) -> "PolyFrac":
        if num and not _is_monomial(den) and _total_degree(den) > self.field.gcd_threshold:
            num, den = num.cancel(den)
        return PolyFrac.make(self.field, num, den)

    def __neg__(self) -> "PolyFrac":
        if not self.num:
            return self
        return PolyFrac(self.field, -self.num, self.den)

    def __sub__(self, other: "PolyFrac") -> "PolyFrac":
        return self + (-other)

    def __mul__(self, other: "PolyFrac") -> "PolyFrac":
        self._check(other)
        if not self.num or not other.num:
            return self.field._zero
        if self.is_one():
            return other
        if other.is_one():
            return self
        return self._reduced(self.num * other.num, self.den * other.den)

    def inv(self) -> "PolyFrac":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return PolyFrac.make(self.field, self.den, self.num)

    def equals(self, other: "PolyFrac") -> bool:
        self._check(other)
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    def cancelled(self) -> "PolyFrac":
        if not self.num or _is_monomial(self.den):
            return self
        num, den = self.num.cancel(self.den)
        return PolyFrac.make(self.field, num, den)

    # ---- substitution ----
    def subst(self, bindings: Mapping[str, "PolyFrac"]) -> "PolyFrac":
        num = _poly_subst(self.field, self.num, bindings)
        den = _poly_subst(self.field, self.den, bindings)
        return num * den.inv()

    def render(self) -> str:
        f = self.cancelled()
        if f.den == f.field.ring.one:
            return _render_poly(f.field, f.num)
        ns = _render_poly(f.field, f.num)
        ds = _render_poly(f.field, f.den)
        if len(f.num) > 1:
            ns = f"({ns})"
        if not _is_atom(ds):
            ds = f"({ds})"
        return f"{ns} / {ds}"

    def __repr__(self) -> str:
        return f"PolyFrac({self.render()})"


def _poly_subst(field: CoeffField, p: PolyElement, bindings: Mapping[str, PolyFrac]) -> PolyFrac:
    R = field.ring
    idx = {field.names.index(k): v for k, v in bindings.items()}
    powers: Dict[Tuple[int, int], PolyFrac] = {}

    def power(i: int, e: int) -> PolyFrac:
        key = (i, e)
        if key not in powers:
            acc = field._one
            for _ in range(e):
                acc = acc * idx[i]
            powers[key] = acc
        return powers[key]

    total = field._zero
    for monom, c in p.items():
        kept = tuple(0 if i in idx else e for i, e in enumerate(monom))
        term = PolyFrac.make(field, R.from_dict({kept: c}), R.one)
        for i, e in enumerate(monom):
            if i in idx and e:
                term = term * power(i, e)
        total = total + term
    return total


# --------------------------- Rendering helpers ---------------------------

def _is_atom(text: str) -> bool:
    return " " not in text and "·" not in text and "/" not in text


def _render_poly(field: CoeffField, p: PolyElement) -> str:
    if not p:
        return "0"
    terms = sorted(p.items(), key=lambda t: (sum(t[0]), tuple(-e for e in t[0])))
    out = []
    for i, (monom, c) in enumerate(terms):
        negative = c < 0
        mag = -c if negative else c
        # inside a monomial the deformation parameter (u or v) is written last
        pairs = list(zip(field.names, monom))
        mono = "·".join(n if e == 1 else f"{n}^{e}" for n, e in pairs[1:] + pairs[:1] if e)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}·{mono}"
        if i == 0:
            out.append(("−" if negative else "") + body)
        else:
            out.append((" − " if negative else " + ") + body)
    return "".join(out)


# --------------------------- QuadExt ---------------------------

class QuadExt:
    """even + odd·s with s² equal to the field's radicand."""

    __slots__ = ("field", "even", "odd")

    def __init__(self, field: CoeffField, even: PolyFrac, odd: PolyFrac):
        self.field = field
        self.even = even
        self.odd = odd

    def is_zero(self) -> bool:
        return self.even.is_zero() and self.odd.is_zero()

    def __add__(self, other: "QuadExt") -> "QuadExt":
        return qx_add(self, other)

    def __sub__(self, other: "QuadExt") -> "QuadExt":
        return qx_sub(self, other)

    def __neg__(self) -> "QuadExt":
        return qx_neg(self)

    def __mul__(self, other: "QuadExt") -> "QuadExt":
        return qx_mul(self, other)

    def __truediv__(self, other: "QuadExt") -> "QuadExt":
        return qx_mul(self, qx_inv(other))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuadExt):
            return NotImplemented
        return qx_eq(self, other)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"QuadExt[{self.field.tag}]({qx_render(self)})"

    def __str__(self) -> str:
        return qx_render(self)


def _same_field(where: str, lhs: QuadExt, rhs: QuadExt) -> None:
    if lhs.field is not rhs.field:
        raise DomainError(where, f"field mismatch: {lhs.field.tag}-field vs {rhs.field.tag}-field")


def qx_add(lhs: QuadExt, rhs: QuadExt) -> QuadExt:
    _same_field("qx_add", lhs, rhs)
    return QuadExt(lhs.field, lhs.even + rhs.even, lhs.odd + rhs.odd)


def qx_neg(val: QuadExt) -> QuadExt:
    return QuadExt(val.field, -val.even, -val.odd)


def qx_sub(lhs: QuadExt, rhs: QuadExt) -> QuadExt:
    _same_field("qx_sub", lhs, rhs)
    return QuadExt(lhs.field, lhs.even - rhs.even, lhs.odd - rhs.odd)


def qx_mul(lhs: QuadExt, rhs: QuadExt) -> QuadExt:
    _same_field("qx_mul", lhs, rhs)
    F = lhs.field
    p, q, p2, q2 = lhs.even, lhs.odd, rhs.even, rhs.odd
    if q.is_zero() and q2.is_zero():
        return QuadExt(F, p * p2, F._zero)
    even = p * p2
    if not q.is_zero() and not q2.is_zero():
        even = even + q * q2 * F.radicand
    odd = p * q2 + q * p2
    return QuadExt(F, even, odd)


def qx_inv(val: QuadExt) -> QuadExt:
    if val.is_zero():
        raise ZeroDivisionError("qx_inv: inverse of zero")
    F = val.field
    p, q = val.even, val.odd
    if q.is_zero():
        return QuadExt(F, p.inv(), F._zero)
    norm = (p * p - q * q * F.radicand).inv()
    return QuadExt(F, p * norm, -(q * norm))


def qx_pow(val: QuadExt, k: int) -> QuadExt:
    if k < 0:
        return qx_pow(qx_inv(val), -k)
    result = val.field.one()
    base = val
    while k:
        if k & 1:
            result = qx_mul(result, base)
        k >>= 1
        if k:
            base = qx_mul(base, base)
    return result


def qx_eq(lhs: QuadExt, rhs: QuadExt) -> bool:
    _same_field("qx_eq", lhs, rhs)
    return lhs.even.equals(rhs.even) and lhs.odd.equals(rhs.odd)


def qx_subst(val: QuadExt, bindings: Mapping[str, PolyFrac]) -> QuadExt:
    for name, frac in bindings.items():
        if name not in SUBSTITUTABLE:
            raise DomainError("qx_subst", f"cannot bind {name!r}; only {', '.join(SUBSTITUTABLE)} may be substituted")
        if frac.field is not val.field:
            raise DomainError("qx_subst", f"binding for {name!r} lives in the {frac.field.tag}-field")
    if not bindings:
        return val
    return QuadExt(val.field, val.even.subst(bindings), val.odd.subst(bindings))


def qx_collect(val: QuadExt, name: str) -> Dict[int, QuadExt]:
    """Split val as a polynomial in one variable; the variable must not occur in denominators."""
    F = val.field
    idx = F.names.index(name)
    parts: Dict[int, Dict[str, Dict[Tuple[int, ...], object]]] = {}
    for label, frac in (("even", val.even), ("odd", val.odd)):
        if any(m[idx] for m in frac.den.keys()):
            raise DomainError("qx_collect", f"{name!r} occurs in a denominator")
        for monom, c in frac.num.items():
            e = monom[idx]
            rest = monom[:idx] + (0,) + monom[idx + 1:]
            parts.setdefault(e, {"even": {}, "odd": {}})[label][rest] = c
    out: Dict[int, QuadExt] = {}
    for e, halves in sorted(parts.items()):
        even = PolyFrac.make(F, F.ring.from_dict(halves["even"]), val.even.den) if halves["even"] else F._zero
        odd = PolyFrac.make(F, F.ring.from_dict(halves["odd"]), val.odd.den) if halves["odd"] else F._zero
        out[e] = QuadExt(F, even, odd)
    return out


def qx_render(val: QuadExt) -> str:
    rad = val.field.radical_name
    even = None if val.even.is_zero() else val.even.render()
    odd = None
    if not val.odd.is_zero():
        os_ = val.odd.render()
        if _is_atom(os_):
            odd = f"{os_} · {rad}"
        else:
            odd = f"({os_}) · {rad}"
    if even is None and odd is None:
        return "0"
    if odd is None:
        return even  # type: ignore[return-value]
    if even is None:
        return odd
    if odd.startswith("−"):
        return f"{even} − {odd[1:]}"
    return f"{even} + {odd}"


def _frac_from_expr(field: CoeffField, expr) -> PolyFrac:
    num, den = sp.fraction(sp.together(expr))
    R = field.ring
    return PolyFrac.make(field, R.from_expr(sp.expand(num)), R.from_expr(sp.expand(den)))


def qx_parse(text: str, field: CoeffField) -> QuadExt:
    """Inverse of qx_render; also accepts plain sympy syntax."""
    source = text.replace("·", "*").replace("−", "-").replace("^", "**")
    local = {n: sp.Symbol(n) for n in field.names}
    rad = sp.Symbol(field.radical_name)
    local[field.radical_name] = rad
    try:
        expr = parse_expr(source, local_dict=local)
    except Exception as e:
        raise DomainError("qx_parse", f"cannot parse {text!r}: {e}") from e
    allowed = set(local.values())
    if not expr.free_symbols <= allowed:
        raise DomainError("qx_parse", f"unknown symbols {sorted(map(str, expr.free_symbols - allowed))}")
    even = expr.subs(rad, 0)
    odd = sp.diff(expr, rad)
    if odd.has(rad):
        raise DomainError("qx_parse", f"{text!r} is not affine in {field.radical_name}")
    try:
        return QuadExt(field, _frac_from_expr(field, even), _frac_from_expr(field, odd))
    except ValueError as e:
        raise DomainError("qx_parse", str(e)) from e


# --------------------------- Field singletons ---------------------------

def _build_fields() -> Tuple[CoeffField, CoeffField]:
    t = CoeffField("T", ("u", "a", "b", "x", "y"), "s")
    u, a, b = t.gens["u"], t.gens["a"], t.gens["b"]
    t.radicand = t.frac(a + (1 - u) * b, a * u)

    v = CoeffField("V", ("v", "a", "b", "x", "y"), "r")
    vv, a, b = v.gens["v"], v.gens["a"], v.gens["b"]
    v.radicand = v.frac(a + (1 - vv**2) * b, a)
    return t, v


T_FIELD, V_FIELD = _build_fields()

FIELDS = {"T": T_FIELD, "V": V_FIELD}


def qx_sum(values: Iterable[QuadExt], field: CoeffField) -> QuadExt:
    acc = field.zero()
    for v in values:
        acc = qx_add(acc, v)
    return acc


def configure(cfg: Mapping[str, Any]) -> None:
    """Apply the arithmetic knobs of a resolved config to both fields."""
    for F in FIELDS.values():
        F.gcd_threshold = int(cfg.get("gcd_degree_threshold", DEFAULTS["gcd_degree_threshold"]))


# --------------------------- Field axiom check ---------------------------

def random_value(field: CoeffField, rng: random.Random) -> QuadExt:
    """Small even + odd·s over one linear denominator."""
    names = field.names
    even = field.const(rng.randint(-3, 3))
    odd = field.const(rng.randint(-2, 2))
    for _ in range(2):
        even = even + field.const(rng.randint(-2, 2)) * field.var(rng.choice(names))
        odd = odd + field.const(rng.randint(-2, 2)) * field.var(rng.choice(names))
    den = field.var(rng.choice(names[:2])) + field.const(rng.randint(1, 3))
    return (even + odd * field.radical()) / den


def check_field_axioms(field: CoeffField, trials: int, seed: Optional[int] = None) -> Report:
    """Ring laws and inverses on random triples; qx_eq stable under multiplication."""
    rep = Report(name=f"field-axioms[{field.tag}]", seed=seed, trials=trials)
    rng = random.Random(seed)
    one = field.one()
    for _ in range(trials):
        p, q, r = (random_value(field, rng) for _ in range(3))
        ce = f"p={p} q={q} r={r}"
        rep.record("associativity", (p * q) * r == p * (q * r), ce)
        rep.record("commutativity", p * q == q * p, ce)
        rep.record("distributivity", p * (q + r) == p * q + p * r, ce)
        if not p.is_zero():
            rep.record("inverse", p * qx_inv(p) == one, ce)
        # q·r/r carries the norm of r (and so the radicand) in its denominators
        if not r.is_zero():
            q2 = (q * r) / r
            rep.record("eq-rewritten", qx_eq(q, q2), ce)
            rep.record("eq-times", qx_eq(q * p, q2 * p), ce)
            rep.record("eq-times-radical-inverse", qx_eq(q / field.radical(), q2 / field.radical()), ce)
            rep.record("neq-times", not qx_eq((q + one) * r, q2 * r), ce)
    return rep
